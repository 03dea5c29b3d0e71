#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <variant>
#include <vector>

#include "exact_oracle.hpp"
#include "graph.hpp"
#include "phased_cc_estimator.hpp"
#include "small_cc_counter.hpp"

namespace msfw {

// Maintains an estimate M of the minimum-spanning-forest weight of a dynamic
// graph with weights in [1, W], with (1-eps) M_exact <= M <= (1+eps) M_exact,
// at per-update cost independent of the vertex count.
//
// One threshold subgraph G_j = {e : w(e) <= l_j} is maintained per level of
// a geometric weight scheme with base 1 + eps/2, together with a component
// count estimate c_j, and the estimate is assembled as
//   M = n - c_r * l_r + sum_{j<r} (l_{j+1} - l_j) * c_j.
//
// Deterministic mode runs a SmallCcCounter per level at rate eps/(12 W);
// the envelope then holds unconditionally. Randomized mode runs a
// PhasedCcEstimator per level at rate eps/(24 W) with failure probability
// p'/r, and feeds T_i = nis of the master graph. A level untouched by an
// update still owes its estimator one tick, which is delivered as a
// transient self-loop on the updated endpoint (insert, tick, delete, tick):
// this keeps every level's update count aligned with the master stream
// while moving T by at most 2 per tick.
class MsfEstimator {
 public:
  struct Deterministic {};
  struct Randomized {
    double p_prime;
    std::uint64_t seed;
  };
  using Mode = std::variant<Deterministic, Randomized>;

  MsfEstimator(const DynamicGraph& g0, double eps, Mode mode = Deterministic{})
      : scheme_(makeScheme(g0, eps)),
        eps_(eps),
        master_(buildMaster(g0)) {
    double w = g0.weightCap();
    if (std::holds_alternative<Randomized>(mode)) {
      const auto& r = std::get<Randomized>(mode);
      randomized_ = true;
      p_prime_ = r.p_prime;
      seed_ = r.seed;
      level_eps_ = eps / (24.0 * w);
    } else {
      level_eps_ = eps / (12.0 * w);
    }
    std::vector<WeightedEdge> edges0 = master_.edges();
    for (const WeightedEdge& e : edges0)
      min_level_.emplace(packKey(e.u, e.v), scheme_.minLevelFor(e.weight));
    double level_p =
        scheme_.r > 0 ? p_prime_ / static_cast<double>(scheme_.r) : p_prime_;
    std::int64_t t0 = master_.nonIsolatedCount();
    levels_.reserve(static_cast<std::size_t>(scheme_.r) + 1);
    for (int j = 0; j <= scheme_.r; ++j) {
      auto level = std::make_unique<Level>(
          g0.vertexCount(),
          DynamicGraph::Options{g0.weightCap(), randomized_});
      double cutoff = scheme_.thresholds[static_cast<std::size_t>(j)];
      for (const WeightedEdge& e : edges0) {
        if (e.weight <= cutoff) level->graph.insertEdge(e.u, e.v, e.weight);
      }
      if (randomized_) {
        level->phase = std::make_unique<PhasedCcEstimator>(
            level->graph, level_eps_, level_p, t0,
            deriveSeed(seed_, static_cast<std::uint64_t>(j)));
      } else {
        level->counter =
            std::make_unique<SmallCcCounter>(level->graph, level_eps_);
        level->graph.addListener(level->counter.get());
      }
      levels_.push_back(std::move(level));
    }
    recomputeEstimate();
  }

  MsfEstimator(const MsfEstimator&) = delete;
  MsfEstimator& operator=(const MsfEstimator&) = delete;

  void insertEdge(VertexId u, VertexId v, double w) {
    apply({EdgeUpdate::kInsert, u, v, w, 0});
  }

  void deleteEdge(VertexId u, VertexId v) {
    apply({EdgeUpdate::kDelete, u, v, 0.0, 0});
  }

  void apply(EdgeUpdate op) {
    op.timestamp = updates_ + 1;
    int min_level;
    if (op.kind == EdgeUpdate::kInsert) {
      master_.apply(op);
      min_level = scheme_.minLevelFor(op.weight);
      min_level_.emplace(packKey(op.u, op.v), min_level);
    } else {
      op.weight = master_.edgeWeight(op.u, op.v);
      auto it = min_level_.find(packKey(op.u, op.v));
      if (it == min_level_.end())
        throw std::logic_error("level cache out of sync");
      min_level = it->second;
      master_.apply(op);
      min_level_.erase(it);
    }
    ++updates_;
    std::int64_t t_after = master_.nonIsolatedCount();
    std::int64_t t_loop = t_after + (master_.degree(op.u) == 0 ? 1 : 0);
    for (int j = 0; j <= scheme_.r; ++j) {
      Level& level = *levels_[static_cast<std::size_t>(j)];
      if (j >= min_level) {
        level.graph.apply(op);
        if (randomized_) level.phase->update(level.graph, t_after);
      } else if (randomized_) {
        level.graph.insertEdge(op.u, op.u, 1.0, op.timestamp);
        level.phase->update(level.graph, t_loop);
        level.graph.deleteEdge(op.u, op.u, op.timestamp);
        level.phase->update(level.graph, t_after);
      }
    }
    recomputeEstimate();
  }

  double estimate() const { return estimate_; }

  const DynamicGraph& graph() const { return master_; }
  const LevelScheme& scheme() const { return scheme_; }
  std::int64_t updateCount() const { return updates_; }
  int levelCount() const { return scheme_.r + 1; }

  const DynamicGraph& levelGraph(int j) const {
    return levels_[static_cast<std::size_t>(j)]->graph;
  }

  double levelEstimate(int j) const {
    const Level& level = *levels_[static_cast<std::size_t>(j)];
    return randomized_
               ? level.phase->estimate()
               : static_cast<double>(level.counter->estimate());
  }

  // Bounded-exploration work all level counters spent on the last update.
  // Deterministic mode only; the randomized levels do no per-update search.
  std::uint64_t lastUpdateWork() const {
    std::uint64_t total = 0;
    if (!randomized_)
      for (const auto& level : levels_) total += level->counter->lastUpdateWork();
    return total;
  }

  // Failure probability from the analysis backing the randomized mode.
  static double defaultFailureProbability(VertexId n) {
    double p = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
    if (p > 0.5) p = 0.5;
    if (p < 1e-12) p = 1e-12;
    return p;
  }

 private:
  struct Level {
    DynamicGraph graph;
    std::unique_ptr<SmallCcCounter> counter;
    std::unique_ptr<PhasedCcEstimator> phase;
    Level(VertexId n, DynamicGraph::Options options) : graph(n, options) {}
  };

  static LevelScheme makeScheme(const DynamicGraph& g0, double eps) {
    if (!(eps > 0.0) || eps > 1.0)
      throw std::invalid_argument("eps outside (0, 1]");
    double w = g0.weightCap();
    if (!(w >= 1.0) || w == std::numeric_limits<double>::infinity())
      throw std::invalid_argument("graph needs a finite weight cap");
    return LevelScheme(eps / 2.0, w);
  }

  static DynamicGraph buildMaster(const DynamicGraph& g0) {
    std::vector<WeightedEdge> edges = g0.edges();
    return DynamicGraph(g0.vertexCount(), edges,
                        DynamicGraph::Options{g0.weightCap(), false});
  }

  static std::uint64_t packKey(VertexId u, VertexId v) {
    auto a = static_cast<std::uint64_t>(std::min(u, v));
    auto b = static_cast<std::uint64_t>(std::max(u, v));
    return (a << 32) | b;
  }

  void recomputeEstimate() {
    double x = static_cast<double>(master_.vertexCount()) -
               levelEstimate(scheme_.r) *
                   scheme_.thresholds[static_cast<std::size_t>(scheme_.r)];
    for (int j = 0; j < scheme_.r; ++j)
      x += scheme_.gaps[static_cast<std::size_t>(j)] * levelEstimate(j);
    estimate_ = x;
  }

  LevelScheme scheme_;
  double eps_;
  bool randomized_ = false;
  double p_prime_ = 0.0;
  std::uint64_t seed_ = 0;
  double level_eps_;
  DynamicGraph master_;
  std::unordered_map<std::uint64_t, int> min_level_;
  std::vector<std::unique_ptr<Level>> levels_;
  std::int64_t updates_ = 0;
  double estimate_ = 0.0;
};

}  // namespace msfw
