#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "nonzero_sampler.hpp"
#include "random.hpp"

namespace msfw {

using VertexId = std::int32_t;

struct WeightedEdge {
  VertexId u;
  VertexId v;
  double weight;
};

struct EdgeUpdate {
  enum Kind { kInsert, kDelete };
  Kind kind;
  VertexId u;
  VertexId v;
  double weight;          // filled with the stored weight for deletions
  std::int64_t timestamp; // position in the update stream, 1-based
};

struct Neighbor {
  VertexId id;
  double weight;
};

class DynamicGraph;

// Observers registered on a DynamicGraph see every edge update twice: once
// against the pre-update graph and once against the post-update graph.
class GraphListener {
 public:
  virtual ~GraphListener() = default;
  virtual void beforeUpdate(const DynamicGraph&, const EdgeUpdate&) {}
  virtual void afterUpdate(const DynamicGraph&, const EdgeUpdate&) {}
};

// Undirected graph on a fixed vertex set 0..n-1 with weighted edges, built
// for high-churn update streams. Single writer, no internal locking.
//
// Adjacency is a dense per-vertex vector of (neighbor, weight) entries; a
// global hash map keyed by the packed edge keeps each edge's two positions,
// so insert/delete/lookup are expected O(1) and neighbor iteration costs
// O(degree) regardless of past churn. Degrees live in a NonZeroSampler,
// which doubles as an O(1) uniform sampler over non-isolated vertices.
//
// Self-loops are rejected unless enabled at construction; a loop occupies a
// single adjacency entry and contributes 1 to its endpoint's degree.
class DynamicGraph {
 public:
  struct Options {
    double weight_cap = std::numeric_limits<double>::infinity();
    bool allow_self_loops = false;
  };

  explicit DynamicGraph(VertexId n) : DynamicGraph(n, Options{}) {}

  DynamicGraph(VertexId n, Options options)
      : options_(options), adj_(static_cast<std::size_t>(n)), degrees_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (!(options.weight_cap >= 1.0))
      throw std::invalid_argument("weight cap below 1");
  }

  DynamicGraph(VertexId n, std::span<const WeightedEdge> edges)
      : DynamicGraph(n, edges, Options{}) {}

  DynamicGraph(VertexId n, std::span<const WeightedEdge> edges, Options options)
      : DynamicGraph(n, options) {
    for (const WeightedEdge& e : edges) {
      if (hasEdge(e.u, e.v))
        throw DuplicateEdge(edgeLabel(e.u, e.v) + " listed twice");
      insertEdge(e.u, e.v, e.weight, 0);
    }
    m_seen_min_ = m_;
  }

  DynamicGraph(const DynamicGraph&) = delete;
  DynamicGraph& operator=(const DynamicGraph&) = delete;
  DynamicGraph(DynamicGraph&&) = default;
  DynamicGraph& operator=(DynamicGraph&&) = default;

  VertexId vertexCount() const { return static_cast<VertexId>(adj_.size()); }
  std::int64_t edgeCount() const { return m_; }

  // Minimum of edgeCount() over every state this graph has been in.
  std::int64_t minSeenEdgeCount() const { return m_seen_min_; }

  // Number of non-isolated vertices (degree > 0).
  std::int64_t nonIsolatedCount() const { return degrees_.nonzeroCount(); }

  std::int64_t degree(VertexId u) const { return degrees_.value(u); }

  double weightCap() const { return options_.weight_cap; }
  bool allowsSelfLoops() const { return options_.allow_self_loops; }

  bool hasEdge(VertexId u, VertexId v) const {
    checkVertex(u);
    checkVertex(v);
    return slots_.find(packKey(u, v)) != slots_.end();
  }

  double edgeWeight(VertexId u, VertexId v) const {
    auto it = slots_.find(packKey(u, v));
    if (it == slots_.end())
      throw EdgeNotFound(edgeLabel(u, v) + " not in graph");
    VertexId a = std::min(u, v);
    return adj_[static_cast<std::size_t>(a)][static_cast<std::size_t>(it->second.pa)].weight;
  }

  std::span<const Neighbor> neighbors(VertexId u) const {
    checkVertex(u);
    return adj_[static_cast<std::size_t>(u)];
  }

  void insertEdge(VertexId u, VertexId v, double w, std::int64_t timestamp = 0) {
    apply({EdgeUpdate::kInsert, u, v, w, timestamp});
  }

  void deleteEdge(VertexId u, VertexId v, std::int64_t timestamp = 0) {
    apply({EdgeUpdate::kDelete, u, v, 0.0, timestamp});
  }

  void apply(EdgeUpdate op) {
    checkVertex(op.u);
    checkVertex(op.v);
    if (op.kind == EdgeUpdate::kInsert) {
      if (op.u == op.v && !options_.allow_self_loops)
        throw SelfLoopForbidden("self-loop " + edgeLabel(op.u, op.v));
      if (!(op.weight >= 1.0) || op.weight > options_.weight_cap)
        throw WeightOutOfRange("weight " + std::to_string(op.weight) +
                               " outside [1, cap] for " + edgeLabel(op.u, op.v));
      if (slots_.find(packKey(op.u, op.v)) != slots_.end())
        throw EdgeAlreadyPresent(edgeLabel(op.u, op.v) + " already present");
    } else {
      auto it = slots_.find(packKey(op.u, op.v));
      if (it == slots_.end())
        throw EdgeNotFound(edgeLabel(op.u, op.v) + " not in graph");
      VertexId a = std::min(op.u, op.v);
      op.weight = adj_[static_cast<std::size_t>(a)][static_cast<std::size_t>(it->second.pa)].weight;
    }
    for (GraphListener* l : listeners_) l->beforeUpdate(*this, op);
    if (op.kind == EdgeUpdate::kInsert) {
      insertInternal(op.u, op.v, op.weight);
    } else {
      deleteInternal(op.u, op.v);
    }
    m_seen_min_ = std::min(m_seen_min_, m_);
    for (GraphListener* l : listeners_) l->afterUpdate(*this, op);
  }

  // Uniform over vertices with degree > 0. Throws EmptySupport if none.
  VertexId sampleNonIsolated(Rng& rng) const {
    return static_cast<VertexId>(degrees_.sample(rng));
  }

  const NonZeroSampler& degreeSampler() const { return degrees_; }

  void addListener(GraphListener* l) { listeners_.push_back(l); }

  void removeListener(GraphListener* l) {
    listeners_.erase(std::remove(listeners_.begin(), listeners_.end(), l),
                     listeners_.end());
  }

  // Snapshot of the edge set; each edge appears once with u <= v.
  std::vector<WeightedEdge> edges() const {
    std::vector<WeightedEdge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (VertexId u = 0; u < vertexCount(); ++u) {
      for (const Neighbor& nb : adj_[static_cast<std::size_t>(u)]) {
        if (nb.id >= u) out.push_back({u, nb.id, nb.weight});
      }
    }
    return out;
  }

 private:
  struct EdgeSlot {
    std::int32_t pa;  // index in adj of min(u,v)
    std::int32_t pb;  // index in adj of max(u,v); -1 for a self-loop
  };

  static std::uint64_t packKey(VertexId u, VertexId v) {
    auto a = static_cast<std::uint64_t>(std::min(u, v));
    auto b = static_cast<std::uint64_t>(std::max(u, v));
    return (a << 32) | b;
  }

  static std::string edgeLabel(VertexId u, VertexId v) {
    return "edge (" + std::to_string(u) + "," + std::to_string(v) + ")";
  }

  void checkVertex(VertexId u) const {
    if (u < 0 || u >= vertexCount())
      throw std::out_of_range("vertex " + std::to_string(u) + " out of range");
  }

  void insertInternal(VertexId u, VertexId v, double w) {
    VertexId a = std::min(u, v);
    VertexId b = std::max(u, v);
    EdgeSlot slot;
    slot.pa = static_cast<std::int32_t>(adj_[static_cast<std::size_t>(a)].size());
    adj_[static_cast<std::size_t>(a)].push_back({b, w});
    if (a != b) {
      slot.pb = static_cast<std::int32_t>(adj_[static_cast<std::size_t>(b)].size());
      adj_[static_cast<std::size_t>(b)].push_back({a, w});
      degrees_.update(a, +1);
      degrees_.update(b, +1);
    } else {
      slot.pb = -1;
      degrees_.update(a, +1);
    }
    slots_.emplace(packKey(a, b), slot);
    ++m_;
  }

  void deleteInternal(VertexId u, VertexId v) {
    VertexId a = std::min(u, v);
    VertexId b = std::max(u, v);
    auto it = slots_.find(packKey(a, b));
    EdgeSlot slot = it->second;
    slots_.erase(it);
    removeAdjEntry(a, slot.pa);
    if (a != b) {
      removeAdjEntry(b, slot.pb);
      degrees_.update(a, -1);
      degrees_.update(b, -1);
    } else {
      degrees_.update(a, -1);
    }
    --m_;
  }

  // Swap-removes adj_[x][i] and patches the slot of the entry moved into i.
  void removeAdjEntry(VertexId x, std::int32_t i) {
    auto& list = adj_[static_cast<std::size_t>(x)];
    std::int32_t lastIdx = static_cast<std::int32_t>(list.size()) - 1;
    if (i != lastIdx) {
      Neighbor moved = list[static_cast<std::size_t>(lastIdx)];
      list[static_cast<std::size_t>(i)] = moved;
      auto slotIt = slots_.find(packKey(x, moved.id));
      assert(slotIt != slots_.end());
      if (x <= moved.id) {
        slotIt->second.pa = i;
      } else {
        slotIt->second.pb = i;
      }
    }
    list.pop_back();
  }

  Options options_;
  std::vector<std::vector<Neighbor>> adj_;
  std::unordered_map<std::uint64_t, EdgeSlot> slots_;
  NonZeroSampler degrees_;
  std::int64_t m_ = 0;
  std::int64_t m_seen_min_ = 0;
  std::vector<GraphListener*> listeners_;
};

// Reusable scratch for repeated bounded component explorations. Not shared
// across graphs of different vertex counts without a fresh instance.
class BoundedBfs {
 public:
  // Explores the component containing start, giving up as soon as it is
  // known to hold more than cap vertices. Returns true iff the component
  // has at most cap vertices; `out` then holds exactly its vertex set in
  // discovery order. On false, `out` holds the partial discovery.
  //
  // Work per call is O(cap^2): at most cap+1 vertices are popped and a
  // popped vertex of degree > cap aborts before its adjacency is scanned.
  bool run(const DynamicGraph& g, VertexId start, std::int64_t cap,
           std::vector<VertexId>& out) {
    ensure(g.vertexCount());
    bumpEpoch();
    out.clear();
    stamp_[static_cast<std::size_t>(start)] = epoch_;
    out.push_back(start);
    ++work_;
    if (static_cast<std::int64_t>(out.size()) > cap) return false;
    for (std::size_t head = 0; head < out.size(); ++head) {
      VertexId x = out[head];
      ++work_;
      if (g.degree(x) > cap) return false;
      for (const Neighbor& nb : g.neighbors(x)) {
        ++work_;
        auto id = static_cast<std::size_t>(nb.id);
        if (stamp_[id] == epoch_) continue;
        stamp_[id] = epoch_;
        out.push_back(nb.id);
        if (static_cast<std::int64_t>(out.size()) > cap) return false;
      }
    }
    return true;
  }

  // Membership in the set explored by the most recent run().
  bool visitedInLastRun(VertexId v) const {
    return stamp_[static_cast<std::size_t>(v)] == epoch_;
  }

  std::uint64_t workCount() const { return work_; }
  void resetWorkCount() { work_ = 0; }

 private:
  void ensure(VertexId n) {
    if (stamp_.size() < static_cast<std::size_t>(n)) {
      stamp_.resize(static_cast<std::size_t>(n), 0);
    }
  }

  void bumpEpoch() {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }

  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::uint64_t work_ = 0;
};

// One-shot convenience wrapper around BoundedBfs.
inline std::optional<std::vector<VertexId>> boundedComponent(
    const DynamicGraph& g, VertexId start, std::int64_t cap) {
  BoundedBfs bfs;
  std::vector<VertexId> out;
  if (bfs.run(g, start, cap, out)) return out;
  return std::nullopt;
}

}  // namespace msfw
