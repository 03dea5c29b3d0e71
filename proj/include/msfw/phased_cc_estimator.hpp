#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>

#include "cc_sampling.hpp"
#include "graph.hpp"

namespace msfw {

// Approximate component count of a fully dynamic graph, recomputed from
// scratch once per phase and carried unchanged in between. A phase lasts
// L = max(1, ceil(eps * Psi / 4)) updates, where Psi is the T parameter
// recorded at the previous recompute.
//
// The caller supplies, with every update, a value T_i with
//   (a) T_i >= nis(G_i) and (b) |T_i - T_{i-1}| <= 2,
// and the estimate then satisfies |c - ncc(G_i)| <= eps * T_i with
// probability at least 1 - p, per phase, against adaptive adversaries
// (each recompute draws fresh randomness from the live generator).
//
// Between recomputes the count drifts by at most one per update, which the
// phase length was sized for; the recompute itself runs at additive error
// eps/4 * nis. With T_i == nis(G_i) both preconditions hold automatically
// for single-edge updates.
class PhasedCcEstimator {
 public:
  struct Options {
    // Constant T parameter supplied on behalf of the caller (for example
    // T == n, trading accuracy eps*n for never having to track nis).
    std::optional<std::int64_t> fixed_t;
    // Spread each recompute across later updates in sample-sized steps via
    // advanceSlice() instead of running it inside update(). While a sliced
    // recompute is in flight the previous estimate stays visible and the
    // error envelope widens to 2 * eps * T_i.
    bool sliced = false;
    bool exact_when_cheaper = true;
  };

  PhasedCcEstimator(const DynamicGraph& g, double eps, double p,
                    std::int64_t t0, std::uint64_t seed)
      : PhasedCcEstimator(g, eps, p, t0, seed, Options{}) {}

  PhasedCcEstimator(const DynamicGraph& g, double eps, double p,
                    std::int64_t t0, std::uint64_t seed, Options options)
      : options_(options), n_(g.vertexCount()) {
    if (!(eps > 0.0) || eps >= 1.0)
      throw std::invalid_argument("eps outside (0, 1)");
    eps_ = eps;
    cfg_ = CcSampleConfig::forError(eps / 4.0, p);
    cfg_.exact_when_cheaper = options.exact_when_cheaper && !options.sliced;
    std::int64_t gamma = g.nonIsolatedCount();
    if (t0 < gamma)
      throw TParamTooSmall("t0 = " + std::to_string(t0) + " below nis = " +
                           std::to_string(gamma));
    count_ = static_cast<double>(n_ - gamma + exactNccNonIsolated(g));
    psi_ = t0;
    t_prev_ = t0;
    phase_len_ = lengthFor(psi_);
    rng_.seed(seed);
  }

  // Convenience mode with T held constant at n: additive error eps * n, no
  // per-update T bookkeeping.
  static PhasedCcEstimator constantT(const DynamicGraph& g, double eps,
                                     double p, std::uint64_t seed) {
    Options options;
    options.fixed_t = g.vertexCount();
    return PhasedCcEstimator(g, eps, p, g.vertexCount(), seed, options);
  }

  // constantT with the error rate lowered to eps * n^(-1/3) * ln^(2/3) n,
  // for an additive error of eps * n^(2/3) * ln^(2/3) n.
  static PhasedCcEstimator sublinearAdditiveError(const DynamicGraph& g,
                                                  double eps, double p,
                                                  std::uint64_t seed) {
    return constantT(g, sublinearErrorRate(eps, g.vertexCount()), p, seed);
  }

  static double sublinearErrorRate(double eps, std::int64_t n) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    double rate = eps * std::pow(static_cast<double>(n), -1.0 / 3.0) *
                  std::pow(std::log(static_cast<double>(n)), 2.0 / 3.0);
    if (!(rate > 0.0) || rate >= 1.0)
      throw std::invalid_argument("derived rate outside (0, 1)");
    return rate;
  }

  // Call once per applied edge update, with the post-update graph.
  void update(const DynamicGraph& g, std::int64_t t) {
    std::int64_t gamma = g.nonIsolatedCount();
    if (t < gamma)
      throw TParamViolation("T = " + std::to_string(t) + " below nis = " +
                            std::to_string(gamma));
    if (std::abs(t - t_prev_) > 2)
      throw TParamViolation("T jumped from " + std::to_string(t_prev_) +
                            " to " + std::to_string(t));
    t_prev_ = t;
    ++updates_;
    if (++in_phase_ >= phase_len_) {
      in_phase_ = 0;
      if (options_.sliced) {
        beginSlice(g);
      } else {
        count_ = recompute(g);
      }
      psi_ = t;
      phase_len_ = lengthFor(psi_);
    }
  }

  void update(const DynamicGraph& g) {
    if (!options_.fixed_t)
      throw std::logic_error("no fixed T parameter configured");
    update(g, *options_.fixed_t);
  }

  // Runs up to `budget` sample explorations of an in-flight sliced
  // recompute against the current graph. The estimate is replaced in one
  // step when the last sample lands; readers never see a partial value.
  void advanceSlice(const DynamicGraph& g, std::int64_t budget) {
    while (slice_ && budget-- > 0) {
      if (g.nonIsolatedCount() == 0) {
        count_ = static_cast<double>(n_);
        slice_.reset();
        return;
      }
      VertexId u = g.sampleNonIsolated(rng_);
      slice_->beta_sum +=
          cappedInverseComponent(g, u, cfg_.cap, bfs_, scratch_);
      if (++slice_->done == slice_->total) {
        double b = static_cast<double>(slice_->gamma0) * slice_->beta_sum /
                   static_cast<double>(slice_->total);
        count_ = b + static_cast<double>(n_ - slice_->gamma0);
        slice_.reset();
      }
    }
  }

  double estimate() const { return count_; }
  double epsilon() const { return eps_; }
  double failureProbability() const { return cfg_.p; }
  std::int64_t phaseLength() const { return phase_len_; }
  std::int64_t updateCount() const { return updates_; }
  std::int64_t lastT() const { return t_prev_; }
  bool sliceInFlight() const { return slice_.has_value(); }
  const CcSampleConfig& sampleConfig() const { return cfg_; }

  void reseed(std::uint64_t seed) { rng_.seed(seed); }

 private:
  struct Slice {
    std::int64_t gamma0;
    std::int64_t total;
    std::int64_t done;
    double beta_sum;
  };

  std::int64_t lengthFor(std::int64_t psi) const {
    std::int64_t len = ceilIndex(eps_ * static_cast<double>(psi) / 4.0);
    return len < 1 ? 1 : len;
  }

  double recompute(const DynamicGraph& g) {
    std::int64_t gamma = g.nonIsolatedCount();
    if (gamma == 0) return static_cast<double>(n_);
    return estimateNccNonIsolated(g, cfg_, rng_) +
           static_cast<double>(n_ - gamma);
  }

  void beginSlice(const DynamicGraph& g) {
    std::int64_t gamma = g.nonIsolatedCount();
    if (gamma == 0) {
      count_ = static_cast<double>(n_);
      slice_.reset();
      return;
    }
    slice_ = Slice{gamma, cfg_.samples, 0, 0.0};
  }

  Options options_;
  VertexId n_;
  double eps_ = 0.0;
  CcSampleConfig cfg_;
  double count_ = 0.0;
  std::int64_t psi_ = 0;
  std::int64_t t_prev_ = 0;
  std::int64_t phase_len_ = 1;
  std::int64_t in_phase_ = 0;
  std::int64_t updates_ = 0;
  std::optional<Slice> slice_;
  Rng rng_;
  BoundedBfs bfs_;
  std::vector<VertexId> scratch_;
};

}  // namespace msfw
