#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "nonzero_sampler.hpp"

namespace msfw {

// Parameters of one sampling-based component-count estimate with additive
// error eps * nis at failure probability p.
struct CcSampleConfig {
  double eps;
  double p;
  std::int64_t samples;  // s = ceil(2 * eps^-2 * ln(2/p))
  std::int64_t cap;      // exploration cutoff B = ceil(2 / eps)
  // Below `samples` non-isolated vertices, sampling costs more than scanning
  // the graph once, so the estimate is computed exactly (error 0). Turned
  // off by tests that exercise the sampling path itself.
  bool exact_when_cheaper = true;

  static CcSampleConfig forError(double eps, double p) {
    if (!(eps > 0.0) || eps >= 1.0)
      throw std::invalid_argument("eps outside (0, 1)");
    if (!(p > 0.0) || p >= 1.0)
      throw std::invalid_argument("p outside (0, 1)");
    CcSampleConfig cfg;
    cfg.eps = eps;
    cfg.p = p;
    cfg.samples = ceilIndex(2.0 / (eps * eps) * std::log(2.0 / p));
    cfg.cap = ceilIndex(2.0 / eps);
    return cfg;
  }
};

// 1/|C(u)| when u's component has at most cap vertices, else 0. The mean of
// this kernel over non-isolated vertices, scaled by their number, equals the
// component count of the non-isolated subgraph up to the capped tail.
inline double cappedInverseComponent(const DynamicGraph& g, VertexId u,
                                     std::int64_t cap, BoundedBfs& bfs,
                                     std::vector<VertexId>& scratch) {
  if (!bfs.run(g, u, cap, scratch)) return 0.0;
  return 1.0 / static_cast<double>(scratch.size());
}

// Exact component count of the subgraph induced by non-isolated vertices.
inline std::int64_t exactNccNonIsolated(const DynamicGraph& g) {
  VertexId n = g.vertexCount();
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> queue;
  const NonZeroSampler& support = g.degreeSampler();
  std::int64_t components = 0;
  for (std::int64_t i = 0; i < support.nonzeroCount(); ++i) {
    auto s = static_cast<VertexId>(support.elementAt(i));
    if (visited[static_cast<std::size_t>(s)]) continue;
    ++components;
    visited[static_cast<std::size_t>(s)] = 1;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Neighbor& nb : g.neighbors(queue[head])) {
        if (!visited[static_cast<std::size_t>(nb.id)]) {
          visited[static_cast<std::size_t>(nb.id)] = 1;
          queue.push_back(nb.id);
        }
      }
    }
  }
  return components;
}

// Estimates the component count of the non-isolated subgraph by sampling
// cfg.samples vertices (with replacement, uniform over non-isolated ones)
// and averaging the capped inverse component size. The truncation bias is
// at most nis/cap <= eps*nis/2 and the sampling deviation exceeds eps*nis/2
// with probability at most p, so
//   |b - ncc(g_nis)| <= eps * nis(g)   with probability >= 1 - p.
//
// The sampler must describe g's non-isolated support (the graph's own
// degree sampler does). Throws EmptySupport when the graph has no edges.
inline double estimateNccNonIsolated(const DynamicGraph& g,
                                     const NonZeroSampler& sampler,
                                     const CcSampleConfig& cfg, Rng& rng) {
  std::int64_t gamma = sampler.nonzeroCount();
  if (gamma == 0) throw EmptySupport("no non-isolated vertices to sample");
  if (cfg.exact_when_cheaper && cfg.samples >= gamma)
    return static_cast<double>(exactNccNonIsolated(g));
  BoundedBfs bfs;
  std::vector<VertexId> scratch;
  double sum = 0.0;
  for (std::int64_t j = 0; j < cfg.samples; ++j) {
    auto u = static_cast<VertexId>(sampler.sample(rng));
    sum += cappedInverseComponent(g, u, cfg.cap, bfs, scratch);
  }
  return static_cast<double>(gamma) * sum / static_cast<double>(cfg.samples);
}

inline double estimateNccNonIsolated(const DynamicGraph& g,
                                     const CcSampleConfig& cfg, Rng& rng) {
  return estimateNccNonIsolated(g, g.degreeSampler(), cfg, rng);
}

}  // namespace msfw
