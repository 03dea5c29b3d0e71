#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "union_find.hpp"

namespace msfw {

// Geometric weight thresholds l_j = (1+eps)^j for j = 0..r, where r is the
// smallest exponent with l_r >= w_max. Thresholds are built by repeated
// multiplication (never pow/log) so that the gap sum telescopes to l_r - 1
// and level membership tests agree bit-for-bit with the gaps used in X.
struct LevelScheme {
  double eps;
  double w_max;
  int r;
  std::vector<double> thresholds;  // l_0 .. l_r
  std::vector<double> gaps;        // lambda_j = l_{j+1} - l_j, j < r

  LevelScheme(double eps_, double w_max_) : eps(eps_), w_max(w_max_) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    if (!(w_max >= 1.0)) throw std::invalid_argument("w_max below 1");
    double l = 1.0;
    thresholds.push_back(l);
    while (l < w_max) {
      l *= 1.0 + eps;
      thresholds.push_back(l);
    }
    r = static_cast<int>(thresholds.size()) - 1;
    gaps.reserve(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j)
      gaps.push_back(thresholds[static_cast<std::size_t>(j) + 1] -
                     thresholds[static_cast<std::size_t>(j)]);
  }

  // Smallest level whose threshold admits weight w.
  int minLevelFor(double w) const {
    int j = 0;
    while (w > thresholds[static_cast<std::size_t>(j)]) {
      ++j;
      if (j > r) throw WeightOutOfRange("weight above top threshold");
    }
    return j;
  }
};

// Exact minimum spanning forest weight (Kruskal).
inline double kruskalMsfWeight(const DynamicGraph& g) {
  std::vector<WeightedEdge> edges = g.edges();
  std::sort(edges.begin(), edges.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) {
              return a.weight < b.weight;
            });
  UnionFind uf(g.vertexCount());
  double total = 0.0;
  for (const WeightedEdge& e : edges) {
    if (uf.unite(e.u, e.v)) total += e.weight;
  }
  return total;
}

// Exact number of connected components, isolated vertices included.
inline std::int64_t exactNcc(const DynamicGraph& g) {
  VertexId n = g.vertexCount();
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> queue;
  std::int64_t components = 0;
  for (VertexId s = 0; s < n; ++s) {
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

struct SmallComponentCount {
  std::int64_t count = 0;           // components of size <= cap
  std::vector<std::int64_t> bySize; // bySize[s] for 1 <= s <= cap
};

// Exact census of components with at most cap vertices, by full traversal.
inline SmallComponentCount exactSmallCc(const DynamicGraph& g, std::int64_t cap) {
  SmallComponentCount result;
  result.bySize.assign(static_cast<std::size_t>(cap) + 1, 0);
  VertexId n = g.vertexCount();
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    if (visited[static_cast<std::size_t>(s)]) continue;
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
    auto size = static_cast<std::int64_t>(queue.size());
    if (size <= cap) {
      ++result.count;
      ++result.bySize[static_cast<std::size_t>(size)];
    }
  }
  return result;
}

// Component count of every threshold subgraph G_j = (V, {e : w(e) <= l_j}),
// computed in one ascending Kruskal-style sweep.
inline std::vector<std::int64_t> levelComponentCounts(const DynamicGraph& g,
                                                      const LevelScheme& scheme) {
  std::vector<WeightedEdge> edges = g.edges();
  std::sort(edges.begin(), edges.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) {
              return a.weight < b.weight;
            });
  UnionFind uf(g.vertexCount());
  std::vector<std::int64_t> counts;
  counts.reserve(static_cast<std::size_t>(scheme.r) + 1);
  std::size_t idx = 0;
  std::int64_t components = g.vertexCount();
  for (int j = 0; j <= scheme.r; ++j) {
    double cutoff = scheme.thresholds[static_cast<std::size_t>(j)];
    while (idx < edges.size() && edges[idx].weight <= cutoff) {
      if (uf.unite(edges[idx].u, edges[idx].v)) --components;
      ++idx;
    }
    counts.push_back(components);
  }
  if (idx != edges.size())
    throw WeightOutOfRange("edge weight above w_max in level sweep");
  return counts;
}

// The weighted component-count functional
//   X = n - c_r * l_r + sum_j (l_{j+1} - l_j) * c_j
// over the scheme's threshold subgraphs. Sandwiches the exact MSF weight:
// M <= X <= (1+eps) M.
inline double formulaX(const DynamicGraph& g, const LevelScheme& scheme) {
  std::vector<std::int64_t> counts = levelComponentCounts(g, scheme);
  double x = static_cast<double>(g.vertexCount()) -
             static_cast<double>(counts[static_cast<std::size_t>(scheme.r)]) *
                 scheme.thresholds[static_cast<std::size_t>(scheme.r)];
  for (int j = 0; j < scheme.r; ++j)
    x += scheme.gaps[static_cast<std::size_t>(j)] *
         static_cast<double>(counts[static_cast<std::size_t>(j)]);
  return x;
}

}  // namespace msfw
