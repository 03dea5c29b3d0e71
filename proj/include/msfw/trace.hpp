#pragma once

#include <cstdint>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "random.hpp"

namespace msfw {

// Line-oriented update stream format:
//   H <n> <w_max>    header, exactly once, before any update
//   I <u> <v> <w>    insert edge
//   D <u> <v>        delete edge
//   C                checkpoint request
//   # ...            comment; blank lines are skipped
struct TraceHeader {
  VertexId n = 0;
  double w_max = 1.0;
};

struct TraceRecord {
  enum Kind { kInsert, kDelete, kCheckpoint };
  Kind kind = kCheckpoint;
  VertexId u = 0;
  VertexId v = 0;
  double weight = 0.0;
};

struct Trace {
  TraceHeader header;
  std::vector<TraceRecord> records;

  std::int64_t updateCount() const {
    std::int64_t k = 0;
    for (const TraceRecord& r : records)
      if (r.kind != TraceRecord::kCheckpoint) ++k;
    return k;
  }
};

namespace detail {

inline std::string formatDouble(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline VertexId parseVertex(std::istringstream& in, std::int64_t line,
                            VertexId n) {
  long long x;
  if (!(in >> x)) throw ParseError(line, "expected a vertex id");
  if (x < 0 || x >= n)
    throw ParseError(line, "vertex " + std::to_string(x) + " out of [0, " +
                               std::to_string(n) + ")");
  return static_cast<VertexId>(x);
}

inline void requireLineEnd(std::istringstream& in, std::int64_t line) {
  std::string extra;
  if (in >> extra) throw ParseError(line, "trailing characters: " + extra);
}

}  // namespace detail

inline Trace parseTrace(std::istream& in) {
  Trace trace;
  bool have_header = false;
  std::string line;
  std::int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag[0] == '#') continue;
    if (tag == "H") {
      if (have_header) throw ParseError(lineno, "second header");
      long long n;
      double w;
      if (!(ls >> n >> w)) throw ParseError(lineno, "malformed header");
      if (n < 1 || n > std::numeric_limits<VertexId>::max())
        throw ParseError(lineno, "vertex count out of range");
      if (!(w >= 1.0)) throw ParseError(lineno, "w_max below 1");
      detail::requireLineEnd(ls, lineno);
      trace.header = {static_cast<VertexId>(n), w};
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "update before header");
    if (tag == "I") {
      TraceRecord r;
      r.kind = TraceRecord::kInsert;
      r.u = detail::parseVertex(ls, lineno, trace.header.n);
      r.v = detail::parseVertex(ls, lineno, trace.header.n);
      if (!(ls >> r.weight)) throw ParseError(lineno, "expected a weight");
      if (!(r.weight >= 1.0) || r.weight > trace.header.w_max)
        throw ParseError(lineno, "weight outside [1, w_max]");
      detail::requireLineEnd(ls, lineno);
      trace.records.push_back(r);
    } else if (tag == "D") {
      TraceRecord r;
      r.kind = TraceRecord::kDelete;
      r.u = detail::parseVertex(ls, lineno, trace.header.n);
      r.v = detail::parseVertex(ls, lineno, trace.header.n);
      detail::requireLineEnd(ls, lineno);
      trace.records.push_back(r);
    } else if (tag == "C") {
      detail::requireLineEnd(ls, lineno);
      trace.records.push_back({TraceRecord::kCheckpoint, 0, 0, 0.0});
    } else {
      throw ParseError(lineno, "unknown record tag " + tag);
    }
  }
  if (!have_header) throw ParseError(lineno, "missing header");
  return trace;
}

inline void writeTrace(const Trace& trace, std::ostream& out) {
  out << "H " << trace.header.n << ' '
      << detail::formatDouble(trace.header.w_max) << '\n';
  for (const TraceRecord& r : trace.records) {
    switch (r.kind) {
      case TraceRecord::kInsert:
        out << "I " << r.u << ' ' << r.v << ' '
            << detail::formatDouble(r.weight) << '\n';
        break;
      case TraceRecord::kDelete:
        out << "D " << r.u << ' ' << r.v << '\n';
        break;
      case TraceRecord::kCheckpoint:
        out << "C\n";
        break;
    }
  }
}

namespace detail {

// Edge set with O(1) membership and uniform removal, for stream generators.
class EdgePool {
 public:
  bool contains(VertexId u, VertexId v) const {
    return index_.count(key(u, v)) != 0;
  }

  std::size_t size() const { return edges_.size(); }

  void add(VertexId u, VertexId v) {
    index_.emplace(key(u, v), edges_.size());
    edges_.push_back({u, v});
  }

  void remove(VertexId u, VertexId v) {
    auto it = index_.find(key(u, v));
    std::size_t i = it->second;
    index_.erase(it);
    if (i + 1 != edges_.size()) {
      edges_[i] = edges_.back();
      index_[key(edges_[i].first, edges_[i].second)] = i;
    }
    edges_.pop_back();
  }

  std::pair<VertexId, VertexId> pick(Rng& rng) const {
    return edges_[uniformBelow(rng, edges_.size())];
  }

 private:
  static std::uint64_t key(VertexId u, VertexId v) {
    auto a = static_cast<std::uint64_t>(std::min(u, v));
    auto b = static_cast<std::uint64_t>(std::max(u, v));
    return (a << 32) | b;
  }

  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

}  // namespace detail

// Replayable random update stream: each step inserts a uniformly random
// absent edge with weight uniform in [1, w_max] (probability insert_bias)
// or deletes a uniformly random present edge. Forced to insert on an empty
// graph and to delete on a complete one. Fixed seed, fixed output.
inline Trace genRandomStream(VertexId n, double w_max, std::int64_t steps,
                             double insert_bias, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (!(w_max >= 1.0)) throw std::invalid_argument("w_max below 1");
  if (!(insert_bias >= 0.0) || insert_bias > 1.0)
    throw std::invalid_argument("insert_bias outside [0, 1]");
  Rng rng(seed);
  Trace trace;
  trace.header = {n, w_max};
  detail::EdgePool pool;
  std::int64_t max_edges =
      static_cast<std::int64_t>(n) * (static_cast<std::int64_t>(n) - 1) / 2;
  for (std::int64_t step = 0; step < steps; ++step) {
    bool can_insert = static_cast<std::int64_t>(pool.size()) < max_edges;
    bool can_delete = pool.size() > 0;
    bool insert =
        can_insert && (!can_delete || uniformUnit(rng) < insert_bias);
    if (insert) {
      VertexId u, v;
      do {
        u = static_cast<VertexId>(uniformBelow(rng, static_cast<std::uint64_t>(n)));
        v = static_cast<VertexId>(uniformBelow(rng, static_cast<std::uint64_t>(n)));
      } while (u == v || pool.contains(u, v));
      double w = w_max == 1.0 ? 1.0 : 1.0 + (w_max - 1.0) * uniformUnit(rng);
      pool.add(u, v);
      trace.records.push_back({TraceRecord::kInsert, u, v, w});
    } else {
      auto [u, v] = pool.pick(rng);
      pool.remove(u, v);
      trace.records.push_back({TraceRecord::kDelete, u, v, 0.0});
    }
  }
  return trace;
}

// Hard update stream on a side x side grid plus an apex vertex s joined to
// every vertex of column 0 (all weight 1). Columns are linked by random
// row permutations. Each batch rewires one column's permutation, then runs
// a probe: detach a column-0 vertex u from s, bridge it to a random vertex
// of a later column with a weight-w_max edge, checkpoint, and undo both.
// Every intermediate graph is simple and the edge count stays Theta(n).
inline Trace genGridAdversary(VertexId side, std::int64_t batches,
                              std::uint64_t seed) {
  if (side < 2) throw std::invalid_argument("need side >= 2");
  constexpr double kWeightCap = 8.0;
  Rng rng(seed);
  Trace trace;
  VertexId apex = side * side;
  trace.header = {static_cast<VertexId>(side * side + 1), kWeightCap};
  detail::EdgePool pool;
  auto cell = [side](VertexId row, VertexId col) { return col * side + row; };
  auto emitInsert = [&](VertexId u, VertexId v, double w) {
    pool.add(u, v);
    trace.records.push_back({TraceRecord::kInsert, u, v, w});
  };
  auto emitDelete = [&](VertexId u, VertexId v) {
    pool.remove(u, v);
    trace.records.push_back({TraceRecord::kDelete, u, v, 0.0});
  };
  auto shuffled = [&]() {
    std::vector<VertexId> p(static_cast<std::size_t>(side));
    for (VertexId i = 0; i < side; ++i) p[static_cast<std::size_t>(i)] = i;
    for (VertexId i = side - 1; i > 0; --i) {
      auto j = static_cast<VertexId>(uniformBelow(rng, static_cast<std::uint64_t>(i) + 1));
      std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
    }
    return p;
  };

  std::vector<std::vector<VertexId>> perms;
  for (VertexId c = 0; c + 1 < side; ++c) {
    perms.push_back(shuffled());
    for (VertexId r = 0; r < side; ++r)
      emitInsert(cell(r, c), cell(perms.back()[static_cast<std::size_t>(r)],
                                  static_cast<VertexId>(c + 1)),
                 1.0);
  }
  for (VertexId r = 0; r < side; ++r) emitInsert(apex, cell(r, 0), 1.0);

  for (std::int64_t b = 0; b < batches; ++b) {
    auto c = static_cast<VertexId>(uniformBelow(rng, static_cast<std::uint64_t>(side) - 1));
    for (VertexId r = 0; r < side; ++r)
      emitDelete(cell(r, c),
                 cell(perms[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)],
                      static_cast<VertexId>(c + 1)));
    perms[static_cast<std::size_t>(c)] = shuffled();
    for (VertexId r = 0; r < side; ++r)
      emitInsert(cell(r, c),
                 cell(perms[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)],
                      static_cast<VertexId>(c + 1)),
                 1.0);

    auto u = cell(static_cast<VertexId>(uniformBelow(rng, static_cast<std::uint64_t>(side))), 0);
    VertexId v;
    do {
      auto k = static_cast<VertexId>(1 + uniformBelow(rng, static_cast<std::uint64_t>(side) - 1));
      v = cell(static_cast<VertexId>(uniformBelow(rng, static_cast<std::uint64_t>(side))), k);
    } while (pool.contains(u, v));
    emitDelete(u, apex);
    emitInsert(u, v, kWeightCap);
    trace.records.push_back({TraceRecord::kCheckpoint, 0, 0, 0.0});
    emitDelete(u, v);
    emitInsert(u, apex, 1.0);
  }
  return trace;
}

}  // namespace msfw
