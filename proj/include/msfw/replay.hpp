#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exact_oracle.hpp"
#include "msf_estimator.hpp"
#include "trace.hpp"

namespace msfw {

enum class ReplayMode { kDeterministic, kRandomized };

struct ReplayOptions {
  double eps = 0.5;
  ReplayMode mode = ReplayMode::kDeterministic;
  std::uint64_t seed = 0;
  std::int64_t checkpoint_every = 0;  // 0: only explicit C records
  std::optional<double> p_prime;      // randomized mode; default n^-2
};

struct CheckpointRow {
  std::int64_t i;  // update count at the checkpoint
  double exact_msf;
  double est_msf;
  double rel_err;
  std::int64_t lat_p50_ns;
  std::int64_t lat_p99_ns;
  std::int64_t lat_max_ns;
};

struct RunReport {
  VertexId n = 0;
  double w_max = 1.0;
  double eps = 0.0;
  ReplayMode mode = ReplayMode::kDeterministic;
  std::uint64_t seed = 0;
  std::vector<CheckpointRow> rows;
  bool envelope_violated = false;
};

namespace detail {

inline std::int64_t percentileNs(std::vector<std::int64_t>& sorted, double q) {
  if (sorted.empty()) return 0;
  auto idx = static_cast<std::size_t>(q * static_cast<double>(sorted.size() - 1));
  return sorted[idx];
}

}  // namespace detail

// Replays a trace through an MsfEstimator, checking the exact MSF weight at
// every checkpoint. Latency percentiles cover the updates since the previous
// checkpoint; checkpoint work itself is untimed. Semantic stream errors
// (duplicate insert, delete of an absent edge) surface as ReplayError with
// the offending update's timestamp.
inline RunReport runTrace(const Trace& trace, const ReplayOptions& options) {
  RunReport report;
  report.n = trace.header.n;
  report.w_max = trace.header.w_max;
  report.eps = options.eps;
  report.mode = options.mode;
  report.seed = options.seed;

  DynamicGraph empty(trace.header.n,
                     DynamicGraph::Options{trace.header.w_max, false});
  MsfEstimator::Mode mode = MsfEstimator::Deterministic{};
  if (options.mode == ReplayMode::kRandomized) {
    double p = options.p_prime.value_or(
        MsfEstimator::defaultFailureProbability(trace.header.n));
    mode = MsfEstimator::Randomized{p, options.seed};
  }
  MsfEstimator estimator(empty, options.eps, mode);

  std::vector<std::int64_t> window;
  std::int64_t updates = 0;
  std::int64_t last_row_at = -1;

  auto takeCheckpoint = [&]() {
    if (updates == last_row_at) return;  // merged duplicate checkpoint
    last_row_at = updates;
    double exact = kruskalMsfWeight(estimator.graph());
    double est = estimator.estimate();
    CheckpointRow row;
    row.i = updates;
    row.exact_msf = exact;
    row.est_msf = est;
    row.rel_err = std::fabs(est - exact) / std::max(exact, 1.0);
    std::sort(window.begin(), window.end());
    row.lat_p50_ns = detail::percentileNs(window, 0.50);
    row.lat_p99_ns = detail::percentileNs(window, 0.99);
    row.lat_max_ns = window.empty() ? 0 : window.back();
    window.clear();
    double slack = 1e-9 * std::max(1.0, exact);
    if (est < (1.0 - options.eps) * exact - slack ||
        est > (1.0 + options.eps) * exact + slack)
      report.envelope_violated = true;
    report.rows.push_back(row);
  };

  for (const TraceRecord& r : trace.records) {
    if (r.kind == TraceRecord::kCheckpoint) {
      takeCheckpoint();
      continue;
    }
    EdgeUpdate op{r.kind == TraceRecord::kInsert ? EdgeUpdate::kInsert
                                                 : EdgeUpdate::kDelete,
                  r.u, r.v, r.weight, 0};
    auto t0 = std::chrono::steady_clock::now();
    try {
      estimator.apply(op);
    } catch (const Error& e) {
      throw ReplayError(updates + 1, e.what());
    }
    auto t1 = std::chrono::steady_clock::now();
    ++updates;
    window.push_back(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    const DynamicGraph& g = estimator.graph();
    std::int64_t gamma = g.nonIsolatedCount();
    if (g.edgeCount() >= 1 && gamma * gamma <= 2 * g.edgeCount())
      throw ReplayError(updates, "non-isolated count fell to sqrt(2m) or below");
    if (options.checkpoint_every > 0 && updates % options.checkpoint_every == 0)
      takeCheckpoint();
  }
  return report;
}

inline void writeCsv(const RunReport& report, std::ostream& out) {
  out << "# n=" << report.n << '\n';
  out << "# w=" << detail::formatDouble(report.w_max) << '\n';
  out << "# eps=" << detail::formatDouble(report.eps) << '\n';
  out << "# mode="
      << (report.mode == ReplayMode::kDeterministic ? "det" : "rand") << '\n';
  out << "# seed=" << report.seed << '\n';
  out << "# envelope_violated=" << (report.envelope_violated ? 1 : 0) << '\n';
  out << "i,exact_msf,est_msf,rel_err,lat_p50_ns,lat_p99_ns,lat_max_ns\n";
  for (const CheckpointRow& row : report.rows) {
    out << row.i << ',' << detail::formatDouble(row.exact_msf) << ','
        << detail::formatDouble(row.est_msf) << ','
        << detail::formatDouble(row.rel_err) << ',' << row.lat_p50_ns << ','
        << row.lat_p99_ns << ',' << row.lat_max_ns << '\n';
  }
}

// Inverse of writeCsv; reports round-trip losslessly.
inline RunReport parseCsvReport(std::istream& in) {
  RunReport report;
  std::string line;
  std::int64_t lineno = 0;
  bool saw_columns = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = line.substr(1);
      auto eq = body.find('=');
      if (eq == std::string::npos) continue;
      std::string key = body.substr(0, eq);
      key.erase(0, key.find_first_not_of(' '));
      std::string value = body.substr(eq + 1);
      try {
        if (key == "n") report.n = static_cast<VertexId>(std::stoll(value));
        else if (key == "w") report.w_max = std::stod(value);
        else if (key == "eps") report.eps = std::stod(value);
        else if (key == "seed") report.seed = std::stoull(value);
        else if (key == "envelope_violated")
          report.envelope_violated = std::stoll(value) != 0;
        else if (key == "mode")
          report.mode = value == "rand" ? ReplayMode::kRandomized
                                        : ReplayMode::kDeterministic;
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad value for " + key);
      }
      continue;
    }
    if (!saw_columns) {
      saw_columns = true;  // column header line
      continue;
    }
    CheckpointRow row;
    std::istringstream ls(line);
    std::string field;
    auto next = [&]() {
      if (!std::getline(ls, field, ','))
        throw ParseError(lineno, "missing column");
      return field;
    };
    try {
      row.i = std::stoll(next());
      row.exact_msf = std::stod(next());
      row.est_msf = std::stod(next());
      row.rel_err = std::stod(next());
      row.lat_p50_ns = std::stoll(next());
      row.lat_p99_ns = std::stoll(next());
      row.lat_max_ns = std::stoll(next());
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError(lineno, "malformed row");
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace msfw
