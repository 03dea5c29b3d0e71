#include "msfw/trace.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>
#include <string>
#include <utility>

namespace msfw {
namespace {

Trace parseString(const std::string& text) {
  std::istringstream in(text);
  return parseTrace(in);
}

std::int64_t lineOfError(const std::string& text) {
  try {
    parseString(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(TraceParser, ReadsAllRecordKinds) {
  Trace t = parseString(
      "# a comment\n"
      "H 5 8\n"
      "\n"
      "I 0 1 2.5\n"
      "D 1 0\n"
      "C\n");
  EXPECT_EQ(t.header.n, 5);
  EXPECT_DOUBLE_EQ(t.header.w_max, 8.0);
  ASSERT_EQ(t.records.size(), 3u);
  EXPECT_EQ(t.records[0].kind, TraceRecord::kInsert);
  EXPECT_EQ(t.records[0].u, 0);
  EXPECT_EQ(t.records[0].v, 1);
  EXPECT_DOUBLE_EQ(t.records[0].weight, 2.5);
  EXPECT_EQ(t.records[1].kind, TraceRecord::kDelete);
  EXPECT_EQ(t.records[2].kind, TraceRecord::kCheckpoint);
  EXPECT_EQ(t.updateCount(), 2);
}

TEST(TraceParser, ReportsErrorsWithLineNumbers) {
  EXPECT_EQ(lineOfError(""), 0);                                // no header
  EXPECT_EQ(lineOfError("I 0 1 2\n"), 1);                       // update first
  EXPECT_EQ(lineOfError("H 4 8\nH 4 8\n"), 2);                  // second header
  EXPECT_EQ(lineOfError("H 0 8\n"), 1);                         // n below 1
  EXPECT_EQ(lineOfError("H 4 0.5\n"), 1);                       // w below 1
  EXPECT_EQ(lineOfError("H 4 8\nI 0 4 1\n"), 2);                // v out of range
  EXPECT_EQ(lineOfError("H 4 8\nI -1 2 1\n"), 2);               // u negative
  EXPECT_EQ(lineOfError("H 4 8\nI 0 1 9\n"), 2);                // w above cap
  EXPECT_EQ(lineOfError("H 4 8\nI 0 1 0.25\n"), 2);             // w below 1
  EXPECT_EQ(lineOfError("H 4 8\nI 0 1\n"), 2);                  // missing w
  EXPECT_EQ(lineOfError("H 4 8\nD 0\n"), 2);                    // missing v
  EXPECT_EQ(lineOfError("H 4 8\nC extra\n"), 2);                // trailing
  EXPECT_EQ(lineOfError("H 4 8\nD 0 1 4\n"), 2);                // trailing
  EXPECT_EQ(lineOfError("H 4 8\nX 0 1\n"), 2);                  // unknown tag
  EXPECT_EQ(lineOfError("H 4 8\n# ok\nQ\n"), 3);                // line counting
  EXPECT_EQ(lineOfError("H 4\n"), 1);                           // short header
}

TEST(TraceParser, RoundTripsThroughWriter) {
  Trace t;
  t.header = {9, 7.25};
  t.records.push_back({TraceRecord::kInsert, 3, 8, 1.0000000000000002});
  t.records.push_back({TraceRecord::kInsert, 0, 5, 7.2499999999999991});
  t.records.push_back({TraceRecord::kCheckpoint, 0, 0, 0.0});
  t.records.push_back({TraceRecord::kDelete, 8, 3, 0.0});
  std::ostringstream out;
  writeTrace(t, out);
  Trace back = parseString(out.str());
  EXPECT_EQ(back.header.n, t.header.n);
  EXPECT_DOUBLE_EQ(back.header.w_max, t.header.w_max);
  ASSERT_EQ(back.records.size(), t.records.size());
  for (std::size_t i = 0; i < t.records.size(); ++i) {
    EXPECT_EQ(back.records[i].kind, t.records[i].kind);
    EXPECT_EQ(back.records[i].u, t.records[i].u);
    EXPECT_EQ(back.records[i].v, t.records[i].v);
    // %.17g is lossless for doubles.
    EXPECT_EQ(back.records[i].weight, t.records[i].weight);
  }
}

// Applies every update to a fresh graph; throws if the stream ever inserts
// a present edge, deletes an absent one, or leaves the weight range.
void replayForValidity(const Trace& t) {
  DynamicGraph g(t.header.n, DynamicGraph::Options{t.header.w_max, false});
  for (const TraceRecord& r : t.records) {
    switch (r.kind) {
      case TraceRecord::kInsert:
        g.insertEdge(r.u, r.v, r.weight);
        break;
      case TraceRecord::kDelete:
        g.deleteEdge(r.u, r.v);
        break;
      case TraceRecord::kCheckpoint:
        break;
    }
  }
}

TEST(GenRandomStream, ProducesValidDeterministicStreams) {
  Trace a = genRandomStream(20, 8.0, 500, 0.6, 11);
  Trace b = genRandomStream(20, 8.0, 500, 0.6, 11);
  std::ostringstream out_a, out_b;
  writeTrace(a, out_a);
  writeTrace(b, out_b);
  EXPECT_EQ(out_a.str(), out_b.str());
  EXPECT_EQ(a.updateCount(), 500);
  EXPECT_EQ(a.records[0].kind, TraceRecord::kInsert);  // empty graph forces it
  for (const TraceRecord& r : a.records) {
    if (r.kind == TraceRecord::kInsert) {
      EXPECT_GE(r.weight, 1.0);
      EXPECT_LE(r.weight, 8.0);
      EXPECT_NE(r.u, r.v);
    }
  }
  EXPECT_NO_THROW(replayForValidity(a));
  Trace c = genRandomStream(20, 8.0, 500, 0.6, 12);
  std::ostringstream out_c;
  writeTrace(c, out_c);
  EXPECT_NE(out_a.str(), out_c.str());
}

TEST(GenRandomStream, UnitWeightStreamGetsAllOnes) {
  Trace t = genRandomStream(10, 1.0, 200, 0.7, 3);
  for (const TraceRecord& r : t.records)
    if (r.kind == TraceRecord::kInsert) EXPECT_DOUBLE_EQ(r.weight, 1.0);
  EXPECT_NO_THROW(replayForValidity(t));
}

TEST(GenRandomStream, TinyCompleteGraphForcesDeletes) {
  // n = 2 holds at most one edge, so the stream must alternate.
  Trace t = genRandomStream(2, 4.0, 50, 1.0, 5);
  for (std::size_t i = 0; i < t.records.size(); ++i) {
    EXPECT_EQ(t.records[i].kind,
              i % 2 == 0 ? TraceRecord::kInsert : TraceRecord::kDelete);
  }
  EXPECT_NO_THROW(replayForValidity(t));
}

TEST(GenRandomStream, RejectsBadParameters) {
  EXPECT_THROW(genRandomStream(1, 8.0, 10, 0.5, 1), std::invalid_argument);
  EXPECT_THROW(genRandomStream(5, 0.5, 10, 0.5, 1), std::invalid_argument);
  EXPECT_THROW(genRandomStream(5, 8.0, 10, 1.5, 1), std::invalid_argument);
}

TEST(GenGridAdversary, SmallestGridHasTwelveUpdates) {
  Trace t = genGridAdversary(2, 1, 7);
  EXPECT_EQ(t.header.n, 5);  // 2x2 grid plus apex
  EXPECT_DOUBLE_EQ(t.header.w_max, 8.0);
  EXPECT_EQ(t.updateCount(), 12);
  std::int64_t checkpoints = 0;
  for (const TraceRecord& r : t.records)
    if (r.kind == TraceRecord::kCheckpoint) ++checkpoints;
  EXPECT_EQ(checkpoints, 1);
  EXPECT_NO_THROW(replayForValidity(t));
}

TEST(GenGridAdversary, KeepsEdgeCountLinearAndGraphsSimple) {
  const VertexId side = 6;
  Trace t = genGridAdversary(side, 12, 21);
  EXPECT_EQ(t.header.n, side * side + 1);
  // Simplicity of every intermediate graph: replay throws on any breach.
  EXPECT_NO_THROW(replayForValidity(t));
  // Edge count never strays from Theta(n): between side^2 - side and side^2.
  DynamicGraph g(t.header.n, DynamicGraph::Options{t.header.w_max, false});
  std::int64_t base = 0;
  for (const TraceRecord& r : t.records) {
    if (r.kind == TraceRecord::kInsert) g.insertEdge(r.u, r.v, r.weight);
    if (r.kind == TraceRecord::kDelete) g.deleteEdge(r.u, r.v);
    if (base == 0 && r.kind == TraceRecord::kCheckpoint) base = g.edgeCount();
    if (base > 0) {
      EXPECT_GE(g.edgeCount(), static_cast<std::int64_t>(side) * side - side - 1);
      EXPECT_LE(g.edgeCount(), static_cast<std::int64_t>(side) * side + 1);
    }
  }
  // Probe edges carry the cap weight; permutation edges weight 1.
  std::set<double> weights;
  for (const TraceRecord& r : t.records)
    if (r.kind == TraceRecord::kInsert) weights.insert(r.weight);
  EXPECT_EQ(weights, (std::set<double>{1.0, 8.0}));
}

TEST(GenGridAdversary, CheckpointPerBatch) {
  Trace t = genGridAdversary(4, 9, 2);
  std::int64_t checkpoints = 0;
  for (const TraceRecord& r : t.records)
    if (r.kind == TraceRecord::kCheckpoint) ++checkpoints;
  EXPECT_EQ(checkpoints, 9);
  Trace again = genGridAdversary(4, 9, 2);
  std::ostringstream a, b;
  writeTrace(t, a);
  writeTrace(again, b);
  EXPECT_EQ(a.str(), b.str());
}

TEST(GenGridAdversary, RejectsDegenerateSide) {
  EXPECT_THROW(genGridAdversary(1, 3, 1), std::invalid_argument);
}

}  // namespace
}  // namespace msfw
