#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "exact_oracle.hpp"
#include "graph.hpp"

namespace msfw {

// Maintains the exact number of connected components with at most
// K = floor(1/eps) vertices, at O(K^2) worst-case cost per edge update.
// The count differs from the full component count by at most the number of
// components larger than K, which is below eps * nis(G).
//
// Attach as a listener (or invoke the hooks manually around each update):
// the counter needs to see the graph both before and after the change. Each
// update runs at most three bounded explorations:
//   insert: components of u and v before, component of u after;
//   delete: component of u before, components of u and v after;
// and adjusts the count by the case analysis below. Whether u and v share a
// component is read off the explored set of u (membership of v), which is
// exact whenever that exploration completed.
class SmallCcCounter : public GraphListener {
 public:
  SmallCcCounter(const DynamicGraph& g, double eps) {
    if (!(eps > 0.0) || eps > 1.0)
      throw std::invalid_argument("eps outside (0, 1]");
    eps_ = eps;
    cap_ = floorIndex(1.0 / eps);
    count_ = staticSweep(g);
  }

  std::int64_t estimate() const { return count_; }
  std::int64_t cap() const { return cap_; }
  double eps() const { return eps_; }

  // Bounded-exploration work (vertex pops + adjacency entries scanned)
  // spent on the most recent update.
  std::uint64_t lastUpdateWork() const { return last_work_; }

  void beforeUpdate(const DynamicGraph& g, const EdgeUpdate& op) override {
    bfs_.resetWorkCount();
    pending_ = Pending{};
    if (op.u == op.v) {
      // A self-loop changes no component; nothing to measure.
      pending_.trivial = true;
      return;
    }
    if (op.kind == EdgeUpdate::kInsert) {
      if (g.hasEdge(op.u, op.v))
        throw EdgeAlreadyPresent("insert of an edge already present");
      pending_.u_small = bfs_.run(g, op.u, cap_, set_u_);
      if (pending_.u_small) {
        pending_.same_component = bfs_.visitedInLastRun(op.v);
        pending_.v_small = pending_.same_component
                               ? true
                               : bfs_.run(g, op.v, cap_, set_v_);
      } else {
        pending_.same_component = false;  // not needed when u's side is large
        pending_.v_small = bfs_.run(g, op.v, cap_, set_v_);
      }
    } else {
      if (!g.hasEdge(op.u, op.v))
        throw EdgeNotFound("delete of an edge not present");
      pending_.u_small = bfs_.run(g, op.u, cap_, set_u_);
    }
    pending_.armed = true;
  }

  void afterUpdate(const DynamicGraph& g, const EdgeUpdate& op) override {
    if (pending_.trivial) {
      last_work_ = bfs_.workCount();
      return;
    }
    if (!pending_.armed)
      throw std::logic_error("afterUpdate without matching beforeUpdate");
    pending_.armed = false;
    if (op.kind == EdgeUpdate::kInsert) {
      applyInsertCase(g, op);
    } else {
      applyDeleteCase(g, op);
    }
    last_work_ = bfs_.workCount();
  }

 private:
  struct Pending {
    bool armed = false;
    bool trivial = false;
    bool u_small = false;
    bool v_small = false;
    bool same_component = false;
  };

  // Truncated component census: a fresh exploration stops once it discovers
  // more than K vertices, pops a vertex of degree > K, or touches a vertex
  // marked by an earlier exploration (all three imply the component is
  // large). Only exhausted components count. Marks make the total O(n * K).
  std::int64_t staticSweep(const DynamicGraph& g) {
    VertexId n = g.vertexCount();
    std::vector<std::uint32_t> mark(static_cast<std::size_t>(n), 0);
    std::vector<VertexId> queue;
    std::uint32_t sweep = 0;
    std::int64_t total = 0;
    for (VertexId s = 0; s < n; ++s) {
      if (mark[static_cast<std::size_t>(s)] != 0) continue;
      ++sweep;
      queue.assign(1, s);
      mark[static_cast<std::size_t>(s)] = sweep;
      bool small = static_cast<std::int64_t>(queue.size()) <= cap_;
      for (std::size_t head = 0; small && head < queue.size(); ++head) {
        VertexId x = queue[head];
        if (g.degree(x) > cap_) {
          small = false;
          break;
        }
        for (const Neighbor& nb : g.neighbors(x)) {
          auto id = static_cast<std::size_t>(nb.id);
          if (mark[id] == sweep) continue;
          if (mark[id] != 0) {
            small = false;  // ran into a previously aborted exploration
            break;
          }
          mark[id] = sweep;
          queue.push_back(nb.id);
          if (static_cast<std::int64_t>(queue.size()) > cap_) {
            small = false;
            break;
          }
        }
      }
      if (small) ++total;
    }
    return total;
  }

  void applyInsertCase(const DynamicGraph& g, const EdgeUpdate& op) {
    bool u0 = pending_.u_small;
    bool v0 = pending_.v_small;
    if (u0 != v0) {
      --count_;  // small component swallowed by a large one
    } else if (u0 && v0) {
      bool merged_small = bfs_.run(g, op.u, cap_, set_after_);
      if (!merged_small) {
        count_ -= 2;  // two small components fused into a large one
      } else if (!pending_.same_component) {
        --count_;  // two small components fused into one small component
      }
      // same component: the edge closed a cycle, counts stay put
    }
  }

  void applyDeleteCase(const DynamicGraph& g, const EdgeUpdate& op) {
    bool u1 = bfs_.run(g, op.u, cap_, set_after_);
    bool still_connected = u1 && bfs_.visitedInLastRun(op.v);
    bool v1 = (u1 && still_connected) ? true : bfs_.run(g, op.v, cap_, set_v_);
    if (u1 != v1) {
      ++count_;  // a large component shed a small piece
    } else if (u1 && v1) {
      if (!pending_.u_small) {
        count_ += 2;  // a large component split into two small pieces
      } else if (!still_connected) {
        ++count_;  // a small component split in two
      }
      // still connected: removed a cycle edge, counts stay put
    }
  }

  double eps_ = 0.0;
  std::int64_t cap_ = 0;
  std::int64_t count_ = 0;
  std::uint64_t last_work_ = 0;
  Pending pending_;
  BoundedBfs bfs_;
  std::vector<VertexId> set_u_;
  std::vector<VertexId> set_v_;
  std::vector<VertexId> set_after_;
};

}  // namespace msfw
