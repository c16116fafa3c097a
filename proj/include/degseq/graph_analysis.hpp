#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

#include "degseq/errors.hpp"
#include "degseq/forced_sets.hpp"
#include "degseq/graph.hpp"

namespace degseq {

// Largest BFS eccentricity; nullopt when the graph is disconnected, 0 for a
// single vertex.
inline std::optional<int> diameter(const LabeledGraph& g) {
  const int n = g.size();
  int best = 0;
  std::vector<int> dist(static_cast<std::size_t>(n) + 1);
  for (int s = 1; s <= n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int u : g.neighbors(v))
        if (dist[static_cast<std::size_t>(u)] < 0) {
          dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
          queue.push(u);
        }
    }
    for (int v = 1; v <= n; ++v) {
      if (dist[static_cast<std::size_t>(v)] < 0) return std::nullopt;
      best = std::max(best, dist[static_cast<std::size_t>(v)]);
    }
  }
  return best;
}

struct CutResult {
  int lambda = 0;
  std::vector<Edge> witness_cut;  // empty when disconnected
};

namespace detail {

// Unit-capacity undirected max-flow network for repeated s-t queries.
class FlowNetwork {
 public:
  explicit FlowNetwork(const LabeledGraph& g) : n_(g.size()) {
    head_.assign(static_cast<std::size_t>(n_) + 1, {});
    for (const Edge& e : g.edges()) {
      // Paired arcs with capacity 1 each model one undirected unit edge.
      add_arc(e.i, e.j);
    }
  }

  // Edmonds-Karp; capacities are reset before each query.
  int max_flow(int s, int t) {
    for (auto& arc : arcs_) arc.cap = 1;
    int flow = 0;
    while (augment(s, t)) ++flow;
    return flow;
  }

  // Residual-reachable side of s after the last max_flow call.
  std::vector<bool> reachable(int s) const {
    std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
    seen[static_cast<std::size_t>(s)] = true;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int id : head_[static_cast<std::size_t>(v)]) {
        const Arc& a = arcs_[static_cast<std::size_t>(id)];
        if (a.cap > 0 && !seen[static_cast<std::size_t>(a.to)]) {
          seen[static_cast<std::size_t>(a.to)] = true;
          queue.push(a.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int cap;
  };

  void add_arc(int u, int v) {
    head_[static_cast<std::size_t>(u)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back(Arc{v, 1});
    head_[static_cast<std::size_t>(v)].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back(Arc{u, 1});
  }

  bool augment(int s, int t) {
    std::vector<int> via(static_cast<std::size_t>(n_) + 1, -1);
    via[static_cast<std::size_t>(s)] = -2;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty() && via[static_cast<std::size_t>(t)] == -1) {
      const int v = queue.front();
      queue.pop();
      for (int id : head_[static_cast<std::size_t>(v)]) {
        const Arc& a = arcs_[static_cast<std::size_t>(id)];
        if (a.cap > 0 && via[static_cast<std::size_t>(a.to)] == -1) {
          via[static_cast<std::size_t>(a.to)] = id;
          queue.push(a.to);
        }
      }
    }
    if (via[static_cast<std::size_t>(t)] == -1) return false;
    int v = t;
    while (v != s) {
      const int id = via[static_cast<std::size_t>(v)];
      arcs_[static_cast<std::size_t>(id)].cap -= 1;
      arcs_[static_cast<std::size_t>(id ^ 1)].cap += 1;
      v = arcs_[static_cast<std::size_t>(id ^ 1)].to;
    }
    return true;
  }

  int n_;
  std::vector<std::vector<int>> head_;
  std::vector<Arc> arcs_;
};

}  // namespace detail

// Edge connectivity as the minimum over t of max-flow(1, t), with a witness
// minimum cut read off the final residual graph. Disconnected graphs report
// lambda 0 and no witness.
inline CutResult edge_connectivity(const LabeledGraph& g) {
  const int n = g.size();
  if (n < 2) throw PreconditionError("edge connectivity needs at least two vertices");
  detail::FlowNetwork net(g);
  if (g.edge_count() == 0) return CutResult{};
  int best = -1;
  int best_t = -1;
  for (int t = 2; t <= n; ++t) {
    const int value = net.max_flow(1, t);
    if (best < 0 || value < best) {
      best = value;
      best_t = t;
    }
    if (best == 0) break;
  }
  if (best == 0) return CutResult{};
  net.max_flow(1, best_t);
  const std::vector<bool> side = net.reachable(1);
  CutResult out;
  out.lambda = best;
  for (const Edge& e : g.edges())
    if (side[static_cast<std::size_t>(e.i)] != side[static_cast<std::size_t>(e.j)])
      out.witness_cut.push_back(e);
  return out;
}

// For a realization with forced edge (i,j), the vertices adjacent to neither
// endpoint form an independent set.
inline bool check_forced_independence(const LabeledGraph& g, int i, int j) {
  g.check_label(i);
  g.check_label(j);
  if (i == j) throw PreconditionError("edge endpoints must differ");
  if (!is_forced(g.degrees(), i, j))
    throw PreconditionError("edge " + Edge(i, j).str() +
                            " is not forced for the graph's degrees");
  const int n = g.size();
  std::vector<bool> excluded(static_cast<std::size_t>(n) + 1, false);
  excluded[static_cast<std::size_t>(i)] = true;
  excluded[static_cast<std::size_t>(j)] = true;
  for (int u : g.neighbors(i)) excluded[static_cast<std::size_t>(u)] = true;
  for (int u : g.neighbors(j)) excluded[static_cast<std::size_t>(u)] = true;
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v)
    if (!excluded[static_cast<std::size_t>(v)]) rest.push_back(v);
  for (std::size_t p = 0; p < rest.size(); ++p)
    for (std::size_t q = p + 1; q < rest.size(); ++q)
      if (g.has_edge(rest[p], rest[q])) return false;
  return true;
}

// For a realization with forbidden pair (i,j) (needs max degree < n-1 and
// min degree > 0), the joint neighborhood of i and j is a clique.
inline bool check_forbidden_clique(const LabeledGraph& g, int i, int j) {
  g.check_label(i);
  g.check_label(j);
  if (i == j) throw PreconditionError("edge endpoints must differ");
  const LabeledIntSequence degs = g.degrees();
  const int n = g.size();
  int max_deg = 0;
  int min_deg = n;
  for (int v : degs.values()) {
    max_deg = std::max(max_deg, v);
    min_deg = std::min(min_deg, v);
  }
  if (max_deg >= n - 1)
    throw PreconditionError("clique structure requires max degree below n-1");
  if (min_deg == 0)
    throw PreconditionError("clique structure requires positive min degree");
  if (!is_forbidden(degs, i, j))
    throw PreconditionError("pair " + Edge(i, j).str() +
                            " is not forbidden for the graph's degrees");
  std::vector<int> joint;
  for (int v = 1; v <= g.size(); ++v)
    if (v != i && v != j && (g.has_edge(v, i) || g.has_edge(v, j)))
      joint.push_back(v);
  for (std::size_t p = 0; p < joint.size(); ++p)
    for (std::size_t q = p + 1; q < joint.size(); ++q)
      if (!g.has_edge(joint[p], joint[q])) return false;
  return true;
}

}  // namespace degseq
