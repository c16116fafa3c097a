#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "degseq/degree_sequence.hpp"
#include "degseq/errors.hpp"
#include "degseq/forced_sets.hpp"
#include "degseq/graph.hpp"
#include "degseq/rng.hpp"

namespace degseq {

namespace detail {

// Iterated Kleitman-Wang construction: saturate each vertex of the process
// order in turn, connecting it to the vertices of currently-largest residual
// degree (ties to the smaller label). Each step is a valid reduction, so the
// residual stays graphic and the loop never gets stuck.
inline LabeledGraph realize_in_order(const DegreeSequence& a,
                                     const std::vector<int>& order) {
  if (!is_graphic(a)) throw NotGraphicError("sequence " + a.str() + " is not graphic");
  const int n = a.size();
  std::vector<int> residual = a.values();
  LabeledGraph g(n);
  std::vector<int> candidates;
  candidates.reserve(static_cast<std::size_t>(n));
  for (int v : order) {
    const int want = residual[static_cast<std::size_t>(v) - 1];
    if (want == 0) continue;
    candidates.clear();
    for (int u = 1; u <= n; ++u)
      if (u != v && residual[static_cast<std::size_t>(u) - 1] > 0)
        candidates.push_back(u);
    std::stable_sort(candidates.begin(), candidates.end(), [&residual](int x, int y) {
      return residual[static_cast<std::size_t>(x) - 1] >
             residual[static_cast<std::size_t>(y) - 1];
    });
    if (static_cast<int>(candidates.size()) < want)
      throw InsufficientEntriesError("residual ran out of positive entries");
    for (int k = 0; k < want; ++k) {
      const int u = candidates[static_cast<std::size_t>(k)];
      g.add_edge(v, u);
      residual[static_cast<std::size_t>(u) - 1] -= 1;
    }
    residual[static_cast<std::size_t>(v) - 1] = 0;
  }
  return g;
}

}  // namespace detail

// Deterministic realization of a graphic sequence.
inline LabeledGraph realize(const DegreeSequence& a) {
  std::vector<int> order(static_cast<std::size_t>(a.size()));
  std::iota(order.begin(), order.end(), 1);
  return detail::realize_in_order(a, order);
}

// Realization that saturates vertex `label` first, so it ends up adjacent to
// the a_label largest-degree other vertices (ties to the smaller label).
inline LabeledGraph realize_saturating(const DegreeSequence& a, int label) {
  a.check_label(label);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(a.size()));
  order.push_back(label);
  for (int v = 1; v <= a.size(); ++v)
    if (v != label) order.push_back(v);
  return detail::realize_in_order(a, order);
}

// Replace edges {remove_first, remove_second} by {add_first, add_second} on
// the same four distinct vertices, preserving all degrees.
struct TwoSwitch {
  Edge remove_first;
  Edge remove_second;
  Edge add_first;
  Edge add_second;
};

inline LabeledGraph apply_two_switch(const LabeledGraph& g, const TwoSwitch& sw) {
  const auto distinct4 = [](const Edge& a, const Edge& b) {
    return a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j;
  };
  if (!distinct4(sw.remove_first, sw.remove_second))
    throw InvalidSwitchError("removed edges must cover four distinct vertices");
  int removed[4] = {sw.remove_first.i, sw.remove_first.j, sw.remove_second.i,
                    sw.remove_second.j};
  int added[4] = {sw.add_first.i, sw.add_first.j, sw.add_second.i, sw.add_second.j};
  std::sort(std::begin(removed), std::end(removed));
  std::sort(std::begin(added), std::end(added));
  if (!std::equal(std::begin(removed), std::end(removed), std::begin(added)))
    throw InvalidSwitchError("switch must preserve every vertex degree");
  if (!g.has_edge(sw.remove_first) || !g.has_edge(sw.remove_second))
    throw InvalidSwitchError("removed edges must be present");
  if (g.has_edge(sw.add_first) || g.has_edge(sw.add_second))
    throw InvalidSwitchError("added edges must be absent");
  LabeledGraph out = g;
  out.remove_edge(sw.remove_first);
  out.remove_edge(sw.remove_second);
  out.add_edge(sw.add_first);
  out.add_edge(sw.add_second);
  return out;
}

// Lazy two-switch walk over the realizations of `a`, started at realize(a).
// Forced edges never move, so proposals draw only from the non-forced edges:
// an ordered pair of distinct pool slots plus a fair coin for the pairing.
// Proposals that collide (shared vertex or an existing edge) are burned as
// steps, which keeps the chain's stationary distribution uniform. The
// observer, when given, sees the initial state and every accepted move.
inline LabeledGraph mcmc_sample(
    const DegreeSequence& a, std::uint64_t steps, std::uint64_t seed,
    const std::function<void(const LabeledGraph&)>& on_state) {
  LabeledGraph g = realize(a);
  const StaircaseEdgeSet forced = forced_set(a);
  std::vector<Edge> pool;
  for (const Edge& e : g.edges())
    if (!forced.contains(e)) pool.push_back(e);
  Rng rng(seed);
  if (on_state) on_state(g);
  for (std::uint64_t step = 0; step < steps; ++step) {
    if (pool.size() < 2) continue;
    const std::size_t first = rng.below(pool.size());
    std::size_t second = rng.below(pool.size() - 1);
    if (second >= first) ++second;
    const Edge e1 = pool[first];
    const Edge e2 = pool[second];
    if (e1.i == e2.i || e1.i == e2.j || e1.j == e2.i || e1.j == e2.j) continue;
    const bool cross = rng.coin();
    const Edge n1 = cross ? Edge(e1.i, e2.j) : Edge(e1.i, e2.i);
    const Edge n2 = cross ? Edge(e1.j, e2.i) : Edge(e1.j, e2.j);
    if (g.has_edge(n1) || g.has_edge(n2)) continue;
    g.remove_edge(e1);
    g.remove_edge(e2);
    g.add_edge(n1);
    g.add_edge(n2);
    pool[first] = n1;
    pool[second] = n2;
    if (on_state) on_state(g);
  }
  return g;
}

inline LabeledGraph mcmc_sample(const DegreeSequence& a, std::uint64_t steps,
                                std::uint64_t seed) {
  return mcmc_sample(a, steps, seed, nullptr);
}

// Sequential importance sampling in the Blitzstein-Diaconis style: repeatedly
// saturate the vertex of minimum positive residual degree (ties to the
// smallest label), choosing each neighbour uniformly from the candidates that
// keep the residual graphic. Graphicality of the residual guarantees a
// nonempty candidate list, so construction always completes.
inline LabeledGraph sis_sample(const DegreeSequence& a, std::uint64_t seed) {
  if (!is_graphic(a)) throw NotGraphicError("sequence " + a.str() + " is not graphic");
  const int n = a.size();
  std::vector<int> residual = a.values();
  LabeledGraph g(n);
  Rng rng(seed);
  std::vector<int> candidates;
  for (;;) {
    int v = 0;
    for (int u = 1; u <= n; ++u) {
      const int r = residual[static_cast<std::size_t>(u) - 1];
      if (r > 0 && (v == 0 || r < residual[static_cast<std::size_t>(v) - 1])) v = u;
    }
    if (v == 0) break;
    while (residual[static_cast<std::size_t>(v) - 1] > 0) {
      candidates.clear();
      for (int u = 1; u <= n; ++u) {
        if (u == v || g.has_edge(v, u)) continue;
        std::vector<int> next = residual;
        next[static_cast<std::size_t>(v) - 1] -= 1;
        next[static_cast<std::size_t>(u) - 1] -= 1;
        if (is_graphic(next)) candidates.push_back(u);
      }
      if (candidates.empty())
        throw InsufficientEntriesError("no graphic extension; residual corrupt");
      const int u = candidates[rng.below(candidates.size())];
      g.add_edge(v, u);
      residual[static_cast<std::size_t>(v) - 1] -= 1;
      residual[static_cast<std::size_t>(u) - 1] -= 1;
    }
  }
  return g;
}

}  // namespace degseq
