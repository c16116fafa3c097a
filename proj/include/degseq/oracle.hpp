#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "degseq/degree_sequence.hpp"
#include "degseq/errors.hpp"
#include "degseq/forced_sets.hpp"
#include "degseq/graph.hpp"
#include "degseq/graph_analysis.hpp"
#include "degseq/realize.hpp"

namespace degseq {

inline constexpr int kMaxEnumerationLength = 10;
inline constexpr int kMaxSweepLength = 7;
inline constexpr int kMaxGraphicEnumerationLength = 8;
inline constexpr int kMaxBruteCutLength = 16;

// Visit every labeled realization of `a` exactly once, in lexicographic order
// of the per-vertex neighbour choices. Return false from the visitor to stop.
// Backtracking assigns the higher-labeled neighbours of each vertex in turn
// and prunes any branch whose residual tail is not graphic, so only viable
// prefixes are explored.
inline void for_each_realization(
    const DegreeSequence& a, const std::function<bool(const LabeledGraph&)>& visit) {
  if (a.size() > kMaxEnumerationLength)
    throw TooLargeError("realization enumeration capped at n=" +
                        std::to_string(kMaxEnumerationLength));
  if (!is_graphic(a)) throw NotGraphicError("sequence " + a.str() + " is not graphic");
  const int n = a.size();
  std::vector<int> residual = a.values();
  std::vector<Edge> edges;
  bool stopped = false;

  const auto tail_graphic = [&residual](int v) {
    std::vector<int> tail(residual.begin() + v, residual.end());
    return is_graphic(tail);
  };

  std::function<void(int)> place = [&](int v) {
    if (stopped) return;
    if (v == n + 1) {
      const LabeledGraph g(n, edges);
      if (!visit(g)) stopped = true;
      return;
    }
    const int need = residual[static_cast<std::size_t>(v) - 1];
    if (need == 0) {
      place(v + 1);
      return;
    }
    std::vector<int> cands;
    for (int u = v + 1; u <= n; ++u)
      if (residual[static_cast<std::size_t>(u) - 1] > 0) cands.push_back(u);
    if (static_cast<int>(cands.size()) < need) return;
    residual[static_cast<std::size_t>(v) - 1] = 0;
    std::function<void(int, int)> choose = [&](int got, int start) {
      if (stopped) return;
      if (got == need) {
        if (tail_graphic(v)) place(v + 1);
        return;
      }
      for (int idx = start;
           idx <= static_cast<int>(cands.size()) - (need - got) && !stopped; ++idx) {
        const int u = cands[static_cast<std::size_t>(idx)];
        residual[static_cast<std::size_t>(u) - 1] -= 1;
        edges.emplace_back(v, u);
        choose(got + 1, idx + 1);
        edges.pop_back();
        residual[static_cast<std::size_t>(u) - 1] += 1;
      }
    };
    choose(0, 0);
    residual[static_cast<std::size_t>(v) - 1] = need;
  };
  place(1);
}

inline std::vector<LabeledGraph> enumerate_realizations(
    const DegreeSequence& a,
    std::optional<std::uint64_t> limit = std::nullopt) {
  std::vector<LabeledGraph> out;
  for_each_realization(a, [&](const LabeledGraph& g) {
    out.push_back(g);
    return !limit || out.size() < *limit;
  });
  return out;
}

inline std::uint64_t count_realizations(
    const DegreeSequence& a,
    std::optional<std::uint64_t> limit = std::nullopt) {
  std::uint64_t count = 0;
  for_each_realization(a, [&](const LabeledGraph&) {
    ++count;
    return !limit || count < *limit;
  });
  return count;
}

namespace detail {

inline std::uint64_t edge_mask_bit(int n, const Edge& e) {
  return std::uint64_t{1} << ((e.i - 1) * n + (e.j - 1));
}

inline std::uint64_t graph_edge_mask(int n, const LabeledGraph& g) {
  std::uint64_t mask = 0;
  for (const Edge& e : g.edges()) mask |= edge_mask_bit(n, e);
  return mask;
}

inline std::vector<Edge> mask_to_edges(int n, std::uint64_t mask) {
  std::vector<Edge> out;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (mask & edge_mask_bit(n, Edge(i, j))) out.emplace_back(i, j);
  return out;
}

inline std::uint64_t all_pairs_mask(int n) {
  std::uint64_t mask = 0;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n; ++j) mask |= edge_mask_bit(n, Edge(i, j));
  return mask;
}

}  // namespace detail

// Reference forced set: intersection of all realizations' edge sets.
inline std::vector<Edge> forced_set_oracle(const DegreeSequence& a) {
  if (a.size() > 8) throw TooLargeError("edge-set oracle capped at n=8");
  const int n = a.size();
  std::uint64_t inter = detail::all_pairs_mask(n);
  for_each_realization(a, [&](const LabeledGraph& g) {
    inter &= detail::graph_edge_mask(n, g);
    return inter != 0;
  });
  return detail::mask_to_edges(n, inter);
}

// Reference forbidden set: pairs hit by no realization.
inline std::vector<Edge> forbidden_set_oracle(const DegreeSequence& a) {
  if (a.size() > 8) throw TooLargeError("edge-set oracle capped at n=8");
  const int n = a.size();
  std::uint64_t seen = 0;
  const std::uint64_t all = detail::all_pairs_mask(n);
  for_each_realization(a, [&](const LabeledGraph& g) {
    seen |= detail::graph_edge_mask(n, g);
    return seen != all;
  });
  return detail::mask_to_edges(n, all & ~seen);
}

// All graphic sequences of length n in descending lexicographic order.
inline std::vector<DegreeSequence> enumerate_graphic_sequences(int n) {
  if (n < 1) throw PreconditionError("need n >= 1");
  if (n > kMaxGraphicEnumerationLength)
    throw TooLargeError("graphic enumeration capped at n=" +
                        std::to_string(kMaxGraphicEnumerationLength));
  std::vector<DegreeSequence> out;
  std::vector<int> values;
  std::function<void(int)> build = [&](int cap) {
    if (static_cast<int>(values.size()) == n) {
      if (detail::erdos_gallai_sorted(values)) out.emplace_back(values);
      return;
    }
    for (int v = cap; v >= 0; --v) {
      values.push_back(v);
      build(v);
      values.pop_back();
    }
  };
  build(n - 1);
  return out;
}

// Reference edge connectivity: minimum crossing-edge count over all vertex
// bipartitions with vertex 1 on the left. Every minimal disconnecting edge
// set is such a cut, so this equals the minimum over edge subsets.
inline int min_cut_bruteforce(const LabeledGraph& g) {
  const int n = g.size();
  if (n < 2) throw PreconditionError("edge connectivity needs at least two vertices");
  if (n > kMaxBruteCutLength) throw TooLargeError("brute-force cut capped at n=16");
  const std::vector<Edge> edges = g.edges();
  int best = INT_MAX;
  const std::uint32_t full = (std::uint32_t{1} << (n - 1)) - 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    // Left side = {1} plus the vertices 2..n picked by mask.
    int crossing = 0;
    for (const Edge& e : edges) {
      const bool left_i = e.i == 1 || (mask >> (e.i - 2)) & 1;
      const bool left_j = e.j == 1 || (mask >> (e.j - 2)) & 1;
      if (left_i != left_j) ++crossing;
    }
    best = std::min(best, crossing);
  }
  return best;
}

namespace detail {

// Iterated colour refinement: start from degrees, re-colour by the multiset
// of neighbour colours until stable, numbering signatures consistently
// across both graphs.
inline std::pair<std::vector<int>, std::vector<int>> refine_colors(
    const LabeledGraph& a, const LabeledGraph& b) {
  const int n = a.size();
  std::vector<int> ca(static_cast<std::size_t>(n) + 1);
  std::vector<int> cb(static_cast<std::size_t>(n) + 1);
  for (int v = 1; v <= n; ++v) {
    ca[static_cast<std::size_t>(v)] = a.degree(v);
    cb[static_cast<std::size_t>(v)] = b.degree(v);
  }
  for (int round = 0; round < n; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    const auto signature = [&ids](const LabeledGraph& g, const std::vector<int>& c,
                                  int v) {
      std::vector<int> around;
      for (int u : g.neighbors(v)) around.push_back(c[static_cast<std::size_t>(u)]);
      std::sort(around.begin(), around.end());
      const auto key = std::make_pair(c[static_cast<std::size_t>(v)], std::move(around));
      const auto it = ids.find(key);
      if (it != ids.end()) return it->second;
      const int id = static_cast<int>(ids.size());
      ids.emplace(key, id);
      return id;
    };
    std::vector<int> na(static_cast<std::size_t>(n) + 1);
    std::vector<int> nb(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) na[static_cast<std::size_t>(v)] = signature(a, ca, v);
    for (int v = 1; v <= n; ++v) nb[static_cast<std::size_t>(v)] = signature(b, cb, v);
    ca.swap(na);
    cb.swap(nb);
  }
  return {std::move(ca), std::move(cb)};
}

}  // namespace detail

// Isomorphism by colour refinement plus exhaustive colour-respecting bijection.
inline bool is_isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  const int n = a.size();
  const auto [ca, cb] = detail::refine_colors(a, b);
  std::vector<int> ha(ca.begin() + 1, ca.end());
  std::vector<int> hb(cb.begin() + 1, cb.end());
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return false;
  std::vector<int> image(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::function<bool(int)> assign = [&](int v) {
    if (v == n + 1) return true;
    for (int u = 1; u <= n; ++u) {
      if (used[static_cast<std::size_t>(u)] ||
          cb[static_cast<std::size_t>(u)] != ca[static_cast<std::size_t>(v)])
        continue;
      bool ok = true;
      for (int w = 1; w < v && ok; ++w)
        if (a.has_edge(v, w) != b.has_edge(u, image[static_cast<std::size_t>(w)]))
          ok = false;
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = u;
      used[static_cast<std::size_t>(u)] = true;
      if (assign(v + 1)) return true;
      used[static_cast<std::size_t>(u)] = false;
    }
    return false;
  };
  return assign(1);
}

inline int isomorphism_class_count(std::span<const LabeledGraph> graphs) {
  std::vector<const LabeledGraph*> reps;
  for (const LabeledGraph& g : graphs) {
    bool fresh = true;
    for (const LabeledGraph* rep : reps)
      if (is_isomorphic(*rep, g)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(&g);
  }
  return static_cast<int>(reps.size());
}

struct TheoremResult {
  std::string name;
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  std::optional<std::string> first_counterexample;
};

struct VerificationReport {
  int n = 0;
  std::int64_t sequences_checked = 0;
  std::vector<TheoremResult> theorems;

  bool all_pass() const {
    for (const TheoremResult& t : theorems)
      if (t.failures > 0) return false;
    return true;
  }
};

namespace detail {

enum VerifyRow : int {
  kOracleEquivalence = 0,
  kDuality,
  kCornerAndDisjointness,
  kThresholdStructure,
  kThresholdSequence,
  kMonotonicity,
  kBoundTheorem,
  kInducedPersistence,
  kIndependenceStructure,
  kCliqueStructure,
  kForcedClique,
  kDiameterBound,
  kEdgeConnectivity,
  kVerifyRowCount,
};

inline const char* verify_row_name(int row) {
  static const char* names[kVerifyRowCount] = {
      "oracle_equivalence",    "duality",
      "corner_and_disjointness", "threshold_structure",
      "threshold_sequence",    "monotonicity",
      "bound_theorem",         "induced_persistence",
      "independence_structure", "clique_structure",
      "forced_clique",         "diameter_bound",
      "edge_connectivity",
  };
  return names[row];
}

struct RowAccumulator {
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  std::int64_t first_index = INT64_MAX;
  std::string first_message;

  void pass() { ++checks; }

  void fail(std::int64_t index, const std::string& message) {
    ++checks;
    ++failures;
    if (index < first_index) {
      first_index = index;
      first_message = message;
    }
  }

  void merge(const RowAccumulator& other) {
    checks += other.checks;
    failures += other.failures;
    if (other.first_index < first_index) {
      first_index = other.first_index;
      first_message = other.first_message;
    }
  }
};

inline std::string edges_to_string(const std::vector<Edge>& edges) {
  if (edges.empty()) return "{}";
  std::string out = "{";
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (k > 0) out += ",";
    out += edges[k].str();
  }
  out += "}";
  return out;
}

inline std::string realization_to_string(const LabeledGraph& g) {
  return edges_to_string(g.edges());
}

// All theorem checks for one sequence (everything except the pairwise
// monotonicity sweep, which lives in the caller).
inline void verify_one_sequence(std::int64_t index, const DegreeSequence& a,
                                std::vector<RowAccumulator>& rows) {
  const int n = a.size();
  const std::vector<int>& av = a.values();
  const int a1 = av.front();
  const int an = av.back();
  const std::string label = a.str();

  const StaircaseEdgeSet forced = forced_set(a);
  const StaircaseEdgeSet forbidden = forbidden_set(a);
  const std::vector<Edge> forced_edges = forced.edges();
  const std::vector<Edge> forbidden_edges = forbidden.edges();

  // Duality in both directions: B(a) is the relabeled forced set of the
  // complement, and F(a) the relabeled forbidden set of the complement.
  {
    const DegreeSequence comp = complement(a);
    const bool ok = forbidden_set_via_complement(a) == forbidden &&
                    forced_set(comp).complement_relabeled() == forbidden &&
                    forbidden_set(comp).complement_relabeled() == forced;
    if (ok)
      rows[kDuality].pass();
    else
      rows[kDuality].fail(index, label + ": complement route disagrees with direct walk");
  }

  const std::uint64_t forced_mask_expected =
      [&] {
        std::uint64_t m = 0;
        for (const Edge& e : forced_edges) m |= edge_mask_bit(n, e);
        return m;
      }();
  const std::uint64_t forbidden_mask_expected =
      [&] {
        std::uint64_t m = 0;
        for (const Edge& e : forbidden_edges) m |= edge_mask_bit(n, e);
        return m;
      }();
  const std::uint64_t all_pairs = all_pairs_mask(n);

  std::uint64_t intersection = all_pairs;
  std::uint64_t covered = 0;
  std::uint64_t count = 0;
  bool degrees_ok = true;

  const bool structural_hypotheses = an >= 1 && !(forced.empty() && forbidden.empty());
  const bool clique_hypotheses = a1 < n - 1 && an > 0;

  for_each_realization(a, [&](const LabeledGraph& g) {
    ++count;
    const std::uint64_t mask = graph_edge_mask(n, g);
    intersection &= mask;
    covered |= mask;
    if (g.degrees().values() != av) degrees_ok = false;

    std::optional<int> diam;
    if (structural_hypotheses) {
      diam = diameter(g);
      if (diam && *diam <= 3)
        rows[kDiameterBound].pass();
      else
        rows[kDiameterBound].fail(
            index, label + ": realization " + realization_to_string(g) +
                       " has diameter " + (diam ? std::to_string(*diam) : "inf") +
                       " > 3");
    }

    if (n >= 2) {
      const CutResult cut = edge_connectivity(g);
      bool conn_ok = cut.lambda <= an;
      std::string why = conn_ok ? "" : "lambda exceeds minimum degree";
      if (conn_ok && structural_hypotheses && cut.lambda != an) {
        conn_ok = false;
        why = "lambda " + std::to_string(cut.lambda) + " != min degree " +
              std::to_string(an);
      }
      if (conn_ok && cut.lambda > 0 &&
          static_cast<int>(cut.witness_cut.size()) != cut.lambda) {
        conn_ok = false;
        why = "witness cut size mismatch";
      }
      if (conn_ok && n <= kMaxBruteCutLength && n <= 6 &&
          cut.lambda != min_cut_bruteforce(g)) {
        conn_ok = false;
        why = "flow lambda disagrees with bipartition minimum";
      }
      if (conn_ok && !diam) diam = diameter(g);
      if (conn_ok && diam && *diam <= 2 && cut.lambda != an) {
        conn_ok = false;
        why = "diameter <= 2 but lambda != min degree";
      }
      if (conn_ok)
        rows[kEdgeConnectivity].pass();
      else
        rows[kEdgeConnectivity].fail(index, label + ": realization " +
                                                realization_to_string(g) + ": " + why);
    }

    for (const Edge& e : forced_edges) {
      if (check_forced_independence(g, e.i, e.j))
        rows[kIndependenceStructure].pass();
      else
        rows[kIndependenceStructure].fail(
            index, label + ": realization " + realization_to_string(g) +
                       ": non-neighbours of forced " + e.str() +
                       " are not independent");

      bool persists = true;
      std::vector<int> subset;
      std::vector<int> others;
      for (int v = 1; v <= n; ++v)
        if (v != e.i && v != e.j) others.push_back(v);
      std::string bad_subset;
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << others.size());
           ++mask) {
        subset.clear();
        subset.push_back(e.i);
        subset.push_back(e.j);
        for (std::size_t b = 0; b < others.size(); ++b)
          if ((mask >> b) & 1) subset.push_back(others[b]);
        if (!induced_forced_persists(g, e.i, e.j, subset)) {
          persists = false;
          bad_subset = format_sequence(subset);
          break;
        }
      }
      if (persists)
        rows[kInducedPersistence].pass();
      else
        rows[kInducedPersistence].fail(
            index, label + ": realization " + realization_to_string(g) +
                       ": forced " + e.str() + " lost in induced subset {" +
                       bad_subset + "}");
    }

    if (clique_hypotheses) {
      for (const Edge& e : forbidden_edges) {
        if (check_forbidden_clique(g, e.i, e.j))
          rows[kCliqueStructure].pass();
        else
          rows[kCliqueStructure].fail(
              index, label + ": realization " + realization_to_string(g) +
                         ": joint neighbourhood of forbidden " + e.str() +
                         " is not a clique");
      }
    }
    return true;
  });

  // Oracle equivalence of both staircase walks.
  {
    const bool ok = degrees_ok && count >= 1 &&
                    intersection == forced_mask_expected &&
                    (all_pairs & ~covered) == forbidden_mask_expected;
    if (ok)
      rows[kOracleEquivalence].pass();
    else
      rows[kOracleEquivalence].fail(
          index,
          label + ": walk gives forced " + edges_to_string(forced_edges) +
              " forbidden " + edges_to_string(forbidden_edges) +
              ", oracle gives forced " +
              edges_to_string(mask_to_edges(n, intersection)) + " forbidden " +
              edges_to_string(mask_to_edges(n, all_pairs & ~covered)));
  }

  // Disjointness, the two corner rules, and equal-degree symmetry.
  {
    bool ok = (forced_mask_expected & forbidden_mask_expected) == 0;
    std::string why = ok ? "" : "forced and forbidden sets intersect";
    if (ok && n >= 2) {
      if (forced.empty() != !forced.contains(Edge(1, 2))) {
        ok = false;
        why = "forced corner rule violated at (1,2)";
      }
      if (ok && forbidden.empty() != !forbidden.contains(Edge(n - 1, n))) {
        ok = false;
        why = "forbidden corner rule violated at (n-1,n)";
      }
    }
    for (int i = 1; ok && i <= n - 1; ++i)
      for (int j = i + 1; ok && j <= n; ++j) {
        if (av[static_cast<std::size_t>(i) - 1] != av[static_cast<std::size_t>(j) - 1])
          continue;
        for (int k = 1; ok && k <= n; ++k) {
          if (k == i || k == j) continue;
          if (forced.contains(Edge(i, k)) != forced.contains(Edge(j, k)) ||
              forbidden.contains(Edge(i, k)) != forbidden.contains(Edge(j, k))) {
            ok = false;
            why = "equal degrees at " + std::to_string(i) + "," + std::to_string(j) +
                  " treated asymmetrically";
          }
        }
      }
    if (ok)
      rows[kCornerAndDisjointness].pass();
    else
      rows[kCornerAndDisjointness].fail(index, label + ": " + why);
  }

  {
    if (forced_graph_is_threshold(a))
      rows[kThresholdStructure].pass();
    else
      rows[kThresholdStructure].fail(
          index, label + ": forced graph contains an induced 2K2, P4 or C4");
  }

  {
    const bool unique = count == 1;
    if (is_threshold_sequence(a) == unique)
      rows[kThresholdSequence].pass();
    else
      rows[kThresholdSequence].fail(
          index, label + ": threshold test says " +
                     (is_threshold_sequence(a) ? "true" : "false") + " but " +
                     std::to_string(count) + " realizations exist");
  }

  if (an > 0) {
    if (!bound_excludes_forced(a) || forced.empty())
      rows[kBoundTheorem].pass();
    else
      rows[kBoundTheorem].fail(
          index, label + ": bound_excludes_forced is true but forced set is " +
                     edges_to_string(forced_edges));
  }

  if (an > 0) {
    const int clique = max_forced_clique_size(a);
    for (const Edge& e : forbidden_edges) {
      const int need = a.degree(e.i);
      if (clique >= need)
        rows[kForcedClique].pass();
      else
        rows[kForcedClique].fail(
            index, label + ": forbidden " + e.str() + " promises a forced clique of " +
                       std::to_string(need) + " but only " + std::to_string(clique) +
                       " found");
    }
  }
  if (a1 < n - 2 && !forced.empty()) {
    const int clique = max_forced_clique_size(a);
    if (clique >= an)
      rows[kForcedClique].pass();
    else
      rows[kForcedClique].fail(
          index, label + ": corollary promises a forced clique of " +
                     std::to_string(an) + " but only " + std::to_string(clique) +
                     " found");
  }
}

}  // namespace detail

// Exhaustive verification of every implemented theorem over all graphic
// sequences of length n, optionally sharded over `jobs` threads. Results are
// deterministic regardless of thread count: counters are summed and the
// reported counterexample is the one of smallest sequence index.
inline VerificationReport verify_all(int n, int jobs = 1) {
  if (n < 1) throw PreconditionError("need n >= 1");
  if (n > kMaxSweepLength)
    throw TooLargeError("verification sweep capped at n=" +
                        std::to_string(kMaxSweepLength));
  if (jobs < 1) jobs = 1;
  const std::vector<DegreeSequence> seqs = enumerate_graphic_sequences(n);
  const std::int64_t total = static_cast<std::int64_t>(seqs.size());

  std::vector<std::vector<detail::RowAccumulator>> shards(
      static_cast<std::size_t>(jobs),
      std::vector<detail::RowAccumulator>(detail::kVerifyRowCount));

  const auto work = [&](int shard) {
    auto& rows = shards[static_cast<std::size_t>(shard)];
    for (std::int64_t idx = shard; idx < total; idx += jobs) {
      const DegreeSequence& a = seqs[static_cast<std::size_t>(idx)];
      detail::verify_one_sequence(idx, a, rows);
      // Pairwise monotonicity, with this sequence on the dominating side.
      for (std::int64_t jdx = 0; jdx < total; ++jdx) {
        if (jdx == idx) continue;
        const DegreeSequence& b = seqs[static_cast<std::size_t>(jdx)];
        if (majorizes(a, b) != Majorization::LeftMajorizes) continue;
        if (check_monotonicity(a, b))
          rows[detail::kMonotonicity].pass();
        else
          rows[detail::kMonotonicity].fail(
              idx * total + jdx,
              a.str() + " majorizes " + b.str() +
                  " but does not keep its forced/forbidden edges");
      }
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int shard = 0; shard < jobs; ++shard) pool.emplace_back(work, shard);
    for (std::thread& t : pool) t.join();
  }

  VerificationReport report;
  report.n = n;
  report.sequences_checked = total;
  report.theorems.resize(detail::kVerifyRowCount);
  for (int row = 0; row < detail::kVerifyRowCount; ++row) {
    detail::RowAccumulator merged;
    for (const auto& shard : shards) merged.merge(shard[static_cast<std::size_t>(row)]);
    TheoremResult& result = report.theorems[static_cast<std::size_t>(row)];
    result.name = detail::verify_row_name(row);
    result.checks = merged.checks;
    result.failures = merged.failures;
    if (merged.failures > 0) result.first_counterexample = merged.first_message;
  }
  return report;
}

inline std::string to_text(const VerificationReport& report) {
  std::string out = "verification sweep: n=" + std::to_string(report.n) + ", " +
                    std::to_string(report.sequences_checked) + " sequences\n";
  for (const TheoremResult& t : report.theorems) {
    std::string line = "  " + t.name;
    if (line.size() < 27) line.resize(27, ' ');
    line += t.failures == 0 ? "PASS" : "FAIL";
    line += "  " + std::to_string(t.checks) + " checks";
    if (t.failures > 0) line += ", " + std::to_string(t.failures) + " failures";
    out += line + "\n";
    if (t.first_counterexample)
      out += "    first counterexample: " + *t.first_counterexample + "\n";
  }
  out += report.all_pass() ? "result: all theorems hold\n"
                           : "result: counterexample found\n";
  return out;
}

}  // namespace degseq
