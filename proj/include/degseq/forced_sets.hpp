#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "degseq/degree_sequence.hpp"
#include "degseq/errors.hpp"
#include "degseq/graph.hpp"

namespace degseq {

enum class EdgeSetKind { Forced, Forbidden };

namespace detail {

// Membership probes on a non-increasing vector, positions 1-based.
inline bool forced_probe_sorted(const std::vector<int>& sorted_desc, int p, int q) {
  std::vector<int> bumped = sorted_desc;
  bumped[static_cast<std::size_t>(p) - 1] += 1;
  bumped[static_cast<std::size_t>(q) - 1] += 1;
  return !is_graphic(bumped);
}

inline bool forbidden_probe_sorted(const std::vector<int>& sorted_desc, int p, int q) {
  std::vector<int> cut = sorted_desc;
  cut[static_cast<std::size_t>(p) - 1] -= 1;
  cut[static_cast<std::size_t>(q) - 1] -= 1;
  return !is_graphic(cut);
}

// Frontier of a downward-closed edge set: row i holds columns i+1..f[i], the
// row maxima are non-increasing and nonempty rows form a prefix, so a shared
// descending column pointer recovers all of f in at most 2n probes.
template <class Probe>
std::vector<int> forced_frontier(int n, Probe&& probe) {
  std::vector<int> f(static_cast<std::size_t>(n) + 1, 0);
  int j = n;
  for (int i = 1; i <= n - 1; ++i) {
    if (j < i + 1) break;
    while (j >= i + 1 && !probe(i, j)) --j;
    if (j < i + 1) break;
    f[static_cast<std::size_t>(i)] = j;
  }
  return f;
}

// Frontier of an upward-closed edge set: row i holds columns g[i]..n and the
// nonempty rows form a suffix. Ascending scans start from the bound implied
// by the next row (g[i] >= g[i+1] whenever g[i+1] > i+2), keeping the total
// probe count linear.
template <class Probe>
std::vector<int> forbidden_frontier(int n, Probe&& probe) {
  std::vector<int> g(static_cast<std::size_t>(n) + 1, 0);
  int lower = 0;
  for (int i = n - 1; i >= 1; --i) {
    int j = std::max(i + 1, lower);
    while (j <= n && !probe(i, j)) ++j;
    if (j > n) break;
    g[static_cast<std::size_t>(i)] = j;
    lower = (j > i + 1) ? j : 0;
  }
  return g;
}

}  // namespace detail

// Staircase-shaped edge set on labels 1..n stored as one frontier column per
// row: downward-closed sets (forced) keep the row maximum, upward-closed sets
// (forbidden) the row minimum. Frontier index i covers rows 1..n-1; 0 marks
// an empty row.
class StaircaseEdgeSet {
 public:
  StaircaseEdgeSet(int n, EdgeSetKind kind, std::vector<int> frontier)
      : n_(n), kind_(kind), frontier_(std::move(frontier)) {
    if (n < 1) throw InvalidSequenceError("edge set needs at least one vertex");
    if (frontier_.size() != static_cast<std::size_t>(n) + 1)
      throw InvalidSequenceError("frontier must have n+1 slots");
    if (frontier_[0] != 0 || (n >= 1 && frontier_[static_cast<std::size_t>(n)] != 0))
      throw InvalidSequenceError("frontier slots 0 and n must be empty");
    validate();
  }

  static StaircaseEdgeSet empty_set(int n, EdgeSetKind kind) {
    return StaircaseEdgeSet(n, kind, std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
  }

  // Rebuild from an explicit edge list, rejecting sets that are not closed.
  static StaircaseEdgeSet from_edges(int n, EdgeSetKind kind,
                                     std::span<const Edge> edges) {
    std::vector<int> frontier(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : edges) {
      if (e.j > n)
        throw IndexOutOfRangeError("edge " + e.str() + " outside 1.." +
                                   std::to_string(n));
      auto& slot = frontier[static_cast<std::size_t>(e.i)];
      if (kind == EdgeSetKind::Forced)
        slot = std::max(slot, e.j);
      else
        slot = (slot == 0) ? e.j : std::min(slot, e.j);
    }
    StaircaseEdgeSet out(n, kind, std::move(frontier));
    if (out.size() != edges.size())
      throw InvalidSequenceError("edge list is not closed under the staircase order");
    return out;
  }

  int vertex_count() const { return n_; }
  EdgeSetKind kind() const { return kind_; }

  std::optional<int> row(int i) const {
    if (i < 1 || i > n_)
      throw IndexOutOfRangeError("row " + std::to_string(i) + " outside 1.." +
                                 std::to_string(n_));
    const int v = frontier_[static_cast<std::size_t>(i)];
    if (v == 0) return std::nullopt;
    return v;
  }

  bool contains(const Edge& e) const {
    if (e.j > n_) return false;
    const int v = frontier_[static_cast<std::size_t>(e.i)];
    if (v == 0) return false;
    return kind_ == EdgeSetKind::Forced ? e.j <= v : e.j >= v;
  }

  std::size_t size() const {
    std::size_t total = 0;
    for (int i = 1; i <= n_ - 1; ++i) {
      const int v = frontier_[static_cast<std::size_t>(i)];
      if (v == 0) continue;
      total += static_cast<std::size_t>(kind_ == EdgeSetKind::Forced ? v - i
                                                                     : n_ - v + 1);
    }
    return total;
  }

  bool empty() const {
    for (int i = 1; i <= n_ - 1; ++i)
      if (frontier_[static_cast<std::size_t>(i)] != 0) return false;
    return true;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (int i = 1; i <= n_ - 1; ++i) {
      const int v = frontier_[static_cast<std::size_t>(i)];
      if (v == 0) continue;
      if (kind_ == EdgeSetKind::Forced)
        for (int j = i + 1; j <= v; ++j) out.emplace_back(i, j);
      else
        for (int j = v; j <= n_; ++j) out.emplace_back(i, j);
    }
    return out;
  }

  // Superset test against a set of the same kind on the same labels.
  bool includes(const StaircaseEdgeSet& other) const {
    if (other.n_ != n_ || other.kind_ != kind_)
      throw PreconditionError("superset test needs matching kind and size");
    for (int i = 1; i <= n_ - 1; ++i) {
      const int mine = frontier_[static_cast<std::size_t>(i)];
      const int theirs = other.frontier_[static_cast<std::size_t>(i)];
      if (theirs == 0) continue;
      if (mine == 0) return false;
      if (kind_ == EdgeSetKind::Forced ? mine < theirs : mine > theirs) return false;
    }
    return true;
  }

  // Image under the label flip i -> n+1-i, which swaps the closure direction
  // (forced staircases map to forbidden ones and back).
  StaircaseEdgeSet complement_relabeled() const {
    const auto probe = [this](int p, int q) {
      return contains(Edge(n_ + 1 - q, n_ + 1 - p));
    };
    if (kind_ == EdgeSetKind::Forced)
      return StaircaseEdgeSet(n_, EdgeSetKind::Forbidden,
                              detail::forbidden_frontier(n_, probe));
    return StaircaseEdgeSet(n_, EdgeSetKind::Forced,
                            detail::forced_frontier(n_, probe));
  }

  friend bool operator==(const StaircaseEdgeSet&, const StaircaseEdgeSet&) = default;

 private:
  void validate() const {
    for (int i = 1; i <= n_ - 1; ++i) {
      const int v = frontier_[static_cast<std::size_t>(i)];
      if (v != 0 && (v < i + 1 || v > n_))
        throw InvalidSequenceError("frontier value " + std::to_string(v) +
                                   " invalid in row " + std::to_string(i));
    }
    if (kind_ == EdgeSetKind::Forced) {
      // Nonempty rows form a prefix with non-increasing maxima.
      bool ended = false;
      int prev = 0;
      for (int i = 1; i <= n_ - 1; ++i) {
        const int v = frontier_[static_cast<std::size_t>(i)];
        if (v == 0) {
          ended = true;
          continue;
        }
        if (ended)
          throw InvalidSequenceError("forced rows must form a prefix");
        if (i > 1 && v > prev)
          throw InvalidSequenceError("forced row maxima must be non-increasing");
        prev = v;
      }
    } else {
      // Nonempty rows form a suffix; consecutive minima obey the closure chain.
      bool started = false;
      for (int i = 1; i <= n_ - 1; ++i) {
        const int v = frontier_[static_cast<std::size_t>(i)];
        if (v == 0) {
          if (started)
            throw InvalidSequenceError("forbidden rows must form a suffix");
          continue;
        }
        started = true;
        if (i < n_ - 1) {
          const int next = frontier_[static_cast<std::size_t>(i) + 1];
          if (next == 0 || next > std::max(v, i + 2))
            throw InvalidSequenceError("forbidden row minima violate closure");
        }
      }
    }
  }

  int n_;
  EdgeSetKind kind_;
  std::vector<int> frontier_;
};

namespace detail {

inline void require_graphic(const DegreeSequence& a) {
  if (!is_graphic(a)) throw NotGraphicError("sequence " + a.str() + " is not graphic");
}

inline void check_pair(const DegreeSequence& a, int i, int j) {
  a.check_label(i);
  a.check_label(j);
  if (i == j) throw PreconditionError("edge endpoints must differ");
}

}  // namespace detail

// (i,j) lies in every realization iff bumping both degrees breaks graphicality.
inline bool is_forced(const DegreeSequence& a, int i, int j) {
  detail::check_pair(a, i, j);
  detail::require_graphic(a);
  const Edge e(i, j);
  return detail::forced_probe_sorted(a.values(), e.i, e.j);
}

// (i,j) lies in no realization iff cutting both degrees breaks graphicality.
inline bool is_forbidden(const DegreeSequence& a, int i, int j) {
  detail::check_pair(a, i, j);
  detail::require_graphic(a);
  const Edge e(i, j);
  return detail::forbidden_probe_sorted(a.values(), e.i, e.j);
}

// Label-aware variants for sequences that are not sorted: the membership test
// runs at the labels' sorted positions.
inline bool is_forced(const LabeledIntSequence& s, int i, int j) {
  s.check_label(i);
  s.check_label(j);
  if (i == j) throw PreconditionError("edge endpoints must differ");
  const SortedSequenceView view = s.sorted();
  if (!detail::erdos_gallai_sorted(view.values))
    throw NotGraphicError("sequence " + s.str() + " is not graphic");
  const int pi = view.position_of[static_cast<std::size_t>(i) - 1];
  const int pj = view.position_of[static_cast<std::size_t>(j) - 1];
  return detail::forced_probe_sorted(view.values, std::min(pi, pj), std::max(pi, pj));
}

inline bool is_forbidden(const LabeledIntSequence& s, int i, int j) {
  s.check_label(i);
  s.check_label(j);
  if (i == j) throw PreconditionError("edge endpoints must differ");
  const SortedSequenceView view = s.sorted();
  if (!detail::erdos_gallai_sorted(view.values))
    throw NotGraphicError("sequence " + s.str() + " is not graphic");
  const int pi = view.position_of[static_cast<std::size_t>(i) - 1];
  const int pj = view.position_of[static_cast<std::size_t>(j) - 1];
  return detail::forbidden_probe_sorted(view.values, std::min(pi, pj), std::max(pi, pj));
}

inline StaircaseEdgeSet forced_set(const DegreeSequence& a) {
  detail::require_graphic(a);
  const auto& values = a.values();
  auto frontier = detail::forced_frontier(a.size(), [&values](int i, int j) {
    return detail::forced_probe_sorted(values, i, j);
  });
  return StaircaseEdgeSet(a.size(), EdgeSetKind::Forced, std::move(frontier));
}

inline StaircaseEdgeSet forbidden_set(const DegreeSequence& a) {
  detail::require_graphic(a);
  const auto& values = a.values();
  auto frontier = detail::forbidden_frontier(a.size(), [&values](int i, int j) {
    return detail::forbidden_probe_sorted(values, i, j);
  });
  return StaircaseEdgeSet(a.size(), EdgeSetKind::Forbidden, std::move(frontier));
}

// Second route to the forbidden set: forced set of the complement sequence,
// relabeled back through i -> n+1-i.
inline StaircaseEdgeSet forbidden_set_via_complement(const DegreeSequence& a) {
  detail::require_graphic(a);
  return forced_set(complement(a)).complement_relabeled();
}

// Vertices covered by forced edges; by the staircase shape this is the
// prefix 1..f[1].
inline std::vector<int> forced_vertices(const DegreeSequence& a) {
  const StaircaseEdgeSet f = forced_set(a);
  std::vector<int> out;
  const auto top = f.row(1);
  if (!top) return out;
  out.resize(static_cast<std::size_t>(*top));
  for (int v = 1; v <= *top; ++v) out[static_cast<std::size_t>(v) - 1] = v;
  return out;
}

// The forced graph (P(a), F(a)) is threshold iff no four forced vertices
// induce 2K2, P4 or C4 in it; checked directly over quadruples.
inline bool forced_graph_is_threshold(const DegreeSequence& a) {
  const StaircaseEdgeSet f = forced_set(a);
  const auto top = f.row(1);
  if (!top) return true;
  const int p = *top;
  for (int a1 = 1; a1 <= p - 3; ++a1)
    for (int b = a1 + 1; b <= p - 2; ++b)
      for (int c = b + 1; c <= p - 1; ++c)
        for (int d = c + 1; d <= p; ++d) {
          const int quad[4] = {a1, b, c, d};
          int deg[4] = {0, 0, 0, 0};
          int edges = 0;
          for (int x = 0; x < 4; ++x)
            for (int y = x + 1; y < 4; ++y)
              if (f.contains(Edge(quad[x], quad[y]))) {
                ++edges;
                ++deg[x];
                ++deg[y];
              }
          const int mx = std::max({deg[0], deg[1], deg[2], deg[3]});
          const int mn = std::min({deg[0], deg[1], deg[2], deg[3]});
          if (edges == 2 && mx == 1) return false;               // 2K2
          if (edges == 3 && mx == 2 && mn == 1) return false;    // P4
          if (edges == 4 && mx == 2 && mn == 2) return false;    // C4
        }
  return true;
}

// Threshold sequences are exactly those whose every edge is forced.
inline bool is_threshold_sequence(const DegreeSequence& a) {
  detail::require_graphic(a);
  const std::size_t m = static_cast<std::size_t>(a.degree_sum() / 2);
  return forced_set(a).size() == m;
}

// Size guarantee that rules out forced edges:
// n >= min{ (a1+an+2)^2 / (4 an), (a1+an)^2 / (2 an) }, evaluated exactly by
// cross-multiplication.
inline bool bound_excludes_forced(const DegreeSequence& a) {
  detail::require_graphic(a);
  const std::int64_t a1 = a.values().front();
  const std::int64_t an = a.values().back();
  if (an == 0) throw MinDegreeZeroError("bound requires a positive minimum degree");
  const std::int64_t n = a.size();
  using Wide = __int128;
  const Wide s1 = Wide(a1 + an + 2) * Wide(a1 + an + 2);
  const Wide s2 = Wide(a1 + an) * Wide(a1 + an);
  const bool first = Wide(n) * 4 * an >= s1;
  const bool second = Wide(n) * 2 * an >= s2;
  return first || second;
}

// Majorization is monotone for both edge sets: a newer (dominating) sequence
// keeps every forced and every forbidden edge of the dominated one.
inline bool check_monotonicity(const DegreeSequence& a, const DegreeSequence& b) {
  const Majorization rel = majorizes(a, b);
  if (rel != Majorization::LeftMajorizes && rel != Majorization::Equal)
    throw NotComparableError("left sequence must majorize the right (got " +
                             std::string(to_string(rel)) + ")");
  detail::require_graphic(a);
  detail::require_graphic(b);
  return forced_set(a).includes(forced_set(b)) &&
         forbidden_set(a).includes(forbidden_set(b));
}

// Largest c with all pairs on 1..c forced; 1 when no forced edges exist.
// By the staircase shape the maximum forced clique is a label prefix, so it
// suffices to grow c while (c-1, c) stays forced.
inline int max_forced_clique_size(const DegreeSequence& a) {
  const StaircaseEdgeSet f = forced_set(a);
  int best = 1;
  for (int c = 2; c <= a.size(); ++c) {
    const auto r = f.row(c - 1);
    if (!r || *r < c) break;
    best = c;
  }
  return best;
}

// Shared forced edge of two labeled sequences of the same length: any such
// edge blocks packing (both packed graphs would need it). Returns the
// lexicographically smallest one.
inline std::optional<Edge> packing_obstruction(const LabeledIntSequence& a,
                                               const LabeledIntSequence& b) {
  if (a.size() != b.size())
    throw LengthMismatchError("packing needs equal lengths, got " +
                              std::to_string(a.size()) + " and " +
                              std::to_string(b.size()));
  const auto forced_on_labels = [](const LabeledIntSequence& s) {
    const SortedSequenceView view = s.sorted();
    if (!detail::erdos_gallai_sorted(view.values))
      throw NotGraphicError("sequence " + s.str() + " is not graphic");
    const DegreeSequence sorted_seq(view.values);
    std::set<Edge> out;
    for (const Edge& e : forced_set(sorted_seq).edges())
      out.insert(Edge(view.label_at[static_cast<std::size_t>(e.i) - 1],
                      view.label_at[static_cast<std::size_t>(e.j) - 1]));
    return out;
  };
  const std::set<Edge> fa = forced_on_labels(a);
  const std::set<Edge> fb = forced_on_labels(b);
  for (const Edge& e : fa)
    if (fb.count(e)) return e;
  return std::nullopt;
}

// Forced edges stay forced in induced subgraphs that keep both endpoints.
inline bool induced_forced_persists(const LabeledGraph& g, int i, int j,
                                    std::span<const int> s) {
  g.check_label(i);
  g.check_label(j);
  if (i == j) throw PreconditionError("edge endpoints must differ");
  bool has_i = false;
  bool has_j = false;
  for (int label : s) {
    has_i = has_i || label == i;
    has_j = has_j || label == j;
  }
  if (!has_i || !has_j)
    throw PreconditionError("subset must contain both edge endpoints");
  if (!is_forced(g.degrees(), i, j))
    throw PreconditionError("edge " + Edge(i, j).str() +
                            " is not forced for the graph's degrees");
  const InducedSubgraph ind = induced_subgraph(g, s);
  const auto pos = [&ind](int label) {
    const auto it = std::lower_bound(ind.original_labels.begin(),
                                     ind.original_labels.end(), label);
    return static_cast<int>(it - ind.original_labels.begin()) + 1;
  };
  return is_forced(ind.graph.degrees(), pos(i), pos(j));
}

}  // namespace degseq
