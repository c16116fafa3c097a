#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "degseq/degree_sequence.hpp"
#include "degseq/errors.hpp"

namespace degseq {

// Unordered vertex pair stored canonically as i < j.
struct Edge {
  int i;
  int j;

  Edge(int a, int b) {
    if (a < 1 || b < 1)
      throw IndexOutOfRangeError("edge labels must be positive, got (" +
                                 std::to_string(a) + "," + std::to_string(b) + ")");
    if (a == b)
      throw PreconditionError("self-loop (" + std::to_string(a) + "," +
                              std::to_string(a) + ") is not an edge");
    i = std::min(a, b);
    j = std::max(a, b);
  }

  std::string str() const {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class LabeledGraph;
struct InducedSubgraph;

// Simple undirected graph on labels 1..n; adjacency lists kept sorted.
class LabeledGraph {
 public:
  explicit LabeledGraph(int n) : n_(n) {
    if (n < 1) throw InvalidSequenceError("graph needs at least one vertex");
    if (n > kMaxSequenceLength) throw TooLargeError("vertex count exceeds cap");
    adj_.resize(static_cast<std::size_t>(n) + 1);
  }

  LabeledGraph(int n, std::span<const Edge> edges) : LabeledGraph(n) {
    for (const Edge& e : edges) add_edge(e.i, e.j);
  }

  int size() const { return n_; }
  std::int64_t edge_count() const { return m_; }

  bool has_edge(int a, int b) const {
    check_label(a);
    check_label(b);
    if (a == b) return false;
    const auto& row = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(row.begin(), row.end(), b);
  }

  bool has_edge(const Edge& e) const { return has_edge(e.i, e.j); }

  void add_edge(int a, int b) {
    Edge e(a, b);
    check_label(e.j);
    if (has_edge(e.i, e.j))
      throw PreconditionError("edge " + e.str() + " already present");
    insert_sorted(e.i, e.j);
    insert_sorted(e.j, e.i);
    ++m_;
  }

  void add_edge(const Edge& e) { add_edge(e.i, e.j); }

  void remove_edge(int a, int b) {
    Edge e(a, b);
    check_label(e.j);
    if (!has_edge(e.i, e.j))
      throw PreconditionError("edge " + e.str() + " not present");
    erase_sorted(e.i, e.j);
    erase_sorted(e.j, e.i);
    --m_;
  }

  void remove_edge(const Edge& e) { remove_edge(e.i, e.j); }

  const std::vector<int>& neighbors(int label) const {
    check_label(label);
    return adj_[static_cast<std::size_t>(label)];
  }

  int degree(int label) const {
    return static_cast<int>(neighbors(label).size());
  }

  LabeledIntSequence degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 1; v <= n_; ++v)
      d[static_cast<std::size_t>(v) - 1] = degree(v);
    return LabeledIntSequence(std::move(d));
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int v = 1; v <= n_; ++v)
      for (int u : adj_[static_cast<std::size_t>(v)])
        if (v < u) out.emplace_back(v, u);
    return out;
  }

  void check_label(int label) const {
    if (label < 1 || label > n_)
      throw IndexOutOfRangeError("label " + std::to_string(label) + " outside 1.." +
                                 std::to_string(n_));
  }

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  void insert_sorted(int v, int u) {
    auto& row = adj_[static_cast<std::size_t>(v)];
    row.insert(std::lower_bound(row.begin(), row.end(), u), u);
  }

  void erase_sorted(int v, int u) {
    auto& row = adj_[static_cast<std::size_t>(v)];
    row.erase(std::lower_bound(row.begin(), row.end(), u));
  }

  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::vector<int>> adj_;  // index 0 unused
};

// Subgraph induced by a label subset; vertex k of `graph` corresponds to
// original_labels[k-1] (ascending).
struct InducedSubgraph {
  LabeledGraph graph;
  std::vector<int> original_labels;
};

inline InducedSubgraph induced_subgraph(const LabeledGraph& g,
                                        std::span<const int> labels) {
  if (labels.empty()) throw EmptySubsetError("label subset must be nonempty");
  std::vector<int> sorted(labels.begin(), labels.end());
  for (int label : sorted) g.check_label(label);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw IndexOutOfRangeError("label subset must not repeat labels");
  LabeledGraph sub(static_cast<int>(sorted.size()));
  for (std::size_t p = 0; p < sorted.size(); ++p)
    for (std::size_t q = p + 1; q < sorted.size(); ++q)
      if (g.has_edge(sorted[p], sorted[q]))
        sub.add_edge(static_cast<int>(p) + 1, static_cast<int>(q) + 1);
  return InducedSubgraph{std::move(sub), std::move(sorted)};
}

// One edge per line, "i j", ascending.
inline std::string to_edge_list_text(const LabeledGraph& g) {
  std::string out;
  for (const Edge& e : g.edges())
    out += std::to_string(e.i) + " " + std::to_string(e.j) + "\n";
  return out;
}

}  // namespace degseq
