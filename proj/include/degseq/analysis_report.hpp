#pragma once

#include <optional>
#include <string>
#include <vector>

#include "degseq/degree_sequence.hpp"
#include "degseq/forced_sets.hpp"

namespace degseq {

// Everything the edge-set analysis derives from one graphic sequence.
struct AnalysisReport {
  DegreeSequence sequence;
  StaircaseEdgeSet forced;
  StaircaseEdgeSet forbidden;
  std::vector<int> forced_vertices;
  bool is_threshold = false;
  int max_forced_clique = 1;
  std::optional<bool> bound_excludes_forced;  // nullopt when min degree is 0

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

inline AnalysisReport analyze(const DegreeSequence& a) {
  if (!is_graphic(a)) throw NotGraphicError("sequence " + a.str() + " is not graphic");
  AnalysisReport report{a, forced_set(a), forbidden_set(a), forced_vertices(a),
                        is_threshold_sequence(a), max_forced_clique_size(a),
                        std::nullopt};
  if (a.values().back() > 0)
    report.bound_excludes_forced = bound_excludes_forced(a);
  return report;
}

inline std::string to_text(const AnalysisReport& report) {
  const auto edges_line = [](const std::vector<Edge>& edges) {
    if (edges.empty()) return std::string("(none)");
    std::string out;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (k > 0) out += " ";
      out += edges[k].str();
    }
    return out;
  };
  const int n = report.sequence.size();
  std::string out;
  out += "sequence: " + report.sequence.str() + " (n=" + std::to_string(n) +
         ", m=" + std::to_string(report.sequence.degree_sum() / 2) + ")\n";
  out += "forced edges (" + std::to_string(report.forced.size()) +
         "): " + edges_line(report.forced.edges()) + "\n";
  out += "forbidden edges (" + std::to_string(report.forbidden.size()) +
         "): " + edges_line(report.forbidden.edges()) + "\n";
  std::string verts = "{";
  for (std::size_t k = 0; k < report.forced_vertices.size(); ++k) {
    if (k > 0) verts += ",";
    verts += std::to_string(report.forced_vertices[k]);
  }
  verts += "}";
  out += "forced vertices: " + verts + "\n";
  out += std::string("threshold sequence: ") + (report.is_threshold ? "yes" : "no") +
         "\n";
  out += "max forced clique: " + std::to_string(report.max_forced_clique) + "\n";
  out += std::string("bound excludes forced: ") +
         (report.bound_excludes_forced
              ? (*report.bound_excludes_forced ? "yes" : "no")
              : "n/a") +
         "\n";
  return out;
}

}  // namespace degseq
