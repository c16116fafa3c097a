#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "degseq/analysis_report.hpp"
#include "degseq/graph.hpp"
#include "degseq/oracle.hpp"

namespace degseq {

// Insertion-ordered documents keep the serialized byte stream stable.
using Json = nlohmann::ordered_json;

inline Json to_json(const Edge& e) { return Json::array({e.i, e.j}); }

inline Json edges_to_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(to_json(e));
  return out;
}

inline Json to_json(const LabeledGraph& g) {
  Json adjacency = Json::array();
  for (int v = 1; v <= g.size(); ++v) adjacency.push_back(g.neighbors(v));
  return Json{{"n", g.size()},
              {"edge_count", g.edge_count()},
              {"adjacency", std::move(adjacency)}};
}

inline Json to_json(const AnalysisReport& report) {
  Json out;
  out["sequence"] = report.sequence.values();
  out["forced_edges"] = edges_to_json(report.forced.edges());
  out["forbidden_edges"] = edges_to_json(report.forbidden.edges());
  out["forced_vertices"] = report.forced_vertices;
  out["is_threshold"] = report.is_threshold;
  out["max_forced_clique"] = report.max_forced_clique;
  if (report.bound_excludes_forced)
    out["bound_excludes_forced"] = *report.bound_excludes_forced;
  else
    out["bound_excludes_forced"] = nullptr;
  return out;
}

inline std::vector<Edge> edges_from_json(const Json& array) {
  std::vector<Edge> out;
  for (const Json& item : array) {
    if (!item.is_array() || item.size() != 2)
      throw ParseError("edge must be a two-element array", 0);
    out.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  return out;
}

inline AnalysisReport report_from_json(const Json& doc) {
  const DegreeSequence sequence(doc.at("sequence").get<std::vector<int>>());
  const int n = sequence.size();
  const std::vector<Edge> forced = edges_from_json(doc.at("forced_edges"));
  const std::vector<Edge> forbidden = edges_from_json(doc.at("forbidden_edges"));
  AnalysisReport report{
      sequence,
      StaircaseEdgeSet::from_edges(n, EdgeSetKind::Forced, forced),
      StaircaseEdgeSet::from_edges(n, EdgeSetKind::Forbidden, forbidden),
      doc.at("forced_vertices").get<std::vector<int>>(),
      doc.at("is_threshold").get<bool>(),
      doc.at("max_forced_clique").get<int>(),
      std::nullopt};
  if (!doc.at("bound_excludes_forced").is_null())
    report.bound_excludes_forced = doc.at("bound_excludes_forced").get<bool>();
  return report;
}

inline Json to_json(const VerificationReport& report) {
  Json theorems = Json::array();
  for (const TheoremResult& t : report.theorems) {
    Json row{{"name", t.name}, {"checks", t.checks}, {"failures", t.failures}};
    if (t.first_counterexample)
      row["first_counterexample"] = *t.first_counterexample;
    else
      row["first_counterexample"] = nullptr;
    theorems.push_back(std::move(row));
  }
  return Json{{"n", report.n},
              {"sequences_checked", report.sequences_checked},
              {"all_pass", report.all_pass()},
              {"theorems", std::move(theorems)}};
}

}  // namespace degseq
