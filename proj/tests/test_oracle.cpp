#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <string>
#include <vector>

#include "degseq/degree_sequence.hpp"
#include "degseq/errors.hpp"
#include "degseq/graph.hpp"
#include "degseq/oracle.hpp"

using namespace degseq;

TEST_CASE("realization enumeration") {
  const auto count = [](const char* text) {
    return count_realizations(DegreeSequence::parse(text), std::nullopt);
  };
  CHECK(count("4,4,3,3,3,1") == 9);
  CHECK(count("1,1,1,1") == 3);
  CHECK(count("2,2,1,1") == 2);
  CHECK(count("2,1,1") == 1);
  CHECK(count("3,2,2,1") == 1);
  CHECK(count("2,2,2") == 1);
  CHECK(count("5,5,5,5,5,5") == 1);
  CHECK(count("0,0,0") == 1);
  CHECK(count("3,3,2,2,1,1") == 17);

  SECTION("graphs realize the sequence, in strictly increasing edge order") {
    const DegreeSequence a = DegreeSequence::parse("4,4,3,3,3,1");
    const auto graphs = enumerate_realizations(a, std::nullopt);
    REQUIRE(graphs.size() == 9);
    std::vector<std::vector<Edge>> edge_lists;
    for (const LabeledGraph& g : graphs) {
      for (int v = 1; v <= a.size(); ++v) CHECK(g.degree(v) == a.degree(v));
      edge_lists.push_back(g.edges());
    }
    for (std::size_t k = 1; k < edge_lists.size(); ++k)
      CHECK(edge_lists[k - 1] < edge_lists[k]);
  }

  SECTION("exact enumeration of a two-realization sequence") {
    const auto graphs =
        enumerate_realizations(DegreeSequence::parse("2,2,1,1"), std::nullopt);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0].edges() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 4}});
    CHECK(graphs[1].edges() == std::vector<Edge>{{1, 2}, {1, 4}, {2, 3}});
  }

  SECTION("limits and early stop") {
    const DegreeSequence a = DegreeSequence::parse("4,4,3,3,3,1");
    CHECK(enumerate_realizations(a, 4).size() == 4);
    CHECK(count_realizations(a, 4) == 4);
    int visited = 0;
    for_each_realization(a, [&visited](const LabeledGraph&) {
      return ++visited < 3;
    });
    CHECK(visited == 3);
  }

  SECTION("guards") {
    CHECK_THROWS_AS(count_realizations(DegreeSequence::parse("3,3,1,1"), 1),
                    NotGraphicError);
    const std::vector<int> wide(11, 0);
    CHECK_THROWS_AS(count_realizations(DegreeSequence(wide), 1), TooLargeError);
  }
}

TEST_CASE("isomorphism testing") {
  const auto p4 = LabeledGraph(4, std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}});
  const auto p4_relabeled =
      LabeledGraph(4, std::vector<Edge>{{2, 4}, {1, 4}, {1, 3}});
  const auto star = LabeledGraph(4, std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}});
  CHECK(is_isomorphic(p4, p4_relabeled));
  CHECK_FALSE(is_isomorphic(p4, star));
  CHECK_FALSE(is_isomorphic(p4, LabeledGraph(5)));

  // both 2-regular: colour refinement alone cannot split these
  const auto c6 = LabeledGraph(
      6, std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
  const auto two_triangles = LabeledGraph(
      6, std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
  CHECK_FALSE(is_isomorphic(c6, two_triangles));
  CHECK(is_isomorphic(c6, c6));

  const auto classes = [](const char* text) {
    const auto graphs =
        enumerate_realizations(DegreeSequence::parse(text), std::nullopt);
    return isomorphism_class_count(graphs);
  };
  CHECK(classes("4,4,3,3,3,1") == 2);
  CHECK(classes("1,1,1,1") == 1);
  CHECK(classes("2,2,1,1") == 1);
  CHECK(classes("3,3,2,2,1,1") == 5);
}

TEST_CASE("graphic sequence enumeration") {
  const std::array<std::size_t, 8> counts{1, 2, 4, 11, 31, 102, 342, 1213};
  for (int n = 1; n <= 8; ++n) {
    const auto seqs = enumerate_graphic_sequences(n);
    CHECK(seqs.size() == counts[static_cast<std::size_t>(n) - 1]);
    CHECK(seqs.front().values() == std::vector<int>(static_cast<std::size_t>(n), n - 1));
    CHECK(seqs.back().values() == std::vector<int>(static_cast<std::size_t>(n), 0));
    for (std::size_t k = 1; k < seqs.size(); ++k)
      CHECK(seqs[k - 1].values() > seqs[k].values());  // descending lex
  }
  CHECK_THROWS_AS(enumerate_graphic_sequences(0), PreconditionError);
  CHECK_THROWS_AS(enumerate_graphic_sequences(9), TooLargeError);
}

TEST_CASE("edge set oracles") {
  const DegreeSequence a = DegreeSequence::parse("2,1,1");
  CHECK(forced_set_oracle(a) == std::vector<Edge>{{1, 2}, {1, 3}});
  CHECK(forbidden_set_oracle(a) == std::vector<Edge>{{2, 3}});
  CHECK(forced_set_oracle(DegreeSequence::parse("1,1,1,1")).empty());
}

namespace {

struct RowExpectation {
  const char* name;
  std::int64_t checks;
  std::int64_t failures;
};

// Row counts for every sweep size, pinned after hand-verifying the failing
// cases (the bound defect at <1,1>, the forced-clique gap at a dominating
// vertex, and the joint-neighbourhood clique gap at <5,5,4,3,3,1,1>).
const std::vector<std::vector<RowExpectation>> kExpected{
    // n=1
    {{"oracle_equivalence", 1, 0},
     {"duality", 1, 0},
     {"corner_and_disjointness", 1, 0},
     {"threshold_structure", 1, 0},
     {"threshold_sequence", 1, 0},
     {"monotonicity", 0, 0},
     {"bound_theorem", 0, 0},
     {"induced_persistence", 0, 0},
     {"independence_structure", 0, 0},
     {"clique_structure", 0, 0},
     {"forced_clique", 0, 0},
     {"diameter_bound", 0, 0},
     {"edge_connectivity", 0, 0}},
    // n=2
    {{"oracle_equivalence", 2, 0},
     {"duality", 2, 0},
     {"corner_and_disjointness", 2, 0},
     {"threshold_structure", 2, 0},
     {"threshold_sequence", 2, 0},
     {"monotonicity", 0, 0},
     {"bound_theorem", 1, 1},
     {"induced_persistence", 1, 0},
     {"independence_structure", 1, 0},
     {"clique_structure", 0, 0},
     {"forced_clique", 0, 0},
     {"diameter_bound", 1, 0},
     {"edge_connectivity", 2, 0}},
    // n=3
    {{"oracle_equivalence", 4, 0},
     {"duality", 4, 0},
     {"corner_and_disjointness", 4, 0},
     {"threshold_structure", 4, 0},
     {"threshold_sequence", 4, 0},
     {"monotonicity", 0, 0},
     {"bound_theorem", 2, 0},
     {"induced_persistence", 6, 0},
     {"independence_structure", 6, 0},
     {"clique_structure", 0, 0},
     {"forced_clique", 1, 0},
     {"diameter_bound", 2, 0},
     {"edge_connectivity", 4, 0}},
    // n=4
    {{"oracle_equivalence", 11, 0},
     {"duality", 11, 0},
     {"corner_and_disjointness", 11, 0},
     {"threshold_structure", 11, 0},
     {"threshold_sequence", 11, 0},
     {"monotonicity", 4, 0},
     {"bound_theorem", 7, 0},
     {"induced_persistence", 26, 0},
     {"independence_structure", 26, 0},
     {"clique_structure", 2, 0},
     {"forced_clique", 8, 0},
     {"diameter_bound", 6, 0},
     {"edge_connectivity", 16, 0}},
    // n=5
    {{"oracle_equivalence", 31, 0},
     {"duality", 31, 0},
     {"corner_and_disjointness", 31, 0},
     {"threshold_structure", 31, 0},
     {"threshold_sequence", 31, 0},
     {"monotonicity", 35, 0},
     {"bound_theorem", 20, 0},
     {"induced_persistence", 134, 0},
     {"independence_structure", 134, 0},
     {"clique_structure", 18, 0},
     {"forced_clique", 36, 0},
     {"diameter_bound", 24, 0},
     {"edge_connectivity", 84, 0}},
    // n=6
    {{"oracle_equivalence", 102, 0},
     {"duality", 102, 0},
     {"corner_and_disjointness", 102, 0},
     {"threshold_structure", 102, 0},
     {"threshold_sequence", 102, 0},
     {"monotonicity", 326, 0},
     {"bound_theorem", 71, 0},
     {"induced_persistence", 882, 0},
     {"independence_structure", 882, 0},
     {"clique_structure", 194, 0},
     {"forced_clique", 161, 5},
     {"diameter_bound", 154, 0},
     {"edge_connectivity", 936, 0}},
    // n=7
    {{"oracle_equivalence", 342, 0},
     {"duality", 342, 0},
     {"corner_and_disjointness", 342, 0},
     {"threshold_structure", 342, 0},
     {"threshold_sequence", 342, 0},
     {"monotonicity", 2720, 0},
     {"bound_theorem", 240, 0},
     {"induced_persistence", 8835, 0},
     {"independence_structure", 8835, 0},
     {"clique_structure", 1455, 4},
     {"forced_clique", 661, 51},
     {"diameter_bound", 1330, 0},
     {"edge_connectivity", 16758, 0}},
};

const std::int64_t kSequenceCounts[]{1, 2, 4, 11, 31, 102, 342};

}  // namespace

TEST_CASE("verification sweep, frozen per-theorem results") {
  for (int n = 1; n <= 7; ++n) {
    const VerificationReport report = verify_all(n);
    CHECK(report.n == n);
    CHECK(report.sequences_checked == kSequenceCounts[n - 1]);
    const auto& expected = kExpected[static_cast<std::size_t>(n) - 1];
    REQUIRE(report.theorems.size() == expected.size());
    for (std::size_t r = 0; r < expected.size(); ++r) {
      CAPTURE(n, expected[r].name);
      CHECK(report.theorems[r].name == expected[r].name);
      CHECK(report.theorems[r].checks == expected[r].checks);
      CHECK(report.theorems[r].failures == expected[r].failures);
      CHECK(report.theorems[r].first_counterexample.has_value() ==
            (expected[r].failures > 0));
    }
    CHECK(report.all_pass() == (n != 2 && n != 6 && n != 7));
  }
}

TEST_CASE("verification counterexamples are reported verbatim") {
  const auto row = [](const VerificationReport& report, const char* name) {
    for (const TheoremResult& t : report.theorems)
      if (t.name == name) return t;
    FAIL("missing row");
    return TheoremResult{};
  };

  const VerificationReport at2 = verify_all(2);
  CHECK(row(at2, "bound_theorem").first_counterexample ==
        "1,1: bound_excludes_forced is true but forced set is {(1,2)}");

  const VerificationReport at6 = verify_all(6);
  CHECK(row(at6, "forced_clique").first_counterexample ==
        "5,4,2,2,2,1: forbidden (2,6) promises a forced clique of 4 but only 3 "
        "found");

  const VerificationReport at7 = verify_all(7);
  CHECK(row(at7, "forced_clique").first_counterexample ==
        "6,6,5,3,3,3,2: forbidden (3,7) promises a forced clique of 5 but only "
        "4 found");
  CHECK(row(at7, "clique_structure").first_counterexample ==
        "5,5,4,3,3,1,1: realization "
        "{(1,2),(1,3),(1,4),(1,5),(1,6),(2,3),(2,4),(2,5),(2,7),(3,4),(3,5)}: "
        "joint neighbourhood of forbidden (3,6) is not a clique");
}

TEST_CASE("verification output is independent of the worker count") {
  CHECK(to_text(verify_all(5, 1)) == to_text(verify_all(5, 4)));
  CHECK(to_text(verify_all(7, 1)) == to_text(verify_all(7, 3)));
  CHECK(to_text(verify_all(3, 16)) == to_text(verify_all(3, 1)));
}

TEST_CASE("verification report text") {
  const std::string text = to_text(verify_all(4));
  CHECK(text.find("verification sweep: n=4, 11 sequences") != std::string::npos);
  CHECK(text.find("result: all theorems hold") != std::string::npos);

  const std::string failing = to_text(verify_all(2));
  CHECK(failing.find("bound_theorem            FAIL  1 checks, 1 failures") !=
        std::string::npos);
  CHECK(failing.find("    first counterexample: 1,1: bound_excludes_forced "
                     "is true but forced set is {(1,2)}") != std::string::npos);
  CHECK(failing.find("result: counterexample found") != std::string::npos);
}

TEST_CASE("verification guards") {
  CHECK_THROWS_AS(verify_all(0), PreconditionError);
  CHECK_THROWS_AS(verify_all(8), TooLargeError);
  CHECK(to_text(verify_all(3, 0)) == to_text(verify_all(3, 1)));  // clamped
}
