#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "degseq/degseq.hpp"
#include "degseq/json_io.hpp"

namespace {

using degseq::AnalysisReport;
using degseq::DegreeSequence;
using degseq::Edge;
using degseq::Json;
using degseq::LabeledGraph;
using degseq::LabeledIntSequence;

std::string join_args(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ",";
    out += parts[i];
  }
  return out;
}

DegreeSequence sequence_from_args(const std::vector<std::string>& parts) {
  return DegreeSequence(degseq::parse_sequence(join_args(parts)));
}

int jobs_from_environment() {
  if (const char* env = std::getenv("DEGSEQ_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 256) return static_cast<int>(v);
  }
  return 1;
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_analyze(const std::vector<std::string>& args, const std::string& format) {
  const AnalysisReport report = degseq::analyze(sequence_from_args(args));
  if (format == "json")
    emit(degseq::to_json(report));
  else
    std::cout << degseq::to_text(report);
  return 0;
}

int run_sample(const std::vector<std::string>& args, const std::string& format,
               const std::string& method, std::uint64_t steps, std::uint64_t seed) {
  const DegreeSequence a = sequence_from_args(args);
  const LabeledGraph g = method == "sis" ? degseq::sis_sample(a, seed)
                                         : degseq::mcmc_sample(a, steps, seed);
  if (format == "json")
    emit(degseq::to_json(g));
  else
    std::cout << degseq::to_edge_list_text(g);
  return 0;
}

int run_enumerate(const std::vector<std::string>& args, const std::string& format,
                  std::uint64_t limit) {
  const DegreeSequence a = sequence_from_args(args);
  const std::optional<std::uint64_t> cap =
      limit > 0 ? std::optional<std::uint64_t>(limit) : std::nullopt;
  const std::vector<LabeledGraph> graphs = degseq::enumerate_realizations(a, cap);
  const bool truncated = cap && graphs.size() == *cap &&
                         degseq::count_realizations(a, *cap + 1) > *cap;
  if (format == "json") {
    Json realizations = Json::array();
    for (const LabeledGraph& g : graphs) {
      Json edges = Json::array();
      for (const Edge& e : g.edges()) edges.push_back(Json::array({e.i, e.j}));
      realizations.push_back(std::move(edges));
    }
    emit(Json{{"n", a.size()},
              {"count", graphs.size()},
              {"truncated", truncated},
              {"realizations", std::move(realizations)}});
  } else {
    for (const LabeledGraph& g : graphs) {
      std::string line;
      for (const Edge& e : g.edges()) {
        if (!line.empty()) line += " ";
        line += std::to_string(e.i) + "-" + std::to_string(e.j);
      }
      std::cout << (line.empty() ? "(no edges)" : line) << "\n";
    }
    std::cout << "count: " << graphs.size() << (truncated ? " (truncated)" : "")
              << "\n";
  }
  return 0;
}

int run_verify(int n, int jobs, const std::string& format) {
  const degseq::VerificationReport report = degseq::verify_all(n, jobs);
  if (format == "json")
    emit(degseq::to_json(report));
  else
    std::cout << degseq::to_text(report);
  return report.all_pass() ? 0 : 1;
}

int run_pack_check(const std::string& first, const std::string& second, bool pad,
                   const std::string& format) {
  std::vector<int> a = degseq::parse_sequence(first);
  std::vector<int> b = degseq::parse_sequence(second);
  if (pad) {
    const std::size_t n = std::max(a.size(), b.size());
    a.resize(n, 0);
    b.resize(n, 0);
  }
  const std::optional<Edge> shared =
      degseq::packing_obstruction(LabeledIntSequence(a), LabeledIntSequence(b));
  if (format == "json") {
    emit(Json{{"obstruction", shared ? Json::array({shared->i, shared->j})
                                     : Json(nullptr)}});
  } else if (shared) {
    std::cout << "shared forced edge " << shared->str() << ": cannot pack\n";
  } else {
    std::cout << "no shared-forced-edge obstruction\n";
  }
  return 0;
}

int run_complement(const std::vector<std::string>& args, const std::string& format) {
  const DegreeSequence a = sequence_from_args(args);
  const DegreeSequence c = degseq::complement(a);
  if (format == "json")
    emit(Json{{"sequence", a.values()}, {"complement", c.values()}});
  else
    std::cout << c.str() << "\n";
  return 0;
}

int run_majorize(const std::string& first, const std::string& second,
                 const std::string& format) {
  const DegreeSequence a = DegreeSequence::parse(first);
  const DegreeSequence b = DegreeSequence::parse(second);
  const degseq::Majorization rel = degseq::majorizes(a, b);
  if (format == "json")
    emit(Json{{"relation", std::string(degseq::to_string(rel))}});
  else
    std::cout << degseq::to_string(rel) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"forced and forbidden edges of graphic degree sequences"};
  app.require_subcommand(1);

  const auto add_format = [](CLI::App* cmd, std::string& slot) {
    cmd->add_option("--format", slot, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
  };

  std::vector<std::string> analyze_args;
  std::string analyze_format;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "forced/forbidden edge report for a degree sequence");
  analyze->add_option("sequence", analyze_args, "degree sequence")->required();
  add_format(analyze, analyze_format);

  std::vector<std::string> sample_args;
  std::string sample_format;
  std::string sample_method = "mcmc";
  std::uint64_t sample_steps = 1000;
  std::uint64_t sample_seed = 0;
  CLI::App* sample = app.add_subcommand("sample", "sample one realization");
  sample->add_option("sequence", sample_args, "degree sequence")->required();
  sample->add_option("--method", sample_method, "sampler")
      ->check(CLI::IsMember({"mcmc", "sis"}))
      ->default_val("mcmc");
  sample->add_option("--steps", sample_steps, "two-switch steps (mcmc only)")
      ->default_val(1000);
  sample->add_option("--seed", sample_seed, "random seed")->default_val(0);
  add_format(sample, sample_format);

  std::vector<std::string> enum_args;
  std::string enum_format;
  std::uint64_t enum_limit = 0;
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "list every labeled realization");
  enumerate->add_option("sequence", enum_args, "degree sequence")->required();
  enumerate->add_option("--limit", enum_limit, "stop after this many realizations")
      ->default_val(0);
  add_format(enumerate, enum_format);

  int verify_n = 0;
  int verify_jobs = jobs_from_environment();
  std::string verify_format;
  CLI::App* verify =
      app.add_subcommand("verify", "exhaustively verify the theorems at length n");
  verify->add_option("--n", verify_n, "sequence length (1..7)")->required();
  verify->add_option("--jobs", verify_jobs, "worker threads (default $DEGSEQ_JOBS or 1)");
  add_format(verify, verify_format);

  std::string pack_first;
  std::string pack_second;
  bool pack_pad = false;
  std::string pack_format;
  CLI::App* pack = app.add_subcommand(
      "pack-check", "report a shared forced edge blocking any packing");
  pack->add_option("first", pack_first, "first labeled sequence")->required();
  pack->add_option("second", pack_second, "second labeled sequence")->required();
  pack->add_flag("--pad", pack_pad, "zero-pad the shorter sequence");
  add_format(pack, pack_format);

  std::vector<std::string> comp_args;
  std::string comp_format;
  CLI::App* comp = app.add_subcommand("complement", "complement degree sequence");
  comp->add_option("sequence", comp_args, "degree sequence")->required();
  add_format(comp, comp_format);

  std::string maj_first;
  std::string maj_second;
  std::string maj_format;
  CLI::App* majorize = app.add_subcommand("majorize", "compare two sequences");
  majorize->add_option("first", maj_first, "left sequence")->required();
  majorize->add_option("second", maj_second, "right sequence")->required();
  add_format(majorize, maj_format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(analyze)) return run_analyze(analyze_args, analyze_format);
    if (app.got_subcommand(sample))
      return run_sample(sample_args, sample_format, sample_method, sample_steps,
                        sample_seed);
    if (app.got_subcommand(enumerate))
      return run_enumerate(enum_args, enum_format, enum_limit);
    if (app.got_subcommand(verify))
      return run_verify(verify_n, verify_jobs, verify_format);
    if (app.got_subcommand(pack))
      return run_pack_check(pack_first, pack_second, pack_pad, pack_format);
    if (app.got_subcommand(comp)) return run_complement(comp_args, comp_format);
    if (app.got_subcommand(majorize))
      return run_majorize(maj_first, maj_second, maj_format);
  } catch (const degseq::NotGraphicError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const degseq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
