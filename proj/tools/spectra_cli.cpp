// spectra: rank-one spectral identities on graphs and Hermitian matrices.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spectra/automorphisms.hpp"
#include "spectra/census.hpp"
#include "spectra/census_report.hpp"
#include "spectra/characterization.hpp"
#include "spectra/counterexample.hpp"
#include "spectra/enumerate.hpp"
#include "spectra/error.hpp"
#include "spectra/graph6.hpp"
#include "spectra/graph_matrices.hpp"

namespace {

using namespace spectra;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

std::vector<MatrixKind> kinds_for(const std::string& name) {
  if (name == "all")
    return {MatrixKind::adjacency, MatrixKind::laplacian, MatrixKind::signless, MatrixKind::normalized};
  return {*parse_matrix_kind(name)};
}

CharacterizationResult run_checker(const Graph& g, MatrixKind kind, const CheckOptions& options) {
  switch (kind) {
    case MatrixKind::adjacency: return check_adjacency_distinct(g, options);
    case MatrixKind::laplacian: return check_laplacian_distinct(g, options);
    case MatrixKind::signless: return check_signless_laplacian_distinct(g, options);
    default: return check_normalized_laplacian_distinct(g, options);
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", values[i]);
    out += (i ? ", " : "") + std::string(buf);
  }
  return out;
}

json result_json(MatrixKind kind, const CharacterizationResult& r) {
  return {{"kind", std::string(to_string(kind))},
          {"identity", std::string(to_string(r.identity))},
          {"n", r.n},
          {"k", r.k},
          {"k_float", r.k_float.value_or(r.k)},
          {"k_exact", r.k_exact.value_or(r.k)},
          {"eigenvalues", r.distinct_eigenvalues},
          {"res_i", r.max_condition_i_residual()},
          {"threshold_i", r.condition_i_threshold},
          {"res_ii", r.condition_ii_residual},
          {"threshold_ii", r.condition_ii_threshold},
          {"coefficient", r.coefficient_b},
          {"expected_coefficient", r.expected_b},
          {"condition_i_ok", r.condition_i_ok},
          {"condition_ii_ok", r.condition_ii_ok},
          {"strict", r.strict},
          {"passed", r.passed},
          {"failure", r.failure}};
}

void print_result(std::ostream& os, MatrixKind kind, const CharacterizationResult& r) {
  os << to_string(kind) << ": " << (r.passed ? "PASS" : "FAIL") << "  n=" << r.n << " k=" << r.k;
  if (r.k_float) os << " (float " << *r.k_float << ")";
  os << '\n';
  os << "  distinct eigenvalues: " << join(r.distinct_eigenvalues) << '\n';
  os << "  condition (i):  max residual " << fmt(r.max_condition_i_residual()) << " <= " << fmt(r.condition_i_threshold)
     << (r.condition_i_ok ? "  ok" : "  FAILED") << '\n';
  os << "  condition (ii): residual " << fmt(r.condition_ii_residual) << " <= " << fmt(r.condition_ii_threshold)
     << (r.condition_ii_ok ? "  ok" : "  FAILED") << '\n';
  os << "  coefficient " << fmt(r.coefficient_b) << " (expected " << fmt(r.expected_b) << ")\n";
  if (!r.passed) os << "  " << r.failure << '\n';
}

int cmd_check(const std::string& text, const std::string& matrix, double tol, bool strict, const std::string& format) {
  Graph g;
  try {
    g = parse_graph6(text);
  } catch (const ParseError& e) {
    std::cerr << "error: invalid graph6: " << e.what() << '\n';
    return kExitUsage;
  }
  if (g.order() < 2) {
    std::cerr << "error: graph has " << g.order() << " vertex; checks need n >= 2\n";
    return kExitUsage;
  }
  if (!is_connected(g)) {
    std::cerr << "error: graph is disconnected\n";
    return kExitUsage;
  }
  CheckOptions options;
  options.tol = tol;
  options.strict = strict;

  bool all_ok = true;
  json report{{"graph6", write_graph6(g)}, {"n", g.order()}, {"m", g.size()}, {"checks", json::array()}};
  std::ostringstream text_out;
  text_out << "graph " << write_graph6(g) << "  n=" << g.order() << " m=" << g.size() << '\n';

  try {
    for (MatrixKind kind : kinds_for(matrix)) {
      CharacterizationResult r = run_checker(g, kind, options);
      all_ok = all_ok && r.passed;
      report["checks"].push_back(result_json(kind, r));
      print_result(text_out, kind, r);
    }
    const DiameterBound bound = check_diameter_bound(g);
    all_ok = all_ok && bound.holds;
    report["diameter_bound"] = {{"diam", bound.diameter}, {"k", bound.k}, {"ok", bound.holds}};
    text_out << "diameter bound: diam=" << bound.diameter << " <= k-1=" << bound.k - 1
             << (bound.holds ? "  ok" : "  FAILED") << '\n';

    const bool distinct = bound.k == g.order();
    if (!distinct) {
      report["involution"] = {{"applicable", false}};
      text_out << "involution condition: not applicable (adjacency spectrum has repeated eigenvalues)\n";
    } else if (g.order() > kMaxAutomorphismOrder) {
      report["involution"] = {{"applicable", true}, {"evaluated", false}};
      text_out << "involution condition: skipped (n > " << kMaxAutomorphismOrder << ")\n";
    } else {
      const bool ok = all_nonidentity_involutions(g);
      all_ok = all_ok && ok;
      report["involution"] = {{"applicable", true}, {"evaluated", true}, {"ok", ok}};
      text_out << "involution condition: " << (ok ? "ok" : "FAILED") << '\n';
    }
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    std::cerr << "error: numerical failure: " << e.what() << '\n';
    return kExitFailed;
  }
  report["passed"] = all_ok;
  if (format == "json")
    std::cout << report.dump(2) << '\n';
  else
    std::cout << text_out.str() << (all_ok ? "all checks passed" : "some checks FAILED") << '\n';
  return all_ok ? kExitOk : kExitFailed;
}

struct CensusArgs {
  std::optional<int> n;
  std::string input;
  std::string matrix = "all";
  int jobs = 1;
  std::string out;
  bool emit_records = false;
  std::string records_format = "csv";
  std::string format = "text";
  double tol = kDefaultTol;
  bool allow_n8 = false;
};

int cmd_census(const CensusArgs& args) {
  CensusOptions options;
  options.kinds = kinds_for(args.matrix);
  options.jobs = std::max(1, args.jobs);
  options.check.tol = args.tol;

  std::vector<Graph> corpus;
  if (!args.input.empty()) {
    std::ifstream in(args.input);
    if (!in) {
      std::cerr << "error: cannot read " << args.input << '\n';
      return kExitUsage;
    }
    try {
      corpus = read_graph6_corpus(in);
    } catch (const ParseError& e) {
      std::cerr << "error: " << args.input << ": " << e.what() << '\n';
      return kExitUsage;
    }
  } else if (*args.n > kMaxCensusOrder) {
    if (*args.n > kMaxCensusOrder + 1 || !args.allow_n8) {
      std::cerr << "error: census order is limited to n <= " << kMaxCensusOrder << " (n = 8 with --allow-n8)\n";
      return kExitUsage;
    }
    std::cerr << "warning: n = 8 enumerates 2^28 labeled graphs and may take many hours\n";
  }

  const bool emit = args.emit_records || !args.out.empty();
  std::ofstream out_file;
  if (!args.out.empty()) {
    out_file.open(args.out);
    if (!out_file) {
      std::cerr << "error: cannot write " << args.out << '\n';
      return kExitUsage;
    }
  }
  std::ostream& records_out = args.out.empty() ? std::cout : static_cast<std::ostream&>(out_file);
  std::ostream& summary_out = emit && args.out.empty() ? std::cerr : std::cout;

  std::optional<RecordWriter> writer;
  if (emit) writer.emplace(records_out, args.records_format == "json" ? RecordFormat::json : RecordFormat::csv);
  RecordSink sink;
  if (writer) sink = [&](const CensusRecord& r) { writer->write(r); };

  CensusSummary summary;
  try {
    summary = args.input.empty() ? run_enumeration_census(*args.n, options, sink, args.allow_n8)
                                 : run_corpus_census(corpus, options, sink);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (writer) writer->finish();
  summary_out << (args.format == "json" ? summary_to_json(summary) + "\n" : summary_to_text(summary));
  return summary.ok() ? kExitOk : kExitFailed;
}

int cmd_demo() {
  const ConverseCounterexample demo = counterexample_demo();
  std::cout << "B = " << demo.b.to_string() << '\n';
  std::cout << "f(x) = " << demo.f.to_string() << '\n';
  std::cout << "f(B) = " << demo.f_of_b.to_string() << (demo.f_of_b_matches() ? "" : "  (MISMATCH, expected "
                                                                                + demo.expected_f_of_b.to_string() + ")")
            << '\n';
  std::cout << "charpoly(B) = " << demo.charpoly_b.to_string() << '\n';
  std::cout << "charpoly(f(B)) = " << demo.charpoly_f_of_b.to_string() << '\n';
  std::cout << "charpoly(B) at 0 = " << demo.charpoly_b_at_zero.get_str()
            << (demo.charpoly_b_at_zero != 0 ? ", so 0 is not an eigenvalue of B\n" : "\n");
  std::cout << "charpoly(f(B)) at 6 = " << demo.charpoly_f_of_b_at_six.get_str()
            << (demo.charpoly_f_of_b_at_six == 0 ? ", so 6 = f(0) is an eigenvalue of f(B)\n" : "\n");
  std::cout << "spectrum of f(B): 6, 11 + 5*sqrt(5), 11 - 5*sqrt(5)\n";
  std::cout << "f(0) lies in the spectrum of f(B) while 0 is not an eigenvalue of B: an eigenvalue of f(B)\n"
               "need not be the image of an eigenvalue of B when B is not symmetric.\n";
  const bool ok = demo.reproduces();
  std::cout << (ok ? "reproduced" : "NOT reproduced") << '\n';
  return ok ? kExitOk : kExitFailed;
}

int default_jobs() {
  if (const char* env = std::getenv("SPECTRA_JOBS")) {
    try {
      const int jobs = std::stoi(env);
      if (jobs >= 1) return jobs;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid SPECTRA_JOBS=" << env << '\n';
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-one spectral identities for graph matrices"};
  app.require_subcommand(1);
  const std::vector<std::string> matrix_names{"adjacency", "laplacian", "signless", "normalized", "all"};

  std::string check_graph, check_matrix = "all", check_format = "text";
  double check_tol = kDefaultTol;
  bool check_strict = false;
  auto* check = app.add_subcommand("check", "Check one graph given in graph6");
  check->add_option("graph6", check_graph, "Graph in graph6 format")->required();
  check->add_option("--matrix", check_matrix, "Matrix kind")->check(CLI::IsMember(matrix_names));
  check->add_option("--tol", check_tol, "Relative tolerance")->check(CLI::PositiveNumber);
  check->add_flag("--strict", check_strict, "Also require all eigenvalues to be simple");
  check->add_option("--format", check_format, "Output format")->check(CLI::IsMember({"text", "json"}));

  CensusArgs census_args;
  census_args.jobs = default_jobs();
  auto* census = app.add_subcommand("census", "Check every connected labeled graph, or a graph6 corpus");
  auto* n_opt = census->add_option("--n", census_args.n, "Number of vertices (<= 7)")->check(CLI::Range(0, 11));
  auto* input_opt = census->add_option("--input", census_args.input, "graph6 file, one graph per line");
  n_opt->excludes(input_opt);
  census->add_option("--matrix", census_args.matrix, "Matrix kind")->check(CLI::IsMember(matrix_names));
  census->add_option("--jobs", census_args.jobs, "Worker threads (default: SPECTRA_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  census->add_option("--out", census_args.out, "Write per-graph records to this file");
  census->add_flag("--emit-records", census_args.emit_records, "Emit per-graph records");
  census->add_option("--records-format", census_args.records_format, "Record format")
      ->check(CLI::IsMember({"csv", "json"}));
  census->add_option("--format", census_args.format, "Summary format")->check(CLI::IsMember({"text", "json"}));
  census->add_option("--tol", census_args.tol, "Relative tolerance")->check(CLI::PositiveNumber);
  census->add_flag("--allow-n8", census_args.allow_n8, "Permit n = 8 (slow)");

  auto* demo = app.add_subcommand("demo", "Reproduce the non-symmetric converse counterexample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(check_graph, check_matrix, check_tol, check_strict, check_format);
    if (census->parsed()) {
      if (!census_args.n && census_args.input.empty()) {
        std::cerr << "error: census needs --n or --input\n";
        return kExitUsage;
      }
      return cmd_census(census_args);
    }
    if (demo->parsed()) return cmd_demo();
  } catch (const spectra::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
