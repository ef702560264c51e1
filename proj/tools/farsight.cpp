// farsight: batch CLI over the stable-marriage solvers.
//
//   solve    run one algorithm on an instance file (or stdin)
//   compare  per-boy table of all four algorithms with divergence flags
//   verify   seeded property sweep; exit 1 and a JSON report on failure
//   bench    scaling sweep, CSV output
//   gen      print a seeded random instance in the text format
//
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "farsight/farsight.hpp"

using nlohmann::json;
using namespace farsight;

namespace {

constexpr int kSchemaVersion = 1;

std::optional<Algorithm> algorithm_from_name(const std::string& name) {
  if (name == "gs") return Algorithm::Gs;
  if (name == "farsighted-ref") return Algorithm::FarsightedRef;
  if (name == "farsighted-linear") return Algorithm::FarsightedLinear;
  if (name == "ttc") return Algorithm::Ttc;
  return std::nullopt;
}

Instance load_instance(const std::string& path, bool allow_partial) {
  if (path == "-") return parse_instance(std::cin, allow_partial);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_instance(in, allow_partial);
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("FARSIGHT_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 1;
}

json matching_to_json(const Matching& m) {
  json arr = json::array();
  for (Index g : m.match_of_boy)
    arr.push_back(g == UNMATCHED ? json(nullptr) : json(g));
  return json{{"schema_version", kSchemaVersion},
              {"n", m.match_of_boy.size()},
              {"match_of_boy", arr}};
}

void print_matching_text(const Matching& m, std::ostream& out) {
  for (std::size_t b = 0; b < m.match_of_boy.size(); ++b) {
    out << 'b' << b << '-';
    if (m.match_of_boy[b] == UNMATCHED)
      out << '?';
    else
      out << 'g' << m.match_of_boy[b];
    out << (b + 1 == m.match_of_boy.size() ? '\n' : ' ');
  }
}

int cmd_solve(const std::string& algo_name, const std::string& input,
              const std::string& format, bool allow_partial, bool trace,
              bool audit) {
  auto algo = algorithm_from_name(algo_name);
  if (!algo) {
    std::cerr << "unknown algorithm: " << algo_name << "\n";
    return 3;
  }
  if (trace && *algo != Algorithm::Gs) {
    std::cerr << "--trace is only valid with --algorithm gs\n";
    return 3;
  }
  if (audit && *algo != Algorithm::FarsightedLinear) {
    std::cerr << "--audit is only valid with --algorithm farsighted-linear\n";
    return 3;
  }

  Instance inst = load_instance(input, allow_partial);
  Matching m;
  std::string trace_text;
  if (*algo == Algorithm::Gs) {
    GsResult gs = solve_gs(inst);
    m = gs.matching;
    if (trace) trace_text = render_trace(gs.trace);
  } else if (*algo == Algorithm::FarsightedLinear) {
    m = solve_farsighted_linear(inst, audit);
  } else {
    m = run_algorithm(*algo, inst);
  }

  if (format == "json") {
    json out = matching_to_json(m);
    if (trace) out["trace"] = trace_text;
    std::cout << out.dump(2) << "\n";
  } else {
    print_matching_text(m, std::cout);
    if (trace) std::cout << trace_text << "\n";
  }
  return 0;
}

int cmd_compare(const std::string& input, bool allow_partial) {
  Instance inst = load_instance(input, allow_partial);
  const Algorithm algos[] = {Algorithm::Gs, Algorithm::FarsightedRef,
                             Algorithm::FarsightedLinear, Algorithm::Ttc};
  std::vector<Matching> results;
  for (Algorithm a : algos) results.push_back(run_algorithm(a, inst));

  std::cout << "boy";
  for (Algorithm a : algos) std::cout << '\t' << algorithm_name(a);
  std::cout << "\tflags\n";
  bool ttc_diverges = false;
  for (Index b = 0; b < inst.n(); ++b) {
    std::cout << 'b' << b;
    for (const Matching& m : results) {
      Index g = m.match_of_boy[static_cast<std::size_t>(b)];
      std::cout << "\tg" << g << "(r" << rank_in_boy_list(inst, b, g) << ')';
    }
    std::string flags;
    Index g_lin = results[2].match_of_boy[static_cast<std::size_t>(b)];
    if (results[1].match_of_boy[static_cast<std::size_t>(b)] != g_lin)
      flags += " REF!=LIN";
    if (results[3].match_of_boy[static_cast<std::size_t>(b)] != g_lin) {
      flags += " TTC!=FAR";
      ttc_diverges = true;
    }
    std::cout << '\t' << (flags.empty() ? "-" : flags) << '\n';
  }
  if (ttc_diverges)
    std::cout << "# ttc and farsighted matchings diverge on this instance\n";
  return 0;
}

int cmd_verify(int count, Index nmax, std::uint64_t seed,
               const std::string& report_path) {
  json failures = json::array();
  auto record = [&failures](const Instance& inst, std::uint64_t inst_seed,
                            const std::string& check,
                            const std::string& detail) {
    failures.push_back(json{{"seed", inst_seed},
                            {"n", inst.n()},
                            {"check", check},
                            {"detail", detail},
                            {"instance", serialize_instance(inst)}});
  };

  for (int i = 0; i < count; ++i) {
    std::uint64_t inst_seed = seed + static_cast<std::uint64_t>(i);
    Index n = 2 + static_cast<Index>(inst_seed % static_cast<std::uint64_t>(
                                                     nmax - 1));
    Instance inst = gen_random_instance(n, inst_seed);

    Matching ref = solve_farsighted_ref(inst);
    Matching lin = solve_farsighted_linear(inst);
    if (!(ref == lin))
      record(inst, inst_seed, "differential", "ref != linear");
    if (Verdict v = check_theorem1(inst); !v.pass)
      record(inst, inst_seed, "theorem1", v.detail);
    if (Verdict v = check_theorem2(inst); !v.pass)
      record(inst, inst_seed, "theorem2", v.detail);
    if (Verdict v = check_uniqueness(inst); !v.pass)
      record(inst, inst_seed, "uniqueness", v.detail);
    Matching gs = solve_gs(inst).matching;
    if (!is_strictly_stable(inst, gs))
      record(inst, inst_seed, "gs-stability", "blocking pair in GS output");
  }

  json report{{"schema_version", kSchemaVersion},
              {"checked", count},
              {"failures", failures}};
  std::string text = report.dump(2);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    out << text << "\n";
  } else {
    std::cout << text << "\n";
  }
  return failures.empty() ? 0 : 1;
}

int cmd_bench(const std::string& algo_name, std::vector<Index> n_values,
              int repeats, std::uint64_t seed, const std::string& out_path) {
  auto algo = algorithm_from_name(algo_name);
  if (!algo) {
    std::cerr << "unknown algorithm: " << algo_name << "\n";
    return 3;
  }
  auto rows = run_scaling(*algo, n_values, repeats, seed);
  if (out_path.empty()) {
    write_scaling_csv(rows, std::cout);
  } else {
    std::ofstream out(out_path);
    write_scaling_csv(rows, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stable-marriage solvers: deferred acceptance, farsighted "
               "collusion (reference and linear), top trading cycles"};
  app.require_subcommand(1);

  std::string algo = "farsighted-linear", input = "-", format = "text";
  std::string out_path, report_path;
  bool allow_partial = false, trace = false, audit = false;
  int count = 1000, repeats = 5;
  Index gen_n = 8, nmax = 10;
  std::uint64_t seed = default_seed();

  auto* solve = app.add_subcommand("solve", "solve one instance");
  solve->add_option("--algorithm", algo,
                    "gs | farsighted-ref | farsighted-linear | ttc");
  solve->add_option("--input", input, "instance file, '-' for stdin");
  solve->add_option("--format", format, "text | json");
  solve->add_flag("--allow-partial", allow_partial,
                  "complete partial preference rows");
  solve->add_flag("--trace", trace, "print the proposal play (gs only)");
  solve->add_flag("--audit", audit,
                  "per-step state audits (farsighted-linear only)");

  auto* compare = app.add_subcommand("compare", "all four algorithms, per-boy");
  compare->add_option("--input", input, "instance file, '-' for stdin");
  compare->add_flag("--allow-partial", allow_partial,
                    "complete partial preference rows");

  auto* verify = app.add_subcommand("verify", "seeded property sweep");
  verify->add_option("--count", count, "number of instances");
  verify->add_option("--nmax", nmax, "max n (instances use n in 2..nmax)");
  verify->add_option("--seed", seed, "base seed (default env FARSIGHT_SEED)");
  verify->add_option("--report", report_path, "write JSON report here");

  auto* bench = app.add_subcommand("bench", "scaling sweep, CSV");
  std::vector<Index> n_values{500, 1000, 2000};
  bench->add_option("--algorithm", algo,
                    "gs | farsighted-ref | farsighted-linear | ttc");
  bench->add_option("--n", n_values, "instance sizes");
  bench->add_option("--repeats", repeats, "runs per size (median taken)");
  bench->add_option("--seed", seed, "base seed");
  bench->add_option("--out", out_path, "CSV file (default stdout)");

  auto* gen = app.add_subcommand("gen", "print a random instance");
  gen->add_option("--n", gen_n, "instance size");
  gen->add_option("--seed", seed, "seed (default env FARSIGHT_SEED)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (solve->parsed())
      return cmd_solve(algo, input, format, allow_partial, trace, audit);
    if (compare->parsed()) return cmd_compare(input, allow_partial);
    if (verify->parsed()) return cmd_verify(count, nmax, seed, report_path);
    if (bench->parsed())
      return cmd_bench(algo, n_values, repeats, seed, out_path);
    if (gen->parsed()) {
      std::cout << serialize_instance(gen_random_instance(gen_n, seed));
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 3;
}
