#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hkcut/enumerate.hpp"
#include "hkcut/instance_io.hpp"
#include "hkcut/oracle.hpp"
#include "hkcut/report_json.hpp"
#include "hkcut/terminal_cut.hpp"
#include "hkcut/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

hkcut::Hypergraph load(const std::string& path) { return hkcut::parse_instance(read_input(path)); }

/// Comma-separated 1-indexed vertices, e.g. "1,4,7".
hkcut::VertexSet parse_vertex_list(const std::string& text, int n, const char* what) {
  hkcut::VertexSet out(n);
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    size_t used = 0;
    long v = 0;
    try {
      v = std::stol(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || v < 1 || v > n) {
      throw std::invalid_argument(std::string(what) + ": bad vertex '" + token +
                                  "' (expected 1.." + std::to_string(n) + ")");
    }
    out.set(static_cast<int>(v - 1));
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty vertex list");
  return out;
}

struct EnumArgs {
  int k = 2;
  bool fast_k2 = false;
  int threads = 1;
  bool timing = false;
  std::string file;
};

int run_enum(const EnumArgs& args, bool force_fast_k2) {
  hkcut::Hypergraph g = load(args.file);
  hkcut::EnumerateOptions options;
  options.threads = args.threads;
  hkcut::EnumerationReport report;
  if (force_fast_k2 || (args.fast_k2 && args.k == 2)) {
    report = hkcut::enum_min_cutsets_k2(g, options);
  } else {
    if (args.fast_k2) throw std::invalid_argument("--fast-k2 requires -k 2");
    report = hkcut::enum_min_k_cutsets(g, args.k, options);
  }
  std::cout << hkcut::report_to_json(report, args.timing);
  std::cerr << "enumerated " << report.family.size() << " minimum " << report.k
            << "-cut-set(s) of value " << report.opt_value << " in " << report.stats.millis
            << " ms\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic enumeration of hypergraph minimum k-cut-sets"};
  app.require_subcommand(1);

  EnumArgs enum_args;
  CLI::App* cmd_enum = app.add_subcommand("enum", "Enumerate all minimum k-cut-sets");
  cmd_enum->add_option("-k", enum_args.k, "Number of components to separate")->required();
  cmd_enum->add_flag("--fast-k2", enum_args.fast_k2, "Use the C(n,2)-query path (k=2 only)");
  cmd_enum->add_option("--threads", enum_args.threads, "Worker threads");
  cmd_enum->add_flag("--timing", enum_args.timing, "Emit measured wall time in the report");
  cmd_enum->add_option("file", enum_args.file, "Instance file or - for stdin")->required();

  EnumArgs mincut_args;
  CLI::App* cmd_mincut = app.add_subcommand("mincut", "Enumerate all minimum cut-sets (k=2)");
  cmd_mincut->add_option("--threads", mincut_args.threads, "Worker threads");
  cmd_mincut->add_flag("--timing", mincut_args.timing, "Emit measured wall time in the report");
  cmd_mincut->add_option("file", mincut_args.file, "Instance file or - for stdin")->required();

  std::string stcut_sources, stcut_sinks, stcut_file;
  CLI::App* cmd_stcut = app.add_subcommand("stcut", "Minimum (S,T)-terminal cut");
  cmd_stcut->add_option("-S", stcut_sources, "Source vertices, comma separated, 1-indexed")
      ->required();
  cmd_stcut->add_option("-T", stcut_sinks, "Sink vertices, comma separated, 1-indexed")
      ->required();
  cmd_stcut->add_option("file", stcut_file, "Instance file or - for stdin")->required();

  int oracle_k = 2;
  std::string oracle_file;
  CLI::App* cmd_oracle = app.add_subcommand("oracle", "Brute-force reference enumeration");
  cmd_oracle->add_option("-k", oracle_k, "Number of components to separate")->required();
  cmd_oracle->add_option("file", oracle_file, "Instance file or - for stdin")->required();

  std::vector<std::string> verify_suites;
  std::string verify_file;
  std::vector<std::int64_t> verify_corpus;
  CLI::App* cmd_verify = app.add_subcommand("verify", "Run structural check suites");
  cmd_verify->add_option("--suite", verify_suites, "k2, general, uncross or aggregate")
      ->check(CLI::IsMember({"k2", "general", "uncross", "aggregate"}));
  cmd_verify->add_option("file", verify_file, "Instance file or - for stdin");
  cmd_verify
      ->add_option("--corpus", verify_corpus, "Generate a corpus: N M COUNT SEED")
      ->expected(4);

  std::vector<std::string> gen_args;
  CLI::App* cmd_gen = app.add_subcommand("gen", "Generate an instance");
  cmd_gen->add_option("spec", gen_args, "cycle N | spanning N | random N M MAXSIZE MAXCOST SEED")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_enum->parsed()) return run_enum(enum_args, false);
    if (cmd_mincut->parsed()) {
      mincut_args.k = 2;
      return run_enum(mincut_args, true);
    }

    if (cmd_stcut->parsed()) {
      hkcut::Hypergraph g = load(stcut_file);
      hkcut::VertexSet sources = parse_vertex_list(stcut_sources, g.num_vertices(), "-S");
      hkcut::VertexSet sinks = parse_vertex_list(stcut_sinks, g.num_vertices(), "-T");
      std::cout << hkcut::terminal_cut_to_json(hkcut::min_terminal_cut(g, sources, sinks));
      return kExitOk;
    }

    if (cmd_oracle->parsed()) {
      hkcut::Hypergraph g = load(oracle_file);
      std::cout << hkcut::report_to_json(hkcut::brute_force_min_k_cutsets(g, oracle_k));
      return kExitOk;
    }

    if (cmd_verify->parsed()) {
      std::vector<hkcut::Hypergraph> corpus;
      if (!verify_corpus.empty()) {
        if (!verify_file.empty()) {
          throw std::invalid_argument("give either a file or --corpus, not both");
        }
        corpus = hkcut::make_corpus(static_cast<int>(verify_corpus[0]),
                                    static_cast<int>(verify_corpus[1]),
                                    static_cast<int>(verify_corpus[2]),
                                    static_cast<std::uint64_t>(verify_corpus[3]));
      } else if (!verify_file.empty()) {
        corpus.push_back(load(verify_file));
      } else {
        throw std::invalid_argument("verify needs a file or --corpus");
      }

      auto selected = [&](const std::string& name) {
        return verify_suites.empty() ||
               std::find(verify_suites.begin(), verify_suites.end(), name) != verify_suites.end();
      };
      std::vector<hkcut::SuiteReport> reports;
      if (selected("k2")) reports.push_back(hkcut::run_witness_k2_suite(corpus));
      if (selected("general")) {
        reports.push_back(hkcut::run_witness_general_suite(corpus, 3));
        reports.push_back(hkcut::run_unique_witness_suite(corpus, 2));
        reports.push_back(hkcut::run_unique_witness_suite(corpus, 3));
        reports.push_back(hkcut::run_containment_suite(corpus, 2));
        reports.push_back(hkcut::run_containment_suite(corpus, 3));
      }
      if (selected("uncross")) reports.push_back(hkcut::run_uncrossing_suite(corpus));
      if (selected("aggregate")) {
        reports.push_back(hkcut::run_aggregate_suite(corpus, 2));
        reports.push_back(hkcut::run_aggregate_suite(corpus, 3));
      }
      std::cout << hkcut::suites_to_json(reports);
      for (const hkcut::SuiteReport& report : reports) {
        if (!report.ok()) return kExitVerificationFailed;
      }
      return kExitOk;
    }

    if (cmd_gen->parsed()) {
      auto want = [&](size_t count, const char* usage) {
        if (gen_args.size() != count + 1) {
          throw std::invalid_argument(std::string("usage: gen ") + usage);
        }
      };
      auto arg_int = [&](size_t index) { return std::stoll(gen_args[index]); };
      const std::string& kind = gen_args[0];
      if (kind == "cycle") {
        want(1, "cycle N");
        std::cout << hkcut::emit_instance(hkcut::make_cycle(static_cast<int>(arg_int(1))));
      } else if (kind == "spanning") {
        want(1, "spanning N");
        std::cout << hkcut::emit_instance(hkcut::make_spanning(static_cast<int>(arg_int(1))));
      } else if (kind == "random") {
        want(5, "random N M MAXSIZE MAXCOST SEED");
        std::cout << hkcut::emit_instance(hkcut::make_random(
            static_cast<int>(arg_int(1)), static_cast<int>(arg_int(2)),
            static_cast<int>(arg_int(3)), static_cast<int>(arg_int(4)),
            static_cast<std::uint64_t>(arg_int(5))));
      } else {
        throw std::invalid_argument("unknown generator '" + kind +
                                    "' (expected cycle, spanning or random)");
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
