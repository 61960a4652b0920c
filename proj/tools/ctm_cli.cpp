#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctm/ctm.hpp"

namespace {

constexpr int kUsage = 2;

struct SearchArgs {
  std::string mode = "exact";
  std::string engine = "meta";
  std::string pattern;
  std::string text;
  bool json = false;
};

struct BenchArgs {
  std::string mode = "swap";
  std::vector<std::size_t> ms;
  std::size_t n = 10000;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  bool planted = false;
  bool timing = false;
  std::size_t workers = 0;
  std::string out;
};

struct GraphArgs {
  std::size_t m = 0;
  std::string format = "dot";
  std::string out;
};

ctm::MatchMode require_mode(const std::string& name) {
  const auto mode = ctm::parse_mode(name);
  if (!mode) throw ctm::Error(ctm::ErrorKind::InvalidInput, "unknown mode: " + name);
  return *mode;
}

// Writes to --out when given, stdout otherwise.
template <typename F>
void with_output(const std::string& path, F&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ctm::Error(ctm::ErrorKind::InvalidInput, "cannot write " + path);
  write(out);
}

int run_search(const SearchArgs& a) {
  const ctm::MatchMode mode = require_mode(a.mode);
  if (a.engine != "meta" && a.engine != "automaton")
    throw ctm::Error(ctm::ErrorKind::InvalidInput, "unknown engine: " + a.engine);
  const bool automaton = a.engine == "automaton";
  if (automaton && mode != ctm::MatchMode::SwapPD)
    throw ctm::Error(ctm::ErrorKind::InvalidInput,
                     "the automaton engine supports swap mode only");

  const ctm::ParsedSequence p = ctm::read_sequence_file(a.pattern);
  const ctm::ParsedSequence t = ctm::read_sequence_file(a.text);

  const ctm::MatchReport r = std::visit(
      [&](const auto& pv, const auto& tv) {
        if (automaton) return ctm::automaton_search(ctm::build_swap_automaton(pv), tv);
        return ctm::meta_search(pv, tv, mode);
      },
      p, t);

  if (a.json) {
    nlohmann::json j;
    j["mode"] = std::string(ctm::to_string(mode));
    j["engine"] = a.engine;
    j["positions"] = r.occurrences;
    j["window_length"] = r.window_length;
    j["windows"] = r.windows;
    j["comparisons"] = r.total_comparisons;
    std::cout << j.dump() << '\n';
  } else {
    for (const std::size_t pos : r.occurrences) std::cout << pos << '\n';
  }
  return 0;
}

int run_bench(const BenchArgs& a) {
  ctm::BenchConfig cfg;
  cfg.mode = require_mode(a.mode);
  cfg.ms = a.ms;
  cfg.n = a.n;
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  cfg.planted = a.planted;
  cfg.timing = a.timing;
  cfg.workers = a.workers;
  const auto records = ctm::run_bench(cfg);
  with_output(a.out, [&](std::ostream& os) { ctm::write_bench_csv(os, records); });
  return 0;
}

int run_graph(const GraphArgs& a) {
  if (a.format != "dot" && a.format != "csv")
    throw ctm::Error(ctm::ErrorKind::InvalidInput, "format must be dot or csv");
  const ctm::SwapGraph g = ctm::build_swap_graph(a.m);
  with_output(a.out, [&](std::ostream& os) {
    if (a.format == "dot")
      ctm::write_dot(os, g);
    else
      ctm::write_csv(os, g);
  });
  std::cerr << "vertices: " << g.vertices.size() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cartesian tree pattern matching with one difference"};
  app.require_subcommand(1);

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "find approximate occurrences of a pattern");
  search->add_option("--mode", sa.mode, "exact|swap|swap-sn|mismatch|insert|delete")
      ->capture_default_str();
  search->add_option("--engine", sa.engine, "meta|automaton (automaton: swap only)")
      ->capture_default_str();
  search->add_option("--pattern", sa.pattern, "pattern file")->required();
  search->add_option("--text", sa.text, "text file")->required();
  search->add_flag("--json", sa.json, "print a JSON object");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "average comparisons on random permutations");
  bench->add_option("--mode", ba.mode)->capture_default_str();
  bench->add_option("--m", ba.ms, "pattern lengths, comma separated")
      ->required()
      ->delimiter(',');
  bench->add_option("--n", ba.n, "text length")->capture_default_str();
  bench->add_option("--trials", ba.trials)->capture_default_str();
  bench->add_option("--seed", ba.seed)->capture_default_str();
  bench->add_flag("--planted", ba.planted, "guarantee one exact occurrence");
  bench->add_flag("--timing", ba.timing, "measure wall-clock runtime");
  bench->add_option("--workers", ba.workers, "0 = hardware concurrency");
  bench->add_option("--out", ba.out, "CSV file (default stdout)");

  GraphArgs ga;
  auto* graph = app.add_subcommand("graph", "export the swap graph of trees of size m");
  graph->add_option("--m", ga.m)->required();
  graph->add_option("--format", ga.format, "dot|csv")->capture_default_str();
  graph->add_option("--out", ga.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (search->parsed()) return run_search(sa);
    if (bench->parsed()) return run_bench(ba);
    return run_graph(ga);
  } catch (const ctm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
