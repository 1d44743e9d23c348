#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "lieinner/suite/commands.hpp"

using namespace lieinner;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

Json read_input(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    ss << in.rdbuf();
  }
  try {
    return Json::parse(ss.str());
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("input is not JSON: ") + e.what());
  }
}

int emit(const CommandResult& r, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << r.output.dump(2) << "\n";
  } else {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << r.output.dump(2) << "\n";
  }
  return r.passed ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inner ideals of classical and finitary Lie algebras"};
  app.require_subcommand(1);

  auto* delta = app.add_subcommand("delta", "delta values for a root system");
  std::string type;
  std::size_t rank = 0;
  std::string weight;
  delta->add_option("type", type, "A, B, C, D, E6, E7, E8, F4 or G2")->required();
  delta->add_option("rank", rank, "rank for classical families");
  delta->add_option("--weight", weight, "highest weight as comma separated coordinates");

  std::string input = "-";
  auto* check = app.add_subcommand("check-inner", "test a subspace of sl, so or sp for being an inner ideal");
  check->add_option("input", input, "JSON file or - for standard input");
  auto* classify = app.add_subcommand("classify-sl", "recover e, f with I = eAf for an inner ideal of sl(n)");
  classify->add_option("input", input, "JSON file or - for standard input");
  auto* embed = app.add_subcommand("embed-analyze", "decompose the restricted natural modules of an embedding");
  embed->add_option("input", input, "JSON file or - for standard input");

  RunConfig config;
  std::size_t samples = 20;
  auto* finitary = app.add_subcommand("finitary-demo", "inner ideals of finitary algebras on a sample");
  finitary->add_option("--seed", config.seed);
  finitary->add_option("--samples", samples);

  std::string signature = "2,0,0";
  std::size_t depth = 4;
  std::string kind = "plain";
  std::size_t cap = 16;
  auto* limit = app.add_subcommand("limit-demo", "idempotent chains along a tower");
  limit->add_option("--signature", signature, "p,q,z");
  limit->add_option("--depth", depth);
  limit->add_option("--kind", kind, "plain or orthogonal");
  limit->add_option("--inner-cap", cap, "largest level size for the exact inner check");

  bool minimal = false;
  auto* suite = app.add_subcommand("verify-suite", "run every acceptance property");
  suite->add_option("--seed", config.seed);
  suite->add_flag("--minimal", minimal, "tiny sizes and sample counts");
  suite->add_flag("--large", config.large, "include the largest embedding instances");
  suite->add_option("--only", config.only, "criterion ids")->delimiter(',');
  suite->add_option("--max-n", config.caps.max_n);
  suite->add_option("--tower-depth", config.caps.tower_depth);

  std::string out;
  for (auto* sub : app.get_subcommands({}))
    sub->add_option("-o,--output", out, "write JSON here instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInvalid;
  }

  try {
    if (*delta) return emit(delta_command(type, rank, weight.empty() ? std::vector<std::int64_t>{} : parse_weight(weight)), out);
    if (*check) return emit(check_inner_command(read_input(input)), out);
    if (*classify) return emit(classify_sl_command(read_input(input)), out);
    if (*embed) return emit(embed_analyze_command(read_input(input)), out);
    if (*finitary) return emit(finitary_demo_command(config.seed, samples), out);
    if (*limit) return emit(limit_demo_command(signature, depth, kind, cap), out);
    if (*suite) {
      if (minimal) {
        RunConfig m = minimal_config(config.seed);
        m.only = config.only;
        m.large = config.large;
        config = m;
      }
      auto r = verify_suite_command(config);
      for (const auto& c : r.output["criteria"])
        std::cerr << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["id"] << " " << c["title"].get<std::string>()
                  << " (" << c["instances"] << ")\n";
      return emit(r, out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitInvalid;
}
