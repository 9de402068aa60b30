#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

#ifndef DUVAL_FIXTURE_DIR
#define DUVAL_FIXTURE_DIR "fixtures"
#endif

using namespace duval;

namespace {

std::array<long, 2> parse_pair(const std::string& s) {
  std::vector<long> v;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    std::string tok = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
    try {
      v.push_back(std::stol(tok));
    } catch (const std::exception&) {
      throw ParseError("bad weight list '" + s + "'", start);
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  if (v.size() == 3 && v[0] == 1) v.erase(v.begin());
  if (v.size() != 2) throw ParseError("weights must be given as a,b or 1,a,b", 0);
  return {v[0], v[1]};
}

int emit(const cli::Result& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Du Val quartic singularities and volume preserving weighted blowups"};
  app.require_subcommand(1);

  std::string input, point;
  bool json = false;
  std::string fixtures = DUVAL_FIXTURE_DIR;
  app.add_option("--fixtures", fixtures, "fixture directory")->capture_default_str();

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "quartic in the polynomial grammar (file, or - for stdin)");
    sub->add_option("--point", point, "marked point p0:p1:p2:p3 (default 1:0:0:0)");
    sub->add_flag("--json", json, "JSON output");
  };

  auto* classify_cmd = app.add_subcommand("classify", "classify the singularity at the marked point");
  with_input(classify_cmd);

  cli::VpOptions vp;
  auto* vp_cmd = app.add_subcommand("vp", "enumerate volume preserving weights (1,a,b)");
  with_input(vp_cmd);
  vp_cmd->add_option("--max-a", vp.bounds.max_a, "largest a (0 = no bound)");
  vp_cmd->add_option("--max-b", vp.bounds.max_b, "bound on a+b")->capture_default_str();
  vp_cmd->add_flag("--links-only", vp.links_only, "keep weights that can initiate Sarkisov links");
  vp_cmd->add_flag("--trace", vp.traces, "include per-step traces in JSON");

  std::string weight;
  auto* check_cmd = app.add_subcommand("check", "toric description of one weight triple");
  with_input(check_cmd);
  check_cmd->add_option("--weight", weight, "a,b or 1,a,b")->required();

  cli::GenerateOptions gen;
  std::string gen_weight;
  auto* gen_cmd = app.add_subcommand("generate", "witness quartics from the generator");
  gen_cmd->add_option("--target", gen.target, "type such as A4, A>=8, D7, E6");
  gen_cmd->add_option("--specialize", gen_weight, "colored weight a,b or 1,a,b");
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_flag("--corpus", gen.corpus, "emit the full corpus as JSON lines");
  gen_cmd->add_flag("--json", gen.json, "JSON line output");

  std::uint64_t seed = 0;
  std::string out_dir, expected_dir;
  auto* tables_cmd = app.add_subcommand("tables", "regenerate the six tables and compare with the expected files");
  tables_cmd->add_option("--seed", seed)->capture_default_str();
  tables_cmd->add_option("--out", out_dir, "write regenerated tables here");
  tables_cmd->add_option("--expected", expected_dir, "expected tables (default <fixtures>/expected)");

  auto* selftest_cmd = app.add_subcommand("selftest", "invariant suites on a seeded corpus");
  selftest_cmd->add_option("--seed", seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kParse;
  }

  try {
    cli::Input in;
    if (!point.empty()) in.point = point;
    auto need_input = [&] { in.text = cli::read_input(input); };

    if (classify_cmd->parsed()) {
      need_input();
      return emit(cli::cmd_classify(in, json));
    }
    if (vp_cmd->parsed()) {
      need_input();
      vp.json = json;
      return emit(cli::cmd_vp(in, vp));
    }
    if (check_cmd->parsed()) {
      need_input();
      auto [a, b] = parse_pair(weight);
      return emit(cli::cmd_check(in, a, b, json));
    }
    if (gen_cmd->parsed()) {
      if (!gen.corpus && gen.target.empty()) throw ParseError("generate needs --target or --corpus", 0);
      if (!gen_weight.empty()) gen.weight = parse_pair(gen_weight);
      gen.fixtures = fixtures;
      return emit(cli::cmd_generate(gen));
    }
    if (tables_cmd->parsed()) {
      std::filesystem::path exp = expected_dir.empty() ? std::filesystem::path(fixtures) / "expected" : std::filesystem::path(expected_dir);
      std::optional<std::filesystem::path> out;
      if (!out_dir.empty()) out = out_dir;
      return emit(cli::cmd_tables(seed, fixtures, exp, out));
    }
    if (selftest_cmd->parsed()) return emit(cli::cmd_selftest(seed, fixtures));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_code(e);
  }
  return cli::kFailure;
}
