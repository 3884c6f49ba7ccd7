#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kvdp/dp_engine.hpp"
#include "kvdp/generator.hpp"
#include "kvdp/instance.hpp"
#include "kvdp/oracle.hpp"
#include "kvdp/shortest.hpp"
#include "kvdp/solution.hpp"
#include "kvdp/svg.hpp"

using namespace kvdp;

namespace {

Instance load(const std::string& path) {
  if (path == "-") return parse_instance(std::cin);
  return parse_instance_file(path);
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::ParseError, "cannot open " + path + " for writing");
  out << text;
}

int run(int argc, char** argv) {
  CLI::App app{"minimum total length vertex-disjoint paths on an outer-terminal planar graph"};
  app.require_subcommand(1);

  std::string in_path, out_path, svg_path, sol_path;
  std::uint64_t seed = 1;
  bool no_fallback = false, stats = false;

  auto* solve_cmd = app.add_subcommand("solve", "solve an instance exactly");
  solve_cmd->add_option("instance", in_path, "instance file, - for stdin")->required();
  solve_cmd->add_option("-o,--out", out_path, "solution file, default stdout");
  solve_cmd->add_option("--svg", svg_path, "write a drawing of the result");
  solve_cmd->add_option("--seed", seed, "tie-breaking seed");
  solve_cmd->add_flag("--no-fallback", no_fallback, "fail instead of brute-forcing degeneracies");
  solve_cmd->add_flag("--stats", stats, "print attempt statistics to stderr");

  auto* verify_cmd = app.add_subcommand("verify", "check a solution file against an instance");
  verify_cmd->add_option("instance", in_path)->required();
  verify_cmd->add_option("solution", sol_path)->required();

  GenSpec gs;
  std::string family = "grid", weights = "unit";
  auto* gen_cmd = app.add_subcommand("gen", "generate a grid instance");
  gen_cmd->add_option("--family", family, "grid | subgrid")
      ->check(CLI::IsMember({"grid", "subgrid"}));
  gen_cmd->add_option("--rows", gs.rows);
  gen_cmd->add_option("--cols", gs.cols);
  gen_cmd->add_option("-k,--pairs", gs.k);
  gen_cmd->add_option("--weights", weights, "unit | uniform | columns")
      ->check(CLI::IsMember({"unit", "uniform", "columns"}));
  gen_cmd->add_option("--lo", gs.lo);
  gen_cmd->add_option("--hi", gs.hi);
  gen_cmd->add_option("--seed", gs.seed);
  gen_cmd->add_option("-o,--out", out_path);

  auto* oracle_cmd = app.add_subcommand("oracle", "solve small instances by exhaustive search");
  oracle_cmd->add_option("instance", in_path)->required();
  oracle_cmd->add_option("-o,--out", out_path);
  oracle_cmd->add_option("--seed", seed, "tie-breaking seed");

  std::string sides = "5,7,9,11";
  auto* bench_cmd = app.add_subcommand("bench", "time unit grids of growing side");
  bench_cmd->add_option("--sides", sides, "comma list of odd grid sides");
  bench_cmd->add_option("-k,--pairs", gs.k);

  CLI11_PARSE(app, argc, argv);

  if (solve_cmd->parsed()) {
    Instance inst = load(in_path);
    SolveOptions opt;
    opt.seed = seed;
    opt.allow_fallback = !no_fallback;
    SolveStats st;
    Solution sol = solve(inst, opt, &st);
    if (stats) {
      std::cerr << "attempts " << st.attempts << " seed " << st.seed_used
                << (st.used_fallback ? " fallback" : "") << "\n";
      for (const auto& nt : st.notes) std::cerr << "note: " << nt << "\n";
    }
    emit(out_path, solution_text(sol));
    if (!svg_path.empty()) emit(svg_path, render_svg(inst, &sol));
    return sol.feasible ? 0 : 2;
  }
  if (verify_cmd->parsed()) {
    Instance inst = load(in_path);
    std::ifstream sf(sol_path);
    if (!sf) fail(Errc::ParseError, "cannot open " + sol_path);
    Solution sol = parse_solution(sf);
    std::string verdict = check_solution(inst, sol);
    if (!verdict.empty()) {
      std::cerr << "invalid: " << verdict << "\n";
      return 1;
    }
    std::cout << (sol.feasible ? "valid" : "infeasible") << "\n";
    return 0;
  }
  if (gen_cmd->parsed()) {
    gs.family = family == "grid" ? GenSpec::Family::Grid : GenSpec::Family::SubdividedGrid;
    gs.weights = weights == "unit"      ? GenSpec::Weights::Unit
                 : weights == "uniform" ? GenSpec::Weights::Uniform
                                        : GenSpec::Weights::AdversarialColumns;
    emit(out_path, write_instance(generate(gs)));
    return 0;
  }
  if (oracle_cmd->parsed()) {
    Instance inst = load(in_path);
    auto res = oracle_solve(inst, perturb(inst.g, seed));
    Solution sol;
    sol.feasible = res.feasible;
    if (res.feasible) {
      sol.total = res.total.base;
      sol.paths = std::move(res.paths);
    }
    emit(out_path, solution_text(sol));
    return sol.feasible ? 0 : 2;
  }
  // bench
  std::istringstream ss(sides);
  std::string tok;
  std::cout << "side\tn\tms\ttotal\n";
  while (std::getline(ss, tok, ',')) {
    GenSpec s;
    s.rows = s.cols = std::stoi(tok);
    s.k = gs.k;
    Instance inst = generate(s);
    auto t0 = std::chrono::steady_clock::now();
    Solution sol = solve(inst);
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
    std::cout << tok << "\t" << inst.g.n() << "\t" << ms.count() << "\t"
              << (sol.feasible ? std::to_string(sol.total) : "infeasible") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
