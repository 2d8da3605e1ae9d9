#include "swapbribery/cli.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "swapbribery/errors.h"
#include "swapbribery/generic_solvers.h"
#include "swapbribery/hardness_gen.h"
#include "swapbribery/io.h"
#include "swapbribery/rule_solvers.h"

namespace swapbribery {
namespace {

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string Commented(const std::string& text) {
  std::istringstream in(text);
  std::string out;
  for (std::string line; std::getline(in, line);) out += "#   " + line + "\n";
  return out;
}

struct Options {
  std::string instance_path;
  std::string solution_path;
  std::string method = "exact";
  std::string algorithm = "borda-shift-2approx";
  std::string reduction;
  std::string input_path;
  std::optional<std::uint64_t> seed;
  int k = 2;
  int sets = 4;
  int n = 2;
  double edge_probability = 0.5;
  int approval = 3;
  bool plant = false;
  SearchLimits limits;
};

int Winners(const Options& o, std::ostream& out) {
  BriberyInstance instance = parse_instance(ReadInput(o.instance_path));
  const CandidateSet& roster = instance.election.candidates();
  const auto points = scores(instance.election, instance.rule);
  for (Candidate c = 0; c < roster.size(); ++c) {
    out << "score " << roster.name(c) << ' ' << points[c].ToString() << '\n';
  }
  out << "winners";
  for (Candidate c : winners(instance.election, instance.rule)) out << ' ' << roster.name(c);
  out << '\n';
  return kExitOk;
}

int Solve(const Options& o, std::ostream& out) {
  BriberyInstance instance = parse_instance(ReadInput(o.instance_path));
  std::optional<BriberySolution> solution;
  if (o.method == "exact") {
    switch (instance.kind()) {
      case BriberyKind::kShift:
        solution = solve_shift_exact(instance, o.limits);
        break;
      case BriberyKind::kMixed:
        solution = solve_spav_mixed_exact(instance, o.limits);
        break;
      case BriberyKind::kSwap:
        solution = exact_oracle(instance, o.limits);
        break;
    }
  } else if (o.method == "fixed-candidates") {
    solution = solve_fixed_candidates(instance, o.limits);
  } else if (o.method == "fixed-voters") {
    solution = solve_kapproval_fixed_voters(instance, o.limits);
  } else if (o.method == "plurality-veto") {
    solution = solve_plurality_veto_swap(instance);
  } else if (o.method == "kapproval-shift") {
    solution = solve_kapproval_shift(instance);
  }
  if (!solution) {
    out << "infeasible\n";
    return kExitInfeasible;
  }
  out << write_solution(*solution, instance, o.method);
  return kExitOk;
}

int Approx(const Options& o, std::ostream& out) {
  BriberyInstance instance = parse_instance(ReadInput(o.instance_path));
  ApproximationResult result = borda_shift_2approx(instance);
  switch (result.verdict) {
    case ApproximationVerdict::kFeasible:
      out << write_solution(*result.solution, instance, o.algorithm);
      return kExitOk;
    case ApproximationVerdict::kInconclusive:
      out << "# inconclusive: cheapest found costs " << result.solution->total_cost
          << ", above the budget but within twice of it\n";
      out << write_solution(*result.solution, instance, o.algorithm, false);
      return kExitInconclusive;
    case ApproximationVerdict::kInfeasible:
      if (result.solution) {
        out << "# cheapest found costs " << result.solution->total_cost
            << ", more than twice the budget\n";
      }
      out << "infeasible\n";
      return kExitInfeasible;
  }
  return kExitInternal;
}

int Generate(const Options& o, std::ostream& out) {
  const bool biclique = o.reduction == "bb-kapproval";
  std::string source;
  if (!o.input_path.empty()) {
    source = ReadInput(o.input_path);
  } else if (o.seed) {
    source = biclique ? write_bb(random_bb(o.n, o.k, o.edge_probability, *o.seed))
                      : write_x3c(random_x3c(o.k, o.sets, *o.seed, o.plant));
  } else {
    throw ParameterError("gen needs --input or --seed");
  }

  ReductionInstance generated;
  if (biclique) {
    generated = gen_bb_kapproval(parse_bb(source));
  } else {
    X3CInstance x3c = parse_x3c(source);
    if (o.reduction == "x3c-3approval") {
      generated = gen_x3c_3approval(x3c, o.approval);
    } else if (o.reduction == "x3c-borda-shift") {
      generated = gen_x3c_borda_shift(x3c);
    } else if (o.reduction == "x3c-maximin-shift") {
      generated = gen_x3c_maximin_shift(x3c);
    } else {
      generated = gen_x3c_spav_mixed(x3c);
    }
  }
  out << "# reduction " << generated.reduction << '\n';
  out << "# expected "
      << (!generated.expected_feasible ? "unknown" : *generated.expected_feasible ? "yes" : "no")
      << '\n';
  out << "# target budget " << generated.target_budget << '\n';
  out << "# source\n" << Commented(source);
  out << write_instance(generated.instance);
  return kExitOk;
}

int ReducePw(const Options& o, std::ostream& out) {
  PossibleWinnerInstance pw = parse_possible_winner(ReadInput(o.instance_path));
  out << write_instance(reduce_possible_winner(pw));
  return kExitOk;
}

int Check(const Options& o, std::ostream& out) {
  BriberyInstance instance = parse_instance(ReadInput(o.instance_path));
  SolutionDocument doc = parse_solution(ReadInput(o.solution_path), instance);
  ReplayReport report = check_solution(instance, doc.solution);
  if (report.ok) {
    out << "replay ok\n";
    return kExitOk;
  }
  out << "replay failed: " << report.message << '\n';
  return kExitInfeasible;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Swap and shift bribery solver"};
  app.require_subcommand(1);
  Options o;

  auto* winners_cmd = app.add_subcommand("winners", "Scores and winners of an instance's election");
  winners_cmd->add_option("instance", o.instance_path, "Instance file, - for stdin")->required();

  auto add_limits = [&](CLI::App* cmd) {
    cmd->add_option("--max-candidates", o.limits.max_fixed_candidates,
                    "Largest m for the fixed-candidates solver");
    cmd->add_option("--max-voters", o.limits.max_fixed_voters,
                    "Largest n for the fixed-voters solver");
    cmd->add_option("--max-profiles", o.limits.max_profiles,
                    "Most profiles one enumeration may visit");
    cmd->add_option("--max-orders", o.limits.max_orders_per_voter,
                    "Most orders the exact search may settle per voter");
  };

  auto* solve_cmd = app.add_subcommand("solve", "Cheapest bribery within the budget");
  solve_cmd->add_option("instance", o.instance_path, "Instance file, - for stdin")->required();
  solve_cmd->add_option("--method", o.method, "Solver")
      ->check(CLI::IsMember({"exact", "fixed-candidates", "fixed-voters", "plurality-veto",
                             "kapproval-shift"}));
  add_limits(solve_cmd);

  auto* approx_cmd = app.add_subcommand("approx", "Approximate bribery");
  approx_cmd->add_option("instance", o.instance_path, "Instance file, - for stdin")->required();
  approx_cmd->add_option("--algorithm", o.algorithm, "Algorithm")
      ->check(CLI::IsMember({"borda-shift-2approx"}));

  auto* gen_cmd = app.add_subcommand("gen", "Build a bribery instance from a hard source problem");
  gen_cmd->add_option("--reduction", o.reduction, "Construction")
      ->required()
      ->check(CLI::IsMember({"x3c-3approval", "x3c-borda-shift", "bb-kapproval",
                             "x3c-maximin-shift", "x3c-spav"}));
  gen_cmd->add_option("--input", o.input_path, "X3C or biclique source file");
  gen_cmd->add_option("--seed", o.seed, "Draw a random source with this seed");
  gen_cmd->add_option("--k", o.k, "K of the random source");
  gen_cmd->add_option("--sets", o.sets, "Number of sets of a random X3C source");
  gen_cmd->add_option("--n", o.n, "N of a random biclique source");
  gen_cmd->add_option("--edge-prob", o.edge_probability, "Edge probability of a random biclique source");
  gen_cmd->add_flag("--plant", o.plant, "Plant an exact cover in a random X3C source");
  gen_cmd->add_option("--approval", o.approval, "k for the x3c-3approval construction");

  auto* pw_cmd = app.add_subcommand("reduce-pw", "Turn a possible-winner instance into swap bribery");
  pw_cmd->add_option("instance", o.instance_path, "Possible-winner file, - for stdin")->required();

  auto* check_cmd = app.add_subcommand("check", "Replay a solution against its instance");
  check_cmd->add_option("instance", o.instance_path, "Instance file")->required();
  check_cmd->add_option("solution", o.solution_path, "Solution file")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*winners_cmd) return Winners(o, out);
    if (*solve_cmd) return Solve(o, out);
    if (*approx_cmd) return Approx(o, out);
    if (*gen_cmd) return Generate(o, out);
    if (*pw_cmd) return ReducePw(o, out);
    if (*check_cmd) return Check(o, out);
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const BriberyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInternal;
}

}  // namespace swapbribery
