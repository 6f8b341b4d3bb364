// Copyright 2026 The BMFNI Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "bmfni/cli.h"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bmfni/core_model.h"
#include "bmfni/exact_dp.h"
#include "bmfni/fptas.h"
#include "bmfni/generator.h"
#include "bmfni/io.h"
#include "bmfni/knapsack_bridge.h"
#include "bmfni/oracle.h"
#include "bmfni/parallel.h"
#include "bmfni/pareto.h"
#include "bmfni/rational.h"

namespace bmfni {
namespace {

// Failure carrying its own exit code and error name.
class CliFailure : public std::runtime_error {
 public:
  CliFailure(int exit_code, std::string name, const std::string& message)
      : std::runtime_error(message),
        exit_code_(exit_code),
        name_(std::move(name)) {}
  int exit_code() const { return exit_code_; }
  const std::string& name() const { return name_; }

 private:
  int exit_code_;
  std::string name_;
};

[[noreturn]] void Usage(const std::string& message) {
  throw CliFailure(kExitUsage, "UsageError", message);
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
    case ErrorCode::kNonUnitCosts:
    case ErrorCode::kNotParallelGraph:
      return kExitPrecondition;
    case ErrorCode::kTooLarge:
      return kExitTooLarge;
    default:
      return kExitInput;
  }
}

void PrintError(std::ostream& err, int exit_code, const std::string& name,
                const std::string& message, const JsonSyntaxError* syntax) {
  Json error = {{"code", name}, {"message", message}, {"exit_code", exit_code}};
  if (syntax != nullptr) {
    error["line"] = syntax->line();
    error["column"] = syntax->column();
  }
  err << Json{{"error", error}}.dump() << "\n";
}

double MillisSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure(kExitInput, "IoError", "cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Json ReadJsonFile(const std::string& path) { return ParseJsonText(ReadFile(path)); }

void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) {
    throw CliFailure(kExitInput, "IoError", "cannot write " + path);
  }
}

void EmitJson(const std::string& path, const Json& doc, std::ostream& out) {
  Emit(path, doc.dump(2) + "\n", out);
}

// Reads, validates and recognizes an instance. Every failure here is an
// input problem (exit 2).
InstanceDocument LoadInstance(const std::string& path, FoldOrder fold) {
  InstanceDocument doc = ReadInstance(ReadJsonFile(path), fold);
  try {
    ValidateOrThrow(doc.instance);
    if (!doc.instance.tree) doc.instance.tree = TreeOf(doc.instance);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidArgument) {
      throw Error(ErrorCode::kValidation, e.what());
    }
    throw;
  }
  return doc;
}

Rational ParseEpsilon(const std::string& text) {
  Rational eps;
  try {
    eps = Rational::Parse(text);
  } catch (const Error& e) {
    Usage("invalid epsilon '" + text + "': " + e.what());
  }
  if (!eps.positive()) Usage("epsilon must be positive");
  return eps;
}

Json PairJson(const ValuePair& p) { return Json::array({p.v1, p.v2}); }

struct Common {
  std::string out;
  int threads = DefaultThreadCount();
};

void AddThreads(CLI::App* cmd, Common* common) {
  cmd->add_option("--threads", common->threads,
                  "worker threads (default: hardware count)")
      ->check(CLI::PositiveNumber);
}

void AddOut(CLI::App* cmd, Common* common) {
  cmd->add_option("--out", common->out, "output path (default: stdout)");
}

// ---------------------------------------------------------------- solvers

struct SolveArgs {
  Common common;
  std::string instance;
  std::string fold = "left";
};

int CmdSolve(const SolveArgs& args, std::ostream& out) {
  const FoldOrder fold =
      args.fold == "right" ? FoldOrder::kRight : FoldOrder::kLeft;
  const InstanceDocument doc = LoadInstance(args.instance, fold);
  const auto start = std::chrono::steady_clock::now();
  ExactOptions options;
  options.threads = args.common.threads;
  ExactResult result = SolveExact(doc.instance, options);
  FrontDocument front;
  front.solver = "exact";
  front.instance_digest = doc.digest;
  front.points = std::move(result.front);
  front.wall_ms = MillisSince(start);
  EmitJson(args.common.out, FrontToJson(doc.instance, front), out);
  return kExitOk;
}

struct ApproxArgs {
  Common common;
  std::string instance;
  std::string epsilon;
};

int CmdApprox(const ApproxArgs& args, std::ostream& out) {
  const Rational eps = ParseEpsilon(args.epsilon);
  const InstanceDocument doc = LoadInstance(args.instance, FoldOrder::kLeft);
  const auto start = std::chrono::steady_clock::now();
  FptasOptions options;
  options.threads = args.common.threads;
  FptasResult result = SolveFptas(doc.instance, eps, options);
  FrontDocument front;
  front.solver = "fptas";
  front.parameters = {{"epsilon", eps.ToString()}};
  front.instance_digest = doc.digest;
  front.points = std::move(result.front);
  front.wall_ms = MillisSince(start);
  EmitJson(args.common.out, FrontToJson(doc.instance, front), out);
  return kExitOk;
}

struct OracleArgs {
  Common common;
  std::string instance;
  int max_arcs = kDefaultOracleArcLimit;
};

int CmdOracle(const OracleArgs& args, std::ostream& out) {
  const InstanceDocument doc = LoadInstance(args.instance, FoldOrder::kLeft);
  OracleOptions options;
  options.max_arcs = args.max_arcs;
  options.threads = args.common.threads;
  const OracleReport report = EnumerateFront(doc.instance, options);
  FrontDocument front;
  front.solver = "oracle";
  front.parameters = {{"strategies_enumerated", report.strategies_enumerated}};
  front.instance_digest = doc.digest;
  front.points = report.Labeled();
  front.wall_ms = report.wall_ms;
  EmitJson(args.common.out, FrontToJson(doc.instance, front), out);
  return kExitOk;
}

struct CheckArgs {
  Common common;
  std::string front;
  std::string instance;
  std::string epsilon;
  int max_arcs = kDefaultOracleArcLimit;
};

int CmdCheck(const CheckArgs& args, std::ostream& out) {
  std::optional<Rational> eps;
  if (!args.epsilon.empty()) eps = ParseEpsilon(args.epsilon);
  const InstanceDocument doc = LoadInstance(args.instance, FoldOrder::kLeft);
  const FrontDocument front = ReadFront(ReadJsonFile(args.front), doc.instance);
  OracleOptions options;
  options.max_arcs = args.max_arcs;
  options.threads = args.common.threads;
  const OracleReport report = EnumerateFront(doc.instance, options);
  const VerifyMode mode =
      eps ? VerifyMode(EpsMode{*eps}) : VerifyMode(ExactMode{});
  Verdict verdict = VerifyFront(doc.instance, front.points, report, mode);
  if (!front.instance_digest.empty() && front.instance_digest != doc.digest) {
    verdict.pass = false;
    verdict.problems.push_back("instance digest mismatch: front has " +
                               front.instance_digest + ", instance is " +
                               doc.digest);
  }
  Json missing = Json::array();
  for (const ValuePair& p : verdict.missing) missing.push_back(PairJson(p));
  Json unexpected = Json::array();
  for (const ValuePair& p : verdict.unexpected) {
    unexpected.push_back(PairJson(p));
  }
  Json result = {{"pass", verdict.pass},
                 {"mode", eps ? "eps" : "exact"},
                 {"missing", missing},
                 {"unexpected", unexpected},
                 {"problems", verdict.problems},
                 {"oracle_front_size", report.front.size()}};
  if (eps) result["epsilon"] = eps->ToString();
  out << result.dump(2) << "\n";
  return verdict.pass ? kExitOk : kExitVerification;
}

// ------------------------------------------------------------- generators

struct GenArgs {
  std::string out;
  int arcs = 0;
  std::uint64_t seed = 0;
  std::int64_t max_u = 10;
  std::int64_t max_cost = 1;
  std::int64_t budget = 0;
  std::string budget_fraction;
  bool parallel_only = false;
  int items = 0;
  std::int64_t max_p = 10;
  std::int64_t max_w = 10;
};

int CmdGenSp(const GenArgs& args, std::ostream& out) {
  SpGenParams params;
  params.arcs = args.arcs;
  params.seed = args.seed;
  params.max_u = args.max_u;
  params.max_cost = args.max_cost;
  params.budget = args.budget;
  params.parallel_only = args.parallel_only;
  if (!args.budget_fraction.empty()) {
    params.use_fraction = true;
    try {
      params.budget_fraction = Rational::Parse(args.budget_fraction);
    } catch (const Error& e) {
      Usage(std::string("invalid budget fraction: ") + e.what());
    }
  }
  EmitJson(args.out, InstanceToJson(GenerateSp(params)), out);
  return kExitOk;
}

int CmdGenHard(const GenArgs& args, std::ostream& out) {
  EmitJson(args.out, InstanceToJson(GenerateHardParallel(args.arcs)), out);
  return kExitOk;
}

Json ReducedDocument(const KnapsackDecisionInstance& knapsack) {
  const ReducedInstance reduced = KnapsackToBmfni(knapsack);
  Json doc = InstanceToJson(reduced.instance, reduced.threshold);
  doc["knapsack"] = KnapsackDecisionToJson(knapsack).at("knapsack");
  return doc;
}

int CmdGenReduction(const GenArgs& args, std::ostream& out) {
  ReductionGenParams params;
  params.items = args.items;
  params.seed = args.seed;
  params.max_p = args.max_p;
  params.max_w = args.max_w;
  EmitJson(args.out, ReducedDocument(GenerateKnapsackDecision(params)), out);
  return kExitOk;
}

// ----------------------------------------------------------------- compare

struct CompareArgs {
  Common common;
  std::string instance;
  std::vector<std::string> epsilons;
  int max_arcs = kDefaultOracleArcLimit;
};

int CmdCompare(const CompareArgs& args, std::ostream& out) {
  std::vector<Rational> epsilons;
  for (const std::string& text : args.epsilons) {
    epsilons.push_back(ParseEpsilon(text));
  }
  const InstanceDocument doc = LoadInstance(args.instance, FoldOrder::kLeft);
  const Instance& instance = doc.instance;
  if (!epsilons.empty() && !instance.unit_costs()) {
    throw Error(ErrorCode::kNonUnitCosts,
                "approximation rows need unit interdiction costs");
  }

  std::ostringstream csv;
  csv << kCompareHeader << "\n";
  auto row = [&](const std::string& eps, std::int64_t labels,
                 std::size_t front, bool covered, double wall_ms) {
    csv << instance.num_arcs() << "," << instance.max_u() << ","
        << instance.budget << "," << eps << "," << labels << "," << front
        << "," << (covered ? "true" : "false") << "," << std::fixed
        << std::setprecision(3) << wall_ms << std::defaultfloat << "\n";
  };

  auto start = std::chrono::steady_clock::now();
  ExactOptions exact_options;
  exact_options.threads = args.common.threads;
  const ExactResult exact = SolveExact(instance, exact_options);
  const double exact_ms = MillisSince(start);

  // Reference front: the oracle inside its guard, the exact front beyond.
  std::vector<ValuePair> reference = Values(exact.front);
  if (instance.num_arcs() <= args.max_arcs) {
    OracleOptions oracle_options;
    oracle_options.max_arcs = args.max_arcs;
    oracle_options.threads = args.common.threads;
    reference = EnumerateFront(instance, oracle_options).Values();
  }
  auto covers = [&](const std::vector<LabeledPoint>& front,
                    const Rational& eps) {
    for (const ValuePair& p : reference) {
      if (!EpsCovers(front, p, eps)) return false;
    }
    return true;
  };

  row("0", exact.stats.labels_created, exact.front.size(),
      covers(exact.front, Rational{0, 1}), exact_ms);
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    start = std::chrono::steady_clock::now();
    FptasOptions options;
    options.threads = args.common.threads;
    const FptasResult approx = SolveFptas(instance, epsilons[i], options);
    const double ms = MillisSince(start);
    row(args.epsilons[i], approx.stats.labels_created, approx.front.size(),
        covers(approx.front, epsilons[i]), ms);
  }
  Emit(args.common.out, csv.str(), out);
  return kExitOk;
}

// ----------------------------------------------------------------- bridge

struct BridgeArgs {
  Common common;
  std::string input;
  std::string threshold;
};

int CmdKnapsack(const BridgeArgs& args, std::ostream& out) {
  const Json input = ReadJsonFile(args.input);
  std::optional<InstanceDocument> graph;
  BiKnapsackInstance knapsack;
  if (input.contains("graph")) {
    graph = LoadInstance(args.input, FoldOrder::kLeft);
    knapsack = ParallelToKnapsack(graph->instance);
  } else {
    knapsack = ReadBiKnapsack(input);
  }
  const std::vector<KnapsackPoint> front = SolveBiKnapsack(knapsack);

  std::int64_t total1 = 0;
  std::int64_t total2 = 0;
  for (const BiKnapsackItem& item : knapsack.items) {
    total1 += item.p1;
    total2 += item.p2;
  }
  Json points = Json::array();
  for (const KnapsackPoint& p : front) {
    Json point = {{"p1", p.profit.v1}, {"p2", p.profit.v2},
                  {"weight", p.witness.cost()}};
    if (graph) {
      point["strategy"] = graph->instance.ArcIds(p.witness);
      point["val"] = PairJson({total1 - p.profit.v1, total2 - p.profit.v2});
    } else {
      Json items = Json::array();
      for (int i : p.witness.bits().Indices()) items.push_back(i + 1);
      point["items"] = items;
    }
    points.push_back(point);
  }
  EmitJson(args.common.out,
           {{"capacity", knapsack.capacity}, {"points", points}}, out);
  return kExitOk;
}

int CmdReduce(const BridgeArgs& args, std::ostream& out) {
  EmitJson(args.common.out,
           ReducedDocument(ReadKnapsackDecision(ReadJsonFile(args.input))),
           out);
  return kExitOk;
}

ValuePair ParseThreshold(const std::string& text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) Usage("threshold must be K1,K2");
  try {
    std::size_t used1 = 0;
    std::size_t used2 = 0;
    const std::string a = text.substr(0, comma);
    const std::string b = text.substr(comma + 1);
    ValuePair k{std::stoll(a, &used1), std::stoll(b, &used2)};
    if (used1 != a.size() || used2 != b.size()) Usage("threshold must be K1,K2");
    return k;
  } catch (const std::logic_error&) {
    Usage("threshold must be K1,K2");
  }
}

int CmdDecide(const BridgeArgs& args, std::ostream& out) {
  const InstanceDocument doc = LoadInstance(args.input, FoldOrder::kLeft);
  std::optional<ValuePair> threshold = doc.threshold;
  if (!args.threshold.empty()) threshold = ParseThreshold(args.threshold);
  if (!threshold) Usage("no threshold in the instance and none given");
  const bool answer =
      DecisionCheck(doc.instance, *threshold, args.common.threads);
  out << Json{{"answer", answer}, {"threshold", PairJson(*threshold)}}.dump(2)
      << "\n";
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Biobjective maximum-flow network interdiction solvers",
               "bmfni"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expanded help");

  SolveArgs solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "exact nondominated front");
  solve_cmd->add_option("instance", solve.instance)->required();
  solve_cmd->add_option("--fold", solve.fold, "n-ary binarization")
      ->check(CLI::IsMember({"left", "right"}));
  AddOut(solve_cmd, &solve.common);
  AddThreads(solve_cmd, &solve.common);

  ApproxArgs approx;
  CLI::App* approx_cmd =
      app.add_subcommand("approx", "epsilon-approximate front (unit costs)");
  approx_cmd->add_option("instance", approx.instance)->required();
  approx_cmd->add_option("--epsilon", approx.epsilon, "decimal or p/q")
      ->required();
  AddOut(approx_cmd, &approx.common);
  AddThreads(approx_cmd, &approx.common);

  OracleArgs oracle;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "brute-force front by enumeration");
  oracle_cmd->add_option("instance", oracle.instance)->required();
  oracle_cmd->add_option("--max-arcs", oracle.max_arcs, "enumeration guard");
  AddOut(oracle_cmd, &oracle.common);
  AddThreads(oracle_cmd, &oracle.common);

  CheckArgs check;
  CLI::App* check_cmd =
      app.add_subcommand("check", "verify a front file against the oracle");
  check_cmd->add_option("front", check.front)->required();
  check_cmd->add_option("instance", check.instance)->required();
  check_cmd->add_option("--epsilon", check.epsilon, "eps-coverage mode");
  check_cmd->add_option("--max-arcs", check.max_arcs, "enumeration guard");
  AddThreads(check_cmd, &check.common);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate instances");
  gen_cmd->require_subcommand(1);
  CLI::App* gen_sp = gen_cmd->add_subcommand("sp", "random series-parallel");
  gen_sp->add_option("--arcs", gen.arcs)->required();
  gen_sp->add_option("--seed", gen.seed);
  gen_sp->add_option("--max-u", gen.max_u);
  gen_sp->add_option("--max-cost", gen.max_cost);
  gen_sp->add_option("--budget", gen.budget, "fixed budget");
  gen_sp->add_option("--budget-fraction", gen.budget_fraction,
                     "budget = floor(fraction * total cost)")
      ->excludes("--budget");
  gen_sp->add_flag("--parallel-only", gen.parallel_only);
  gen_sp->add_option("--out", gen.out);
  CLI::App* gen_hard =
      gen_cmd->add_subcommand("hard-parallel", "exponential-front family");
  gen_hard->add_option("--arcs", gen.arcs)->required();
  gen_hard->add_option("--out", gen.out);
  CLI::App* gen_red =
      gen_cmd->add_subcommand("reduction", "knapsack decision reduction");
  gen_red->add_option("--items", gen.items)->required();
  gen_red->add_option("--seed", gen.seed);
  gen_red->add_option("--max-p", gen.max_p);
  gen_red->add_option("--max-w", gen.max_w);
  gen_red->add_option("--out", gen.out);

  CompareArgs compare;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "exact vs approximate accounting as CSV");
  compare_cmd->add_option("instance", compare.instance)->required();
  compare_cmd->add_option("--epsilon", compare.epsilons, "comma-separated")
      ->delimiter(',');
  compare_cmd->add_option("--max-arcs", compare.max_arcs, "oracle guard");
  AddOut(compare_cmd, &compare.common);
  AddThreads(compare_cmd, &compare.common);

  BridgeArgs bridge;
  CLI::App* knapsack_cmd = app.add_subcommand(
      "knapsack", "biobjective knapsack front of a parallel graph");
  knapsack_cmd->add_option("input", bridge.input)->required();
  AddOut(knapsack_cmd, &bridge.common);
  CLI::App* reduce_cmd = app.add_subcommand(
      "reduce", "interdiction instance from a knapsack decision instance");
  reduce_cmd->add_option("input", bridge.input)->required();
  AddOut(reduce_cmd, &bridge.common);
  CLI::App* decide_cmd =
      app.add_subcommand("decide", "is some strategy weakly below K?");
  decide_cmd->add_option("input", bridge.input)->required();
  decide_cmd->add_option("--threshold", bridge.threshold, "K1,K2");
  AddThreads(decide_cmd, &bridge.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    PrintError(err, kExitUsage, "UsageError", e.what(), nullptr);
    return kExitUsage;
  }

  try {
    if (*solve_cmd) return CmdSolve(solve, out);
    if (*approx_cmd) return CmdApprox(approx, out);
    if (*oracle_cmd) return CmdOracle(oracle, out);
    if (*check_cmd) return CmdCheck(check, out);
    if (*gen_sp) return CmdGenSp(gen, out);
    if (*gen_hard) return CmdGenHard(gen, out);
    if (*gen_red) return CmdGenReduction(gen, out);
    if (*compare_cmd) return CmdCompare(compare, out);
    if (*knapsack_cmd) return CmdKnapsack(bridge, out);
    if (*reduce_cmd) return CmdReduce(bridge, out);
    if (*decide_cmd) return CmdDecide(bridge, out);
  } catch (const JsonSyntaxError& e) {
    PrintError(err, kExitInput, ErrorCodeName(e.code()), e.what(), &e);
    return kExitInput;
  } catch (const Error& e) {
    const int code = ExitCodeFor(e.code());
    PrintError(err, code, ErrorCodeName(e.code()), e.what(), nullptr);
    return code;
  } catch (const CliFailure& e) {
    PrintError(err, e.exit_code(), e.name(), e.what(), nullptr);
    return e.exit_code();
  }
  return kExitUsage;
}

}  // namespace bmfni
