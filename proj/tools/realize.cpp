// Command-line surface for the realizability toolkit: validate and build
// instances, run the closure algorithms and the independent oracles, apply
// the instance-to-instance reductions, generate test families, simulate the
// parallel connectivity algorithm, and benchmark squaring.
//
// Exit codes: 0 success; 1 "no" decision when --exit-status is set; 2 usage
// errors; 3 oracle/simulation budget exhausted.

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "rlz/auxpda.hpp"
#include "rlz/balanced.hpp"
#include "rlz/closure.hpp"
#include "rlz/io.hpp"
#include "rlz/oracle.hpp"
#include "rlz/pram.hpp"
#include "rlz/reductions.hpp"

namespace {

constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

rlz::ClosureMethod parse_method(const std::string& name) {
  if (name == "square") return rlz::ClosureMethod::Square;
  if (name == "simple") return rlz::ClosureMethod::SimpleSquare;
  if (name == "symmetric") return rlz::ClosureMethod::SymmetricSquare;
  throw CLI::ValidationError("--method", "unknown method '" + name + "'");
}

int decision(bool yes, bool exit_status) {
  std::cout << (yes ? "YES" : "NO") << "\n";
  return yes || !exit_status ? 0 : kExitNo;
}

void write_cert(const std::string& out_path, const rlz::ReductionCert& cert) {
  nlohmann::json j{{"source", cert.source}, {"vertexMap", cert.vertex_map}};
  for (const auto& [key, val] : cert.params) j["params"][key] = val;
  std::ofstream f(out_path + ".cert.jsonl");
  f << j.dump() << "\n";
}

struct Args {
  std::string file, out, machine, input_word, mode = "balanced", method = "simple",
              grammar = "standard", name;
  int s = 0, t = 0, bound = 0, k = 1, n = 0, a = 0, b = 0, c = 0, d = 0, b1 = 0, b2 = 0,
      max_iters = -1, step_bound = 10000, stack_bound = 64, max_n = rlz::kDefaultMaxN;
  uint64_t seed = 1;
  double density = 0.2;
  bool exit_status = false, dump = false, stats = false;
  std::string variant = "logcfl";
  std::vector<std::string> tokens;
};

std::vector<std::string> explode(const std::string& word) {
  std::vector<std::string> out;
  for (char ch : word) out.emplace_back(1, ch);
  return out;
}

rlz::GrammarVariant parse_grammar(const std::string& g) {
  if (g == "standard") return rlz::GrammarVariant::Standard;
  if (g == "sgs") return rlz::GrammarVariant::SymmetricGap;
  if (g == "one") return rlz::GrammarVariant::One;
  if (g == "one-sgs") return rlz::GrammarVariant::OneSymmetricGap;
  throw CLI::ValidationError("--grammar", "unknown grammar '" + g + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph realizability toolkit"};
  app.require_subcommand(1);
  Args args;

  auto* validate_cmd = app.add_subcommand("validate", "check an instance file");
  validate_cmd->add_option("file", args.file)->required();
  validate_cmd->add_flag("--exit-status", args.exit_status);

  auto* init_cmd = app.add_subcommand("init", "build the <gap,standard> pair and print a summary");
  init_cmd->add_option("file", args.file)->required();
  init_cmd->add_option("--max-n", args.max_n);

  auto* closure_cmd = app.add_subcommand("closure", "compute the transitive closure");
  closure_cmd->add_option("file", args.file)->required();
  closure_cmd->add_option("--method", args.method);
  closure_cmd->add_option("--max-iters", args.max_iters);
  closure_cmd->add_option("--max-n", args.max_n);
  closure_cmd->add_flag("--dump", args.dump);

  auto* query_cmd = app.add_subcommand("query", "decide (s ~> t) via the closure");
  query_cmd->add_option("file", args.file)->required();
  query_cmd->add_option("--s", args.s)->required();
  query_cmd->add_option("--t", args.t)->required();
  auto* gap_opt = query_cmd->add_option("--gap", args.tokens)
                      ->expected(4)
                      ->description("a c d b: query the gap entry instead");
  query_cmd->add_option("--method", args.method);
  query_cmd->add_flag("--exit-status", args.exit_status);

  auto* balanced_cmd = app.add_subcommand("balanced", "balanced walk decision on a digraph");
  balanced_cmd->add_option("file", args.file)->required();
  balanced_cmd->add_option("--s", args.s)->required();
  balanced_cmd->add_option("--t", args.t)->required();
  balanced_cmd->add_option("--bound", args.bound)->required();
  balanced_cmd->add_option("--mode", args.mode)
      ->check(CLI::IsMember({"balanced", "positive", "kbalanced", "positive-kbalanced"}));
  balanced_cmd->add_option("--k", args.k);
  balanced_cmd->add_flag("--exit-status", args.exit_status);

  auto* oracle_cmd = app.add_subcommand("oracle", "independent ground-truth checks");
  oracle_cmd->require_subcommand(1);
  auto* sat_cmd = oracle_cmd->add_subcommand("saturate", "worklist realizability closure");
  sat_cmd->add_option("file", args.file)->required();
  auto* string_cmd = oracle_cmd->add_subcommand("string", "label string membership");
  string_cmd->add_option("--grammar", args.grammar);
  string_cmd->add_option("tokens", args.tokens)->required()->expected(-1);
  string_cmd->add_flag("--exit-status", args.exit_status);
  auto* walk_cmd = oracle_cmd->add_subcommand("walk", "bounded walk enumeration");
  walk_cmd->add_option("file", args.file)->required();
  walk_cmd->add_option("--s", args.s)->required();
  walk_cmd->add_option("--t", args.t)->required();
  walk_cmd->add_option("--max-len", args.bound)->required();
  walk_cmd->add_flag("--exit-status", args.exit_status);
  auto* gap_cmd = oracle_cmd->add_subcommand("gap", "bounded gap-pair check");
  gap_cmd->add_option("file", args.file)->required();
  gap_cmd->add_option("--a", args.a)->required();
  gap_cmd->add_option("--c", args.c)->required();
  gap_cmd->add_option("--d", args.d)->required();
  gap_cmd->add_option("--b", args.b)->required();
  gap_cmd->add_option("--b1", args.b1)->required();
  gap_cmd->add_option("--b2", args.b2)->required();
  gap_cmd->add_flag("--exit-status", args.exit_status);
  auto* cross_cmd = oracle_cmd->add_subcommand("crosscheck", "closure vs saturation sweep");
  cross_cmd->add_option("file", args.file)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "instance-to-instance constructions");
  reduce_cmd->add_option("name", args.name)
      ->required()
      ->check(CLI::IsMember({"eliminate-eps", "stconn", "balanced", "positive-balanced",
                             "onesgs-to-balanced", "k-balanced"}));
  reduce_cmd->add_option("in", args.file)->required();
  reduce_cmd->add_option("out", args.out)->required();
  reduce_cmd->add_option("--s", args.s);
  reduce_cmd->add_option("--t", args.t);
  reduce_cmd->add_option("--k", args.k);

  auto* gen_cmd = app.add_subcommand("gen", "generate instances and digraphs");
  gen_cmd->require_subcommand(1);
  auto* gen_random_cmd = gen_cmd->add_subcommand("random", "seeded random instance");
  gen_random_cmd->add_option("out", args.out)->required();
  gen_random_cmd->add_option("--n", args.n)->required();
  gen_random_cmd->add_option("--k", args.k)->required();
  gen_random_cmd->add_option("--variant", args.variant);
  gen_random_cmd->add_option("--density", args.density);
  gen_random_cmd->add_option("--seed", args.seed)->required();
  auto* gen_theta_cmd = gen_cmd->add_subcommand("theta-n2", "quadratic balanced-walk family");
  gen_theta_cmd->add_option("out", args.out)->required();
  gen_theta_cmd->add_option("--n", args.n)->required();

  auto* pram_cmd = app.add_subcommand("pram", "hook-and-contract connectivity simulation");
  pram_cmd->add_option("file", args.file)->required();
  pram_cmd->add_flag("--stats", args.stats);
  pram_cmd->add_flag("--dump", args.dump);

  auto* auxpda_cmd = app.add_subcommand("auxpda", "auxiliary pushdown automata");
  auxpda_cmd->require_subcommand(1);
  auto* ag_cmd = auxpda_cmd->add_subcommand("graph", "emit the configuration-graph instance");
  ag_cmd->add_option("machine", args.machine)->required();
  ag_cmd->add_option("out", args.out)->required();
  ag_cmd->add_option("--input", args.input_word);
  auto* arun_cmd = auxpda_cmd->add_subcommand("run", "direct full-configuration simulation");
  arun_cmd->add_option("machine", args.machine)->required();
  arun_cmd->add_option("--input", args.input_word);
  arun_cmd->add_option("--step-bound", args.step_bound);
  arun_cmd->add_option("--stack-bound", args.stack_bound);
  arun_cmd->add_flag("--exit-status", args.exit_status);

  auto* bench_cmd = app.add_subcommand("bench", "per-iteration squaring metrics as CSV");
  bench_cmd->add_option("file", args.file)->required();
  bench_cmd->add_option("--method", args.method);
  bench_cmd->add_option("--max-iters", args.max_iters);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*validate_cmd) {
      auto f = rlz::load_instance(args.file);
      auto rep = rlz::validate(f.graph, f.variant);
      std::cout << (rep.ok() ? "YES" : "NO") << "\n";
      for (const auto& v : rep.violations) std::cout << v << "\n";
      return rep.ok() || !args.exit_status ? 0 : kExitNo;
    }

    if (*init_cmd) {
      auto f = rlz::load_instance(args.file);
      auto inst = rlz::initialize(f.graph, f.variant, args.max_n);
      std::cout << "n=" << inst.n() << " k=" << f.graph.k() << " variant="
                << rlz::to_string(f.variant) << "\n";
      std::cout << "standard_bits=" << inst.standard.popcount()
                << " gap_bits=" << inst.gap.popcount() << "\n";
      return 0;
    }

    if (*closure_cmd) {
      auto f = rlz::load_instance(args.file);
      auto inst = rlz::initialize(f.graph, f.variant, args.max_n);
      auto res = rlz::transitive_closure(inst, parse_method(args.method), args.max_iters);
      if (args.dump) {
        rlz::dump_closure(std::cout, res.e_star, res.gap_star);
      } else {
        std::cout << "iterations=" << res.iterations << " e_bits=" << res.e_star.popcount()
                  << " gap_bits=" << res.gap_star.popcount() << "\n";
      }
      return 0;
    }

    if (*query_cmd) {
      auto f = rlz::load_instance(args.file);
      auto inst = rlz::initialize(f.graph, f.variant);
      auto res = rlz::transitive_closure(inst, parse_method(args.method));
      bool yes;
      if (gap_opt->count()) {
        yes = rlz::query_gap(res, std::stoi(args.tokens[0]), std::stoi(args.tokens[1]),
                             std::stoi(args.tokens[2]), std::stoi(args.tokens[3]));
      } else {
        yes = rlz::query(res, args.s, args.t);
      }
      return decision(yes, args.exit_status);
    }

    if (*balanced_cmd) {
      auto f = rlz::load_digraph(args.file);
      rlz::oracle::BalancedMode mode = args.mode == "positive"
                                           ? rlz::oracle::BalancedMode::Positive
                                       : args.mode == "kbalanced"
                                           ? rlz::oracle::BalancedMode::KBalanced
                                       : args.mode == "positive-kbalanced"
                                           ? rlz::oracle::BalancedMode::PositiveKBalanced
                                           : rlz::oracle::BalancedMode::Balanced;
      auto len = rlz::oracle::balanced_walk_dp(f.graph, args.s, args.t, args.bound, mode, args.k);
      std::cout << (len ? "YES" : "NO") << "\n";
      if (len) std::cout << "minimal length " << *len << "\n";
      return len || !args.exit_status ? 0 : kExitNo;
    }

    if (*sat_cmd) {
      auto f = rlz::load_instance(args.file);
      auto inst = rlz::initialize(f.graph, f.variant);
      auto r = rlz::oracle::saturate_realizable(inst);
      for (int a = 0; a < r.n(); ++a)
        for (int b = 0; b < r.n(); ++b)
          if (r.get(a, b)) std::cout << "E " << a << ' ' << b << "\n";
      return 0;
    }

    if (*string_cmd) {
      std::string joined;
      for (const auto& t : args.tokens) joined += t + " ";
      auto s = rlz::parse_label_string(joined);
      return decision(rlz::is_realizable_string(s, parse_grammar(args.grammar)),
                      args.exit_status);
    }

    if (*walk_cmd) {
      auto f = rlz::load_instance(args.file);
      auto inst = rlz::initialize(f.graph, f.variant);
      bool yes = rlz::oracle::enumerate_walk_check(inst, args.s, args.t,
                                                   rlz::WalkBound{args.bound},
                                                   rlz::oracle::grammar_of(f.variant));
      return decision(yes, args.exit_status);
    }

    if (*gap_cmd) {
      auto f = rlz::load_instance(args.file);
      auto inst = rlz::initialize(f.graph, f.variant);
      bool yes = rlz::oracle::gap_pair_check(inst, args.a, args.c, args.d, args.b,
                                             rlz::WalkBound{args.b1}, rlz::WalkBound{args.b2},
                                             rlz::oracle::grammar_of(f.variant));
      return decision(yes, args.exit_status);
    }

    if (*cross_cmd) {
      auto f = rlz::load_instance(args.file);
      auto inst = rlz::initialize(f.graph, f.variant);
      auto sat = rlz::oracle::saturate_realizable(inst);
      std::vector<rlz::ClosureMethod> methods{rlz::ClosureMethod::Square,
                                              rlz::ClosureMethod::SimpleSquare};
      if (rlz::gap_symmetric(f.variant)) methods.push_back(rlz::ClosureMethod::SymmetricSquare);
      long long mismatches = 0;
      for (auto m : methods) {
        auto res = rlz::transitive_closure(inst, m);
        if (!(res.e_star == sat)) ++mismatches;
      }
      if (mismatches == 0) {
        std::cout << "OK pairs=" << inst.n() * inst.n() << "\n";
        return 0;
      }
      std::cout << "MISMATCH methods=" << mismatches << "\n";
      return kExitNo;
    }

    if (*reduce_cmd) {
      if (args.name == "eliminate-eps") {
        auto f = rlz::load_instance(args.file);
        auto red = rlz::eliminate_epsilon(f.graph, f.variant);
        rlz::save_instance(args.out, red.graph, red.variant, f.s, f.t);
        write_cert(args.out, red.cert);
      } else if (args.name == "stconn") {
        auto f = rlz::load_digraph(args.file);
        int s = f.s.value_or(args.s), t = f.t.value_or(args.t);
        auto red = rlz::stconn_to_1logcfl(f.graph, s, t);
        rlz::save_instance(args.out, red.graph, red.variant, s, t);
        write_cert(args.out, red.cert);
      } else if (args.name == "balanced") {
        auto f = rlz::load_digraph(args.file);
        int s = f.s.value_or(args.s), t = f.t.value_or(args.t);
        auto red = rlz::balanced_to_1sgs(f.graph, s, t);
        rlz::save_instance(args.out, red.graph, red.variant, s, t);
        write_cert(args.out, red.cert);
      } else if (args.name == "positive-balanced") {
        auto f = rlz::load_digraph(args.file);
        int s = f.s.value_or(args.s), t = f.t.value_or(args.t);
        auto red = rlz::positive_balanced_to_1s(f.graph, s, t);
        rlz::save_instance(args.out, red.graph, red.variant, s, t);
        write_cert(args.out, red.cert);
      } else if (args.name == "onesgs-to-balanced") {
        auto f = rlz::load_instance(args.file);
        int s = f.s.value_or(args.s), t = f.t.value_or(args.t);
        auto red = rlz::onesgs_to_balanced(f.graph, s, t);
        rlz::save_digraph(args.out, red.graph, red.s, red.t);
        write_cert(args.out, red.cert);
      } else {  // k-balanced
        auto f = rlz::load_digraph(args.file);
        int s = f.s.value_or(args.s), t = f.t.value_or(args.t);
        auto red = rlz::k_balanced_reduce(f.graph, s, t, args.k);
        rlz::save_digraph(args.out, red.graph, red.s, red.t);
        write_cert(args.out, red.cert);
      }
      std::cout << "wrote " << args.out << "\n";
      return 0;
    }

    if (*gen_random_cmd) {
      auto variant = rlz::variant_from_string(args.variant);
      if (!variant) throw CLI::ValidationError("--variant", "unknown variant");
      auto inst = rlz::gen_random(args.n, args.k, *variant, args.density, args.seed);
      rlz::save_instance(args.out, inst.graph, inst.variant);
      std::cout << "wrote " << args.out << "\n";
      return 0;
    }

    if (*gen_theta_cmd) {
      auto fam = rlz::gen_theta_n2(args.n);
      rlz::save_digraph(args.out, fam.graph, fam.s, fam.t);
      std::cout << "wrote " << args.out << " s=" << fam.s << " t=" << fam.t << "\n";
      return 0;
    }

    if (*pram_cmd) {
      auto f = rlz::load_instance(args.file);
      auto inst = rlz::initialize(f.graph, f.variant);
      auto st = rlz::pram::connect(inst);
      if (args.stats) {
        nlohmann::json j{{"n", st.n},
                         {"outerIterations", st.metrics.outer_iterations},
                         {"pointerJumpSteps", st.metrics.pointer_jump_steps},
                         {"logicalProcessors", st.metrics.logical_processors}};
        std::cout << j.dump() << "\n";
      } else if (args.dump) {
        rlz::dump_closure(std::cout, st.e_star, st.y_star);
      } else {
        std::cout << "outer=" << st.metrics.outer_iterations
                  << " e_bits=" << st.e_star.popcount() << " gap_bits=" << st.y_star.popcount()
                  << "\n";
      }
      return 0;
    }

    if (*ag_cmd || *arun_cmd) {
      std::ifstream mf(args.machine);
      if (!mf) throw std::invalid_argument("cannot open machine file: " + args.machine);
      rlz::auxpda::AuxPdaSpec spec = nlohmann::json::parse(mf).get<rlz::auxpda::AuxPdaSpec>();
      auto word = explode(args.input_word);
      if (*ag_cmd) {
        auto cg = rlz::auxpda::config_graph(spec, word);
        rlz::save_instance(args.out, cg.graph, cg.variant, cg.s, cg.t);
        std::cout << "wrote " << args.out << " n=" << cg.graph.n() << " s=" << cg.s
                  << " t=" << cg.t << "\n";
        return 0;
      }
      auto outcome = rlz::auxpda::direct_simulate(spec, word, args.step_bound, args.stack_bound);
      if (outcome == rlz::auxpda::SimOutcome::Budget) {
        std::cout << "BUDGET\n";
        return kExitBudget;
      }
      return decision(outcome == rlz::auxpda::SimOutcome::Accept, args.exit_status);
    }

    if (*bench_cmd) {
      auto f = rlz::load_instance(args.file);
      auto inst = rlz::initialize(f.graph, f.variant);
      auto method = parse_method(args.method);
      int max_iters = args.max_iters > 0 ? args.max_iters : rlz::default_max_iters(inst.n());
      rlz::StandardMatrix e = inst.standard;
      rlz::GapMatrix y = inst.gap;
      std::cout << "iteration,e_bits,gap_bits,millis\n";
      for (int i = 1; i <= max_iters; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        bool changed = method == rlz::ClosureMethod::Square ? rlz::square_step(e, y)
                       : method == rlz::ClosureMethod::SimpleSquare
                           ? rlz::simple_square_step(e, y)
                           : rlz::symmetric_square_step(e, y);
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
        std::cout << i << ',' << e.popcount() << ',' << y.popcount() << ',' << ms.count() << "\n";
        if (!changed) break;
      }
      return 0;
    }
  } catch (const rlz::budget_error& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
