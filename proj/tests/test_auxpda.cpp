#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rlz/auxpda.hpp"
#include "rlz/closure.hpp"
#include "rlz/oracle.hpp"
#include "support/fixtures.hpp"

using namespace rlz;
using namespace rlz::auxpda;

namespace {

std::vector<std::string> word(const std::string& s) {
  std::vector<std::string> out;
  for (char ch : s) out.emplace_back(1, ch);
  return out;
}

bool dyck_ok(const std::string& s) {
  int bal = 0;
  for (char ch : s) {
    bal += ch == '(' ? 1 : -1;
    if (bal < 0) return false;
  }
  return bal == 0;
}

}  // namespace

TEST_CASE("inverse_transition is an involution and flips push to pop") {
  auto m = fixtures::dyck_machine();
  for (const auto& t : m.transitions) {
    auto inv = inverse_transition(t);
    CHECK(inverse_transition(inv) == t);
    if (t.stack.move == 1) CHECK(inv.stack.move == -1);
    if (t.input.move == 1) CHECK(inv.input.move == -1);
    CHECK(inv.from == t.to);
    CHECK(inv.to == t.from);
  }
}

TEST_CASE("symmetric_closure doubles one-way transitions and is idempotent") {
  auto m = fixtures::dyck_machine();
  CHECK_FALSE(is_symmetric(m));
  auto sym = symmetric_closure(m);
  CHECK(is_symmetric(sym));
  CHECK(sym.transitions.size() > m.transitions.size());
  auto again = symmetric_closure(sym);
  CHECK(again.transitions.size() == sym.transitions.size());
}

TEST_CASE("direct_simulate on the Dyck machine") {
  auto m = fixtures::dyck_machine();
  CHECK(direct_simulate(m, word("(()())"), 64, 16) == SimOutcome::Accept);
  CHECK(direct_simulate(m, word("(()"), 64, 16) == SimOutcome::Reject);
  CHECK(direct_simulate(m, word(")("), 64, 16) == SimOutcome::Reject);
  CHECK(direct_simulate(m, word(""), 64, 16) == SimOutcome::Accept);
  for (auto s : {"()", "(())", "()()", "((", "))", "()(", "())"})
    CHECK((direct_simulate(m, word(s), 64, 16) == SimOutcome::Accept) == dyck_ok(s));
}

TEST_CASE("direct_simulate budget outcomes") {
  // a machine that only pushes runs into the stack bound
  AuxPdaSpec m;
  m.states = {"p"};
  m.initial = "p";
  m.finals = {};
  m.input_alphabet = {};
  m.stack_alphabet = {"$", "X"};
  m.work_alphabet = {"_"};
  m.work_tape_length = 1;
  for (const auto& top : m.stack_alphabet)
    m.transitions.push_back({"p", "p", Triple{{top}, 1, {top, "X"}}, Triple{{"<"}, 0, {"<"}},
                             Triple{{"_"}, 0, {"_"}}});
  CHECK(direct_simulate(m, {}, 1000, 8) == SimOutcome::Budget);

  // immediate accept
  AuxPdaSpec ok;
  ok.states = {"q"};
  ok.initial = "q";
  ok.finals = {"q"};
  ok.input_alphabet = {};
  ok.stack_alphabet = {"$"};
  ok.work_alphabet = {"_"};
  ok.work_tape_length = 1;
  CHECK(direct_simulate(ok, {}, 0, 4) == SimOutcome::Accept);
}

TEST_CASE("config_graph structure on the Dyck machine") {
  auto m = fixtures::dyck_machine();
  auto cg = config_graph(m, word("()"));
  CHECK(validate(cg.graph, cg.variant).ok());
  CHECK(cg.variant == ProblemVariant::LogCfl);  // directed, k = 2
  // push edges always enter a vertex labeled with the pushed symbol
  std::map<std::string, int> id;
  for (std::size_t i = 0; i < m.stack_alphabet.size(); ++i)
    id[m.stack_alphabet[i]] = static_cast<int>(i) + 1;
  for (const Edge& e : cg.graph.edge_list())
    if (e.kind == EdgeKind::Push && e.v != cg.t)
      CHECK(cg.graph.label(e.v) == id["X"]);
}

TEST_CASE("config_graph of a symmetric machine validates as symmetric") {
  auto m = fixtures::symmetric_ab_machine();
  REQUIRE(is_symmetric(m));
  auto cg = config_graph(m, word("ab"));
  CHECK_FALSE(cg.graph.directed());
  CHECK(cg.variant == ProblemVariant::SLogCfl);
  CHECK(validate(cg.graph, cg.variant).ok());
}

TEST_CASE("realizability on the config graph equals direct simulation") {
  auto m = fixtures::dyck_machine();
  for (auto s : {"", "()", ")(", "(()", "(())", "()()", "())(", "((()))"}) {
    std::string in(s);
    auto cg = config_graph(m, word(in));
    auto inst = initialize(cg.graph, cg.variant);
    auto res = transitive_closure(inst, ClosureMethod::SimpleSquare);
    bool graph_accepts = query(res, cg.s, cg.t);
    bool sim_accepts = direct_simulate(m, word(in), 1 << 12, 64) == SimOutcome::Accept;
    CAPTURE(in);
    CHECK(graph_accepts == sim_accepts);
    CHECK(sim_accepts == dyck_ok(in));
  }
}

TEST_CASE("symmetric machine: config graph closure equals direct simulation") {
  auto m = fixtures::symmetric_ab_machine();
  for (auto s : {"", "a", "b", "ab", "ba", "aabb", "abab", "aab"}) {
    auto cg = config_graph(m, word(s));
    auto inst = initialize(cg.graph, cg.variant);
    auto res = transitive_closure(inst, ClosureMethod::SimpleSquare);
    bool graph_accepts = query(res, cg.s, cg.t);
    bool sim_accepts = direct_simulate(m, word(s), 1 << 14, 64) == SimOutcome::Accept;
    CAPTURE(s);
    CHECK(graph_accepts == sim_accepts);
  }
}

TEST_CASE("config_graph rejects machines it cannot encode faithfully") {
  AuxPdaSpec m;
  m.states = {"q"};
  m.initial = "q";
  m.finals = {};
  m.input_alphabet = {};
  m.stack_alphabet = {"$", "X", "Y"};
  m.work_alphabet = {"_"};
  m.work_tape_length = 1;
  // a push that rewrites the symbol under the new top
  m.transitions.push_back({"q", "q", Triple{{"X"}, 1, {"Y", "X"}}, Triple{{"<"}, 0, {"<"}},
                           Triple{{"_"}, 0, {"_"}}});
  CHECK_THROWS_AS(config_graph(m, {}), std::invalid_argument);
}

TEST_CASE("spec validation catches malformed machines") {
  auto m = fixtures::dyck_machine();
  auto bad = m;
  bad.initial = "nope";
  CHECK_THROWS_AS(validate_spec(bad), std::invalid_argument);
  bad = m;
  bad.transitions.push_back({"scan", "scan", Triple{{"$", "$"}, -1, {"$"}},
                             Triple{{"<"}, 0, {"<"}}, Triple{{"_"}, 0, {"_"}}});
  CHECK_THROWS_AS(validate_spec(bad), std::invalid_argument);  // pops $
  bad = m;
  bad.transitions.push_back({"scan", "scan", Triple{{"$"}, 0, {"$"}},
                             Triple{{"<"}, 0, {">"}}, Triple{{"_"}, 0, {"_"}}});
  CHECK_THROWS_AS(validate_spec(bad), std::invalid_argument);  // writes the input tape
}

TEST_CASE("machine JSON round trip") {
  auto m = fixtures::dyck_machine();
  nlohmann::json j = m;
  auto back = j.get<AuxPdaSpec>();
  CHECK(back.states == m.states);
  CHECK(back.transitions == m.transitions);
  CHECK(back.work_tape_length == m.work_tape_length);
}
