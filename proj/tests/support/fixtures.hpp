#pragma once

// Shared test fixtures: tiny hand-built graphs, reference (loop-level)
// implementations of the tensor products, and the example machines.

#include <vector>

#include "rlz/auxpda.hpp"
#include "rlz/instance.hpp"
#include "rlz/reductions.hpp"
#include "rlz/tensor.hpp"

namespace fixtures {

// push (0,1), pop (1,2), all labels a1 — the running 3-vertex chain.
inline rlz::LabeledGraph chain3() {
  rlz::LabeledGraph g(3, 1, true);
  g.add_edge(0, 1, rlz::EdgeKind::Push);
  g.add_edge(1, 2, rlz::EdgeKind::Pop);
  g.add_reflexive_eps();
  return g;
}

// Loop-level references for the seven products.

inline rlz::StandardMatrix ref_compose(const rlz::StandardMatrix& e1,
                                       const rlz::StandardMatrix& e2) {
  int n = e1.n();
  rlz::StandardMatrix out(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int z = 0; z < n; ++z)
        if (e1.get(a, z) && e2.get(z, b)) out.set(a, b);
  return out;
}

inline rlz::StandardMatrix ref_contract(const rlz::GapMatrix& y, const rlz::StandardMatrix& e) {
  int n = y.n();
  rlz::StandardMatrix out(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if (y.get(a, c, d, b) && e.get(c, d)) out.set(a, b);
  return out;
}

inline rlz::GapMatrix ref_extend(const rlz::GapMatrix& y, const rlz::StandardMatrix& e,
                                 rlz::ExtendMode mode) {
  int n = y.n();
  rlz::GapMatrix out(n);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int d = 0; d < n; ++d)
        for (int b = 0; b < n; ++b) {
          if (!y.get(a, c, d, b)) continue;
          for (int z = 0; z < n; ++z) {
            switch (mode) {
              case rlz::ExtendMode::AfterB:
                if (e.get(b, z)) out.set(a, c, d, z);
                break;
              case rlz::ExtendMode::BeforeA:
                if (e.get(z, a)) out.set(z, c, d, b);
                break;
              case rlz::ExtendMode::IntoD:
                if (e.get(z, d)) out.set(a, c, z, b);
                break;
              case rlz::ExtendMode::IntoC:
                if (e.get(c, z)) out.set(a, z, d, b);
                break;
            }
          }
        }
  return out;
}

inline rlz::GapMatrix ref_substitute(const rlz::GapMatrix& y1, const rlz::GapMatrix& y2) {
  int n = y1.n();
  rlz::GapMatrix out(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (!y1.get(a, c, d, b)) continue;
          for (int e = 0; e < n; ++e)
            for (int f = 0; f < n; ++f)
              if (y2.get(c, e, f, d)) out.set(a, e, f, b);
        }
  return out;
}

inline rlz::GapMatrix random_gap(int n, double density, uint64_t seed) {
  rlz::SplitMix64 rng(seed);
  rlz::GapMatrix y(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if (rng.chance(density)) y.set(a, c, d, b);
  return y;
}

inline rlz::StandardMatrix random_standard(int n, double density, uint64_t seed) {
  rlz::SplitMix64 rng(seed);
  rlz::StandardMatrix e(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (rng.chance(density)) e.set(a, b);
  return e;
}

// Pushdown recognizer for balanced parentheses: push X on '(', pop X on ')',
// accept at the right end marker with a bare-bottom stack.
inline rlz::auxpda::AuxPdaSpec dyck_machine() {
  using namespace rlz::auxpda;
  AuxPdaSpec m;
  m.states = {"scan", "acc"};
  m.initial = "scan";
  m.finals = {"acc"};
  m.input_alphabet = {"(", ")"};
  m.stack_alphabet = {"$", "X"};
  m.work_alphabet = {"_"};
  m.work_tape_length = 1;

  Triple work_noop{{"_"}, 0, {"_"}};
  auto stack_noop = [](const std::string& s) { return Triple{{s}, 0, {s}}; };
  auto push_x = [](const std::string& top) { return Triple{{top}, 1, {top, "X"}}; };
  Triple pop_top_dollar{{"$", "X"}, -1, {"$"}};
  Triple pop_top_x{{"X", "X"}, -1, {"X"}};

  std::vector<std::string> cells{"<", "(", ")", ">"};
  auto move_right = [](const std::string& at, const std::string& nxt) {
    return Triple{{at, nxt}, 1, {at, nxt}};
  };

  // leave the left marker
  for (const auto& nxt : std::vector<std::string>{"(", ")", ">"})
    for (const auto& top : m.stack_alphabet)
      m.transitions.push_back({"scan", "scan", stack_noop(top), move_right("<", nxt), work_noop});
  // '(' pushes, ')' pops, always moving right
  for (const auto& nxt : std::vector<std::string>{"(", ")", ">"}) {
    for (const auto& top : m.stack_alphabet)
      m.transitions.push_back({"scan", "scan", push_x(top), move_right("(", nxt), work_noop});
    m.transitions.push_back({"scan", "scan", pop_top_dollar, move_right(")", nxt), work_noop});
    m.transitions.push_back({"scan", "scan", pop_top_x, move_right(")", nxt), work_noop});
  }
  // accept at the right marker on a bare stack
  m.transitions.push_back(
      {"scan", "acc", stack_noop("$"), Triple{{">"}, 0, {">"}}, work_noop});
  return m;
}

// Symmetric two-stack-symbol machine: the symmetric closure of a pushdown
// recognizer over {a,b} that pushes A on 'a' and pops A on 'b'.
inline rlz::auxpda::AuxPdaSpec symmetric_ab_machine() {
  using namespace rlz::auxpda;
  AuxPdaSpec m;
  m.states = {"scan", "acc"};
  m.initial = "scan";
  m.finals = {"acc"};
  m.input_alphabet = {"a", "b"};
  m.stack_alphabet = {"$", "A"};
  m.work_alphabet = {"_"};
  m.work_tape_length = 1;

  Triple work_noop{{"_"}, 0, {"_"}};
  auto move_right = [](const std::string& at, const std::string& nxt) {
    return Triple{{at, nxt}, 1, {at, nxt}};
  };
  for (const auto& nxt : std::vector<std::string>{"a", "b", ">"}) {
    for (const auto& top : m.stack_alphabet) {
      m.transitions.push_back(
          {"scan", "scan", Triple{{top}, 0, {top}}, move_right("<", nxt), work_noop});
      m.transitions.push_back(
          {"scan", "scan", Triple{{top}, 1, {top, "A"}}, move_right("a", nxt), work_noop});
    }
    m.transitions.push_back(
        {"scan", "scan", Triple{{"$", "A"}, -1, {"$"}}, move_right("b", nxt), work_noop});
    m.transitions.push_back(
        {"scan", "scan", Triple{{"A", "A"}, -1, {"A"}}, move_right("b", nxt), work_noop});
  }
  m.transitions.push_back({"scan", "acc", Triple{{"$"}, 0, {"$"}}, Triple{{">"}, 0, {">"}},
                           work_noop});
  return symmetric_closure(m);
}

}  // namespace fixtures
