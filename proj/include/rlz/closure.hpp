#pragma once

#include <cmath>

#include "rlz/errors.hpp"
#include "rlz/tensor.hpp"

namespace rlz {

enum class ClosureMethod { Square, SimpleSquare, SymmetricSquare };

inline const char* to_string(ClosureMethod m) {
  switch (m) {
    case ClosureMethod::Square: return "square";
    case ClosureMethod::SimpleSquare: return "simple";
    case ClosureMethod::SymmetricSquare: return "symmetric";
  }
  return "?";
}

struct ClosureResult {
  StandardMatrix e_star;
  GapMatrix gap_star;
  int iterations = 0;
  ClosureMethod method = ClosureMethod::SimpleSquare;
};

inline int default_max_iters(int n) {
  return 8 * static_cast<int>(std::ceil(std::log2(n + 1))) + 8;
}

// One Square step:
//   E = Y (x)2 ((Y (x)2 E) (x)1 E)
//   Y = (Y (x)5 ((Y (x)5 Y) (x)3 E)) + (Y (x)5 ((Y (x)2 E) (x)4 Y))
// E is updated first and the Y update reads the updated E; every assignment
// OR-accumulates into the running matrix. Returns true when a bit was added.
inline bool square_step(StandardMatrix& e, GapMatrix& y) {
  bool changed = false;
  changed |= e.bits().or_with(contract(y, compose(contract(y, e), e)).bits());
  GapMatrix first = substitute(y, extend(substitute(y, y), e, ExtendMode::AfterB));
  GapMatrix second = substitute(y, extend(y, contract(y, e), ExtendMode::BeforeA));
  changed |= y.bits().or_with(first.bits());
  changed |= y.bits().or_with(second.bits());
  return changed;
}

// Test-only reference for square_step: the explicit quintuple sums, written
// as plain loops. Same staging: E first, then Y from the updated E.
inline bool square_step_reference(StandardMatrix& e, GapMatrix& y) {
  int n = e.n();
  StandardMatrix e_new(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool acc = false;
      for (int c = 0; c < n && !acc; ++c)
        for (int d = 0; d < n && !acc; ++d) {
          if (!y.get(a, c, d, b)) continue;
          for (int ee = 0; ee < n && !acc; ++ee)
            for (int f = 0; f < n && !acc; ++f) {
              if (!e.get(ee, f)) continue;
              for (int g = 0; g < n && !acc; ++g)
                if (y.get(c, ee, f, g) && e.get(g, d)) acc = true;
            }
        }
      if (acc) e_new.set(a, b);
    }
  bool changed = e.bits().or_with(e_new.bits());

  GapMatrix y_new(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          bool acc = false;
          for (int cp = 0; cp < n && !acc; ++cp)
            for (int dp = 0; dp < n && !acc; ++dp) {
              if (!y.get(a, cp, dp, b)) continue;
              for (int ep = 0; ep < n && !acc; ++ep)
                for (int fp = 0; fp < n && !acc; ++fp)
                  for (int gp = 0; gp < n && !acc; ++gp) {
                    if (!y.get(cp, ep, fp, gp)) continue;
                    if (y.get(ep, c, d, fp) && e.get(gp, dp)) acc = true;
                    if (!acc && e.get(ep, fp) && y.get(gp, c, d, dp)) acc = true;
                  }
            }
          if (acc) y_new.set(a, c, d, b);
        }
  changed |= y.bits().or_with(y_new.bits());
  return changed;
}

// One SimpleSquare step: the seven assignments in order, each OR-accumulated.
inline bool simple_square_step(StandardMatrix& e, GapMatrix& y) {
  bool changed = false;
  changed |= e.bits().or_with(compose(e, e).bits());
  changed |= e.bits().or_with(contract(y, e).bits());
  changed |= y.bits().or_with(extend(y, e, ExtendMode::AfterB).bits());
  changed |= y.bits().or_with(extend(y, e, ExtendMode::BeforeA).bits());
  changed |= y.bits().or_with(substitute(y, y).bits());
  changed |= y.bits().or_with(extend(y, e, ExtendMode::IntoD).bits());
  changed |= y.bits().or_with(extend(y, e, ExtendMode::IntoC).bits());
  return changed;
}

// One SymmetricSquare step. Requires inputs satisfying the symmetric-gap
// identities; the output is re-closed under them.
inline bool symmetric_square_step(StandardMatrix& e, GapMatrix& y) {
  if (!e.is_symmetric() || !is_gap_symmetric(y))
    throw std::invalid_argument("symmetric_square_step: input violates symmetry identities");
  bool changed = false;
  changed |= e.bits().or_with(compose(e, e).bits());
  changed |= e.bits().or_with(contract(y, e).bits());
  changed |= y.bits().or_with(extend(y, e, ExtendMode::AfterB).bits());
  changed |= y.bits().or_with(substitute(y, y).bits());
  changed |= e.symmetrize();
  changed |= symmetrize_gap(y);
  return changed;
}

// Iterates the chosen step until the pair <Y,E> is bit-identical across an
// application. The iteration count includes the confirming application.
inline ClosureResult transitive_closure(const Instance& inst, ClosureMethod method,
                                        int max_iters = -1) {
  if (method == ClosureMethod::SymmetricSquare && !gap_symmetric(inst.variant))
    throw std::invalid_argument("SymmetricSquare requires a symmetric-gap variant");
  if (max_iters < 0) max_iters = default_max_iters(inst.n());

  ClosureResult res{inst.standard, inst.gap, 0, method};
  for (;;) {
    bool changed = false;
    switch (method) {
      case ClosureMethod::Square: changed = square_step(res.e_star, res.gap_star); break;
      case ClosureMethod::SimpleSquare:
        changed = simple_square_step(res.e_star, res.gap_star);
        break;
      case ClosureMethod::SymmetricSquare:
        changed = symmetric_square_step(res.e_star, res.gap_star);
        break;
    }
    ++res.iterations;
    if (!changed) break;
    if (res.iterations >= max_iters)
      throw iteration_budget_error("transitive_closure: no fixpoint within " +
                                   std::to_string(max_iters) + " iterations (bug signal)");
  }
  return res;
}

inline bool query(const ClosureResult& res, int s, int t) {
  if (s < 0 || s >= res.e_star.n() || t < 0 || t >= res.e_star.n())
    throw std::out_of_range("query: vertex out of range");
  return res.e_star.get(s, t);
}

inline bool query_gap(const ClosureResult& res, int a, int c, int d, int b) {
  int n = res.gap_star.n();
  for (int v : {a, c, d, b})
    if (v < 0 || v >= n) throw std::out_of_range("query_gap: vertex out of range");
  return res.gap_star.get(a, c, d, b);
}

}  // namespace rlz
