#pragma once

#include <cmath>

#include "rlz/closure.hpp"
#include "rlz/errors.hpp"
#include "rlz/instance.hpp"

// Deterministic synchronous-round simulation of the CREW hook-and-contract
// connectivity algorithm on <Y,E>. Every "parallel step" is a full array
// pass; exclusive writes are modeled by writing each step into a fresh
// buffer, then swapping. Component labels use plain integer order on vertices
// and lexicographic order on vertex pairs.

namespace rlz::pram {

struct Metrics {
  int outer_iterations = 0;
  long long pointer_jump_steps = 0;           // total across outer iterations
  int max_pointer_jump_per_iteration = 0;
  long long logical_processors = 0;           // accounting constant n^4
};

struct PramState {
  std::vector<int> x_e;   // component label per vertex (least member)
  std::vector<int> x_y;   // component label per ordered pair, mirror-equal
  StandardMatrix e_star;
  GapMatrix y_star;
  Metrics metrics;

  int n = 0;
  int pair_id(int i, int j) const { return i * n + j; }
};

inline int default_outer_budget(int n) {
  return 4 * static_cast<int>(std::ceil(std::log2(n + 1))) + 4;
}

inline int default_jump_budget(int n) {
  return static_cast<int>(std::ceil(std::log2(static_cast<double>(n) * n))) + 1;
}

// Candidate representative for vertex i: the least neighboring component
// label reachable through a known standard edge or a closed-gap entry
// Y*[i,(k,k),j]; i's own label when no such neighbor exists.
inline int standard_hook(const PramState& st, int i) {
  int best = -1;
  auto offer = [&](int j) {
    int lab = st.x_e[static_cast<std::size_t>(j)];
    if (lab == st.x_e[static_cast<std::size_t>(i)]) return;
    if (best < 0 || lab < best) best = lab;
  };
  for (int j = 0; j < st.n; ++j)
    if (st.e_star.get(i, j)) offer(j);
  for (int j = 0; j < st.n; ++j) {
    if (st.x_e[static_cast<std::size_t>(j)] == st.x_e[static_cast<std::size_t>(i)]) continue;
    for (int k = 0; k < st.n; ++k)
      if (st.y_star.get(i, k, k, j)) {
        offer(j);
        break;
      }
  }
  return best < 0 ? st.x_e[static_cast<std::size_t>(i)] : best;
}

// Candidate representative for the pair (i,j): least label among pairs (k,l)
// linked by a gap entry Y*[i,(k,l),j], and pairs reached by extending either
// coordinate through a standard edge. The written rule extends the first
// coordinate; applying it to both orientations of the unordered pair keeps
// the mirror invariant.
inline int gap_hook(const PramState& st, int i, int j) {
  int self = st.x_y[static_cast<std::size_t>(st.pair_id(i, j))];
  int best = -1;
  auto offer = [&](int pid) {
    int lab = st.x_y[static_cast<std::size_t>(pid)];
    if (lab == self) return;
    if (best < 0 || lab < best) best = lab;
  };
  st.y_star.bits().for_each_set_in_row(st.y_star.row_of(i, j), [&](int bit) {
    auto [k, l] = st.y_star.col_pair(bit);
    offer(st.pair_id(k, l));
  });
  for (int k = 0; k < st.n; ++k) {
    if (st.e_star.get(i, k)) offer(st.pair_id(k, j));
    if (st.e_star.get(j, k)) offer(st.pair_id(i, k));
  }
  return best < 0 ? self : best;
}

namespace detail {

// Gather each component's best candidate at its representative: reps take the
// min candidate of their members (excluding hooks back into the component),
// everyone else falls back to their current label.
inline std::vector<int> gather_to_reps(const std::vector<int>& x, const std::vector<int>& cand) {
  std::size_t n = x.size();
  std::vector<int> out(n, -1);
  for (std::size_t j = 0; j < n; ++j) {
    int rep = x[j];
    if (cand[j] == rep) continue;
    int& slot = out[static_cast<std::size_t>(rep)];
    if (slot < 0 || cand[j] < slot) slot = cand[j];
  }
  for (std::size_t i = 0; i < n; ++i)
    if (out[i] < 0) out[i] = x[i];
  return out;
}

// Pointer doubling until stable. Returns the number of rounds that changed
// something; the budget is sized to collapse any pair-pseudotree, so running
// dry means the hook phase produced a malformed pointer graph.
inline int pointer_double(std::vector<int>& temp, int max_rounds) {
  int rounds = 0;
  for (;;) {
    bool changed = false;
    std::vector<int> next(temp.size());
    for (std::size_t i = 0; i < temp.size(); ++i) {
      next[i] = temp[static_cast<std::size_t>(temp[i])];
      changed |= next[i] != temp[i];
    }
    if (!changed) break;
    if (rounds >= max_rounds)
      throw iteration_budget_error("pram: pointer jumping exceeded its round budget (bug signal)");
    temp.swap(next);
    ++rounds;
  }
  return rounds;
}

inline bool min_merge(std::vector<int>& x, const std::vector<int>& temp) {
  bool changed = false;
  std::vector<int> next(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    int via = temp[i];
    next[i] = std::min(via, x[static_cast<std::size_t>(via)]);
    changed |= next[i] != x[i];
  }
  x.swap(next);
  return changed;
}

}  // namespace detail

// Parent-pointer sanity check used by tests and debug builds: every component
// of the pointer graph has exactly one cycle, of length one or two, and the
// smallest vertex of the component lies on it.
inline bool is_min_rooted_pseudoforest(const std::vector<int>& parent) {
  int n = static_cast<int>(parent.size());
  // locate each vertex's cycle by walking n steps
  std::vector<int> cyc(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    int x = v;
    for (int s = 0; s < n + 1; ++s) x = parent[static_cast<std::size_t>(x)];
    cyc[static_cast<std::size_t>(v)] = x;  // some vertex on v's cycle
  }
  for (int v = 0; v < n; ++v) {
    int c = cyc[static_cast<std::size_t>(v)];
    int c2 = parent[static_cast<std::size_t>(c)];
    if (parent[static_cast<std::size_t>(c2)] != c) return false;  // cycle longer than 2
  }
  // component minimum must sit on its cycle
  std::vector<int> comp_min(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    int key = std::min(cyc[static_cast<std::size_t>(v)],
                       parent[static_cast<std::size_t>(cyc[static_cast<std::size_t>(v)])]);
    int& slot = comp_min[static_cast<std::size_t>(key)];
    if (slot < 0 || v < slot) slot = v;
  }
  for (int v = 0; v < n; ++v) {
    int c = cyc[static_cast<std::size_t>(v)];
    int key = std::min(c, parent[static_cast<std::size_t>(c)]);
    int mn = comp_min[static_cast<std::size_t>(key)];
    if (mn != c && mn != parent[static_cast<std::size_t>(c)]) return false;
  }
  return true;
}

struct ConnectOptions {
  int outer_budget = -1;  // default 4*ceil(log2(n+1))+4
  int jump_budget = -1;   // default ceil(log2(n^2))+1
  bool check_pseudoforest = false;
};

// The outer hook / contract / update loop. Runs until the labels and both
// closure matrices are stable, and returns the same <Y*,E*> as the sequential
// symmetric squaring.
inline PramState connect(const Instance& inst, ConnectOptions opts = {}) {
  if (!gap_symmetric(inst.variant))
    throw std::invalid_argument("pram::connect requires a symmetric-gap variant");
  const int n = inst.n();
  const int outer_budget = opts.outer_budget > 0 ? opts.outer_budget : default_outer_budget(n);
  const int jump_budget = opts.jump_budget > 0 ? opts.jump_budget : default_jump_budget(n);

  PramState st;
  st.n = n;
  st.e_star = inst.standard;
  st.y_star = inst.gap;
  st.metrics.logical_processors = static_cast<long long>(n) * n * n * n;
  st.x_e.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) st.x_e[static_cast<std::size_t>(i)] = i;
  st.x_y.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      st.x_y[static_cast<std::size_t>(st.pair_id(i, j))] =
          st.pair_id(std::min(i, j), std::max(i, j));

  for (;;) {
    bool changed = false;

    // hook (steps 6-11)
    std::vector<int> cand_e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cand_e[static_cast<std::size_t>(i)] = standard_hook(st, i);
    std::vector<int> temp_e = detail::gather_to_reps(st.x_e, cand_e);

    std::vector<int> cand_y(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        cand_y[static_cast<std::size_t>(st.pair_id(i, j))] = gap_hook(st, i, j);
    std::vector<int> temp_y = detail::gather_to_reps(st.x_y, cand_y);

    if (opts.check_pseudoforest &&
        (!is_min_rooted_pseudoforest(temp_e) || !is_min_rooted_pseudoforest(temp_y)))
      throw std::logic_error("pram::connect: hook round violated the pseudoforest invariant");

    // contract (steps 12-19)
    changed |= st.x_e != temp_e || st.x_y != temp_y;
    st.x_e = temp_e;
    st.x_y = temp_y;
    int rounds = std::max(detail::pointer_double(temp_e, jump_budget),
                          detail::pointer_double(temp_y, jump_budget));
    st.metrics.pointer_jump_steps += rounds;
    st.metrics.max_pointer_jump_per_iteration =
        std::max(st.metrics.max_pointer_jump_per_iteration, rounds);
    changed |= detail::min_merge(st.x_e, temp_e);
    changed |= detail::min_merge(st.x_y, temp_y);

    // update closure matrices from co-membership (steps 20-21)
    {
      std::vector<std::vector<int>> members(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        members[static_cast<std::size_t>(st.x_e[static_cast<std::size_t>(i)])].push_back(i);
      for (const auto& m : members) {
        if (m.size() < 2) continue;
        BitMatrix mask(1, n);
        for (int v : m) mask.set(0, v);
        for (int v : m) changed |= st.e_star.bits().or_row(v, mask.row(0));
      }
    }
    {
      std::vector<std::vector<int>> members(static_cast<std::size_t>(n) * n);
      for (int p = 0; p < n * n; ++p)
        members[static_cast<std::size_t>(st.x_y[static_cast<std::size_t>(p)])].push_back(p);
      BitMatrix mask(1, st.y_star.slice_width() * n);
      for (const auto& m : members) {
        if (m.size() < 2) continue;
        mask.clear();
        for (int p : m) mask.set(0, st.y_star.col_of(p / n, p % n));
        for (int p : m) changed |= st.y_star.bits().or_row(p, mask.row(0));
      }
    }

    ++st.metrics.outer_iterations;
    if (!changed) break;
    if (st.metrics.outer_iterations >= outer_budget)
      throw iteration_budget_error("pram::connect: no fixpoint within outer budget (bug signal)");
  }
  return st;
}

}  // namespace rlz::pram
