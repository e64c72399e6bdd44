#pragma once

#include <limits>
#include <queue>
#include <tuple>

#include "rlz/errors.hpp"
#include "rlz/grammar.hpp"
#include "rlz/instance.hpp"

// Independent ground-truth machinery. Nothing in this header touches the
// tensor products or the squaring algorithms; that independence is the whole
// point of these oracles.

namespace rlz::oracle {

struct Budget {
  long long max_states = 20'000'000;
};

inline GrammarVariant grammar_of(ProblemVariant v) {
  if (gap_symmetric(v))
    return single_label(v) ? GrammarVariant::OneSymmetricGap : GrammarVariant::SymmetricGap;
  return single_label(v) ? GrammarVariant::One : GrammarVariant::Standard;
}

// Worklist closure over the realizability rules:
//   (i) R[u,u]; (ii) eps edges; (iii) push (a,c), R[c,d], pop (d,b) with
//   L[a]=L[b], L[c]=L[d]; (iv) transitivity; and for symmetric-gap variants
//   (iii') with push/pop roles swapped.
inline StandardMatrix saturate_realizable(const Instance& inst) {
  const LabeledGraph& g = inst.graph;
  const int n = g.n();
  const bool pop_push = allows_pop_push(grammar_of(inst.variant));
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u) r[u][u] = 1;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.eps().get(u, v)) r[u][v] = 1;

  bool changed = true;
  while (changed) {
    changed = false;
    auto derive = [&](int a, int b) {
      if (!r[a][b]) {
        r[a][b] = 1;
        changed = true;
      }
    };
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        bool fwd = g.pushes().get(a, c);
        bool rev = pop_push && g.pops().get(a, c);
        if (!fwd && !rev) continue;
        for (int d = 0; d < n; ++d) {
          if (!r[c][d] || g.label(c) != g.label(d)) continue;
          for (int b = 0; b < n; ++b) {
            if (g.label(a) != g.label(b)) continue;
            if (fwd && g.pops().get(d, b)) derive(a, b);
            if (rev && g.pushes().get(d, b)) derive(a, b);
          }
        }
      }
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (!r[u][v]) continue;
        for (int w = 0; w < n; ++w)
          if (r[v][w] && !r[u][w]) {
            r[u][w] = 1;
            changed = true;
          }
      }
  }

  StandardMatrix out(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (r[u][v]) out.set(u, v);
  return out;
}

inline constexpr long long kNoWalk = std::numeric_limits<long long>::max();

// Shortest realizable-walk table: out[u][v] is the minimum number of edges of
// a u->v walk whose label string the grammar accepts, or kNoWalk. Dijkstra
// over derivation rules; every rule's output length dominates its inputs, so
// items finalize in nondecreasing order.
inline std::vector<std::vector<long long>> realizable_min_lengths(const LabeledGraph& g,
                                                                  GrammarVariant gram) {
  const int n = g.n();
  const bool pop_push = allows_pop_push(gram);
  std::vector<std::vector<long long>> dist(n, std::vector<long long>(n, kNoWalk));
  std::vector<std::vector<char>> done(n, std::vector<char>(n, 0));
  using Item = std::tuple<long long, int, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;

  auto relax = [&](int u, int v, long long len) {
    if (len < dist[u][v]) {
      dist[u][v] = len;
      pq.emplace(len, u, v);
    }
  };
  for (int u = 0; u < n; ++u) relax(u, u, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.eps().get(u, v)) relax(u, v, 1);

  while (!pq.empty()) {
    auto [len, c, d] = pq.top();
    pq.pop();
    if (done[c][d]) continue;
    done[c][d] = 1;
    // wrap: a ->push c ...realizable... d ->pop b, outer labels equal
    for (int a = 0; a < n; ++a) {
      bool fwd = g.pushes().get(a, c);
      bool rev = pop_push && g.pops().get(a, c);
      if (!fwd && !rev) continue;
      for (int b = 0; b < n; ++b) {
        if (g.label(a) != g.label(b)) continue;
        if ((fwd && g.pops().get(d, b)) || (rev && g.pushes().get(d, b)))
          relax(a, b, len + 2);
      }
    }
    // concatenation with already-finalized neighbors
    for (int u = 0; u < n; ++u)
      if (done[u][c] && dist[u][c] != kNoWalk) relax(u, d, dist[u][c] + len);
    for (int w = 0; w < n; ++w)
      if (done[d][w] && dist[d][w] != kNoWalk) relax(c, w, len + dist[d][w]);
  }
  return dist;
}

// Exhaustive DFS over walks from s, checking the label string at every visit
// of t. Exponential; guarded by the state budget.
inline bool enumerate_walk_check(const Instance& inst, int s, int t, WalkBound bound,
                                 GrammarVariant gram, const Budget& budget = {}) {
  const LabeledGraph& g = inst.graph;
  long long states = 0;
  std::vector<int> labels{g.label(s)};
  std::vector<EdgeKind> edges;
  std::vector<int> verts{s};

  auto dfs = [&](auto&& self, int u) -> bool {
    if (++states > budget.max_states)
      throw budget_error("enumerate_walk_check: state budget exceeded");
    if (u == t && is_realizable_string(LabelString(labels, edges), gram)) return true;
    if (static_cast<int>(edges.size()) >= bound.max_len) return false;
    for (int v = 0; v < g.n(); ++v) {
      auto kind = g.edge_kind(u, v);
      if (!kind) continue;
      labels.push_back(g.label(v));
      edges.push_back(*kind);
      verts.push_back(v);
      if (self(self, v)) return true;
      labels.pop_back();
      edges.pop_back();
      verts.pop_back();
    }
    return false;
  };
  return dfs(dfs, s);
}

namespace detail {

// Memoized decision procedure for "walks P1: a->c (<= l1 edges) and
// P2: d->b (<= l2 edges) exist whose concatenated label string, with c and d
// identified, is realizable". The junction pair (c,d) is fixed; items only
// vary the outer endpoints and remaining budgets, and every recursion spends
// walk budget, so plain memoization terminates.
class GapItemDp {
public:
  GapItemDp(const LabeledGraph& g, GrammarVariant gram, int c, int d, int b1, int b2,
            const std::vector<std::vector<long long>>& rmin, const Budget& budget)
      : g_(g), pop_push_(allows_pop_push(gram)), c_(c), d_(d), b1_(b1), b2_(b2), rmin_(rmin),
        budget_(budget),
        memo_(static_cast<std::size_t>(g.n()) * g.n() * (b1 + 1) * (b2 + 1), -1) {}

  bool query(int a, int b, int l1, int l2) {
    std::size_t key = ((static_cast<std::size_t>(a) * g_.n() + b) * (b1_ + 1) + l1) * (b2_ + 1) + l2;
    int8_t& slot = memo_[key];
    if (slot >= 0) return slot != 0;
    if (++states_ > budget_.max_states) throw budget_error("gap_pair_check: state budget exceeded");
    slot = 0;
    bool res = solve(a, b, l1, l2);
    slot = res ? 1 : 0;
    return res;
  }

private:
  bool solve(int a, int b, int l1, int l2) {
    const int n = g_.n();
    // split at the junction token: both sides are plain realizable walks
    if (rmin_[a][c_] <= l1 && rmin_[d_][b] <= l2) return true;
    // wrap rule: first edge of P1, last edge of P2
    if (l1 >= 1 && l2 >= 1 && g_.label(a) == g_.label(b)) {
      for (int ap = 0; ap < n; ++ap) {
        bool fwd = g_.pushes().get(a, ap);
        bool rev = pop_push_ && g_.pops().get(a, ap);
        if (!fwd && !rev) continue;
        for (int bp = 0; bp < n; ++bp) {
          if ((fwd && g_.pops().get(bp, b)) || (rev && g_.pushes().get(bp, b)))
            if (query(ap, bp, l1 - 1, l2 - 1)) return true;
        }
      }
    }
    // concatenation split strictly inside P1 / inside P2; minimal-length
    // prefixes and suffixes leave the most remaining budget
    for (int m = 0; m < n; ++m) {
      if (m != a && rmin_[a][m] != kNoWalk && rmin_[a][m] <= l1 &&
          query(m, b, l1 - static_cast<int>(rmin_[a][m]), l2))
        return true;
      if (m != b && rmin_[m][b] != kNoWalk && rmin_[m][b] <= l2 &&
          query(a, m, l1, l2 - static_cast<int>(rmin_[m][b])))
        return true;
    }
    return false;
  }

  const LabeledGraph& g_;
  bool pop_push_;
  int c_, d_, b1_, b2_;
  const std::vector<std::vector<long long>>& rmin_;
  const Budget& budget_;
  std::vector<int8_t> memo_;
  long long states_ = 0;
};

}  // namespace detail

// Bounded gap-pair oracle for one tuple. False outright when the labels of a
// and b (or of c and d) differ -- no walk pair can witness such a tuple.
inline bool gap_pair_check(const Instance& inst, int a, int c, int d, int b, WalkBound b1,
                           WalkBound b2, GrammarVariant gram, const Budget& budget = {}) {
  const LabeledGraph& g = inst.graph;
  if (g.label(a) != g.label(b) || g.label(c) != g.label(d)) return false;
  auto rmin = realizable_min_lengths(g, gram);
  detail::GapItemDp dp(g, gram, c, d, b1.max_len, b2.max_len, rmin, budget);
  return dp.query(a, b, b1.max_len, b2.max_len);
}

// Whole-matrix sweep used by the verification harness: answers for every
// (a,b) against a fixed junction (c,d), sharing one memo table.
inline BitMatrix gap_pair_check_all(const Instance& inst, int c, int d, WalkBound b1, WalkBound b2,
                                    GrammarVariant gram, const Budget& budget = {}) {
  const LabeledGraph& g = inst.graph;
  const int n = g.n();
  BitMatrix out(n, n);
  if (g.label(c) != g.label(d)) return out;
  auto rmin = realizable_min_lengths(g, gram);
  detail::GapItemDp dp(g, gram, c, d, b1.max_len, b2.max_len, rmin, budget);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.label(a) == g.label(b) && dp.query(a, b, b1.max_len, b2.max_len)) out.set(a, b);
  return out;
}

// Every walk-pair-witnessed gap tuple, as a gap matrix. For symmetric-gap
// instances the gap relation is additionally invariant under its four-way
// symmetry by definition, so a bit there counts as witnessed when any tuple
// in its orbit carries a walk pair; the caller closes the result accordingly.
inline GapMatrix gap_witness_matrix(const Instance& inst, WalkBound b1, WalkBound b2,
                                    GrammarVariant gram, const Budget& budget = {}) {
  const int n = inst.n();
  GapMatrix out(n);
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d) {
      if (inst.graph.label(c) != inst.graph.label(d)) continue;
      BitMatrix w = gap_pair_check_all(inst, c, d, b1, b2, gram, budget);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (w.get(a, b)) out.set(a, c, d, b);
    }
  if (allows_pop_push(gram)) symmetrize_gap(out);
  return out;
}

// Literal reference for gap_pair_check: enumerate both walks outright and CYK
// the concatenated string. Only viable at very small bounds; the unit tests
// hold the memoized version to this one.
inline bool gap_pair_check_enum(const Instance& inst, int a, int c, int d, int b, WalkBound b1,
                                WalkBound b2, GrammarVariant gram, const Budget& budget = {}) {
  const LabeledGraph& g = inst.graph;
  if (g.label(a) != g.label(b) || g.label(c) != g.label(d)) return false;
  long long states = 0;

  struct Walk {
    std::vector<int> labels;
    std::vector<EdgeKind> edges;
  };
  auto collect = [&](int from, int to, int maxlen) {
    std::vector<Walk> hits;
    std::vector<int> labels{g.label(from)};
    std::vector<EdgeKind> edges;
    auto dfs = [&](auto&& self, int u) -> void {
      if (++states > budget.max_states)
        throw budget_error("gap_pair_check_enum: state budget exceeded");
      if (u == to) hits.push_back({labels, edges});
      if (static_cast<int>(edges.size()) >= maxlen) return;
      for (int v = 0; v < g.n(); ++v) {
        auto kind = g.edge_kind(u, v);
        if (!kind) continue;
        labels.push_back(g.label(v));
        edges.push_back(*kind);
        self(self, v);
        labels.pop_back();
        edges.pop_back();
      }
    };
    dfs(dfs, from);
    return hits;
  };

  auto p1s = collect(a, c, b1.max_len);
  auto p2s = collect(d, b, b2.max_len);
  for (const Walk& p1 : p1s)
    for (const Walk& p2 : p2s) {
      if (++states > budget.max_states)
        throw budget_error("gap_pair_check_enum: state budget exceeded");
      std::vector<int> labels = p1.labels;
      std::vector<EdgeKind> edges = p1.edges;
      labels.insert(labels.end(), p2.labels.begin() + 1, p2.labels.end());
      edges.insert(edges.end(), p2.edges.begin(), p2.edges.end());
      if (is_realizable_string(LabelString(std::move(labels), std::move(edges)), gram))
        return true;
    }
  return false;
}

}  // namespace rlz::oracle
