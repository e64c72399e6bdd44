#pragma once

#include <map>
#include <string>

#include "rlz/digraph.hpp"
#include "rlz/graph.hpp"
#include "rlz/instance.hpp"
#include "rlz/rng.hpp"

namespace rlz {

// Traceability record carried by every construction: where each original
// vertex landed, plus the construction's parameters.
struct ReductionCert {
  std::string source;
  std::vector<int> vertex_map;  // original vertex -> target vertex
  std::map<std::string, long long> params;
};

struct GraphReduction {
  LabeledGraph graph;
  ProblemVariant variant;
  ReductionCert cert;
};

struct DigraphReduction {
  Digraph graph;
  int s = 0, t = 0;
  ReductionCert cert;
};

namespace detail {

inline std::vector<int> identity_map(int n) {
  std::vector<int> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
  return m;
}

}  // namespace detail

// Replaces every non-loop eps edge by a push/pop pair through a fresh vertex
// carrying the new label k+1. Undirected instances route one fresh vertex per
// symmetric eps pair, with push/pop arcs both ways, so the symmetry of the
// edge labels survives. Realizability between original vertices is unchanged.
inline GraphReduction eliminate_epsilon(const LabeledGraph& g, ProblemVariant variant) {
  if (gap_symmetric(variant))
    throw std::invalid_argument("eliminate_epsilon: defined for the logcfl/slogcfl families");
  int n = g.n();
  std::vector<std::pair<int, int>> work;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || !g.eps().get(u, v)) continue;
      if (!g.directed() && u > v) continue;  // one fresh vertex per symmetric pair
      work.emplace_back(u, v);
    }

  LabeledGraph out(n + static_cast<int>(work.size()), g.k() + 1, g.directed());
  for (int v = 0; v < n; ++v) out.set_label(v, g.label(v));
  for (const Edge& e : g.edge_list())
    if (e.kind != EdgeKind::Eps || e.u == e.v) out.add_edge(e.u, e.v, e.kind);

  int next = n;
  for (auto [u, v] : work) {
    int w = next++;
    out.set_label(w, g.k() + 1);
    out.add_edge(u, w, EdgeKind::Push);
    out.add_edge(w, v, EdgeKind::Pop);
    if (!g.directed()) {
      out.add_edge(w, u, EdgeKind::Pop);
      out.add_edge(v, w, EdgeKind::Push);
    }
  }
  out.add_reflexive_eps();

  ReductionCert cert{"eliminate-epsilon", detail::identity_map(n), {{"k_out", g.k() + 1}}};
  return {std::move(out), variant, std::move(cert)};
}

// ST-Connectivity embedding: each arc (u,v) becomes push (u,w), pop (w,v)
// through a fresh vertex, one label. t is reachable from s iff (s,t) is
// realizable in the output.
inline GraphReduction stconn_to_1logcfl(const Digraph& g, int s, int t) {
  auto arcs = g.arc_list();
  int n = g.n();
  LabeledGraph out(n + static_cast<int>(arcs.size()), 1, true);
  int next = n;
  for (auto [u, v] : arcs) {
    int w = next++;
    out.add_edge(u, w, EdgeKind::Push);
    out.add_edge(w, v, EdgeKind::Pop);
  }
  out.add_reflexive_eps();
  ReductionCert cert{"stconn-to-1logcfl", detail::identity_map(n), {{"s", s}, {"t", t}}};
  return {std::move(out), ProblemVariant::OneLogCfl, std::move(cert)};
}

namespace detail {

inline GraphReduction balanced_embedding(const Digraph& g, int s, int t, ProblemVariant variant,
                                         const char* name) {
  int n = g.n();
  LabeledGraph out(n, 1, false);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      switch (classify(g, u, v)) {
        case EdgeClass::Neutral:
          out.add_edge(u, v, EdgeKind::Eps);
          out.add_edge(v, u, EdgeKind::Eps);
          break;
        case EdgeClass::Forward:
          out.add_edge(u, v, EdgeKind::Push);
          out.add_edge(v, u, EdgeKind::Pop);
          break;
        case EdgeClass::Backward:
          out.add_edge(v, u, EdgeKind::Push);
          out.add_edge(u, v, EdgeKind::Pop);
          break;
        case EdgeClass::Absent: break;
      }
    }
  out.add_reflexive_eps();
  ReductionCert cert{name, identity_map(n), {{"s", s}, {"t", t}}};
  return {std::move(out), variant, std::move(cert)};
}

}  // namespace detail

// Balanced ST-Connectivity embedding: neutral underlying edges become eps
// pairs, one-way arcs become push forward / pop backward; a balanced s-t walk
// exists iff (s,t) is realizable in the symmetric-gap output.
inline GraphReduction balanced_to_1sgs(const Digraph& g, int s, int t) {
  return detail::balanced_embedding(g, s, t, ProblemVariant::OneSgsLogCfl, "balanced-to-1sgs");
}

// Positive-balanced variant: identical labeling, but the target grammar has
// no "pop S push" rule, so prefixes must stay nonnegative.
inline GraphReduction positive_balanced_to_1s(const Digraph& g, int s, int t) {
  return detail::balanced_embedding(g, s, t, ProblemVariant::OneSLogCfl,
                                    "positive-balanced-to-1s");
}

// Hardness direction of the balanced correspondence: eps pairs turn into two
// arcs, push/pop pairs into the single arc along the push direction.
inline DigraphReduction onesgs_to_balanced(const LabeledGraph& g, int s, int t) {
  if (g.directed() || g.k() != 1)
    throw std::invalid_argument("onesgs_to_balanced: needs an undirected k=1 instance");
  Digraph out(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < g.n(); ++v) {
      if (u == v) continue;
      if (g.eps().get(u, v)) out.add_arc(u, v);
      if (g.pushes().get(u, v)) out.add_arc(u, v);
    }
  ReductionCert cert{"onesgs-to-balanced", detail::identity_map(g.n()), {{"s", s}, {"t", t}}};
  return {std::move(out), s, t, std::move(cert)};
}

// k-balanced to balanced: append a directed path of k fresh edges from a new
// target t' to t. A k-balanced s-t walk exists iff a balanced s-t' walk does.
inline DigraphReduction k_balanced_reduce(const Digraph& g, int s, int t, int k) {
  if (k < 0) throw std::invalid_argument("k_balanced_reduce: k must be >= 0");
  int n = g.n();
  if (k == 0) {
    ReductionCert cert{"k-balanced", detail::identity_map(n), {{"k", 0}, {"s", s}, {"t", t}}};
    return {g, s, t, std::move(cert)};
  }
  Digraph out(n + k);
  for (auto [u, v] : g.arc_list()) out.add_arc(u, v);
  // path t' = n+k-1 -> n+k-2 -> ... -> n -> t
  int tprime = n + k - 1;
  int prev = tprime;
  for (int i = k - 2; i >= 0; --i) {
    out.add_arc(prev, n + i);
    prev = n + i;
  }
  out.add_arc(prev, t);
  ReductionCert cert{"k-balanced", detail::identity_map(n), {{"k", k}, {"s", s}, {"t", t}}};
  return {std::move(out), s, tprime, std::move(cert)};
}

// Family whose only balanced s-t walk has length n/2 + (n/2)^2: a one-way
// path of length n/2 with a cycle of length n/2 attached at an interior
// vertex v; every cycle edge is neutral except the single arc (v,u), so each
// lap of the cycle contributes exactly one backward edge.
inline DigraphReduction gen_theta_n2(int n) {
  if (n < 8 || n % 2 != 0) throw std::invalid_argument("gen_theta_n2: n must be even, n >= 8");
  int m = n / 2;
  Digraph g(n);
  // path vertices 0..m, s=0, t=m
  for (int i = 0; i < m; ++i) g.add_arc(i, i + 1);
  int v = (n + 3) / 4;  // interior path position
  // cycle v, w1..w_{m-1} with w_i = m + i
  auto w = [&](int i) { return i == 0 ? v : m + i; };
  g.add_arc(w(0), w(1));  // the only directed cycle edge
  for (int i = 1; i < m; ++i) {
    int a = w(i), b = w((i + 1) % m);
    g.add_arc(a, b);
    g.add_arc(b, a);
  }
  ReductionCert cert{"theta-n2", detail::identity_map(n), {{"n", n}, {"s", 0}, {"t", m}}};
  return {std::move(g), 0, m, std::move(cert)};
}

// Deterministic pseudo-random instance honoring the variant's symmetry
// constraints. Identical seeds give bit-identical instances.
inline Instance gen_random(int n, int k, ProblemVariant variant, double density, uint64_t seed,
                           int max_n = kDefaultMaxN) {
  if (n < 1 || k < 1 || density < 0.0 || density > 1.0)
    throw std::invalid_argument("gen_random: bad parameters");
  if (single_label(variant) && k != 1)
    throw std::invalid_argument("gen_random: variant requires k=1");
  SplitMix64 rng(seed);
  LabeledGraph g(n, k, !standard_symmetric(variant));
  for (int v = 0; v < n; ++v) g.set_label(v, k == 1 ? 1 : 1 + rng.below(k));

  if (g.directed()) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v || !rng.chance(density)) continue;
        bool eq = g.label(u) == g.label(v);
        int pick = rng.below(eq ? 3 : 2);
        g.add_edge(u, v, pick == 0 ? EdgeKind::Push : pick == 1 ? EdgeKind::Pop : EdgeKind::Eps);
      }
  } else {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (!rng.chance(density)) continue;
        bool eq = g.label(u) == g.label(v);
        int pick = rng.below(eq ? 3 : 2);
        if (pick == 2) {
          g.add_edge(u, v, EdgeKind::Eps);
          g.add_edge(v, u, EdgeKind::Eps);
        } else if (pick == 0) {
          g.add_edge(u, v, EdgeKind::Push);
          g.add_edge(v, u, EdgeKind::Pop);
        } else {
          g.add_edge(u, v, EdgeKind::Pop);
          g.add_edge(v, u, EdgeKind::Push);
        }
      }
  }
  g.add_reflexive_eps();
  return initialize(g, variant, max_n);
}

// Deterministic random digraph for the balanced-connectivity side.
inline Digraph gen_random_digraph(int n, double density, uint64_t seed) {
  if (n < 1 || density < 0.0 || density > 1.0)
    throw std::invalid_argument("gen_random_digraph: bad parameters");
  SplitMix64 rng(seed);
  Digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && rng.chance(density)) g.add_arc(u, v);
  return g;
}

}  // namespace rlz
