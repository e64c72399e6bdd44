#pragma once

#include <vector>

#include "rlz/bits.hpp"

namespace rlz {

// Plain directed graph used by the balanced-connectivity side.
class Digraph {
public:
  Digraph() = default;
  explicit Digraph(int n) : n_(n), adj_(n, n) {
    if (n < 1) throw std::invalid_argument("Digraph: need n >= 1");
  }

  int n() const { return n_; }
  bool has_arc(int u, int v) const { return adj_.get(u, v); }
  void add_arc(int u, int v) { adj_.set(u, v); }
  const BitMatrix& arcs() const { return adj_; }

  std::vector<std::pair<int, int>> arc_list() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (adj_.get(u, v)) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

private:
  int n_ = 0;
  BitMatrix adj_;
};

// Orientation of an underlying undirected edge {u,v} when traversed u -> v.
enum class EdgeClass { Absent, Neutral, Forward, Backward };

inline EdgeClass classify(const Digraph& g, int u, int v) {
  bool fwd = g.has_arc(u, v);
  bool bwd = g.has_arc(v, u);
  if (fwd && bwd) return EdgeClass::Neutral;
  if (fwd) return EdgeClass::Forward;
  if (bwd) return EdgeClass::Backward;
  return EdgeClass::Absent;
}

struct UnderlyingEdge {
  int u, v;        // u <= v
  EdgeClass cls;   // relative to traversing u -> v
};

inline std::vector<UnderlyingEdge> underlying_undirected(const Digraph& g) {
  std::vector<UnderlyingEdge> out;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u; v < g.n(); ++v) {
      EdgeClass c = classify(g, u, v);
      if (c != EdgeClass::Absent) out.push_back({u, v, c});
    }
  return out;
}

inline std::vector<bool> bfs_reachable(const Digraph& g, int s) {
  std::vector<bool> seen(static_cast<std::size_t>(g.n()), false);
  std::vector<int> stack{s};
  seen[static_cast<std::size_t>(s)] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < g.n(); ++v)
      if (g.has_arc(u, v) && !seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        stack.push_back(v);
      }
  }
  return seen;
}

}  // namespace rlz
