#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rlz/bits.hpp"

namespace rlz {

enum class EdgeKind { Push, Pop, Eps };

inline const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Push: return "push";
    case EdgeKind::Pop: return "pop";
    case EdgeKind::Eps: return "eps";
  }
  return "?";
}

// The six problem classes. The two attributes that matter structurally are
// whether the standard matrix is symmetric (undirected inputs) and whether
// the gap matrix is kept closed under its four-way symmetry.
enum class ProblemVariant {
  LogCfl,
  SLogCfl,
  SgsLogCfl,
  OneLogCfl,
  OneSLogCfl,
  OneSgsLogCfl,
};

inline bool standard_symmetric(ProblemVariant v) {
  return v != ProblemVariant::LogCfl && v != ProblemVariant::OneLogCfl;
}

inline bool gap_symmetric(ProblemVariant v) {
  return v == ProblemVariant::SgsLogCfl || v == ProblemVariant::OneSgsLogCfl;
}

inline bool single_label(ProblemVariant v) {
  return v == ProblemVariant::OneLogCfl || v == ProblemVariant::OneSLogCfl ||
         v == ProblemVariant::OneSgsLogCfl;
}

inline const char* to_string(ProblemVariant v) {
  switch (v) {
    case ProblemVariant::LogCfl: return "logcfl";
    case ProblemVariant::SLogCfl: return "slogcfl";
    case ProblemVariant::SgsLogCfl: return "sgslogcfl";
    case ProblemVariant::OneLogCfl: return "1logcfl";
    case ProblemVariant::OneSLogCfl: return "1slogcfl";
    case ProblemVariant::OneSgsLogCfl: return "1sgslogcfl";
  }
  return "?";
}

inline std::optional<ProblemVariant> variant_from_string(const std::string& s) {
  if (s == "logcfl") return ProblemVariant::LogCfl;
  if (s == "slogcfl") return ProblemVariant::SLogCfl;
  if (s == "sgslogcfl") return ProblemVariant::SgsLogCfl;
  if (s == "1logcfl") return ProblemVariant::OneLogCfl;
  if (s == "1slogcfl") return ProblemVariant::OneSLogCfl;
  if (s == "1sgslogcfl") return ProblemVariant::OneSgsLogCfl;
  return std::nullopt;
}

struct Edge {
  int u, v;
  EdgeKind kind;
};

// Vertex-labeled graph with push/pop/eps edge labels, kept as one adjacency
// matrix per label. Vertices are 0-based; vertex labels are 1-based indices
// into the label alphabet of size k. At most one label per ordered pair.
class LabeledGraph {
public:
  LabeledGraph() = default;
  LabeledGraph(int n, int k, bool directed)
      : n_(n), k_(k), directed_(directed), labels_(static_cast<std::size_t>(std::max(n, 0)), 1),
        push_(n, n), pop_(n, n), eps_(n, n) {
    if (n < 1) throw std::invalid_argument("LabeledGraph: need n >= 1");
    if (k < 1) throw std::invalid_argument("LabeledGraph: need k >= 1");
  }

  int n() const { return n_; }
  int k() const { return k_; }
  bool directed() const { return directed_; }

  int label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  void set_label(int v, int lab) { labels_[static_cast<std::size_t>(v)] = lab; }
  const std::vector<int>& labels() const { return labels_; }

  bool has_edge(int u, int v) const {
    return push_.get(u, v) || pop_.get(u, v) || eps_.get(u, v);
  }
  std::optional<EdgeKind> edge_kind(int u, int v) const {
    if (push_.get(u, v)) return EdgeKind::Push;
    if (pop_.get(u, v)) return EdgeKind::Pop;
    if (eps_.get(u, v)) return EdgeKind::Eps;
    return std::nullopt;
  }

  // Returns false when the slot already carries a different label.
  bool add_edge(int u, int v, EdgeKind kind) {
    auto existing = edge_kind(u, v);
    if (existing) return *existing == kind;
    matrix_of(kind).set(u, v);
    return true;
  }

  void remove_edge(int u, int v) {
    push_.set(u, v, false);
    pop_.set(u, v, false);
    eps_.set(u, v, false);
  }

  void add_reflexive_eps() {
    for (int u = 0; u < n_; ++u)
      if (!has_edge(u, u)) eps_.set(u, u);
  }

  const BitMatrix& pushes() const { return push_; }
  const BitMatrix& pops() const { return pop_; }
  const BitMatrix& eps() const { return eps_; }

  std::vector<Edge> edge_list() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) {
        if (push_.get(u, v)) out.push_back({u, v, EdgeKind::Push});
        else if (pop_.get(u, v)) out.push_back({u, v, EdgeKind::Pop});
        else if (eps_.get(u, v)) out.push_back({u, v, EdgeKind::Eps});
      }
    return out;
  }

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.directed_ == b.directed_ &&
           a.labels_ == b.labels_ && a.push_ == b.push_ && a.pop_ == b.pop_ && a.eps_ == b.eps_;
  }

private:
  BitMatrix& matrix_of(EdgeKind kind) {
    switch (kind) {
      case EdgeKind::Push: return push_;
      case EdgeKind::Pop: return pop_;
      default: return eps_;
    }
  }

  int n_ = 0, k_ = 0;
  bool directed_ = true;
  std::vector<int> labels_;
  BitMatrix push_, pop_, eps_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string joined() const {
    std::string s;
    for (const auto& v : violations) {
      if (!s.empty()) s += "; ";
      s += v;
    }
    return s;
  }
};

// Structural checks: label ranges, reflexive eps loops, eps label agreement,
// symmetric edge labels for undirected variants, and the variant's label
// count constraint. Report-style: collects every violation.
inline ValidationReport validate(const LabeledGraph& g, ProblemVariant variant) {
  ValidationReport rep;
  auto add = [&rep](std::string msg) { rep.violations.push_back(std::move(msg)); };

  for (int v = 0; v < g.n(); ++v) {
    int lab = g.label(v);
    if (lab < 1 || lab > g.k())
      add("vertex " + std::to_string(v) + " has label out of range [1," + std::to_string(g.k()) + "]");
  }
  for (int u = 0; u < g.n(); ++u)
    if (g.edge_kind(u, u) != EdgeKind::Eps) {
      add("missing reflexive eps edges");
      break;
    }
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < g.n(); ++v)
      if (g.eps().get(u, v) && g.label(u) != g.label(v)) {
        add("eps edge (" + std::to_string(u) + "," + std::to_string(v) +
            ") joins different labels");
      }
  if (single_label(variant) && g.k() != 1) add("variant requires k=1");
  if (g.directed() == standard_symmetric(variant))
    add(std::string("directed flag inconsistent with variant ") + to_string(variant));
  if (!g.directed()) {
    for (int u = 0; u < g.n(); ++u)
      for (int v = 0; v < g.n(); ++v) {
        if (g.pushes().get(u, v) && !g.pops().get(v, u))
          add("asymmetric push/pop at (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (g.pops().get(u, v) && !g.pushes().get(v, u))
          add("asymmetric pop/push at (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (g.eps().get(u, v) && !g.eps().get(v, u))
          add("asymmetric eps at (" + std::to_string(u) + "," + std::to_string(v) + ")");
      }
  }
  return rep;
}

}  // namespace rlz
