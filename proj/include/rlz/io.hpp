#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "rlz/digraph.hpp"
#include "rlz/graph.hpp"
#include "rlz/instance.hpp"

namespace rlz {

struct InstanceFile {
  LabeledGraph graph;
  ProblemVariant variant = ProblemVariant::LogCfl;
  std::optional<int> s, t;
};

struct DigraphFile {
  Digraph graph;
  std::optional<int> s, t;
};

namespace detail {

inline std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  std::string s = pos == std::string::npos ? line : line.substr(0, pos);
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline int parse_kv_int(const std::string& tok, const std::string& key, int lineno) {
  if (tok.rfind(key + "=", 0) != 0)
    throw std::invalid_argument("line " + std::to_string(lineno) + ": expected " + key + "=<int>");
  return std::stoi(tok.substr(key.size() + 1));
}

}  // namespace detail

// Instance text format, one statement per line, '#' starts a comment:
//   realizability v1
//   n=<int> k=<int> directed=<0|1> variant=<logcfl|slogcfl|sgslogcfl|1logcfl|1slogcfl|1sgslogcfl>
//   label <v> <i>
//   edge <u> <v> <push|pop|eps>
//   s=<int> t=<int>
// Reflexive eps loops are implied. For directed=0 files an edge statement
// also declares its symmetric partner (push <-> pop, eps <-> eps).
inline InstanceFile parse_instance(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next = [&]() -> std::optional<std::string> {
    while (std::getline(in, line)) {
      ++lineno;
      std::string s = detail::strip_comment(line);
      if (!s.empty()) return s;
    }
    return std::nullopt;
  };

  auto header = next();
  if (!header || *header != "realizability v1")
    throw std::invalid_argument("instance file: missing 'realizability v1' header");

  auto params = next();
  if (!params) throw std::invalid_argument("instance file: missing parameter line");
  std::istringstream ps(*params);
  std::string t1, t2, t3, t4;
  ps >> t1 >> t2 >> t3 >> t4;
  int n = detail::parse_kv_int(t1, "n", lineno);
  int k = detail::parse_kv_int(t2, "k", lineno);
  int directed = detail::parse_kv_int(t3, "directed", lineno);
  if (t4.rfind("variant=", 0) != 0)
    throw std::invalid_argument("instance file: expected variant=<name>");
  auto variant = variant_from_string(t4.substr(8));
  if (!variant) throw std::invalid_argument("instance file: unknown variant '" + t4.substr(8) + "'");

  InstanceFile out{LabeledGraph(n, k, directed != 0), *variant, std::nullopt, std::nullopt};

  auto bad = [&](const std::string& msg) {
    throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
  };
  auto check_vertex = [&](int v) {
    if (v < 0 || v >= n) bad("vertex " + std::to_string(v) + " out of range");
  };

  while (auto stmt = next()) {
    std::istringstream ss(*stmt);
    std::string word;
    ss >> word;
    if (word == "label") {
      int v, i;
      if (!(ss >> v >> i)) bad("label statement needs <v> <i>");
      check_vertex(v);
      out.graph.set_label(v, i);
    } else if (word == "edge") {
      int u, v;
      std::string kind;
      if (!(ss >> u >> v >> kind)) bad("edge statement needs <u> <v> <kind>");
      check_vertex(u);
      check_vertex(v);
      EdgeKind ek;
      if (kind == "push") ek = EdgeKind::Push;
      else if (kind == "pop") ek = EdgeKind::Pop;
      else if (kind == "eps") ek = EdgeKind::Eps;
      else bad("unknown edge kind '" + kind + "'"), ek = EdgeKind::Eps;
      if (!out.graph.add_edge(u, v, ek)) bad("conflicting duplicate edge");
      if (directed == 0) {
        EdgeKind rk = ek == EdgeKind::Push ? EdgeKind::Pop
                      : ek == EdgeKind::Pop ? EdgeKind::Push
                                            : EdgeKind::Eps;
        if (!out.graph.add_edge(v, u, rk)) bad("conflicting implied reverse edge");
      }
    } else if (word.rfind("s=", 0) == 0) {
      out.s = std::stoi(word.substr(2));
      std::string tt;
      if (ss >> tt) out.t = detail::parse_kv_int(tt, "t", lineno);
    } else {
      bad("unknown statement '" + word + "'");
    }
  }
  out.graph.add_reflexive_eps();
  return out;
}

inline InstanceFile load_instance(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open instance file: " + path);
  return parse_instance(f);
}

inline void write_instance(std::ostream& os, const LabeledGraph& g, ProblemVariant variant,
                           std::optional<int> s = std::nullopt,
                           std::optional<int> t = std::nullopt) {
  os << "realizability v1\n";
  os << "n=" << g.n() << " k=" << g.k() << " directed=" << (g.directed() ? 1 : 0)
     << " variant=" << to_string(variant) << "\n";
  for (int v = 0; v < g.n(); ++v)
    if (g.label(v) != 1) os << "label " << v << ' ' << g.label(v) << "\n";
  for (const Edge& e : g.edge_list()) {
    if (e.u == e.v && e.kind == EdgeKind::Eps) continue;  // implied
    if (!g.directed()) {
      // one statement per symmetric pair
      if (e.kind == EdgeKind::Pop) continue;
      if (e.kind == EdgeKind::Eps && e.u > e.v) continue;
    }
    os << "edge " << e.u << ' ' << e.v << ' ' << to_string(e.kind) << "\n";
  }
  if (s && t) os << "s=" << *s << " t=" << *t << "\n";
}

inline void save_instance(const std::string& path, const LabeledGraph& g, ProblemVariant variant,
                          std::optional<int> s = std::nullopt,
                          std::optional<int> t = std::nullopt) {
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot open for writing: " + path);
  write_instance(f, g, variant, s, t);
}

// Digraph format for the balanced-connectivity commands:
//   digraph v1
//   n=<int>
//   arc <u> <v>
//   s=<int> t=<int>
inline DigraphFile parse_digraph(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next = [&]() -> std::optional<std::string> {
    while (std::getline(in, line)) {
      ++lineno;
      std::string s = detail::strip_comment(line);
      if (!s.empty()) return s;
    }
    return std::nullopt;
  };
  auto header = next();
  if (!header || *header != "digraph v1")
    throw std::invalid_argument("digraph file: missing 'digraph v1' header");
  auto nl = next();
  if (!nl) throw std::invalid_argument("digraph file: missing n=<int>");
  int n = detail::parse_kv_int(*nl, "n", lineno);
  DigraphFile out{Digraph(n), std::nullopt, std::nullopt};
  while (auto stmt = next()) {
    std::istringstream ss(*stmt);
    std::string word;
    ss >> word;
    if (word == "arc") {
      int u, v;
      if (!(ss >> u >> v) || u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad arc");
      out.graph.add_arc(u, v);
    } else if (word.rfind("s=", 0) == 0) {
      out.s = std::stoi(word.substr(2));
      std::string tt;
      if (ss >> tt) out.t = detail::parse_kv_int(tt, "t", lineno);
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown statement");
    }
  }
  return out;
}

inline DigraphFile load_digraph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open digraph file: " + path);
  return parse_digraph(f);
}

inline void write_digraph(std::ostream& os, const Digraph& g,
                          std::optional<int> s = std::nullopt,
                          std::optional<int> t = std::nullopt) {
  os << "digraph v1\n";
  os << "n=" << g.n() << "\n";
  for (auto [u, v] : g.arc_list()) os << "arc " << u << ' ' << v << "\n";
  if (s && t) os << "s=" << *s << " t=" << *t << "\n";
}

inline void save_digraph(const std::string& path, const Digraph& g,
                         std::optional<int> s = std::nullopt,
                         std::optional<int> t = std::nullopt) {
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot open for writing: " + path);
  write_digraph(f, g, s, t);
}

// Deterministic closure dump: `E <a> <b>` then `G <a> <b> <c> <d>` lines in
// lexicographic order. Byte-stable across runs, which golden tests rely on.
inline void dump_closure(std::ostream& os, const StandardMatrix& e_star, const GapMatrix& y_star) {
  int n = e_star.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (e_star.get(a, b)) os << "E " << a << ' ' << b << "\n";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if (y_star.get(a, c, d, b)) os << "G " << a << ' ' << b << ' ' << c << ' ' << d << "\n";
}

}  // namespace rlz
