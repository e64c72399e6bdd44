#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "rlz/graph.hpp"

namespace rlz {

// Which recursive string definition applies. The One* variants coincide with
// their general counterparts once every vertex carries the same label, so the
// rule set only branches on whether "a_i pop S push a_i" is allowed.
enum class GrammarVariant { Standard, SymmetricGap, One, OneSymmetricGap };

inline bool allows_pop_push(GrammarVariant g) {
  return g == GrammarVariant::SymmetricGap || g == GrammarVariant::OneSymmetricGap;
}

struct WalkBound {
  int max_len = 0;
};

// Alternating vertex/edge token sequence: labels[0] e[0] labels[1] ... with
// labels.size() == edges.size() + 1.
struct LabelString {
  std::vector<int> labels;
  std::vector<EdgeKind> edges;

  LabelString() = default;
  LabelString(std::vector<int> labs, std::vector<EdgeKind> eds)
      : labels(std::move(labs)), edges(std::move(eds)) {
    if (labels.empty() || labels.size() != edges.size() + 1)
      throw std::invalid_argument("LabelString: vertex and edge tokens must alternate");
    for (int lab : labels)
      if (lab < 1) throw std::invalid_argument("LabelString: labels are 1-based");
  }

  std::size_t token_count() const { return labels.size() + edges.size(); }

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i) os << ' ' << rlz::to_string(edges[i - 1]) << ' ';
      os << 'a' << labels[i];
    }
    return os.str();
  }
};

// Text form: "a1 push a2 pop a1". Rejects anything that does not alternate
// vertex and edge tokens.
inline LabelString parse_label_string(const std::string& text) {
  std::istringstream is(text);
  std::vector<int> labels;
  std::vector<EdgeKind> edges;
  std::string tok;
  bool expect_label = true;
  while (is >> tok) {
    if (expect_label) {
      if (tok.size() < 2 || tok[0] != 'a')
        throw std::invalid_argument("label string: expected a<k> token, got '" + tok + "'");
      labels.push_back(std::stoi(tok.substr(1)));
    } else {
      if (tok == "push") edges.push_back(EdgeKind::Push);
      else if (tok == "pop") edges.push_back(EdgeKind::Pop);
      else if (tok == "eps") edges.push_back(EdgeKind::Eps);
      else throw std::invalid_argument("label string: expected push/pop/eps, got '" + tok + "'");
    }
    expect_label = !expect_label;
  }
  return LabelString(std::move(labels), std::move(edges));
}

// Interval dynamic program over vertex positions: derivable[i][j] says the
// sub-string from vertex i to vertex j is realizable. The concatenation rule
// shares the middle vertex token, matching path concatenation.
inline bool is_realizable_string(const LabelString& s, GrammarVariant g) {
  const int m = static_cast<int>(s.edges.size());
  const bool pop_push = allows_pop_push(g);
  std::vector<std::vector<char>> d(m + 1, std::vector<char>(m + 1, 0));
  for (int i = 0; i <= m; ++i) d[i][i] = 1;
  for (int len = 1; len <= m; ++len) {
    for (int i = 0; i + len <= m; ++i) {
      int j = i + len;
      if (len == 1) {
        d[i][j] = s.edges[i] == EdgeKind::Eps && s.labels[i] == s.labels[j];
        continue;
      }
      bool ok = false;
      if (s.labels[i] == s.labels[j] && d[i + 1][j - 1]) {
        if (s.edges[i] == EdgeKind::Push && s.edges[j - 1] == EdgeKind::Pop) ok = true;
        if (pop_push && s.edges[i] == EdgeKind::Pop && s.edges[j - 1] == EdgeKind::Push) ok = true;
      }
      for (int mid = i + 1; !ok && mid < j; ++mid)
        ok = d[i][mid] && d[mid][j] && s.labels[i] == s.labels[mid] &&
             s.labels[mid] == s.labels[j];
      d[i][j] = ok;
    }
  }
  return d[0][m];
}

}  // namespace rlz
