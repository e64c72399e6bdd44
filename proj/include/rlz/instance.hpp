#pragma once

#include <utility>

#include "rlz/bits.hpp"
#include "rlz/graph.hpp"

namespace rlz {

// n x n boolean matrix of realizable pairs; bit [a,b] means a ~> b.
class StandardMatrix {
public:
  StandardMatrix() = default;
  explicit StandardMatrix(int n) : n_(n), bits_(n, n) {}

  int n() const { return n_; }
  bool get(int a, int b) const { return bits_.get(a, b); }
  void set(int a, int b, bool v = true) { bits_.set(a, b, v); }
  BitMatrix& bits() { return bits_; }
  const BitMatrix& bits() const { return bits_; }
  std::size_t popcount() const { return bits_.popcount(); }

  bool is_symmetric() const {
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (bits_.get(a, b) != bits_.get(b, a)) return false;
    return true;
  }

  // E |= E^T; returns true when a bit was added.
  bool symmetrize() {
    bool changed = false;
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (bits_.get(a, b) && !bits_.get(b, a)) {
          bits_.set(b, a);
          changed = true;
        }
    return changed;
  }

  friend bool operator==(const StandardMatrix& x, const StandardMatrix& y) {
    return x.bits_ == y.bits_;
  }

private:
  int n_ = 0;
  BitMatrix bits_;
};

// n^2 x n^2 boolean gap matrix. Entry [a,(c,d),b] lives at row (a,b), column
// (c,d). Columns are laid out in word-aligned slices of width S >= n bits per
// first coordinate, so the column position of (c,d) is c*S + d. With that
// layout a StandardMatrix's row storage concatenates into exactly one gap row,
// which the tensor products exploit.
class GapMatrix {
public:
  GapMatrix() = default;
  explicit GapMatrix(int n)
      : n_(n), slice_(((n + 63) / 64) * 64), bits_(n * n, n * slice_) {}

  int n() const { return n_; }
  int slice_width() const { return slice_; }

  int row_of(int a, int b) const { return a * n_ + b; }
  int col_of(int c, int d) const { return c * slice_ + d; }

  bool get(int a, int c, int d, int b) const { return bits_.get(row_of(a, b), col_of(c, d)); }
  void set(int a, int c, int d, int b, bool v = true) {
    bits_.set(row_of(a, b), col_of(c, d), v);
  }

  BitMatrix& bits() { return bits_; }
  const BitMatrix& bits() const { return bits_; }
  std::size_t popcount() const { return bits_.popcount(); }

  // Decodes a set-bit position within a row back to the column pair (c,d).
  std::pair<int, int> col_pair(int bitpos) const { return {bitpos / slice_, bitpos % slice_}; }

  friend bool operator==(const GapMatrix& x, const GapMatrix& y) { return x.bits_ == y.bits_; }

private:
  int n_ = 0, slice_ = 0;
  BitMatrix bits_;
};

// The four-way symmetry of symmetric-gap instances:
//   Y[(a,b),(c,d)] = Y[(c,d),(a,b)] = Y[(a,b),(d,c)] = Y[(b,a),(c,d)].
inline bool is_gap_symmetric(const GapMatrix& g) {
  int n = g.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int r = g.row_of(a, b);
      bool bad = false;
      g.bits().for_each_set_in_row(r, [&](int bit) {
        auto [c, d] = g.col_pair(bit);
        if (!g.get(c, a, b, d) || !g.get(a, d, c, b) || !g.get(b, c, d, a)) bad = true;
      });
      if (bad) return false;
    }
  return true;
}

// Closes a gap matrix under the group generated by row-pair reversal,
// column-pair reversal, and transposition. Returns true when bits were added.
inline bool symmetrize_gap(GapMatrix& g) {
  int n = g.n();
  auto orbit_pass = [&](auto transform) {
    GapMatrix image(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int r = g.row_of(a, b);
        g.bits().for_each_set_in_row(r, [&](int bit) {
          auto [c, d] = g.col_pair(bit);
          transform(image, a, c, d, b);
        });
      }
    return g.bits().or_with(image.bits());
  };
  bool changed = false;
  changed |= orbit_pass([](GapMatrix& m, int a, int c, int d, int b) { m.set(b, c, d, a); });
  changed |= orbit_pass([](GapMatrix& m, int a, int c, int d, int b) { m.set(a, d, c, b); });
  changed |= orbit_pass([](GapMatrix& m, int a, int c, int d, int b) { m.set(c, a, b, d); });
  return changed;
}

struct Instance {
  LabeledGraph graph;
  ProblemVariant variant = ProblemVariant::LogCfl;
  StandardMatrix standard;
  GapMatrix gap;

  int n() const { return graph.n(); }
};

inline constexpr int kDefaultMaxN = 128;

// Builds the <gap, standard> pair from a validated graph:
//   E[u,v] = 1 iff (u,v) is an eps edge;
//   Y[a,(c,d),b] = 1 when push(a,c), pop(d,b), L[a]=L[b], L[c]=L[d];
//   Y[a,(a,a),a] = 1; Y[a,(a,b),b] = 1.
// Symmetric-gap variants additionally close Y under the four-way symmetry.
inline Instance initialize(const LabeledGraph& g, ProblemVariant variant,
                           int max_n = kDefaultMaxN) {
  if (g.n() > max_n)
    throw std::invalid_argument("initialize: n exceeds size cap (" + std::to_string(max_n) +
                                "); raise the cap explicitly for larger instances");
  ValidationReport rep = validate(g, variant);
  if (!rep.ok()) throw std::invalid_argument("initialize: invalid graph: " + rep.joined());

  Instance inst{g, variant, StandardMatrix(g.n()), GapMatrix(g.n())};
  int n = g.n();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.eps().get(u, v)) inst.standard.set(u, v);

  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      if (!g.pushes().get(a, c)) continue;
      for (int d = 0; d < n; ++d) {
        if (g.label(c) != g.label(d)) continue;
        for (int b = 0; b < n; ++b)
          if (g.pops().get(d, b) && g.label(a) == g.label(b)) inst.gap.set(a, c, d, b);
      }
    }
  for (int a = 0; a < n; ++a) inst.gap.set(a, a, a, a);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) inst.gap.set(a, a, b, b);

  if (gap_symmetric(variant)) symmetrize_gap(inst.gap);
  return inst;
}

// Deletes push edges with no matching pop label pair anywhere else in the
// graph (and symmetrically pop edges), repeating until no rule fires. The
// reverse edge (v,u) never counts as its own partner.
inline LabeledGraph prune_unmatched(const LabeledGraph& g) {
  LabeledGraph out = g;
  int n = out.n();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<int, int>> doomed;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        auto need_partner = [&](const BitMatrix& partners) {
          for (int d = 0; d < n; ++d) {
            if (out.label(d) != out.label(v)) continue;
            for (int b = 0; b < n; ++b)
              if (partners.get(d, b) && out.label(b) == out.label(u) && !(d == v && b == u))
                return false;
          }
          return true;
        };
        if (out.pushes().get(u, v) && need_partner(out.pops())) doomed.emplace_back(u, v);
        if (out.pops().get(u, v) && need_partner(out.pushes())) doomed.emplace_back(u, v);
      }
    for (auto [u, v] : doomed) {
      out.remove_edge(u, v);
      changed = true;
    }
  }
  return out;
}

}  // namespace rlz
