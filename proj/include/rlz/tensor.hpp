#pragma once

#include "rlz/instance.hpp"

namespace rlz {

// The seven boolean products that move connectivity facts between the
// standard matrix E and the gap matrix Y. All sums are boolean ORs. Outputs
// are freshly allocated; closure code ORs them into its running matrices.
//
// Inner loops run over packed 64-bit words; every product is bit-exact equal
// to its nested-loop definition (the unit tests hold them to that).

// Which coordinate a single-edge extension touches.
enum class ExtendMode {
  AfterB,   // (a~>(c,d)~>b), (b~>z)  =>  (a~>(c,d)~>z)
  BeforeA,  // (z~>a), (a~>(c,d)~>b)  =>  (z~>(c,d)~>b)
  IntoD,    // (a~>(c,d)~>b), (z~>d)  =>  (a~>(c,z)~>b)
  IntoC,    // (a~>(c,d)~>b), (c~>z)  =>  (a~>(z,d)~>b)
};

namespace detail {

inline void require_same_n(int a, int b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace detail

// (x)1: boolean matrix product, out[a,b] = OR_z E1[a,z] & E2[z,b].
inline StandardMatrix compose(const StandardMatrix& e1, const StandardMatrix& e2) {
  detail::require_same_n(e1.n(), e2.n(), "compose");
  int n = e1.n();
  StandardMatrix out(n);
  for (int a = 0; a < n; ++a) {
    auto out_row = out.bits().row(a);
    e1.bits().for_each_set_in_row(a, [&](int z) {
      auto src = e2.bits().row(z);
      for (std::size_t i = 0; i < out_row.size(); ++i) out_row[i] |= src[i];
    });
  }
  return out;
}

// (x)2: out[a,b] = OR_{c,d} Y[a,(c,d),b] & E[c,d]. The gap column layout
// matches E's row storage word for word, so each output bit is one AND-test.
inline StandardMatrix contract(const GapMatrix& y, const StandardMatrix& e) {
  detail::require_same_n(y.n(), e.n(), "contract");
  int n = y.n();
  StandardMatrix out(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (y.bits().row_and_any(y.row_of(a, b), e.bits().words())) out.set(a, b);
  return out;
}

// (x)3 / (x)4 / (x)6 / (x)7, selected by mode.
inline GapMatrix extend(const GapMatrix& y, const StandardMatrix& e, ExtendMode mode) {
  detail::require_same_n(y.n(), e.n(), "extend");
  int n = y.n();
  GapMatrix out(n);

  switch (mode) {
    case ExtendMode::AfterB: {
      // out[(a,z)] = OR over b with E[b,z] of row (a,b): select by E column z.
      StandardMatrix et(n);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (e.get(u, v)) et.set(v, u);
      for (int a = 0; a < n; ++a)
        for (int z = 0; z < n; ++z) {
          auto out_row = out.bits().row(out.row_of(a, z));
          et.bits().for_each_set_in_row(z, [&](int b) {
            auto src = y.bits().row(y.row_of(a, b));
            for (std::size_t i = 0; i < out_row.size(); ++i) out_row[i] |= src[i];
          });
        }
      return out;
    }
    case ExtendMode::BeforeA: {
      // out[(z,b)] = OR over a with E[z,a] of row (a,b).
      for (int z = 0; z < n; ++z)
        for (int b = 0; b < n; ++b) {
          auto out_row = out.bits().row(out.row_of(z, b));
          e.bits().for_each_set_in_row(z, [&](int a) {
            auto src = y.bits().row(y.row_of(a, b));
            for (std::size_t i = 0; i < out_row.size(); ++i) out_row[i] |= src[i];
          });
        }
      return out;
    }
    case ExtendMode::IntoD: {
      // out[a,(c,z),b] = OR_d Y[a,(c,d),b] & E[z,d]: dot the c-slice of each
      // row against E's row z.
      int sw = y.slice_width() / 64;
      for (int r = 0; r < n * n; ++r) {
        auto row = y.bits().row(r);
        auto out_row = out.bits().row(r);
        for (int c = 0; c < n; ++c) {
          std::span<const uint64_t> slice{row.data() + c * sw, static_cast<std::size_t>(sw)};
          bool nonzero = false;
          for (int i = 0; i < sw; ++i)
            if (slice[i]) { nonzero = true; break; }
          if (!nonzero) continue;
          for (int z = 0; z < n; ++z) {
            auto erow = e.bits().row(z);
            for (int i = 0; i < sw; ++i)
              if (slice[i] & erow[i]) {
                out_row[static_cast<std::size_t>(c * sw + z / 64)] |= uint64_t{1} << (z % 64);
                break;
              }
          }
        }
      }
      return out;
    }
    case ExtendMode::IntoC: {
      // out[a,(z,d),b] = OR_c Y[a,(c,d),b] & E[c,z]: OR slice c into slice z
      // for every arc (c,z) of E.
      int sw = y.slice_width() / 64;
      for (int r = 0; r < n * n; ++r) {
        auto row = y.bits().row(r);
        auto out_row = out.bits().row(r);
        for (int c = 0; c < n; ++c) {
          std::span<const uint64_t> slice{row.data() + c * sw, static_cast<std::size_t>(sw)};
          bool nonzero = false;
          for (int i = 0; i < sw; ++i)
            if (slice[i]) { nonzero = true; break; }
          if (!nonzero) continue;
          e.bits().for_each_set_in_row(c, [&](int z) {
            uint64_t* dst = out_row.data() + z * sw;
            for (int i = 0; i < sw; ++i) dst[i] |= slice[i];
          });
        }
      }
      return out;
    }
  }
  throw std::invalid_argument("extend: bad mode");
}

// (x)5: out[a,(e,f),b] = OR_{c,d} Y1[a,(c,d),b] & Y2[c,(e,f),d] — the flat
// n^2 x n^2 boolean product under the gap addressing.
inline GapMatrix substitute(const GapMatrix& y1, const GapMatrix& y2) {
  detail::require_same_n(y1.n(), y2.n(), "substitute");
  int n = y1.n();
  int slice = y1.slice_width();
  GapMatrix out(n);
  for (int r = 0; r < n * n; ++r) {
    auto out_row = out.bits().row(r);
    y1.bits().for_each_set_in_row(r, [&](int bit) {
      int c = bit / slice, d = bit % slice;
      auto src = y2.bits().row(y2.row_of(c, d));
      for (std::size_t i = 0; i < out_row.size(); ++i) out_row[i] |= src[i];
    });
  }
  return out;
}

}  // namespace rlz
