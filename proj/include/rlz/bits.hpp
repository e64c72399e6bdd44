#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace rlz {

// Packed boolean matrix. Each row is a whole number of 64-bit words, so row
// operations (or, and-test, boolean product) run on word spans. Padding bits
// past `cols` are kept zero, which makes popcount and equality word-exact.
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64),
        w_(static_cast<std::size_t>(rows) * wpr_, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("BitMatrix: negative dimension");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words_per_row() const { return wpr_; }

  bool get(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return (w_[idx(r) + c / 64] >> (c % 64)) & 1u;
  }

  void set(int r, int c, bool v = true) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    uint64_t mask = uint64_t{1} << (c % 64);
    if (v)
      w_[idx(r) + c / 64] |= mask;
    else
      w_[idx(r) + c / 64] &= ~mask;
  }

  std::span<uint64_t> row(int r) { return {w_.data() + idx(r), static_cast<std::size_t>(wpr_)}; }
  std::span<const uint64_t> row(int r) const {
    return {w_.data() + idx(r), static_cast<std::size_t>(wpr_)};
  }
  std::span<const uint64_t> words() const { return {w_.data(), w_.size()}; }

  // dst |= src for one row; returns true when a new bit appeared.
  bool or_row(int r, std::span<const uint64_t> src) {
    assert(src.size() == static_cast<std::size_t>(wpr_));
    uint64_t* d = w_.data() + idx(r);
    uint64_t changed = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
      uint64_t nw = d[i] | src[i];
      changed |= nw ^ d[i];
      d[i] = nw;
    }
    return changed != 0;
  }

  bool or_with(const BitMatrix& o) {
    require_same_shape(o);
    uint64_t changed = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      uint64_t nw = w_[i] | o.w_[i];
      changed |= nw ^ w_[i];
      w_[i] = nw;
    }
    return changed != 0;
  }

  bool row_and_any(int r, std::span<const uint64_t> other) const {
    assert(other.size() >= static_cast<std::size_t>(wpr_));
    const uint64_t* a = w_.data() + idx(r);
    for (int i = 0; i < wpr_; ++i)
      if (a[i] & other[i]) return true;
    return false;
  }

  std::size_t popcount() const {
    std::size_t n = 0;
    for (uint64_t x : w_) n += std::popcount(x);
    return n;
  }

  bool any() const {
    for (uint64_t x : w_)
      if (x) return true;
    return false;
  }

  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  template <typename Fn>
  void for_each_set_in_row(int r, Fn&& fn) const {
    const uint64_t* a = w_.data() + idx(r);
    for (int i = 0; i < wpr_; ++i) {
      uint64_t word = a[i];
      while (word) {
        int b = std::countr_zero(word);
        fn(i * 64 + b);
        word &= word - 1;
      }
    }
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.w_ == b.w_;
  }

private:
  std::size_t idx(int r) const { return static_cast<std::size_t>(r) * wpr_; }
  void require_same_shape(const BitMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("BitMatrix: shape mismatch");
  }

  int rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace rlz
