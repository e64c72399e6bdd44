#pragma once

#include <optional>

#include "rlz/digraph.hpp"

namespace rlz::oracle {

enum class BalancedMode { Balanced, Positive, KBalanced, PositiveKBalanced };

// Counter dynamic program over states (vertex, #forward - #backward), layered
// by walk length. Positive modes restrict the running balance to be
// nonnegative at every prefix. Returns the minimal walk length <= max_len
// reaching t with final balance 0 (or k for the k-modes).
inline std::optional<int> balanced_walk_dp(const Digraph& g, int s, int t, int max_len,
                                           BalancedMode mode, int k = 0) {
  if (max_len < 0) throw std::invalid_argument("balanced_walk_dp: max_len must be >= 0");
  const int n = g.n();
  const bool positive =
      mode == BalancedMode::Positive || mode == BalancedMode::PositiveKBalanced;
  const int target =
      (mode == BalancedMode::KBalanced || mode == BalancedMode::PositiveKBalanced) ? k : 0;
  if (target > max_len || target < -max_len) return std::nullopt;

  const int width = 2 * max_len + 1;
  auto idx = [&](int v, int bal) { return static_cast<std::size_t>(v) * width + bal + max_len; };
  std::vector<char> seen(static_cast<std::size_t>(n) * width, 0);
  std::vector<std::pair<int, int>> frontier, next;

  auto arrive = [&](int v, int bal) {
    if (positive && bal < 0) return;
    if (bal < -max_len || bal > max_len) return;
    if (seen[idx(v, bal)]) return;
    seen[idx(v, bal)] = 1;
    next.emplace_back(v, bal);
  };

  seen[idx(s, 0)] = 1;
  frontier.emplace_back(s, 0);
  for (int len = 0; len <= max_len; ++len) {
    for (auto [v, bal] : frontier)
      if (v == t && bal == target) return len;
    if (len == max_len) break;
    next.clear();
    for (auto [v, bal] : frontier) {
      for (int w = 0; w < n; ++w) {
        switch (classify(g, v, w)) {
          case EdgeClass::Neutral: arrive(w, bal); break;
          case EdgeClass::Forward: arrive(w, bal + 1); break;
          case EdgeClass::Backward: arrive(w, bal - 1); break;
          case EdgeClass::Absent: break;
        }
      }
    }
    frontier.swap(next);
  }
  return std::nullopt;
}

}  // namespace rlz::oracle
