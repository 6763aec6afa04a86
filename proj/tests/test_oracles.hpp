#pragma once

// Independent brute-force oracles used to derive expected values. These stay
// deliberately naive and share no code with the implementation paths they
// check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "binmat/gf2.hpp"
#include "binmat/matroid.hpp"

namespace oracle {

// Rank as the size of a largest independent column subset, by scanning all
// subsets from large to small.
inline int brute_rank(const binmat::GF2Matrix& m) {
  int n = m.cols();
  if (n > 20) throw std::logic_error("brute_rank cap exceeded");
  std::vector<std::uint64_t> cols(n);
  for (int j = 0; j < n; j++) cols[j] = m.column_word(j);
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); s++) {
    int k = std::popcount(s);
    if (k <= best) continue;
    // independence: no nonempty subset sums to zero
    bool indep = true;
    for (std::uint32_t t = s; t && indep; t = (t - 1) & s) {
      std::uint64_t sum = 0;
      std::uint32_t q = t;
      while (q) {
        int j = std::countr_zero(q);
        q &= q - 1;
        sum ^= cols[j];
      }
      if (sum == 0) indep = false;
    }
    if (indep) best = k;
  }
  return best;
}

// All circuits (minimal dependent sets) by direct subset scan.
inline std::vector<std::uint64_t> brute_circuits(const binmat::BinaryMatroid& m,
                                                 int max_size = 0) {
  int n = m.size();
  if (n > 16) throw std::logic_error("brute_circuits cap exceeded");
  std::vector<std::uint64_t> dep;
  for (std::uint64_t s = 1; s < (1ull << n); s++) {
    int k = std::popcount(s);
    if (max_size && k > max_size) continue;
    if (m.rank_of_mask(s) < k) dep.push_back(s);
  }
  std::vector<std::uint64_t> circuits;
  for (auto s : dep) {
    bool minimal = true;
    for (auto t : dep)
      if (t != s && (t & ~s) == 0) { minimal = false; break; }
    if (minimal) circuits.push_back(s);
  }
  return circuits;
}

// Isomorphism by backtracking over element bijections, validating the full
// rank function at the leaves. Test-only; sizes <= 10.
inline bool brute_isomorphic(const binmat::BinaryMatroid& a,
                             const binmat::BinaryMatroid& b) {
  int n = a.size();
  if (n != b.size() || a.rank() != b.rank()) return false;
  if (n > 10) throw std::logic_error("brute_isomorphic cap exceeded");
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);

  auto full_check = [&]() {
    for (std::uint64_t s = 0; s < (1ull << n); s++) {
      std::uint64_t t = 0, q = s;
      while (q) {
        int j = std::countr_zero(q);
        q &= q - 1;
        t |= 1ull << map[j];
      }
      if (a.rank_of_mask(s) != b.rank_of_mask(t)) return false;
    }
    return true;
  };

  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) return full_check();
    std::uint64_t dom = (1ull << (i + 1)) - 1;
    for (int v = 0; v < n; v++) {
      if (used[v]) continue;
      map[i] = v;
      used[v] = true;
      // prefix pruning: ranks of the mapped prefix must agree
      std::uint64_t img = 0;
      for (int j = 0; j <= i; j++) img |= 1ull << map[j];
      if (a.rank_of_mask(dom) == b.rank_of_mask(img) && rec(i + 1)) return true;
      used[v] = false;
      map[i] = -1;
    }
    return false;
  };
  return rec(0);
}

}  // namespace oracle
