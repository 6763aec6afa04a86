#pragma once

#include <optional>

#include "binmat/matroid.hpp"

namespace binmat {

/// A certified k-separation: side_x and side_y partition the ground set,
/// lambda_value = lambda(side_x) < order, and min(|X|,|Y|) >= order.
struct Separation {
  ElementSet side_x;
  ElementSet side_y;
  int lambda_value = 0;
  int order = 0;
};

/// lambda_M(X) = r(X) + r(E-X) - r(M).
int lambda(const BinaryMatroid& m, const ElementSet& x);
int lambda_mask(const BinaryMatroid& m, std::uint64_t x);

/// Lexicographically smallest X (as a sorted index set, element 0 in X)
/// witnessing a k-separation, if one exists.
std::optional<Separation> find_k_separation(const BinaryMatroid& m, int k);

/// True iff some partition with min side >= k has lambda < k. Decision
/// only; cheaper than find_k_separation.
bool has_k_separation(const BinaryMatroid& m, int k);

/// Smallest k admitting a k-separation; nullopt = infinity (M is
/// k-connected for every k).
std::optional<int> tau(const BinaryMatroid& m);

bool is_three_connected(const BinaryMatroid& m);

struct I4CResult {
  bool ok = false;
  /// On failure: a (<=2)-separation, or a 3-separation with both sides >= 4.
  std::optional<Separation> witness;
};

/// 3-connected and every 3-separation has a side of size exactly 3.
I4CResult internally_4_connected(const BinaryMatroid& m);
bool is_internally_4_connected(const BinaryMatroid& m);

/// Re-check a separation against its stated invariants.
bool verify_separation(const BinaryMatroid& m, const Separation& s);

}  // namespace binmat
