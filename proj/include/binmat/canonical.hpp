#pragma once

#include <string>
#include <vector>

#include "binmat/matroid.hpp"

namespace binmat {

/// Opaque byte string equal for two binary matroids iff they are isomorphic
/// (label-agnostic). A version tag and (rank, |E|) header are embedded, so
/// keys are stable across runs and cheap to reject on.
struct CanonicalKey {
  std::string bytes;

  bool operator==(const CanonicalKey& o) const { return bytes == o.bytes; }
  bool operator!=(const CanonicalKey& o) const { return bytes != o.bytes; }
  bool operator<(const CanonicalKey& o) const { return bytes < o.bytes; }
  std::string hex() const;
};

/// Complete invariant: minimal encoding over every basis of M and all
/// row/column permutations of the reduced representation. Exact at any
/// size, but the basis loop makes it practical only up to ~22 elements.
CanonicalKey canonical_key(const BinaryMatroid& m);

/// Colored variant: isomorphisms must preserve element colors. Used for
/// rooted-minor states (the root triangle gets its own color).
CanonicalKey canonical_key_colored(const BinaryMatroid& m,
                                   const std::vector<int>& colors);

/// Sound but incomplete certificate used for memoization of large states:
/// equal keys imply isomorphic matroids, but isomorphic matroids may get
/// different keys. Computed from a bounded family of greedily chosen bases.
CanonicalKey certificate_key(const BinaryMatroid& m,
                             const std::vector<int>& colors = {});

/// Full key up to memo_full_key_limit() elements, certificate key above.
CanonicalKey memo_key(const BinaryMatroid& m, const std::vector<int>& colors = {});
int memo_full_key_limit();

/// Exact isomorphism test: invariant short-circuits (size, rank, loops,
/// parallel-class profile, triangle count, small circuit spectrum), then
/// canonical keys.
bool are_isomorphic(const BinaryMatroid& a, const BinaryMatroid& b);

/// Colored isomorphism (colors must correspond under the map).
bool are_isomorphic_colored(const BinaryMatroid& a, const std::vector<int>& ca,
                            const BinaryMatroid& b, const std::vector<int>& cb);

}  // namespace binmat
