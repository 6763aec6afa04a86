#pragma once

#include <optional>

#include "binmat/matroid.hpp"

namespace binmat {

/// Replayable minor witness: delete these elements, contract those, and the
/// result is isomorphic to the target.
struct MinorWitness {
  ElementSet deleted;
  ElementSet contracted;
};

/// True iff some sequence of deletions/contractions of m yields a matroid
/// isomorphic to target. Element-at-a-time search with canonical-key
/// memoization; for large 3-connected instances with a 3-connected target a
/// splitter-style chain search over 3-connected minors is used instead.
bool has_minor(const BinaryMatroid& m, const BinaryMatroid& target);

/// Force one of the two search strategies (tests cross-validate them).
bool has_minor_generic(const BinaryMatroid& m, const BinaryMatroid& target);
bool has_minor_chain(const BinaryMatroid& m, const BinaryMatroid& target);

std::optional<MinorWitness> find_minor_witness(const BinaryMatroid& m,
                                               const BinaryMatroid& target);
BinaryMatroid replay_witness(const BinaryMatroid& m, const MinorWitness& w);

/// Rooted pattern: a target matroid with a designated root triangle.
struct RootedPattern {
  BinaryMatroid target;
  ElementSet root_triangle;
};

/// True iff m has a minor isomorphic to pattern.target under an isomorphism
/// carrying t (setwise) onto the root triangle. Throws if t is not a
/// triangle of m or the root is not a triangle of the target.
bool has_rooted_minor(const BinaryMatroid& m, const ElementSet& t,
                      const RootedPattern& pattern);

/// All 3-connected minors of a 3-connected m with at least min_size
/// elements, one representative per isomorphism class.
std::vector<BinaryMatroid> three_connected_minors(const BinaryMatroid& m, int min_size);

/// No F7- and no F7*-minor (the input is binary by construction).
bool is_regular(const BinaryMatroid& m);

/// Regular with no M*(K5)- and no M*(K3,3)-minor; cographic dually.
bool is_graphic(const BinaryMatroid& m);
bool is_cographic(const BinaryMatroid& m);

/// Drop all memoized search state (used by benchmarks/tests).
void clear_minor_memo();

}  // namespace binmat
