#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "binmat/catalog.hpp"
#include "binmat/matroid.hpp"

namespace binmat {

/// Gluing data for the generalized parallel connection across a triangle:
/// left_tri[i] is identified with right_tri[i]. Both designated sets must be
/// triangles of their matroids; since all three elements of a binary
/// triangle satisfy the sum dependency, every bijection respects it.
struct TriangleGlue {
  const BinaryMatroid& left;
  const BinaryMatroid& right;
  ElementSet left_tri;
  ElementSet right_tri;
};

/// Disjoint-labelled block-diagonal sum. Clashing right-side labels get an
/// apostrophe suffix.
BinaryMatroid direct_sum(const BinaryMatroid& m1, const BinaryMatroid& m2);

/// 2-sum across non-loop, non-coloop basepoints; both sides need >= 3
/// elements. The basepoints disappear from the ground set.
BinaryMatroid two_sum(const BinaryMatroid& m1, const BinaryMatroid& m2,
                      const ElementId& p1, const ElementId& p2);

/// P_T(M1, M2): ground set E1 union (E2 - T) with T identified; the shared
/// triangle keeps the left side's labels. Rank r1 + r2 - 2.
BinaryMatroid parallel_connection_triangle(const TriangleGlue& g);

/// M1 +3 M2 = P_T(M1, M2) \ T. Requires both sides to have >= 7 elements.
BinaryMatroid three_sum(const TriangleGlue& g);

/// Cocircuits of P_T(M1, M2) predicted from the sides alone: one-side
/// cocircuits avoiding T, plus unions C1* u C2* agreeing on exactly two
/// elements of T. Never builds the composed matroid.
SubsetFamily cocircuits_of_pc(const TriangleGlue& g);

/// The label an element of the right side receives in a composition
/// (identity unless it clashes with a left-side label).
ElementId composed_right_label(const BinaryMatroid& left, const BinaryMatroid& right,
                               const ElementId& e);

/// Graph gluing behind the cographic 3-sum: delete u from g1 and v from g2
/// (both of degree 3) and add a matching between the neighbourhoods; the
/// matching edge u_i v_i inherits the label of the edge u u_i.
Graph glue_graphs_matching(const Graph& g1, const std::string& u, const Graph& g2,
                           const std::string& v,
                           const std::array<std::pair<std::string, std::string>, 3>& pairing);

/// Starfish parameters: base graph K_{3,n} + extra edges, t Fano legs.
struct StarfishSpec {
  int extra = 0;  // edges added in the colour class of size three, 0..3
  int n = 2;
  int t = 1;
  bool operator==(const StarfishSpec& o) const {
    return extra == o.extra && n == o.n && t == o.t;
  }
};

bool starfish_spec_valid(const StarfishSpec& s);

/// Consecutive 3-sums of t Fano copies onto the bond matroid of
/// k3n_variant(n, extra), glued at the vertex stars of the lexicographically
/// first t degree-3 vertices of the large colour class.
/// |E| = 3n + extra + t and rank = 2n + extra - 2 + t.
BinaryMatroid build_starfish(const StarfishSpec& spec);

}  // namespace binmat
