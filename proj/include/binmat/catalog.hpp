#pragma once

#include <optional>
#include <string>
#include <vector>

#include "binmat/matroid.hpp"

namespace binmat {

/// Multigraph with labelled edges; the substrate for cycle and bond matroids.
struct Graph {
  std::vector<std::string> vertices;
  struct Edge {
    std::string u, v;
    ElementId id;
  };
  std::vector<Edge> edges;

  void add_vertex(const std::string& v);
  void add_edge(const std::string& u, const std::string& v, const ElementId& id);
  int degree(const std::string& v) const;
  std::vector<ElementId> incident_edges(const std::string& v) const;
  bool has_vertex(const std::string& v) const;
};

/// GF(2) vertex-edge incidence matrix reduced to full row rank.
BinaryMatroid cycle_matroid(const Graph& g);
BinaryMatroid bond_matroid(const Graph& g);

// -- named graphs ---------------------------------------------------------
Graph complete_graph(int n);               // K_n
Graph wheel_graph(int n);                  // W_n: hub + n-cycle rim
Graph prism_graph();                       // two triangles + a matching
Graph prism_plus_edge();                   // prism + one edge between nonadjacent vertices
Graph cube_graph();                        // Q_3
Graph wagner_graph();                      // V_8 (Moebius-Kantor)
Graph k5_minus_edge();

/// K_{3,n} plus `extra` (0..3) edges inside the color class of size three.
Graph k3n_variant(int n, int extra);

// -- spikes ----------------------------------------------------------------
enum class SpikeVariant { Z, Z_dual, Z_minus_y, Z_minus_t };

struct SpikeSpec {
  int r = 0;
  SpikeVariant variant = SpikeVariant::Z;
  bool operator==(const SpikeSpec& o) const { return r == o.r && variant == o.variant; }
};

/// Binary spike with tip t and legs {x_i, y_i, t}: reduced block
/// [J - I | 1] of shape r x (r+1). Variants delete y_r or the tip.
/// Throws for r < 3; Z_3 is F7 and is permitted internally.
BinaryMatroid spike(const SpikeSpec& spec);
BinaryMatroid spike(SpikeVariant variant, int r);
std::string spike_name(const SpikeSpec& spec);

// -- named matroid registry -------------------------------------------------
/// Catalog lookup by name (aliases like "F7*", "PG32-dual", "X11'" resolve).
/// Throws std::invalid_argument for unknown names.
const BinaryMatroid& named(const std::string& name);
bool is_named(const std::string& name);
std::vector<std::string> catalog_names();

/// First triangle of M in the family order (sorted), used as the default
/// gluing triangle. Throws if M has no triangle.
ElementSet first_triangle(const BinaryMatroid& m);

/// M(K4) with a parallel element added to the designated element (0, 1 or 2)
/// of a fixed base triangle; the base triangle (the common triangle of the
/// 3-sum constructions) is returned via the out param.
BinaryMatroid k4_prime(int designated, ElementSet* base_triangle = nullptr);
/// M(K4) with parallel elements added to two designated base elements.
BinaryMatroid k4_double_prime(int first, int second, ElementSet* base_triangle = nullptr);

struct RootedPatternSeed {
  BinaryMatroid target;
  ElementSet root_triangle;
};

/// Rooted K4'-/K4''-patterns: deleting the root's copy elements leaves K4,
/// so the root triangle consists of the parallel copies plus the remaining
/// base element.
RootedPatternSeed k4_prime_pattern();
RootedPatternSeed k4_double_prime_pattern();

/// The 16-member family of Theorem 1.2 clause (i): F7, F7*, X10..X15,
/// X11', X12', Y11..Y16.
const std::vector<std::string>& y16_family_names();

}  // namespace binmat
