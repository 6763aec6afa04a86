#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binmat/gf2.hpp"

namespace binmat {

/// Stable ground-set label. Ordered by (length, lexicographic) so that
/// e2 < e10; the ordering fixes representatives in simplify() and tie-breaks
/// in witnesses.
struct ElementId {
  std::string name;

  ElementId() = default;
  ElementId(std::string n) : name(std::move(n)) {}
  ElementId(const char* n) : name(n) {}

  bool operator==(const ElementId& o) const { return name == o.name; }
  bool operator!=(const ElementId& o) const { return name != o.name; }
  bool operator<(const ElementId& o) const {
    if (name.size() != o.name.size()) return name.size() < o.name.size();
    return name < o.name;
  }
};

using ElementSet = std::vector<ElementId>;  // kept sorted by callers that promise it

/// A list of element sets (circuits, cocircuits, triangles, triads, ...).
struct SubsetFamily {
  std::vector<ElementSet> sets;

  std::size_t size() const { return sets.size(); }
  bool contains(const ElementSet& s) const;
  void sort_normalize();  // sort each member and the family itself
  bool operator==(const SubsetFamily& o) const { return sets == o.sets; }
};

/// A binary matroid: ordered element labels plus a full-row-rank GF(2)
/// representation whose column i represents elements()[i]. The representation
/// is re-normalized to full row rank on every construction, so
/// rank() == rep().rows() always holds. Immutable after construction.
class BinaryMatroid {
 public:
  BinaryMatroid() = default;

  /// From an arbitrary representation; rows are reduced to a full-row-rank
  /// set (row space preserved).
  BinaryMatroid(GF2Matrix rep, std::vector<ElementId> labels);

  /// From a reduced standard representation D: builds [I | D] with elements
  /// ordered basis-then-cobasis. Throws on label collisions or a dimension
  /// mismatch.
  static BinaryMatroid from_reduced(const GF2Matrix& d,
                                    const std::vector<ElementId>& basis_labels,
                                    const std::vector<ElementId>& cobasis_labels);

  /// from_reduced with labels e0, e1, ...
  static BinaryMatroid from_reduced(const GF2Matrix& d);

  /// From "101\n011" style row strings, default labels.
  static BinaryMatroid from_full_strings(const std::vector<std::string>& rows);
  static BinaryMatroid from_reduced_strings(const std::vector<std::string>& rows);

  int size() const { return static_cast<int>(labels_.size()); }
  int rank() const { return rep_.rows(); }
  int corank() const { return size() - rank(); }
  const GF2Matrix& rep() const { return rep_; }
  const std::vector<ElementId>& elements() const { return labels_; }
  const ElementId& label_of(int idx) const { return labels_[idx]; }

  /// Index of a label; throws std::invalid_argument for unknown elements.
  int index_of(const ElementId& e) const;
  bool has_element(const ElementId& e) const;

  /// Column of element idx as a word over the rank rows.
  std::uint64_t column(int idx) const { return columns_[idx]; }
  const std::vector<std::uint64_t>& columns() const { return columns_; }

  std::uint64_t full_mask() const {
    return size() == 64 ? ~0ull : ((1ull << size()) - 1);
  }

  // -- rank queries ----------------------------------------------------
  int rank_of_mask(std::uint64_t mask) const;
  int rank_of(const ElementSet& s) const;

  // -- fundamental operations ------------------------------------------
  BinaryMatroid dual() const;
  BinaryMatroid delete_elements(const ElementSet& s) const;
  BinaryMatroid contract_elements(const ElementSet& s) const;
  BinaryMatroid delete_mask(std::uint64_t mask) const;
  BinaryMatroid contract_mask(std::uint64_t mask) const;
  BinaryMatroid restrict_mask(std::uint64_t keep) const;

  /// All elements whose column lies in the span of S's columns
  /// (loops are in every closure).
  ElementSet closure(const ElementSet& s) const;
  std::uint64_t closure_mask(std::uint64_t mask) const;

  /// Deletes loops and all but the smallest-labelled element of each
  /// parallel class.
  BinaryMatroid simplify() const;
  /// dual(simplify(dual())): contracts coloops and all but the
  /// smallest-labelled element of each series class.
  BinaryMatroid cosimplify() const;

  bool is_simple() const;   // no loops, no parallel pairs
  bool is_cosimple() const; // dual is simple

  std::vector<int> loops() const;
  std::vector<int> coloops() const;

  // -- circuits ---------------------------------------------------------
  /// All circuits with at most max_size elements (0 = no cap, exhaustive).
  SubsetFamily circuits(int max_size = 0) const;
  SubsetFamily cocircuits(int max_size = 0) const;
  SubsetFamily triangles() const;  // 3-element circuits
  SubsetFamily triads() const;     // 3-element cocircuits

  /// Circuits as column-index masks.
  std::vector<std::uint64_t> circuit_masks(int max_size = 0) const;
  std::vector<std::uint64_t> cocircuit_masks(int max_size = 0) const;

  // -- conversions -------------------------------------------------------
  std::uint64_t mask_of(const ElementSet& s) const;
  ElementSet set_of(std::uint64_t mask) const;

  bool same_labelled_matroid(const BinaryMatroid& o) const;

 private:
  std::vector<ElementId> labels_;
  GF2Matrix rep_;                        // full row rank, rows == rank
  std::vector<std::uint64_t> columns_;   // cached column words

  void normalize_and_cache();
};

// -- text matrix format -------------------------------------------------
// Line-oriented; '#' starts a comment line. Optional headers
//   name: <string>
//   elements: <label> <label> ...
// then  "full r n"  or  "reduced r k"  followed by r rows of 0/1 characters.
// Round-trips bit-exactly through write_matrix_text/read_matrix_text.
struct MatroidFile {
  std::optional<std::string> name;
  BinaryMatroid matroid;
};

MatroidFile read_matrix_text(const std::string& text);
std::string write_matrix_text(const BinaryMatroid& m,
                              const std::optional<std::string>& name = std::nullopt);
MatroidFile load_matroid_file(const std::string& path);

}  // namespace binmat
