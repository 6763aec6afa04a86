#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "binmat/canonical.hpp"
#include "binmat/matroid.hpp"

namespace binmat {

/// Predicate bundle applied to candidates before dedup.
struct SearchFilters {
  bool three_connected = false;
  bool simple_only = false;
  bool internally_4c = false;
  std::optional<BinaryMatroid> forbidden_minor;  // "N-free"
  std::optional<int> max_size;

  bool test(const BinaryMatroid& m) const;
  std::string describe() const;
};

/// One representative per isomorphism class of M plus one new column
/// (the zero column gives the loop extension); filters applied before
/// dedup, deterministic output order by canonical key.
std::vector<BinaryMatroid> extensions(const BinaryMatroid& m, const SearchFilters& f);

/// Duals of the extensions of the dual.
std::vector<BinaryMatroid> coextensions(const BinaryMatroid& m, const SearchFilters& f);

struct ClosureEntry {
  BinaryMatroid matroid;
  int size = 0;
  int rank = 0;
  int step = 0;          // BFS depth at discovery
  std::string path;      // seed name/key then ops, e.g. "X10 c:0110 e:10011"
};

struct ClosureReport {
  std::vector<CanonicalKey> seed_keys;
  std::vector<std::string> seed_names;
  std::map<CanonicalKey, ClosureEntry> found;  // discovered non-seeds
  int steps_executed = 0;
  bool reached_fixpoint = false;
  std::string filters_description;
};

/// Breadth-first closure under single-element extensions and coextensions,
/// dedup by canonical key, stopping at max_steps or at the fixpoint.
/// Seeds must satisfy the filters.
ClosureReport closure_search(const std::vector<BinaryMatroid>& seeds,
                             const std::vector<std::string>& seed_names,
                             const SearchFilters& filters, int max_steps);

/// Re-apply a discovery path to its seed ("e:BITS" extension / "c:BITS"
/// coextension, bits over the rows of the representation at that point).
BinaryMatroid replay_path(const BinaryMatroid& seed, const std::string& path);

}  // namespace binmat
