#include "doctest.h"

#include <stdexcept>

#include <set>

#include "binmat/canonical.hpp"
#include "binmat/compose.hpp"
#include "binmat/enumerate.hpp"

using namespace binmat;

TEST_CASE("extensions") {
  SearchFilters simple;
  simple.simple_only = true;
  // all 7 nonzero rank-3 columns are taken
  CHECK(extensions(named("F7"), simple).empty());

  // the empty matroid extends only by a loop
  BinaryMatroid empty = BinaryMatroid::from_reduced(GF2Matrix(0, 0));
  SearchFilters none;
  auto loops = extensions(empty, none);
  REQUIRE(loops.size() == 1);
  CHECK(loops[0].size() == 1);
  CHECK(loops[0].rank() == 0);

  SearchFilters nofilter;
  for (const auto& m : coextensions(named("W4"), nofilter)) {
    CHECK(m.size() == named("W4").size() + 1);
    CHECK(m.rank() == named("W4").rank() + 1);
  }
}

TEST_CASE("extension/coextension duality") {
  SearchFilters f;
  f.three_connected = true;
  for (const std::string name : {"F7", "W4", "MK4"}) {
    const BinaryMatroid& m = named(name);
    std::set<CanonicalKey> ext_keys;
    for (const auto& e : extensions(m, f)) ext_keys.insert(canonical_key(e));
    std::set<CanonicalKey> dual_coext_keys;
    for (const auto& e : coextensions(m.dual(), f)) dual_coext_keys.insert(canonical_key(e.dual()));
    CHECK(ext_keys == dual_coext_keys);
  }
}

TEST_CASE("closure search") {
  SearchFilters f;
  f.three_connected = true;
  f.max_size = 8;

  // max_steps = 0: seeds only
  ClosureReport r0 = closure_search({named("W3")}, {"W3"}, f, 0);
  CHECK(r0.found.empty());
  CHECK(r0.steps_executed == 0);

  ClosureReport r = closure_search({named("W3")}, {"W3"}, f, 2);
  // W3 extends to F7/F7* at 7 and S8/AG32 at 8 (W4 is not reachable: wheels
  // have no 3-connected single-element extensions of smaller wheels)
  std::set<std::string> found_names;
  for (const auto& [key, entry] : r.found) {
    for (const auto& name : {"F7", "F7d", "S8", "AG32", "W4"})
      if (are_isomorphic(entry.matroid, named(name))) found_names.insert(name);
    // discovery paths replay to isomorphic matroids
    CHECK(are_isomorphic(replay_path(named("W3"), entry.path), entry.matroid));
  }
  CHECK(found_names.count("F7") == 1);
  CHECK(found_names.count("F7d") == 1);
  CHECK(found_names.count("S8") == 1);
  CHECK(found_names.count("AG32") == 1);
  CHECK(found_names.count("W4") == 0);

  // monotone in filters: forbidding a minor never adds found keys
  SearchFilters g = f;
  g.forbidden_minor = named("F7");
  ClosureReport rg = closure_search({named("W3")}, {"W3"}, g, 2);
  for (const auto& [key, entry] : rg.found) CHECK(r.found.count(key) == 1);
  CHECK(rg.found.size() < r.found.size());

  // seeds must satisfy the filters
  SearchFilters strict;
  strict.three_connected = true;
  CHECK_THROWS_AS(
      closure_search({direct_sum(named("F7"), named("F7"))}, {"bad"}, strict, 1),
      std::invalid_argument);
}
