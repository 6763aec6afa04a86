#include "doctest.h"

#include <stdexcept>

#include "binmat/canonical.hpp"
#include "binmat/compose.hpp"
#include "binmat/connectivity.hpp"
#include "binmat/minor.hpp"

using namespace binmat;

TEST_CASE("has_minor basics") {
  CHECK(has_minor(named("P9"), named("P9")));
  CHECK_FALSE(has_minor(named("X10"), named("P9")));
  CHECK(has_minor(named("X15"), named("X10")));
  CHECK(has_minor(named("F7"), named("MK4")));
  CHECK_FALSE(has_minor(named("MK4"), named("F7")));
  // every 3-connected binary matroid with >= 4 elements has a W3-minor
  for (const std::string name : {"F7", "W4", "S8", "P9", "R10"})
    CHECK(has_minor(named(name), named("W3")));
}

TEST_CASE("minor duality") {
  const std::vector<std::string> pool = {"W3", "F7", "W4", "S8", "AG32", "P9", "Z4"};
  for (const auto& a : pool)
    for (const auto& b : pool)
      CHECK(has_minor(named(a), named(b)) ==
            has_minor(named(a).dual(), named(b).dual()));
}

TEST_CASE("minor transitivity on catalog triples") {
  const std::vector<std::string> pool = {"W3", "F7", "W4", "S8", "P9", "Z4", "X10", "X11"};
  for (const auto& a : pool)
    for (const auto& b : pool)
      for (const auto& cc : pool) {
        if (named(a).size() > 12) continue;
        if (has_minor(named(a), named(b)) && has_minor(named(b), named(cc)))
          CHECK(has_minor(named(a), named(cc)));
      }
}

TEST_CASE("witnesses replay") {
  for (const auto& [big, small] : std::vector<std::pair<std::string, std::string>>{
           {"X15", "X10"}, {"S8", "F7"}, {"P9d", "W4"}, {"Y11", "X10"}}) {
    auto w = find_minor_witness(named(big), named(small));
    REQUIRE(w.has_value());
    BinaryMatroid got = replay_witness(named(big), *w);
    CHECK(are_isomorphic(got, named(small)));
    CHECK(static_cast<int>(w->deleted.size() + w->contracted.size()) ==
          named(big).size() - named(small).size());
  }
  CHECK_FALSE(find_minor_witness(named("X10"), named("P9")).has_value());
}

TEST_CASE("chain search agrees with the generic search") {
  const std::vector<std::string> hosts = {"S8", "P9", "P9d", "Z4", "X10", "Y11", "X12"};
  const std::vector<std::string> targets = {"W3", "F7", "F7d", "W4", "S8", "P9"};
  for (const auto& h : hosts) {
    for (const auto& t : targets) {
      const BinaryMatroid& hm = named(h);
      const BinaryMatroid& tm = named(t);
      if (tm.size() > hm.size() || tm.rank() > hm.rank() || tm.corank() > hm.corank())
        continue;
      CHECK_MESSAGE(has_minor_chain(hm, tm) == has_minor_generic(hm, tm), h, " vs ", t);
    }
  }
}

TEST_CASE("regular / graphic / cographic") {
  CHECK(is_regular(named("R10")));
  CHECK_FALSE(is_regular(named("F7")));
  CHECK_FALSE(is_regular(build_starfish({2, 2, 1})));
  CHECK(is_graphic(named("W4")));
  CHECK(is_graphic(named("MK5e")));
  CHECK_FALSE(is_graphic(named("MK33d")));
  CHECK(is_regular(named("MK33d")));
  CHECK(has_minor(named("MK33d"), named("MK33d")));
  CHECK(is_cographic(named("MK33d")));
  CHECK_FALSE(is_cographic(named("F7")));
  CHECK_FALSE(is_graphic(named("R10")));
  CHECK_FALSE(is_cographic(named("R10")));
}

TEST_CASE("spikes are W4-free, starfish have W4-minors") {
  CHECK_FALSE(has_minor(named("Z4"), named("W4")));
  CHECK_FALSE(has_minor(named("Z5"), named("W4")));
  CHECK(has_minor(build_starfish({2, 2, 1}), named("W4")));
  CHECK(has_minor(build_starfish({0, 3, 1}), named("W4")));
}

TEST_CASE("rooted minors") {
  // lemma (k4): a triangle of a 3-connected binary matroid with >= 4
  // elements is in an M(K4)-minor rooted at it
  const BinaryMatroid& mk4 = named("MK4");
  RootedPattern k4{mk4, first_triangle(mk4)};
  for (const std::string name : {"F7", "W4", "S8"}) {
    const BinaryMatroid& m = named(name);
    for (const auto& tri : m.triangles().sets) CHECK(has_rooted_minor(m, tri, k4));
  }

  RootedPatternSeed pp = k4_double_prime_pattern();
  RootedPattern k4pp{pp.target, pp.root_triangle};
  // rooted implies free
  BinaryMatroid host = bond_matroid(wheel_graph(5));
  for (const auto& tri : host.triangles().sets) {
    if (has_rooted_minor(host, tri, k4pp)) CHECK(has_minor(host, pp.target));
  }
  // errors: non-triangle roots
  CHECK_THROWS_AS(has_rooted_minor(named("F7"), {"e0", "e1", "e2"}, k4pp),
                  std::invalid_argument);
}

TEST_CASE("three_connected_minors sweep") {
  auto minors = three_connected_minors(named("S8"), 4);
  // S8's 3-connected minors down to 4 elements include F7, W3 and itself
  bool has_self = false, has_f7 = false, has_w3 = false;
  for (const auto& m : minors) {
    if (are_isomorphic(m, named("S8"))) has_self = true;
    if (are_isomorphic(m, named("F7"))) has_f7 = true;
    if (are_isomorphic(m, named("W3"))) has_w3 = true;
  }
  CHECK(has_self);
  CHECK(has_f7);
  CHECK(has_w3);
  CHECK_THROWS_AS(three_connected_minors(direct_sum(named("F7"), named("F7")), 4),
                  std::invalid_argument);
}
