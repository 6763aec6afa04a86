#include "doctest.h"

#include <stdexcept>

#include <cstdint>

#include "binmat/canonical.hpp"
#include "binmat/catalog.hpp"
#include "binmat/connectivity.hpp"
#include "binmat/minor.hpp"

using namespace binmat;

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

TEST_CASE("every catalog name builds") {
  for (const auto& name : catalog_names()) {
    const BinaryMatroid& m = named(name);
    CHECK(m.size() > 0);
    CHECK(m.rank() > 0);
  }
  CHECK(is_named("F7*"));
  CHECK(are_isomorphic(named("F7*"), named("F7d")));
  CHECK_THROWS_AS(named("nonsense"), std::invalid_argument);
}

TEST_CASE("transcribed matrices are frozen") {
  // FNV-1a of the full representation text of each transcribed matroid.
  // These bind the build to the printed reduced matrices; any transcription
  // edit must fail here.
  const std::vector<std::pair<std::string, std::uint64_t>> frozen = {
      {"X10", 0xc0cb5e2407eb81c4ull},  {"X11", 0x66e16807e688b6e3ull},
      {"X11p", 0xb7a1344a1da67aceull}, {"Y11", 0x3164af3b666d02f5ull},
      {"X12", 0xad69adc9b4cb7e37ull},  {"X12p", 0x5e9248c02a551dafull},
      {"Y12", 0xfabae34c82eab305ull},  {"X13", 0xbcc584017746219eull},
      {"Y13", 0x974aadf6014916f1ull},  {"X14", 0x4a3ab3df5dce2ca1ull},
      {"Y14", 0x15623482e72ff49bull},  {"X15", 0x0be194264b04b916ull},
      {"Y15", 0xb4bdd7c859b396f5ull},  {"Y16", 0x886ad493813dc1d3ull},
  };
  for (const auto& [name, want] : frozen) {
    std::uint64_t got = fnv1a(named(name).rep().to_string());
    CHECK_MESSAGE(got == want, name, " hash ", got);
  }
}

TEST_CASE("named shapes") {
  CHECK(named("Y16").size() == 16);
  CHECK(named("Y16").rank() == 11);
  CHECK(named("X10").size() == 10);
  CHECK(named("X10").rank() == 6);
  CHECK(named("P9").size() == 9);
  CHECK(named("P9").rank() == 4);
  CHECK(named("P9d").rank() == 5);
  CHECK(named("R10").size() == 10);
  CHECK(named("R10").rank() == 5);
  CHECK(named("PG32d").size() == 15);
  CHECK(named("PG32d").rank() == 11);
  CHECK(are_isomorphic(named("MK4"), named("W3")));
}

TEST_CASE("graph constructors") {
  CHECK(cycle_matroid(complete_graph(4)).rank() == 3);
  CHECK(cycle_matroid(complete_graph(4)).size() == 6);
  CHECK(bond_matroid(k3n_variant(3, 0)).rank() == 4);
  CHECK(bond_matroid(k3n_variant(3, 0)).size() == 9);
  for (int n = 3; n <= 6; n++) {
    BinaryMatroid w = cycle_matroid(wheel_graph(n));
    CHECK(w.rank() == n);
    CHECK(w.size() == 2 * n);
  }
  CHECK_THROWS_AS(k3n_variant(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(k3n_variant(2, 4), std::invalid_argument);
}

TEST_CASE("k3n variant identities") {
  // n=1, extra=3 is K4
  CHECK(are_isomorphic(cycle_matroid(k3n_variant(1, 3)), named("MK4")));
  // the n=2 variants resolve to W4 and the Prism (computed, not assumed)
  CHECK(are_isomorphic(bond_matroid(k3n_variant(2, 2)), named("W4")));
  CHECK(are_isomorphic(bond_matroid(k3n_variant(2, 3)), named("Prism")));
  // K'''(3,2) is K5 minus an edge as a graph
  CHECK(are_isomorphic(cycle_matroid(k3n_variant(2, 3)), named("MK5e")));
}

TEST_CASE("spikes") {
  BinaryMatroid z4 = spike(SpikeVariant::Z, 4);
  CHECK(z4.size() == 9);
  CHECK(z4.rank() == 4);
  CHECK(is_three_connected(z4));
  // leg triangles {x_i, y_i, t}
  for (int i = 1; i <= 4; i++) {
    ElementSet leg = {ElementId("x" + std::to_string(i)), ElementId("y" + std::to_string(i)),
                      ElementId("t")};
    CHECK(z4.triangles().contains(leg));
  }
  CHECK(are_isomorphic(spike(SpikeVariant::Z, 3), named("F7")));
  CHECK(are_isomorphic(spike(SpikeVariant::Z_minus_t, 4), named("AG32")));
  CHECK(are_isomorphic(spike(SpikeVariant::Z_minus_y, 4), named("S8")));
  CHECK_FALSE(are_isomorphic(named("S8"), named("AG32")));
  CHECK_FALSE(are_isomorphic(named("Z4"), named("Z4d")));
  CHECK_THROWS_AS(spike(SpikeVariant::Z, 2), std::invalid_argument);
  CHECK(spike_name({5, SpikeVariant::Z_minus_y}) == "Z5\\y5");
}

TEST_CASE("R10 facts") {
  const BinaryMatroid& r10 = named("R10");
  CHECK(is_regular(r10));
  CHECK(r10.triangles().size() == 0);
  CHECK(is_internally_4_connected(r10));
}

TEST_CASE("X15 is PG(3,2)*") {
  CHECK(are_isomorphic(named("X15"), named("PG32d")));
}

TEST_CASE("dual of X15 has all nonzero columns") {
  // X15* has rank 4 and 15 elements: PG(3,2)
  BinaryMatroid d = named("X15").dual();
  CHECK(d.rank() == 4);
  CHECK(d.size() == 15);
  CHECK(d.is_simple());
}

TEST_CASE("rooted pattern seeds") {
  RootedPatternSeed pp = k4_double_prime_pattern();
  CHECK(pp.target.size() == 8);
  CHECK(pp.target.rank() == 3);
  CHECK(pp.target.triangles().contains(pp.root_triangle));
  // deleting the two copies leaves M(K4)
  ElementSet copies = {pp.root_triangle[0], pp.root_triangle[1]};
  CHECK(are_isomorphic(pp.target.delete_elements(copies), named("MK4")));

  RootedPatternSeed p = k4_prime_pattern();
  CHECK(p.target.size() == 7);
  CHECK(p.target.triangles().contains(p.root_triangle));
  CHECK(are_isomorphic(p.target.delete_elements({p.root_triangle[0]}), named("MK4")));
}
