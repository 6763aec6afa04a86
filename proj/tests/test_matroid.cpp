#include "doctest.h"

#include <random>

#include "binmat/matroid.hpp"
#include "test_oracles.hpp"

using namespace binmat;

namespace {

BinaryMatroid fano() {
  return BinaryMatroid::from_reduced_strings({"1101", "1011", "0111"});
}

BinaryMatroid random_matroid(std::mt19937& rng, int r, int n) {
  GF2Matrix m(r, n);
  for (int i = 0; i < r; i++)
    for (int j = 0; j < n; j++)
      if (rng() & 1) m.set(i, j, true);
  std::vector<ElementId> labels;
  for (int j = 0; j < n; j++) labels.push_back("e" + std::to_string(j));
  return BinaryMatroid(std::move(m), std::move(labels));
}

}  // namespace

TEST_CASE("from_reduced builds the Fano plane") {
  BinaryMatroid f7 = fano();
  CHECK(f7.rank() == 3);
  CHECK(f7.size() == 7);
  // the columns of [I|D] are exactly the 7 nonzero vectors of GF(2)^3
  std::vector<std::uint64_t> cols;
  for (int j = 0; j < 7; j++) cols.push_back(f7.column(j));
  std::sort(cols.begin(), cols.end());
  CHECK(cols == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("from_reduced edge cases") {
  BinaryMatroid empty = BinaryMatroid::from_reduced(GF2Matrix(0, 0));
  CHECK(empty.size() == 0);
  CHECK(empty.rank() == 0);

  CHECK_THROWS_AS(BinaryMatroid::from_reduced(GF2Matrix(2, 2), {"a", "a"}, {"b", "c"}),
                  std::invalid_argument);
  CHECK_THROWS_AS(BinaryMatroid::from_reduced(GF2Matrix(2, 2), {"a"}, {"b", "c"}),
                  std::invalid_argument);
}

TEST_CASE("rank_of") {
  BinaryMatroid f7 = fano();
  CHECK(f7.rank_of({}) == 0);
  // a triangle has rank 2: {e0, e1, e3} since col(e3) = e0 + e1
  CHECK(f7.rank_of({"e0", "e1", "e3"}) == 2);
  CHECK(f7.rank_of(f7.elements()) == 3);
  CHECK_THROWS_AS(f7.rank_of({"zz"}), std::invalid_argument);
}

TEST_CASE("dual shapes and involution") {
  BinaryMatroid f7 = fano();
  BinaryMatroid f7d = f7.dual();
  CHECK(f7d.rank() == 4);
  CHECK(f7d.size() == 7);
  BinaryMatroid back = f7d.dual();
  CHECK(back.same_labelled_matroid(f7));
}

TEST_CASE("duality identity for the rank function") {
  // rank_dual(S) = |S| - r(M) + rank(E - S)
  std::mt19937 rng(3);
  for (int trial = 0; trial < 12; trial++) {
    BinaryMatroid m = random_matroid(rng, 3, 7);
    BinaryMatroid d = m.dual();
    for (std::uint64_t s = 0; s <= m.full_mask(); s++) {
      int lhs = d.rank_of_mask(s);
      int rhs = std::popcount(s) - m.rank() + m.rank_of_mask(m.full_mask() & ~s);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("delete and contract") {
  BinaryMatroid f7 = fano();
  BinaryMatroid del = f7.delete_elements({"e0"});
  CHECK(del.size() == 6);
  CHECK(del.rank() == 3);

  // contracting a loop equals deleting it
  GF2Matrix withloop(2, 3);
  withloop.set(0, 0, true);
  withloop.set(1, 1, true);
  BinaryMatroid m(withloop, {"a", "b", "loop"});
  CHECK(m.contract_elements({"loop"}).same_labelled_matroid(m.delete_elements({"loop"})));

  // contract/delete duality on every single element of F7
  for (const auto& e : f7.elements()) {
    BinaryMatroid lhs = f7.contract_elements({e});
    BinaryMatroid rhs = f7.dual().delete_elements({e}).dual();
    CHECK(lhs.same_labelled_matroid(rhs));
  }
}

TEST_CASE("minor commutation") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; trial++) {
    BinaryMatroid m = random_matroid(rng, 4, 8);
    BinaryMatroid a = m.delete_elements({"e1"}).contract_elements({"e5"});
    BinaryMatroid b = m.contract_elements({"e5"}).delete_elements({"e1"});
    CHECK(a.same_labelled_matroid(b));
  }
}

TEST_CASE("closure") {
  BinaryMatroid f7 = fano();
  ElementSet all = f7.elements();
  CHECK(f7.closure(all) == all);
  // triangles are closed in F7 (lines have exactly 3 points)
  ElementSet tri = {"e0", "e1", "e3"};
  ElementSet cl = f7.closure(tri);
  std::sort(cl.begin(), cl.end());
  ElementSet want = tri;
  std::sort(want.begin(), want.end());
  CHECK(cl == want);

  GF2Matrix withloop(1, 2);
  withloop.set(0, 0, true);
  BinaryMatroid m(withloop, {"a", "loop"});
  CHECK(m.closure({}) == ElementSet{"loop"});
}

TEST_CASE("simplify") {
  BinaryMatroid f7 = fano();
  CHECK(f7.simplify().same_labelled_matroid(f7));
  CHECK(f7.is_simple());

  GF2Matrix m(2, 3);
  m.set(0, 0, true);
  m.set(0, 1, true);
  m.set(1, 2, true);
  BinaryMatroid r2(m, {"a", "b", "c"});
  BinaryMatroid s = r2.simplify();
  CHECK(s.size() == 2);
  CHECK(s.has_element("a"));  // smallest label retained
  CHECK_FALSE(s.has_element("b"));
  CHECK(s.is_simple());
}

TEST_CASE("circuits and cocircuits of F7") {
  BinaryMatroid f7 = fano();
  SubsetFamily tri = f7.triangles();
  CHECK(tri.size() == 7);

  // against the brute-force oracle
  auto brute = oracle::brute_circuits(f7, 3);
  CHECK(brute.size() == 7);

  // every cocircuit of F7 has size 4
  SubsetFamily coc = f7.cocircuits();
  CHECK(coc.size() == 7);
  for (const auto& s : coc.sets) CHECK(s.size() == 4);

  // full circuit list matches the oracle
  auto full = f7.circuit_masks();
  auto full_brute = oracle::brute_circuits(f7);
  std::sort(full.begin(), full.end());
  std::sort(full_brute.begin(), full_brute.end());
  CHECK(full == full_brute);

  // a loop is a singleton circuit
  GF2Matrix withloop(1, 2);
  withloop.set(0, 0, true);
  BinaryMatroid m(withloop, {"a", "loop"});
  CHECK(m.circuits().contains({"loop"}));
}

TEST_CASE("binary orthogonality of circuits and cocircuits") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 8; trial++) {
    BinaryMatroid m = random_matroid(rng, 3, 7);
    auto cs = m.circuit_masks();
    auto ds = m.cocircuit_masks();
    for (auto c : cs)
      for (auto d : ds) CHECK(std::popcount(c & d) % 2 == 0);
  }
}

TEST_CASE("text format round trip") {
  BinaryMatroid f7 = fano();
  std::string text = write_matrix_text(f7, std::string("F7"));
  MatroidFile back = read_matrix_text(text);
  CHECK(back.name == std::string("F7"));
  CHECK(back.matroid.same_labelled_matroid(f7));
  CHECK(back.matroid.rep() == f7.rep());
  CHECK(write_matrix_text(back.matroid, back.name) == text);  // bit-exact

  MatroidFile red = read_matrix_text("# comment\nname: X\nreduced 3 4\n1101\n1011\n0111\n");
  CHECK(red.matroid.same_labelled_matroid(f7));
  CHECK_THROWS_AS(read_matrix_text("reduced 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_matrix_text("reduced 2 2\n11\n"), std::invalid_argument);
}
