#include "doctest.h"

#include <random>

#include "binmat/gf2.hpp"
#include "test_oracles.hpp"

using namespace binmat;

namespace {
// The Fig. 2 reduced block (11x5).
const std::vector<std::string> kY16Block = {
    "11100", "11010", "10110", "00111", "01011", "01101",
    "01110", "10011", "10101", "11001", "11111",
};
}  // namespace

TEST_CASE("rank basics") {
  CHECK(rank(GF2Matrix(0, 0)) == 0);
  CHECK(rank(GF2Matrix(0, 5)) == 0);
  CHECK(rank(GF2Matrix(5, 0)) == 0);
  CHECK(rank(GF2Matrix::identity(3)) == 3);

  GF2Matrix fig2 = GF2Matrix::from_strings(kY16Block);
  CHECK(rank(fig2) == 5);
  CHECK(oracle::brute_rank(fig2) == 5);
  CHECK(rank(fig2.transposed()) == 5);
}

TEST_CASE("rref basics") {
  auto r = rref(GF2Matrix::identity(4));
  CHECK(r.matrix == GF2Matrix::identity(4));
  CHECK(r.pivot_cols == std::vector<int>{0, 1, 2, 3});

  auto z = rref(GF2Matrix(3, 3));
  CHECK(z.matrix == GF2Matrix(3, 3));
  CHECK(z.pivot_cols.empty());

  auto d = rref(GF2Matrix::from_strings({"11", "11"}));
  CHECK(d.matrix == GF2Matrix::from_strings({"11", "00"}));
  CHECK(d.pivot_cols == std::vector<int>{0});
}

TEST_CASE("rref is idempotent and preserves rank") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; trial++) {
    int rows = 1 + static_cast<int>(rng() % 6);
    int cols = 1 + static_cast<int>(rng() % 8);
    GF2Matrix m(rows, cols);
    for (int i = 0; i < rows; i++)
      for (int j = 0; j < cols; j++)
        if (rng() & 1) m.set(i, j, true);
    auto r1 = rref(m);
    auto r2 = rref(r1.matrix);
    CHECK(r1.matrix == r2.matrix);
    CHECK(r1.pivot_cols == r2.pivot_cols);
    CHECK(rank(m) == static_cast<int>(r1.pivot_cols.size()));
    CHECK(rank(m) == rank(m.transposed()));
    if (cols <= 12) CHECK(rank(m) == oracle::brute_rank(m));
  }
}

TEST_CASE("rank invariant under row and column permutation and row addition") {
  std::mt19937 rng(11);
  GF2Matrix m = GF2Matrix::from_strings(kY16Block);
  for (int trial = 0; trial < 20; trial++) {
    GF2Matrix p = m;
    int a = static_cast<int>(rng() % p.rows());
    int b = static_cast<int>(rng() % p.rows());
    p.swap_rows(a, b);
    if (a != b) p.xor_row_into(a, b);
    CHECK(rank(p) == 5);
  }
}

TEST_CASE("in_column_span") {
  GF2Matrix id = GF2Matrix::identity(3);
  CHECK(in_column_span(id, {}, {false, false, false}));
  CHECK_FALSE(in_column_span(id, {0}, {false, true, false}));
  CHECK(in_column_span(id, {0, 1}, {true, true, false}));
  CHECK_THROWS_AS(in_column_span(id, {0}, {true}), std::invalid_argument);
}
