#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace binmat {

/// Dense matrix over GF(2). Rows are bit-packed into 64-bit words,
/// row-major; bits beyond `cols()` in the last word of a row are kept zero.
/// A 0xN or Nx0 matrix is valid and has rank 0.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(int rows, int cols);

  static GF2Matrix identity(int n);

  /// Build from "0101" strings, one per row. All rows must have equal length.
  static GF2Matrix from_strings(const std::vector<std::string>& rows);

  /// Build from row bitmasks (bit j of word i = entry (i,j)); needs cols <= 64.
  static GF2Matrix from_row_words(const std::vector<std::uint64_t>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const;
  void set(int r, int c, bool v);

  /// Row r as a word; only valid when cols <= 64.
  std::uint64_t row_word(int r) const;

  /// Column c as a word over the rows (bit i = entry (i,c)); rows <= 64.
  std::uint64_t column_word(int c) const;

  void xor_row_into(int src, int dst);  // row dst ^= row src
  void swap_rows(int a, int b);

  GF2Matrix transposed() const;

  /// Matrix with the selected columns, in the given order.
  GF2Matrix select_columns(const std::vector<int>& cols) const;

  bool operator==(const GF2Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
  }

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;

  friend struct GF2Ops;
};

struct RrefResult {
  GF2Matrix matrix;
  std::vector<int> pivot_cols;  // strictly increasing
};

/// GF(2) row rank; the input is not modified.
int rank(const GF2Matrix& m);

/// Reduced row echelon form with deterministic pivoting (lowest row,
/// lowest column). Row space is preserved; zero rows sink to the bottom.
RrefResult rref(const GF2Matrix& m);

/// True iff v (of length m.rows()) lies in the GF(2) span of the selected
/// columns of m. Throws std::invalid_argument on a length mismatch.
bool in_column_span(const GF2Matrix& m, const std::vector<int>& cols,
                    const std::vector<bool>& v);

}  // namespace binmat
