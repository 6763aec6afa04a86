#include "binmat/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace binmat {

GF2Matrix::GF2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  words_per_row_ = (cols + 63) / 64;
  if (words_per_row_ == 0) words_per_row_ = 1;
  bits_.assign(static_cast<std::size_t>(rows) * words_per_row_, 0);
}

GF2Matrix GF2Matrix::identity(int n) {
  GF2Matrix m(n, n);
  for (int i = 0; i < n; i++) m.set(i, i, true);
  return m;
}

GF2Matrix GF2Matrix::from_strings(const std::vector<std::string>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  GF2Matrix m(r, c);
  for (int i = 0; i < r; i++) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("ragged row lengths");
    for (int j = 0; j < c; j++) {
      char ch = rows[i][j];
      if (ch != '0' && ch != '1') throw std::invalid_argument("matrix rows must be 0/1");
      if (ch == '1') m.set(i, j, true);
    }
  }
  return m;
}

GF2Matrix GF2Matrix::from_row_words(const std::vector<std::uint64_t>& rows, int cols) {
  if (cols > 64) throw std::invalid_argument("from_row_words needs cols <= 64");
  GF2Matrix m(static_cast<int>(rows.size()), cols);
  std::uint64_t mask = cols == 64 ? ~0ull : ((1ull << cols) - 1);
  for (std::size_t i = 0; i < rows.size(); i++) m.bits_[i] = rows[i] & mask;
  return m;
}

bool GF2Matrix::get(int r, int c) const {
  return (bits_[static_cast<std::size_t>(r) * words_per_row_ + c / 64] >> (c % 64)) & 1;
}

void GF2Matrix::set(int r, int c, bool v) {
  auto& w = bits_[static_cast<std::size_t>(r) * words_per_row_ + c / 64];
  if (v)
    w |= 1ull << (c % 64);
  else
    w &= ~(1ull << (c % 64));
}

std::uint64_t GF2Matrix::row_word(int r) const {
  if (cols_ > 64) throw std::logic_error("row_word needs cols <= 64");
  return bits_[static_cast<std::size_t>(r) * words_per_row_];
}

std::uint64_t GF2Matrix::column_word(int c) const {
  if (rows_ > 64) throw std::logic_error("column_word needs rows <= 64");
  std::uint64_t w = 0;
  for (int i = 0; i < rows_; i++)
    if (get(i, c)) w |= 1ull << i;
  return w;
}

void GF2Matrix::xor_row_into(int src, int dst) {
  std::size_t a = static_cast<std::size_t>(src) * words_per_row_;
  std::size_t b = static_cast<std::size_t>(dst) * words_per_row_;
  for (int k = 0; k < words_per_row_; k++) bits_[b + k] ^= bits_[a + k];
}

void GF2Matrix::swap_rows(int a, int b) {
  if (a == b) return;
  std::size_t x = static_cast<std::size_t>(a) * words_per_row_;
  std::size_t y = static_cast<std::size_t>(b) * words_per_row_;
  for (int k = 0; k < words_per_row_; k++) std::swap(bits_[x + k], bits_[y + k]);
}

GF2Matrix GF2Matrix::transposed() const {
  GF2Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j < cols_; j++)
      if (get(i, j)) t.set(j, i, true);
  return t;
}

GF2Matrix GF2Matrix::select_columns(const std::vector<int>& cols) const {
  GF2Matrix s(rows_, static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); j++) {
    int c = cols[j];
    if (c < 0 || c >= cols_) throw std::invalid_argument("column index out of range");
    for (int i = 0; i < rows_; i++)
      if (get(i, c)) s.set(i, j, true);
  }
  return s;
}

std::string GF2Matrix::to_string() const {
  std::string out;
  for (int i = 0; i < rows_; i++) {
    for (int j = 0; j < cols_; j++) out += get(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

RrefResult rref(const GF2Matrix& m) {
  GF2Matrix a = m;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); col++) {
    int p = -1;
    for (int i = row; i < a.rows(); i++)
      if (a.get(i, col)) { p = i; break; }
    if (p < 0) continue;
    a.swap_rows(row, p);
    for (int i = 0; i < a.rows(); i++)
      if (i != row && a.get(i, col)) a.xor_row_into(row, i);
    pivots.push_back(col);
    row++;
  }
  return {std::move(a), std::move(pivots)};
}

int rank(const GF2Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Column-wise elimination over row words when narrow, else via rref.
  if (m.cols() <= 64) {
    std::vector<std::uint64_t> basis;  // reduced row words, distinct leading bits
    basis.reserve(m.rows());
    for (int i = 0; i < m.rows(); i++) {
      std::uint64_t v = m.row_word(i);
      for (std::uint64_t b : basis) {
        std::uint64_t low = b & -b;
        if (v & low) v ^= b;
      }
      if (v) basis.push_back(v);
    }
    return static_cast<int>(basis.size());
  }
  return static_cast<int>(rref(m).pivot_cols.size());
}

bool in_column_span(const GF2Matrix& m, const std::vector<int>& cols,
                    const std::vector<bool>& v) {
  if (static_cast<int>(v.size()) != m.rows())
    throw std::invalid_argument("vector length must equal row count");
  if (m.rows() > 64) throw std::invalid_argument("in_column_span needs rows <= 64");
  std::vector<std::uint64_t> basis;
  for (int c : cols) {
    if (c < 0 || c >= m.cols()) throw std::invalid_argument("column index out of range");
    std::uint64_t w = m.column_word(c);
    for (std::uint64_t b : basis) {
      std::uint64_t low = b & -b;
      if (w & low) w ^= b;
    }
    if (w) basis.push_back(w);
  }
  std::uint64_t t = 0;
  for (int i = 0; i < m.rows(); i++)
    if (v[i]) t |= 1ull << i;
  for (std::uint64_t b : basis) {
    std::uint64_t low = b & -b;
    if (t & low) t ^= b;
  }
  return t == 0;
}

}  // namespace binmat
