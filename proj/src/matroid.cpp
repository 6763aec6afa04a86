#include "binmat/matroid.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace binmat {

bool SubsetFamily::contains(const ElementSet& s) const {
  ElementSet t = s;
  std::sort(t.begin(), t.end());
  for (const auto& x : sets) {
    ElementSet y = x;
    std::sort(y.begin(), y.end());
    if (y == t) return true;
  }
  return false;
}

void SubsetFamily::sort_normalize() {
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

BinaryMatroid::BinaryMatroid(GF2Matrix rep, std::vector<ElementId> labels)
    : labels_(std::move(labels)), rep_(std::move(rep)) {
  if (rep_.cols() != static_cast<int>(labels_.size()))
    throw std::invalid_argument("label count must match column count");
  if (static_cast<int>(labels_.size()) > 64)
    throw std::invalid_argument("ground sets beyond 64 elements are unsupported");
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l.name).second)
      throw std::invalid_argument("duplicate element label: " + l.name);
  normalize_and_cache();
}

void BinaryMatroid::normalize_and_cache() {
  RrefResult r = rref(rep_);
  int rk = static_cast<int>(r.pivot_cols.size());
  GF2Matrix full(rk, rep_.cols());
  for (int i = 0; i < rk; i++)
    for (int j = 0; j < rep_.cols(); j++)
      if (r.matrix.get(i, j)) full.set(i, j, true);
  rep_ = std::move(full);
  columns_.resize(labels_.size());
  for (int j = 0; j < static_cast<int>(labels_.size()); j++)
    columns_[j] = rep_.cols() > 0 ? rep_.column_word(j) : 0;
}

BinaryMatroid BinaryMatroid::from_reduced(const GF2Matrix& d,
                                          const std::vector<ElementId>& basis_labels,
                                          const std::vector<ElementId>& cobasis_labels) {
  if (static_cast<int>(basis_labels.size()) != d.rows() ||
      static_cast<int>(cobasis_labels.size()) != d.cols())
    throw std::invalid_argument("label counts must match reduced-matrix dimensions");
  int r = d.rows(), k = d.cols();
  GF2Matrix rep(r, r + k);
  for (int i = 0; i < r; i++) rep.set(i, i, true);
  for (int i = 0; i < r; i++)
    for (int j = 0; j < k; j++)
      if (d.get(i, j)) rep.set(i, r + j, true);
  std::vector<ElementId> labels = basis_labels;
  labels.insert(labels.end(), cobasis_labels.begin(), cobasis_labels.end());
  return BinaryMatroid(std::move(rep), std::move(labels));
}

BinaryMatroid BinaryMatroid::from_reduced(const GF2Matrix& d) {
  std::vector<ElementId> b, c;
  for (int i = 0; i < d.rows(); i++) b.push_back("e" + std::to_string(i));
  for (int j = 0; j < d.cols(); j++) c.push_back("e" + std::to_string(d.rows() + j));
  return from_reduced(d, b, c);
}

BinaryMatroid BinaryMatroid::from_full_strings(const std::vector<std::string>& rows) {
  GF2Matrix m = GF2Matrix::from_strings(rows);
  std::vector<ElementId> labels;
  for (int j = 0; j < m.cols(); j++) labels.push_back("e" + std::to_string(j));
  return BinaryMatroid(std::move(m), std::move(labels));
}

BinaryMatroid BinaryMatroid::from_reduced_strings(const std::vector<std::string>& rows) {
  return from_reduced(GF2Matrix::from_strings(rows));
}

int BinaryMatroid::index_of(const ElementId& e) const {
  for (int i = 0; i < size(); i++)
    if (labels_[i] == e) return i;
  throw std::invalid_argument("unknown element: " + e.name);
}

bool BinaryMatroid::has_element(const ElementId& e) const {
  for (const auto& l : labels_)
    if (l == e) return true;
  return false;
}

int BinaryMatroid::rank_of_mask(std::uint64_t mask) const {
  std::uint64_t basis[64];
  int nb = 0;
  std::uint64_t m = mask;
  while (m) {
    int j = std::countr_zero(m);
    m &= m - 1;
    std::uint64_t v = columns_[j];
    for (int t = 0; t < nb; t++) {
      std::uint64_t low = basis[t] & -basis[t];
      if (v & low) v ^= basis[t];
    }
    if (v) basis[nb++] = v;
  }
  return nb;
}

int BinaryMatroid::rank_of(const ElementSet& s) const { return rank_of_mask(mask_of(s)); }

std::uint64_t BinaryMatroid::mask_of(const ElementSet& s) const {
  std::uint64_t m = 0;
  for (const auto& e : s) m |= 1ull << index_of(e);
  return m;
}

ElementSet BinaryMatroid::set_of(std::uint64_t mask) const {
  ElementSet s;
  while (mask) {
    int j = std::countr_zero(mask);
    mask &= mask - 1;
    s.push_back(labels_[j]);
  }
  return s;
}

BinaryMatroid BinaryMatroid::dual() const {
  int n = size(), r = rank();
  // rep_ is kept in RREF, so a pivot column is exactly the first column
  // equal to the next unit vector.
  std::vector<int> pivots;
  std::vector<int> copivots;
  {
    int row = 0;
    for (int c = 0; c < n; c++) {
      if (row < r && columns_[c] == (1ull << row)) {
        pivots.push_back(c);
        row++;
      } else {
        copivots.push_back(c);
      }
    }
  }
  GF2Matrix d(n - r, n);
  for (int k = 0; k < n - r; k++) d.set(k, copivots[k], true);
  for (int i = 0; i < r; i++)
    for (int k = 0; k < n - r; k++)
      if (rep_.get(i, copivots[k])) d.set(k, pivots[i], true);
  return BinaryMatroid(std::move(d), labels_);
}

BinaryMatroid BinaryMatroid::restrict_mask(std::uint64_t keep) const {
  std::vector<int> cols;
  std::vector<ElementId> labels;
  for (int j = 0; j < size(); j++)
    if (keep & (1ull << j)) {
      cols.push_back(j);
      labels.push_back(labels_[j]);
    }
  return BinaryMatroid(rep_.select_columns(cols), std::move(labels));
}

BinaryMatroid BinaryMatroid::delete_mask(std::uint64_t mask) const {
  return restrict_mask(full_mask() & ~mask);
}

BinaryMatroid BinaryMatroid::contract_mask(std::uint64_t mask) const {
  if (mask == 0) return *this;
  int n = size(), r = rank();
  // Eliminate with pivots preferred inside the contracted set: column order
  // = contracted columns first, then the rest. Pivot rows used by the set
  // are dropped along with its columns.
  std::vector<int> order;
  for (int j = 0; j < n; j++)
    if (mask & (1ull << j)) order.push_back(j);
  for (int j = 0; j < n; j++)
    if (!(mask & (1ull << j))) order.push_back(j);
  GF2Matrix a = rep_;
  std::vector<bool> row_used(r, false);
  std::vector<bool> row_in_set(r, false);
  for (int c : order) {
    int p = -1;
    for (int i = 0; i < r; i++)
      if (!row_used[i] && a.get(i, c)) { p = i; break; }
    if (p < 0) continue;
    row_used[p] = true;
    if (mask & (1ull << c)) row_in_set[p] = true;
    for (int i = 0; i < r; i++)
      if (i != p && a.get(i, c)) a.xor_row_into(p, i);
  }
  std::vector<int> keep_cols;
  std::vector<ElementId> labels;
  for (int j = 0; j < n; j++)
    if (!(mask & (1ull << j))) {
      keep_cols.push_back(j);
      labels.push_back(labels_[j]);
    }
  int keep_rows = 0;
  for (int i = 0; i < r; i++)
    if (!row_in_set[i]) keep_rows++;
  GF2Matrix out(keep_rows, static_cast<int>(keep_cols.size()));
  int oi = 0;
  for (int i = 0; i < r; i++) {
    if (row_in_set[i]) continue;
    for (int k = 0; k < static_cast<int>(keep_cols.size()); k++)
      if (a.get(i, keep_cols[k])) out.set(oi, k, true);
    oi++;
  }
  return BinaryMatroid(std::move(out), std::move(labels));
}

BinaryMatroid BinaryMatroid::delete_elements(const ElementSet& s) const {
  return delete_mask(mask_of(s));
}

BinaryMatroid BinaryMatroid::contract_elements(const ElementSet& s) const {
  return contract_mask(mask_of(s));
}

std::uint64_t BinaryMatroid::closure_mask(std::uint64_t mask) const {
  std::uint64_t basis[64];
  int nb = 0;
  std::uint64_t m = mask;
  while (m) {
    int j = std::countr_zero(m);
    m &= m - 1;
    std::uint64_t v = columns_[j];
    for (int t = 0; t < nb; t++) {
      std::uint64_t low = basis[t] & -basis[t];
      if (v & low) v ^= basis[t];
    }
    if (v) basis[nb++] = v;
  }
  std::uint64_t cl = 0;
  for (int j = 0; j < size(); j++) {
    std::uint64_t v = columns_[j];
    for (int t = 0; t < nb; t++) {
      std::uint64_t low = basis[t] & -basis[t];
      if (v & low) v ^= basis[t];
    }
    if (v == 0) cl |= 1ull << j;
  }
  return cl;
}

ElementSet BinaryMatroid::closure(const ElementSet& s) const {
  return set_of(closure_mask(mask_of(s)));
}

std::vector<int> BinaryMatroid::loops() const {
  std::vector<int> out;
  for (int j = 0; j < size(); j++)
    if (columns_[j] == 0) out.push_back(j);
  return out;
}

std::vector<int> BinaryMatroid::coloops() const {
  std::vector<int> out;
  for (int j = 0; j < size(); j++)
    if (rank_of_mask(full_mask() & ~(1ull << j)) == rank() - 1) out.push_back(j);
  return out;
}

BinaryMatroid BinaryMatroid::simplify() const {
  std::uint64_t del = 0;
  for (int j = 0; j < size(); j++) {
    if (columns_[j] == 0) { del |= 1ull << j; continue; }
    for (int i = 0; i < size(); i++) {
      if (i == j || columns_[i] != columns_[j]) continue;
      // drop j unless it carries the smallest label of its class
      if (labels_[i] < labels_[j]) { del |= 1ull << j; break; }
    }
  }
  return delete_mask(del);
}

BinaryMatroid BinaryMatroid::cosimplify() const {
  return dual().simplify().dual();
}

bool BinaryMatroid::is_simple() const {
  for (int j = 0; j < size(); j++) {
    if (columns_[j] == 0) return false;
    for (int i = j + 1; i < size(); i++)
      if (columns_[i] == columns_[j]) return false;
  }
  return true;
}

bool BinaryMatroid::is_cosimple() const { return dual().is_simple(); }

namespace {

// Minimal nonzero supports of a GF(2) vector space given by spanning
// vectors, as masks over the elements. Enumerates the whole space, so the
// dimension must be small; cap-aware subset scan is used by circuit_masks
// for small caps instead.
std::vector<std::uint64_t> minimal_supports(const std::vector<std::uint64_t>& span_vecs,
                                            int max_size) {
  std::vector<std::uint64_t> basis;
  for (std::uint64_t v : span_vecs) {
    for (std::uint64_t b : basis) {
      std::uint64_t low = b & -b;
      if (v & low) v ^= b;
    }
    if (v) basis.push_back(v);
  }
  int d = static_cast<int>(basis.size());
  if (d > 26) throw std::logic_error("space too large for support enumeration");
  std::vector<std::uint64_t> all;
  all.reserve((1u << d) - 1);
  for (std::uint32_t x = 1; x < (1u << d); x++) {
    std::uint64_t v = 0;
    std::uint32_t y = x;
    while (y) {
      int i = std::countr_zero(y);
      y &= y - 1;
      v ^= basis[i];
    }
    if (v && (max_size == 0 || std::popcount(v) <= max_size)) all.push_back(v);
  }
  std::sort(all.begin(), all.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  std::vector<std::uint64_t> min;
  for (std::uint64_t v : all) {
    bool dominated = false;
    for (std::uint64_t m : min)
      if ((m & ~v) == 0) { dominated = true; break; }
    if (!dominated) min.push_back(v);
  }
  return min;
}

}  // namespace

std::vector<std::uint64_t> BinaryMatroid::circuit_masks(int max_size) const {
  int n = size(), r = rank();
  std::vector<std::uint64_t> out;
  // Loops are the 1-element circuits.
  for (int j = 0; j < n; j++)
    if (columns_[j] == 0) out.push_back(1ull << j);
  if (max_size == 1) return out;

  if (max_size != 0 && max_size <= 4) {
    // Small-cap path: scan subsets of size <= cap. A set is a circuit iff
    // its columns sum to zero and no proper nonempty subset does.
    std::vector<int> idx;
    for (int s = 2; s <= max_size; s++) {
      std::vector<int> c(s);
      for (int i = 0; i < s; i++) c[i] = i;
      while (true) {
        std::uint64_t sum = 0, mask = 0;
        bool zerocol = false;
        for (int i = 0; i < s; i++) {
          if (columns_[c[i]] == 0) zerocol = true;
          sum ^= columns_[c[i]];
          mask |= 1ull << c[i];
        }
        if (!zerocol && sum == 0) {
          bool minimal = true;
          for (std::uint64_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
            if (sub == mask) continue;
            std::uint64_t t = 0, q = sub;
            while (q) {
              int j = std::countr_zero(q);
              q &= q - 1;
              t ^= columns_[j];
            }
            if (t == 0 && sub != 0) { minimal = false; break; }
          }
          if (minimal) out.push_back(mask);
        }
        int i = s - 1;
        while (i >= 0 && c[i] == n - s + i) i--;
        if (i < 0) break;
        c[i]++;
        for (int j = i + 1; j < s; j++) c[j] = c[j - 1] + 1;
      }
    }
    return out;
  }

  // Exhaustive path: circuits = minimal supports of the cycle space
  // (null space of the representation), dimension n - r.
  std::vector<std::uint64_t> cycle_vecs;
  {
    // Null space basis from RREF: for each non-pivot column c, the vector
    // with 1 at c and the pivot entries of column c.
    std::vector<int> pivots;
    std::vector<bool> is_pivot(n, false);
    int row = 0;
    for (int c = 0; c < n && row < r; c++) {
      if (columns_[c] == (1ull << row)) {
        bool clean = true;
        for (int i = 0; i < row; i++)
          if (rep_.get(i, c)) { clean = false; break; }
        if (clean) { pivots.push_back(c); is_pivot[c] = true; row++; }
      }
    }
    for (int c = 0; c < n; c++) {
      if (is_pivot[c]) continue;
      std::uint64_t v = 1ull << c;
      for (int i = 0; i < r; i++)
        if (rep_.get(i, c)) v |= 1ull << pivots[i];
      cycle_vecs.push_back(v);
    }
  }
  auto min = minimal_supports(cycle_vecs, max_size);
  // Keep loop singletons found above (they are members of the space too,
  // so dedup).
  std::vector<std::uint64_t> merged = out;
  for (std::uint64_t v : min)
    if (std::find(merged.begin(), merged.end(), v) == merged.end()) merged.push_back(v);
  return merged;
}

std::vector<std::uint64_t> BinaryMatroid::cocircuit_masks(int max_size) const {
  int n = size(), r = rank();
  if (max_size != 0 && max_size <= 4) {
    return dual().circuit_masks(max_size);
  }
  // Cocircuits = minimal supports of the row space of the representation.
  std::vector<std::uint64_t> row_vecs;
  for (int i = 0; i < r; i++) {
    std::uint64_t v = 0;
    for (int j = 0; j < n; j++)
      if (rep_.get(i, j)) v |= 1ull << j;
    row_vecs.push_back(v);
  }
  return minimal_supports(row_vecs, max_size);
}

namespace {
SubsetFamily masks_to_family(const BinaryMatroid& m, std::vector<std::uint64_t> masks) {
  SubsetFamily f;
  for (std::uint64_t v : masks) f.sets.push_back(m.set_of(v));
  f.sort_normalize();
  return f;
}
}  // namespace

SubsetFamily BinaryMatroid::circuits(int max_size) const {
  return masks_to_family(*this, circuit_masks(max_size));
}

SubsetFamily BinaryMatroid::cocircuits(int max_size) const {
  return masks_to_family(*this, cocircuit_masks(max_size));
}

SubsetFamily BinaryMatroid::triangles() const {
  auto masks = circuit_masks(3);
  std::vector<std::uint64_t> tri;
  for (auto v : masks)
    if (std::popcount(v) == 3) tri.push_back(v);
  return masks_to_family(*this, tri);
}

SubsetFamily BinaryMatroid::triads() const {
  auto masks = cocircuit_masks(3);
  std::vector<std::uint64_t> tri;
  for (auto v : masks)
    if (std::popcount(v) == 3) tri.push_back(v);
  return masks_to_family(*this, tri);
}

bool BinaryMatroid::same_labelled_matroid(const BinaryMatroid& o) const {
  if (size() != o.size() || rank() != o.rank()) return false;
  std::vector<ElementId> mine = labels_;
  std::sort(mine.begin(), mine.end());
  std::vector<ElementId> theirs = o.labels_;
  std::sort(theirs.begin(), theirs.end());
  if (mine != theirs) return false;
  // Equal rank functions <=> for binary reps, equal circuit spaces; compare
  // via rank of every subset of a common column order (exponential; callers
  // keep this to small ground sets).
  if (size() > 20) throw std::logic_error("same_labelled_matroid is exhaustive; too large");
  std::vector<int> perm(size());
  for (int j = 0; j < o.size(); j++) perm[j] = index_of(o.label_of(j));
  for (std::uint64_t s = 0; s <= o.full_mask(); s++) {
    std::uint64_t mapped = 0, t = s;
    while (t) {
      int j = std::countr_zero(t);
      t &= t - 1;
      mapped |= 1ull << perm[j];
    }
    if (rank_of_mask(mapped) != o.rank_of_mask(s)) return false;
  }
  return true;
}

}  // namespace binmat
