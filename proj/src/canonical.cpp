#include "binmat/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <set>
#include <stdexcept>

namespace binmat {

std::string CanonicalKey::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

namespace {

// One reduced representation [I | D] of the matroid with respect to a basis:
// rows carry the basis elements' colors, columns the cobasis elements'.
struct ReducedCandidate {
  std::vector<std::uint64_t> rows;  // D, bit j = entry (i, j), ncols <= 64
  std::vector<std::uint8_t> row_colors;
  std::vector<std::uint8_t> col_colors;
  int ncols = 0;
};

// Isomorphism-invariant basis fingerprint used to prune the basis loop:
// only bases whose profile equals the global minimum go through full
// canonization. Column weights of D are the fundamental-circuit sizes - 1.
struct BasisProfile {
  std::vector<std::uint16_t> cols;  // sorted (weight<<8 | color)
  std::vector<std::uint16_t> rows;

  bool operator<(const BasisProfile& o) const {
    if (cols != o.cols) return cols < o.cols;
    return rows < o.rows;
  }
  bool operator==(const BasisProfile& o) const { return cols == o.cols && rows == o.rows; }
};

BasisProfile profile_of(const ReducedCandidate& c) {
  BasisProfile p;
  int r = static_cast<int>(c.rows.size());
  for (int j = 0; j < c.ncols; j++) {
    int w = 0;
    for (int i = 0; i < r; i++)
      if (c.rows[i] & (1ull << j)) w++;
    p.cols.push_back(static_cast<std::uint16_t>((w << 8) | c.col_colors[j]));
  }
  for (int i = 0; i < r; i++)
    p.rows.push_back(static_cast<std::uint16_t>((std::popcount(c.rows[i]) << 8) |
                                                c.row_colors[i]));
  std::sort(p.cols.begin(), p.cols.end());
  std::sort(p.rows.begin(), p.rows.end());
  return p;
}

// Minimal row-major encoding of D under row permutations and column
// permutations that preserve column colors. Rows are chosen one at a time by
// backtracking; the column order refines greedily (within each class, the
// columns where the new row is 0 come first), which is optimal for a fixed
// row order, so the minimum over row orders is the true minimum.
struct MatrixCanonizer {
  int r, c;
  const ReducedCandidate& cand;
  std::vector<int> col_order;
  std::vector<int> class_of;           // class id per column position
  std::vector<std::pair<int, int>> classes;  // [start, end) ranges
  std::vector<bool> used;
  // chunk per depth: row color byte then 8 pattern bytes (MSB-first)
  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> current;
  bool have_best = false;

  explicit MatrixCanonizer(const ReducedCandidate& cd)
      : r(static_cast<int>(cd.rows.size())), c(cd.ncols), cand(cd) {}

  std::vector<std::uint8_t> run() {
    col_order.resize(c);
    for (int j = 0; j < c; j++) col_order[j] = j;
    std::stable_sort(col_order.begin(), col_order.end(), [&](int a, int b) {
      return cand.col_colors[a] < cand.col_colors[b];
    });
    classes.clear();
    int s = 0;
    for (int j = 1; j <= c; j++) {
      if (j == c || cand.col_colors[col_order[j]] != cand.col_colors[col_order[s]]) {
        classes.push_back({s, j});
        s = j;
      }
    }
    used.assign(r, false);
    current.clear();
    dfs(0);
    // prepend the sorted column color sequence (fixed across row orders)
    std::vector<std::uint8_t> out;
    for (int j = 0; j < c; j++) out.push_back(cand.col_colors[col_order[j]]);
    out.insert(out.end(), best.begin(), best.end());
    return out;
  }

  // Pattern of row under the refinement it would induce: within each class,
  // zero-columns first. MSB-first packing makes integer compare lexicographic.
  std::uint64_t pattern_of(int row) const {
    std::uint64_t w = cand.rows[row];
    std::uint64_t pat = 0;
    int pos = 0;
    for (const auto& cl : classes) {
      int ones = 0;
      for (int p = cl.first; p < cl.second; p++)
        if (w & (1ull << col_order[p])) ones++;
      int zeros = (cl.second - cl.first) - ones;
      pos += zeros;
      for (int t = 0; t < ones; t++) pat |= 1ull << (63 - (pos + t));
      pos += ones;
    }
    return pat;
  }

  void append_chunk(std::vector<std::uint8_t>& enc, std::uint8_t color,
                    std::uint64_t pat) const {
    enc.push_back(color);
    for (int b = 7; b >= 0; b--) enc.push_back(static_cast<std::uint8_t>(pat >> (b * 8)));
  }

  void refine_with(int row, std::vector<std::pair<int, int>>& saved_classes,
                   std::vector<int>& saved_order) {
    saved_classes = classes;
    saved_order = col_order;
    std::uint64_t w = cand.rows[row];
    std::vector<std::pair<int, int>> next;
    for (const auto& cl : classes) {
      int lo = cl.first, hi = cl.second;
      std::vector<int> zeros, ones;
      for (int p = lo; p < hi; p++) {
        if (w & (1ull << col_order[p]))
          ones.push_back(col_order[p]);
        else
          zeros.push_back(col_order[p]);
      }
      int p = lo;
      for (int z : zeros) col_order[p++] = z;
      for (int o : ones) col_order[p++] = o;
      if (!zeros.empty() && !ones.empty()) {
        next.push_back({lo, lo + static_cast<int>(zeros.size())});
        next.push_back({lo + static_cast<int>(zeros.size()), hi});
      } else {
        next.push_back(cl);
      }
    }
    classes = std::move(next);
  }

  void dfs(int depth) {
    if (depth == r) {
      if (!have_best || current < best) {
        best = current;
        have_best = true;
      }
      return;
    }
    // candidate rows sorted by chunk; equal raw rows are interchangeable
    struct Cand {
      int row;
      std::uint8_t color;
      std::uint64_t pat;
    };
    std::vector<Cand> cands;
    std::set<std::pair<std::uint8_t, std::uint64_t>> seen_raw;
    for (int i = 0; i < r; i++) {
      if (used[i]) continue;
      if (!seen_raw.insert({cand.row_colors[i], cand.rows[i]}).second) continue;
      cands.push_back({i, cand.row_colors[i], pattern_of(i)});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      if (a.color != b.color) return a.color < b.color;
      return a.pat < b.pat;
    });
    std::size_t base = current.size();
    for (const auto& cd : cands) {
      current.resize(base);
      append_chunk(current, cd.color, cd.pat);
      if (have_best) {
        // compare current prefix against best at the same length
        int cmp = std::memcmp(current.data(), best.data(),
                              std::min(current.size(), best.size()));
        if (cmp > 0) continue;  // sorted candidates: later ones only worse
      }
      std::vector<std::pair<int, int>> saved_classes;
      std::vector<int> saved_order;
      refine_with(cd.row, saved_classes, saved_order);
      used[cd.row] = true;
      dfs(depth + 1);
      used[cd.row] = false;
      classes = std::move(saved_classes);
      col_order = std::move(saved_order);
    }
    current.resize(base);
  }
};

// Enumerates every basis via augmented columns: low half = residual vector,
// high half = coefficients over the chosen basis so far. One xor keeps both
// in step; at a full basis the coefficient halves of the non-basis columns
// are exactly the columns of D.
struct BasisEnumerator {
  const BinaryMatroid& m;
  const std::vector<int>& colors;
  int n, r;
  std::vector<std::uint64_t> aug;
  std::vector<int> basis;
  bool greedy_only = false;

  BasisProfile best_profile;
  bool have_profile = false;
  std::vector<ReducedCandidate> candidates;
  std::set<std::string> candidate_raw;

  BasisEnumerator(const BinaryMatroid& mm, const std::vector<int>& cols)
      : m(mm), colors(cols), n(mm.size()), r(mm.rank()) {
    if (r > 32) throw std::logic_error("canonical form needs rank <= 32");
    aug.resize(n);
    for (int j = 0; j < n; j++) aug[j] = m.column(j);
  }

  static std::uint64_t residual(std::uint64_t a) { return a & 0xffffffffull; }

  // The chosen column's word has the bit (32 + depth) pre-set by the caller,
  // so a single xor updates residual and coefficients together.
  void pivot(std::vector<std::uint64_t>& a, int col) {
    std::uint64_t v = a[col];
    std::uint64_t res = residual(v);
    std::uint64_t low = res & -res;
    for (int j = 0; j < n; j++) {
      if (j == col) continue;
      if (residual(a[j]) & low) a[j] ^= v;
    }
  }

  void leaf(const std::vector<std::uint64_t>& a) {
    ReducedCandidate cand;
    cand.ncols = n - r;
    cand.rows.assign(r, 0);
    cand.row_colors.resize(r);
    cand.col_colors.resize(n - r);
    for (int i = 0; i < r; i++)
      cand.row_colors[i] = static_cast<std::uint8_t>(colors[basis[i]]);
    int jc = 0;
    std::vector<bool> in_basis(n, false);
    for (int b : basis) in_basis[b] = true;
    for (int j = 0; j < n; j++) {
      if (in_basis[j]) continue;
      std::uint64_t coeff = a[j] >> 32;
      for (int i = 0; i < r; i++)
        if (coeff & (1ull << i)) cand.rows[i] |= 1ull << jc;
      cand.col_colors[jc] = static_cast<std::uint8_t>(colors[j]);
      jc++;
    }
    BasisProfile p = profile_of(cand);
    if (!have_profile || p < best_profile) {
      best_profile = p;
      have_profile = true;
      candidates.clear();
      candidate_raw.clear();
    } else if (!(p == best_profile)) {
      return;
    }
    // dedup literally-equal candidates (frequent for symmetric matroids)
    std::string raw;
    raw.reserve(r * 9 + cand.col_colors.size());
    for (int i = 0; i < r; i++) {
      raw.push_back(static_cast<char>(cand.row_colors[i]));
      for (int b = 0; b < 8; b++) raw.push_back(static_cast<char>(cand.rows[i] >> (b * 8)));
    }
    for (auto cc : cand.col_colors) raw.push_back(static_cast<char>(cc));
    if (candidate_raw.insert(raw).second) candidates.push_back(std::move(cand));
  }

  void enumerate_all(std::vector<std::uint64_t>& a, int pos, int depth) {
    if (depth == r) {
      leaf(a);
      return;
    }
    if (n - pos < r - depth) return;
    for (int i = pos; i < n; i++) {
      if (residual(a[i]) == 0) continue;
      std::vector<std::uint64_t> next = a;
      next[i] ^= 1ull << (32 + depth);  // record the basis column itself
      pivot(next, i);
      basis.push_back(i);
      enumerate_all(next, i + 1, depth + 1);
      basis.pop_back();
    }
  }

  // Greedy basis from a rotated column order; used by the certificate key.
  // Coefficient bit i corresponds to basis[i] in choice order, which is what
  // leaf() expects; row order is irrelevant to the canonizer.
  bool greedy_from(int start) {
    std::vector<std::uint64_t> a = aug;
    basis.clear();
    int depth = 0;
    for (int t = 0; t < n && depth < r; t++) {
      int i = (start + t) % n;
      if (residual(a[i]) == 0) continue;
      a[i] ^= 1ull << (32 + depth);
      pivot(a, i);
      basis.push_back(i);
      depth++;
    }
    if (depth != r) return false;
    leaf(a);
    return true;
  }

  void run_full() {
    std::vector<std::uint64_t> a = aug;
    basis.clear();
    enumerate_all(a, 0, 0);
  }
};

std::string encode_key(char mode, int rank, int n,
                       const std::vector<std::uint8_t>& body) {
  std::string out;
  out.push_back('K');
  out.push_back('1');
  out.push_back(mode);
  out.push_back(static_cast<char>(rank));
  out.push_back(static_cast<char>(n));
  out.append(body.begin(), body.end());
  return out;
}

ReducedCandidate transposed_candidate(const ReducedCandidate& c) {
  ReducedCandidate t;
  int r = static_cast<int>(c.rows.size());
  t.ncols = r;
  t.rows.assign(c.ncols, 0);
  for (int i = 0; i < r; i++)
    for (int j = 0; j < c.ncols; j++)
      if (c.rows[i] & (1ull << j)) t.rows[j] |= 1ull << i;
  t.row_colors = c.col_colors;
  t.col_colors = c.row_colors;
  return t;
}

std::vector<std::uint8_t> min_canonization(std::vector<ReducedCandidate>& cands) {
  std::vector<std::uint8_t> best;
  bool have = false;
  for (auto& c : cands) {
    // backtracking runs over rows; keep the short side there (the header's
    // (rank, n) pins the orientation, so keys stay comparable)
    if (static_cast<int>(c.rows.size()) > c.ncols) c = transposed_candidate(c);
    MatrixCanonizer mc(c);
    auto enc = mc.run();
    if (!have || enc < best) {
      best = std::move(enc);
      have = true;
    }
  }
  return best;
}

std::vector<int> zero_colors(const BinaryMatroid& m) {
  return std::vector<int>(m.size(), 0);
}

CanonicalKey full_key(const BinaryMatroid& m, const std::vector<int>& colors) {
  if (m.size() == 0) return CanonicalKey{encode_key('F', 0, 0, {})};
  BasisEnumerator be(m, colors);
  be.run_full();
  if (!be.have_profile) {
    // rank 0: no basis columns; D is the 0 x n matrix, encode loop colors
    std::vector<std::uint8_t> body;
    std::vector<std::uint8_t> cc;
    for (int j = 0; j < m.size(); j++) cc.push_back(static_cast<std::uint8_t>(colors[j]));
    std::sort(cc.begin(), cc.end());
    return CanonicalKey{encode_key('F', 0, m.size(), cc)};
  }
  auto body = min_canonization(be.candidates);
  return CanonicalKey{encode_key('F', m.rank(), m.size(), body)};
}

}  // namespace

CanonicalKey canonical_key(const BinaryMatroid& m) {
  return full_key(m, zero_colors(m));
}

CanonicalKey canonical_key_colored(const BinaryMatroid& m, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != m.size())
    throw std::invalid_argument("color count must match ground set size");
  return full_key(m, colors);
}

CanonicalKey certificate_key(const BinaryMatroid& m, const std::vector<int>& colors_in) {
  std::vector<int> colors = colors_in.empty() ? zero_colors(m) : colors_in;
  if (m.size() == 0) return CanonicalKey{encode_key('G', 0, 0, {})};
  BasisEnumerator be(m, colors);
  std::set<std::vector<int>> seen;
  for (int s = 0; s < m.size(); s++) {
    BasisEnumerator ge(m, colors);
    if (!ge.greedy_from(s)) continue;
    std::vector<int> sorted_basis = ge.basis;
    std::sort(sorted_basis.begin(), sorted_basis.end());
    if (!seen.insert(sorted_basis).second) continue;
    for (auto& c : ge.candidates) {
      // merge into the shared profile min
      BasisProfile p = profile_of(c);
      if (!be.have_profile || p < be.best_profile) {
        be.best_profile = p;
        be.have_profile = true;
        be.candidates.clear();
        be.candidates.push_back(c);
      } else if (p == be.best_profile) {
        be.candidates.push_back(c);
      }
    }
  }
  if (!be.have_profile) {
    std::vector<std::uint8_t> cc;
    for (int j = 0; j < m.size(); j++) cc.push_back(static_cast<std::uint8_t>(colors[j]));
    std::sort(cc.begin(), cc.end());
    return CanonicalKey{encode_key('G', 0, m.size(), cc)};
  }
  auto body = min_canonization(be.candidates);
  return CanonicalKey{encode_key('G', m.rank(), m.size(), body)};
}

int memo_full_key_limit() { return 20; }

CanonicalKey memo_key(const BinaryMatroid& m, const std::vector<int>& colors) {
  if (m.size() <= memo_full_key_limit())
    return colors.empty() ? canonical_key(m) : canonical_key_colored(m, colors);
  return certificate_key(m, colors);
}

namespace {

// Cheap isomorphism invariants for fast rejection.
struct IsoInvariants {
  int n, rank, loop_count;
  std::vector<int> parallel_profile;  // sorted parallel-class sizes
  int triangle_count;
  std::vector<int> circuit_spectrum;  // counts of circuits of size 1..4

  bool operator==(const IsoInvariants& o) const {
    return n == o.n && rank == o.rank && loop_count == o.loop_count &&
           parallel_profile == o.parallel_profile &&
           triangle_count == o.triangle_count && circuit_spectrum == o.circuit_spectrum;
  }
};

IsoInvariants invariants_of(const BinaryMatroid& m) {
  IsoInvariants iv;
  iv.n = m.size();
  iv.rank = m.rank();
  iv.loop_count = static_cast<int>(m.loops().size());
  std::vector<std::uint64_t> cols;
  for (int j = 0; j < m.size(); j++)
    if (m.column(j) != 0) cols.push_back(m.column(j));
  std::sort(cols.begin(), cols.end());
  for (std::size_t i = 0; i < cols.size();) {
    std::size_t j = i;
    while (j < cols.size() && cols[j] == cols[i]) j++;
    iv.parallel_profile.push_back(static_cast<int>(j - i));
    i = j;
  }
  std::sort(iv.parallel_profile.begin(), iv.parallel_profile.end());
  auto masks = m.circuit_masks(4);
  iv.circuit_spectrum.assign(4, 0);
  iv.triangle_count = 0;
  for (auto v : masks) {
    int s = std::popcount(v);
    if (s >= 1 && s <= 4) iv.circuit_spectrum[s - 1]++;
    if (s == 3) iv.triangle_count++;
  }
  return iv;
}

}  // namespace

bool are_isomorphic(const BinaryMatroid& a, const BinaryMatroid& b) {
  if (!(invariants_of(a) == invariants_of(b))) return false;
  return canonical_key(a) == canonical_key(b);
}

bool are_isomorphic_colored(const BinaryMatroid& a, const std::vector<int>& ca,
                            const BinaryMatroid& b, const std::vector<int>& cb) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  return canonical_key_colored(a, ca) == canonical_key_colored(b, cb);
}

}  // namespace binmat
