#include "binmat/minor.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "binmat/canonical.hpp"
#include "binmat/catalog.hpp"
#include "binmat/connectivity.hpp"

namespace binmat {

namespace {

std::mutex memo_mutex;
std::unordered_map<std::string, bool> minor_memo;

bool memo_lookup(const std::string& key, bool& out) {
  std::lock_guard<std::mutex> lock(memo_mutex);
  auto it = minor_memo.find(key);
  if (it == minor_memo.end()) return false;
  out = it->second;
  return true;
}

void memo_store(const std::string& key, bool value) {
  std::lock_guard<std::mutex> lock(memo_mutex);
  minor_memo.emplace(key, value);
}

struct TargetInfo {
  const BinaryMatroid& t;
  CanonicalKey key;
  int n, r, corank;
  bool simple, cosimple;

  explicit TargetInfo(const BinaryMatroid& target)
      : t(target),
        key(canonical_key(target)),
        n(target.size()),
        r(target.rank()),
        corank(target.corank()),
        simple(target.is_simple()),
        cosimple(target.is_cosimple()) {}
};

// Series/parallel style reduction that cannot lose a minor of the given
// shape: loops go when the target is loopless, coloops are contracted when
// it has none, parallel classes collapse when it is simple, series classes
// when it is cosimple. Records the removals when sets are supplied.
BinaryMatroid reduce_for_target(BinaryMatroid m, const TargetInfo& ti,
                                ElementSet* deleted = nullptr,
                                ElementSet* contracted = nullptr) {
  bool changed = true;
  while (changed) {
    changed = false;
    auto lp = m.loops();
    if (!lp.empty()) {
      ElementSet s;
      for (int j : lp) s.push_back(m.label_of(j));
      if (deleted) deleted->insert(deleted->end(), s.begin(), s.end());
      m = m.delete_elements(s);
      changed = true;
      continue;
    }
    auto cl = m.coloops();
    if (!cl.empty()) {
      ElementSet s;
      for (int j : cl) s.push_back(m.label_of(j));
      if (contracted) contracted->insert(contracted->end(), s.begin(), s.end());
      m = m.contract_elements(s);
      changed = true;
      continue;
    }
    if (ti.simple && !m.is_simple()) {
      BinaryMatroid s = m.simplify();
      if (deleted) {
        std::set<std::string> kept;
        for (const auto& e : s.elements()) kept.insert(e.name);
        for (const auto& e : m.elements())
          if (!kept.count(e.name)) deleted->push_back(e);
      }
      m = std::move(s);
      changed = true;
      continue;
    }
    if (ti.cosimple && !m.is_cosimple()) {
      BinaryMatroid s = m.cosimplify();
      if (contracted) {
        std::set<std::string> kept;
        for (const auto& e : s.elements()) kept.insert(e.name);
        for (const auto& e : m.elements())
          if (!kept.count(e.name)) contracted->push_back(e);
      }
      m = std::move(s);
      changed = true;
      continue;
    }
  }
  return m;
}

bool window_ok(const BinaryMatroid& m, const TargetInfo& ti) {
  return m.size() >= ti.n && m.rank() >= ti.r && m.corank() >= ti.corank;
}

bool generic_search(const BinaryMatroid& m0, const TargetInfo& ti) {
  BinaryMatroid m = reduce_for_target(m0, ti);
  if (!window_ok(m, ti)) return false;
  if (m.size() == ti.n) return canonical_key(m) == ti.key;

  std::string key = "M|" + memo_key(m).bytes + "|" + ti.key.bytes;
  bool cached;
  if (memo_lookup(key, cached)) return cached;

  bool found = false;
  // contract-first when rank headroom exists, else delete-first
  bool contract_first = m.rank() > ti.r;
  for (int j = 0; j < m.size() && !found; j++) {
    std::uint64_t bit = 1ull << j;
    for (int pass = 0; pass < 2 && !found; pass++) {
      bool do_contract = (pass == 0) == contract_first;
      if (do_contract) {
        if (m.rank() > ti.r) found = generic_search(m.contract_mask(bit), ti);
      } else {
        if (m.corank() > ti.corank) found = generic_search(m.delete_mask(bit), ti);
      }
    }
  }
  memo_store(key, found);
  return found;
}

// Splitter-style chain search: explores only 3-connected minors, stepping
// one element at a time and re-normalizing series/parallel pairs (which also
// realizes the wheel-to-smaller-wheel steps). Sound and complete for
// 3-connected m and 3-connected target with >= 4 elements.
bool chain_search(const BinaryMatroid& m, const TargetInfo& ti) {
  if (!window_ok(m, ti)) return false;
  if (m.size() == ti.n) return canonical_key(m) == ti.key;

  std::string key = "C|" + memo_key(m).bytes + "|" + ti.key.bytes;
  bool cached;
  if (memo_lookup(key, cached)) return cached;

  bool found = false;
  for (int j = 0; j < m.size() && !found; j++) {
    std::uint64_t bit = 1ull << j;
    for (int pass = 0; pass < 2 && !found; pass++) {
      if (pass == 0 && m.rank() <= ti.r) continue;
      if (pass == 1 && m.corank() <= ti.corank) continue;
      BinaryMatroid child = pass == 0 ? m.contract_mask(bit) : m.delete_mask(bit);
      if (child.size() < ti.n) continue;
      if (is_three_connected(child)) {
        found = chain_search(child, ti);
        continue;
      }
      // normalize away series/parallel pairs; catches W_k -> W_{k-1}
      BinaryMatroid norm = reduce_for_target(child, ti);
      if (norm.size() < child.size() && norm.size() >= ti.n && window_ok(norm, ti) &&
          is_three_connected(norm))
        found = chain_search(norm, ti);
    }
  }
  memo_store(key, found);
  return found;
}

constexpr int kChainThreshold = 13;

bool use_chain(const BinaryMatroid& m, const BinaryMatroid& target) {
  if (m.size() <= kChainThreshold) return false;
  if (target.size() < 4) return false;
  if (!target.is_simple() || !target.is_cosimple()) return false;
  // both must be 3-connected for the chain theorem
  return is_three_connected(target) && is_three_connected(m);
}

}  // namespace

bool has_minor_generic(const BinaryMatroid& m, const BinaryMatroid& target) {
  TargetInfo ti(target);
  return generic_search(m, ti);
}

bool has_minor_chain(const BinaryMatroid& m, const BinaryMatroid& target) {
  TargetInfo ti(target);
  if (m.size() == ti.n) return canonical_key(m) == ti.key;
  return chain_search(m, ti);
}

bool has_minor(const BinaryMatroid& m, const BinaryMatroid& target) {
  if (target.size() > m.size() || target.rank() > m.rank() ||
      target.corank() > m.corank())
    return false;
  if (use_chain(m, target)) return has_minor_chain(m, target);
  return has_minor_generic(m, target);
}

BinaryMatroid replay_witness(const BinaryMatroid& m, const MinorWitness& w) {
  return m.delete_elements(w.deleted).contract_elements(w.contracted);
}

std::optional<MinorWitness> find_minor_witness(const BinaryMatroid& m,
                                               const BinaryMatroid& target) {
  if (!has_minor(m, target)) return std::nullopt;
  TargetInfo ti(target);
  MinorWitness w;
  BinaryMatroid cur = reduce_for_target(m, ti, &w.deleted, &w.contracted);
  // Greedy descent through the (now warm) decision procedure.
  while (cur.size() > ti.n) {
    bool stepped = false;
    for (int j = 0; j < cur.size() && !stepped; j++) {
      std::uint64_t bit = 1ull << j;
      if (cur.rank() > ti.r) {
        BinaryMatroid child = cur.contract_mask(bit);
        if (has_minor(child, target)) {
          w.contracted.push_back(cur.label_of(j));
          cur = reduce_for_target(child, ti, &w.deleted, &w.contracted);
          stepped = true;
          break;
        }
      }
      if (cur.corank() > ti.corank) {
        BinaryMatroid child = cur.delete_mask(bit);
        if (has_minor(child, target)) {
          w.deleted.push_back(cur.label_of(j));
          cur = reduce_for_target(child, ti, &w.deleted, &w.contracted);
          stepped = true;
        }
      }
    }
    if (!stepped) throw std::logic_error("witness descent got stuck");
  }
  return w;
}

std::vector<BinaryMatroid> three_connected_minors(const BinaryMatroid& m, int min_size) {
  if (!is_three_connected(m))
    throw std::invalid_argument("three_connected_minors needs a 3-connected input");
  std::vector<BinaryMatroid> out;
  std::set<std::string> seen;
  std::vector<BinaryMatroid> stack;
  auto push = [&](const BinaryMatroid& x) {
    std::string k = memo_key(x).bytes;
    if (seen.insert(k).second) {
      out.push_back(x);
      stack.push_back(x);
    }
  };
  push(m);
  while (!stack.empty()) {
    BinaryMatroid cur = stack.back();
    stack.pop_back();
    if (cur.size() <= min_size) continue;
    for (int j = 0; j < cur.size(); j++) {
      std::uint64_t bit = 1ull << j;
      for (int pass = 0; pass < 2; pass++) {
        BinaryMatroid child = pass == 0 ? cur.contract_mask(bit) : cur.delete_mask(bit);
        if (child.size() < min_size) continue;
        if (is_three_connected(child)) {
          push(child);
          continue;
        }
        // series/parallel normalization (wheel steps included)
        BinaryMatroid red = child;
        bool changed = true;
        while (changed) {
          changed = false;
          BinaryMatroid s = red.simplify();
          if (s.size() < red.size()) { red = s; changed = true; }
          BinaryMatroid c = red.cosimplify();
          if (c.size() < red.size()) { red = c; changed = true; }
        }
        if (red.size() >= min_size && red.size() < child.size() && is_three_connected(red))
          push(red);
      }
    }
  }
  return out;
}

bool is_regular(const BinaryMatroid& m) {
  return !has_minor(m, named("F7")) && !has_minor(m, named("F7d"));
}

bool is_graphic(const BinaryMatroid& m) {
  if (!is_regular(m)) return false;
  return !has_minor(m, named("MK5d")) && !has_minor(m, named("MK33d"));
}

bool is_cographic(const BinaryMatroid& m) { return is_graphic(m.dual()); }

void clear_minor_memo() {
  std::lock_guard<std::mutex> lock(memo_mutex);
  minor_memo.clear();
}

// -- rooted search ---------------------------------------------------------

namespace {

struct RootedTargetInfo {
  const BinaryMatroid& t;
  CanonicalKey key;  // colored: root triangle = color 1
  int n, r, corank;

  RootedTargetInfo(const BinaryMatroid& target, const ElementSet& root)
      : t(target), n(target.size()), r(target.rank()), corank(target.corank()) {
    std::vector<int> colors(target.size(), 0);
    for (const auto& e : root) colors[target.index_of(e)] = 1;
    key = canonical_key_colored(target, colors);
  }
};

bool rooted_search(const BinaryMatroid& m, std::uint64_t tmask, const RootedTargetInfo& ti) {
  // prune: the root triangle must stay a triangle (no loops in it, no two
  // equal columns; the sum dependency is preserved by every minor op)
  {
    std::uint64_t q = tmask;
    std::uint64_t cols[3];
    int k = 0;
    while (q) {
      int j = std::countr_zero(q);
      q &= q - 1;
      cols[k++] = m.column(j);
    }
    if (cols[0] == 0 || cols[1] == 0 || cols[2] == 0) return false;
    if (cols[0] == cols[1] || cols[0] == cols[2] || cols[1] == cols[2]) return false;
  }
  if (m.size() < ti.n || m.rank() < ti.r || m.corank() < ti.corank) return false;
  if (m.size() == ti.n) {
    std::vector<int> colors(m.size(), 0);
    std::uint64_t q = tmask;
    while (q) {
      int j = std::countr_zero(q);
      q &= q - 1;
      colors[j] = 1;
    }
    return canonical_key_colored(m, colors) == ti.key;
  }

  std::vector<int> colors(m.size(), 0);
  {
    std::uint64_t q = tmask;
    while (q) {
      int j = std::countr_zero(q);
      q &= q - 1;
      colors[j] = 1;
    }
  }
  std::string key = "R|" + memo_key(m, colors).bytes + "|" + ti.key.bytes;
  bool cached;
  if (memo_lookup(key, cached)) return cached;

  bool found = false;
  for (int j = 0; j < m.size() && !found; j++) {
    std::uint64_t bit = 1ull << j;
    if (tmask & bit) continue;  // never remove the root
    ElementId lbl = m.label_of(j);
    ElementSet troot = m.set_of(tmask);
    if (m.rank() > ti.r) {
      BinaryMatroid child = m.contract_mask(bit);
      found = rooted_search(child, child.mask_of(troot), ti);
    }
    if (!found && m.corank() > ti.corank) {
      BinaryMatroid child = m.delete_mask(bit);
      found = rooted_search(child, child.mask_of(troot), ti);
    }
  }
  memo_store(key, found);
  return found;
}

}  // namespace

bool has_rooted_minor(const BinaryMatroid& m, const ElementSet& t,
                      const RootedPattern& pattern) {
  auto check_triangle = [](const BinaryMatroid& mm, const ElementSet& tt, const char* who) {
    if (tt.size() != 3) throw std::invalid_argument(std::string(who) + " must have 3 elements");
    std::uint64_t mask = mm.mask_of(tt);
    std::uint64_t sum = 0;
    std::uint64_t q = mask;
    while (q) {
      int j = std::countr_zero(q);
      q &= q - 1;
      if (mm.column(j) == 0) throw std::invalid_argument(std::string(who) + " contains a loop");
      sum ^= mm.column(j);
    }
    if (sum != 0 || mm.rank_of_mask(mask) != 2)
      throw std::invalid_argument(std::string(who) + " is not a triangle");
  };
  check_triangle(m, t, "rooted set");
  check_triangle(pattern.target, pattern.root_triangle, "pattern root");
  RootedTargetInfo ti(pattern.target, pattern.root_triangle);
  return rooted_search(m, m.mask_of(t), ti);
}

}  // namespace binmat
