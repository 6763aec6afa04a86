#include "binmat/enumerate.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "binmat/connectivity.hpp"
#include "binmat/minor.hpp"

namespace binmat {

bool SearchFilters::test(const BinaryMatroid& m) const {
  if (max_size && m.size() > *max_size) return false;
  if (simple_only && !m.is_simple()) return false;
  if (three_connected && !is_three_connected(m)) return false;
  if (internally_4c && !is_internally_4_connected(m)) return false;
  if (forbidden_minor && has_minor(m, *forbidden_minor)) return false;
  return true;
}

std::string SearchFilters::describe() const {
  std::vector<std::string> parts;
  if (three_connected) parts.push_back("3connected");
  if (simple_only) parts.push_back("simple");
  if (internally_4c) parts.push_back("i4c");
  if (forbidden_minor)
    parts.push_back("forbid(" + std::to_string(forbidden_minor->size()) + "elt)");
  if (max_size) parts.push_back("maxsize=" + std::to_string(*max_size));
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ",";
    out += p;
  }
  return out.empty() ? "none" : out;
}

namespace {

ElementId fresh_label(const BinaryMatroid& m) {
  int k = m.size();
  while (true) {
    ElementId cand("g" + std::to_string(k));
    if (!m.has_element(cand)) return cand;
    k++;
  }
}

BinaryMatroid extend_by_column(const BinaryMatroid& m, std::uint64_t v) {
  int r = m.rank(), n = m.size();
  GF2Matrix rep(r, n + 1);
  for (int i = 0; i < r; i++)
    for (int j = 0; j < n; j++)
      if (m.rep().get(i, j)) rep.set(i, j, true);
  for (int i = 0; i < r; i++)
    if (v & (1ull << i)) rep.set(i, n, true);
  std::vector<ElementId> labels = m.elements();
  labels.push_back(fresh_label(m));
  return BinaryMatroid(std::move(rep), std::move(labels));
}

std::string column_bits(std::uint64_t v, int r) {
  std::string s;
  for (int i = 0; i < r; i++) s += (v >> i) & 1 ? '1' : '0';
  return s;
}

std::uint64_t parse_bits(const std::string& s) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < s.size(); i++)
    if (s[i] == '1') v |= 1ull << i;
  return v;
}

struct Candidate {
  BinaryMatroid m;
  CanonicalKey key;
  std::string op;
};

// All filter-surviving single-column extensions, one per isomorphism class.
// Columns run in Gray-code order; with the `simple` filter on, parallel
// duplicates are pre-filtered before the expensive predicates.
std::vector<Candidate> extension_candidates(const BinaryMatroid& m, const SearchFilters& f,
                                            bool coext) {
  const BinaryMatroid& base = coext ? m.dual() : m;
  int r = base.rank();
  std::set<std::uint64_t> existing(base.columns().begin(), base.columns().end());
  std::vector<Candidate> out;
  std::set<CanonicalKey> seen;
  std::uint64_t count = r >= 63 ? 0 : (1ull << r);
  for (std::uint64_t i = 0; i < count; i++) {
    std::uint64_t v = i ^ (i >> 1);  // Gray order
    // parallel pre-filter: only sound in the extension direction, where a
    // duplicate column is a parallel pair of the candidate itself
    if (!coext && f.simple_only && (v == 0 || existing.count(v))) continue;
    BinaryMatroid ext = extend_by_column(base, v);
    BinaryMatroid cand = coext ? ext.dual() : ext;
    if (!f.test(cand)) continue;
    CanonicalKey k = canonical_key(cand);
    if (!seen.insert(k).second) continue;
    out.push_back({cand, k, (coext ? "c:" : "e:") + column_bits(v, r)});
  }
  std::sort(out.begin(), out.end(),
            [](const Candidate& a, const Candidate& b) { return a.key < b.key; });
  return out;
}

}  // namespace

std::vector<BinaryMatroid> extensions(const BinaryMatroid& m, const SearchFilters& f) {
  std::vector<BinaryMatroid> out;
  for (auto& c : extension_candidates(m, f, false)) out.push_back(std::move(c.m));
  return out;
}

std::vector<BinaryMatroid> coextensions(const BinaryMatroid& m, const SearchFilters& f) {
  std::vector<BinaryMatroid> out;
  for (auto& c : extension_candidates(m, f, true)) out.push_back(std::move(c.m));
  return out;
}

ClosureReport closure_search(const std::vector<BinaryMatroid>& seeds,
                             const std::vector<std::string>& seed_names,
                             const SearchFilters& filters, int max_steps) {
  if (seeds.size() != seed_names.size())
    throw std::invalid_argument("seed name count mismatch");
  ClosureReport report;
  report.filters_description = filters.describe();

  std::set<CanonicalKey> known;
  struct Frontier {
    BinaryMatroid m;
    std::string path;
  };
  std::vector<Frontier> frontier;
  for (std::size_t i = 0; i < seeds.size(); i++) {
    if (!filters.test(seeds[i]))
      throw std::invalid_argument("seed does not satisfy the filters: " + seed_names[i]);
    CanonicalKey k = canonical_key(seeds[i]);
    report.seed_keys.push_back(k);
    report.seed_names.push_back(seed_names[i]);
    if (known.insert(k).second) frontier.push_back({seeds[i], seed_names[i]});
  }

  for (int step = 1; step <= max_steps; step++) {
    std::vector<Frontier> next;
    for (const auto& fr : frontier) {
      for (bool coext : {false, true}) {
        for (auto& cand : extension_candidates(fr.m, filters, coext)) {
          if (!known.insert(cand.key).second) continue;
          ClosureEntry entry;
          entry.matroid = cand.m;
          entry.size = cand.m.size();
          entry.rank = cand.m.rank();
          entry.step = step;
          entry.path = fr.path + " " + cand.op;
          report.found.emplace(cand.key, entry);
          next.push_back({cand.m, entry.path});
        }
      }
    }
    report.steps_executed = step;
    if (next.empty()) {
      report.reached_fixpoint = true;
      break;
    }
    frontier = std::move(next);
  }
  if (max_steps == 0) report.steps_executed = 0;
  return report;
}

BinaryMatroid replay_path(const BinaryMatroid& seed, const std::string& path) {
  std::istringstream in(path);
  std::string tok;
  BinaryMatroid cur = seed;
  bool first = true;
  while (in >> tok) {
    if (first) {  // leading seed name
      first = false;
      if (tok.rfind("e:", 0) != 0 && tok.rfind("c:", 0) != 0) continue;
    }
    if (tok.rfind("e:", 0) == 0) {
      cur = extend_by_column(cur, parse_bits(tok.substr(2)));
    } else if (tok.rfind("c:", 0) == 0) {
      cur = extend_by_column(cur.dual(), parse_bits(tok.substr(2))).dual();
    } else {
      throw std::invalid_argument("bad path token: " + tok);
    }
  }
  return cur;
}

}  // namespace binmat
