#include "binmat/catalog.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>

#include "binmat/compose.hpp"

namespace binmat {

void Graph::add_vertex(const std::string& v) {
  if (!has_vertex(v)) vertices.push_back(v);
}

void Graph::add_edge(const std::string& u, const std::string& v, const ElementId& id) {
  if (!has_vertex(u) || !has_vertex(v))
    throw std::invalid_argument("edge endpoint is not a declared vertex");
  for (const auto& e : edges)
    if (e.id == id) throw std::invalid_argument("duplicate edge id: " + id.name);
  edges.push_back({u, v, id});
}

bool Graph::has_vertex(const std::string& v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

int Graph::degree(const std::string& v) const {
  int d = 0;
  for (const auto& e : edges) {
    if (e.u == v) d++;
    if (e.v == v) d++;
  }
  return d;
}

std::vector<ElementId> Graph::incident_edges(const std::string& v) const {
  std::vector<ElementId> out;
  for (const auto& e : edges)
    if (e.u == v || e.v == v) out.push_back(e.id);
  return out;
}

BinaryMatroid cycle_matroid(const Graph& g) {
  if (g.vertices.empty()) throw std::invalid_argument("empty graph");
  int nv = static_cast<int>(g.vertices.size());
  int ne = static_cast<int>(g.edges.size());
  GF2Matrix inc(nv, ne);
  auto vindex = [&](const std::string& v) {
    for (int i = 0; i < nv; i++)
      if (g.vertices[i] == v) return i;
    return -1;
  };
  std::vector<ElementId> labels;
  for (int j = 0; j < ne; j++) {
    const auto& e = g.edges[j];
    int a = vindex(e.u), b = vindex(e.v);
    if (a != b) {  // a graph loop becomes a zero column, i.e. a matroid loop
      inc.set(a, j, true);
      inc.set(b, j, true);
    }
    labels.push_back(e.id);
  }
  return BinaryMatroid(std::move(inc), std::move(labels));
}

BinaryMatroid bond_matroid(const Graph& g) { return cycle_matroid(g).dual(); }

Graph complete_graph(int n) {
  Graph g;
  for (int i = 0; i < n; i++) g.add_vertex("v" + std::to_string(i));
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++)
      g.add_edge(g.vertices[i], g.vertices[j],
                 "v" + std::to_string(i) + "v" + std::to_string(j));
  return g;
}

Graph wheel_graph(int n) {
  if (n < 3) throw std::invalid_argument("wheel needs at least 3 spokes");
  Graph g;
  g.add_vertex("h");
  for (int i = 0; i < n; i++) g.add_vertex("r" + std::to_string(i));
  for (int i = 0; i < n; i++) g.add_edge("h", "r" + std::to_string(i), "s" + std::to_string(i));
  for (int i = 0; i < n; i++)
    g.add_edge("r" + std::to_string(i), "r" + std::to_string((i + 1) % n),
               "c" + std::to_string(i));
  return g;
}

Graph prism_graph() {
  Graph g;
  for (int i = 0; i < 3; i++) g.add_vertex("u" + std::to_string(i));
  for (int i = 0; i < 3; i++) g.add_vertex("w" + std::to_string(i));
  for (int i = 0; i < 3; i++) {
    g.add_edge("u" + std::to_string(i), "u" + std::to_string((i + 1) % 3),
               "a" + std::to_string(i));
    g.add_edge("w" + std::to_string(i), "w" + std::to_string((i + 1) % 3),
               "b" + std::to_string(i));
    g.add_edge("u" + std::to_string(i), "w" + std::to_string(i), "m" + std::to_string(i));
  }
  return g;
}

Graph prism_plus_edge() {
  Graph g = prism_graph();
  g.add_edge("u0", "w1", "x");  // nonadjacent pair
  return g;
}

Graph cube_graph() {
  Graph g;
  for (int i = 0; i < 8; i++) g.add_vertex("v" + std::to_string(i));
  int k = 0;
  for (int i = 0; i < 8; i++)
    for (int j = i + 1; j < 8; j++)
      if (std::popcount(static_cast<unsigned>(i ^ j)) == 1)
        g.add_edge("v" + std::to_string(i), "v" + std::to_string(j),
                   "e" + std::to_string(k++));
  return g;
}

Graph wagner_graph() {
  // C8 plus the four long chords.
  Graph g;
  for (int i = 0; i < 8; i++) g.add_vertex("v" + std::to_string(i));
  for (int i = 0; i < 8; i++)
    g.add_edge("v" + std::to_string(i), "v" + std::to_string((i + 1) % 8),
               "c" + std::to_string(i));
  for (int i = 0; i < 4; i++)
    g.add_edge("v" + std::to_string(i), "v" + std::to_string(i + 4), "d" + std::to_string(i));
  return g;
}

Graph k5_minus_edge() {
  Graph g = complete_graph(5);
  // drop the last edge v3v4
  g.edges.erase(std::find_if(g.edges.begin(), g.edges.end(),
                             [](const Graph::Edge& e) { return e.id == ElementId("v3v4"); }));
  return g;
}

Graph k3n_variant(int n, int extra) {
  if (n < 1 || extra < 0 || extra > 3)
    throw std::invalid_argument("k3n_variant needs n >= 1 and extra in 0..3");
  Graph g;
  for (int i = 0; i < 3; i++) g.add_vertex("a" + std::to_string(i));
  for (int j = 0; j < n; j++) g.add_vertex("b" + std::to_string(j));
  for (int j = 0; j < n; j++)
    for (int i = 0; i < 3; i++)
      g.add_edge("a" + std::to_string(i), "b" + std::to_string(j),
                 "a" + std::to_string(i) + "b" + std::to_string(j));
  static const char* extra_edges[3][2] = {{"a0", "a1"}, {"a1", "a2"}, {"a0", "a2"}};
  for (int t = 0; t < extra; t++)
    g.add_edge(extra_edges[t][0], extra_edges[t][1], std::string("t") + std::to_string(t));
  return g;
}

BinaryMatroid spike(const SpikeSpec& spec) { return spike(spec.variant, spec.r); }

BinaryMatroid spike(SpikeVariant variant, int r) {
  if (r < 3) throw std::invalid_argument("spike needs rank >= 3");
  // legs y_i = all-ones-except-i, tip t = all-ones
  GF2Matrix d(r, r + 1);
  for (int i = 0; i < r; i++) {
    for (int j = 0; j < r; j++)
      if (i != j) d.set(i, j, true);
    d.set(i, r, true);
  }
  std::vector<ElementId> basis, cobasis;
  for (int i = 1; i <= r; i++) basis.push_back("x" + std::to_string(i));
  for (int i = 1; i <= r; i++) cobasis.push_back("y" + std::to_string(i));
  cobasis.push_back("t");
  BinaryMatroid z = BinaryMatroid::from_reduced(d, basis, cobasis);
  switch (variant) {
    case SpikeVariant::Z:
      return z;
    case SpikeVariant::Z_dual:
      return z.dual();
    case SpikeVariant::Z_minus_y:
      return z.delete_elements({ElementId("y" + std::to_string(r))});
    case SpikeVariant::Z_minus_t:
      return z.delete_elements({ElementId("t")});
  }
  throw std::logic_error("unreachable");
}

std::string spike_name(const SpikeSpec& spec) {
  std::string base = "Z" + std::to_string(spec.r);
  switch (spec.variant) {
    case SpikeVariant::Z: return base;
    case SpikeVariant::Z_dual: return base + "*";
    case SpikeVariant::Z_minus_y: return base + "\\y" + std::to_string(spec.r);
    case SpikeVariant::Z_minus_t: return base + "\\t";
  }
  return base;
}

ElementSet first_triangle(const BinaryMatroid& m) {
  SubsetFamily tri = m.triangles();
  if (tri.sets.empty()) throw std::invalid_argument("matroid has no triangle");
  return tri.sets.front();
}

BinaryMatroid k4_prime(int designated, ElementSet* base_triangle) {
  if (designated < 0 || designated > 2)
    throw std::invalid_argument("designated element must be 0, 1 or 2");
  Graph k4 = complete_graph(4);
  BinaryMatroid m = cycle_matroid(k4);
  // base triangle: the face v0v1, v1v2, v0v2
  ElementSet tri = {"v0v1", "v1v2", "v0v2"};
  if (base_triangle) *base_triangle = tri;
  // add a column parallel to the designated triangle element
  int idx = m.index_of(tri[designated]);
  GF2Matrix rep(m.rank(), m.size() + 1);
  for (int i = 0; i < m.rank(); i++)
    for (int j = 0; j < m.size(); j++)
      if (m.rep().get(i, j)) rep.set(i, j, true);
  for (int i = 0; i < m.rank(); i++)
    if (m.rep().get(i, idx)) rep.set(i, m.size(), true);
  std::vector<ElementId> labels = m.elements();
  labels.push_back("p" + std::to_string(designated));
  return BinaryMatroid(std::move(rep), std::move(labels));
}

BinaryMatroid k4_double_prime(int first, int second, ElementSet* base_triangle) {
  if (first == second) throw std::invalid_argument("the two designated elements must differ");
  ElementSet tri;
  BinaryMatroid m = k4_prime(first, &tri);
  int idx = m.index_of(tri[second]);
  GF2Matrix rep(m.rank(), m.size() + 1);
  for (int i = 0; i < m.rank(); i++)
    for (int j = 0; j < m.size(); j++)
      if (m.rep().get(i, j)) rep.set(i, j, true);
  for (int i = 0; i < m.rank(); i++)
    if (m.rep().get(i, idx)) rep.set(i, m.size(), true);
  std::vector<ElementId> labels = m.elements();
  labels.push_back("p" + std::to_string(second));
  if (base_triangle) *base_triangle = tri;
  return BinaryMatroid(std::move(rep), std::move(labels));
}

RootedPatternSeed k4_prime_pattern() {
  ElementSet base;
  BinaryMatroid target = k4_prime(0, &base);
  // deleting the copy leaves K4, so the copy replaces base[0] in the root
  return {target, {ElementId("p0"), base[1], base[2]}};
}

RootedPatternSeed k4_double_prime_pattern() {
  ElementSet base;
  BinaryMatroid target = k4_double_prime(0, 1, &base);
  return {target, {ElementId("p0"), ElementId("p1"), base[2]}};
}

namespace {

// The reduced standard representations printed in the paper, transcribed
// once. test_catalog checksums these strings; any edit fails the build's
// tests.
const std::map<std::string, std::vector<std::string>>& section2_matrices() {
  static const std::map<std::string, std::vector<std::string>> m = {
      {"X10", {"1110", "1101", "1011", "0011", "0101", "1001"}},
      {"X11", {"1110", "1101", "1011", "0011", "0101", "0110", "1001"}},
      {"X11p", {"1110", "1101", "1011", "0011", "0101", "0111", "1001"}},
      {"Y11", {"11100", "11010", "10110", "00111", "01011", "10011"}},
      {"X12", {"1110", "1101", "1011", "0011", "0101", "0110", "0111", "1001"}},
      {"X12p", {"1110", "1101", "1011", "0011", "0101", "0111", "1001", "1111"}},
      {"Y12", {"11100", "11010", "10110", "00111", "01011", "01101", "10011"}},
      {"X13", {"1110", "1101", "1011", "0011", "0101", "0110", "0111", "1001", "1010"}},
      {"Y13", {"11100", "11010", "10110", "00111", "01011", "01101", "01110", "10011"}},
      {"X14",
       {"1110", "1101", "1011", "0011", "0101", "0110", "0111", "1001", "1010", "1100"}},
      {"Y14",
       {"11100", "11010", "10110", "00111", "01011", "01101", "01110", "10011", "10101"}},
      {"X15",
       {"1110", "1101", "1011", "0011", "0101", "0110", "0111", "1001", "1010", "1100",
        "1111"}},
      {"Y15",
       {"11100", "11010", "10110", "00111", "01011", "01101", "01110", "10011", "10101",
        "11001"}},
      {"Y16",
       {"11100", "11010", "10110", "00111", "01011", "01101", "01110", "10011", "10101",
        "11001", "11111"}},
  };
  return m;
}

BinaryMatroid build_named(const std::string& name) {
  const auto& s2 = section2_matrices();
  if (auto it = s2.find(name); it != s2.end())
    return BinaryMatroid::from_reduced_strings(it->second);

  if (name == "F7")
    return BinaryMatroid::from_reduced_strings({"1101", "1011", "0111"});
  if (name == "F7d") return named("F7").dual();
  if (name == "MK4") return cycle_matroid(complete_graph(4));
  if (name == "W3") return cycle_matroid(wheel_graph(3));
  if (name == "W4") return cycle_matroid(wheel_graph(4));
  if (name == "W5") return cycle_matroid(wheel_graph(5));
  if (name == "W6") return cycle_matroid(wheel_graph(6));
  if (name == "Prism") return cycle_matroid(prism_graph());
  if (name == "MK33") return cycle_matroid(k3n_variant(3, 0));
  if (name == "MK33d") return bond_matroid(k3n_variant(3, 0));
  if (name == "MK5e") return cycle_matroid(k5_minus_edge());
  if (name == "MK5") return cycle_matroid(complete_graph(5));
  if (name == "MK5d") return bond_matroid(complete_graph(5));

  if (name == "R10") {
    // the ten weight-3 columns of length 5
    GF2Matrix m(5, 10);
    int col = 0;
    for (int a = 0; a < 5; a++)
      for (int b = a + 1; b < 5; b++)
        for (int c = b + 1; c < 5; c++) {
          m.set(a, col, true);
          m.set(b, col, true);
          m.set(c, col, true);
          col++;
        }
    std::vector<ElementId> labels;
    for (int j = 0; j < 10; j++) labels.push_back("e" + std::to_string(j));
    return BinaryMatroid(std::move(m), std::move(labels));
  }

  if (name == "PG32d") {
    // dual of all 15 nonzero length-4 columns
    GF2Matrix m(4, 15);
    for (int v = 1; v <= 15; v++)
      for (int i = 0; i < 4; i++)
        if (v & (1 << i)) m.set(i, v - 1, true);
    std::vector<ElementId> labels;
    for (int j = 0; j < 15; j++) labels.push_back("e" + std::to_string(j));
    return BinaryMatroid(GF2Matrix(m), std::move(labels)).dual();
  }

  if (name.size() >= 2 && name[0] == 'Z') {
    // Z4..Z7 and variants Z4d, Z4y, Z4t
    std::size_t digits = 1;
    while (digits < name.size() && isdigit(name[digits])) digits++;
    int r = std::stoi(name.substr(1, digits - 1));
    std::string suffix = name.substr(digits);
    SpikeVariant v;
    if (suffix.empty())
      v = SpikeVariant::Z;
    else if (suffix == "d")
      v = SpikeVariant::Z_dual;
    else if (suffix == "y")
      v = SpikeVariant::Z_minus_y;
    else if (suffix == "t")
      v = SpikeVariant::Z_minus_t;
    else
      throw std::invalid_argument("unknown catalog name: " + name);
    return spike(v, r);
  }

  if (name == "S8") return spike(SpikeVariant::Z_minus_y, 4);
  if (name == "AG32") return spike(SpikeVariant::Z_minus_t, 4);

  if (name == "P9d") {
    // the 3-sum of F7 and M(W4)
    const BinaryMatroid& f7 = named("F7");
    const BinaryMatroid& w4 = named("W4");
    return three_sum(TriangleGlue{f7, w4, first_triangle(f7), first_triangle(w4)});
  }
  if (name == "P9") return named("P9d").dual();

  if (name == "K4p") return k4_prime(0);
  if (name == "K4pp") return k4_double_prime(0, 1);

  throw std::invalid_argument("unknown catalog name: " + name);
}

const std::map<std::string, std::string>& alias_map() {
  static const std::map<std::string, std::string> m = {
      {"F7*", "F7d"},         {"P9*", "P9d"},
      {"Z4*", "Z4d"},         {"Z5*", "Z5d"},
      {"Z6*", "Z6d"},         {"Z7*", "Z7d"},
      {"X11'", "X11p"},       {"X12'", "X12p"},
      {"PG32-dual", "PG32d"}, {"PG(3,2)*", "PG32d"},
      {"M(K4)", "MK4"},       {"M(K3,3)", "MK33"},
      {"M*(K3,3)", "MK33d"},  {"M(K5\\e)", "MK5e"},
      {"M(K5)", "MK5"},       {"M*(K5)", "MK5d"},
      {"K4'", "K4p"},         {"K4''", "K4pp"},
      {"Z4\\y4", "Z4y"},      {"Z4\\t", "Z4t"},
  };
  return m;
}

const std::vector<std::string>& primary_names() {
  static const std::vector<std::string> names = {
      "AG32", "F7",   "F7d",  "K4p",  "K4pp", "MK33", "MK33d", "MK4",  "MK5",
      "MK5d", "MK5e", "P9",   "P9d",  "PG32d", "Prism", "R10",  "S8",   "W3",
      "W4",   "W5",   "W6",   "X10",  "X11",  "X11p", "X12",   "X12p", "X13",
      "X14",  "X15",  "Y11",  "Y12",  "Y13",  "Y14",  "Y15",   "Y16",  "Z4",
      "Z4d",  "Z4t",  "Z4y",  "Z5",   "Z5d",  "Z5t",  "Z5y",   "Z6",   "Z6d",
      "Z6t",  "Z6y",  "Z7",   "Z7d",  "Z7t",  "Z7y",
  };
  return names;
}

}  // namespace

const BinaryMatroid& named(const std::string& name) {
  static std::map<std::string, BinaryMatroid> cache;
  static std::recursive_mutex mu;  // builders may recurse (P9 needs F7, W4)
  std::string key = name;
  if (auto it = alias_map().find(name); it != alias_map().end()) key = it->second;
  std::lock_guard<std::recursive_mutex> lock(mu);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  BinaryMatroid m = build_named(key);
  auto [it, ok] = cache.emplace(key, std::move(m));
  return it->second;
}

bool is_named(const std::string& name) {
  std::string key = name;
  if (auto it = alias_map().find(name); it != alias_map().end()) key = it->second;
  const auto& names = primary_names();
  return std::find(names.begin(), names.end(), key) != names.end();
}

std::vector<std::string> catalog_names() { return primary_names(); }

const std::vector<std::string>& y16_family_names() {
  static const std::vector<std::string> names = {
      "F7",  "F7d", "X10", "X11", "X11p", "Y11", "X12", "X12p",
      "Y12", "X13", "Y13", "X14", "Y14",  "X15", "Y15", "Y16",
  };
  return names;
}

}  // namespace binmat
