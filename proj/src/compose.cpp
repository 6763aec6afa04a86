#include "binmat/compose.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace binmat {

namespace {

ElementId fresh_right_label(const std::set<std::string>& taken, const ElementId& e) {
  std::string name = e.name;
  while (taken.count(name)) name += "'";
  return ElementId(name);
}

void check_triangle(const BinaryMatroid& m, const ElementSet& t, const char* side) {
  if (t.size() != 3) throw std::invalid_argument(std::string(side) + " set must have 3 elements");
  std::uint64_t mask = m.mask_of(t);
  std::uint64_t sum = 0;
  std::uint64_t q = mask;
  while (q) {
    int j = std::countr_zero(q);
    q &= q - 1;
    if (m.column(j) == 0)
      throw std::invalid_argument(std::string(side) + " set contains a loop");
    sum ^= m.column(j);
  }
  if (sum != 0 || m.rank_of_mask(mask) != 2)
    throw std::invalid_argument(std::string(side) + " set is not a triangle");
}

}  // namespace

ElementId composed_right_label(const BinaryMatroid& left, const BinaryMatroid& right,
                               const ElementId& e) {
  std::set<std::string> taken;
  for (const auto& l : left.elements()) taken.insert(l.name);
  // rebuild the same sequence of choices two_sum/pc make for the right side
  ElementId out = e;
  for (const auto& r : right.elements()) {
    ElementId fresh = fresh_right_label(taken, r);
    taken.insert(fresh.name);
    if (r == e) { out = fresh; break; }
  }
  return out;
}

BinaryMatroid direct_sum(const BinaryMatroid& m1, const BinaryMatroid& m2) {
  int r1 = m1.rank(), r2 = m2.rank();
  GF2Matrix rep(r1 + r2, m1.size() + m2.size());
  for (int i = 0; i < r1; i++)
    for (int j = 0; j < m1.size(); j++)
      if (m1.rep().get(i, j)) rep.set(i, j, true);
  for (int i = 0; i < r2; i++)
    for (int j = 0; j < m2.size(); j++)
      if (m2.rep().get(i, j)) rep.set(r1 + i, m1.size() + j, true);
  std::vector<ElementId> labels = m1.elements();
  std::set<std::string> taken;
  for (const auto& l : labels) taken.insert(l.name);
  for (const auto& r : m2.elements()) {
    ElementId fresh = fresh_right_label(taken, r);
    taken.insert(fresh.name);
    labels.push_back(fresh);
  }
  return BinaryMatroid(std::move(rep), std::move(labels));
}

BinaryMatroid two_sum(const BinaryMatroid& m1, const BinaryMatroid& m2,
                      const ElementId& p1, const ElementId& p2) {
  if (m1.size() < 3 || m2.size() < 3)
    throw std::invalid_argument("2-sum needs at least 3 elements on each side");
  int i1 = m1.index_of(p1), i2 = m2.index_of(p2);
  if (m1.column(i1) == 0 || m2.column(i2) == 0)
    throw std::invalid_argument("2-sum basepoint is a loop");
  auto is_coloop = [](const BinaryMatroid& m, int idx) {
    return m.rank_of_mask(m.full_mask() & ~(1ull << idx)) == m.rank() - 1;
  };
  if (is_coloop(m1, i1) || is_coloop(m2, i2))
    throw std::invalid_argument("2-sum basepoint is a coloop");

  // Row-reduce the right side (raw, outside BinaryMatroid's normalization)
  // so that p2's column becomes e_0.
  GF2Matrix a = m2.rep();
  {
    int piv = -1;
    for (int i = 0; i < a.rows(); i++)
      if (a.get(i, i2)) { piv = i; break; }
    a.swap_rows(0, piv);
    for (int i = 1; i < a.rows(); i++)
      if (a.get(i, i2)) a.xor_row_into(0, i);
  }
  int r1 = m1.rank(), r2 = m2.rank();
  std::uint64_t u = m1.column(i1);

  std::vector<ElementId> labels;
  std::set<std::string> taken;
  GF2Matrix rep(r1 + r2 - 1, m1.size() + m2.size() - 2);
  int col = 0;
  for (int j = 0; j < m1.size(); j++) {
    if (j == i1) continue;
    for (int i = 0; i < r1; i++)
      if (m1.column(j) & (1ull << i)) rep.set(i, col, true);
    labels.push_back(m1.label_of(j));
    taken.insert(m1.label_of(j).name);
    col++;
  }
  for (int j = 0; j < m2.size(); j++) {
    if (j == i2) continue;
    std::uint64_t y = a.column_word(j);
    if (y & 1) {  // component along the basepoint becomes the left column u
      for (int i = 0; i < r1; i++)
        if (u & (1ull << i)) rep.set(i, col, true);
    }
    for (int i = 1; i < r2; i++)
      if (y & (1ull << i)) rep.set(r1 + i - 1, col, true);
    ElementId fresh = fresh_right_label(taken, m2.label_of(j));
    taken.insert(fresh.name);
    labels.push_back(fresh);
    col++;
  }
  return BinaryMatroid(std::move(rep), std::move(labels));
}

BinaryMatroid parallel_connection_triangle(const TriangleGlue& g) {
  check_triangle(g.left, g.left_tri, "left");
  check_triangle(g.right, g.right_tri, "right");

  // Row-reduce the right side so its triangle becomes (e1, e2, e1+e2).
  int ia = g.right.index_of(g.right_tri[0]);
  int ib = g.right.index_of(g.right_tri[1]);
  GF2Matrix a = g.right.rep();
  int r2 = a.rows();
  // pivot a's column ia to e_0
  {
    int piv = -1;
    for (int i = 0; i < r2; i++)
      if (a.get(i, ia)) { piv = i; break; }
    a.swap_rows(0, piv);
    for (int i = 1; i < r2; i++)
      if (a.get(i, ia)) a.xor_row_into(0, i);
  }
  // pivot column ib to e_1 (ib is independent of ia, so a pivot exists below)
  {
    int piv = -1;
    for (int i = 1; i < r2; i++)
      if (a.get(i, ib)) { piv = i; break; }
    a.swap_rows(1, piv);
    for (int i = 0; i < r2; i++)
      if (i != 1 && a.get(i, ib)) a.xor_row_into(1, i);
  }

  int r1 = g.left.rank();
  std::uint64_t alpha = g.left.column(g.left.index_of(g.left_tri[0]));
  std::uint64_t beta = g.left.column(g.left.index_of(g.left_tri[1]));

  std::uint64_t right_t_mask = 0;
  for (const auto& e : g.right_tri) right_t_mask |= 1ull << g.right.index_of(e);

  std::vector<ElementId> labels;
  std::set<std::string> taken;
  for (const auto& l : g.left.elements()) taken.insert(l.name);

  GF2Matrix rep(r1 + r2 - 2, g.left.size() + g.right.size() - 3);
  int col = 0;
  for (int j = 0; j < g.left.size(); j++) {
    for (int i = 0; i < r1; i++)
      if (g.left.column(j) & (1ull << i)) rep.set(i, col, true);
    labels.push_back(g.left.label_of(j));
    col++;
  }
  for (int j = 0; j < g.right.size(); j++) {
    if (right_t_mask & (1ull << j)) continue;
    std::uint64_t y = a.column_word(j);
    std::uint64_t head = 0;
    if (y & 1) head ^= alpha;
    if (y & 2) head ^= beta;
    for (int i = 0; i < r1; i++)
      if (head & (1ull << i)) rep.set(i, col, true);
    for (int i = 2; i < r2; i++)
      if (y & (1ull << i)) rep.set(r1 + i - 2, col, true);
    ElementId fresh = fresh_right_label(taken, g.right.label_of(j));
    taken.insert(fresh.name);
    labels.push_back(fresh);
    col++;
  }
  BinaryMatroid out(std::move(rep), std::move(labels));
  if (out.rank() != r1 + r2 - 2)
    throw std::logic_error("parallel connection lost rank");
  return out;
}

BinaryMatroid three_sum(const TriangleGlue& g) {
  if (g.left.size() < 7 || g.right.size() < 7)
    throw std::invalid_argument("3-sum needs at least 7 elements on each side");
  BinaryMatroid pc = parallel_connection_triangle(g);
  return pc.delete_elements(g.left_tri);
}

SubsetFamily cocircuits_of_pc(const TriangleGlue& g) {
  check_triangle(g.left, g.left_tri, "left");
  check_triangle(g.right, g.right_tri, "right");

  // Label map of the right side in the composed matroid: triangle elements
  // take the paired left labels, the rest keep (possibly suffixed) names.
  std::map<std::string, ElementId> right_to_out;
  std::set<std::string> taken;
  for (const auto& l : g.left.elements()) taken.insert(l.name);
  for (int i = 0; i < 3; i++) right_to_out[g.right_tri[i].name] = g.left_tri[i];
  for (const auto& r : g.right.elements()) {
    bool in_t = false;
    for (const auto& t : g.right_tri)
      if (t == r) in_t = true;
    if (in_t) continue;
    ElementId fresh = fresh_right_label(taken, r);
    taken.insert(fresh.name);
    right_to_out[r.name] = fresh;
  }

  std::uint64_t lt_mask = g.left.mask_of(g.left_tri);
  std::uint64_t rt_mask = g.right.mask_of(g.right_tri);

  auto left_cocircuits = g.left.cocircuit_masks();
  auto right_cocircuits = g.right.cocircuit_masks();

  SubsetFamily out;
  // (i) one-side cocircuits avoiding T
  for (auto c : left_cocircuits)
    if ((c & lt_mask) == 0) out.sets.push_back(g.left.set_of(c));
  for (auto c : right_cocircuits)
    if ((c & rt_mask) == 0) {
      ElementSet s;
      for (const auto& e : g.right.set_of(c)) s.push_back(right_to_out.at(e.name));
      out.sets.push_back(s);
    }
  // (ii) unions agreeing on exactly two elements of T
  for (auto c1 : left_cocircuits) {
    if (std::popcount(c1 & lt_mask) != 2) continue;
    for (auto c2 : right_cocircuits) {
      if (std::popcount(c2 & rt_mask) != 2) continue;
      // the T-intersections must correspond under the pairing
      ElementSet t1 = g.left.set_of(c1 & lt_mask);
      ElementSet t2m;
      for (const auto& e : g.right.set_of(c2 & rt_mask)) t2m.push_back(right_to_out.at(e.name));
      std::sort(t1.begin(), t1.end());
      std::sort(t2m.begin(), t2m.end());
      if (t1 != t2m) continue;
      ElementSet s = g.left.set_of(c1);
      for (const auto& e : g.right.set_of(c2 & ~rt_mask)) s.push_back(right_to_out.at(e.name));
      out.sets.push_back(s);
    }
  }
  out.sort_normalize();
  return out;
}

Graph glue_graphs_matching(const Graph& g1, const std::string& u, const Graph& g2,
                           const std::string& v,
                           const std::array<std::pair<std::string, std::string>, 3>& pairing) {
  if (g1.degree(u) != 3 || g2.degree(v) != 3)
    throw std::invalid_argument("glued vertices must have degree 3");
  // validate the pairing covers the two neighbourhoods
  for (const auto& [a, b] : pairing) {
    bool founda = false, foundb = false;
    for (const auto& e : g1.edges)
      if ((e.u == u && e.v == a) || (e.v == u && e.u == a)) founda = true;
    for (const auto& e : g2.edges)
      if ((e.u == v && e.v == b) || (e.v == v && e.u == b)) foundb = true;
    if (!founda || !foundb)
      throw std::invalid_argument("pairing must match neighbours of the glued vertices");
  }

  Graph out;
  std::set<std::string> left_vertices;
  for (const auto& w : g1.vertices)
    if (w != u) {
      out.add_vertex(w);
      left_vertices.insert(w);
    }
  auto rename = [&](const std::string& w) {
    std::string name = w;
    while (left_vertices.count(name) || name == u) name += "'";
    return name;
  };
  for (const auto& w : g2.vertices)
    if (w != v) out.add_vertex(rename(w));

  std::set<std::string> used_ids;
  for (const auto& e : g1.edges) {
    if (e.u == u || e.v == u) continue;
    out.add_edge(e.u, e.v, e.id);
    used_ids.insert(e.id.name);
  }
  for (const auto& e : g2.edges) {
    if (e.u == v || e.v == v) continue;
    std::string id = e.id.name;
    while (used_ids.count(id)) id += "'";
    used_ids.insert(id);
    out.add_edge(rename(e.u), rename(e.v), id);
  }
  // the matching edges inherit the labels of the left star edges
  for (const auto& [a, b] : pairing) {
    ElementId label;
    for (const auto& e : g1.edges)
      if ((e.u == u && e.v == a) || (e.v == u && e.u == a)) label = e.id;
    out.add_edge(a, rename(b), label);
  }
  return out;
}

bool starfish_spec_valid(const StarfishSpec& s) {
  if (s.extra < 0 || s.extra > 3) return false;
  if (s.n < 2) return false;
  if (s.t < 1 || s.t > s.n) return false;
  if (s.n == 2 && s.extra < 2) return false;  // base must be 3-connected
  return true;
}

BinaryMatroid build_starfish(const StarfishSpec& spec) {
  if (!starfish_spec_valid(spec))
    throw std::invalid_argument("invalid starfish parameters");
  Graph base = k3n_variant(spec.n, spec.extra);
  BinaryMatroid m = bond_matroid(base);
  // Attachment triangles: vertex stars of the lexicographically first t
  // degree-3 vertices of the large colour class.
  for (int leg = 0; leg < spec.t; leg++) {
    ElementSet tri;
    for (const auto& e : base.incident_edges("b" + std::to_string(leg))) tri.push_back(e);
    // relabel a fresh Fano copy
    const BinaryMatroid& f7 = named("F7");
    std::vector<ElementId> labels;
    for (const auto& l : f7.elements())
      labels.push_back("f" + std::to_string(leg) + "." + l.name);
    BinaryMatroid fano(f7.rep(), labels);
    ElementSet ftri = first_triangle(fano);
    m = three_sum(TriangleGlue{m, fano, tri, ftri});
  }
  return m;
}

}  // namespace binmat
