#include <fstream>
#include <sstream>
#include <stdexcept>

#include "binmat/matroid.hpp"

namespace binmat {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

MatroidFile read_matrix_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::string> name;
  std::vector<ElementId> elements;
  bool have_elements = false;
  std::string kind;
  int r = -1, k = -1;
  std::vector<std::string> rows;

  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (kind.empty()) {
      if (t.rfind("name:", 0) == 0) {
        name = trim(t.substr(5));
        continue;
      }
      if (t.rfind("elements:", 0) == 0) {
        std::istringstream es(t.substr(9));
        std::string tok;
        while (es >> tok) elements.push_back(tok);
        have_elements = true;
        continue;
      }
      std::istringstream hs(t);
      if (!(hs >> kind >> r >> k) || (kind != "full" && kind != "reduced"))
        throw std::invalid_argument("expected 'full r n' or 'reduced r k' header");
      if (r < 0 || k < 0) throw std::invalid_argument("negative dimensions in header");
      continue;
    }
    rows.push_back(t);
    if (static_cast<int>(rows.size()) == r) break;
  }
  if (kind.empty()) throw std::invalid_argument("missing matrix header line");
  if (static_cast<int>(rows.size()) != r)
    throw std::invalid_argument("expected " + std::to_string(r) + " matrix rows");
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != k)
      throw std::invalid_argument("matrix row has wrong length");

  GF2Matrix m = GF2Matrix::from_strings(r == 0 ? std::vector<std::string>{} : rows);
  if (r == 0) m = GF2Matrix(0, k);

  MatroidFile out;
  out.name = name;
  if (kind == "full") {
    int n = k;
    if (!have_elements) {
      for (int j = 0; j < n; j++) elements.push_back("e" + std::to_string(j));
    }
    if (static_cast<int>(elements.size()) != n)
      throw std::invalid_argument("elements header has wrong count");
    out.matroid = BinaryMatroid(std::move(m), std::move(elements));
  } else {
    int n = r + k;
    if (!have_elements) {
      for (int j = 0; j < n; j++) elements.push_back("e" + std::to_string(j));
    }
    if (static_cast<int>(elements.size()) != n)
      throw std::invalid_argument("elements header has wrong count");
    std::vector<ElementId> basis(elements.begin(), elements.begin() + r);
    std::vector<ElementId> cobasis(elements.begin() + r, elements.end());
    out.matroid = BinaryMatroid::from_reduced(m, basis, cobasis);
  }
  return out;
}

std::string write_matrix_text(const BinaryMatroid& m,
                              const std::optional<std::string>& name) {
  std::ostringstream out;
  if (name) out << "name: " << *name << "\n";
  out << "elements:";
  for (const auto& e : m.elements()) out << " " << e.name;
  out << "\n";
  out << "full " << m.rank() << " " << m.size() << "\n";
  out << m.rep().to_string();
  return out.str();
}

MatroidFile load_matroid_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return read_matrix_text(buf.str());
}

}  // namespace binmat
