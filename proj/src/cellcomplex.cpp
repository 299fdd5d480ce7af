#include "fintop/cellcomplex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fintop/error.hpp"
#include "fintop/recurrence.hpp"

namespace fintop {

namespace {

std::vector<IndexPair> resolve_faces(const std::vector<Cell>& cells,
                                     const std::vector<NamedPair>& faces) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (!index.emplace(cells[i].id, i).second)
      throw InputError("duplicate cell id '" + cells[i].id + "'");
  std::vector<IndexPair> out;
  out.reserve(faces.size());
  for (const auto& [face, cell] : faces) {
    auto f = index.find(face);
    auto c = index.find(cell);
    if (f == index.end()) throw InputError("unknown cell '" + face + "'");
    if (c == index.end()) throw InputError("unknown cell '" + cell + "'");
    out.emplace_back(f->second, c->second);
  }
  return out;
}

std::string join_labels(const std::vector<std::int64_t>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(labels[i]);
  }
  return out;
}

}  // namespace

CombinatorialComplex::CombinatorialComplex(std::vector<Cell> cells,
                                           const std::vector<NamedPair>& faces)
    : cells_(std::move(cells)), faces_(resolve_faces(cells_, faces)) {
  validate();
}

CombinatorialComplex::CombinatorialComplex(std::vector<Cell> cells, std::vector<IndexPair> faces)
    : cells_(std::move(cells)), faces_(std::move(faces)) {
  validate();
}

void CombinatorialComplex::validate() const {
  std::set<std::string> ids;
  for (const auto& c : cells_) {
    if (!ids.insert(c.id).second) throw InputError("duplicate cell id '" + c.id + "'");
    if (c.dim < 0) throw InputError("cell '" + c.id + "' has negative dimension");
    if (c.vertices && static_cast<int>(c.vertices->size()) != c.dim + 1)
      throw InputError("simplex '" + c.id + "' has the wrong number of vertices");
  }
  for (const auto& [face, cell] : faces_) {
    if (face >= cells_.size() || cell >= cells_.size())
      throw InputError("face relation refers to a missing cell");
    if (cells_[face].dim >= cells_[cell].dim)
      throw InputError("face '" + cells_[face].id + "' of '" + cells_[cell].id +
                       "' does not have smaller dimension");
  }
}

std::size_t CombinatorialComplex::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].id == id) return i;
  throw InputError("unknown cell '" + id + "'");
}

bool CombinatorialComplex::is_simplicial() const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [](const Cell& c) { return c.vertices.has_value(); });
}

int CombinatorialComplex::dimension() const {
  int d = -1;
  for (const auto& c : cells_) d = std::max(d, c.dim);
  return d;
}

CombinatorialComplex simplicial_from_maximal_faces(
    const std::vector<std::vector<std::int64_t>>& maximal) {
  std::set<std::vector<std::int64_t>> simplices;
  for (auto face : maximal) {
    std::sort(face.begin(), face.end());
    if (face.empty()) throw InputError("empty maximal face");
    if (std::adjacent_find(face.begin(), face.end()) != face.end())
      throw InputError("maximal face repeats a vertex");
    if (face.size() > 16) throw InputError("maximal face has more than 16 vertices");
    for (std::uint32_t mask = 1; mask < (1u << face.size()); ++mask) {
      std::vector<std::int64_t> sub;
      for (std::size_t i = 0; i < face.size(); ++i)
        if (mask >> i & 1u) sub.push_back(face[i]);
      simplices.insert(std::move(sub));
    }
  }
  std::vector<std::vector<std::int64_t>> ordered(simplices.begin(), simplices.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });

  std::vector<Cell> cells;
  std::map<std::vector<std::int64_t>, std::size_t> index;
  for (const auto& s : ordered) {
    index.emplace(s, cells.size());
    cells.push_back({join_labels(s), static_cast<int>(s.size()) - 1, s});
  }
  std::vector<IndexPair> faces;
  for (std::size_t c = 0; c < ordered.size(); ++c) {
    const auto& s = ordered[c];
    for (std::uint32_t mask = 1; mask + 1 < (1u << s.size()); ++mask) {
      std::vector<std::int64_t> sub;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (mask >> i & 1u) sub.push_back(s[i]);
      faces.emplace_back(index.at(sub), c);
    }
  }
  std::sort(faces.begin(), faces.end());
  return CombinatorialComplex(std::move(cells), std::move(faces));
}

FiniteSpace face_space(const CombinatorialComplex& k) {
  std::vector<std::string> names;
  for (const auto& c : k.cells()) names.push_back(c.id);
  return FiniteSpace::from_relation(std::move(names), k.faces());
}

PropCellReport verify_prop_cell(const CombinatorialComplex& k) {
  const auto space = face_space(k);
  const auto elements = abstract_elements(space);
  const auto q = quotient_space(space, elements.blocks);
  const auto& s = q.target;
  const auto ht = heights(s);

  PropCellReport report;
  report.complex.cells = s.names();
  report.complex.dim = ht;
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y)
      if (x != y && s.leq(x, y) && !s.leq(y, x)) report.complex.prec.emplace_back(x, y);

  report.singleton_elements = std::all_of(elements.blocks.blocks.begin(),
                                          elements.blocks.blocks.end(),
                                          [](const PointSet& b) { return b.count() == 1; });

  std::set<IndexPair> prec(report.complex.prec.begin(), report.complex.prec.end());
  bool axiom = true;
  for (const auto& [x, y] : prec) {
    if (ht[x] >= ht[y]) axiom = false;
    for (const auto& [y2, z] : prec)
      if (y2 == y && !prec.count({x, z})) axiom = false;
  }
  report.axiom_holds = axiom;

  if (k.is_simplicial()) {
    bool match = true;
    for (std::size_t c = 0; c < k.size(); ++c)
      if (ht[q.assignment[c]] != k.cells()[c].dim) match = false;
    report.heights_match_dims = match;
  }
  return report;
}

long euler_characteristic(const CombinatorialComplex& k) {
  long chi = 0;
  for (const auto& c : k.cells()) chi += (c.dim % 2 == 0) ? 1 : -1;
  return chi;
}

}  // namespace fintop
