#include "fintop/reeb.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

#include "fintop/error.hpp"

namespace fintop {

namespace {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::size_t> parent_;
};

IndexPair sorted_pair(std::size_t a, std::size_t b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

ScalarField ScalarField::from_triangles(std::size_t vertex_count,
                                        const std::vector<std::array<std::size_t, 3>>& triangles,
                                        std::vector<double> values,
                                        const std::vector<IndexPair>& extra_edges) {
  if (values.size() != vertex_count)
    throw InputError("expected " + std::to_string(vertex_count) + " values, got " +
                     std::to_string(values.size()));
  for (double v : values)
    if (!std::isfinite(v)) throw InputError("vertex values must be finite");

  ScalarField f;
  f.values_ = std::move(values);
  std::set<std::array<std::size_t, 3>> seen;
  std::vector<IndexPair> edges;
  for (auto t : triangles) {
    for (auto v : t)
      if (v >= vertex_count) throw InputError("triangle refers to a missing vertex");
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) throw InputError("triangle repeats a vertex");
    if (!seen.insert(t).second) throw InputError("duplicate triangle");
    f.triangles_.push_back(t);
    edges.emplace_back(t[0], t[1]);
    edges.emplace_back(t[0], t[2]);
    edges.emplace_back(t[1], t[2]);
  }
  for (const auto& [a, b] : extra_edges) {
    if (a >= vertex_count || b >= vertex_count) throw InputError("edge refers to a missing vertex");
    if (a == b) throw InputError("edge repeats a vertex");
    edges.push_back(sorted_pair(a, b));
  }
  f.build(std::move(edges));
  return f;
}

ScalarField ScalarField::from_complex(const CombinatorialComplex& k, std::vector<double> values) {
  if (!k.is_simplicial()) throw InputError("scalar fields need a simplicial complex");
  if (k.dimension() > 2) throw InputError("scalar fields need dimension at most 2");
  std::map<std::int64_t, std::size_t> vertex;
  for (const auto& c : k.cells())
    if (c.dim == 0) vertex.emplace(c.vertices->front(), vertex.size());
  std::vector<std::array<std::size_t, 3>> triangles;
  std::vector<IndexPair> edges;
  for (const auto& c : k.cells()) {
    const auto& vs = *c.vertices;
    auto at = [&](std::size_t i) {
      auto it = vertex.find(vs[i]);
      if (it == vertex.end()) throw InputError("simplex '" + c.id + "' has a vertex with no 0-cell");
      return it->second;
    };
    if (c.dim == 1) edges.push_back(sorted_pair(at(0), at(1)));
    if (c.dim == 2) triangles.push_back({at(0), at(1), at(2)});
  }
  return from_triangles(vertex.size(), triangles, std::move(values), edges);
}

ScalarField ScalarField::with_values(std::vector<double> values) const {
  if (values.size() != vertex_count()) throw InputError("value count does not match the mesh");
  return from_triangles(vertex_count(), triangles_, std::move(values), edges_);
}

void ScalarField::build(std::vector<IndexPair> edges) {
  const auto n = values_.size();
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0);
  std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
    return values_[a] != values_[b] ? values_[a] < values_[b] : a < b;
  });
  rank_.resize(n);
  for (std::size_t r = 0; r < n; ++r) rank_[order_[r]] = r;

  for (auto& [a, b] : edges)
    if (rank_[a] > rank_[b]) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  std::map<IndexPair, std::size_t> index;
  vertex_edges_.assign(n, {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    index.emplace(sorted_pair(edges_[e].first, edges_[e].second), e);
    vertex_edges_[edges_[e].first].push_back(e);
    vertex_edges_[edges_[e].second].push_back(e);
  }
  edge_tris_.assign(edges_.size(), {});
  tri_edges_.clear();
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const auto& v = triangles_[t];
    std::array<std::size_t, 3> te{index.at({v[0], v[1]}), index.at({v[0], v[2]}),
                                  index.at({v[1], v[2]})};
    for (auto e : te) edge_tris_[e].push_back(t);
    tri_edges_.push_back(te);
  }
}

std::vector<std::vector<IndexPair>> level_components(const ScalarField& field, double t) {
  for (double v : field.values())
    if (v == t) throw InputError("level " + std::to_string(t) + " is a vertex value");
  const auto& edges = field.edges();
  std::vector<bool> crossing(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e)
    crossing[e] = field.value(edges[e].first) < t && t < field.value(edges[e].second);

  UnionFind uf(edges.size());
  for (const auto& te : field.triangle_edges()) {
    std::vector<std::size_t> hit;
    for (auto e : te)
      if (crossing[e]) hit.push_back(e);
    for (std::size_t i = 1; i < hit.size(); ++i) uf.unite(hit[0], hit[i]);
  }
  std::map<std::size_t, std::vector<IndexPair>> groups;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (crossing[e]) groups[uf.find(e)].push_back(edges[e]);
  std::vector<std::vector<IndexPair>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::size_t ReebGraph::component_count() const {
  UnionFind uf(nodes.size());
  for (const auto& [a, b] : edges) uf.unite(a, b);
  std::size_t count = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (uf.find(i) == i) ++count;
  return count;
}

namespace {

void finish_graph(ReebGraph& g) {
  std::sort(g.edges.begin(), g.edges.end());
  UnionFind uf(g.nodes.size());
  for (const auto& [a, b] : g.edges) uf.unite(a, b);
  std::map<std::size_t, std::size_t> ids;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    g.nodes[i].component = ids.emplace(uf.find(i), ids.size()).first->second;
}

}  // namespace

ReebGraph reeb_graph(const ScalarField& field) {
  struct Active {
    std::vector<std::size_t> edges;
    std::size_t arc_start;
  };
  const auto& edges = field.edges();
  std::map<std::size_t, Active> active;
  std::vector<std::size_t> owner(edges.size(), SIZE_MAX);
  std::size_t next_id = 0;
  ReebGraph g;

  for (std::size_t r = 0; r < field.vertex_count(); ++r) {
    const auto w = field.vertex_at(r);
    std::set<std::size_t> affected;
    std::set<std::size_t> lower, upper;
    for (auto e : field.vertex_edges()[w]) {
      if (edges[e].second == w) {
        if (owner[e] == SIZE_MAX) throw InternalError("sweep lost track of an edge");
        affected.insert(owner[e]);
        lower.insert(e);
      } else {
        upper.insert(e);
      }
    }

    std::vector<std::size_t> next(upper.begin(), upper.end());
    for (auto id : affected)
      for (auto e : active.at(id).edges)
        if (!lower.count(e)) next.push_back(e);
    std::sort(next.begin(), next.end());

    std::map<std::size_t, std::size_t> slot;
    for (std::size_t i = 0; i < next.size(); ++i) slot.emplace(next[i], i);
    UnionFind uf(next.size());
    for (std::size_t i = 0; i < next.size(); ++i)
      for (auto t : field.edge_triangles()[next[i]])
        for (auto e : field.triangle_edges()[t])
          if (auto it = slot.find(e); it != slot.end()) uf.unite(i, it->second);
    std::map<std::size_t, std::vector<std::size_t>> pieces;
    for (std::size_t i = 0; i < next.size(); ++i) pieces[uf.find(i)].push_back(next[i]);

    std::size_t start;
    if (affected.size() == 1 && pieces.size() == 1) {
      start = active.at(*affected.begin()).arc_start;
    } else {
      start = g.nodes.size();
      g.nodes.push_back({w, field.value(w), 0});
      for (auto id : affected) g.edges.emplace_back(active.at(id).arc_start, start);
    }
    for (auto id : affected) active.erase(id);
    for (auto e : lower) owner[e] = SIZE_MAX;
    for (auto& [root, piece] : pieces) {
      const auto id = next_id++;
      for (auto e : piece) owner[e] = id;
      active.emplace(id, Active{std::move(piece), start});
    }
  }
  if (!active.empty()) throw InternalError("sweep ended with open level components");
  finish_graph(g);
  return g;
}

namespace {

struct AtomStructure {
  std::vector<ReebAtom> atoms;
  /// (lower atom, upper atom).
  std::vector<IndexPair> links;
  std::vector<bool> critical;
};

std::string graph_label(std::size_t nodes, const std::vector<IndexPair>& links) {
  std::vector<std::size_t> degree(nodes, 0);
  for (const auto& [a, b] : links) {
    ++degree[a];
    ++degree[b];
  }
  std::vector<std::size_t> branch;
  for (auto d : degree)
    if (d != 2) branch.push_back(d);
  std::sort(branch.begin(), branch.end());
  const long b1 = static_cast<long>(links.size()) - static_cast<long>(nodes) + 1;
  if (nodes == 1 && links.empty()) return "point";
  if (branch.empty() && b1 == 1) return "circle";
  if (branch == std::vector<std::size_t>{1, 1} && b1 == 0) return "segment";
  std::string out = "graph(b1=" + std::to_string(b1) + ";deg=";
  for (std::size_t i = 0; i < branch.size(); ++i) out += (i ? "," : "") + std::to_string(branch[i]);
  return out + ")";
}

// Level components for the open gap above rank `r` (at_vertex false) or at
// the value of the vertex of rank `r` (at_vertex true).
std::vector<ReebAtom> atoms_at(const ScalarField& field, std::size_t r, bool at_vertex) {
  const auto& edges = field.edges();
  const auto w = field.vertex_at(r);
  std::vector<bool> crossing(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto lo = field.rank(edges[e].first), hi = field.rank(edges[e].second);
    crossing[e] = at_vertex ? (lo < r && r < hi) : (lo <= r && r < hi);
  }
  // Node e is an edge point; node edges.size() is the vertex w.
  const auto vnode = edges.size();
  std::vector<IndexPair> links;
  for (std::size_t t = 0; t < field.triangles().size(); ++t) {
    const auto& tv = field.triangles()[t];
    const auto& te = field.triangle_edges()[t];
    std::vector<std::size_t> hit;
    for (auto e : te)
      if (crossing[e]) hit.push_back(e);
    if (at_vertex && std::find(tv.begin(), tv.end(), w) != tv.end()) {
      if (hit.size() == 1) links.emplace_back(vnode, hit[0]);
    } else if (hit.size() == 2) {
      links.emplace_back(hit[0], hit[1]);
    }
  }
  UnionFind uf(edges.size() + 1);
  for (const auto& [a, b] : links) uf.unite(a, b);

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (crossing[e]) groups[uf.find(e)].push_back(e);
  if (at_vertex) groups[uf.find(vnode)].push_back(vnode);

  std::vector<ReebAtom> out;
  for (auto& [root, nodes] : groups) {
    ReebAtom atom;
    atom.at_vertex = at_vertex;
    atom.level = r;
    std::map<std::size_t, std::size_t> local;
    for (auto x : nodes) {
      local.emplace(x, local.size());
      if (x == vnode)
        atom.vertex = w;
      else
        atom.crossing_edges.push_back(edges[x]);
    }
    std::vector<IndexPair> local_links;
    for (const auto& [a, b] : links)
      if (local.count(a)) local_links.emplace_back(local.at(a), local.at(b));
    atom.label = graph_label(nodes.size(), local_links);
    out.push_back(std::move(atom));
  }
  return out;
}

AtomStructure build_atoms(const ScalarField& field) {
  AtomStructure s;
  const auto n = field.vertex_count();
  // Index of the atom at each vertex level containing a given edge or vertex.
  std::vector<std::map<IndexPair, std::size_t>> edge_atom(n);
  std::vector<std::size_t> vertex_atom(n);
  std::vector<std::pair<std::size_t, std::size_t>> gap_range;

  for (std::size_t r = 0; r < n; ++r) {
    for (auto& atom : atoms_at(field, r, true)) {
      const auto id = s.atoms.size();
      for (const auto& e : atom.crossing_edges) edge_atom[r].emplace(e, id);
      if (atom.vertex) vertex_atom[r] = id;
      s.atoms.push_back(std::move(atom));
    }
  }
  std::vector<std::size_t> down(s.atoms.size(), 0), up(s.atoms.size(), 0);
  for (std::size_t r = 0; r + 1 < n; ++r) {
    for (auto& atom : atoms_at(field, r, false)) {
      const auto id = s.atoms.size();
      std::set<std::size_t> below, above;
      for (const auto& [a, b] : atom.crossing_edges) {
        below.insert(field.rank(a) == r ? vertex_atom[r] : edge_atom[r].at({a, b}));
        above.insert(field.rank(b) == r + 1 ? vertex_atom[r + 1] : edge_atom[r + 1].at({a, b}));
      }
      if (below.size() != 1 || above.size() != 1)
        throw InternalError("level component does not limit onto a single component");
      s.links.emplace_back(*below.begin(), id);
      s.links.emplace_back(id, *above.begin());
      ++up[*below.begin()];
      ++down[*above.begin()];
      s.atoms.push_back(std::move(atom));
    }
  }
  s.critical.assign(s.atoms.size(), false);
  for (std::size_t i = 0; i < down.size(); ++i)
    s.critical[i] = s.atoms[i].vertex && !(down[i] == 1 && up[i] == 1);
  return s;
}

struct Contraction {
  ReebGraph graph;
  /// Atom indices per arc.
  std::vector<std::vector<std::size_t>> arcs;
  std::map<std::size_t, std::size_t> node_of_atom;
};

Contraction contract(const ScalarField& field, const AtomStructure& s) {
  Contraction c;
  std::vector<std::size_t> critical;
  for (std::size_t i = 0; i < s.atoms.size(); ++i)
    if (s.critical[i]) critical.push_back(i);
  std::sort(critical.begin(), critical.end(), [&](std::size_t a, std::size_t b) {
    return s.atoms[a].level < s.atoms[b].level;
  });
  for (auto a : critical) {
    c.node_of_atom.emplace(a, c.graph.nodes.size());
    const auto v = *s.atoms[a].vertex;
    c.graph.nodes.push_back({v, field.value(v), 0});
  }

  UnionFind uf(s.atoms.size());
  for (const auto& [a, b] : s.links)
    if (!s.critical[a] && !s.critical[b]) uf.unite(a, b);
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < s.atoms.size(); ++i)
    if (!s.critical[i]) classes[uf.find(i)].push_back(i);
  std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> ends;
  for (const auto& [a, b] : s.links) {
    if (s.critical[a] && !s.critical[b]) ends[uf.find(b)].first.push_back(c.node_of_atom.at(a));
    if (!s.critical[a] && s.critical[b]) ends[uf.find(a)].second.push_back(c.node_of_atom.at(b));
  }
  for (auto& [root, members] : classes) {
    const auto& [lo, hi] = ends[root];
    if (lo.size() != 1 || hi.size() != 1)
      throw InternalError("contracted arc does not join exactly two critical components");
    c.graph.edges.emplace_back(lo[0], hi[0]);
    c.arcs.push_back(std::move(members));
  }
  finish_graph(c.graph);
  return c;
}

}  // namespace

ReebGraph reeb_bruteforce(const ScalarField& field) {
  return contract(field, build_atoms(field)).graph;
}

bool same_reeb_graph(const ReebGraph& a, const ReebGraph& b) {
  if (a.nodes.size() != b.nodes.size() || a.edges != b.edges) return false;
  for (std::size_t i = 0; i < a.nodes.size(); ++i)
    if (a.nodes[i].vertex != b.nodes[i].vertex || a.nodes[i].component != b.nodes[i].component) return false;
  return true;
}

std::size_t betti1(const ReebGraph& g) {
  return g.edges.size() + g.component_count() - g.nodes.size();
}

std::size_t link_sign_changes(const ScalarField& field, std::size_t v) {
  std::size_t changes = 0;
  for (const auto& t : field.triangles()) {
    if (std::find(t.begin(), t.end(), v) == t.end()) continue;
    std::size_t below = 0;
    for (auto u : t)
      if (u != v && field.rank(u) < field.rank(v)) ++below;
    if (below == 1) ++changes;
  }
  return changes;
}

bool is_pl_morse(const ScalarField& field) {
  for (std::size_t v = 0; v < field.vertex_count(); ++v)
    if (link_sign_changes(field, v) > 4) return false;
  return true;
}

ReebWeakElements reeb_weak_elements(const ScalarField& field) {
  auto s = build_atoms(field);
  auto c = contract(field, s);

  ReebWeakElements out;
  UnionFind uf(s.atoms.size());
  for (const auto& [a, b] : s.links)
    if (s.atoms[a].label == s.atoms[b].label) uf.unite(a, b);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < s.atoms.size(); ++i) groups[uf.find(i)].push_back(i);
  for (auto& [root, members] : groups) out.groups.push_back(std::move(members));

  std::set<std::vector<std::size_t>> expected;
  for (const auto& [atom, node] : c.node_of_atom) expected.insert({atom});
  for (const auto& arc : c.arcs) expected.insert(arc);
  const std::set<std::vector<std::size_t>> actual(out.groups.begin(), out.groups.end());

  for (const auto& g : out.groups) {
    const bool is_node = g.size() == 1 && s.critical[g[0]];
    (is_node ? out.node_groups : out.edge_groups) += 1;
  }
  out.passed = actual == expected && c.graph == reeb_graph(field);
  out.atoms = std::move(s.atoms);
  out.adjacency = std::move(s.links);
  return out;
}

ScalarField octahedron_field() {
  // 0:+x 1:-x 2:+y 3:-y 4:top 5:bottom
  const std::vector<std::array<std::size_t, 3>> triangles{
      {4, 0, 2}, {4, 2, 1}, {4, 1, 3}, {4, 3, 0}, {5, 0, 2}, {5, 2, 1}, {5, 1, 3}, {5, 3, 0}};
  return ScalarField::from_triangles(6, triangles, {-0.2, 0.2, -0.1, 0.3, 1.0, -1.0});
}

ScalarField torus_field() {
  constexpr std::size_t rings = 12, tube = 8;
  constexpr double big = 2.0, small = 0.8, pi = 3.14159265358979323846;
  auto id = [](std::size_t j, std::size_t i) { return (j % rings) * tube + (i % tube); };
  std::vector<std::array<std::size_t, 3>> triangles;
  std::vector<double> values(rings * tube);
  for (std::size_t j = 0; j < rings; ++j)
    for (std::size_t i = 0; i < tube; ++i) {
      const double theta = 2 * pi * (static_cast<double>(j) + 0.1) / rings;
      const double phi = 2 * pi * (static_cast<double>(i) + 0.05) / tube;
      values[id(j, i)] = (big + small * std::cos(phi)) * std::sin(theta) + 1e-4 * static_cast<double>(id(j, i));
      triangles.push_back({id(j, i), id(j + 1, i), id(j + 1, i + 1)});
      triangles.push_back({id(j, i), id(j + 1, i + 1), id(j, i + 1)});
    }
  return ScalarField::from_triangles(rings * tube, triangles, std::move(values));
}

ScalarField triangle_field() { return ScalarField::from_triangles(3, {{0, 1, 2}}, {0.0, 1.0, 2.0}); }

}  // namespace fintop
