#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fintop/cellcomplex.hpp"
#include "fintop/finspace.hpp"

namespace fintop {

/**
 * Vertex-valued piecewise-linear function on a simplicial complex of
 * dimension at most 2.
 *
 * Ties are broken by vertex index, so `rank` is a strict total order.
 */
class ScalarField {
public:
  /// Edges are those of the triangles plus `extra_edges`.
  static ScalarField from_triangles(std::size_t vertex_count,
                                    const std::vector<std::array<std::size_t, 3>>& triangles,
                                    std::vector<double> values,
                                    const std::vector<IndexPair>& extra_edges = {});
  /// `values` is indexed by the 0-cells of `k` in cell order. Throws
  /// InputError for non-simplicial input or dimension above 2.
  static ScalarField from_complex(const CombinatorialComplex& k, std::vector<double> values);

  std::size_t vertex_count() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  double value(std::size_t v) const { return values_[v]; }
  std::size_t rank(std::size_t v) const { return rank_[v]; }
  /// Vertex with the given rank.
  std::size_t vertex_at(std::size_t r) const { return order_[r]; }
  /// Edges (u, v) with rank(u) < rank(v), sorted.
  const std::vector<IndexPair>& edges() const { return edges_; }
  const std::vector<std::array<std::size_t, 3>>& triangles() const { return triangles_; }
  /// Edge indices of each triangle.
  const std::vector<std::array<std::size_t, 3>>& triangle_edges() const { return tri_edges_; }
  /// Triangle indices of each edge.
  const std::vector<std::vector<std::size_t>>& edge_triangles() const { return edge_tris_; }
  /// Incident edge indices of each vertex.
  const std::vector<std::vector<std::size_t>>& vertex_edges() const { return vertex_edges_; }

  ScalarField with_values(std::vector<double> values) const;

private:
  ScalarField() = default;
  void build(std::vector<IndexPair> edges);

  std::vector<double> values_;
  std::vector<std::size_t> rank_, order_;
  std::vector<std::array<std::size_t, 3>> triangles_;
  std::vector<IndexPair> edges_;
  std::vector<std::array<std::size_t, 3>> tri_edges_;
  std::vector<std::vector<std::size_t>> edge_tris_;
  std::vector<std::vector<std::size_t>> vertex_edges_;
};

/// Components of the level set f = t, each as its crossing edges (u, v) with
/// f(u) < t < f(v). Throws InputError when t equals a vertex value.
std::vector<std::vector<IndexPair>> level_components(const ScalarField& field, double t);

struct ReebNode {
  std::size_t vertex;
  double value;
  std::size_t component;

  friend bool operator==(const ReebNode&, const ReebNode&) = default;
};

/// Multigraph of critical vertices. Nodes are sorted by effective order and
/// edges (lower node, upper node) are sorted.
struct ReebGraph {
  std::vector<ReebNode> nodes;
  std::vector<IndexPair> edges;

  std::size_t component_count() const;

  friend bool operator==(const ReebGraph&, const ReebGraph&) = default;
};

/// Sweep in effective order tracking level components by crossing edges.
ReebGraph reeb_graph(const ScalarField& field);
/// Level components on every open interval and at every vertex value,
/// linked across slabs and contracted.
ReebGraph reeb_bruteforce(const ScalarField& field);

/// Same critical vertices with the same edge multiset.
bool same_reeb_graph(const ReebGraph& a, const ReebGraph& b);

std::size_t betti1(const ReebGraph& g);

/// Triangles at v whose opposite edge has one end below v and one above.
/// Regular vertices have 2, extrema 0, simple saddles 4.
std::size_t link_sign_changes(const ScalarField& field, std::size_t v);
/// No vertex has more than four link sign changes.
bool is_pl_morse(const ScalarField& field);

/// A level-set component before contraction.
struct ReebAtom {
  /// Gap atoms sit between ranks `level` and `level + 1`; vertex-level atoms
  /// sit at rank `level`.
  bool at_vertex = false;
  std::size_t level = 0;
  /// Set when the component passes through the vertex of that rank.
  std::optional<std::size_t> vertex;
  std::vector<IndexPair> crossing_edges;
  /// Homeomorphism-class token of the component.
  std::string label;
};

struct ReebWeakElements {
  std::vector<ReebAtom> atoms;
  /// Pairs of adjacent atom indices.
  std::vector<IndexPair> adjacency;
  /// Atom indices per weak element.
  std::vector<std::vector<std::size_t>> groups;
  std::size_t node_groups = 0;
  std::size_t edge_groups = 0;
  bool passed = false;
};

ReebWeakElements reeb_weak_elements(const ScalarField& field);

/// Octahedron with a generic height; the level set at 0.05 is a hexagon.
ScalarField octahedron_field();
/// Vertical torus on a 12 x 8 grid with a generic height.
ScalarField torus_field();
ScalarField triangle_field();

}  // namespace fintop
