#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "fintop/finspace.hpp"

namespace fintop {

/// Point classification of a finite space.
///
/// closed = Cl, proper_nonclosed = P (T_D but not closed), nonproper = R
/// (not T_D). recurrent = Cl + R. quasi_recurrent is the union of abstract
/// elements that meet the recurrent set or contain a non-maximal point.
struct PointClassification {
  PointSet closed;
  PointSet proper_nonclosed;
  PointSet nonproper;
  PointSet recurrent;
  PointSet quasi_recurrent;
  PointSet maximal;
};

enum class ElementKind { closed, proper, recurrent };

std::string_view to_string(ElementKind kind);

/// Decomposition of a space into abstract elements.
struct ElementPartition {
  Partition blocks;
  std::vector<ElementKind> kinds;

  friend bool operator==(const ElementPartition&, const ElementPartition&) = default;
};

/// Hyper-graph whose vertices are disjoint invariant sets and whose hyper-edge
/// H_I collects the points whose derived set splits over exactly the
/// vertices in I. Index sets are sorted vertex index lists.
struct MorseHyperGraph {
  std::size_t carrier_size = 0;
  std::vector<PointSet> vertices;
  std::map<std::vector<std::size_t>, PointSet> hyper_edges;

  /// Throws InternalError unless vertices and hyper-edges partition the carrier.
  void check_partition() const;

  friend bool operator==(const MorseHyperGraph&, const MorseHyperGraph&) = default;
};

struct UnassignablePoint {
  enum class Reason { empty_derived_set, escapes_family, non_invariant_piece };
  std::size_t point;
  Reason reason;
};

std::string_view to_string(UnassignablePoint::Reason reason);

/// Result of trying to build the hyper-graph of an arbitrary family.
struct HyperGraphAttempt {
  std::optional<MorseHyperGraph> graph;
  std::vector<UnassignablePoint> failures;

  bool ok() const { return graph.has_value(); }
};

/// Which part of a hyper-graph an element landed in.
struct GraphPart {
  enum class Kind { vertex, hyper_edge, split };
  Kind kind = Kind::split;
  std::size_t vertex = 0;
  std::vector<std::size_t> index_set;

  friend bool operator==(const GraphPart&, const GraphPart&) = default;
};

struct QuotientCheck {
  bool ok = false;
  /// One entry per element block.
  std::vector<GraphPart> assignment;
};

/// Undirected multigraph; loops are pairs (i, i).
struct Multigraph {
  std::size_t vertex_count = 0;
  std::vector<IndexPair> edges;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;
};

bool is_proper_point(const FiniteSpace& space, std::size_t x);

PointClassification classify_points(const FiniteSpace& space);

/// Abstract elements via the characterization restricted to Cl, P and R.
/// Also evaluates the unrestricted form and throws InternalError on mismatch.
ElementPartition abstract_elements(const FiniteSpace& space);
/// Abstract elements evaluated from the unrestricted definition only.
ElementPartition abstract_elements_by_definition(const FiniteSpace& space);

PointSet quasi_recurrent_set(const FiniteSpace& space);
PointSet quasi_recurrent_set(const FiniteSpace& space, const ElementPartition& elements);

MorseHyperGraph morse_hypergraph(const FiniteSpace& space);

/// Hyper-graph of a family of disjoint nonempty invariant subsets. Points
/// outside the family that cannot be placed in any H_I are reported.
/// Throws InputError if the family is not disjoint, not invariant, or has an
/// empty member.
HyperGraphAttempt morse_hypergraph_of_family(const FiniteSpace& space,
                                             const std::vector<PointSet>& family);

/// Shared H_I assignment for points outside `vertices`. `derived(x)` is the
/// set that must split into pieces, each a union of `invariance` blocks.
HyperGraphAttempt assign_hyper_edges(std::size_t n, std::vector<PointSet> vertices,
                                     const std::function<PointSet(std::size_t)>& derived,
                                     const Partition& invariance);

QuotientMap element_space(const FiniteSpace& space);

/// Checks that every element block lies in exactly one vertex or hyper-edge.
/// Throws InputError if the two structures live on different carriers.
QuotientCheck quotient_check(const MorseHyperGraph& hg, const Partition& elements);
QuotientCheck quotient_check(const MorseHyperGraph& hg, const ElementPartition& elements);

Multigraph associated_graph(const MorseHyperGraph& hg);

}  // namespace fintop
