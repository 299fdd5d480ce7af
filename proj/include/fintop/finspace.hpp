#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fintop/pointset.hpp"

namespace fintop {

using NamedPair = std::pair<std::string, std::string>;
using IndexPair = std::pair<std::size_t, std::size_t>;

/**
 * A finite topological space, stored as its specialization preorder.
 *
 * `leq(x, y)` holds when x lies in the closure of {y}. Every topology on a
 * finite set is Alexandrov, so the preorder determines the topology: the
 * open sets are exactly the up-sets and the closed sets the down-sets.
 *
 * Values are immutable after construction.
 */
class FiniteSpace {
public:
  FiniteSpace() = default;

  /// Reflexive-transitive closure of `pairs` over named points.
  static FiniteSpace from_preorder(std::vector<std::string> points,
                                   const std::vector<NamedPair>& pairs);
  static FiniteSpace from_relation(std::vector<std::string> points,
                                   const std::vector<IndexPair>& pairs);
  /// Points are named "0", "1", ...
  static FiniteSpace from_relation(std::size_t n, const std::vector<IndexPair>& pairs);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t x) const { return names_.at(x); }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws InputError for an unknown name.
  std::size_t index_of(std::string_view name) const;

  bool leq(std::size_t x, std::size_t y) const { return down_[y].test(x); }
  /// cl{x}.
  const PointSet& down(std::size_t x) const { return down_[x]; }
  /// Smallest open set containing x.
  const PointSet& up(std::size_t x) const { return up_[x]; }

  PointSet empty_set() const { return PointSet(size()); }
  PointSet carrier() const { return full_set(size()); }

  PointSet closure(const PointSet& a) const;
  /// Smallest open set containing `a`.
  PointSet open_hull(const PointSet& a) const;
  PointSet interior(const PointSet& a) const;
  bool is_open(const PointSet& a) const;
  bool is_closed(const PointSet& a) const;

  /// All strictly comparable pairs (x, y) with x <= y, x != y, in index order.
  std::vector<IndexPair> relation_pairs() const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.names_ == b.names_ && a.down_ == b.down_;
  }

private:
  FiniteSpace(std::vector<std::string> names, std::vector<PointSet> down);

  std::vector<std::string> names_;
  std::vector<PointSet> down_;
  std::vector<PointSet> up_;
};

/// Alternate encoding of a topology by its open sets.
struct OpenFamily {
  std::vector<std::string> carrier;
  std::vector<std::vector<std::string>> opens;
};

/// Partition of a carrier into disjoint nonempty blocks.
struct Partition {
  std::vector<PointSet> blocks;

  std::size_t size() const { return blocks.size(); }
  /// Throws InputError unless the blocks partition {0..n-1}.
  void validate(std::size_t n) const;
  /// block_of[x] = index of the block containing x.
  std::vector<std::size_t> block_of(std::size_t n) const;
  /// Blocks sorted by smallest member.
  Partition canonical() const;

  static Partition from_assignment(const std::vector<std::size_t>& block_of);
  static Partition singletons(std::size_t n);

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// A quotient map together with both spaces.
struct QuotientMap {
  FiniteSpace source;
  FiniteSpace target;
  std::vector<std::size_t> assignment;

  PointSet image(const PointSet& a) const;
  PointSet preimage(const PointSet& v) const;
  /// Fibers of the map, indexed by target point.
  Partition fibers() const;
};

FiniteSpace space_from_preorder(std::vector<std::string> carrier,
                                const std::vector<NamedPair>& pairs);
/// Validates the topology axioms and converts to the specialization preorder.
FiniteSpace space_from_open_sets(const OpenFamily& family);
/// Every open set (up-set) of the space. Throws InputError past `limit` sets.
std::vector<PointSet> open_sets(const FiniteSpace& space, std::size_t limit = 1u << 16);
OpenFamily open_family(const FiniteSpace& space, std::size_t limit = 1u << 16);

PointSet closure(const FiniteSpace& space, const PointSet& a);
/// cl{x} - {x}.
PointSet derived_set(const FiniteSpace& space, std::size_t x);
/// Points with the same closure as x.
PointSet point_class(const FiniteSpace& space, std::size_t x);
/// The decomposition of the space into point classes.
Partition point_classes(const FiniteSpace& space);

QuotientMap t0_quotient(const FiniteSpace& space);
QuotientMap quotient_space(const FiniteSpace& space, const Partition& partition);
/// Exhaustive check that the target carries the quotient topology.
bool has_quotient_topology(const QuotientMap& q);

/// Connected components of the subspace `a`, ordered by smallest member.
Partition connected_components(const FiniteSpace& space, const PointSet& a);
bool is_connected(const FiniteSpace& space, const PointSet& a);

/// Heights of all points, measured in the T0 condensation.
std::vector<int> heights(const FiniteSpace& space);
int height(const FiniteSpace& space, std::size_t x);
/// -1 for the empty set.
int height(const FiniteSpace& space, const PointSet& a);

PointSet maximal_points(const FiniteSpace& space);

/// The induced subspace on `a`, points renumbered in increasing order.
FiniteSpace subspace(const FiniteSpace& space, const PointSet& a);

/// Witness isomorphism of specialization preorders: map[x in a] = point of b.
std::optional<std::vector<std::size_t>> find_homeomorphism(const FiniteSpace& a,
                                                           const FiniteSpace& b);
bool is_homeomorphic(const FiniteSpace& a, const FiniteSpace& b);

}  // namespace fintop
