#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fintop/finspace.hpp"
#include "fintop/recurrence.hpp"

namespace fintop {

/**
 * A partition of a finite space into blocks ("elements").
 *
 * Labels are optional homeomorphism-class tokens, one per block. When
 * present they replace subspace isomorphism testing for weak elements.
 */
class Decomposition {
public:
  /// Throws InputError if `blocks` does not partition the carrier or the
  /// label count does not match.
  Decomposition(FiniteSpace space, Partition blocks,
                std::optional<std::vector<std::string>> labels = std::nullopt);

  static Decomposition identity(FiniteSpace space);

  const FiniteSpace& space() const { return space_; }
  const Partition& partition() const { return blocks_; }
  const std::vector<PointSet>& blocks() const { return blocks_.blocks; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::optional<std::vector<std::string>>& labels() const { return labels_; }
  std::size_t block_of(std::size_t x) const { return block_of_[x]; }
  /// F(x).
  const PointSet& block_containing(std::size_t x) const { return blocks_.blocks[block_of_[x]]; }

private:
  FiniteSpace space_;
  Partition blocks_;
  std::optional<std::vector<std::string>> labels_;
  std::vector<std::size_t> block_of_;
};

struct InvarianceReport {
  bool invariant = true;
  /// Point whose minimal open set has a non-open saturation.
  std::optional<std::size_t> witness_point;
  std::optional<PointSet> witness_open;
  std::optional<PointSet> witness_saturation;
};

struct InvarianceEquivalence {
  bool invariant = false;
  /// Every saturated subset has a saturated closure.
  bool closures_saturated = false;
  bool exhaustive = false;
  std::size_t unions_checked = 0;
  /// Saturated set whose closure is not saturated.
  std::optional<PointSet> witness;

  bool agrees() const { return invariant == closures_saturated; }
};

struct SaturatedFamily {
  std::vector<PointSet> sets;
  /// Closed under union and intersection, contains the empty set and carrier.
  bool is_topology = false;
  /// Every member is open in the original topology.
  bool within_topology = false;
  std::optional<PointSet> non_open_witness;
  /// Two members whose intersection is not a member.
  std::optional<std::pair<PointSet, PointSet>> intersection_witness;
};

struct DecompositionSpace {
  QuotientMap quotient;
  /// Set when the decomposition is invariant.
  std::optional<bool> bijection_holds;
  std::size_t saturated_open_count = 0;
  std::size_t quotient_open_count = 0;
};

struct ElementClassification {
  PointSet closed;
  PointSet proper_nonclosed;
  PointSet nonproper;
  PointSet recurrent;
  PointSet quasi_recurrent;
  PointSet maximal;

  friend bool operator==(const ElementClassification&, const ElementClassification&) = default;
};

/// Abstract (weak) elements of a decomposition and the resulting space.
struct WeakElementPartition {
  Partition blocks;
  std::vector<ElementKind> kinds;
  QuotientMap element_space;
};

struct DecompTheoremCheck {
  bool strong_ok = false;
  bool weak_ok = false;
  bool ok() const { return strong_ok && weak_ok; }
};

PointSet saturation(const Decomposition& f, const PointSet& a);
bool is_saturated(const Decomposition& f, const PointSet& a);

InvarianceReport is_invariant(const Decomposition& f);

/// Compares invariance with "closures of saturated sets are saturated",
/// enumerating block unions exactly up to 16 blocks and sampling 10^4
/// random unions beyond that.
InvarianceEquivalence invariance_equivalence_check(const Decomposition& f,
                                                   std::uint64_t seed = 0x5eed);

SaturatedFamily saturated_family(const Decomposition& f);
Decomposition class_decomposition(const Decomposition& f);
DecompositionSpace decomposition_space(const Decomposition& f);

ElementClassification classify_elements(const Decomposition& f);

/// Strong abstract elements. Requires an invariant decomposition.
WeakElementPartition abstract_elements_decomp(const Decomposition& f);
WeakElementPartition abstract_elements_decomp_by_definition(const Decomposition& f);
/// Weak abstract elements. Requires an invariant decomposition.
WeakElementPartition abstract_weak_elements(const Decomposition& f);

PointSet quasi_recurrent_set_decomp(const Decomposition& f);

MorseHyperGraph morse_hypergraph_decomp(const Decomposition& f);
HyperGraphAttempt morse_hypergraph_of_M(const Decomposition& f, const std::vector<PointSet>& m);

DecompTheoremCheck theorem_quotient_check_decomp(const Decomposition& f);

/// Throws NotInvariant with a witness when `f` is not invariant.
void require_invariant(const Decomposition& f);

}  // namespace fintop
