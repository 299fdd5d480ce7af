#pragma once

#include <string>
#include <vector>

#include "fintop/cellcomplex.hpp"
#include "fintop/decomp.hpp"
#include "fintop/recurrence.hpp"

namespace fintop {

/// A non-invariant decomposition and what happens to its saturated opens.
struct SaturationAnalog {
  Decomposition decomposition;
  InvarianceReport invariance;
  SaturatedFamily family;
  /// Opens of the decomposition space X/F.
  std::vector<PointSet> quotient_opens;
  /// Images of the saturated opens under the quotient map.
  std::vector<PointSet> projected_family;
  bool projection_matches_quotient = false;
};

/// chain3 a <= b <= c with blocks {a,c}, {b}.
SaturationAnalog chain3_saturation_analog();
/// Chains u <= p and v <= r with blocks {u,v}, {p}, {r}: the saturated opens
/// are not closed under intersection.
SaturationAnalog two_chain_saturation_analog();

/**
 * Finite model of a square with a band of horizontal leaves.
 *
 * The face poset of a grid on [0,3]^2 with x-lines 0,1,2,3 and y-lines
 * 0,1,1.5,2,3. The band is the open cells with 1 < x < 2 and 1 <= y <= 2.
 */
struct LeafSquareAnalog {
  CombinatorialComplex complex;
  FiniteSpace space;
  PointSet band;
  ElementPartition elements;
  PointClassification classification;
  MorseHyperGraph hypergraph;
  /// Components of the closure of the quasi-recurrent set.
  std::vector<PointSet> closure_family;
  HyperGraphAttempt closure_hypergraph;
  QuotientCheck elements_check;
  /// The two-block partition {complement of band, band}.
  Partition claimed_elements;
  QuotientCheck claimed_check;
  bool divergent = false;
  std::string note;
};

LeafSquareAnalog leaf_square_analog();

}  // namespace fintop
