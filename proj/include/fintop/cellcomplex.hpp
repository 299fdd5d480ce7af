#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fintop/finspace.hpp"

namespace fintop {

struct Cell {
  std::string id;
  int dim = 0;
  /// Vertex labels when the cell is a simplex.
  std::optional<std::vector<std::int64_t>> vertices;
};

/**
 * Cells with dimensions and a strict face relation.
 *
 * The face relation only needs to be dimension-decreasing, so non-regular
 * attachments such as a loop on a single vertex are allowed.
 */
class CombinatorialComplex {
public:
  /// Throws InputError on duplicate ids, negative dimensions, unknown ids or
  /// a face pair that does not decrease dimension.
  CombinatorialComplex(std::vector<Cell> cells, const std::vector<NamedPair>& faces);
  CombinatorialComplex(std::vector<Cell> cells, std::vector<IndexPair> faces);

  const std::vector<Cell>& cells() const { return cells_; }
  /// (face, cell) index pairs.
  const std::vector<IndexPair>& faces() const { return faces_; }
  std::size_t size() const { return cells_.size(); }
  std::size_t index_of(const std::string& id) const;
  /// Every cell carries a vertex list.
  bool is_simplicial() const;
  /// -1 when empty.
  int dimension() const;

private:
  void validate() const;

  std::vector<Cell> cells_;
  std::vector<IndexPair> faces_;
};

/// All nonempty subsets of the given faces, ordered by dimension and then
/// lexicographically. Cell ids join sorted vertex labels with commas.
CombinatorialComplex simplicial_from_maximal_faces(
    const std::vector<std::vector<std::int64_t>>& maximal);

/// One point per cell, with every face below its cells.
FiniteSpace face_space(const CombinatorialComplex& k);

struct AbstractCellComplex {
  std::vector<std::string> cells;
  /// Strict order pairs (x, y) meaning x precedes y.
  std::vector<IndexPair> prec;
  std::vector<int> dim;
};

struct PropCellReport {
  AbstractCellComplex complex;
  /// Every abstract element of the face space is a single cell.
  bool singleton_elements = false;
  /// prec is transitive and strictly increases dim.
  bool axiom_holds = false;
  /// Height equals cell dimension; set only for simplicial input.
  std::optional<bool> heights_match_dims;

  bool passed() const { return axiom_holds && heights_match_dims.value_or(true); }
};

PropCellReport verify_prop_cell(const CombinatorialComplex& k);

long euler_characteristic(const CombinatorialComplex& k);

}  // namespace fintop
