#pragma once

#include <cstddef>
#include <vector>

#include "fintop/cellcomplex.hpp"
#include "fintop/decomp.hpp"
#include "fintop/finspace.hpp"
#include "fintop/random.hpp"

namespace fintop {

/// Preorder on 1..max_points points; each ordered pair is related with a
/// per-sample density between 0.05 and 0.4.
FiniteSpace random_space(Rng& rng, std::size_t max_points = 10);

Partition random_partition(Rng& rng, std::size_t n);

/// Always invariant. Mixes point classes, coarsened point classes, swapped
/// copies of a small space, and rejection-sampled partitions.
Decomposition random_invariant_decomposition(Rng& rng, std::size_t max_points = 10);

/// Uniform partition of a random space; usually not invariant.
Decomposition random_decomposition(Rng& rng, std::size_t max_points = 10);

/// Up to four maximal faces of at most four vertices drawn from 1..max_vertices.
CombinatorialComplex random_simplicial_complex(Rng& rng, std::size_t max_vertices = 6);

std::vector<double> random_values(Rng& rng, std::size_t n);

}  // namespace fintop
