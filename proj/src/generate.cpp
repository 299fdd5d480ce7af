#include "fintop/generate.hpp"

#include <algorithm>
#include <string>

namespace fintop {

namespace {

FiniteSpace space_of_size(Rng& rng, std::size_t n) {
  const double density = 0.05 + 0.35 * rng.unit();
  std::vector<IndexPair> pairs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && rng.chance(density)) pairs.emplace_back(x, y);
  return FiniteSpace::from_relation(n, pairs);
}

Partition coarsen(Rng& rng, const Partition& p) {
  const auto k = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(p.size())));
  std::vector<PointSet> merged(k, PointSet(p.blocks.front().size()));
  for (const auto& b : p.blocks) merged[rng.below(k)] |= b;
  Partition out;
  for (auto& m : merged)
    if (m.any()) out.blocks.push_back(std::move(m));
  return out.canonical();
}

// Two copies of a small space under a common apex, with blocks {y, y'}.
Decomposition swapped_copies(Rng& rng) {
  const auto m = static_cast<std::size_t>(rng.between(1, 4));
  const auto base = space_of_size(rng, m);
  const bool apex = rng.chance(0.5);
  std::vector<IndexPair> pairs;
  for (const auto& [x, y] : base.relation_pairs()) {
    pairs.emplace_back(x, y);
    pairs.emplace_back(x + m, y + m);
  }
  if (apex)
    for (std::size_t x = 0; x < 2 * m; ++x) pairs.emplace_back(x, 2 * m);
  const auto n = 2 * m + (apex ? 1 : 0);
  std::vector<std::size_t> assignment(n);
  for (std::size_t x = 0; x < n; ++x) assignment[x] = x < 2 * m ? x % m : m;
  return Decomposition(FiniteSpace::from_relation(n, pairs), Partition::from_assignment(assignment));
}

}  // namespace

FiniteSpace random_space(Rng& rng, std::size_t max_points) {
  return space_of_size(rng, static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_points))));
}

Partition random_partition(Rng& rng, std::size_t n) {
  const auto k = rng.below(n) + 1;
  std::vector<std::size_t> assignment(n);
  for (auto& a : assignment) a = rng.below(k);
  return Partition::from_assignment(assignment);
}

Decomposition random_invariant_decomposition(Rng& rng, std::size_t max_points) {
  switch (rng.below(4)) {
    case 0:
      return swapped_copies(rng);
    case 1: {
      auto space = random_space(rng, max_points);
      for (int attempt = 0; attempt < 20; ++attempt) {
        Decomposition f(space, random_partition(rng, space.size()));
        if (is_invariant(f).invariant) return f;
      }
      [[fallthrough]];
    }
    case 2: {
      auto space = random_space(rng, max_points);
      auto classes = point_classes(space);
      for (int attempt = 0; attempt < 20; ++attempt) {
        Decomposition f(space, coarsen(rng, classes));
        if (is_invariant(f).invariant) return f;
      }
      return Decomposition(space, classes);
    }
    default: {
      auto space = random_space(rng, max_points);
      auto classes = point_classes(space);
      return Decomposition(space, classes);
    }
  }
}

Decomposition random_decomposition(Rng& rng, std::size_t max_points) {
  auto space = random_space(rng, max_points);
  auto blocks = random_partition(rng, space.size());
  return Decomposition(std::move(space), std::move(blocks));
}

CombinatorialComplex random_simplicial_complex(Rng& rng, std::size_t max_vertices) {
  const auto faces = rng.between(1, 4);
  std::vector<std::vector<std::int64_t>> maximal;
  for (std::int64_t f = 0; f < faces; ++f) {
    std::vector<std::int64_t> pool;
    for (std::size_t v = 1; v <= max_vertices; ++v) pool.push_back(static_cast<std::int64_t>(v));
    for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng.below(i)]);
    pool.resize(static_cast<std::size_t>(rng.between(1, std::min<std::int64_t>(4, static_cast<std::int64_t>(max_vertices)))));
    maximal.push_back(std::move(pool));
  }
  return simplicial_from_maximal_faces(maximal);
}

std::vector<double> random_values(Rng& rng, std::size_t n) {
  std::vector<double> out(n);
  for (auto& v : out) v = rng.unit();
  return out;
}

}  // namespace fintop
