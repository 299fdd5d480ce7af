#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "fintop/finspace.hpp"
#include "fintop/random.hpp"
#include "oracle/oracle.hpp"

namespace fintop::testing {

inline oracle::Mask to_mask(const PointSet& s) {
  oracle::Mask m = 0;
  for (auto x : members(s)) m |= oracle::bit(static_cast<int>(x));
  return m;
}

inline PointSet to_set(oracle::Mask m, std::size_t n) {
  PointSet s(n);
  for (auto x : oracle::bits(m)) s.set(static_cast<std::size_t>(x));
  return s;
}

inline std::vector<oracle::Mask> to_masks(const std::vector<PointSet>& sets) {
  std::vector<oracle::Mask> out;
  for (const auto& s : sets) out.push_back(to_mask(s));
  return out;
}

/// A relation as drawn, before any closure is taken.
struct RawSpace {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;
};

inline RawSpace random_raw_space(Rng& rng, int max_points) {
  RawSpace r;
  r.n = static_cast<int>(rng.between(1, max_points));
  const double density = 0.05 + 0.35 * rng.unit();
  for (int a = 0; a < r.n; ++a)
    for (int b = 0; b < r.n; ++b)
      if (a != b && rng.chance(density)) r.pairs.emplace_back(a, b);
  return r;
}

inline FiniteSpace build(const RawSpace& r) {
  std::vector<IndexPair> pairs;
  for (auto [a, b] : r.pairs)
    pairs.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  return FiniteSpace::from_relation(static_cast<std::size_t>(r.n), pairs);
}

inline oracle::Space oracle_of(const RawSpace& r) { return oracle::Space(r.n, r.pairs); }

inline oracle::Space oracle_of(const FiniteSpace& s) {
  std::vector<std::pair<int, int>> pairs;
  for (auto [a, b] : s.relation_pairs()) pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return oracle::Space(static_cast<int>(s.size()), pairs);
}

/// Hyper-edges keyed by int index sets, as the oracle stores them.
template <typename HyperGraph>
std::map<std::vector<int>, oracle::Mask> edge_masks(const HyperGraph& hg) {
  std::map<std::vector<int>, oracle::Mask> out;
  for (const auto& [index, members] : hg.hyper_edges) {
    std::vector<int> key(index.begin(), index.end());
    out[key] = to_mask(members);
  }
  return out;
}

}  // namespace fintop::testing
