#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace fintop {

/// Subset of a finite carrier, indexed by point position.
using PointSet = boost::dynamic_bitset<>;

inline PointSet make_set(std::size_t n, std::initializer_list<std::size_t> members) {
  PointSet s(n);
  for (auto m : members) s.set(m);
  return s;
}

inline PointSet make_set(std::size_t n, const std::vector<std::size_t>& members) {
  PointSet s(n);
  for (auto m : members) s.set(m);
  return s;
}

inline PointSet full_set(std::size_t n) {
  PointSet s(n);
  s.set();
  return s;
}

/// Members in increasing index order.
inline std::vector<std::size_t> members(const PointSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

inline std::size_t first_member(const PointSet& s) { return s.find_first(); }

}  // namespace fintop
