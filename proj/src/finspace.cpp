#include "fintop/finspace.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "fintop/error.hpp"

namespace fintop {

namespace {

// Warshall closure over down-sets: down[y] holds every x with x <= y.
void close_transitively(std::vector<PointSet>& down) {
  const auto n = down.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (down[i].test(k)) down[i] |= down[k];
}

std::vector<PointSet> transpose(const std::vector<PointSet>& down) {
  const auto n = down.size();
  std::vector<PointSet> up(n, PointSet(n));
  for (std::size_t y = 0; y < n; ++y)
    for (auto x = down[y].find_first(); x != PointSet::npos; x = down[y].find_next(x))
      up[x].set(y);
  return up;
}

bool member_less(const PointSet& a, const PointSet& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return members(a) < members(b);
}

std::string block_name(const FiniteSpace& space, const PointSet& block) {
  const auto ms = members(block);
  if (ms.size() == 1) return space.name(ms.front());
  std::string out = "{";
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) out += ",";
    out += space.name(ms[i]);
  }
  return out + "}";
}

}  // namespace

FiniteSpace::FiniteSpace(std::vector<std::string> names, std::vector<PointSet> down)
    : names_(std::move(names)), down_(std::move(down)) {
  close_transitively(down_);
  up_ = transpose(down_);
}

FiniteSpace FiniteSpace::from_relation(std::vector<std::string> points,
                                       const std::vector<IndexPair>& pairs) {
  const auto n = points.size();
  std::set<std::string_view> seen;
  for (const auto& p : points)
    if (!seen.insert(p).second) throw InputError("duplicate point identifier '" + p + "'");
  std::vector<PointSet> down(n, PointSet(n));
  for (std::size_t i = 0; i < n; ++i) down[i].set(i);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) throw InputError("relation references a point outside the carrier");
    down[y].set(x);
  }
  return FiniteSpace(std::move(points), std::move(down));
}

FiniteSpace FiniteSpace::from_relation(std::size_t n, const std::vector<IndexPair>& pairs) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return from_relation(std::move(names), pairs);
}

FiniteSpace FiniteSpace::from_preorder(std::vector<std::string> points,
                                       const std::vector<NamedPair>& pairs) {
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < points.size(); ++i) index.emplace(points[i], i);
  std::vector<IndexPair> ip;
  ip.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw InputError("unknown point identifier '" + a + "'");
    if (ib == index.end()) throw InputError("unknown point identifier '" + b + "'");
    ip.emplace_back(ia->second, ib->second);
  }
  return from_relation(std::move(points), ip);
}

std::optional<std::size_t> FiniteSpace::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t FiniteSpace::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw InputError("unknown point identifier '" + std::string(name) + "'");
}

PointSet FiniteSpace::closure(const PointSet& a) const {
  PointSet out(size());
  for (auto x = a.find_first(); x != PointSet::npos; x = a.find_next(x)) out |= down_[x];
  return out;
}

PointSet FiniteSpace::open_hull(const PointSet& a) const {
  PointSet out(size());
  for (auto x = a.find_first(); x != PointSet::npos; x = a.find_next(x)) out |= up_[x];
  return out;
}

PointSet FiniteSpace::interior(const PointSet& a) const {
  PointSet out(size());
  for (auto x = a.find_first(); x != PointSet::npos; x = a.find_next(x))
    if (up_[x].is_subset_of(a)) out.set(x);
  return out;
}

bool FiniteSpace::is_open(const PointSet& a) const { return open_hull(a) == a; }
bool FiniteSpace::is_closed(const PointSet& a) const { return closure(a) == a; }

std::vector<IndexPair> FiniteSpace::relation_pairs() const {
  std::vector<IndexPair> out;
  for (std::size_t x = 0; x < size(); ++x)
    for (auto y = up_[x].find_first(); y != PointSet::npos; y = up_[x].find_next(y))
      if (x != y) out.emplace_back(x, y);
  return out;
}

// ---------------------------------------------------------------------------

void Partition::validate(std::size_t n) const {
  PointSet seen(n);
  for (const auto& b : blocks) {
    if (b.size() != n) throw InputError("partition block has the wrong carrier size");
    if (b.none()) throw InputError("partition has an empty block");
    if (b.intersects(seen)) throw InputError("partition blocks overlap");
    seen |= b;
  }
  if (!seen.all()) throw InputError("partition does not cover the carrier");
}

std::vector<std::size_t> Partition::block_of(std::size_t n) const {
  std::vector<std::size_t> out(n, 0);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (auto x : members(blocks[i])) out[x] = i;
  return out;
}

Partition Partition::canonical() const {
  Partition p = *this;
  std::sort(p.blocks.begin(), p.blocks.end(), [](const PointSet& a, const PointSet& b) {
    return a.find_first() < b.find_first();
  });
  return p;
}

Partition Partition::from_assignment(const std::vector<std::size_t>& block_of) {
  const auto n = block_of.size();
  std::map<std::size_t, std::size_t> order;
  Partition p;
  for (std::size_t x = 0; x < n; ++x) {
    auto [it, fresh] = order.emplace(block_of[x], p.blocks.size());
    if (fresh) p.blocks.emplace_back(n);
    p.blocks[it->second].set(x);
  }
  return p;
}

Partition Partition::singletons(std::size_t n) {
  Partition p;
  for (std::size_t x = 0; x < n; ++x) p.blocks.push_back(make_set(n, {x}));
  return p;
}

PointSet QuotientMap::image(const PointSet& a) const {
  PointSet out(target.size());
  for (auto x : members(a)) out.set(assignment[x]);
  return out;
}

PointSet QuotientMap::preimage(const PointSet& v) const {
  PointSet out(source.size());
  for (std::size_t x = 0; x < assignment.size(); ++x)
    if (v.test(assignment[x])) out.set(x);
  return out;
}

Partition QuotientMap::fibers() const {
  Partition p;
  p.blocks.assign(target.size(), PointSet(source.size()));
  for (std::size_t x = 0; x < assignment.size(); ++x) p.blocks[assignment[x]].set(x);
  return p;
}

// ---------------------------------------------------------------------------

FiniteSpace space_from_preorder(std::vector<std::string> carrier,
                                const std::vector<NamedPair>& pairs) {
  return FiniteSpace::from_preorder(std::move(carrier), pairs);
}

FiniteSpace space_from_open_sets(const OpenFamily& family) {
  const auto n = family.carrier.size();
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(family.carrier[i], i).second)
      throw InputError("duplicate point identifier '" + family.carrier[i] + "'");

  std::set<PointSet> opens;
  for (const auto& names : family.opens) {
    PointSet u(n);
    for (const auto& name : names) {
      auto it = index.find(name);
      if (it == index.end()) throw InputError("unknown point identifier '" + name + "'");
      u.set(it->second);
    }
    opens.insert(std::move(u));
  }
  if (!opens.count(PointSet(n))) throw NotATopology("open family is missing the empty set");
  if (!opens.count(full_set(n))) throw NotATopology("open family is missing the carrier");
  for (const auto& u : opens)
    for (const auto& v : opens) {
      if (!opens.count(u | v)) throw NotATopology("open family is not closed under union");
      if (!opens.count(u & v)) throw NotATopology("open family is not closed under intersection");
    }

  // x <= y iff every open set containing x also contains y.
  std::vector<IndexPair> pairs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      bool below = true;
      for (const auto& u : opens)
        if (u.test(x) && !u.test(y)) {
          below = false;
          break;
        }
      if (below) pairs.emplace_back(x, y);
    }
  return FiniteSpace::from_relation(family.carrier, pairs);
}

std::vector<PointSet> open_sets(const FiniteSpace& space, std::size_t limit) {
  const auto n = space.size();
  std::set<PointSet> seen{PointSet(n)};
  std::queue<PointSet> work;
  work.push(PointSet(n));
  while (!work.empty()) {
    auto s = std::move(work.front());
    work.pop();
    for (std::size_t x = 0; x < n; ++x) {
      if (s.test(x)) continue;
      auto t = s | space.up(x);
      if (seen.insert(t).second) {
        if (seen.size() > limit) throw InputError("too many open sets to enumerate");
        work.push(std::move(t));
      }
    }
  }
  std::vector<PointSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), member_less);
  return out;
}

OpenFamily open_family(const FiniteSpace& space, std::size_t limit) {
  OpenFamily family{space.names(), {}};
  for (const auto& u : open_sets(space, limit)) {
    std::vector<std::string> names;
    for (auto x : members(u)) names.push_back(space.name(x));
    family.opens.push_back(std::move(names));
  }
  return family;
}

PointSet closure(const FiniteSpace& space, const PointSet& a) { return space.closure(a); }

PointSet derived_set(const FiniteSpace& space, std::size_t x) {
  auto d = space.down(x);
  d.reset(x);
  return d;
}

PointSet point_class(const FiniteSpace& space, std::size_t x) {
  return space.down(x) & space.up(x);
}

Partition point_classes(const FiniteSpace& space) {
  Partition p;
  PointSet seen(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (seen.test(x)) continue;
    auto c = point_class(space, x);
    seen |= c;
    p.blocks.push_back(std::move(c));
  }
  return p;
}

QuotientMap t0_quotient(const FiniteSpace& space) {
  return quotient_space(space, point_classes(space));
}

QuotientMap quotient_space(const FiniteSpace& space, const Partition& partition) {
  const auto n = space.size();
  partition.validate(n);
  const auto m = partition.size();
  auto assignment = partition.block_of(n);

  std::vector<std::string> names;
  std::vector<IndexPair> pairs;
  for (std::size_t b = 0; b < m; ++b) {
    names.push_back(block_name(space, partition.blocks[b]));
    PointSet below = space.closure(partition.blocks[b]);
    PointSet targets(m);
    for (auto x : members(below)) targets.set(assignment[x]);
    for (auto t : members(targets))
      if (t != b) pairs.emplace_back(t, b);
  }
  QuotientMap q{space, FiniteSpace::from_relation(std::move(names), pairs),
                std::move(assignment)};
  if (m <= 8 && !has_quotient_topology(q))
    throw InternalError("quotient target does not carry the quotient topology");
  return q;
}

bool has_quotient_topology(const QuotientMap& q) {
  const auto m = q.target.size();
  if (m > 20) throw InputError("quotient too large for exhaustive topology check");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    PointSet v(m, mask);
    if (q.target.is_open(v) != q.source.is_open(q.preimage(v))) return false;
  }
  return true;
}

Partition connected_components(const FiniteSpace& space, const PointSet& a) {
  Partition out;
  PointSet seen(space.size());
  for (auto start = a.find_first(); start != PointSet::npos; start = a.find_next(start)) {
    if (seen.test(start)) continue;
    PointSet comp(space.size());
    std::vector<std::size_t> stack{start};
    comp.set(start);
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      PointSet next = (space.down(x) | space.up(x)) & a;
      next -= comp;
      for (auto y : members(next)) stack.push_back(y);
      comp |= next;
    }
    seen |= comp;
    out.blocks.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const FiniteSpace& space, const PointSet& a) {
  return connected_components(space, a).size() <= 1;
}

std::vector<int> heights(const FiniteSpace& space) {
  const auto n = space.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  // A strictly lower class has a strictly smaller closure.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return space.down(a).count() < space.down(b).count();
  });
  std::vector<int> h(n, 0);
  for (auto x : order) {
    PointSet strictly_below = space.down(x) - space.up(x);
    for (auto y : members(strictly_below)) h[x] = std::max(h[x], h[y] + 1);
  }
  return h;
}

int height(const FiniteSpace& space, std::size_t x) { return heights(space).at(x); }

int height(const FiniteSpace& space, const PointSet& a) {
  if (a.none()) return -1;
  auto h = heights(space);
  int best = 0;
  for (auto x : members(a)) best = std::max(best, h[x]);
  return best;
}

PointSet maximal_points(const FiniteSpace& space) {
  PointSet out(space.size());
  for (std::size_t x = 0; x < space.size(); ++x)
    if (space.up(x).is_subset_of(space.down(x))) out.set(x);
  return out;
}

FiniteSpace subspace(const FiniteSpace& space, const PointSet& a) {
  auto ms = members(a);
  std::vector<std::string> names;
  std::vector<IndexPair> pairs;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    names.push_back(space.name(ms[i]));
    for (std::size_t j = 0; j < ms.size(); ++j)
      if (i != j && space.leq(ms[i], ms[j])) pairs.emplace_back(i, j);
  }
  return FiniteSpace::from_relation(std::move(names), pairs);
}

namespace {

using Signature = std::tuple<std::size_t, int, std::size_t, std::size_t>;

std::vector<Signature> signatures(const FiniteSpace& s) {
  auto h = heights(s);
  std::vector<Signature> out;
  for (std::size_t x = 0; x < s.size(); ++x)
    out.emplace_back(point_class(s, x).count(), h[x], s.down(x).count(), s.up(x).count());
  return out;
}

bool extend(const FiniteSpace& a, const FiniteSpace& b, const std::vector<Signature>& sa,
            const std::vector<Signature>& sb, std::size_t x, std::vector<std::size_t>& map,
            std::vector<bool>& used) {
  if (x == a.size()) return true;
  for (std::size_t y = 0; y < b.size(); ++y) {
    if (used[y] || sa[x] != sb[y]) continue;
    bool ok = true;
    for (std::size_t p = 0; p < x && ok; ++p)
      ok = a.leq(p, x) == b.leq(map[p], y) && a.leq(x, p) == b.leq(y, map[p]);
    if (!ok) continue;
    map[x] = y;
    used[y] = true;
    if (extend(a, b, sa, sb, x + 1, map, used)) return true;
    used[y] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_homeomorphism(const FiniteSpace& a,
                                                           const FiniteSpace& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto sa = signatures(a);
  auto sb = signatures(b);
  auto ssa = sa, ssb = sb;
  std::sort(ssa.begin(), ssa.end());
  std::sort(ssb.begin(), ssb.end());
  if (ssa != ssb) return std::nullopt;
  std::vector<std::size_t> map(a.size());
  std::vector<bool> used(b.size(), false);
  if (extend(a, b, sa, sb, 0, map, used)) return map;
  return std::nullopt;
}

bool is_homeomorphic(const FiniteSpace& a, const FiniteSpace& b) {
  return find_homeomorphism(a, b).has_value();
}

}  // namespace fintop
