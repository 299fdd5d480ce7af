#include "fintop/recurrence.hpp"

#include <algorithm>

#include "fintop/error.hpp"

namespace fintop {

std::string_view to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::closed: return "closed";
    case ElementKind::proper: return "proper";
    case ElementKind::recurrent: return "recurrent";
  }
  return "?";
}

std::string_view to_string(UnassignablePoint::Reason reason) {
  switch (reason) {
    case UnassignablePoint::Reason::empty_derived_set: return "empty derived set";
    case UnassignablePoint::Reason::escapes_family: return "derived set escapes the family";
    case UnassignablePoint::Reason::non_invariant_piece: return "piece is not invariant";
  }
  return "?";
}

void MorseHyperGraph::check_partition() const {
  PointSet seen(carrier_size);
  auto take = [&](const PointSet& s, const char* what) {
    if (s.size() != carrier_size) throw InternalError(std::string(what) + " has wrong carrier");
    if (s.none()) throw InternalError(std::string(what) + " is empty");
    if (s.intersects(seen)) throw InternalError(std::string(what) + " overlaps another part");
    seen |= s;
  };
  for (const auto& v : vertices) take(v, "vertex");
  for (const auto& [index, members] : hyper_edges) {
    if (index.empty()) throw InternalError("hyper-edge with empty index set");
    for (auto i : index)
      if (i >= vertices.size()) throw InternalError("hyper-edge index out of range");
    take(members, "hyper-edge");
  }
  if (!seen.all()) throw InternalError("hyper-graph does not cover the carrier");
}

bool is_proper_point(const FiniteSpace& space, std::size_t x) {
  return space.is_closed(derived_set(space, x));
}

namespace {

ElementKind kind_of(const PointClassification& c, std::size_t x) {
  if (c.closed.test(x)) return ElementKind::closed;
  if (c.proper_nonclosed.test(x)) return ElementKind::proper;
  return ElementKind::recurrent;
}

// Component of `pool` containing x.
PointSet component_containing(const FiniteSpace& space, const PointSet& pool, std::size_t x) {
  for (auto& block : connected_components(space, pool).blocks)
    if (block.test(x)) return block;
  throw InternalError("point missing from its own pool");
}

template <typename PoolFn>
ElementPartition build_elements(const FiniteSpace& space, const PointClassification& c,
                                PoolFn pool_of) {
  const auto n = space.size();
  ElementPartition out;
  PointSet seen(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (seen.test(x)) continue;
    auto element = component_containing(space, pool_of(x), x);
    if (element.intersects(seen)) throw InternalError("abstract elements overlap");
    seen |= element;
    out.blocks.blocks.push_back(std::move(element));
    out.kinds.push_back(kind_of(c, x));
  }
  return out;
}

PointSet same_derived(const FiniteSpace& space, std::size_t x, const PointSet& within) {
  const auto d = derived_set(space, x);
  PointSet pool(space.size());
  for (auto y : members(within))
    if (derived_set(space, y) == d) pool.set(y);
  return pool;
}

PointSet same_closure(const FiniteSpace& space, std::size_t x, const PointSet& within) {
  PointSet pool(space.size());
  for (auto y : members(within))
    if (space.down(y) == space.down(x)) pool.set(y);
  return pool;
}

// Everything except the quasi-recurrent set.
PointClassification base_classification(const FiniteSpace& space) {
  const auto n = space.size();
  PointClassification c{PointSet(n), PointSet(n), PointSet(n),
                        PointSet(n), PointSet(n), maximal_points(space)};
  for (std::size_t x = 0; x < n; ++x) {
    if (space.down(x).count() == 1)
      c.closed.set(x);
    else if (is_proper_point(space, x))
      c.proper_nonclosed.set(x);
    else
      c.nonproper.set(x);
  }
  c.recurrent = c.closed | c.nonproper;
  return c;
}

ElementPartition lemma_elements(const FiniteSpace& space, const PointClassification& c) {
  return build_elements(space, c, [&](std::size_t x) {
    if (c.closed.test(x)) return c.closed;
    if (c.proper_nonclosed.test(x)) return same_derived(space, x, c.proper_nonclosed);
    return same_closure(space, x, c.nonproper);
  });
}

}  // namespace

PointClassification classify_points(const FiniteSpace& space) {
  auto c = base_classification(space);
  c.quasi_recurrent = quasi_recurrent_set(space, lemma_elements(space, c));
  return c;
}

ElementPartition abstract_elements_by_definition(const FiniteSpace& space) {
  auto c = base_classification(space);
  const auto all = space.carrier();
  return build_elements(space, c, [&](std::size_t x) {
    if (c.nonproper.test(x)) return same_closure(space, x, all);
    return same_derived(space, x, all);
  });
}

ElementPartition abstract_elements(const FiniteSpace& space) {
  auto lemma = lemma_elements(space, base_classification(space));
  if (lemma != abstract_elements_by_definition(space))
    throw InternalError("abstract element characterizations disagree");
  return lemma;
}

PointSet quasi_recurrent_set(const FiniteSpace& space, const ElementPartition& elements) {
  auto c = base_classification(space);
  const PointSet seeds = c.recurrent | ~c.maximal;
  PointSet q(space.size());
  for (const auto& block : elements.blocks.blocks)
    if (block.intersects(seeds)) q |= block;
  return q;
}

PointSet quasi_recurrent_set(const FiniteSpace& space) {
  return quasi_recurrent_set(space, lemma_elements(space, base_classification(space)));
}

HyperGraphAttempt assign_hyper_edges(std::size_t n, std::vector<PointSet> vertices,
                                     const std::function<PointSet(std::size_t)>& derived,
                                     const Partition& invariance) {
  PointSet covered(n);
  for (const auto& v : vertices) covered |= v;
  auto saturate = [&](const PointSet& s) {
    PointSet out(n);
    for (const auto& b : invariance.blocks)
      if (b.intersects(s)) out |= b;
    return out;
  };

  HyperGraphAttempt attempt;
  MorseHyperGraph hg{n, std::move(vertices), {}};
  for (std::size_t x = 0; x < n; ++x) {
    if (covered.test(x)) continue;
    const auto d = derived(x);
    if (d.none()) {
      attempt.failures.push_back({x, UnassignablePoint::Reason::empty_derived_set});
      continue;
    }
    if (!d.is_subset_of(covered)) {
      attempt.failures.push_back({x, UnassignablePoint::Reason::escapes_family});
      continue;
    }
    std::vector<std::size_t> index;
    bool invariant = true;
    for (std::size_t i = 0; i < hg.vertices.size(); ++i) {
      PointSet piece = d & hg.vertices[i];
      if (piece.none()) continue;
      index.push_back(i);
      if (saturate(piece) != piece) invariant = false;
    }
    if (!invariant) {
      attempt.failures.push_back({x, UnassignablePoint::Reason::non_invariant_piece});
      continue;
    }
    hg.hyper_edges.try_emplace(index, n).first->second.set(x);
  }
  if (attempt.failures.empty()) {
    hg.check_partition();
    attempt.graph = std::move(hg);
  }
  return attempt;
}

namespace {

void validate_family(const FiniteSpace& space, const std::vector<PointSet>& family,
                     const Partition& invariance) {
  const auto n = space.size();
  PointSet seen(n);
  for (const auto& m : family) {
    if (m.size() != n) throw InputError("family member has the wrong carrier size");
    if (m.none()) throw InputError("family has an empty member");
    if (m.intersects(seen)) throw InputError("family members are not disjoint");
    seen |= m;
    for (const auto& b : invariance.blocks)
      if (b.intersects(m) && !b.is_subset_of(m))
        throw InputError("family member is not invariant");
  }
}

}  // namespace

HyperGraphAttempt morse_hypergraph_of_family(const FiniteSpace& space,
                                             const std::vector<PointSet>& family) {
  const auto classes = point_classes(space);
  validate_family(space, family, classes);
  return assign_hyper_edges(
      space.size(), family, [&](std::size_t x) { return derived_set(space, x); }, classes);
}

MorseHyperGraph morse_hypergraph(const FiniteSpace& space) {
  auto q = quasi_recurrent_set(space);
  auto attempt = morse_hypergraph_of_family(space, connected_components(space, q).blocks);
  if (!attempt.ok())
    throw InternalError("Morse hyper-graph of the quasi-recurrent set does not exist");
  return std::move(*attempt.graph);
}

QuotientMap element_space(const FiniteSpace& space) {
  return quotient_space(space, abstract_elements(space).blocks);
}

QuotientCheck quotient_check(const MorseHyperGraph& hg, const Partition& elements) {
  const auto n = hg.carrier_size;
  for (const auto& b : elements.blocks)
    if (b.size() != n) throw InputError("hyper-graph and elements come from different spaces");
  elements.validate(n);

  QuotientCheck out{true, {}};
  for (const auto& block : elements.blocks) {
    GraphPart part;
    for (std::size_t i = 0; i < hg.vertices.size(); ++i)
      if (block.is_subset_of(hg.vertices[i])) part = {GraphPart::Kind::vertex, i, {}};
    for (const auto& [index, members] : hg.hyper_edges)
      if (block.is_subset_of(members)) part = {GraphPart::Kind::hyper_edge, 0, index};
    if (part.kind == GraphPart::Kind::split) out.ok = false;
    out.assignment.push_back(std::move(part));
  }
  return out;
}

QuotientCheck quotient_check(const MorseHyperGraph& hg, const ElementPartition& elements) {
  return quotient_check(hg, elements.blocks);
}

Multigraph associated_graph(const MorseHyperGraph& hg) {
  Multigraph g{hg.vertices.size(), {}};
  for (const auto& [index, members] : hg.hyper_edges) {
    if (index.size() == 1) {
      g.edges.emplace_back(index[0], index[0]);
      continue;
    }
    for (std::size_t a = 0; a < index.size(); ++a)
      for (std::size_t b = a + 1; b < index.size(); ++b) g.edges.emplace_back(index[a], index[b]);
  }
  return g;
}

}  // namespace fintop
