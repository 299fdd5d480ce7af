#include "fintop/decomp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fintop/error.hpp"
#include "fintop/random.hpp"

namespace fintop {

Decomposition::Decomposition(FiniteSpace space, Partition blocks,
                             std::optional<std::vector<std::string>> labels)
    : space_(std::move(space)), blocks_(std::move(blocks)), labels_(std::move(labels)) {
  blocks_.validate(space_.size());
  if (labels_ && labels_->size() != blocks_.size())
    throw InputError("every block needs exactly one label");
  block_of_ = blocks_.block_of(space_.size());
}

Decomposition Decomposition::identity(FiniteSpace space) {
  auto n = space.size();
  return Decomposition(std::move(space), Partition::singletons(n));
}

PointSet saturation(const Decomposition& f, const PointSet& a) {
  PointSet out(f.space().size());
  for (auto x : members(a)) out |= f.block_containing(x);
  return out;
}

bool is_saturated(const Decomposition& f, const PointSet& a) { return saturation(f, a) == a; }

InvarianceReport is_invariant(const Decomposition& f) {
  const auto& s = f.space();
  for (std::size_t x = 0; x < s.size(); ++x) {
    auto sat = saturation(f, s.up(x));
    if (!s.is_open(sat)) return {false, x, s.up(x), std::move(sat)};
  }
  return {};
}

namespace {

std::string describe(const FiniteSpace& s, const PointSet& a) {
  std::string out = "{";
  bool first = true;
  for (auto x : members(a)) {
    if (!first) out += ",";
    out += s.name(x);
    first = false;
  }
  return out + "}";
}

}  // namespace

void require_invariant(const Decomposition& f) {
  auto report = is_invariant(f);
  if (report.invariant) return;
  const auto& s = f.space();
  throw NotInvariant("decomposition is not invariant: saturation of the minimal open set " +
                     describe(s, *report.witness_open) + " of point " +
                     s.name(*report.witness_point) + " is " +
                     describe(s, *report.witness_saturation) + ", which is not open");
}

InvarianceEquivalence invariance_equivalence_check(const Decomposition& f, std::uint64_t seed) {
  const auto& s = f.space();
  const auto m = f.block_count();
  InvarianceEquivalence out;
  out.invariant = is_invariant(f).invariant;
  out.closures_saturated = true;

  auto check_union = [&](auto&& in_union) {
    PointSet a(s.size());
    for (std::size_t b = 0; b < m; ++b)
      if (in_union(b)) a |= f.blocks()[b];
    ++out.unions_checked;
    if (!is_saturated(f, s.closure(a))) {
      out.closures_saturated = false;
      out.witness = std::move(a);
      return false;
    }
    return true;
  };

  if (m <= 16) {
    out.exhaustive = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
      if (!check_union([&](std::size_t b) { return (mask >> b) & 1u; })) break;
  } else {
    Rng rng(seed);
    for (int trial = 0; trial < 10000; ++trial) {
      std::vector<bool> pick(m);
      for (std::size_t b = 0; b < m; ++b) pick[b] = rng.chance(0.5);
      if (!check_union([&](std::size_t b) { return pick[b]; })) break;
    }
  }
  return out;
}

SaturatedFamily saturated_family(const Decomposition& f) {
  const auto& s = f.space();
  std::set<PointSet> family;
  for (const auto& u : open_sets(s)) family.insert(saturation(f, u));

  SaturatedFamily out;
  out.sets.assign(family.begin(), family.end());
  std::sort(out.sets.begin(), out.sets.end(), [](const PointSet& a, const PointSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return members(a) < members(b);
  });

  out.within_topology = true;
  for (const auto& u : out.sets)
    if (!s.is_open(u)) {
      out.within_topology = false;
      out.non_open_witness = u;
      break;
    }

  out.is_topology = family.count(s.empty_set()) && family.count(s.carrier());
  for (std::size_t i = 0; i < out.sets.size() && out.is_topology; ++i)
    for (std::size_t j = i + 1; j < out.sets.size(); ++j) {
      const auto& u = out.sets[i];
      const auto& v = out.sets[j];
      if (!family.count(u | v) || !family.count(u & v)) {
        out.is_topology = false;
        out.intersection_witness = std::make_pair(u, v);
        break;
      }
    }
  return out;
}

Decomposition class_decomposition(const Decomposition& f) {
  const auto& s = f.space();
  std::map<PointSet, std::size_t> by_closure;
  std::vector<std::size_t> assignment(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    auto cl = s.closure(f.block_containing(x));
    assignment[x] = by_closure.emplace(std::move(cl), by_closure.size()).first->second;
  }
  return Decomposition(s, Partition::from_assignment(assignment));
}

DecompositionSpace decomposition_space(const Decomposition& f) {
  DecompositionSpace out{quotient_space(f.space(), f.partition()), std::nullopt, 0, 0};
  if (!is_invariant(f).invariant) return out;

  const auto saturated = saturated_family(f).sets;
  const auto target_opens = open_sets(out.quotient.target);
  out.saturated_open_count = saturated.size();
  out.quotient_open_count = target_opens.size();

  std::set<PointSet> images;
  bool ok = true;
  for (const auto& u : saturated) {
    auto image = out.quotient.image(u);
    if (out.quotient.preimage(image) != u) ok = false;
    images.insert(std::move(image));
  }
  ok = ok && images.size() == saturated.size() &&
       images == std::set<PointSet>(target_opens.begin(), target_opens.end());
  out.bijection_holds = ok;
  return out;
}

namespace {

// Per-block data shared by the element computations.
struct BlockData {
  std::vector<PointSet> closure;
  std::vector<PointSet> derived;
  std::vector<ElementKind> kind;
  PointSet closed, proper, nonproper;  // over block indices
};

BlockData block_data(const Decomposition& f) {
  const auto& s = f.space();
  const auto m = f.block_count();
  BlockData d{{}, {}, {}, PointSet(m), PointSet(m), PointSet(m)};
  for (std::size_t b = 0; b < m; ++b) {
    const auto& block = f.blocks()[b];
    auto cl = s.closure(block);
    auto der = cl - block;
    if (cl == block) {
      d.kind.push_back(ElementKind::closed);
      d.closed.set(b);
    } else if (s.is_closed(der)) {
      d.kind.push_back(ElementKind::proper);
      d.proper.set(b);
    } else {
      d.kind.push_back(ElementKind::recurrent);
      d.nonproper.set(b);
    }
    d.closure.push_back(std::move(cl));
    d.derived.push_back(std::move(der));
  }
  return d;
}

// Homeomorphism class per block: labels when present, else subspace isomorphism.
std::vector<std::size_t> homeomorphism_classes(const Decomposition& f) {
  const auto m = f.block_count();
  std::vector<std::size_t> cls(m);
  if (f.labels()) {
    std::map<std::string, std::size_t> ids;
    for (std::size_t b = 0; b < m; ++b)
      cls[b] = ids.emplace((*f.labels())[b], ids.size()).first->second;
    return cls;
  }
  std::vector<FiniteSpace> reps;
  for (std::size_t b = 0; b < m; ++b) {
    auto sub = subspace(f.space(), f.blocks()[b]);
    std::size_t c = 0;
    while (c < reps.size() && !is_homeomorphic(reps[c], sub)) ++c;
    if (c == reps.size()) reps.push_back(std::move(sub));
    cls[b] = c;
  }
  return cls;
}

// Builds elements from a per-block pool of block indices; components are
// taken in the decomposition space X/F.
template <typename PoolFn>
WeakElementPartition build_block_elements(const Decomposition& f, const BlockData& d,
                                          const QuotientMap& q, PoolFn pool_of) {
  const auto m = f.block_count();
  Partition element_blocks;  // over block indices
  std::vector<ElementKind> kinds;
  PointSet seen(m);
  for (std::size_t b = 0; b < m; ++b) {
    if (seen.test(b)) continue;
    PointSet element(m);
    for (const auto& comp : connected_components(q.target, pool_of(b)).blocks)
      if (comp.test(b)) element = comp;
    if (element.none() || element.intersects(seen))
      throw InternalError("abstract elements of the decomposition overlap");
    seen |= element;
    element_blocks.blocks.push_back(std::move(element));
    kinds.push_back(d.kind[b]);
  }
  Partition blocks;
  for (const auto& e : element_blocks.blocks) blocks.blocks.push_back(q.preimage(e));
  auto space = quotient_space(f.space(), blocks);
  return {std::move(blocks), std::move(kinds), std::move(space)};
}

PointSet pool_where(std::size_t m, const PointSet& within, auto&& pred) {
  PointSet pool(m);
  for (auto b : members(within))
    if (pred(b)) pool.set(b);
  return pool;
}

WeakElementPartition elements_definition(const Decomposition& f, const BlockData& d,
                                         const QuotientMap& q,
                                         const std::vector<std::size_t>* homeo) {
  const auto m = f.block_count();
  const auto all = full_set(m);
  return build_block_elements(f, d, q, [&](std::size_t b) {
    auto same_type = [&](std::size_t c) { return !homeo || (*homeo)[c] == (*homeo)[b]; };
    if (d.kind[b] == ElementKind::recurrent)
      return pool_where(m, all, [&](std::size_t c) {
        return same_type(c) && d.closure[c] == d.closure[b];
      });
    return pool_where(m, all, [&](std::size_t c) {
      return same_type(c) && d.derived[c] == d.derived[b];
    });
  });
}

WeakElementPartition elements_lemma(const Decomposition& f, const BlockData& d,
                                    const QuotientMap& q,
                                    const std::vector<std::size_t>* homeo) {
  const auto m = f.block_count();
  return build_block_elements(f, d, q, [&](std::size_t b) {
    auto same_type = [&](std::size_t c) { return !homeo || (*homeo)[c] == (*homeo)[b]; };
    switch (d.kind[b]) {
      case ElementKind::closed:
        return pool_where(m, d.closed, same_type);
      case ElementKind::proper:
        return pool_where(m, d.proper, [&](std::size_t c) {
          return same_type(c) && d.derived[c] == d.derived[b];
        });
      case ElementKind::recurrent:
        break;
    }
    return pool_where(m, d.nonproper, [&](std::size_t c) {
      return same_type(c) && d.closure[c] == d.closure[b];
    });
  });
}

PointSet union_of(const Decomposition& f, const PointSet& block_indices) {
  PointSet out(f.space().size());
  for (auto b : members(block_indices)) out |= f.blocks()[b];
  return out;
}

}  // namespace

WeakElementPartition abstract_elements_decomp_by_definition(const Decomposition& f) {
  auto d = block_data(f);
  auto q = quotient_space(f.space(), f.partition());
  return elements_definition(f, d, q, nullptr);
}

WeakElementPartition abstract_elements_decomp(const Decomposition& f) {
  require_invariant(f);
  auto d = block_data(f);
  auto q = quotient_space(f.space(), f.partition());
  auto lemma = elements_lemma(f, d, q, nullptr);
  auto definition = elements_definition(f, d, q, nullptr);
  if (lemma.blocks != definition.blocks)
    throw InternalError("abstract element characterizations of the decomposition disagree");
  return lemma;
}

WeakElementPartition abstract_weak_elements(const Decomposition& f) {
  require_invariant(f);
  auto d = block_data(f);
  auto q = quotient_space(f.space(), f.partition());
  auto homeo = homeomorphism_classes(f);
  auto lemma = elements_lemma(f, d, q, &homeo);
  auto definition = elements_definition(f, d, q, &homeo);
  if (lemma.blocks != definition.blocks)
    throw InternalError("abstract weak element characterizations disagree");
  return definition;
}

PointSet quasi_recurrent_set_decomp(const Decomposition& f) {
  const auto& s = f.space();
  auto d = block_data(f);
  auto q = quotient_space(s, f.partition());
  auto elements = elements_definition(f, d, q, nullptr);

  PointSet seeds = union_of(f, d.closed | d.nonproper);
  const auto m = f.block_count();
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t c = 0; c < m; ++c)
      if (d.closure[b] != d.closure[c] && d.closure[b].is_subset_of(d.closure[c]))
        seeds |= f.blocks()[b];

  PointSet out(s.size());
  for (const auto& e : elements.blocks.blocks)
    if (e.intersects(seeds)) out |= e;
  return out;
}

ElementClassification classify_elements(const Decomposition& f) {
  auto d = block_data(f);
  ElementClassification c;
  c.closed = union_of(f, d.closed);
  c.proper_nonclosed = union_of(f, d.proper);
  c.nonproper = union_of(f, d.nonproper);
  c.recurrent = c.closed | c.nonproper;
  c.quasi_recurrent = quasi_recurrent_set_decomp(f);
  const auto m = f.block_count();
  PointSet maximal_blocks = full_set(m);
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t c2 = 0; c2 < m; ++c2)
      if (d.closure[b] != d.closure[c2] && d.closure[b].is_subset_of(d.closure[c2]))
        maximal_blocks.reset(b);
  c.maximal = union_of(f, maximal_blocks);
  return c;
}

namespace {

HyperGraphAttempt assign_for_decomposition(const Decomposition& f, std::vector<PointSet> m) {
  const auto& s = f.space();
  return assign_hyper_edges(
      s.size(), std::move(m),
      [&](std::size_t x) {
        const auto& block = f.block_containing(x);
        return s.closure(block) - block;
      },
      class_decomposition(f).partition());
}

}  // namespace

MorseHyperGraph morse_hypergraph_decomp(const Decomposition& f) {
  require_invariant(f);
  const auto& s = f.space();
  auto q = quotient_space(s, f.partition());
  auto image = q.image(quasi_recurrent_set_decomp(f));
  std::vector<PointSet> vertices;
  for (const auto& comp : connected_components(q.target, image).blocks)
    vertices.push_back(q.preimage(comp));
  std::sort(vertices.begin(), vertices.end(), [](const PointSet& a, const PointSet& b) {
    return a.find_first() < b.find_first();
  });
  auto attempt = assign_for_decomposition(f, std::move(vertices));
  if (!attempt.ok())
    throw InternalError("Morse hyper-graph of the invariant decomposition does not exist");
  return std::move(*attempt.graph);
}

HyperGraphAttempt morse_hypergraph_of_M(const Decomposition& f, const std::vector<PointSet>& m) {
  const auto n = f.space().size();
  const auto classes = class_decomposition(f);
  PointSet seen(n);
  for (const auto& member : m) {
    if (member.size() != n) throw InputError("family member has the wrong carrier size");
    if (member.none()) throw InputError("family has an empty member");
    if (member.intersects(seen)) throw InputError("family members are not disjoint");
    if (!is_saturated(classes, member))
      throw InputError("family member is not invariant under the class decomposition");
    seen |= member;
  }
  return assign_for_decomposition(f, m);
}

DecompTheoremCheck theorem_quotient_check_decomp(const Decomposition& f) {
  auto hg = morse_hypergraph_decomp(f);
  DecompTheoremCheck out;
  out.strong_ok = quotient_check(hg, abstract_elements_decomp(f).blocks).ok;
  out.weak_ok = quotient_check(hg, abstract_weak_elements(f).blocks).ok;
  return out;
}

}  // namespace fintop
