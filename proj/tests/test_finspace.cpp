#include <gtest/gtest.h>

#include <algorithm>

#include "fintop/error.hpp"
#include "fintop/finspace.hpp"
#include "fintop/random.hpp"
#include "support.hpp"

namespace fintop {
namespace {

using testing::to_mask;
using testing::to_set;

FiniteSpace sierpinski() { return space_from_preorder({"a", "b"}, {{"a", "b"}}); }
FiniteSpace indiscrete() { return space_from_preorder({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }
FiniteSpace chain3() { return space_from_preorder({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }
FiniteSpace vspace() { return space_from_preorder({"p", "q", "r"}, {{"p", "q"}, {"r", "q"}}); }

PointSet named(const FiniteSpace& s, std::initializer_list<const char*> names) {
  PointSet out(s.size());
  for (auto n : names) out.set(s.index_of(n));
  return out;
}

TEST(FiniteSpace, SierpinskiClosures) {
  auto s = sierpinski();
  EXPECT_EQ(closure(s, named(s, {"b"})), named(s, {"a", "b"}));
  EXPECT_EQ(closure(s, named(s, {"a"})), named(s, {"a"}));
  EXPECT_EQ(derived_set(s, s.index_of("b")), named(s, {"a"}));
  EXPECT_EQ(point_class(s, s.index_of("b")), named(s, {"b"}));
  EXPECT_EQ(maximal_points(s), named(s, {"b"}));
}

TEST(FiniteSpace, IndiscretePair) {
  auto s = indiscrete();
  EXPECT_TRUE(s.leq(0, 1));
  EXPECT_TRUE(s.leq(1, 0));
  EXPECT_EQ(point_class(s, 0), named(s, {"a", "b"}));
  EXPECT_EQ(derived_set(s, 0), named(s, {"b"}));
  EXPECT_EQ(maximal_points(s), named(s, {"a", "b"}));
  EXPECT_EQ(t0_quotient(s).target.size(), 1u);
}

TEST(FiniteSpace, ChainTransitiveClosure) {
  auto s = chain3();
  EXPECT_EQ(closure(s, named(s, {"c"})), named(s, {"a", "b", "c"}));
  EXPECT_EQ(derived_set(s, s.index_of("c")), named(s, {"a", "b"}));
  EXPECT_EQ(point_class(s, s.index_of("b")), named(s, {"b"}));
  EXPECT_EQ(closure(s, s.empty_set()), s.empty_set());
  EXPECT_EQ(heights(s), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(height(s, s.empty_set()), -1);
  EXPECT_EQ(height(s, named(s, {"a", "b"})), 1);
}

TEST(FiniteSpace, VSpaceComponents) {
  auto s = vspace();
  auto parts = connected_components(s, named(s, {"p", "r"}));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts.blocks[0], named(s, {"p"}));
  EXPECT_EQ(parts.blocks[1], named(s, {"r"}));
  EXPECT_EQ(connected_components(s, s.carrier()).size(), 1u);
  EXPECT_EQ(maximal_points(s), named(s, {"q"}));
  EXPECT_TRUE(connected_components(s, s.empty_set()).blocks.empty());
  auto c = chain3();
  EXPECT_EQ(connected_components(c, named(c, {"a", "b"})).size(), 1u);
}

TEST(FiniteSpace, DiscreteHeightsAreZero) {
  auto s = FiniteSpace::from_relation(5, {});
  for (auto h : heights(s)) EXPECT_EQ(h, 0);
}

TEST(FiniteSpace, FromOpenSets) {
  auto s = space_from_open_sets({{"a", "b"}, {{}, {"b"}, {"a", "b"}}});
  EXPECT_EQ(s, sierpinski());
  auto ind = space_from_open_sets({{"a", "b"}, {{}, {"a", "b"}}});
  EXPECT_TRUE(ind.leq(0, 1));
  EXPECT_TRUE(ind.leq(1, 0));
}

TEST(FiniteSpace, NotATopology) {
  EXPECT_THROW(space_from_open_sets({{"a", "b"}, {{}, {"a"}, {"b"}}}), NotATopology);
  EXPECT_THROW(space_from_open_sets({{"a", "b", "c"}, {{}, {"a", "b"}, {"b", "c"}, {"a", "b", "c"}}}),
               NotATopology);
  EXPECT_THROW(space_from_open_sets({{"a", "b"}, {{"z"}}}), InputError);
}

TEST(FiniteSpace, UnknownIdentifier) {
  EXPECT_THROW(space_from_preorder({"a", "b"}, {{"a", "x"}}), InputError);
  EXPECT_THROW(space_from_preorder({"a", "a"}, {}), InputError);
}

TEST(FiniteSpace, FourPointQuotient) {
  auto s = space_from_preorder({"a", "b", "c", "d"},
                               {{"a", "b"}, {"b", "a"}, {"c", "d"}, {"d", "c"}, {"a", "c"}});
  auto q = t0_quotient(s);
  ASSERT_EQ(q.target.size(), 2u);
  EXPECT_EQ(q.assignment[0], q.assignment[1]);
  EXPECT_EQ(q.assignment[2], q.assignment[3]);
  EXPECT_TRUE(q.target.leq(q.assignment[0], q.assignment[2]));
  EXPECT_FALSE(q.target.leq(q.assignment[2], q.assignment[0]));
  EXPECT_TRUE(has_quotient_topology(q));
}

TEST(FiniteSpace, QuotientExamples) {
  auto s = chain3();
  auto q = quotient_space(s, Partition{{named(s, {"a"}), named(s, {"b", "c"})}});
  ASSERT_EQ(q.target.size(), 2u);
  EXPECT_TRUE(q.target.leq(0, 1));
  EXPECT_FALSE(q.target.leq(1, 0));
  EXPECT_EQ(quotient_space(s, Partition{{s.carrier()}}).target.size(), 1u);
  EXPECT_TRUE(is_homeomorphic(quotient_space(s, Partition::singletons(3)).target, s));
  EXPECT_THROW(quotient_space(s, Partition{{named(s, {"a"}), named(s, {"a", "b"})}}), InputError);
  EXPECT_THROW(quotient_space(s, Partition{{named(s, {"a"})}}), InputError);
}

TEST(FiniteSpace, Homeomorphism) {
  EXPECT_TRUE(is_homeomorphic(sierpinski(), sierpinski()));
  EXPECT_FALSE(is_homeomorphic(sierpinski(), FiniteSpace::from_relation(2, {})));
  EXPECT_FALSE(is_homeomorphic(sierpinski(), indiscrete()));
  auto flipped = FiniteSpace::from_relation(2, {{1, 0}});
  auto w = find_homeomorphism(sierpinski(), flipped);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (std::vector<std::size_t>{1, 0}));
}

// Properties against the open-set oracle.

TEST(FiniteSpaceProperty, OracleAgreement) {
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng(derive_seed(7, t));
    auto raw = testing::random_raw_space(rng, 8);
    auto s = testing::build(raw);
    auto o = testing::oracle_of(raw);
    const auto n = s.size();

    auto opens = open_sets(s);
    ASSERT_EQ(opens.size(), o.opens().size()) << "trial " << t;
    for (const auto& u : opens) EXPECT_TRUE(o.is_open(to_mask(u)));

    EXPECT_EQ(space_from_open_sets(open_family(s)), s);

    for (int k = 0; k < 4; ++k) {
      PointSet a(n), b(n);
      for (std::size_t x = 0; x < n; ++x) {
        if (rng.chance(0.4)) a.set(x);
        if (rng.chance(0.4)) b.set(x);
      }
      auto ca = closure(s, a);
      EXPECT_EQ(to_mask(ca), o.closure(to_mask(a)));
      EXPECT_TRUE(a.is_subset_of(ca));
      EXPECT_EQ(closure(s, ca), ca);
      EXPECT_EQ(closure(s, a | b), ca | closure(s, b));
      auto parts = connected_components(s, a);
      auto expect = o.components(to_mask(a));
      ASSERT_EQ(parts.size(), expect.size());
      for (std::size_t i = 0; i < expect.size(); ++i) EXPECT_EQ(to_mask(parts.blocks[i]), expect[i]);
    }

    auto h = heights(s);
    for (std::size_t x = 0; x < n; ++x) EXPECT_EQ(h[x], oracle::height_by_chains(o, static_cast<int>(x)));

    auto q = t0_quotient(s);
    EXPECT_TRUE(has_quotient_topology(q));
    for (std::size_t x = 0; x < q.target.size(); ++x) EXPECT_EQ(point_class(q.target, x).count(), 1u);
    EXPECT_TRUE(is_homeomorphic(t0_quotient(q.target).target, q.target));
  }
}

TEST(FiniteSpaceProperty, QuotientPreimages) {
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng(derive_seed(8, t));
    auto raw = testing::random_raw_space(rng, 7);
    auto s = testing::build(raw);
    std::vector<std::size_t> assign(s.size());
    const auto k = rng.between(1, static_cast<std::int64_t>(s.size()));
    for (auto& a : assign) a = rng.below(static_cast<std::uint64_t>(k));
    auto p = Partition::from_assignment(assign);
    auto q = quotient_space(s, p);
    const auto m = q.target.size();
    for (std::uint32_t v = 0; v < (1u << m); ++v) {
      auto target = to_set(v, m);
      EXPECT_EQ(q.target.is_open(target), s.is_open(q.preimage(target)));
    }
  }
}

TEST(FiniteSpaceProperty, HomeomorphismMatchesPermutationSearch) {
  for (std::uint64_t t = 0; t < 150; ++t) {
    Rng rng(derive_seed(9, t));
    auto ra = testing::random_raw_space(rng, 5);
    auto a = testing::build(ra);
    // Half the time compare against a relabelled copy.
    testing::RawSpace rb;
    if (rng.chance(0.5)) {
      std::vector<int> perm(ra.n);
      for (int i = 0; i < ra.n; ++i) perm[i] = i;
      for (int i = ra.n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
      rb.n = ra.n;
      for (auto [x, y] : ra.pairs) rb.pairs.emplace_back(perm[x], perm[y]);
    } else {
      rb = testing::random_raw_space(rng, 5);
    }
    auto b = testing::build(rb);
    auto expect = oracle::homeomorphism(testing::oracle_of(ra), testing::oracle_of(rb)).has_value();
    auto w = find_homeomorphism(a, b);
    ASSERT_EQ(w.has_value(), expect) << "trial " << t;
    EXPECT_TRUE(is_homeomorphic(a, a));
    EXPECT_EQ(is_homeomorphic(b, a), expect);
    if (w) {
      for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < a.size(); ++y) EXPECT_EQ(a.leq(x, y), b.leq((*w)[x], (*w)[y]));
    }
  }
}

}  // namespace
}  // namespace fintop
