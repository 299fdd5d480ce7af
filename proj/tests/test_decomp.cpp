#include <gtest/gtest.h>

#include <algorithm>

#include "fintop/decomp.hpp"
#include "fintop/error.hpp"
#include "fintop/generate.hpp"
#include "support.hpp"

namespace fintop {
namespace {

using testing::to_mask;

FiniteSpace chain3() { return space_from_preorder({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }
FiniteSpace indiscrete() { return space_from_preorder({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }
FiniteSpace vspace() { return space_from_preorder({"p", "q", "r"}, {{"p", "q"}, {"r", "q"}}); }

PointSet set3(std::initializer_list<std::size_t> m) { return make_set(3, m); }

// chain3 a <= b <= c with blocks {a}, {b,c}.
Decomposition chain3_merged() { return Decomposition(chain3(), Partition{{set3({0}), set3({1, 2})}}); }
// chain3 with blocks {a,c}, {b}.
Decomposition chain3_swapped() { return Decomposition(chain3(), Partition{{set3({0, 2}), set3({1})}}); }

std::vector<oracle::Mask> sorted_masks(const std::vector<PointSet>& sets) {
  auto out = testing::to_masks(sets);
  std::sort(out.begin(), out.end(),
            [](oracle::Mask a, oracle::Mask b) { return oracle::lowest(a) < oracle::lowest(b); });
  return out;
}

TEST(Decomposition, RejectsBadInput) {
  EXPECT_THROW(Decomposition(chain3(), Partition{{set3({0}), set3({0, 1})}}), InputError);
  EXPECT_THROW(Decomposition(chain3(), Partition{{set3({0, 1})}}), InputError);
  EXPECT_THROW(Decomposition(chain3(), Partition{{set3({0}), set3({1, 2})}},
                             std::vector<std::string>{"x"}),
               InputError);
}

TEST(Decomposition, Saturation) {
  auto f = chain3_merged();
  EXPECT_EQ(saturation(f, set3({1})), set3({1, 2}));
  EXPECT_EQ(saturation(f, PointSet(3)), PointSet(3));
  EXPECT_EQ(saturation(f, full_set(3)), full_set(3));
}

TEST(Decomposition, Invariance) {
  EXPECT_TRUE(is_invariant(chain3_merged()).invariant);
  EXPECT_TRUE(is_invariant(Decomposition::identity(chain3())).invariant);

  auto r = is_invariant(chain3_swapped());
  ASSERT_FALSE(r.invariant);
  EXPECT_EQ(*r.witness_point, 2u);
  EXPECT_EQ(*r.witness_open, set3({2}));
  EXPECT_EQ(*r.witness_saturation, set3({0, 2}));
  EXPECT_THROW(require_invariant(chain3_swapped()), NotInvariant);
  EXPECT_THROW(abstract_elements_decomp(chain3_swapped()), NotInvariant);
  EXPECT_THROW(morse_hypergraph_decomp(chain3_swapped()), NotInvariant);
}

TEST(Decomposition, InvarianceEquivalence) {
  auto yes = invariance_equivalence_check(chain3_merged());
  EXPECT_TRUE(yes.invariant);
  EXPECT_TRUE(yes.closures_saturated);
  EXPECT_TRUE(yes.exhaustive);

  auto no = invariance_equivalence_check(chain3_swapped());
  EXPECT_FALSE(no.invariant);
  EXPECT_FALSE(no.closures_saturated);
  ASSERT_TRUE(no.witness);
  EXPECT_EQ(*no.witness, set3({1}));
  EXPECT_EQ(closure(chain3(), *no.witness), set3({0, 1}));

  EXPECT_TRUE(invariance_equivalence_check(Decomposition::identity(vspace())).agrees());
}

TEST(Decomposition, SaturatedFamily) {
  auto fam = saturated_family(chain3_merged());
  EXPECT_EQ(fam.sets, (std::vector<PointSet>{PointSet(3), set3({1, 2}), full_set(3)}));
  EXPECT_TRUE(fam.is_topology);
  EXPECT_TRUE(fam.within_topology);

  auto id = saturated_family(Decomposition::identity(chain3()));
  EXPECT_EQ(id.sets.size(), open_sets(chain3()).size());
}

TEST(Decomposition, ClassDecomposition) {
  EXPECT_EQ(class_decomposition(Decomposition::identity(indiscrete())).block_count(), 1u);
  EXPECT_EQ(class_decomposition(Decomposition::identity(chain3())).block_count(), 3u);
  auto c = class_decomposition(chain3_merged());
  EXPECT_EQ(c.partition().canonical(), chain3_merged().partition().canonical());
}

TEST(Decomposition, Space) {
  auto d = decomposition_space(chain3_merged());
  ASSERT_EQ(d.quotient.target.size(), 2u);
  EXPECT_TRUE(d.quotient.target.leq(0, 1));
  ASSERT_TRUE(d.bijection_holds);
  EXPECT_TRUE(*d.bijection_holds);
  EXPECT_EQ(d.saturated_open_count, 3u);
  EXPECT_EQ(d.quotient_open_count, 3u);

  EXPECT_TRUE(is_homeomorphic(decomposition_space(Decomposition::identity(vspace())).quotient.target,
                              vspace()));
  auto whole = Decomposition(chain3(), Partition{{full_set(3)}});
  EXPECT_EQ(decomposition_space(whole).quotient.target.size(), 1u);
  EXPECT_FALSE(decomposition_space(chain3_swapped()).bijection_holds);
}

TEST(Decomposition, ClassifyElements) {
  auto c = classify_elements(chain3_merged());
  EXPECT_EQ(c.closed, set3({0}));
  EXPECT_EQ(c.proper_nonclosed, set3({1, 2}));
  EXPECT_TRUE(c.nonproper.none());
  EXPECT_EQ(c.quasi_recurrent, set3({0}));

  EXPECT_TRUE(classify_elements(Decomposition::identity(indiscrete())).nonproper.all());
  EXPECT_TRUE(classify_elements(Decomposition::identity(FiniteSpace::from_relation(3, {}))).closed.all());
}

TEST(Decomposition, AbstractElements) {
  auto e = abstract_elements_decomp(chain3_merged());
  EXPECT_EQ(e.blocks.blocks, (std::vector<PointSet>{set3({0}), set3({1, 2})}));
  EXPECT_EQ(abstract_weak_elements(chain3_merged()).blocks, e.blocks);
  EXPECT_EQ(abstract_elements_decomp(Decomposition::identity(indiscrete())).blocks.size(), 1u);
}

TEST(Decomposition, WeakElementsOfDiscreteSpace) {
  auto s = FiniteSpace::from_relation(4, {});
  auto f = Decomposition(s, Partition{{make_set(4, {0}), make_set(4, {1}), make_set(4, {2, 3})}});
  EXPECT_EQ(abstract_weak_elements(f).blocks.size(), 3u);
  EXPECT_EQ(abstract_elements_decomp(f).blocks.size(), 3u);

  // Indiscrete blocks {a}, {b} are connected in X/F; labels can still separate them.
  auto g = Decomposition::identity(indiscrete());
  EXPECT_EQ(abstract_weak_elements(g).blocks.size(), 1u);
  auto labelled = Decomposition(indiscrete(), Partition::singletons(2), std::vector<std::string>{"x", "y"});
  EXPECT_EQ(abstract_weak_elements(labelled).blocks.size(), 2u);
  EXPECT_EQ(abstract_elements_decomp(labelled).blocks.size(), 1u);
}

TEST(Decomposition, QuasiRecurrentSet) {
  EXPECT_EQ(quasi_recurrent_set_decomp(chain3_merged()), set3({0}));
  EXPECT_EQ(quasi_recurrent_set_decomp(Decomposition::identity(vspace())), set3({0, 2}));
  EXPECT_TRUE(quasi_recurrent_set_decomp(Decomposition::identity(FiniteSpace::from_relation(3, {}))).all());
}

TEST(Decomposition, MorseHyperGraph) {
  auto hg = morse_hypergraph_decomp(chain3_merged());
  ASSERT_EQ(hg.vertices, (std::vector<PointSet>{set3({0})}));
  EXPECT_EQ(hg.hyper_edges.at({0}), set3({1, 2}));

  auto v = morse_hypergraph_decomp(Decomposition::identity(vspace()));
  EXPECT_EQ(v, morse_hypergraph(vspace()));
  EXPECT_EQ(v.vertices.size(), 2u);
  EXPECT_EQ(v.hyper_edges.size(), 1u);

  EXPECT_TRUE(theorem_quotient_check_decomp(chain3_merged()).ok());
  auto closed = Decomposition::identity(FiniteSpace::from_relation(3, {}));
  EXPECT_TRUE(morse_hypergraph_decomp(closed).hyper_edges.empty());
  EXPECT_TRUE(theorem_quotient_check_decomp(closed).ok());
}

TEST(Decomposition, MorseHyperGraphOfFamilies) {
  auto f = chain3_merged();
  auto q = quasi_recurrent_set_decomp(f);
  auto m = connected_components(f.space(), closure(f.space(), q)).blocks;
  EXPECT_TRUE(morse_hypergraph_of_M(f, m).ok());

  auto covering = morse_hypergraph_of_M(f, {full_set(3)});
  ASSERT_TRUE(covering.ok());
  EXPECT_TRUE(covering.graph->hyper_edges.empty());

  auto missing = morse_hypergraph_of_M(f, {set3({1, 2})});
  ASSERT_FALSE(missing.ok());
  EXPECT_EQ(missing.failures[0].point, 0u);
  EXPECT_EQ(missing.failures[0].reason, UnassignablePoint::Reason::empty_derived_set);

  EXPECT_THROW(morse_hypergraph_of_M(f, {set3({1})}), InputError);
}

TEST(DecompositionProperty, InvariantAgainstOracle) {
  for (std::uint64_t t = 0; t < 400; ++t) {
    Rng rng(derive_seed(21, t));
    auto f = random_invariant_decomposition(rng, 8);
    auto o = testing::oracle_of(f.space());
    oracle::Decomp od(o, testing::to_masks(f.blocks()));
    ASSERT_TRUE(od.invariant()) << "trial " << t;
    ASSERT_TRUE(od.closures_saturated());

    auto fam = saturated_family(f);
    EXPECT_EQ(testing::to_masks(fam.sets).size(), od.saturated_opens().size());
    EXPECT_TRUE(fam.is_topology);
    auto space = decomposition_space(f);
    EXPECT_EQ(space.quotient_open_count, od.quotient_opens().size());
    EXPECT_TRUE(space.bijection_holds.value_or(false));

    auto c = classify_elements(f);
    auto oc = od.classify();
    ASSERT_EQ(to_mask(c.closed), oc.closed);
    ASSERT_EQ(to_mask(c.proper_nonclosed), oc.proper);
    ASSERT_EQ(to_mask(c.nonproper), oc.nonproper);
    ASSERT_EQ(to_mask(c.maximal), oc.maximal);
    ASSERT_EQ(to_mask(c.quasi_recurrent), oc.quasi);
    EXPECT_EQ(to_mask(quasi_recurrent_set_decomp(f)), oc.quasi);

    EXPECT_EQ(sorted_masks(abstract_elements_decomp(f).blocks.blocks), od.strong_elements());
    std::size_t largest = 0;
    for (const auto& b : f.blocks()) largest = std::max(largest, b.count());
    if (largest <= 6) {
      EXPECT_EQ(sorted_masks(abstract_weak_elements(f).blocks.blocks), od.weak_elements());
    }

    auto hg = morse_hypergraph_decomp(f);
    auto og = od.hypergraph();
    ASSERT_EQ(testing::to_masks(hg.vertices), og.vertices);
    ASSERT_EQ(testing::edge_masks(hg), og.edges);
    EXPECT_TRUE(oracle::quotient_of(og, od.strong_elements()));
    EXPECT_TRUE(oracle::quotient_of(og, od.weak_elements()));
    EXPECT_TRUE(theorem_quotient_check_decomp(f).ok());
  }
}

TEST(DecompositionProperty, ArbitraryAgainstOracle) {
  std::size_t invariant = 0;
  for (std::uint64_t t = 0; t < 400; ++t) {
    Rng rng(derive_seed(22, t));
    auto f = random_decomposition(rng, 8);
    auto o = testing::oracle_of(f.space());
    oracle::Decomp od(o, testing::to_masks(f.blocks()));
    const bool expect = od.invariant();
    invariant += expect;
    ASSERT_EQ(is_invariant(f).invariant, expect) << "trial " << t;
    EXPECT_EQ(od.closures_saturated(), expect);
    auto eq = invariance_equivalence_check(f);
    EXPECT_TRUE(eq.agrees());
    EXPECT_EQ(eq.invariant, expect);
    auto fam = saturated_family(f);
    EXPECT_EQ(fam.within_topology, expect);
    if (!expect) {
      EXPECT_THROW(abstract_elements_decomp(f), NotInvariant);
    }
    // The quasi-recurrent set is defined without invariance.
    EXPECT_EQ(to_mask(quasi_recurrent_set_decomp(f)), od.classify().quasi);
  }
  EXPECT_GT(invariant, 0u);
  EXPECT_LT(invariant, 400u);
}

}  // namespace
}  // namespace fintop
