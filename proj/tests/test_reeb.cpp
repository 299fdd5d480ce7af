#include <gtest/gtest.h>

#include <cmath>

#include "fintop/error.hpp"
#include "fintop/generate.hpp"
#include "fintop/reeb.hpp"

namespace fintop {
namespace {

TEST(LevelComponents, OctahedronEquator) {
  auto f = octahedron_field();
  auto comps = level_components(f, 0.05);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].size(), 6u);
  for (auto [u, v] : comps[0]) {
    EXPECT_LT(f.value(u), 0.05);
    EXPECT_GT(f.value(v), 0.05);
  }
  EXPECT_TRUE(level_components(f, 5.0).empty());
  EXPECT_THROW(level_components(f, 0.2), InputError);
}

TEST(LevelComponents, TorusMiddleBand) {
  auto f = torus_field();
  EXPECT_EQ(level_components(f, 0.0123).size(), 2u);
  EXPECT_EQ(level_components(f, 2.5).size(), 1u);
}

TEST(ReebGraph, Sphere) {
  auto g = reeb_graph(octahedron_field());
  ASSERT_EQ(g.nodes.size(), 2u);
  EXPECT_EQ(g.nodes[0].vertex, 5u);
  EXPECT_EQ(g.nodes[1].vertex, 4u);
  EXPECT_EQ(g.edges, (std::vector<IndexPair>{{0, 1}}));
  EXPECT_EQ(betti1(g), 0u);
  EXPECT_TRUE(same_reeb_graph(g, reeb_bruteforce(octahedron_field())));
}

TEST(ReebGraph, Torus) {
  auto f = torus_field();
  auto g = reeb_graph(f);
  ASSERT_EQ(g.nodes.size(), 4u);
  EXPECT_EQ(g.edges, (std::vector<IndexPair>{{0, 1}, {1, 2}, {1, 2}, {2, 3}}));
  EXPECT_EQ(betti1(g), 1u);
  EXPECT_EQ(g.component_count(), 1u);
  EXPECT_TRUE(same_reeb_graph(g, reeb_bruteforce(f)));
  EXPECT_TRUE(is_pl_morse(f));
}

TEST(ReebGraph, Triangle) {
  auto g = reeb_graph(triangle_field());
  EXPECT_EQ(g.nodes.size(), 2u);
  EXPECT_EQ(g.edges.size(), 1u);
  EXPECT_TRUE(same_reeb_graph(g, reeb_bruteforce(triangle_field())));
}

TEST(ReebGraph, DisconnectedComplex) {
  auto f = ScalarField::from_triangles(6, {{{0, 1, 2}}, {{3, 4, 5}}}, {0, 1, 2, 0.5, 1.5, 2.5});
  auto g = reeb_graph(f);
  EXPECT_EQ(g.nodes.size(), 4u);
  EXPECT_EQ(g.edges.size(), 2u);
  EXPECT_EQ(g.component_count(), 2u);
  EXPECT_TRUE(same_reeb_graph(g, reeb_bruteforce(f)));
}

TEST(ReebGraph, TiesBrokenByIndex) {
  auto f = ScalarField::from_triangles(3, {{{0, 1, 2}}}, {1.0, 1.0, 1.0});
  EXPECT_EQ(f.rank(0), 0u);
  EXPECT_EQ(f.rank(2), 2u);
  EXPECT_EQ(reeb_graph(f).nodes.size(), 2u);
}

TEST(ReebGraph, RejectsBadInput) {
  CombinatorialComplex loop({{"v", 0, {}}, {"e", 1, {}}}, std::vector<NamedPair>{{"v", "e"}});
  EXPECT_THROW(ScalarField::from_complex(loop, {0.0}), InputError);
  auto tetra = simplicial_from_maximal_faces({{1, 2, 3, 4}});
  EXPECT_THROW(ScalarField::from_complex(tetra, {0, 1, 2, 3}), InputError);
  auto tri = simplicial_from_maximal_faces({{1, 2, 3}});
  EXPECT_THROW(ScalarField::from_complex(tri, {0, 1}), InputError);
  EXPECT_NO_THROW(ScalarField::from_complex(tri, {0, 1, 2}));
  EXPECT_THROW(ScalarField::from_triangles(3, {{{0, 1, 5}}}, {0, 1, 2}), InputError);
}

TEST(ReebWeakElements, Fixtures) {
  auto sphere = reeb_weak_elements(octahedron_field());
  EXPECT_TRUE(sphere.passed);
  EXPECT_EQ(sphere.node_groups, 2u);
  EXPECT_EQ(sphere.edge_groups, 1u);

  // The two parallel arcs between the saddles are separate groups.
  auto torus = reeb_weak_elements(torus_field());
  EXPECT_TRUE(torus.passed);
  EXPECT_EQ(torus.node_groups, 4u);
  EXPECT_EQ(torus.edge_groups, 4u);

  auto tri = reeb_weak_elements(triangle_field());
  EXPECT_TRUE(tri.passed);
  EXPECT_EQ(tri.node_groups, 2u);
  EXPECT_EQ(tri.edge_groups, 1u);
}

TEST(ReebProperty, RandomFields) {
  const std::pair<ScalarField, std::size_t> meshes[] = {{octahedron_field(), 0}, {torus_field(), 1}};
  for (const auto& [mesh, genus] : meshes) {
    for (std::uint64_t t = 0; t < 100; ++t) {
      Rng rng(derive_seed(41 + genus, t));
      auto f = mesh.with_values(random_values(rng, mesh.vertex_count()));
      auto g = reeb_graph(f);
      ASSERT_TRUE(same_reeb_graph(g, reeb_bruteforce(f))) << "genus " << genus << " trial " << t;
      EXPECT_LE(betti1(g), genus);
      if (is_pl_morse(f)) {
        EXPECT_EQ(betti1(g), genus);
      }

      std::vector<double> warped;
      for (auto v : f.values()) warped.push_back(3 * std::exp(v) - 1);
      EXPECT_TRUE(same_reeb_graph(g, reeb_graph(f.with_values(warped))));
    }
  }
}

}  // namespace
}  // namespace fintop
