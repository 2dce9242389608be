#include "bicirc/blocks.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bicirc/aut.hpp"
#include "bicirc/graph.hpp"
#include "bicirc/group.hpp"
#include "support/builders.hpp"

using bicirc::all_minimal_block_systems;
using bicirc::Graph;
using bicirc::Group;
using bicirc::group_closure;
using bicirc::is_normal_block_system;
using bicirc::is_primitive;
using bicirc::kernel_of_action;
using bicirc::minimal_block;
using bicirc::parse_perm;
using bicirc::Perm;
using bicirc::VertexPartition;

namespace {

Group rotations(int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  return group_closure({Perm::from_cycles(n, {all})});
}

Group symmetric_group(int m) {
  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 0);
  return group_closure({Perm::from_cycles(m, {{0, 1}}), Perm::from_cycles(m, {all})});
}

}  // namespace

TEST(MinimalBlock, CyclicGroupSeeds) {
  Group c6 = rotations(6);
  EXPECT_EQ(minimal_block(c6, {0, 3}), (std::vector<int>{0, 3}));
  EXPECT_EQ(minimal_block(c6, {0, 2}), (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(minimal_block(c6, {0, 1}), (std::vector<int>{0, 1, 2, 3, 4, 5}));
}

TEST(MinimalBlock, PrimitiveGroupGivesWholeDomain) {
  Group a = bicirc::automorphism_group(bicirc::complement(testsup::petersen()));
  for (int x = 1; x < 10; ++x)
    EXPECT_EQ(minimal_block(a, {0, x}).size(), 10u);
  EXPECT_TRUE(is_primitive(a));
}

TEST(MinimalBlock, Errors) {
  Group c6 = rotations(6);
  EXPECT_THROW(minimal_block(c6, {0, 0}), std::invalid_argument);
  EXPECT_THROW(minimal_block(c6, {0, 6}), std::invalid_argument);
  Group intrans = group_closure({Perm::from_cycles(4, {{0, 1}})});
  EXPECT_THROW(minimal_block(intrans, {0, 2}), std::invalid_argument);
}

TEST(MinimalBlock, BlockAxioms) {
  // Every returned block B satisfies B^g in {B, disjoint} and |B| | n.
  Group c12 = rotations(12);
  for (int x = 1; x < 12; ++x) {
    auto block = minimal_block(c12, {0, x});
    EXPECT_EQ(12 % block.size(), 0u);
    for (const Perm& g : c12.elements()) {
      std::vector<int> image;
      for (int v : block) image.push_back(g[v]);
      std::sort(image.begin(), image.end());
      std::vector<int> meet;
      std::set_intersection(block.begin(), block.end(), image.begin(), image.end(),
                            std::back_inserter(meet));
      EXPECT_TRUE(meet.empty() || meet.size() == block.size());
    }
  }
}

TEST(BlockSystems, CyclicGroupHasPrimeRefinements) {
  auto systems = all_minimal_block_systems(rotations(6));
  ASSERT_EQ(systems.size(), 2u);
  EXPECT_EQ(systems[0].blocks.classes[0].size(), 2u);
  EXPECT_EQ(systems[0].blocks.classes.size(), 3u);
  EXPECT_EQ(systems[1].blocks.classes[0].size(), 3u);
  EXPECT_EQ(systems[1].blocks.classes.size(), 2u);
  // Rotations are abelian, so every system is normal with the kernel acting
  // regularly on each block.
  for (const auto& s : systems) EXPECT_TRUE(s.is_normal);
}

TEST(BlockSystems, PrimitiveGroupsHaveNone) {
  EXPECT_TRUE(all_minimal_block_systems(symmetric_group(5)).empty());
  EXPECT_TRUE(is_primitive(symmetric_group(5)));
  Group k6 = bicirc::automorphism_group(testsup::complete_graph(6));
  EXPECT_TRUE(is_primitive(k6));
}

TEST(BlockSystems, PrismHasSpokePairSystem) {
  Graph prism = testsup::generalized_petersen(5, 1);
  Group a = bicirc::automorphism_group(prism);
  auto systems = all_minimal_block_systems(a);
  bool has_spokes = false;
  for (const auto& s : systems)
    if (s.blocks.classes[0].size() == 2) has_spokes = true;
  EXPECT_TRUE(has_spokes);
}

TEST(KernelOfAction, Examples) {
  Group s4 = symmetric_group(4);
  VertexPartition singletons{{{0}, {1}, {2}, {3}}};
  EXPECT_TRUE(kernel_of_action(s4, singletons).is_trivial());
  VertexPartition whole{{{0, 1, 2, 3}}};
  EXPECT_EQ(kernel_of_action(s4, whole).order(), 24u);
}

TEST(KernelOfAction, CyclicOnTwoOrbitsOfFifteen) {
  // C15 on 30 points, partitioned by the orbits of its order-5 subgroup.
  std::vector<int> first(15), second(15);
  std::iota(first.begin(), first.end(), 0);
  std::iota(second.begin(), second.end(), 15);
  Group c = group_closure({Perm::from_cycles(30, {first, second})});
  Perm cube = compose(compose(c.generators()[0], c.generators()[0]), c.generators()[0]);
  Group sub = group_closure({cube});  // order 5
  VertexPartition pi{bicirc::orbits(sub)};
  ASSERT_EQ(pi.classes.size(), 6u);
  Group kernel = kernel_of_action(c, pi);
  EXPECT_EQ(kernel.order(), 5u);
  EXPECT_EQ(kernel.elements(), sub.elements());
  // The kernel acts regularly on every block (cover kernels do).
  for (const auto& cls : pi.classes) EXPECT_TRUE(bicirc::is_regular(kernel, cls));
}

TEST(KernelOfAction, RejectsNonInvariantPartition) {
  Group s4 = symmetric_group(4);
  VertexPartition pi{{{0, 1}, {2, 3}}};
  EXPECT_THROW(kernel_of_action(s4, pi), std::invalid_argument);
  EXPECT_THROW(is_normal_block_system(s4, pi), std::invalid_argument);
}

TEST(NormalSystems, OrbitsOfNormalSubgroup) {
  // D6 = <r, s> on the hexagon; the central rotation r^3 gives antipodal pairs.
  Perm r = Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}});
  Perm s = Perm::from_cycles(6, {{1, 5}, {2, 4}});
  Group d6 = group_closure({r, s});
  ASSERT_EQ(d6.order(), 12u);
  VertexPartition pairs{{{0, 3}, {1, 4}, {2, 5}}};
  auto check = is_normal_block_system(d6, pairs);
  EXPECT_TRUE(check.is_normal);
  ASSERT_TRUE(check.witness.has_value());
  EXPECT_EQ(check.witness->order(), 2u);
  EXPECT_TRUE(bicirc::normal_in(*check.witness, d6));
}

TEST(NormalSystems, CosetBlocksOfCoreFreeSubgroupAreNotNormal) {
  // D5 acting on itself by right translation; the coset blocks of a
  // reflection subgroup have trivial kernel, so no normal subgroup has them
  // as orbits.
  Perm r = parse_perm("(1,2,3,4,5)", 5);
  Perm s = parse_perm("(2,5)(3,4)", 5);
  Group d5 = group_closure({r, s});
  ASSERT_EQ(d5.order(), 10u);
  const auto& elems = d5.elements();
  auto index_of = [&](const Perm& p) {
    return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), p) -
                            elems.begin());
  };
  // Right translation by each generator, as a permutation of element indices.
  auto translation = [&](const Perm& g) {
    std::vector<int> img(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i)
      img[i] = index_of(compose(elems[i], g));
    return Perm(img);
  };
  Group regular = group_closure({translation(r), translation(s)});
  ASSERT_EQ(regular.order(), 10u);

  Group h = group_closure({s});
  VertexPartition cosets;
  for (const auto& coset : bicirc::right_cosets(d5, h)) {
    std::vector<int> cls;
    for (const Perm& p : coset) cls.push_back(index_of(p));
    std::sort(cls.begin(), cls.end());
    cosets.classes.push_back(std::move(cls));
  }
  ASSERT_EQ(cosets.classes.size(), 5u);
  auto check = is_normal_block_system(regular, cosets);
  EXPECT_FALSE(check.is_normal);
  EXPECT_FALSE(check.witness.has_value());
  EXPECT_TRUE(kernel_of_action(regular, cosets).is_trivial());
}

TEST(NormalSystems, CrossOrbitSeedOnRookGraph) {
  // The rook's graph is in the d=6 family with half-order 8: sigma(i,j) =
  // (j+1, i) is semiregular with two orbits of 8. Its full automorphism
  // group is primitive, so the minimal block through a cross-orbit seed is
  // the whole domain and the induced one-class system is trivially normal.
  Graph rook = testsup::rook_4x4();
  std::vector<int> img(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) img[4 * i + j] = 4 * ((j + 1) % 4) + i;
  Perm sigma{img};
  bicirc::OrbitPair orbits;
  ASSERT_TRUE(bicirc::semiregular_with_two_equal_orbits(sigma, &orbits));
  EXPECT_EQ(orbits.first.size(), 8u);
  EXPECT_TRUE(bicirc::is_automorphism(rook, sigma));

  Group a = bicirc::automorphism_group(rook);
  EXPECT_TRUE(is_primitive(a));
  int cross = orbits.second[0];
  auto block = minimal_block(a, {orbits.first[0], cross});
  EXPECT_EQ(block.size(), 16u);
  auto check = is_normal_block_system(a, VertexPartition{{block}});
  EXPECT_TRUE(check.is_normal);
  EXPECT_EQ(check.witness->order(), 1152u);
}

TEST(Subdegrees, Examples) {
  // 2-transitive: {1, m-1}.
  EXPECT_EQ(bicirc::subdegrees(symmetric_group(5)), (std::vector<int>{1, 4}));
  EXPECT_EQ(bicirc::rank(symmetric_group(5)), 2);
  // Regular: all ones.
  EXPECT_EQ(bicirc::subdegrees(rotations(5)), (std::vector<int>{1, 1, 1, 1, 1}));
  EXPECT_EQ(bicirc::rank(rotations(5)), 5);
}

TEST(Subdegrees, AlternatingGroupOnPairs) {
  Group a5 = group_closure({parse_perm("(1,2,3)", 5), parse_perm("(1,2,3,4,5)", 5)});
  ASSERT_EQ(a5.order(), 60u);
  Group on_pairs = bicirc::induced_action_on_pairs(a5);
  EXPECT_EQ(bicirc::subdegrees(on_pairs), (std::vector<int>{1, 3, 6}));
  EXPECT_EQ(bicirc::rank(on_pairs), 3);
}

TEST(IsRegular, Examples) {
  EXPECT_TRUE(bicirc::is_regular(rotations(5), {0, 1, 2, 3, 4}));
  EXPECT_FALSE(bicirc::is_regular(symmetric_group(3), {0, 1, 2}));
}
