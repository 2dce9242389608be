#include "bicirc/coset.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "bicirc/aut.hpp"
#include "bicirc/blocks.hpp"
#include "bicirc/graph.hpp"
#include "bicirc/group.hpp"
#include "bicirc/perm.hpp"
#include "support/builders.hpp"

namespace {

using bicirc::coset_action;
using bicirc::coset_graph;
using bicirc::coset_valence;
using bicirc::CosetGraphSpec;
using bicirc::core_free;
using bicirc::exists_order_n_witness;
using bicirc::Graph;
using bicirc::Group;
using bicirc::lemma_cond_eval;
using bicirc::LemmaCondReport;
using bicirc::parse_perm;
using bicirc::Perm;
using testsup::cycle_graph;
using testsup::petersen;

Group s5() {
  return Group(5, {parse_perm("(1,2)", 5), parse_perm("(1,2,3,4,5)", 5)});
}

Group s4() {
  return Group(4, {parse_perm("(1,2)", 4), parse_perm("(1,2,3,4)", 4)});
}

// Stabiliser of the pair {3,4} in the natural S5: S3 x S2, order 12.
Group pair_stab() {
  return Group(5, {parse_perm("(1,2,3)", 5), parse_perm("(1,2)", 5),
                   parse_perm("(4,5)", 5)});
}

Perm rotation(int n, int step) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + step) % n;
  return Perm(std::move(img));
}

// Lift of sigma in S5 to the 10 sorted pairs, in pair_domain order.
Perm pair_perm(const Perm& sigma) {
  auto dom = bicirc::pair_domain(5);
  std::map<std::pair<int, int>, int> index;
  for (std::size_t i = 0; i < dom.size(); ++i) index[dom[i]] = i;
  std::vector<int> img(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    auto [a, b] = dom[i];
    img[i] = index.at(std::minmax(sigma[a], sigma[b]));
  }
  return Perm(std::move(img));
}

// The triangular graph: pairs from a 5-set, adjacent when they intersect.
Graph t5() {
  auto dom = bicirc::pair_domain(5);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < dom.size(); ++i)
    for (std::size_t j = i + 1; j < dom.size(); ++j) {
      auto [a, b] = dom[i];
      auto [c, d] = dom[j];
      if (a == c || a == d || b == c || b == d) edges.emplace_back(i, j);
    }
  return Graph(10, edges);
}

TEST(CoreFree, TrivialAndNormalSubgroups) {
  EXPECT_TRUE(core_free(s4(), Group(4)));
  Group a4(4, {parse_perm("(1,2,3)", 4), parse_perm("(2,3,4)", 4)});
  EXPECT_FALSE(core_free(s4(), a4));
  Group z6(6, {rotation(6, 1)});
  EXPECT_FALSE(core_free(z6, Group(6, {rotation(6, 3)})));
  EXPECT_THROW(core_free(Group(3, {parse_perm("(1,2,3)", 3)}),
                         Group(3, {parse_perm("(1,2)", 3)})),
               std::invalid_argument);
}

TEST(CoreFree, PairStabiliserInS5) {
  Group g = s5();
  Group h = pair_stab();
  EXPECT_EQ(h.order(), 12u);
  EXPECT_TRUE(core_free(g, h));
  // Independent check: the coset action is faithful exactly when the core
  // is trivial, and a faithful image keeps the full order.
  EXPECT_EQ(coset_action(g, h).order(), 120u);
}

TEST(CosetGraph, TrivialSubgroupGivesCayleyGraph) {
  Group z6(6, {rotation(6, 1)});
  Graph g = coset_graph({z6, Group(6), rotation(6, 1)});
  EXPECT_EQ(g, cycle_graph(6));  // cosets sort as rot0 < rot1 < ... < rot5
}

TEST(CosetGraph, TransposedSubgroupInS3GivesTriangle) {
  Group g3(3, {parse_perm("(1,2)", 3), parse_perm("(1,2,3)", 3)});
  Group h(3, {parse_perm("(1,2)", 3)});
  Graph k3 = coset_graph({g3, h, parse_perm("(1,2,3)", 3)});
  EXPECT_EQ(k3.vertex_count(), 3);
  EXPECT_EQ(k3.edge_count(), 3);
  EXPECT_EQ(coset_valence({g3, h, parse_perm("(1,2,3)", 3)}), 2);
}

TEST(CosetGraph, PairActionModelReproducesTriangularGraph) {
  Group pairs = bicirc::induced_action_on_pairs(s5());
  Group h = bicirc::stabilizer(pairs, 0);
  ASSERT_EQ(h.order(), 12u);
  ASSERT_TRUE(core_free(pairs, h));

  Perm g = pair_perm(parse_perm("(1,2,3,4,5)", 5));
  Graph reference = t5();
  ASSERT_TRUE(reference.adjacent(0, g[0]));  // {0,1} meets {1,2}

  CosetGraphSpec spec{pairs, h, g};
  Graph cos = coset_graph(spec);
  EXPECT_EQ(coset_valence(spec), 6);
  EXPECT_TRUE(bicirc::is_isomorphic(cos, bicirc::complement(petersen())));

  // Explicit form of the isomorphism: Hx -> 0^x, checked edge by edge.
  auto cosets = bicirc::right_cosets(pairs, h);
  std::vector<int> phi(cosets.size());
  std::vector<bool> hit(10, false);
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    phi[i] = cosets[i][0][0];
    hit[phi[i]] = true;
  }
  EXPECT_TRUE(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j)
      EXPECT_EQ(cos.adjacent(i, j), reference.adjacent(phi[i], phi[j]));
}

TEST(CosetGraph, RightMultiplicationActsAsAutomorphisms) {
  Group pairs = bicirc::induced_action_on_pairs(s5());
  Group h = bicirc::stabilizer(pairs, 0);
  Graph cos = coset_graph({pairs, h, pair_perm(parse_perm("(1,2,3,4,5)", 5))});
  Group action = coset_action(pairs, h);
  for (const Perm& p : action.generators())
    EXPECT_TRUE(bicirc::is_automorphism(cos, p));
  EXPECT_EQ(bicirc::orbit(action, 0).size(), 10u);  // vertex-transitive
}

TEST(CosetGraph, RejectsDegenerateSpecs) {
  Group g3(3, {parse_perm("(1,2)", 3), parse_perm("(1,2,3)", 3)});
  Group h(3, {parse_perm("(1,2)", 3)});
  // g inside H: every coset would carry a loop.
  EXPECT_THROW(coset_graph({g3, h, parse_perm("(1,2)", 3)}),
               std::invalid_argument);
  // Normal subgroup: not core-free.
  Group z6(6, {rotation(6, 1)});
  EXPECT_THROW(coset_graph({z6, Group(6, {rotation(6, 3)}), rotation(6, 1)}),
               std::invalid_argument);
  // g outside the ambient group.
  Group z3(3, {parse_perm("(1,2,3)", 3)});
  EXPECT_THROW(coset_graph({z3, Group(3), parse_perm("(1,2)", 3)}),
               std::invalid_argument);
}

TEST(CosetValence, TrivialSubgroupFormula) {
  Group z2(2, {parse_perm("(1,2)", 2)});
  EXPECT_EQ(coset_valence({z2, Group(2), parse_perm("(1,2)", 2)}), 1);
  Group z6(6, {rotation(6, 1)});
  EXPECT_EQ(coset_valence({z6, Group(6), rotation(6, 1)}), 2);
}

TEST(CosetValence, MatchesGraphValenceOnRandomSpecs) {
  std::mt19937 rng(740);
  std::vector<Group> ambients = {
      s4(), s5(),
      Group(6, {parse_perm("(1,2,3)", 6), parse_perm("(1,2)", 6),
                parse_perm("(4,5,6)", 6), parse_perm("(4,5)", 6)})};
  int accepted = 0;
  for (int trial = 0; accepted < 30 && trial < 500; ++trial) {
    const Group& g = ambients[rng() % ambients.size()];
    const auto& els = g.elements();
    Group h = bicirc::group_closure({els[rng() % els.size()]});
    if (h.order() == g.order() || !core_free(g, h)) continue;
    const Perm& x = els[rng() % els.size()];
    if (h.contains(x)) continue;
    CosetGraphSpec spec{g, h, x};
    Graph built = coset_graph(spec);
    int valence = coset_valence(spec);
    for (int v = 0; v < built.vertex_count(); ++v)
      EXPECT_EQ(built.degree(v), valence);
    ++accepted;
  }
  EXPECT_EQ(accepted, 30);
}

// For every vertex- and edge-transitive corpus graph, rebuilding from a
// stabiliser and one adjacency witness reproduces the graph, and the
// rebuilt-to-original map Hx -> v^x is itself the isomorphism.
TEST(CosetGraph, StabiliserRoundTripOnTransitiveCorpus) {
  std::vector<Graph> corpus = {cycle_graph(6), petersen(),
                               testsup::complete_graph(5),
                               testsup::generalized_petersen(4, 1)};
  for (const Graph& original : corpus) {
    Group aut = bicirc::automorphism_group(original);
    ASSERT_TRUE(bicirc::is_vertex_transitive(original, aut));
    ASSERT_TRUE(bicirc::is_edge_transitive(original, aut));
    Group h = bicirc::stabilizer(aut, 0);
    const Perm* g = nullptr;
    for (const Perm& p : aut.elements())
      if (original.adjacent(0, p[0])) {
        g = &p;
        break;
      }
    ASSERT_NE(g, nullptr);
    Graph rebuilt = coset_graph({aut, h, *g});
    auto cosets = bicirc::right_cosets(aut, h);
    int nv = original.vertex_count();
    ASSERT_EQ(rebuilt.vertex_count(), nv);
    std::vector<int> phi(nv);
    for (int i = 0; i < nv; ++i) phi[i] = cosets[i][0][0];
    std::vector<bool> hit(nv, false);
    for (int i = 0; i < nv; ++i) hit[phi[i]] = true;
    ASSERT_TRUE(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
    for (int i = 0; i < nv; ++i)
      for (int j = i + 1; j < nv; ++j)
        EXPECT_EQ(rebuilt.adjacent(i, j), original.adjacent(phi[i], phi[j]));
  }
}

TEST(Sabidussi, RotationGroupOfACycle) {
  Group rot(6, {rotation(6, 1)});
  auto s = bicirc::sabidussi_connection_set(cycle_graph(6), rot, 0);
  EXPECT_EQ(s, (std::vector<Perm>{rotation(6, 1), rotation(6, 5)}));
}

TEST(Sabidussi, KleinGroupOnK4) {
  Group klein(4, {parse_perm("(1,2)(3,4)", 4), parse_perm("(1,3)(2,4)", 4)});
  auto s =
      bicirc::sabidussi_connection_set(testsup::complete_graph(4), klein, 0);
  EXPECT_EQ(s.size(), 3u);  // every non-identity element
  for (const Perm& p : s) EXPECT_FALSE(p.is_identity());
}

TEST(Sabidussi, CirculantRoundTrip) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 10; ++i) {
    edges.emplace_back(i, (i + 1) % 10);
    edges.emplace_back(i, (i + 5) % 10);
  }
  Graph cay(10, edges);
  Group rot(10, {rotation(10, 1)});
  auto s = bicirc::sabidussi_connection_set(cay, rot, 0);
  EXPECT_EQ(s, (std::vector<Perm>{rotation(10, 1), rotation(10, 5),
                                  rotation(10, 9)}));
  // Cay(R, S) with edges {a, b} iff b a^-1 in S maps back onto the graph
  // under x -> 0^x.
  const auto& els = rot.elements();
  for (std::size_t a = 0; a < els.size(); ++a)
    for (std::size_t b = a + 1; b < els.size(); ++b) {
      bool in_s = std::binary_search(
          s.begin(), s.end(), bicirc::compose(els[b], bicirc::inverse(els[a])));
      EXPECT_EQ(cay.adjacent(els[a][0], els[b][0]), in_s);
    }
}

TEST(Sabidussi, RejectsNonRegularGroups) {
  EXPECT_THROW(bicirc::sabidussi_connection_set(
                   testsup::complete_graph(4), s4(), 0),
               std::invalid_argument);  // transitive but not free
  Group small(6, {rotation(6, 2)});
  EXPECT_THROW(bicirc::sabidussi_connection_set(cycle_graph(6), small, 0),
               std::invalid_argument);  // intransitive
  Group rot(6, {rotation(6, 1)});
  EXPECT_THROW(bicirc::sabidussi_connection_set(cycle_graph(6), rot, 9),
               std::invalid_argument);  // vertex out of range
}

TEST(LemmaCond, PetersenComplementModelSatisfiesCaseOne) {
  Group g = s5();
  Group h = pair_stab();
  LemmaCondReport r = lemma_cond_eval(g, h, parse_perm("(1,2,3,4,5)", 5));
  EXPECT_EQ(r.h_order, 12u);
  EXPECT_EQ(r.conj_meet, 2u);
  EXPECT_EQ(r.product_meet, 24u);
  EXPECT_TRUE(r.double_coset_symmetric);
  EXPECT_TRUE(r.case1);
  EXPECT_FALSE(r.case2);
}

TEST(LemmaCond, ConnectionElementInsideHIsDegenerate) {
  Group g = s5();
  Group h = pair_stab();
  LemmaCondReport r = lemma_cond_eval(g, h, parse_perm("(1,2)", 5));
  EXPECT_EQ(r.conj_meet, r.h_order);
  EXPECT_EQ(r.double_coset_size, r.h_order);
  EXPECT_EQ(r.product_meet, r.h_order);
  EXPECT_FALSE(r.case1);
  EXPECT_FALSE(r.case2);
}

TEST(LemmaCond, TrivialStabiliserNeverQualifies) {
  Group z5(5, {parse_perm("(1,2,3,4,5)", 5)});
  LemmaCondReport r =
      lemma_cond_eval(z5, Group(5), parse_perm("(1,2,3,4,5)", 5));
  EXPECT_EQ(r.h_order, 1u);
  EXPECT_EQ(r.conj_meet, 1u);
  EXPECT_EQ(r.product_meet, 1u);
  EXPECT_FALSE(r.double_coset_symmetric);  // {g} vs {g^-1}
  EXPECT_FALSE(r.case1);
  EXPECT_FALSE(r.case2);
}

TEST(LemmaCond, VerdictsAreConsistentWithTheSymmetryFlag) {
  std::mt19937 rng(5117);
  Group g = s5();
  Group h = pair_stab();
  const auto& els = g.elements();
  for (int trial = 0; trial < 40; ++trial) {
    LemmaCondReport r = lemma_cond_eval(g, h, els[rng() % els.size()]);
    EXPECT_FALSE(r.case1 && r.case2);
    if (r.case1) {
      EXPECT_TRUE(r.double_coset_symmetric);
    }
    if (r.case2) {
      EXPECT_FALSE(r.double_coset_symmetric);
    }
    EXPECT_EQ(r.double_coset_size % r.h_order, 0u);  // union of right cosets
  }
}

TEST(OrderNWitness, ExistsForThePairActionModel) {
  Group g = s5();
  Group h = pair_stab();
  auto w = exists_order_n_witness(g, h, 5);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(bicirc::order_of(w->witness), 5u);
  EXPECT_TRUE(w->report.case1);
  EXPECT_FALSE(w->inside_c.has_value());

  auto again = exists_order_n_witness(g, h, 5);
  EXPECT_EQ(w->witness, again->witness);  // deterministic scan

  Group c(5, {w->witness});
  auto labeled = exists_order_n_witness(g, h, 5, &c);
  ASSERT_TRUE(labeled->inside_c.has_value());
  EXPECT_TRUE(*labeled->inside_c);
  Group trivial(5);
  auto outside = exists_order_n_witness(g, h, 5, &trivial);
  EXPECT_FALSE(*outside->inside_c);
}

TEST(OrderNWitness, MatchesAManualScan) {
  Group g = s4();
  Group h(4, {parse_perm("(1,2)", 4), parse_perm("(1,2,3)", 4)});
  ASSERT_EQ(h.order(), 6u);
  auto w = exists_order_n_witness(g, h, 4);
  const Perm* expected = nullptr;
  for (const Perm& p : g.elements()) {
    if (bicirc::order_of(p) != 4) continue;
    LemmaCondReport r = lemma_cond_eval(g, h, p);
    if (r.case1 || r.case2) {
      expected = &p;
      break;
    }
  }
  EXPECT_EQ(w.has_value(), expected != nullptr);
  if (w && expected) {
    EXPECT_EQ(w->witness, *expected);
  }
}

TEST(OrderNWitness, NothingWhenOrderDoesNotDivide) {
  EXPECT_FALSE(exists_order_n_witness(s4(), Group(4), 5).has_value());
}

}  // namespace
