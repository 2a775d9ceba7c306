#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "classpoly/csp.hpp"
#include "classpoly/group.hpp"
#include "classpoly/histogram.hpp"
#include "oracles.hpp"

using namespace classpoly;

namespace {

ClassHistogram hist(std::initializer_list<std::pair<int, int>> entries) {
  ClassHistogram h;
  for (auto [s, c] : entries) h.add(s, c);
  return h;
}

GroupElement random_element(const GraphicalGroup& g, std::mt19937& rng) {
  GroupElement e = g.identity();
  for (auto& v : e.x) v = static_cast<int>(rng() % g.ring().order());
  for (auto& v : e.z) v = static_cast<int>(rng() % g.ring().order());
  return e;
}

std::vector<GroupRing> rings() {
  return {GroupRing::field(2), GroupRing::field(3), GroupRing::field(4), GroupRing::integers_mod(4),
          GroupRing::integers_mod(6)};
}

}  // namespace

TEST(GroupRing, Tables) {
  for (int n = 2; n <= 9; ++n) {
    auto r = GroupRing::integers_mod(n);
    EXPECT_EQ(r.order(), n);
    EXPECT_TRUE(r.check_axioms());
    EXPECT_EQ(r.name(), "Z/" + std::to_string(n));
  }
  for (int q : {2, 3, 4, 5, 7, 8, 9}) EXPECT_TRUE(GroupRing::field(q).check_axioms());
  EXPECT_EQ(GroupRing::field(4).name(), "F4");
  EXPECT_THROW(GroupRing::integers_mod(1), std::invalid_argument);
  EXPECT_THROW(GroupRing::integers_mod(10), std::invalid_argument);
  EXPECT_THROW(GroupRing::field(6), std::invalid_argument);
}

TEST(Group, LawExamples) {
  GraphicalGroup k2(complete(2), GroupRing::field(2));
  auto prod = k2.mul(k2.vertex_element(1, 1), k2.vertex_element(0, 1));
  EXPECT_EQ(prod, (GroupElement{{1, 1}, {1}}));
  GraphicalGroup p4(path(4), GroupRing::field(5));
  for (int e = 0; e < p4.edge_count(); ++e) {
    auto [i, j] = p4.graph().edges()[e];
    EXPECT_EQ(p4.commutator(p4.vertex_element(i, 1), p4.vertex_element(j, 1)), p4.edge_element(e, 1));
  }
  std::mt19937 rng(1);
  auto a = random_element(p4, rng);
  EXPECT_EQ(p4.mul(a, p4.identity()), a);
  EXPECT_THROW(p4.mul(a, k2.identity()), std::invalid_argument);
  EXPECT_THROW(p4.inv(k2.identity()), std::invalid_argument);
}

TEST(Group, Inverses) {
  GraphicalGroup p4(path(4), GroupRing::field(3));
  GroupElement central = p4.identity();
  central.z = {1, 2, 1};
  GroupElement expected = p4.identity();
  expected.z = {2, 1, 2};
  EXPECT_EQ(p4.inv(central), expected);
  GraphicalGroup k2(complete(2), GroupRing::field(3));
  GroupElement a{{1, 1}, {0}};
  GroupElement ai = k2.inv(a);
  EXPECT_EQ(k2.mul(a, ai), k2.identity());
  EXPECT_EQ(k2.mul(ai, a), k2.identity());
  EXPECT_EQ(ai.x, (std::vector<int>{2, 2}));
  GraphicalGroup k3(complete(3), GroupRing::field(2));
  for (std::uint64_t code = 0; code < 64; ++code) {
    auto g = k3.decode(code);
    EXPECT_EQ(k3.inv(k3.inv(g)), g);
  }
}

TEST(Group, AxiomsOnRandomSamples) {
  std::mt19937 rng(2);
  for (const auto& ring : rings())
    for (int n = 1; n <= 4; ++n)
      for (const auto& g : all_labeled_graphs(n)) {
        GraphicalGroup grp(g, ring);
        const int R = ring.order();
        for (int t = 0; t < 40; ++t) {
          auto a = random_element(grp, rng), b = random_element(grp, rng), c = random_element(grp, rng);
          ASSERT_EQ(grp.mul(grp.mul(a, b), c), grp.mul(a, grp.mul(b, c)));
          ASSERT_EQ(grp.mul(a, grp.inv(a)), grp.identity());
          ASSERT_EQ(grp.mul(grp.identity(), a), a);
          // Edge part is central.
          GroupElement z = grp.identity();
          z.z = c.z;
          ASSERT_EQ(grp.mul(z, a), grp.mul(a, z));
          // Increasing-index products of vertex generators are plain sums.
          GroupElement prod = grp.identity();
          for (int i = 0; i < n; ++i) prod = grp.mul(prod, grp.vertex_element(i, a.x[i]));
          GroupElement plain = grp.identity();
          plain.x = a.x;
          ASSERT_EQ(prod, plain);
        }
        for (int e = 0; e < grp.edge_count(); ++e) {
          auto [i, j] = g.edges()[e];
          int r = static_cast<int>(rng() % R), s = static_cast<int>(rng() % R);
          GroupElement expected = grp.identity();
          expected.x[i] = r;
          expected.x[j] = s;
          expected.z[e] = ring.neg(ring.mul(r, s));
          ASSERT_EQ(grp.mul(grp.vertex_element(j, s), grp.vertex_element(i, r)), expected);
        }
      }
}

TEST(Group, CommuteIffBracketVanishes) {
  std::mt19937 rng(3);
  for (int q : {2, 3, 4, 5}) {
    GraphicalGroup grp(complete_bipartite(2, 2), GroupRing::field(q));
    for (int t = 0; t < 2000; ++t) {
      auto a = random_element(grp, rng), b = random_element(grp, rng);
      if (t % 3 == 0)
        for (std::size_t i = 0; i < b.x.size(); ++i) b.x[i] = grp.ring().mul(a.x[i], static_cast<int>(rng() % q));
      bool commute = grp.mul(a, b) == grp.mul(b, a);
      bool symmetric = grp.cocycle(a.x, b.x) == grp.cocycle(b.x, a.x);
      bool zero = grp.bracket(a.x, b.x) == std::vector<int>(grp.edge_count(), 0);
      ASSERT_EQ(commute, symmetric);
      ASSERT_EQ(commute, zero);
    }
  }
}

TEST(Group, Encoding) {
  GraphicalGroup grp(path(3), GroupRing::integers_mod(6));
  EXPECT_EQ(grp.order(), Integer(7776));
  std::set<std::uint64_t> codes;
  for (std::uint64_t code = 0; code < 7776; code += 7) {
    auto g = grp.decode(code);
    ASSERT_TRUE(grp.is_valid(g));
    ASSERT_EQ(grp.encode(g), code);
  }
}

TEST(Group, CentreAndCommutatorSubgroup) {
  for (const auto& ring : {GroupRing::field(2), GroupRing::field(3), GroupRing::integers_mod(4)})
    for (int n = 1; n <= 3; ++n)
      for (const auto& g : all_labeled_graphs(n)) {
        GraphicalGroup grp(g, ring);
        std::set<std::uint64_t> centre;
        for (const auto& e : center_by_search(grp)) centre.insert(grp.encode(e));
        std::set<std::uint64_t> expected;
        std::set<std::uint64_t> edges_only;
        for (std::uint64_t code = 0; code < grp.order(); ++code) {
          auto e = grp.decode(code);
          bool vertex_part_isolated = true;
          for (int v = 0; v < n; ++v)
            if (e.x[v] != 0 && g.degree(v) > 0) vertex_part_isolated = false;
          if (vertex_part_isolated) expected.insert(code);
          if (std::all_of(e.x.begin(), e.x.end(), [](int v) { return v == 0; })) edges_only.insert(code);
        }
        ASSERT_EQ(centre, expected);
        std::set<std::uint64_t> derived;
        for (const auto& e : commutator_subgroup_by_search(grp)) derived.insert(grp.encode(e));
        ASSERT_EQ(derived, edges_only);
      }
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_class_histogram(complete(2), GroupRing::field(2)), hist({{1, 2}, {2, 3}}));
  EXPECT_EQ(brute_force_class_histogram(complete(2), GroupRing::field(2)).class_number(), 5);
  for (int n = 1; n <= 4; ++n)
    for (const auto& ring : {GroupRing::field(3), GroupRing::integers_mod(4)}) {
      ClassHistogram abelian;
      abelian.add(1, ipow(ring.order(), n));
      EXPECT_EQ(brute_force_class_histogram(edgeless(n), ring), abelian);
    }
  auto p3 = brute_force_class_histogram(path(3), GroupRing::field(2));
  EXPECT_EQ(p3, hist({{1, 4}, {2, 6}, {4, 4}}));
  EXPECT_EQ(p3.mass(), 32);
}

TEST(BruteForce, Budget) {
  BruteForceOptions small;
  small.budget_elements = 1000;
  EXPECT_THROW(brute_force_class_histogram(complete(4), GroupRing::field(3), small), BudgetError);
}

TEST(BruteForce, OrbitModesAgree) {
  BruteForceOptions all;
  all.mode = OrbitMode::kAllElements;
  BruteForceOptions gens;
  gens.mode = OrbitMode::kGenerators;
  for (const auto& ring : {GroupRing::field(2), GroupRing::field(3), GroupRing::integers_mod(4)})
    for (int n = 1; n <= 3; ++n)
      for (const auto& g : all_labeled_graphs(n))
        ASSERT_EQ(brute_force_class_histogram(g, ring, all), brute_force_class_histogram(g, ring, gens));
}

TEST(BruteForce, MatchesCentraliserOracle) {
  for (int p : {2, 3})
    for (int n = 1; n <= 3; ++n)
      for (const auto& g : all_labeled_graphs(n)) {
        if (n + g.size() > 5) continue;
        ASSERT_EQ(brute_force_class_histogram(g, GroupRing::integers_mod(p)), oracle::centraliser_histogram(g, p));
      }
}

TEST(Lie, Examples) {
  EXPECT_EQ(lie_class_histogram(complete(3), 2), hist({{1, 8}, {4, 14}}));
  EXPECT_EQ(lie_class_histogram(star(3), 2), hist({{1, 8}, {2, 28}, {8, 8}}));
  // Centre of order q^3 and (q^3 - 1) q classes of size q^2.
  EXPECT_EQ(lie_class_histogram(complete(3), 3), hist({{1, 27}, {9, 78}}));
  EXPECT_EQ(oracle::centraliser_histogram(complete(3), 3), hist({{1, 27}, {9, 78}}));
  EXPECT_THROW(lie_class_histogram(complete(6), 7, 1e6), BudgetError);
}

TEST(Lie, AgreesWithBruteForce) {
  for (int q : {2, 3})
    for (int n = 1; n <= 3; ++n)
      for (const auto& g : all_labeled_graphs(n))
        ASSERT_EQ(lie_class_histogram(g, q), brute_force_class_histogram(g, GroupRing::field(q)));
}

TEST(Zeta, Identity) {
  auto z = class_zeta(lie_class_histogram(complete(2), 2));
  ASSERT_EQ(z.terms.size(), 2U);
  EXPECT_EQ(z.terms[0], (std::pair<Integer, Integer>{1, 2}));
  EXPECT_EQ(z.terms[1], (std::pair<Integer, Integer>{2, 3}));
  auto d = class_zeta(lie_class_histogram(edgeless(3), 5));
  ASSERT_EQ(d.terms.size(), 1U);
  EXPECT_EQ(d.terms[0].second, 125);
  for (int q : {2, 3, 4, 5})
    for (int n = 1; n <= 3; ++n)
      for (const auto& g : all_labeled_graphs(n)) ASSERT_TRUE(zeta_identity_check(g, q));
}

TEST(Crt, Examples) {
  auto cmp = crt_compare(complete(2), 2, 3);
  EXPECT_TRUE(cmp.match());
  EXPECT_EQ(cmp.direct, hist({{1, 6}, {2, 9}, {3, 16}, {6, 24}}));
  EXPECT_EQ(cmp.direct.class_number(), 55);
  EXPECT_TRUE(crt_multiplicativity_check(path(3), 2, 3));
  EXPECT_THROW(crt_compare(complete(2), 2, 1), std::invalid_argument);
  EXPECT_THROW(crt_compare(complete(2), 2, 4), std::invalid_argument);
  EXPECT_THROW(crt_compare(complete(2), 2, 5), std::invalid_argument);
  for (int n = 1; n <= 3; ++n) {
    auto d = crt_compare(edgeless(n), 2, 3);
    ClassHistogram abelian;
    abelian.add(1, ipow(6, n));
    EXPECT_EQ(d.direct, abelian);
    EXPECT_TRUE(d.match());
  }
}
