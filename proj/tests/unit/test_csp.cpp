#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "classpoly/csp.hpp"
#include "classpoly/graph_io.hpp"
#include "oracles.hpp"

using namespace classpoly;

namespace {

const XPoly X = XPoly::x();

XPoly xp(int c, int e) { return XPoly::monomial(c, e); }
XYPoly xy(const XPoly& p, int y) { return XYPoly::from_x(p, y); }

}  // namespace

TEST(Csp, PathOnThreeVertices) {
  Graph p3 = path(3);
  XYPoly c = XYPoly(1) + xy(X * X - XPoly(1), 1) + xy(xp(1, 3) - xp(1, 2), 2);
  EXPECT_EQ(compute_C(p3), c);
  XYPoly f_big = xy(X * X, 0) + xy(xp(1, 3) - X, 1) + xy(xp(1, 3) - xp(1, 2), 2);
  EXPECT_EQ(compute_F(p3), f_big);
  EXPECT_EQ(compute_f(p3), xp(2, 3) - X);
  EXPECT_EQ(c.deg_y(), Degree(2));
  EXPECT_EQ(c.coeff_y(2), xp(1, 3) - xp(1, 2));
  EXPECT_EQ(eval_x(f_big, 2), XPoly(4) * X * X + XPoly(6) * X + XPoly(4));
}

TEST(Csp, SmallFamilies) {
  EXPECT_EQ(compute_F(complete(2)), xy(X * X - XPoly(1), 1) + xy(X, 0));
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(compute_C(complete(n)), xy(xp(1, n) - XPoly(1), n - 1) + XYPoly(1));
    EXPECT_EQ(compute_C(edgeless(n)), xy(xp(1, n), 0));
    int c2 = n * (n - 1) / 2, c1 = (n - 1) * (n - 2) / 2;
    EXPECT_EQ(compute_F(complete(n)), xy(xp(1, c2 + 1) - xp(1, c1), n - 1) + xy(xp(1, c2), 0));
    EXPECT_EQ(compute_f(complete(n)), xp(1, c1) * (xp(1, n) + xp(1, n - 1) - XPoly(1)));
  }
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(compute_f(star(n)), xp(1, n - 1) * (xp(1, n) + xp(1, 2) - XPoly(1)));
}

TEST(Csp, ClosedFormsTranscribed) {
  std::vector<int> k22{2, 2};
  auto bip = closed_form(FamilyKind::kCompleteBipartite, k22);
  ASSERT_TRUE(bip.C && bip.F && bip.f);
  XYPoly xa = xy(xp(1, 2) - XPoly(1), 0);
  XYPoly expected = XYPoly(1) + xa * XYPoly::monomial(1, 0, 2) + XYPoly::monomial(1, 0, 2) * xa +
                    xa * xa * XYPoly::monomial(1, 0, 3);
  EXPECT_EQ(*bip.C, expected);
  EXPECT_EQ(path_f_closed_form(1), X);
  EXPECT_EQ(path_f_closed_form(2), X * X + X - XPoly(1));
  EXPECT_EQ(path_f_closed_form(3), xp(2, 3) - X);
  std::vector<int> p4{4};
  auto path_form = closed_form(FamilyKind::kPath, p4);
  EXPECT_FALSE(path_form.C.has_value());
  ASSERT_TRUE(path_form.f.has_value());
  std::vector<int> c5{5};
  EXPECT_THROW(closed_form(FamilyKind::kCycle, c5), std::invalid_argument);
}

TEST(Csp, MatchesNaiveOracle) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : all_labeled_graphs(n)) {
      ASSERT_EQ(compute_C(g), oracle::C(g)) << encode_graph6(g);
      ASSERT_EQ(compute_f(g), oracle::f(g)) << encode_graph6(g);
      ASSERT_EQ(eta(g), oracle::eta(g)) << encode_graph6(g);
    }
}

TEST(Csp, GrayCodeAgreesWithReference) {
  EnumerationOptions ref;
  ref.method = SubsetMethod::kReference;
  EnumerationOptions gray;
  gray.method = SubsetMethod::kGrayCode;
  EnumerationOptions threaded = ref;
  threaded.threads = 3;
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : all_labeled_graphs(n)) {
      auto t = subset_table(g, ref);
      ASSERT_EQ(subset_table(g, gray), t);
      if (n >= 5 && g.size() % 97 == 0) ASSERT_EQ(subset_table(g, threaded), t);
    }
  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Edge> edges;
    for (int j = 0; j < 14; ++j)
      for (int k = j + 1; k < 14; ++k)
        if (rng() % 3 == 0) edges.push_back({j, k});
    Graph g = Graph::build(14, edges);
    auto t = subset_table(g, ref);
    ASSERT_EQ(subset_table(g, gray), t);
    ASSERT_EQ(subset_table(g, threaded), t);
  }
}

TEST(Csp, EnumerationCap) {
  EnumerationOptions small;
  small.max_vertices = 5;
  EXPECT_THROW(compute_C(path(6), small), BudgetError);
  EXPECT_NO_THROW(compute_C(path(5), small));
  try {
    compute_C(complete(30));
    FAIL();
  } catch (const BudgetError& e) {
    EXPECT_GT(e.required(), e.budget());
  }
}

TEST(Csp, LabelInvariance) {
  std::mt19937 rng(12);
  for (int n = 2; n <= 6; ++n) {
    auto graphs = all_labeled_graphs(n);
    for (int trial = 0; trial < 60; ++trial) {
      const Graph& g = graphs[rng() % graphs.size()];
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      Graph h = relabel(g, perm);
      ASSERT_EQ(compute_C(h), compute_C(g));
      ASSERT_EQ(compute_F(h), compute_F(g));
    }
  }
}

TEST(Csp, ReportInvariants) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : all_labeled_graphs(n)) {
      auto r = make_report(g, {}, true);
      ASSERT_EQ(r.F, F_from_C(r.C, r.m));
      ASSERT_EQ(r.F, substitute_y_scaled(r.C, -1).times_x_power(r.m));
      ASSERT_TRUE(r.F.is_polynomial());
      ASSERT_EQ(eval_y(r.F, 1), r.f);
      ASSERT_EQ(r.deg_f, r.m + r.eta);
      ASSERT_EQ(r.C.deg_y(), Degree(r.rank));
    }
}

TEST(Csp, FFromCRejectsLaurent) {
  EXPECT_THROW(F_from_C(XYPoly::monomial(1, 0, 3), 1), std::logic_error);
}

TEST(Csp, UnionAndJoin) {
  XYPoly d1 = compute_C(edgeless(1));
  EXPECT_EQ(union_C(d1, d1), compute_C(edgeless(2)));
  XYPoly ck2 = compute_C(complete(2));
  EXPECT_EQ(union_C(ck2, ck2), compute_C(disjoint_union(complete(2), complete(2))));
  std::mt19937 rng(13);
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : all_labeled_graphs(n))
      ASSERT_EQ(compute_C(disjoint_union(g, edgeless(1))), compute_C(g) * XYPoly::monomial(1, 1, 0));
  EXPECT_EQ(join_C(d1, 1, d1, 1), XYPoly(1) + xy(X * X - XPoly(1), 1));
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) {
      std::vector<int> ab{a, b};
      EXPECT_EQ(join_C(compute_C(edgeless(a)), a, compute_C(edgeless(b)), b),
                *closed_form(FamilyKind::kCompleteBipartite, ab).C);
    }
  EXPECT_EQ(join_f(X, 0, 1, X, 0, 1), X * X + X - XPoly(1));
  for (int n = 4; n <= 9; ++n) {
    Graph g = join(edgeless(2), complete(n - 2));
    XPoly f = join_f(compute_f(edgeless(2)), 0, 2, compute_f(complete(n - 2)), (n - 2) * (n - 3) / 2, n - 2);
    EXPECT_EQ(f, compute_f(g));
    EXPECT_EQ(f.degree(), Degree(n * (n - 1) / 2));
  }
}

TEST(Csp, Eta) {
  for (int n = 2; n <= 10; ++n) EXPECT_EQ(eta(path(n)), 1);
  for (int n = 4; n <= 10; ++n) EXPECT_EQ(eta(star(n - 1)), n - 2);
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) EXPECT_EQ(eta(complete_bipartite(a, b)), std::max(1, std::abs(a - b)));
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(eta(complete(n)), 1);
    EXPECT_EQ(eta_via_dominating(complete(n)), 1);
  }
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : all_labeled_graphs(n)) ASSERT_EQ(eta_via_dominating(g), eta(g));
}

TEST(Csp, EtaAdditiveOverUnions) {
  std::mt19937 rng(14);
  auto g3 = all_labeled_graphs(3);
  auto g4 = all_labeled_graphs(4);
  for (const auto& a : g3)
    for (int k = 0; k < 8; ++k) {
      const Graph& b = g4[rng() % g4.size()];
      ASSERT_EQ(eta(disjoint_union(a, b)), eta(a) + eta(b));
    }
}

TEST(Csp, ConnectedDomination) {
  EXPECT_EQ(connected_domination_poly(path(3)), xp(1, 3) + xp(2, 2) + X);
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(connected_domination_poly(complete(n)), pow(X + XPoly(1), n) - XPoly(1));
  EXPECT_EQ(connected_domination_poly(edgeless(3)), XPoly());
  for (int n = 2; n <= 5; ++n)
    for (const auto& g : all_labeled_graphs(n))
      ASSERT_EQ(connected_domination_poly(g), shift_x(compute_C(g), 1).coeff_y(n - 1)) << encode_graph6(g);
}

TEST(Csp, TreeLeadingCoefficient) {
  EXPECT_EQ(compute_C(path(3)).coeff_y(2), (X - XPoly(1)) * xp(1, 2));
  EXPECT_EQ(compute_C(star(3)).coeff_y(3), (X - XPoly(1)) * xp(1, 3));
  EXPECT_EQ(compute_C(path(4)).coeff_y(3), (X - XPoly(1)) * (X - XPoly(1)) * xp(1, 2));
  EXPECT_TRUE(tree_leading_coeff_check(path(3)));
  EXPECT_TRUE(tree_leading_coeff_check(star(5)));
  EXPECT_THROW(tree_leading_coeff_check(cycle(4)), std::invalid_argument);
  EXPECT_THROW(tree_leading_coeff_check(complete(2)), std::invalid_argument);
}

TEST(Csp, ConstantAndLeadingTerms) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : all_labeled_graphs(n)) {
      XYPoly c = compute_C(g);
      int isolated = 0;
      for (int v = 0; v < n; ++v) isolated += g.degree(v) == 0;
      ASSERT_EQ(eval_y(c, 0), xp(1, isolated));
      ASSERT_EQ(eval_x(c, 1), XPoly(1));
      XYPoly shifted = shift_x(c, 1);
      ASSERT_EQ(shifted.deg_x(), Degree(n));
      ASSERT_EQ(shifted.coeff_y(matroid_rank(g)).coeff(n), 1);
      for (const auto& [m, k] : shifted.terms())
        if (m.x == n) ASSERT_EQ(m.y, matroid_rank(g));
    }
}

TEST(Csp, FAtZero) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : all_labeled_graphs(n)) {
      XPoly at0 = eval_x(compute_F(g), 0);
      bool matching = n % 2 == 0 && g.size() == n / 2 && is_matching_graph(g);
      int r = n / 2;
      ASSERT_EQ(at0, matching ? xp(r % 2 ? -1 : 1, r) : XPoly()) << encode_graph6(g);
    }
}
