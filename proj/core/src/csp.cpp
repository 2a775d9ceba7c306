#include "classpoly/csp.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "classpoly/graph_io.hpp"

namespace classpoly {

SubsetTable& SubsetTable::operator+=(const SubsetTable& o) {
  if (o.n_ != n_) throw std::invalid_argument("SubsetTable: size mismatch");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += o.counts_[i];
  return *this;
}

namespace {

void reference_range(const Graph& g, std::uint64_t lo, std::uint64_t hi, SubsetTable& t) {
  for (std::uint64_t bits = lo; bits < hi; ++bits) {
    const VertexSet u(bits);
    const int nb = closed_neighborhood(g, u).size();
    t.add(u.size(), nb - component_count_induced(g, u));
  }
}

SubsetTable reference_table(const Graph& g, int threads) {
  const int n = g.order();
  const std::uint64_t total = std::uint64_t{1} << n;
  SubsetTable table(n, g.size());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(std::min<std::uint64_t>(total, 64))));
  if (threads == 1) {
    reference_range(g, 0, total, table);
    return table;
  }
  std::vector<SubsetTable> parts(threads, SubsetTable(n, g.size()));
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    const std::uint64_t lo = std::min(total, chunk * w);
    const std::uint64_t hi = std::min(total, lo + chunk);
    workers.emplace_back([&g, &parts, w, lo, hi] { reference_range(g, lo, hi, parts[w]); });
  }
  for (auto& th : workers) th.join();
  for (const auto& p : parts) table += p;
  return table;
}

SubsetTable gray_table(const Graph& g) {
  const int n = g.order();
  SubsetTable table(n, g.size());
  std::vector<int> cover(n, 0);
  std::vector<std::uint64_t> closed(n);
  for (int v = 0; v < n; ++v) closed[v] = g.neighbors(v).bits() | (std::uint64_t{1} << v);
  std::uint64_t u = 0;
  std::uint64_t nbh = 0;
  table.add(0, 0);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int flip = std::countr_zero(i);
    const std::uint64_t bit = std::uint64_t{1} << flip;
    if (u & bit) {
      for (auto b = closed[flip]; b != 0; b &= b - 1) {
        const int w = std::countr_zero(b);
        if (--cover[w] == 0) nbh &= ~(std::uint64_t{1} << w);
      }
    } else {
      for (auto b = closed[flip]; b != 0; b &= b - 1) {
        const int w = std::countr_zero(b);
        if (cover[w]++ == 0) nbh |= std::uint64_t{1} << w;
      }
    }
    u ^= bit;
    table.add(std::popcount(u), std::popcount(nbh) - component_count_induced(g, VertexSet(u)));
  }
  return table;
}

std::vector<XPoly> powers_of_x_minus_1(int n) {
  std::vector<XPoly> out;
  out.reserve(n + 1);
  out.emplace_back(1);
  const XPoly base = XPoly::x() - XPoly(1);
  for (int u = 1; u <= n; ++u) out.push_back(out.back() * base);
  return out;
}

}  // namespace

SubsetTable subset_table(const Graph& g, const EnumerationOptions& options) {
  check_subset_budget(g.order(), options.max_vertices);
  if (options.method == SubsetMethod::kReference) return reference_table(g, options.threads);
  return gray_table(g);
}

XYPoly C_from_table(const SubsetTable& t) {
  const int n = t.vertices();
  const auto pw = powers_of_x_minus_1(n);
  XYPoly out;
  for (int e = 0; e <= n; ++e) {
    XPoly coeff;
    for (int u = 0; u <= n; ++u)
      if (const auto k = t.count(u, e); k != 0) coeff += pw[u] * XPoly(Integer(k));
    out += XYPoly::from_x(coeff, e);
  }
  return out;
}

XYPoly compute_C(const Graph& g, const EnumerationOptions& options) { return C_from_table(subset_table(g, options)); }

XYPoly F_from_C(const XYPoly& c, int m) {
  XYPoly f = substitute_y_scaled(c, -1).times_x_power(m);
  if (!f.is_polynomial()) throw std::logic_error("class-size polynomial has a negative X exponent");
  return f;
}

XYPoly compute_F(const Graph& g, const EnumerationOptions& options) {
  return F_from_C(compute_C(g, options), g.size());
}

XPoly f_from_table(const SubsetTable& t) {
  const int n = t.vertices();
  const int m = t.edges();
  const auto pw = powers_of_x_minus_1(n);
  XPoly out;
  for (int u = 0; u <= n; ++u)
    for (int e = 0; e <= n; ++e)
      if (const auto k = t.count(u, e); k != 0) out += (pw[u] * XPoly(Integer(k))).times_x_power(m - e);
  return out;
}

XPoly compute_f(const Graph& g, const EnumerationOptions& options) { return f_from_table(subset_table(g, options)); }

namespace {

XPoly xp(int e) { return XPoly::monomial(1, e); }
XPoly xm1(int e) { return xp(e) - XPoly(1); }  // X^e - 1

int choose2(int n) { return n * (n - 1) / 2; }

void expect_params(std::span<const int> params, std::size_t count, int min_value, const char* family) {
  if (params.size() != count) throw std::invalid_argument(std::string(family) + ": wrong number of parameters");
  for (int p : params)
    if (p < min_value) throw std::invalid_argument(std::string(family) + ": parameter out of range");
}

}  // namespace

XPoly path_f_closed_form(int n) {
  if (n < 1) throw std::invalid_argument("path: n must be positive");
  XPoly out;
  const XPoly xm = XPoly::x() - XPoly(1);
  for (int a = 0; a <= n / 2; ++a) {
    const int k = n - a - 1;
    out += XPoly(binomial(n - a, a)) * xp(k) * pow(xm, a);
    out += XPoly(binomial(n - a - 1, a)) * xp(k) * pow(xm, a + 1);
  }
  return out;
}

ClosedForm closed_form(FamilyKind kind, std::span<const int> params) {
  ClosedForm cf;
  switch (kind) {
    case FamilyKind::kComplete: {
      expect_params(params, 1, 1, "complete");
      const int n = params[0];
      cf.C = XYPoly::from_x(xm1(n), n - 1) + XYPoly(1);
      cf.F = XYPoly::from_x(xp(choose2(n) + 1) - xp(choose2(n - 1)), n - 1) + XYPoly::from_x(xp(choose2(n)));
      cf.f = xp(choose2(n - 1)) * (xp(n) + xp(n - 1) - XPoly(1));
      return cf;
    }
    case FamilyKind::kEdgeless: {
      expect_params(params, 1, 1, "edgeless");
      const int n = params[0];
      cf.C = XYPoly::from_x(xp(n));
      cf.F = cf.C;
      cf.f = xp(n);
      return cf;
    }
    case FamilyKind::kStar: {
      expect_params(params, 1, 1, "star");
      const int n = params[0];
      cf.C = XYPoly::from_x(xp(n + 1) - xp(n), n) + XYPoly::from_x(xm1(n), 1) + XYPoly(1);
      cf.F = XYPoly::from_x(xp(n - 1)) *
             (XYPoly::from_x(xp(2) - xp(1), n) + XYPoly::from_x(xm1(n), 1) + XYPoly::from_x(xp(1)));
      cf.f = xp(n - 1) * (xp(n) + xp(2) - XPoly(1));
      return cf;
    }
    case FamilyKind::kCompleteBipartite: {
      expect_params(params, 2, 1, "complete_bipartite");
      const int a = params[0];
      const int b = params[1];
      cf.C = XYPoly(1) + XYPoly::from_x(xm1(a), b) + XYPoly::from_x(xm1(b), a) +
             XYPoly::from_x(xm1(a) * xm1(b), a + b - 1);
      cf.F = XYPoly::from_x(xp((a - 1) * (b - 1)) * xm1(a) * xm1(b), a + b - 1) +
             XYPoly::from_x(xp((a - 1) * b) * xm1(a), b) + XYPoly::from_x(xp(a * (b - 1)) * xm1(b), a) +
             XYPoly::from_x(xp(a * b));
      cf.f = xp((a - 1) * (b - 1)) *
             (xm1(a) * xm1(b) + xp(a - 1) * xm1(a) + xp(b - 1) * xm1(b) + xp(a + b - 1));
      return cf;
    }
    case FamilyKind::kPath: {
      expect_params(params, 1, 1, "path");
      cf.f = path_f_closed_form(params[0]);
      return cf;
    }
    case FamilyKind::kCycle:
      break;
  }
  throw std::invalid_argument("no closed form for family " + family_name(kind));
}

XYPoly union_C(const XYPoly& c1, const XYPoly& c2) { return c1 * c2; }

XYPoly join_C(const XYPoly& c1, int n1, const XYPoly& c2, int n2) {
  const XYPoly one(1);
  return one + (c1 - one).times_y_power(n2) + (c2 - one).times_y_power(n1) +
         XYPoly::from_x(xm1(n1) * xm1(n2), n1 + n2 - 1);
}

XPoly join_f(const XPoly& f1, int m1, int n1, const XPoly& f2, int m2, int n2) {
  return xp(m1 + m2 + n1 * n2) + xp(m2 + (n1 - 1) * n2) * (f1 - xp(m1)) +
         xp(m1 + n1 * (n2 - 1)) * (f2 - xp(m2)) + xp(m1 + m2 + (n1 - 1) * (n2 - 1)) * xm1(n1) * xm1(n2);
}

int eta_from_table(const SubsetTable& t) {
  int best = 0;  // U = empty
  for (int u = 0; u <= t.vertices(); ++u)
    for (int e = 0; e <= t.vertices(); ++e)
      if (t.count(u, e) != 0) best = std::max(best, u - e);
  return best;
}

int eta(const Graph& g, const EnumerationOptions& options) { return eta_from_table(subset_table(g, options)); }

int eta_via_dominating(const Graph& g, int max_vertices) {
  check_subset_budget(g.order(), max_vertices);
  const int n = g.order();
  const std::uint64_t total = std::uint64_t{1} << n;
  int best = 1 - n;  // U = V is always dominating
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    const VertexSet u(bits);
    if (!is_dominating(g, u)) continue;
    best = std::max(best, component_count_induced(g, u) + u.size() - n);
  }
  return best;
}

XPoly connected_domination_poly(const Graph& g) {
  XPoly out;
  for (const auto& d : connected_dominating_sets(g)) out.add_term(d.size(), 1);
  return out;
}

bool tree_leading_coeff_check(const Graph& tree) {
  const auto inv = graph_invariants(tree);
  if (!inv.is_tree) throw std::invalid_argument("tree_leading_coeff_check: input is not a tree");
  const int n = tree.order();
  if (n < 3) throw std::invalid_argument("tree_leading_coeff_check: needs at least 3 vertices");
  const XPoly expected = pow(XPoly::x() - XPoly(1), n - inv.leaves) * xp(inv.leaves);
  return compute_C(tree).coeff_y(n - 1) == expected;
}

GraphPolyReport make_report(const Graph& g, const EnumerationOptions& options, bool cross_check) {
  const auto table = subset_table(g, options);
  GraphPolyReport r;
  r.graph6 = encode_graph6(g);
  r.n = g.order();
  r.m = g.size();
  r.C = C_from_table(table);
  r.F = F_from_C(r.C, r.m);
  r.f = f_from_table(table);
  r.eta = eta_from_table(table);
  r.deg_f = r.f.degree().value();
  r.rank = matroid_rank(g);
  r.isolated = graph_invariants(g).isolated_count;
  if (cross_check) {
    const int other = eta_via_dominating(g, options.max_vertices);
    if (other != r.eta || r.deg_f != r.m + r.eta || eval_y(r.F, 1) != r.f) {
      throw std::logic_error("eta/degree cross-check failed for " + r.graph6);
    }
  }
  return r;
}

}  // namespace classpoly
