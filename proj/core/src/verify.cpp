#include "classpoly/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "classpoly/adjacency.hpp"
#include "classpoly/finite_field.hpp"
#include "classpoly/graph_io.hpp"
#include "classpoly/group.hpp"
#include "classpoly/histogram.hpp"
#include "classpoly/json_io.hpp"

namespace classpoly {

namespace {

using Json = nlohmann::json;

std::vector<Graph> graphs_in_range(int nmin, int nmax) {
  if (nmin < 1 || nmax < nmin) throw std::invalid_argument("need 1 <= nmin <= nmax");
  if (nmax > 6) throw std::invalid_argument("labelled graphs are enumerated for n <= 6 only");
  std::vector<Graph> out;
  for (int n = nmin; n <= nmax; ++n) {
    auto part = all_labeled_graphs(n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

struct PairScope {
  std::vector<Graph> graphs;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

// Ordered pairs (G1, G2) with nmin <= n1 + n2 <= nmax.
PairScope pairs_in_range(int nmin, int nmax) {
  if (nmax < 2) throw std::invalid_argument("pair suites need nmax >= 2");
  PairScope s;
  s.graphs = graphs_in_range(1, std::min(nmax - 1, 6));
  for (std::size_t i = 0; i < s.graphs.size(); ++i)
    for (std::size_t j = 0; j < s.graphs.size(); ++j) {
      int total = s.graphs[i].order() + s.graphs[j].order();
      if (total >= nmin && total <= nmax) s.pairs.emplace_back(i, j);
    }
  return s;
}

EnumerationOptions enumeration(const SuiteOptions& o) {
  EnumerationOptions e;
  e.max_vertices = o.budget_subset_vertices;
  return e;
}

std::string first_difference(const ClassHistogram& expected, const ClassHistogram& got) {
  std::vector<Integer> sizes;
  for (const auto& [s, c] : expected.entries()) sizes.push_back(s);
  for (const auto& [s, c] : got.entries()) sizes.push_back(s);
  std::sort(sizes.begin(), sizes.end());
  for (const auto& s : sizes)
    if (expected.count(s) != got.count(s))
      return "class size " + s.str() + ": expected " + expected.count(s).str() + ", got " + got.count(s).str();
  return "histograms differ";
}

std::string first_difference(const XPoly& expected, const XPoly& got) {
  XPoly d = got - expected;
  int e = d.degree().value();
  return "X^" + std::to_string(e) + ": expected " + expected.coeff(e).str() + ", got " + got.coeff(e).str();
}

std::string first_difference(const XYPoly& expected, const XYPoly& got) {
  XYPoly d = got - expected;
  const auto& [mono, c] = *d.terms().rbegin();
  return "X^" + std::to_string(mono.x) + "*Y^" + std::to_string(mono.y) + ": expected " +
         expected.coeff(mono.x, mono.y).str() + ", got " + got.coeff(mono.x, mono.y).str();
}

std::string join_witnesses(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

void finish(CaseRecord& rec, const std::vector<std::string>& failures, const std::vector<std::string>& notes,
            bool anything_checked) {
  if (!failures.empty()) {
    rec.status = CaseStatus::kFail;
    rec.witness = join_witnesses(failures);
  } else if (!anything_checked) {
    rec.status = CaseStatus::kSkip;
    rec.witness = join_witnesses(notes);
  } else {
    rec.status = CaseStatus::kPass;
    rec.witness = join_witnesses(notes);
  }
}

std::string budget_note(const std::string& what, const BudgetError& e) {
  std::ostringstream os;
  os << what << " skipped: needs " << e.required() << " > budget " << e.budget();
  return os.str();
}

CaseRecord thm_a_case(const Graph& g, int q, const SuiteOptions& o) {
  CaseRecord rec{encode_graph6(g), Json{{"q", q}}, CaseStatus::kPass, {}};
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool checked = false;
  ClassHistogram expected;
  try {
    expected = histogram_from_class_size_polynomial(compute_F(g, enumeration(o)), q);
  } catch (const BudgetError& e) {
    finish(rec, {}, {budget_note("polynomial", e)}, false);
    return rec;
  }
  auto compare = [&](const std::string& name, auto&& compute) {
    try {
      ClassHistogram h = compute();
      checked = true;
      if (h != expected) failures.push_back(name + " vs F(q,Y): " + first_difference(expected, h));
    } catch (const BudgetError& e) {
      notes.push_back(budget_note(name, e));
    }
  };
  compare("lie", [&] { return lie_class_histogram(g, q, o.budget_vectors); });
  compare("rank", [&] { return rank_class_histogram(g, q, o.budget_vectors); });
  compare("brute-force", [&] {
    BruteForceOptions bo;
    bo.budget_elements = o.budget_elements;
    return brute_force_class_histogram(g, GroupRing::field(q), bo);
  });
  finish(rec, failures, notes, checked);
  return rec;
}

CaseRecord adj_dim_case(const Graph& g, int q, const SuiteOptions& o) {
  CaseRecord rec{encode_graph6(g), Json{{"q", q}}, CaseStatus::kPass, {}};
  FiniteField field = FiniteField::make(q);
  std::vector<std::string> failures;
  try {
    for_each_vector(q, g.order(), o.budget_vectors, [&](std::span<const int> x) {
      if (!failures.empty()) return;
      int direct = adj_dim(g, field, x);
      int formula = adj_dim_formula(g, support(x));
      if (direct != formula) {
        std::ostringstream os;
        os << "x = (";
        for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
        os << "): coker dim " << direct << ", c + n - |N[U]| = " << formula;
        failures.push_back(os.str());
      }
    });
  } catch (const BudgetError& e) {
    finish(rec, {}, {budget_note("vector enumeration", e)}, false);
    return rec;
  }
  finish(rec, failures, {}, true);
  return rec;
}

CaseRecord degree_case(const Graph& g, const SuiteOptions& o) {
  CaseRecord rec{encode_graph6(g), Json::object(), CaseStatus::kPass, {}};
  const int n = g.order();
  const int m = g.size();
  SubsetTable t(0, 0);
  try {
    t = subset_table(g, enumeration(o));
  } catch (const BudgetError& e) {
    finish(rec, {}, {budget_note("subset enumeration", e)}, false);
    return rec;
  }
  XYPoly c = C_from_table(t);
  XPoly f = f_from_table(t);
  int eta_value = eta_from_table(t);
  int deg_f = f.degree().value();
  int top = n * (n - 1) / 2 + 1;
  int rank = matroid_rank(g);
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };

  expect(deg_f == m + eta_value,
         "deg f = " + std::to_string(deg_f) + " but m + eta = " + std::to_string(m + eta_value));
  expect(n <= deg_f && deg_f <= top, "deg f = " + std::to_string(deg_f) + " outside [n, C(n,2)+1]");
  expect((deg_f == n) == is_linear_forest(g), "lower bound attainment disagrees with the linear-forest test");
  expect((deg_f == top) == (m == top - 1 || n == 2), "upper bound attainment disagrees with complete-or-n=2");

  Degree dy = c.deg_y();
  expect(dy == Degree(rank), "deg_Y C = " + (dy.is_finite() ? std::to_string(dy.value()) : std::string("-inf")) +
                                 ", rank = " + std::to_string(rank));
  XPoly at_y0 = eval_y(c, 0);
  int isolated = 0;
  for (int v = 0; v < n; ++v) isolated += g.degree(v) == 0;
  expect(at_y0 == XPoly::monomial(1, isolated), "C(X,0) = " + at_y0.to_string() + ", expected X^" +
                                                     std::to_string(isolated));
  XPoly at_x1 = eval_x(c, 1);
  expect(at_x1 == XPoly(1), "C(1,Y) = " + at_x1.to_string('Y'));
  XYPoly shifted = shift_x(c, 1);
  XYPoly top_part;
  for (const auto& [mono, k] : shifted.terms())
    if (mono.x >= n) top_part.add_term(mono.x, mono.y, k);
  expect(top_part == XYPoly::monomial(1, n, rank), "C(X+1,Y) leading part " + top_part.to_string());

  int eta_dom = eta_via_dominating(g, o.budget_subset_vertices);
  expect(eta_value == eta_dom,
         "eta = " + std::to_string(eta_value) + " but dominating-set maximum = " + std::to_string(eta_dom));
  int alpha = independence_number(g);
  expect(eta_value <= alpha, "eta exceeds alpha = " + std::to_string(alpha));
  expect(alpha <= hansen_independence_bound(n, m), "alpha exceeds the Hansen bound");
  if (is_connected(g) && is_claw_free(g)) expect(eta_value == 1, "connected claw-free graph with eta != 1");
  if (is_connected(g) && m == n - 1) {
    int delta = 0;
    for (int v = 0; v < n; ++v) delta = std::max(delta, g.degree(v));
    expect(eta_value >= delta - 1, "tree with eta < max degree - 1");
  }
  finish(rec, failures, {}, true);
  return rec;
}

CaseRecord domination_case(const Graph& g, const SuiteOptions& o) {
  CaseRecord rec{encode_graph6(g), Json::object(), CaseStatus::kPass, {}};
  const int n = g.order();
  XYPoly c;
  XYPoly f_big;
  try {
    c = compute_C(g, enumeration(o));
    f_big = F_from_C(c, g.size());
  } catch (const BudgetError& e) {
    finish(rec, {}, {budget_note("subset enumeration", e)}, false);
    return rec;
  }
  std::vector<std::string> failures;
  if (n >= 2) {
    XPoly lead = shift_x(c.coeff_y(n - 1), 1);
    XPoly cds = connected_domination_poly(g);
    if (lead != cds) failures.push_back("[Y^(n-1)] C(X+1,Y) vs connected domination: " + first_difference(cds, lead));
  }
  if (n >= 3 && is_connected(g) && g.size() == n - 1 && !tree_leading_coeff_check(g))
    failures.push_back("tree leading coefficient differs from (X-1)^(n-l) X^l");
  XPoly at_x0 = eval_x(f_big, 0);
  XPoly expected;
  if (is_matching_graph(g)) {
    int r = n / 2;
    expected = XPoly::monomial(r % 2 == 0 ? 1 : -1, r);
  }
  if (at_x0 != expected)
    failures.push_back("F(0,Y) = " + at_x0.to_string('Y') + ", expected " + expected.to_string('Y'));
  finish(rec, failures, {}, true);
  return rec;
}

CaseRecord shifted_case(const Graph& g, const SuiteOptions& o) {
  CaseRecord rec{encode_graph6(g), Json::object(), CaseStatus::kPass, {}};
  XYPoly f_big;
  try {
    f_big = compute_F(g, enumeration(o));
  } catch (const BudgetError& e) {
    finish(rec, {}, {budget_note("subset enumeration", e)}, false);
    return rec;
  }
  std::vector<std::string> failures;
  XYPoly shifted = expand_in_x_minus_1(f_big);
  for (const auto& [mono, k] : shifted.terms()) {
    if (k < 0) {
      failures.push_back("coefficient of (X-1)^" + std::to_string(mono.x) + "*Y^" + std::to_string(mono.y) +
                         " is " + k.str());
      break;
    }
  }
  finish(rec, failures, {}, true);
  return rec;
}

CaseRecord crt_case(const Graph& g, int n1, int n2, const SuiteOptions& o) {
  CaseRecord rec{encode_graph6(g), Json{{"N1", n1}, {"N2", n2}}, CaseStatus::kPass, {}};
  BruteForceOptions bo;
  bo.budget_elements = o.budget_elements;
  try {
    CrtComparison cmp = crt_compare(g, n1, n2, bo);
    std::vector<std::string> failures;
    if (!cmp.match()) failures.push_back("Z/" + std::to_string(n1 * n2) + ": " + first_difference(cmp.convolved, cmp.direct));
    finish(rec, failures, {}, true);
  } catch (const BudgetError& e) {
    finish(rec, {}, {budget_note("brute force", e)}, false);
  }
  return rec;
}

struct PartData {
  XYPoly c;
  XPoly f;
};

std::vector<PartData> part_data(const std::vector<Graph>& graphs, const SuiteOptions& o) {
  std::vector<PartData> out(graphs.size());
  parallel_for(graphs.size(), o.threads, [&](std::size_t i) {
    SubsetTable t = subset_table(graphs[i], enumeration(o));
    out[i] = {C_from_table(t), f_from_table(t)};
  });
  return out;
}

std::string pair_name(const Graph& a, const Graph& b) { return encode_graph6(a) + "|" + encode_graph6(b); }

VerificationReport run_compose(const SuiteOptions& o) {
  VerificationReport r;
  PairScope scope = pairs_in_range(o.nmin, o.nmax);
  auto data = part_data(scope.graphs, o);
  r.cases.resize(scope.pairs.size());
  parallel_for(scope.pairs.size(), o.threads, [&](std::size_t k) {
    auto [i, j] = scope.pairs[k];
    const Graph& g1 = scope.graphs[i];
    const Graph& g2 = scope.graphs[j];
    CaseRecord rec{pair_name(g1, g2), Json::object(), CaseStatus::kPass, {}};
    std::vector<std::string> failures;
    XYPoly u_direct = compute_C(disjoint_union(g1, g2), enumeration(o));
    XYPoly u_formula = union_C(data[i].c, data[j].c);
    if (u_direct != u_formula) failures.push_back("union C: " + first_difference(u_direct, u_formula));
    SubsetTable jt = subset_table(join(g1, g2), enumeration(o));
    XYPoly j_direct = C_from_table(jt);
    XYPoly j_formula = join_C(data[i].c, g1.order(), data[j].c, g2.order());
    if (j_direct != j_formula) failures.push_back("join C: " + first_difference(j_direct, j_formula));
    XPoly f_direct = f_from_table(jt);
    XPoly f_formula = join_f(data[i].f, g1.size(), g1.order(), data[j].f, g2.size(), g2.order());
    if (f_direct != f_formula) failures.push_back("join f: " + first_difference(f_direct, f_formula));
    finish(rec, failures, {}, true);
    r.cases[k] = std::move(rec);
  });
  return r;
}

VerificationReport run_zeta_join(const SuiteOptions& o) {
  VerificationReport r;
  PairScope scope = pairs_in_range(o.nmin, o.nmax);
  auto data = part_data(scope.graphs, o);
  r.cases.resize(scope.pairs.size());
  parallel_for(scope.pairs.size(), o.threads, [&](std::size_t k) {
    auto [i, j] = scope.pairs[k];
    const Graph& g1 = scope.graphs[i];
    const Graph& g2 = scope.graphs[j];
    CaseRecord rec{pair_name(g1, g2), Json::object(), CaseStatus::kPass, {}};
    XPoly direct = compute_f(join(g1, g2), enumeration(o));
    JoinZetaResult res =
        join_zeta_first_order(data[i].f, g1.size(), g1.order(), data[j].f, g2.size(), g2.order(), direct);
    std::vector<std::string> failures;
    if (res.series_constant != XPoly(1)) failures.push_back("constant term " + res.series_constant.to_string());
    if (res.series_linear != direct) failures.push_back("Y-coefficient: " + first_difference(direct, res.series_linear));
    if (res.formula != direct) failures.push_back("join f: " + first_difference(direct, res.formula));
    finish(rec, failures, {}, true);
    r.cases[k] = std::move(rec);
  });
  return r;
}

template <typename Fn>
VerificationReport run_per_graph(const SuiteOptions& o, Fn&& fn) {
  VerificationReport r;
  auto graphs = graphs_in_range(o.nmin, o.nmax);
  r.cases.resize(graphs.size());
  parallel_for(graphs.size(), o.threads, [&](std::size_t i) { r.cases[i] = fn(graphs[i]); });
  return r;
}

template <typename Fn>
VerificationReport run_per_graph_q(const SuiteOptions& o, Fn&& fn) {
  if (o.qs.empty()) throw std::invalid_argument("no field orders given");
  for (int q : o.qs) FiniteField::make(q);
  VerificationReport r;
  auto graphs = graphs_in_range(o.nmin, o.nmax);
  std::size_t total = graphs.size() * o.qs.size();
  r.cases.resize(total);
  parallel_for(total, o.threads, [&](std::size_t k) {
    r.cases[k] = fn(graphs[k / o.qs.size()], o.qs[k % o.qs.size()]);
  });
  return r;
}

VerificationReport run_crt(const SuiteOptions& o) {
  std::vector<std::pair<int, int>> moduli;
  for (std::size_t a = 0; a < o.moduli.size(); ++a)
    for (std::size_t b = a + 1; b < o.moduli.size(); ++b) {
      int n1 = o.moduli[a], n2 = o.moduli[b];
      if (n1 < 2 || n2 < 2) throw std::invalid_argument("moduli must be at least 2");
      if (std::gcd(n1, n2) == 1 && n1 * n2 <= 9) moduli.emplace_back(n1, n2);
    }
  if (moduli.empty()) throw std::invalid_argument("no coprime pair N1, N2 with N1 N2 <= 9 among the given moduli");
  VerificationReport r;
  auto graphs = graphs_in_range(o.nmin, o.nmax);
  std::size_t total = graphs.size() * moduli.size();
  r.cases.resize(total);
  parallel_for(total, o.threads, [&](std::size_t k) {
    auto [n1, n2] = moduli[k % moduli.size()];
    r.cases[k] = crt_case(graphs[k / moduli.size()], n1, n2, o);
  });
  return r;
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::kPass: return "pass";
    case CaseStatus::kFail: return "fail";
    case CaseStatus::kSkip: return "skip";
  }
  return "?";
}

std::size_t VerificationReport::count(CaseStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [s](const CaseRecord& c) { return c.status == s; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"thm-a",      "adj-dim",   "compose", "degree",
                                              "domination", "zeta-join", "crt",     "shifted-nonneg"};
  return names;
}

VerificationReport run_suite(std::string_view suite, const SuiteOptions& o) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  if (suite == "thm-a") {
    r = run_per_graph_q(o, [&](const Graph& g, int q) { return thm_a_case(g, q, o); });
  } else if (suite == "adj-dim") {
    r = run_per_graph_q(o, [&](const Graph& g, int q) { return adj_dim_case(g, q, o); });
  } else if (suite == "compose") {
    r = run_compose(o);
  } else if (suite == "degree") {
    r = run_per_graph(o, [&](const Graph& g) { return degree_case(g, o); });
  } else if (suite == "domination") {
    r = run_per_graph(o, [&](const Graph& g) { return domination_case(g, o); });
  } else if (suite == "zeta-join") {
    r = run_zeta_join(o);
  } else if (suite == "crt") {
    r = run_crt(o);
  } else if (suite == "shifted-nonneg") {
    r = run_per_graph(o, [&](const Graph& g) { return shifted_case(g, o); });
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  r.suite = std::string(suite);
  r.options = Json{{"nmin", o.nmin},
                   {"nmax", o.nmax},
                   {"q", o.qs},
                   {"N", o.moduli},
                   {"budget_elements", o.budget_elements},
                   {"budget_vectors", o.budget_vectors},
                   {"budget_subset_vertices", o.budget_subset_vertices}};
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Json to_json(const VerificationReport& r, bool include_timing) {
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json rec{{"graph6", c.graph6}, {"params", c.params.is_null() ? Json::object() : c.params},
             {"status", to_string(c.status)}};
    if (!c.witness.empty()) rec["witness"] = c.witness;
    cases.push_back(std::move(rec));
  }
  Json out{{"schema", kJsonSchemaVersion},
           {"suite", r.suite},
           {"options", r.options},
           {"totals",
            {{"cases", r.cases.size()},
             {"pass", r.count(CaseStatus::kPass)},
             {"fail", r.count(CaseStatus::kFail)},
             {"skip", r.count(CaseStatus::kSkip)}}},
           {"ok", r.ok()},
           {"cases", std::move(cases)}};
  if (include_timing) {
    out["wall_seconds"] = r.wall_seconds;
    out["timestamp"] = utc_timestamp();
  }
  return out;
}

JoinZetaResult join_zeta_first_order(const XPoly& f1, int m1, int n1, const XPoly& f2, int m2, int n2,
                                     const XPoly& f_join) {
  const int s0 = m1 + m2 + (n1 - 1) * (n2 - 1);
  const int a1 = m2 + (n1 - 1) * n2;
  const int b1 = m1 + m2 + (n1 - 1) * n2;
  const int a2 = m1 + n1 * (n2 - 1);
  const int b2 = m1 + m2 + n1 * (n2 - 1);
  const int t = m1 + m2 + n1 * n2;

  YSeries2 w1{XPoly(1), f1};
  YSeries2 w2{XPoly(1), f2};
  YSeries2 q = YSeries2{XPoly(-1), XPoly::monomial(1, s0)} +
               w1.substitute_y_scaled(a1) * YSeries2::one_minus_xk_y(b1) * YSeries2::one_minus_xk_y(b1 + 1) +
               w2.substitute_y_scaled(a2) * YSeries2::one_minus_xk_y(b2) * YSeries2::one_minus_xk_y(b2 + 1);
  YSeries2 denominator = YSeries2::one_minus_xk_y(t) * YSeries2::one_minus_xk_y(t + 1);
  YSeries2 series = q * denominator.inverse();

  JoinZetaResult r;
  r.series_constant = series.c0;
  r.series_linear = series.c1;
  r.direct = f_join;
  r.formula = join_f(f1, m1, n1, f2, m2, n2);
  return r;
}

JoinZetaResult join_zeta_first_order(const Graph& g1, const Graph& g2) {
  return join_zeta_first_order(compute_f(g1), g1.size(), g1.order(), compute_f(g2), g2.size(), g2.order(),
                               compute_f(join(g1, g2)));
}

std::vector<BatchRecord> run_batch(std::istream& in, const EnumerationOptions& options) {
  std::vector<BatchRecord> records;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    BatchRecord rec;
    rec.line = number;
    rec.input = line;
    records.push_back(std::move(rec));
  }
  parallel_for(records.size(), options.threads, [&](std::size_t i) {
    BatchRecord& rec = records[i];
    EnumerationOptions single = options;
    single.threads = 1;
    try {
      rec.report = make_report(parse_graph6(rec.input), single, true);
      rec.status = "ok";
    } catch (const BudgetError& e) {
      rec.status = "budget";
      rec.error = e.what();
    } catch (const std::invalid_argument& e) {
      rec.status = "parse-error";
      rec.error = e.what();
    }
  });
  return records;
}

Json to_json(const std::vector<BatchRecord>& records) {
  Json arr = Json::array();
  for (const auto& r : records) {
    Json rec{{"line", r.line}, {"input", r.input}, {"status", r.status}};
    if (!r.error.empty()) rec["error"] = r.error;
    if (r.report) rec["report"] = to_json(*r.report);
    arr.push_back(std::move(rec));
  }
  return Json{{"schema", kJsonSchemaVersion}, {"records", std::move(arr)}};
}

std::string to_csv(const std::vector<BatchRecord>& records) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "line,graph6,n,m,status,eta,deg_f,f\n";
  for (const auto& r : records) {
    os << r.line << ',' << quote(r.input) << ',';
    if (r.report) {
      os << r.report->n << ',' << r.report->m << ',' << r.status << ',' << r.report->eta << ',' << r.report->deg_f
         << ',' << quote(r.report->f.to_string());
    } else {
      os << ",," << r.status << ",,,";
    }
    os << '\n';
  }
  return os.str();
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  std::size_t workers = std::min<std::size_t>(count, threads < 1 ? 1 : static_cast<std::size_t>(threads));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace classpoly
