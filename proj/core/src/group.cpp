#include "classpoly/group.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

#include "classpoly/adjacency.hpp"
#include "classpoly/csp.hpp"
#include "classpoly/errors.hpp"
#include "classpoly/finite_field.hpp"

namespace classpoly {

GroupRing GroupRing::field(int q) {
  const auto f = FiniteField::make(q);
  GroupRing r;
  r.kind_ = Kind::kField;
  r.order_ = q;
  r.name_ = "F" + std::to_string(q);
  r.add_.resize(q * q);
  r.mul_.resize(q * q);
  r.neg_.resize(q);
  for (int a = 0; a < q; ++a) {
    r.neg_[a] = f.neg(a);
    for (int b = 0; b < q; ++b) {
      r.add_[a * q + b] = f.add(a, b);
      r.mul_[a * q + b] = f.mul(a, b);
    }
  }
  return r;
}

GroupRing GroupRing::integers_mod(int n) {
  if (n < 2 || n > 9) throw std::invalid_argument("Z/N is supported for 2 <= N <= 9, got " + std::to_string(n));
  GroupRing r;
  r.kind_ = Kind::kIntegersMod;
  r.order_ = n;
  r.name_ = "Z/" + std::to_string(n);
  r.add_.resize(n * n);
  r.mul_.resize(n * n);
  r.neg_.resize(n);
  for (int a = 0; a < n; ++a) {
    r.neg_[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) {
      r.add_[a * n + b] = (a + b) % n;
      r.mul_[a * n + b] = (a * b) % n;
    }
  }
  if (!r.check_axioms()) throw std::logic_error("Z/N tables violate the ring axioms");
  return r;
}

bool GroupRing::check_axioms() const {
  const int q = order_;
  for (int a = 0; a < q; ++a) {
    if (add(a, 0) != a || mul(a, 1 % q) != a || add(a, neg(a)) != 0) return false;
    for (int b = 0; b < q; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) return false;
      for (int c = 0; c < q; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) return false;
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return false;
      }
    }
  }
  return true;
}

GraphicalGroup::GraphicalGroup(Graph graph, GroupRing ring) : graph_(std::move(graph)), ring_(std::move(ring)) {}

Integer GraphicalGroup::order() const { return ipow(Integer(ring_.order()), vertex_count() + edge_count()); }

GroupElement GraphicalGroup::identity() const {
  return {std::vector<int>(vertex_count(), 0), std::vector<int>(edge_count(), 0)};
}

GroupElement GraphicalGroup::vertex_element(int i, int r) const {
  auto e = identity();
  e.x.at(i) = r;
  return e;
}

GroupElement GraphicalGroup::edge_element(int edge_index, int r) const {
  auto e = identity();
  e.z.at(edge_index) = r;
  return e;
}

std::vector<int> GraphicalGroup::cocycle(const std::vector<int>& x, const std::vector<int>& y) const {
  std::vector<int> out(edge_count());
  int idx = 0;
  for (auto [j, k] : graph_.edges()) out[idx++] = ring_.neg(ring_.mul(x[k], y[j]));
  return out;
}

std::vector<int> GraphicalGroup::bracket(const std::vector<int>& x, const std::vector<int>& y) const {
  std::vector<int> out(edge_count());
  int idx = 0;
  for (auto [j, k] : graph_.edges()) out[idx++] = ring_.sub(ring_.mul(x[j], y[k]), ring_.mul(x[k], y[j]));
  return out;
}

void GraphicalGroup::mul_into(const GroupElement& a, const GroupElement& b, GroupElement& out) const {
  const int n = vertex_count();
  if (!has_shape(a) || !has_shape(b)) throw std::invalid_argument("group element has the wrong dimensions");
  out.x.resize(n);
  out.z.resize(edge_count());
  for (int i = 0; i < n; ++i) out.x[i] = ring_.add(a.x[i], b.x[i]);
  int idx = 0;
  for (auto [j, k] : graph_.edges()) {
    const int gamma = ring_.neg(ring_.mul(a.x[k], b.x[j]));
    out.z[idx] = ring_.add(ring_.add(a.z[idx], b.z[idx]), gamma);
    ++idx;
  }
}

GroupElement GraphicalGroup::mul(const GroupElement& a, const GroupElement& b) const {
  GroupElement out;
  mul_into(a, b, out);
  return out;
}

GroupElement GraphicalGroup::inv(const GroupElement& a) const {
  // (x, z)^-1 = (-x, -z + gamma(x, x))
  if (!has_shape(a)) throw std::invalid_argument("group element has the wrong dimensions");
  GroupElement out;
  out.x.resize(vertex_count());
  for (int i = 0; i < vertex_count(); ++i) out.x[i] = ring_.neg(a.x[i]);
  const auto g = cocycle(a.x, a.x);
  out.z.resize(edge_count());
  for (int e = 0; e < edge_count(); ++e) out.z[e] = ring_.add(ring_.neg(a.z[e]), g[e]);
  return out;
}

GroupElement GraphicalGroup::conjugate(const GroupElement& g, const GroupElement& h) const {
  return mul(mul(h, g), inv(h));
}

GroupElement GraphicalGroup::commutator(const GroupElement& a, const GroupElement& b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

std::uint64_t GraphicalGroup::encode(const GroupElement& a) const {
  const std::uint64_t r = ring_.order();
  std::uint64_t code = 0;
  for (int e = edge_count() - 1; e >= 0; --e) code = code * r + a.z[e];
  for (int i = vertex_count() - 1; i >= 0; --i) code = code * r + a.x[i];
  return code;
}

void GraphicalGroup::decode_into(std::uint64_t code, GroupElement& out) const {
  const std::uint64_t r = ring_.order();
  out.x.resize(vertex_count());
  out.z.resize(edge_count());
  for (int i = 0; i < vertex_count(); ++i, code /= r) out.x[i] = static_cast<int>(code % r);
  for (int e = 0; e < edge_count(); ++e, code /= r) out.z[e] = static_cast<int>(code % r);
}

GroupElement GraphicalGroup::decode(std::uint64_t code) const {
  GroupElement out;
  decode_into(code, out);
  return out;
}

bool GraphicalGroup::is_valid(const GroupElement& a) const {
  if (static_cast<int>(a.x.size()) != vertex_count() || static_cast<int>(a.z.size()) != edge_count()) return false;
  for (int v : a.x)
    if (v < 0 || v >= ring_.order()) return false;
  for (int v : a.z)
    if (v < 0 || v >= ring_.order()) return false;
  return true;
}

namespace {

std::uint64_t checked_order(const Graph& g, const GroupRing& ring, double budget) {
  const double required = std::pow(static_cast<double>(ring.order()), g.order() + g.size());
  if (required > budget) {
    throw BudgetError("group of order " + std::to_string(static_cast<long long>(required)) + " over " + ring.name() +
                          " exceeds the element budget",
                      required, budget);
  }
  return static_cast<std::uint64_t>(std::llround(required));
}

}  // namespace

ClassHistogram brute_force_class_histogram(const Graph& g, const GroupRing& ring, const BruteForceOptions& options) {
  const std::uint64_t total = checked_order(g, ring, options.budget_elements);
  const GraphicalGroup group(g, ring);
  OrbitMode mode = options.mode;
  if (mode == OrbitMode::kAuto) {
    mode = static_cast<double>(total) <= BruteForceOptions::kAllElementsLimit ? OrbitMode::kAllElements
                                                                              : OrbitMode::kGenerators;
  }

  std::vector<GroupElement> conjugators;
  std::vector<GroupElement> conjugator_inverses;
  if (mode == OrbitMode::kAllElements) {
    conjugators.reserve(total);
    for (std::uint64_t c = 0; c < total; ++c) conjugators.push_back(group.decode(c));
  } else {
    for (int i = 0; i < g.order(); ++i)
      for (int r = 1; r < ring.order(); ++r) conjugators.push_back(group.vertex_element(i, r));
  }
  conjugator_inverses.reserve(conjugators.size());
  for (const auto& h : conjugators) conjugator_inverses.push_back(group.inv(h));

  std::vector<bool> seen(total, false);
  std::map<std::uint64_t, std::uint64_t> sizes;
  GroupElement cur, left, conj;
  std::vector<std::uint64_t> queue;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    std::uint64_t orbit = 1;
    queue.assign(1, start);
    // For kAllElements the orbit of start is complete after one pass; for
    // kGenerators the queue grows until closed.
    for (std::size_t head = 0; head < queue.size(); ++head) {
      group.decode_into(queue[head], cur);
      for (std::size_t k = 0; k < conjugators.size(); ++k) {
        group.mul_into(conjugators[k], cur, left);
        group.mul_into(left, conjugator_inverses[k], conj);
        const auto code = group.encode(conj);
        if (seen[code]) continue;
        seen[code] = true;
        ++orbit;
        if (mode == OrbitMode::kGenerators) queue.push_back(code);
      }
      if (mode == OrbitMode::kAllElements) break;
    }
    ++sizes[orbit];
  }
  ClassHistogram h;
  for (const auto& [size, count] : sizes) h.add(size, count);
  return h;
}

ClassHistogram lie_class_histogram(const Graph& g, int q, double budget) {
  const auto field = FiniteField::make(q);
  const int n = g.order();
  const double required = std::pow(static_cast<double>(q), 2 * n);
  if (required > budget) throw BudgetError("Lie centraliser enumeration exceeds the pair budget", required, budget);

  std::vector<std::vector<int>> vectors;
  for_each_vector(q, n, required, [&](std::span<const int> x) { vectors.emplace_back(x.begin(), x.end()); });
  const std::uint64_t qn = vectors.size();

  std::map<std::uint64_t, std::uint64_t> x_by_size;  // class size -> number of x
  for (const auto& x : vectors) {
    std::uint64_t centralising = 0;
    for (const auto& y : vectors) {
      bool commutes = true;
      for (auto [j, k] : g.edges())
        if (field.sub(field.mul(x[j], y[k]), field.mul(x[k], y[j])) != 0) {
          commutes = false;
          break;
        }
      if (commutes) ++centralising;
    }
    if (qn % centralising != 0) throw std::logic_error("Lie centraliser order does not divide q^n");
    ++x_by_size[qn / centralising];
  }

  ClassHistogram h;
  const Integer qm = ipow(Integer(q), g.size());
  for (const auto& [size, xs] : x_by_size) {
    std::uint64_t s = size;
    while (s % q == 0) s /= q;
    if (s != 1) throw std::logic_error("class size is not a power of q");
    if (qm % size != 0) throw std::logic_error("class size exceeds q^m");
    h.add(size, Integer(xs) * (qm / size));
  }
  return h;
}

bool zeta_identity_check(const Graph& g, int q, double budget) {
  const DirichletPoly from_group = class_zeta(lie_class_histogram(g, q, budget));
  const XYPoly c = compute_C(g);
  DirichletPoly expected;
  const int m = g.size();
  // q^m C(q, q^(-1-s)) = sum_j C_j(q) q^(m-j) (q^j)^(-s)
  for (int j = 0; j <= c.deg_y().value(); ++j) {
    const Integer cj = eval(c.coeff_y(j), q);
    if (cj == 0) continue;
    if (j > m) return false;
    expected.terms.emplace_back(ipow(Integer(q), j), cj * ipow(Integer(q), m - j));
  }
  return from_group == expected;
}

CrtComparison crt_compare(const Graph& g, int n1, int n2, const BruteForceOptions& options) {
  if (n1 < 2 || n2 < 2) throw std::invalid_argument("CRT check needs N1, N2 >= 2");
  if (std::gcd(n1, n2) != 1) throw std::invalid_argument("CRT check needs coprime moduli");
  CrtComparison out;
  out.direct = brute_force_class_histogram(g, GroupRing::integers_mod(n1 * n2), options);
  out.convolved = dirichlet_convolution(brute_force_class_histogram(g, GroupRing::integers_mod(n1), options),
                                        brute_force_class_histogram(g, GroupRing::integers_mod(n2), options));
  return out;
}

bool crt_multiplicativity_check(const Graph& g, int n1, int n2, const BruteForceOptions& options) {
  return crt_compare(g, n1, n2, options).match();
}

std::vector<GroupElement> center_by_search(const GraphicalGroup& group) {
  const std::uint64_t total = checked_order(group.graph(), group.ring(), 1e5);
  std::vector<GroupElement> all;
  for (std::uint64_t c = 0; c < total; ++c) all.push_back(group.decode(c));
  std::vector<GroupElement> out;
  for (const auto& a : all) {
    bool central = true;
    for (const auto& b : all)
      if (group.mul(a, b) != group.mul(b, a)) {
        central = false;
        break;
      }
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<GroupElement> commutator_subgroup_by_search(const GraphicalGroup& group) {
  const std::uint64_t total = checked_order(group.graph(), group.ring(), 1e5);
  std::vector<GroupElement> all;
  for (std::uint64_t c = 0; c < total; ++c) all.push_back(group.decode(c));
  std::vector<bool> is_comm(total, false);
  std::vector<GroupElement> gens;
  for (const auto& a : all)
    for (const auto& b : all) {
      const auto code = group.encode(group.commutator(a, b));
      if (!is_comm[code]) {
        is_comm[code] = true;
        gens.push_back(group.decode(code));
      }
    }
  std::vector<bool> in(total, false);
  std::deque<std::uint64_t> queue{group.encode(group.identity())};
  in[queue.front()] = true;
  while (!queue.empty()) {
    const auto cur = group.decode(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      const auto code = group.encode(group.mul(cur, s));
      if (!in[code]) {
        in[code] = true;
        queue.push_back(code);
      }
    }
  }
  std::vector<GroupElement> out;
  for (std::uint64_t c = 0; c < total; ++c)
    if (in[c]) out.push_back(all[c]);
  return out;
}

}  // namespace classpoly
