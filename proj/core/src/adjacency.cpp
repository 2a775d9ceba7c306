#include "classpoly/adjacency.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "classpoly/errors.hpp"

namespace classpoly {

int rank(const FiniteField& field, FFMatrix m) {
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int k = 0; k < m.cols(); ++k) {
        const int t = m.at(r, k);
        m.set(r, k, m.at(pivot, k));
        m.set(pivot, k, t);
      }
    const int inv = field.inv(m.at(r, c));
    for (int k = c; k < m.cols(); ++k) m.set(r, k, field.mul(inv, m.at(r, k)));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const int factor = m.at(i, c);
      for (int k = c; k < m.cols(); ++k) m.set(i, k, field.sub(m.at(i, k), field.mul(factor, m.at(r, k))));
    }
    ++r;
  }
  return r;
}

FFMatrix adjacency_relation_matrix(const Graph& g, const FiniteField& field, std::span<const int> x) {
  if (static_cast<int>(x.size()) != g.order()) throw std::invalid_argument("vector length differs from vertex count");
  for (int v : x)
    if (v < 0 || v >= field.order()) throw std::invalid_argument("vector entry is not a field element");
  FFMatrix m(g.size(), g.order());
  int row = 0;
  for (auto [j, k] : g.edges()) {
    m.set(row, j, x[k]);
    m.set(row, k, field.neg(x[j]));
    ++row;
  }
  return m;
}

int adj_dim(const Graph& g, const FiniteField& field, std::span<const int> x) {
  return coker_dim(field, adjacency_relation_matrix(g, field, x));
}

int adj_dim_formula(const Graph& g, VertexSet s) {
  return component_count_induced(g, s) + g.order() - closed_neighborhood(g, s).size();
}

VertexSet support(std::span<const int> x) {
  VertexSet s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) s.insert(static_cast<int>(i));
  return s;
}

void for_each_vector(int q, int n, double budget, const std::function<void(std::span<const int>)>& fn) {
  const double required = std::pow(static_cast<double>(q), n);
  if (required > budget) throw BudgetError("enumerating F_q^n exceeds the vector budget", required, budget);
  std::vector<int> x(n, 0);
  while (true) {
    fn(x);
    int i = 0;
    while (i < n && ++x[i] == q) x[i++] = 0;
    if (i == n) break;
  }
}

ClassHistogram rank_class_histogram(const Graph& g, int q, double budget) {
  const auto field = FiniteField::make(q);
  std::vector<Integer> by_rank(g.order() + 1, 0);
  for_each_vector(q, g.order(), budget, [&](std::span<const int> x) {
    ++by_rank[rank(field, adjacency_relation_matrix(g, field, x))];
  });
  ClassHistogram h;
  for (int i = 0; i <= g.order(); ++i)
    if (by_rank[i] != 0) h.add(ipow(Integer(q), i), by_rank[i] * ipow(Integer(q), g.size() - i));
  return h;
}

}  // namespace classpoly
