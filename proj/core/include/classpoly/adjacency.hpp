#ifndef CLASSPOLY_ADJACENCY_HPP
#define CLASSPOLY_ADJACENCY_HPP

#include <functional>
#include <span>
#include <vector>

#include "classpoly/finite_field.hpp"
#include "classpoly/graph.hpp"
#include "classpoly/histogram.hpp"

namespace classpoly {

/// Dense matrix over a finite field; entries are field elements.
class FFMatrix {
 public:
  FFMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, int v) { data_[static_cast<std::size_t>(r) * cols_ + c] = v; }

  friend bool operator==(const FFMatrix&, const FFMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<int> data_;
};

/// Row rank by Gaussian elimination.
int rank(const FiniteField& field, FFMatrix m);
inline int coker_dim(const FiniteField& field, const FFMatrix& m) { return m.cols() - rank(field, m); }

/// The m x n relation matrix of Adj(G)_x: the row of edge (j,k), j < k,
/// holds x_k in column j and -x_j in column k. Rows follow g.edges().
FFMatrix adjacency_relation_matrix(const Graph& g, const FiniteField& field, std::span<const int> x);

/// n - rank of the relation matrix.
int adj_dim(const Graph& g, const FiniteField& field, std::span<const int> x);
/// c(U) + n - |N[U]|.
int adj_dim_formula(const Graph& g, VertexSet support);
VertexSet support(std::span<const int> x);

/// Iterates all q^n vectors x in F_q^n in mixed-radix order, first
/// coordinate fastest. Throws BudgetError when q^n exceeds budget.
void for_each_vector(int q, int n, double budget, const std::function<void(std::span<const int>)>& fn);

/// cc_{q^i} = #{x : rank A(x) = i} * q^(m - i), by enumerating F_q^n.
ClassHistogram rank_class_histogram(const Graph& g, int q, double budget = 1e7);

}  // namespace classpoly

#endif  // CLASSPOLY_ADJACENCY_HPP
