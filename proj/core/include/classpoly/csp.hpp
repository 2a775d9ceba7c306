#ifndef CLASSPOLY_CSP_HPP
#define CLASSPOLY_CSP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "classpoly/errors.hpp"
#include "classpoly/graph.hpp"
#include "classpoly/poly.hpp"

namespace classpoly {

enum class SubsetMethod {
  kReference,  // plain 0..2^n-1 loop, everything recomputed per subset
  kGrayCode,   // Gray-code order with incrementally maintained N[U]
};

struct EnumerationOptions {
  int max_vertices = kDefaultSubsetCapVertices;
  SubsetMethod method = SubsetMethod::kGrayCode;
  /// Worker threads for the reference loop; results are identical for any count.
  int threads = 1;
};

/// Histogram of the subset statistics every polynomial in this module is
/// built from: count(u, e) is the number of U with |U| = u and
/// |N[U]| - c(U) = e.
class SubsetTable {
 public:
  SubsetTable(int n, int m) : n_(n), m_(m), counts_((n + 1) * (n + 1), 0) {}

  int vertices() const { return n_; }
  int edges() const { return m_; }
  std::uint64_t count(int u, int e) const { return counts_[u * (n_ + 1) + e]; }
  void add(int u, int e, std::uint64_t k = 1) { counts_[u * (n_ + 1) + e] += k; }
  SubsetTable& operator+=(const SubsetTable& o);
  friend bool operator==(const SubsetTable&, const SubsetTable&) = default;

 private:
  int n_;
  int m_;
  std::vector<std::uint64_t> counts_;
};

/// Throws BudgetError when n exceeds options.max_vertices.
SubsetTable subset_table(const Graph& g, const EnumerationOptions& options = {});

/// C(X,Y) = sum over U of (X-1)^|U| Y^(|N[U]| - c(U)).
XYPoly compute_C(const Graph& g, const EnumerationOptions& options = {});
XYPoly C_from_table(const SubsetTable& t);
/// F(X,Y) = X^m C(X, X^-1 Y).
XYPoly compute_F(const Graph& g, const EnumerationOptions& options = {});
XYPoly F_from_C(const XYPoly& c, int m);
/// f(X) = sum over U of (X-1)^|U| X^(m + c(U) - |N[U]|).
XPoly compute_f(const Graph& g, const EnumerationOptions& options = {});
XPoly f_from_table(const SubsetTable& t);

struct ClosedForm {
  std::optional<XYPoly> C;
  std::optional<XYPoly> F;
  std::optional<XPoly> f;
};

/// Known closed forms: complete, edgeless, star (C, F, f); complete
/// bipartite (C, F, f); path (f only). Other families are rejected.
ClosedForm closed_form(FamilyKind kind, std::span<const int> params);
XPoly path_f_closed_form(int n);

/// C of a disjoint union.
XYPoly union_C(const XYPoly& c1, const XYPoly& c2);
/// C of a join, from the C-polynomials and vertex counts of the parts.
XYPoly join_C(const XYPoly& c1, int n1, const XYPoly& c2, int n2);
/// f of a join, from f, edge and vertex counts of the parts.
XPoly join_f(const XPoly& f1, int m1, int n1, const XPoly& f2, int m2, int n2);

/// max over U of c(U) - |N[U] \ U|.
int eta(const Graph& g, const EnumerationOptions& options = {});
int eta_from_table(const SubsetTable& t);
/// max over dominating U of c(U) + |U| - n, enumerated independently.
int eta_via_dominating(const Graph& g, int max_vertices = kDefaultSubsetCapVertices);

/// sum over connected dominating sets D of X^|D|.
XPoly connected_domination_poly(const Graph& g);

/// Coefficient of Y^(n-1) in C_T equals (X-1)^(n-l) X^l for a tree T with
/// n >= 3 vertices and l leaves. Throws std::invalid_argument otherwise.
bool tree_leading_coeff_check(const Graph& tree);

struct GraphPolyReport {
  std::string graph6;
  int n = 0;
  int m = 0;
  XYPoly C;
  XYPoly F;
  XPoly f;
  int eta = 0;
  int deg_f = 0;
  int rank = 0;
  int isolated = 0;
};

/// With cross_check set, eta is computed both ways and deg f - m is
/// compared too; a disagreement throws std::logic_error.
GraphPolyReport make_report(const Graph& g, const EnumerationOptions& options = {}, bool cross_check = false);

}  // namespace classpoly

#endif  // CLASSPOLY_CSP_HPP
