#ifndef CLASSPOLY_GROUP_HPP
#define CLASSPOLY_GROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "classpoly/graph.hpp"
#include "classpoly/histogram.hpp"

namespace classpoly {

/// A finite commutative ring R with elements 0..|R|-1: a supported finite
/// field or Z/N for 2 <= N <= 9.
class GroupRing {
 public:
  enum class Kind { kField, kIntegersMod };

  static GroupRing field(int q);
  static GroupRing integers_mod(int n);

  Kind kind() const { return kind_; }
  int order() const { return order_; }
  /// "F4", "Z/6".
  const std::string& name() const { return name_; }

  int add(int a, int b) const { return add_[a * order_ + b]; }
  int mul(int a, int b) const { return mul_[a * order_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }

  /// Commutative unital ring axioms on the full table.
  bool check_axioms() const;

 private:
  GroupRing() = default;
  Kind kind_ = Kind::kField;
  int order_ = 0;
  std::string name_;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
};

/// Normal form (x, z) of an element of G_Gamma(R): x is the vertex part
/// (length n), z the edge part (length m, edges in lexicographic order).
struct GroupElement {
  std::vector<int> x;
  std::vector<int> z;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// The graphical group G_Gamma(R) on the set R^n x R^m with
///   (x, z) * (x', z') = (x + x', z + z' + gamma(x, x')),
///   gamma(x, x')_(j,k) = -x_k x'_j  for each edge (j,k), j < k.
/// The edge part is central and commutators are [e_j, e_k] = e_(jk).
class GraphicalGroup {
 public:
  GraphicalGroup(Graph graph, GroupRing ring);

  const Graph& graph() const { return graph_; }
  const GroupRing& ring() const { return ring_; }
  int vertex_count() const { return graph_.order(); }
  int edge_count() const { return graph_.size(); }
  /// |R|^(n+m).
  Integer order() const;

  GroupElement identity() const;
  /// r e_i.
  GroupElement vertex_element(int i, int r) const;
  /// r e_(jk) for the edge at position edge_index.
  GroupElement edge_element(int edge_index, int r) const;

  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  /// out = a * b, reusing out's storage; out must not alias a or b.
  void mul_into(const GroupElement& a, const GroupElement& b, GroupElement& out) const;
  GroupElement inv(const GroupElement& a) const;
  /// h g h^-1.
  GroupElement conjugate(const GroupElement& g, const GroupElement& h) const;
  /// a^-1 b^-1 a b.
  GroupElement commutator(const GroupElement& a, const GroupElement& b) const;

  /// The cocycle gamma(x, x') as an edge vector.
  std::vector<int> cocycle(const std::vector<int>& x, const std::vector<int>& y) const;
  /// Lie bracket of vertex parts: (x_j y_k - x_k y_j) over edges (j,k).
  std::vector<int> bracket(const std::vector<int>& x, const std::vector<int>& y) const;

  /// Mixed-radix code over the n + m digits, x first; only when the order
  /// fits in 64 bits.
  std::uint64_t encode(const GroupElement& a) const;
  GroupElement decode(std::uint64_t code) const;
  void decode_into(std::uint64_t code, GroupElement& out) const;

  bool is_valid(const GroupElement& a) const;
  bool has_shape(const GroupElement& a) const {
    return static_cast<int>(a.x.size()) == vertex_count() && static_cast<int>(a.z.size()) == edge_count();
  }

 private:
  Graph graph_;
  GroupRing ring_;
};

enum class OrbitMode {
  kAuto,         // all elements up to kAllElementsLimit, generators beyond
  kAllElements,  // conjugate by every group element
  kGenerators,   // closure under conjugation by the r e_i
};

struct BruteForceOptions {
  double budget_elements = 2e5;
  OrbitMode mode = OrbitMode::kAuto;
  static constexpr double kAllElementsLimit = 20000;
};

/// Partitions the whole group into conjugacy classes by explicit conjugation.
/// Throws BudgetError when |R|^(n+m) exceeds the budget.
ClassHistogram brute_force_class_histogram(const Graph& g, const GroupRing& ring, const BruteForceOptions& options = {});

/// Class sizes from Lie centralisers: for each x in F_q^n, counts the y with
/// bracket(x, y) = 0; the q^m elements over x fall into classes of size
/// q^n / #y. Enumerates q^(2n) pairs; throws BudgetError beyond budget.
ClassHistogram lie_class_histogram(const Graph& g, int q, double budget = 1e8);

/// Compares the class zeta function from lie_class_histogram with
/// q^m C(q, q^(-1-s)) coefficient by coefficient.
bool zeta_identity_check(const Graph& g, int q, double budget = 1e8);

struct CrtComparison {
  ClassHistogram direct;     // over Z/(N1 N2)
  ClassHistogram convolved;  // from Z/N1 and Z/N2
  bool match() const { return direct == convolved; }
};

/// Requires N1, N2 >= 2, gcd 1 and N1 N2 <= 9.
CrtComparison crt_compare(const Graph& g, int n1, int n2, const BruteForceOptions& options = {});
bool crt_multiplicativity_check(const Graph& g, int n1, int n2, const BruteForceOptions& options = {});

/// Elements commuting with every element, by exhaustive search.
std::vector<GroupElement> center_by_search(const GraphicalGroup& group);
/// The subgroup generated by all commutators, by closure.
std::vector<GroupElement> commutator_subgroup_by_search(const GraphicalGroup& group);

}  // namespace classpoly

#endif  // CLASSPOLY_GROUP_HPP
