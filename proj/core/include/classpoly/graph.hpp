#ifndef CLASSPOLY_GRAPH_HPP
#define CLASSPOLY_GRAPH_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace classpoly {

/// Largest vertex count representable by the 64-bit vertex sets below.
inline constexpr int kMaxVertices = 62;

/// A set of vertices of some ambient graph, stored as a membership bitset.
/// Vertex i is present iff bit i is set.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  /// Members in increasing order.
  std::vector<int> members() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// An edge {u, v} with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised for malformed graph input; carries the offending pair when there is one.
class GraphError : public std::invalid_argument {
 public:
  explicit GraphError(const std::string& what, std::optional<Edge> pair = std::nullopt)
      : std::invalid_argument(what), pair_(pair) {}
  const std::optional<Edge>& pair() const { return pair_; }

 private:
  std::optional<Edge> pair_;
};

/// A finite simple graph on vertices 0..n-1, n >= 1.
///
/// Edges are kept sorted lexicographically; the position of an edge in
/// edges() is its coordinate in every edge-indexed vector elsewhere in the
/// library (group elements, relation matrices).
class Graph {
 public:
  /// Validates and canonicalises. Pairs may be given in either orientation;
  /// loops, out-of-range endpoints and duplicates are rejected.
  static Graph build(int n, std::span<const Edge> edges);
  static Graph build(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  int degree(int v) const { return std::popcount(adj_[v]); }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  /// Position of {u, v} in edges(), if present.
  std::optional<int> edge_index(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  Graph() = default;
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<Edge> edges_;
};

// Families. Vertex labels: path(n) has edges (i, i+1); star(n) has centre 0
// and leaves 1..n; complete_bipartite(a, b) has parts {0..a-1}, {a..a+b-1}.
Graph complete(int n);
Graph edgeless(int n);
Graph path(int n);
Graph star(int leaves);
Graph complete_bipartite(int a, int b);
Graph cycle(int n);

enum class FamilyKind { kComplete, kEdgeless, kPath, kStar, kCompleteBipartite, kCycle };

FamilyKind parse_family_kind(std::string_view name);
std::string family_name(FamilyKind kind);
Graph family(FamilyKind kind, std::span<const int> params);

/// Disjoint union; the vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
/// Disjoint union plus every edge between the two sides.
Graph join(const Graph& a, const Graph& b);
/// Vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);
/// Induced subgraph on the members of u, renumbered in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet u);

/// N[U]: U together with every neighbour of a member of U.
VertexSet closed_neighborhood(const Graph& g, VertexSet u);
/// Number of connected components of the induced subgraph on U; 0 for U empty.
int component_count_induced(const Graph& g, VertexSet u);
int component_count(const Graph& g);
/// n - (number of connected components).
int matroid_rank(const Graph& g);
bool is_connected(const Graph& g);

struct GraphInvariants {
  int alpha = 0;        // independence number
  int delta_max = 0;    // maximum degree
  bool is_tree = false;
  bool is_path = false;
  int leaves = 0;       // degree-1 vertices
  bool is_claw_free = false;
  bool is_cograph = false;
  int isolated_count = 0;
};

int independence_number(const Graph& g);
bool is_claw_free(const Graph& g);
bool is_cograph(const Graph& g);
/// Every component is a path (including isolated vertices).
bool is_linear_forest(const Graph& g);
/// Disjoint union of copies of K2, i.e. a perfect matching with no other edges.
bool is_matching_graph(const Graph& g);
GraphInvariants graph_invariants(const Graph& g);

/// Hansen's upper bound floor(1/2 + sqrt(1/4 + n^2 - n - 2m)) on alpha, in
/// exact integer arithmetic.
int hansen_independence_bound(int n, int m);

bool is_dominating(const Graph& g, VertexSet d);
/// Every D with N[D] = V and connected induced subgraph, in increasing bitset
/// order. Empty iff g is disconnected.
std::vector<VertexSet> connected_dominating_sets(const Graph& g);

/// Number of labelled graphs on n vertices, 2^(n choose 2).
std::uint64_t labeled_graph_count(int n);
/// The labelled graph whose edge set is selected by mask over the pairs
/// (0,1),(0,2),...,(n-2,n-1) in lexicographic order.
Graph labeled_graph(int n, std::uint64_t mask);
/// All labelled graphs on n vertices, 1 <= n <= 6, in increasing mask order.
std::vector<Graph> all_labeled_graphs(int n);
/// All labelled trees on n vertices (n^(n-2) of them), via Pruefer sequences.
std::vector<Graph> all_labeled_trees(int n);

std::string to_string(VertexSet s);
std::string to_edge_list(const Graph& g);

}  // namespace classpoly

#endif  // CLASSPOLY_GRAPH_HPP
