#include "classpoly/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "classpoly/errors.hpp"

namespace classpoly {

void check_subset_budget(int n, int cap_vertices) {
  if (n > cap_vertices) {
    throw BudgetError("subset enumeration over " + std::to_string(n) + " vertices exceeds the cap of " +
                          std::to_string(cap_vertices),
                      static_cast<double>(n), static_cast<double>(cap_vertices));
  }
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (auto b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Graph Graph::build(int n, std::span<const Edge> edges) {
  if (n < 1) throw GraphError("graph must have at least one vertex");
  if (n > kMaxVertices) throw GraphError("graphs with more than 62 vertices are not supported");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, 0);
  g.edges_.reserve(edges.size());
  for (auto e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw GraphError("vertex out of range in pair (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")", e);
    }
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u), e);
    if (e.u > e.v) std::swap(e.u, e.v);
    if ((g.adj_[e.u] >> e.v) & 1U) {
      throw GraphError("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")", e);
    }
    g.adj_[e.u] |= std::uint64_t{1} << e.v;
    g.adj_[e.v] |= std::uint64_t{1} << e.u;
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

std::optional<int> Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw GraphError(std::string(what) + " needs a positive size parameter");
}

}  // namespace

Graph complete(int n) {
  require_positive(n, "complete");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph::build(n, e);
}

Graph edgeless(int n) {
  require_positive(n, "edgeless");
  return Graph::build(n, std::span<const Edge>{});
}

Graph path(int n) {
  require_positive(n, "path");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::build(n, e);
}

Graph star(int leaves) {
  require_positive(leaves, "star");
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph::build(leaves + 1, e);
}

Graph complete_bipartite(int a, int b) {
  require_positive(a, "complete_bipartite");
  require_positive(b, "complete_bipartite");
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  return Graph::build(a + b, e);
}

Graph cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  e.push_back({0, n - 1});
  return Graph::build(n, e);
}

FamilyKind parse_family_kind(std::string_view name) {
  if (name == "complete" || name == "K") return FamilyKind::kComplete;
  if (name == "edgeless" || name == "D") return FamilyKind::kEdgeless;
  if (name == "path" || name == "P") return FamilyKind::kPath;
  if (name == "star" || name == "S") return FamilyKind::kStar;
  if (name == "complete_bipartite" || name == "complete-bipartite" || name == "bipartite" || name == "Kab") return FamilyKind::kCompleteBipartite;
  if (name == "cycle" || name == "C") return FamilyKind::kCycle;
  throw GraphError("unknown graph family '" + std::string(name) + "'");
}

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kComplete: return "complete";
    case FamilyKind::kEdgeless: return "edgeless";
    case FamilyKind::kPath: return "path";
    case FamilyKind::kStar: return "star";
    case FamilyKind::kCompleteBipartite: return "complete_bipartite";
    case FamilyKind::kCycle: return "cycle";
  }
  return "?";
}

Graph family(FamilyKind kind, std::span<const int> params) {
  const std::size_t want = kind == FamilyKind::kCompleteBipartite ? 2 : 1;
  if (params.size() != want) {
    throw GraphError(family_name(kind) + " takes " + std::to_string(want) + " parameter(s)");
  }
  switch (kind) {
    case FamilyKind::kComplete: return complete(params[0]);
    case FamilyKind::kEdgeless: return edgeless(params[0]);
    case FamilyKind::kPath: return path(params[0]);
    case FamilyKind::kStar: return star(params[0]);
    case FamilyKind::kCompleteBipartite: return complete_bipartite(params[0], params[1]);
    case FamilyKind::kCycle: return cycle(params[0]);
  }
  throw GraphError("unknown graph family");
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  const int shift = a.order();
  for (auto [u, v] : b.edges()) e.push_back({u + shift, v + shift});
  return Graph::build(a.order() + b.order(), e);
}

Graph join(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  const int shift = a.order();
  for (auto [u, v] : b.edges()) e.push_back({u + shift, v + shift});
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < b.order(); ++j) e.push_back({i, shift + j});
  return Graph::build(a.order() + b.order(), e);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw GraphError("relabelling has the wrong length");
  std::vector<bool> seen(g.order(), false);
  for (int p : perm) {
    if (p < 0 || p >= g.order() || seen[p]) throw GraphError("relabelling is not a permutation");
    seen[p] = true;
  }
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.push_back({perm[u], perm[v]});
  return Graph::build(g.order(), e);
}

Graph induced_subgraph(const Graph& g, VertexSet u) {
  const auto keep = u.members();
  if (keep.empty()) throw GraphError("induced subgraph on the empty set");
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
  std::vector<Edge> e;
  for (auto [a, b] : g.edges())
    if (pos[a] >= 0 && pos[b] >= 0) e.push_back({pos[a], pos[b]});
  return Graph::build(static_cast<int>(keep.size()), e);
}

VertexSet closed_neighborhood(const Graph& g, VertexSet u) {
  VertexSet out = u;
  for (auto b = u.bits(); b != 0; b &= b - 1) out |= g.neighbors(std::countr_zero(b));
  return out;
}

int component_count_induced(const Graph& g, VertexSet u) {
  int count = 0;
  std::uint64_t rest = u.bits();
  while (rest != 0) {
    std::uint64_t comp = rest & (~rest + 1);
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (auto b = frontier; b != 0; b &= b - 1) next |= g.neighbors(std::countr_zero(b)).bits();
      next &= rest & ~comp;
      comp |= next;
      frontier = next;
    }
    rest &= ~comp;
    ++count;
  }
  return count;
}

int component_count(const Graph& g) { return component_count_induced(g, g.vertices()); }

int matroid_rank(const Graph& g) { return g.order() - component_count(g); }

bool is_connected(const Graph& g) { return component_count(g) == 1; }

namespace {

int mis(const Graph& g, std::uint64_t cand, int taken, int best) {
  if (cand == 0) return std::max(best, taken);
  if (taken + std::popcount(cand) <= best) return best;
  int pick = -1;
  int pick_deg = -1;
  for (auto b = cand; b != 0; b &= b - 1) {
    const int v = std::countr_zero(b);
    const int d = std::popcount(g.neighbors(v).bits() & cand);
    if (d > pick_deg) {
      pick = v;
      pick_deg = d;
    }
  }
  if (pick_deg == 0) return std::max(best, taken + std::popcount(cand));
  const std::uint64_t bit = std::uint64_t{1} << pick;
  best = mis(g, cand & ~bit & ~g.neighbors(pick).bits(), taken + 1, best);
  return mis(g, cand & ~bit, taken, best);
}

bool cograph_rec(const Graph& g, std::uint64_t s) {
  if (std::popcount(s) <= 1) return true;
  const std::uint64_t start = s & (~s + 1);
  // Component of the lowest vertex in G[s].
  std::uint64_t comp = start, frontier = start;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (auto b = frontier; b != 0; b &= b - 1) next |= g.neighbors(std::countr_zero(b)).bits();
    next &= s & ~comp;
    comp |= next;
    frontier = next;
  }
  if (comp != s) return cograph_rec(g, comp) && cograph_rec(g, s & ~comp);
  // Connected; split along the complement instead.
  std::uint64_t cocomp = start;
  frontier = start;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (auto b = frontier; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      next |= ~g.neighbors(v).bits() & ~(std::uint64_t{1} << v);
    }
    next &= s & ~cocomp;
    cocomp |= next;
    frontier = next;
  }
  if (cocomp == s) return false;
  return cograph_rec(g, cocomp) && cograph_rec(g, s & ~cocomp);
}

}  // namespace

int independence_number(const Graph& g) { return mis(g, g.vertices().bits(), 0, 0); }

bool is_claw_free(const Graph& g) {
  for (int c = 0; c < g.order(); ++c) {
    const auto nb = g.neighbors(c).members();
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k)
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return false;
      }
  }
  return true;
}

bool is_cograph(const Graph& g) { return cograph_rec(g, g.vertices().bits()); }

bool is_linear_forest(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return g.size() == matroid_rank(g);
}

bool is_matching_graph(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 1) return false;
  return true;
}

GraphInvariants graph_invariants(const Graph& g) {
  GraphInvariants inv;
  inv.alpha = independence_number(g);
  for (int v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    inv.delta_max = std::max(inv.delta_max, d);
    if (d == 1) ++inv.leaves;
    if (d == 0) ++inv.isolated_count;
  }
  inv.is_tree = is_connected(g) && g.size() == g.order() - 1;
  inv.is_path = inv.is_tree && inv.delta_max <= 2;
  inv.is_claw_free = is_claw_free(g);
  inv.is_cograph = is_cograph(g);
  return inv;
}

int hansen_independence_bound(int n, int m) {
  // floor(1/2 + sqrt(1/4 + D)) is the largest a with (2a - 1)^2 <= 1 + 4D.
  const long long d = static_cast<long long>(n) * n - n - 2LL * m;
  if (d < 0) throw GraphError("Hansen bound needs m <= n(n-1)/2");
  long long a = 0;
  while ((2 * (a + 1) - 1) * (2 * (a + 1) - 1) <= 1 + 4 * d) ++a;
  return static_cast<int>(a);
}

bool is_dominating(const Graph& g, VertexSet d) { return closed_neighborhood(g, d) == g.vertices(); }

std::vector<VertexSet> connected_dominating_sets(const Graph& g) {
  check_subset_budget(g.order(), kDefaultSubsetCapVertices);
  std::vector<VertexSet> out;
  if (!is_connected(g)) return out;
  const std::uint64_t total = std::uint64_t{1} << g.order();
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    const VertexSet d(bits);
    if (is_dominating(g, d) && component_count_induced(g, d) == 1) out.push_back(d);
  }
  return out;
}

std::uint64_t labeled_graph_count(int n) {
  if (n < 1 || n > 11) throw GraphError("labelled graph count only for 1 <= n <= 11");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph(int n, std::uint64_t mask) {
  std::vector<Edge> e;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1U) e.push_back({i, j});
  if (bit < 64 && (mask >> bit) != 0) throw GraphError("edge mask has bits beyond the pair count");
  return Graph::build(n, e);
}

std::vector<Graph> all_labeled_graphs(int n) {
  if (n < 1 || n > 6) throw GraphError("labelled graph enumeration supports 1 <= n <= 6");
  const auto count = labeled_graph_count(n);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(labeled_graph(n, mask));
  return out;
}

std::vector<Graph> all_labeled_trees(int n) {
  if (n < 1 || n > 9) throw GraphError("labelled tree enumeration supports 1 <= n <= 9");
  if (n == 1) return {edgeless(1)};
  if (n == 2) return {complete(2)};
  std::vector<Graph> out;
  std::vector<int> seq(n - 2, 0);
  while (true) {
    std::vector<int> deg(n, 1);
    for (int s : seq) ++deg[s];
    std::vector<Edge> e;
    for (int s : seq) {
      int leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      e.push_back({leaf, s});
      --deg[leaf];
      --deg[s];
    }
    int a = -1;
    for (int v = 0; v < n; ++v)
      if (deg[v] == 1) {
        if (a < 0) {
          a = v;
        } else {
          e.push_back({a, v});
          break;
        }
      }
    out.push_back(Graph::build(n, e));
    int pos = n - 3;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  return out;
}

std::string to_string(VertexSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : s.members()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace classpoly
