#include <betti/graph.hpp>

#include <betti/errors.hpp>

#include <algorithm>
#include <sstream>

namespace betti {

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

VertexSubset::VertexSubset(std::initializer_list<Vertex> vertices)
    : VertexSubset(from_vertices(std::span<const Vertex>(vertices.begin(), vertices.size()))) {}

VertexSubset VertexSubset::from_vertices(std::span<const Vertex> vertices) {
  Mask bits = 0;
  for (Vertex v : vertices) {
    if (v < 1 || v > kMaxRepresentableVertices) {
      throw InvalidArgument("vertex label " + std::to_string(v) + " out of range");
    }
    bits |= vertex_bit(v);
  }
  return VertexSubset(bits);
}

std::vector<Vertex> VertexSubset::vertices() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(__builtin_ctzll(m) + 1);
  return out;
}

std::string to_string(const VertexSubset& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Vertex v : s.vertices()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

Graph::Graph(std::vector<Mask> adjacency) : adj_(std::move(adjacency)) {
  const int n = order();
  for (Vertex u = 1; u <= n; ++u) {
    for (Mask m = adj_[u - 1] & ~first_vertices(u); m != 0; m &= m - 1) {
      edges_.emplace_back(u, __builtin_ctzll(m) + 1);
    }
  }
}

Graph Graph::from_edge_list(int n, std::span<const Edge> pairs, int max_vertices) {
  if (n < 1) throw InvalidArgument("graph needs at least one vertex, got n = " + std::to_string(n));
  if (n > max_vertices || n > kMaxRepresentableVertices) {
    throw GuardExceeded("graph has " + std::to_string(n) + " vertices, guard is " +
                        std::to_string(std::min(max_vertices, kMaxRepresentableVertices)));
  }
  std::vector<Mask> adj(n, 0);
  for (const Edge& e : pairs) {
    if (e.u < 1 || e.v > n) {
      throw InvalidArgument("edge " + to_string(e) + " uses a vertex outside 1.." + std::to_string(n));
    }
    if (e.u == e.v) throw InvalidArgument("loop at vertex " + std::to_string(e.u));
    adj[e.u - 1] |= vertex_bit(e.v);
    adj[e.v - 1] |= vertex_bit(e.u);
  }
  return Graph(std::move(adj));
}

Graph Graph::from_edge_list(int n, std::initializer_list<Edge> pairs, int max_vertices) {
  return from_edge_list(n, std::span<const Edge>(pairs.begin(), pairs.size()), max_vertices);
}

Graph Graph::edgeless(int n) { return Graph(std::vector<Mask>(n, 0)); }

Graph Graph::from_adjacency(std::vector<Mask> adjacency) { return Graph(std::move(adjacency)); }

bool Graph::is_complete() const {
  const Mask all = first_vertices(order());
  for (Vertex u = 1; u <= order(); ++u) {
    if ((adj_[u - 1] | vertex_bit(u)) != all) return false;
  }
  return true;
}

bool Graph::is_independent(VertexSubset s) const {
  for (Mask m = s.bits(); m != 0; m &= m - 1) {
    if (adj_[__builtin_ctzll(m)] & s.bits()) return false;
  }
  return true;
}

VertexSubset InducedSubgraph::lift(VertexSubset s) const {
  Mask out = 0;
  for (Mask m = s.bits(); m != 0; m &= m - 1) out |= vertex_bit(to_parent[__builtin_ctzll(m)]);
  return VertexSubset(out);
}

Graph complement(const Graph& g) {
  const int n = g.order();
  const Mask all = first_vertices(n);
  std::vector<Mask> adj(n);
  for (Vertex u = 1; u <= n; ++u) adj[u - 1] = all & ~g.neighbor_mask(u) & ~vertex_bit(u);
  return Graph::from_adjacency(std::move(adj));
}

namespace {

InducedSubgraph restrict_to(const Graph& g, Mask keep) {
  InducedSubgraph out;
  for (Mask m = keep; m != 0; m &= m - 1) out.to_parent.push_back(__builtin_ctzll(m) + 1);
  const int k = static_cast<int>(out.to_parent.size());
  std::vector<Mask> adj(k, 0);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (g.adjacent(out.to_parent[a], out.to_parent[b])) {
        adj[a] |= Mask{1} << b;
        adj[b] |= Mask{1} << a;
      }
    }
  }
  out.graph = Graph::from_adjacency(std::move(adj));
  return out;
}

}  // namespace

InducedSubgraph induced(const Graph& g, VertexSubset sigma) {
  if (sigma.empty()) throw InvalidArgument("induced subgraph on the empty set");
  if (!sigma.is_subset_of(g.vertex_set())) {
    throw InvalidArgument("vertex set " + to_string(sigma) + " is not contained in V(G)");
  }
  return restrict_to(g, sigma.bits());
}

Graph delete_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) throw InvalidArgument("cannot delete non-edge " + to_string(e));
  std::vector<Mask> adj(g.order());
  for (Vertex u = 1; u <= g.order(); ++u) adj[u - 1] = g.neighbor_mask(u);
  adj[e.u - 1] &= ~vertex_bit(e.v);
  adj[e.v - 1] &= ~vertex_bit(e.u);
  return Graph::from_adjacency(std::move(adj));
}

InducedSubgraph delete_vertices(const Graph& g, VertexSubset removed) {
  if (!removed.is_subset_of(g.vertex_set())) {
    throw InvalidArgument("vertex set " + to_string(removed) + " is not contained in V(G)");
  }
  return restrict_to(g, g.vertex_set().bits() & ~removed.bits());
}

namespace {

// Bron-Kerbosch with pivoting on the complement: maximal cliques of the
// complement are the maximal independent sets of g. Tracks the smallest one.
void smallest_maximal_independent(const Graph& g, Mask chosen, Mask candidates, Mask excluded,
                                  int& best) {
  const int size = __builtin_popcountll(chosen);
  if (size >= best) return;
  if (candidates == 0 && excluded == 0) {
    best = size;
    return;
  }
  // Non-neighbors in g are neighbors in the complement.
  auto non_neighbors = [&](Vertex v) { return ~g.neighbor_mask(v) & ~vertex_bit(v); };
  const Mask pool = candidates | excluded;
  Vertex pivot = __builtin_ctzll(pool) + 1;
  int pivot_cover = -1;
  for (Mask m = pool; m != 0; m &= m - 1) {
    const Vertex w = __builtin_ctzll(m) + 1;
    const int cover = __builtin_popcountll(candidates & non_neighbors(w));
    if (cover > pivot_cover) {
      pivot_cover = cover;
      pivot = w;
    }
  }
  for (Mask m = candidates & ~non_neighbors(pivot); m != 0; m &= m - 1) {
    const Vertex v = __builtin_ctzll(m) + 1;
    const Mask bit = vertex_bit(v);
    smallest_maximal_independent(g, chosen | bit, candidates & non_neighbors(v),
                                 excluded & non_neighbors(v), best);
    candidates &= ~bit;
    excluded |= bit;
  }
}

}  // namespace

int big_height(const Graph& g) {
  if (g.edge_count() == 0) throw InvalidArgument("big-height is undefined for an edgeless graph");
  int best = g.order() + 1;
  smallest_maximal_independent(g, 0, g.vertex_set().bits(), 0, best);
  return g.order() - best;
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n, 1);
  return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 2; v <= leaves + 1; ++v) edges.emplace_back(1, v);
  return Graph::from_edge_list(leaves + 1, edges);
}

Graph katzman_graph() {
  constexpr Vertex a0 = 1;
  auto a = [](int i) { return 1 + i; };
  auto b = [](int i) { return 6 + i; };
  std::vector<Edge> edges;
  for (int i = 1; i <= 5; ++i) edges.emplace_back(a0, a(i));
  // inner pentagram
  edges.emplace_back(a(1), a(3));
  edges.emplace_back(a(3), a(5));
  edges.emplace_back(a(5), a(2));
  edges.emplace_back(a(2), a(4));
  edges.emplace_back(a(4), a(1));
  // outer pentagon
  for (int i = 1; i <= 5; ++i) edges.emplace_back(b(i), b(i % 5 + 1));
  for (int i = 1; i <= 5; ++i) edges.emplace_back(a(i), b(i));
  // skew spokes
  edges.emplace_back(a(1), b(5));
  edges.emplace_back(a(5), b(4));
  edges.emplace_back(a(4), b(3));
  edges.emplace_back(a(3), b(2));
  edges.emplace_back(a(2), b(1));
  return Graph::from_edge_list(11, edges);
}

std::vector<std::string> builtin_names() {
  return {"k2", "p3", "p4", "c4", "c5", "c6", "star3", "2k2", "katzman"};
}

Graph builtin_graph(const std::string& name) {
  if (name == "k2") return complete_graph(2);
  if (name == "p3") return path_graph(3);
  if (name == "p4") return path_graph(4);
  if (name == "c4") return cycle_graph(4);
  if (name == "c5") return cycle_graph(5);
  if (name == "c6") return cycle_graph(6);
  if (name == "star3") return star_graph(3);
  if (name == "2k2") return Graph::from_edge_list(4, {{1, 2}, {3, 4}});
  if (name == "katzman") return katzman_graph();
  throw InvalidArgument("unknown builtin graph '" + name + "'");
}

}  // namespace betti
