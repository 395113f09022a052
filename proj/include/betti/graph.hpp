#pragma once

#include <betti/limits.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace betti {

/// Vertex label. Vertices of a graph on n vertices are 1..n.
using Vertex = int;

/// Raw vertex bitmask: bit (v - 1) stands for vertex v.
using Mask = std::uint64_t;

inline constexpr Mask vertex_bit(Vertex v) { return Mask{1} << (v - 1); }

inline constexpr Mask first_vertices(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  [[nodiscard]] Mask mask() const { return vertex_bit(u) | vertex_bit(v); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// A subset of the vertex set [n], kept as a characteristic bitmask.
class VertexSubset {
 public:
  VertexSubset() = default;
  explicit VertexSubset(Mask bits) : bits_(bits) {}
  VertexSubset(std::initializer_list<Vertex> vertices);

  static VertexSubset from_vertices(std::span<const Vertex> vertices);
  static VertexSubset all(int n) { return VertexSubset(first_vertices(n)); }

  [[nodiscard]] Mask bits() const { return bits_; }
  [[nodiscard]] int size() const { return __builtin_popcountll(bits_); }
  [[nodiscard]] bool empty() const { return bits_ == 0; }
  [[nodiscard]] bool contains(Vertex v) const {
    return v >= 1 && v <= 64 && (bits_ & vertex_bit(v)) != 0;
  }
  [[nodiscard]] bool is_subset_of(const VertexSubset& other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  /// Smallest vertex; 0 when empty.
  [[nodiscard]] Vertex min() const {
    return bits_ == 0 ? 0 : __builtin_ctzll(bits_) + 1;
  }
  /// Vertices in ascending order.
  [[nodiscard]] std::vector<Vertex> vertices() const;

  friend VertexSubset operator|(VertexSubset a, VertexSubset b) { return VertexSubset(a.bits_ | b.bits_); }
  friend VertexSubset operator&(VertexSubset a, VertexSubset b) { return VertexSubset(a.bits_ & b.bits_); }
  /// Set difference.
  friend VertexSubset operator-(VertexSubset a, VertexSubset b) { return VertexSubset(a.bits_ & ~b.bits_); }
  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  Mask bits_ = 0;
};

std::string to_string(const VertexSubset& s);

/// Immutable simple undirected graph on the vertices 1..n.
///
/// Adjacency is kept as one neighbor bitmask per vertex; the sorted edge list
/// is derived from it at construction. Every operation that "modifies" a
/// graph returns a new one.
class Graph {
 public:
  /// The graph with no vertices.
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate pairs are merged.
  /// Throws InvalidArgument on n < 1, labels outside 1..n or loops, and
  /// GuardExceeded when n is above `max_vertices`.
  static Graph from_edge_list(int n, std::span<const Edge> pairs,
                              int max_vertices = Limits{}.max_graph_vertices);
  static Graph from_edge_list(int n, std::initializer_list<Edge> pairs,
                              int max_vertices = Limits{}.max_graph_vertices);

  /// n isolated vertices; n = 0 gives the graph with no vertices.
  static Graph edgeless(int n);

  /// Builds from per-vertex neighbor masks (index 0 is vertex 1). The masks
  /// must already be symmetric and irreflexive.
  static Graph from_adjacency(std::vector<Mask> adjacency);

  [[nodiscard]] int order() const { return static_cast<int>(adj_.size()); }
  [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }

  [[nodiscard]] VertexSubset vertex_set() const { return VertexSubset::all(order()); }
  [[nodiscard]] bool has_vertex(Vertex v) const { return v >= 1 && v <= order(); }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
    return (adj_[u - 1] & vertex_bit(v)) != 0;
  }
  [[nodiscard]] bool has_edge(const Edge& e) const {
    return has_vertex(e.u) && has_vertex(e.v) && adjacent(e.u, e.v);
  }
  /// Open neighborhood N(u).
  [[nodiscard]] VertexSubset neighbors(Vertex u) const { return VertexSubset(adj_[u - 1]); }
  /// Closed neighborhood N[u].
  [[nodiscard]] VertexSubset closed_neighbors(Vertex u) const {
    return VertexSubset(adj_[u - 1] | vertex_bit(u));
  }
  [[nodiscard]] Mask neighbor_mask(Vertex u) const { return adj_[u - 1]; }
  [[nodiscard]] int degree(Vertex u) const { return __builtin_popcountll(adj_[u - 1]); }

  [[nodiscard]] bool is_complete() const;
  [[nodiscard]] bool is_independent(VertexSubset s) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  explicit Graph(std::vector<Mask> adjacency);

  std::vector<Mask> adj_;
  std::vector<Edge> edges_;
};

/// An induced subgraph together with its order-preserving relabeling:
/// vertex k of `graph` is vertex `to_parent[k - 1]` of the parent graph.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  [[nodiscard]] Vertex parent_vertex(Vertex v) const { return to_parent[v - 1]; }
  [[nodiscard]] VertexSubset lift(VertexSubset s) const;
  [[nodiscard]] Edge lift(const Edge& e) const { return {parent_vertex(e.u), parent_vertex(e.v)}; }
};

Graph complement(const Graph& g);

/// Induced subgraph on `sigma`, relabeled to 1..|sigma|. Throws
/// InvalidArgument when sigma is empty or not contained in V(G).
InducedSubgraph induced(const Graph& g, VertexSubset sigma);

/// Removes one edge, keeping every vertex. Throws InvalidArgument on a non-edge.
Graph delete_edge(const Graph& g, const Edge& e);

/// Removes a vertex set; the survivors are relabeled in order. Deleting every
/// vertex yields the graph with no vertices.
InducedSubgraph delete_vertices(const Graph& g, VertexSubset removed);

/// Maximum size of a minimal vertex cover, computed as n minus the size of
/// the smallest maximal independent set. Throws InvalidArgument on an
/// edgeless graph.
int big_height(const Graph& g);

// Small named graphs.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);

/// Katzman's 11-vertex graph. Numbering: a0 = 1, a1..a5 = 2..6, b1..b5 = 7..11.
Graph katzman_graph();

/// Builtins available to the CLI: k2, p3, p4, c4, c5, c6, star3, 2k2, katzman.
Graph builtin_graph(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace betti
