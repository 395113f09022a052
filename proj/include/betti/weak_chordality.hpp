#pragma once

#include <betti/graph.hpp>
#include <betti/limits.hpp>

#include <optional>
#include <vector>

namespace betti {

/// True iff every chordless u-v path in G has exactly two edges. A pair with
/// no connecting path at all counts as a two-pair. Decided by the separator
/// test: u and v lie in different components of G - (N(u) ∩ N(v)).
/// Throws InvalidArgument when u = v or {u,v} is an edge.
bool is_two_pair(const Graph& g, Vertex u, Vertex v);

/// Same predicate by explicit enumeration of chordless u-v paths.
bool two_pair_oracle(const Graph& g, Vertex u, Vertex v);

/// Edges {u,v} of G whose endpoints form a two-pair in the complement,
/// sorted lexicographically.
std::vector<Edge> copair_edges(const Graph& g);

/// Lexicographically smallest co-pair edge, if any.
std::optional<Edge> first_copair_edge(const Graph& g);

/// Some induced cycle on >= 5 vertices, as a cyclic vertex sequence.
std::optional<std::vector<Vertex>> find_long_induced_cycle(const Graph& g);

/// Neither G nor its complement has an induced cycle on five or more
/// vertices. Throws GuardExceeded past limits.max_recognition_vertices.
bool is_weakly_chordal(const Graph& g, const Limits& limits = {});

/// Which split produced a neighborhood bipartition.
enum class BipartitionCase {
  kNoWU,       // W_U empty
  kNoWV,       // W_V empty
  kWUSide,     // W_U with u, W_UV with v
  kWUVSide,    // W_U and W_UV with u
  kExhaustive  // none of the above validated; found by search
};

const char* to_string(BipartitionCase c);

/// Decomposition of N = N(u) ∪ N(v) for an edge {u,v}, with the resulting
/// complete bipartite split X | Y of N (u ∈ X, v ∈ Y).
struct NvPartition {
  Edge edge;
  VertexSubset neighborhood;  // N(u) ∪ N(v)
  VertexSubset only_u;        // U = N \ N[v]
  VertexSubset only_v;        // V = N \ N[u]
  VertexSubset common;        // W = N(u) ∩ N(v)
  VertexSubset w_uv;          // adjacent to all of U ∪ V
  VertexSubset w_u;           // misses some vertex of V
  VertexSubset w_v;           // misses some vertex of U (and none of V)
  VertexSubset x;
  VertexSubset y;
  BipartitionCase which = BipartitionCase::kNoWU;
};

/// Every (x, y) ∈ X × Y is an edge of G, X ∩ Y = ∅, X and Y nonempty.
bool is_complete_bipartite(const Graph& g, VertexSubset x, VertexSubset y);

/// Complete bipartite subgraph of G on N(u) ∪ N(v) containing e = {u,v} as
/// a cross edge. Throws PreconditionFailed when G is not weakly chordal or
/// e is not a co-pair edge, and ProofObligationFailed if no split exists.
NvPartition nv_bipartition(const Graph& g, const Edge& e, const Limits& limits = {});

}  // namespace betti
