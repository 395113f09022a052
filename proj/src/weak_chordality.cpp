#include <betti/weak_chordality.hpp>

#include <betti/errors.hpp>

namespace betti {

namespace {

void check_pair(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) {
    throw InvalidArgument("vertex pair (" + std::to_string(u) + "," + std::to_string(v) + ") outside V(G)");
  }
  if (u == v) throw InvalidArgument("a two-pair needs two distinct vertices");
  if (g.adjacent(u, v)) throw InvalidArgument("a two-pair must be non-adjacent, " + to_string(Edge(u, v)) + " is an edge");
}

// Vertices reachable from `start` using only vertices in `allowed`.
Mask reachable(const Graph& g, Vertex start, Mask allowed) {
  Mask seen = vertex_bit(start);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask m = frontier; m != 0; m &= m - 1) next |= g.neighbor_mask(__builtin_ctzll(m) + 1);
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

// Depth-first search over chordless paths starting at the path's first
// vertex; false as soon as one reaches `target` with a length other than 2.
bool chordless_paths_have_length_two(const Graph& g, Vertex last, Mask on_path, int edges, Vertex target) {
  const Mask earlier = on_path & ~vertex_bit(last);
  for (Mask m = g.neighbor_mask(last) & ~on_path; m != 0; m &= m - 1) {
    const Vertex w = __builtin_ctzll(m) + 1;
    if (g.neighbor_mask(w) & earlier) continue;  // chord
    if (w == target) {
      if (edges + 1 != 2) return false;
      continue;
    }
    if (!chordless_paths_have_length_two(g, w, on_path | vertex_bit(w), edges + 1, target)) return false;
  }
  return true;
}

// Extends the chordless path start = p0, ..., last looking for an induced
// cycle on >= 5 vertices whose smallest vertex is `start`.
bool extend_cycle(const Graph& g, Vertex start, std::vector<Vertex>& path, Mask on_path) {
  const Vertex last = path.back();
  const Mask inner = on_path & ~vertex_bit(last) & ~vertex_bit(start);
  const Mask above_start = ~first_vertices(start);
  for (Mask m = g.neighbor_mask(last) & ~on_path & above_start; m != 0; m &= m - 1) {
    const Vertex w = __builtin_ctzll(m) + 1;
    if (g.neighbor_mask(w) & inner) continue;
    if (g.adjacent(w, start)) {
      // Closes the cycle start, ..., last, w.
      if (path.size() + 1 >= 5) {
        path.push_back(w);
        return true;
      }
      continue;
    }
    path.push_back(w);
    if (extend_cycle(g, start, path, on_path | vertex_bit(w))) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

bool is_two_pair(const Graph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  const Mask common = g.neighbor_mask(u) & g.neighbor_mask(v);
  const Mask allowed = g.vertex_set().bits() & ~common;
  return (reachable(g, u, allowed) & vertex_bit(v)) == 0;
}

bool two_pair_oracle(const Graph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  return chordless_paths_have_length_two(g, u, vertex_bit(u), 0, v);
}

std::vector<Edge> copair_edges(const Graph& g) {
  const Graph co = complement(g);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (is_two_pair(co, e.u, e.v)) out.push_back(e);
  }
  return out;
}

std::optional<Edge> first_copair_edge(const Graph& g) {
  const Graph co = complement(g);
  for (const Edge& e : g.edges()) {
    if (is_two_pair(co, e.u, e.v)) return e;
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> find_long_induced_cycle(const Graph& g) {
  for (Vertex start = 1; start <= g.order(); ++start) {
    for (Mask m = g.neighbor_mask(start) & ~first_vertices(start); m != 0; m &= m - 1) {
      const Vertex second = __builtin_ctzll(m) + 1;
      std::vector<Vertex> path{start, second};
      if (extend_cycle(g, start, path, vertex_bit(start) | vertex_bit(second))) return path;
    }
  }
  return std::nullopt;
}

bool is_weakly_chordal(const Graph& g, const Limits& limits) {
  if (g.order() > limits.max_recognition_vertices) {
    throw GuardExceeded("weak chordality check on " + std::to_string(g.order()) +
                        " vertices exceeds the guard of " + std::to_string(limits.max_recognition_vertices));
  }
  return !find_long_induced_cycle(g) && !find_long_induced_cycle(complement(g));
}

const char* to_string(BipartitionCase c) {
  switch (c) {
    case BipartitionCase::kNoWU: return "W_U empty";
    case BipartitionCase::kNoWV: return "W_V empty";
    case BipartitionCase::kWUSide: return "W_U with u";
    case BipartitionCase::kWUVSide: return "W_U and W_UV with u";
    case BipartitionCase::kExhaustive: return "exhaustive";
  }
  return "?";
}

bool is_complete_bipartite(const Graph& g, VertexSubset x, VertexSubset y) {
  if (x.empty() || y.empty() || !(x & y).empty()) return false;
  for (Vertex a : x.vertices()) {
    if (!y.is_subset_of(g.neighbors(a))) return false;
  }
  return true;
}

NvPartition nv_bipartition(const Graph& g, const Edge& e, const Limits& limits) {
  if (!g.has_edge(e)) throw InvalidArgument(to_string(e) + " is not an edge");
  if (!is_weakly_chordal(g, limits)) throw PreconditionFailed("graph is not weakly chordal");
  if (!is_two_pair(complement(g), e.u, e.v)) {
    throw PreconditionFailed(to_string(e) + " is not a co-pair edge");
  }
  const Vertex u = e.u;
  const Vertex v = e.v;
  NvPartition p;
  p.edge = e;
  p.neighborhood = g.neighbors(u) | g.neighbors(v);
  p.only_u = p.neighborhood - g.closed_neighbors(v);
  p.only_v = p.neighborhood - g.closed_neighbors(u);
  p.common = g.neighbors(u) & g.neighbors(v);
  for (Vertex w : p.common.vertices()) {
    const VertexSubset nw = g.neighbors(w);
    if (!p.only_v.is_subset_of(nw)) {
      p.w_u = p.w_u | VertexSubset{w};
    } else if (!p.only_u.is_subset_of(nw)) {
      p.w_v = p.w_v | VertexSubset{w};
    } else {
      p.w_uv = p.w_uv | VertexSubset{w};
    }
  }
  const VertexSubset su{u};
  const VertexSubset sv{v};
  struct Candidate {
    BipartitionCase which;
    VertexSubset x;
    VertexSubset y;
  };
  std::vector<Candidate> candidates;
  if (p.w_u.empty()) candidates.push_back({BipartitionCase::kNoWU, su | p.only_v, sv | p.only_u | p.w_v | p.w_uv});
  if (p.w_v.empty()) candidates.push_back({BipartitionCase::kNoWV, su | p.only_v | p.w_u | p.w_uv, sv | p.only_u});
  candidates.push_back({BipartitionCase::kWUSide, su | p.only_v | p.w_u, sv | p.only_u | p.w_v | p.w_uv});
  candidates.push_back({BipartitionCase::kWUVSide, su | p.only_v | p.w_u | p.w_uv, sv | p.only_u | p.w_v});
  for (const auto& c : candidates) {
    if ((c.x | c.y) == p.neighborhood && is_complete_bipartite(g, c.x, c.y)) {
      p.x = c.x;
      p.y = c.y;
      p.which = c.which;
      return p;
    }
  }

  // Non-edges of G inside N must stay on one side, so X and Y are unions of
  // components of the complement restricted to N.
  const Graph co = complement(g);
  std::vector<Mask> components;
  for (Mask left = p.neighborhood.bits(); left != 0;) {
    const Vertex s = __builtin_ctzll(left) + 1;
    const Mask comp = reachable(co, s, p.neighborhood.bits());
    components.push_back(comp);
    left &= ~comp;
  }
  int cu = -1;
  int cv = -1;
  std::vector<Mask> free;
  for (int k = 0; k < static_cast<int>(components.size()); ++k) {
    if (components[k] & vertex_bit(u)) cu = k;
    if (components[k] & vertex_bit(v)) cv = k;
  }
  if (cu == cv) {
    throw ProofObligationFailed("no complete bipartite subgraph on N(u) ∪ N(v) separates " + to_string(e));
  }
  for (int k = 0; k < static_cast<int>(components.size()); ++k) {
    if (k != cu && k != cv) free.push_back(components[k]);
  }
  // Any assignment of the free components works; take all of them on v's side.
  Mask x = components[cu];
  Mask y = components[cv];
  for (Mask c : free) y |= c;
  p.x = VertexSubset(x);
  p.y = VertexSubset(y);
  p.which = BipartitionCase::kExhaustive;
  if (!is_complete_bipartite(g, p.x, p.y)) {
    throw ProofObligationFailed("complement components of N(u) ∪ N(v) do not give a complete bipartite split");
  }
  return p;
}

}  // namespace betti
