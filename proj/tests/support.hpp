#pragma once

// Test-only helpers: graph enumeration, random graphs and brute-force
// oracles that share no code path with the library algorithms they check.

#include <betti/certificates.hpp>
#include <betti/graph.hpp>
#include <betti/homology.hpp>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

namespace betti::testing {

/// Pairs (u, v), u < v, in a fixed order; bit k of a code selects pair k.
inline std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> out;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) out.emplace_back(u, v);
  }
  return out;
}

inline Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<Mask> adj(n, 0);
  const auto pairs = all_pairs(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if ((code >> k) & 1) {
      adj[pairs[k].u - 1] |= vertex_bit(pairs[k].v);
      adj[pairs[k].v - 1] |= vertex_bit(pairs[k].u);
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

/// Calls f on every labeled graph with exactly n vertices.
inline void for_each_graph(int n, const std::function<void(const Graph&)>& f) {
  const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t code = 0; code < count; ++code) f(graph_from_code(n, code));
}

inline Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (const Edge& e : all_pairs(n)) {
    if (coin(rng)) edges.push_back(e);
  }
  return Graph::from_edge_list(n, edges);
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  // perm[v - 1] is the new label of v.
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u - 1], perm[e.v - 1]);
  return Graph::from_edge_list(g.order(), edges);
}

inline VertexSubset relabel(VertexSubset s, const std::vector<Vertex>& perm) {
  Mask out = 0;
  for (Vertex v : s.vertices()) out |= vertex_bit(perm[v - 1]);
  return VertexSubset(out);
}

// ---- oracles ----------------------------------------------------------------

/// Induced subgraph on `s` is a cycle: connected and 2-regular.
inline bool induces_cycle(const Graph& g, Mask s) {
  if (__builtin_popcountll(s) < 3) return false;
  for (Mask m = s; m != 0; m &= m - 1) {
    if (__builtin_popcountll(g.neighbor_mask(__builtin_ctzll(m) + 1) & s) != 2) return false;
  }
  Mask seen = s & -s;
  for (bool grew = true; grew;) {
    grew = false;
    for (Mask m = seen; m != 0; m &= m - 1) {
      const Mask next = g.neighbor_mask(__builtin_ctzll(m) + 1) & s & ~seen;
      if (next) {
        seen |= next;
        grew = true;
      }
    }
  }
  return seen == s;
}

inline bool has_long_induced_cycle_brute(const Graph& g) {
  const Mask end = Mask{1} << g.order();
  for (Mask s = 0; s < end; ++s) {
    if (__builtin_popcountll(s) >= 5 && induces_cycle(g, s)) return true;
  }
  return false;
}

inline bool weakly_chordal_brute(const Graph& g) {
  return !has_long_induced_cycle_brute(g) && !has_long_induced_cycle_brute(complement(g));
}

/// All splits X | Y of the block with X × Y ⊆ E(G), X holding the smallest
/// vertex, by trying every subset.
inline std::set<std::pair<Mask, Mask>> bipartitions_brute(const Graph& g, Mask block) {
  std::set<std::pair<Mask, Mask>> out;
  const Mask first = block & -block;
  const Mask others = block & ~first;
  Mask sub = 0;
  do {
    const Mask x = first | sub;
    const Mask y = block & ~x;
    bool ok = y != 0;
    for (Mask m = x; m != 0 && ok; m &= m - 1) {
      if ((g.neighbor_mask(__builtin_ctzll(m) + 1) & y) != y) ok = false;
    }
    if (ok) out.insert({x, y});
    sub = (sub - others) & others;
  } while (sub != 0);
  return out;
}

inline bool three_disjoint_brute(const Graph& g, const Edge& e, const Edge& f) {
  const Vertex a[2] = {e.u, e.v};
  const Vertex b[2] = {f.u, f.v};
  for (Vertex x : a) {
    for (Vertex y : b) {
      if (x == y || g.adjacent(x, y)) return false;
    }
  }
  return true;
}

/// Set of r such that some strongly disjoint family with r blocks covers
/// exactly sigma: every set partition into blocks, every bipartition of each
/// block, every choice of cross edges.
inline std::uint64_t family_counts_brute(const Graph& g, Mask sigma) {
  std::uint64_t result = 0;
  std::vector<std::vector<Edge>> block_edges;
  std::function<void(Mask)> partition = [&](Mask remaining) {
    if (remaining == 0) {
      // Pick one cross edge per block, pairwise 3-disjoint.
      std::vector<Edge> chosen;
      std::function<bool(std::size_t)> pick = [&](std::size_t k) {
        if (k == block_edges.size()) return true;
        for (const Edge& e : block_edges[k]) {
          bool ok = true;
          for (const Edge& f : chosen) ok = ok && three_disjoint_brute(g, e, f);
          if (!ok) continue;
          chosen.push_back(e);
          if (pick(k + 1)) return true;
          chosen.pop_back();
        }
        return false;
      };
      if (pick(0)) result |= std::uint64_t{1} << block_edges.size();
      return;
    }
    const Mask first = remaining & -remaining;
    const Mask others = remaining & ~first;
    Mask sub = 0;
    do {
      sub = (sub - others) & others;
      const Mask block = first | sub;
      if (__builtin_popcountll(block) < 2) continue;
      // Edges that cross at least one valid bipartition of the block.
      std::set<Edge> edges;
      for (const auto& [x, y] : bipartitions_brute(g, block)) {
        for (Vertex a : VertexSubset(x).vertices()) {
          for (Vertex b : VertexSubset(y).vertices()) edges.insert(Edge(a, b));
        }
      }
      if (edges.empty()) continue;
      block_edges.emplace_back(edges.begin(), edges.end());
      partition(remaining & ~block);
      block_edges.pop_back();
    } while (sub != others);
  };
  partition(sigma);
  return result;
}

inline int induced_matching_brute(const Graph& g) {
  const auto& edges = g.edges();
  int best = 0;
  std::function<void(std::size_t, std::vector<Edge>&)> go = [&](std::size_t k, std::vector<Edge>& chosen) {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (std::size_t j = k; j < edges.size(); ++j) {
      bool ok = true;
      for (const Edge& f : chosen) ok = ok && three_disjoint_brute(g, edges[j], f);
      if (!ok) continue;
      chosen.push_back(edges[j]);
      go(j + 1, chosen);
      chosen.pop_back();
    }
  };
  std::vector<Edge> chosen;
  go(0, chosen);
  return best;
}

inline int big_height_brute(const Graph& g) {
  const int n = g.order();
  auto covers = [&](Mask c) {
    for (const Edge& e : g.edges()) {
      if ((c & e.mask()) == 0) return false;
    }
    return true;
  };
  int best = 0;
  for (Mask c = 0; c < (Mask{1} << n); ++c) {
    if (!covers(c)) continue;
    bool minimal = true;
    for (Mask m = c; m != 0 && minimal; m &= m - 1) minimal = !covers(c & ~(m & -m));
    if (minimal) best = std::max(best, __builtin_popcountll(c));
  }
  return best;
}

/// Rank by dense Gaussian elimination over exact rationals.
inline std::size_t rational_rank_dense(const SparseMatrix& m) {
  // Compare through numerator(): rational<cpp_int> == int does not terminate
  // with this Boost version.
  using Q = boost::rational<boost::multiprecision::cpp_int>;
  std::vector<std::vector<Q>> a(m.rows, std::vector<Q>(m.cols, Q(0)));
  for (const auto& e : m.entries) a[e.row][e.col] += Q(e.value);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t piv = rank;
    while (piv < m.rows && a[piv][c].numerator().is_zero()) ++piv;
    if (piv == m.rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank || a[r][c].numerator().is_zero()) continue;
      const Q f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Rank over F_p by dense elimination.
inline std::size_t modular_rank_dense(const SparseMatrix& m, std::int64_t p) {
  std::vector<std::vector<std::int64_t>> a(m.rows, std::vector<std::int64_t>(m.cols, 0));
  for (const auto& e : m.entries) a[e.row][e.col] = ((a[e.row][e.col] + e.value) % p + p) % p;
  auto inv = [p](std::int64_t x) {
    std::int64_t r = 1, b = x, e = p - 2;
    for (; e > 0; e >>= 1, b = b * b % p) {
      if (e & 1) r = r * b % p;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t piv = rank;
    while (piv < m.rows && a[piv][c] == 0) ++piv;
    if (piv == m.rows) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t iv = inv(a[rank][c]);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::int64_t f = a[r][c] * iv % p;
      for (std::size_t k = c; k < m.cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace betti::testing
