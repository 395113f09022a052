#include <betti/certificates.hpp>

#include <betti/errors.hpp>
#include <betti/graph_io.hpp>
#include <betti/hochster.hpp>
#include <betti/weak_chordality.hpp>

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace betti {

VertexSubset StronglyDisjointFamily::covered() const {
  VertexSubset out;
  for (const auto& b : blocks) out = out | b.vertices();
  return out;
}

int StronglyDisjointFamily::weight() const {
  int total = 0;
  for (const auto& b : blocks) total += b.vertices().size();
  return total - size();
}

std::string to_string(const StronglyDisjointFamily& fam) {
  std::ostringstream os;
  for (std::size_t k = 0; k < fam.blocks.size(); ++k) {
    if (k > 0) os << ' ';
    os << "B" << k + 1 << "=" << to_string(fam.blocks[k].x) << "|" << to_string(fam.blocks[k].y);
    if (k < fam.reps.size()) os << " e" << k + 1 << "=" << to_string(fam.reps[k]);
  }
  return os.str();
}

bool is_3_disjoint(const Graph& g, const Edge& e, const Edge& f) {
  if (!g.has_edge(e)) throw InvalidArgument(to_string(e) + " is not an edge");
  if (!g.has_edge(f)) throw InvalidArgument(to_string(f) + " is not an edge");
  const Mask reach = g.closed_neighbors(e.u).bits() | g.closed_neighbors(e.v).bits();
  return (reach & f.mask()) == 0;
}

namespace {

// Complement components of g restricted to `block`, ordered by smallest vertex.
std::vector<Mask> complement_components(const Graph& g, Mask block) {
  std::vector<Mask> out;
  for (Mask left = block; left != 0;) {
    Mask comp = left & -left;
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask m = frontier; m != 0; m &= m - 1) {
        const Vertex w = __builtin_ctzll(m) + 1;
        next |= block & ~g.neighbor_mask(w) & ~vertex_bit(w);
      }
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

void check_search_size(VertexSubset s, const Limits& limits) {
  if (s.size() > limits.max_search_vertices) {
    throw GuardExceeded("family search over " + std::to_string(s.size()) + " vertices exceeds the guard of " +
                        std::to_string(limits.max_search_vertices));
  }
}

int matching_search(const Graph& g, Mask available, int current, int best) {
  // Every further edge uses two available vertices.
  if (current + __builtin_popcountll(available) / 2 <= best) return best;
  Mask a_bits = available;
  while (a_bits != 0 && (g.neighbor_mask(__builtin_ctzll(a_bits) + 1) & available) == 0) a_bits &= a_bits - 1;
  if (a_bits == 0) return std::max(best, current);
  const Vertex a = __builtin_ctzll(a_bits) + 1;
  // Either some edge at a is in the matching...
  for (Mask m = g.neighbor_mask(a) & available; m != 0; m &= m - 1) {
    const Vertex b = __builtin_ctzll(m) + 1;
    const Mask blocked = g.closed_neighbors(a).bits() | g.closed_neighbors(b).bits();
    best = matching_search(g, available & ~blocked, current + 1, best);
  }
  // ...or a is not an endpoint.
  return matching_search(g, available & ~vertex_bit(a), current, best);
}

// Memoized search over partial families. A state is the set of vertices not
// yet placed in a block together with the vertices that later representative
// endpoints must avoid (closed neighborhoods of the representatives chosen so
// far), restricted to the unplaced vertices.
class FamilySearch {
 public:
  explicit FamilySearch(const Graph& g) : g_(g) {}

  // Bit k set iff the unplaced vertices can be split into k more blocks.
  std::uint64_t counts(Mask remaining, Mask forbidden) {
    forbidden &= remaining;
    if (remaining == 0) return 1;
    const auto key = (static_cast<unsigned __int128>(remaining) << 64) | forbidden;
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::uint64_t result = 0;
    for_each_choice(remaining, forbidden, [&](Mask, Edge, Mask rest, Mask next_forbidden) {
      result |= counts(rest, next_forbidden) << 1;
      return false;
    });
    memo_.emplace(key, result);
    return result;
  }

  // First family (in enumeration order) with exactly k blocks.
  bool build(Mask remaining, Mask forbidden, int k, StronglyDisjointFamily& out) {
    forbidden &= remaining;
    if (remaining == 0) return k == 0;
    if (k <= 0 || !((counts(remaining, forbidden) >> k) & 1)) return false;
    return for_each_choice(remaining, forbidden, [&](Mask block, Edge rep, Mask rest, Mask next_forbidden) {
      if (!((counts(rest, next_forbidden & rest) >> (k - 1)) & 1)) return false;
      const Mask side = component_of(block, rep.u);
      out.blocks.push_back({VertexSubset(side), VertexSubset(block & ~side)});
      out.reps.push_back(rep);
      if (build(rest, next_forbidden, k - 1, out)) return true;
      out.blocks.pop_back();
      out.reps.pop_back();
      return false;
    });
  }

 private:
  const std::vector<Mask>& components(Mask block) {
    auto it = components_.find(block);
    if (it == components_.end()) it = components_.emplace(block, complement_components(g_, block)).first;
    return it->second;
  }

  Mask component_of(Mask block, Vertex v) {
    for (Mask c : components(block)) {
      if (c & vertex_bit(v)) return c;
    }
    return 0;
  }

  // Calls visit(block, rep, rest, forbidden') for every block containing the
  // smallest unplaced vertex and every admissible representative; stops
  // early when visit returns true.
  template <class Visit>
  bool for_each_choice(Mask remaining, Mask forbidden, Visit&& visit) {
    const Mask first = remaining & -remaining;
    const Mask others = remaining & ~first;
    Mask sub = 0;
    do {
      sub = (sub - others) & others;
      const Mask block = sub | first;
      if (__builtin_popcountll(block) < 2) continue;
      const auto& comps = components(block);
      if (comps.size() < 2) continue;
      const Mask usable = block & ~forbidden;
      const Mask rest = remaining & ~block;
      // Representative {a, b}: endpoints in different complement components.
      for (Mask ma = usable; ma != 0; ma &= ma - 1) {
        const Vertex a = __builtin_ctzll(ma) + 1;
        const Mask comp_a = component_of(block, a);
        for (Mask mb = usable & ~comp_a & ~first_vertices(a); mb != 0; mb &= mb - 1) {
          const Vertex b = __builtin_ctzll(mb) + 1;
          const Mask next_forbidden =
              forbidden | g_.closed_neighbors(a).bits() | g_.closed_neighbors(b).bits();
          if (visit(block, Edge(a, b), rest, next_forbidden)) return true;
        }
      }
    } while (sub != others);
    return false;
  }

  struct KeyHash {
    std::size_t operator()(unsigned __int128 k) const {
      const auto lo = static_cast<std::uint64_t>(k);
      const auto hi = static_cast<std::uint64_t>(k >> 64);
      return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9E3779B97F4A7C15ULL));
    }
  };

  const Graph& g_;
  std::unordered_map<unsigned __int128, std::uint64_t, KeyHash> memo_;
  std::unordered_map<Mask, std::vector<Mask>> components_;
};

}  // namespace

int induced_matching_number(const Graph& g, const Limits& limits) {
  if (g.edge_count() == 0) throw InvalidArgument("induced matching number of an edgeless graph");
  check_search_size(g.vertex_set(), limits);
  return matching_search(g, g.vertex_set().bits(), 0, 0);
}

std::vector<CompleteBipartiteSubgraph> block_bipartitions(const Graph& g, VertexSubset block) {
  if (block.size() < 2) throw InvalidArgument("a block needs at least two vertices");
  if (!block.is_subset_of(g.vertex_set())) throw InvalidArgument("block is not contained in V(G)");
  const auto comps = complement_components(g, block.bits());
  std::vector<CompleteBipartiteSubgraph> out;
  const std::size_t free = comps.size() - 1;
  if (free == 0) return out;
  for (std::uint64_t sel = 0; sel + 1 < (std::uint64_t{1} << free); ++sel) {
    Mask x = comps[0];
    for (std::size_t k = 0; k < free; ++k) {
      if ((sel >> k) & 1) x |= comps[k + 1];
    }
    out.push_back({VertexSubset(x), VertexSubset(block.bits() & ~x)});
  }
  return out;
}

std::optional<StronglyDisjointFamily> family_exists(const Graph& g, VertexSubset sigma, int r,
                                                    const Limits& limits) {
  if (r < 1) throw InvalidArgument("a family needs at least one block");
  if (sigma.empty()) throw InvalidArgument("a family must cover a nonempty vertex set");
  if (!sigma.is_subset_of(g.vertex_set())) throw InvalidArgument("sigma is not contained in V(G)");
  check_search_size(sigma, limits);
  FamilySearch search(g);
  StronglyDisjointFamily fam;
  if (!search.build(sigma.bits(), 0, r, fam)) return std::nullopt;
  return fam;
}

std::uint64_t feasible_block_counts(const Graph& g, VertexSubset sigma, const Limits& limits) {
  if (!sigma.is_subset_of(g.vertex_set())) throw InvalidArgument("sigma is not contained in V(G)");
  check_search_size(sigma, limits);
  if (sigma.empty()) return 0;
  FamilySearch search(g);
  return search.counts(sigma.bits(), 0);
}

DInvariant d_invariant(const Graph& g, const Limits& limits) {
  if (g.edge_count() == 0) throw InvalidArgument("d(G) is undefined for an edgeless graph");
  check_search_size(g.vertex_set(), limits);
  FamilySearch search(g);
  const int n = g.order();
  // Subsets by decreasing size; |sigma| - 1 bounds every value for sigma.
  std::vector<Mask> subsets;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    if (__builtin_popcountll(s) >= 2) subsets.push_back(s);
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](Mask a, Mask b) { return __builtin_popcountll(a) > __builtin_popcountll(b); });
  int best = -1;
  Mask best_sigma = 0;
  int best_r = 0;
  for (Mask s : subsets) {
    const int size = __builtin_popcountll(s);
    if (size - 1 <= best) break;
    const std::uint64_t counts = search.counts(s, 0);
    if (counts == 0) continue;
    const int r = __builtin_ctzll(counts);
    if (size - r > best) {
      best = size - r;
      best_sigma = s;
      best_r = r;
    }
  }
  DInvariant out;
  out.value = best;
  search.build(best_sigma, 0, best_r, out.witness);
  return out;
}

const char* to_string(FamilyDefect d) {
  switch (d) {
    case FamilyDefect::kNone: return "ok";
    case FamilyDefect::kCountMismatch: return "reps and blocks differ in number";
    case FamilyDefect::kEmptySide: return "block has an empty side";
    case FamilyDefect::kOutsideGraph: return "block uses vertices outside the graph";
    case FamilyDefect::kSidesOverlap: return "block sides overlap";
    case FamilyDefect::kNotCompleteBipartite: return "block is not complete bipartite";
    case FamilyDefect::kBlocksIntersect: return "blocks intersect";
    case FamilyDefect::kRepNotInBlock: return "rep is not an edge of its block";
    case FamilyDefect::kRepsNotThreeDisjoint: return "reps not 3-disjoint";
  }
  return "?";
}

FamilyCheck verify_family(const Graph& g, const StronglyDisjointFamily& fam) {
  auto fail = [](FamilyDefect d, std::string detail) { return FamilyCheck{d, std::move(detail)}; };
  if (fam.blocks.size() != fam.reps.size()) {
    return fail(FamilyDefect::kCountMismatch, std::to_string(fam.blocks.size()) + " blocks, " +
                                                   std::to_string(fam.reps.size()) + " reps");
  }
  for (std::size_t k = 0; k < fam.blocks.size(); ++k) {
    const auto& b = fam.blocks[k];
    const std::string which = "block " + std::to_string(k + 1);
    if (b.x.empty() || b.y.empty()) return fail(FamilyDefect::kEmptySide, which);
    if (!b.vertices().is_subset_of(g.vertex_set())) return fail(FamilyDefect::kOutsideGraph, which);
    if (!(b.x & b.y).empty()) return fail(FamilyDefect::kSidesOverlap, which);
    if (!is_complete_bipartite(g, b.x, b.y)) return fail(FamilyDefect::kNotCompleteBipartite, which);
  }
  for (std::size_t i = 0; i < fam.blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.blocks.size(); ++j) {
      if (!(fam.blocks[i].vertices() & fam.blocks[j].vertices()).empty()) {
        return fail(FamilyDefect::kBlocksIntersect,
                    "blocks " + std::to_string(i + 1) + " and " + std::to_string(j + 1));
      }
    }
  }
  for (std::size_t k = 0; k < fam.reps.size(); ++k) {
    const Edge& e = fam.reps[k];
    const auto& b = fam.blocks[k];
    const bool crosses = (b.x.contains(e.u) && b.y.contains(e.v)) || (b.x.contains(e.v) && b.y.contains(e.u));
    if (!crosses) return fail(FamilyDefect::kRepNotInBlock, to_string(e));
  }
  for (std::size_t i = 0; i < fam.reps.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.reps.size(); ++j) {
      if (!is_3_disjoint(g, fam.reps[i], fam.reps[j])) {
        return fail(FamilyDefect::kRepsNotThreeDisjoint, to_string(fam.reps[i]) + " and " + to_string(fam.reps[j]));
      }
    }
  }
  return {};
}

namespace {

std::size_t homology_dim(const Graph& h, int i, const Field& field, const Limits& limits) {
  return reduced_homology(independence_complex(h, limits), field, limits)(i);
}

// Family with r blocks covering all of V(h), in h's labels. The caller
// guarantees dim H̃_{r-1}(Δh) != 0.
StronglyDisjointFamily extract_spanning(const Graph& h, int r, const Field& field, const ExtractOptions& options) {
  if (r == 0) {
    if (h.order() != 0) throw ProofObligationFailed("zero blocks requested for a nonempty vertex set");
    return {};
  }
  if (h.edge_count() == 0) throw ProofObligationFailed("reached an edgeless graph with nonzero homology");
  if (!is_weakly_chordal(h, options.limits)) {
    throw ProofObligationFailed("an intermediate graph is not weakly chordal:\n" + format_edge_list(h));
  }
  if (h.is_complete()) {
    if (r != 1) throw ProofObligationFailed("complete graph with r = " + std::to_string(r));
    const VertexSubset rest = h.vertex_set() - VertexSubset{1};
    return {{{VertexSubset{1}, rest}}, {Edge(1, 2)}};
  }
  const auto e = first_copair_edge(h);
  if (!e) throw ProofObligationFailed("non-complete weakly chordal graph without a co-pair edge");

  const Graph g1 = delete_edge(h, *e);
  const auto g2 = delete_vertices(h, h.neighbors(e->u) | h.neighbors(e->v));
  const bool h1 = homology_dim(g1, r - 1, field, options.limits) != 0;
  const bool h2 = homology_dim(g2.graph, r - 2, field, options.limits) != 0;
  const bool take_edge_branch = h1 && (options.prefer == BranchPreference::kEdgeDeletion || !h2);

  StronglyDisjointFamily fam;
  if (take_edge_branch) {
    fam = extract_spanning(g1, r, field, options);
    if (const auto check = verify_family(h, fam); !check) {
      throw ProofObligationFailed("family from G - " + to_string(*e) + " is not strongly disjoint in G (" +
                                  to_string(check.defect) + ": " + check.detail + ")");
    }
    return fam;
  }
  if (!h2) {
    throw ProofObligationFailed("both neighbouring homology groups vanish for co-pair edge " + to_string(*e));
  }
  const auto inner = extract_spanning(g2.graph, r - 1, field, options);
  for (std::size_t k = 0; k < inner.blocks.size(); ++k) {
    fam.blocks.push_back({g2.lift(inner.blocks[k].x), g2.lift(inner.blocks[k].y)});
    fam.reps.push_back(g2.lift(inner.reps[k]));
  }
  const NvPartition part = nv_bipartition(h, *e, options.limits);
  fam.blocks.push_back({part.x, part.y});
  fam.reps.push_back(*e);
  if (const auto check = verify_family(h, fam); !check) {
    throw ProofObligationFailed("family extended by the neighbourhood block of " + to_string(*e) +
                                " is not strongly disjoint (" + to_string(check.defect) + ": " + check.detail + ")");
  }
  return fam;
}

}  // namespace

StronglyDisjointFamily extract_certificate(const Graph& g, VertexSubset sigma, int r, const Field& field,
                                           const ExtractOptions& options) {
  if (sigma.empty()) throw InvalidArgument("sigma must be nonempty");
  if (!sigma.is_subset_of(g.vertex_set())) throw InvalidArgument("sigma is not contained in V(G)");
  if (r < 1 || r > sigma.size()) throw InvalidArgument("r must lie in 1..|sigma|");
  const std::size_t beta = betti_entry(g, sigma, sigma.size() - r, field, options.limits);
  if (beta == 0) {
    throw PreconditionFailed("beta_{" + std::to_string(sigma.size() - r) + "," + to_string(sigma) +
                             "} vanishes over " + field.name());
  }
  if (!is_weakly_chordal(g, options.limits)) throw PreconditionFailed("graph is not weakly chordal");
  const auto sub = induced(g, sigma);
  const auto local = extract_spanning(sub.graph, r, field, options);
  StronglyDisjointFamily fam;
  for (std::size_t k = 0; k < local.blocks.size(); ++k) {
    fam.blocks.push_back({sub.lift(local.blocks[k].x), sub.lift(local.blocks[k].y)});
    fam.reps.push_back(sub.lift(local.reps[k]));
  }
  if (const auto check = verify_family(g, fam); !check || fam.covered() != sigma || fam.size() != r) {
    throw ProofObligationFailed("extracted family fails verification in G");
  }
  return fam;
}

EquivalenceReport verify_equivalence(const Graph& g, const Field& field, const Limits& limits) {
  check_search_size(g.vertex_set(), limits);
  EquivalenceReport report;
  report.field = field;
  report.weakly_chordal = is_weakly_chordal(g, limits);
  const BettiTable table = betti_table(g, field, limits);
  FamilySearch search(g);
  const Mask end = Mask{1} << g.order();
  for (Mask s = 1; s < end; ++s) {
    const VertexSubset sigma(s);
    const std::uint64_t counts = search.counts(s, 0);
    for (int r = 1; r <= sigma.size(); ++r) {
      const std::size_t beta = table.at(sigma.size() - r, sigma);
      const bool family = (counts >> r) & 1;
      ++report.cells_checked;
      if (family && beta == 0) report.sufficiency.push_back({sigma, r, beta});
      if (!family && beta != 0) report.necessity.push_back({sigma, r, beta});
    }
  }
  return report;
}

}  // namespace betti
