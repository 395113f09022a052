#pragma once

#include <betti/graph.hpp>
#include <betti/homology.hpp>
#include <betti/limits.hpp>

#include <optional>
#include <string>
#include <vector>

namespace betti {

/// Complete bipartite subgraph of a host graph (not necessarily induced):
/// every X-Y pair is an edge, edges inside a side are allowed.
struct CompleteBipartiteSubgraph {
  VertexSubset x;
  VertexSubset y;

  [[nodiscard]] VertexSubset vertices() const { return x | y; }
  friend bool operator==(const CompleteBipartiteSubgraph&, const CompleteBipartiteSubgraph&) = default;
};

/// Vertex-disjoint complete bipartite subgraphs B_1..B_r with representative
/// edges e_i ∈ E(B_i) that are pairwise 3-disjoint in the host graph.
struct StronglyDisjointFamily {
  std::vector<CompleteBipartiteSubgraph> blocks;
  std::vector<Edge> reps;

  [[nodiscard]] int size() const { return static_cast<int>(blocks.size()); }
  /// sigma = V(B_1) ∪ ... ∪ V(B_r).
  [[nodiscard]] VertexSubset covered() const;
  /// Σ |V(B_i)| - r.
  [[nodiscard]] int weight() const;
};

std::string to_string(const StronglyDisjointFamily& fam);

/// Vertex-disjoint, and no endpoint of e is adjacent to an endpoint of f.
/// Throws InvalidArgument if either is not an edge of G.
bool is_3_disjoint(const Graph& g, const Edge& e, const Edge& f);

/// Maximum number of pairwise 3-disjoint edges. Throws InvalidArgument on an
/// edgeless graph and GuardExceeded past limits.max_search_vertices.
int induced_matching_number(const Graph& g, const Limits& limits = {});

/// All splits X | Y of `block` such that X × Y ⊆ E(G), up to swapping the
/// sides (X holds the smallest vertex). Empty iff the complement restricted
/// to the block is connected. Throws InvalidArgument when |block| < 2.
std::vector<CompleteBipartiteSubgraph> block_bipartitions(const Graph& g, VertexSubset block);

/// A strongly disjoint family with exactly r blocks covering exactly sigma,
/// or nullopt. Deterministic: blocks are chosen in order of their smallest
/// vertex, block and representative candidates in ascending mask order.
std::optional<StronglyDisjointFamily> family_exists(const Graph& g, VertexSubset sigma, int r,
                                                    const Limits& limits = {});

/// Bit r is set iff a strongly disjoint family with r blocks covers sigma.
std::uint64_t feasible_block_counts(const Graph& g, VertexSubset sigma, const Limits& limits = {});

struct DInvariant {
  int value = 0;
  StronglyDisjointFamily witness;
};

/// d(G) = max Σ|V(B_i)| - r over strongly disjoint families, with a witness.
/// Throws InvalidArgument on an edgeless graph.
DInvariant d_invariant(const Graph& g, const Limits& limits = {});

enum class FamilyDefect {
  kNone,
  kCountMismatch,      // reps and blocks differ in number
  kEmptySide,
  kOutsideGraph,
  kSidesOverlap,
  kNotCompleteBipartite,
  kBlocksIntersect,
  kRepNotInBlock,      // representative does not cross its block
  kRepsNotThreeDisjoint,
};

const char* to_string(FamilyDefect d);

struct FamilyCheck {
  FamilyDefect defect = FamilyDefect::kNone;
  std::string detail;

  [[nodiscard]] bool ok() const { return defect == FamilyDefect::kNone; }
  explicit operator bool() const { return ok(); }
};

FamilyCheck verify_family(const Graph& g, const StronglyDisjointFamily& fam);

enum class BranchPreference {
  kEdgeDeletion,          // take the G - e branch whenever its homology is nonzero
  kNeighborhoodDeletion,  // take the G - (N(u) ∪ N(v)) branch whenever possible
};

struct ExtractOptions {
  BranchPreference prefer = BranchPreference::kEdgeDeletion;
  Limits limits;
};

/// Builds a strongly disjoint family with r blocks covering sigma by
/// following the inductive argument on the number of edges: restrict to
/// G_sigma; a complete graph yields a star; otherwise pick the smallest
/// co-pair edge e and recurse into G - e or into G - (N(u) ∪ N(v)) plus the
/// complete bipartite subgraph on N(u) ∪ N(v).
///
/// Throws PreconditionFailed when beta_{|sigma|-r,sigma} vanishes over the
/// field or a graph met on the way is not weakly chordal, and
/// ProofObligationFailed when a step that cannot fail does.
StronglyDisjointFamily extract_certificate(const Graph& g, VertexSubset sigma, int r, const Field& field,
                                           const ExtractOptions& options = {});

struct EquivalenceMismatch {
  VertexSubset sigma;
  int r = 0;
  std::size_t betti = 0;
};

struct EquivalenceReport {
  Field field = Field::rationals();
  bool weakly_chordal = false;
  std::size_t cells_checked = 0;
  /// A family exists but beta_{|sigma|-r,sigma} = 0. Never allowed.
  std::vector<EquivalenceMismatch> sufficiency;
  /// beta_{|sigma|-r,sigma} != 0 but no family exists. Allowed only when the
  /// graph is not weakly chordal.
  std::vector<EquivalenceMismatch> necessity;

  /// Mismatches in the directions that must hold for this graph.
  [[nodiscard]] std::size_t violations() const {
    return sufficiency.size() + (weakly_chordal ? necessity.size() : 0);
  }
};

/// Compares beta_{|sigma|-r,sigma} != 0 with the existence of a family for
/// every nonempty sigma and 1 <= r <= |sigma|.
EquivalenceReport verify_equivalence(const Graph& g, const Field& field, const Limits& limits = {});

}  // namespace betti
