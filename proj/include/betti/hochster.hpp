#pragma once

#include <betti/graph.hpp>
#include <betti/homology.hpp>
#include <betti/limits.hpp>

#include <cstddef>
#include <map>
#include <vector>

namespace betti {

// Multigraded Betti numbers of R/I(G) from Hochster's formula
//
//   beta_{i,sigma}(R/I(G)) = dim H̃_{|sigma|-i-1}(Δ(G)_sigma),
//
// with Δ(G)_sigma = Δ(G_sigma). Multidegrees are squarefree, identified with
// vertex subsets; edge ideals have no Betti numbers in other degrees. The
// numbers are those of the quotient R/I(G); beta_i(I(G)) = beta_{i+1}(R/I(G)).
// beta_{0,∅} = 1 is never stored.

struct BettiEntry {
  int i = 0;
  VertexSubset sigma;
  std::size_t dim = 0;
};

struct GradedEntry {
  int i = 0;
  int j = 0;
  std::size_t dim = 0;

  friend bool operator==(const GradedEntry&, const GradedEntry&) = default;
};

class BettiTable {
 public:
  BettiTable(int n, Field field, std::vector<BettiEntry> entries);

  [[nodiscard]] int vertex_count() const { return n_; }
  [[nodiscard]] const Field& field() const { return field_; }
  /// Nonzero entries, sigma ascending as a binary number, then i ascending.
  [[nodiscard]] const std::vector<BettiEntry>& entries() const { return entries_; }
  /// beta_{i,sigma}; zero when not stored.
  [[nodiscard]] std::size_t at(int i, VertexSubset sigma) const;
  /// beta_{i,j} = sum over |sigma| = j, ordered by (i, j).
  [[nodiscard]] std::vector<GradedEntry> graded() const;
  /// max i with a nonzero entry; 0 for an edgeless graph.
  [[nodiscard]] int pdim() const { return pdim_; }
  /// max |sigma| - i over nonzero entries; 0 for an edgeless graph.
  [[nodiscard]] int reg() const { return reg_; }

  /// Same (i, sigma, dim) entries.
  [[nodiscard]] bool same_entries(const BettiTable& other) const;

 private:
  int n_;
  Field field_;
  std::vector<BettiEntry> entries_;
  std::map<std::pair<Mask, int>, std::size_t> index_;
  int pdim_ = 0;
  int reg_ = 0;
};

/// beta_{i,sigma}(R/I(G)) over `field`. Throws InvalidArgument when sigma is
/// empty or not in V(G).
std::size_t betti_entry(const Graph& g, VertexSubset sigma, int i, const Field& field,
                        const Limits& limits = {});

/// All nonzero beta_{i,sigma} with sigma nonempty. Throws GuardExceeded when
/// n > limits.max_table_vertices.
BettiTable betti_table(const Graph& g, const Field& field, const Limits& limits = {});

struct PdimReg {
  int pdim = 0;
  int reg = 0;
  friend bool operator==(const PdimReg&, const PdimReg&) = default;
};

PdimReg pdim_reg(const Graph& g, const Field& field, const Limits& limits = {});

struct FieldReport {
  Field field;
  PdimReg invariants;
  std::vector<GradedEntry> graded;
  BettiTable table;
};

struct CharacteristicComparison {
  std::vector<FieldReport> per_field;
  /// pdim or reg differ between two of the fields.
  bool characteristic_dependent = false;
  /// Some multigraded entry differs between two of the fields.
  bool tables_differ = false;
};

CharacteristicComparison char_compare(const Graph& g, const std::vector<Field>& fields,
                                      const Limits& limits = {});

/// Dimensions behind the edge-deletion exact sequence for e = {u,v}:
/// G1 = G - e and G2 = G - (N(u) ∪ N(v)).
struct ExactSequenceDims {
  std::size_t whole = 0;           // dim H̃_{r-1}(ΔG)
  std::size_t edge_deleted = 0;    // dim H̃_{r-1}(ΔG1)
  std::size_t neighborhood_deleted = 0;  // dim H̃_{r-2}(ΔG2)

  [[nodiscard]] bool holds() const { return whole <= edge_deleted + neighborhood_deleted; }
};

ExactSequenceDims les_dims(const Graph& g, const Edge& e, int r, const Field& field, const Limits& limits = {});

/// dim H̃_{r-1}(ΔG) <= dim H̃_{r-1}(ΔG1) + dim H̃_{r-2}(ΔG2). Throws
/// InvalidArgument when e is not an edge.
bool les_dim_check(const Graph& g, const Edge& e, int r, const Field& field, const Limits& limits = {});

}  // namespace betti
