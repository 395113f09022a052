#pragma once

#include <betti/graph.hpp>
#include <betti/limits.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace betti {

/// Coefficient field: the rationals or a prime field F_p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws InvalidArgument unless p is a prime with p <= 2^31.
  static Field prime(std::uint64_t p);
  /// Accepts "q" / "Q" / "rationals" and "fp:<p>".
  static Field parse(std::string_view text);

  [[nodiscard]] bool is_rational() const { return modulus_ == 0; }
  /// The characteristic; 0 for the rationals.
  [[nodiscard]] std::uint32_t characteristic() const { return modulus_; }
  /// "Q" or "F<p>".
  [[nodiscard]] std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t modulus) : modulus_(modulus) {}
  std::uint32_t modulus_;
};

bool is_prime(std::uint64_t p);

struct MatrixEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  std::int64_t value = 0;
};

/// Sparse integer matrix given as (row, col, value) triples. Repeated
/// positions are summed.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<MatrixEntry> entries;
};

/// Exact rank over `field`. Over Q this runs fraction-free elimination on
/// integers, switching to arbitrary precision when 64 bits overflow.
std::size_t exact_rank(const SparseMatrix& m, const Field& field);

/// A finite simplicial complex on an explicit ground set.
///
/// Faces are bitmasks over positions in `ground()` (bit k is ground()[k]),
/// grouped by dimension and sorted ascending within each dimension. The
/// empty face is always present. Every vertex of the ground set is a face.
class SimplicialComplex {
 public:
  /// Validates downward closure and the vertex convention, de-duplicates.
  /// Throws InvalidArgument on violations and on an empty face list.
  static SimplicialComplex from_faces(std::vector<Vertex> ground,
                                      const std::vector<std::vector<Vertex>>& faces);

  /// The complex {∅} on an empty ground set.
  static SimplicialComplex empty_face_only();

  [[nodiscard]] const std::vector<Vertex>& ground() const { return ground_; }
  /// Dimension; -1 for {∅}.
  [[nodiscard]] int dimension() const { return static_cast<int>(levels_.size()) - 2; }
  /// Faces of dimension `dim` (dim >= -1), as ground-position masks.
  [[nodiscard]] const std::vector<Mask>& faces(int dim) const;
  [[nodiscard]] std::size_t face_count(int dim) const;
  [[nodiscard]] std::size_t total_faces() const;
  /// Face of dimension `dim` at `index`, as ascending vertex labels.
  [[nodiscard]] std::vector<Vertex> face_vertices(int dim, std::size_t index) const;

  /// Cone over the complex with a new apex vertex.
  [[nodiscard]] SimplicialComplex cone(Vertex apex) const;

 private:
  friend SimplicialComplex independence_complex(const Graph&, VertexSubset, const Limits&);
  SimplicialComplex() = default;

  std::vector<Vertex> ground_;
  std::vector<std::vector<Mask>> levels_;  // levels_[k] holds the faces with k vertices
};

/// Independence complex of G restricted to sigma: faces are the independent
/// subsets of sigma. Throws GuardExceeded past the vertex or face guards.
SimplicialComplex independence_complex(const Graph& g, VertexSubset sigma, const Limits& limits = {});

/// Independence complex of the whole graph; {∅} for the graph with no vertices.
SimplicialComplex independence_complex(const Graph& g, const Limits& limits = {});

/// Reduced homology dimensions H̃_i for -1 <= i <= dim Δ.
class HomologyDims {
 public:
  HomologyDims() = default;
  explicit HomologyDims(std::vector<std::size_t> from_minus_one) : dims_(std::move(from_minus_one)) {}

  /// dim H̃_i; zero outside [-1, dim Δ].
  [[nodiscard]] std::size_t operator()(int i) const {
    const int k = i + 1;
    return k < 0 || k >= static_cast<int>(dims_.size()) ? 0 : dims_[k];
  }
  [[nodiscard]] int top_dimension() const { return static_cast<int>(dims_.size()) - 2; }
  [[nodiscard]] bool acyclic() const;
  [[nodiscard]] const std::vector<std::size_t>& raw() const { return dims_; }

  friend bool operator==(const HomologyDims&, const HomologyDims&) = default;

 private:
  std::vector<std::size_t> dims_;  // dims_[k] = dim H̃_{k-1}
};

/// Reduced homology over `field` from the augmented chain complex:
/// dim H̃_i = f_i - rank ∂_i - rank ∂_{i+1}. Throws GuardExceeded when the
/// complex has more faces than `limits.max_faces`, ProofObligationFailed if
/// the result fails the Euler characteristic check.
HomologyDims reduced_homology(const SimplicialComplex& delta, const Field& field, const Limits& limits = {});

/// Boundary map ∂_dim : C_dim -> C_{dim-1} with rows indexed by (dim-1)-faces
/// and columns by dim-faces. ∂_0 sends every vertex to the empty face.
SparseMatrix boundary_matrix(const SimplicialComplex& delta, int dim);

/// Σ (-1)^i f_i over i >= -1 equals Σ (-1)^i dim H̃_i.
bool euler_characteristic_consistent(const SimplicialComplex& delta, const HomologyDims& dims);

/// Completed reduced_homology calls in this process. Each one has passed the
/// Euler characteristic check, which otherwise throws ProofObligationFailed.
std::uint64_t homology_evaluations();

}  // namespace betti
