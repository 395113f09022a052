#pragma once

#include <cstddef>

namespace betti {

// Size guards. Every enumerating operation checks the relevant field and
// raises GuardExceeded instead of running away.
struct Limits {
  int max_graph_vertices = 24;        // graph construction
  int max_recognition_vertices = 16;  // weakly chordal recognition
  int max_complex_vertices = 20;      // vertices of a single complex
  std::size_t max_faces = std::size_t{1} << 20;
  int max_table_vertices = 16;   // full Betti tables (2^n restrictions)
  int max_search_vertices = 16;  // strongly disjoint family search

  // Raise every vertex-count guard to at least `n` (CLI --max-n).
  [[nodiscard]] Limits with_max_vertices(int n) const {
    Limits l = *this;
    l.max_graph_vertices = n > l.max_graph_vertices ? n : l.max_graph_vertices;
    l.max_recognition_vertices = n;
    l.max_complex_vertices = n > l.max_complex_vertices ? n : l.max_complex_vertices;
    l.max_table_vertices = n;
    l.max_search_vertices = n;
    return l;
  }
};

// Hard ceiling imposed by the 64-bit vertex masks.
inline constexpr int kMaxRepresentableVertices = 64;

}  // namespace betti
