#include <betti/homology.hpp>

#include <betti/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <numeric>
#include <utility>

namespace betti {

namespace {
std::atomic<std::uint64_t> g_homology_evaluations{0};
}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p > (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw InvalidArgument("field modulus " + std::to_string(p) + " is not a prime <= 2^31");
  }
  return Field(static_cast<std::uint32_t>(p));
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q" || text == "rationals") return rationals();
  if (text.starts_with("fp:")) {
    std::string_view digits = text.substr(3);
    std::uint64_t p = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw InvalidArgument("bad field modulus in '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw InvalidArgument("unknown field '" + std::string(text) + "' (expected q or fp:<prime>)");
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(modulus_); }

namespace {

using Column = std::uint32_t;

template <class Int>
struct Term {
  Column col;
  Int val;
};

template <class Int>
using Row = std::vector<Term<Int>>;

using InputRow = Row<std::int64_t>;

// ---- rank over F_p --------------------------------------------------------

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // Fermat: a^(p-2) mod p.
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

std::size_t modular_rank(const std::vector<InputRow>& input, std::size_t cols, std::uint64_t p) {
  std::vector<int> pivot_of(cols, -1);
  std::vector<Row<std::uint64_t>> basis;
  Row<std::uint64_t> row;
  Row<std::uint64_t> scratch;
  for (const InputRow& in : input) {
    row.clear();
    for (const auto& t : in) {
      const std::int64_t r = t.val % static_cast<std::int64_t>(p);
      const std::uint64_t v = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
      if (v != 0) row.push_back({t.col, v});
    }
    while (!row.empty()) {
      const int idx = pivot_of[row.front().col];
      if (idx < 0) {
        const std::uint64_t inv = inverse_mod(row.front().val, p);
        for (auto& t : row) t.val = t.val * inv % p;
        pivot_of[row.front().col] = static_cast<int>(basis.size());
        basis.push_back(row);
        break;
      }
      // row -= row[lead] * pivot, pivot has leading coefficient 1.
      const auto& piv = basis[idx];
      const std::uint64_t factor = row.front().val;
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].col < piv[j].col)) {
          scratch.push_back(row[i++]);
        } else if (i == row.size() || piv[j].col < row[i].col) {
          scratch.push_back({piv[j].col, (p - factor * piv[j].val % p) % p});
          ++j;
        } else {
          const std::uint64_t v = (row[i].val + p - factor * piv[j].val % p) % p;
          if (v != 0) scratch.push_back({row[i].col, v});
          ++i;
          ++j;
        }
      }
      std::swap(row, scratch);
    }
  }
  return basis.size();
}

// ---- rank over Q ------------------------------------------------------------

struct Overflow {};

// Checked 64-bit arithmetic; throws Overflow instead of wrapping.
struct CheckedOps {
  using Int = std::int64_t;
  static Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static Int abs(Int a) {
    if (a == INT64_MIN) throw Overflow{};
    return a < 0 ? -a : a;
  }
  static Int gcd(Int a, Int b) { return std::gcd(abs(a), abs(b)); }
  static bool is_zero(Int a) { return a == 0; }
  static bool negative(Int a) { return a < 0; }
};

struct BigOps {
  using Int = boost::multiprecision::cpp_int;
  static Int mul(const Int& a, const Int& b) { return a * b; }
  static Int sub(const Int& a, const Int& b) { return a - b; }
  static Int abs(const Int& a) { return boost::multiprecision::abs(a); }
  static Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
  static bool is_zero(const Int& a) { return a.is_zero(); }
  static bool negative(const Int& a) { return a.sign() < 0; }
};

// Divides out the content and makes the leading coefficient positive.
template <class Ops>
void normalize(Row<typename Ops::Int>& row) {
  using Int = typename Ops::Int;
  Int g = 0;
  for (const auto& t : row) {
    g = Ops::gcd(g, t.val);
    if (g == 1) break;
  }
  const bool flip = Ops::negative(row.front().val);
  if (g != 1 || flip) {
    if (flip) g = -g;
    for (auto& t : row) t.val /= g;
  }
}

// Fraction-free elimination: a reduced row is replaced by a·row − b·pivot,
// which only scales it by the nonzero integer a, so the Q-span of the
// processed rows is unchanged.
template <class Ops>
std::size_t integer_rank(const std::vector<InputRow>& input, std::size_t cols) {
  using Int = typename Ops::Int;
  std::vector<int> pivot_of(cols, -1);
  std::vector<Row<Int>> basis;
  Row<Int> row;
  Row<Int> scratch;
  for (const InputRow& in : input) {
    row.clear();
    for (const auto& t : in) {
      if (t.val != 0) row.push_back({t.col, Int(t.val)});
    }
    while (!row.empty()) {
      const int idx = pivot_of[row.front().col];
      if (idx < 0) {
        normalize<Ops>(row);
        pivot_of[row.front().col] = static_cast<int>(basis.size());
        basis.push_back(row);
        break;
      }
      const auto& piv = basis[idx];
      Int a = piv.front().val;
      Int b = row.front().val;
      const Int g = Ops::gcd(a, b);
      a /= g;
      b /= g;
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].col < piv[j].col)) {
          scratch.push_back({row[i].col, Ops::mul(a, row[i].val)});
          ++i;
        } else if (i == row.size() || piv[j].col < row[i].col) {
          scratch.push_back({piv[j].col, Ops::sub(Int(0), Ops::mul(b, piv[j].val))});
          ++j;
        } else {
          Int v = Ops::sub(Ops::mul(a, row[i].val), Ops::mul(b, piv[j].val));
          if (!Ops::is_zero(v)) scratch.push_back({row[i].col, std::move(v)});
          ++i;
          ++j;
        }
      }
      std::swap(row, scratch);
      if (!row.empty()) normalize<Ops>(row);
    }
  }
  return basis.size();
}

std::size_t rank_of_rows(const std::vector<InputRow>& rows, std::size_t cols, const Field& field) {
  if (rows.empty() || cols == 0) return 0;
  if (!field.is_rational()) return modular_rank(rows, cols, field.characteristic());
  try {
    return integer_rank<CheckedOps>(rows, cols);
  } catch (const Overflow&) {
    return integer_rank<BigOps>(rows, cols);
  }
}

}  // namespace

std::size_t exact_rank(const SparseMatrix& m, const Field& field) {
  std::vector<InputRow> rows(m.rows);
  for (const MatrixEntry& e : m.entries) {
    if (e.row >= m.rows || e.col >= m.cols) throw InvalidArgument("matrix entry outside the declared shape");
    rows[e.row].push_back({static_cast<Column>(e.col), e.value});
  }
  for (auto& row : rows) {
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.col < y.col; });
    // Merge repeated positions.
    InputRow merged;
    for (const auto& t : row) {
      if (!merged.empty() && merged.back().col == t.col) {
        merged.back().val += t.val;
      } else {
        merged.push_back(t);
      }
    }
    std::erase_if(merged, [](const auto& t) { return t.val == 0; });
    row = std::move(merged);
  }
  return rank_of_rows(rows, m.cols, field);
}

// ---- simplicial complexes -----------------------------------------------------

SimplicialComplex SimplicialComplex::from_faces(std::vector<Vertex> ground,
                                                const std::vector<std::vector<Vertex>>& faces) {
  if (faces.empty()) throw InvalidArgument("a simplicial complex needs at least the empty face");
  std::sort(ground.begin(), ground.end());
  if (std::adjacent_find(ground.begin(), ground.end()) != ground.end()) {
    throw InvalidArgument("repeated vertex in the ground set");
  }
  if (ground.size() > static_cast<std::size_t>(kMaxRepresentableVertices)) {
    throw GuardExceeded("ground set larger than 64 vertices");
  }
  auto position = [&](Vertex v) {
    const auto it = std::lower_bound(ground.begin(), ground.end(), v);
    if (it == ground.end() || *it != v) {
      throw InvalidArgument("face vertex " + std::to_string(v) + " is not in the ground set");
    }
    return static_cast<int>(it - ground.begin());
  };
  SimplicialComplex out;
  out.ground_ = ground;
  std::vector<Mask> masks;
  for (const auto& face : faces) {
    Mask m = 0;
    for (Vertex v : face) m |= Mask{1} << position(v);
    masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  for (Mask m : masks) {
    const auto k = static_cast<std::size_t>(__builtin_popcountll(m));
    if (out.levels_.size() <= k) out.levels_.resize(k + 1);
    out.levels_[k].push_back(m);
  }
  if (out.levels_[0].empty()) throw InvalidArgument("the empty face is missing");
  for (std::size_t g = 0; g < ground.size(); ++g) {
    if (out.levels_.size() < 2 || !std::binary_search(out.levels_[1].begin(), out.levels_[1].end(), Mask{1} << g)) {
      throw InvalidArgument("vertex " + std::to_string(ground[g]) + " is not a face");
    }
  }
  for (std::size_t k = 2; k < out.levels_.size(); ++k) {
    for (Mask m : out.levels_[k]) {
      for (Mask rest = m; rest != 0; rest &= rest - 1) {
        const Mask facet = m & ~(rest & -rest);
        if (!std::binary_search(out.levels_[k - 1].begin(), out.levels_[k - 1].end(), facet)) {
          throw InvalidArgument("face list is not closed under taking subsets");
        }
      }
    }
  }
  return out;
}

SimplicialComplex SimplicialComplex::empty_face_only() {
  SimplicialComplex out;
  out.levels_.push_back({0});
  return out;
}

const std::vector<Mask>& SimplicialComplex::faces(int dim) const {
  static const std::vector<Mask> kNone;
  const int k = dim + 1;
  return k < 0 || k >= static_cast<int>(levels_.size()) ? kNone : levels_[k];
}

std::size_t SimplicialComplex::face_count(int dim) const { return faces(dim).size(); }

std::size_t SimplicialComplex::total_faces() const {
  std::size_t total = 0;
  for (const auto& level : levels_) total += level.size();
  return total;
}

std::vector<Vertex> SimplicialComplex::face_vertices(int dim, std::size_t index) const {
  std::vector<Vertex> out;
  for (Mask m = faces(dim).at(index); m != 0; m &= m - 1) out.push_back(ground_[__builtin_ctzll(m)]);
  return out;
}

SimplicialComplex SimplicialComplex::cone(Vertex apex) const {
  if (std::find(ground_.begin(), ground_.end(), apex) != ground_.end()) {
    throw InvalidArgument("cone apex already in the ground set");
  }
  std::vector<std::vector<Vertex>> faces;
  for (int dim = -1; dim <= dimension(); ++dim) {
    for (std::size_t i = 0; i < face_count(dim); ++i) {
      auto f = face_vertices(dim, i);
      faces.push_back(f);
      f.push_back(apex);
      faces.push_back(std::move(f));
    }
  }
  auto ground = ground_;
  ground.push_back(apex);
  return from_faces(std::move(ground), faces);
}

namespace {

// Enumerates independent sets of the local graph (neighbor masks over
// ground positions) in increasing-position order.
void collect_independent(const std::vector<Mask>& local_adj, Mask face, Mask allowed,
                         std::vector<std::vector<Mask>>& levels, std::size_t& total, std::size_t max_faces) {
  for (Mask m = allowed; m != 0; m &= m - 1) {
    const int p = __builtin_ctzll(m);
    const Mask next = face | (Mask{1} << p);
    const auto k = static_cast<std::size_t>(__builtin_popcountll(next));
    if (++total > max_faces) {
      throw GuardExceeded("independence complex exceeds the face guard of " + std::to_string(max_faces));
    }
    if (levels.size() <= k) levels.resize(k + 1);
    levels[k].push_back(next);
    // Only positions above p, and not adjacent to p.
    const Mask above = (m & (m - 1));
    collect_independent(local_adj, next, above & ~local_adj[p], levels, total, max_faces);
  }
}

}  // namespace

SimplicialComplex independence_complex(const Graph& g, VertexSubset sigma, const Limits& limits) {
  if (!sigma.is_subset_of(g.vertex_set())) {
    throw InvalidArgument("vertex set " + to_string(sigma) + " is not contained in V(G)");
  }
  if (sigma.size() > limits.max_complex_vertices) {
    throw GuardExceeded("complex on " + std::to_string(sigma.size()) + " vertices exceeds the guard of " +
                        std::to_string(limits.max_complex_vertices));
  }
  SimplicialComplex out;
  out.ground_ = sigma.vertices();
  const auto k = out.ground_.size();
  std::vector<Mask> local_adj(k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (g.adjacent(out.ground_[a], out.ground_[b])) {
        local_adj[a] |= Mask{1} << b;
        local_adj[b] |= Mask{1} << a;
      }
    }
  }
  out.levels_.push_back({0});
  std::size_t total = 1;
  collect_independent(local_adj, 0, first_vertices(static_cast<int>(k)), out.levels_, total, limits.max_faces);
  for (auto& level : out.levels_) std::sort(level.begin(), level.end());
  return out;
}

SimplicialComplex independence_complex(const Graph& g, const Limits& limits) {
  if (g.order() == 0) return SimplicialComplex::empty_face_only();
  return independence_complex(g, g.vertex_set(), limits);
}

namespace {

// Rows are the boundaries of the dim-faces (the transpose of ∂_dim).
std::vector<InputRow> boundary_rows(const SimplicialComplex& delta, int dim) {
  const auto& faces = delta.faces(dim);
  const auto& targets = delta.faces(dim - 1);
  std::vector<InputRow> rows;
  rows.reserve(faces.size());
  for (Mask f : faces) {
    InputRow row;
    std::int64_t sign = 1;
    for (Mask rest = f; rest != 0; rest &= rest - 1) {
      const Mask facet = f & ~(rest & -rest);
      const auto it = std::lower_bound(targets.begin(), targets.end(), facet);
      row.push_back({static_cast<Column>(it - targets.begin()), sign});
      sign = -sign;
    }
    // Removing higher positions yields smaller masks; keep columns ascending.
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.col < y.col; });
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

SparseMatrix boundary_matrix(const SimplicialComplex& delta, int dim) {
  SparseMatrix m;
  m.rows = delta.face_count(dim - 1);
  m.cols = delta.face_count(dim);
  if (dim < 0) return m;
  const auto rows = boundary_rows(delta, dim);
  for (std::size_t c = 0; c < rows.size(); ++c) {
    for (const auto& t : rows[c]) m.entries.push_back({t.col, c, t.val});
  }
  return m;
}

bool HomologyDims::acyclic() const {
  return std::all_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 0; });
}

HomologyDims reduced_homology(const SimplicialComplex& delta, const Field& field, const Limits& limits) {
  if (delta.total_faces() > limits.max_faces) {
    throw GuardExceeded("complex has " + std::to_string(delta.total_faces()) + " faces, guard is " +
                        std::to_string(limits.max_faces));
  }
  const int top = delta.dimension();
  // ranks[k] = rank ∂_{k-1} for k = 0..top+2; ∂_{-1} and ∂_{top+1} are zero.
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 3, 0);
  for (int dim = 0; dim <= top; ++dim) {
    if (dim == 0) {
      ranks[1] = delta.face_count(0) > 0 ? 1 : 0;
      continue;
    }
    ranks[dim + 1] = rank_of_rows(boundary_rows(delta, dim), delta.face_count(dim - 1), field);
  }
  std::vector<std::size_t> dims(static_cast<std::size_t>(top) + 2, 0);
  for (int i = -1; i <= top; ++i) {
    if (ranks[i + 1] + ranks[i + 2] > delta.face_count(i)) {
      throw ProofObligationFailed("boundary ranks exceed the face count in dimension " + std::to_string(i));
    }
    dims[i + 1] = delta.face_count(i) - ranks[i + 1] - ranks[i + 2];
  }
  HomologyDims out(std::move(dims));
  if (!euler_characteristic_consistent(delta, out)) {
    throw ProofObligationFailed("reduced homology disagrees with the Euler characteristic");
  }
  g_homology_evaluations.fetch_add(1, std::memory_order_relaxed);
  return out;
}

std::uint64_t homology_evaluations() { return g_homology_evaluations.load(std::memory_order_relaxed); }

bool euler_characteristic_consistent(const SimplicialComplex& delta, const HomologyDims& dims) {
  long long faces = 0;
  long long homology = 0;
  const int top = std::max(delta.dimension(), dims.top_dimension());
  for (int i = -1; i <= top; ++i) {
    const long long sign = (i % 2 == 0) ? 1 : -1;
    faces += sign * static_cast<long long>(delta.face_count(i));
    homology += sign * static_cast<long long>(dims(i));
  }
  return faces == homology;
}

}  // namespace betti
