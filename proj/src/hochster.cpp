#include <betti/hochster.hpp>

#include <betti/errors.hpp>

#include <algorithm>

namespace betti {

BettiTable::BettiTable(int n, Field field, std::vector<BettiEntry> entries)
    : n_(n), field_(field), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(), [](const BettiEntry& a, const BettiEntry& b) {
    return a.sigma.bits() != b.sigma.bits() ? a.sigma.bits() < b.sigma.bits() : a.i < b.i;
  });
  for (const BettiEntry& e : entries_) {
    if (e.dim == 0) throw InvalidArgument("Betti tables store nonzero entries only");
    index_[{e.sigma.bits(), e.i}] = e.dim;
    pdim_ = std::max(pdim_, e.i);
    reg_ = std::max(reg_, e.sigma.size() - e.i);
  }
}

std::size_t BettiTable::at(int i, VertexSubset sigma) const {
  const auto it = index_.find({sigma.bits(), i});
  return it == index_.end() ? 0 : it->second;
}

std::vector<GradedEntry> BettiTable::graded() const {
  std::map<std::pair<int, int>, std::size_t> sums;
  for (const BettiEntry& e : entries_) sums[{e.i, e.sigma.size()}] += e.dim;
  std::vector<GradedEntry> out;
  for (const auto& [key, dim] : sums) out.push_back({key.first, key.second, dim});
  return out;
}

bool BettiTable::same_entries(const BettiTable& other) const {
  if (entries_.size() != other.entries_.size()) return false;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const auto& a = entries_[k];
    const auto& b = other.entries_[k];
    if (a.i != b.i || a.sigma != b.sigma || a.dim != b.dim) return false;
  }
  return true;
}

std::size_t betti_entry(const Graph& g, VertexSubset sigma, int i, const Field& field, const Limits& limits) {
  if (sigma.empty()) throw InvalidArgument("Betti numbers are only tabulated for nonempty sigma");
  if (!sigma.is_subset_of(g.vertex_set())) {
    throw InvalidArgument("vertex set " + to_string(sigma) + " is not contained in V(G)");
  }
  const auto sub = induced(g, sigma);
  const auto dims = reduced_homology(independence_complex(sub.graph, limits), field, limits);
  return dims(sigma.size() - i - 1);
}

namespace {

// A vertex of sigma with no neighbor inside sigma makes Δ(G_sigma) a cone.
bool has_isolated_vertex(const Graph& g, Mask sigma) {
  for (Mask m = sigma; m != 0; m &= m - 1) {
    if ((g.neighbor_mask(__builtin_ctzll(m) + 1) & sigma) == 0) return true;
  }
  return false;
}

}  // namespace

BettiTable betti_table(const Graph& g, const Field& field, const Limits& limits) {
  const int n = g.order();
  if (n > limits.max_table_vertices) {
    throw GuardExceeded("Betti table of a graph on " + std::to_string(n) + " vertices exceeds the guard of " +
                        std::to_string(limits.max_table_vertices));
  }
  std::vector<BettiEntry> entries;
  const Mask end = Mask{1} << n;
  for (Mask sigma = 1; sigma < end; ++sigma) {
    if (has_isolated_vertex(g, sigma)) continue;
    const VertexSubset s(sigma);
    const auto dims = reduced_homology(independence_complex(g, s, limits), field, limits);
    for (int j = dims.top_dimension(); j >= -1; --j) {
      if (dims(j) != 0) entries.push_back({s.size() - j - 1, s, dims(j)});
    }
  }
  return BettiTable(n, field, std::move(entries));
}

PdimReg pdim_reg(const Graph& g, const Field& field, const Limits& limits) {
  const auto table = betti_table(g, field, limits);
  return {table.pdim(), table.reg()};
}

CharacteristicComparison char_compare(const Graph& g, const std::vector<Field>& fields, const Limits& limits) {
  if (fields.empty()) throw InvalidArgument("char_compare needs at least one field");
  CharacteristicComparison out;
  for (const Field& f : fields) {
    auto table = betti_table(g, f, limits);
    PdimReg inv{table.pdim(), table.reg()};
    auto graded = table.graded();
    out.per_field.push_back({f, inv, std::move(graded), std::move(table)});
  }
  const auto& first = out.per_field.front();
  for (const auto& other : out.per_field) {
    if (other.invariants != first.invariants) out.characteristic_dependent = true;
    if (!other.table.same_entries(first.table)) out.tables_differ = true;
  }
  return out;
}

ExactSequenceDims les_dims(const Graph& g, const Edge& e, int r, const Field& field, const Limits& limits) {
  if (!g.has_edge(e)) throw InvalidArgument("exact sequence check needs an edge, got " + to_string(e));
  const Graph g1 = delete_edge(g, e);
  const auto g2 = delete_vertices(g, g.neighbors(e.u) | g.neighbors(e.v));
  ExactSequenceDims out;
  out.whole = reduced_homology(independence_complex(g, limits), field, limits)(r - 1);
  out.edge_deleted = reduced_homology(independence_complex(g1, limits), field, limits)(r - 1);
  out.neighborhood_deleted = reduced_homology(independence_complex(g2.graph, limits), field, limits)(r - 2);
  return out;
}

bool les_dim_check(const Graph& g, const Edge& e, int r, const Field& field, const Limits& limits) {
  return les_dims(g, e, r, field, limits).holds();
}

}  // namespace betti
