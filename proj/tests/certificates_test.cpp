#include <betti/certificates.hpp>
#include <betti/errors.hpp>
#include <betti/hochster.hpp>
#include <betti/weak_chordality.hpp>

#include <doctest.h>

#include "support.hpp"

using namespace betti;

namespace {

const Field kQ = Field::rationals();
const Field kF2 = Field::prime(2);

Graph two_k2() { return Graph::from_edge_list(4, {{1, 2}, {3, 4}}); }

Graph random_weakly_chordal(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> density(0.15, 0.85);
  for (;;) {
    Graph g = testing::random_graph(n, density(rng), rng);
    if (g.edge_count() > 0 && testing::weakly_chordal_brute(g)) return g;
  }
}

bool is_chordal_brute(const Graph& g) {
  for (Mask s = 0; s < (Mask{1} << g.order()); ++s) {
    if (__builtin_popcountll(s) >= 4 && testing::induces_cycle(g, s)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("3-disjoint edges") {
  CHECK(is_3_disjoint(two_k2(), {1, 2}, {3, 4}));
  CHECK_FALSE(is_3_disjoint(path_graph(4), {1, 2}, {3, 4}));
  CHECK(is_3_disjoint(cycle_graph(6), {1, 2}, {4, 5}));
  CHECK_FALSE(is_3_disjoint(path_graph(3), {1, 2}, {2, 3}));
  CHECK_THROWS_AS(is_3_disjoint(path_graph(4), {1, 3}, {3, 4}), InvalidArgument);
}

TEST_CASE("induced matching number") {
  CHECK(induced_matching_number(complete_graph(2)) == 1);
  CHECK(induced_matching_number(cycle_graph(4)) == 1);
  CHECK(induced_matching_number(cycle_graph(5)) == 1);
  CHECK(induced_matching_number(two_k2()) == 2);
  CHECK(induced_matching_number(cycle_graph(6)) == 2);
  CHECK_THROWS_AS(induced_matching_number(Graph::edgeless(3)), InvalidArgument);

  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = testing::random_graph(2 + trial % 10, 0.3, rng);
    if (g.edge_count() == 0) continue;
    CHECK(induced_matching_number(g) == testing::induced_matching_brute(g));
  }
}

TEST_CASE("block bipartitions") {
  const auto c4 = block_bipartitions(cycle_graph(4), VertexSubset{1, 2, 3, 4});
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].x == VertexSubset{1, 3});
  CHECK(c4[0].y == VertexSubset{2, 4});

  // Every split of a clique is complete bipartite.
  CHECK(block_bipartitions(complete_graph(4), VertexSubset{1, 2, 3, 4}).size() == 7);
  CHECK(block_bipartitions(path_graph(4), VertexSubset{1, 2, 3, 4}).empty());
  CHECK(block_bipartitions(cycle_graph(5), VertexSubset{1, 2, 3, 4, 5}).empty());
  CHECK_THROWS_AS(block_bipartitions(cycle_graph(4), VertexSubset{1}), InvalidArgument);

  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::random_graph(8, 0.5 + 0.05 * (trial % 8), rng);
    const Mask block = std::uniform_int_distribution<Mask>(1, 255)(rng);
    if (__builtin_popcountll(block) < 2) continue;
    std::set<std::pair<Mask, Mask>> got;
    for (const auto& b : block_bipartitions(g, VertexSubset(block))) got.insert({b.x.bits(), b.y.bits()});
    CHECK(got == testing::bipartitions_brute(g, block));
  }
}

TEST_CASE("family search examples") {
  const auto c4 = family_exists(cycle_graph(4), VertexSubset{1, 2, 3, 4}, 1);
  REQUIRE(c4.has_value());
  CHECK(c4->blocks[0].x == VertexSubset{1, 3});
  CHECK(c4->blocks[0].y == VertexSubset{2, 4});
  CHECK(c4->reps[0] == Edge(1, 2));
  CHECK(to_string(*c4) == "B1={1,3}|{2,4} e1={1,2}");
  CHECK(c4->weight() == 3);
  CHECK_FALSE(family_exists(cycle_graph(4), VertexSubset{1, 2, 3, 4}, 2).has_value());

  const auto k2 = family_exists(complete_graph(2), VertexSubset{1, 2}, 1);
  REQUIRE(k2.has_value());
  CHECK(k2->reps[0] == Edge(1, 2));

  const auto pair = family_exists(two_k2(), VertexSubset{1, 2, 3, 4}, 2);
  REQUIRE(pair.has_value());
  CHECK(pair->size() == 2);
  CHECK(verify_family(two_k2(), *pair));

  CHECK_FALSE(family_exists(cycle_graph(5), VertexSubset{1, 2, 3, 4, 5}, 2).has_value());
  CHECK_FALSE(family_exists(path_graph(3), VertexSubset{1}, 1).has_value());
}

TEST_CASE("feasible block counts agree with exhaustive enumeration") {
  for (int n = 2; n <= 5; ++n) {
    testing::for_each_graph(n, [](const Graph& g) {
      for (Mask s = 1; s < (Mask{1} << g.order()); ++s) {
        REQUIRE(feasible_block_counts(g, VertexSubset(s)) == testing::family_counts_brute(g, s));
      }
    });
  }
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testing::random_graph(7, 0.5, rng);
    const Mask s = g.vertex_set().bits();
    CHECK(feasible_block_counts(g, VertexSubset(s)) == testing::family_counts_brute(g, s));
  }
}

TEST_CASE("families found by the search verify") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_graph(3 + trial % 5, 0.5, rng);
    for (Mask s = 1; s < (Mask{1} << g.order()); ++s) {
      const VertexSubset sigma(s);
      for (int r = 1; 2 * r <= sigma.size(); ++r) {
        const auto fam = family_exists(g, sigma, r);
        if (!fam) continue;
        CHECK(verify_family(g, *fam).ok());
        CHECK(fam->covered() == sigma);
        CHECK(fam->size() == r);
      }
    }
  }
}

TEST_CASE("d invariant") {
  CHECK(d_invariant(cycle_graph(4)).value == 3);
  CHECK(d_invariant(complete_graph(2)).value == 1);
  CHECK(d_invariant(star_graph(3)).value == 3);
  CHECK(d_invariant(two_k2()).value == 2);
  CHECK_THROWS_AS(d_invariant(Graph::edgeless(2)), InvalidArgument);

  const auto d = d_invariant(path_graph(4));
  CHECK(verify_family(path_graph(4), d.witness));
  CHECK(d.witness.weight() == d.value);
}

TEST_CASE("verify_family reports defects") {
  StronglyDisjointFamily bad_reps{{{VertexSubset{1}, VertexSubset{2}}, {VertexSubset{3}, VertexSubset{4}}},
                                  {{1, 2}, {3, 4}}};
  const auto p4 = verify_family(path_graph(4), bad_reps);
  CHECK(p4.defect == FamilyDefect::kRepsNotThreeDisjoint);
  CHECK(std::string(to_string(p4.defect)) == "reps not 3-disjoint");

  StronglyDisjointFamily overlap{{{VertexSubset{1}, VertexSubset{2}}, {VertexSubset{2}, VertexSubset{3}}},
                                 {{1, 2}, {2, 3}}};
  const auto k3 = verify_family(complete_graph(3), overlap);
  CHECK(k3.defect == FamilyDefect::kBlocksIntersect);
  CHECK(std::string(to_string(k3.defect)) == "blocks intersect");

  StronglyDisjointFamily not_bip{{{VertexSubset{1}, VertexSubset{3}}}, {{1, 3}}};
  CHECK(verify_family(path_graph(3), not_bip).defect == FamilyDefect::kNotCompleteBipartite);

  StronglyDisjointFamily rep_outside{{{VertexSubset{1, 3}, VertexSubset{2}}}, {{3, 4}}};
  CHECK(verify_family(path_graph(4), rep_outside).defect == FamilyDefect::kRepNotInBlock);

  StronglyDisjointFamily mismatch{{{VertexSubset{1}, VertexSubset{2}}}, {}};
  CHECK(verify_family(path_graph(3), mismatch).defect == FamilyDefect::kCountMismatch);

  StronglyDisjointFamily empty_side{{{VertexSubset{1}, VertexSubset{}}}, {{1, 2}}};
  CHECK(verify_family(path_graph(3), empty_side).defect == FamilyDefect::kEmptySide);

  StronglyDisjointFamily outside{{{VertexSubset{1}, VertexSubset{9}}}, {{1, 9}}};
  CHECK(verify_family(path_graph(3), outside).defect == FamilyDefect::kOutsideGraph);
}

TEST_CASE("certificate extraction examples") {
  const auto k2 = extract_certificate(complete_graph(2), VertexSubset{1, 2}, 1, kQ);
  REQUIRE(k2.size() == 1);
  CHECK(k2.reps[0] == Edge(1, 2));

  const auto c4 = extract_certificate(cycle_graph(4), VertexSubset{1, 2, 3, 4}, 1, kQ);
  CHECK(verify_family(cycle_graph(4), c4));
  CHECK(c4.covered() == VertexSubset{1, 2, 3, 4});

  const auto pair = extract_certificate(two_k2(), VertexSubset{1, 2, 3, 4}, 2, kQ);
  CHECK(pair.size() == 2);
  CHECK(verify_family(two_k2(), pair));

  // beta_{2,{1..4}}(C4) = 0.
  CHECK_THROWS_AS(extract_certificate(cycle_graph(4), VertexSubset{1, 2, 3, 4}, 2, kQ), PreconditionFailed);
  CHECK_THROWS_AS(extract_certificate(cycle_graph(5), VertexSubset{1, 2, 3, 4, 5}, 2, kQ), PreconditionFailed);
  CHECK_THROWS_AS(extract_certificate(cycle_graph(4), VertexSubset{1, 2}, 0, kQ), InvalidArgument);
}

TEST_CASE("certificate extraction on random weakly chordal graphs") {
  std::mt19937_64 rng(89);
  int extracted = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = random_weakly_chordal(3 + trial % 5, rng);
    const auto table = betti_table(g, kQ);
    for (const auto& e : table.entries()) {
      const int r = e.sigma.size() - e.i;
      for (auto prefer : {BranchPreference::kEdgeDeletion, BranchPreference::kNeighborhoodDeletion}) {
        ExtractOptions opts;
        opts.prefer = prefer;
        const auto fam = extract_certificate(g, e.sigma, r, kQ, opts);
        REQUIRE(verify_family(g, fam).ok());
        CHECK(fam.size() == r);
        CHECK(fam.covered() == e.sigma);
        ++extracted;
      }
    }
  }
  CHECK(extracted > 100);
}

TEST_CASE("equivalence reports") {
  const auto c4 = verify_equivalence(cycle_graph(4), kQ);
  CHECK(c4.weakly_chordal);
  CHECK(c4.violations() == 0);
  CHECK(c4.necessity.empty());
  CHECK(c4.sufficiency.empty());
  CHECK(c4.cells_checked > 0);

  const auto c5 = verify_equivalence(cycle_graph(5), kQ);
  CHECK_FALSE(c5.weakly_chordal);
  CHECK(c5.violations() == 0);
  CHECK(c5.sufficiency.empty());
  REQUIRE(c5.necessity.size() == 1);
  CHECK(c5.necessity[0].sigma == VertexSubset{1, 2, 3, 4, 5});
  CHECK(c5.necessity[0].r == 2);
  CHECK(c5.necessity[0].betti == 1);

  CHECK(verify_equivalence(complete_graph(2), kF2).violations() == 0);
}

TEST_CASE("invariants of weakly chordal graphs") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_weakly_chordal(3 + trial % 5, rng);
    const auto q = pdim_reg(g, kQ);
    const auto f2 = pdim_reg(g, kF2);
    CHECK(q == f2);
    CHECK(q.reg == induced_matching_number(g));
    CHECK(q.pdim == d_invariant(g).value);
    if (is_chordal_brute(g)) CHECK(q.pdim == big_height(g));
  }
}

TEST_CASE("sufficiency and the regularity lower bound on arbitrary graphs") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::random_graph(3 + trial % 5, 0.45, rng);
    if (g.edge_count() == 0) continue;
    for (const Field& f : {kQ, kF2}) {
      const auto rep = verify_equivalence(g, f);
      CHECK(rep.sufficiency.empty());
      CHECK(rep.weakly_chordal == is_weakly_chordal(g));
      const auto inv = pdim_reg(g, f);
      CHECK(induced_matching_number(g) <= inv.reg);
      CHECK(d_invariant(g).value <= inv.pdim);
    }
  }
}
