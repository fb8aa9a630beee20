#include <gtest/gtest.h>

#include "csupp/census.hpp"
#include "csupp/lattice.hpp"
#include "oracles.hpp"

using namespace csupp;

namespace {

std::vector<CensusAlgebra> small_census(std::uint32_t p) {
  CensusSpec spec;
  spec.p = p;
  spec.min_dim = 1;
  spec.max_dim = 3;
  return collect(spec);
}

std::vector<Subspace> lattice_of(const oracle::Oracle& o, const PrimeField& F) {
  std::vector<Subspace> out;
  for (std::size_t s = 0; s < o.spaces().size(); ++s) {
    if (o.is_subalgebra(s)) out.push_back(oracle::to_subspace(o, F, o.spaces()[s]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Lattice, HeisenbergCounts) {
  struct Row {
    std::uint32_t p;
    std::size_t subalgebras, ideals, maximals;
  };
  for (const Row& r : {Row{2, 12, 6, 3}, Row{3, 19, 7, 4}}) {
    const LatticeCache lat = build_lattice(catalog::heisenberg(PrimeField(r.p)));
    EXPECT_EQ(lat.size(), r.subalgebras);
    EXPECT_EQ(lat.ideals().size(), r.ideals);
    EXPECT_EQ(lat.maximals().size(), r.maximals);
    EXPECT_EQ(lat.subspaces_scanned(), subspace_count(r.p, 3));
  }
}

TEST(Lattice, DoubleCounterexampleSize) {
  EXPECT_EQ(build_lattice(catalog::counterexample_double(PrimeField(2))).size(), 345U);
  EXPECT_EQ(build_lattice(catalog::counterexample_double(PrimeField(3))).size(), 1441U);
}

TEST(Lattice, CapExceeded) {
  EXPECT_THROW(build_lattice(catalog::sl2(PrimeField(3)), {.cap = 27}), CapExceeded);
  EXPECT_NO_THROW(build_lattice(catalog::sl2(PrimeField(3)), {.cap = 28}));
}

TEST(Lattice, WorkerCountDoesNotChangeResult) {
  const LieAlgebra L = catalog::counterexample_double(PrimeField(2));
  const LatticeCache a = build_lattice(L, {.workers = 1});
  const LatticeCache b = build_lattice(L, {.workers = 4});
  EXPECT_EQ(a.subalgebras(), b.subalgebras());
  EXPECT_EQ(a.ideals(), b.ideals());
  EXPECT_EQ(a.maximals(), b.maximals());
}

// Every lattice-derived quantity against the brute-force oracle, for all
// Lie algebras of dimension at most three over GF(2) and GF(3).
class CensusOracle : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(CensusOracle, LatticeStructure) {
  const PrimeField F(GetParam());
  for (const auto& a : small_census(GetParam())) {
    const LieAlgebra& L = a.algebra;
    const oracle::Oracle o(L);
    const LatticeCache lat = build_lattice(L);
    SCOPED_TRACE("dim " + std::to_string(a.dim) + " index " + std::to_string(a.index));
    ASSERT_EQ(lat.subalgebras(), lattice_of(o, F));

    std::vector<Subspace> ideals, maximals;
    for (std::size_t i : lat.ideals()) ideals.push_back(lat.at(i));
    for (std::size_t i : lat.maximals()) maximals.push_back(lat.at(i));
    std::vector<Subspace> want_ideals, want_maximals;
    for (std::size_t s = 0; s < o.spaces().size(); ++s) {
      if (o.is_ideal(s)) want_ideals.push_back(oracle::to_subspace(o, F, o.spaces()[s]));
    }
    for (const auto& m : o.maximals_in(o.all())) want_maximals.push_back(oracle::to_subspace(o, F, m));
    std::sort(want_ideals.begin(), want_ideals.end());
    std::sort(want_maximals.begin(), want_maximals.end());
    EXPECT_EQ(ideals, want_ideals);
    EXPECT_EQ(maximals, want_maximals);

    // Fixpoint core equals the largest ideal found by enumeration.
    for (const auto& B : lat.subalgebras()) {
      EXPECT_EQ(oracle::elements(o, core(L, B)), o.core(oracle::elements(o, B))) << B.to_string();
    }

    // Frattini subalgebra and ideal, for L and for each subalgebra.
    for (std::size_t i = 0; i < lat.size(); ++i) {
      const auto d = oracle::elements(o, lat.at(i));
      const Frattini f = frattini_of(lat, i);
      EXPECT_EQ(oracle::elements(o, f.subalgebra), o.frattini_subalgebra(d));
      EXPECT_EQ(oracle::elements(o, f.ideal), o.core_in(d, o.frattini_subalgebra(d)));
    }

    // Radical is the unique maximal solvable ideal.
    const auto maximal_solvable = o.maximal_solvable_ideals();
    ASSERT_EQ(maximal_solvable.size(), 1U);
    EXPECT_EQ(oracle::elements(o, radical(lat)), maximal_solvable.front());

    // Recursive supersolvability agrees with an exhaustive flag search.
    EXPECT_EQ(is_supersolvable(L), o.supersolvable());
    EXPECT_EQ(is_solvable(L), o.solvable(o.all()));
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, CensusOracle, ::testing::Values(2U, 3U));

TEST(Lattice, MinimalIdealsAndSocle) {
  const PrimeField F(3);
  const LatticeCache lat = build_lattice(direct_sum(catalog::sl2(F), catalog::nonabelian2(F)));
  const auto mins = minimal_ideals(lat);
  // sl2 and the line spanned by y in the two-dimensional algebra.
  ASSERT_EQ(mins.size(), 2U);
  EXPECT_EQ(abelian_socle(lat), Subspace::span(F, 5, {catalog::vec(F, {0, 0, 0, 0, 1})}));
  EXPECT_FALSE(is_semisimple(lat));
  EXPECT_EQ(radical(lat).dim(), 2U);
}

TEST(Lattice, SimpleAndSemisimple) {
  for (std::uint32_t p : {3U, 5U}) {
    const LatticeCache lat = build_lattice(catalog::sl2(PrimeField(p)));
    EXPECT_TRUE(is_simple(lat));
    EXPECT_TRUE(is_semisimple(lat));
    EXPECT_FALSE(is_supersolvable(lat.algebra()));
  }
  EXPECT_FALSE(is_simple(build_lattice(catalog::abelian(PrimeField(2), 1))));
  EXPECT_FALSE(is_simple(build_lattice(catalog::heisenberg(PrimeField(2)))));
}

TEST(Lattice, SupersolvableExamples) {
  const PrimeField F(3);
  EXPECT_TRUE(is_supersolvable(catalog::heisenberg(F)));
  EXPECT_TRUE(is_supersolvable(catalog::counterexample_double(F)));
  EXPECT_TRUE(is_supersolvable(catalog::abelian(F, 0)));
}

TEST(Lattice, CoreInsideSubalgebra) {
  const PrimeField F(2);
  const LieAlgebra L = catalog::counterexample_double(F);
  const LatticeCache lat = build_lattice(L);
  for (std::size_t i = 0; i < lat.size(); i += 7) {
    const Subspace& D = lat.at(i);
    const Embedded E = as_algebra(L, D);
    for (std::size_t j : lat.subalgebras_in(i)) {
      const Subspace& B = lat.at(j);
      EXPECT_EQ(core_in(L, D, B), E.embed(core(E.algebra, E.restrict(B))));
    }
  }
}
