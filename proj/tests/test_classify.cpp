#include <gtest/gtest.h>

#include "csupp/census.hpp"
#include "csupp/classify.hpp"
#include "oracles.hpp"

using namespace csupp;

namespace {

Subspace span(const PrimeField& F, std::size_t n, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<Vector> v;
  for (auto r : rows) v.push_back(catalog::vec(F, r));
  return Subspace::span(F, n, v);
}

}  // namespace

TEST(Classify, Heisenberg) {
  for (std::uint32_t p : {2U, 3U, 5U}) {
    const PrimeField F(p);
    const LatticeCache lat = build_lattice(catalog::heisenberg(F));
    const ClassificationReport r = classify(lat);
    EXPECT_TRUE(r.c_supplemented.holds) << p;
    EXPECT_FALSE(r.completely_factorisable.holds) << p;
    EXPECT_TRUE(r.e_algebra.holds) << p;
    EXPECT_FALSE(r.phi_free) << p;
    EXPECT_EQ(r.frattini_result.ideal, span(F, 3, {{0, 0, 1}}));
    EXPECT_EQ(r.frattini_result.ideal, r.derived_algebra);
    EXPECT_TRUE(r.main_decomposition.holds) << r.main_decomposition.reason;
    EXPECT_TRUE(r.nilpotent && r.supersolvable);
  }
}

TEST(Classify, CounterexampleL1) {
  for (std::uint32_t p : {2U, 3U}) {
    const PrimeField F(p);
    const LatticeCache lat = build_lattice(catalog::counterexample_L1(F));
    EXPECT_EQ(frattini(lat).ideal, span(F, 3, {{0, 0, 1}}));
    EXPECT_TRUE(is_c_supplemented_algebra(lat).holds);
  }
}

TEST(Classify, CounterexampleDouble) {
  for (std::uint32_t p : {2U, 3U}) {
    const PrimeField F(p);
    const LatticeCache lat = build_lattice(catalog::counterexample_double(F));
    const PredicateResult r = is_c_supplemented_algebra(lat, 2);
    ASSERT_FALSE(r.holds);
    EXPECT_EQ(*r.failing, span(F, 6, {{0, 0, 1, 0, 0, 1}}));  // <z + c>
    EXPECT_FALSE(c_supplement(lat, *r.failing).has_value());
    const MainDecomposition d = check_main_decomposition(lat);
    EXPECT_FALSE(d.holds);
    ASSERT_TRUE(d.non_ideal_subalgebra.has_value());
    EXPECT_NE(d.reason.find("is not an ideal"), std::string::npos) << d.reason;
    EXPECT_EQ(d.phi, span(F, 6, {{0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1}}));
  }
}

TEST(Classify, Sl2) {
  for (std::uint32_t p : {3U, 5U}) {
    const LatticeCache lat = build_lattice(catalog::sl2(PrimeField(p)));
    const ClassificationReport r = classify(lat);
    EXPECT_TRUE(r.simple);
    EXPECT_TRUE(r.c_supplemented.holds);
    EXPECT_TRUE(r.completely_factorisable.holds);
    EXPECT_TRUE(r.semisimple_shape.holds) << r.semisimple_shape.reason;
    EXPECT_TRUE(r.main_decomposition.holds) << r.main_decomposition.reason;
  }
}

TEST(Classify, L1GammaIsNotCSupplemented) {
  const LatticeCache lat = build_lattice(catalog::L1_gamma(PrimeField(2), Scalar{0}));
  EXPECT_TRUE(is_simple(lat));
  EXPECT_FALSE(is_c_supplemented_algebra(lat).holds);
  EXPECT_FALSE(check_semisimple_shape(lat).holds);
}

TEST(Classify, L1GammaZeroInOddCharacteristic) {
  for (std::uint32_t p : {3U, 5U, 7U}) {
    const PrimeField F(p);
    const LatticeCache lat = build_lattice(catalog::L1_gamma(F, Scalar{0}));
    EXPECT_TRUE(is_simple(lat)) << p;
    EXPECT_TRUE(is_c_supplemented_algebra(lat).holds) << p;
    EXPECT_TRUE(is_isomorphic_small(lat.algebra(), catalog::sl2(F)).has_value()) << p;
  }
}

TEST(Classify, Sl2SquaredOverGF3) {
  const PrimeField F(3);
  const LatticeCache lat = build_lattice(direct_sum(catalog::sl2(F), catalog::sl2(F)), {.workers = 2});
  EXPECT_EQ(lat.subspaces_scanned(), 56632U);
  EXPECT_EQ(lat.size(), 1059U);
  const SemisimpleShape s = check_semisimple_shape(lat);
  EXPECT_TRUE(s.holds) << s.reason;
  EXPECT_EQ(s.summands.size(), 2U);
  EXPECT_TRUE(is_c_supplemented_algebra(lat, 2).holds);
}

TEST(Classify, WitnessesAreGenuine) {
  const PrimeField F(3);
  const LieAlgebra L = catalog::heisenberg(F);
  const LatticeCache lat = build_lattice(L);
  for (const auto& B : lat.subalgebras()) {
    const auto w = c_supplement(lat, B);
    ASSERT_TRUE(w.has_value()) << B.to_string();
    EXPECT_TRUE(is_subalgebra(L, w->C));
    EXPECT_TRUE((B + w->C).is_full());
    EXPECT_EQ(w->meets_in, B.intersect(w->C));
    EXPECT_TRUE(w->core_B.contains(w->meets_in));
  }
  EXPECT_THROW(c_supplement(lat, span(F, 3, {{1, 0, 0}, {0, 1, 0}})), NotClosed);
}

// Algebra-level predicates against the brute-force oracle over the GF(2) and
// GF(3) censuses up to dimension three.
class PredicateOracle : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(PredicateOracle, MatchesBruteForce) {
  CensusSpec spec;
  spec.p = GetParam();
  for (const auto& a : collect(spec)) {
    SCOPED_TRACE("dim " + std::to_string(a.dim) + " index " + std::to_string(a.index));
    const oracle::Oracle o(a.algebra);
    const LatticeCache lat = build_lattice(a.algebra);
    EXPECT_EQ(is_c_supplemented_algebra(lat).holds, o.c_supplemented_algebra());
    EXPECT_EQ(is_completely_factorisable(lat).holds, o.completely_factorisable());
    EXPECT_EQ(is_elementary(lat).holds, o.elementary());
    EXPECT_EQ(is_E_algebra(lat).holds, o.e_algebra());
    EXPECT_EQ(is_phi_free(lat), o.phi().size() == 1);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      EXPECT_EQ(has_c_supplement(lat, i), o.c_supplemented(oracle::elements(o, lat.at(i))));
      EXPECT_EQ(has_c_supplement(lat, i), c_supplement(lat, lat.at(i)).has_value());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, PredicateOracle, ::testing::Values(2U, 3U));

// Elementary and E-algebra through an independent route: each subalgebra is
// rebuilt as an algebra of its own and its Frattini ideal computed there.
TEST(Classify, RelativeFrattiniMatchesRebuiltSubalgebras) {
  const PrimeField F(2);
  for (const LieAlgebra& L : {catalog::counterexample_double(F), direct_sum(catalog::heisenberg(F), catalog::nonabelian2(F))}) {
    const LatticeCache lat = build_lattice(L);
    const Subspace phi = frattini(lat).ideal;
    bool elementary = true, e_algebra = true;
    for (const auto& B : lat.subalgebras()) {
      const Embedded E = as_algebra(L, B);
      const Subspace phiB = E.embed(frattini(build_lattice(E.algebra)).ideal);
      elementary = elementary && phiB.is_zero();
      e_algebra = e_algebra && phi.contains(phiB);
    }
    EXPECT_EQ(is_elementary(lat).holds, elementary);
    EXPECT_EQ(is_E_algebra(lat).holds, e_algebra);
  }
}

TEST(Classify, Isomorphism) {
  for (std::uint32_t p : {2U, 3U, 5U}) {
    const PrimeField F(p);
    const LieAlgebra H = catalog::heisenberg(F);
    // The same algebra with its basis permuted and rescaled.
    const LieAlgebra H2 = LieAlgebra::from_brackets(F, 3, {{2, 0, catalog::vec(F, {0, 1, 0})}});
    const auto T = is_isomorphic_small(H, H2);
    ASSERT_TRUE(T.has_value());
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        Vector lhs(3);
        const Vector b = H.basis_bracket(i, j);
        for (std::size_t k = 0; k < 3; ++k) axpy(F, b[k], (*T)[k], lhs);
        EXPECT_EQ(lhs, H2.bracket((*T)[i], (*T)[j]));
      }
    }
    EXPECT_FALSE(is_isomorphic_small(H, catalog::abelian(F, 3)));
    EXPECT_FALSE(is_isomorphic_small(H, catalog::counterexample_L1(F)));
  }
  EXPECT_FALSE(is_isomorphic_small(catalog::sl2(PrimeField(3)), catalog::heisenberg(PrimeField(3))));
  EXPECT_THROW(is_isomorphic_small(catalog::abelian(PrimeField(2), 4), catalog::abelian(PrimeField(2), 4)), Error);
}

TEST(Classify, SemisimpleShapeFailsInCharacteristicTwo) {
  const LatticeCache lat = build_lattice(catalog::sl2(PrimeField(2)));
  const SemisimpleShape s = check_semisimple_shape(lat);
  EXPECT_FALSE(s.holds);
  EXPECT_EQ(s.reason, "characteristic two");
}

TEST(Classify, DegenerateDimensions) {
  for (std::size_t n : {0U, 1U}) {
    const LatticeCache lat = build_lattice(catalog::abelian(PrimeField(2), n));
    const ClassificationReport r = classify(lat);
    EXPECT_TRUE(r.degenerate);
    EXPECT_TRUE(r.c_supplemented.holds);
    EXPECT_TRUE(r.completely_factorisable.holds);
  }
  EXPECT_FALSE(classify(build_lattice(catalog::heisenberg(PrimeField(2)))).degenerate);
}

TEST(Classify, WorkerCountDoesNotChangeFailingWitness) {
  const LatticeCache lat = build_lattice(catalog::counterexample_double(PrimeField(3)));
  const auto a = is_c_supplemented_algebra(lat, 1), b = is_c_supplemented_algebra(lat, 3);
  EXPECT_EQ(a.holds, b.holds);
  EXPECT_EQ(a.failing, b.failing);
  EXPECT_EQ(is_E_algebra(lat, 1).failing, is_E_algebra(lat, 3).failing);
}
