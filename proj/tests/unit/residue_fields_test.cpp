#include <gtest/gtest.h>

#include <set>

#include "cyclolab/error.hpp"
#include "cyclolab/residue_fields.hpp"
#include "oracles.hpp"

namespace cyclolab {
namespace {

ModPolynomial mp(std::uint64_t p, std::vector<std::uint64_t> c) { return ModPolynomial(p, std::move(c)); }

const ModPolynomial kX2{2, {0, 1}};

TEST(ModPowmod, Examples) {
  const ModPolynomial g = mp(2, {1, 1, 0, 1});  // X^3 + X + 1
  EXPECT_EQ(mod_powmod(kX2, 1, g), kX2);
  // F_8^x has order 7, so X^8 = X; the oracle's square-and-multiply agrees.
  EXPECT_EQ(mod_powmod(kX2, 8, g), kX2);
  EXPECT_EQ(oracle::powmod({0, 1}, 8, {1, 1, 0, 1}, 2), (oracle::FPoly{0, 1}));
  EXPECT_EQ(mod_powmod(kX2, 6, g), mp(2, {1, 0, 1}));
  EXPECT_TRUE(mod_powmod(mp(2, {1, 1}), 0, g).is_one());
  EXPECT_THROW(mod_powmod(mp(3, {0, 1}), 2, g), Error);
}

TEST(ModGcd, Examples) {
  EXPECT_EQ(mod_gcd(mp(5, {2, 4}), mp(5, {})), mp(5, {3, 1}));
  EXPECT_TRUE(mod_gcd(mp(2, {1, 0, 0, 0, 0, 0, 0, 1}), mp(2, {1, 1, 1})).is_one());
  EXPECT_EQ(mod_gcd(mp(5, {4, 0, 0, 0, 1}), mp(5, {4, 0, 1})), mp(5, {4, 0, 1}));
}

TEST(FactorPhiModP, Examples) {
  const ResidueFactorization f7 = factor_phi_mod_p(7, 2);
  EXPECT_EQ(f7.f, 3U);
  EXPECT_EQ(f7.factors, (std::vector<ModPolynomial>{mp(2, {1, 0, 1, 1}), mp(2, {1, 1, 0, 1})}));
  const ResidueFactorization f4 = factor_phi_mod_p(4, 5);
  EXPECT_EQ(f4.f, 1U);
  EXPECT_EQ(f4.factors, (std::vector<ModPolynomial>{mp(5, {2, 1}), mp(5, {3, 1})}));
  const ResidueFactorization f3 = factor_phi_mod_p(3, 2);
  EXPECT_EQ(f3.factors, std::vector<ModPolynomial>{mp(2, {1, 1, 1})});
}

TEST(FactorPhiModP, Errors) {
  try {
    factor_phi_mod_p(12, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RamifiedPrime);
  }
  try {
    factor_phi_mod_p(7, 9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PrimalityError);
  }
}

// Properties: equal degree f = ord_m(p), f g = phi(m), product equals
// Phi_m mod p, each factor irreducible (Rabin test done by the oracle over
// F_p), and the result does not depend on the seed.
TEST(FactorPhiModP, Invariants) {
  for (std::uint64_t m = 1; m <= 90; ++m) {
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 31ULL, 101ULL, 257ULL}) {
      if (m % p == 0) continue;
      const ResidueFactorization fac = factor_phi_mod_p(m, p);
      const std::uint64_t f = oracle::order(p, m);
      ASSERT_EQ(fac.f, f);
      ASSERT_EQ(fac.count() * f, oracle::totient(m));
      oracle::FPoly prod{1};
      for (const auto& g : fac.factors) {
        ASSERT_EQ(*g.degree(), f);
        ASSERT_TRUE(g.is_monic());
        prod = oracle::mul(prod, oracle::FPoly(g.coeffs().begin(), g.coeffs().end()), p);
        // Rabin: X^(p^f) = X and gcd(X^(p^(f/q)) - X, g) = 1.
        const oracle::FPoly gf(g.coeffs().begin(), g.coeffs().end());
        oracle::Z pf;
        mpz_ui_pow_ui(pf.get_mpz_t(), p, f);
        ASSERT_EQ(oracle::powmod({0, 1}, pf, gf, p), oracle::rem({0, 1}, gf, p));
        for (std::uint64_t q = 2; q <= f; ++q) {
          if (f % q || !oracle::is_prime(q)) continue;
          oracle::Z e;
          mpz_ui_pow_ui(e.get_mpz_t(), p, f / q);
          const oracle::FPoly h = oracle::sub(oracle::powmod({0, 1}, e, gf, p), {0, 1}, p);
          ASSERT_EQ(oracle::gcd(h, gf, p), oracle::FPoly{1});
        }
      }
      ASSERT_EQ(prod, oracle::reduce(oracle::cyclotomic(m), p));
      ASSERT_EQ(factor_phi_mod_p(m, p, 12345), fac);
    }
  }
}

// Property: the powers X^0 .. X^(m-1) are distinct in each residue field.
TEST(ResidueField, PowersOfXAreDistinct) {
  for (std::uint64_t m : {5ULL, 12ULL, 21ULL, 35ULL}) {
    for (std::uint64_t p : {2ULL, 11ULL, 13ULL}) {
      if (m % p == 0) continue;
      const ResidueFactorization fac = factor_phi_mod_p(m, p);
      for (const auto& g : fac.factors) {
        const QuotientRing ring(g, true);
        std::set<std::vector<std::uint64_t>> seen;
        ResidueFieldElement a = ring.one();
        for (std::uint64_t i = 0; i < m; ++i) {
          ASSERT_TRUE(seen.emplace(a.representative.coeffs().begin(), a.representative.coeffs().end()).second);
          a = ring.times_x(a);
        }
        EXPECT_EQ(a, ring.one());
      }
    }
  }
}

TEST(ResidueField, FrobeniusMatchesPower) {
  const ResidueFactorization fac = factor_phi_mod_p(31, 7);
  const QuotientRing ring(fac.factors.front(), true);
  ResidueFieldElement a = ring.add(ring.x(), ring.one());
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(ring.frobenius(a), ring.pow(a, 7));
    a = ring.mul(a, ring.add(a, ring.x()));
  }
}

TEST(RootOfUnityOrder, Examples) {
  EXPECT_EQ(root_of_unity_order_mod(7, 2, 0), 7U);
  EXPECT_EQ(root_of_unity_order_mod(7, 2, 1), 7U);
  EXPECT_EQ(root_of_unity_order_mod(1, 3, 0), 1U);
  const ResidueFactorization f4 = factor_phi_mod_p(4, 5);
  ASSERT_EQ(f4.factors[1], mp(5, {3, 1}));  // X - 2
  EXPECT_EQ(root_of_unity_order_mod(f4, 1), 4U);
}

TEST(VerifyPrimitivity, Examples) {
  const PrimitivityReport r12 = verify_primitivity(12, 5);
  EXPECT_TRUE(r12.passed);
  std::set<std::uint64_t> js;
  for (const auto& c : r12.factors.front().divisor_checks) js.insert(c.j);
  EXPECT_EQ(js, (std::set<std::uint64_t>{4, 6}));
  EXPECT_TRUE(verify_primitivity(1, 2).passed);
  const PrimitivityReport r7 = verify_primitivity(7, 2);
  EXPECT_TRUE(r7.passed);
  EXPECT_EQ(r7.factors.front().divisor_checks.size(), 1U);
  EXPECT_EQ(r7.factors.front().divisor_checks.front().j, 1U);
  EXPECT_THROW(verify_primitivity(12, 2), Error);
}

TEST(UnramifiedCheck, Examples) {
  const UnramifiedWitness w7 = unramified_check(7, 2);
  EXPECT_TRUE(w7.unramified);
  EXPECT_TRUE(w7.squarefree);
  EXPECT_FALSE(unramified_check(4, 2).unramified);
  EXPECT_TRUE(unramified_check(12, 7).unramified);
}

}  // namespace
}  // namespace cyclolab
