#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "cyclolab/error.hpp"
#include "cyclolab/int_polynomial.hpp"
#include "cyclolab/mod_polynomial.hpp"
#include "cyclolab/number_theory.hpp"
#include "oracles.hpp"

namespace cyclolab {
namespace {

oracle::ZPoly to_oracle(const IntPolynomial& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

IntPolynomial random_poly(std::mt19937_64& rng, std::size_t max_len, int bits) {
  std::vector<Integer> c(rng() % (max_len + 1));
  for (auto& v : c) {
    mpz_class r;
    r = static_cast<unsigned long>(rng());
    if (bits > 64) r = (r << 64) + static_cast<unsigned long>(rng());
    r >>= (bits > 64 ? 128 : 64) - bits;
    v = (rng() & 1) ? -r : r;
  }
  return IntPolynomial(std::move(c));
}

ModPolynomial random_mod_poly(std::mt19937_64& rng, std::uint64_t p, std::size_t len) {
  std::vector<std::uint64_t> c(len);
  for (auto& v : c) v = rng() % p;
  return ModPolynomial(p, std::move(c));
}

TEST(NumberTheory, FactorTotientCarmichael) {
  EXPECT_EQ(factor(360), (Factorization{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(factor(1), Factorization{});
  EXPECT_EQ(totient(1), 1U);
  EXPECT_EQ(totient(36), 12U);
  EXPECT_EQ(carmichael(8), 2U);
  EXPECT_EQ(carmichael(15), 4U);
  EXPECT_EQ(radical(factor(72)), 6U);
}

TEST(NumberTheory, FactorBeyondTrialBoundFails) {
  // Product of two primes just above the trial-division bound.
  try {
    factor(1'000'003ULL * 1'000'033ULL);
    FAIL() << "expected FactorizationLimit";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FactorizationLimit);
  }
}

TEST(NumberTheory, IsPrimeMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) ASSERT_EQ(is_prime(n), oracle::is_prime(n)) << n;
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(NumberTheory, MultOrderMatchesBruteForce) {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    for (std::uint64_t a = 1; a < n; ++a) {
      if (oracle::gcd(a, n) != 1) continue;
      ASSERT_EQ(mult_order(static_cast<std::int64_t>(a), n), oracle::order(a, n)) << a << " mod " << n;
    }
  }
  EXPECT_EQ(mult_order(-1, 7), 2U);
  EXPECT_THROW(mult_order(2, 4), Error);
}

// Property: mult_order(a, n) divides lambda(n) computed by brute force as the
// lcm of all element orders.
TEST(NumberTheory, MultOrderDividesGroupExponent) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t n = 2 + rng() % 9999;
    std::uint64_t lambda = 1;
    for (std::uint64_t a = 1; a < n; ++a) {
      if (oracle::gcd(a, n) == 1) lambda = std::lcm(lambda, oracle::order(a, n));
    }
    ASSERT_EQ(carmichael(n), lambda) << n;
    for (int k = 0; k < 5; ++k) {
      std::uint64_t a = 1 + rng() % (n - 1);
      if (oracle::gcd(a, n) != 1) continue;
      ASSERT_EQ(lambda % mult_order(static_cast<std::int64_t>(a), n), 0U);
    }
  }
}

TEST(NumberTheory, InverseAndPrimes) {
  EXPECT_EQ(inverse_mod(3, 7), 5U);
  EXPECT_THROW(inverse_mod(4, 8), Error);
  EXPECT_EQ(primes_up_to(30), (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
}

TEST(IntPolynomial, BasicShapes) {
  EXPECT_TRUE(IntPolynomial{}.is_zero());
  EXPECT_FALSE(IntPolynomial{}.degree().has_value());
  EXPECT_EQ(IntPolynomial({1, 0, 0}).degree(), 0U);
  EXPECT_EQ(IntPolynomial::x_pow_minus_one(3), IntPolynomial({-1, 0, 0, 1}));
  EXPECT_EQ(IntPolynomial({1, 1}).substitute_power(3), IntPolynomial({1, 0, 0, 1}));
  EXPECT_EQ(IntPolynomial({5, 3, 2}).derivative(), IntPolynomial({3, 4}));
  EXPECT_EQ(IntPolynomial({1, -7, 3}).height(), 7);
  EXPECT_EQ(poly_eval_int(IntPolynomial({1, 1, 1}), 2), 7);
}

TEST(IntPolynomial, ExactDivisionExamples) {
  EXPECT_EQ(poly_exact_div(IntPolynomial::x_pow_minus_one(4), IntPolynomial({-1, 1})), IntPolynomial({1, 1, 1, 1}));
  EXPECT_THROW(poly_exact_div(IntPolynomial({1, 0, 1}), IntPolynomial({-1, 1})), Error);
  EXPECT_THROW(poly_exact_div(IntPolynomial({1, 1}), IntPolynomial({0, 2})), Error);
  EXPECT_THROW(poly_exact_div(IntPolynomial({1}), IntPolynomial{}), Error);
}

TEST(IntPolynomial, ProductAgreesWithOracle) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const int bits = 1 + static_cast<int>(rng() % 120);
    const IntPolynomial a = random_poly(rng, 90, bits);
    const IntPolynomial b = random_poly(rng, 90, bits);
    ASSERT_EQ(to_oracle(poly_mul(a, b)), oracle::mul(to_oracle(a), to_oracle(b))) << "trial " << trial;
  }
}

// Properties: commutativity, associativity, exact-division round trip and
// independence from the Karatsuba threshold.
TEST(IntPolynomial, RingProperties) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int bits = 1 + static_cast<int>(rng() % 100);
    const IntPolynomial a = random_poly(rng, 70, bits);
    const IntPolynomial b = random_poly(rng, 70, bits);
    const IntPolynomial c = random_poly(rng, 20, bits);
    ASSERT_EQ(poly_mul(a, b), poly_mul(b, a));
    ASSERT_EQ(poly_mul(poly_mul(a, b), c), poly_mul(a, poly_mul(b, c)));
    if (!b.is_zero()) ASSERT_EQ(poly_exact_div(poly_mul(a, b), b), a);
    const IntPolynomial ref = detail::mul_bigint(a, b, SIZE_MAX);
    for (std::size_t threshold : {2, 3, 8, 17, 64}) ASSERT_EQ(detail::mul_bigint(a, b, threshold), ref);
  }
}

TEST(ModPolynomial, ConstructionAndErrors) {
  const ModPolynomial a(7, {8, 13, 7});
  EXPECT_EQ(std::vector<std::uint64_t>(a.coeffs().begin(), a.coeffs().end()), (std::vector<std::uint64_t>{1, 6}));
  EXPECT_THROW(ModPolynomial(8, {1}), Error);
  EXPECT_THROW(ModPolynomial(kMaxModulus + 15, {1}), Error);
  EXPECT_THROW(ModPolynomial(5, {1}) + ModPolynomial(7, {1}), Error);
  EXPECT_EQ(ModPolynomial::reduce(IntPolynomial({-1, 0, 1}), 5), ModPolynomial(5, {4, 0, 1}));
  EXPECT_EQ(ModPolynomial(5, {4, 0, 1}).lift_symmetric(), IntPolynomial({-1, 0, 1}));
}

TEST(ModPolynomial, ProductAgreesWithOracle) {
  std::mt19937_64 rng(6);
  for (std::uint64_t p : {2ULL, 3ULL, 65537ULL, 4294967291ULL}) {
    for (int trial = 0; trial < 100; ++trial) {
      const ModPolynomial a = random_mod_poly(rng, p, rng() % 80);
      const ModPolynomial b = random_mod_poly(rng, p, rng() % 80);
      const oracle::FPoly want = oracle::mul(oracle::FPoly(a.coeffs().begin(), a.coeffs().end()),
                                             oracle::FPoly(b.coeffs().begin(), b.coeffs().end()), p);
      const ModPolynomial got = a * b;
      ASSERT_EQ(oracle::FPoly(got.coeffs().begin(), got.coeffs().end()), want);
    }
  }
}

// Properties: division identity, gcd divides both inputs, Fermat for X.
TEST(ModPolynomial, DivisionGcdAndFrobenius) {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {2ULL, 3ULL, 101ULL, 1000003ULL}) {
    for (int trial = 0; trial < 100; ++trial) {
      const ModPolynomial a = random_mod_poly(rng, p, rng() % 40);
      ModPolynomial b = random_mod_poly(rng, p, 1 + rng() % 20);
      if (b.is_zero()) continue;
      const auto [q, r] = mod_divrem(a, b);
      ASSERT_EQ(q * b + r, a);
      ASSERT_TRUE(r.is_zero() || *r.degree() < *b.degree());
      if (a.is_zero()) continue;
      const ModPolynomial g = mod_gcd(a, b);
      ASSERT_TRUE(g.is_monic());
      ASSERT_TRUE(mod_divrem(a, g).second.is_zero());
      ASSERT_TRUE(mod_divrem(b, g).second.is_zero());
    }
  }
  // X^(p^f) = X modulo an irreducible of degree f.
  const ModPolynomial g(2, {1, 1, 0, 0, 1});  // X^4 + X + 1
  EXPECT_EQ(mod_powmod(ModPolynomial::monomial(2, 1, 1), 16, g), ModPolynomial::monomial(2, 1, 1));
  const ModPolynomial h(101, {2, 0, 1});  // X^2 + 2, irreducible since -2 is a non-residue mod 101
  EXPECT_EQ(mod_powmod(ModPolynomial::monomial(101, 1, 1), 101 * 101, h), ModPolynomial::monomial(101, 1, 1));
}

TEST(ModPolynomial, CanonicalOrder) {
  const ModPolynomial a(5, {1, 1});
  const ModPolynomial b(5, {2, 1});
  const ModPolynomial c(5, {0, 0, 1});
  EXPECT_TRUE(canonical_less(a, b));
  EXPECT_TRUE(canonical_less(b, c));
  EXPECT_FALSE(canonical_less(c, a));
}

}  // namespace
}  // namespace cyclolab
