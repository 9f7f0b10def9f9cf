#include <gtest/gtest.h>

#include <numeric>

#include "cyclolab/error.hpp"
#include "cyclolab/residue_fields.hpp"
#include "cyclolab/splitting_lab.hpp"
#include "oracles.hpp"

namespace cyclolab {
namespace {

TEST(SplittingData, Examples) {
  const SplittingData a = splitting_data(7, 2);
  EXPECT_EQ(a.e, 1U);
  EXPECT_EQ(a.f, 3U);
  EXPECT_EQ(a.g, 2U);
  const SplittingData b = splitting_data(12, 2);
  EXPECT_EQ(b.e, 2U);
  EXPECT_EQ(b.f, 2U);
  EXPECT_EQ(b.g, 1U);
  EXPECT_EQ(b.m_prime, 3U);
  EXPECT_EQ(b.p_part, 4U);
  const SplittingData c = splitting_data(8, 2);
  EXPECT_EQ(c.e, 4U);
  EXPECT_EQ(c.f, 1U);
  EXPECT_EQ(c.g, 1U);
}

// Properties: e f g = phi(m) for every p, e = 1 iff p does not divide m or
// p = 2 divides m exactly once (Q(zeta_2m') = Q(zeta_m') for odd m'), and
// f, g match an actual factorization when p is unramified.
TEST(SplittingData, Invariants) {
  for (std::uint64_t m = 1; m <= 120; ++m) {
    for (std::uint64_t p = 2; p <= 60; ++p) {
      if (!oracle::is_prime(p)) continue;
      const SplittingData d = splitting_data(m, p);
      ASSERT_EQ(d.e * d.f * d.g, oracle::totient(m));
      ASSERT_EQ(d.e == 1, m % p != 0 || d.p_part == 2);
      ASSERT_EQ(d.m_prime * d.p_part, m);
      ASSERT_EQ(d.e, oracle::totient(d.p_part));
      if (m % p != 0) {
        const ResidueFactorization fac = factor_phi_mod_p(m, p);
        ASSERT_EQ(d.f, fac.f);
        ASSERT_EQ(d.g, fac.count());
      }
    }
  }
}

TEST(OneMinusZetaVerdict, Examples) {
  EXPECT_EQ(one_minus_zeta_verdict(1).kind, OneMinusZetaKind::Zero);
  const OneMinusZetaVerdict v9 = one_minus_zeta_verdict(9);
  EXPECT_EQ(v9.kind, OneMinusZetaKind::PrimePower);
  EXPECT_EQ(v9.prime, 3U);
  EXPECT_EQ(v9.evidence, 3);
  const OneMinusZetaVerdict v6 = one_minus_zeta_verdict(6);
  EXPECT_EQ(v6.kind, OneMinusZetaKind::Unit);
  EXPECT_EQ(v6.evidence, 1);
}

TEST(OneMinusZetaVerdict, AgreesWithPhiAtOne) {
  for (std::uint64_t m = 1; m <= 3000; ++m) {
    const OneMinusZetaVerdict v = one_minus_zeta_verdict(m);
    ASSERT_EQ(v.evidence, phi_at_one(m));
    const auto divs = oracle::divisors(m);
    std::size_t prime_divisors = 0;
    for (auto d : divs) prime_divisors += oracle::is_prime(d);
    const OneMinusZetaKind want = m == 1 ? OneMinusZetaKind::Zero : prime_divisors == 1 ? OneMinusZetaKind::PrimePower : OneMinusZetaKind::Unit;
    ASSERT_EQ(v.kind, want) << m;
  }
}

TEST(Compositum, Examples) {
  const CompositumReport r = compositum_degree_check(4, 3);
  EXPECT_EQ(r.phi_PQ, 4U);
  EXPECT_EQ(r.phi_P, 2U);
  EXPECT_EQ(r.phi_Q, 2U);
  EXPECT_TRUE(r.degrees_multiply);
  EXPECT_EQ(r.e_p_in_PQ, 2U);
  EXPECT_EQ(r.e_p_in_Q, 1U);
  EXPECT_TRUE(r.ramification_separates);
  const CompositumReport s = compositum_degree_check(9, 8);
  EXPECT_EQ(s.phi_PQ, 24U);
  EXPECT_EQ(s.phi_P * s.phi_Q, 24U);
  const CompositumReport t = compositum_degree_check(2, 3);
  EXPECT_EQ(t.phi_PQ, 2U);
  EXPECT_EQ(t.phi_P, 1U);
  try {
    compositum_degree_check(4, 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SamePrime);
  }
  EXPECT_THROW(compositum_degree_check(6, 5), Error);
}

TEST(Chebotarev, Examples) {
  const ChebotarevTally t4 = chebotarev_sample(4, 100);
  EXPECT_EQ(t4.classes, (std::vector<std::uint64_t>{1, 3}));
  EXPECT_EQ(t4.counts, (std::vector<std::uint64_t>{11, 13}));
  const ChebotarevTally t3 = chebotarev_sample(3, 10);
  EXPECT_EQ(t3.counts, (std::vector<std::uint64_t>{1, 2}));
  // Below the smallest prime coprime to m every count is zero.
  const ChebotarevTally t6 = detail::tally_prime_classes(6, 4, 1);
  EXPECT_EQ(t6.counts, (std::vector<std::uint64_t>{0, 0}));
  EXPECT_EQ(t6.total, 0U);
}

TEST(Chebotarev, Errors) {
  EXPECT_THROW(chebotarev_sample(2, 100), Error);
  EXPECT_THROW(chebotarev_sample(10, 5), Error);
  try {
    chebotarev_sample(5, 1000, 1, 500);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LimitExceeded);
  }
}

// Properties: counts sum to the number of primes up to N not dividing m,
// frequencies sum to exactly 1, and partitioning never changes the tally.
TEST(Chebotarev, CountsAndDeterminism) {
  for (std::uint64_t m : {3ULL, 7ULL, 10ULL, 24ULL}) {
    for (std::uint64_t n : {30ULL, 1000ULL, 3'000'000ULL}) {
      if (n < m) continue;
      const ChebotarevTally t = chebotarev_sample(m, n);
      std::uint64_t want = 0;
      if (n <= 1000) {
        for (std::uint64_t p = 2; p <= n; ++p) want += oracle::is_prime(p) && m % p != 0;
        ASSERT_EQ(t.total, want);
      }
      ASSERT_EQ(std::accumulate(t.counts.begin(), t.counts.end(), std::uint64_t{0}), t.total);
      mpq_class sum = 0;
      for (const auto& f : t.frequencies()) sum += f;
      ASSERT_EQ(sum, 1);
      for (unsigned k : {2U, 3U, 8U}) ASSERT_EQ(chebotarev_sample(m, n, k), t);
    }
  }
}

}  // namespace
}  // namespace cyclolab
