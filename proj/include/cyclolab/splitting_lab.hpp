#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cyclolab/int_polynomial.hpp"

namespace cyclolab {

/// Decomposition of a rational prime p in Q(zeta_m): with m = m' p^k,
/// e = phi(p^k), f = ord_{m'}(p), g = phi(m) / (e f).
struct SplittingData {
  std::uint64_t m = 1;
  std::uint64_t p = 2;
  std::uint64_t e = 1;
  std::uint64_t f = 1;
  std::uint64_t g = 1;
  std::uint64_t m_prime = 1;
  std::uint64_t p_part = 1;

  friend bool operator==(const SplittingData&, const SplittingData&) = default;
};

struct SplittingOptions {
  /// For p not dividing m, compare f and g with an actual factorization of
  /// Phi_m mod p.
  bool cross_check = true;
  std::uint64_t seed = 0;
};

SplittingData splitting_data(std::uint64_t m, std::uint64_t p, const SplittingOptions& options = {});

enum class OneMinusZetaKind { Zero, PrimePower, Unit };

std::string_view to_string(OneMinusZetaKind k) noexcept;

/// What 1 - zeta_m is: zero (m = 1), a generator of a prime above p up to
/// units (m = p^k), or a unit (two or more distinct primes divide m).
struct OneMinusZetaVerdict {
  std::uint64_t m = 1;
  OneMinusZetaKind kind = OneMinusZetaKind::Zero;
  std::optional<std::uint64_t> prime;
  Integer evidence;  // Phi_m(1)

  friend bool operator==(const OneMinusZetaVerdict&, const OneMinusZetaVerdict&) = default;
};

/// Throws VerificationFailed if Phi_m(1) contradicts the factorization of m.
OneMinusZetaVerdict one_minus_zeta_verdict(std::uint64_t m);

struct CompositumReport {
  std::uint64_t P = 1;
  std::uint64_t Q = 1;
  std::uint64_t p = 1;  // prime under P
  std::uint64_t q = 1;  // prime under Q
  std::uint64_t phi_P = 1;
  std::uint64_t phi_Q = 1;
  std::uint64_t phi_PQ = 1;
  bool degrees_multiply = false;
  /// Ramification of p: e in Q(zeta_PQ) and in Q(zeta_Q).
  std::uint64_t e_p_in_PQ = 1;
  std::uint64_t e_p_in_Q = 1;
  /// The same for q, in Q(zeta_PQ) and Q(zeta_P).
  std::uint64_t e_q_in_PQ = 1;
  std::uint64_t e_q_in_P = 1;
  bool ramification_separates = false;

  friend bool operator==(const CompositumReport&, const CompositumReport&) = default;
};

/// P and Q must be powers (> 1) of distinct primes; throws SamePrime if they
/// share one and InvalidArgument if either is not a prime power.
CompositumReport compositum_degree_check(std::uint64_t P, std::uint64_t Q);

/// Default largest sieve limit accepted by chebotarev_sample.
inline constexpr std::uint64_t kMaxSieveLimit = 100'000'000;

/// Primes p <= N with p not dividing m, tallied by p mod m.
struct ChebotarevTally {
  std::uint64_t m = 3;
  std::uint64_t limit = 3;
  std::vector<std::uint64_t> classes;  // coprime residues, ascending
  std::vector<std::uint64_t> counts;   // counts[i] for classes[i]
  std::uint64_t total = 0;

  /// counts[i] / total, exact. All zero when total is zero.
  std::vector<mpq_class> frequencies() const;

  friend bool operator==(const ChebotarevTally&, const ChebotarevTally&) = default;
};

/// Segmented sieve over [2, N] split into `partitions` contiguous ranges
/// processed concurrently and merged by class; the tally does not depend on
/// the partition count. Requires m >= 3 and N >= m; throws LimitExceeded
/// above max_limit.
ChebotarevTally chebotarev_sample(std::uint64_t m, std::uint64_t limit, unsigned partitions = 1,
                                  std::uint64_t max_limit = kMaxSieveLimit);

namespace detail {

/// The tally without the m >= 3, N >= m preconditions.
ChebotarevTally tally_prime_classes(std::uint64_t m, std::uint64_t limit, unsigned partitions);

/// Bytes per sieve segment.
inline constexpr std::uint64_t kSieveSegment = 1U << 20U;

}  // namespace detail

}  // namespace cyclolab
