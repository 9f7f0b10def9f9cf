#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cyclolab {

/// Prime factorization as ascending (prime, exponent) pairs.
using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

/// Largest trial divisor used by factor(). Cofactors left after trial
/// division must be prime (checked deterministically) or factoring fails
/// with ErrorKind::FactorizationLimit.
inline constexpr std::uint64_t kTrialDivisionBound = 1'000'000;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t n) noexcept;
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t n) noexcept;
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept;

/// Modular inverse of a mod n; throws NotCoprime if gcd(a, n) > 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

Factorization factor(std::uint64_t n);

std::uint64_t totient(const Factorization& f) noexcept;
std::uint64_t totient(std::uint64_t n);

/// Carmichael function lambda(n) in factored form.
Factorization carmichael_factorization(const Factorization& n_factors);
std::uint64_t carmichael(std::uint64_t n);

/// Product of the distinct primes dividing n.
std::uint64_t radical(const Factorization& f) noexcept;

/// Least k >= 1 with a^k = 1 mod n. Works down from the factored group
/// exponent lambda(n). Throws NotCoprime when gcd(a, n) > 1 and
/// FactorizationLimit when lambda(n) cannot be factored under the trial bound.
std::uint64_t mult_order(std::int64_t a, std::uint64_t n);

/// Ascending primes p <= hi by a plain sieve.
std::vector<std::uint64_t> primes_up_to(std::uint64_t hi);

}  // namespace cyclolab
