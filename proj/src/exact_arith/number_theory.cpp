#include "cyclolab/number_theory.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "cyclolab/error.hpp"

namespace cyclolab {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t n) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t n) noexcept {
  if (n == 1) return 0;
  std::uint64_t result = 1;
  base %= n;
  while (exp != 0) {
    if (exp & 1U) result = mulmod_u64(result, base, n);
    base = mulmod_u64(base, base, n);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 0;
  __int128 t = 0, new_t = 1;
  __int128 r = n, new_r = a % n;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) {
    fail(ErrorKind::NotCoprime, std::to_string(a) + " is not invertible mod " + std::to_string(n));
  }
  if (t < 0) t += n;
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // Bases known to be sufficient for all n < 2^64.
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    std::uint64_t x = powmod_u64(a % n, d, n);
    if (a % n == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factor(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "cannot factor 0");
  Factorization out;
  auto strip = [&](std::uint64_t p) {
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k != 0) out.emplace_back(p, k);
  };
  strip(2);
  for (std::uint64_t p = 3; p <= kTrialDivisionBound && p * p <= n; p += 2) strip(p);
  if (n > 1) {
    if (!is_prime(n)) {
      fail(ErrorKind::FactorizationLimit,
           "cofactor " + std::to_string(n) + " has no prime factor below the trial bound and is composite");
    }
    out.emplace_back(n, 1);
  }
  return out;
}

std::uint64_t totient(const Factorization& f) noexcept {
  std::uint64_t phi = 1;
  for (auto [p, k] : f) {
    phi *= p - 1;
    for (unsigned i = 1; i < k; ++i) phi *= p;
  }
  return phi;
}

std::uint64_t totient(std::uint64_t n) { return totient(factor(n)); }

Factorization carmichael_factorization(const Factorization& n_factors) {
  std::map<std::uint64_t, unsigned> lcm;
  auto merge = [&](std::uint64_t q, unsigned k) { lcm[q] = std::max(lcm[q], k); };
  for (auto [p, k] : n_factors) {
    if (p == 2) {
      // lambda(2) = 1, lambda(4) = 2, lambda(2^k) = 2^(k-2) for k >= 3.
      const unsigned e = k == 1 ? 0 : (k == 2 ? 1 : k - 2);
      if (e != 0) merge(2, e);
      continue;
    }
    if (k > 1) merge(p, k - 1);
    for (auto [q, j] : factor(p - 1)) merge(q, j);
  }
  return {lcm.begin(), lcm.end()};
}

std::uint64_t carmichael(std::uint64_t n) {
  std::uint64_t out = 1;
  for (auto [q, k] : carmichael_factorization(factor(n))) {
    for (unsigned i = 0; i < k; ++i) out *= q;
  }
  return out;
}

std::uint64_t radical(const Factorization& f) noexcept {
  std::uint64_t r = 1;
  for (auto [p, k] : f) r *= p;
  return r;
}

std::uint64_t mult_order(std::int64_t a, std::uint64_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "modulus must be positive");
  std::int64_t r = a % static_cast<std::int64_t>(n);
  if (r < 0) r += static_cast<std::int64_t>(n);
  const auto base = static_cast<std::uint64_t>(r);
  if (gcd_u64(base, n) != 1) {
    fail(ErrorKind::NotCoprime, std::to_string(a) + " and " + std::to_string(n) + " are not coprime");
  }
  if (n == 1) return 1;
  const Factorization exponent = carmichael_factorization(factor(n));
  std::uint64_t order = 1;
  for (auto [q, k] : exponent) {
    for (unsigned i = 0; i < k; ++i) order *= q;
  }
  for (auto [q, k] : exponent) {
    for (unsigned i = 0; i < k && order % q == 0; ++i) {
      if (powmod_u64(base, order / q, n) != 1) break;
      order /= q;
    }
  }
  return order;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i <= hi; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace cyclolab
