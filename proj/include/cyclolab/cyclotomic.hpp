#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cyclolab/int_polynomial.hpp"
#include "cyclolab/number_theory.hpp"

namespace cyclolab {

enum class PhiAlgorithm { Division, Moebius, Auto };

std::string_view to_string(PhiAlgorithm a) noexcept;
/// Parses "division", "moebius" or "auto"; throws InvalidArgument otherwise.
PhiAlgorithm parse_phi_algorithm(std::string_view s);

struct CycloConfig {
  std::uint64_t max_conductor = 100'000;

  /// Defaults, with CYCLOLAB_MAX_M overriding the conductor limit when set.
  static CycloConfig from_environment();
};

/// Phi_m together with the engine that produced it (never Auto).
struct CycloPoly {
  std::uint64_t m = 1;
  IntPolynomial poly;
  PhiAlgorithm algorithm = PhiAlgorithm::Division;

  friend bool operator==(const CycloPoly&, const CycloPoly&) = default;
};

struct ArithmeticTables {
  std::uint64_t m = 1;
  std::uint64_t totient = 1;
  std::vector<std::uint64_t> divisors;  // ascending
  std::vector<int> moebius;             // moebius[i] = mu(divisors[i])
  Factorization factorization;

  friend bool operator==(const ArithmeticTables&, const ArithmeticTables&) = default;
};

ArithmeticTables arithmetic_tables(std::uint64_t m);

/// Exact Phi_m. Both engines reduce to the squarefree kernel first, using
/// Phi_m(X) = Phi_rad(m)(X^(m / rad(m))).
///  - Division divides X^n - 1 by every Phi_d, d | n, d < n, memoizing the
///    Phi_d within this call.
///  - Moebius multiplies out prod_{d | n} (X^d - 1)^mu(n/d) as a power series
///    truncated after phi(n) + 1 terms.
/// Throws LimitExceeded when m exceeds config.max_conductor.
CycloPoly phi_poly(std::uint64_t m, PhiAlgorithm algorithm = PhiAlgorithm::Auto, const CycloConfig& config = {});

/// Phi_m(1), computed by evaluation and by classification of m (0 for m = 1,
/// p for m = p^k, 1 otherwise). Disagreement throws VerificationFailed.
Integer phi_at_one(std::uint64_t m, const CycloConfig& config = {});

/// Phi_m(1) from the factorization of m alone.
Integer phi_at_one_by_classification(std::uint64_t m);

/// Largest absolute coefficient of Phi_m.
Integer height(std::uint64_t m, const CycloConfig& config = {});

}  // namespace cyclolab
