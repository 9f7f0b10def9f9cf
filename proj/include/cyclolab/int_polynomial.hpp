#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cyclolab {

using Integer = mpz_class;

/// Dense polynomial over Z with arbitrary-precision coefficients, stored
/// degree-ascending. The coefficient vector never carries trailing zeros, so
/// the zero polynomial is the empty vector and has no degree.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, std::size_t degree);
  /// X^n - 1.
  static IntPolynomial x_pow_minus_one(std::size_t n);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const noexcept;
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of X^i (zero beyond the degree).
  Integer coeff(std::size_t i) const;
  const Integer& leading() const;
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Largest absolute coefficient; zero for the zero polynomial.
  Integer height() const;

  /// p(X^k).
  IntPolynomial substitute_power(std::size_t k) const;
  IntPolynomial derivative() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  IntPolynomial operator-() const;
  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

/// Quotient of an exact division. Throws NotDivisible on the first step that
/// leaves a non-integer quotient coefficient or on a nonzero remainder, and
/// InvalidArgument when den is zero.
IntPolynomial poly_exact_div(const IntPolynomial& num, const IntPolynomial& den);

/// Horner evaluation.
Integer poly_eval_int(const IntPolynomial& a, const Integer& x);

#ifndef CYCLOLAB_KARATSUBA_THRESHOLD
#define CYCLOLAB_KARATSUBA_THRESHOLD 32
#endif

namespace detail {

inline constexpr std::size_t kKaratsubaThreshold = CYCLOLAB_KARATSUBA_THRESHOLD;

/// Arbitrary-precision multiplication with an explicit Karatsuba cutoff.
/// Exposed so tests can show the cutoff never changes a product.
IntPolynomial mul_bigint(const IntPolynomial& a, const IntPolynomial& b, std::size_t threshold);

/// Copies coefficients into int64 if they all fit.
std::optional<std::vector<std::int64_t>> to_int64(const IntPolynomial& a);
IntPolynomial from_int64(std::span<const std::int64_t> c);

}  // namespace detail

}  // namespace cyclolab
