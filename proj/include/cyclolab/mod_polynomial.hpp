#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cyclolab/int_polynomial.hpp"

namespace cyclolab {

/// Moduli must satisfy p < 2^32 so that a product of two residues fits in
/// 64 bits.
inline constexpr std::uint64_t kMaxModulus = 1ULL << 32;

/// Polynomial over F_p, degree-ascending residues in [0, p).
class ModPolynomial {
 public:
  /// Reduces coeffs mod p. Throws PrimalityError unless p is a prime below
  /// kMaxModulus.
  ModPolynomial(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  static ModPolynomial reduce(const IntPolynomial& a, std::uint64_t p);
  static ModPolynomial constant(std::uint64_t p, std::uint64_t c);
  /// c * X^degree.
  static ModPolynomial monomial(std::uint64_t p, std::uint64_t c, std::size_t degree);

  std::uint64_t modulus() const noexcept { return p_; }
  std::span<const std::uint64_t> coeffs() const noexcept { return c_; }
  std::uint64_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  std::size_t size() const noexcept { return c_.size(); }
  bool is_zero() const noexcept { return c_.empty(); }
  std::optional<std::size_t> degree() const noexcept;
  std::uint64_t leading() const;
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }

  ModPolynomial monic() const;
  ModPolynomial derivative() const;
  ModPolynomial scaled(std::uint64_t s) const;

  /// Symmetric lift of the coefficients into (-p/2, p/2].
  IntPolynomial lift_symmetric() const;

  friend bool operator==(const ModPolynomial&, const ModPolynomial&) = default;

  friend ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b);
  friend ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b);
  friend ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b);

  /// Canonical order: degree-ascending coefficient tuples compared
  /// lexicographically, shorter tuples first.
  friend bool canonical_less(const ModPolynomial& a, const ModPolynomial& b);

  struct Unchecked {};
  /// Trusted constructor: p already validated, coefficients already in [0, p).
  ModPolynomial(Unchecked, std::uint64_t p, std::vector<std::uint64_t> coeffs);

 private:
  void normalize();
  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> c_;
};

bool canonical_less(const ModPolynomial& a, const ModPolynomial& b);

/// Quotient and remainder; b must be nonzero with the same modulus.
std::pair<ModPolynomial, ModPolynomial> mod_divrem(const ModPolynomial& a, const ModPolynomial& b);

/// a * b mod modpoly.
ModPolynomial mod_mulmod(const ModPolynomial& a, const ModPolynomial& b, const ModPolynomial& modpoly);

/// base^exponent mod (p, modpoly) by square-and-multiply. modpoly must be
/// monic of degree >= 1. Throws ModulusMismatch if moduli differ.
ModPolynomial mod_powmod(const ModPolynomial& base, const Integer& exponent, const ModPolynomial& modpoly);

/// Monic gcd. Throws ModulusMismatch on differing moduli and InvalidArgument
/// when both inputs are zero.
ModPolynomial mod_gcd(const ModPolynomial& a, const ModPolynomial& b);

}  // namespace cyclolab
