#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclolab/cyclotomic.hpp"
#include "cyclolab/mod_polynomial.hpp"

namespace cyclolab {

/// Element of F_p[X]/(h), held by its reduced representative.
struct ResidueFieldElement {
  ModPolynomial representative;

  friend bool operator==(const ResidueFieldElement&, const ResidueFieldElement&) = default;
};

/// The ring F_p[X]/(h) for a monic h of degree n >= 1. It is a field (a
/// residue field of Q(zeta_m) at a prime above p) when h is an irreducible
/// factor of Phi_m mod p. With a Frobenius matrix attached, a -> a^p costs
/// one n x n matrix-vector product.
class QuotientRing {
 public:
  explicit QuotientRing(ModPolynomial modulus, bool with_frobenius = false);

  const ModPolynomial& modulus() const noexcept { return modulus_; }
  std::uint64_t characteristic() const noexcept { return modulus_.modulus(); }
  std::size_t degree() const noexcept { return n_; }
  bool has_frobenius() const noexcept { return !frobenius_.empty(); }

  ResidueFieldElement reduce(const ModPolynomial& a) const;
  ResidueFieldElement one() const;
  /// Class of X, the image of zeta.
  ResidueFieldElement x() const;

  ResidueFieldElement add(const ResidueFieldElement& a, const ResidueFieldElement& b) const;
  ResidueFieldElement sub(const ResidueFieldElement& a, const ResidueFieldElement& b) const;
  ResidueFieldElement mul(const ResidueFieldElement& a, const ResidueFieldElement& b) const;
  ResidueFieldElement pow(const ResidueFieldElement& a, const Integer& e) const;
  /// a * X, by one shift and one reduction step.
  ResidueFieldElement times_x(const ResidueFieldElement& a) const;
  /// a^p. Requires with_frobenius.
  ResidueFieldElement frobenius(const ResidueFieldElement& a) const;

 private:
  ModPolynomial modulus_;
  std::size_t n_;
  std::vector<std::uint64_t> frobenius_;  // row i = X^(i p) mod h, n x n row-major
};

/// Phi_m mod p split into monic irreducibles, all of degree f = ord_m(p).
struct ResidueFactorization {
  std::uint64_t m = 1;
  std::uint64_t p = 2;
  std::uint64_t f = 1;
  std::vector<ModPolynomial> factors;  // canonical order

  std::uint64_t count() const noexcept { return factors.size(); }

  friend bool operator==(const ResidueFactorization&, const ResidueFactorization&) = default;
};

/// Factors Phi_m mod p. Checks the distinct-degree signature
/// (gcd(X^(p^j) - X, Phi_m) = 1 for j = f/q, q | f prime, and
/// X^(p^f) = X mod Phi_m) before splitting by equal degree with a PRNG seeded
/// from (m, p, seed). The result does not depend on seed.
/// Throws PrimalityError for composite p and RamifiedPrime when p | m.
ResidueFactorization factor_phi_mod_p(std::uint64_t m, std::uint64_t p, std::uint64_t seed = 0,
                                      const CycloConfig& config = {});

/// Multiplicative order of the class of X in F_p[X]/(g) for the factor at
/// factor_index. It divides gcd(m, p^f - 1) once X^m = 1 is confirmed and is
/// found by stripping the prime factors of that gcd.
std::uint64_t root_of_unity_order_mod(const ResidueFactorization& factorization, std::size_t factor_index);
std::uint64_t root_of_unity_order_mod(std::uint64_t m, std::uint64_t p, std::size_t factor_index,
                                      std::uint64_t seed = 0);

struct DivisorCheck {
  std::uint64_t j = 1;
  bool passed = false;  // X^j != 1

  friend bool operator==(const DivisorCheck&, const DivisorCheck&) = default;
};

struct PrimitivityFactorReport {
  ModPolynomial factor;
  std::vector<DivisorCheck> divisor_checks;  // j = m/q for each prime q | m
  bool root_check_passed = false;            // X^m == 1

  friend bool operator==(const PrimitivityFactorReport&, const PrimitivityFactorReport&) = default;
};

struct PrimitivityReport {
  std::uint64_t m = 1;
  std::uint64_t p = 2;
  std::vector<PrimitivityFactorReport> factors;
  bool passed = false;

  friend bool operator==(const PrimitivityReport&, const PrimitivityReport&) = default;
};

/// Checks that zeta stays a primitive m-th root of unity modulo every prime
/// above p: X^j != 1 for each maximal proper divisor j of m and X^m = 1 in
/// every F_p[X]/(g). A failing check throws VerificationFailed naming
/// (m, p, j).
PrimitivityReport verify_primitivity(std::uint64_t m, std::uint64_t p, std::uint64_t seed = 0);

/// Checks for one factor g, used by verify_primitivity and by certificates.
PrimitivityFactorReport primitivity_checks_for_factor(std::uint64_t m, const ModPolynomial& g);

struct UnramifiedWitness {
  std::uint64_t m = 1;
  std::uint64_t p = 2;
  bool unramified = false;
  /// m * 1^(m-1) mod p, the value of (X^m - 1)' at the root 1 up to a unit.
  std::uint64_t derivative_residue = 0;
  /// gcd(Phi_m, Phi_m') == 1 mod p; only evaluated when unramified.
  bool squarefree = false;
  std::string explanation;

  friend bool operator==(const UnramifiedWitness&, const UnramifiedWitness&) = default;
};

/// p is unramified in Q(zeta_m) iff m is a unit mod p. When it is, Phi_m mod p
/// must be squarefree; a non-squarefree result throws VerificationFailed.
UnramifiedWitness unramified_check(std::uint64_t m, std::uint64_t p);

}  // namespace cyclolab
