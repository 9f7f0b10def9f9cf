#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclolab/mod_polynomial.hpp"
#include "cyclolab/residue_fields.hpp"

namespace cyclolab {

using Rational = mpq_class;

/// One cyclic factor of (Z/mZ)^x. local_generator generates the factor
/// inside (Z/prime_power Z)^x; generator is its CRT lift to Z/mZ that is 1
/// modulo every other prime power of m.
struct CyclicComponent {
  std::uint64_t prime_power = 1;
  std::uint64_t local_generator = 1;
  std::uint64_t generator = 1;
  std::uint64_t order = 1;

  friend bool operator==(const CyclicComponent&, const CyclicComponent&) = default;
};

/// (Z/mZ)^x = Gal(Q(zeta_m)/Q) via sigma_r(zeta) = zeta^r. Components of
/// order 1 are omitted; 2^k with k >= 3 contributes {+-1} x <5>.
struct UnitGroupModM {
  std::uint64_t m = 1;
  std::uint64_t order = 1;
  std::vector<CyclicComponent> components;

  friend bool operator==(const UnitGroupModM&, const UnitGroupModM&) = default;
};

UnitGroupModM unit_group(std::uint64_t m);

/// Residue class r mod m with gcd(r, m) = 1, r in [1, m); for m = 1 the
/// single class is r = 0. prime holds p when the class is a Frobenius.
struct FrobeniusClass {
  std::uint64_t m = 1;
  std::uint64_t r = 0;
  std::optional<std::uint64_t> prime;

  friend bool operator==(const FrobeniusClass&, const FrobeniusClass&) = default;
};

struct FrobeniusOptions {
  /// Run the residue-field verification. Off only for batch work where the
  /// class is needed and the check has already been done elsewhere.
  bool verify = true;
  std::uint64_t seed = 0;
};

/// A replayable record of one residue-field check.
struct CheckRecord {
  std::string kind;  // "order_divisor", "root_of_unity", "frobenius", "subgroup_order"
  std::uint64_t exponent = 0;
  bool passed = false;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

/// Everything computed while certifying that zeta -> zeta^p is the Frobenius
/// at a prime above p.
struct FrobeniusWitness {
  std::uint64_t p = 2;
  std::uint64_t cls = 0;
  std::uint64_t f = 1;
  ModPolynomial factor_used{ModPolynomial::Unchecked{}, 2, {}};
  std::vector<CheckRecord> checks;

  friend bool operator==(const FrobeniusWitness&, const FrobeniusWitness&) = default;
};

/// Computes Frobenius at p in F_p[X]/(g), g the canonical first factor of
/// Phi_m mod p: X^p must equal X^s for exactly one s in [1, m) coprime to m,
/// and that s must be p mod m. Also records the primitive-root checks for g.
FrobeniusWitness frobenius_witness(std::uint64_t m, std::uint64_t p, std::uint64_t seed = 0);

/// Class p mod m, verified as above unless options.verify is false.
/// Throws RamifiedPrime when p | m, VerificationFailed if the check fails.
FrobeniusClass frobenius_class(std::uint64_t m, std::uint64_t p, const FrobeniusOptions& options = {});

inline constexpr const char* kCertificateSchemaVersion = "1.0";

struct IrreducibilityCertificate {
  std::string schema_version = kCertificateSchemaVersion;
  std::uint64_t m = 1;
  std::uint64_t phi_m_degree = 1;
  std::vector<FrobeniusWitness> witnesses;
  std::uint64_t group_order = 1;
  std::uint64_t generated_order = 1;
  std::string conclusion;

  friend bool operator==(const IrreducibilityCertificate&, const IrreducibilityCertificate&) = default;
};

/// Largest phi(m) for which certify_irreducible enumerates subgroups.
inline constexpr std::uint64_t kMaxCertifiedGroupOrder = 10'000;

inline std::uint64_t default_prime_bound(std::uint64_t m) { return 10 * m + 100; }

/// Scans primes p not dividing m in ascending order up to prime_bound. A
/// prime becomes a witness when its class lies outside the subgroup
/// generated so far; the scan stops once that subgroup is all of
/// (Z/mZ)^x. Throws BoundExhausted (naming the order reached) when the bound
/// runs out and LimitExceeded when phi(m) > kMaxCertifiedGroupOrder.
IrreducibilityCertificate certify_irreducible(std::uint64_t m, std::optional<std::uint64_t> prime_bound = {});

struct CertificateVerification {
  bool ok = false;
  std::uint64_t generated_order = 0;
  std::vector<std::string> failures;
};

/// Replays a certificate from scratch: each factor_used must divide Phi_m mod
/// p and be irreducible of degree f, X must have order exactly m modulo it,
/// X^p must equal X^class there, and the witness classes must generate a
/// subgroup of order phi(m). Uses plain square-and-multiply only.
CertificateVerification verify_certificate(const IrreducibilityCertificate& cert);

/// Element of the ray class group Cl_Q{m inf}. The ideal (a) has the
/// positive generator |a|; its class is |num| * den^-1 mod m.
struct RayClassElement {
  std::uint64_t m = 1;
  Rational ideal;
  std::uint64_t cls = 0;

  friend bool operator==(const RayClassElement& a, const RayClassElement& b) {
    return a.m == b.m && a.ideal == b.ideal && a.cls == b.cls;
  }
};

/// Artin symbol of the ideal (a). Throws InvalidArgument for a = 0 and
/// NotCoprime when the numerator or denominator of a shares a factor with m.
RayClassElement artin_symbol(std::uint64_t m, const Rational& a);

/// Parses "n", "-n", "n/d" or "-n/d"; throws InvalidArgument otherwise.
Rational parse_rational(const std::string& token);

struct RayClassGroup {
  std::uint64_t m = 1;
  std::uint64_t order = 1;
  std::vector<CyclicComponent> components;
  std::vector<std::uint64_t> classes;  // ascending representatives
  std::string isomorphism;
  std::string kernel;

  friend bool operator==(const RayClassGroup&, const RayClassGroup&) = default;
};

/// Cl_Q{m inf} with its isomorphism (a) -> |a| mod m onto (Z/mZ)^x.
RayClassGroup ray_class_group(std::uint64_t m);

/// Subgroup of (Z/mZ)^x generated by gens, as a sorted element list.
std::vector<std::uint64_t> generated_subgroup(std::uint64_t m, const std::vector<std::uint64_t>& gens);

}  // namespace cyclolab
