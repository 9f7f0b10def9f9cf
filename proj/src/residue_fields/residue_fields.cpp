#include "cyclolab/residue_fields.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "cyclolab/error.hpp"
#include "cyclolab/number_theory.hpp"

namespace cyclolab {

namespace {

void require_unramified_prime(std::uint64_t m, std::uint64_t p) {
  if (m == 0) fail(ErrorKind::InvalidArgument, "conductor must be positive");
  if (p >= kMaxModulus || !is_prime(p)) {
    fail(ErrorKind::PrimalityError, std::to_string(p) + " is not a prime below 2^32");
  }
  if (m % p == 0) {
    fail(ErrorKind::RamifiedPrime, std::to_string(p) + " divides the conductor " + std::to_string(m));
  }
}

std::string where(std::uint64_t m, std::uint64_t p) {
  return "(m=" + std::to_string(m) + ", p=" + std::to_string(p) + ")";
}

// Random element of F_p[X]/(h) with n coefficients.
ModPolynomial random_element(std::mt19937_64& rng, std::uint64_t p, std::size_t n) {
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  std::vector<std::uint64_t> c(n);
  for (auto& x : c) x = coeff(rng);
  return {ModPolynomial::Unchecked{}, p, std::move(c)};
}

// Splits a product of distinct irreducibles of common degree f. The trace
// Tr(a) = a + a^p + ... + a^(p^(f-1)) lands in F_p on every component;
// for odd p the quadratic character of the trace separates components, for
// p = 2 the trace itself does.
std::vector<ModPolynomial> equal_degree_split(const QuotientRing& ring, std::uint64_t f, std::uint64_t m,
                                              std::uint64_t seed) {
  const ModPolynomial& whole = ring.modulus();
  const std::uint64_t p = ring.characteristic();
  const std::size_t n = ring.degree();
  std::vector<ModPolynomial> pieces{whole};
  if (n == f) return pieces;

  std::seed_seq seq{static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(m >> 32U),
                    static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32U)};
  std::mt19937_64 rng(seq);
  const Integer half(static_cast<unsigned long>((p - 1) / 2));
  const std::size_t target = n / f;

  // Each attempt splits any given pair of components with probability near
  // 1/2, so this bound is never reached by a correct input.
  constexpr int kMaxAttempts = 4096;
  for (int attempt = 0; attempt < kMaxAttempts && pieces.size() < target; ++attempt) {
    ResidueFieldElement a = ring.reduce(random_element(rng, p, n));
    ResidueFieldElement trace = a;
    for (std::uint64_t i = 1; i < f; ++i) {
      a = ring.frobenius(a);
      trace = ring.add(trace, a);
    }
    ModPolynomial splitter = trace.representative;
    if (p != 2) splitter = ring.pow(trace, half).representative - ModPolynomial::constant(p, 1);

    std::vector<ModPolynomial> next;
    for (auto& h : pieces) {
      if (h.size() - 1 == f) {
        next.push_back(std::move(h));
        continue;
      }
      ModPolynomial g = mod_gcd(h, splitter);
      const std::size_t dg = g.size() - 1;
      if (dg == 0 || dg == h.size() - 1) {
        next.push_back(std::move(h));
        continue;
      }
      next.push_back(mod_divrem(h, g).first);
      next.push_back(std::move(g));
    }
    pieces = std::move(next);
  }
  return pieces;
}

}  // namespace

ResidueFactorization factor_phi_mod_p(std::uint64_t m, std::uint64_t p, std::uint64_t seed,
                                      const CycloConfig& config) {
  require_unramified_prime(m, p);
  const ModPolynomial phi = ModPolynomial::reduce(phi_poly(m, PhiAlgorithm::Auto, config).poly, p);
  const std::size_t n = phi.size() - 1;
  const std::uint64_t f = mult_order(static_cast<std::int64_t>(p % m), m);
  if (n % f != 0) fail(ErrorKind::VerificationFailed, "ord_m(p) does not divide phi(m) " + where(m, p));

  const QuotientRing ring(phi, /*with_frobenius=*/true);
  const ResidueFieldElement x = ring.x();

  // Distinct-degree signature. Every irreducible factor has degree exactly f
  // iff Phi_m | X^(p^f) - X and gcd(X^(p^(f/q)) - X, Phi_m) = 1 for each
  // prime q | f.
  std::vector<std::uint64_t> maximal_divisors;
  for (auto [q, k] : factor(f)) maximal_divisors.push_back(f / q);
  ResidueFieldElement power = x;
  for (std::uint64_t j = 1; j <= f; ++j) {
    power = ring.frobenius(power);
    if (std::find(maximal_divisors.begin(), maximal_divisors.end(), j) != maximal_divisors.end()) {
      if (!mod_gcd(phi, ring.sub(power, x).representative).is_one()) {
        fail(ErrorKind::VerificationFailed,
             "Phi_m has a factor of degree dividing " + std::to_string(j) + " " + where(m, p));
      }
    }
  }
  if (!(power == x)) fail(ErrorKind::VerificationFailed, "X^(p^f) != X mod Phi_m " + where(m, p));

  ResidueFactorization out{m, p, f, equal_degree_split(ring, f, m, seed)};
  if (out.factors.size() != n / f) {
    fail(ErrorKind::VerificationFailed, "equal-degree splitting did not finish " + where(m, p));
  }
  std::sort(out.factors.begin(), out.factors.end(), canonical_less);

  ModPolynomial product = ModPolynomial::constant(p, 1);
  for (const auto& g : out.factors) {
    if (g.size() - 1 != f || !g.is_monic()) {
      fail(ErrorKind::VerificationFailed, "factor of wrong degree " + where(m, p));
    }
    product = product * g;
  }
  if (!(product == phi)) fail(ErrorKind::VerificationFailed, "factors do not multiply to Phi_m " + where(m, p));
  return out;
}

std::uint64_t root_of_unity_order_mod(const ResidueFactorization& fac, std::size_t factor_index) {
  if (factor_index >= fac.factors.size()) {
    fail(ErrorKind::InvalidArgument, "factor index " + std::to_string(factor_index) + " out of range (" +
                                         std::to_string(fac.factors.size()) + " factors)");
  }
  const QuotientRing field(fac.factors[factor_index]);
  const ResidueFieldElement x = field.x();
  const ResidueFieldElement one = field.one();

  Integer group_order;
  mpz_ui_pow_ui(group_order.get_mpz_t(), fac.p, fac.f);
  group_order -= 1;
  Integer bound;
  const Integer m_big(static_cast<unsigned long>(fac.m));
  mpz_gcd(bound.get_mpz_t(), group_order.get_mpz_t(), m_big.get_mpz_t());
  std::uint64_t order = bound.get_ui();

  auto is_one = [&](std::uint64_t e) { return field.pow(x, Integer(static_cast<unsigned long>(e))) == one; };
  if (!is_one(order)) {
    fail(ErrorKind::VerificationFailed, "class of X has order not dividing gcd(m, p^f - 1) " + where(fac.m, fac.p));
  }
  for (auto [q, k] : factor(order)) {
    for (unsigned i = 0; i < k && is_one(order / q); ++i) order /= q;
  }
  return order;
}

std::uint64_t root_of_unity_order_mod(std::uint64_t m, std::uint64_t p, std::size_t factor_index,
                                      std::uint64_t seed) {
  return root_of_unity_order_mod(factor_phi_mod_p(m, p, seed), factor_index);
}

PrimitivityFactorReport primitivity_checks_for_factor(std::uint64_t m, const ModPolynomial& g) {
  const QuotientRing field(g);
  const ResidueFieldElement x = field.x();
  const ResidueFieldElement one = field.one();
  PrimitivityFactorReport report{g, {}, false};
  for (auto [q, k] : factor(m)) {
    const std::uint64_t j = m / q;
    report.divisor_checks.push_back({j, !(field.pow(x, Integer(static_cast<unsigned long>(j))) == one)});
  }
  report.root_check_passed = field.pow(x, Integer(static_cast<unsigned long>(m))) == one;
  return report;
}

PrimitivityReport verify_primitivity(std::uint64_t m, std::uint64_t p, std::uint64_t seed) {
  const ResidueFactorization fac = factor_phi_mod_p(m, p, seed);
  PrimitivityReport report{m, p, {}, true};
  for (const auto& g : fac.factors) {
    PrimitivityFactorReport r = primitivity_checks_for_factor(m, g);
    for (const auto& c : r.divisor_checks) {
      if (!c.passed) {
        fail(ErrorKind::VerificationFailed,
             "X^" + std::to_string(c.j) + " = 1 in a residue field " + where(m, p) + ", j=" + std::to_string(c.j));
      }
    }
    if (!r.root_check_passed) {
      fail(ErrorKind::VerificationFailed, "X^m != 1 in a residue field " + where(m, p) + ", j=" + std::to_string(m));
    }
    report.factors.push_back(std::move(r));
  }
  return report;
}

UnramifiedWitness unramified_check(std::uint64_t m, std::uint64_t p) {
  if (m == 0) fail(ErrorKind::InvalidArgument, "conductor must be positive");
  if (p >= kMaxModulus || !is_prime(p)) {
    fail(ErrorKind::PrimalityError, std::to_string(p) + " is not a prime below 2^32");
  }
  UnramifiedWitness w;
  w.m = m;
  w.p = p;
  w.derivative_residue = m % p;
  w.unramified = w.derivative_residue != 0;
  if (!w.unramified) {
    w.explanation = "m = " + std::to_string(m) + " is divisible by p, so f'(zeta) = m zeta^(m-1) vanishes mod p";
    return w;
  }
  const ModPolynomial phi = ModPolynomial::reduce(phi_poly(m).poly, p);
  w.squarefree = mod_gcd(phi, phi.derivative()).is_one();
  if (!w.squarefree) fail(ErrorKind::VerificationFailed, "Phi_m is not squarefree mod p " + where(m, p));
  w.explanation = "f'(zeta) = m zeta^(m-1) with m = " + std::to_string(w.derivative_residue) +
                  " mod p a unit; Phi_m mod p is squarefree";
  return w;
}

}  // namespace cyclolab
