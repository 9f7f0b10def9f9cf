// Independent replay of an irreducibility certificate. Deliberately avoids
// the factorization engine, the Frobenius matrix and generated_subgroup():
// only ModPolynomial arithmetic and the division engine for Phi_m are used.

#include <set>

#include "cyclolab/cyclotomic.hpp"
#include "cyclolab/galois_artin.hpp"
#include "cyclolab/number_theory.hpp"

namespace cyclolab {

namespace {

class Replay {
 public:
  explicit Replay(std::vector<std::string>& failures) : failures_(failures) {}

  void expect(bool condition, const std::string& what) {
    if (!condition) failures_.push_back(what);
  }

 private:
  std::vector<std::string>& failures_;
};

Integer big(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

void replay_witness(const IrreducibilityCertificate& cert, const FrobeniusWitness& w, const IntPolynomial& phi_z,
                    Replay& r) {
  const std::uint64_t m = cert.m;
  const std::string tag = "witness p=" + std::to_string(w.p) + ": ";
  if (!is_prime(w.p) || w.p >= kMaxModulus) {
    r.expect(false, tag + "not a prime");
    return;
  }
  r.expect(m % w.p != 0, tag + "divides m");
  r.expect(w.cls == w.p % m, tag + "class is not p mod m");
  const ModPolynomial& g = w.factor_used;
  if (g.modulus() != w.p || !g.is_monic() || g.size() < 2) {
    r.expect(false, tag + "factor is not a monic polynomial mod p of positive degree");
    return;
  }
  r.expect(g.size() - 1 == w.f, tag + "factor degree differs from f");

  const std::uint64_t p = w.p;
  const ModPolynomial phi = ModPolynomial::reduce(phi_z, p);
  r.expect(mod_divrem(phi, g).second.is_zero(), tag + "factor does not divide Phi_m mod p");

  const ModPolynomial x = mod_divrem(ModPolynomial::monomial(p, 1, 1), g).second;
  const ModPolynomial one = ModPolynomial::constant(p, 1);

  // Rabin irreducibility test for the residue field.
  Integer pf;
  mpz_ui_pow_ui(pf.get_mpz_t(), p, w.f);
  r.expect(mod_powmod(x, pf, g) == x, tag + "X^(p^f) != X, so the factor is not a product of degree-f pieces");
  for (auto [q, k] : factor(w.f)) {
    Integer pj;
    mpz_ui_pow_ui(pj.get_mpz_t(), p, w.f / q);
    const ModPolynomial xpj = mod_powmod(x, pj, g);
    r.expect(mod_gcd(g, xpj - x).is_one(), tag + "factor has a divisor of degree dividing f/" + std::to_string(q));
  }

  // zeta mod the prime has order exactly m.
  r.expect(mod_powmod(x, big(m), g) == one, tag + "X^m != 1");
  for (auto [q, k] : factor(m)) {
    const bool ok = !(mod_powmod(x, big(m / q), g) == one);
    r.expect(ok, tag + "X^" + std::to_string(m / q) + " = 1");
  }

  // Frobenius congruence with uniqueness.
  const ModPolynomial xp = mod_powmod(x, big(p), g);
  std::uint64_t matches = 0;
  ModPolynomial power = one;
  for (std::uint64_t s = 0; s < m; ++s) {
    if (gcd_u64(s, m) == 1 && power == xp) {
      ++matches;
      r.expect(s == w.cls, tag + "X^p matches X^" + std::to_string(s) + ", not X^class");
    }
    power = mod_mulmod(power, x, g);
  }
  r.expect(matches == 1, tag + "X^p matches " + std::to_string(matches) + " coprime powers of X");

  for (const auto& c : w.checks) r.expect(c.passed, tag + "recorded check '" + c.kind + "' did not pass");
}

}  // namespace

CertificateVerification verify_certificate(const IrreducibilityCertificate& cert) {
  CertificateVerification out;
  Replay r(out.failures);
  r.expect(cert.schema_version == kCertificateSchemaVersion, "unsupported schema version " + cert.schema_version);
  if (cert.m == 0) {
    r.expect(false, "conductor must be positive");
    return out;
  }
  const std::uint64_t m = cert.m;
  const std::uint64_t phi = totient(m);
  const IntPolynomial phi_z = phi_poly(m, PhiAlgorithm::Division).poly;
  r.expect(phi_z.degree() == phi, "deg Phi_m != phi(m)");
  r.expect(cert.phi_m_degree == phi, "phi_m_degree != phi(m)");
  r.expect(cert.group_order == phi, "group_order != phi(m)");

  for (const auto& w : cert.witnesses) replay_witness(cert, w, phi_z, r);

  // Closure of the witness classes under multiplication mod m.
  std::set<std::uint64_t> closure{m == 1 ? std::uint64_t{0} : std::uint64_t{1}};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::uint64_t> current(closure.begin(), closure.end());
    for (std::uint64_t e : current) {
      for (const auto& w : cert.witnesses) {
        grew |= closure.insert(mulmod_u64(e, w.cls, m)).second;
      }
    }
  }
  out.generated_order = closure.size();
  r.expect(out.generated_order == phi, "witness classes generate a subgroup of order " +
                                           std::to_string(out.generated_order) + ", not phi(m)");
  r.expect(cert.generated_order == out.generated_order, "recorded generated_order disagrees with replay");
  out.ok = out.failures.empty();
  return out;
}

}  // namespace cyclolab
