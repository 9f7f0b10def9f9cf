#include "cyclolab/splitting_lab.hpp"

#include <string>

#include "cyclolab/cyclotomic.hpp"
#include "cyclolab/error.hpp"
#include "cyclolab/number_theory.hpp"
#include "cyclolab/residue_fields.hpp"

namespace cyclolab {

SplittingData splitting_data(std::uint64_t m, std::uint64_t p, const SplittingOptions& options) {
  if (m == 0) fail(ErrorKind::InvalidArgument, "conductor must be positive");
  if (!is_prime(p)) fail(ErrorKind::PrimalityError, std::to_string(p) + " is not prime");
  SplittingData s;
  s.m = m;
  s.p = p;
  s.m_prime = m;
  while (s.m_prime % p == 0) {
    s.m_prime /= p;
    s.p_part *= p;
  }
  s.e = s.p_part / p * (p - 1);
  if (s.p_part == 1) s.e = 1;
  s.f = mult_order(static_cast<std::int64_t>(p % s.m_prime), s.m_prime);
  s.g = totient(m) / (s.e * s.f);

  if (s.e * s.f * s.g != totient(m)) fail(ErrorKind::VerificationFailed, "e f g != phi(m)");
  if (options.cross_check && s.p_part == 1 && p < kMaxModulus) {
    const ResidueFactorization fac = factor_phi_mod_p(m, p, options.seed);
    if (fac.f != s.f || fac.count() != s.g) {
      fail(ErrorKind::VerificationFailed, "splitting data disagree with the factorization of Phi_m mod p for m=" +
                                              std::to_string(m) + ", p=" + std::to_string(p));
    }
  }
  return s;
}

std::string_view to_string(OneMinusZetaKind k) noexcept {
  switch (k) {
    case OneMinusZetaKind::Zero: return "zero";
    case OneMinusZetaKind::PrimePower: return "prime_power";
    case OneMinusZetaKind::Unit: return "unit";
  }
  return "?";
}

OneMinusZetaVerdict one_minus_zeta_verdict(std::uint64_t m) {
  if (m == 0) fail(ErrorKind::InvalidArgument, "conductor must be positive");
  OneMinusZetaVerdict v;
  v.m = m;
  v.evidence = phi_at_one(m);
  const Factorization fm = factor(m);
  if (fm.empty()) {
    v.kind = OneMinusZetaKind::Zero;
  } else if (fm.size() == 1) {
    v.kind = OneMinusZetaKind::PrimePower;
    v.prime = fm.front().first;
  } else {
    v.kind = OneMinusZetaKind::Unit;
  }
  const Integer expected = v.kind == OneMinusZetaKind::Zero         ? Integer(0)
                           : v.kind == OneMinusZetaKind::PrimePower ? Integer(static_cast<unsigned long>(*v.prime))
                                                           : Integer(1);
  if (v.evidence != expected) {
    fail(ErrorKind::VerificationFailed, "Phi_" + std::to_string(m) + "(1) = " + v.evidence.get_str() +
                                            " contradicts the verdict " + std::string(to_string(v.kind)));
  }
  return v;
}

namespace {

std::uint64_t prime_of_power(std::uint64_t n) {
  const Factorization f = n > 1 ? factor(n) : Factorization{};
  if (f.size() != 1) fail(ErrorKind::InvalidArgument, std::to_string(n) + " is not a prime power");
  return f.front().first;
}

}  // namespace

CompositumReport compositum_degree_check(std::uint64_t P, std::uint64_t Q) {
  CompositumReport r;
  r.P = P;
  r.Q = Q;
  r.p = prime_of_power(P);
  r.q = prime_of_power(Q);
  if (r.p == r.q) fail(ErrorKind::SamePrime, std::to_string(P) + " and " + std::to_string(Q) + " share a prime");
  r.phi_P = totient(P);
  r.phi_Q = totient(Q);
  r.phi_PQ = totient(P * Q);
  r.degrees_multiply = r.phi_PQ == r.phi_P * r.phi_Q;

  const SplittingOptions no_check{.cross_check = false};
  r.e_p_in_PQ = splitting_data(P * Q, r.p, no_check).e;
  r.e_p_in_Q = splitting_data(Q, r.p).e;
  r.e_q_in_PQ = splitting_data(P * Q, r.q, no_check).e;
  r.e_q_in_P = splitting_data(P, r.q).e;
  r.ramification_separates =
      r.e_p_in_PQ == r.phi_P && r.e_p_in_Q == 1 && r.e_q_in_PQ == r.phi_Q && r.e_q_in_P == 1;
  return r;
}

}  // namespace cyclolab
