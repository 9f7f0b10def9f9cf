#include "cyclolab/galois_artin.hpp"

#include <algorithm>
#include <regex>

#include "cyclolab/error.hpp"
#include "cyclolab/number_theory.hpp"

namespace cyclolab {

namespace {

std::uint64_t crt_lift(std::uint64_t local, std::uint64_t prime_power, std::uint64_t m) {
  // x = local mod prime_power, x = 1 mod m / prime_power.
  const std::uint64_t rest = m / prime_power;
  if (rest == 1) return local % m;
  const std::uint64_t t = mulmod_u64((local + prime_power - 1) % prime_power,
                                     inverse_mod(rest % prime_power, prime_power), prime_power);
  return (1 + rest * t) % m;
}

std::uint64_t least_primitive_root(std::uint64_t prime_power, std::uint64_t group_order) {
  for (std::uint64_t g = 2; g < prime_power; ++g) {
    if (gcd_u64(g, prime_power) == 1 && mult_order(static_cast<std::int64_t>(g), prime_power) == group_order) {
      return g;
    }
  }
  fail(ErrorKind::VerificationFailed, "no primitive root mod " + std::to_string(prime_power));
}

}  // namespace

UnitGroupModM unit_group(std::uint64_t m) {
  if (m == 0) fail(ErrorKind::InvalidArgument, "conductor must be positive");
  UnitGroupModM g;
  g.m = m;
  const Factorization fm = factor(m);
  g.order = totient(fm);

  auto add = [&](std::uint64_t pk, std::uint64_t local, std::uint64_t order) {
    const std::uint64_t lifted = crt_lift(local, pk, m);
    if (mult_order(static_cast<std::int64_t>(lifted), m) != order) {
      fail(ErrorKind::VerificationFailed, "generator " + std::to_string(lifted) + " does not have order " +
                                              std::to_string(order) + " mod " + std::to_string(m));
    }
    g.components.push_back({pk, local, lifted, order});
  };

  for (auto [p, k] : fm) {
    std::uint64_t pk = 1;
    for (unsigned i = 0; i < k; ++i) pk *= p;
    if (p == 2) {
      if (k == 2) add(pk, 3, 2);
      if (k >= 3) {
        add(pk, pk - 1, 2);
        add(pk, 5, pk / 4);
      }
      continue;
    }
    const std::uint64_t order = pk / p * (p - 1);
    add(pk, least_primitive_root(pk, order), order);
  }

  std::uint64_t product = 1;
  for (const auto& c : g.components) product *= c.order;
  if (product != g.order) fail(ErrorKind::VerificationFailed, "component orders do not multiply to phi(m)");
  return g;
}

std::vector<std::uint64_t> generated_subgroup(std::uint64_t m, const std::vector<std::uint64_t>& gens) {
  if (m == 1) return {0};
  std::vector<char> member(m, 0);
  std::vector<std::uint64_t> elems{1};
  member[1] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::uint64_t g : gens) {
      const std::uint64_t e = mulmod_u64(elems[i], g % m, m);
      if (!member[e]) {
        member[e] = 1;
        elems.push_back(e);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

FrobeniusWitness frobenius_witness(std::uint64_t m, std::uint64_t p, std::uint64_t seed) {
  const ResidueFactorization fac = factor_phi_mod_p(m, p, seed);
  FrobeniusWitness w;
  w.p = p;
  w.cls = p % m;
  w.f = fac.f;
  w.factor_used = fac.factors.front();

  const PrimitivityFactorReport prim = primitivity_checks_for_factor(m, w.factor_used);
  for (const auto& c : prim.divisor_checks) w.checks.push_back({"order_divisor", c.j, c.passed});
  w.checks.push_back({"root_of_unity", m, prim.root_check_passed});

  // Frobenius congruence: sigma(zeta) = zeta^s with s the unique exponent
  // whose power of X matches X^p modulo the prime.
  const QuotientRing field(w.factor_used);
  const ResidueFieldElement xp = field.pow(field.x(), Integer(static_cast<unsigned long>(p)));
  ResidueFieldElement power = field.one();
  std::uint64_t matches = 0;
  std::uint64_t matched_s = 0;
  for (std::uint64_t s = 0; s < m; ++s) {
    if (gcd_u64(s, m) == 1 && power == xp) {
      ++matches;
      matched_s = s;
    }
    power = field.times_x(power);
  }
  w.checks.push_back({"frobenius", matched_s, matches == 1 && matched_s == w.cls});

  for (const auto& c : w.checks) {
    if (!c.passed) {
      fail(ErrorKind::VerificationFailed, "check '" + c.kind + "' at exponent " + std::to_string(c.exponent) +
                                              " failed for m=" + std::to_string(m) + ", p=" + std::to_string(p));
    }
  }
  return w;
}

FrobeniusClass frobenius_class(std::uint64_t m, std::uint64_t p, const FrobeniusOptions& options) {
  if (!options.verify) {
    if (m == 0) fail(ErrorKind::InvalidArgument, "conductor must be positive");
    if (!is_prime(p)) fail(ErrorKind::PrimalityError, std::to_string(p) + " is not prime");
    if (m % p == 0) fail(ErrorKind::RamifiedPrime, std::to_string(p) + " divides " + std::to_string(m));
    return {m, p % m, p};
  }
  const FrobeniusWitness w = frobenius_witness(m, p, options.seed);
  return {m, w.cls, p};
}

IrreducibilityCertificate certify_irreducible(std::uint64_t m, std::optional<std::uint64_t> prime_bound) {
  if (m == 0) fail(ErrorKind::InvalidArgument, "conductor must be positive");
  const std::uint64_t bound = prime_bound.value_or(default_prime_bound(m));
  if (bound < 2) fail(ErrorKind::InvalidArgument, "prime bound must be at least 2");
  const std::uint64_t phi = totient(m);
  if (phi > kMaxCertifiedGroupOrder) {
    fail(ErrorKind::LimitExceeded, "phi(m) = " + std::to_string(phi) + " exceeds the enumeration limit " +
                                       std::to_string(kMaxCertifiedGroupOrder));
  }

  IrreducibilityCertificate cert;
  cert.m = m;
  cert.phi_m_degree = phi;
  cert.group_order = phi;
  cert.conclusion = "Phi_" + std::to_string(m) + " irreducible";

  std::vector<std::uint64_t> classes;
  std::vector<std::uint64_t> subgroup = generated_subgroup(m, classes);
  std::vector<char> member(m, 0);
  for (auto e : subgroup) member[e] = 1;

  if (subgroup.size() < phi) {
    for (std::uint64_t p : primes_up_to(bound)) {
      if (m % p == 0 || member[p % m]) continue;
      FrobeniusWitness w = frobenius_witness(m, p);
      classes.push_back(w.cls);
      subgroup = generated_subgroup(m, classes);
      for (auto e : subgroup) member[e] = 1;
      w.checks.push_back({"subgroup_order", subgroup.size(), true});
      cert.witnesses.push_back(std::move(w));
      if (subgroup.size() == phi) break;
    }
  }
  cert.generated_order = subgroup.size();
  if (cert.generated_order != phi) {
    fail(ErrorKind::BoundExhausted, "primes up to " + std::to_string(bound) + " generate a subgroup of order " +
                                        std::to_string(cert.generated_order) + " of " + std::to_string(phi));
  }
  return cert;
}

RayClassElement artin_symbol(std::uint64_t m, const Rational& a) {
  if (m == 0) fail(ErrorKind::InvalidArgument, "conductor must be positive");
  if (sgn(a) == 0) fail(ErrorKind::InvalidArgument, "the zero ideal has no Artin symbol");
  Rational positive = abs(a);
  positive.canonicalize();
  const Integer& num = positive.get_num();
  const Integer& den = positive.get_den();
  const unsigned long num_mod = mpz_fdiv_ui(num.get_mpz_t(), m);
  const unsigned long den_mod = mpz_fdiv_ui(den.get_mpz_t(), m);
  if (gcd_u64(num_mod, m) != 1 || gcd_u64(den_mod, m) != 1) {
    if (m != 1) fail(ErrorKind::NotCoprime, positive.get_str() + " is not coprime to " + std::to_string(m));
  }
  const std::uint64_t cls = m == 1 ? 0 : mulmod_u64(num_mod, inverse_mod(den_mod, m), m);
  return {m, positive, cls};
}

Rational parse_rational(const std::string& token) {
  static const std::regex shape(R"(-?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(token, shape)) fail(ErrorKind::InvalidArgument, "'" + token + "' is not a rational number");
  const auto slash = token.find('/');
  if (slash != std::string::npos && Integer(token.substr(slash + 1)) == 0) {
    fail(ErrorKind::InvalidArgument, "zero denominator in '" + token + "'");
  }
  Rational q(token);
  q.canonicalize();
  return q;
}

RayClassGroup ray_class_group(std::uint64_t m) {
  const UnitGroupModM ug = unit_group(m);
  RayClassGroup g;
  g.m = m;
  g.order = ug.order;
  g.components = ug.components;
  constexpr std::uint64_t kMaxListed = 100'000;
  if (m == 1) {
    g.classes = {0};
  } else if (ug.order <= kMaxListed) {
    for (std::uint64_t r = 1; r < m; ++r) {
      if (gcd_u64(r, m) == 1) g.classes.push_back(r);
    }
  }
  g.isomorphism = "(a) -> |a| mod " + std::to_string(m) + " onto (Z/" + std::to_string(m) + "Z)^x = Gal(Q(zeta_" +
                  std::to_string(m) + ")/Q), sending a prime p to its Frobenius";
  g.kernel = "principal ideals (a) with a > 0 and a = 1 mod " + std::to_string(m);
  return g;
}

}  // namespace cyclolab
