#include "cyclolab/cyclotomic.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <string>

#include "cyclolab/error.hpp"

namespace cyclolab {

std::string_view to_string(PhiAlgorithm a) noexcept {
  switch (a) {
    case PhiAlgorithm::Division: return "division";
    case PhiAlgorithm::Moebius: return "moebius";
    case PhiAlgorithm::Auto: return "auto";
  }
  return "?";
}

PhiAlgorithm parse_phi_algorithm(std::string_view s) {
  if (s == "division") return PhiAlgorithm::Division;
  if (s == "moebius") return PhiAlgorithm::Moebius;
  if (s == "auto") return PhiAlgorithm::Auto;
  fail(ErrorKind::InvalidArgument, "unknown algorithm '" + std::string(s) + "'");
}

CycloConfig CycloConfig::from_environment() {
  CycloConfig cfg;
  if (const char* env = std::getenv("CYCLOLAB_MAX_M")) {
    std::string_view v(env);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
    if (ec != std::errc() || ptr != v.data() + v.size() || value == 0) {
      fail(ErrorKind::InvalidArgument, "CYCLOLAB_MAX_M must be a positive integer, got '" + std::string(v) + "'");
    }
    cfg.max_conductor = value;
  }
  return cfg;
}

ArithmeticTables arithmetic_tables(std::uint64_t m) {
  if (m == 0) fail(ErrorKind::InvalidArgument, "conductor must be positive");
  ArithmeticTables t;
  t.m = m;
  t.factorization = factor(m);
  t.totient = totient(t.factorization);

  // Divisors paired with mu, built prime by prime.
  std::vector<std::pair<std::uint64_t, int>> divs{{1, 1}};
  for (auto [p, k] : t.factorization) {
    const std::size_t base = divs.size();
    std::uint64_t pk = 1;
    for (unsigned e = 1; e <= k; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) {
        const int mu = e == 1 ? -divs[i].second : 0;
        divs.emplace_back(divs[i].first * pk, mu);
      }
    }
  }
  std::sort(divs.begin(), divs.end());
  for (auto [d, mu] : divs) {
    t.divisors.push_back(d);
    t.moebius.push_back(mu);
  }
  return t;
}

namespace {

IntPolynomial base_case(std::uint64_t m) { return m == 1 ? IntPolynomial{-1, 1} : IntPolynomial{1, 1}; }

// Division engine on a squarefree n, memoized per top-level call.
class DivisionEngine {
 public:
  IntPolynomial phi(std::uint64_t n) {
    if (n <= 2) return base_case(n);
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    IntPolynomial q = IntPolynomial::x_pow_minus_one(n);
    const auto tables = arithmetic_tables(n);
    for (std::uint64_t d : tables.divisors) {
      if (d == n) break;
      q = poly_exact_div(q, phi(d));
    }
    memo_.emplace(n, q);
    return q;
  }

 private:
  std::map<std::uint64_t, IntPolynomial> memo_;
};

// In-place series update helpers. Each returns false on int64 overflow.
bool times_x_pow_minus_one_i64(std::vector<std::int64_t>& s, std::size_t d) {
  for (std::size_t i = s.size(); i-- > 0;) {
    const std::int64_t lower = i >= d ? s[i - d] : 0;
    if (__builtin_sub_overflow(lower, s[i], &s[i])) return false;
  }
  return true;
}

// Multiplies by 1 / (X^d - 1) = -(1 + X^d + X^2d + ...).
bool over_x_pow_minus_one_i64(std::vector<std::int64_t>& s, std::size_t d) {
  for (std::size_t i = d; i < s.size(); ++i) {
    if (__builtin_add_overflow(s[i], s[i - d], &s[i])) return false;
  }
  for (auto& x : s) {
    if (x == INT64_MIN) return false;
    x = -x;
  }
  return true;
}

void times_x_pow_minus_one(std::vector<Integer>& s, std::size_t d) {
  for (std::size_t i = s.size(); i-- > 0;) {
    if (i >= d) {
      mpz_sub(s[i].get_mpz_t(), s[i - d].get_mpz_t(), s[i].get_mpz_t());
    } else {
      mpz_neg(s[i].get_mpz_t(), s[i].get_mpz_t());
    }
  }
}

void over_x_pow_minus_one(std::vector<Integer>& s, std::size_t d) {
  for (std::size_t i = d; i < s.size(); ++i) s[i] += s[i - d];
  for (auto& x : s) mpz_neg(x.get_mpz_t(), x.get_mpz_t());
}

IntPolynomial moebius_engine(std::uint64_t n) {
  if (n <= 2) return base_case(n);
  const auto t = arithmetic_tables(n);
  const std::size_t terms = t.totient + 1;

  // Multiplications first keeps intermediate coefficients small.
  std::vector<std::size_t> up, down;
  for (std::size_t i = 0; i < t.divisors.size(); ++i) {
    const int mu = t.moebius[t.divisors.size() - 1 - i];  // mu(n / d)
    if (mu == 1) up.push_back(t.divisors[i]);
    if (mu == -1) down.push_back(t.divisors[i]);
  }

  std::vector<std::int64_t> s(terms, 0);
  s[0] = 1;
  bool ok = true;
  for (std::size_t d : up) ok = ok && times_x_pow_minus_one_i64(s, d);
  for (std::size_t d : down) ok = ok && over_x_pow_minus_one_i64(s, d);
  if (ok) return detail::from_int64(s);

  std::vector<Integer> big(terms);
  big[0] = 1;
  for (std::size_t d : up) times_x_pow_minus_one(big, d);
  for (std::size_t d : down) over_x_pow_minus_one(big, d);
  return IntPolynomial(std::move(big));
}

}  // namespace

CycloPoly phi_poly(std::uint64_t m, PhiAlgorithm algorithm, const CycloConfig& config) {
  if (m == 0) fail(ErrorKind::InvalidArgument, "conductor must be positive");
  if (m > config.max_conductor) {
    fail(ErrorKind::LimitExceeded,
         "conductor " + std::to_string(m) + " exceeds the limit " + std::to_string(config.max_conductor));
  }
  // The series engine touches every divisor once and never divides, so it
  // is the faster choice at every size this library accepts.
  if (algorithm == PhiAlgorithm::Auto) algorithm = PhiAlgorithm::Moebius;

  const std::uint64_t rad = radical(factor(m));
  IntPolynomial core =
      algorithm == PhiAlgorithm::Division ? DivisionEngine{}.phi(rad) : moebius_engine(rad);
  if (rad != m) core = core.substitute_power(m / rad);
  return {m, std::move(core), algorithm};
}

Integer phi_at_one_by_classification(std::uint64_t m) {
  if (m == 0) fail(ErrorKind::InvalidArgument, "conductor must be positive");
  if (m == 1) return 0;
  const auto f = factor(m);
  if (f.size() == 1) return Integer(static_cast<unsigned long>(f.front().first));
  return 1;
}

Integer phi_at_one(std::uint64_t m, const CycloConfig& config) {
  const Integer evaluated = poly_eval_int(phi_poly(m, PhiAlgorithm::Auto, config).poly, 1);
  const Integer classified = phi_at_one_by_classification(m);
  if (evaluated != classified) {
    fail(ErrorKind::VerificationFailed, "Phi_" + std::to_string(m) + "(1) evaluates to " + evaluated.get_str() +
                                            " but the factorization of m predicts " + classified.get_str());
  }
  return evaluated;
}

Integer height(std::uint64_t m, const CycloConfig& config) {
  return phi_poly(m, PhiAlgorithm::Auto, config).poly.height();
}

}  // namespace cyclolab
