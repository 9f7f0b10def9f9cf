#include "cyclolab/mod_polynomial.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cyclolab/detail/mod_arith.hpp"
#include "cyclolab/error.hpp"
#include "cyclolab/kernels.hpp"
#include "cyclolab/number_theory.hpp"

namespace cyclolab {

namespace detail {

std::uint64_t lazy_budget(std::uint64_t p) noexcept {
  const unsigned __int128 sq = static_cast<unsigned __int128>(p - 1) * (p - 1);
  if (sq == 0) return std::numeric_limits<std::uint64_t>::max();
  const unsigned __int128 room = std::numeric_limits<std::uint64_t>::max() - (p - 1);
  const unsigned __int128 k = room / sq;
  return k > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                       : static_cast<std::uint64_t>(k);
}

void reduce_all(std::span<std::uint64_t> c, std::uint64_t p) noexcept {
  for (auto& x : c) x %= p;
}

std::vector<std::uint64_t> mul_residues(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                                        std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
  const std::uint64_t budget = lazy_budget(p);
  std::uint64_t pending = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 0) continue;
    kernels::mul_acc_u64(std::span(out).subspan(i, a.size()), a, b[i]);
    if (++pending == budget) {
      reduce_all(out, p);
      pending = 0;
    }
  }
  reduce_all(out, p);
  return out;
}

void reduce_by_monic(std::vector<std::uint64_t>& c, std::span<const std::uint64_t> monic, std::uint64_t p) {
  const std::size_t n = monic.size() - 1;
  if (c.size() <= n) {
    reduce_all(c, p);
    return;
  }
  const std::span<const std::uint64_t> low = monic.first(n);
  const std::uint64_t budget = lazy_budget(p);
  std::uint64_t pending = 0;
  for (std::size_t i = c.size(); i-- > n;) {
    const std::uint64_t q = c[i] % p;
    c[i] = 0;
    if (q == 0) continue;
    kernels::mul_acc_u64(std::span(c).subspan(i - n, n), low, p - q);
    if (++pending == budget) {
      reduce_all(std::span(c).first(i), p);
      pending = 0;
    }
  }
  c.resize(n);
  reduce_all(c, p);
}

}  // namespace detail

namespace {

void check_modulus(std::uint64_t p) {
  if (p >= kMaxModulus || !is_prime(p)) {
    fail(ErrorKind::PrimalityError, "modulus " + std::to_string(p) + " is not a prime below 2^32");
  }
}

void same_modulus(const ModPolynomial& a, const ModPolynomial& b) {
  if (a.modulus() != b.modulus()) {
    fail(ErrorKind::ModulusMismatch,
         "moduli " + std::to_string(a.modulus()) + " and " + std::to_string(b.modulus()) + " differ");
  }
}

}  // namespace

ModPolynomial::ModPolynomial(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  check_modulus(p);
  detail::reduce_all(c_, p_);
  normalize();
}

ModPolynomial::ModPolynomial(Unchecked, std::uint64_t p, std::vector<std::uint64_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
  normalize();
}

void ModPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPolynomial ModPolynomial::reduce(const IntPolynomial& a, std::uint64_t p) {
  check_modulus(p);
  std::vector<std::uint64_t> c;
  c.reserve(a.size());
  Integer r;
  for (const auto& x : a.coeffs()) {
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
    c.push_back(r.get_ui());
  }
  return {Unchecked{}, p, std::move(c)};
}

ModPolynomial ModPolynomial::constant(std::uint64_t p, std::uint64_t c) { return {p, {c}}; }

ModPolynomial ModPolynomial::monomial(std::uint64_t p, std::uint64_t c, std::size_t degree) {
  std::vector<std::uint64_t> v(degree + 1, 0);
  v[degree] = c;
  return {p, std::move(v)};
}

std::optional<std::size_t> ModPolynomial::degree() const noexcept {
  if (c_.empty()) return std::nullopt;
  return c_.size() - 1;
}

std::uint64_t ModPolynomial::leading() const {
  if (c_.empty()) fail(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
  return c_.back();
}

ModPolynomial ModPolynomial::scaled(std::uint64_t s) const {
  std::vector<std::uint64_t> v(c_);
  s %= p_;
  for (auto& x : v) x = mulmod_u64(x, s, p_);
  return {Unchecked{}, p_, std::move(v)};
}

ModPolynomial ModPolynomial::monic() const {
  if (c_.empty()) return *this;
  return scaled(inverse_mod(c_.back(), p_));
}

ModPolynomial ModPolynomial::derivative() const {
  if (c_.size() <= 1) return {Unchecked{}, p_, {}};
  std::vector<std::uint64_t> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = mulmod_u64(c_[i], i % p_, p_);
  return {Unchecked{}, p_, std::move(v)};
}

IntPolynomial ModPolynomial::lift_symmetric() const {
  std::vector<Integer> v;
  v.reserve(c_.size());
  for (std::uint64_t x : c_) {
    if (x > p_ / 2) {
      v.emplace_back(static_cast<long>(x) - static_cast<long>(p_));
    } else {
      v.emplace_back(static_cast<unsigned long>(x));
    }
  }
  return IntPolynomial(std::move(v));
}

ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b) {
  same_modulus(a, b);
  const std::uint64_t p = a.p_;
  std::vector<std::uint64_t> v(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::uint64_t s = a.coeff(i) + b.coeff(i);
    v[i] = s >= p ? s - p : s;
  }
  return {ModPolynomial::Unchecked{}, p, std::move(v)};
}

ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b) {
  same_modulus(a, b);
  const std::uint64_t p = a.p_;
  std::vector<std::uint64_t> v(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::uint64_t x = a.coeff(i), y = b.coeff(i);
    v[i] = x >= y ? x - y : x + p - y;
  }
  return {ModPolynomial::Unchecked{}, p, std::move(v)};
}

ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b) {
  same_modulus(a, b);
  return {ModPolynomial::Unchecked{}, a.p_, detail::mul_residues(a.c_, b.c_, a.p_)};
}

bool canonical_less(const ModPolynomial& a, const ModPolynomial& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

std::pair<ModPolynomial, ModPolynomial> mod_divrem(const ModPolynomial& a, const ModPolynomial& b) {
  same_modulus(a, b);
  if (b.is_zero()) fail(ErrorKind::InvalidArgument, "division by the zero polynomial");
  const std::uint64_t p = a.modulus();
  using U = ModPolynomial::Unchecked;
  if (a.size() < b.size()) return {ModPolynomial(U{}, p, {}), a};

  const std::uint64_t inv = inverse_mod(b.leading(), p);
  const auto d = b.coeffs();
  const std::size_t dd = d.size() - 1;
  std::vector<std::uint64_t> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<std::uint64_t> quot(rem.size() - dd, 0);
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    const std::uint64_t q = mulmod_u64(rem[i], inv, p);
    quot[i - dd] = q;
    const std::uint64_t neg = p - q;
    for (std::size_t j = 0; j < dd; ++j) {
      rem[i - dd + j] = (rem[i - dd + j] + d[j] * neg) % p;
    }
    rem[i] = 0;
  }
  rem.resize(dd);
  return {ModPolynomial(U{}, p, std::move(quot)), ModPolynomial(U{}, p, std::move(rem))};
}

namespace {

void check_monic_modulus(const ModPolynomial& modpoly) {
  if (!modpoly.is_monic() || modpoly.size() < 2) {
    fail(ErrorKind::InvalidArgument, "reduction polynomial must be monic of degree >= 1");
  }
}

}  // namespace

ModPolynomial mod_mulmod(const ModPolynomial& a, const ModPolynomial& b, const ModPolynomial& modpoly) {
  same_modulus(a, b);
  same_modulus(a, modpoly);
  check_monic_modulus(modpoly);
  const std::uint64_t p = a.modulus();
  auto prod = detail::mul_residues(a.coeffs(), b.coeffs(), p);
  detail::reduce_by_monic(prod, modpoly.coeffs(), p);
  return {ModPolynomial::Unchecked{}, p, std::move(prod)};
}

ModPolynomial mod_powmod(const ModPolynomial& base, const Integer& exponent, const ModPolynomial& modpoly) {
  same_modulus(base, modpoly);
  check_monic_modulus(modpoly);
  if (sgn(exponent) < 0) fail(ErrorKind::InvalidArgument, "negative exponent");
  const std::uint64_t p = base.modulus();
  const auto f = modpoly.coeffs();

  std::vector<std::uint64_t> b(base.coeffs().begin(), base.coeffs().end());
  detail::reduce_by_monic(b, f, p);
  std::vector<std::uint64_t> result{1};

  const std::size_t bits = sgn(exponent) == 0 ? 0 : mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = detail::mul_residues(result, result, p);
    detail::reduce_by_monic(result, f, p);
    if (mpz_tstbit(exponent.get_mpz_t(), i) != 0) {
      result = detail::mul_residues(result, b, p);
      detail::reduce_by_monic(result, f, p);
    }
  }
  return {ModPolynomial::Unchecked{}, p, std::move(result)};
}

ModPolynomial mod_gcd(const ModPolynomial& a, const ModPolynomial& b) {
  same_modulus(a, b);
  if (a.is_zero() && b.is_zero()) fail(ErrorKind::InvalidArgument, "gcd of two zero polynomials");
  ModPolynomial x = a, y = b;
  while (!y.is_zero()) {
    auto r = mod_divrem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

}  // namespace cyclolab
