#include "cyclolab/int_polynomial.hpp"

#include <algorithm>
#include <bit>
#include <climits>

#include "cyclolab/error.hpp"
#include "cyclolab/kernels.hpp"

namespace cyclolab {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::size_t n) {
  std::vector<Integer> v(n + 1);
  v[0] = -1;
  v[n] += 1;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPolynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Integer IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPolynomial::leading() const {
  if (coeffs_.empty()) fail(ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Integer IntPolynomial::height() const {
  Integer h = 0;
  for (const auto& c : coeffs_) {
    if (mpz_cmpabs(c.get_mpz_t(), h.get_mpz_t()) > 0) h = abs(c);
  }
  return h;
}

IntPolynomial IntPolynomial::substitute_power(std::size_t k) const {
  if (k == 0) fail(ErrorKind::InvalidArgument, "substitution exponent must be positive");
  if (coeffs_.empty()) return {};
  std::vector<Integer> v((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> v(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.size(); ++i) v[i] += b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

namespace detail {

std::optional<std::vector<std::int64_t>> to_int64(const IntPolynomial& a) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  std::vector<std::int64_t> out;
  out.reserve(a.size());
  for (const auto& c : a.coeffs()) {
    if (!c.fits_slong_p()) return std::nullopt;
    out.push_back(c.get_si());
  }
  return out;
}

IntPolynomial from_int64(std::span<const std::int64_t> c) {
  std::vector<Integer> v;
  v.reserve(c.size());
  for (std::int64_t x : c) v.emplace_back(static_cast<long>(x));
  return IntPolynomial(std::move(v));
}

namespace {

using Coeffs = std::vector<Integer>;

void schoolbook(std::span<const Integer> a, std::span<const Integer> b, std::span<Integer> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
}

// out += a * b, with out.size() >= a.size() + b.size() - 1.
void karatsuba(std::span<const Integer> a, std::span<const Integer> b, std::span<Integer> out,
               std::size_t threshold) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return;
  if (b.size() < threshold || b.size() < 2) {
    schoolbook(a, b, out);
    return;
  }
  const std::size_t h = (a.size() + 1) / 2;
  if (b.size() <= h) {
    // Unbalanced: split only the longer operand.
    karatsuba(a.first(h), b, out, threshold);
    karatsuba(a.subspan(h), b, out.subspan(h), threshold);
    return;
  }
  const auto a0 = a.first(h), a1 = a.subspan(h);
  const auto b0 = b.first(h), b1 = b.subspan(h);

  Coeffs z0(2 * h - 1), z2(a1.size() + b1.size() - 1);
  karatsuba(a0, b0, z0, threshold);
  karatsuba(a1, b1, z2, threshold);

  Coeffs sa(h), sb(h);
  for (std::size_t i = 0; i < h; ++i) {
    sa[i] = a0[i];
    sb[i] = b0[i];
  }
  for (std::size_t i = 0; i < a1.size(); ++i) sa[i] += a1[i];
  for (std::size_t i = 0; i < b1.size(); ++i) sb[i] += b1[i];
  Coeffs z1(2 * h - 1);
  karatsuba(sa, sb, z1, threshold);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i) out[i + h] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * h] += z2[i];
}

std::size_t max_bits(std::span<const Integer> c) {
  std::size_t bits = 0;
  for (const auto& x : c) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  return bits;
}

std::optional<IntPolynomial> mul_int64(const IntPolynomial& a, const IntPolynomial& b) {
  const std::size_t terms = std::bit_width(std::min(a.size(), b.size()));
  if (max_bits(a.coeffs()) + max_bits(b.coeffs()) + terms > 62) return std::nullopt;
  auto ai = to_int64(a), bi = to_int64(b);
  if (!ai || !bi) return std::nullopt;
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  std::span<const std::int64_t> bs(*bi);
  for (std::size_t i = 0; i < ai->size(); ++i) {
    if ((*ai)[i] == 0) continue;
    if (!kernels::axpy_i64(std::span(out).subspan(i, bs.size()), bs, (*ai)[i])) return std::nullopt;
  }
  return from_int64(out);
}

}  // namespace

IntPolynomial mul_bigint(const IntPolynomial& a, const IntPolynomial& b, std::size_t threshold) {
  if (a.is_zero() || b.is_zero()) return {};
  Coeffs out(a.size() + b.size() - 1);
  karatsuba(a.coeffs(), b.coeffs(), out, std::max<std::size_t>(threshold, 2));
  return IntPolynomial(std::move(out));
}

}  // namespace detail

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (auto fast = detail::mul_int64(a, b)) return *std::move(fast);
  return detail::mul_bigint(a, b, detail::kKaratsubaThreshold);
}

namespace {

[[noreturn]] void not_divisible(const char* why) { fail(ErrorKind::NotDivisible, why); }

// Long division with a unit leading coefficient over int64. Returns nullopt
// if an intermediate value leaves the int64 range.
std::optional<IntPolynomial> exact_div_int64(const IntPolynomial& num, const IntPolynomial& den) {
  auto ni = detail::to_int64(num);
  auto di = detail::to_int64(den);
  if (!ni || !di) return std::nullopt;
  std::vector<std::int64_t>& rem = *ni;
  const std::vector<std::int64_t>& d = *di;
  const std::size_t dd = d.size() - 1;
  const std::int64_t lead = d.back();
  std::vector<std::int64_t> quot(rem.size() - dd, 0);

  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < dd; ++j) {
    if (d[j] != 0) support.push_back(j);
  }
  const bool sparse = support.size() * 4 < dd;
  const std::span<const std::int64_t> low(d.data(), dd);

  for (std::size_t i = rem.size(); i-- > dd;) {
    const std::int64_t top = rem[i];
    if (top == 0) continue;
    if (top == INT64_MIN) return std::nullopt;
    const std::int64_t q = lead == 1 ? top : -top;
    quot[i - dd] = q;
    rem[i] = 0;
    std::span<std::int64_t> window(rem.data() + (i - dd), dd);
    if (sparse) {
      for (std::size_t j : support) {
        std::int64_t prod;
        if (__builtin_mul_overflow(d[j], q, &prod) || __builtin_sub_overflow(window[j], prod, &window[j])) {
          return std::nullopt;
        }
      }
    } else if (!kernels::axpy_i64(window, low, -q)) {
      return std::nullopt;
    }
  }
  for (std::size_t j = 0; j < dd; ++j) {
    if (rem[j] != 0) not_divisible("nonzero remainder");
  }
  return detail::from_int64(quot);
}

}  // namespace

IntPolynomial poly_exact_div(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) fail(ErrorKind::InvalidArgument, "division by the zero polynomial");
  if (num.is_zero()) return {};
  if (num.size() < den.size()) not_divisible("numerator degree below denominator degree");

  const Integer& lead = den.leading();
  if (abs(lead) == 1) {
    if (auto fast = exact_div_int64(num, den)) return *std::move(fast);
  }

  std::vector<Integer> rem(num.coeffs().begin(), num.coeffs().end());
  const auto d = den.coeffs();
  const std::size_t dd = d.size() - 1;
  std::vector<Integer> quot(rem.size() - dd);
  Integer q;
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (sgn(rem[i]) == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), lead.get_mpz_t())) not_divisible("non-integer quotient coefficient");
    mpz_divexact(q.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j < dd; ++j) {
      if (sgn(d[j]) != 0) mpz_submul(rem[i - dd + j].get_mpz_t(), q.get_mpz_t(), d[j].get_mpz_t());
    }
    rem[i] = 0;
    quot[i - dd] = q;
  }
  for (std::size_t j = 0; j < dd; ++j) {
    if (sgn(rem[j]) != 0) not_divisible("nonzero remainder");
  }
  return IntPolynomial(std::move(quot));
}

Integer poly_eval_int(const IntPolynomial& a, const Integer& x) {
  Integer acc = 0;
  const auto c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc *= x;
    acc += c[i];
  }
  return acc;
}

}  // namespace cyclolab
