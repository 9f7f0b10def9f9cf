#include <algorithm>

#include "cyclolab/detail/mod_arith.hpp"
#include "cyclolab/error.hpp"
#include "cyclolab/kernels.hpp"
#include "cyclolab/residue_fields.hpp"

namespace cyclolab {

namespace {

using Residues = std::vector<std::uint64_t>;

ResidueFieldElement wrap(std::uint64_t p, Residues c) {
  return {ModPolynomial(ModPolynomial::Unchecked{}, p, std::move(c))};
}

// v <- v * X mod h, v padded to n entries. v entries stay below p.
void shift_reduce(Residues& v, std::span<const std::uint64_t> h_low, std::uint64_t p) {
  const std::size_t n = v.size();
  const std::uint64_t carry = v[n - 1];
  std::copy_backward(v.begin(), v.end() - 1, v.end());
  v[0] = 0;
  if (carry == 0) return;
  const std::uint64_t neg = p - carry;
  for (std::size_t j = 0; j < n; ++j) v[j] = (v[j] + neg * h_low[j]) % p;
}

}  // namespace

QuotientRing::QuotientRing(ModPolynomial modulus, bool with_frobenius) : modulus_(std::move(modulus)), n_(0) {
  if (!modulus_.is_monic() || modulus_.size() < 2) {
    fail(ErrorKind::InvalidArgument, "quotient modulus must be monic of degree >= 1");
  }
  n_ = modulus_.size() - 1;
  if (!with_frobenius) return;

  const std::uint64_t p = characteristic();
  const auto h = modulus_.coeffs();
  const auto h_low = h.first(n_);
  frobenius_.assign(n_ * n_, 0);
  frobenius_[0] = 1;
  if (n_ == 1) return;

  if (p < 2 * n_) {
    // Row i+1 is row i times X^p: p shift-and-reduce steps of O(n) each.
    // Entries are reduced lazily; only the carried top entry must be exact.
    Residues v(n_, 0);
    v[0] = 1;
    const std::uint64_t budget = detail::lazy_budget(p);
    std::uint64_t pending = 0;
    for (std::size_t i = 1; i < n_; ++i) {
      for (std::uint64_t s = 0; s < p; ++s) {
        const std::uint64_t carry = v[n_ - 1] % p;
        std::copy_backward(v.begin(), v.end() - 1, v.end());
        v[0] = 0;
        if (carry == 0) continue;
        kernels::mul_acc_u64(v, h_low, p - carry);
        if (++pending == budget) {
          detail::reduce_all(v, p);
          pending = 0;
        }
      }
      detail::reduce_all(v, p);
      pending = 0;
      std::copy(v.begin(), v.end(), frobenius_.begin() + static_cast<std::ptrdiff_t>(i * n_));
    }
  } else {
    const ModPolynomial xp = mod_powmod(ModPolynomial::monomial(p, 1, 1), Integer(static_cast<unsigned long>(p)), modulus_);
    Residues row{1};
    for (std::size_t i = 1; i < n_; ++i) {
      row = detail::mul_residues(row, xp.coeffs(), p);
      detail::reduce_by_monic(row, h, p);
      std::copy(row.begin(), row.end(), frobenius_.begin() + static_cast<std::ptrdiff_t>(i * n_));
    }
  }
}

ResidueFieldElement QuotientRing::reduce(const ModPolynomial& a) const {
  if (a.modulus() != characteristic()) fail(ErrorKind::ModulusMismatch, "element and ring moduli differ");
  Residues c(a.coeffs().begin(), a.coeffs().end());
  detail::reduce_by_monic(c, modulus_.coeffs(), characteristic());
  return wrap(characteristic(), std::move(c));
}

ResidueFieldElement QuotientRing::one() const { return reduce(ModPolynomial::constant(characteristic(), 1)); }

ResidueFieldElement QuotientRing::x() const { return reduce(ModPolynomial::monomial(characteristic(), 1, 1)); }

ResidueFieldElement QuotientRing::add(const ResidueFieldElement& a, const ResidueFieldElement& b) const {
  return {a.representative + b.representative};
}

ResidueFieldElement QuotientRing::sub(const ResidueFieldElement& a, const ResidueFieldElement& b) const {
  return {a.representative - b.representative};
}

ResidueFieldElement QuotientRing::mul(const ResidueFieldElement& a, const ResidueFieldElement& b) const {
  const std::uint64_t p = characteristic();
  Residues c = detail::mul_residues(a.representative.coeffs(), b.representative.coeffs(), p);
  detail::reduce_by_monic(c, modulus_.coeffs(), p);
  return wrap(p, std::move(c));
}

ResidueFieldElement QuotientRing::pow(const ResidueFieldElement& a, const Integer& e) const {
  return {mod_powmod(a.representative, e, modulus_)};
}

ResidueFieldElement QuotientRing::times_x(const ResidueFieldElement& a) const {
  const std::uint64_t p = characteristic();
  Residues v(a.representative.coeffs().begin(), a.representative.coeffs().end());
  v.resize(n_, 0);
  shift_reduce(v, modulus_.coeffs().first(n_), p);
  return wrap(p, std::move(v));
}

ResidueFieldElement QuotientRing::frobenius(const ResidueFieldElement& a) const {
  if (!has_frobenius()) fail(ErrorKind::InvalidArgument, "ring was built without a Frobenius matrix");
  const std::uint64_t p = characteristic();
  const auto coeffs = a.representative.coeffs();
  Residues out(n_, 0);
  const std::uint64_t budget = detail::lazy_budget(p);
  std::uint64_t pending = 0;
  const std::span<const std::uint64_t> rows(frobenius_);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    kernels::mul_acc_u64(out, rows.subspan(i * n_, n_), coeffs[i]);
    if (++pending == budget) {
      detail::reduce_all(out, p);
      pending = 0;
    }
  }
  detail::reduce_all(out, p);
  return wrap(p, std::move(out));
}

}  // namespace cyclolab
