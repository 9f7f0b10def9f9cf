#include "cyclolab/cli.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace cyclolab::cli {

namespace {

std::string monomial(std::size_t degree) {
  if (degree == 0) return "";
  if (degree == 1) return "X";
  return "X^" + std::to_string(degree);
}

// terms holds (degree, magnitude, negative) from the top degree down.
template <typename Terms>
std::string join_terms(const Terms& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [degree, magnitude, negative] : terms) {
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string x = monomial(degree);
    if (x.empty()) {
      out += magnitude;
    } else {
      if (magnitude != "1") out += magnitude + "*";
      out += x;
    }
  }
  return out;
}

}  // namespace

std::string format_polynomial(const IntPolynomial& p) {
  std::vector<std::tuple<std::size_t, std::string, bool>> terms;
  const auto c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (sgn(c[i]) == 0) continue;
    terms.emplace_back(i, Integer(abs(c[i])).get_str(), sgn(c[i]) < 0);
  }
  return join_terms(terms);
}

std::string format_polynomial(const ModPolynomial& p) {
  std::vector<std::tuple<std::size_t, std::string, bool>> terms;
  const auto c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    terms.emplace_back(i, std::to_string(c[i]), false);
  }
  return join_terms(terms);
}

}  // namespace cyclolab::cli
