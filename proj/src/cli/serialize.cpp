#include "cyclolab/serialize.hpp"

#include "cyclolab/error.hpp"

namespace cyclolab {

namespace {

Integer integer_from_json(const Json& j) {
  Integer v;
  if (j.is_string()) {
    if (v.set_str(j.get<std::string>(), 10) != 0) fail(ErrorKind::InvalidArgument, "malformed integer string");
  } else if (j.is_number_integer()) {
    v = Integer(j.get<long>());
  } else {
    fail(ErrorKind::InvalidArgument, "expected an integer");
  }
  return v;
}

Json uint_or_null(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<std::uint64_t> uint_from_nullable(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::uint64_t>();
}

}  // namespace

Json poly_to_json(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

IntPolynomial poly_from_json(const Json& j) {
  std::vector<Integer> c;
  for (const auto& e : j) c.push_back(integer_from_json(e));
  return IntPolynomial(std::move(c));
}

Json residues_to_json(const ModPolynomial& p) {
  Json arr = Json::array();
  for (auto c : p.coeffs()) arr.push_back(std::to_string(c));
  return arr;
}

ModPolynomial residues_from_json(const Json& j, std::uint64_t p) {
  std::vector<std::uint64_t> c;
  for (const auto& e : j) {
    const Integer v = integer_from_json(e);
    if (sgn(v) < 0 || !v.fits_ulong_p()) fail(ErrorKind::InvalidArgument, "residue out of range");
    c.push_back(v.get_ui());
  }
  return {p, std::move(c)};
}

void to_json(Json& j, const CycloPoly& v) {
  j = Json{{"m", v.m},
           {"algorithm", to_string(v.algorithm)},
           {"degree", v.poly.degree().value_or(0)},
           {"coefficients", poly_to_json(v.poly)}};
}

void from_json(const Json& j, CycloPoly& v) {
  v.m = j.at("m").get<std::uint64_t>();
  v.algorithm = parse_phi_algorithm(j.at("algorithm").get<std::string>());
  v.poly = poly_from_json(j.at("coefficients"));
}

void to_json(Json& j, const ArithmeticTables& v) {
  Json fac = Json::array();
  for (auto [p, k] : v.factorization) fac.push_back(Json{{"prime", p}, {"exponent", k}});
  j = Json{{"m", v.m}, {"totient", v.totient}, {"divisors", v.divisors}, {"moebius", v.moebius}, {"factorization", fac}};
}

void from_json(const Json& j, ArithmeticTables& v) {
  v.m = j.at("m").get<std::uint64_t>();
  v.totient = j.at("totient").get<std::uint64_t>();
  v.divisors = j.at("divisors").get<std::vector<std::uint64_t>>();
  v.moebius = j.at("moebius").get<std::vector<int>>();
  v.factorization.clear();
  for (const auto& e : j.at("factorization")) {
    v.factorization.emplace_back(e.at("prime").get<std::uint64_t>(), e.at("exponent").get<unsigned>());
  }
}

void to_json(Json& j, const HeightReport& v) { j = Json{{"m", v.m}, {"height", v.height.get_str()}}; }

void from_json(const Json& j, HeightReport& v) {
  v.m = j.at("m").get<std::uint64_t>();
  v.height = integer_from_json(j.at("height"));
}

void to_json(Json& j, const ResidueFactorization& v) {
  Json factors = Json::array();
  for (const auto& g : v.factors) factors.push_back(residues_to_json(g));
  j = Json{{"m", v.m}, {"p", v.p}, {"f", v.f}, {"g", v.count()}, {"factors", factors}};
}

void from_json(const Json& j, ResidueFactorization& v) {
  v.m = j.at("m").get<std::uint64_t>();
  v.p = j.at("p").get<std::uint64_t>();
  v.f = j.at("f").get<std::uint64_t>();
  v.factors.clear();
  for (const auto& e : j.at("factors")) v.factors.push_back(residues_from_json(e, v.p));
}

void to_json(Json& j, const OrderReport& v) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < v.factors.size(); ++i) {
    entries.push_back(Json{{"factor", residues_to_json(v.factors[i])}, {"order", v.orders.at(i)}});
  }
  j = Json{{"m", v.m}, {"p", v.p}, {"f", v.f}, {"factors", entries}};
}

void from_json(const Json& j, OrderReport& v) {
  v.m = j.at("m").get<std::uint64_t>();
  v.p = j.at("p").get<std::uint64_t>();
  v.f = j.at("f").get<std::uint64_t>();
  v.factors.clear();
  v.orders.clear();
  for (const auto& e : j.at("factors")) {
    v.factors.push_back(residues_from_json(e.at("factor"), v.p));
    v.orders.push_back(e.at("order").get<std::uint64_t>());
  }
}

void to_json(Json& j, const PrimitivityReport& v) {
  Json factors = Json::array();
  for (const auto& f : v.factors) {
    Json checks = Json::array();
    for (const auto& c : f.divisor_checks) checks.push_back(Json{{"j", c.j}, {"passed", c.passed}});
    factors.push_back(Json{{"factor", residues_to_json(f.factor)},
                           {"divisor_checks", checks},
                           {"root_check_passed", f.root_check_passed}});
  }
  j = Json{{"m", v.m}, {"p", v.p}, {"passed", v.passed}, {"factors", factors}};
}

void from_json(const Json& j, PrimitivityReport& v) {
  v.m = j.at("m").get<std::uint64_t>();
  v.p = j.at("p").get<std::uint64_t>();
  v.passed = j.at("passed").get<bool>();
  v.factors.clear();
  for (const auto& e : j.at("factors")) {
    PrimitivityFactorReport f{residues_from_json(e.at("factor"), v.p), {}, e.at("root_check_passed").get<bool>()};
    for (const auto& c : e.at("divisor_checks")) {
      f.divisor_checks.push_back({c.at("j").get<std::uint64_t>(), c.at("passed").get<bool>()});
    }
    v.factors.push_back(std::move(f));
  }
}

void to_json(Json& j, const UnramifiedWitness& v) {
  j = Json{{"m", v.m},
           {"p", v.p},
           {"unramified", v.unramified},
           {"derivative_residue", v.derivative_residue},
           {"squarefree", v.squarefree},
           {"explanation", v.explanation}};
}

void from_json(const Json& j, UnramifiedWitness& v) {
  v.m = j.at("m").get<std::uint64_t>();
  v.p = j.at("p").get<std::uint64_t>();
  v.unramified = j.at("unramified").get<bool>();
  v.derivative_residue = j.at("derivative_residue").get<std::uint64_t>();
  v.squarefree = j.at("squarefree").get<bool>();
  v.explanation = j.at("explanation").get<std::string>();
}

void to_json(Json& j, const CyclicComponent& v) {
  j = Json{{"prime_power", v.prime_power},
           {"local_generator", v.local_generator},
           {"generator", v.generator},
           {"order", v.order}};
}

void from_json(const Json& j, CyclicComponent& v) {
  v.prime_power = j.at("prime_power").get<std::uint64_t>();
  v.local_generator = j.at("local_generator").get<std::uint64_t>();
  v.generator = j.at("generator").get<std::uint64_t>();
  v.order = j.at("order").get<std::uint64_t>();
}

void to_json(Json& j, const UnitGroupModM& v) {
  j = Json{{"m", v.m}, {"order", v.order}, {"components", v.components}};
}

void from_json(const Json& j, UnitGroupModM& v) {
  v.m = j.at("m").get<std::uint64_t>();
  v.order = j.at("order").get<std::uint64_t>();
  v.components = j.at("components").get<std::vector<CyclicComponent>>();
}

void to_json(Json& j, const FrobeniusClass& v) {
  j = Json{{"m", v.m}, {"class", v.r}, {"prime", uint_or_null(v.prime)}};
}

void from_json(const Json& j, FrobeniusClass& v) {
  v.m = j.at("m").get<std::uint64_t>();
  v.r = j.at("class").get<std::uint64_t>();
  v.prime = uint_from_nullable(j.at("prime"));
}

void to_json(Json& j, const CheckRecord& v) {
  j = Json{{"kind", v.kind}, {"exponent", v.exponent}, {"passed", v.passed}};
}

void from_json(const Json& j, CheckRecord& v) {
  v.kind = j.at("kind").get<std::string>();
  v.exponent = j.at("exponent").get<std::uint64_t>();
  v.passed = j.at("passed").get<bool>();
}

void to_json(Json& j, const IrreducibilityCertificate& v) {
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses) {
    witnesses.push_back(Json{{"p", w.p},
                             {"class", w.cls},
                             {"f", w.f},
                             {"factor_used", residues_to_json(w.factor_used)},
                             {"checks", w.checks}});
  }
  j = Json{{"schema_version", v.schema_version},
           {"m", v.m},
           {"phi_m_degree", v.phi_m_degree},
           {"witnesses", witnesses},
           {"group_order", v.group_order},
           {"generated_order", v.generated_order},
           {"conclusion", v.conclusion}};
}

void from_json(const Json& j, IrreducibilityCertificate& v) {
  v.schema_version = j.at("schema_version").get<std::string>();
  v.m = j.at("m").get<std::uint64_t>();
  v.phi_m_degree = j.at("phi_m_degree").get<std::uint64_t>();
  v.group_order = j.at("group_order").get<std::uint64_t>();
  v.generated_order = j.at("generated_order").get<std::uint64_t>();
  v.conclusion = j.at("conclusion").get<std::string>();
  v.witnesses.clear();
  for (const auto& e : j.at("witnesses")) {
    FrobeniusWitness w;
    w.p = e.at("p").get<std::uint64_t>();
    w.cls = e.at("class").get<std::uint64_t>();
    w.f = e.at("f").get<std::uint64_t>();
    w.factor_used = residues_from_json(e.at("factor_used"), w.p);
    w.checks = e.at("checks").get<std::vector<CheckRecord>>();
    v.witnesses.push_back(std::move(w));
  }
}

void to_json(Json& j, const RayClassElement& v) {
  j = Json{{"m", v.m}, {"ideal", v.ideal.get_str()}, {"class", v.cls}};
}

void from_json(const Json& j, RayClassElement& v) {
  v.m = j.at("m").get<std::uint64_t>();
  v.ideal = parse_rational(j.at("ideal").get<std::string>());
  v.cls = j.at("class").get<std::uint64_t>();
}

void to_json(Json& j, const RayClassGroup& v) {
  j = Json{{"m", v.m},
           {"order", v.order},
           {"components", v.components},
           {"classes", v.classes},
           {"isomorphism", v.isomorphism},
           {"kernel", v.kernel}};
}

void from_json(const Json& j, RayClassGroup& v) {
  v.m = j.at("m").get<std::uint64_t>();
  v.order = j.at("order").get<std::uint64_t>();
  v.components = j.at("components").get<std::vector<CyclicComponent>>();
  v.classes = j.at("classes").get<std::vector<std::uint64_t>>();
  v.isomorphism = j.at("isomorphism").get<std::string>();
  v.kernel = j.at("kernel").get<std::string>();
}

void to_json(Json& j, const SplittingData& v) {
  j = Json{{"m", v.m}, {"p", v.p},           {"e", v.e},           {"f", v.f},
           {"g", v.g}, {"m_prime", v.m_prime}, {"p_part", v.p_part}};
}

void from_json(const Json& j, SplittingData& v) {
  v.m = j.at("m").get<std::uint64_t>();
  v.p = j.at("p").get<std::uint64_t>();
  v.e = j.at("e").get<std::uint64_t>();
  v.f = j.at("f").get<std::uint64_t>();
  v.g = j.at("g").get<std::uint64_t>();
  v.m_prime = j.at("m_prime").get<std::uint64_t>();
  v.p_part = j.at("p_part").get<std::uint64_t>();
}

void to_json(Json& j, const OneMinusZetaVerdict& v) {
  j = Json{{"m", v.m}, {"kind", to_string(v.kind)}, {"prime", uint_or_null(v.prime)}, {"phi_at_one", v.evidence.get_str()}};
}

void from_json(const Json& j, OneMinusZetaVerdict& v) {
  v.m = j.at("m").get<std::uint64_t>();
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "zero") {
    v.kind = OneMinusZetaKind::Zero;
  } else if (kind == "prime_power") {
    v.kind = OneMinusZetaKind::PrimePower;
  } else if (kind == "unit") {
    v.kind = OneMinusZetaKind::Unit;
  } else {
    fail(ErrorKind::InvalidArgument, "unknown verdict kind '" + kind + "'");
  }
  v.prime = uint_from_nullable(j.at("prime"));
  v.evidence = integer_from_json(j.at("phi_at_one"));
}

void to_json(Json& j, const CompositumReport& v) {
  j = Json{{"P", v.P},
           {"Q", v.Q},
           {"p", v.p},
           {"q", v.q},
           {"phi_P", v.phi_P},
           {"phi_Q", v.phi_Q},
           {"phi_PQ", v.phi_PQ},
           {"degrees_multiply", v.degrees_multiply},
           {"e_p_in_PQ", v.e_p_in_PQ},
           {"e_p_in_Q", v.e_p_in_Q},
           {"e_q_in_PQ", v.e_q_in_PQ},
           {"e_q_in_P", v.e_q_in_P},
           {"ramification_separates", v.ramification_separates}};
}

void from_json(const Json& j, CompositumReport& v) {
  v.P = j.at("P").get<std::uint64_t>();
  v.Q = j.at("Q").get<std::uint64_t>();
  v.p = j.at("p").get<std::uint64_t>();
  v.q = j.at("q").get<std::uint64_t>();
  v.phi_P = j.at("phi_P").get<std::uint64_t>();
  v.phi_Q = j.at("phi_Q").get<std::uint64_t>();
  v.phi_PQ = j.at("phi_PQ").get<std::uint64_t>();
  v.degrees_multiply = j.at("degrees_multiply").get<bool>();
  v.e_p_in_PQ = j.at("e_p_in_PQ").get<std::uint64_t>();
  v.e_p_in_Q = j.at("e_p_in_Q").get<std::uint64_t>();
  v.e_q_in_PQ = j.at("e_q_in_PQ").get<std::uint64_t>();
  v.e_q_in_P = j.at("e_q_in_P").get<std::uint64_t>();
  v.ramification_separates = j.at("ramification_separates").get<bool>();
}

void to_json(Json& j, const ChebotarevTally& v) {
  const auto freqs = v.frequencies();
  Json classes = Json::array();
  for (std::size_t i = 0; i < v.classes.size(); ++i) {
    classes.push_back(Json{{"class", v.classes[i]}, {"count", v.counts[i]}, {"frequency", freqs[i].get_str()}});
  }
  j = Json{{"m", v.m}, {"limit", v.limit}, {"total", v.total}, {"classes", classes}};
}

void from_json(const Json& j, ChebotarevTally& v) {
  v.m = j.at("m").get<std::uint64_t>();
  v.limit = j.at("limit").get<std::uint64_t>();
  v.total = j.at("total").get<std::uint64_t>();
  v.classes.clear();
  v.counts.clear();
  for (const auto& e : j.at("classes")) {
    v.classes.push_back(e.at("class").get<std::uint64_t>());
    v.counts.push_back(e.at("count").get<std::uint64_t>());
  }
}

}  // namespace cyclolab
