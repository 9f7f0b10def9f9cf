#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

#include "cyclolab/cli.hpp"
#include "cyclolab/error.hpp"
#include "cyclolab/serialize.hpp"

namespace cyclolab::cli {

namespace {

struct Payload {
  Json result;
  std::string text;
  std::string csv;
};

struct Options {
  std::string format = "text";
  bool timing = false;
  std::uint64_t m = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::uint64_t limit = 0;
  std::uint64_t prime_bound = 0;
  unsigned jobs = 1;
  std::uint64_t P = 0;
  std::uint64_t Q = 0;
  std::string algorithm = "auto";
  std::string ideal;
  std::string path;
};

std::string join_residues(const ModPolynomial& g) {
  std::string out;
  for (auto c : g.coeffs()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(c);
  }
  return out;
}

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string out;
  for (const auto& c : cells) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out + "\n";
}

template <typename T>
std::string s(const T& v) {
  if constexpr (std::is_same_v<T, bool>) {
    return v ? "true" : "false";
  } else {
    return std::to_string(v);
  }
}

Payload cmd_phi(const Options& o) {
  const CycloPoly c = phi_poly(o.m, parse_phi_algorithm(o.algorithm), CycloConfig::from_environment());
  Payload out{Json(c), format_polynomial(c.poly) + "\n", "degree,coefficient\n"};
  for (std::size_t i = 0; i < c.poly.size(); ++i) out.csv += csv_row({s(i), c.poly.coeffs()[i].get_str()});
  return out;
}

Payload cmd_tables(const Options& o) {
  const ArithmeticTables t = arithmetic_tables(o.m);
  Payload out{Json(t), "", "divisor,moebius\n"};
  std::string divs, mus;
  for (std::size_t i = 0; i < t.divisors.size(); ++i) {
    divs += " " + s(t.divisors[i]);
    mus += " " + std::to_string(t.moebius[i]);
    out.csv += csv_row({s(t.divisors[i]), std::to_string(t.moebius[i])});
  }
  out.text = "m=" + s(t.m) + " phi=" + s(t.totient) + "\ndivisors:" + divs + "\nmoebius:" + mus + "\n";
  return out;
}

Payload cmd_height(const Options& o) {
  const HeightReport h{o.m, height(o.m, CycloConfig::from_environment())};
  return {Json(h), h.height.get_str() + "\n", "m,height\n" + csv_row({s(h.m), h.height.get_str()})};
}

Payload cmd_factor(const Options& o) {
  const ResidueFactorization fac = factor_phi_mod_p(o.m, o.prime, o.seed, CycloConfig::from_environment());
  Payload out{Json(fac), "m=" + s(fac.m) + " p=" + s(fac.p) + " f=" + s(fac.f) + " g=" + s(fac.count()) + "\n",
              "index,degree,coefficients\n"};
  for (std::size_t i = 0; i < fac.factors.size(); ++i) {
    out.text += format_polynomial(fac.factors[i]) + "\n";
    out.csv += csv_row({s(i), s(fac.f), join_residues(fac.factors[i])});
  }
  return out;
}

Payload cmd_order(const Options& o) {
  const ResidueFactorization fac = factor_phi_mod_p(o.m, o.prime, o.seed, CycloConfig::from_environment());
  OrderReport r{fac.m, fac.p, fac.f, fac.factors, {}};
  Payload out{Json(), "", "index,factor,order\n"};
  for (std::size_t i = 0; i < fac.factors.size(); ++i) {
    r.orders.push_back(root_of_unity_order_mod(fac, i));
    out.text += format_polynomial(fac.factors[i]) + ": order " + s(r.orders.back()) + "\n";
    out.csv += csv_row({s(i), join_residues(fac.factors[i]), s(r.orders.back())});
  }
  out.result = Json(r);
  return out;
}

Payload cmd_verify_primitivity(const Options& o) {
  const PrimitivityReport r = verify_primitivity(o.m, o.prime, o.seed);
  Payload out{Json(r), std::string(r.passed ? "PASS" : "FAIL") + " m=" + s(r.m) + " p=" + s(r.p) + "\n",
              "factor_index,j,passed\n"};
  for (std::size_t i = 0; i < r.factors.size(); ++i) {
    const auto& f = r.factors[i];
    out.text += format_polynomial(f.factor) + ":";
    for (const auto& c : f.divisor_checks) {
      out.text += " X^" + s(c.j) + (c.passed ? "!=1" : "=1");
      out.csv += csv_row({s(i), s(c.j), s(c.passed)});
    }
    out.text += std::string(" X^") + s(r.m) + (f.root_check_passed ? "=1" : "!=1") + "\n";
  }
  return out;
}

Payload cmd_unramified(const Options& o) {
  const UnramifiedWitness w = unramified_check(o.m, o.prime);
  return {Json(w), std::string(w.unramified ? "unramified" : "ramified") + ": " + w.explanation + "\n",
          "m,p,unramified,derivative_residue,squarefree\n" +
              csv_row({s(w.m), s(w.p), s(w.unramified), s(w.derivative_residue), s(w.squarefree)})};
}

Payload cmd_split(const Options& o) {
  const SplittingData d = splitting_data(o.m, o.prime, {.cross_check = true, .seed = o.seed});
  return {Json(d),
          "e=" + s(d.e) + " f=" + s(d.f) + " g=" + s(d.g) + " (m=" + s(d.m) + ", p=" + s(d.p) + ", m'=" +
              s(d.m_prime) + ", p-part=" + s(d.p_part) + ")\n",
          "m,p,e,f,g,m_prime,p_part\n" + csv_row({s(d.m), s(d.p), s(d.e), s(d.f), s(d.g), s(d.m_prime), s(d.p_part)})};
}

Payload cmd_one_minus_zeta(const Options& o) {
  const OneMinusZetaVerdict v = one_minus_zeta_verdict(o.m);
  std::string kind(to_string(v.kind));
  if (v.prime) kind += "(" + s(*v.prime) + ")";
  return {Json(v), "m=" + s(v.m) + " " + kind + " Phi_m(1)=" + v.evidence.get_str() + "\n",
          "m,kind,prime,phi_at_one\n" +
              csv_row({s(v.m), std::string(to_string(v.kind)), v.prime ? s(*v.prime) : "", v.evidence.get_str()})};
}

std::string certificate_text(const IrreducibilityCertificate& c) {
  std::string out = c.conclusion + ": witnesses";
  for (const auto& w : c.witnesses) out += " " + s(w.p);
  out += " generate a subgroup of order " + s(c.generated_order) + " of " + s(c.group_order) + "\n";
  for (const auto& w : c.witnesses) {
    out += "  p=" + s(w.p) + " class=" + s(w.cls) + " f=" + s(w.f) + " factor " + format_polynomial(w.factor_used) +
           "\n";
  }
  return out;
}

Payload cmd_certify(const Options& o) {
  const auto bound = o.prime_bound == 0 ? std::nullopt : std::optional<std::uint64_t>(o.prime_bound);
  const IrreducibilityCertificate c = certify_irreducible(o.m, bound);
  Payload out{Json(c), certificate_text(c), "p,class,f,factor_used\n"};
  for (const auto& w : c.witnesses) out.csv += csv_row({s(w.p), s(w.cls), s(w.f), join_residues(w.factor_used)});
  return out;
}

Payload cmd_verify_cert(const Options& o) {
  std::string content;
  if (o.path == "-") {
    content.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(o.path);
    if (!in) fail(ErrorKind::InvalidArgument, "cannot read '" + o.path + "'");
    content.assign(std::istreambuf_iterator<char>(in), {});
  }
  Json doc;
  try {
    doc = Json::parse(content);
  } catch (const Json::exception& e) {
    fail(ErrorKind::InvalidArgument, std::string("malformed certificate JSON: ") + e.what());
  }
  // Accept either a bare certificate or a `certify --format json` envelope.
  const Json& body = doc.contains("result") ? doc.at("result") : doc;
  IrreducibilityCertificate cert;
  try {
    cert = body.get<IrreducibilityCertificate>();
  } catch (const Json::exception& e) {
    fail(ErrorKind::InvalidArgument, std::string("certificate does not match the schema: ") + e.what());
  }
  const CertificateVerification v = verify_certificate(cert);
  if (!v.ok) {
    std::string why;
    for (const auto& f : v.failures) why += "\n  " + f;
    fail(ErrorKind::InvalidArgument, "certificate rejected:" + why);
  }
  return {Json{{"m", cert.m}, {"ok", true}, {"generated_order", v.generated_order}},
          "certificate for m=" + s(cert.m) + " verified\n",
          "m,ok,generated_order\n" + csv_row({s(cert.m), "true", s(v.generated_order)})};
}

Payload cmd_frobenius(const Options& o) {
  const FrobeniusClass c = frobenius_class(o.m, o.prime, {.verify = true, .seed = o.seed});
  return {Json(c), "class " + s(c.r) + " mod " + s(c.m) + " (Frobenius at p=" + s(o.prime) + ")\n",
          "m,p,class\n" + csv_row({s(c.m), s(o.prime), s(c.r)})};
}

Payload cmd_artin(const Options& o) {
  const RayClassElement e = artin_symbol(o.m, parse_rational(o.ideal));
  return {Json(e), "class " + s(e.cls) + " mod " + s(e.m) + " for the ideal (" + e.ideal.get_str() + ")\n",
          "m,ideal,class\n" + csv_row({s(e.m), e.ideal.get_str(), s(e.cls)})};
}

std::string components_csv(const std::vector<CyclicComponent>& comps) {
  std::string out = "prime_power,local_generator,generator,order\n";
  for (const auto& c : comps) out += csv_row({s(c.prime_power), s(c.local_generator), s(c.generator), s(c.order)});
  return out;
}

std::string components_text(const std::vector<CyclicComponent>& comps) {
  if (comps.empty()) return "trivial group\n";
  std::string out;
  for (const auto& c : comps) {
    out += "  <" + s(c.generator) + "> of order " + s(c.order) + " (generator " + s(c.local_generator) + " mod " +
           s(c.prime_power) + ")\n";
  }
  return out;
}

Payload cmd_unit_group(const Options& o) {
  const UnitGroupModM g = unit_group(o.m);
  return {Json(g), "(Z/" + s(g.m) + "Z)^x of order " + s(g.order) + "\n" + components_text(g.components),
          components_csv(g.components)};
}

Payload cmd_ray_class(const Options& o) {
  const RayClassGroup g = ray_class_group(o.m);
  std::string text = "Cl_Q{" + s(g.m) + " inf} of order " + s(g.order) + "\n" + components_text(g.components) +
                     "isomorphism: " + g.isomorphism + "\nkernel: " + g.kernel + "\n";
  return {Json(g), text, components_csv(g.components)};
}

Payload cmd_chebotarev(const Options& o) {
  const ChebotarevTally t = chebotarev_sample(o.m, o.limit, o.jobs);
  const auto freqs = t.frequencies();
  Payload out{Json(t), "m=" + s(t.m) + " N=" + s(t.limit) + " primes=" + s(t.total) + "\n",
              "class,count,frequency\n"};
  for (std::size_t i = 0; i < t.classes.size(); ++i) {
    out.text += "  " + s(t.classes[i]) + ": " + s(t.counts[i]) + " (" + freqs[i].get_str() + ")\n";
    out.csv += csv_row({s(t.classes[i]), s(t.counts[i]), freqs[i].get_str()});
  }
  return out;
}

Payload cmd_compositum(const Options& o) {
  const CompositumReport r = compositum_degree_check(o.P, o.Q);
  std::string text = "phi(" + s(r.P * r.Q) + ")=" + s(r.phi_PQ) + " = phi(" + s(r.P) + ")*phi(" + s(r.Q) +
                     ")=" + s(r.phi_P) + "*" + s(r.phi_Q) + (r.degrees_multiply ? " ok" : " MISMATCH") + "\n";
  text += "p=" + s(r.p) + ": e=" + s(r.e_p_in_PQ) + " in Q(zeta_" + s(r.P * r.Q) + "), e=" + s(r.e_p_in_Q) +
          " in Q(zeta_" + s(r.Q) + ")\n";
  text += "q=" + s(r.q) + ": e=" + s(r.e_q_in_PQ) + " in Q(zeta_" + s(r.P * r.Q) + "), e=" + s(r.e_q_in_P) +
          " in Q(zeta_" + s(r.P) + ")\n";
  std::string csv = "P,Q,phi_P,phi_Q,phi_PQ,degrees_multiply,e_p_in_PQ,e_p_in_Q,e_q_in_PQ,e_q_in_P\n" +
                    csv_row({s(r.P), s(r.Q), s(r.phi_P), s(r.phi_Q), s(r.phi_PQ), s(r.degrees_multiply),
                             s(r.e_p_in_PQ), s(r.e_p_in_Q), s(r.e_q_in_PQ), s(r.e_q_in_P)});
  return {Json(r), text, csv};
}

Json inputs_for(const std::string& command, const Options& o) {
  Json in = Json::object();
  auto put_m = [&] { in["m"] = o.m; };
  if (command == "compositum") {
    in["P"] = o.P;
    in["Q"] = o.Q;
  } else if (command == "verify-cert") {
    in["path"] = o.path;
  } else {
    put_m();
  }
  if (command == "phi") in["algorithm"] = o.algorithm;
  if (command == "factor" || command == "order" || command == "verify-lin" || command == "split" ||
      command == "unramified" || command == "frobenius") {
    in["prime"] = o.prime;
  }
  if (command == "factor" || command == "order" || command == "verify-lin" || command == "split" ||
      command == "frobenius") {
    in["seed"] = o.seed;
  }
  if (command == "certify") in["prime_bound"] = o.prime_bound == 0 ? default_prime_bound(o.m) : o.prime_bound;
  if (command == "artin") in["ideal"] = o.ideal;
  if (command == "chebotarev") {
    in["limit"] = o.limit;
    in["jobs"] = o.jobs;
  }
  return in;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cyclolab: cyclotomic polynomials, Frobenius classes and irreducibility certificates", "cyclolab"};
  app.require_subcommand(1);
  Options o;

  using Handler = std::function<Payload(const Options&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_flag("--timing", o.timing, "Report wall-clock time in JSON output");
    commands.emplace_back(sub, std::move(h));
    return sub;
  };
  auto conductor = [&](CLI::App* sub) {
    sub->add_option("m", o.m, "Conductor m")->required()->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  };
  auto prime = [&](CLI::App* sub) { sub->add_option("--prime", o.prime, "Rational prime p")->required(); };
  auto seed = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "Seed for equal-degree splitting"); };

  {
    auto* c = add("phi", "Cyclotomic polynomial Phi_m", cmd_phi);
    conductor(c);
    c->add_option("--algorithm", o.algorithm, "division, moebius or auto")
        ->check(CLI::IsMember({"division", "moebius", "auto"}));
  }
  conductor(add("tables", "Totient, divisors and Moebius values of m", cmd_tables));
  conductor(add("height", "Largest absolute coefficient of Phi_m", cmd_height));
  {
    auto* c = add("factor", "Factor Phi_m mod p", cmd_factor);
    conductor(c);
    prime(c);
    seed(c);
  }
  {
    auto* c = add("order", "Order of zeta modulo each prime above p", cmd_order);
    conductor(c);
    prime(c);
    seed(c);
  }
  {
    auto* c = add("verify-lin", "Check that zeta keeps order m modulo every prime above p", cmd_verify_primitivity);
    conductor(c);
    prime(c);
    seed(c);
  }
  {
    auto* c = add("unramified", "Derivative criterion for p in Q(zeta_m)", cmd_unramified);
    conductor(c);
    prime(c);
  }
  {
    auto* c = add("split", "Splitting data (e, f, g) of p in Q(zeta_m)", cmd_split);
    conductor(c);
    prime(c);
    seed(c);
  }
  conductor(add("ld1", "Nature of 1 - zeta_m from Phi_m(1)", cmd_one_minus_zeta));
  {
    auto* c = add("certify", "Irreducibility certificate from Frobenius classes", cmd_certify);
    conductor(c);
    c->add_option("--prime-bound", o.prime_bound, "Largest prime scanned (default 10m + 100)")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40U));
  }
  {
    auto* c = add("verify-cert", "Replay a certificate JSON document ('-' for stdin)", cmd_verify_cert);
    c->add_option("file", o.path, "Certificate file")->required();
  }
  {
    auto* c = add("frobenius", "Verified Frobenius class of p mod m", cmd_frobenius);
    conductor(c);
    prime(c);
    seed(c);
  }
  {
    auto* c = add("artin", "Artin symbol of the ideal (a) in Cl_Q{m inf}", cmd_artin);
    conductor(c);
    c->add_option("--ideal", o.ideal, "Integer or fraction n/d, optionally negative")->required();
  }
  conductor(add("unit-group", "Cyclic decomposition of (Z/mZ)^x", cmd_unit_group));
  conductor(add("ray-class", "Ray class group Cl_Q{m inf}", cmd_ray_class));
  {
    auto* c = add("chebotarev", "Tally primes up to N by class mod m", cmd_chebotarev);
    conductor(c);
    c->add_option("--limit", o.limit, "Sieve limit N")->required();
    c->add_option("--jobs", o.jobs, "Number of sieve partitions")->check(CLI::Range(1U, 256U));
  }
  {
    auto* c = add("compositum", "Degree and ramification check for Q(zeta_P) Q(zeta_Q)", cmd_compositum);
    c->add_option("P", o.P, "Prime power P")->required()->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
    c->add_option("Q", o.Q, "Prime power Q")->required()->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    const std::string name = sub->get_name();
    try {
      const auto start = std::chrono::steady_clock::now();
      Payload payload = handler(o);
      const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
      if (o.format == "json") {
        Json envelope{{"schema_version", kSchemaVersion},
                      {"command", name},
                      {"inputs", inputs_for(name, o)},
                      {"result", std::move(payload.result)},
                      {"timing_ms", o.timing ? Json(elapsed.count()) : Json(nullptr)}};
        out << envelope.dump(2) << "\n";
      } else if (o.format == "csv") {
        out << payload.csv;
      } else {
        out << payload.text;
      }
      return kSuccess;
    } catch (const Error& e) {
      err << "cyclolab " << name << ": " << e.what() << "\n";
      return e.kind() == ErrorKind::VerificationFailed ? kVerificationFailure : kDomainError;
    } catch (const std::exception& e) {
      err << "cyclolab " << name << ": internal error: " << e.what() << "\n";
      return kVerificationFailure;
    }
  }
  return kUsageError;
}

}  // namespace cyclolab::cli
