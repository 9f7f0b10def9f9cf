#pragma once

// JSON forms of every CLI payload. Polynomials are degree-ascending arrays of
// decimal strings since coefficients may exceed 64 bits.

#include <json.hpp>

#include "cyclolab/cyclotomic.hpp"
#include "cyclolab/galois_artin.hpp"
#include "cyclolab/residue_fields.hpp"
#include "cyclolab/splitting_lab.hpp"

namespace cyclolab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

/// Orders of zeta modulo each prime above p.
struct OrderReport {
  std::uint64_t m = 1;
  std::uint64_t p = 2;
  std::uint64_t f = 1;
  std::vector<ModPolynomial> factors;
  std::vector<std::uint64_t> orders;

  friend bool operator==(const OrderReport&, const OrderReport&) = default;
};

struct HeightReport {
  std::uint64_t m = 1;
  Integer height;

  friend bool operator==(const HeightReport&, const HeightReport&) = default;
};

Json poly_to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const Json& j);
Json residues_to_json(const ModPolynomial& p);
ModPolynomial residues_from_json(const Json& j, std::uint64_t p);

void to_json(Json& j, const CycloPoly& v);
void from_json(const Json& j, CycloPoly& v);
void to_json(Json& j, const ArithmeticTables& v);
void from_json(const Json& j, ArithmeticTables& v);
void to_json(Json& j, const HeightReport& v);
void from_json(const Json& j, HeightReport& v);
void to_json(Json& j, const ResidueFactorization& v);
void from_json(const Json& j, ResidueFactorization& v);
void to_json(Json& j, const OrderReport& v);
void from_json(const Json& j, OrderReport& v);
void to_json(Json& j, const PrimitivityReport& v);
void from_json(const Json& j, PrimitivityReport& v);
void to_json(Json& j, const UnramifiedWitness& v);
void from_json(const Json& j, UnramifiedWitness& v);
void to_json(Json& j, const CyclicComponent& v);
void from_json(const Json& j, CyclicComponent& v);
void to_json(Json& j, const UnitGroupModM& v);
void from_json(const Json& j, UnitGroupModM& v);
void to_json(Json& j, const FrobeniusClass& v);
void from_json(const Json& j, FrobeniusClass& v);
void to_json(Json& j, const CheckRecord& v);
void from_json(const Json& j, CheckRecord& v);
void to_json(Json& j, const IrreducibilityCertificate& v);
void from_json(const Json& j, IrreducibilityCertificate& v);
void to_json(Json& j, const RayClassElement& v);
void from_json(const Json& j, RayClassElement& v);
void to_json(Json& j, const RayClassGroup& v);
void from_json(const Json& j, RayClassGroup& v);
void to_json(Json& j, const SplittingData& v);
void from_json(const Json& j, SplittingData& v);
void to_json(Json& j, const OneMinusZetaVerdict& v);
void from_json(const Json& j, OneMinusZetaVerdict& v);
void to_json(Json& j, const CompositumReport& v);
void from_json(const Json& j, CompositumReport& v);
void to_json(Json& j, const ChebotarevTally& v);
void from_json(const Json& j, ChebotarevTally& v);

}  // namespace cyclolab
