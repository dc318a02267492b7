#pragma once

// JSON encodings (schema "torhyp/1") for fans, divisors, polytopes,
// certificates and verdicts, plus the sweep CSV row format.

#include "torhyp/classify.hpp"

#include <nlohmann/json.hpp>

#include <memory>
#include <string>
#include <vector>

namespace torhyp {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "torhyp/1";

/// Integers that fit in 64 bits become numbers, larger ones strings.
Json int_json(const Int& z);
Json int_vec_json(const IntVec& v);
/// Rationals are always strings: "3", "-7/2".
Json rational_json(const Rational& q);
Json rat_vec_json(const RatVec& v);
Json int_mat_json(const IntMat& m);

/// Accepts a JSON number or a decimal string.
Int int_from_json(const Json& j);
IntVec int_vec_from_json(const Json& j);

/// Adds the top-level "schema" key.
Json with_schema(Json j);

Json to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const Json& j);

/// {case, params, rays, labels, max_cones, collections}; catalog-only keys are
/// omitted for generic fans.
Json to_json(const Fan& fan);
/// Catalog fan when "case" is present, otherwise a generic fan from
/// rays/max_cones (labels optional). ParameterError on malformed input.
Fan fan_from_json(const Json& j);

/// {"coeffs": {label: a}, "class": [...]}
Json to_json(const TDivisor& d);
/// {"coeffs": {label: a}} or {"class": [..]} (class lifted through the Picard basis).
TDivisor divisor_from_json(const std::shared_ptr<const Fan>& fan, const Json& j);

Json to_json(const HPolytope& p);
Json to_json(const Face2& f);
Json to_json(const IdpResult& r);
Json to_json(const FiberCertificate& c);
Json to_json(const ConnectedSectionsReport& r);
Json to_json(const BoundaryProfile& p);
Json to_json(const PositivityCertificate& c);
Json to_json(const ConfigAttempt& a);
Json to_json(const TableLookup& t);
/// The classification report {case, params, coeffs, derived, table, agree}.
Json to_json(const Verdict& v);

/// Sweep CSV header for a case: case,<params>,<coords>,derived,table,agree,ambiguous
std::string sweep_csv_header(CaseId id);
std::string sweep_csv_row(const Verdict& v);

}  // namespace torhyp
