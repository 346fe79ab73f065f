#pragma once

#include "twinrow/characters.hpp"
#include "twinrow/diffops.hpp"
#include "twinrow/partitions.hpp"
#include "twinrow/polynomial.hpp"

#include <json.hpp>

namespace twinrow {

using Json = nlohmann::json;

/// [{"exponents": [...], "coeff": "<decimal>"}, ...] in descending graded-lex order.
Json to_json(const XPolynomial& p);
Json to_json(const ZPolynomial& p);

/// [{"partition": [...], "coefficient": "<decimal>"}, ...] in canonical partition order.
Json to_json(const SchurExpansion& e);

Json to_json(const Partition& p);
Json to_json(const FrobeniusCoordinates& fc);
Json to_json(const VerificationReport& r);

XPolynomial x_polynomial_from_json(const Json& j, std::size_t nvars);
ZPolynomial z_polynomial_from_json(const Json& j, std::size_t nvars);
SchurExpansion schur_expansion_from_json(const Json& j);

} // namespace twinrow
