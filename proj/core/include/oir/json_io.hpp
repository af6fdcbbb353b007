#pragma once

#include <string>

#include <json.hpp>

#include "oir/family.hpp"
#include "oir/free_complex.hpp"

namespace oir {

inline constexpr const char* kSchemaTag = "oi-resolve/1";

nlohmann::json to_json(const OIMorphism& eps);
nlohmann::json to_json(const Monomial& m);
nlohmann::json to_json(const AlgebraSignature& signature);
nlohmann::json to_json(const MonomialSum& sum);
nlohmann::json to_json(const MonomialOIIdeal& ideal);
nlohmann::json to_json(const BoxComplex& complex);
nlohmann::json to_json(const GradedFreeComplex& cplx);
nlohmann::json to_json(const FreeOIComplex& cplx);

OIMorphism morphism_from_json(const nlohmann::json& j);
Monomial monomial_from_json(const nlohmann::json& j);
AlgebraSignature signature_from_json(const nlohmann::json& j);
MonomialSum monomial_sum_from_json(const nlohmann::json& j, int width);
MonomialOIIdeal ideal_from_json(const nlohmann::json& j);
GradedFreeComplex graded_complex_from_json(const nlohmann::json& j);
FreeOIComplex free_complex_from_json(const nlohmann::json& j);

/// Digit-string shorthand for a morphism ("357" for 1->3, 2->5, 3->7);
/// accepted only when all values are single digits. The target width
/// defaults to the largest value unless given.
OIMorphism parse_morphism_shorthand(const std::string& text, int target_width = -1);

/// One-row monomial shorthand: "x1*x2*x4", optionally with exponents as in
/// "x1^3".
Monomial parse_monomial_shorthand(const std::string& text, int width);

/// Line-oriented dump of all differentials, one
/// "level row col coeff monomial" line per term, for diffing against other
/// systems.
std::string matrix_dump_text(const GradedFreeComplex& cplx);

} // namespace oir
