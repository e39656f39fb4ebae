#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "confstudy/dorst.hpp"
#include "confstudy/fourquat.hpp"
#include "confstudy/multivector.hpp"
#include "confstudy/rotor_poly.hpp"

namespace confstudy {

using Json = nlohmann::ordered_json;

// Every reader throws SchemaError on malformed input.

Json rational_to_json(const Rational& r);
// Accepts "p", "p/q" or a JSON integer.
Rational rational_from_json(const Json& j);

Json multivector_to_json(const Multivector& m);
Multivector multivector_from_json(const Json& j);

Json fourquat_to_json(const FourQuat& q);
FourQuat fourquat_from_json(const Json& j);

// Coefficients may be given as FourQuat or as even multivectors.
Json rotor_poly_to_json(const RotorPoly& p);
RotorPoly rotor_poly_from_json(const Json& j);

// Ascending rational coefficients.
Json real_poly_to_json(const RealPoly& p);
RealPoly real_poly_from_json(const Json& j);

// {"blade": {"a", "b"}} when the motion came from a blade, else
// {"direction": ...}.
Json motion_to_json(const DorstMotion& m);
DorstMotion motion_from_json(const Json& j);

Json vector_kind_to_json(const VectorKind& k);

Json factorizations_to_json(const std::vector<Factorization>& fs);

enum class DocumentKind { Multivector, FourQuat, Poly, Motion };

DocumentKind detect_kind(const Json& j);

// Even multivector or FourQuat document, as a FourQuat.
FourQuat element_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);

}  // namespace confstudy
