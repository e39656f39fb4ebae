#include "confstudy/json_io.hpp"

#include <fstream>

#include "confstudy/error.hpp"

namespace confstudy {

namespace {

[[noreturn]] void bad(const std::string& what) { throw SchemaError(what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

void only_keys(const Json& j, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* allowed : keys) known = known || k == allowed;
    if (!known) bad("unexpected key \"" + k + "\"");
  }
}

Quaternion quaternion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) bad("quaternion must be an array of 4 rationals");
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]),
          rational_from_json(j[3])};
}

Json quaternion_to_json(const Quaternion& q) {
  return Json::array({rational_to_json(q.w), rational_to_json(q.x), rational_to_json(q.y),
                      rational_to_json(q.z)});
}

Json vec3_to_json(const Vec3& v) {
  return Json::array({rational_to_json(v.x), rational_to_json(v.y), rational_to_json(v.z)});
}

}  // namespace

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  bad("rational must be a string \"p\" or \"p/q\", got " + j.dump());
}

Json multivector_to_json(const Multivector& m) {
  Json blades = Json::object();
  for (BladeMask mask : canonical_blade_order()) {
    if (m[mask] != 0) blades[blade_key(mask)] = rational_to_json(m[mask]);
  }
  return Json{{"blades", blades}};
}

Multivector multivector_from_json(const Json& j) {
  if (!j.is_object()) bad("multivector must be an object");
  only_keys(j, {"blades"});
  const Json& blades = member(j, "blades");
  if (!blades.is_object()) bad("\"blades\" must be an object");
  Multivector m;
  for (const auto& [key, value] : blades.items()) {
    const auto mask = parse_blade_key(key);
    if (!mask) bad("invalid blade key \"" + key + "\"");
    m += Multivector::basis(*mask, rational_from_json(value));
  }
  return m;
}

Json fourquat_to_json(const FourQuat& q) {
  return Json{{"q0", quaternion_to_json(q.q0)},
              {"q1", quaternion_to_json(q.q1)},
              {"q2", quaternion_to_json(q.q2)},
              {"q3", quaternion_to_json(q.q3)}};
}

FourQuat fourquat_from_json(const Json& j) {
  if (!j.is_object()) bad("four-quaternion must be an object");
  only_keys(j, {"q0", "q1", "q2", "q3"});
  return {quaternion_from_json(member(j, "q0")), quaternion_from_json(member(j, "q1")),
          quaternion_from_json(member(j, "q2")), quaternion_from_json(member(j, "q3"))};
}

FourQuat element_from_json(const Json& j) {
  switch (detect_kind(j)) {
    case DocumentKind::FourQuat:
      return fourquat_from_json(j);
    case DocumentKind::Multivector:
      return split(multivector_from_json(j));
    default:
      bad("expected a multivector or four-quaternion document");
  }
}

Json rotor_poly_to_json(const RotorPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(fourquat_to_json(c));
  return Json{{"coeffs", coeffs}};
}

RotorPoly rotor_poly_from_json(const Json& j) {
  if (!j.is_object()) bad("polynomial must be an object");
  only_keys(j, {"coeffs"});
  const Json& coeffs = member(j, "coeffs");
  if (!coeffs.is_array()) bad("\"coeffs\" must be an array");
  std::vector<FourQuat> out;
  for (const auto& c : coeffs) out.push_back(element_from_json(c));
  return RotorPoly(std::move(out));
}

Json real_poly_to_json(const RealPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(rational_to_json(c));
  return out;
}

RealPoly real_poly_from_json(const Json& j) {
  if (!j.is_array()) bad("real polynomial must be an array of rationals");
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(rational_from_json(v));
  return RealPoly(std::move(c));
}

Json motion_to_json(const DorstMotion& m) {
  return Json{{"blade",
               {{"a", multivector_to_json(m.blade.a)}, {"b", multivector_to_json(m.blade.b)}}}};
}

DorstMotion motion_from_json(const Json& j) {
  if (!j.is_object()) bad("motion must be an object");
  if (j.contains("blade")) {
    only_keys(j, {"blade"});
    const Json& blade = member(j, "blade");
    only_keys(blade, {"a", "b"});
    return motion_from_blade(multivector_from_json(member(blade, "a")),
                             multivector_from_json(member(blade, "b")));
  }
  only_keys(j, {"direction"});
  return motion_from_direction(line_normalize(element_from_json(member(j, "direction"))));
}

Json vector_kind_to_json(const VectorKind& k) {
  Json out{{"type", std::string(to_string(k.tag))}};
  switch (k.tag) {
    case VectorTag::PointAtInfinity:
      out["weight"] = rational_to_json(k.weight);
      break;
    case VectorTag::Plane:
      out["normal"] = vec3_to_json(k.position);
      out["offset"] = rational_to_json(k.offset);
      break;
    case VectorTag::FinitePoint:
      out["position"] = vec3_to_json(k.position);
      out["weight"] = rational_to_json(k.weight);
      break;
    case VectorTag::RealSphere:
    case VectorTag::ImaginarySphere:
      out["center"] = vec3_to_json(k.position);
      out["radius_sq"] = rational_to_json(k.radius_sq);
      out["weight"] = rational_to_json(k.weight);
      break;
  }
  return out;
}

Json factorizations_to_json(const std::vector<Factorization>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) {
    Json quads = Json::array(), factors = Json::array(), kinds = Json::array();
    for (const auto& q : f.quadratics) quads.push_back(real_poly_to_json(q));
    for (const auto& h : f.factors) {
      factors.push_back(fourquat_to_json(h));
      try {
        kinds.push_back(std::string(to_string(classify_motion(line_normalize(h)))));
      } catch (const MathError& e) {
        kinds.push_back(std::string(to_string(e.code())));
      }
    }
    Json entry{{"quadratics", quads}, {"factors", factors}, {"kinds", kinds}};
    if (f.leading != FourQuat::one()) entry["leading"] = fourquat_to_json(f.leading);
    out.push_back(std::move(entry));
  }
  return out;
}

DocumentKind detect_kind(const Json& j) {
  if (!j.is_object()) bad("document must be a JSON object");
  if (j.contains("blades")) return DocumentKind::Multivector;
  if (j.contains("q0")) return DocumentKind::FourQuat;
  if (j.contains("coeffs")) return DocumentKind::Poly;
  if (j.contains("blade") || j.contains("direction")) return DocumentKind::Motion;
  bad("unrecognized document; expected one of blades, q0..q3, coeffs, blade, direction");
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad(path.string() + ": " + e.what());
  }
}

}  // namespace confstudy
