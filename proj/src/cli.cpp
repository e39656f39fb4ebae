#include "confstudy/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "confstudy/error.hpp"
#include "confstudy/json_io.hpp"

namespace confstudy {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) items.push_back(item);
  return items;
}

Vec3 parse_point(const std::string& text) {
  const auto parts = split_list(text);
  if (parts.size() != 3) throw SchemaError("--point expects x,y,z, got \"" + text + "\"");
  return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
}

unsigned thread_count() {
  const char* env = std::getenv("CONFSTUDY_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const long n = std::stol(env, &used);
    if (used == std::string(env).size() && n >= 0) return static_cast<unsigned>(n);
  } catch (const std::exception&) {
  }
  throw SchemaError(std::string("CONFSTUDY_THREADS must be a non-negative integer, got ") + env);
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json classify(const FourQuat& q) {
  const bool study = on_study(q);
  const auto residual = ideal_generators(q);
  Json values = Json::array(), labels = Json::array();
  for (std::size_t i = 0; i < StudyResidual::kCount; ++i) {
    values.push_back(rational_to_json(residual.values[i]));
    labels.push_back(std::string(StudyResidual::labels()[i]));
  }
  Json out{{"on_study", study},
           {"generators", values},
           {"generator_labels", labels},
           {"null_value", rational_to_json(null_value(q))}};
  out["norm"] = study ? rational_to_json(rotor_norm(q)) : Json(nullptr);
  Json groups = Json::array();
  for (GroupTag tag : kAllGroups) {
    try {
      if (subgroup_member(q, tag)) groups.push_back(std::string(to_string(tag)));
    } catch (const MathError&) {
    }
  }
  out["subgroups"] = groups;
  try {
    const auto d = line_normalize(q);
    out["motion_type"] = std::string(to_string(classify_motion(d)));
    out["branch"] = std::string(to_string(branch_of(d)));
  } catch (const MathError&) {
  }
  return out;
}

std::string_view case_name(DecompositionCase c) {
  switch (c) {
    case DecompositionCase::RigidBody: return "RigidBody";
    case DecompositionCase::Q3Zero: return "Q3Zero";
    case DecompositionCase::Q3Nonzero: return "Q3Nonzero";
  }
  return "Unknown";
}

Json decompose(const FourQuat& q) {
  const auto d = line_normalize(q);
  const DorstMotion m = motion_from_direction(d);
  Json out{{"direction", fourquat_to_json(d.q())},
           {"case", std::string(case_name(decomposition_case(d)))},
           {"kind", std::string(to_string(m.kind))},
           {"branch", std::string(to_string(m.branch))}};
  out["blade"] = {{"a", multivector_to_json(m.blade.a)}, {"b", multivector_to_json(m.blade.b)}};
  return out;
}

Json act(const FourQuat& r, const Vec3& p, bool normalize) {
  const Multivector image = sandwich(r, embed_point(p), normalize);
  return Json{{"image", multivector_to_json(image)},
              {"kind", vector_kind_to_json(classify_vector(image))}};
}

Json mul(const Json& a, const Json& b) {
  const DocumentKind ka = detect_kind(a), kb = detect_kind(b);
  if (ka != kb) throw SchemaError("mul operands must be documents of the same kind");
  switch (ka) {
    case DocumentKind::Multivector:
      return multivector_to_json(gp(multivector_from_json(a), multivector_from_json(b)));
    case DocumentKind::FourQuat:
      return fourquat_to_json(fq_mul(fourquat_from_json(a), fourquat_from_json(b)));
    case DocumentKind::Poly:
      return rotor_poly_to_json(poly_mul(rotor_poly_from_json(a), rotor_poly_from_json(b)));
    case DocumentKind::Motion:
      break;
  }
  throw SchemaError("mul accepts multivectors, four-quaternions or polynomials");
}

struct TrajectoryRow {
  std::string t_exact;
  std::optional<Rational> t;
  std::optional<VectorKind> image;
  std::string error;
};

std::vector<TrajectoryRow> run_trajectory(const DorstMotion& m, const Vec3& p,
                                          const std::vector<std::string>& ts, unsigned threads) {
  std::vector<Rational> finite;
  for (const auto& t : ts) {
    if (t != "inf") finite.push_back(parse_rational(t));
  }
  std::vector<TrajectorySample> samples;
  if (!finite.empty()) samples = trajectory(m, p, finite, threads == 0 ? 1 : threads);
  std::vector<TrajectoryRow> rows;
  std::size_t next = 0;
  for (const auto& t : ts) {
    TrajectoryRow row;
    if (t == "inf") {
      row.t_exact = "inf";
      row.image = classify_vector(sandwich(eval_motion(m, AtInfinity{}), embed_point(p)));
    } else {
      const auto& s = samples[next++];
      row.t = s.t;
      row.t_exact = to_string(s.t);
      row.image = s.image;
      row.error = s.error;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_csv(std::ostream& csv, const std::vector<TrajectoryRow>& rows, bool exact) {
  auto render = [exact](const Rational& r) { return exact ? to_string(r) : to_decimal(r); };
  csv << "t,x,y,z,kind\n";
  for (const auto& row : rows) {
    csv << (row.t ? render(*row.t) : row.t_exact) << ',';
    if (row.image && row.image->tag == VectorTag::FinitePoint) {
      const Vec3& x = row.image->position;
      csv << render(x.x) << ',' << render(x.y) << ',' << render(x.z) << ',';
    } else {
      csv << ",,,";
    }
    csv << (row.image ? std::string(to_string(row.image->tag)) : row.error) << '\n';
  }
}

Json rows_to_json(const std::vector<TrajectoryRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json entry{{"t", row.t_exact}};
    if (row.image) {
      entry["image"] = vector_kind_to_json(*row.image);
    } else {
      entry["error"] = row.error;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

void report(std::ostream& err, std::string_view code, const std::string& detail) {
  err << Json{{"error", code}, {"detail", detail}}.dump() << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact conformal kinematics on the Study variety", "confstudy"};
  app.require_subcommand(1);

  std::string input, input_b, point, t_list, csv_path;
  bool normalize = false, exact = false;
  std::optional<std::size_t> require_count;

  auto* classify_cmd = app.add_subcommand("classify", "Study variety membership and invariants");
  classify_cmd->add_option("element", input, "multivector or four-quaternion JSON")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Blade a ^ b of a line direction");
  decompose_cmd->add_option("element", input, "multivector or four-quaternion JSON")->required();

  auto* factor_cmd = app.add_subcommand("factor", "Factorizations of a rotor polynomial");
  factor_cmd->add_option("poly", input, "polynomial JSON")->required();
  factor_cmd->add_option("--require-count", require_count, "expected number of factorizations");

  auto* act_cmd = app.add_subcommand("act", "Image of a point under a rotor");
  act_cmd->add_option("rotor", input, "multivector or four-quaternion JSON")->required();
  act_cmd->add_option("--point", point, "x,y,z")->required();
  act_cmd->add_flag("--normalize", normalize, "scale the image to unit e_o weight");

  auto* mul_cmd = app.add_subcommand("mul", "Product of two documents of the same kind");
  mul_cmd->add_option("a", input, "left factor")->required();
  mul_cmd->add_option("b", input_b, "right factor")->required();

  auto* traj_cmd = app.add_subcommand("trajectory", "Images of a point along a Dorst motion");
  traj_cmd->add_option("motion", input, "motion JSON")->required();
  traj_cmd->add_option("--point", point, "x,y,z")->required();
  traj_cmd->add_option("--t", t_list, "comma separated parameters (rationals or inf)")->required();
  traj_cmd->add_option("--csv", csv_path, "also write t,x,y,z,kind rows to this file");
  traj_cmd->add_flag("--exact", exact, "write p/q instead of decimals to the CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (classify_cmd->parsed()) {
      print(out, classify(element_from_json(read_json_file(input))));
    } else if (decompose_cmd->parsed()) {
      print(out, decompose(element_from_json(read_json_file(input))));
    } else if (factor_cmd->parsed()) {
      const RotorPoly c = rotor_poly_from_json(read_json_file(input));
      const auto result = factorize_detailed(c, thread_count());
      for (const auto& s : result.skipped) {
        Json quads = Json::array();
        for (const auto& q : s.quadratics) quads.push_back(real_poly_to_json(q));
        err << Json{{"skipped", quads},
                    {"index", s.index},
                    {"remainder", rotor_poly_to_json(s.remainder)},
                    {"reason", s.reason}}
                   .dump()
            << '\n';
      }
      print(out, factorizations_to_json(result.factorizations));
      if (require_count && *require_count != result.factorizations.size()) {
        report(err, to_string(ErrorCode::CountMismatch),
               "expected " + std::to_string(*require_count) + " factorizations, found " +
                   std::to_string(result.factorizations.size()));
        return 2;
      }
    } else if (act_cmd->parsed()) {
      print(out, act(element_from_json(read_json_file(input)), parse_point(point), normalize));
    } else if (mul_cmd->parsed()) {
      print(out, mul(read_json_file(input), read_json_file(input_b)));
    } else if (traj_cmd->parsed()) {
      const DorstMotion m = motion_from_json(read_json_file(input));
      const auto ts = split_list(t_list);
      if (ts.empty()) throw SchemaError("--t needs at least one parameter");
      const auto rows = run_trajectory(m, parse_point(point), ts, thread_count());
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv) throw SchemaError("cannot write " + csv_path);
        write_csv(csv, rows, exact);
      }
      print(out, rows_to_json(rows));
    }
  } catch (const SchemaError& e) {
    report(err, "SchemaError", e.what());
    return 1;
  } catch (const MathError& e) {
    report(err, to_string(e.code()), e.detail());
    return 2;
  }
  return 0;
}

}  // namespace confstudy
