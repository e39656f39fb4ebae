#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "confstudy/fourquat.hpp"
#include "confstudy/multivector.hpp"
#include "confstudy/study.hpp"

namespace confstudy {

// Direction q of a straight line t + q on the Study variety through [1],
// normalized so that q + q~ = 0.
class LineDirection {
 public:
  const FourQuat& q() const { return q_; }

  friend LineDirection line_normalize(const FourQuat& q);
  friend bool operator==(const LineDirection&, const LineDirection&) = default;

 private:
  explicit LineDirection(FourQuat q) : q_(std::move(q)) {}
  FourQuat q_;
};

// Accepts q with [q] on the variety and q + q~ real, i.e. Scal(q1) = Scal(q2)
// = 0 and Vect(q3) = 0, and subtracts Scal(q0).
// Throws NotALine, NotOnStudy, or ZeroDirection (q is real, so the "line"
// degenerates to the point [1]).
LineDirection line_normalize(const FourQuat& q);

// Two vectors with wedge2(a, b) = q.
struct Blade2 {
  Multivector a;
  Multivector b;
};

// RigidBody: q2 = q3 = 0. Q3Zero: q3 = 0, q2 != 0. Q3Nonzero: q3 != 0.
enum class DecompositionCase { RigidBody, Q3Zero, Q3Nonzero };

enum class MotionType {
  ConformalRotation,
  ConformalScaling,
  Transversion,
  EuclideanRotation,
  Translation,
  UniformScaling,
};

std::string_view to_string(MotionType kind);

// circular: q q~ > 0, linear: q q~ = 0, hyperbolic: q q~ < 0.
enum class Branch { Circular, Linear, Hyperbolic };

std::string_view to_string(Branch branch);

struct DorstMotion {
  LineDirection direction;
  Blade2 blade;
  MotionType kind;
  Branch branch;
};

// Constructive wedge decomposition, b_o = 0 throughout. Free choices are fixed:
//  RigidBody: a_o = 0, q_a = q1 with b_inf = 1 (q_a = q0 x e_x, or q0 x e_y,
//    when q1 = 0); planes a, b.
//  Q3Zero: a_o = -1, b_inf = 0, q_b = q2, q_a orthogonal to q2.
//  Q3Nonzero: a_o = -1, b_inf = q3, q_b = q2, a_inf = 0.
Blade2 wedge_decompose(const LineDirection& d);

// Which branch of the case analysis wedge_decompose takes for d.
DecompositionCase decomposition_case(const LineDirection& d);

Branch branch_of(const LineDirection& d);
MotionType classify_motion(const LineDirection& d);

// Throws NotAVector or DegenerateBlade (a ^ b = 0).
DorstMotion motion_from_blade(const Multivector& a, const Multivector& b);

DorstMotion motion_from_direction(const LineDirection& d);

// t + q.
FourQuat eval_motion(const DorstMotion& m, const Rational& t);

struct AtInfinity {};
// The limit |t| -> infinity: the identity class [1].
FourQuat eval_motion(const DorstMotion& m, AtInfinity);

// Floating-point view of the transcendental parametrizations
// cos u + q sin u, 1 + q u, cosh u + q sinh u (for plotting only).
// Coordinates are in FourQuat::coordinates() order.
std::array<double, 16> eval_motion_angle(const DorstMotion& m, double u);

// a + c sqrt(radicand), radicand > 0 and not a rational square.
struct QuadSurd {
  Rational rational;
  Rational coeff;
  Rational radicand;

  bool is_rational() const { return coeff == 0; }
  friend bool operator==(const QuadSurd&, const QuadSurd&) = default;
};

// Intersection t + q of the line with the null quadric.
struct NullPoint {
  QuadSurd t;
  FourQuat q;

  // Exact representative when t is rational.
  std::optional<FourQuat> rational_point() const;
};

// Solutions of t^2 + rotor_norm(q) = 0: none, the double point t = 0, or
// t = +-sqrt(-rotor_norm(q)) (larger root first).
std::vector<NullPoint> null_intersections(const LineDirection& d);

// null_value of t + q evaluated exactly in Q(sqrt(radicand)). Both parts of
// the result are returned as (rational, coefficient of sqrt(radicand)).
std::pair<Rational, Rational> null_value_at(const NullPoint& n);

// r v r~ for a vector v. When `normalize` is set the result is scaled so its
// e_o coefficient is 1 (throws NormalizeAtInfinity if that coefficient is 0).
Multivector sandwich(const FourQuat& r, const Multivector& v, bool normalize = false);

struct RotationParams {
  Vec3 axis;
  Vec3 point;  // any point on the axis
};
struct TranslationParams {
  Vec3 displacement;
};
struct UniformScalingParams {
  Vec3 center;
  Rational factor;  // > 0, != 1
};
struct TransversionParams {
  Vec3 point;
  Vec3 plane_normal;
};
// Generic conformal rotation or scaling from an explicit pair of vectors.
struct BladeParams {
  Multivector a;
  Multivector b;
};
using PrimitiveParams = std::variant<RotationParams, TranslationParams, UniformScalingParams,
                                     TransversionParams, BladeParams>;

struct Primitive {
  DorstMotion motion;
  // Parameter value on t + q realizing the requested finite displacement,
  // when the primitive fixes one (translation by `displacement`, scaling by
  // `factor`).
  std::optional<Rational> t;
};

// Throws InvalidParams when the parameters do not fit the requested kind.
Primitive make_primitive(MotionType kind, const PrimitiveParams& params);

struct TrajectorySample {
  Rational t;
  std::optional<VectorKind> image;  // set on success
  std::string error;                // error code otherwise
};

// Images of p0 under eval_motion(m, t) for each t. Failures are recorded per
// sample; the batch never aborts.
std::vector<TrajectorySample> trajectory(const DorstMotion& m, const Vec3& p0,
                                         std::span<const Rational> samples,
                                         unsigned threads = 1);

}  // namespace confstudy
