#include "confstudy/dorst.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "confstudy/error.hpp"

namespace confstudy {

namespace {

bool is_zero(const Vec3& v) { return v.x == 0 && v.y == 0 && v.z == 0; }

Vec3 scaled(const Vec3& v, const Rational& s) { return {v.x * s, v.y * s, v.z * s}; }

Multivector einf() { return Multivector::basis(blade::einf); }

// Any nonzero vector orthogonal to n (n != 0).
Vec3 orthogonal_to(const Vec3& n) {
  Vec3 u = cross(n, {1, 0, 0});
  if (is_zero(u)) u = cross(n, {0, 1, 0});
  return u;
}

}  // namespace

LineDirection line_normalize(const FourQuat& q) {
  if (q.is_zero()) throw MathError(ErrorCode::ZeroDirection, "direction is zero");
  if (q.q1.w != 0 || q.q2.w != 0 || !q.q3.is_real()) {
    throw MathError(ErrorCode::NotALine,
                    "q + q~ is not real (need Scal(q1) = Scal(q2) = 0 and Vect(q3) = 0)");
  }
  if (!on_study(q)) {
    throw MathError(ErrorCode::NotOnStudy, "direction is not a point of the Study variety");
  }
  FourQuat normalized = q;
  normalized.q0.w = 0;
  if (normalized.is_zero()) {
    throw MathError(ErrorCode::ZeroDirection, "real element: the line collapses to [1]");
  }
  return LineDirection(std::move(normalized));
}

DecompositionCase decomposition_case(const LineDirection& d) {
  const FourQuat& q = d.q();
  if (!q.q3.is_zero()) return DecompositionCase::Q3Nonzero;
  if (!q.q2.is_zero()) return DecompositionCase::Q3Zero;
  return DecompositionCase::RigidBody;
}

Blade2 wedge_decompose(const LineDirection& d) {
  const FourQuat& q = d.q();
  const Vec3 q0 = q.q0.axis();
  const Vec3 q1 = q.q1.axis();
  const Vec3 q2 = q.q2.axis();

  // a = q_a + a_o e_o + a_inf e_inf, b = q_b + b_inf e_inf (b_o = 0).
  Vec3 qa, qb;
  Rational a_o, a_inf, b_inf;
  switch (decomposition_case(d)) {
    case DecompositionCase::RigidBody:
      if (is_zero(q0)) {
        qa = q1;
        b_inf = 1;
      } else if (!is_zero(q1)) {
        qa = q1;
        b_inf = 1;
        qb = scaled(cross(q1, q0), 1 / dot(q1, q1));
      } else {
        qa = orthogonal_to(q0);
        qb = scaled(cross(qa, q0), 1 / dot(qa, qa));
      }
      break;
    case DecompositionCase::Q3Zero:
      a_o = -1;
      qb = q2;
      a_inf = -dot(q1, q2) / dot(q2, q2);
      qa = scaled(cross(q0, q2), 1 / dot(q2, q2));
      break;
    case DecompositionCase::Q3Nonzero:
      a_o = -1;
      b_inf = q.q3.w;
      qb = q2;
      qa = scaled(q1, 1 / q.q3.w);
      break;
  }
  Blade2 blade{vector(qa, a_o, a_inf), vector(qb, 0, b_inf)};
  if (!(split(wedge2(blade.a, blade.b)) == q)) {
    throw std::logic_error("wedge_decompose: reconstruction mismatch");
  }
  return blade;
}

std::string_view to_string(MotionType kind) {
  switch (kind) {
    case MotionType::ConformalRotation: return "ConformalRotation";
    case MotionType::ConformalScaling: return "ConformalScaling";
    case MotionType::Transversion: return "Transversion";
    case MotionType::EuclideanRotation: return "EuclideanRotation";
    case MotionType::Translation: return "Translation";
    case MotionType::UniformScaling: return "UniformScaling";
  }
  return "Unknown";
}

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::Circular: return "circular";
    case Branch::Linear: return "linear";
    case Branch::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

Branch branch_of(const LineDirection& d) {
  const int s = sign(rotor_norm(d.q()));
  return s > 0 ? Branch::Circular : (s == 0 ? Branch::Linear : Branch::Hyperbolic);
}

MotionType classify_motion(const LineDirection& d) {
  const FourQuat& q = d.q();
  const bool rigid = q.q2.is_zero() && q.q3.is_zero();
  switch (branch_of(d)) {
    case Branch::Circular:
      return rigid ? MotionType::EuclideanRotation : MotionType::ConformalRotation;
    case Branch::Linear:
      return rigid ? MotionType::Translation : MotionType::Transversion;
    case Branch::Hyperbolic:
      break;
  }
  const bool uniform = q.q0.is_real() && q.q1.w == 0 && q.q2.is_zero() && q.q3.is_real();
  return uniform ? MotionType::UniformScaling : MotionType::ConformalScaling;
}

DorstMotion motion_from_blade(const Multivector& a, const Multivector& b) {
  const Multivector w = wedge2(a, b);
  if (w.is_zero()) throw MathError(ErrorCode::DegenerateBlade, "a ^ b = 0");
  LineDirection d = line_normalize(split(w));
  const MotionType kind = classify_motion(d);
  const Branch branch = branch_of(d);
  return {std::move(d), {a, b}, kind, branch};
}

DorstMotion motion_from_direction(const LineDirection& d) {
  return {d, wedge_decompose(d), classify_motion(d), branch_of(d)};
}

FourQuat eval_motion(const DorstMotion& m, const Rational& t) {
  FourQuat r = m.direction.q();
  r.q0.w += t;
  return r;
}

FourQuat eval_motion(const DorstMotion&, AtInfinity) { return FourQuat::one(); }

std::array<double, 16> eval_motion_angle(const DorstMotion& m, double u) {
  double c = 1.0;
  double s = u;
  switch (m.branch) {
    case Branch::Circular:
      c = std::cos(u);
      s = std::sin(u);
      break;
    case Branch::Linear:
      break;
    case Branch::Hyperbolic:
      c = std::cosh(u);
      s = std::sinh(u);
      break;
  }
  const auto q = m.direction.q().coordinates();
  std::array<double, 16> out{};
  for (std::size_t i = 0; i < 16; ++i) out[i] = q[i].get_d() * s;
  out[0] += c;
  return out;
}

std::optional<FourQuat> NullPoint::rational_point() const {
  if (!t.is_rational()) return std::nullopt;
  FourQuat r = q;
  r.q0.w += t.rational;
  return r;
}

std::vector<NullPoint> null_intersections(const LineDirection& d) {
  const Rational norm = rotor_norm(d.q());
  std::vector<NullPoint> out;
  const int s = sign(norm);
  if (s > 0) return out;
  if (s == 0) {
    out.push_back({QuadSurd{}, d.q()});
    return out;
  }
  const Rational radicand = -norm;
  Rational root;
  if (rational_sqrt(radicand, root)) {
    out.push_back({QuadSurd{root, 0, 0}, d.q()});
    out.push_back({QuadSurd{-root, 0, 0}, d.q()});
  } else {
    out.push_back({QuadSurd{0, 1, radicand}, d.q()});
    out.push_back({QuadSurd{0, -1, radicand}, d.q()});
  }
  return out;
}

std::pair<Rational, Rational> null_value_at(const NullPoint& n) {
  const Rational base = null_value(n.q);
  const Rational& a = n.t.rational;
  const Rational& c = n.t.coeff;
  const Rational& w = n.q.q0.w;
  Rational rational_part = base + 2 * a * w + a * a + c * c * n.t.radicand;
  Rational surd_part = 2 * c * w + 2 * a * c;
  return {rational_part, surd_part};
}

Multivector sandwich(const FourQuat& r, const Multivector& v, bool normalize) {
  if (!v.is_vector()) throw MathError(ErrorCode::NotAVector, "sandwich operand");
  const Multivector rm = join(r);
  Multivector image = gp(gp(rm, v), reverse(rm));
  if (normalize) {
    const Rational w = image[blade::eo];
    if (w == 0) {
      throw MathError(ErrorCode::NormalizeAtInfinity, "image has zero e_o coefficient");
    }
    image *= 1 / w;
  }
  return image;
}

Primitive make_primitive(MotionType kind, const PrimitiveParams& params) {
  auto invalid = [](const std::string& what) {
    return MathError(ErrorCode::InvalidParams, what);
  };

  if (const auto* p = std::get_if<BladeParams>(&params)) {
    DorstMotion m = motion_from_blade(p->a, p->b);
    const bool generic_ok =
        (kind == MotionType::ConformalRotation && m.branch == Branch::Circular) ||
        (kind == MotionType::ConformalScaling && m.branch == Branch::Hyperbolic) ||
        (kind == MotionType::Transversion && m.branch == Branch::Linear);
    if (m.kind != kind && !generic_ok) {
      throw invalid("blade generates a " + std::string(to_string(m.kind)) + ", not a " +
                    std::string(to_string(kind)));
    }
    return {std::move(m), std::nullopt};
  }

  switch (kind) {
    case MotionType::EuclideanRotation: {
      const auto* p = std::get_if<RotationParams>(&params);
      if (p == nullptr) throw invalid("rotation needs an axis");
      if (is_zero(p->axis)) throw invalid("rotation axis must be nonzero");
      // Two planes through the axis: normals u and u x n, both orthogonal to n.
      const Vec3 u = orthogonal_to(p->axis);
      const Vec3 w = cross(u, p->axis);
      return {motion_from_blade(vector(u, 0, dot(u, p->point)), vector(w, 0, dot(w, p->point))),
              std::nullopt};
    }
    case MotionType::Translation: {
      const auto* p = std::get_if<TranslationParams>(&params);
      if (p == nullptr) throw invalid("translation needs a displacement");
      if (is_zero(p->displacement)) throw invalid("translation vector must be nonzero");
      // 1 - (v/2) eps1 translates by v.
      FourQuat q;
      q.q1 = Quaternion::pure(scaled(p->displacement, Rational(-1, 2)));
      return {motion_from_direction(line_normalize(q)), Rational(1)};
    }
    case MotionType::UniformScaling: {
      const auto* p = std::get_if<UniformScalingParams>(&params);
      if (p == nullptr) throw invalid("uniform scaling needs a center and factor");
      if (sign(p->factor) <= 0 || p->factor == 1) {
        throw invalid("scaling factor must be positive and different from 1");
      }
      // (t + q) with q = center ^ e_inf scales by (t + 1)/(t - 1).
      Rational t = (p->factor + 1) / (p->factor - 1);
      return {motion_from_blade(embed_point(p->center), einf()), std::move(t)};
    }
    case MotionType::Transversion: {
      const auto* p = std::get_if<TransversionParams>(&params);
      if (p == nullptr) throw invalid("transversion needs a point and a plane normal");
      if (is_zero(p->plane_normal)) throw invalid("plane normal must be nonzero");
      // The plane through the point with the given normal is perpendicular to it.
      const Multivector b = vector(p->plane_normal, 0, dot(p->point, p->plane_normal));
      return {motion_from_blade(embed_point(p->point), b), std::nullopt};
    }
    case MotionType::ConformalRotation:
    case MotionType::ConformalScaling:
      throw invalid("generic conformal motions are given by an explicit vector pair");
  }
  throw invalid("unknown motion type");
}

std::vector<TrajectorySample> trajectory(const DorstMotion& m, const Vec3& p0,
                                         std::span<const Rational> samples, unsigned threads) {
  if (samples.empty()) throw MathError(ErrorCode::InvalidParams, "no sample parameters");
  std::vector<TrajectorySample> out(samples.size());
  const Multivector point = embed_point(p0);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      out[i].t = samples[i];
      try {
        out[i].image = classify_vector(sandwich(eval_motion(m, samples[i]), point));
      } catch (const MathError& e) {
        out[i].error = std::string(to_string(e.code()));
      }
    }
  };

  const std::size_t n = samples.size();
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
  if (workers == 1) {
    work(0, n);
    return out;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    pool.emplace_back(work, begin, std::min(n, begin + chunk));
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace confstudy
