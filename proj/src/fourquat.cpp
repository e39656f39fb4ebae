#include "confstudy/fourquat.hpp"

#include "confstudy/error.hpp"

namespace confstudy {

namespace {

constexpr BladeMask kE12 = blade::e1 | blade::e2;
constexpr BladeMask kE13 = blade::e1 | blade::e3;
constexpr BladeMask kE23 = blade::e2 | blade::e3;
constexpr BladeMask kE123 = blade::e1 | blade::e2 | blade::e3;
constexpr BladeMask kOI = blade::eo | blade::einf;

}  // namespace

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  w += o.w;
  x += o.x;
  y += o.y;
  z += o.z;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  w -= o.w;
  x -= o.x;
  y -= o.y;
  z -= o.z;
  return *this;
}

Quaternion& Quaternion::operator*=(const Rational& s) {
  w *= s;
  x *= s;
  y *= s;
  z *= s;
  return *this;
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Rational study_form(const Quaternion& f, const Quaternion& g) {
  return 2 * (f.w * g.w + f.x * g.x + f.y * g.y + f.z * g.z);
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Rational dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

std::array<Rational, 16> FourQuat::coordinates() const {
  return {q0.w, q0.x, q0.y, q0.z, q1.w, q1.x, q1.y, q1.z,
          q2.w, q2.x, q2.y, q2.z, q3.w, q3.x, q3.y, q3.z};
}

FourQuat FourQuat::from_coordinates(const std::array<Rational, 16>& c) {
  return {{c[0], c[1], c[2], c[3]},
          {c[4], c[5], c[6], c[7]},
          {c[8], c[9], c[10], c[11]},
          {c[12], c[13], c[14], c[15]}};
}

FourQuat& FourQuat::operator+=(const FourQuat& o) {
  q0 += o.q0;
  q1 += o.q1;
  q2 += o.q2;
  q3 += o.q3;
  return *this;
}

FourQuat& FourQuat::operator-=(const FourQuat& o) {
  q0 -= o.q0;
  q1 -= o.q1;
  q2 -= o.q2;
  q3 -= o.q3;
  return *this;
}

FourQuat& FourQuat::operator*=(const Rational& s) {
  q0 *= s;
  q1 *= s;
  q2 *= s;
  q3 *= s;
  return *this;
}

// With outer-product blades eps3 = e_inf ^ e_o = -e_oi, so every group is a
// plain regrouping of coordinates.
FourQuat split(const Multivector& m) {
  if (!m.is_even()) throw MathError(ErrorCode::NotEven, "element has odd-grade terms");
  const auto c = [&](BladeMask b) -> const Rational& { return m[b]; };
  FourQuat q;
  q.q0 = {c(blade::scalar), -c(kE23), c(kE13), -c(kE12)};
  q.q1 = {c(kE123 | blade::einf), c(blade::e1 | blade::einf), c(blade::e2 | blade::einf),
          c(blade::e3 | blade::einf)};
  q.q2 = {c(kE123 | blade::eo), c(blade::e1 | blade::eo), c(blade::e2 | blade::eo),
          c(blade::e3 | blade::eo)};
  q.q3 = {-c(kOI), c(kE23 | kOI), -c(kE13 | kOI), c(kE12 | kOI)};
  return q;
}

Multivector join(const FourQuat& fq) {
  Multivector m;
  m[blade::scalar] = fq.q0.w;
  m[kE23] = -fq.q0.x;
  m[kE13] = fq.q0.y;
  m[kE12] = -fq.q0.z;

  m[kE123 | blade::einf] = fq.q1.w;
  m[blade::e1 | blade::einf] = fq.q1.x;
  m[blade::e2 | blade::einf] = fq.q1.y;
  m[blade::e3 | blade::einf] = fq.q1.z;

  m[kE123 | blade::eo] = fq.q2.w;
  m[blade::e1 | blade::eo] = fq.q2.x;
  m[blade::e2 | blade::eo] = fq.q2.y;
  m[blade::e3 | blade::eo] = fq.q2.z;

  m[kOI] = -fq.q3.w;
  m[kE23 | kOI] = fq.q3.x;
  m[kE13 | kOI] = -fq.q3.y;
  m[kE12 | kOI] = fq.q3.z;
  return m;
}

FourQuat fq_mul(const FourQuat& p, const FourQuat& s) {
  FourQuat r;
  r.q0 = p.q0 * s.q0 - p.q1 * s.q2 - p.q2 * s.q1 + p.q3 * s.q3;
  r.q1 = p.q1 * (s.q0 + s.q3) + (p.q0 - p.q3) * s.q1;
  r.q2 = p.q2 * (s.q0 - s.q3) + (p.q0 + p.q3) * s.q2;
  r.q3 = p.q0 * s.q3 + p.q1 * s.q2 - p.q2 * s.q1 + p.q3 * s.q0;
  return r;
}

FourQuat fq_reverse(const FourQuat& q) {
  return {q.q0.conj(), q.q1.conj(), q.q2.conj(), -q.q3.conj()};
}

FourQuat dq_embed(const Quaternion& primal, const Quaternion& dual) {
  return {primal, dual, {}, {}};
}

}  // namespace confstudy
