#pragma once

#include <array>

#include "confstudy/multivector.hpp"
#include "confstudy/rational.hpp"

namespace confstudy {

// w + x i + y j + z k with Hamilton relations i^2 = j^2 = k^2 = ijk = -1.
struct Quaternion {
  Rational w, x, y, z;

  static Quaternion real(const Rational& s) { return {s, 0, 0, 0}; }
  static Quaternion pure(const Vec3& v) { return {0, v.x, v.y, v.z}; }
  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  const Rational& scalar() const { return w; }
  Quaternion vector_part() const { return {0, x, y, z}; }
  Vec3 axis() const { return {x, y, z}; }
  Quaternion conj() const { return {w, -x, -y, -z}; }
  Rational norm_sq() const { return w * w + x * x + y * y + z * z; }
  bool is_zero() const { return w == 0 && x == 0 && y == 0 && z == 0; }
  bool is_real() const { return x == 0 && y == 0 && z == 0; }

  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(const Rational& s);

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator-(Quaternion a) { return a *= Rational(-1); }
  friend Quaternion operator*(Quaternion a, const Rational& s) { return a *= s; }
  friend Quaternion operator*(const Rational& s, Quaternion a) { return a *= s; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

// S(f, g) = f g~ + g f~ = 2 (f0 g0 + f1 g1 + f2 g2 + f3 g3).
Rational study_form(const Quaternion& f, const Quaternion& g);

Vec3 cross(const Vec3& a, const Vec3& b);
Rational dot(const Vec3& a, const Vec3& b);

// Even subalgebra element q0 + q1 eps1 + q2 eps2 + q3 eps3 with
// eps1 = e_123inf, eps2 = e_123o, eps3 = eps1 eps2 + 1. The quaternion units
// map to i = -e23, j = e13, k = -e12.
struct FourQuat {
  Quaternion q0, q1, q2, q3;

  static FourQuat one() { return {Quaternion::real(1), {}, {}, {}}; }
  static FourQuat scalar(const Rational& s) { return {Quaternion::real(s), {}, {}, {}}; }
  static FourQuat eps1() { return {{}, Quaternion::real(1), {}, {}}; }
  static FourQuat eps2() { return {{}, {}, Quaternion::real(1), {}}; }
  static FourQuat eps3() { return {{}, {}, {}, Quaternion::real(1)}; }

  bool is_zero() const { return q0.is_zero() && q1.is_zero() && q2.is_zero() && q3.is_zero(); }

  // Flat coordinates (q0.w, q0.x, ..., q3.z).
  std::array<Rational, 16> coordinates() const;
  static FourQuat from_coordinates(const std::array<Rational, 16>& c);

  FourQuat& operator+=(const FourQuat& o);
  FourQuat& operator-=(const FourQuat& o);
  FourQuat& operator*=(const Rational& s);

  friend FourQuat operator+(FourQuat a, const FourQuat& b) { return a += b; }
  friend FourQuat operator-(FourQuat a, const FourQuat& b) { return a -= b; }
  friend FourQuat operator-(FourQuat a) { return a *= Rational(-1); }
  friend FourQuat operator*(FourQuat a, const Rational& s) { return a *= s; }
  friend FourQuat operator*(const Rational& s, FourQuat a) { return a *= s; }

  friend bool operator==(const FourQuat&, const FourQuat&) = default;
};

// Throws MathError(NotEven) when m has odd-grade terms.
FourQuat split(const Multivector& m);
Multivector join(const FourQuat& fq);

FourQuat fq_mul(const FourQuat& p, const FourQuat& s);
inline FourQuat operator*(const FourQuat& p, const FourQuat& s) { return fq_mul(p, s); }

// (q0~, q1~, q2~, -q3~)
FourQuat fq_reverse(const FourQuat& q);

// primal + eps1 dual, i.e. the dual quaternion primal + eps dual.
FourQuat dq_embed(const Quaternion& primal, const Quaternion& dual);

}  // namespace confstudy
