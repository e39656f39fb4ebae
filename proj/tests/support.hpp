#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "confstudy/dorst.hpp"
#include "confstudy/error.hpp"
#include "confstudy/fourquat.hpp"
#include "confstudy/multivector.hpp"
#include "confstudy/rotor_poly.hpp"
#include "confstudy/study.hpp"

namespace support {

using namespace confstudy;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(int range = 6, int max_den = 4) {
    Rational r(integer(-range, range), integer(1, max_den));
    r.canonicalize();
    return r;
  }
  Rational nonzero_rational(int range = 6, int max_den = 4) {
    Rational r;
    do r = rational(range, max_den);
    while (r == 0);
    return r;
  }

  Vec3 vec3(int range = 4) { return {rational(range, 3), rational(range, 3), rational(range, 3)}; }
  Vec3 nonzero_vec3(int range = 4) {
    Vec3 v;
    do v = vec3(range);
    while (v.x == 0 && v.y == 0 && v.z == 0);
    return v;
  }

  Quaternion quaternion() { return {rational(), rational(), rational(), rational()}; }

  FourQuat fourquat() { return {quaternion(), quaternion(), quaternion(), quaternion()}; }

  Multivector multivector() {
    Multivector m;
    for (unsigned mask = 0; mask < 32; ++mask) {
      if (coin()) m += Multivector::basis(static_cast<BladeMask>(mask), rational());
    }
    return m;
  }

  Multivector vector() {
    return confstudy::vector(vec3(), rational(), rational());
  }

  Multivector nonzero_vector() {
    Multivector v;
    do v = vector();
    while (v.is_zero());
    return v;
  }

  // Vectors with a nonzero wedge.
  Blade2 blade() {
    for (;;) {
      Multivector a = nonzero_vector(), b = nonzero_vector();
      if (!wedge2(a, b).is_zero()) return {a, b};
    }
  }

  // t0 + q for a random blade and rational t0 (a point of the Study variety).
  FourQuat dorst_rotor() {
    const Blade2 ab = blade();
    return FourQuat::scalar(rational()) + split(wedge2(ab.a, ab.b));
  }

  // Product of 1 to 3 random Dorst rotors with nonzero rotor norm.
  FourQuat study_point() {
    for (;;) {
      FourQuat q = FourQuat::one();
      const int n = integer(1, 3);
      for (int i = 0; i < n; ++i) q = q * dorst_rotor();
      if (!q.is_zero() && null_value(q) != 0) return q;
    }
  }

  // Random rotation about a random axis and translation, as a dual quaternion.
  FourQuat se3_rotor() {
    for (;;) {
      const Quaternion r = quaternion();
      if (r.is_zero()) continue;
      const Quaternion t = Quaternion::pure(vec3());
      // 1 - (t/2) eps1 composed with r.
      FourQuat trans = FourQuat::one();
      trans.q1 = t * Rational(-1, 2);
      return trans * FourQuat{r, {}, {}, {}};
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

template <class F>
std::optional<ErrorCode> error_code(F&& f) {
  try {
    f();
  } catch (const MathError& e) {
    return e.code();
  }
  return std::nullopt;
}

// x = lambda y for some nonzero rational lambda.
inline bool proportional(const Multivector& x, const Multivector& y) {
  if (x.is_zero() || y.is_zero()) return false;
  std::optional<Rational> lambda;
  for (unsigned mask = 0; mask < 32; ++mask) {
    const auto b = static_cast<BladeMask>(mask);
    if ((x[b] == 0) != (y[b] == 0)) return false;
    if (y[b] == 0) continue;
    const Rational r = x[b] / y[b];
    if (lambda && *lambda != r) return false;
    lambda = r;
  }
  return true;
}

inline bool proportional(const FourQuat& x, const FourQuat& y) {
  return proportional(join(x), join(y));
}

// Factorization example. Subscripted blades are geometric products:
// e_inf_o() = e_inf e_o.
namespace fixture {

inline Multivector e(int i) { return Multivector::basis(static_cast<BladeMask>(1u << (i - 1))); }
inline Multivector eo() { return Multivector::basis(blade::eo); }
inline Multivector ei() { return Multivector::basis(blade::einf); }
inline Multivector s(const Rational& r) { return Multivector::basis(blade::scalar, r); }
inline Multivector e_inf(int i) { return gp(e(i), ei()); }
inline Multivector e_o(int i) { return gp(e(i), eo()); }
inline Multivector e_inf_o() { return gp(ei(), eo()); }
inline Multivector e23() { return gp(e(2), e(3)); }

inline Multivector h1() { return e_inf(1) * Rational(-1) + e_o(1) * Rational(2); }
inline Multivector h2() { return e_inf(2) * Rational(-1) - e_o(2) * Rational(2); }
inline Multivector h3() { return s(1) - e_inf(3) * Rational(1, 2) + e_o(3) + e_inf_o(); }

inline Multivector k1() { return e_inf(2) * Rational(-1) - e_o(2) * Rational(2); }
inline Multivector k2() { return s(-1) + e_inf(3) * Rational(1, 2) - e_o(3) - e_inf_o(); }
inline Multivector k3() {
  return s(2) - e_inf(1) + e_o(1) * Rational(2) - e_inf(3) + e_o(3) * Rational(2) +
         e_inf_o() * Rational(2);
}

inline Multivector l1() {
  return s(1) + e23() - e_inf(2) * Rational(1, 2) - e_o(2) + e_inf(3) * Rational(1, 2) + e_o(3);
}
inline Multivector l2() {
  return s(-2) - e23() - e_inf(2) * Rational(1, 2) - e_o(2) - e_o(3) * Rational(2) - e_inf_o();
}
inline Multivector l3() { return k3(); }

inline RotorPoly linear(const Multivector& h) { return RotorPoly::linear(split(h)); }

inline RotorPoly c() { return linear(h1()) * linear(h2()) * linear(h3()); }

inline RealPoly m1() { return RealPoly{4, 0, 1}; }
inline RealPoly m2() { return RealPoly{-4, 0, 1}; }
inline RealPoly m3() { return RealPoly{0, 0, 1}; }

}  // namespace fixture

// Polynomial in t with FourQuat coefficients evaluated through the generators:
// returns the coefficient lists of ideal_generators(t + q) for t^0, t^1, t^2
// by exact interpolation at t = 0, 1, -1 (each generator is quadratic in t).
inline std::array<StudyResidual, 3> generator_coefficients(const FourQuat& q) {
  const auto g0 = ideal_generators(q);
  const auto gp1 = ideal_generators(FourQuat::scalar(1) + q);
  const auto gm1 = ideal_generators(FourQuat::scalar(-1) + q);
  std::array<StudyResidual, 3> out;
  for (std::size_t i = 0; i < StudyResidual::kCount; ++i) {
    out[0].values[i] = g0.values[i];
    out[1].values[i] = (gp1.values[i] - gm1.values[i]) / 2;
    out[2].values[i] = (gp1.values[i] + gm1.values[i]) / 2 - g0.values[i];
  }
  return out;
}

}  // namespace support
