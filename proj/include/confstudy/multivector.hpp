#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "confstudy/rational.hpp"

namespace confstudy {

// Basis blades of CGA are subsets of {1, 2, 3, o, inf}, encoded as a 5-bit
// mask. Bit order follows the canonical index order 1 < 2 < 3 < o < inf, and
// a blade always denotes the product of its vectors in ascending order.
using BladeMask = std::uint8_t;

namespace blade {
inline constexpr BladeMask scalar = 0;
inline constexpr BladeMask e1 = 1u << 0;
inline constexpr BladeMask e2 = 1u << 1;
inline constexpr BladeMask e3 = 1u << 2;
inline constexpr BladeMask eo = 1u << 3;
inline constexpr BladeMask einf = 1u << 4;
}  // namespace blade

int grade(BladeMask mask);

// "1" for the scalar blade, otherwise 'e' followed by the ascending index
// characters from {1,2,3,o,i} ('i' is e_inf).
std::string blade_key(BladeMask mask);
std::optional<BladeMask> parse_blade_key(std::string_view key);

// All 32 masks sorted by grade, then lexicographically by index list.
const std::array<BladeMask, 32>& canonical_blade_order();

struct Vec3 {
  Rational x, y, z;

  friend bool operator==(const Vec3&, const Vec3&) = default;
};

class Multivector {
 public:
  static constexpr std::size_t kDimension = 32;

  Multivector() = default;
  explicit Multivector(const Rational& scalar) { coeffs_[0] = scalar; }

  static Multivector basis(BladeMask mask, const Rational& coeff = 1);

  const Rational& operator[](BladeMask mask) const { return coeffs_[mask]; }
  Rational& operator[](BladeMask mask) { return coeffs_[mask]; }

  bool is_zero() const;
  bool is_vector() const;  // only grade-1 terms (zero counts)
  bool is_even() const;
  bool is_scalar() const;

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(const Rational& s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= Rational(-1); }
  friend Multivector operator*(Multivector a, const Rational& s) { return a *= s; }
  friend Multivector operator*(const Rational& s, Multivector a) { return a *= s; }

  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  std::array<Rational, kDimension> coeffs_{};
};

// Geometric product. Evaluated in the orthonormal basis {e1,e2,e3,e+,e-}
// with e_o = (e- - e+)/2 and e_inf = e- + e+.
Multivector gp(const Multivector& a, const Multivector& b);

Multivector reverse(const Multivector& a);

// Requires 0 <= k <= 5.
Multivector grade_part(const Multivector& a, int k);

// Scalar product of two vectors. Throws MathError(NotAVector).
Rational dot2(const Multivector& a, const Multivector& b);

// a ^ b = ab - a.b for vectors. Throws MathError(NotAVector).
Multivector wedge2(const Multivector& a, const Multivector& b);

Multivector vector(const Vec3& euclid, const Rational& o, const Rational& inf);

Multivector embed_point(const Rational& x1, const Rational& x2, const Rational& x3);
inline Multivector embed_point(const Vec3& p) { return embed_point(p.x, p.y, p.z); }

// n1 e1 + n2 e2 + n3 e3 + d e_inf. Throws MathError(InvalidParams) on n = 0.
Multivector make_plane(const Rational& n1, const Rational& n2, const Rational& n3,
                       const Rational& d);

// alpha (e_o + m + (|m|^2 - sigma)/2 e_inf); sigma is the squared radius.
// Throws MathError(InvalidParams) on alpha = 0.
Multivector make_sphere(const Rational& m1, const Rational& m2, const Rational& m3,
                        const Rational& sigma, const Rational& alpha);

enum class VectorTag { PointAtInfinity, FinitePoint, Plane, RealSphere, ImaginarySphere };

std::string_view to_string(VectorTag tag);

// Geometric reading of a nonzero vector.
//  - PointAtInfinity: weight = e_inf coefficient.
//  - Plane: position = normal, offset = e_inf coefficient.
//  - FinitePoint / spheres: position = center, radius_sq = sigma, weight = alpha.
struct VectorKind {
  VectorTag tag = VectorTag::PointAtInfinity;
  Vec3 position;
  Rational offset;
  Rational radius_sq;
  Rational weight;
};

// Throws MathError(NotAVector) or MathError(ZeroVector).
VectorKind classify_vector(const Multivector& v);

}  // namespace confstudy
