#include "confstudy/multivector.hpp"

#include <algorithm>
#include <bit>
#include <utility>
#include <vector>

#include "confstudy/error.hpp"
#include "confstudy/linalg.hpp"

namespace confstudy {

namespace {

constexpr char kIndexChars[5] = {'1', '2', '3', 'o', 'i'};

// Orthonormal basis shares the bit layout; bit 3 is e+, bit 4 is e-.
constexpr BladeMask kMinus = 1u << 4;

using Coeffs = std::array<Rational, 32>;

struct Term {
  BladeMask mask;
  Rational coeff;
};
using SparseColumn = std::vector<Term>;

int reorder_sign(BladeMask a, BladeMask b) {
  int swaps = 0;
  for (unsigned x = a >> 1u; x != 0; x >>= 1u) swaps += std::popcount(x & b);
  return (swaps & 1) ? -1 : 1;
}

int diagonal_sign(BladeMask a, BladeMask b) {
  int s = reorder_sign(a, b);
  if (a & b & kMinus) s = -s;
  return s;
}

Coeffs diagonal_product(const Coeffs& a, const Coeffs& b) {
  Coeffs out{};
  for (unsigned i = 0; i < 32; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < 32; ++j) {
      if (b[j] == 0) continue;
      const auto ai = static_cast<BladeMask>(i);
      const auto bj = static_cast<BladeMask>(j);
      if (diagonal_sign(ai, bj) > 0) {
        out[i ^ j] += a[i] * b[j];
      } else {
        out[i ^ j] -= a[i] * b[j];
      }
    }
  }
  return out;
}

// Column m of `to_diagonal` expresses the null-basis blade m in the
// orthonormal basis; `to_null` is the inverse change of basis.
struct BasisChange {
  std::array<SparseColumn, 32> to_diagonal;
  std::array<SparseColumn, 32> to_null;
};

Coeffs null_vector_in_diagonal(int index) {
  Coeffs v{};
  switch (index) {
    case 3:  // e_o = (e- - e+)/2
      v[1u << 4] = Rational(1, 2);
      v[1u << 3] = Rational(-1, 2);
      break;
    case 4:  // e_inf = e- + e+
      v[1u << 4] = 1;
      v[1u << 3] = 1;
      break;
    default:
      v[1u << index] = 1;
  }
  return v;
}

BasisChange build_basis_change() {
  BasisChange change;
  RationalMatrix forward(32, 32);
  for (unsigned m = 0; m < 32; ++m) {
    Coeffs acc{};
    acc[0] = 1;
    for (int k = 0; k < 3; ++k) {
      if (m & (1u << k)) acc = diagonal_product(acc, null_vector_in_diagonal(k));
    }
    // Blades are outer products. e_o and e_inf are orthogonal to e1..e3, so
    // only the pair needs care: e_o ^ e_inf = e_o e_inf - e_o . e_inf.
    const bool has_o = (m & blade::eo) != 0;
    const bool has_inf = (m & blade::einf) != 0;
    if (has_o && has_inf) {
      Coeffs pair = diagonal_product(null_vector_in_diagonal(3), null_vector_in_diagonal(4));
      pair[0] = 0;
      acc = diagonal_product(acc, pair);
    } else if (has_o) {
      acc = diagonal_product(acc, null_vector_in_diagonal(3));
    } else if (has_inf) {
      acc = diagonal_product(acc, null_vector_in_diagonal(4));
    }
    for (unsigned d = 0; d < 32; ++d) {
      forward(d, m) = acc[d];
      if (acc[d] != 0) change.to_diagonal[m].push_back({static_cast<BladeMask>(d), acc[d]});
    }
  }
  const auto backward = inverse(forward);
  for (unsigned d = 0; d < 32; ++d) {
    for (unsigned m = 0; m < 32; ++m) {
      if ((*backward)(m, d) != 0) {
        change.to_null[d].push_back({static_cast<BladeMask>(m), (*backward)(m, d)});
      }
    }
  }
  return change;
}

const BasisChange& basis_change() {
  static const BasisChange change = build_basis_change();
  return change;
}

Coeffs convert(const Multivector& a, const std::array<SparseColumn, 32>& columns) {
  Coeffs out{};
  for (unsigned m = 0; m < 32; ++m) {
    const Rational& c = a[static_cast<BladeMask>(m)];
    if (c == 0) continue;
    for (const Term& t : columns[m]) out[t.mask] += c * t.coeff;
  }
  return out;
}

Multivector convert_back(const Coeffs& d, const std::array<SparseColumn, 32>& columns) {
  Multivector out;
  for (unsigned m = 0; m < 32; ++m) {
    if (d[m] == 0) continue;
    for (const Term& t : columns[m]) out[t.mask] += d[m] * t.coeff;
  }
  return out;
}

void require_vector(const Multivector& v, const char* what) {
  if (!v.is_vector()) {
    throw MathError(ErrorCode::NotAVector, std::string(what) + " is not a grade-1 vector");
  }
}

}  // namespace

int grade(BladeMask mask) { return std::popcount(static_cast<unsigned>(mask)); }

std::string blade_key(BladeMask mask) {
  if (mask == 0) return "1";
  std::string key = "e";
  for (int k = 0; k < 5; ++k) {
    if (mask & (1u << k)) key += kIndexChars[k];
  }
  return key;
}

std::optional<BladeMask> parse_blade_key(std::string_view key) {
  if (key == "1") return BladeMask{0};
  if (key.size() < 2 || key.front() != 'e') return std::nullopt;
  unsigned mask = 0;
  int last = -1;
  for (char c : key.substr(1)) {
    const auto* pos = std::find(std::begin(kIndexChars), std::end(kIndexChars), c);
    if (pos == std::end(kIndexChars)) return std::nullopt;
    const int idx = static_cast<int>(pos - std::begin(kIndexChars));
    if (idx <= last) return std::nullopt;  // ascending, no repeats
    last = idx;
    mask |= 1u << idx;
  }
  return static_cast<BladeMask>(mask);
}

const std::array<BladeMask, 32>& canonical_blade_order() {
  static const std::array<BladeMask, 32> order = [] {
    std::array<BladeMask, 32> o{};
    for (unsigned m = 0; m < 32; ++m) o[m] = static_cast<BladeMask>(m);
    // Reversing the bit order turns "lexicographic by index list" into a
    // descending numeric comparison of the bit-reversed masks.
    auto lex_key = [](BladeMask m) {
      unsigned r = 0;
      for (int k = 0; k < 5; ++k) {
        if (m & (1u << k)) r |= 1u << (4 - k);
      }
      return r;
    };
    std::sort(o.begin(), o.end(), [&](BladeMask a, BladeMask b) {
      if (grade(a) != grade(b)) return grade(a) < grade(b);
      return lex_key(a) > lex_key(b);
    });
    return o;
  }();
  return order;
}

Multivector Multivector::basis(BladeMask mask, const Rational& coeff) {
  Multivector m;
  m[mask] = coeff;
  return m;
}

bool Multivector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Multivector::is_vector() const {
  for (unsigned m = 0; m < kDimension; ++m) {
    if (coeffs_[m] != 0 && grade(static_cast<BladeMask>(m)) != 1) return false;
  }
  return true;
}

bool Multivector::is_even() const {
  for (unsigned m = 0; m < kDimension; ++m) {
    if (coeffs_[m] != 0 && grade(static_cast<BladeMask>(m)) % 2 != 0) return false;
  }
  return true;
}

bool Multivector::is_scalar() const {
  for (unsigned m = 1; m < kDimension; ++m) {
    if (coeffs_[m] != 0) return false;
  }
  return true;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  for (std::size_t i = 0; i < kDimension; ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  for (std::size_t i = 0; i < kDimension; ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Multivector gp(const Multivector& a, const Multivector& b) {
  const BasisChange& change = basis_change();
  const Coeffs product =
      diagonal_product(convert(a, change.to_diagonal), convert(b, change.to_diagonal));
  return convert_back(product, change.to_null);
}

Multivector reverse(const Multivector& a) {
  Multivector out = a;
  for (unsigned m = 0; m < 32; ++m) {
    const int k = grade(static_cast<BladeMask>(m));
    if ((k * (k - 1) / 2) % 2 != 0) out[static_cast<BladeMask>(m)] = -a[static_cast<BladeMask>(m)];
  }
  return out;
}

Multivector grade_part(const Multivector& a, int k) {
  if (k < 0 || k > 5) throw MathError(ErrorCode::InvalidParams, "grade must lie in [0, 5]");
  Multivector out;
  for (unsigned m = 0; m < 32; ++m) {
    const auto mask = static_cast<BladeMask>(m);
    if (grade(mask) == k) out[mask] = a[mask];
  }
  return out;
}

Rational dot2(const Multivector& a, const Multivector& b) {
  require_vector(a, "dot2 lhs");
  require_vector(b, "dot2 rhs");
  return gp(a, b)[blade::scalar];
}

Multivector wedge2(const Multivector& a, const Multivector& b) {
  require_vector(a, "wedge2 lhs");
  require_vector(b, "wedge2 rhs");
  Multivector out = gp(a, b);
  out[blade::scalar] = 0;
  return out;
}

Multivector vector(const Vec3& euclid, const Rational& o, const Rational& inf) {
  Multivector v;
  v[blade::e1] = euclid.x;
  v[blade::e2] = euclid.y;
  v[blade::e3] = euclid.z;
  v[blade::eo] = o;
  v[blade::einf] = inf;
  return v;
}

Multivector embed_point(const Rational& x1, const Rational& x2, const Rational& x3) {
  return vector({x1, x2, x3}, 1, (x1 * x1 + x2 * x2 + x3 * x3) / 2);
}

Multivector make_plane(const Rational& n1, const Rational& n2, const Rational& n3,
                       const Rational& d) {
  if (n1 == 0 && n2 == 0 && n3 == 0) {
    throw MathError(ErrorCode::InvalidParams, "plane normal must be nonzero");
  }
  return vector({n1, n2, n3}, 0, d);
}

Multivector make_sphere(const Rational& m1, const Rational& m2, const Rational& m3,
                        const Rational& sigma, const Rational& alpha) {
  if (alpha == 0) throw MathError(ErrorCode::InvalidParams, "sphere weight must be nonzero");
  return vector({m1, m2, m3}, 1, (m1 * m1 + m2 * m2 + m3 * m3 - sigma) / 2) * alpha;
}

std::string_view to_string(VectorTag tag) {
  switch (tag) {
    case VectorTag::PointAtInfinity: return "PointAtInfinity";
    case VectorTag::FinitePoint: return "FinitePoint";
    case VectorTag::Plane: return "Plane";
    case VectorTag::RealSphere: return "RealSphere";
    case VectorTag::ImaginarySphere: return "ImaginarySphere";
  }
  return "Unknown";
}

VectorKind classify_vector(const Multivector& v) {
  require_vector(v, "classify_vector input");
  if (v.is_zero()) throw MathError(ErrorCode::ZeroVector, "the zero vector has no geometry");

  VectorKind kind;
  const Rational& alpha = v[blade::eo];
  const Vec3 euclid{v[blade::e1], v[blade::e2], v[blade::e3]};
  if (alpha == 0) {
    if (euclid.x == 0 && euclid.y == 0 && euclid.z == 0) {
      kind.tag = VectorTag::PointAtInfinity;
      kind.weight = v[blade::einf];
    } else {
      kind.tag = VectorTag::Plane;
      kind.position = euclid;
      kind.offset = v[blade::einf];
    }
    return kind;
  }
  kind.weight = alpha;
  kind.position = {euclid.x / alpha, euclid.y / alpha, euclid.z / alpha};
  kind.radius_sq = dot2(v, v) / (alpha * alpha);
  const int s = sign(kind.radius_sq);
  kind.tag = s == 0 ? VectorTag::FinitePoint
                    : (s > 0 ? VectorTag::RealSphere : VectorTag::ImaginarySphere);
  return kind;
}

}  // namespace confstudy
