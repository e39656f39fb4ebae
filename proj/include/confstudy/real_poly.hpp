#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "confstudy/rational.hpp"

namespace confstudy {

// Polynomial in t with rational coefficients, ascending degree, no trailing
// zeros (the zero polynomial has no coefficients).
class RealPoly {
 public:
  RealPoly() = default;
  RealPoly(std::initializer_list<Rational> coeffs);
  explicit RealPoly(std::vector<Rational> coeffs);

  static RealPoly monomial(const Rational& c, std::size_t degree);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const { return coeffs_.back(); }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  Rational operator()(const Rational& t) const;

  RealPoly monic() const;
  RealPoly derivative() const;

  friend RealPoly operator+(const RealPoly& a, const RealPoly& b);
  friend RealPoly operator-(const RealPoly& a, const RealPoly& b);
  friend RealPoly operator*(const RealPoly& a, const RealPoly& b);
  friend RealPoly operator*(const RealPoly& a, const Rational& s);

  friend bool operator==(const RealPoly&, const RealPoly&) = default;
  // Lexicographic on the ascending coefficient list.
  friend bool operator<(const RealPoly& a, const RealPoly& b) { return a.coeffs_ < b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Quotient and remainder; throws MathError(DivisionByZero) for b = 0.
std::pair<RealPoly, RealPoly> divmod(const RealPoly& a, const RealPoly& b);

// Monic gcd (zero when both are zero).
RealPoly gcd(const RealPoly& a, const RealPoly& b);

// Human readable, e.g. "t^2 - 4".
std::string to_string(const RealPoly& p);

// N = prod (t - r)^m * prod Q^m over distinct rational roots r and distinct
// monic irreducible rational quadratics Q (negative discriminant).
struct RealFactorization {
  std::vector<std::pair<Rational, int>> roots;
  std::vector<std::pair<RealPoly, int>> quadratics;
};

// Exact factorization over Q into linear and quadratic factors. Throws
// MathError(UnfactorableOverRationals) when a real irrational root occurs or
// an irreducible factor of degree > 2 remains.
RealFactorization factor_real(const RealPoly& n);

using QuadraticSequence = std::vector<RealPoly>;

// All ordered sequences of monic real quadratics whose product is n
// (n monic, even degree): real roots are paired with each other, irreducible
// quadratics stay intact. Sorted lexicographically, no duplicates.
std::vector<QuadraticSequence> quadratic_splits(const RealPoly& n);

// Floating-point fallback for inputs with irrational real roots. Each
// quadratic is (c0, c1, c2 = 1); sequences closer than `tol` coefficientwise
// are merged. Never used by the exact pipeline.
std::vector<std::vector<std::array<double, 3>>> quadratic_splits_approx(const RealPoly& n,
                                                                        double tol = 1e-9);

}  // namespace confstudy
