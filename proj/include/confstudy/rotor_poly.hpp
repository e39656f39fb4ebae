#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "confstudy/fourquat.hpp"
#include "confstudy/real_poly.hpp"

namespace confstudy {

// Polynomial in a central indeterminate t with FourQuat coefficients,
// ascending degree, no trailing zeros.
class RotorPoly {
 public:
  RotorPoly() = default;
  RotorPoly(std::initializer_list<FourQuat> coeffs);
  explicit RotorPoly(std::vector<FourQuat> coeffs);

  // t + h.
  static RotorPoly linear(const FourQuat& h);

  const std::vector<FourQuat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const FourQuat& leading() const { return coeffs_.back(); }
  FourQuat coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : FourQuat{}; }

  friend RotorPoly operator+(const RotorPoly& a, const RotorPoly& b);
  friend RotorPoly operator-(const RotorPoly& a, const RotorPoly& b);
  friend bool operator==(const RotorPoly&, const RotorPoly&) = default;

 private:
  void trim();
  std::vector<FourQuat> coeffs_;
};

RotorPoly poly_mul(const RotorPoly& p, const RotorPoly& q);
RotorPoly operator*(const RotorPoly& p, const RotorPoly& q);

// Coefficientwise fq_reverse.
RotorPoly poly_reverse(const RotorPoly& p);

// The real polynomial C C~ (= C~ C). Throws NotRotorPolynomial otherwise.
RealPoly norm_poly(const RotorPoly& c);

FourQuat poly_eval(const RotorPoly& c, const Rational& t0);

// Quotient and remainder upon division by a real polynomial (t is central).
std::pair<RotorPoly, RotorPoly> divmod(const RotorPoly& c, const RealPoly& m);

// Two-sided inverse of r. With n = r r~ (grades 0 and 4) and n' the same with
// the 4-vector part negated, n n' is real and r^-1 = r~ n' / (n n').
std::optional<FourQuat> fq_inverse(const FourQuat& r);

struct Factorization {
  // C = leading * (t + h_1) ... (t + h_n); leading is 1 for monic C.
  FourQuat leading = FourQuat::one();
  std::vector<FourQuat> factors;
  std::vector<RealPoly> quadratics;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// An ordering of quadratics the remainder scheme could not follow.
struct SkippedOrdering {
  QuadraticSequence quadratics;
  std::size_t index = 0;    // 1-based position i of the failing quadratic M_i
  RotorPoly remainder;      // r1 t + r0 at that step
  std::string reason;
};

struct FactorizeResult {
  std::vector<Factorization> factorizations;
  std::vector<SkippedOrdering> skipped;
};

// All factorizations of C into linear factors t + h_i, one per ordered
// quadratic split of the norm polynomial, merged in lexicographic order of
// the quadratic sequences. `threads` = 0 uses the hardware concurrency.
// Throws NotRotorPolynomial, InvalidParams (non-invertible leading
// coefficient or degree 0), UnfactorableOverRationals, or NoFactorization.
FactorizeResult factorize_detailed(const RotorPoly& c, unsigned threads = 1);

std::vector<Factorization> factorize(const RotorPoly& c, unsigned threads = 1);

}  // namespace confstudy
