#include "confstudy/rotor_poly.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <variant>

#include "confstudy/error.hpp"

namespace confstudy {

namespace {

bool is_real_scalar(const FourQuat& q) {
  return q.q0.is_real() && q.q1.is_zero() && q.q2.is_zero() && q.q3.is_zero();
}

RotorPoly lift(const RealPoly& p) {
  std::vector<FourQuat> c;
  for (const auto& r : p.coeffs()) c.push_back(FourQuat::scalar(r));
  return RotorPoly(std::move(c));
}

// Q with Q (t + h) + rem = c; rem is a constant.
std::pair<RotorPoly, FourQuat> right_divide_linear(const RotorPoly& c, const FourQuat& h) {
  const int n = c.degree();
  if (n < 1) return {RotorPoly{}, c.coeff(0)};
  std::vector<FourQuat> q(static_cast<std::size_t>(n));
  q[n - 1] = c.coeff(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 1; --k) {
    q[k - 1] = c.coeff(static_cast<std::size_t>(k)) - q[k] * h;
  }
  FourQuat rem = c.coeff(0) - q[0] * h;
  return {RotorPoly(std::move(q)), rem};
}

using Outcome = std::variant<Factorization, SkippedOrdering>;

Outcome follow(const RotorPoly& monic, const QuadraticSequence& seq) {
  Factorization f;
  f.quadratics = seq;
  f.factors.resize(seq.size());
  RotorPoly current = monic;
  for (std::size_t i = seq.size(); i-- > 0;) {
    auto skip = [&](RotorPoly rem, std::string why) -> Outcome {
      return SkippedOrdering{seq, i + 1, std::move(rem), std::move(why)};
    };
    const RotorPoly rem = divmod(current, seq[i]).second;
    const auto inv = fq_inverse(rem.coeff(1));
    if (!inv) return skip(rem, "linear coefficient of the remainder is not invertible");
    const FourQuat h = *inv * rem.coeff(0);
    if (RotorPoly::linear(h) * RotorPoly::linear(fq_reverse(h)) != lift(seq[i])) {
      return skip(rem, "factor norm differs from the quadratic");
    }
    auto [quot, r] = right_divide_linear(current, h);
    if (!r.is_zero()) return skip(rem, "linear factor does not divide exactly");
    f.factors[i] = h;
    current = std::move(quot);
  }
  if (current != RotorPoly{FourQuat::one()}) {
    return SkippedOrdering{seq, 0, current, "cofactor is not 1"};
  }
  return f;
}

}  // namespace

RotorPoly::RotorPoly(std::initializer_list<FourQuat> coeffs) : coeffs_(coeffs) { trim(); }

RotorPoly::RotorPoly(std::vector<FourQuat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RotorPoly RotorPoly::linear(const FourQuat& h) { return RotorPoly{h, FourQuat::one()}; }

void RotorPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RotorPoly operator+(const RotorPoly& a, const RotorPoly& b) {
  std::vector<FourQuat> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
  return RotorPoly(std::move(out));
}

RotorPoly operator-(const RotorPoly& a, const RotorPoly& b) {
  std::vector<FourQuat> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) - b.coeff(k);
  return RotorPoly(std::move(out));
}

RotorPoly poly_mul(const RotorPoly& p, const RotorPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<FourQuat> out(p.coeffs().size() + q.coeffs().size() - 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < q.coeffs().size(); ++j) {
      out[i + j] += fq_mul(p.coeffs()[i], q.coeffs()[j]);
    }
  }
  return RotorPoly(std::move(out));
}

RotorPoly operator*(const RotorPoly& p, const RotorPoly& q) { return poly_mul(p, q); }

RotorPoly poly_reverse(const RotorPoly& p) {
  std::vector<FourQuat> out;
  for (const auto& c : p.coeffs()) out.push_back(fq_reverse(c));
  return RotorPoly(std::move(out));
}

RealPoly norm_poly(const RotorPoly& c) {
  const RotorPoly rev = poly_reverse(c);
  const RotorPoly left = c * rev;
  if (left.is_zero()) throw MathError(ErrorCode::NotRotorPolynomial, "C C~ is 0");
  std::vector<Rational> out;
  for (std::size_t k = 0; k < left.coeffs().size(); ++k) {
    if (!is_real_scalar(left.coeffs()[k])) {
      throw MathError(ErrorCode::NotRotorPolynomial,
                      "coefficient of t^" + std::to_string(k) + " in C C~ is not real");
    }
    out.push_back(left.coeffs()[k].q0.w);
  }
  if (rev * c != left) throw MathError(ErrorCode::NotRotorPolynomial, "C C~ differs from C~ C");
  return RealPoly(std::move(out));
}

FourQuat poly_eval(const RotorPoly& c, const Rational& t0) {
  FourQuat acc;
  for (auto it = c.coeffs().rbegin(); it != c.coeffs().rend(); ++it) acc = acc * t0 + *it;
  return acc;
}

std::pair<RotorPoly, RotorPoly> divmod(const RotorPoly& c, const RealPoly& m) {
  if (m.is_zero()) throw MathError(ErrorCode::DivisionByZero, "polynomial division by 0");
  if (c.degree() < m.degree()) return {RotorPoly{}, c};
  std::vector<FourQuat> rem = c.coeffs();
  std::vector<FourQuat> quot(static_cast<std::size_t>(c.degree() - m.degree() + 1));
  const auto dm = static_cast<std::size_t>(m.degree());
  const Rational lead_inv = 1 / m.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const FourQuat q = rem[k + dm] * lead_inv;
    quot[k] = q;
    for (std::size_t j = 0; j <= dm; ++j) rem[k + j] -= q * m.coeffs()[j];
  }
  return {RotorPoly(std::move(quot)), RotorPoly(std::move(rem))};
}

std::optional<FourQuat> fq_inverse(const FourQuat& r) {
  const FourQuat rev = fq_reverse(r);
  const FourQuat n = r * rev;
  // r r~ has grades 0 and 4 only; flipping the 4-vector part makes n n' real.
  const bool grades_0_4 = n.q0.is_real() && n.q1.is_real() && n.q2.is_real() && n.q3.w == 0;
  if (!grades_0_4) return std::nullopt;
  const FourQuat flipped{n.q0, -n.q1, -n.q2, -n.q3};
  const FourQuat denom = n * flipped;
  if (!is_real_scalar(denom) || denom.q0.w == 0) return std::nullopt;
  FourQuat inv = rev * flipped * Rational(1 / denom.q0.w);
  if (r * inv != FourQuat::one() || inv * r != FourQuat::one()) return std::nullopt;
  return inv;
}

FactorizeResult factorize_detailed(const RotorPoly& c, unsigned threads) {
  if (c.degree() < 1) throw MathError(ErrorCode::InvalidParams, "polynomial of degree < 1");
  const RealPoly n = norm_poly(c);
  const auto lead_inv = fq_inverse(c.leading());
  if (!lead_inv) {
    throw MathError(ErrorCode::InvalidParams, "leading coefficient is not invertible");
  }
  RotorPoly monic;
  {
    std::vector<FourQuat> cs;
    for (const auto& k : c.coeffs()) cs.push_back(*lead_inv * k);
    monic = RotorPoly(std::move(cs));
  }
  const auto sequences = quadratic_splits(n.monic());

  std::vector<std::optional<Outcome>> outcomes(sequences.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < sequences.size(); i = next++) {
      outcomes[i] = follow(monic, sequences[i]);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, sequences.size()));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  FactorizeResult result;
  for (auto& o : outcomes) {
    if (auto* f = std::get_if<Factorization>(&*o)) {
      f->leading = c.leading();
      const bool seen = std::any_of(
          result.factorizations.begin(), result.factorizations.end(),
          [&](const Factorization& g) { return g.factors == f->factors; });
      if (!seen) result.factorizations.push_back(std::move(*f));
    } else {
      result.skipped.push_back(std::get<SkippedOrdering>(std::move(*o)));
    }
  }
  if (result.factorizations.empty()) {
    std::string detail = "all " + std::to_string(result.skipped.size()) + " orderings skipped";
    if (!result.skipped.empty()) detail += ": " + result.skipped.front().reason;
    throw MathError(ErrorCode::NoFactorization, detail);
  }
  return result;
}

std::vector<Factorization> factorize(const RotorPoly& c, unsigned threads) {
  return factorize_detailed(c, threads).factorizations;
}

}  // namespace confstudy
