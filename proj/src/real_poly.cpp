#include "confstudy/real_poly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "confstudy/error.hpp"

namespace confstudy {

namespace {

using Complex = std::complex<long double>;

constexpr unsigned long kTrialLimit = 1000000;

RealPoly linear_root_factor(const Rational& r) { return RealPoly{-r, 1}; }

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, int>> primes;
  for (unsigned long p = 2; p <= kTrialLimit && mpz_class(p) * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) primes.emplace_back(p, e);
  }
  if (n > 1) {
    const bool prime_left = n < mpz_class(kTrialLimit) * kTrialLimit ||
                            mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
    if (!prime_left) {
      throw MathError(ErrorCode::UnfactorableOverRationals,
                      "coefficients too large for the rational root search");
    }
    primes.emplace_back(n, 1);
  }
  std::vector<mpz_class> divisors = {1};
  for (const auto& [p, e] : primes) {
    const std::size_t base = divisors.size();
    mpz_class power = 1;
    for (int k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

// Integer coefficients with the same roots.
std::vector<mpz_class> integer_coeffs(const RealPoly& p) {
  mpz_class lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> out;
  for (const auto& c : p.coeffs()) {
    Rational scaled = c * Rational(lcm);
    out.push_back(scaled.get_num());
  }
  return out;
}

// Distinct rational roots of p (p != 0).
std::vector<Rational> rational_roots(const RealPoly& p) {
  std::vector<Rational> roots;
  RealPoly rest = p;
  if (rest.coeff(0) == 0) {
    roots.emplace_back(0);
    while (rest.degree() > 0 && rest.coeff(0) == 0) {
      rest = divmod(rest, RealPoly{0, 1}).first;
    }
  }
  if (rest.degree() < 1) return roots;
  const auto a = integer_coeffs(rest);
  const auto num = positive_divisors(a.front());
  const auto den = positive_divisors(a.back());
  std::set<Rational> found;
  for (const auto& n : num) {
    for (const auto& d : den) {
      for (int s : {1, -1}) {
        Rational candidate(n * s, d);
        candidate.canonicalize();
        if (found.count(candidate) == 0 && rest(candidate) == 0) found.insert(candidate);
      }
    }
  }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Yun's square-free decomposition of a monic polynomial: p = prod parts[k]^(k+1).
std::vector<RealPoly> square_free_parts(const RealPoly& p) {
  std::vector<RealPoly> parts;
  RealPoly a = p.monic();
  RealPoly b = gcd(a, a.derivative());
  RealPoly c = divmod(a, b).first;
  RealPoly d = divmod(a.derivative(), b).first - c.derivative();
  while (c.degree() > 0) {
    RealPoly g = gcd(c, d);
    parts.push_back(g);
    c = divmod(c, g).first;
    d = divmod(d, g).first - c.derivative();
  }
  while (!parts.empty() && parts.back().degree() == 0) parts.pop_back();
  return parts;
}

std::vector<Complex> numeric_roots(const RealPoly& p) {
  const int n = p.degree();
  if (n < 1) return {};
  const RealPoly m = p.monic();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -m.coeff(static_cast<std::size_t>(i)).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<Complex> roots;
  for (int i = 0; i < n; ++i) {
    Complex z(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    // Newton polishing in extended precision.
    for (int it = 0; it < 8; ++it) {
      Complex f = 0, df = 0;
      for (int k = n; k >= 0; --k) {
        df = df * z + f;
        f = f * z + static_cast<long double>(m.coeff(static_cast<std::size_t>(k)).get_d());
      }
      if (std::abs(df) == 0) break;
      z -= f / df;
    }
    roots.push_back(z);
  }
  return roots;
}

// Continued-fraction convergents of x, denominators up to a bound.
std::vector<Rational> convergents(long double x) {
  std::vector<Rational> out;
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  long double rest = x;
  for (int step = 0; step < 40; ++step) {
    const long double fl = std::floor(rest);
    if (std::fabs(fl) > 1e18L) break;
    const mpz_class a(static_cast<double>(fl));
    const mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
    out.emplace_back(h2, k2);
    out.back().canonicalize();
    if (k2 > mpz_class("1000000000000")) break;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    const long double frac = rest - fl;
    if (frac < 1e-15L) break;
    rest = 1.0L / frac;
  }
  return out;
}

// Splits a square-free polynomial without rational roots into monic
// irreducible quadratics.
std::vector<RealPoly> quadratic_factors(RealPoly p) {
  std::vector<RealPoly> out;
  p = p.monic();
  while (p.degree() > 0) {
    if (p.degree() == 2) {
      const Rational disc = p.coeff(1) * p.coeff(1) - 4 * p.coeff(0);
      if (sign(disc) >= 0) {
        throw MathError(ErrorCode::UnfactorableOverRationals,
                        "irrational real roots in " + to_string(p));
      }
      out.push_back(p);
      break;
    }
    const auto roots = numeric_roots(p);
    bool split = false;
    for (const auto& z : roots) {
      if (std::fabs(z.imag()) < 1e-12L * std::max<long double>(1, std::abs(z))) continue;
      if (z.imag() < 0) continue;
      const auto c1 = convergents(-2 * z.real());
      const auto c0 = convergents(std::norm(z));
      for (auto b1 = c1.rbegin(); b1 != c1.rend() && !split; ++b1) {
        for (auto b0 = c0.rbegin(); b0 != c0.rend() && !split; ++b0) {
          RealPoly q{*b0, *b1, 1};
          auto [quot, rem] = divmod(p, q);
          if (rem.is_zero()) {
            out.push_back(q);
            p = quot;
            split = true;
          }
        }
      }
      if (split) break;
    }
    if (!split) {
      throw MathError(ErrorCode::UnfactorableOverRationals,
                      "no rational quadratic factor of " + to_string(p));
    }
  }
  return out;
}

}  // namespace

RealPoly::RealPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RealPoly::RealPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RealPoly RealPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RealPoly(std::move(v));
}

void RealPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RealPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RealPoly RealPoly::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading());
}

RealPoly RealPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * Rational(k));
  return RealPoly(std::move(d));
}

RealPoly operator+(const RealPoly& a, const RealPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
  return RealPoly(std::move(out));
}

RealPoly operator-(const RealPoly& a, const RealPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) - b.coeff(k);
  return RealPoly(std::move(out));
}

RealPoly operator*(const RealPoly& a, const RealPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RealPoly(std::move(out));
}

RealPoly operator*(const RealPoly& a, const Rational& s) {
  std::vector<Rational> out = a.coeffs_;
  for (auto& c : out) c *= s;
  return RealPoly(std::move(out));
}

std::pair<RealPoly, RealPoly> divmod(const RealPoly& a, const RealPoly& b) {
  if (b.is_zero()) throw MathError(ErrorCode::DivisionByZero, "polynomial division by 0");
  std::vector<Rational> rem = a.coeffs();
  if (a.degree() < b.degree()) return {RealPoly{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational c = rem[k + db] / b.leading();
    quot[k] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs()[j];
  }
  return {RealPoly(std::move(quot)), RealPoly(std::move(rem))};
}

RealPoly gcd(const RealPoly& a, const RealPoly& b) {
  RealPoly x = a, y = b;
  while (!y.is_zero()) {
    RealPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::string to_string(const RealPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    Rational c = p.coeffs()[k];
    if (c == 0) continue;
    const bool negative = sign(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (c != 1 || k == 0) out << c.get_str();
    if (k >= 1) out << "t";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

RealFactorization factor_real(const RealPoly& n) {
  if (n.degree() < 1) return {};
  RealFactorization out;
  std::map<RealPoly, int> quads;
  const auto parts = square_free_parts(n);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const int mult = static_cast<int>(k) + 1;
    RealPoly rest = parts[k];
    if (rest.degree() < 1) continue;
    for (const auto& r : rational_roots(rest)) {
      out.roots.emplace_back(r, mult);
      rest = divmod(rest, linear_root_factor(r)).first;
    }
    for (const auto& q : quadratic_factors(rest)) quads[q] += mult;
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.quadratics.assign(quads.begin(), quads.end());
  return out;
}

std::vector<QuadraticSequence> quadratic_splits(const RealPoly& n) {
  if (!n.is_monic() || n.degree() < 2 || n.degree() % 2 != 0) {
    throw MathError(ErrorCode::InvalidParams, "expected a monic polynomial of even degree");
  }
  const auto f = factor_real(n);
  std::map<Rational, int> roots(f.roots.begin(), f.roots.end());
  std::map<RealPoly, int> quads(f.quadratics.begin(), f.quadratics.end());
  int linear_count = 0;
  for (const auto& [r, m] : roots) linear_count += m;
  if (linear_count % 2 != 0) {
    throw MathError(ErrorCode::UnfactorableOverRationals,
                    "odd number of real roots cannot be paired into quadratics");
  }

  const auto total = static_cast<std::size_t>(n.degree() / 2);
  std::set<QuadraticSequence> found;
  QuadraticSequence current;
  std::function<void()> extend = [&]() {
    if (current.size() == total) {
      found.insert(current);
      return;
    }
    for (auto& [q, m] : quads) {
      if (m == 0) continue;
      --m;
      current.push_back(q);
      extend();
      current.pop_back();
      ++m;
    }
    for (auto i = roots.begin(); i != roots.end(); ++i) {
      if (i->second == 0) continue;
      --i->second;
      for (auto j = i; j != roots.end(); ++j) {
        if (j->second == 0) continue;
        --j->second;
        current.push_back(linear_root_factor(i->first) * linear_root_factor(j->first));
        extend();
        current.pop_back();
        ++j->second;
      }
      ++i->second;
    }
  };
  extend();
  return {found.begin(), found.end()};
}

std::vector<std::vector<std::array<double, 3>>> quadratic_splits_approx(const RealPoly& n,
                                                                        double tol) {
  if (!n.is_monic() || n.degree() < 2 || n.degree() % 2 != 0) {
    throw MathError(ErrorCode::InvalidParams, "expected a monic polynomial of even degree");
  }
  auto roots = numeric_roots(n);
  std::vector<double> reals;
  std::vector<std::array<double, 3>> complex_pairs;
  for (const auto& z : roots) {
    if (std::fabs(z.imag()) <= tol) {
      reals.push_back(static_cast<double>(z.real()));
    } else if (z.imag() > 0) {
      complex_pairs.push_back({static_cast<double>(std::norm(z)),
                               static_cast<double>(-2 * z.real()), 1.0});
    }
  }
  if (reals.size() % 2 != 0) {
    throw MathError(ErrorCode::UnfactorableOverRationals,
                    "odd number of real roots cannot be paired into quadratics");
  }
  std::sort(reals.begin(), reals.end());

  using Quad = std::array<double, 3>;
  std::vector<Quad> pool = complex_pairs;
  const std::size_t total = static_cast<std::size_t>(n.degree() / 2);
  std::vector<std::vector<Quad>> found;
  auto close = [tol](const std::vector<Quad>& a, const std::vector<Quad>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t c = 0; c < 3; ++c) {
        if (std::fabs(a[i][c] - b[i][c]) > tol) return false;
      }
    }
    return true;
  };
  std::vector<Quad> current;
  std::vector<bool> used_pair(pool.size(), false), used_real(reals.size(), false);
  std::function<void()> extend = [&]() {
    if (current.size() == total) {
      for (const auto& seq : found) {
        if (close(seq, current)) return;
      }
      found.push_back(current);
      return;
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (used_pair[i]) continue;
      used_pair[i] = true;
      current.push_back(pool[i]);
      extend();
      current.pop_back();
      used_pair[i] = false;
    }
    for (std::size_t i = 0; i < reals.size(); ++i) {
      if (used_real[i]) continue;
      used_real[i] = true;
      for (std::size_t j = i + 1; j < reals.size(); ++j) {
        if (used_real[j]) continue;
        used_real[j] = true;
        current.push_back({reals[i] * reals[j], -(reals[i] + reals[j]), 1.0});
        extend();
        current.pop_back();
        used_real[j] = false;
      }
      used_real[i] = false;
    }
  };
  extend();
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace confstudy
