#include "confstudy/rational.hpp"

#include <cctype>

#include "confstudy/error.hpp"

namespace confstudy {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAVector: return "NotAVector";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotEven: return "NotEven";
    case ErrorCode::NotOnStudy: return "NotOnStudy";
    case ErrorCode::NotALine: return "NotALine";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::DegenerateBlade: return "DegenerateBlade";
    case ErrorCode::NormalizeAtInfinity: return "NormalizeAtInfinity";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NotRotorPolynomial: return "NotRotorPolynomial";
    case ErrorCode::UnfactorableOverRationals: return "UnfactorableOverRationals";
    case ErrorCode::NoFactorization: return "NoFactorization";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::CountMismatch: return "CountMismatch";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw SchemaError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class d(std::string(den), 10);
  if (d == 0) throw SchemaError("zero denominator in '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  if (text.front() == '-') n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_decimal(const Rational& value, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const bool negative = sgn(value) < 0;
  mpz_class num = abs(value.get_num()) * scale;
  const mpz_class& den = value.get_den();
  // round half away from zero
  mpz_class scaled = (2 * num + den) / (2 * den);
  mpz_class whole = scaled / scale;
  mpz_class frac = scaled % scale;

  std::string out = (negative && scaled != 0) ? "-" : "";
  out += whole.get_str();
  if (frac != 0) {
    std::string f = frac.get_str();
    f.insert(0, static_cast<size_t>(digits) - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    out += "." + f;
  }
  return out;
}

bool rational_sqrt(const Rational& value, Rational& root) {
  if (sgn(value) < 0) return false;
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return false;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

}  // namespace confstudy
