#include "confstudy/study.hpp"

#include <algorithm>

#include "confstudy/error.hpp"

namespace confstudy {

namespace {

void require_nonzero(const FourQuat& q) {
  if (q.is_zero()) throw MathError(ErrorCode::ZeroElement, "0 is not a projective point");
}

void require_on_study(const FourQuat& q) {
  if (!on_study(q)) {
    throw MathError(ErrorCode::NotOnStudy, "element violates the Study variety equations");
  }
}

template <typename Quadratic>
RationalMatrix gradient_rows(const FourQuat& q, Quadratic&& form, std::size_t rows) {
  // For homogeneous quadratics g(x + e) = g(x) + grad g(x).e + g(e).
  RationalMatrix jac(rows, 16);
  const auto base = form(q);
  const auto x = q.coordinates();
  for (std::size_t c = 0; c < 16; ++c) {
    std::array<Rational, 16> unit{};
    unit[c] = 1;
    std::array<Rational, 16> shifted = x;
    shifted[c] += 1;
    const auto at_shift = form(FourQuat::from_coordinates(shifted));
    const auto at_unit = form(FourQuat::from_coordinates(unit));
    for (std::size_t r = 0; r < rows; ++r) jac(r, c) = at_shift[r] - base[r] - at_unit[r];
  }
  return jac;
}

}  // namespace

const std::array<std::string_view, StudyResidual::kCount>& StudyResidual::labels() {
  static const std::array<std::string_view, kCount> names = {
      "S(q0,q1)",
      "S(q1,q3)",
      "S(q0,q2)",
      "S(q2,q3)",
      "S(q0,i q3)-S(q1,i q2)",
      "S(q0,j q3)-S(q1,j q2)",
      "S(q0,k q3)-S(q1,k q2)",
      "S(q0,q3 i)+S(q1,q2 i)",
      "S(q0,q3 j)+S(q1,q2 j)",
      "S(q0,q3 k)+S(q1,q2 k)",
  };
  return names;
}

bool StudyResidual::all_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Rational& v) { return v == 0; });
}

StudyResidual ideal_generators(const FourQuat& q) {
  const std::array<Quaternion, 3> units = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
  StudyResidual r;
  r.values[0] = study_form(q.q0, q.q1);
  r.values[1] = study_form(q.q1, q.q3);
  r.values[2] = study_form(q.q0, q.q2);
  r.values[3] = study_form(q.q2, q.q3);
  for (std::size_t u = 0; u < 3; ++u) {
    r.values[4 + u] =
        study_form(q.q0, units[u] * q.q3) - study_form(q.q1, units[u] * q.q2);
    r.values[7 + u] =
        study_form(q.q0, q.q3 * units[u]) + study_form(q.q1, q.q2 * units[u]);
  }
  return r;
}

bool on_study(const FourQuat& q) {
  require_nonzero(q);
  return ideal_generators(q).all_zero();
}

Rational null_value(const FourQuat& q) {
  return q.q0.norm_sq() - study_form(q.q1, q.q2) - q.q3.norm_sq();
}

Rational rotor_norm(const FourQuat& q) {
  require_on_study(q);
  return fq_mul(q, fq_reverse(q)).q0.w;
}

std::string_view to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::SO3: return "SO3";
    case GroupTag::SE3: return "SE3";
    case GroupTag::Em: return "Em";
    case GroupTag::Sim: return "Sim";
    case GroupTag::ScaleTrans: return "ScaleTrans";
    case GroupTag::Transversion: return "Transversion";
  }
  return "Unknown";
}

bool subgroup_member(const FourQuat& q, GroupTag tag) {
  require_nonzero(q);
  switch (tag) {
    case GroupTag::SO3:
      return q.q1.is_zero() && q.q2.is_zero() && q.q3.is_zero();
    case GroupTag::ScaleTrans:
      return q.q0.is_real() && q.q1.w == 0 && q.q2.is_zero() && q.q3.is_real();
    default:
      break;
  }
  require_on_study(q);
  switch (tag) {
    case GroupTag::SE3:
      return q.q2.is_zero() && q.q3.is_zero();
    case GroupTag::Em:
      return q.q0.is_zero() && q.q2.is_zero();
    case GroupTag::Sim:
      return q.q2.is_zero() && (q.q0 * q.q3.conj()).is_real();
    case GroupTag::Transversion:
      return q.q1.is_zero() && q.q3.is_zero();
    default:
      return false;
  }
}

RationalMatrix study_jacobian(const FourQuat& q) {
  return gradient_rows(
      q, [](const FourQuat& x) { return ideal_generators(x).values; }, StudyResidual::kCount);
}

std::size_t jacobian_rank(const FourQuat& q) { return rank(study_jacobian(q)); }

RationalMatrix null_quadric_gram() {
  RationalMatrix gram(16, 16);
  auto value_at = [](std::size_t a, std::size_t b) {
    std::array<Rational, 16> c{};
    c[a] += 1;
    c[b] += 1;
    return null_value(FourQuat::from_coordinates(c));
  };
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t j = 0; j < 16; ++j) {
      if (i == j) {
        gram(i, j) = value_at(i, i) / 4;
      } else {
        gram(i, j) = (value_at(i, j) - value_at(i, i) / 4 - value_at(j, j) / 4) / 2;
      }
    }
  }
  return gram;
}

}  // namespace confstudy
