#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "confstudy/fourquat.hpp"
#include "confstudy/linalg.hpp"

namespace confstudy {

// Values of the ten bilinear generators of the Study variety ideal, in the
// fixed order
//   S(q0,q1), S(q1,q3), S(q0,q2), S(q2,q3),
//   S(q0,u q3) - S(q1,u q2)   for u = i, j, k,
//   S(q0,q3 u) + S(q1,q2 u)   for u = i, j, k.
struct StudyResidual {
  static constexpr std::size_t kCount = 10;
  std::array<Rational, kCount> values;

  static const std::array<std::string_view, kCount>& labels();
  bool all_zero() const;
};

StudyResidual ideal_generators(const FourQuat& q);

// Throws MathError(ZeroElement) on q = 0.
bool on_study(const FourQuat& q);

// q0 q0~ - S(q1, q2) - q3 q3~ ; zero exactly on the null quadric.
Rational null_value(const FourQuat& q);

// The scalar q q~ = q~ q. Throws MathError(NotOnStudy) off the variety.
// Its sign separates the two components of S minus N; which one holds the
// orientation-preserving displacements is not fixed here.
Rational rotor_norm(const FourQuat& q);

enum class GroupTag { SO3, SE3, Em, Sim, ScaleTrans, Transversion };

std::string_view to_string(GroupTag tag);
inline constexpr std::array<GroupTag, 6> kAllGroups = {
    GroupTag::SO3, GroupTag::SE3, GroupTag::Em,
    GroupTag::Sim, GroupTag::ScaleTrans, GroupTag::Transversion};

// Evaluates the subgroup's ideal exactly. SO3 and ScaleTrans are cut out by
// linear equations alone; the others require q on the Study variety and
// throw MathError(NotOnStudy) otherwise.
bool subgroup_member(const FourQuat& q, GroupTag tag);

// 10 x 16 Jacobian of the generators at q, columns in FourQuat::coordinates()
// order.
RationalMatrix study_jacobian(const FourQuat& q);

// Exact rank of study_jacobian(q). 5 at smooth points.
std::size_t jacobian_rank(const FourQuat& q);

// Symmetric 16 x 16 Gram matrix B with null_value(q) = x^T B x.
RationalMatrix null_quadric_gram();

}  // namespace confstudy
