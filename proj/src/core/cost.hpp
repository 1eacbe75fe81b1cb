#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/exact.hpp"

namespace pmx {

// One-parameter resource cost c : N -> Q+, the building block of the
// congestion-style families. Constructors validate nonnegativity;
// check_nondecreasing_convex() samples the operational domain.
class UsageCost {
 public:
  enum class Kind { Constant, AffineClamp, Poly };

  static UsageCost constant(ExactValue v);
  // max(0, a*y - b) with a, b >= 0.
  static UsageCost affine_clamp(ExactValue a, ExactValue b);
  // sum_k coeffs[k] * y^k with coeffs >= 0.
  static UsageCost poly(std::vector<ExactValue> coeffs);

  ExactValue value(std::int64_t y) const;
  void check_nondecreasing_convex(std::int64_t y_max) const;  // InputError with the failing point

  Kind kind() const { return kind_; }
  const std::vector<ExactValue>& params() const { return params_; }

 private:
  Kind kind_ = Kind::Constant;
  std::vector<ExactValue> params_;
};

// Two-parameter cost C(x; t): exact, nonnegative, with discrete derivatives
// in the first argument. t is the external load parameter.
class CostFunction {
 public:
  enum class Family { Mm1, ScaledCongestion, MatroidBinary, Polynomial, CustomTable };

  // 1/(u - t - x) while x + t < u, +infinity otherwise. u >= 1.
  static CostFunction mm1(std::int64_t u);

  // c(x + t) * x for a nondecreasing convex c.
  static CostFunction scaled_congestion(UsageCost c);

  // c(x + t) for x = 1, 0 for x = 0; only defined for x in {0,1}.
  static CostFunction matroid_binary(UsageCost c);

  // P(x + t) + Q(x) for polynomials with nonnegative coefficients; such
  // functions are regular by construction.
  static CostFunction polynomial(std::vector<ExactValue> sum_coeffs,
                                 std::vector<ExactValue> x_coeffs);

  // Dense table over [0..x_max] x [0..t_max]; evaluation outside the table is
  // a domain error. Values must be nonnegative.
  static CostFunction custom_table(std::int64_t x_max, std::int64_t t_max,
                                   std::vector<ExactValue> values_row_major);

  ExactValue value(std::int64_t x, std::int64_t t) const;

  // C(x;t) - C(x-1;t), defined for x >= 1. Returns +infinity whenever
  // C(x;t) is infinite (an exchange into the infinite regime never pays).
  ExactValue left_derivative(std::int64_t x, std::int64_t t) const;
  // C(x+1;t) - C(x;t), same infinity convention on C(x+1;t).
  ExactValue right_derivative(std::int64_t x, std::int64_t t) const;

  // Largest usable x, if the family restricts it (matroid-binary: 1).
  std::optional<std::int64_t> usage_limit() const;

  Family family() const { return family_; }
  std::int64_t mm1_capacity() const { return i_param_; }
  const UsageCost& inner() const;
  const std::vector<ExactValue>& sum_coeffs() const { return sum_coeffs_; }
  const std::vector<ExactValue>& x_coeffs() const { return x_coeffs_; }
  std::int64_t table_x_max() const { return i_param_; }
  std::int64_t table_t_max() const { return t_param_; }
  const std::vector<ExactValue>& table_values() const { return sum_coeffs_; }

 private:
  Family family_ = Family::Polynomial;
  std::int64_t i_param_ = 0;  // mm1 capacity, or table x_max
  std::int64_t t_param_ = 0;  // table t_max
  std::optional<UsageCost> inner_;
  std::vector<ExactValue> sum_coeffs_;  // also table storage
  std::vector<ExactValue> x_coeffs_;
};

// Regularity of C on the box 1 <= x <= x_max, 0 <= t <= t_max:
//   (derivative-monotone)  C-(x;t)   <= C-(x;t+1)
//   (shift-dominance)      C-(x;t+1) <= C-(x+1;t)
// A regular function is discrete convex. Families with a usage limit are
// checked on the clamped box, skipping inequalities that would evaluate
// beyond the limit.
struct RegularityWitness {
  std::int64_t x;
  std::int64_t t;
  enum class Condition { DerivativeMonotone, ShiftDominance } condition;
};

std::optional<RegularityWitness> find_regularity_violation(const CostFunction& c,
                                                           std::int64_t x_max,
                                                           std::int64_t t_max);
inline bool is_regular(const CostFunction& c, std::int64_t x_max, std::int64_t t_max) {
  return !find_regularity_violation(c, x_max, t_max);
}

// Discrete convexity in x on the same box: C-(x;t) <= C+(x;t).
std::optional<std::pair<std::int64_t, std::int64_t>> find_convexity_violation(
    const CostFunction& c, std::int64_t x_max, std::int64_t t_max);
inline bool is_discrete_convex(const CostFunction& c, std::int64_t x_max, std::int64_t t_max) {
  return !find_convexity_violation(c, x_max, t_max);
}

}  // namespace pmx
