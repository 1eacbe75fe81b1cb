#include "core/cost.hpp"

#include <string>

namespace pmx {

namespace {

ExactValue eval_poly(const std::vector<ExactValue>& coeffs, std::int64_t arg) {
  // Horner on an exact rational.
  ExactValue acc(0);
  const ExactValue y(arg);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * y + *it;
  return acc;
}

void require_nonnegative_finite(const std::vector<ExactValue>& coeffs, const char* what) {
  for (const auto& c : coeffs) {
    if (c.is_infinite()) throw InputError(std::string(what) + ": infinite coefficient");
    if (c.is_negative()) throw InputError(std::string(what) + ": negative coefficient");
  }
}

}  // namespace

UsageCost UsageCost::constant(ExactValue v) {
  if (v.is_infinite() || v.is_negative()) throw InputError("constant usage cost must be finite and nonnegative");
  UsageCost c;
  c.kind_ = Kind::Constant;
  c.params_ = {std::move(v)};
  return c;
}

UsageCost UsageCost::affine_clamp(ExactValue a, ExactValue b) {
  if (a.is_infinite() || b.is_infinite() || a.is_negative() || b.is_negative())
    throw InputError("affine-clamp usage cost needs finite nonnegative a, b");
  UsageCost c;
  c.kind_ = Kind::AffineClamp;
  c.params_ = {std::move(a), std::move(b)};
  return c;
}

UsageCost UsageCost::poly(std::vector<ExactValue> coeffs) {
  require_nonnegative_finite(coeffs, "poly usage cost");
  UsageCost c;
  c.kind_ = Kind::Poly;
  c.params_ = std::move(coeffs);
  return c;
}

ExactValue UsageCost::value(std::int64_t y) const {
  if (y < 0) throw DomainError("usage cost evaluated at negative load");
  switch (kind_) {
    case Kind::Constant:
      return params_[0];
    case Kind::AffineClamp: {
      ExactValue v = params_[0] * ExactValue(y) - params_[1];
      return v.is_negative() ? ExactValue(0) : v;
    }
    case Kind::Poly:
      return eval_poly(params_, y);
  }
  throw InternalError("unhandled usage cost kind");
}

void UsageCost::check_nondecreasing_convex(std::int64_t y_max) const {
  ExactValue prev = value(0);
  ExactValue prev_step(0);
  bool have_step = false;
  for (std::int64_t y = 1; y <= y_max; ++y) {
    const ExactValue cur = value(y);
    const ExactValue step = cur - prev;
    if (step.is_negative())
      throw InputError("usage cost is decreasing at y=" + std::to_string(y));
    if (have_step && step < prev_step)
      throw InputError("usage cost is not convex at y=" + std::to_string(y));
    prev = cur;
    prev_step = step;
    have_step = true;
  }
}

CostFunction CostFunction::mm1(std::int64_t u) {
  if (u < 1) throw InputError("mm1 capacity must be at least 1");
  CostFunction c;
  c.family_ = Family::Mm1;
  c.i_param_ = u;
  return c;
}

CostFunction CostFunction::scaled_congestion(UsageCost inner) {
  inner.check_nondecreasing_convex(32);
  CostFunction c;
  c.family_ = Family::ScaledCongestion;
  c.inner_ = std::move(inner);
  return c;
}

CostFunction CostFunction::matroid_binary(UsageCost inner) {
  // Only monotonicity matters on the binary domain.
  ExactValue prev = inner.value(0);
  for (std::int64_t y = 1; y <= 32; ++y) {
    const ExactValue cur = inner.value(y);
    if (cur < prev) throw InputError("matroid-binary usage cost must be nondecreasing");
    prev = cur;
  }
  CostFunction c;
  c.family_ = Family::MatroidBinary;
  c.inner_ = std::move(inner);
  return c;
}

CostFunction CostFunction::polynomial(std::vector<ExactValue> sum_coeffs,
                                      std::vector<ExactValue> x_coeffs) {
  require_nonnegative_finite(sum_coeffs, "polynomial cost (x+t part)");
  require_nonnegative_finite(x_coeffs, "polynomial cost (x part)");
  if (sum_coeffs.empty() && x_coeffs.empty())
    throw InputError("polynomial cost needs at least one coefficient list");
  CostFunction c;
  c.family_ = Family::Polynomial;
  c.sum_coeffs_ = std::move(sum_coeffs);
  c.x_coeffs_ = std::move(x_coeffs);
  return c;
}

CostFunction CostFunction::custom_table(std::int64_t x_max, std::int64_t t_max,
                                        std::vector<ExactValue> values) {
  if (x_max < 0 || t_max < 0) throw InputError("custom table bounds must be nonnegative");
  if (values.size() != static_cast<std::size_t>((x_max + 1) * (t_max + 1)))
    throw InputError("custom table needs (x_max+1)*(t_max+1) values");
  for (const auto& v : values)
    if (v.is_negative()) throw InputError("custom table values must be nonnegative");
  CostFunction c;
  c.family_ = Family::CustomTable;
  c.i_param_ = x_max;
  c.t_param_ = t_max;
  c.sum_coeffs_ = std::move(values);
  return c;
}

const UsageCost& CostFunction::inner() const {
  if (!inner_) throw DomainError("cost family has no inner usage cost");
  return *inner_;
}

ExactValue CostFunction::value(std::int64_t x, std::int64_t t) const {
  if (x < 0 || t < 0) throw DomainError("cost evaluated at negative argument");
  switch (family_) {
    case Family::Mm1:
      if (x + t >= i_param_) return ExactValue::infinity();
      return ExactValue::fraction(1, i_param_ - t - x);
    case Family::ScaledCongestion:
      return inner_->value(x + t) * ExactValue(x);
    case Family::MatroidBinary:
      if (x > 1) throw DomainError("matroid-binary cost is only defined for x in {0,1}");
      return x == 0 ? ExactValue(0) : inner_->value(1 + t);
    case Family::Polynomial:
      return eval_poly(sum_coeffs_, x + t) + eval_poly(x_coeffs_, x);
    case Family::CustomTable:
      if (x > i_param_ || t > t_param_)
        throw DomainError("custom table evaluated outside its domain");
      return sum_coeffs_[static_cast<std::size_t>(x * (t_param_ + 1) + t)];
  }
  throw InternalError("unhandled cost family");
}

ExactValue CostFunction::left_derivative(std::int64_t x, std::int64_t t) const {
  if (x < 1) throw DomainError("left derivative is only defined for x >= 1");
  const ExactValue hi = value(x, t);
  if (hi.is_infinite()) return ExactValue::infinity();
  const ExactValue lo = value(x - 1, t);
  if (lo.is_infinite())
    throw DomainError("cost drops from infinity; derivative undefined");
  return hi - lo;
}

ExactValue CostFunction::right_derivative(std::int64_t x, std::int64_t t) const {
  return left_derivative(x + 1, t);
}

std::optional<std::int64_t> CostFunction::usage_limit() const {
  if (family_ == Family::MatroidBinary) return 1;
  if (family_ == Family::CustomTable) return i_param_;
  return std::nullopt;
}

std::optional<RegularityWitness> find_regularity_violation(const CostFunction& c,
                                                           std::int64_t x_max,
                                                           std::int64_t t_max) {
  if (x_max < 1 || t_max < 0) throw DomainError("regularity box must have x_max >= 1, t_max >= 0");
  std::int64_t x_hi = x_max;
  if (auto limit = c.usage_limit()) x_hi = std::min(x_hi, *limit);
  std::int64_t t_hi = t_max;
  if (c.family() == CostFunction::Family::CustomTable)
    t_hi = std::min(t_hi, c.table_t_max() - 1);
  for (std::int64_t x = 1; x <= x_hi; ++x) {
    const bool next_in_domain = !c.usage_limit() || x + 1 <= *c.usage_limit();
    for (std::int64_t t = 0; t <= t_hi; ++t) {
      const ExactValue d_here = c.left_derivative(x, t);
      const ExactValue d_bumped = c.left_derivative(x, t + 1);
      if (d_bumped < d_here)
        return RegularityWitness{x, t, RegularityWitness::Condition::DerivativeMonotone};
      if (next_in_domain && c.left_derivative(x + 1, t) < d_bumped)
        return RegularityWitness{x, t, RegularityWitness::Condition::ShiftDominance};
    }
  }
  return std::nullopt;
}

std::optional<std::pair<std::int64_t, std::int64_t>> find_convexity_violation(
    const CostFunction& c, std::int64_t x_max, std::int64_t t_max) {
  std::int64_t x_hi = x_max;
  if (auto limit = c.usage_limit()) x_hi = std::min(x_hi, *limit - 1);
  for (std::int64_t x = 1; x <= x_hi; ++x)
    for (std::int64_t t = 0; t <= t_max; ++t)
      if (c.right_derivative(x, t) < c.left_derivative(x, t)) return std::make_pair(x, t);
  return std::nullopt;
}

}  // namespace pmx
