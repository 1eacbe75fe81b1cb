#pragma once

#include <cstdint>
#include <vector>

#include "core/rank.hpp"

namespace pmx {

// Integer point indexed by the ground set; entries are nonnegative.
class Allocation {
 public:
  explicit Allocation(int m) : v_(m, 0) {}
  explicit Allocation(std::vector<std::int64_t> v);

  int size() const { return static_cast<int>(v_.size()); }
  std::int64_t operator[](int e) const { return v_[e]; }
  const std::vector<std::int64_t>& values() const { return v_; }

  std::int64_t total() const;
  std::int64_t sum_over(SubsetMask u) const;
  SubsetMask support() const;

  // Elementary steps. These do not validate polytope membership; callers do.
  Allocation plus_unit(int e) const;
  Allocation minus_unit(int e) const;  // DomainError if the entry is zero
  Allocation exchanged(int from, int to) const { return minus_unit(from).plus_unit(to); }

  std::int64_t l1_distance(const Allocation& o) const;

  bool operator==(const Allocation& o) const { return v_ == o.v_; }
  bool operator!=(const Allocation& o) const { return v_ != o.v_; }
  bool operator<(const Allocation& o) const { return v_ < o.v_; }  // lexicographic

 private:
  std::vector<std::int64_t> v_;
};

// The integer points x with x(U) <= f(U) for all U and x(E) = d.
struct BasePolytope {
  RankFunction f;
  std::int64_t d = 0;
};

// Exhaustive membership test over all 2^m subset constraints.
bool member(const BasePolytope& b, const Allocation& x);

// Membership in the untruncated polytope: x(U) <= f(U) for all U, any total.
bool polytope_member(const RankFunction& f, const Allocation& x);

// Feasible local exchanges for e: all g != e with x - chi_e + chi_g in the
// base polytope. Empty when x_e = 0 (so the exchange bound is vacuous there).
// Requires x in the base polytope. Ascending element order.
std::vector<int> exchange_targets(const BasePolytope& b, const Allocation& x, int e);

// Elements whose unit increment stays feasible one rank higher:
// { e : x + chi_e in B_f(d+1) }. Requires x in the base polytope.
std::vector<int> slack_elements(const BasePolytope& b, const Allocation& x);

}  // namespace pmx
