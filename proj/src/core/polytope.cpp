#include "core/polytope.hpp"

namespace pmx {

Allocation::Allocation(std::vector<std::int64_t> v) : v_(std::move(v)) {
  if (v_.empty()) throw DomainError("allocation over an empty ground set");
  for (auto x : v_)
    if (x < 0) throw DomainError("allocation entries must be nonnegative");
}

std::int64_t Allocation::total() const {
  std::int64_t s = 0;
  for (auto x : v_) s += x;
  return s;
}

std::int64_t Allocation::sum_over(SubsetMask u) const {
  std::int64_t s = 0;
  for (int e = 0; e < size(); ++e)
    if (mask_contains(u, e)) s += v_[e];
  return s;
}

SubsetMask Allocation::support() const {
  SubsetMask u = 0;
  for (int e = 0; e < size(); ++e)
    if (v_[e] > 0) u |= SubsetMask{1} << e;
  return u;
}

Allocation Allocation::plus_unit(int e) const {
  if (e < 0 || e >= size()) throw DomainError("element index out of range");
  Allocation y = *this;
  ++y.v_[e];
  return y;
}

Allocation Allocation::minus_unit(int e) const {
  if (e < 0 || e >= size()) throw DomainError("element index out of range");
  if (v_[e] == 0) throw DomainError("decrement below zero");
  Allocation y = *this;
  --y.v_[e];
  return y;
}

std::int64_t Allocation::l1_distance(const Allocation& o) const {
  if (o.size() != size()) throw DomainError("allocation size mismatch");
  std::int64_t s = 0;
  for (int e = 0; e < size(); ++e) s += std::abs(v_[e] - o.v_[e]);
  return s;
}

bool polytope_member(const RankFunction& f, const Allocation& x) {
  const int m = f.ground().size();
  if (x.size() != m) throw DomainError("allocation does not index the ground set");
  for (SubsetMask u = 1; u <= full_mask(m); ++u)
    if (x.sum_over(u) > f.value(u)) return false;
  return true;
}

bool member(const BasePolytope& b, const Allocation& x) {
  if (x.size() != b.f.ground().size())
    throw DomainError("allocation does not index the ground set");
  return x.total() == b.d && polytope_member(b.f, x);
}

std::vector<int> exchange_targets(const BasePolytope& b, const Allocation& x, int e) {
  if (!member(b, x)) throw DomainError("exchange set of an infeasible allocation");
  std::vector<int> out;
  if (x[e] == 0) return out;
  const Allocation removed = x.minus_unit(e);
  for (int g = 0; g < x.size(); ++g) {
    if (g == e) continue;
    if (member(b, removed.plus_unit(g))) out.push_back(g);
  }
  return out;
}

std::vector<int> slack_elements(const BasePolytope& b, const Allocation& x) {
  if (!member(b, x)) throw DomainError("slack set of an infeasible allocation");
  std::vector<int> out;
  for (int e = 0; e < x.size(); ++e)
    if (polytope_member(b.f, x.plus_unit(e))) out.push_back(e);
  return out;
}

}  // namespace pmx
