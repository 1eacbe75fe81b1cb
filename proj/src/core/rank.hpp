#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "core/ground.hpp"

namespace pmx {

// Integral set function f : 2^E -> N on a ground set.
//
// Construction guarantees f is normalized (f(empty) = 0) and monotone;
// explicit tables are validated, composite constructors preserve both.
// Submodularity is deliberately NOT an invariant: it is a checkable
// property, and non-submodular functions are first-class inputs (they feed
// the counterexample constructions).
class RankFunction {
 public:
  enum class Kind {
    ExplicitTable,
    Truncated,
    Scaled,
    GraphicMatroid,
    SingletonCover,
    MatroidTable,
  };

  // values_by_mask has 2^m entries indexed by subset bitmask. Validated:
  // nonnegative, normalized, monotone.
  static RankFunction explicit_table(GroundSet ground, std::vector<std::int64_t> values_by_mask);

  // Same storage as an explicit table, additionally validated to satisfy the
  // matroid rank axioms (unit increments, submodular, subcardinal).
  static RankFunction matroid_table(GroundSet ground, std::vector<std::int64_t> values_by_mask);

  // f'(U) = min(d, f(U)). Preserves submodularity.
  static RankFunction truncated(RankFunction f, std::int64_t d);

  // (k f)(U) = k * f(U), k >= 1.
  static RankFunction scaled(RankFunction f, std::int64_t k);

  // Rank of the graphic matroid of a connected undirected multigraph:
  // rank(U) = |V| - #components(V, U). Edges are the ground elements, in
  // order. Disconnected graphs are rejected (spanning-tree semantics).
  static RankFunction graphic_matroid(GroundSet ground, int num_vertices,
                                      std::vector<std::pair<int, int>> edges);

  // f(U) = demand if U intersects members, else 0.
  static RankFunction singleton_cover(GroundSet ground, SubsetMask members, std::int64_t demand);

  const GroundSet& ground() const { return ground_; }
  Kind kind() const;

  // f(U); element indices outside the ground set cannot be expressed, so the
  // only domain check is the mask width.
  std::int64_t value(SubsetMask u) const;
  std::int64_t value_of_all() const { return value(full_mask(ground_.size())); }

  // Structure of composite kinds, for serialization.
  RankFunction child_function() const;  // Truncated / Scaled
  std::int64_t parameter() const;  // d for Truncated, k for Scaled, demand for SingletonCover
  SubsetMask member_mask() const;  // SingletonCover
  int num_vertices() const;        // GraphicMatroid
  const std::vector<std::pair<int, int>>& edges() const;  // GraphicMatroid
  const std::vector<std::int64_t>& table() const;         // ExplicitTable / MatroidTable

 private:
  struct Node;
  RankFunction(GroundSet ground, std::shared_ptr<const Node> node);
  static std::int64_t eval(const Node& n, SubsetMask u);

  GroundSet ground_;
  std::shared_ptr<const Node> node_;
};

// Witness of a submodularity violation: f(s) + f(t) < f(s&t) + f(s|t).
struct SubmodularityViolationWitness {
  SubsetMask s;
  SubsetMask t;
};

// Exhaustive submodularity check via the pairwise local criterion
// f(V+u) + f(V+v) >= f(V+u+v) + f(V); a local violation yields the witness
// pair (V+u, V+v), which satisfies the strict set-pair inequality exactly.
std::optional<SubmodularityViolationWitness> find_submodularity_violation(const RankFunction& f);
inline bool is_submodular(const RankFunction& f) { return !find_submodularity_violation(f); }

// Witness: either f(empty) != 0 (t == 0) or u subset of t with f(u) > f(t).
struct MonotonicityViolationWitness {
  SubsetMask u;
  SubsetMask t;
};

std::optional<MonotonicityViolationWitness> find_monotonicity_violation(const RankFunction& f);
inline bool is_monotone_normalized(const RankFunction& f) {
  return !find_monotonicity_violation(f);
}

// f(U) > 0 for every non-empty U. Requires a monotone f (checks singletons).
bool is_strictly_positive(const RankFunction& f);

}  // namespace pmx
