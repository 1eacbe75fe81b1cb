#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace pmx {

// Subsets of a ground set are bitmasks over dense element indices.
using SubsetMask = std::uint32_t;

// Hard cap on ground-set size: every check in this library enumerates 2^m
// subsets, and masks are 32-bit.
inline constexpr int kMaxGroundSize = 20;

inline int popcount(SubsetMask u) { return __builtin_popcount(u); }
inline SubsetMask full_mask(int m) { return (SubsetMask{1} << m) - 1; }
inline bool mask_contains(SubsetMask u, int e) { return (u >> e) & 1u; }

// Ordered ground set: dense indices 0..m-1 with unique string labels.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels);

  // Labels "0", "1", ..., "m-1".
  static GroundSet indexed(int m);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int e) const;
  int index(const std::string& label) const;  // DomainError if unknown
  bool has(const std::string& label) const { return index_.count(label) > 0; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::vector<std::string> label_list(SubsetMask u) const;

  bool operator==(const GroundSet& o) const { return labels_ == o.labels_; }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
};

}  // namespace pmx
