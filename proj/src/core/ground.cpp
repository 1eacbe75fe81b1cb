#include "core/ground.hpp"

namespace pmx {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InputError("ground set must be non-empty");
  if (static_cast<int>(labels_.size()) > kMaxGroundSize)
    throw InputError("ground set exceeds the enumeration cap of " +
                     std::to_string(kMaxGroundSize) + " elements");
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    if (labels_[i].empty()) throw InputError("empty element label");
    if (!index_.emplace(labels_[i], i).second)
      throw InputError("duplicate element label \"" + labels_[i] + "\"");
  }
}

GroundSet GroundSet::indexed(int m) {
  std::vector<std::string> labels;
  labels.reserve(m);
  for (int i = 0; i < m; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

const std::string& GroundSet::label(int e) const {
  if (e < 0 || e >= size()) throw DomainError("element index out of range");
  return labels_[e];
}

int GroundSet::index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw DomainError("unknown element \"" + label + "\"");
  return it->second;
}

std::vector<std::string> GroundSet::label_list(SubsetMask u) const {
  std::vector<std::string> out;
  for (int e = 0; e < size(); ++e)
    if (mask_contains(u, e)) out.push_back(labels_[e]);
  return out;
}

}  // namespace pmx
