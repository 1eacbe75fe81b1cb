#include "core/rank.hpp"

#include <algorithm>
#include <numeric>

namespace pmx {

struct RankFunction::Node {
  Kind kind;
  // ExplicitTable / MatroidTable
  std::vector<std::int64_t> table;
  // Truncated / Scaled
  std::shared_ptr<const Node> child;
  std::int64_t parameter = 0;  // d, k, or demand
  // GraphicMatroid
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  // SingletonCover
  SubsetMask members = 0;
};

RankFunction::RankFunction(GroundSet ground, std::shared_ptr<const Node> node)
    : ground_(std::move(ground)), node_(std::move(node)) {}

RankFunction::Kind RankFunction::kind() const { return node_->kind; }

namespace {

int component_count(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                    SubsetMask edge_set) {
  std::vector<int> parent(num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = num_vertices;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (!mask_contains(edge_set, e)) continue;
    const int a = find(edges[e].first);
    const int b = find(edges[e].second);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

void validate_table(const GroundSet& ground, const std::vector<std::int64_t>& table) {
  const int m = ground.size();
  if (table.size() != (std::size_t{1} << m))
    throw InputError("rank table must have exactly 2^m entries");
  if (table[0] != 0) throw InputError("rank table is not normalized: f(empty) != 0");
  for (SubsetMask u = 0; u <= full_mask(m); ++u) {
    if (table[u] < 0) throw InputError("rank table has a negative value");
    for (int v = 0; v < m; ++v) {
      if (mask_contains(u, v)) continue;
      if (table[u] > table[u | (SubsetMask{1} << v)])
        throw InputError("rank table is not monotone at subset plus element \"" +
                         ground.label(v) + "\"");
    }
  }
}

}  // namespace

std::int64_t RankFunction::eval(const Node& n, SubsetMask u) {
  switch (n.kind) {
    case Kind::ExplicitTable:
    case Kind::MatroidTable:
      return n.table[u];
    case Kind::Truncated:
      return std::min(n.parameter, eval(*n.child, u));
    case Kind::Scaled:
      return n.parameter * eval(*n.child, u);
    case Kind::GraphicMatroid:
      return n.num_vertices - component_count(n.num_vertices, n.edges, u);
    case Kind::SingletonCover:
      return (u & n.members) != 0 ? n.parameter : 0;
  }
  throw InternalError("unhandled rank kind");
}

std::int64_t RankFunction::value(SubsetMask u) const {
  if (u > full_mask(ground_.size())) throw DomainError("subset mask outside the ground set");
  return eval(*node_, u);
}

RankFunction RankFunction::explicit_table(GroundSet ground, std::vector<std::int64_t> values) {
  validate_table(ground, values);
  auto node = std::make_shared<Node>();
  node->kind = Kind::ExplicitTable;
  node->table = std::move(values);
  return RankFunction(std::move(ground), std::move(node));
}

RankFunction RankFunction::matroid_table(GroundSet ground, std::vector<std::int64_t> values) {
  validate_table(ground, values);
  const int m = ground.size();
  for (SubsetMask u = 0; u <= full_mask(m); ++u) {
    for (int v = 0; v < m; ++v) {
      if (mask_contains(u, v)) continue;
      const std::int64_t inc = values[u | (SubsetMask{1} << v)] - values[u];
      if (inc < 0 || inc > 1)
        throw InputError("matroid rank table: unit increment outside {0,1}");
    }
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::MatroidTable;
  node->table = std::move(values);
  RankFunction f(std::move(ground), std::move(node));
  if (find_submodularity_violation(f))
    throw InputError("matroid rank table is not submodular");
  return f;
}

RankFunction RankFunction::truncated(RankFunction f, std::int64_t d) {
  if (d < 0) throw InputError("truncation level must be nonnegative");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Truncated;
  node->child = f.node_;
  node->parameter = d;
  return RankFunction(f.ground_, std::move(node));
}

RankFunction RankFunction::scaled(RankFunction f, std::int64_t k) {
  if (k < 1) throw InputError("scale factor must be at least 1; use an explicit zero function");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Scaled;
  node->child = f.node_;
  node->parameter = k;
  return RankFunction(f.ground_, std::move(node));
}

RankFunction RankFunction::graphic_matroid(GroundSet ground, int num_vertices,
                                           std::vector<std::pair<int, int>> edges) {
  if (num_vertices < 1) throw InputError("graphic matroid needs at least one vertex");
  if (edges.size() != static_cast<std::size_t>(ground.size()))
    throw InputError("graphic matroid: edge count must match the ground set size");
  for (const auto& [a, b] : edges)
    if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices)
      throw InputError("graphic matroid: edge endpoint out of range");
  if (component_count(num_vertices, edges, full_mask(ground.size())) != 1)
    throw InputError("graphic matroid: graph must be connected");
  auto node = std::make_shared<Node>();
  node->kind = Kind::GraphicMatroid;
  node->num_vertices = num_vertices;
  node->edges = std::move(edges);
  return RankFunction(std::move(ground), std::move(node));
}

RankFunction RankFunction::singleton_cover(GroundSet ground, SubsetMask members,
                                           std::int64_t demand) {
  if (demand < 0) throw InputError("singleton cover demand must be nonnegative");
  if (members == 0) throw InputError("singleton cover needs a non-empty member set");
  if (members > full_mask(ground.size()))
    throw InputError("singleton cover members outside the ground set");
  auto node = std::make_shared<Node>();
  node->kind = Kind::SingletonCover;
  node->members = members;
  node->parameter = demand;
  return RankFunction(std::move(ground), std::move(node));
}

RankFunction RankFunction::child_function() const {
  if (!node_->child) throw DomainError("rank function has no child");
  return RankFunction(ground_, node_->child);
}

std::int64_t RankFunction::parameter() const { return node_->parameter; }
SubsetMask RankFunction::member_mask() const { return node_->members; }
int RankFunction::num_vertices() const { return node_->num_vertices; }
const std::vector<std::pair<int, int>>& RankFunction::edges() const { return node_->edges; }
const std::vector<std::int64_t>& RankFunction::table() const { return node_->table; }

std::optional<SubmodularityViolationWitness> find_submodularity_violation(const RankFunction& f) {
  const int m = f.ground().size();
  // Materialize once; the pairwise scan touches every value many times.
  std::vector<std::int64_t> val(std::size_t{1} << m);
  for (SubsetMask u = 0; u <= full_mask(m); ++u) val[u] = f.value(u);
  for (SubsetMask base = 0; base <= full_mask(m); ++base) {
    for (int a = 0; a < m; ++a) {
      if (mask_contains(base, a)) continue;
      const SubsetMask with_a = base | (SubsetMask{1} << a);
      for (int b = a + 1; b < m; ++b) {
        if (mask_contains(base, b)) continue;
        const SubsetMask with_b = base | (SubsetMask{1} << b);
        if (val[with_a] + val[with_b] < val[base] + val[with_a | with_b])
          return SubmodularityViolationWitness{with_a, with_b};
      }
    }
  }
  return std::nullopt;
}

std::optional<MonotonicityViolationWitness> find_monotonicity_violation(const RankFunction& f) {
  const int m = f.ground().size();
  if (f.value(0) != 0) return MonotonicityViolationWitness{0, 0};
  for (SubsetMask u = 0; u <= full_mask(m); ++u) {
    const std::int64_t fu = f.value(u);
    if (fu < 0) return MonotonicityViolationWitness{u, u};
    for (int v = 0; v < m; ++v) {
      if (mask_contains(u, v)) continue;
      const SubsetMask bigger = u | (SubsetMask{1} << v);
      if (fu > f.value(bigger)) return MonotonicityViolationWitness{u, bigger};
    }
  }
  return std::nullopt;
}

bool is_strictly_positive(const RankFunction& f) {
  for (int e = 0; e < f.ground().size(); ++e)
    if (f.value(SubsetMask{1} << e) <= 0) return false;
  return true;
}

}  // namespace pmx
