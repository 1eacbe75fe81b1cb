#include "core/io.hpp"

#include <algorithm>
#include <set>

namespace pmx {

namespace {

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
}

void expect_object(const Json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
}

void expect_keys(const Json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  expect_object(j, where);
  for (const auto& [key, value] : j.items()) {
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* a) { return key == a; }) == allowed.end())
      throw InputError(where + ": unknown field \"" + key + "\"");
  }
}

const Json& require(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field \"" + key + "\"");
  return *it;
}

std::int64_t parse_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<std::int64_t>();
}

std::int64_t parse_nonneg(const Json& j, const std::string& where) {
  const auto v = parse_int(j, where);
  if (v < 0) throw InputError(where + ": expected a nonnegative integer");
  return v;
}

GroundSet parse_ground(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InputError(where + ": expected a non-empty array of labels");
  std::vector<std::string> labels;
  for (const auto& item : j) {
    if (!item.is_string()) throw InputError(where + ": labels must be strings");
    labels.push_back(item.get<std::string>());
  }
  return GroundSet(std::move(labels));
}

SubsetMask parse_subset(const GroundSet& ground, const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of labels");
  SubsetMask u = 0;
  for (const auto& item : j) {
    if (!item.is_string()) throw InputError(where + ": labels must be strings");
    const int e = [&] {
      try {
        return ground.index(item.get<std::string>());
      } catch (const DomainError& err) {
        throw InputError(where + ": " + err.what());
      }
    }();
    const SubsetMask bit = SubsetMask{1} << e;
    if (u & bit) throw InputError(where + ": repeated label");
    u |= bit;
  }
  return u;
}

std::vector<ExactValue> parse_exact_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  std::vector<ExactValue> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_exact(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

ExactValue parse_exact(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return ExactValue(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return ExactValue::parse(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ": expected an integer or an exact string like \"1/2\" or \"inf\"");
}

RankFunction parse_rank(const GroundSet& ground, const Json& j, const std::string& where) {
  expect_object(j, where);
  const std::string kind = require(j, "kind", where).is_string()
                               ? j["kind"].get<std::string>()
                               : throw InputError(where + ".kind: expected a string");
  if (kind == "explicit-table" || kind == "matroid-from-rank-table") {
    expect_keys(j, where, {"kind", "table"});
    const Json& table = require(j, "table", where);
    if (!table.is_array()) throw InputError(where + ".table: expected an array");
    const int m = ground.size();
    std::vector<std::int64_t> values(std::size_t{1} << m, -1);
    values[0] = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
      const std::string row_where = where + ".table[" + std::to_string(i) + "]";
      expect_keys(table[i], row_where, {"subset", "value"});
      const SubsetMask u = parse_subset(ground, require(table[i], "subset", row_where), row_where);
      if (values[u] >= 0 && u != 0) throw InputError(row_where + ": duplicate subset");
      const std::int64_t v = parse_nonneg(require(table[i], "value", row_where), row_where);
      if (u == 0 && v != 0) throw InputError(row_where + ": the empty set must map to 0");
      values[u] = v;
    }
    for (SubsetMask u = 1; u <= full_mask(m); ++u)
      if (values[u] < 0)
        throw InputError(where + ".table: missing subset " +
                         Json(ground.label_list(u)).dump());
    return kind == "explicit-table" ? RankFunction::explicit_table(ground, std::move(values))
                                    : RankFunction::matroid_table(ground, std::move(values));
  }
  if (kind == "graphic-matroid") {
    expect_keys(j, where, {"kind", "vertices", "edges"});
    const auto vertices = parse_nonneg(require(j, "vertices", where), where + ".vertices");
    const Json& edges = require(j, "edges", where);
    if (!edges.is_array()) throw InputError(where + ".edges: expected an array of [u,v] pairs");
    std::vector<std::pair<int, int>> list;
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 2)
        throw InputError(where + ".edges: each edge is a [u,v] pair");
      list.emplace_back(static_cast<int>(parse_nonneg(e[0], where + ".edges")),
                        static_cast<int>(parse_nonneg(e[1], where + ".edges")));
    }
    return RankFunction::graphic_matroid(ground, static_cast<int>(vertices), std::move(list));
  }
  if (kind == "truncated") {
    expect_keys(j, where, {"kind", "d", "of"});
    return RankFunction::truncated(parse_rank(ground, require(j, "of", where), where + ".of"),
                                   parse_nonneg(require(j, "d", where), where + ".d"));
  }
  if (kind == "scaled") {
    expect_keys(j, where, {"kind", "k", "of"});
    return RankFunction::scaled(parse_rank(ground, require(j, "of", where), where + ".of"),
                                parse_nonneg(require(j, "k", where), where + ".k"));
  }
  if (kind == "singleton-cover") {
    expect_keys(j, where, {"kind", "members", "demand"});
    return RankFunction::singleton_cover(
        ground, parse_subset(ground, require(j, "members", where), where + ".members"),
        parse_nonneg(require(j, "demand", where), where + ".demand"));
  }
  throw InputError(where + ": unknown rank kind \"" + kind + "\"");
}

UsageCost parse_usage(const Json& j, const std::string& where) {
  expect_object(j, where);
  const Json& kind_j = require(j, "kind", where);
  if (!kind_j.is_string()) throw InputError(where + ".kind: expected a string");
  const std::string kind = kind_j.get<std::string>();
  if (kind == "constant") {
    expect_keys(j, where, {"kind", "value"});
    return UsageCost::constant(parse_exact(require(j, "value", where), where + ".value"));
  }
  if (kind == "affine-clamp") {
    expect_keys(j, where, {"kind", "a", "b"});
    return UsageCost::affine_clamp(parse_exact(require(j, "a", where), where + ".a"),
                                   parse_exact(require(j, "b", where), where + ".b"));
  }
  if (kind == "poly") {
    expect_keys(j, where, {"kind", "coeffs"});
    return UsageCost::poly(parse_exact_list(require(j, "coeffs", where), where + ".coeffs"));
  }
  throw InputError(where + ": unknown usage-cost kind \"" + kind + "\"");
}

CostFunction parse_cost(const Json& j, const std::string& where) {
  expect_object(j, where);
  const Json& family_j = require(j, "family", where);
  if (!family_j.is_string()) throw InputError(where + ".family: expected a string");
  const std::string family = family_j.get<std::string>();
  if (family == "mm1") {
    expect_keys(j, where, {"family", "u"});
    return CostFunction::mm1(parse_nonneg(require(j, "u", where), where + ".u"));
  }
  if (family == "scaled-congestion") {
    expect_keys(j, where, {"family", "c"});
    return CostFunction::scaled_congestion(parse_usage(require(j, "c", where), where + ".c"));
  }
  if (family == "matroid-binary") {
    expect_keys(j, where, {"family", "c"});
    return CostFunction::matroid_binary(parse_usage(require(j, "c", where), where + ".c"));
  }
  if (family == "polynomial") {
    expect_keys(j, where, {"family", "sum_coeffs", "x_coeffs"});
    std::vector<ExactValue> sum, xs;
    if (j.contains("sum_coeffs")) sum = parse_exact_list(j["sum_coeffs"], where + ".sum_coeffs");
    if (j.contains("x_coeffs")) xs = parse_exact_list(j["x_coeffs"], where + ".x_coeffs");
    return CostFunction::polynomial(std::move(sum), std::move(xs));
  }
  if (family == "custom-table") {
    expect_keys(j, where, {"family", "x_max", "t_max", "values"});
    const auto x_max = parse_nonneg(require(j, "x_max", where), where + ".x_max");
    const auto t_max = parse_nonneg(require(j, "t_max", where), where + ".t_max");
    const Json& rows = require(j, "values", where);
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(x_max + 1))
      throw InputError(where + ".values: expected x_max+1 rows");
    std::vector<ExactValue> values;
    for (std::size_t x = 0; x < rows.size(); ++x) {
      if (!rows[x].is_array() || rows[x].size() != static_cast<std::size_t>(t_max + 1))
        throw InputError(where + ".values: each row needs t_max+1 entries");
      for (const auto& cell : rows[x])
        values.push_back(parse_exact(cell, where + ".values"));
    }
    return CostFunction::custom_table(x_max, t_max, std::move(values));
  }
  throw InputError(where + ": unknown cost family \"" + family + "\"");
}

namespace {

// Per-element map with an optional "*" default entry.
template <typename T>
std::vector<T> parse_element_map(const GroundSet& ground, const Json& j, const std::string& where,
                                 T (*parse_one)(const Json&, const std::string&)) {
  expect_object(j, where);
  std::optional<T> fallback;
  if (j.contains("*")) fallback = parse_one(j["*"], where + ".*");
  std::vector<std::optional<T>> out(ground.size());
  for (const auto& [key, value] : j.items()) {
    if (key == "*") continue;
    if (!ground.has(key)) throw InputError(where + ": unknown element \"" + key + "\"");
    out[ground.index(key)] = parse_one(value, where + "." + key);
  }
  std::vector<T> final_out;
  for (int e = 0; e < ground.size(); ++e) {
    if (out[e])
      final_out.push_back(std::move(*out[e]));
    else if (fallback)
      final_out.push_back(*fallback);
    else
      throw InputError(where + ": no entry for element \"" + ground.label(e) +
                       "\" and no \"*\" default");
  }
  return final_out;
}

std::vector<std::int64_t> parse_t_vector(const GroundSet& ground, const Json* j,
                                         const std::string& where) {
  std::vector<std::int64_t> t(ground.size(), 0);
  if (!j) return t;
  expect_object(*j, where);
  for (const auto& [key, value] : j->items()) {
    if (!ground.has(key)) throw InputError(where + ": unknown element \"" + key + "\"");
    t[ground.index(key)] = parse_nonneg(value, where + "." + key);
  }
  return t;
}

std::string schema_of(const Json& root, const std::string& where) {
  const Json& s = require(root, "schema", where);
  if (!s.is_string()) throw InputError(where + ".schema: expected a string");
  return s.get<std::string>();
}

}  // namespace

std::string peek_schema(const std::string& text) {
  return schema_of(parse_text(text), "document");
}

ProblemInstance parse_instance(const std::string& text) {
  const Json root = parse_text(text);
  expect_keys(root, "instance", {"schema", "ground_set", "rank", "d", "t", "costs"});
  if (schema_of(root, "instance") != kInstanceSchema)
    throw InputError("instance.schema: expected \"" + std::string(kInstanceSchema) + "\"");
  GroundSet ground = parse_ground(require(root, "ground_set", "instance"), "instance.ground_set");
  RankFunction rank = parse_rank(ground, require(root, "rank", "instance"), "instance.rank");
  const auto d = parse_nonneg(require(root, "d", "instance"), "instance.d");
  const Json* t_json = root.contains("t") ? &root["t"] : nullptr;
  auto t = parse_t_vector(ground, t_json, "instance.t");
  auto costs = parse_element_map<CostFunction>(ground, require(root, "costs", "instance"),
                                               "instance.costs", &parse_cost);
  return ProblemInstance(BasePolytope{std::move(rank), d}, std::move(t), std::move(costs));
}

Game parse_game(const std::string& text) {
  const Json root = parse_text(text);
  if (schema_of(root, "game") != kGameSchema)
    throw InputError("game.schema: expected \"" + std::string(kGameSchema) + "\"");
  std::string kind = "polymatroid";
  if (root.contains("kind")) {
    if (!root["kind"].is_string()) throw InputError("game.kind: expected a string");
    kind = root["kind"].get<std::string>();
  }

  if (kind == "polymatroid") {
    expect_keys(root, "game", {"schema", "kind", "resources", "players"});
    GroundSet resources =
        parse_ground(require(root, "resources", "game"), "game.resources");
    const Json& players_j = require(root, "players", "game");
    if (!players_j.is_array() || players_j.empty())
      throw InputError("game.players: expected a non-empty array");
    std::vector<Player> players;
    for (std::size_t i = 0; i < players_j.size(); ++i) {
      const std::string where = "game.players[" + std::to_string(i) + "]";
      expect_keys(players_j[i], where, {"name", "demand", "rank", "costs"});
      const Json& name_j = require(players_j[i], "name", where);
      if (!name_j.is_string()) throw InputError(where + ".name: expected a string");
      players.push_back(Player{
          name_j.get<std::string>(),
          parse_nonneg(require(players_j[i], "demand", where), where + ".demand"),
          parse_rank(resources, require(players_j[i], "rank", where), where + ".rank"),
          parse_element_map<CostFunction>(resources, require(players_j[i], "costs", where),
                                          where + ".costs", &parse_cost)});
    }
    return Game(std::move(resources), std::move(players));
  }

  if (kind == "singleton-integer-splittable") {
    expect_keys(root, "game", {"schema", "kind", "resources", "players", "shared_costs"});
    GroundSet resources =
        parse_ground(require(root, "resources", "game"), "game.resources");
    auto shared = parse_element_map<UsageCost>(
        resources, require(root, "shared_costs", "game"), "game.shared_costs", &parse_usage);
    const Json& players_j = require(root, "players", "game");
    if (!players_j.is_array() || players_j.empty())
      throw InputError("game.players: expected a non-empty array");
    std::vector<SingletonPlayerSpec> specs;
    for (std::size_t i = 0; i < players_j.size(); ++i) {
      const std::string where = "game.players[" + std::to_string(i) + "]";
      expect_keys(players_j[i], where, {"name", "members", "demand"});
      const Json& name_j = require(players_j[i], "name", where);
      if (!name_j.is_string()) throw InputError(where + ".name: expected a string");
      specs.push_back(SingletonPlayerSpec{
          name_j.get<std::string>(),
          parse_subset(resources, require(players_j[i], "members", where), where + ".members"),
          parse_nonneg(require(players_j[i], "demand", where), where + ".demand")});
    }
    return singleton_integer_splittable_game(std::move(resources), std::move(specs),
                                             std::move(shared));
  }

  if (kind == "matroid-congestion") {
    expect_keys(root, "game", {"schema", "kind", "resources", "players"});
    GroundSet resources =
        parse_ground(require(root, "resources", "game"), "game.resources");
    const Json& players_j = require(root, "players", "game");
    if (!players_j.is_array() || players_j.empty())
      throw InputError("game.players: expected a non-empty array");
    std::vector<MatroidPlayerSpec> specs;
    for (std::size_t i = 0; i < players_j.size(); ++i) {
      const std::string where = "game.players[" + std::to_string(i) + "]";
      expect_keys(players_j[i], where, {"name", "members", "matroid", "costs"});
      const Json& name_j = require(players_j[i], "name", where);
      if (!name_j.is_string()) throw InputError(where + ".name: expected a string");
      const Json& members_j = require(players_j[i], "members", where);
      if (!members_j.is_array() || members_j.empty())
        throw InputError(where + ".members: expected a non-empty array of labels");
      std::vector<std::string> members;
      for (const auto& v : members_j) {
        if (!v.is_string()) throw InputError(where + ".members: labels must be strings");
        members.push_back(v.get<std::string>());
      }
      GroundSet member_ground{members};
      RankFunction matroid = parse_rank(member_ground, require(players_j[i], "matroid", where),
                                        where + ".matroid");
      auto costs = parse_element_map<UsageCost>(
          member_ground, require(players_j[i], "costs", where), where + ".costs", &parse_usage);
      specs.push_back(MatroidPlayerSpec{name_j.get<std::string>(), std::move(members),
                                        std::move(matroid), std::move(costs)});
    }
    return matroid_congestion_game(std::move(resources), std::move(specs));
  }

  throw InputError("game.kind: unknown kind \"" + kind + "\"");
}

RankFunction parse_rank_input(const std::string& text) {
  const Json root = parse_text(text);
  const std::string schema = schema_of(root, "document");
  if (schema == kRankSchema) {
    expect_keys(root, "rank-file", {"schema", "ground_set", "rank"});
    GroundSet ground =
        parse_ground(require(root, "ground_set", "rank-file"), "rank-file.ground_set");
    return parse_rank(ground, require(root, "rank", "rank-file"), "rank-file.rank");
  }
  if (schema == kInstanceSchema) return parse_instance(text).base.f;
  throw InputError("expected a \"" + std::string(kRankSchema) + "\" or \"" +
                   std::string(kInstanceSchema) + "\" document");
}

Json rank_to_json(const RankFunction& f) {
  Json j;
  switch (f.kind()) {
    case RankFunction::Kind::ExplicitTable:
    case RankFunction::Kind::MatroidTable: {
      j["kind"] = f.kind() == RankFunction::Kind::ExplicitTable ? "explicit-table"
                                                                : "matroid-from-rank-table";
      Json rows = Json::array();
      for (SubsetMask u = 1; u <= full_mask(f.ground().size()); ++u)
        rows.push_back(Json{{"subset", f.ground().label_list(u)}, {"value", f.value(u)}});
      j["table"] = std::move(rows);
      return j;
    }
    case RankFunction::Kind::Truncated:
      return Json{{"kind", "truncated"},
                  {"d", f.parameter()},
                  {"of", rank_to_json(f.child_function())}};
    case RankFunction::Kind::Scaled:
      return Json{{"kind", "scaled"},
                  {"k", f.parameter()},
                  {"of", rank_to_json(f.child_function())}};
    case RankFunction::Kind::GraphicMatroid: {
      Json edges = Json::array();
      for (const auto& [a, b] : f.edges()) edges.push_back(Json::array({a, b}));
      return Json{{"kind", "graphic-matroid"},
                  {"vertices", f.num_vertices()},
                  {"edges", std::move(edges)}};
    }
    case RankFunction::Kind::SingletonCover:
      return Json{{"kind", "singleton-cover"},
                  {"members", f.ground().label_list(f.member_mask())},
                  {"demand", f.parameter()}};
  }
  throw InternalError("unhandled rank kind in serialization");
}

Json usage_to_json(const UsageCost& c) {
  switch (c.kind()) {
    case UsageCost::Kind::Constant:
      return Json{{"kind", "constant"}, {"value", c.params()[0].str()}};
    case UsageCost::Kind::AffineClamp:
      return Json{{"kind", "affine-clamp"}, {"a", c.params()[0].str()}, {"b", c.params()[1].str()}};
    case UsageCost::Kind::Poly: {
      Json coeffs = Json::array();
      for (const auto& v : c.params()) coeffs.push_back(v.str());
      return Json{{"kind", "poly"}, {"coeffs", std::move(coeffs)}};
    }
  }
  throw InternalError("unhandled usage-cost kind in serialization");
}

Json cost_to_json(const CostFunction& c) {
  switch (c.family()) {
    case CostFunction::Family::Mm1:
      return Json{{"family", "mm1"}, {"u", c.mm1_capacity()}};
    case CostFunction::Family::ScaledCongestion:
      return Json{{"family", "scaled-congestion"}, {"c", usage_to_json(c.inner())}};
    case CostFunction::Family::MatroidBinary:
      return Json{{"family", "matroid-binary"}, {"c", usage_to_json(c.inner())}};
    case CostFunction::Family::Polynomial: {
      Json sum = Json::array(), xs = Json::array();
      for (const auto& v : c.sum_coeffs()) sum.push_back(v.str());
      for (const auto& v : c.x_coeffs()) xs.push_back(v.str());
      return Json{{"family", "polynomial"}, {"sum_coeffs", std::move(sum)}, {"x_coeffs", std::move(xs)}};
    }
    case CostFunction::Family::CustomTable: {
      Json rows = Json::array();
      for (std::int64_t x = 0; x <= c.table_x_max(); ++x) {
        Json row = Json::array();
        for (std::int64_t t = 0; t <= c.table_t_max(); ++t)
          row.push_back(c.table_values()[static_cast<std::size_t>(x * (c.table_t_max() + 1) + t)]
                            .str());
        rows.push_back(std::move(row));
      }
      return Json{{"family", "custom-table"},
                  {"x_max", c.table_x_max()},
                  {"t_max", c.table_t_max()},
                  {"values", std::move(rows)}};
    }
  }
  throw InternalError("unhandled cost family in serialization");
}

Json instance_to_json(const ProblemInstance& p) {
  const GroundSet& ground = p.base.f.ground();
  Json t = Json::object();
  for (int e = 0; e < ground.size(); ++e)
    if (p.t[e] != 0) t[ground.label(e)] = p.t[e];
  Json costs = Json::object();
  for (int e = 0; e < ground.size(); ++e) costs[ground.label(e)] = cost_to_json(p.costs[e]);
  return Json{{"schema", kInstanceSchema}, {"ground_set", ground.labels()},
              {"rank", rank_to_json(p.base.f)}, {"d", p.base.d},
              {"t", std::move(t)},             {"costs", std::move(costs)}};
}

Json game_to_json(const Game& g) {
  Json players = Json::array();
  for (const auto& p : g.players) {
    Json costs = Json::object();
    for (int e = 0; e < g.resources.size(); ++e)
      costs[g.resources.label(e)] = cost_to_json(p.costs[e]);
    players.push_back(Json{{"name", p.name},
                           {"demand", p.demand},
                           {"rank", rank_to_json(p.rank)},
                           {"costs", std::move(costs)}});
  }
  return Json{{"schema", kGameSchema},
              {"kind", "polymatroid"},
              {"resources", g.resources.labels()},
              {"players", std::move(players)}};
}

Json allocation_to_json(const Allocation& x) {
  Json j = Json::array();
  for (int e = 0; e < x.size(); ++e) j.push_back(x[e]);
  return j;
}

}  // namespace pmx
