#pragma once

#include <json.hpp>
#include <string>

#include "core/game.hpp"

namespace pmx {

using Json = nlohmann::json;

// File schemas. Parsing is strict: unknown fields and unknown element labels
// are rejected, with the offending JSON path in the message. Exact values
// are strings ("p/q", "inf") or plain integers; never floating point.
inline constexpr const char* kInstanceSchema = "pmx-instance-v1";
inline constexpr const char* kGameSchema = "pmx-game-v1";
inline constexpr const char* kRankSchema = "pmx-rank-v1";
inline constexpr const char* kReportSchema = "pmx-report-v1";

ProblemInstance parse_instance(const std::string& text);
Game parse_game(const std::string& text);

// Accepts a rank-only file or a full instance file; yields its rank function.
RankFunction parse_rank_input(const std::string& text);

// Schema of a document without fully parsing it.
std::string peek_schema(const std::string& text);

Json rank_to_json(const RankFunction& f);
Json usage_to_json(const UsageCost& c);
Json cost_to_json(const CostFunction& c);
Json instance_to_json(const ProblemInstance& p);
Json game_to_json(const Game& g);
Json allocation_to_json(const Allocation& x);

// Building blocks shared with the game constructors.
RankFunction parse_rank(const GroundSet& ground, const Json& j, const std::string& where);
CostFunction parse_cost(const Json& j, const std::string& where);
UsageCost parse_usage(const Json& j, const std::string& where);
ExactValue parse_exact(const Json& j, const std::string& where);

}  // namespace pmx
