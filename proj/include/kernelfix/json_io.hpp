#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "kernelfix/graph.hpp"
#include "kernelfix/permis.hpp"
#include "kernelfix/reductions.hpp"
#include "kernelfix/word_analysis.hpp"

namespace kfx {

using json = nlohmann::json;

json graph_to_json(const Graph& g);             // {"n":..., "edges":[[u,v],...]}
Graph graph_from_json(const json& j);

// Accepts a graph6 string, an inline JSON edge list, or @path to a file
// holding either.
Graph parse_graph_arg(std::string_view text);

json verdict_to_json(const WordVerdict& v, const Graph& g);
json permis_verdict_to_json(const PermisVerdict& v);

json setcover_to_json(const SetCoverInstance& inst);
SetCoverInstance setcover_from_json(const json& j);

json targeted_graph_to_json(const TargetedGraph& tg);

json census_entry_to_json(const CensusEntry& e);

}  // namespace kfx
