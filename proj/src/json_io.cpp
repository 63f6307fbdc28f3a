#include "kernelfix/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "kernelfix/graph6.hpp"

namespace kfx {

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs {\"n\", \"edges\"}");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph JSON edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return build_graph(j.at("n").get<int>(), edges);
}

Graph parse_graph_arg(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\n'))
    text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\n'))
    text.remove_suffix(1);
  if (!text.empty() && text.front() == '@') {
    std::ifstream in{std::string(text.substr(1))};
    if (!in) throw std::invalid_argument("cannot open graph file");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();
    return parse_graph_arg(content);
  }
  if (!text.empty() && text.front() == '{')
    return graph_from_json(json::parse(text));
  return parse_graph6(text);
}

namespace {

json set_to_json(VertexSet s) {
  json out = json::array();
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

}  // namespace

json verdict_to_json(const WordVerdict& v, const Graph& g) {
  json out{{"answer", v.answer}};
  if (v.answer) return out;
  json witness;
  if (v.edge) {
    witness["kind"] = "edge";
    witness["edge"] = {v.edge->first, v.edge->second};
  } else if (v.obstruction) {
    witness["kind"] = "dominion";
    witness["v"] = v.obstruction->vertex;
    witness["I"] = set_to_json(v.obstruction->independent_set);
  } else {
    witness["kind"] = "config";
  }
  if (v.counterexample)
    witness["config"] = format_config(*v.counterexample, g.n);
  out["witness"] = witness;
  return out;
}

json permis_verdict_to_json(const PermisVerdict& v) {
  json out;
  switch (v.answer) {
    case PermisAnswer::exists: out["answer"] = "exists"; break;
    case PermisAnswer::not_exists: out["answer"] = "not_exists"; break;
    case PermisAnswer::unknown: out["answer"] = "unknown"; break;
  }
  if (v.word) out["word"] = *v.word;
  if (v.certificate == PermisVerdict::Certificate::exhaustive)
    out["certificate"] = {{"kind", "exhaustive"}};
  else if (v.certificate == PermisVerdict::Certificate::tethered)
    out["certificate"] = {{"kind", "tethered"}, {"set", set_to_json(v.tethered_set)}};
  return out;
}

json setcover_to_json(const SetCoverInstance& inst) {
  return {{"n", inst.n_elements}, {"subsets", inst.subsets}, {"k", inst.k}};
}

SetCoverInstance setcover_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("subsets") ||
      !j.contains("k"))
    throw std::invalid_argument(
        "set cover JSON needs {\"n\", \"subsets\", \"k\"}");
  SetCoverInstance inst;
  inst.n_elements = j.at("n").get<int>();
  inst.subsets = j.at("subsets").get<std::vector<std::vector<int>>>();
  inst.k = j.at("k").get<int>();
  validate_instance(inst);
  return inst;
}

json targeted_graph_to_json(const TargetedGraph& tg) {
  json labels = json::object();
  for (const auto& [name, v] : tg.labels) labels[name] = v;
  return {{"graph6", write_graph6(tg.graph)},
          {"n", tg.graph.n},
          {"edges", graph_to_json(tg.graph)["edges"]},
          {"target", set_to_json(tg.target)},
          {"labels", labels}};
}

json census_entry_to_json(const CensusEntry& e) {
  json out{{"graph6", e.graph6}};
  if (e.permis) {
    out["permis"] = *e.permis;
    out["certificate"] = nullptr;
  } else {
    out["permis"] = nullptr;
    out["certificate"] = {{"kind", "exhaustive"}};
  }
  return out;
}

}  // namespace kfx
