// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#include "eumax/instance_io.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

#include "eumax/errors.hpp"

namespace eumax {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InvalidInput("instance: " + where + ": " + what);
}

double need_number(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number()) fail(where, "missing numeric field '" + key + "'");
  return j[key].get<double>();
}

std::string need_string(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_string()) fail(where, "missing string field '" + key + "'");
  return j[key].get<std::string>();
}

Distribution parse_distribution(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "distribution must be an object");
  const std::string kind = need_string(j, "kind", where);
  if (kind == "discrete") {
    if (!j.contains("values") || !j["values"].is_array() || !j.contains("probs") ||
        !j["probs"].is_array())
      fail(where, "discrete distribution needs 'values' and 'probs' arrays");
    return Distribution::discrete(j["values"].get<std::vector<double>>(),
                                  j["probs"].get<std::vector<double>>());
  }
  if (kind == "point") return Distribution::point_mass(need_number(j, "value", where));
  if (kind == "poisson") return Distribution::poisson(need_number(j, "lambda", where));
  if (kind == "exponential") return Distribution::exponential(need_number(j, "rate", where));
  if (kind == "gaussian")
    return Distribution::gaussian(need_number(j, "mean", where), need_number(j, "stddev", where));
  fail(where, "unknown distribution kind '" + kind + "'");
}

UtilitySpec parse_utility(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "utility must be an object");
  const std::string kind = need_string(j, "kind", where);
  if (kind == "threshold_ramp") {
    const double delta = need_number(j, "delta_u", where);
    const double threshold = j.contains("threshold") ? need_number(j, "threshold", where) : 1.0;
    return UtilitySpec::threshold_ramp(delta, threshold);
  }
  if (kind == "inverse") return UtilitySpec::inverse();
  if (kind == "piecewise_linear") {
    if (!j.contains("points") || !j["points"].is_array())
      fail(where, "piecewise_linear needs a 'points' array");
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : j["points"]) {
      if (!p.is_array() || p.size() != 2) fail(where, "each point must be [x, y]");
      pts.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    return UtilitySpec::piecewise_linear(std::move(pts));
  }
  fail(where, "unknown utility kind '" + kind + "'");
}

SolverParams parse_params(const json& j) {
  SolverParams p;
  if (!j.contains("params")) return p;
  const json& params = j["params"];
  if (!params.is_object()) fail("params", "must be an object");
  if (params.contains("eps")) p.eps = params["eps"].get<double>();
  if (params.contains("max_terms")) p.max_terms = params["max_terms"].get<int>();
  if (params.contains("rounding_scale")) p.rounding_scale = params["rounding_scale"].get<double>();
  if (params.contains("hop_cap")) p.hop_cap = params["hop_cap"].get<int>();
  if (params.contains("state_budget")) p.state_budget = params["state_budget"].get<std::int64_t>();
  if (params.contains("seed")) p.seed = params["seed"].get<std::uint64_t>();
  if (!(p.eps > 0.0 && p.eps < 1.0)) fail("params", "eps must lie in (0, 1)");
  return p;
}

int node_index(const std::string& name, const std::map<std::string, int>& ids,
               const std::string& where) {
  const auto it = ids.find(name);
  if (it == ids.end()) fail(where, "undefined node id '" + name + "'");
  return it->second;
}

}  // namespace

std::string to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::shortest_path: return "shortest_path";
    case ProblemKind::knapsack_band: return "knapsack_band";
    case ProblemKind::knapsack_size: return "knapsack_size";
    case ProblemKind::knapsack_profit: return "knapsack_profit";
    case ProblemKind::spanning_tree: return "spanning_tree";
    case ProblemKind::multi_knapsack: return "multi_knapsack";
    case ProblemKind::multidim_knapsack: return "multidim_knapsack";
  }
  return "unknown";
}

Instance parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("instance: not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("document", "top level must be an object");

  Instance inst;
  inst.params = parse_params(j);
  const std::string kind = need_string(j, "problem", "document");

  if (j.contains("utility")) inst.utility = parse_utility(j["utility"], "utility");

  if (kind == "shortest_path") {
    inst.kind = ProblemKind::shortest_path;
    if (!inst.utility) fail("document", "shortest_path needs a utility");
    if (!j.contains("graph") || !j["graph"].is_object()) fail("graph", "missing");
    const json& g = j["graph"];
    if (!g.contains("nodes") || !g["nodes"].is_array()) fail("graph", "missing 'nodes'");
    std::map<std::string, int> ids;
    for (const auto& nd : g["nodes"]) {
      if (!nd.is_string()) fail("graph.nodes", "node ids must be strings");
      if (!ids.emplace(nd.get<std::string>(), static_cast<int>(ids.size())).second)
        fail("graph.nodes", "duplicate node id '" + nd.get<std::string>() + "'");
    }
    ShortestPathInstance sp;
    sp.num_nodes = static_cast<int>(ids.size());
    sp.source = node_index(need_string(g, "source", "graph"), ids, "graph.source");
    sp.sink = node_index(need_string(g, "sink", "graph"), ids, "graph.sink");
    sp.hop_cap = inst.params.hop_cap;
    if (!g.contains("edges") || !g["edges"].is_array()) fail("graph", "missing 'edges'");
    for (const auto& e : g["edges"]) {
      ShortestPathInstance::Edge edge;
      edge.from = node_index(need_string(e, "from", "graph.edges"), ids, "graph.edges");
      edge.to = node_index(need_string(e, "to", "graph.edges"), ids, "graph.edges");
      if (!e.contains("weight")) fail("graph.edges", "edge needs a 'weight' distribution");
      edge.weight = parse_distribution(e["weight"], "graph.edges.weight");
      if (e.contains("label")) edge.label = e["label"].get<std::string>();
      sp.edges.push_back(std::move(edge));
    }
    inst.shortest_path = std::move(sp);
    return inst;
  }

  if (kind == "knapsack_band") {
    inst.kind = ProblemKind::knapsack_band;
    if (!inst.utility) fail("document", "knapsack_band needs a utility");
    if (!j.contains("items") || !j["items"].is_array()) fail("items", "missing");
    ProfitBandInstance band;
    for (const auto& it : j["items"]) {
      if (!it.contains("weight")) fail("items", "item needs a 'weight' distribution");
      band.weights.push_back(parse_distribution(it["weight"], "items.weight"));
      band.units.push_back(it.contains("units") ? it["units"].get<std::int64_t>() : 0);
      band.labels.push_back(it.contains("label") ? it["label"].get<std::string>() : "");
    }
    band.band_lo = static_cast<std::int64_t>(need_number(j, "band_lo", "document"));
    band.band_hi = static_cast<std::int64_t>(need_number(j, "band_hi", "document"));
    inst.band = std::move(band);
    return inst;
  }

  if (kind == "knapsack_size") {
    inst.kind = ProblemKind::knapsack_size;
    if (!j.contains("items") || !j["items"].is_array()) fail("items", "missing");
    KnapsackSizeInstance ks;
    for (const auto& it : j["items"]) {
      KnapsackSizeInstance::Item item;
      if (!it.contains("size")) fail("items", "item needs a 'size' distribution");
      item.size = parse_distribution(it["size"], "items.size");
      item.profit = need_number(it, "profit", "items");
      if (it.contains("label")) item.label = it["label"].get<std::string>();
      ks.items.push_back(std::move(item));
    }
    ks.gamma_target = need_number(j, "gamma", "document");
    ks.eps = inst.params.eps;
    inst.knapsack_size = std::move(ks);
    return inst;
  }

  if (kind == "knapsack_profit") {
    inst.kind = ProblemKind::knapsack_profit;
    if (!j.contains("items") || !j["items"].is_array()) fail("items", "missing");
    KnapsackProfitInstance kp;
    for (const auto& it : j["items"]) {
      KnapsackProfitInstance::Item item;
      item.size = need_number(it, "size", "items");
      if (!it.contains("profit")) fail("items", "item needs a 'profit' distribution");
      item.profit = parse_distribution(it["profit"], "items.profit");
      if (it.contains("label")) item.label = it["label"].get<std::string>();
      kp.items.push_back(std::move(item));
    }
    kp.threshold = need_number(j, "threshold", "document");
    kp.eps = inst.params.eps;
    inst.knapsack_profit = std::move(kp);
    return inst;
  }

  if (kind == "spanning_tree") {
    inst.kind = ProblemKind::spanning_tree;
    if (!inst.utility) fail("document", "spanning_tree needs a utility");
    if (!j.contains("graph") || !j["graph"].is_object()) fail("graph", "missing");
    const json& g = j["graph"];
    std::map<std::string, int> ids;
    for (const auto& nd : g["nodes"]) {
      if (!nd.is_string()) fail("graph.nodes", "node ids must be strings");
      if (!ids.emplace(nd.get<std::string>(), static_cast<int>(ids.size())).second)
        fail("graph.nodes", "duplicate node id");
    }
    SpanningTreeInstance st;
    st.num_nodes = static_cast<int>(ids.size());
    for (const auto& e : g["edges"]) {
      SpanningTreeInstance::Edge edge;
      edge.u = node_index(need_string(e, "u", "graph.edges"), ids, "graph.edges");
      edge.v = node_index(need_string(e, "v", "graph.edges"), ids, "graph.edges");
      if (!e.contains("weight")) fail("graph.edges", "edge needs a 'weight' distribution");
      edge.weight = parse_distribution(e["weight"], "graph.edges.weight");
      if (e.contains("label")) edge.label = e["label"].get<std::string>();
      st.edges.push_back(std::move(edge));
    }
    inst.spanning_tree = std::move(st);
    return inst;
  }

  if (kind == "multi_knapsack") {
    inst.kind = ProblemKind::multi_knapsack;
    MultiKnapsackInstance mk;
    for (const auto& it : j["items"]) {
      MultiKnapsackInstance::Item item;
      item.size = parse_distribution(it["size"], "items.size");
      item.profit = need_number(it, "profit", "items");
      if (it.contains("label")) item.label = it["label"].get<std::string>();
      mk.items.push_back(std::move(item));
    }
    if (!j.contains("gammas") || !j["gammas"].is_array() || j["gammas"].size() != 2)
      fail("document", "multi_knapsack needs a 2-element 'gammas' array");
    mk.gammas = {j["gammas"][0].get<double>(), j["gammas"][1].get<double>()};
    mk.eps = inst.params.eps;
    inst.multi_knapsack = std::move(mk);
    return inst;
  }

  if (kind == "multidim_knapsack") {
    inst.kind = ProblemKind::multidim_knapsack;
    MultidimKnapsackInstance md;
    const std::string mode =
        j.contains("mode") ? j["mode"].get<std::string>() : std::string("independent");
    if (mode == "independent") {
      inst.multidim_mode = MultidimMode::independent;
    } else if (mode == "correlated") {
      inst.multidim_mode = MultidimMode::correlated;
    } else {
      fail("document", "mode must be 'independent' or 'correlated'");
    }
    for (const auto& it : j["items"]) {
      MultidimKnapsackInstance::Item item;
      item.profit = need_number(it, "profit", "items");
      if (it.contains("w1")) item.w1 = parse_distribution(it["w1"], "items.w1");
      if (it.contains("w2")) item.w2 = parse_distribution(it["w2"], "items.w2");
      if (it.contains("joint")) {
        for (const auto& row : it["joint"]) {
          if (!row.is_array() || row.size() != 3) fail("items.joint", "rows must be [v1, v2, p]");
          item.joint.push_back(
              {row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
        }
      }
      if (it.contains("label")) item.label = it["label"].get<std::string>();
      md.items.push_back(std::move(item));
    }
    md.gamma = need_number(j, "gamma", "document");
    md.eps = inst.params.eps;
    inst.multidim = std::move(md);
    return inst;
  }

  fail("document", "unknown problem kind '" + kind + "'");
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

UtilitySpec parse_utility_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("utility: not valid JSON: ") + e.what());
  }
  return parse_utility(j, "utility");
}

Distribution parse_distribution_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("distribution: not valid JSON: ") + e.what());
  }
  return parse_distribution(j, "distribution");
}

}  // namespace eumax
