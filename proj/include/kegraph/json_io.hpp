#pragma once

#include <json.hpp>

#include "kegraph/independence.hpp"
#include "kegraph/ke_analysis.hpp"
#include "kegraph/matching.hpp"

namespace kegraph {

// JSON report shapes. Vertices appear as their label (string) when the graph
// labels them, else as their numeric id; that rule applies uniformly to sets,
// cycles, paths and matching edges.

inline nlohmann::json vertex_json(const Graph& g, int v) {
    if (g.has_labels() && !g.labels()[v].empty()) return g.labels()[v];
    return v;
}

inline nlohmann::json set_json(const Graph& g, const VertexSet& s) {
    nlohmann::json out = nlohmann::json::array();
    for (int v : s) out.push_back(vertex_json(g, v));
    return out;
}

inline nlohmann::json vertex_list_json(const Graph& g, const std::vector<int>& vs) {
    nlohmann::json out = nlohmann::json::array();
    for (int v : vs) out.push_back(vertex_json(g, v));
    return out;
}

inline nlohmann::json edge_json(const Graph& g, Edge e) {
    return nlohmann::json::array({vertex_json(g, e.first), vertex_json(g, e.second)});
}

inline nlohmann::json matching_json(const Graph& g, const Matching& m) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : m.edges()) out.push_back(edge_json(g, e));
    return out;
}

inline const char* witness_kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::blossom: return "blossom";
        case WitnessKind::flower: return "flower";
        case WitnessKind::posy: return "posy";
        case WitnessKind::forbidden_config: return "forbidden_config";
    }
    return "?";
}

inline nlohmann::json witness_json(const Graph& g, const StructureWitness& w, const Matching& m) {
    nlohmann::json j;
    j["kind"] = witness_kind_name(w.kind);
    j["config"] = w.kind == WitnessKind::forbidden_config ? nlohmann::json(w.config)
                                                          : nlohmann::json(nullptr);
    nlohmann::json cycles = nlohmann::json::array();
    for (const auto& c : w.cycles) cycles.push_back(vertex_list_json(g, c));
    j["cycles"] = cycles;
    j["stem"] = vertex_list_json(g, w.path);
    j["bases"] = vertex_list_json(g, w.bases);
    j["matching"] = matching_json(g, m);
    return j;
}

inline nlohmann::json decomposition_json(const Graph& g, const KEDecomposition& d) {
    nlohmann::json j;
    j["S"] = set_json(g, d.independent_part);
    nlohmann::json h;
    h["n"] = d.rest.graph.vertex_count();
    h["vertices"] = vertex_list_json(g, d.rest.to_parent);
    nlohmann::json h_edges = nlohmann::json::array();
    for (const auto& [u, v] : d.rest.graph.edges()) {
        h_edges.push_back(edge_json(g, make_edge(d.rest.parent_index(u), d.rest.parent_index(v))));
    }
    h["edges"] = h_edges;
    j["H"] = h;
    j["M"] = matching_json(g, d.matching);
    return j;
}

inline nlohmann::json verdict_json(Verdict v) {
    switch (v) {
        case Verdict::yes: return true;
        case Verdict::no: return false;
        default: return nullptr;
    }
}

inline nlohmann::json ke_report_json(const Graph& g, const KEReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["alpha"] = r.alpha;
    j["mu"] = r.mu;
    j["deficiency"] = r.deficiency;
    j["d"] = r.critical_difference ? nlohmann::json(*r.critical_difference)
                                   : nlohmann::json(nullptr);
    j["core"] = r.core ? set_json(g, *r.core) : nlohmann::json(nullptr);
    j["verdicts"] = {{"definition", verdict_json(r.definition)},
                     {"theorem1", verdict_json(r.theorem1)},
                     {"sterboul", verdict_json(r.sterboul)},
                     {"larson", verdict_json(r.larson)}};
    j["witness"] = (r.witness && r.witness_matching)
                       ? witness_json(g, *r.witness, *r.witness_matching)
                       : nlohmann::json(nullptr);
    j["decomposition"] =
        r.decomposition ? decomposition_json(g, *r.decomposition) : nlohmann::json(nullptr);
    j["indeterminate"] = r.indeterminate;
    return j;
}

inline nlohmann::json independence_report_json(const Graph& g, const IndependenceReport& r) {
    nlohmann::json j;
    j["alpha"] = r.alpha;
    j["omegaCount"] = r.omega_count;
    j["core"] = r.core ? set_json(g, *r.core) : nlohmann::json(nullptr);
    j["d"] = r.critical_difference ? nlohmann::json(*r.critical_difference)
                                   : nlohmann::json(nullptr);
    j["alphaC"] = r.alpha_c ? nlohmann::json(*r.alpha_c) : nlohmann::json(nullptr);
    j["budgetExceeded"] = r.budget_exceeded;
    return j;
}

inline nlohmann::json mu_report_json(const Graph& g, const MuReport& r) {
    nlohmann::json j;
    j["mu"] = r.mu;
    j["deficiency"] = r.deficiency;
    j["exposed"] = set_json(g, r.exposed);
    j["muCritical"] = set_json(g, r.mu_critical);
    return j;
}

}  // namespace kegraph
