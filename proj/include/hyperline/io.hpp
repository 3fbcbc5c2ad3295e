#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperline/delta.hpp"
#include "hyperline/inequalities.hpp"
#include "hyperline/line_graph.hpp"
#include "hyperline/metric_graph.hpp"

namespace hyperline {

using ordered_json = nlohmann::ordered_json;

/// Parses the JSON graph format:
///   {"vertices": ["a","b"], "edges": [{"u":"a","v":"b","len":"3/2"}]}
/// Lengths are rational strings "p/q" or integer strings. Loops, duplicate
/// edges and bad lengths are rejected naming the offending edge entry.
inline MetricGraph parse_graph_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw ParseError("graph JSON needs 'vertices' and 'edges' fields");
    std::vector<std::string> labels;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) throw ParseError("vertex labels must be strings");
        labels.push_back(v.get<std::string>());
    }
    std::vector<MetricGraph::WeightedEdgeSpec> edges;
    int index = 0;
    for (const auto& e : doc["edges"]) {
        if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("len"))
            throw ParseError("edge entry " + std::to_string(index) +
                             " needs 'u', 'v' and 'len' fields");
        std::string len_str = e["len"].is_string() ? e["len"].get<std::string>()
                                                   : e["len"].dump();
        Rational len;
        try {
            len = Rational::parse(len_str);
        } catch (const std::invalid_argument& ex) {
            throw ParseError("edge entry " + std::to_string(index) + ": " + ex.what());
        }
        edges.emplace_back(e["u"].get<std::string>(), e["v"].get<std::string>(), len);
        ++index;
    }
    return MetricGraph::build(labels, edges);
}

/// Parses the plain-text format: one edge per line, "u v p/q". Blank lines
/// and lines starting with '#' are skipped; loop, duplicate and length
/// errors carry the line number. The vertex set is the set of endpoint
/// labels, in order of appearance.
inline MetricGraph parse_graph_text(const std::string& text) {
    std::vector<std::string> labels;
    std::vector<MetricGraph::WeightedEdgeSpec> edges;
    std::vector<std::pair<std::string, std::string>> seen_pairs;
    auto note_label = [&](const std::string& l) {
        for (const auto& existing : labels)
            if (existing == l) return;
        labels.push_back(l);
    };
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string u, v, len_str, extra;
        if (!(ls >> u)) continue;
        if (u[0] == '#') continue;
        std::string at = "line " + std::to_string(lineno) + ": ";
        if (!(ls >> v >> len_str) || (ls >> extra)) throw ParseError(at + "expected 'u v p/q'");
        Rational len;
        try {
            len = Rational::parse(len_str);
        } catch (const std::invalid_argument& ex) {
            throw ParseError(at + ex.what());
        }
        if (u == v) throw ParseError(at + LoopEdge(u).what());
        if (!len.is_positive()) throw ParseError(at + NonpositiveLength(u, v, len.str()).what());
        auto pr = u < v ? std::pair(u, v) : std::pair(v, u);
        for (const auto& existing : seen_pairs)
            if (existing == pr) throw ParseError(at + DuplicateEdge(u, v).what());
        seen_pairs.push_back(pr);
        note_label(u);
        note_label(v);
        edges.emplace_back(u, v, len);
    }
    return MetricGraph::build(labels, edges);
}

inline ordered_json graph_to_json(const MetricGraph& g) {
    ordered_json doc;
    doc["vertices"] = g.vertex_labels();
    doc["edges"] = ordered_json::array();
    for (const Edge& e : g.edges()) {
        ordered_json je;
        je["u"] = g.vertex_label(e.u);
        je["v"] = g.vertex_label(e.v);
        je["len"] = e.length.str();
        doc["edges"].push_back(je);
    }
    return doc;
}

inline ordered_json point_to_json(const MetricGraph& g, const GraphPoint& p) {
    ordered_json j;
    if (p.is_vertex()) {
        j["vertex"] = g.vertex_label(p.vertex());
    } else {
        const Edge& e = g.edge(p.edge());
        j["edge"] = {g.vertex_label(e.u), g.vertex_label(e.v)};
        j["offset"] = p.offset().str();
    }
    return j;
}

inline ordered_json geodesic_to_json(const MetricGraph& g, const Geodesic& geo) {
    ordered_json j;
    j["from"] = point_to_json(g, geo.start);
    j["to"] = point_to_json(g, geo.end);
    j["length"] = geo.total_length.str();
    j["segments"] = ordered_json::array();
    for (const auto& s : geo.segments) {
        const Edge& e = g.edge(s.edge);
        ordered_json js;
        js["edge"] = {g.vertex_label(e.u), g.vertex_label(e.v)};
        js["from"] = s.from.str();
        js["to"] = s.to.str();
        j["segments"].push_back(js);
    }
    return j;
}

inline ordered_json delta_result_to_json(const MetricGraph& g, const DeltaResult& r) {
    ordered_json j;
    j["value"] = r.value.str();
    j["mode"] = to_string(r.mode);
    ordered_json w;
    w["corners"] = ordered_json::array();
    for (const auto& c : r.witness.corners) w["corners"].push_back(point_to_json(g, c));
    w["sides"] = ordered_json::array();
    for (const auto& s : r.witness.sides) w["sides"].push_back(geodesic_to_json(g, s));
    w["point"] = point_to_json(g, r.witness_point);
    w["side"] = r.witness_side;
    w["is_cycle"] = r.witness.is_cycle;
    j["witness"] = w;
    j["candidates"]["corner_triples"] = r.corner_triples;
    j["candidates"]["triangles_evaluated"] = r.triangles_evaluated;
    return j;
}

inline ordered_json correspondence_to_json(const LineGraphCorrespondence& corr) {
    ordered_json j;
    j["graph"] = graph_to_json(corr.line);
    ordered_json verts = ordered_json::array();
    for (EdgeId e = 0; e < corr.graph.edge_count(); ++e) {
        const Edge& ge = corr.graph.edge(e);
        ordered_json entry;
        entry["vertex"] = corr.line.vertex_label(corr.vertex_of_edge[e]);
        entry["edge"] = {corr.graph.vertex_label(ge.u), corr.graph.vertex_label(ge.v)};
        entry["len"] = ge.length.str();
        verts.push_back(entry);
    }
    j["correspondence"]["vertices"] = verts;
    ordered_json ledges = ordered_json::array();
    for (EdgeId le = 0; le < corr.line.edge_count(); ++le) {
        const Edge& e = corr.line.edge(le);
        ordered_json entry;
        entry["u"] = corr.line.vertex_label(e.u);
        entry["v"] = corr.line.vertex_label(e.v);
        entry["len"] = e.length.str();
        entry["shared"] = corr.graph.vertex_label(corr.shared_vertex[le]);
        entry["pml_offset"] = corr.pml_offset(le).str();
        ledges.push_back(entry);
    }
    j["correspondence"]["edges"] = ledges;
    return j;
}

inline ordered_json inequality_report_to_json(const InequalityReport& rep) {
    ordered_json j;
    j["mode"] = to_string(rep.mode);
    j["delta_G"] = rep.delta_g.str();
    j["delta_L"] = rep.delta_line.str();
    j["line_degenerate"] = rep.line_degenerate;
    j["all_hold"] = rep.all_hold();
    j["inequalities"] = ordered_json::array();
    for (const auto& r : rep.records) {
        ordered_json e;
        e["name"] = r.name;
        e["statement"] = r.statement;
        e["applicable"] = r.applicable;
        if (r.applicable) {
            e["lhs"] = r.lhs.str();
            e["rhs"] = r.rhs.str();
            e["slack"] = r.slack.str();
            e["holds"] = r.holds;
            if (r.equality_observed) e["equality_observed"] = *r.equality_observed;
            if (r.characterization_ok) e["characterization_ok"] = *r.characterization_ok;
        }
        if (!r.note.empty()) e["note"] = r.note;
        j["inequalities"].push_back(e);
    }
    return j;
}

inline ordered_json qi_report_to_json(const MetricGraph& g, const MetricGraph& line,
                                      const QuasiIsometryReport& rep) {
    ordered_json j;
    j["max_lipschitz_excess"] = rep.max_lipschitz_excess.str();
    j["lipschitz_witness"] = {point_to_json(line, rep.lipschitz_witness.first),
                              point_to_json(line, rep.lipschitz_witness.second)};
    j["max_reciprocal_excess"] = rep.max_reciprocal_excess.str();
    j["reciprocal_witness"] = {point_to_json(line, rep.reciprocal_witness.first),
                               point_to_json(line, rep.reciprocal_witness.second)};
    j["fullness_radius"] = rep.fullness_radius.str();
    j["fullness_witness"] = point_to_json(g, rep.fullness_witness);
    j["lmax"] = rep.lmax.str();
    j["sample_count"] = rep.sample_count;
    j["vertex_isometry_ok"] = rep.vertex_isometry_ok;
    j["passes"] = rep.passes();
    return j;
}

}  // namespace hyperline
