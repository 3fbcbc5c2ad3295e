#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hyperline/metric_graph.hpp"

namespace hyperline {

/// A directed run inside one edge, from offset `from` to offset `to`
/// (offsets from the edge's u endpoint). Zero-length segments stand for
/// single points so that degenerate geodesics still carry a location.
struct GeodesicSegment {
    EdgeId edge;
    Rational from;
    Rational to;

    Rational length() const { return (to - from).abs(); }
    Rational lo() const { return min(from, to); }
    Rational hi() const { return max(from, to); }
};

/// A shortest path between two points, stored as a chain of edge segments.
/// total_length always equals point_distance(start, end).
struct Geodesic {
    GraphPoint start;
    GraphPoint end;
    std::vector<GeodesicSegment> segments;
    Rational total_length;

    Geodesic reversed() const {
        Geodesic r;
        r.start = end;
        r.end = start;
        r.total_length = total_length;
        r.segments.reserve(segments.size());
        for (auto it = segments.rbegin(); it != segments.rend(); ++it)
            r.segments.push_back(GeodesicSegment{it->edge, it->to, it->from});
        return r;
    }

    /// The point at arclength t from the start, 0 <= t <= total_length.
    GraphPoint point_at(const MetricGraph& g, Rational t) const {
        for (const auto& seg : segments) {
            Rational len = seg.length();
            if (t <= len) {
                if (len.is_zero()) return GraphPoint::on_edge(g, seg.edge, seg.from);
                Rational off = seg.from < seg.to ? seg.from + t : seg.from - t;
                return GraphPoint::on_edge(g, seg.edge, off);
            }
            t -= len;
        }
        const auto& last = segments.back();
        return GraphPoint::on_edge(g, last.edge, last.to);
    }
};

namespace detail {

// Zero-length geodesic sitting at p.
inline Geodesic degenerate_geodesic(const MetricGraph& g, const GraphPoint& p) {
    Geodesic geo;
    geo.start = geo.end = p;
    geo.total_length = 0;
    EdgeId e;
    Rational off;
    if (p.is_vertex()) {
        e = g.incident_edges(p.vertex()).empty() ? -1 : g.incident_edges(p.vertex()).front();
        if (e >= 0) off = p.offset_on(g, e);
    } else {
        e = p.edge();
        off = p.offset();
    }
    if (e >= 0) geo.segments.push_back(GeodesicSegment{e, off, off});
    return geo;
}

// Edges (v, w) lying on some shortest path from v toward target, i.e. with
// d(v, target) == len(v,w) + d(w, target). Following them strictly decreases
// the remaining distance, so the relation is acyclic.
inline std::vector<EdgeId> descent_edges(const MetricGraph& g, VertexId v, VertexId target) {
    std::vector<EdgeId> out;
    for (EdgeId e : g.incident_edges(v)) {
        VertexId w = g.edge(e).other(v);
        if (g.vertex_distance(v, target) == g.edge(e).length + g.vertex_distance(w, target))
            out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline long long count_shortest_vertex_paths(const MetricGraph& g, VertexId from, VertexId to,
                                             long long limit) {
    std::vector<std::optional<long long>> memo(g.vertex_count());
    auto rec = [&](auto&& self, VertexId v) -> long long {
        if (v == to) return 1;
        if (memo[v]) return *memo[v];
        long long total = 0;
        for (EdgeId e : descent_edges(g, v, to)) {
            total += self(self, g.edge(e).other(v));
            if (total > limit) break;
        }
        memo[v] = total;
        return total;
    };
    return rec(rec, from);
}

inline void expand_vertex_paths(const MetricGraph& g, VertexId v, VertexId to,
                                std::vector<EdgeId>& path,
                                std::vector<std::vector<EdgeId>>& out) {
    if (v == to) {
        out.push_back(path);
        return;
    }
    for (EdgeId e : descent_edges(g, v, to)) {
        path.push_back(e);
        expand_vertex_paths(g, g.edge(e).other(v), to, path, out);
        path.pop_back();
    }
}

}  // namespace detail

/// The complete set of distinct geodesics from p to q. Every geodesic either
/// stays inside one edge or exits p's edge through an endpoint and enters
/// q's edge through one, with a shortest vertex path in between; candidates
/// are kept exactly when their length equals the distance. Throws
/// CapExceeded if more than cap geodesics exist.
inline std::vector<Geodesic> enumerate_geodesics(const MetricGraph& g, const GraphPoint& p,
                                                 const GraphPoint& q, long long cap = 10000) {
    if (cap < 1) throw InvalidParameters("geodesic cap must be at least 1");
    if (p == q) return {detail::degenerate_geodesic(g, p)};

    Rational d = point_distance(g, p, q);
    auto cap_error = [&] {
        return CapExceeded(cap, "(" + p.describe(g) + ", " + q.describe(g) + ")");
    };

    std::vector<Geodesic> result;
    if (!p.is_vertex() && !q.is_vertex() && p.edge() == q.edge() &&
        (p.offset() - q.offset()).abs() == d) {
        Geodesic geo;
        geo.start = p;
        geo.end = q;
        geo.total_length = d;
        geo.segments.push_back(GeodesicSegment{p.edge(), p.offset(), q.offset()});
        result.push_back(std::move(geo));
    }

    auto p_exits = detail::exit_costs(g, p);
    auto q_exits = detail::exit_costs(g, q);
    long long total = static_cast<long long>(result.size());
    for (const auto& [pv, pc] : p_exits)
        for (const auto& [qv, qc] : q_exits) {
            if (pc + g.vertex_distance(pv, qv) + qc != d) continue;
            total += detail::count_shortest_vertex_paths(g, pv, qv, cap);
            if (total > cap) throw cap_error();
        }

    for (const auto& [pv, pc] : p_exits)
        for (const auto& [qv, qc] : q_exits) {
            if (pc + g.vertex_distance(pv, qv) + qc != d) continue;
            std::vector<std::vector<EdgeId>> paths;
            std::vector<EdgeId> scratch;
            detail::expand_vertex_paths(g, pv, qv, scratch, paths);
            for (const auto& path : paths) {
                Geodesic geo;
                geo.start = p;
                geo.end = q;
                geo.total_length = d;
                if (!p.is_vertex()) {
                    const Edge& ep = g.edge(p.edge());
                    Rational to = pv == ep.u ? Rational(0) : ep.length;
                    geo.segments.push_back(GeodesicSegment{p.edge(), p.offset(), to});
                }
                VertexId at = pv;
                for (EdgeId e : path) {
                    const Edge& ed = g.edge(e);
                    Rational from = at == ed.u ? Rational(0) : ed.length;
                    Rational to = at == ed.u ? ed.length : Rational(0);
                    geo.segments.push_back(GeodesicSegment{e, from, to});
                    at = ed.other(at);
                }
                if (!q.is_vertex()) {
                    const Edge& eq = g.edge(q.edge());
                    Rational from = qv == eq.u ? Rational(0) : eq.length;
                    geo.segments.push_back(GeodesicSegment{q.edge(), from, q.offset()});
                }
                result.push_back(std::move(geo));
            }
        }
    return result;
}

}  // namespace hyperline
