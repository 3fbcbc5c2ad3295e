#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hyperline/geodesics.hpp"
#include "hyperline/metric_graph.hpp"

namespace hyperline {

/// The weighted line graph of G together with the correspondence maps
/// between the two graphs. L has one vertex per edge of G; two such
/// vertices are joined exactly when the edges share a vertex, by an edge of
/// length (L(e_i)+L(e_j))/2. Everything is immutable after construction.
struct LineGraphCorrespondence {
    MetricGraph graph;  // G
    MetricGraph line;   // L(G)
    std::vector<VertexId> vertex_of_edge;  // G edge id -> L vertex id
    std::vector<EdgeId> edge_of_vertex;    // L vertex id -> G edge id
    std::vector<VertexId> shared_vertex;   // L edge id -> the G vertex e_i ∩ e_j

    /// Offset of the distinguished point Pm_L on an edge of L, measured from
    /// the edge's stored u endpoint V_{e_i}: half the length of e_i.
    Rational pml_offset(EdgeId le) const {
        return graph.edge(edge_of_vertex[line.edge(le).u]).length / Rational(2);
    }

    GraphPoint pml_point(EdgeId le) const {
        return GraphPoint::on_edge(line, le, pml_offset(le));
    }

    /// All vertices of L plus the Pm_L point of every edge of L, sorted.
    std::vector<GraphPoint> pml_v_points() const {
        std::vector<GraphPoint> pts;
        for (VertexId v = 0; v < line.vertex_count(); ++v)
            pts.push_back(GraphPoint::at_vertex(v));
        for (EdgeId le = 0; le < line.edge_count(); ++le) pts.push_back(pml_point(le));
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        return pts;
    }
};

/// Builds L(G) with its correspondence tables. The edges incident to a
/// vertex of degree d induce a complete K_d in L. Graphs with fewer than
/// two edges have a degenerate line graph (a point or nothing) and are
/// rejected.
inline LineGraphCorrespondence build_line_graph(const MetricGraph& g) {
    if (g.edge_count() <= 1) throw DegenerateLineGraph();
    LineGraphCorrespondence corr;
    corr.graph = g;

    std::vector<std::string> labels;
    labels.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) labels.push_back("e" + std::to_string(e));

    std::vector<MetricGraph::WeightedEdgeSpec> edges;
    std::vector<VertexId> shared;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::vector<EdgeId> inc = g.incident_edges(v);
        std::sort(inc.begin(), inc.end());
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                Rational len = (g.edge(inc[i]).length + g.edge(inc[j]).length) / Rational(2);
                edges.emplace_back(labels[inc[i]], labels[inc[j]], len);
                shared.push_back(v);
            }
    }

    corr.line = MetricGraph::build(labels, edges);
    corr.shared_vertex = std::move(shared);
    corr.vertex_of_edge.resize(g.edge_count());
    corr.edge_of_vertex.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        corr.vertex_of_edge[e] = e;
        corr.edge_of_vertex[e] = e;
    }
    return corr;
}

/// The correspondence map h from points of L to points of G. Vertices V_e
/// go to the midpoint of e and Pm_L points go to the shared vertex of their
/// edge pair; a point at distance t from V_e toward Pm_L goes to the point
/// of e at distance t from the midpoint toward the shared vertex.
inline GraphPoint h_map(const LineGraphCorrespondence& corr, const GraphPoint& x) {
    const MetricGraph& g = corr.graph;
    if (x.is_vertex()) {
        EdgeId e = corr.edge_of_vertex[x.vertex()];
        return GraphPoint::on_edge(g, e, g.edge(e).length / Rational(2));
    }
    EdgeId le = x.edge();
    VertexId w = corr.shared_vertex[le];
    Rational pml = corr.pml_offset(le);
    const Rational& s = x.offset();
    if (s == pml) return GraphPoint::at_vertex(w);
    if (s < pml) {
        EdgeId ea = corr.edge_of_vertex[corr.line.edge(le).u];
        Rational mid = g.edge(ea).length / Rational(2);
        Rational off = g.edge(ea).v == w ? mid + s : mid - s;
        return GraphPoint::on_edge(g, ea, off);
    }
    EdgeId eb = corr.edge_of_vertex[corr.line.edge(le).v];
    Rational t = corr.line.edge(le).length - s;  // distance from V_{e_b}
    Rational mid = g.edge(eb).length / Rational(2);
    Rational off = g.edge(eb).v == w ? mid + t : mid - t;
    return GraphPoint::on_edge(g, eb, off);
}

/// Preimage of a vertex or edge midpoint of G under h. A midpoint pulls
/// back to the single vertex V_e; a vertex of degree d >= 2 pulls back to
/// the d(d-1)/2 Pm_L points of its clique in L. Degree-1 vertices and
/// non-midpoint interior points lie outside the image of PM_L V.
inline std::vector<GraphPoint> h_preimage(const LineGraphCorrespondence& corr,
                                          const GraphPoint& x) {
    const MetricGraph& g = corr.graph;
    if (!x.is_vertex()) {
        if (x.offset() != g.edge(x.edge()).length / Rational(2))
            throw OutsideImage(x.describe(g));
        return {GraphPoint::at_vertex(corr.vertex_of_edge[x.edge()])};
    }
    VertexId v = x.vertex();
    if (g.degree(v) < 2) throw OutsideImage(x.describe(g));
    std::vector<EdgeId> inc = g.incident_edges(v);
    std::sort(inc.begin(), inc.end());
    std::vector<GraphPoint> out;
    for (std::size_t i = 0; i < inc.size(); ++i)
        for (std::size_t j = i + 1; j < inc.size(); ++j) {
            auto le = corr.line.find_edge(corr.vertex_of_edge[inc[i]], corr.vertex_of_edge[inc[j]]);
            out.push_back(corr.pml_point(*le));
        }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Validates a cyclic edge sequence as a simple closed curve and returns the
// shared vertex between consecutive edges (entry i: c[i] ∩ c[i+1 mod r]).
inline std::vector<VertexId> cycle_shared_vertices(const MetricGraph& g,
                                                   const std::vector<EdgeId>& cycle) {
    std::size_t r = cycle.size();
    if (r < 3) throw NotACycle("needs at least 3 edges, got " + std::to_string(cycle.size()));
    std::vector<VertexId> shared(r);
    for (std::size_t i = 0; i < r; ++i) {
        const Edge& a = g.edge(cycle[i]);
        const Edge& b = g.edge(cycle[(i + 1) % r]);
        if (cycle[i] == cycle[(i + 1) % r]) throw NotACycle("repeated edge");
        if (a.u == b.u || a.u == b.v)
            shared[i] = a.u;
        else if (a.v == b.u || a.v == b.v)
            shared[i] = a.v;
        else
            throw NotACycle("consecutive edges do not meet");
    }
    std::vector<VertexId> sorted = shared;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw NotACycle("a vertex is visited twice");
    return shared;
}

}  // namespace detail

/// The lift g_C of a cycle C of G into L: the inverse of h restricted to
/// the lifted cycle C*. Midpoints go to the corresponding vertices of L and
/// the vertices of C go to the Pm_L points between consecutive lifted
/// edges; distances along C are preserved.
inline GraphPoint g_c_map(const LineGraphCorrespondence& corr, const std::vector<EdgeId>& cycle,
                          const GraphPoint& x) {
    const MetricGraph& g = corr.graph;
    std::vector<VertexId> shared = detail::cycle_shared_vertices(g, cycle);
    std::size_t r = cycle.size();

    auto pml_between = [&](std::size_t i, std::size_t j) {
        auto le = corr.line.find_edge(corr.vertex_of_edge[cycle[i]], corr.vertex_of_edge[cycle[j]]);
        if (!le) throw NotACycle("lifted edge missing");  // unreachable for valid cycles
        return corr.pml_point(*le);
    };

    if (x.is_vertex()) {
        for (std::size_t i = 0; i < r; ++i)
            if (shared[i] == x.vertex()) return pml_between(i, (i + 1) % r);
        throw InvalidParameters("point " + x.describe(g) + " is not on the cycle");
    }

    auto pos = std::find(cycle.begin(), cycle.end(), x.edge());
    if (pos == cycle.end())
        throw InvalidParameters("point " + x.describe(g) + " is not on the cycle");
    std::size_t i = static_cast<std::size_t>(pos - cycle.begin());
    const Edge& e = g.edge(cycle[i]);
    Rational mid = e.length / Rational(2);
    if (x.offset() == mid) return GraphPoint::at_vertex(corr.vertex_of_edge[cycle[i]]);

    VertexId toward = x.offset() < mid ? e.u : e.v;
    Rational t = (x.offset() - mid).abs();
    std::size_t nbr = shared[i] == toward ? (i + 1) % r : (i + r - 1) % r;
    auto le = corr.line.find_edge(corr.vertex_of_edge[cycle[i]], corr.vertex_of_edge[cycle[nbr]]);
    const Edge& lede = corr.line.edge(*le);
    Rational off = lede.u == corr.vertex_of_edge[cycle[i]] ? t : lede.length - t;
    return GraphPoint::on_edge(corr.line, *le, off);
}

namespace detail {

// Image under h of the portion [s1, s2] of one edge of L, as a chain of at
// most two segments of G (bending at the shared vertex when the portion
// crosses Pm_L).
inline std::vector<GeodesicSegment> h_image_of_edge_portion(const LineGraphCorrespondence& corr,
                                                            EdgeId le, const Rational& s1,
                                                            const Rational& s2) {
    const MetricGraph& g = corr.graph;
    const Edge& lede = corr.line.edge(le);
    VertexId w = corr.shared_vertex[le];
    Rational pml = corr.pml_offset(le);
    EdgeId ea = corr.edge_of_vertex[lede.u];
    EdgeId eb = corr.edge_of_vertex[lede.v];

    auto map_a = [&](const Rational& s) {  // s <= pml: inside e_a
        Rational mid = g.edge(ea).length / Rational(2);
        return g.edge(ea).v == w ? mid + s : mid - s;
    };
    auto map_b = [&](const Rational& s) {  // s >= pml: inside e_b
        Rational t = lede.length - s;
        Rational mid = g.edge(eb).length / Rational(2);
        return g.edge(eb).v == w ? mid + t : mid - t;
    };

    Rational lo = min(s1, s2), hi = max(s1, s2);
    std::vector<GeodesicSegment> out;
    if (hi <= pml) {
        out.push_back(GeodesicSegment{ea, map_a(s1), map_a(s2)});
    } else if (lo >= pml) {
        out.push_back(GeodesicSegment{eb, map_b(s1), map_b(s2)});
    } else if (s1 < s2) {
        out.push_back(GeodesicSegment{ea, map_a(s1), map_a(pml)});
        out.push_back(GeodesicSegment{eb, map_b(pml), map_b(s2)});
    } else {
        out.push_back(GeodesicSegment{eb, map_b(s1), map_b(pml)});
        out.push_back(GeodesicSegment{ea, map_a(pml), map_a(s2)});
    }
    return out;
}

inline Geodesic make_verified_piece(const MetricGraph& g, const GraphPoint& from,
                                    const GraphPoint& to, std::vector<GeodesicSegment> segs) {
    Geodesic geo;
    geo.start = from;
    geo.end = to;
    Rational total = 0;
    for (const auto& s : segs) total += s.length();
    geo.total_length = total;
    geo.segments = std::move(segs);
    if (geo.segments.empty()) geo = degenerate_geodesic(g, from);
    if (geo.total_length != point_distance(g, from, to))
        throw Error("internal error: decomposition piece of length " + geo.total_length.str() +
                    " is not a geodesic between " + from.describe(g) + " and " + to.describe(g));
    return geo;
}

}  // namespace detail

struct GeodesicImageDecomposition {
    Geodesic first;   // contains h(start); shorter than the longest edge of G
    Geodesic middle;  // geodesic between the split points
    Geodesic last;    // contains h(end); shorter than the longest edge of G
};

/// Splits the h-image of a geodesic of L into three geodesics of G. The
/// geodesic is cut at the first and last vertex of L it passes through; the
/// middle image follows full edges of G between shared vertices and the end
/// pieces stay within one edge pair each. When an endpoint is itself a
/// vertex of L its end piece instead takes the half-edge of the middle
/// image up to the first shared vertex, so end pieces are at most half an
/// edge long in that case. Every returned piece is re-verified to be a
/// geodesic of G.
inline GeodesicImageDecomposition decompose_geodesic_image(const LineGraphCorrespondence& corr,
                                                           const Geodesic& gamma) {
    const MetricGraph& g = corr.graph;
    const MetricGraph& l = corr.line;
    const auto& segs = gamma.segments;
    std::size_t n = segs.size();

    if (gamma.total_length.is_zero()) {
        GraphPoint hx = h_map(corr, gamma.start);
        GeodesicImageDecomposition out;
        out.first = out.middle = out.last = detail::degenerate_geodesic(g, hx);
        return out;
    }

    auto junction = [&](std::size_t j) -> GraphPoint {
        if (j == 0) return gamma.start;
        if (j == n) return gamma.end;
        return GraphPoint::on_edge(l, segs[j - 1].edge, segs[j - 1].to);
    };

    std::vector<std::size_t> vertex_junctions;
    for (std::size_t j = 0; j <= n; ++j)
        if (junction(j).is_vertex()) vertex_junctions.push_back(j);

    GraphPoint hx = h_map(corr, gamma.start);
    GraphPoint hy = h_map(corr, gamma.end);

    if (vertex_junctions.empty()) {
        // Whole geodesic inside one edge of L: its image is one geodesic.
        std::vector<GeodesicSegment> image;
        if (n == 1)
            image = detail::h_image_of_edge_portion(corr, segs[0].edge, segs[0].from, segs[0].to);
        GeodesicImageDecomposition out;
        out.first = detail::degenerate_geodesic(g, hx);
        out.middle = detail::make_verified_piece(g, hx, hy, std::move(image));
        out.last = detail::degenerate_geodesic(g, hy);
        return out;
    }

    std::size_t jf = vertex_junctions.front();
    std::size_t jl = vertex_junctions.back();

    // Vertex path along the geodesic and the chain of its image: a half
    // edge into the first shared vertex, full edges between consecutive
    // shared vertices, and a half edge out to the last midpoint.
    std::vector<VertexId> lverts;
    for (std::size_t j = jf; j <= jl; ++j) lverts.push_back(junction(j).vertex());
    std::size_t r = lverts.size();

    std::vector<GraphPoint> nodes;  // Pm(f_1), w_1, ..., w_{r-1}, Pm(f_r)
    std::vector<GeodesicSegment> chain;
    nodes.push_back(h_map(corr, GraphPoint::at_vertex(lverts.front())));
    if (r >= 2) {
        std::vector<VertexId> wayposts;
        for (std::size_t j = jf; j < jl; ++j) wayposts.push_back(corr.shared_vertex[segs[j].edge]);
        for (std::size_t i = 0; i + 1 < r; ++i) {
            EdgeId f_here = corr.edge_of_vertex[lverts[i]];
            EdgeId f_next = corr.edge_of_vertex[lverts[i + 1]];
            VertexId w = wayposts[i];
            if (i == 0) {
                const Edge& fe = g.edge(f_here);
                chain.push_back(GeodesicSegment{f_here, fe.length / Rational(2),
                                                fe.u == w ? Rational(0) : fe.length});
            } else {
                const Edge& fe = g.edge(f_here);
                Rational from = fe.u == wayposts[i - 1] ? Rational(0) : fe.length;
                Rational to = fe.u == w ? Rational(0) : fe.length;
                chain.push_back(GeodesicSegment{f_here, from, to});
            }
            nodes.push_back(GraphPoint::at_vertex(w));
            if (i + 2 == r) {
                const Edge& fe = g.edge(f_next);
                chain.push_back(GeodesicSegment{f_next, fe.u == w ? Rational(0) : fe.length,
                                                fe.length / Rational(2)});
                nodes.push_back(h_map(corr, GraphPoint::at_vertex(lverts.back())));
            }
        }
    }

    std::size_t head = 0, tail = chain.size();
    Geodesic first, last;
    if (jf > 0) {
        first = detail::make_verified_piece(
            g, hx, nodes.front(),
            detail::h_image_of_edge_portion(corr, segs[jf - 1].edge, segs[jf - 1].from,
                                            segs[jf - 1].to));
    } else if (r >= 2) {
        first = detail::make_verified_piece(g, nodes[0], nodes[1], {chain[0]});
        ++head;
    } else {
        first = detail::degenerate_geodesic(g, hx);
    }
    if (jl < n) {
        last = detail::make_verified_piece(
            g, nodes.back(), hy,
            detail::h_image_of_edge_portion(corr, segs[jl].edge, segs[jl].from, segs[jl].to));
    } else if (r >= 2 && tail > head) {
        last = detail::make_verified_piece(g, nodes[nodes.size() - 2], nodes.back(),
                                           {chain[tail - 1]});
        --tail;
    } else {
        last = detail::degenerate_geodesic(g, hy);
    }

    GraphPoint mid_from = jf > 0 ? nodes.front() : (r >= 2 ? nodes[1] : nodes.front());
    GraphPoint mid_to = jl < n ? nodes.back()
                               : (r >= 2 && nodes.size() >= 2 ? nodes[nodes.size() - 2]
                                                              : nodes.back());
    std::vector<GeodesicSegment> mid_chain(chain.begin() + head, chain.begin() + tail);
    GeodesicImageDecomposition out;
    out.first = std::move(first);
    out.middle = detail::make_verified_piece(g, mid_from, mid_to, std::move(mid_chain));
    out.last = std::move(last);
    return out;
}

/// Exact sample-based certificate that h is a (l_max/2)-full quasi-isometry
/// with multiplicative constant 1 and additive constant 2*l_max.
struct QuasiIsometryReport {
    Rational max_lipschitz_excess;   // max of d_G(h(x),h(y)) - d_L(x,y)
    Rational max_reciprocal_excess;  // max of d_L(x,y) - d_G(h(x),h(y)) - 2*l_max
    Rational fullness_radius;        // max distance from a grid point of G to h(L)
    long long sample_count = 0;      // number of point pairs compared
    std::pair<GraphPoint, GraphPoint> lipschitz_witness;   // points of L
    std::pair<GraphPoint, GraphPoint> reciprocal_witness;  // points of L
    GraphPoint fullness_witness;                           // point of G
    bool vertex_isometry_ok = false;  // d_L == d_G over all vertex pairs of L
    Rational lmax;

    bool passes() const {
        return max_lipschitz_excess <= Rational(0) && max_reciprocal_excess <= Rational(0) &&
               fullness_radius <= lmax / Rational(2) && vertex_isometry_ok;
    }
};

struct QiSampleSpec {
    // Interior sampling resolution on the edges of L and of G; defaults to
    // l_max/4. The PM_L V points are always included.
    std::optional<Rational> resolution;
};

inline QuasiIsometryReport verify_quasi_isometry(const LineGraphCorrespondence& corr,
                                                 const QiSampleSpec& spec = {}) {
    const MetricGraph& g = corr.graph;
    const MetricGraph& l = corr.line;
    Rational lmax = g.max_edge_length();
    Rational step = spec.resolution ? *spec.resolution : lmax / Rational(4);

    std::vector<GraphPoint> sample = corr.pml_v_points();
    {
        auto extra = grid_points(l, step);
        sample.insert(sample.end(), extra.begin(), extra.end());
        std::sort(sample.begin(), sample.end());
        sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
    }

    QuasiIsometryReport rep;
    rep.lmax = lmax;
    rep.max_lipschitz_excess = Rational(0) - Rational(2) * lmax;  // any pair beats this
    rep.max_reciprocal_excess = rep.max_lipschitz_excess - Rational(2) * lmax;
    rep.lipschitz_witness = rep.reciprocal_witness = {sample.front(), sample.front()};
    rep.fullness_witness = GraphPoint::at_vertex(0);
    Rational two_lmax = Rational(2) * lmax;

    std::vector<GraphPoint> images;
    images.reserve(sample.size());
    for (const auto& x : sample) images.push_back(h_map(corr, x));

    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = i; j < sample.size(); ++j) {
            Rational dl = point_distance(l, sample[i], sample[j]);
            Rational dg = point_distance(g, images[i], images[j]);
            ++rep.sample_count;
            if (dg - dl > rep.max_lipschitz_excess) {
                rep.max_lipschitz_excess = dg - dl;
                rep.lipschitz_witness = {sample[i], sample[j]};
            }
            if (dl - dg - two_lmax > rep.max_reciprocal_excess) {
                rep.max_reciprocal_excess = dl - dg - two_lmax;
                rep.reciprocal_witness = {sample[i], sample[j]};
            }
        }

    rep.vertex_isometry_ok = true;
    for (VertexId a = 0; a < l.vertex_count() && rep.vertex_isometry_ok; ++a)
        for (VertexId b = a; b < l.vertex_count(); ++b) {
            GraphPoint pa = GraphPoint::at_vertex(a), pb = GraphPoint::at_vertex(b);
            if (point_distance(l, pa, pb) != point_distance(g, h_map(corr, pa), h_map(corr, pb))) {
                rep.vertex_isometry_ok = false;
                break;
            }
        }

    // h(L) covers G except the open half-edges hanging off degree-1
    // vertices; the distance to the image is largest at those vertices.
    std::vector<std::tuple<EdgeId, Rational, Rational>> image_intervals;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        Rational lo = g.degree(ed.u) == 1 ? ed.length / Rational(2) : Rational(0);
        Rational hi = g.degree(ed.v) == 1 ? ed.length / Rational(2) : ed.length;
        image_intervals.emplace_back(e, lo, hi);
    }
    rep.fullness_radius = Rational(0);
    for (const auto& p : grid_points(g, step)) {
        std::optional<Rational> d;
        for (const auto& [e, lo, hi] : image_intervals) {
            Rational cand = point_to_interval_distance(g, p, e, lo, hi);
            if (!d || cand < *d) d = cand;
        }
        if (d && *d > rep.fullness_radius) {
            rep.fullness_radius = *d;
            rep.fullness_witness = p;
        }
    }
    return rep;
}

}  // namespace hyperline
