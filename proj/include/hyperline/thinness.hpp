#pragma once

#include <array>
#include <map>
#include <vector>

#include "hyperline/geodesics.hpp"
#include "hyperline/metric_graph.hpp"

namespace hyperline {

/// Union of three geodesics pairwise joining three corners. Degenerate
/// corners and point sides are allowed. is_cycle records whether the union
/// of the sides is a simple closed curve.
struct GeodesicTriangle {
    std::array<GraphPoint, 3> corners;
    std::array<Geodesic, 3> sides;  // [xy], [yz], [zx]
    bool is_cycle = false;
};

namespace detail {

inline std::vector<GeodesicSegment> positive_segments(const GeodesicTriangle& t) {
    std::vector<GeodesicSegment> segs;
    for (const auto& side : t.sides)
        for (const auto& s : side.segments)
            if (!s.length().is_zero()) segs.push_back(s);
    return segs;
}

// The union of the sides is a simple closed curve iff no two segments
// overlap with positive length, every segment endpoint is met exactly
// twice, and the segments form one connected component.
inline bool union_is_simple_closed_curve(const MetricGraph& g, const GeodesicTriangle& t) {
    auto segs = positive_segments(t);
    if (segs.empty()) return false;
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            if (segs[i].edge != segs[j].edge) continue;
            if (max(segs[i].lo(), segs[j].lo()) < min(segs[i].hi(), segs[j].hi())) return false;
        }
    std::map<GraphPoint, std::vector<std::size_t>> touching;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        touching[GraphPoint::on_edge(g, segs[i].edge, segs[i].lo())].push_back(i);
        touching[GraphPoint::on_edge(g, segs[i].edge, segs[i].hi())].push_back(i);
    }
    for (const auto& [pt, ids] : touching)
        if (ids.size() != 2) return false;
    std::vector<bool> seen(segs.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (const auto& [pt, ids] : touching)
            if (ids[0] == i || ids[1] == i) {
                std::size_t other = ids[0] == i ? ids[1] : ids[0];
                if (!seen[other]) {
                    seen[other] = true;
                    ++reached;
                    stack.push_back(other);
                }
            }
    }
    return reached == segs.size();
}

}  // namespace detail

/// Assembles a triangle from corners and side geodesics, checking that each
/// side joins its corners.
inline GeodesicTriangle make_triangle(const MetricGraph& g, const GraphPoint& x,
                                      const GraphPoint& y, const GraphPoint& z, Geodesic xy,
                                      Geodesic yz, Geodesic zx) {
    auto joins = [](const Geodesic& s, const GraphPoint& a, const GraphPoint& b) {
        return (s.start == a && s.end == b) || (s.start == b && s.end == a);
    };
    if (!joins(xy, x, y) || !joins(yz, y, z) || !joins(zx, z, x))
        throw InvalidParameters("triangle sides do not join the given corners");
    GeodesicTriangle t{{x, y, z}, {std::move(xy), std::move(yz), std::move(zx)}, false};
    t.is_cycle = detail::union_is_simple_closed_curve(g, t);
    return t;
}

struct ThinnessWitness {
    Rational value;
    GraphPoint point;  // point on weak side attaining the supremum
    int side = 0;      // index of the side the witness lies on
};

namespace detail {

// Supremum over a moving point p on the interval [lo, hi] of edge e of the
// distance to the target segments. For p at offset u, each target
// contributes endpoint-routed candidate lines of slope +-1 and, when it
// lives on the same edge, the in-edge distance max(c - u, 0, u - d). The
// distance to the union is the lower envelope of those candidates; its
// maximum sits at an interval endpoint, an in-edge kink, or an intersection
// of two candidate lines.
struct SegmentSup {
    Rational value;
    Rational arg;
};

inline SegmentSup sup_distance_on_interval(const MetricGraph& g, EdgeId e, const Rational& lo,
                                           const Rational& hi,
                                           const std::vector<GeodesicSegment>& targets) {
    const Edge& edge = g.edge(e);
    std::optional<Rational> k_u, k_v;
    std::vector<std::pair<Rational, Rational>> in_edge;
    auto relax = [](std::optional<Rational>& acc, const Rational& cand) {
        if (!acc || cand < *acc) acc = cand;
    };
    for (const auto& seg : targets) {
        const Edge& te = g.edge(seg.edge);
        Rational c = seg.lo(), d = seg.hi();
        relax(k_u, g.vertex_distance(edge.u, te.u) + c);
        relax(k_u, g.vertex_distance(edge.u, te.v) + (te.length - d));
        relax(k_v, g.vertex_distance(edge.v, te.u) + c);
        relax(k_v, g.vertex_distance(edge.v, te.v) + (te.length - d));
        if (seg.edge == e) in_edge.emplace_back(c, d);
    }

    // Candidate lines (slope, intercept): value = slope * u + intercept.
    std::vector<std::pair<Rational, Rational>> lines;
    lines.emplace_back(Rational(1), *k_u);
    lines.emplace_back(Rational(-1), edge.length + *k_v);
    for (const auto& [c, d] : in_edge) {
        lines.emplace_back(Rational(-1), c);
        lines.emplace_back(Rational(0), Rational(0));
        lines.emplace_back(Rational(1), -d);
    }

    std::vector<Rational> candidates{lo, hi};
    for (const auto& [c, d] : in_edge) {
        candidates.push_back(c);
        candidates.push_back(d);
    }
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (lines[i].first == lines[j].first) continue;
            candidates.push_back((lines[j].second - lines[i].second) /
                                 (lines[i].first - lines[j].first));
        }

    auto envelope = [&](const Rational& u) {
        Rational val = min(u + *k_u, (edge.length - u) + *k_v);
        for (const auto& [c, d] : in_edge) {
            Rational inward = max(max(c - u, Rational(0)), u - d);
            val = min(val, inward);
        }
        return val;
    };

    std::sort(candidates.begin(), candidates.end());
    std::optional<SegmentSup> best;
    for (const auto& u : candidates) {
        if (u < lo || u > hi) continue;
        Rational v = envelope(u);
        if (!best || v > best->value) best = SegmentSup{v, u};
    }
    return *best;
}

}  // namespace detail

/// Supremum over points of `side` of the exact distance to the union of the
/// target segments, with the witness point.
inline ThinnessWitness side_supremum(const MetricGraph& g, const Geodesic& side,
                                     const std::vector<GeodesicSegment>& targets) {
    ThinnessWitness best{Rational(-1), side.start, 0};
    for (const auto& seg : side.segments) {
        auto sup = detail::sup_distance_on_interval(g, seg.edge, seg.lo(), seg.hi(), targets);
        if (sup.value > best.value)
            best = ThinnessWitness{sup.value, GraphPoint::on_edge(g, seg.edge, sup.arg), 0};
    }
    return best;
}

/// Exact sharp thinness of a geodesic triangle: the supremum over each side
/// of the distance to the union of the other two sides.
inline ThinnessWitness triangle_thinness(const MetricGraph& g, const GeodesicTriangle& t) {
    ThinnessWitness best{Rational(-1), t.corners[0], 0};
    for (int i = 0; i < 3; ++i) {
        std::vector<GeodesicSegment> targets;
        for (int j = 0; j < 3; ++j) {
            if (j == i) continue;
            for (const auto& s : t.sides[j].segments) targets.push_back(s);
        }
        if (targets.empty()) continue;
        auto sup = side_supremum(g, t.sides[i], targets);
        if (sup.value > best.value) best = ThinnessWitness{sup.value, sup.point, i};
    }
    if (best.value.is_negative()) return ThinnessWitness{Rational(0), t.corners[0], 0};
    return best;
}

}  // namespace hyperline
