#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperline/thinness.hpp"

namespace hyperline {

enum class DeltaMode { exact_uniform, lower_bound, sampled };

inline const char* to_string(DeltaMode m) {
    switch (m) {
        case DeltaMode::exact_uniform: return "exact_uniform";
        case DeltaMode::lower_bound: return "lower_bound";
        case DeltaMode::sampled: return "sampled";
    }
    return "?";
}

/// Sharp hyperbolicity constant together with the witness triangle, the
/// witness point attaining it, and how the candidate set was built.
struct DeltaResult {
    Rational value;
    GeodesicTriangle witness;
    GraphPoint witness_point;
    int witness_side = 0;
    DeltaMode mode = DeltaMode::lower_bound;
    long long corner_triples = 0;       // corner triples inspected
    long long triangles_evaluated = 0;  // side-choice triangles evaluated
};

struct DeltaOptions {
    long long geodesic_cap = 10000;
    // Restrict to triangles whose union is a simple closed curve. This only
    // prunes: the supremum is attained on such a triangle for uniform
    // lengths, so the value is unchanged there.
    bool cycle_filter = false;
    std::optional<long long> triple_budget;
};

/// Maximum triangle thinness over all corner triples (with repetition) from
/// `corners` and all geodesic side choices per pair. The running maximum is
/// exact: a triple is skipped only when half its largest pairwise distance
/// cannot beat the current best, which bounds every thinness value of the
/// triple. Witness ties resolve to the lexicographically first triple and
/// the smallest witness offset.
inline DeltaResult delta_over_corners(const MetricGraph& g, std::vector<GraphPoint> corners,
                                      DeltaMode mode, const DeltaOptions& opt = {}) {
    std::sort(corners.begin(), corners.end());
    corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
    const long long p = static_cast<long long>(corners.size());
    if (p == 0) throw InvalidParameters("empty corner set");
    if (opt.triple_budget) {
        long long triples = p * (p + 1) / 2 * (p + 2) / 3;
        if (triples > *opt.triple_budget) throw OracleBudgetExceeded(triples, *opt.triple_budget);
    }

    std::vector<Rational> dist(p * p);
    for (long long i = 0; i < p; ++i)
        for (long long j = i; j < p; ++j)
            dist[i * p + j] = dist[j * p + i] = point_distance(g, corners[i], corners[j]);

    std::vector<std::optional<std::vector<Geodesic>>> geo_cache(p * (p + 1) / 2);
    auto geodesics_between = [&](long long i, long long j) -> const std::vector<Geodesic>& {
        if (i > j) std::swap(i, j);
        auto& slot = geo_cache[j * (j + 1) / 2 + i];
        if (!slot) slot = enumerate_geodesics(g, corners[i], corners[j], opt.geodesic_cap);
        return *slot;
    };

    DeltaResult out;
    out.mode = mode;
    std::optional<Rational> best;
    Rational two(2);

    for (long long i = 0; i < p; ++i)
        for (long long j = i; j < p; ++j)
            for (long long k = j; k < p; ++k) {
                ++out.corner_triples;
                Rational dmax = max(max(dist[i * p + j], dist[j * p + k]), dist[i * p + k]);
                if (best && dmax / two <= *best) continue;
                const auto& gxy = geodesics_between(i, j);
                const auto& gyz = geodesics_between(j, k);
                const auto& gzx = geodesics_between(i, k);
                for (const auto& sxy : gxy)
                    for (const auto& syz : gyz)
                        for (const auto& szx : gzx) {
                            GeodesicTriangle t{{corners[i], corners[j], corners[k]},
                                               {sxy, syz, szx.reversed()},
                                               false};
                            if (opt.cycle_filter &&
                                !detail::union_is_simple_closed_curve(g, t))
                                continue;
                            ++out.triangles_evaluated;
                            for (int side = 0; side < 3; ++side) {
                                if (best && t.sides[side].total_length / two <= *best) continue;
                                std::vector<GeodesicSegment> targets;
                                for (int other = 0; other < 3; ++other) {
                                    if (other == side) continue;
                                    for (const auto& s : t.sides[other].segments)
                                        targets.push_back(s);
                                }
                                if (targets.empty()) continue;
                                auto sup = side_supremum(g, t.sides[side], targets);
                                if (!best || sup.value > *best) {
                                    best = sup.value;
                                    out.witness = t;
                                    out.witness_point = sup.point;
                                    out.witness_side = side;
                                }
                            }
                        }
            }

    if (!best || best->is_negative()) {
        // Only reachable on a graph reduced to a point (or all-degenerate
        // triangles): the constant is 0 by definition.
        out.value = 0;
        GraphPoint c = corners.front();
        Geodesic pt = detail::degenerate_geodesic(g, c);
        out.witness = GeodesicTriangle{{c, c, c}, {pt, pt, pt}, false};
        out.witness_point = c;
        out.witness_side = 0;
        return out;
    }
    out.value = *best;
    out.witness.is_cycle = detail::union_is_simple_closed_curve(g, out.witness);
    return out;
}

/// Exact hyperbolicity constant for graphs whose edges all have one length.
/// Corners range over vertices and edge midpoints; for uniform lengths some
/// triangle with such corners attains the supremum, so the result is sharp.
inline DeltaResult delta_exact_uniform(const MetricGraph& g, const DeltaOptions& opt = {}) {
    if (!g.uniform_length()) throw NonUniformLengths();
    return delta_over_corners(g, pmv_points(g), DeltaMode::exact_uniform, opt);
}

/// Lower bound on the hyperbolicity constant for arbitrary edge lengths:
/// the maximum over triangles with corners in the vertex/midpoint set,
/// optionally enriched with a grid at resolution `extra_net` on every edge.
/// Refining the net never decreases the result.
inline DeltaResult delta_lower_bound(const MetricGraph& g,
                                     const std::optional<Rational>& extra_net = std::nullopt,
                                     const DeltaOptions& opt = {}) {
    std::vector<GraphPoint> corners = pmv_points(g);
    if (extra_net) {
        auto extra = grid_points(g, *extra_net);
        corners.insert(corners.end(), extra.begin(), extra.end());
    }
    return delta_over_corners(g, std::move(corners), DeltaMode::lower_bound, opt);
}

/// Brute-force lower bound with corners on the epsilon-grid of every edge,
/// used as an independent cross-check. Guarded by a triple-count budget.
inline Rational delta_sampling_oracle(const MetricGraph& g, const Rational& epsilon,
                                      DeltaOptions opt = {}) {
    if (!opt.triple_budget) opt.triple_budget = 20'000'000;
    return delta_over_corners(g, grid_points(g, epsilon), DeltaMode::sampled, opt).value;
}

/// Named upper bounds on the hyperbolicity constant that hold for this
/// graph: half the diameter always, k*m/4 for uniform length k, and zero
/// for trees.
inline std::vector<std::pair<std::string, Rational>> upper_bound_report(const MetricGraph& g) {
    std::vector<std::pair<std::string, Rational>> out;
    out.emplace_back("diameter/2", diameter(g) / Rational(2));
    if (auto k = g.uniform_length(); k && g.edge_count() > 0)
        out.emplace_back("km/4", *k * Rational(g.edge_count()) / Rational(4));
    if (g.is_tree()) out.emplace_back("tree", Rational(0));
    return out;
}

/// Checks that every grid point of Gamma = [xu] + [uv] + [vy] lies within
/// 2*delta + l_max of the geodesic [xy], provided the end legs are at most
/// l_max long. Returns the worst excess over the bound (<= 0 when it
/// holds).
inline Rational quadrilateral_gamma_check(const MetricGraph& g, const GraphPoint& x,
                                          const GraphPoint& y, const GraphPoint& u,
                                          const GraphPoint& v, const Rational& delta_g,
                                          std::optional<Rational> resolution = std::nullopt,
                                          long long cap = 10000) {
    Rational lmax = g.max_edge_length();
    if (point_distance(g, x, u) > lmax)
        throw HypothesisViolated("leg [xu] of length " + point_distance(g, x, u).str() +
                                 " exceeds the maximum edge length " + lmax.str());
    if (point_distance(g, v, y) > lmax)
        throw HypothesisViolated("leg [vy] of length " + point_distance(g, v, y).str() +
                                 " exceeds the maximum edge length " + lmax.str());
    Rational step = resolution ? *resolution : lmax / Rational(4);
    if (!step.is_positive()) throw InvalidParameters("resolution must be positive");

    Geodesic xy = enumerate_geodesics(g, x, y, cap).front();
    std::array<Geodesic, 3> gamma = {enumerate_geodesics(g, x, u, cap).front(),
                                     enumerate_geodesics(g, u, v, cap).front(),
                                     enumerate_geodesics(g, v, y, cap).front()};

    Rational bound = Rational(2) * delta_g + lmax;
    std::optional<Rational> worst;
    for (const auto& leg : gamma)
        for (const auto& seg : leg.segments) {
            Rational lo = seg.lo(), hi = seg.hi();
            std::vector<Rational> offs{lo, hi};
            for (std::int64_t i = 1;; ++i) {
                Rational off = lo + step * Rational(i);
                if (off >= hi) break;
                offs.push_back(off);
            }
            for (const auto& off : offs) {
                GraphPoint alpha = GraphPoint::on_edge(g, seg.edge, off);
                std::optional<Rational> dist;
                for (const auto& ts : xy.segments) {
                    Rational d = point_to_interval_distance(g, alpha, ts.edge, ts.lo(), ts.hi());
                    if (!dist || d < *dist) dist = d;
                }
                Rational excess = *dist - bound;
                if (!worst || excess > *worst) worst = excess;
            }
        }
    return *worst;
}

}  // namespace hyperline
