#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hyperline/errors.hpp"
#include "hyperline/rational.hpp"

namespace hyperline {

using VertexId = int;
using EdgeId = int;

struct Edge {
    VertexId u;
    VertexId v;
    Rational length;

    VertexId other(VertexId w) const { return w == u ? v : u; }
};

/// Finite simple connected graph with positive rational edge lengths,
/// immutable after construction. Exposes exact vertex-to-vertex distances
/// via a precomputed all-pairs table; distances between arbitrary points
/// (including edge interiors) build on that table.
class MetricGraph {
public:
    using WeightedEdgeSpec = std::tuple<std::string, std::string, Rational>;

    static MetricGraph build(const std::vector<std::string>& vertex_labels,
                             const std::vector<WeightedEdgeSpec>& weighted_edges) {
        MetricGraph g;
        g.labels_ = vertex_labels;
        for (int i = 0; i < static_cast<int>(vertex_labels.size()); ++i) {
            if (!g.label_index_.emplace(vertex_labels[i], i).second)
                throw InvalidParameters("duplicate vertex label '" + vertex_labels[i] + "'");
        }
        g.adjacency_.resize(vertex_labels.size());
        std::map<std::pair<VertexId, VertexId>, EdgeId> seen;
        for (const auto& [lu, lv, len] : weighted_edges) {
            VertexId u = g.vertex_id(lu);
            VertexId v = g.vertex_id(lv);
            if (u == v) throw LoopEdge(lu);
            if (!len.is_positive()) throw NonpositiveLength(lu, lv, len.str());
            auto key = std::minmax(u, v);
            EdgeId id = static_cast<EdgeId>(g.edges_.size());
            if (!seen.emplace(std::pair<VertexId, VertexId>(key.first, key.second), id).second)
                throw DuplicateEdge(lu, lv);
            g.edges_.push_back(Edge{u, v, len});
            g.adjacency_[u].push_back(id);
            g.adjacency_[v].push_back(id);
        }
        g.edge_index_ = std::move(seen);
        g.check_connected();
        g.compute_vertex_distances();
        return g;
    }

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& vertex_label(VertexId v) const { return labels_[v]; }
    const std::vector<std::string>& vertex_labels() const { return labels_; }

    VertexId vertex_id(const std::string& label) const {
        auto it = label_index_.find(label);
        if (it == label_index_.end())
            throw InvalidParameters("unknown vertex label '" + label + "'");
        return it->second;
    }

    const std::vector<EdgeId>& incident_edges(VertexId v) const { return adjacency_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adjacency_[v].size()); }

    int max_degree() const {
        int d = 0;
        for (VertexId v = 0; v < vertex_count(); ++v) d = std::max(d, degree(v));
        return d;
    }

    long long degree_square_sum() const {
        long long s = 0;
        for (VertexId v = 0; v < vertex_count(); ++v)
            s += static_cast<long long>(degree(v)) * degree(v);
        return s;
    }

    Rational max_edge_length() const {
        Rational m = 0;
        for (const Edge& e : edges_) m = max(m, e.length);
        return m;
    }

    /// Common edge length if all edges have the same one, nullopt otherwise.
    /// A graph without edges counts as uniform of length 1.
    std::optional<Rational> uniform_length() const {
        if (edges_.empty()) return Rational(1);
        Rational k = edges_.front().length;
        for (const Edge& e : edges_)
            if (e.length != k) return std::nullopt;
        return k;
    }

    bool is_tree() const { return edge_count() == vertex_count() - 1; }

    bool is_cycle_graph() const {
        if (vertex_count() < 3 || edge_count() != vertex_count()) return false;
        for (VertexId v = 0; v < vertex_count(); ++v)
            if (degree(v) != 2) return false;
        return true;
    }

    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const {
        auto key = std::minmax(u, v);
        auto it = edge_index_.find(std::pair<VertexId, VertexId>(key.first, key.second));
        if (it == edge_index_.end()) return std::nullopt;
        return it->second;
    }

    const Rational& vertex_distance(VertexId u, VertexId v) const {
        return dist_[static_cast<std::size_t>(u) * vertex_count() + v];
    }

private:
    void check_connected() {
        if (labels_.empty()) throw InvalidParameters("graph has no vertices");
        std::vector<bool> seen(labels_.size(), false);
        std::vector<VertexId> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : adjacency_[v]) {
                VertexId w = edges_[e].other(v);
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        for (VertexId v = 0; v < vertex_count(); ++v)
            if (!seen[v]) throw Disconnected(labels_[v]);
    }

    // Dijkstra from every source; n is small and comparisons are exact.
    void compute_vertex_distances() {
        int n = vertex_count();
        dist_.assign(static_cast<std::size_t>(n) * n, Rational(0));
        for (VertexId s = 0; s < n; ++s) {
            std::vector<bool> done(n, false);
            std::vector<std::optional<Rational>> d(n);
            d[s] = Rational(0);
            for (int round = 0; round < n; ++round) {
                int best = -1;
                for (int v = 0; v < n; ++v)
                    if (!done[v] && d[v] && (best < 0 || *d[v] < *d[best])) best = v;
                if (best < 0) break;
                done[best] = true;
                for (EdgeId e : adjacency_[best]) {
                    VertexId w = edges_[e].other(best);
                    Rational cand = *d[best] + edges_[e].length;
                    if (!d[w] || cand < *d[w]) d[w] = cand;
                }
            }
            for (int v = 0; v < n; ++v)
                dist_[static_cast<std::size_t>(s) * n + v] = *d[v];
        }
    }

    std::vector<std::string> labels_;
    std::map<std::string, VertexId> label_index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> adjacency_;
    std::map<std::pair<VertexId, VertexId>, EdgeId> edge_index_;
    std::vector<Rational> dist_;
};

/// A point of the metric graph: either a vertex or a point strictly inside
/// an edge, identified by the edge and the offset from the edge's u
/// endpoint. Boundary offsets canonicalize to the vertex form, so equality
/// of points is plain field equality.
class GraphPoint {
public:
    static GraphPoint at_vertex(VertexId v) {
        GraphPoint p;
        p.vertex_ = v;
        return p;
    }

    static GraphPoint on_edge(const MetricGraph& g, EdgeId e, const Rational& offset) {
        const Edge& ed = g.edge(e);
        if (offset.is_negative() || offset > ed.length)
            throw InvalidParameters("offset " + offset.str() + " outside edge of length " +
                                    ed.length.str());
        if (offset.is_zero()) return at_vertex(ed.u);
        if (offset == ed.length) return at_vertex(ed.v);
        GraphPoint p;
        p.vertex_ = -1;
        p.edge_ = e;
        p.offset_ = offset;
        return p;
    }

    bool is_vertex() const { return vertex_ >= 0; }
    VertexId vertex() const { return vertex_; }
    EdgeId edge() const { return edge_; }
    const Rational& offset() const { return offset_; }

    /// True if the point lies on edge e (vertices count when incident).
    bool lies_on(const MetricGraph& g, EdgeId e) const {
        if (!is_vertex()) return edge_ == e;
        return g.edge(e).u == vertex_ || g.edge(e).v == vertex_;
    }

    /// Offset from the u endpoint of edge e; requires lies_on(g, e).
    Rational offset_on(const MetricGraph& g, EdgeId e) const {
        if (!is_vertex()) return offset_;
        return g.edge(e).u == vertex_ ? Rational(0) : g.edge(e).length;
    }

    friend bool operator==(const GraphPoint& a, const GraphPoint& b) {
        return a.vertex_ == b.vertex_ && a.edge_ == b.edge_ && a.offset_ == b.offset_;
    }

    // Vertices sort before interior points; used for deterministic witness
    // tie-breaking and for set-like containers.
    friend std::strong_ordering operator<=>(const GraphPoint& a, const GraphPoint& b) {
        if (a.is_vertex() != b.is_vertex())
            return a.is_vertex() ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.is_vertex()) return a.vertex_ <=> b.vertex_;
        if (auto c = a.edge_ <=> b.edge_; c != 0) return c;
        return a.offset_ <=> b.offset_;
    }

    std::string describe(const MetricGraph& g) const {
        if (is_vertex()) return g.vertex_label(vertex_);
        const Edge& e = g.edge(edge_);
        return "(" + g.vertex_label(e.u) + "-" + g.vertex_label(e.v) + " @ " + offset_.str() + ")";
    }

private:
    VertexId vertex_ = -1;
    EdgeId edge_ = -1;
    Rational offset_ = 0;
};

namespace detail {

// Exit vertices of a point together with the in-edge cost of reaching them.
// A vertex exits through itself at cost 0; an interior point through both
// endpoints of its edge.
inline std::vector<std::pair<VertexId, Rational>> exit_costs(const MetricGraph& g,
                                                             const GraphPoint& p) {
    if (p.is_vertex()) return {{p.vertex(), Rational(0)}};
    const Edge& e = g.edge(p.edge());
    return {{e.u, p.offset()}, {e.v, e.length - p.offset()}};
}

}  // namespace detail

/// Exact distance between two points: the in-edge distance when both lie on
/// one edge, against the four endpoint-routed sums.
inline Rational point_distance(const MetricGraph& g, const GraphPoint& p, const GraphPoint& q) {
    std::optional<Rational> best;
    if (!p.is_vertex() && !q.is_vertex() && p.edge() == q.edge())
        best = (p.offset() - q.offset()).abs();
    for (const auto& [pv, pc] : detail::exit_costs(g, p))
        for (const auto& [qv, qc] : detail::exit_costs(g, q)) {
            Rational cand = pc + g.vertex_distance(pv, qv) + qc;
            if (!best || cand < *best) best = cand;
        }
    return *best;
}

/// Exact distance from a point to the closed subinterval [lo, hi] of edge e
/// (offsets from the edge's u endpoint). The minimum over the interval is
/// attained at an interval end, or is zero when p lies inside it.
inline Rational point_to_interval_distance(const MetricGraph& g, const GraphPoint& p, EdgeId e,
                                           const Rational& lo, const Rational& hi) {
    if (p.lies_on(g, e)) {
        Rational off = p.offset_on(g, e);
        if (lo <= off && off <= hi) return Rational(0);
    }
    Rational a = point_distance(g, p, GraphPoint::on_edge(g, e, lo));
    Rational b = point_distance(g, p, GraphPoint::on_edge(g, e, hi));
    return min(a, b);
}

/// All vertices plus the midpoint of every edge, sorted.
inline std::vector<GraphPoint> pmv_points(const MetricGraph& g) {
    std::vector<GraphPoint> pts;
    pts.reserve(g.vertex_count() + g.edge_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) pts.push_back(GraphPoint::at_vertex(v));
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        pts.push_back(GraphPoint::on_edge(g, e, g.edge(e).length / Rational(2)));
    std::sort(pts.begin(), pts.end());
    return pts;
}

/// Vertices plus interior points at offsets that are multiples of step.
inline std::vector<GraphPoint> grid_points(const MetricGraph& g, const Rational& step) {
    if (!step.is_positive()) throw InvalidParameters("grid step must be positive");
    std::vector<GraphPoint> pts;
    for (VertexId v = 0; v < g.vertex_count(); ++v) pts.push_back(GraphPoint::at_vertex(v));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Rational& len = g.edge(e).length;
        for (std::int64_t i = 1;; ++i) {
            Rational off = step * Rational(i);
            if (off >= len) break;
            pts.push_back(GraphPoint::on_edge(g, e, off));
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

namespace detail {

// Maximum over a convex cell of the pointwise minimum of affine functions
// f(u,s) = cu*u + cs*s + c. The cell is the box [0,lu] x [0,ls], optionally
// cut by u <= s or u >= s. Since the minimum of affine functions is concave,
// the maximum is attained at an intersection of two of: the equality lines
// f_i = f_j and the cell boundary lines.
struct AffineUS {
    Rational cu, cs, c;
    Rational eval(const Rational& u, const Rational& s) const { return cu * u + cs * s + c; }
};

inline Rational max_of_min_affine(const std::vector<AffineUS>& fs, const Rational& lu,
                                  const Rational& ls, int diag_cut /* 0 none, -1 u<=s, +1 u>=s */) {
    // Lines A*u + B*s = C.
    struct Line {
        Rational A, B, C;
    };
    std::vector<Line> lines;
    lines.push_back({1, 0, 0});
    lines.push_back({1, 0, lu});
    lines.push_back({0, 1, 0});
    lines.push_back({0, 1, ls});
    if (diag_cut != 0) lines.push_back({1, -1, 0});
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j)
            lines.push_back({fs[i].cu - fs[j].cu, fs[i].cs - fs[j].cs, fs[j].c - fs[i].c});

    auto inside = [&](const Rational& u, const Rational& s) {
        if (u.is_negative() || u > lu || s.is_negative() || s > ls) return false;
        if (diag_cut < 0 && u > s) return false;
        if (diag_cut > 0 && s > u) return false;
        return true;
    };
    auto value = [&](const Rational& u, const Rational& s) {
        Rational m = fs.front().eval(u, s);
        for (std::size_t i = 1; i < fs.size(); ++i) m = min(m, fs[i].eval(u, s));
        return m;
    };

    std::optional<Rational> best;
    auto consider = [&](const Rational& u, const Rational& s) {
        if (!inside(u, s)) return;
        Rational v = value(u, s);
        if (!best || v > *best) best = v;
    };

    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            Rational det = lines[i].A * lines[j].B - lines[j].A * lines[i].B;
            if (det.is_zero()) continue;
            Rational u = (lines[i].C * lines[j].B - lines[j].C * lines[i].B) / det;
            Rational s = (lines[i].A * lines[j].C - lines[j].A * lines[i].C) / det;
            consider(u, s);
        }
    consider(0, 0);
    return best ? *best : value(0, 0);
}

}  // namespace detail

/// Exact diameter: sup of point_distance over all pairs of points, computed
/// per pair of edges as the maximum of a concave piecewise-linear envelope.
inline Rational diameter(const MetricGraph& g) {
    if (g.edge_count() == 0) return Rational(0);
    Rational best = 0;
    for (EdgeId a = 0; a < g.edge_count(); ++a) {
        const Edge& ea = g.edge(a);
        for (EdgeId b = a; b < g.edge_count(); ++b) {
            const Edge& eb = g.edge(b);
            std::vector<detail::AffineUS> fs = {
                {1, 1, g.vertex_distance(ea.u, eb.u)},
                {1, -1, g.vertex_distance(ea.u, eb.v) + eb.length},
                {-1, 1, g.vertex_distance(ea.v, eb.u) + ea.length},
                {-1, -1, g.vertex_distance(ea.v, eb.v) + ea.length + eb.length},
            };
            if (a == b) {
                // Same edge: the in-edge distance |u - s| splits the square
                // into two triangles on which it is affine.
                auto with = fs;
                with.push_back({-1, 1, 0});
                best = max(best, detail::max_of_min_affine(with, ea.length, eb.length, -1));
                with = fs;
                with.push_back({1, -1, 0});
                best = max(best, detail::max_of_min_affine(with, ea.length, eb.length, +1));
            } else {
                best = max(best, detail::max_of_min_affine(fs, ea.length, eb.length, 0));
            }
        }
    }
    return best;
}

}  // namespace hyperline
