#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hyperline/metric_graph.hpp"

namespace hyperline {

enum class FamilyKind {
    cycle,
    path,
    star,
    complete,
    complete_bipartite,
    random_tree,
    random_connected,
    chorded_cycle,
};

inline const char* to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::cycle: return "cycle";
        case FamilyKind::path: return "path";
        case FamilyKind::star: return "star";
        case FamilyKind::complete: return "complete";
        case FamilyKind::complete_bipartite: return "complete_bipartite";
        case FamilyKind::random_tree: return "random_tree";
        case FamilyKind::random_connected: return "random_connected";
        case FamilyKind::chorded_cycle: return "chorded_cycle";
    }
    return "?";
}

/// A generated-graph description, expressible as a CLI string like
/// "cycle:n=6,k=1" or "random_connected:n=7,p=1/2,seed=42".
struct FamilySpec {
    FamilyKind kind = FamilyKind::cycle;
    int n = 0;                 // vertices (cycle, path, complete, trees, random)
    int m = 0;                 // leaves for star
    int a = 0, b = 0;          // parts for complete_bipartite
    Rational k = Rational(1);  // edge length
    Rational p = Rational(1, 2);
    std::uint64_t seed = 0;

    std::string str() const {
        std::string s = to_string(kind);
        s += ":";
        switch (kind) {
            case FamilyKind::star: s += "m=" + std::to_string(m); break;
            case FamilyKind::complete_bipartite:
                s += "a=" + std::to_string(a) + ",b=" + std::to_string(b);
                break;
            default: s += "n=" + std::to_string(n); break;
        }
        s += ",k=" + k.str();
        if (kind == FamilyKind::random_connected) s += ",p=" + p.str();
        if (kind == FamilyKind::random_tree || kind == FamilyKind::random_connected)
            s += ",seed=" + std::to_string(seed);
        return s;
    }
};

/// Expected hyperbolicity values for a family, when known.
struct KnownDelta {
    FamilySpec family;
    std::optional<Rational> delta_g;
    std::optional<Rational> delta_line;
    std::string provenance;
};

inline FamilySpec parse_family_spec(const std::string& text) {
    auto colon = text.find(':');
    std::string kind_str = text.substr(0, colon);
    FamilySpec spec;
    if (kind_str == "cycle") spec.kind = FamilyKind::cycle;
    else if (kind_str == "path") spec.kind = FamilyKind::path;
    else if (kind_str == "star") spec.kind = FamilyKind::star;
    else if (kind_str == "complete") spec.kind = FamilyKind::complete;
    else if (kind_str == "complete_bipartite") spec.kind = FamilyKind::complete_bipartite;
    else if (kind_str == "random_tree") spec.kind = FamilyKind::random_tree;
    else if (kind_str == "random_connected") spec.kind = FamilyKind::random_connected;
    else if (kind_str == "chorded_cycle") spec.kind = FamilyKind::chorded_cycle;
    else throw InvalidParameters("unknown family kind '" + kind_str + "'");

    std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        auto comma = rest.find(',', pos);
        std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        pos = comma == std::string::npos ? rest.size() : comma + 1;
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw InvalidParameters("malformed family parameter '" + item + "'");
        std::string key = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        try {
            if (key == "n") spec.n = std::stoi(value);
            else if (key == "m") spec.m = std::stoi(value);
            else if (key == "a") spec.a = std::stoi(value);
            else if (key == "b") spec.b = std::stoi(value);
            else if (key == "k") spec.k = Rational::parse(value);
            else if (key == "p") spec.p = Rational::parse(value);
            else if (key == "seed") spec.seed = std::stoull(value);
            else throw InvalidParameters("unknown family parameter '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw InvalidParameters("malformed value '" + value + "' for parameter '" + key + "'");
        }
    }
    return spec;
}

namespace detail {

inline std::vector<std::string> numbered_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    return labels;
}

// Exact Bernoulli draw: true with probability p (a rational in [0,1]).
inline bool bernoulli(std::mt19937_64& rng, const Rational& p) {
    unsigned __int128 threshold =
        (static_cast<unsigned __int128>(p.numerator()) << 64) /
        static_cast<unsigned __int128>(p.denominator());
    return static_cast<unsigned __int128>(rng()) < threshold;
}

// Uniform labelled tree from a random Pruefer sequence.
inline std::vector<std::pair<int, int>> random_tree_edges(int n, std::uint64_t seed) {
    if (n == 1) return {};
    if (n == 2) return {{0, 1}};
    std::mt19937_64 rng(seed);
    std::vector<int> pruefer(n - 2);
    for (auto& x : pruefer) x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    std::vector<int> degree(n, 1);
    for (int x : pruefer) ++degree[x];
    std::vector<std::pair<int, int>> edges;
    std::vector<bool> used(n, false);
    for (int x : pruefer) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1 && !used[leaf]) {
                edges.emplace_back(leaf, x);
                used[leaf] = true;
                --degree[x];
                break;
            }
        }
    }
    int u = -1, v = -1;
    for (int i = 0; i < n; ++i)
        if (degree[i] == 1 && !used[i]) (u < 0 ? u : v) = i;
    edges.emplace_back(u, v);
    return edges;
}

}  // namespace detail

/// Builds the graph a FamilySpec describes. Random kinds are deterministic
/// functions of the seed. random_connected samples each possible edge with
/// probability p and retries until the result is connected (bounded
/// retries; the induced bias toward connected samples is accepted).
inline MetricGraph generate(const FamilySpec& spec) {
    using Spec = MetricGraph::WeightedEdgeSpec;
    if (!spec.k.is_positive()) throw InvalidParameters("edge length must be positive");
    auto labels = detail::numbered_labels(0);
    std::vector<Spec> edges;
    auto label = [](int i) { return "v" + std::to_string(i); };

    switch (spec.kind) {
        case FamilyKind::cycle: {
            if (spec.n < 3) throw InvalidParameters("cycle needs n >= 3");
            labels = detail::numbered_labels(spec.n);
            for (int i = 0; i < spec.n; ++i)
                edges.emplace_back(label(i), label((i + 1) % spec.n), spec.k);
            break;
        }
        case FamilyKind::path: {
            if (spec.n < 2) throw InvalidParameters("path needs n >= 2 vertices");
            labels = detail::numbered_labels(spec.n);
            for (int i = 0; i + 1 < spec.n; ++i) edges.emplace_back(label(i), label(i + 1), spec.k);
            break;
        }
        case FamilyKind::star: {
            if (spec.m < 1) throw InvalidParameters("star needs m >= 1 leaves");
            labels = detail::numbered_labels(spec.m + 1);
            for (int i = 1; i <= spec.m; ++i) edges.emplace_back(label(0), label(i), spec.k);
            break;
        }
        case FamilyKind::complete: {
            if (spec.n < 2) throw InvalidParameters("complete graph needs n >= 2");
            labels = detail::numbered_labels(spec.n);
            for (int i = 0; i < spec.n; ++i)
                for (int j = i + 1; j < spec.n; ++j) edges.emplace_back(label(i), label(j), spec.k);
            break;
        }
        case FamilyKind::complete_bipartite: {
            if (spec.a < 1 || spec.b < 1)
                throw InvalidParameters("complete bipartite graph needs a, b >= 1");
            labels = detail::numbered_labels(spec.a + spec.b);
            for (int i = 0; i < spec.a; ++i)
                for (int j = 0; j < spec.b; ++j)
                    edges.emplace_back(label(i), label(spec.a + j), spec.k);
            break;
        }
        case FamilyKind::random_tree: {
            if (spec.n < 1) throw InvalidParameters("random tree needs n >= 1");
            labels = detail::numbered_labels(spec.n);
            for (auto [u, v] : detail::random_tree_edges(spec.n, spec.seed))
                edges.emplace_back(label(u), label(v), spec.k);
            break;
        }
        case FamilyKind::random_connected: {
            if (spec.n < 2) throw InvalidParameters("random connected graph needs n >= 2");
            if (spec.p.is_negative() || spec.p > Rational(1) || spec.p.is_zero())
                throw InvalidParameters("edge probability must be in (0, 1]");
            labels = detail::numbered_labels(spec.n);
            std::mt19937_64 rng(spec.seed);
            for (int attempt = 0; attempt < 1000; ++attempt) {
                edges.clear();
                for (int i = 0; i < spec.n; ++i)
                    for (int j = i + 1; j < spec.n; ++j)
                        if (detail::bernoulli(rng, spec.p))
                            edges.emplace_back(label(i), label(j), spec.k);
                try {
                    return MetricGraph::build(labels, edges);
                } catch (const Disconnected&) {
                }
            }
            throw InvalidParameters("could not draw a connected graph for " + spec.str());
        }
        case FamilyKind::chorded_cycle: {
            if (spec.n < 5) throw InvalidParameters("chorded cycle needs n >= 5");
            labels = detail::numbered_labels(spec.n);
            for (int i = 0; i < spec.n; ++i)
                edges.emplace_back(label(i), label((i + 1) % spec.n), spec.k);
            edges.emplace_back(label(0), label(2), spec.k);  // chord two edges apart
            break;
        }
    }
    return MetricGraph::build(labels, edges);
}

/// Expected hyperbolicity constants for families that have them: cycles and
/// chorded cycles give nk/4 for both graphs, trees give 0, the 3-leaf star
/// has a triangle as its line graph. Kinds without a recorded value raise
/// NoKnownValue.
inline KnownDelta known_delta(const FamilySpec& spec) {
    KnownDelta out;
    out.family = spec;
    Rational nk4 = spec.k * Rational(spec.n) / Rational(4);
    switch (spec.kind) {
        case FamilyKind::cycle:
            out.delta_g = nk4;
            out.delta_line = nk4;
            out.provenance = "delta(C_n) = nk/4; equality holds for line graphs of cycles";
            return out;
        case FamilyKind::chorded_cycle:
            out.delta_g = nk4;
            out.delta_line = nk4;
            out.provenance = "chorded-cycle value nk/4, verified computationally by the harness";
            return out;
        case FamilyKind::path:
            out.delta_g = Rational(0);
            out.delta_line = Rational(0);
            out.provenance = "paths and their line graphs are trees";
            return out;
        case FamilyKind::random_tree:
            out.delta_g = Rational(0);
            out.provenance = "metric trees are 0-hyperbolic";
            return out;
        case FamilyKind::star:
            out.delta_g = Rational(0);
            if (spec.m <= 2)
                out.delta_line = Rational(0);
            else if (spec.m == 3)
                out.delta_line = Rational(3) * spec.k / Rational(4);
            out.provenance = spec.m == 3
                                 ? "stars are trees; L(K_{1,3}) is a triangle with delta 3k/4"
                                 : "stars are trees";
            return out;
        case FamilyKind::complete:
            if (spec.n == 2) {
                out.delta_g = Rational(0);
                out.provenance = "a single edge is a tree";
                return out;
            }
            if (spec.n == 3) {
                out.delta_g = Rational(3) * spec.k / Rational(4);
                out.delta_line = out.delta_g;
                out.provenance = "K_3 is a cycle of length 3k";
                return out;
            }
            if (spec.n == 4) {
                out.delta_g = spec.k;
                out.provenance = "sampling-oracle value for K_4";
                return out;
            }
            break;
        default: break;
    }
    throw NoKnownValue(spec.str());
}

}  // namespace hyperline
