#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperline/delta.hpp"
#include "hyperline/line_graph.hpp"

namespace hyperline {

/// One checked inequality lhs <= rhs, with its exact slack.
struct InequalityRecord {
    std::string name;
    std::string statement;
    Rational lhs;
    Rational rhs;
    Rational slack;  // rhs - lhs
    bool holds = false;
    bool applicable = true;
    std::string note;
    // Filled for bounds whose equality characterizes cycle graphs: whether
    // equality was observed and whether that agrees with the instance being
    // a cycle.
    std::optional<bool> equality_observed;
    std::optional<bool> characterization_ok;
};

struct InequalityReport {
    DeltaMode mode = DeltaMode::exact_uniform;
    Rational delta_g;
    Rational delta_line;
    bool line_degenerate = false;
    std::vector<InequalityRecord> records;

    bool all_hold() const {
        for (const auto& r : records)
            if (r.applicable && !r.holds) return false;
        return true;
    }
};

struct VerifyOptions {
    // exact requires uniform edge lengths (the line graph then inherits
    // them); lower_bound works for arbitrary lengths but only certifies the
    // reported values as lower bounds.
    DeltaMode mode = DeltaMode::exact_uniform;
    std::optional<Rational> extra_net;  // lower-bound net resolution
    std::optional<Rational> epsilon;    // sampling-oracle resolution
    DeltaOptions delta;
};

namespace detail {

inline Rational compute_delta(const MetricGraph& g, const VerifyOptions& opt) {
    switch (opt.mode) {
        case DeltaMode::exact_uniform: return delta_exact_uniform(g, opt.delta).value;
        case DeltaMode::lower_bound: return delta_lower_bound(g, opt.extra_net, opt.delta).value;
        case DeltaMode::sampled:
            return delta_sampling_oracle(g, opt.epsilon ? *opt.epsilon : g.max_edge_length() / Rational(4),
                                         opt.delta);
    }
    throw InvalidParameters("unknown delta mode");
}

}  // namespace detail

/// Evaluates every inequality relating the hyperbolicity constants of G and
/// of its line graph, with exact slacks. Bounds that need a uniform edge
/// length are marked not-applicable on other inputs; the historical
/// unit-length bounds are reported for comparison when the length is 1.
inline InequalityReport verify_line_graph_inequalities(const MetricGraph& g,
                                                       const VerifyOptions& opt = {}) {
    InequalityReport rep;
    rep.mode = opt.mode;
    if (opt.mode == DeltaMode::exact_uniform && !g.uniform_length()) throw NonUniformLengths();
    rep.delta_g = detail::compute_delta(g, opt);
    if (g.edge_count() <= 1) {
        // Degenerate line graph (a single vertex); its constant is 0.
        rep.line_degenerate = true;
        rep.delta_line = 0;
    } else {
        LineGraphCorrespondence corr = build_line_graph(g);
        rep.delta_line = detail::compute_delta(corr.line, opt);
    }

    Rational lmax = g.max_edge_length();
    std::optional<Rational> k = g.uniform_length();
    bool cycle = g.is_cycle_graph();
    Rational n(g.vertex_count());
    Rational m(g.edge_count());
    Rational dmax(g.max_degree());
    Rational sumdeg2(g.degree_square_sum());

    auto push = [&](const std::string& name, const std::string& stmt, const Rational& lhs,
                    const Rational& rhs, bool applicable, const std::string& note,
                    std::optional<bool> iff_cycle) {
        InequalityRecord r;
        r.name = name;
        r.statement = stmt;
        r.lhs = lhs;
        r.rhs = rhs;
        r.slack = rhs - lhs;
        r.holds = !applicable || lhs <= rhs;
        r.applicable = applicable;
        r.note = note;
        if (applicable && iff_cycle) {
            r.equality_observed = (r.slack == Rational(0));
            if (*iff_cycle)
                r.characterization_ok = (*r.equality_observed == cycle);
            else  // cycles are sufficient for equality, not necessary
                r.characterization_ok = (!cycle || *r.equality_observed);
        }
        rep.records.push_back(std::move(r));
    };

    push("lower", "delta(G) <= delta(L(G))", rep.delta_g, rep.delta_line, true,
         "equality on every cycle graph", false);
    push("upper_3lmax", "delta(L(G)) <= 5 delta(G) + 3 lmax", rep.delta_line,
         Rational(5) * rep.delta_g + Rational(3) * lmax, true, "", std::nullopt);
    push("upper_5k2", "delta(L(G)) <= 5 delta(G) + 5k/2", rep.delta_line,
         k ? Rational(5) * rep.delta_g + Rational(5) * *k / Rational(2) : Rational(0),
         static_cast<bool>(k), k ? "" : "not applicable: non-uniform lengths", std::nullopt);
    push("km4", "delta(G) <= k m / 4", rep.delta_g,
         k ? *k * m / Rational(4) : Rational(0), static_cast<bool>(k),
         k ? "" : "not applicable: non-uniform lengths", true);
    push("degree_nk", "delta(L(G)) <= n k Dmax (Dmax - 1) / 8", rep.delta_line,
         k ? n * *k * dmax * (dmax - Rational(1)) / Rational(8) : Rational(0),
         static_cast<bool>(k), k ? "" : "not applicable: non-uniform lengths", true);
    push("degree_sum", "delta(L(G)) + delta(G) <= (k/8) sum deg^2",
         rep.delta_line + rep.delta_g, k ? *k / Rational(8) * sumdeg2 : Rational(0),
         static_cast<bool>(k), k ? "" : "not applicable: non-uniform lengths", true);

    bool unit = k && *k == Rational(1);
    push("prior_upper", "delta(L(G)) <= 12 delta(G) + 18 (earlier unit-length bound)",
         rep.delta_line, unit ? Rational(12) * rep.delta_g + Rational(18) : Rational(0), unit,
         unit ? "for comparison" : "not applicable: needs unit lengths", std::nullopt);
    push("prior_lower", "delta(G)/12 - 3/4 <= delta(L(G)) (earlier unit-length bound)",
         unit ? rep.delta_g / Rational(12) - Rational(3, 4) : Rational(0), rep.delta_line, unit,
         unit ? "for comparison" : "not applicable: needs unit lengths", std::nullopt);

    return rep;
}

}  // namespace hyperline
