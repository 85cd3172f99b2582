#include "diam/approx.hpp"

#include <algorithm>
#include <cmath>

namespace diam::approx {

ApproxResult two_approx(const Graph& g, std::optional<Vertex> probe) {
    if (g.vertex_count() < 1) throw InputError("two_approx: empty graph");
    Vertex v = probe.value_or(0);
    g.check_vertex(v);
    Weight out = eccentricity(g, v, Direction::Out);
    Weight in = eccentricity(g, v, Direction::In);
    if (out == kUnreachable || in == kUnreachable)
        throw InputError("two_approx: graph is not (strongly) connected, diameter undefined");
    ApproxResult res;
    res.lower = std::max(out, in);
    res.upper = 2.0 * res.lower;
    return res;
}

ApproxResult gap_binary_search(const Graph& g, const GapOracle& oracle, double alpha,
                               double beta_acc, int* query_count) {
    if (!(alpha >= 1.0)) throw InputError("gap_binary_search: alpha must be >= 1");
    if (!(beta_acc > 0.0)) throw InputError("gap_binary_search: beta_acc must be positive");
    ApproxResult bracket = two_approx(g);
    if (query_count) *query_count = 0;
    if (bracket.lower == 0.0) return bracket; // single vertex, diameter 0 exactly

    const double target = alpha + beta_acc;
    while (bracket.upper / bracket.lower > target) {
        // Geometric pivot so both oracle outcomes shrink the ratio equally.
        const double q = std::sqrt(bracket.lower * bracket.upper / alpha);
        if (query_count) ++(*query_count);
        // The alpha*q/q query is posed as an alpha/1 query on the re-weighted graph.
        GapAnswer ans = oracle(g.with_scaled_weights(1.0 / q), 1.0);
        switch (ans) {
            case GapAnswer::AtLeastAlphaD:
                bracket.lower = std::max(bracket.lower, q);
                break;
            case GapAnswer::AtMostD:
                bracket.upper = std::min(bracket.upper, alpha * q);
                break;
            case GapAnswer::Either:
                bracket.lower = std::max(bracket.lower, q);
                bracket.upper = std::min(bracket.upper, alpha * q);
                break;
        }
        if (bracket.lower > bracket.upper)
            throw InputError("gap_binary_search: oracle contradiction, bracket inverted");
        if (ans == GapAnswer::Either) break; // diameter pinned inside (q, alpha q)
    }
    return bracket;
}

GapOracle exact_gap_oracle(double alpha) {
    return [alpha](const Graph& g, double threshold) {
        Weight d = exact_diameter(g);
        if (d >= alpha * threshold) return GapAnswer::AtLeastAlphaD;
        if (d <= threshold) return GapAnswer::AtMostD;
        return GapAnswer::Either;
    };
}

} // namespace diam::approx
