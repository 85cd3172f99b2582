#pragma once

#include <functional>
#include <optional>

#include "diam/graph.hpp"

namespace diam::approx {

// Bracketing approximation: lower <= true diameter <= upper.
struct ApproxResult {
    double lower = 0.0;
    double upper = 0.0;
    double ratio() const { return lower == 0.0 ? 1.0 : upper / lower; }
};

// Triangle-inequality 2-approximation from one probe vertex (default 0).
// Throws InputError on disconnected input (the diameter is undefined).
ApproxResult two_approx(const Graph& g, std::optional<Vertex> probe = std::nullopt);

// Answer of a D'/D gap oracle queried at threshold D with ratio alpha:
// AtLeast when diameter >= alpha*D, AtMost when diameter <= D, anything in
// between is allowed (including Either).
enum class GapAnswer { AtLeastAlphaD, AtMostD, Either };

// Oracle over the alpha/1 promise problem: called on a re-weighted graph with
// threshold 1, per the weight-scaling reduction.
using GapOracle = std::function<GapAnswer(const Graph&, double threshold)>;

// Shrinks the two_approx bracket by querying the gap oracle on re-weighted
// graphs until upper/lower <= alpha + beta_acc. Throws InputError on an
// oracle contradiction (bracket inversion).
ApproxResult gap_binary_search(const Graph& g, const GapOracle& oracle, double alpha,
                               double beta_acc, int* query_count = nullptr);

// Truthful oracle backed by the exact-diameter oracle; the usual test double.
GapOracle exact_gap_oracle(double alpha);

} // namespace diam::approx
