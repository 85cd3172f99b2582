#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diam/graph.hpp"

namespace diam::hopsets {

// Weighted shortcut edges. Valid hopsets never shorten any shortest path
// (w >= d_G(u,v) for every shortcut); the constructions here emit exact
// distances, so equality holds.
struct Hopset {
    std::vector<Edge> shortcuts;
    int claimed_beta = 1;
    double claimed_epsilon = 0.0;

    // File format: "hopset <count> <beta> <epsilon>", then "<u> <v> <w>" lines.
    std::string to_text() const;
    static Hopset from_text(const std::string& text);
    static Hopset load(const std::string& path);
    void save(const std::string& path) const;
};

struct TruncatedDijkstra {
    std::vector<Vertex> visited; // ascending; distances exact on this set
    DistMap dist;                // kUnreachable outside `visited`
};

// Level schedule of the undirected construction: k = ceil(1/delta) levels,
// edge-visit budgets M_i = m^{(k+1-i)/k} (so M_1 = m and M_k = m^{1/k}), and
// per-level sample counts 4 m^{i/k} ln m capped at m.
struct HopsetParams {
    double delta = 0.5;
    double epsilon = 0.3;
    int k = 2;
    std::vector<int64_t> level_m;
    std::vector<int64_t> level_samples;

    static HopsetParams for_graph(const Graph& g, double delta, double epsilon);
};

// Dijkstra from v stopped once 2M edge scans have happened; the settled set
// and its exact distances. Full sssp when the budget is never reached.
TruncatedDijkstra truncated_dijkstra(const Graph& g, Vertex v, int64_t M);

// Hop bound the undirected construction is run against: the stitching count
// (k+1) * 2 * (eps/6)^(-k) with k = ceil(1/delta).
int exported_beta(double delta, double epsilon);

// Level-sampled shortcut construction for undirected graphs. Shortcut weights
// are exact distances, so distance preservation holds on every seed; the
// additive hop bound (exported_beta, epsilon) holds with constant probability
// over the seed.
Hopset build_undirected_hopset(const Graph& g, double delta, double epsilon, uint64_t seed);

// All-pairs shortcuts (u, v, d(u,v)): a (1, 0)-additive hopset. Fallback used
// to exercise the hopset-mode certifier on directed inputs.
Hopset exhaustive_hopset(const Graph& g, uint64_t size_budget = kDefaultSizeBudget);

// True iff adding the shortcuts leaves the full distance matrix unchanged.
bool verify_distance_preservation(const Graph& g, const Hopset& h);

using VertexPair = std::pair<Vertex, Vertex>;

// True iff every (tested) pair has a <=beta-edge path in g+h of weight at
// most d_G(u,v) + epsilon * diameter(g).
bool verify_additive_hopbound(const Graph& g, const Hopset& h, int beta, double epsilon);
bool verify_additive_hopbound(const Graph& g, const Hopset& h, int beta, double epsilon,
                              std::span<const VertexPair> pairs);

} // namespace diam::hopsets
