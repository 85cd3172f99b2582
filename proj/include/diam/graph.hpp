#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "diam/errors.hpp"

namespace diam {

using Vertex = int32_t;
using Weight = double;

// Default guard for constructions whose output size is data-dependent
// (gadgets, exhaustive hopsets): vertices + edges.
inline constexpr uint64_t kDefaultSizeBudget = 2'000'000;

// Unreachable pairs carry IEEE +infinity. It is not producible as a sum of
// positive finite edge weights, and sums/comparisons propagate it, so it acts
// as a true out-of-band sentinel rather than an in-band large number.
inline constexpr Weight kUnreachable = std::numeric_limits<Weight>::infinity();

inline bool is_reachable(Weight d) { return d < kUnreachable; }

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    Weight w = 1.0;
};

// Out = distances from a source, In = distances to a target. On undirected
// graphs the two coincide.
enum class Direction { Out, In };

inline Direction flipped(Direction d) {
    return d == Direction::Out ? Direction::In : Direction::Out;
}

inline const char* to_string(Direction d) { return d == Direction::Out ? "out" : "in"; }

// dist[v] for every vertex; kUnreachable where no path exists.
using DistMap = std::vector<Weight>;

// Immutable weighted graph with positive edge weights. Undirected graphs
// store each edge once; adjacency treats it as bidirectional. Construction
// validates ids and weights and caches w_min/w_max.
class Graph {
  public:
    struct Arc {
        Vertex to;
        Weight w;
        int32_t edge; // index into edges()
    };

    Graph() : Graph(false, 0, {}) {}
    Graph(bool directed, int n, std::vector<Edge> edges);

    bool directed() const { return directed_; }
    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    // 1.0 on edgeless graphs.
    Weight w_min() const { return w_min_; }
    Weight w_max() const { return w_max_; }
    // True when every edge has the same weight; enables the BFS fast path.
    bool uniform_weights() const { return uniform_; }

    std::span<const Arc> out_arcs(Vertex v) const {
        return {out_arcs_.data() + out_head_[v], out_arcs_.data() + out_head_[v + 1]};
    }
    std::span<const Arc> in_arcs(Vertex v) const {
        if (!directed_) return out_arcs(v);
        return {in_arcs_.data() + in_head_[v], in_arcs_.data() + in_head_[v + 1]};
    }
    std::span<const Arc> arcs(Vertex v, Direction dir) const {
        return dir == Direction::Out ? out_arcs(v) : in_arcs(v);
    }

    // Minimum weight among u->v edges (u-v on undirected); kUnreachable if none.
    Weight arc_weight(Vertex u, Vertex v) const;

    Graph with_extra_edges(std::vector<Edge> extra) const;
    Graph with_scaled_weights(double factor) const;

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_) throw InputError("vertex id out of range: " + std::to_string(v));
    }

    bool operator==(const Graph& o) const;

    // Text format: header "directed|undirected <n> <m>", then m lines "<u> <v> <w>".
    std::string to_text() const;
    static Graph from_text(const std::string& text);
    static Graph load(const std::string& path);
    void save(const std::string& path) const;

  private:
    bool directed_;
    int n_;
    std::vector<Edge> edges_;
    std::vector<int32_t> out_head_, in_head_;
    std::vector<Arc> out_arcs_, in_arcs_;
    Weight w_min_ = 1.0, w_max_ = 1.0;
    bool uniform_ = true;
};

// Exact single-source shortest paths (Dijkstra; BFS when weights are uniform).
DistMap sssp(const Graph& g, Vertex source, Direction dir = Direction::Out);

// Elementwise min over sources: d(X,v) for Out, d(v,X) for In.
DistMap multi_source_sssp(const Graph& g, std::span<const Vertex> sources, Direction dir);

// Max directional distance over all vertices; kUnreachable if some vertex is
// not reachable in the requested direction.
Weight eccentricity(const Graph& g, Vertex v, Direction dir);

// Per-vertex eccentricities. The default version parallelizes over sources
// (results are deterministic); the serial version is the reference kept for
// testing and benchmarking.
std::vector<Weight> all_eccentricities(const Graph& g, Direction dir);
std::vector<Weight> all_eccentricities_serial(const Graph& g, Direction dir);

// Exact-diameter oracle: max over ordered pairs of d(u,v); kUnreachable when
// the graph is not (strongly) connected.
Weight exact_diameter(const Graph& g);
Weight exact_diameter_serial(const Graph& g);

// Vertices at directional distance <= r from/to v, ascending ids.
std::vector<Vertex> ball(const Graph& g, Vertex v, Weight r, Direction dir);

// Edge indices: Out = tail in the out-ball, In = head in the in-ball,
// undirected = incident to the ball. Ascending.
std::vector<int32_t> ball_edges(const Graph& g, Vertex v, Weight r, Direction dir);

// Minimum weight over paths with at most `beta` edges (beta rounds of
// simultaneous relaxation); kUnreachable if no such path.
Weight hop_limited_distance(const Graph& g, Vertex u, Vertex v, int beta);

// Full map version. dist[x] = min weight over <=beta-edge paths source->x
// (Out) or x->source (In).
DistMap hop_limited_map(const Graph& g, Vertex source, int beta, Direction dir = Direction::Out);

// All-pairs distances, row u = sssp(g, u, Out). Parallel over rows.
std::vector<DistMap> apsp(const Graph& g);

// Shortest-path tree walk: the actual path source->target (Out trees) implied
// by `dist` = sssp(g, source, Out). Empty when target is unreachable.
std::vector<Vertex> extract_path(const Graph& g, const DistMap& dist, Vertex source, Vertex target);

Weight path_weight(const Graph& g, std::span<const Vertex> path);

} // namespace diam
