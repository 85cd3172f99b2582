#include "diam/gen.hpp"

#include "diam/rng.hpp"

namespace diam::gen {

namespace {

Weight pick_weight(Rng& rng, int w_lo, int w_hi) {
    if (w_lo < 1 || w_hi < w_lo) throw InputError("weight range must satisfy 1 <= w_lo <= w_hi");
    return static_cast<Weight>(rng.range(w_lo, w_hi));
}

} // namespace

Graph random_connected_undirected(int n, int extra_edges, int w_lo, int w_hi, uint64_t seed) {
    if (n < 1) throw InputError("need at least one vertex");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.push_back({static_cast<Vertex>(rng.below(v)), v, pick_weight(rng, w_lo, w_hi)});
    for (int i = 0; i < extra_edges && n >= 2; ++i) {
        Vertex u = static_cast<Vertex>(rng.below(n));
        Vertex v = static_cast<Vertex>(rng.below(n));
        if (u == v) continue;
        edges.push_back({u, v, pick_weight(rng, w_lo, w_hi)});
    }
    return Graph(false, n, std::move(edges));
}

Graph random_strongly_connected_digraph(int n, int extra_edges, int w_lo, int w_hi, uint64_t seed) {
    if (n < 1) throw InputError("need at least one vertex");
    Rng rng(seed);
    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v) perm[v] = v;
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(i + 1));
        std::swap(perm[i], perm[j]);
    }
    std::vector<Edge> edges;
    if (n >= 2)
        for (int i = 0; i < n; ++i)
            edges.push_back({perm[i], perm[(i + 1) % n], pick_weight(rng, w_lo, w_hi)});
    for (int i = 0; i < extra_edges && n >= 2; ++i) {
        Vertex u = static_cast<Vertex>(rng.below(n));
        Vertex v = static_cast<Vertex>(rng.below(n));
        if (u == v) continue;
        edges.push_back({u, v, pick_weight(rng, w_lo, w_hi)});
    }
    return Graph(true, n, std::move(edges));
}

} // namespace diam::gen
