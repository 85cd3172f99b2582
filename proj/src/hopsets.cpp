#include "diam/hopsets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <queue>
#include <sstream>

#include "diam/rng.hpp"

namespace diam::hopsets {

std::string Hopset::to_text() const {
    char head[96];
    std::snprintf(head, sizeof(head), "hopset %zu %d %.17g\n", shortcuts.size(), claimed_beta,
                  claimed_epsilon);
    std::string out = head;
    for (const Edge& e : shortcuts) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%d %d %.17g\n", e.u, e.v, e.w);
        out += buf;
    }
    return out;
}

Hopset Hopset::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    size_t count = 0;
    Hopset h;
    if (!(in >> tag >> count >> h.claimed_beta >> h.claimed_epsilon) || tag != "hopset")
        throw InputError("hopset header: expected 'hopset <count> <beta> <epsilon>'");
    h.shortcuts.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        Edge e;
        if (!(in >> e.u >> e.v >> e.w)) throw InputError("hopset body: truncated shortcut list");
        h.shortcuts.push_back(e);
    }
    return h;
}

Hopset Hopset::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open hopset file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return from_text(ss.str());
}

void Hopset::save(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write hopset file: " + path);
    f << to_text();
}

TruncatedDijkstra truncated_dijkstra(const Graph& g, Vertex v, int64_t M) {
    if (g.directed()) throw InputError("truncated_dijkstra: graph must be undirected");
    if (M < 1) throw InputError("truncated_dijkstra: M must be >= 1");
    g.check_vertex(v);

    const int n = g.vertex_count();
    TruncatedDijkstra out;
    out.dist.assign(n, kUnreachable);
    std::vector<char> settled(n, 0);
    using Item = std::pair<Weight, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    out.dist[v] = 0.0;
    pq.push({0.0, v});
    int64_t scans = 0;
    const int64_t scan_budget = 2 * M;
    while (!pq.empty() && scans < scan_budget) {
        auto [du, u] = pq.top();
        pq.pop();
        if (settled[u]) continue;
        settled[u] = 1;
        out.visited.push_back(u);
        for (const Graph::Arc& a : g.out_arcs(u)) {
            ++scans;
            Weight nd = du + a.w;
            if (nd < out.dist[a.to]) {
                out.dist[a.to] = nd;
                pq.push({nd, a.to});
            }
        }
    }
    // Tentative labels outside the settled set are not exact; drop them.
    for (int u = 0; u < n; ++u)
        if (!settled[u]) out.dist[u] = kUnreachable;
    std::sort(out.visited.begin(), out.visited.end());
    return out;
}

int exported_beta(double delta, double epsilon) {
    if (!(delta > 0.0 && delta < 1.0)) throw InputError("hopset delta must be in (0,1)");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("hopset epsilon must be in (0,1)");
    const int k = static_cast<int>(std::ceil(1.0 / delta));
    double b = (k + 1) * 2.0 * std::pow(6.0 / epsilon, k);
    b = std::min(b, 1e9);
    return std::max(1, static_cast<int>(std::ceil(b)));
}

HopsetParams HopsetParams::for_graph(const Graph& g, double delta, double epsilon) {
    if (!(delta > 0.0 && delta < 1.0)) throw InputError("hopset delta must be in (0,1)");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("hopset epsilon must be in (0,1)");
    HopsetParams p;
    p.delta = delta;
    p.epsilon = epsilon;
    p.k = static_cast<int>(std::ceil(1.0 / delta));
    const double m = g.edge_count();
    const double logm = std::log(std::max(m, 2.0));
    for (int i = 1; i <= p.k; ++i) {
        p.level_m.push_back(static_cast<int64_t>(std::ceil(std::pow(m, double(p.k + 1 - i) / p.k))));
        double want = 4.0 * std::pow(m, static_cast<double>(i) / p.k) * logm;
        p.level_samples.push_back(
            std::min<int64_t>(g.edge_count(), static_cast<int64_t>(std::ceil(want))));
    }
    return p;
}

Hopset build_undirected_hopset(const Graph& g, double delta, double epsilon, uint64_t seed) {
    if (g.directed()) throw InputError("build_undirected_hopset: graph must be undirected");
    Hopset h;
    h.claimed_beta = exported_beta(delta, epsilon);
    h.claimed_epsilon = epsilon;
    const int64_t m = g.edge_count();
    if (m == 0) return h;

    const HopsetParams params = HopsetParams::for_graph(g, delta, epsilon);
    Rng rng(seed);
    for (int i = 1; i <= params.k; ++i) {
        // S_i: vertices incident to the level's sampled edges.
        int64_t cnt = params.level_samples[i - 1];
        std::vector<char> incident(g.vertex_count(), 0);
        for (int64_t s = 0; s < cnt; ++s) {
            const Edge& e = g.edges()[rng.below(static_cast<uint64_t>(m))];
            incident[e.u] = incident[e.v] = 1;
        }
        std::vector<Vertex> si;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (incident[v]) si.push_back(v);

        const int64_t level_m = params.level_m[i - 1];
        std::vector<std::vector<Edge>> per_source(si.size());
#pragma omp parallel for schedule(dynamic, 4)
        for (size_t s = 0; s < si.size(); ++s) {
            TruncatedDijkstra td = truncated_dijkstra(g, si[s], level_m);
            for (Vertex u : td.visited) {
                if (u == si[s]) continue;
                Vertex a = std::min(si[s], u), b = std::max(si[s], u);
                per_source[s].push_back({a, b, td.dist[u]});
            }
        }
        for (auto& list : per_source)
            h.shortcuts.insert(h.shortcuts.end(), list.begin(), list.end());
    }

    // One copy per unordered pair; weights agree because they are exact
    // distances. Sorted for reproducibility regardless of parallel schedule.
    std::sort(h.shortcuts.begin(), h.shortcuts.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    h.shortcuts.erase(std::unique(h.shortcuts.begin(), h.shortcuts.end(),
                                  [](const Edge& a, const Edge& b) {
                                      return a.u == b.u && a.v == b.v;
                                  }),
                      h.shortcuts.end());
    return h;
}

Hopset exhaustive_hopset(const Graph& g, uint64_t size_budget) {
    const int n = g.vertex_count();
    if (static_cast<uint64_t>(n) * n > size_budget)
        throw SizeBudgetError("exhaustive hopset would exceed size budget");
    Hopset h;
    h.claimed_beta = 1;
    h.claimed_epsilon = 0.0;
    auto rows = apsp(g);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u == v || rows[u][v] == kUnreachable) continue;
            if (!g.directed() && u > v) continue; // unordered pairs once
            h.shortcuts.push_back({u, v, rows[u][v]});
        }
    }
    return h;
}

bool verify_distance_preservation(const Graph& g, const Hopset& h) {
    Graph g2 = g.with_extra_edges(h.shortcuts);
    auto a = apsp(g);
    auto b = apsp(g2);
    return a == b;
}

namespace {

bool hopbound_from_source(const Graph& g, const Graph& g2, Vertex u, int beta, double allowance,
                          std::span<const Vertex> targets) {
    DistMap base = sssp(g, u, Direction::Out);
    DistMap hop = hop_limited_map(g2, u, beta, Direction::Out);
    for (Vertex v : targets) {
        if (base[v] == kUnreachable) continue; // no bound demanded for unreachable pairs
        if (!(hop[v] <= base[v] + allowance)) return false;
    }
    return true;
}

} // namespace

bool verify_additive_hopbound(const Graph& g, const Hopset& h, int beta, double epsilon) {
    Weight diam = exact_diameter(g);
    if (diam == kUnreachable) return true; // epsilon * D allowance is unbounded
    Graph g2 = g.with_extra_edges(h.shortcuts);
    const int n = g.vertex_count();
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    bool ok = true;
#pragma omp parallel for schedule(dynamic, 4)
    for (Vertex u = 0; u < n; ++u) {
        if (!ok) continue;
        if (!hopbound_from_source(g, g2, u, beta, epsilon * diam, all))
            ok = false;
    }
    return ok;
}

bool verify_additive_hopbound(const Graph& g, const Hopset& h, int beta, double epsilon,
                              std::span<const VertexPair> pairs) {
    Weight diam = exact_diameter(g);
    if (diam == kUnreachable) return true;
    Graph g2 = g.with_extra_edges(h.shortcuts);
    // Group by source so each hop-limited sweep is reused.
    std::vector<VertexPair> sorted(pairs.begin(), pairs.end());
    std::sort(sorted.begin(), sorted.end());
    size_t i = 0;
    while (i < sorted.size()) {
        size_t j = i;
        std::vector<Vertex> targets;
        while (j < sorted.size() && sorted[j].first == sorted[i].first)
            targets.push_back(sorted[j++].second);
        if (!hopbound_from_source(g, g2, sorted[i].first, beta, epsilon * diam, targets))
            return false;
        i = j;
    }
    return true;
}

} // namespace diam::hopsets
