#include "diam/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <queue>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace diam {

Graph::Graph(bool directed, int n, std::vector<Edge> edges)
    : directed_(directed), n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw InputError("negative vertex count");
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw InputError("edge endpoint out of range");
        if (!(e.w > 0.0) || !std::isfinite(e.w))
            throw InputError("edge weights must be positive finite reals");
    }
    if (!edges_.empty()) {
        w_min_ = kUnreachable;
        w_max_ = 0.0;
        for (const Edge& e : edges_) {
            w_min_ = std::min(w_min_, e.w);
            w_max_ = std::max(w_max_, e.w);
        }
        uniform_ = (w_min_ == w_max_);
    }

    // CSR adjacency, arcs sorted by destination for O(log deg) lookups.
    auto build = [&](bool incoming, std::vector<int32_t>& head, std::vector<Arc>& arcs) {
        head.assign(n_ + 1, 0);
        arcs.clear();
        std::vector<int32_t> deg(n_, 0);
        for (const Edge& e : edges_) {
            deg[incoming ? e.v : e.u]++;
            if (!directed_) deg[incoming ? e.u : e.v]++;
        }
        for (int v = 0; v < n_; ++v) head[v + 1] = head[v] + deg[v];
        arcs.resize(head[n_]);
        std::vector<int32_t> fill(head.begin(), head.end() - 1);
        for (int32_t i = 0; i < static_cast<int32_t>(edges_.size()); ++i) {
            const Edge& e = edges_[i];
            Vertex from = incoming ? e.v : e.u;
            Vertex to = incoming ? e.u : e.v;
            arcs[fill[from]++] = Arc{to, e.w, i};
            if (!directed_) arcs[fill[to]++] = Arc{from, e.w, i};
        }
        for (int v = 0; v < n_; ++v) {
            std::sort(arcs.begin() + head[v], arcs.begin() + head[v + 1],
                      [](const Arc& a, const Arc& b) {
                          return a.to != b.to ? a.to < b.to : a.edge < b.edge;
                      });
        }
    };
    build(false, out_head_, out_arcs_);
    if (directed_) build(true, in_head_, in_arcs_);
}

Weight Graph::arc_weight(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    auto span = out_arcs(u);
    auto it = std::lower_bound(span.begin(), span.end(), v,
                               [](const Arc& a, Vertex x) { return a.to < x; });
    Weight best = kUnreachable;
    for (; it != span.end() && it->to == v; ++it) best = std::min(best, it->w);
    return best;
}

Graph Graph::with_extra_edges(std::vector<Edge> extra) const {
    std::vector<Edge> all = edges_;
    all.insert(all.end(), extra.begin(), extra.end());
    return Graph(directed_, n_, std::move(all));
}

Graph Graph::with_scaled_weights(double factor) const {
    if (!(factor > 0.0)) throw InputError("scale factor must be positive");
    std::vector<Edge> scaled = edges_;
    for (Edge& e : scaled) e.w *= factor;
    return Graph(directed_, n_, std::move(scaled));
}

bool Graph::operator==(const Graph& o) const {
    if (directed_ != o.directed_ || n_ != o.n_ || edges_.size() != o.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].u != o.edges_[i].u || edges_[i].v != o.edges_[i].v ||
            edges_[i].w != o.edges_[i].w)
            return false;
    }
    return true;
}

namespace {

void format_weight(std::string& out, Weight w) {
    double ip;
    if (std::modf(w, &ip) == 0.0 && std::abs(w) < 9.007199254740992e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(w));
        out += buf;
    } else {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", w);
        out += buf;
    }
}

} // namespace

std::string Graph::to_text() const {
    std::string out = directed_ ? "directed " : "undirected ";
    out += std::to_string(n_) + " " + std::to_string(edges_.size()) + "\n";
    for (const Edge& e : edges_) {
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " ";
        format_weight(out, e.w);
        out += "\n";
    }
    return out;
}

Graph Graph::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string kind;
    long long n = -1, m = -1;
    if (!(in >> kind >> n >> m)) throw InputError("graph header: expected 'directed|undirected <n> <m>'");
    bool directed;
    if (kind == "directed") directed = true;
    else if (kind == "undirected") directed = false;
    else throw InputError("graph header: unknown kind '" + kind + "'");
    if (n < 0 || m < 0) throw InputError("graph header: negative counts");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        double w;
        if (!(in >> u >> v >> w)) throw InputError("graph body: truncated edge list");
        edges.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v), w});
    }
    return Graph(directed, static_cast<int>(n), std::move(edges));
}

Graph Graph::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open graph file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return from_text(ss.str());
}

void Graph::save(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write graph file: " + path);
    f << to_text();
}

// ---------------------------------------------------------------------------
// Shortest paths
// ---------------------------------------------------------------------------

namespace {

// Scratch shared across sources so per-vertex scans do not reallocate.
struct SsspScratch {
    DistMap dist;
    std::vector<Vertex> queue; // BFS
    explicit SsspScratch(int n) : dist(n), queue() { queue.reserve(n); }
};

// Runs BFS/Dijkstra from `sources` in the given direction into scratch.dist.
// Returns the number of reached vertices.
int run_sssp(const Graph& g, std::span<const Vertex> sources, Direction dir, SsspScratch& s) {
    const int n = g.vertex_count();
    s.dist.assign(n, kUnreachable);
    int reached = 0;
    if (g.uniform_weights()) {
        const Weight w = g.edge_count() > 0 ? g.w_min() : 1.0;
        s.queue.clear();
        for (Vertex src : sources) {
            if (s.dist[src] == kUnreachable) {
                s.dist[src] = 0.0;
                s.queue.push_back(src);
                ++reached;
            }
        }
        for (size_t head = 0; head < s.queue.size(); ++head) {
            Vertex u = s.queue[head];
            Weight du = s.dist[u];
            for (const Graph::Arc& a : g.arcs(u, dir)) {
                if (s.dist[a.to] == kUnreachable) {
                    s.dist[a.to] = du + w;
                    s.queue.push_back(a.to);
                    ++reached;
                }
            }
        }
        return reached;
    }
    using Item = std::pair<Weight, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    for (Vertex src : sources) {
        if (s.dist[src] != 0.0) {
            s.dist[src] = 0.0;
            pq.push({0.0, src});
        }
    }
    while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (du > s.dist[u]) continue;
        ++reached;
        for (const Graph::Arc& a : g.arcs(u, dir)) {
            Weight nd = du + a.w;
            if (nd < s.dist[a.to]) {
                s.dist[a.to] = nd;
                pq.push({nd, a.to});
            }
        }
    }
    return reached;
}

Weight ecc_from_scratch(const Graph& g, Vertex v, Direction dir, SsspScratch& s) {
    const Vertex src[1] = {v};
    int reached = run_sssp(g, src, dir, s);
    if (reached < g.vertex_count()) return kUnreachable;
    Weight m = 0.0;
    for (Weight d : s.dist) m = std::max(m, d);
    return m;
}

} // namespace

DistMap sssp(const Graph& g, Vertex source, Direction dir) {
    g.check_vertex(source);
    SsspScratch s(g.vertex_count());
    const Vertex src[1] = {source};
    run_sssp(g, src, dir, s);
    return std::move(s.dist);
}

DistMap multi_source_sssp(const Graph& g, std::span<const Vertex> sources, Direction dir) {
    if (sources.empty()) throw InputError("multi_source_sssp: empty source set");
    for (Vertex v : sources) g.check_vertex(v);
    SsspScratch s(g.vertex_count());
    run_sssp(g, sources, dir, s);
    return std::move(s.dist);
}

Weight eccentricity(const Graph& g, Vertex v, Direction dir) {
    g.check_vertex(v);
    SsspScratch s(g.vertex_count());
    return ecc_from_scratch(g, v, dir, s);
}

std::vector<Weight> all_eccentricities_serial(const Graph& g, Direction dir) {
    const int n = g.vertex_count();
    std::vector<Weight> ecc(n);
    SsspScratch s(n);
    for (Vertex v = 0; v < n; ++v) ecc[v] = ecc_from_scratch(g, v, dir, s);
    return ecc;
}

std::vector<Weight> all_eccentricities(const Graph& g, Direction dir) {
    const int n = g.vertex_count();
    std::vector<Weight> ecc(n);
#pragma omp parallel
    {
        SsspScratch s(n);
#pragma omp for schedule(dynamic, 8)
        for (Vertex v = 0; v < n; ++v) ecc[v] = ecc_from_scratch(g, v, dir, s);
    }
    return ecc;
}

namespace {

Weight diameter_from_eccs(const std::vector<Weight>& ecc) {
    Weight d = 0.0;
    for (Weight e : ecc) {
        if (e == kUnreachable) return kUnreachable;
        d = std::max(d, e);
    }
    return d;
}

} // namespace

Weight exact_diameter(const Graph& g) {
    if (g.vertex_count() < 1) throw InputError("exact_diameter: empty graph");
    return diameter_from_eccs(all_eccentricities(g, Direction::Out));
}

Weight exact_diameter_serial(const Graph& g) {
    if (g.vertex_count() < 1) throw InputError("exact_diameter: empty graph");
    return diameter_from_eccs(all_eccentricities_serial(g, Direction::Out));
}

std::vector<Vertex> ball(const Graph& g, Vertex v, Weight r, Direction dir) {
    if (!(r >= 0.0)) throw InputError("ball: radius must be >= 0");
    DistMap d = sssp(g, v, dir);
    std::vector<Vertex> out;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        if (d[u] <= r) out.push_back(u);
    return out;
}

std::vector<int32_t> ball_edges(const Graph& g, Vertex v, Weight r, Direction dir) {
    if (!(r >= 0.0)) throw InputError("ball_edges: radius must be >= 0");
    DistMap d = sssp(g, v, dir);
    std::vector<int32_t> out;
    const auto& edges = g.edges();
    for (int32_t i = 0; i < static_cast<int32_t>(edges.size()); ++i) {
        const Edge& e = edges[i];
        bool in_set;
        if (!g.directed())
            in_set = d[e.u] <= r || d[e.v] <= r;
        else if (dir == Direction::Out)
            in_set = d[e.u] <= r;
        else
            in_set = d[e.v] <= r;
        if (in_set) out.push_back(i);
    }
    return out;
}

DistMap hop_limited_map(const Graph& g, Vertex source, int beta, Direction dir) {
    g.check_vertex(source);
    if (beta < 1) throw InputError("hop_limited_map: beta must be >= 1");
    const int n = g.vertex_count();
    DistMap cur(n, kUnreachable), next(n);
    cur[source] = 0.0;
    // A minimum-weight walk never repeats a vertex (weights are positive), so
    // n-1 rounds already reach the unconstrained optimum.
    int rounds = std::min(beta, n - 1);
    for (int round = 0; round < rounds; ++round) {
        next = cur;
        bool changed = false;
        for (Vertex u = 0; u < n; ++u) {
            if (cur[u] == kUnreachable) continue;
            for (const Graph::Arc& a : g.arcs(u, dir)) {
                Weight nd = cur[u] + a.w;
                if (nd < next[a.to]) {
                    next[a.to] = nd;
                    changed = true;
                }
            }
        }
        cur.swap(next);
        if (!changed) break;
    }
    return cur;
}

Weight hop_limited_distance(const Graph& g, Vertex u, Vertex v, int beta) {
    g.check_vertex(v);
    return hop_limited_map(g, u, beta, Direction::Out)[v];
}

std::vector<DistMap> apsp(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<DistMap> rows(n);
#pragma omp parallel
    {
        SsspScratch s(n);
#pragma omp for schedule(dynamic, 8)
        for (Vertex v = 0; v < n; ++v) {
            const Vertex src[1] = {v};
            run_sssp(g, src, Direction::Out, s);
            rows[v] = s.dist;
        }
    }
    return rows;
}

std::vector<Vertex> extract_path(const Graph& g, const DistMap& dist, Vertex source, Vertex target) {
    g.check_vertex(source);
    g.check_vertex(target);
    if (dist[target] == kUnreachable) return {};
    std::vector<Vertex> rev;
    Vertex cur = target;
    rev.push_back(cur);
    while (cur != source) {
        Vertex prev = -1;
        for (const Graph::Arc& a : g.arcs(cur, Direction::In)) {
            if (dist[a.to] != kUnreachable && dist[a.to] + a.w == dist[cur]) {
                prev = a.to;
                break;
            }
        }
        if (prev < 0) return {}; // dist is not a valid Out-tree for this source
        cur = prev;
        rev.push_back(cur);
    }
    return {rev.rbegin(), rev.rend()};
}

Weight path_weight(const Graph& g, std::span<const Vertex> path) {
    if (path.empty()) return kUnreachable;
    Weight total = 0.0;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        Weight w = g.arc_weight(path[i], path[i + 1]);
        if (w == kUnreachable) return kUnreachable;
        total += w;
    }
    return total;
}

} // namespace diam
