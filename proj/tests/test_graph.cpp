#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "diam/graph.hpp"
#include "diam/rng.hpp"

using namespace diam;

namespace {

Graph path3() {
    return Graph(false, 3, {{0, 1, 1.0}, {1, 2, 1.0}});
}

Graph random_digraph(int n, double edge_prob, bool weighted, uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            if (rng.bernoulli(edge_prob)) {
                Weight w = weighted ? static_cast<Weight>(rng.range(1, 10)) : 1.0;
                edges.push_back({u, v, w});
            }
        }
    return Graph(true, n, std::move(edges));
}

// Independent oracle: n rounds of edge relaxation (Bellman-Ford), never the
// Dijkstra/BFS code path under test.
DistMap bellman_ford_oracle(const Graph& g, Vertex source, Direction dir) {
    const int n = g.vertex_count();
    DistMap dist(n, kUnreachable);
    dist[source] = 0.0;
    for (int round = 0; round < n; ++round) {
        for (const Edge& e : g.edges()) {
            auto relax = [&](Vertex a, Vertex b) {
                if (dist[a] != kUnreachable && dist[a] + e.w < dist[b]) dist[b] = dist[a] + e.w;
            };
            if (!g.directed()) {
                relax(e.u, e.v);
                relax(e.v, e.u);
            } else if (dir == Direction::Out) {
                relax(e.u, e.v);
            } else {
                relax(e.v, e.u);
            }
        }
    }
    return dist;
}

} // namespace

TEST_CASE("sssp on a unit path") {
    Graph g = path3();
    DistMap d = sssp(g, 0, Direction::Out);
    CHECK(d[0] == 0.0);
    CHECK(d[1] == 1.0);
    CHECK(d[2] == 2.0);
}

TEST_CASE("sssp on a single vertex") {
    Graph g(true, 1, {});
    DistMap d = sssp(g, 0, Direction::Out);
    REQUIRE(d.size() == 1);
    CHECK(d[0] == 0.0);
}

TEST_CASE("sssp matches the Bellman-Ford oracle on random weighted digraphs") {
    for (uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        Graph g = random_digraph(50, 0.08, true, seed);
        for (Direction dir : {Direction::Out, Direction::In}) {
            DistMap got = sssp(g, 0, dir);
            DistMap want = bellman_ford_oracle(g, 0, dir);
            CHECK(got == want);
        }
    }
}

TEST_CASE("sssp satisfies the relaxation invariant") {
    for (uint64_t seed : {10u, 11u, 12u}) {
        Graph g = random_digraph(40, 0.1, true, seed);
        DistMap d = sssp(g, 3 % g.vertex_count(), Direction::Out);
        for (const Edge& e : g.edges()) {
            if (d[e.u] != kUnreachable) CHECK(d[e.v] <= d[e.u] + e.w);
        }
    }
}

TEST_CASE("sssp rejects invalid source") {
    Graph g = path3();
    CHECK_THROWS_AS(sssp(g, 7, Direction::Out), InputError);
    CHECK_THROWS_AS(sssp(g, -1, Direction::Out), InputError);
}

TEST_CASE("multi_source_sssp basics") {
    Graph g = path3();
    std::vector<Vertex> all{0, 1, 2};
    DistMap d = multi_source_sssp(g, all, Direction::Out);
    CHECK(d == DistMap{0.0, 0.0, 0.0});

    std::vector<Vertex> one{2};
    CHECK(multi_source_sssp(g, one, Direction::Out) == sssp(g, 2, Direction::Out));

    std::vector<Vertex> two{0, 2};
    DistMap a = sssp(g, 0, Direction::Out), b = sssp(g, 2, Direction::Out);
    DistMap got = multi_source_sssp(g, two, Direction::Out);
    for (int v = 0; v < 3; ++v) CHECK(got[v] == std::min(a[v], b[v]));

    std::vector<Vertex> none;
    CHECK_THROWS_AS(multi_source_sssp(g, none, Direction::Out), InputError);
}

TEST_CASE("multi_source_sssp equals per-source min on random digraphs") {
    Graph g = random_digraph(30, 0.12, true, 99);
    std::vector<Vertex> sources{1, 7, 19};
    for (Direction dir : {Direction::Out, Direction::In}) {
        DistMap got = multi_source_sssp(g, sources, dir);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            Weight want = kUnreachable;
            for (Vertex s : sources) want = std::min(want, sssp(g, s, dir)[v]);
            CHECK(got[v] == want);
        }
    }
}

TEST_CASE("eccentricity on the unit path") {
    Graph g = path3();
    CHECK(eccentricity(g, 1, Direction::Out) == 1.0);
    CHECK(eccentricity(g, 0, Direction::Out) == 2.0);
}

TEST_CASE("eccentricity equals max of the sssp map") {
    Graph g = random_digraph(25, 0.2, true, 42);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (Direction dir : {Direction::Out, Direction::In}) {
            DistMap d = sssp(g, v, dir);
            Weight want = *std::max_element(d.begin(), d.end());
            CHECK(eccentricity(g, v, dir) == want);
        }
    }
}

TEST_CASE("exact_diameter basics") {
    Graph single(true, 1, {});
    CHECK(exact_diameter(single) == 0.0);

    Graph two_cycle(true, 2, {{0, 1, 1.0}, {1, 0, 1.0}});
    CHECK(exact_diameter(two_cycle) == 1.0);

    Graph disconnected(true, 2, {{0, 1, 1.0}});
    CHECK(exact_diameter(disconnected) == kUnreachable);
}

TEST_CASE("exact_diameter equals max out-eccentricity and parallel equals serial") {
    for (uint64_t seed : {21u, 22u, 23u}) {
        Graph g = random_digraph(30, 0.15, true, seed);
        auto ecc = all_eccentricities(g, Direction::Out);
        CHECK(ecc == all_eccentricities_serial(g, Direction::Out));
        Weight want = 0.0;
        for (Weight e : ecc) want = std::max(want, e);
        CHECK(exact_diameter(g) == want);
        CHECK(exact_diameter_serial(g) == want);
    }
}

TEST_CASE("ball basics") {
    Graph g = path3();
    CHECK(ball(g, 1, 0.0, Direction::Out) == std::vector<Vertex>{1});
    CHECK(ball(g, 0, 2.0, Direction::Out) == std::vector<Vertex>{0, 1, 2});
    CHECK(ball(g, 1, 1.5, Direction::Out) == std::vector<Vertex>{0, 1, 2});
    CHECK_THROWS_AS(ball(g, 0, -1.0, Direction::Out), InputError);

    // ball is exactly the filtered sssp map
    Graph r = random_digraph(20, 0.2, true, 7);
    DistMap d = sssp(r, 4, Direction::In);
    auto b = ball(r, 4, 5.0, Direction::In);
    for (Vertex v = 0; v < r.vertex_count(); ++v) {
        bool in = std::binary_search(b.begin(), b.end(), v);
        CHECK(in == (d[v] <= 5.0));
    }
}

TEST_CASE("ball_edges basics") {
    Graph isolated(true, 2, {});
    CHECK(ball_edges(isolated, 0, 0.0, Direction::Out).empty());

    Graph star(true, 4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}});
    CHECK(ball_edges(star, 0, 0.0, Direction::Out) == std::vector<int32_t>{0, 1, 2});

    Graph g = path3();
    CHECK(ball_edges(g, 0, 2.0, Direction::Out) == std::vector<int32_t>{0, 1});
    CHECK_THROWS_AS(ball_edges(g, 0, -0.5, Direction::Out), InputError);

    // undirected: incident to the ball
    Graph u(false, 4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}});
    CHECK(ball_edges(u, 0, 1.0, Direction::Out) == std::vector<int32_t>{0, 1});
}

TEST_CASE("hop_limited_distance on a weighted triangle") {
    Graph g(false, 3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 3.0}});
    CHECK(hop_limited_distance(g, 0, 2, 1) == 3.0);
    CHECK(hop_limited_distance(g, 0, 2, 2) == 2.0);
    CHECK(hop_limited_distance(g, 0, 0, 1) == 0.0);
    CHECK(hop_limited_distance(g, 0, 2, 5) == sssp(g, 0)[2]);
    CHECK_THROWS_AS(hop_limited_distance(g, 0, 2, 0), InputError);
}

TEST_CASE("hop_limited_distance is monotone in beta and converges to sssp") {
    Graph g = random_digraph(20, 0.15, true, 77);
    DistMap full = sssp(g, 0, Direction::Out);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        Weight prev = kUnreachable;
        for (int beta = 1; beta <= g.vertex_count(); ++beta) {
            Weight d = hop_limited_distance(g, 0, v, beta);
            CHECK(d <= prev);
            prev = d;
        }
        CHECK(prev == full[v]);
    }
}

TEST_CASE("undirected graphs: In and Out coincide") {
    Rng rng(5);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < 25; ++u)
        for (Vertex v = u + 1; v < 25; ++v)
            if (rng.bernoulli(0.12)) edges.push_back({u, v, static_cast<Weight>(rng.range(1, 9))});
    Graph g(false, 25, std::move(edges));
    for (Vertex v : {0, 5, 13}) {
        CHECK(sssp(g, v, Direction::Out) == sssp(g, v, Direction::In));
        CHECK(eccentricity(g, v, Direction::Out) == eccentricity(g, v, Direction::In));
    }
    CHECK(ball(g, 3, 4.0, Direction::Out) == ball(g, 3, 4.0, Direction::In));
}

TEST_CASE("extract_path walks a valid shortest path") {
    Graph g = random_digraph(30, 0.12, true, 1234);
    DistMap d = sssp(g, 2, Direction::Out);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto p = extract_path(g, d, 2, v);
        if (d[v] == kUnreachable) {
            CHECK(p.empty());
        } else {
            REQUIRE(!p.empty());
            CHECK(p.front() == 2);
            CHECK(p.back() == v);
            CHECK(path_weight(g, p) == d[v]);
        }
    }
}

TEST_CASE("graph text format round-trips") {
    Graph g(true, 4, {{0, 1, 1.0}, {1, 2, 2.5}, {2, 3, 7.0}, {3, 0, 1.0}});
    Graph back = Graph::from_text(g.to_text());
    CHECK(back == g);
    CHECK(back.to_text() == g.to_text());

    CHECK_THROWS_AS(Graph::from_text("triangular 3 0\n"), InputError);
    CHECK_THROWS_AS(Graph::from_text("directed 2 1\n"), InputError);
    CHECK_THROWS_AS(Graph::from_text("directed 2 1\n0 5 1\n"), InputError);
    CHECK_THROWS_AS(Graph::from_text("directed 2 1\n0 1 0\n"), InputError);
    CHECK_THROWS_AS(Graph::from_text("directed 2 1\n0 1 -3\n"), InputError);
}

TEST_CASE("graph invariants: weights cached, arc lookup") {
    Graph g(true, 3, {{0, 1, 2.0}, {1, 2, 5.0}, {0, 1, 4.0}});
    CHECK(g.w_min() == 2.0);
    CHECK(g.w_max() == 5.0);
    CHECK(!g.uniform_weights());
    CHECK(g.arc_weight(0, 1) == 2.0); // min over parallel edges
    CHECK(g.arc_weight(1, 0) == kUnreachable);
    CHECK(g.arc_weight(2, 2) == kUnreachable);
}
