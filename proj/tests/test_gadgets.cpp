#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "diam/gadgets.hpp"
#include "diam/rng.hpp"

using namespace diam;
using namespace diam::gadgets;

namespace {

ov::OvInstance all_ones(int n, int d) { return ov::gen_random(n, d, 1.0, 0); }

int layer_count(const GadgetGraph& gg, int layer) {
    int c = 0;
    for (int l : gg.layer_of) c += (l == layer);
    return c;
}

} // namespace

TEST_CASE("directed gadget without a solution has diameter at most k") {
    GadgetGraph gg = build_directed_gadget(all_ones(3, 4), 3);
    Weight d = exact_diameter(gg.graph);
    CHECK(d <= 3.0);
}

TEST_CASE("directed gadget with a zero vector has diameter at least 2k-1") {
    ov::OvInstance inst = ov::gen_random(3, 4, 1.0, 0);
    inst.vectors[1] = 0;
    GadgetGraph gg = build_directed_gadget(inst, 3);
    Weight d = exact_diameter(gg.graph);
    CHECK(!(d < 5.0)); // >= 5 or unreachable
}

TEST_CASE("L_0 has exactly n^(k-1) vertices") {
    GadgetGraph gg = build_directed_gadget(ov::gen_random(4, 3, 0.5, 7), 3);
    CHECK(layer_count(gg, 0) == 16);

    GadgetGraph g4 = build_directed_gadget(ov::gen_random(3, 3, 0.5, 8), 4);
    CHECK(layer_count(g4, 0) == 27);
}

TEST_CASE("directed gadget gap biconditional on random instances") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed);
        int n = static_cast<int>(rng.range(3, 5));
        int d = static_cast<int>(rng.range(2, 5));
        double p = 0.3 + 0.1 * rng.below(5);
        ov::OvInstance inst = ov::gen_random(n, d, p, seed * 17 + 1);
        if (seed % 2) inst = ov::plant(inst, 3, seed);
        bool sol = ov::brute_force(inst, 3).has_value();
        Weight diam = exact_diameter(build_directed_gadget(inst, 3).graph);
        if (sol) {
            CHECK(!(diam < 5.0));
        } else {
            CHECK(diam <= 3.0);
        }
        // no middle ground either way
        CHECK((diam <= 3.0 || !(diam < 5.0)));
    }
}

TEST_CASE("directed gadget gap biconditional for k=4") {
    for (uint64_t seed = 0; seed < 8; ++seed) {
        ov::OvInstance inst = ov::gen_random(4, 4, 0.5, seed);
        if (seed % 2) inst = ov::plant(inst, 4, seed);
        bool sol = ov::brute_force(inst, 4).has_value();
        Weight diam = exact_diameter(build_directed_gadget(inst, 4).graph);
        if (sol) {
            CHECK(!(diam < 7.0));
        } else {
            CHECK(diam <= 4.0);
        }
    }
}

TEST_CASE("vertex and edge counts stay within the construction bounds") {
    for (int k : {3, 4}) {
        ov::OvInstance inst = ov::gen_random(3, 4, 0.6, 5);
        GadgetGraph gg = build_directed_gadget(inst, k);
        double n = inst.size(), d = inst.d;
        double vbound = 4.0 * (std::pow(n, k - 1) + std::pow(n, k - 2) * std::pow(d, k - 1));
        CHECK(gg.graph.vertex_count() <= vbound);
        double ebound = 4.0 * std::pow(n, k - 1) * std::pow(d, 2 * k - 1);
        CHECK(gg.graph.edge_count() <= ebound);
    }
}

TEST_CASE("layer membership properties hold by construction") {
    ov::OvInstance inst = ov::gen_random(4, 4, 0.6, 9);
    const int k = 4;
    GadgetGraph gg = build_directed_gadget(inst, k);
    for (Vertex v = 0; v < gg.graph.vertex_count(); ++v) {
        const auto& lab = gg.label_of[v];
        if (gg.layer_of[v] == 1)
            for (int j = 1; j <= k - 2; ++j)
                CHECK(has_property_l1(gg.instance, lab.vec[j - 1], lab.coords, k, j));
        if (gg.layer_of[v] == k - 1)
            for (int j = 3; j <= k; ++j)
                CHECK(has_property_lk(gg.instance, lab.vec[j - 3], lab.coords, k, j));
    }
}

TEST_CASE("gadget builder input validation") {
    ov::OvInstance inst = all_ones(3, 3);
    CHECK_THROWS_AS(build_directed_gadget(inst, 2), InputError);
    CHECK_THROWS_AS(build_directed_gadget(inst, 3, 10), SizeBudgetError);
    CHECK_THROWS_AS(build_undirected_gadget(inst, 5), SizeBudgetError);
}

TEST_CASE("check_layer_edge_facts is empty on fresh gadgets") {
    for (uint64_t seed = 0; seed < 6; ++seed) {
        ov::OvInstance inst = ov::gen_random(3, 4, 0.5, seed);
        GadgetGraph gg = build_directed_gadget(inst, seed % 2 ? 3 : 4);
        CHECK(check_layer_edge_facts(gg).ok());
    }
}

TEST_CASE("an injected backward edge is reported") {
    GadgetGraph gg = build_directed_gadget(ov::gen_random(3, 3, 0.7, 2), 4);
    // find an L_2 vertex and an L_0 vertex; L_2 -> L_0 violates fact 2
    Vertex from = -1, to = 0;
    for (Vertex v = 0; v < gg.graph.vertex_count(); ++v)
        if (gg.layer_of[v] == 2) { from = v; break; }
    REQUIRE(from >= 0);
    GadgetGraph bad = gg;
    bad.graph = gg.graph.with_extra_edges({{from, to, 1.0}});
    GadgetFactReport rep = check_layer_edge_facts(bad);
    CHECK(rep.fact1_violations.empty());
    REQUIRE(rep.fact2_violations.size() == 1);
    const Edge& e = bad.graph.edges()[rep.fact2_violations[0]];
    CHECK(e.u == from);
    CHECK(e.v == to);
    CHECK(rep.property_violations.empty());
}

TEST_CASE("a forward layer-skipping edge is reported") {
    GadgetGraph gg = build_directed_gadget(ov::gen_random(3, 3, 0.7, 3), 4);
    Vertex from = -1, to = -1;
    for (Vertex v = 0; v < gg.graph.vertex_count(); ++v) {
        if (gg.layer_of[v] == 1 && from < 0) from = v;
        if (gg.layer_of[v] == 3 && to < 0) to = v;
    }
    REQUIRE((from >= 0 && to >= 0));
    GadgetGraph bad = gg;
    bad.graph = gg.graph.with_extra_edges({{from, to, 1.0}});
    GadgetFactReport rep = check_layer_edge_facts(bad);
    REQUIRE(rep.fact1_violations.size() == 1);
}

TEST_CASE("a flipped instance bit is reported as a property violation") {
    ov::OvInstance inst = all_ones(3, 3);
    GadgetGraph gg = build_directed_gadget(inst, 3);
    REQUIRE(check_layer_edge_facts(gg).ok());
    // clearing any bit breaks the defining property of some L_1/L_2 vertex
    gg.instance.vectors[0] &= ~1ULL;
    GadgetFactReport rep = check_layer_edge_facts(gg);
    CHECK(!rep.property_violations.empty());
}

TEST_CASE("check_layer_edge_facts rejects undirected gadgets") {
    GadgetGraph gg = build_undirected_gadget(all_ones(2, 3));
    CHECK_THROWS_AS(check_layer_edge_facts(gg), InputError);
}

TEST_CASE("undirected gadget: all-ones instance has diameter at most 3") {
    GadgetGraph gg = build_undirected_gadget(all_ones(3, 4));
    CHECK(exact_diameter(gg.graph) <= 3.0);
}

TEST_CASE("undirected gadget: the 110/101/011 instance has diameter at least 5") {
    ov::OvInstance inst = ov::OvInstance::from_text("3 3\n110\n101\n011\n");
    GadgetGraph gg = build_undirected_gadget(inst);
    CHECK(!(exact_diameter(gg.graph) < 5.0));
}

TEST_CASE("undirected gadget: |S| is n^2 after the all-ones append") {
    ov::OvInstance inst = ov::OvInstance::from_text("3 3\n110\n101\n011\n");
    GadgetGraph gg = build_undirected_gadget(inst);
    CHECK(layer_count(gg, 0) == 16); // (3+1)^2
    GadgetGraph gg2 = build_undirected_gadget(all_ones(3, 4));
    CHECK(layer_count(gg2, 0) == 9); // all-ones already present
}

TEST_CASE("undirected gadget gap biconditional on random instances") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed ^ 0xabc);
        int n = static_cast<int>(rng.range(3, 6));
        int d = static_cast<int>(rng.range(2, 6));
        ov::OvInstance inst = ov::gen_random(n, d, 0.3 + 0.1 * rng.below(5), seed);
        if (seed % 2) inst = ov::plant(inst, 3, seed + 5);
        GadgetGraph gg = build_undirected_gadget(inst);
        bool sol = ov::brute_force(gg.instance, 3).has_value();
        CHECK(sol == ov::brute_force(inst, 3).has_value()); // all-ones append preserves it
        Weight diam = exact_diameter(gg.graph);
        if (sol) {
            CHECK(!(diam < 5.0));
        } else {
            CHECK(diam <= 3.0);
        }
    }
}

TEST_CASE("mapping sidecar lists every vertex with its layer") {
    GadgetGraph gg = build_directed_gadget(ov::gen_random(2, 2, 0.8, 1), 3);
    std::string text = gg.mapping_text();
    size_t lines = std::count(text.begin(), text.end(), '\n');
    CHECK(lines == static_cast<size_t>(gg.graph.vertex_count()));
    CHECK(text.find("0 L0 a=0,0") == 0);
}
