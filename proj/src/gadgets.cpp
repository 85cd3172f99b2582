#include "diam/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace diam::gadgets {

// x is 1-based in the math; entries are stored 0-based here.
bool has_property_l1(const ov::OvInstance& inst, int vec, std::span<const int> x, int k, int i) {
    for (int t = 0; t < k - i; ++t)
        if (!inst.bit(vec, x[t])) return false;
    return true;
}

bool has_property_lk(const ov::OvInstance& inst, int vec, std::span<const int> x, int k, int i) {
    for (int t = k - i; t <= k - 2; ++t)
        if (!inst.bit(vec, x[t])) return false;
    return true;
}

namespace {

std::string join(const std::vector<int>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

// Mixed-radix tuple enumeration, most significant entry first (lexicographic).
bool next_tuple(std::vector<int>& t, int radix) {
    for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
        if (++t[i] < radix) return true;
        t[i] = 0;
    }
    return false;
}

int64_t tuple_index(const std::vector<int>& t, int radix) {
    int64_t idx = 0;
    for (int x : t) idx = idx * radix + x;
    return idx;
}

bool is_l1_vertex(const ov::OvInstance& inst, const std::vector<int>& a, const std::vector<int>& x, int k) {
    for (int j = 1; j <= k - 2; ++j)
        if (!has_property_l1(inst, a[j - 1], x, k, j)) return false;
    return true;
}

bool is_lk_vertex(const ov::OvInstance& inst, const std::vector<int>& a, const std::vector<int>& x, int k) {
    for (int j = 3; j <= k; ++j)
        if (!has_property_lk(inst, a[j - 3], x, k, j)) return false;
    return true;
}

struct EdgeSink {
    std::vector<Edge> edges;
    uint64_t budget;
    uint64_t vertices;

    void add(Vertex u, Vertex v) {
        if (u == v) return; // self-loops carry no distance information
        if (vertices + edges.size() >= budget)
            throw SizeBudgetError("gadget exceeds size budget of " + std::to_string(budget) +
                                  " vertices+edges");
        edges.push_back({u, v, 1.0});
    }
};

} // namespace

std::string GadgetGraph::layer_name(int layer) const {
    if (directed_variant) return "L" + std::to_string(layer);
    return layer == 0 ? "S" : "X";
}

std::string GadgetGraph::mapping_text() const {
    std::string out;
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
        out += std::to_string(v) + " " + layer_name(layer_of[v]);
        out += " a=" + join(label_of[v].vec);
        if (!label_of[v].coords.empty()) out += " x=" + join(label_of[v].coords);
        out += "\n";
    }
    return out;
}

void GadgetGraph::save(const std::string& graph_path, const std::string& mapping_path) const {
    graph.save(graph_path);
    std::ofstream f(mapping_path);
    if (!f) throw InputError("cannot write mapping file: " + mapping_path);
    f << mapping_text();
}

GadgetGraph build_directed_gadget(const ov::OvInstance& inst, int k, uint64_t size_budget) {
    if (k < 3) throw InputError("build_directed_gadget: k must be >= 3");
    const int nv = inst.size();
    const int d = inst.d;

    // Refuse before allocating anything sizable.
    double l0_est = std::pow(static_cast<double>(nv), k - 1);
    double mid_est = std::pow(static_cast<double>(nv), k - 2) * std::pow(static_cast<double>(d), k - 1);
    if (l0_est + (k - 1) * mid_est > static_cast<double>(size_budget))
        throw SizeBudgetError("directed gadget vertex estimate exceeds size budget");

    const int64_t n_l0 = static_cast<int64_t>(std::llround(l0_est));
    const int64_t n_a = static_cast<int64_t>(std::llround(std::pow(static_cast<double>(nv), k - 2)));
    const int64_t n_x = static_cast<int64_t>(std::llround(std::pow(static_cast<double>(d), k - 1)));

    GadgetGraph gg;
    gg.directed_variant = true;
    gg.k = k;
    gg.instance = inst;

    // L_0: one vertex per element of A^(k-1), ids 0..n_l0-1 in lexicographic
    // order; the id of a tuple is its mixed-radix value, so no lookup table.
    std::vector<int> tup(k - 1, 0);
    do {
        gg.layer_of.push_back(0);
        gg.label_of.push_back({tup, {}});
    } while (next_tuple(tup, nv));

    // Layers 1..k-1 over (a-tuple, x-tuple) pairs; L_1 and L_{k-1} members are
    // materialized only when their defining properties hold.
    // id_of[layer-1][a_idx * n_x + x_idx] -> vertex id or -1.
    std::vector<std::vector<int32_t>> id_of(k - 1);
    Vertex next_id = static_cast<Vertex>(n_l0);
    std::vector<int> a_tup(k - 2, 0), x_tup(k - 1, 0);
    for (int layer = 1; layer <= k - 1; ++layer) {
        auto& ids = id_of[layer - 1];
        ids.assign(static_cast<size_t>(n_a * n_x), -1);
        std::fill(a_tup.begin(), a_tup.end(), 0);
        int64_t a_idx = 0;
        do {
            std::fill(x_tup.begin(), x_tup.end(), 0);
            int64_t x_idx = 0;
            do {
                bool exists = true;
                if (layer == 1) exists = is_l1_vertex(inst, a_tup, x_tup, k);
                else if (layer == k - 1) exists = is_lk_vertex(inst, a_tup, x_tup, k);
                if (exists) {
                    ids[a_idx * n_x + x_idx] = next_id;
                    gg.layer_of.push_back(layer);
                    gg.label_of.push_back({a_tup, x_tup});
                    ++next_id;
                }
                ++x_idx;
            } while (next_tuple(x_tup, d));
            ++a_idx;
        } while (next_tuple(a_tup, nv));
    }

    const uint64_t total_vertices = static_cast<uint64_t>(next_id);
    EdgeSink sink{{}, size_budget, total_vertices};

    // Per (layer, a-tuple): the x-tuples present, for index-changing edges.
    std::vector<std::vector<std::vector<int64_t>>> by_a(k - 1,
        std::vector<std::vector<int64_t>>(n_a));
    for (int layer = 1; layer <= k - 1; ++layer)
        for (int64_t a = 0; a < n_a; ++a)
            for (int64_t x = 0; x < n_x; ++x)
                if (id_of[layer - 1][a * n_x + x] >= 0) by_a[layer - 1][a].push_back(x);

    // Family 1 (L_0 -> L_1): tail (a_1..a_{k-1}), head (a_1..a_{k-2}, x),
    // requires a_{k-1}[x_1] = 1.
    for (int64_t a = 0; a < n_a; ++a) {
        for (int64_t x : by_a[0][a]) {
            Vertex head = id_of[0][a * n_x + x];
            int x1 = gg.label_of[head].coords[0];
            for (int last = 0; last < nv; ++last)
                if (inst.bit(last, x1)) sink.add(static_cast<Vertex>(a * nv + last), head);
        }
    }

    // Family 2 (L_{k-1} -> L_0): tail (a_3..a_k, x), head (a_2..a_k),
    // requires a_2[x_{k-1}] = 1.
    for (int64_t a = 0; a < n_a; ++a) {
        for (int64_t x : by_a[k - 2][a]) {
            Vertex tail = id_of[k - 2][a * n_x + x];
            int xk = gg.label_of[tail].coords[k - 2];
            for (int first = 0; first < nv; ++first)
                if (inst.bit(first, xk))
                    sink.add(tail, static_cast<Vertex>(first * n_a + a));
        }
    }

    // Family 3 (L_i -> L_{i+1}): same x-tuple, vector tuples equal except at
    // position k-1-i (1-based), which may take any value.
    std::vector<int64_t> pow_nv(k - 1, 1);
    for (int i = 1; i < k - 1; ++i) pow_nv[i] = pow_nv[i - 1] * nv;
    for (int i = 1; i <= k - 2; ++i) {
        const int pos = k - 2 - i;             // 0-based position in the (k-2)-tuple
        const int64_t stride = pow_nv[k - 3 - pos]; // radix weight of that position
        for (int64_t a = 0; a < n_a; ++a) {
            for (int64_t x : by_a[i - 1][a]) {
                Vertex tail = id_of[i - 1][a * n_x + x];
                int cur = gg.label_of[tail].vec[pos];
                int64_t base = a - cur * stride;
                for (int b = 0; b < nv; ++b) {
                    Vertex head = id_of[i][(base + b * stride) * n_x + x];
                    if (head >= 0) sink.add(tail, head);
                }
            }
        }
    }

    // Families 4 and 5 (index-changing): L_i -> L_1 and L_{k-1} -> L_i for all
    // 1 <= i <= k-1, same vector tuple, any index tuples. Family 4 at i = k-1
    // coincides with family 5 at i = 1; duplicates are removed below.
    for (int64_t a = 0; a < n_a; ++a) {
        for (int i = 1; i <= k - 1; ++i) {
            for (int64_t x : by_a[i - 1][a]) {
                Vertex tail = id_of[i - 1][a * n_x + x];
                for (int64_t xp : by_a[0][a]) sink.add(tail, id_of[0][a * n_x + xp]);
            }
            for (int64_t x : by_a[k - 2][a]) {
                Vertex tail = id_of[k - 2][a * n_x + x];
                for (int64_t xp : by_a[i - 1][a]) sink.add(tail, id_of[i - 1][a * n_x + xp]);
            }
        }
    }

    std::sort(sink.edges.begin(), sink.edges.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    sink.edges.erase(std::unique(sink.edges.begin(), sink.edges.end(),
                                 [](const Edge& a, const Edge& b) {
                                     return a.u == b.u && a.v == b.v;
                                 }),
                     sink.edges.end());

    gg.graph = Graph(true, static_cast<int>(total_vertices), std::move(sink.edges));
    return gg;
}

GadgetGraph build_undirected_gadget(const ov::OvInstance& inst, uint64_t size_budget) {
    const ov::OvInstance a = ov::add_all_ones(inst);
    const int nv = a.size();
    const int d = a.d;

    const int64_t n_s = static_cast<int64_t>(nv) * nv;
    const int64_t n_x = static_cast<int64_t>(nv) * d * d;
    if (static_cast<uint64_t>(n_s + n_x) > size_budget)
        throw SizeBudgetError("undirected gadget vertex estimate exceeds size budget");

    GadgetGraph gg;
    gg.directed_variant = false;
    gg.k = 0;
    gg.instance = a;

    // S = A^2 first (id = a*nv + b), then X = {(a,i,j) : a[i] = a[j] = 1}.
    for (int va = 0; va < nv; ++va)
        for (int vb = 0; vb < nv; ++vb) {
            gg.layer_of.push_back(0);
            gg.label_of.push_back({{va, vb}, {}});
        }
    std::vector<int32_t> xid(static_cast<size_t>(n_x), -1);
    Vertex next_id = static_cast<Vertex>(n_s);
    for (int va = 0; va < nv; ++va)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (a.bit(va, i) && a.bit(va, j)) {
                    xid[(static_cast<int64_t>(va) * d + i) * d + j] = next_id++;
                    gg.layer_of.push_back(1);
                    gg.label_of.push_back({{va}, {i, j}});
                }

    EdgeSink sink{{}, size_budget, static_cast<uint64_t>(next_id)};
    auto x_vertex = [&](int va, int i, int j) {
        return xid[(static_cast<int64_t>(va) * d + i) * d + j];
    };

    for (Vertex v = static_cast<Vertex>(n_s); v < next_id; ++v) {
        const auto& lab = gg.label_of[v];
        int va = lab.vec[0], i = lab.coords[0], j = lab.coords[1];
        // S-X: (a,b) -- (a,i,j) when b[i] = 1 or b[j] = 1.
        for (int vb = 0; vb < nv; ++vb)
            if (a.bit(vb, i) || a.bit(vb, j))
                sink.add(static_cast<Vertex>(static_cast<int64_t>(va) * nv + vb), v);
        // X-X, same (i,j), smaller vector index to avoid double emission.
        for (int vc = 0; vc < va; ++vc) {
            Vertex u = x_vertex(vc, i, j);
            if (u >= 0) sink.add(u, v);
        }
        // X-X, same vector, lexicographically smaller (i',j').
        for (int ip = 0; ip <= i; ++ip) {
            int jend = (ip == i) ? j : d;
            for (int jp = 0; jp < jend; ++jp) {
                Vertex u = x_vertex(va, ip, jp);
                if (u >= 0) sink.add(u, v);
            }
        }
    }

    gg.graph = Graph(false, static_cast<int>(next_id), std::move(sink.edges));
    return gg;
}

GadgetFactReport check_layer_edge_facts(const GadgetGraph& gg) {
    if (!gg.directed_variant)
        throw InputError("check_layer_edge_facts: expects a directed gadget");
    const int k = gg.k;
    GadgetFactReport report;
    const auto& edges = gg.graph.edges();
    for (int32_t e = 0; e < static_cast<int32_t>(edges.size()); ++e) {
        int i = gg.layer_of[edges[e].u];
        int j = gg.layer_of[edges[e].v];
        if (i < j) {
            if (j != i + 1) report.fact1_violations.push_back(e);
        } else {
            if (i != k - 1 && j != 1) report.fact2_violations.push_back(e);
        }
    }
    for (Vertex v = 0; v < gg.graph.vertex_count(); ++v) {
        int layer = gg.layer_of[v];
        if (layer == 0) continue;
        const auto& lab = gg.label_of[v];
        bool good = true;
        if (layer == 1) good = good && is_l1_vertex(gg.instance, lab.vec, lab.coords, k);
        if (layer == k - 1) good = good && is_lk_vertex(gg.instance, lab.vec, lab.coords, k);
        if (!good) report.property_violations.push_back(v);
    }
    return report;
}

} // namespace diam::gadgets
