#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "diam/graph.hpp"
#include "diam/ov.hpp"

namespace diam::gadgets {

// Back-mapping from a gadget vertex to the OV data it encodes: indices into
// the instance's vector list plus coordinate indices (0-based).
struct VertexLabel {
    std::vector<int> vec;
    std::vector<int> coords;
};

// A hardness gadget: an unweighted graph whose diameter encodes whether the
// source OV instance has a solution, together with per-vertex layer labels
// and the instance it was built from.
struct GadgetGraph {
    Graph graph;
    bool directed_variant = true;
    int k = 0; // 0 for the undirected variant
    ov::OvInstance instance;
    std::vector<int> layer_of;          // directed: 0..k-1; undirected: 0 = S, 1 = X
    std::vector<VertexLabel> label_of;

    std::string layer_name(int layer) const;
    // Sidecar format: one line per vertex, "<id> <layer> <semantic-tuple>".
    std::string mapping_text() const;
    void save(const std::string& graph_path, const std::string& mapping_path) const;
};

struct GadgetFactReport {
    std::vector<int32_t> fact1_violations;   // forward edge skipping a layer
    std::vector<int32_t> fact2_violations;   // non-forward edge with i != k-1 and j != 1
    std::vector<Vertex> property_violations; // L_1 / L_{k-1} vertex whose defining bits are not all 1
    bool ok() const {
        return fact1_violations.empty() && fact2_violations.empty() && property_violations.empty();
    }
};

// Defining membership properties of the boundary layers, checkable per pair
// in O(k) bit reads. x holds the k-1 coordinate indices, 0-based.
// Property (i, L_1): a[x_1] = ... = a[x_{k-i}] = 1.
bool has_property_l1(const ov::OvInstance& inst, int vec, std::span<const int> x, int k, int i);
// Property (i, L_{k-1}): a[x_{k+1-i}] = ... = a[x_{k-1}] = 1.
bool has_property_lk(const ov::OvInstance& inst, int vec, std::span<const int> x, int k, int i);

// Layered directed gadget for k >= 3. Diameter <= k when no k-tuple of
// vectors (repetition allowed) is orthogonal; >= 2k-1 (or unreachable) when
// one is. |L_0| = n^(k-1) exactly. Refuses with SizeBudgetError when the
// size estimate exceeds the budget.
GadgetGraph build_directed_gadget(const ov::OvInstance& inst, int k,
                                  uint64_t size_budget = kDefaultSizeBudget);

// Undirected unweighted 5-vs-3 gadget for k = 3. The all-ones vector is
// appended internally. Diameter <= 3 without a 3-OV solution, >= 5 with one.
GadgetGraph build_undirected_gadget(const ov::OvInstance& inst,
                                    uint64_t size_budget = kDefaultSizeBudget);

// Structural audit of a directed gadget: every edge against the two layer
// facts, every L_1 / L_{k-1} vertex against its defining property.
GadgetFactReport check_layer_edge_facts(const GadgetGraph& gg);

} // namespace diam::gadgets
