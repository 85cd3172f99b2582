#pragma once

#include <cstdint>

#include "diam/graph.hpp"

namespace diam::gen {

// Random spanning tree plus `extra_edges` random edges; integer weights
// uniform in [w_lo, w_hi]. Always connected.
Graph random_connected_undirected(int n, int extra_edges, int w_lo, int w_hi, uint64_t seed);

// Random Hamiltonian cycle plus `extra_edges` random arcs; always strongly
// connected. Sparse inputs give large diameters, dense ones small.
Graph random_strongly_connected_digraph(int n, int extra_edges, int w_lo, int w_hi, uint64_t seed);

} // namespace diam::gen
