#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diam/errors.hpp"

namespace diam::ov {

// Single-Set k-OV instance: a set A of bit-vectors of dimension d. Vectors are
// packed into 64-bit words (d <= 64), so a coordinate-wise product is one AND.
struct OvInstance {
    int d = 0;
    std::vector<uint64_t> vectors;

    OvInstance() = default;
    OvInstance(int dim, std::vector<uint64_t> vecs);

    int size() const { return static_cast<int>(vectors.size()); }
    uint64_t mask() const { return d == 64 ? ~0ULL : ((1ULL << d) - 1); }
    bool bit(int vec, int coord) const { return (vectors[vec] >> coord) & 1ULL; }

    bool operator==(const OvInstance& o) const = default;

    // Text format: "<n> <d>", then n lines of d characters in {0,1}.
    // Character position x holds coordinate x.
    std::string to_text() const;
    static OvInstance from_text(const std::string& text);
    static OvInstance load(const std::string& path);
    void save(const std::string& path) const;
};

// k indices into the vector list, repeats allowed. Valid iff the AND of the
// selected vectors is zero in every coordinate.
using OvWitness = std::vector<int>;

bool witness_valid(const OvInstance& inst, const OvWitness& w);

// Exhaustive search over all k-tuples with repetition; returns the
// lexicographically smallest witness, or nullopt. The default version
// parallelizes over the first tuple index; the serial version is the
// reference kept for testing.
std::optional<OvWitness> brute_force(const OvInstance& inst, int k);
std::optional<OvWitness> brute_force_serial(const OvInstance& inst, int k);

// n_vec i.i.d. vectors, each bit 1 with probability p_one.
OvInstance gen_random(int n_vec, int d, double p_one, uint64_t seed);

// Clears bits in k chosen vectors until that k-tuple is orthogonal; planted
// instances always have a witness.
OvInstance plant(const OvInstance& inst, int k, uint64_t seed);

// Appends the all-ones vector unless already present; does not change whether
// any k-tuple is orthogonal.
OvInstance add_all_ones(const OvInstance& inst);

} // namespace diam::ov
