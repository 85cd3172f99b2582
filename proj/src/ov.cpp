#include "diam/ov.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "diam/rng.hpp"

namespace diam::ov {

OvInstance::OvInstance(int dim, std::vector<uint64_t> vecs) : d(dim), vectors(std::move(vecs)) {
    if (d < 1 || d > 64) throw InputError("OV dimension must be in [1, 64]");
    if (vectors.empty()) throw InputError("OV instance needs at least one vector");
    for (uint64_t v : vectors)
        if (v & ~mask()) throw InputError("OV vector has bits beyond dimension d");
}

std::string OvInstance::to_text() const {
    std::string out = std::to_string(size()) + " " + std::to_string(d) + "\n";
    for (uint64_t v : vectors) {
        for (int x = 0; x < d; ++x) out += ((v >> x) & 1ULL) ? '1' : '0';
        out += '\n';
    }
    return out;
}

OvInstance OvInstance::from_text(const std::string& text) {
    std::istringstream in(text);
    int n = 0, d = 0;
    if (!(in >> n >> d)) throw InputError("OV header: expected '<n> <d>'");
    if (n < 1 || d < 1 || d > 64) throw InputError("OV header: bad dimensions");
    std::vector<uint64_t> vecs;
    vecs.reserve(n);
    std::string line;
    for (int i = 0; i < n; ++i) {
        if (!(in >> line)) throw InputError("OV body: truncated vector list");
        if (static_cast<int>(line.size()) != d) throw InputError("OV body: vector length != d");
        uint64_t v = 0;
        for (int x = 0; x < d; ++x) {
            if (line[x] == '1') v |= 1ULL << x;
            else if (line[x] != '0') throw InputError("OV body: characters must be 0/1");
        }
        vecs.push_back(v);
    }
    return OvInstance(d, std::move(vecs));
}

OvInstance OvInstance::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open OV file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return from_text(ss.str());
}

void OvInstance::save(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write OV file: " + path);
    f << to_text();
}

bool witness_valid(const OvInstance& inst, const OvWitness& w) {
    if (w.empty()) return false;
    uint64_t acc = inst.mask();
    for (int idx : w) {
        if (idx < 0 || idx >= inst.size()) return false;
        acc &= inst.vectors[idx];
    }
    return acc == 0;
}

namespace {

// Depth-first over tuple suffixes in index order; the first hit is the
// lexicographically smallest completion of the given prefix. Once the running
// AND is zero every completion works, so the all-zeros suffix is taken.
bool search_suffix(const OvInstance& inst, int k, int depth, uint64_t acc, OvWitness& out) {
    if (acc == 0) {
        for (int j = depth; j < k; ++j) out[j] = 0;
        return true;
    }
    if (depth == k) return false;
    for (int i = 0; i < inst.size(); ++i) {
        out[depth] = i;
        if (search_suffix(inst, k, depth + 1, acc & inst.vectors[i], out)) return true;
    }
    return false;
}

} // namespace

std::optional<OvWitness> brute_force_serial(const OvInstance& inst, int k) {
    if (k < 2) throw InputError("brute_force: k must be >= 2");
    OvWitness w(k);
    if (search_suffix(inst, k, 0, inst.mask(), w)) return w;
    return std::nullopt;
}

std::optional<OvWitness> brute_force(const OvInstance& inst, int k) {
    if (k < 2) throw InputError("brute_force: k must be >= 2");
    const int n = inst.size();
    std::vector<OvWitness> found(n);
    std::vector<char> ok(n, 0);
#pragma omp parallel for schedule(dynamic, 1)
    for (int first = 0; first < n; ++first) {
        OvWitness w(k);
        w[0] = first;
        if (search_suffix(inst, k, 1, inst.mask() & inst.vectors[first], w)) {
            found[first] = std::move(w);
            ok[first] = 1;
        }
    }
    // Smallest first index wins; within one first index the DFS is already
    // lexicographic. Deterministic regardless of scheduling.
    for (int first = 0; first < n; ++first)
        if (ok[first]) return found[first];
    return std::nullopt;
}

OvInstance gen_random(int n_vec, int d, double p_one, uint64_t seed) {
    if (n_vec < 1) throw InputError("gen_random: need at least one vector");
    if (!(p_one >= 0.0 && p_one <= 1.0)) throw InputError("gen_random: p_one must be in [0,1]");
    Rng rng(seed);
    std::vector<uint64_t> vecs(n_vec, 0);
    for (auto& v : vecs)
        for (int x = 0; x < d; ++x)
            if (rng.bernoulli(p_one)) v |= 1ULL << x;
    return OvInstance(d, std::move(vecs));
}

OvInstance plant(const OvInstance& inst, int k, uint64_t seed) {
    if (k < 2) throw InputError("plant: k must be >= 2");
    if (inst.size() < k) throw InputError("plant: instance has fewer than k vectors");
    Rng rng(seed);
    // Choose k distinct indices, then clear one bit per coordinate where the
    // whole tuple is still 1.
    std::vector<int> pool(inst.size());
    for (int i = 0; i < inst.size(); ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
        int j = i + static_cast<int>(rng.below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    OvInstance out = inst;
    for (int x = 0; x < inst.d; ++x) {
        bool all_one = true;
        for (int i = 0; i < k; ++i) all_one = all_one && out.bit(pool[i], x);
        if (all_one) {
            int victim = pool[rng.below(k)];
            out.vectors[victim] &= ~(1ULL << x);
        }
    }
    return out;
}

OvInstance add_all_ones(const OvInstance& inst) {
    uint64_t ones = inst.mask();
    if (std::find(inst.vectors.begin(), inst.vectors.end(), ones) != inst.vectors.end())
        return inst;
    OvInstance out = inst;
    out.vectors.push_back(ones);
    return out;
}

} // namespace diam::ov
