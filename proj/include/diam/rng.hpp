#pragma once

#include <cstdint>
#include <random>

namespace diam {

// Seeded RNG with platform-independent output. mt19937_64 itself is fully
// specified by the standard; std::uniform_int_distribution is not, so the
// mappings to bounded ints / unit reals are done by hand.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // Uniform in [0, n). n must be positive.
    uint64_t below(uint64_t n) {
        return static_cast<uint64_t>((static_cast<__uint128_t>(next()) * n) >> 64);
    }

    // Uniform in [lo, hi], inclusive.
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    // Uniform in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

  private:
    std::mt19937_64 eng_;
};

// splitmix64 finalizer; used to derive independent child seeds from a master
// seed plus a call-site counter.
inline uint64_t mix_seed(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t master, uint64_t counter) {
    return mix_seed(master ^ mix_seed(counter));
}

} // namespace diam
