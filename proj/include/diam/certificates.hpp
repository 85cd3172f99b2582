#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "diam/graph.hpp"
#include "diam/hopsets.hpp"

namespace diam::certs {

// Unweighted: the path-guessing certifier (weights pre-scaled so w_min plays
// the role of the unit). Hopset: the hopset-augmented certifier for weighted
// graphs.
enum class CertMode { Unweighted, Hopset };

const char* to_string(CertMode m);
CertMode cert_mode_from_string(const std::string& s);

struct CertParams {
    int k = 2;
    double D = 1.0;
    double epsilon = 0.5;
    CertMode mode = CertMode::Unweighted;
    double w_min = 1.0;
    double w_max = 1.0;
    // The beta parameter of the assumed hopset algorithm (Hopset mode size
    // bounds and hop-path length checks).
    double hopset_beta = 1.0;

    double r() const { return epsilon * D / 2.0; }
    double d_prime() const { return (2.0 - 1.0 / k + epsilon) * D; }

    void validate() const;
    static CertParams for_graph(const Graph& g, int k, double D, double epsilon,
                                CertMode mode = CertMode::Unweighted, double hopset_beta = 1.0);
};

// A claimed good set: direction, level, members, and the size bound it was
// generated against.
struct GoodSetClaim {
    Direction direction = Direction::Out;
    int level = 0;
    std::vector<Vertex> vertices;
    double size_bound = 0.0;

    bool operator==(const GoodSetClaim&) const = default;
};

// Applicable size bound (natural log, +1 slack for tiny graphs).
double good_set_size_bound(const Graph& g, const CertParams& p, Direction dir, int level);

// Distance every vertex must have to (In) / from (Out) the set.
double goodness_threshold(const CertParams& p, Direction dir, int level);

// Size bound + goodness, both recomputed from scratch via multi-source
// shortest paths. Empty sets are never good.
bool check_good_set(const Graph& g, const GoodSetClaim& claim, const CertParams& p);

// Seeded sampling with replacement, verified before return, retried with
// derived seeds. Output size is at most ceil(2 (M/K) ln(max(n_sets,2))).
std::vector<int32_t> hitting_set(int32_t universe_size, const std::vector<std::vector<int32_t>>& sets,
                                 double min_size, uint64_t seed, int max_retries = 20);

// One cover-search step: for Unweighted mode returns a verified claim
// that is either Out at level ell or In at level k-ell; for Hopset mode,
// either In at level ell or Out at level k-ell. Throws GenerationFailure when
// nothing verifiable is found (expected when diameter > D).
GoodSetClaim find_cover_pair(const Graph& g, int ell, const CertParams& p, uint64_t seed);

enum class UbVariant { EccCoverOut, EccCoverIn, PairCover, HopsetPairCover };

const char* to_string(UbVariant v);

// Upper-bound certificate: accepting verification implies diameter < D'.
//  EccCoverOut      out_set at level k-1, every member with in-eccentricity <= D
//  EccCoverIn       in_set at level k-1, every member with out-eccentricity <= D
//  PairCover        in_set at level k-ell, out_set at level ell-1, and an
//                   explicit path from every in member to every out member
//  HopsetPairCover  in_set at level ell, out_set at level k-1-ell, a
//                   distance-preserving hopset, and <=beta-edge paths in g+E'
struct UbCertificate {
    UbVariant variant = UbVariant::EccCoverOut;
    CertParams params;
    int ell = 0;
    GoodSetClaim out_set;
    GoodSetClaim in_set;
    // Row-major |in_set| x |out_set|: paths[i * |out| + j] runs in_set[i] -> out_set[j].
    std::vector<std::vector<Vertex>> paths;
    hopsets::Hopset hopset;

    std::string to_json() const;
    static UbCertificate from_json(const std::string& text);
    static UbCertificate load(const std::string& path);
    void save(const std::string& path) const;
};

// A vertex whose directional eccentricity exceeds D proves diameter > D.
struct LbWitness {
    Vertex vertex = 0;
    Direction direction = Direction::Out;

    std::string to_json(double D) const;
    // Returns the witness and the D it was issued against.
    static std::pair<LbWitness, double> from_json(const std::string& text);
};

struct VerifyResult {
    bool accept = false;
    std::string reason; // short code, empty on ACCEPT

    explicit operator bool() const { return accept; }
};

// Deterministic verification; total (malformed certificates REJECT, never
// throw). strict_hopset checks every shortcut against the exact distance;
// the non-strict variant samples shortcuts.
VerifyResult verify_ub(const Graph& g, const UbCertificate& cert, const CertParams& params,
                       bool strict_hopset = true);

// Scans eccentricities; a witness exists iff diameter > D.
std::optional<LbWitness> generate_lb(const Graph& g, double D);

VerifyResult verify_lb(const Graph& g, const LbWitness& w, double D);

using HopsetBuilder = std::function<hopsets::Hopset(const Graph&, uint64_t seed)>;

// Deterministic-given-seed replacement for the nondeterministic choices:
// good sets via find_cover_pair across levels (plus the all-vertices set,
// good 0-out by definition), paths from shortest-path trees. Preference:
// EccCover variants first, then the smallest-ell pair cover. Throws
// GenerationFailure when no variant assembles (expected when diameter > D).
UbCertificate generate_ub_certificate(const Graph& g, const CertParams& p, uint64_t seed,
                                      const HopsetBuilder& hopset_builder = {});

} // namespace diam::certs
