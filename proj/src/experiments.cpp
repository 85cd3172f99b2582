#include "diam/experiments.hpp"

#include <algorithm>
#include <cstdio>

#include "diam/certificates.hpp"
#include "diam/gadgets.hpp"
#include "diam/gen.hpp"
#include "diam/ov.hpp"
#include "diam/rng.hpp"

namespace diam::experiments {

GapTrialRow run_gap_trial(int k, int n_vec, int d, double p_one, bool planted, uint64_t seed,
                          uint64_t size_budget) {
    GapTrialRow row;
    row.k = k;
    row.n_vec = n_vec;
    row.d = d;
    row.seed = seed;
    row.planted = planted;

    ov::OvInstance inst = ov::gen_random(n_vec, d, p_one, seed);
    if (planted) inst = ov::plant(inst, k, derive_seed(seed, 1));
    row.ov_solution = ov::brute_force(inst, k).has_value();
    gadgets::GadgetGraph gg = gadgets::build_directed_gadget(inst, k, size_budget);
    row.diameter = exact_diameter(gg.graph);
    row.gap_ok = row.ov_solution ? !(row.diameter < 2 * k - 1)
                                 : (row.diameter <= static_cast<Weight>(k));
    return row;
}

GapExperimentResult run_gap_experiment(const GapExperimentConfig& cfg) {
    if (cfg.k_list.empty()) throw InputError("gap experiment: empty k list");
    if (cfg.n_list.empty()) throw InputError("gap experiment: empty n list");
    if (cfg.trials < 1) throw InputError("gap experiment: trials must be >= 1");

    struct Job {
        int k, n;
        uint64_t trial;
    };
    std::vector<Job> jobs;
    uint64_t t = 0;
    for (int k : cfg.k_list)
        for (int n : cfg.n_list)
            for (int i = 0; i < cfg.trials; ++i) jobs.push_back({k, n, t++});

    GapExperimentResult res;
    res.rows.resize(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (size_t j = 0; j < jobs.size(); ++j) {
        const Job& job = jobs[j];
        uint64_t trial_seed = derive_seed(cfg.seed, job.trial);
        Rng rng(trial_seed);
        int d = static_cast<int>(rng.range(cfg.d_min, cfg.d_max));
        double p_one = cfg.p_one_min + rng.unit() * (cfg.p_one_max - cfg.p_one_min);
        bool planted = (job.trial % 2) == 1;
        res.rows[j] =
            run_gap_trial(job.k, job.n, d, p_one, planted, trial_seed, cfg.size_budget);
    }
    std::sort(res.rows.begin(), res.rows.end(), [](const GapTrialRow& a, const GapTrialRow& b) {
        if (a.k != b.k) return a.k < b.k;
        if (a.n_vec != b.n_vec) return a.n_vec < b.n_vec;
        return a.seed < b.seed;
    });
    for (const auto& r : res.rows) res.violations += !r.gap_ok;
    return res;
}

std::string gap_csv(const GapExperimentResult& res) {
    std::string out = "k,n,d,seed,planted,ov_solution,diameter,gap_ok\n";
    char buf[160];
    for (const auto& r : res.rows) {
        char diam[40];
        if (r.diameter == kUnreachable)
            std::snprintf(diam, sizeof(diam), "inf");
        else
            std::snprintf(diam, sizeof(diam), "%lld", static_cast<long long>(r.diameter));
        std::snprintf(buf, sizeof(buf), "%d,%d,%d,%llu,%d,%d,%s,%d\n", r.k, r.n_vec, r.d,
                      static_cast<unsigned long long>(r.seed), r.planted ? 1 : 0,
                      r.ov_solution ? 1 : 0, diam, r.gap_ok ? 1 : 0);
        out += buf;
    }
    std::snprintf(buf, sizeof(buf), "summary,,,,,,,%d\n", res.violations == 0 ? 1 : 0);
    out += buf;
    return out;
}

CertTrialRow run_cert_trial(int n, int k, double epsilon, uint64_t seed) {
    CertTrialRow row;
    row.n = n;
    row.k = k;
    row.epsilon = epsilon;
    row.seed = seed;

    Rng rng(seed);
    int extra = static_cast<int>(rng.range(n / 2, 2 * n));
    Graph g = gen::random_strongly_connected_digraph(n, extra, 1, 1, derive_seed(seed, 1));
    row.m = g.edge_count();
    Weight diam = exact_diameter(g);
    row.D = diam;

    certs::CertParams p = certs::CertParams::for_graph(g, k, diam, epsilon);
    for (int round = 0; round < 2; ++round) {
        try {
            certs::UbCertificate cert =
                certs::generate_ub_certificate(g, p, derive_seed(seed, 2 + round));
            row.generated = true;
            row.variant = certs::to_string(cert.variant);
            row.accepted = certs::verify_ub(g, cert, p).accept;
            break;
        } catch (const GenerationFailure&) {
            row.reseeded = true; // one fresh seed, then give up
        }
    }
    return row;
}

CertExperimentResult run_cert_experiment(const CertExperimentConfig& cfg) {
    if (cfg.n_list.empty()) throw InputError("cert experiment: empty n list");
    struct Job {
        int n;
        uint64_t trial;
    };
    std::vector<Job> jobs;
    uint64_t t = 0;
    for (int n : cfg.n_list)
        for (int i = 0; i < cfg.trials; ++i) jobs.push_back({n, t++});

    CertExperimentResult res;
    res.rows.resize(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (size_t j = 0; j < jobs.size(); ++j)
        res.rows[j] = run_cert_trial(jobs[j].n, cfg.k, cfg.epsilon, derive_seed(cfg.seed, jobs[j].trial));
    std::sort(res.rows.begin(), res.rows.end(), [](const CertTrialRow& a, const CertTrialRow& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.seed < b.seed;
    });
    for (const auto& r : res.rows) res.accepted += r.accepted;
    return res;
}

std::string cert_csv(const CertExperimentResult& res) {
    std::string out = "n,m,seed,k,epsilon,D,variant,generated,accepted,reseeded\n";
    char buf[200];
    for (const auto& r : res.rows) {
        std::snprintf(buf, sizeof(buf), "%d,%d,%llu,%d,%g,%g,%s,%d,%d,%d\n", r.n, r.m,
                      static_cast<unsigned long long>(r.seed), r.k, r.epsilon, r.D,
                      r.variant.empty() ? "-" : r.variant.c_str(), r.generated ? 1 : 0,
                      r.accepted ? 1 : 0, r.reseeded ? 1 : 0);
        out += buf;
    }
    return out;
}

} // namespace diam::experiments
