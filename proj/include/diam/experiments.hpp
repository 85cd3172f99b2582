#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diam/graph.hpp"

namespace diam::experiments {

// One gadget-gap trial: generate an OV instance (optionally planted), build
// the directed gadget, and compare the exact diameter against the brute-force
// OV answer.
struct GapTrialRow {
    int k = 0;
    int n_vec = 0;
    int d = 0;
    uint64_t seed = 0;
    bool planted = false;
    bool ov_solution = false;
    Weight diameter = 0.0; // kUnreachable prints as "inf"
    bool gap_ok = false;
};

struct GapExperimentConfig {
    std::vector<int> k_list;
    std::vector<int> n_list;
    int trials = 10; // per (k, n) combination
    uint64_t seed = 1;
    int d_min = 2, d_max = 8;
    double p_one_min = 0.3, p_one_max = 0.7;
    uint64_t size_budget = kDefaultSizeBudget;
};

struct GapExperimentResult {
    std::vector<GapTrialRow> rows;
    int violations = 0;
};

GapTrialRow run_gap_trial(int k, int n_vec, int d, double p_one, bool planted, uint64_t seed,
                          uint64_t size_budget);

// Trials run in parallel; per-trial seeds are derived from the master seed and
// the trial index, and rows are sorted before return, so parallel and serial
// runs produce identical output.
GapExperimentResult run_gap_experiment(const GapExperimentConfig& cfg);

// CSV schema: k,n,d,seed,planted,ov_solution,diameter,gap_ok; one trailing
// summary row with k = "summary" and gap_ok = 1 iff there were no violations.
std::string gap_csv(const GapExperimentResult& res);

// One certifier-completeness trial on a random strongly connected unweighted
// digraph with D set to the exact diameter.
struct CertTrialRow {
    int n = 0;
    int m = 0;
    uint64_t seed = 0;
    int k = 0;
    double epsilon = 0.0;
    double D = 0.0;
    std::string variant; // empty when generation failed
    bool generated = false;
    bool accepted = false;
    bool reseeded = false;
};

struct CertExperimentConfig {
    std::vector<int> n_list;
    int trials = 10; // per n
    int k = 3;
    double epsilon = 0.5;
    uint64_t seed = 1;
};

struct CertExperimentResult {
    std::vector<CertTrialRow> rows;
    int accepted = 0;
};

CertTrialRow run_cert_trial(int n, int k, double epsilon, uint64_t seed);
CertExperimentResult run_cert_experiment(const CertExperimentConfig& cfg);
std::string cert_csv(const CertExperimentResult& res);

} // namespace diam::experiments
