// diamlab: command-line workbench around the diam library. Every command
// prints one JSON record on stdout; diagnostics go to stderr. Exit code 0
// means the command's postcondition held (for verify: ACCEPT).

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "diam/approx.hpp"
#include "diam/certificates.hpp"
#include "diam/experiments.hpp"
#include "diam/gadgets.hpp"
#include "diam/gen.hpp"
#include "diam/graph.hpp"
#include "diam/hopsets.hpp"
#include "diam/ov.hpp"

using json = nlohmann::json;
using namespace diam;

namespace {

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json weight_json(Weight w) {
    if (w == kUnreachable) return "unreachable";
    return w;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write file: " + path);
    f << content;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

struct HopsetChoice {
    std::string method = "exhaustive"; // or "a1"
    double delta = 0.5;
    double epsilon = 0.3;
    uint64_t size_budget = kDefaultSizeBudget;
};

certs::HopsetBuilder make_builder(const HopsetChoice& c) {
    if (c.method == "a1") {
        double delta = c.delta, eps = c.epsilon;
        return [delta, eps](const Graph& g, uint64_t seed) {
            return hopsets::build_undirected_hopset(g, delta, eps, seed);
        };
    }
    uint64_t budget = c.size_budget;
    return [budget](const Graph& g, uint64_t) { return hopsets::exhaustive_hopset(g, budget); };
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale workbench for diameter gap problems: OV gadgets, "
                 "certifying diameter algorithms, hopsets, and baseline approximations"};
    app.require_subcommand(1);

    uint64_t size_budget = kDefaultSizeBudget;
    app.add_option("--size-budget", size_budget,
                   "vertex+edge budget for gadget/hopset constructions")
        ->envname("DIAMLAB_SIZE_BUDGET");

    // gen-ov
    auto* gen_ov = app.add_subcommand("gen-ov", "generate a random OV instance");
    int go_n = 8, go_d = 8;
    double go_p = 0.5;
    uint64_t go_seed = 1;
    std::string go_out;
    gen_ov->add_option("-n,--vectors", go_n, "number of vectors")->required();
    gen_ov->add_option("-d,--dim", go_d, "dimension (<= 64)")->required();
    gen_ov->add_option("-p,--p-one", go_p, "probability of a 1 bit");
    gen_ov->add_option("--seed", go_seed, "random seed");
    gen_ov->add_option("-o,--out", go_out, "output path")->required();

    // solve-ov
    auto* solve_ov = app.add_subcommand("solve-ov", "brute-force a Single-Set k-OV instance");
    std::string so_path;
    int so_k = 3;
    solve_ov->add_option("instance", so_path, "OV instance file")->required();
    solve_ov->add_option("-k", so_k, "tuple size")->required();

    // reduce
    auto* reduce = app.add_subcommand("reduce", "build a hardness gadget from an OV instance");
    std::string rd_path, rd_variant = "directed", rd_prefix;
    int rd_k = 3;
    uint64_t rd_seed_unused = 0;
    (void)rd_seed_unused;
    reduce->add_option("instance", rd_path, "OV instance file")->required();
    reduce->add_option("-k", rd_k, "layer parameter (directed variant)");
    reduce->add_option("--variant", rd_variant, "directed|undirected")
        ->check(CLI::IsMember({"directed", "undirected"}));
    reduce->add_option("-o,--out-prefix", rd_prefix, "writes <prefix>.graph and <prefix>.map")
        ->required();

    // diameter
    auto* diameter = app.add_subcommand("diameter", "exact diameter or 2-approximation");
    std::string dm_path, dm_mode = "exact";
    diameter->add_option("graph", dm_path, "graph file")->required();
    diameter->add_option("--mode", dm_mode, "exact|two-approx")
        ->check(CLI::IsMember({"exact", "two-approx"}));

    // certify
    auto* certify = app.add_subcommand("certify", "generate an upper-bound certificate");
    std::string cf_graph, cf_out, cf_mode = "unweighted";
    HopsetChoice cf_hopset;
    double cf_D = 0.0, cf_eps = 0.5;
    int cf_k = 3;
    uint64_t cf_seed = 1;
    certify->add_option("graph", cf_graph, "graph file")->required();
    certify->add_option("-D", cf_D, "gap threshold D")->required();
    certify->add_option("-k", cf_k, "level parameter k >= 2");
    certify->add_option("--epsilon", cf_eps, "gap slack epsilon");
    certify->add_option("--mode", cf_mode, "unweighted|hopset")
        ->check(CLI::IsMember({"unweighted", "hopset"}));
    certify->add_option("--hopset-method", cf_hopset.method, "a1|exhaustive (hopset mode)")
        ->check(CLI::IsMember({"a1", "exhaustive"}));
    certify->add_option("--delta", cf_hopset.delta, "a1 hopset delta");
    certify->add_option("--hopset-epsilon", cf_hopset.epsilon, "a1 hopset epsilon");
    certify->add_option("--seed", cf_seed, "random seed");
    certify->add_option("-o,--out", cf_out, "certificate output path")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "verify a certificate or lb witness");
    std::string vf_graph, vf_cert;
    verify->add_option("graph", vf_graph, "graph file")->required();
    verify->add_option("certificate", vf_cert, "certificate JSON file")->required();

    // hopset-build
    auto* hb = app.add_subcommand("hopset-build", "build an additive hopset");
    std::string hb_graph, hb_out, hb_method = "a1";
    double hb_delta = 0.5, hb_eps = 0.3;
    uint64_t hb_seed = 1;
    hb->add_option("graph", hb_graph, "graph file")->required();
    hb->add_option("--method", hb_method, "a1|exhaustive")
        ->check(CLI::IsMember({"a1", "exhaustive"}));
    hb->add_option("--delta", hb_delta, "a1 delta in (0,1)");
    hb->add_option("--epsilon", hb_eps, "target additive epsilon");
    hb->add_option("--seed", hb_seed, "random seed");
    hb->add_option("-o,--out", hb_out, "hopset output path")->required();

    // hopset-verify
    auto* hv = app.add_subcommand("hopset-verify", "verify hopset guarantees");
    std::string hv_graph, hv_hopset;
    int hv_beta = 0;
    double hv_eps = -1.0;
    hv->add_option("graph", hv_graph, "graph file")->required();
    hv->add_option("hopset", hv_hopset, "hopset file")->required();
    hv->add_option("--beta", hv_beta, "hop bound (default: claimed)");
    hv->add_option("--epsilon", hv_eps, "additive epsilon (default: claimed)");

    // experiment-gap
    auto* eg = app.add_subcommand("experiment-gap", "gadget diameter-gap sweep");
    std::vector<int> eg_k, eg_n;
    int eg_trials = 10;
    uint64_t eg_seed = 1;
    std::string eg_out;
    eg->add_option("--k-list", eg_k, "k values")->required()->delimiter(',');
    eg->add_option("--n-list", eg_n, "vector counts")->required()->delimiter(',');
    eg->add_option("--trials", eg_trials, "trials per (k, n)");
    eg->add_option("--seed", eg_seed, "master seed");
    eg->add_option("-o,--out", eg_out, "CSV output path")->required();

    // experiment-cert
    auto* ec = app.add_subcommand("experiment-cert", "certifier completeness sweep");
    std::vector<int> ec_n;
    int ec_trials = 10, ec_k = 3;
    double ec_eps = 0.5;
    uint64_t ec_seed = 1;
    std::string ec_out;
    ec->add_option("--n-list", ec_n, "graph sizes")->required()->delimiter(',');
    ec->add_option("--trials", ec_trials, "trials per size");
    ec->add_option("-k", ec_k, "level parameter");
    ec->add_option("--epsilon", ec_eps, "gap slack epsilon");
    ec->add_option("--seed", ec_seed, "master seed");
    ec->add_option("-o,--out", ec_out, "CSV output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_ov->parsed()) {
            ov::OvInstance inst = ov::gen_random(go_n, go_d, go_p, go_seed);
            inst.save(go_out);
            emit({{"command", "gen-ov"},
                  {"n", go_n},
                  {"d", go_d},
                  {"p_one", go_p},
                  {"seed", go_seed},
                  {"path", go_out}});
            return 0;
        }
        if (solve_ov->parsed()) {
            ov::OvInstance inst = ov::OvInstance::load(so_path);
            auto w = ov::brute_force(inst, so_k);
            json rec{{"command", "solve-ov"}, {"k", so_k}, {"n", inst.size()}, {"d", inst.d}};
            rec["witness"] = w ? json(*w) : json(nullptr);
            emit(rec);
            return 0;
        }
        if (reduce->parsed()) {
            ov::OvInstance inst = ov::OvInstance::load(rd_path);
            gadgets::GadgetGraph gg;
            if (rd_variant == "directed") {
                gg = gadgets::build_directed_gadget(inst, rd_k, size_budget);
            } else {
                if (reduce->count("-k"))
                    std::cerr << "warning: undirected variant is k=3 only, ignoring -k\n";
                gg = gadgets::build_undirected_gadget(inst, size_budget);
            }
            gg.save(rd_prefix + ".graph", rd_prefix + ".map");
            emit({{"command", "reduce"},
                  {"variant", rd_variant},
                  {"k", rd_variant == "directed" ? json(rd_k) : json(nullptr)},
                  {"vertices", gg.graph.vertex_count()},
                  {"edges", gg.graph.edge_count()},
                  {"graph", rd_prefix + ".graph"},
                  {"mapping", rd_prefix + ".map"}});
            return 0;
        }
        if (diameter->parsed()) {
            Graph g = Graph::load(dm_path);
            auto start = std::chrono::steady_clock::now();
            if (dm_mode == "exact") {
                Weight d = exact_diameter(g);
                emit({{"command", "diameter"},
                      {"mode", "exact"},
                      {"diameter", weight_json(d)},
                      {"runtime_ms", elapsed_ms(start)}});
                return 0;
            }
            approx::ApproxResult r = approx::two_approx(g);
            emit({{"command", "diameter"},
                  {"mode", "two_approx"},
                  {"lower", r.lower},
                  {"upper", r.upper},
                  {"runtime_ms", elapsed_ms(start)}});
            return 0;
        }
        if (certify->parsed()) {
            Graph g = Graph::load(cf_graph);
            certs::CertMode mode = certs::cert_mode_from_string(cf_mode);
            cf_hopset.size_budget = size_budget;
            certs::HopsetBuilder builder;
            double beta_param = 1.0;
            if (mode == certs::CertMode::Hopset) {
                builder = make_builder(cf_hopset);
                beta_param = cf_hopset.method == "a1"
                                 ? hopsets::exported_beta(cf_hopset.delta, cf_hopset.epsilon)
                                 : 1.0;
            }
            certs::CertParams p =
                certs::CertParams::for_graph(g, cf_k, cf_D, cf_eps, mode, beta_param);
            try {
                certs::UbCertificate cert = certs::generate_ub_certificate(g, p, cf_seed, builder);
                cert.save(cf_out);
                emit({{"command", "certify"},
                      {"generated", true},
                      {"variant", certs::to_string(cert.variant)},
                      {"path", cf_out}});
                return 0;
            } catch (const GenerationFailure& e) {
                emit({{"command", "certify"}, {"generated", false}, {"reason", e.what()}});
                std::cerr << "generation failed: " << e.what() << "\n";
                return 1;
            }
        }
        if (verify->parsed()) {
            Graph g = Graph::load(vf_graph);
            std::ifstream f(vf_cert);
            if (!f) throw InputError("cannot open certificate file: " + vf_cert);
            std::stringstream ss;
            ss << f.rdbuf();
            const std::string text = ss.str();
            certs::VerifyResult res;
            std::string kind;
            if (text.find("\"lb_witness\"") != std::string::npos) {
                auto [w, d] = certs::LbWitness::from_json(text);
                res = certs::verify_lb(g, w, d);
                kind = "lb_witness";
            } else {
                certs::UbCertificate cert = certs::UbCertificate::from_json(text);
                res = certs::verify_ub(g, cert, cert.params);
                kind = certs::to_string(cert.variant);
            }
            emit({{"command", "verify"},
                  {"certificate", kind},
                  {"accept", res.accept},
                  {"reason", res.accept ? json(nullptr) : json(res.reason)}});
            return res.accept ? 0 : 1;
        }
        if (hb->parsed()) {
            Graph g = Graph::load(hb_graph);
            hopsets::Hopset h;
            if (hb_method == "a1")
                h = hopsets::build_undirected_hopset(g, hb_delta, hb_eps, hb_seed);
            else
                h = hopsets::exhaustive_hopset(g, size_budget);
            h.save(hb_out);
            emit({{"command", "hopset-build"},
                  {"method", hb_method},
                  {"shortcuts", h.shortcuts.size()},
                  {"beta", h.claimed_beta},
                  {"epsilon", h.claimed_epsilon},
                  {"path", hb_out}});
            return 0;
        }
        if (hv->parsed()) {
            Graph g = Graph::load(hv_graph);
            hopsets::Hopset h = hopsets::Hopset::load(hv_hopset);
            int beta = hv_beta > 0 ? hv_beta : h.claimed_beta;
            double eps = hv_eps >= 0.0 ? hv_eps : h.claimed_epsilon;
            bool preserved = hopsets::verify_distance_preservation(g, h);
            bool hopbound = preserved && hopsets::verify_additive_hopbound(g, h, beta, eps);
            emit({{"command", "hopset-verify"},
                  {"beta", beta},
                  {"epsilon", eps},
                  {"distance_preserving", preserved},
                  {"hopbound_ok", hopbound}});
            return (preserved && hopbound) ? 0 : 1;
        }
        if (eg->parsed()) {
            experiments::GapExperimentConfig cfg;
            cfg.k_list = eg_k;
            cfg.n_list = eg_n;
            cfg.trials = eg_trials;
            cfg.seed = eg_seed;
            cfg.size_budget = size_budget;
            auto res = experiments::run_gap_experiment(cfg);
            write_file(eg_out, experiments::gap_csv(res));
            emit({{"command", "experiment-gap"},
                  {"rows", res.rows.size()},
                  {"violations", res.violations},
                  {"path", eg_out}});
            return res.violations == 0 ? 0 : 1;
        }
        if (ec->parsed()) {
            experiments::CertExperimentConfig cfg;
            cfg.n_list = ec_n;
            cfg.trials = ec_trials;
            cfg.k = ec_k;
            cfg.epsilon = ec_eps;
            cfg.seed = ec_seed;
            auto res = experiments::run_cert_experiment(cfg);
            write_file(ec_out, experiments::cert_csv(res));
            emit({{"command", "experiment-cert"},
                  {"rows", res.rows.size()},
                  {"accepted", res.accepted},
                  {"path", ec_out}});
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
