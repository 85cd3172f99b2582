// End-to-end checks of the diamlab binary: file outputs, exit codes, and
// determinism. The binary path arrives as argv[1] (wired up by CMake).
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_bin;

int run(const std::string& args) {
    std::string cmd = g_bin + " " + args + " >/dev/null 2>/dev/null";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string tmp(const std::string& name) { return "/tmp/diamlab_cli_" + name; }

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-diamlab>\n");
        return 1;
    }
    g_bin = argv[1];
    doctest::Context ctx;
    return ctx.run();
}

TEST_CASE("gen-ov writes the expected bytes and is seed-deterministic") {
    REQUIRE(run("gen-ov -n 4 -d 4 -p 1.0 --seed 9 -o " + tmp("a.ov")) == 0);
    CHECK(slurp(tmp("a.ov")) == "4 4\n1111\n1111\n1111\n1111\n");
    REQUIRE(run("gen-ov -n 6 -d 8 -p 0.5 --seed 3 -o " + tmp("b.ov")) == 0);
    REQUIRE(run("gen-ov -n 6 -d 8 -p 0.5 --seed 3 -o " + tmp("c.ov")) == 0);
    CHECK(slurp(tmp("b.ov")) == slurp(tmp("c.ov")));
}

TEST_CASE("reduce + diameter pipeline reproduces the gap") {
    // all-ones: no OV solution, directed gadget diameter <= 3
    REQUIRE(run("gen-ov -n 4 -d 4 -p 1.0 --seed 1 -o " + tmp("ones.ov")) == 0);
    REQUIRE(run("reduce " + tmp("ones.ov") + " -k 3 -o " + tmp("g1")) == 0);
    REQUIRE(run("diameter " + tmp("g1") + ".graph --mode exact") == 0);

    // zero vector: a solution exists, diameter >= 5 (or unreachable)
    std::ofstream f(tmp("zero.ov"));
    f << "3 4\n1111\n0000\n1111\n";
    f.close();
    REQUIRE(run("reduce " + tmp("zero.ov") + " -k 3 -o " + tmp("g2")) == 0);
    REQUIRE(run("diameter " + tmp("g2") + ".graph --mode two-approx") == 2); // disconnected

    // undirected variant ignores k
    REQUIRE(run("reduce " + tmp("ones.ov") + " --variant undirected -k 5 -o " + tmp("g3")) == 0);
}

TEST_CASE("certify/verify round trip through files") {
    REQUIRE(run("gen-ov -n 4 -d 4 -p 1.0 --seed 1 -o " + tmp("i.ov")) == 0);
    REQUIRE(run("reduce " + tmp("i.ov") + " -k 3 -o " + tmp("cg")) == 0);
    REQUIRE(run("certify " + tmp("cg") + ".graph -D 3 -k 3 --epsilon 0.5 --seed 7 -o " +
                tmp("cert.json")) == 0);
    CHECK(run("verify " + tmp("cg") + ".graph " + tmp("cert.json")) == 0);
    // verifying against a different graph must reject (exit 1), not crash
    REQUIRE(run("reduce " + tmp("i.ov") + " --variant undirected -o " + tmp("other")) == 0);
    CHECK(run("verify " + tmp("other") + ".graph " + tmp("cert.json")) == 1);
}

TEST_CASE("hopset-mode certify and lb-witness verify") {
    // strongly connected weighted digraph: 4-cycle with a chord
    std::ofstream f(tmp("d.graph"));
    f << "directed 4 5\n0 1 2\n1 2 1\n2 3 3\n3 0 1\n1 3 2\n";
    f.close();
    // exact diameter is 6 (path 2 -> 3 -> 0 -> 1)
    REQUIRE(run("certify " + tmp("d.graph") +
                " -D 6 -k 2 --epsilon 0.5 --mode hopset --hopset-method exhaustive --seed 3 -o " +
                tmp("hcert.json")) == 0);
    CHECK(run("verify " + tmp("d.graph") + " " + tmp("hcert.json")) == 0);

    std::ofstream w(tmp("lb.json"));
    w << R"({"D":5.0,"direction":"out","type":"lb_witness","vertex":2})";
    w.close();
    CHECK(run("verify " + tmp("d.graph") + " " + tmp("lb.json")) == 0); // ecc_out(2) = 6 > 5
    std::ofstream w2(tmp("lb2.json"));
    w2 << R"({"D":6.0,"direction":"out","type":"lb_witness","vertex":2})";
    w2.close();
    CHECK(run("verify " + tmp("d.graph") + " " + tmp("lb2.json")) == 1); // 6 > 6 fails
}

TEST_CASE("hopset-build and hopset-verify") {
    // small undirected weighted graph via the library format
    std::ofstream f(tmp("w.graph"));
    f << "undirected 5 6\n0 1 2\n1 2 3\n2 3 1\n3 4 2\n4 0 5\n1 3 4\n";
    f.close();
    REQUIRE(run("hopset-build " + tmp("w.graph") + " --method a1 --delta 0.5 --epsilon 0.3 "
                "--seed 2 -o " + tmp("h.txt")) == 0);
    CHECK(run("hopset-verify " + tmp("w.graph") + " " + tmp("h.txt")) == 0);
}

TEST_CASE("experiment-gap writes CSV and reports zero violations") {
    REQUIRE(run("experiment-gap --k-list 3 --n-list 3 --trials 4 --seed 11 -o " +
                tmp("gap.csv")) == 0);
    std::string csv = slurp(tmp("gap.csv"));
    CHECK(csv.rfind("k,n,d,seed,planted,ov_solution,diameter,gap_ok\n", 0) == 0);
    CHECK(csv.find("summary") != std::string::npos);
}

TEST_CASE("missing required flags are usage errors") {
    CHECK(run("experiment-gap --n-list 3 -o " + tmp("x.csv")) != 0); // no k-list
    CHECK(run("gen-ov -n 4 -o " + tmp("x.ov")) != 0);                // no dimension
}

TEST_CASE("size budget flag refuses oversized gadgets") {
    REQUIRE(run("gen-ov -n 6 -d 6 -p 0.5 --seed 1 -o " + tmp("big.ov")) == 0);
    CHECK(run("--size-budget 10 reduce " + tmp("big.ov") + " -k 3 -o " + tmp("big")) == 2);
}
