#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include "bicomm/hwv.hpp"

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string g_binary;

struct CliResult {
    int code;
    std::string out;
};

// Runs the installed binary through the shell and captures one stream.
CliResult run_cli(const std::string& args, bool merge_stderr = false) {
    std::string cmd = g_binary + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/" + name;
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    REQUIRE(f.good());
    f << content;
    return path;
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

// Temporarily prefixes every run_cli invocation with an environment setting;
// restores the plain binary even when an assertion aborts the test case.
struct EnvPrefix {
    std::string saved;
    explicit EnvPrefix(const std::string& prefix) : saved(g_binary) {
        g_binary = prefix + saved;
    }
    void swap_to(const std::string& prefix) { g_binary = prefix + saved; }
    void reset() { g_binary = saved; }
    ~EnvPrefix() { g_binary = saved; }
};

} // namespace

TEST_CASE("hwv prints the canonical basis vectors") {
    CHECK(run_cli("hwv --partition 3").out == "y1*z1^2\ny1^2*z1\n");
    CHECK(run_cli("hwv --partition 1").out == "x1\n");

    // the balanced shape has a single vector; it must match the library's
    CliResult r = run_cli("hwv --partition 2,2");
    CHECK(r.code == 0);
    CHECK(r.out == bicomm::hwv_basis(bicomm::Partition(2, 2))[0].str() + "\n");

    CHECK(run_cli("hwv --partition 2,1,1").code == 2);
    CHECK(run_cli("hwv --partition 1,3").code == 2);
    CHECK(run_cli("hwv --partition 0").code == 2);
}

TEST_CASE("cocharacter tables render nonzero rows per degree") {
    CliResult r = run_cli("cocharacter --variety u --alpha 1,-1 --max-degree 4");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "cocharacter of U(1,-1) up to degree 4\n"
          "n=1: (1):1\n"
          "n=2: (2):1, (1,1):1\n"
          "n=3: (3):1, (2,1):2\n"
          "n=4: (4):1, (2,2):1\n");

    CliResult v = run_cli("cocharacter --variety v --beta 1,0 --max-degree 5");
    CHECK(v.code == 0);
    CHECK(v.out.find("n=5: (5):2, (4,1):1\n") != std::string::npos);

    CliResult b = run_cli("cocharacter --variety b --max-degree 3");
    CHECK(b.code == 0);
    CHECK(b.out.find("n=3: (3):2, (2,1):2\n") != std::string::npos);
}

TEST_CASE("cocharacter --expected confirms the closed forms") {
    CliResult r = run_cli("cocharacter --variety u --alpha 1,-1 --max-degree 5 --expected");
    CHECK(r.code == 0);
    CHECK(r.out.find("MISMATCH") == std::string::npos);
    CHECK(count_lines(r.out) == 6); // header + five degrees
    CHECK(r.out.find("n=4: (4):1, (2,2):1 | expected: (4):1, (2,2):1 | ok\n") !=
          std::string::npos);
    CHECK(r.out.find("n=5: (5):1 | expected: (5):1 | ok\n") != std::string::npos);

    CHECK(run_cli("cocharacter --variety v --beta 2,3 --max-degree 5 --expected").code == 0);
    CHECK(run_cli("cocharacter --variety b --max-degree 6 --expected").code == 0);
}

TEST_CASE("cocharacter emits machine-readable tables on request") {
    CliResult r = run_cli("cocharacter --variety b --max-degree 2 --format json");
    CHECK(r.code == 0);
    CHECK(r.out.front() == '[');
    CHECK(r.out.find("\"n\": 2") != std::string::npos);
    CHECK(r.out.find("\"rows\"") != std::string::npos);

    std::string path = "/tmp/bicomm_test_table.json";
    std::remove(path.c_str());
    CliResult w = run_cli("cocharacter --variety b --max-degree 2 --format json -o " + path);
    CHECK(w.code == 0);
    CHECK(w.out.empty());
    std::ifstream f(path);
    std::string file_content((std::istreambuf_iterator<char>(f)),
                             std::istreambuf_iterator<char>());
    CHECK(file_content == r.out);
    std::remove(path.c_str());
}

TEST_CASE("multiplicity answers single-shape queries") {
    std::string yz = write_temp(
        "bicomm_test_yz.json",
        "{\"label\": \"yz\", \"generators\": "
        "[{\"d\": 1, \"square\": [{\"coeff\": \"1\", \"y\": [1], \"z\": [1]}]}]}\n");
    std::string empty = write_temp("bicomm_test_empty.json", "{\"generators\": []}\n");

    CHECK(run_cli("multiplicity --spec-file " + yz + " --partition 3").out == "0\n");
    CHECK(run_cli("multiplicity --spec-file " + empty + " --partition 4,2").out == "3\n");
    CHECK(run_cli("multiplicity --spec-file " + empty + " --partition 1").out == "1\n");
    CHECK(run_cli("multiplicity --variety u --alpha 1,2 --partition 2,1").out == "2\n");
}

TEST_CASE("consequences prints one reduced basis element per line") {
    std::string yz = write_temp(
        "bicomm_test_yz.json",
        "{\"label\": \"yz\", \"generators\": "
        "[{\"d\": 1, \"square\": [{\"coeff\": \"1\", \"y\": [1], \"z\": [1]}]}]}\n");
    CliResult r = run_cli("consequences --spec-file " + yz + " --partition 3");
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 2);

    CHECK(run_cli("consequences --variety b --partition 3").out.empty());
    CHECK(run_cli("consequences --variety b --partition 1").code == 2);
}

TEST_CASE("malformed and invalid inputs exit with distinct codes") {
    std::string bad = write_temp("bicomm_test_bad.json", "{\n  \"generators\": [,]\n}\n");
    CliResult r = run_cli("multiplicity --spec-file " + bad + " --partition 3", true);
    CHECK(r.code == 2);
    CHECK(r.out.find("parse error at line 2") != std::string::npos);

    // structurally valid JSON, but the monomial has no z factor
    std::string badgen = write_temp(
        "bicomm_test_badgen.json",
        "{\"generators\": [{\"d\": 1, \"square\": [{\"coeff\": \"1\", \"y\": [2], \"z\": "
        "[0]}]}]}\n");
    CliResult g = run_cli("multiplicity --spec-file " + badgen + " --partition 3", true);
    CHECK(g.code == 3);
    CHECK(g.out.find("invalid input:") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("cocharacter --max-degree 3 --variety u").code == 2);
    CHECK(run_cli("cocharacter --max-degree 3 --variety u --alpha 0,0").code == 2);
    CHECK(run_cli("cocharacter --max-degree 3 --variety q").code == 2);
    CHECK(run_cli("cocharacter --max-degree 3").code == 2); // no source selected
    CHECK(run_cli("cocharacter --max-degree 3 --variety b --spec-file x.json").code == 2);
    CHECK(run_cli("cocharacter --max-degree 3 --variety b --alpha 1,2").code == 2);
    CHECK(run_cli("cocharacter --max-degree 3 --variety u --alpha 1").code == 2);
    CHECK(run_cli("cocharacter --max-degree 0 --variety b").code == 2);
    CHECK(run_cli("nonsense").code == 2);
}

TEST_CASE("the degree cap guards expensive requests") {
    EnvPrefix low("BICOMM_MAX_DEGREE_CAP=3 ");
    CliResult r = run_cli("cocharacter --variety b --max-degree 4", true);
    CHECK(r.code == 2);
    CHECK(r.out.find("degree cap") != std::string::npos);
    CHECK(run_cli("cocharacter --variety b --max-degree 3").code == 0);
    low.swap_to("BICOMM_MAX_DEGREE_CAP=oops ");
    CHECK(run_cli("cocharacter --variety b --max-degree 2").code == 2);
    low.reset();

    // the default cap still applies without the variable
    CHECK(run_cli("cocharacter --variety b --max-degree 13").code == 2);
}

TEST_CASE("lattice renders graphs and checks stored figures") {
    CliResult fig = run_cli("lattice --check-figure u-case5");
    CHECK(fig.code == 0);
    CHECK(fig.out.find("figure u-case5: PASS") != std::string::npos);

    // forcing the wrong parameter line onto a stored figure must fail
    CliResult bad = run_cli("lattice --check-figure u-case5 --variety u --alpha 1,2");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("MISMATCH") != std::string::npos);
    CHECK(bad.out.find("figure u-case5: FAIL") != std::string::npos);

    CliResult unknown = run_cli("lattice --check-figure wrong-id", true);
    CHECK(unknown.code == 2);
    CHECK(unknown.out.find("u-case1") != std::string::npos); // lists the known ids

    CliResult text = run_cli("lattice --variety b --max-degree 3");
    CHECK(text.code == 0);
    CHECK(text.out.find("graph B up to degree 3\n") == 0);
    CHECK(text.out.find("vertex x1") != std::string::npos);
    CHECK(text.out.find("edge x1 -> L((2),[1])") != std::string::npos);

    CliResult dot = run_cli("lattice --variety u --alpha 1,2 --max-degree 4 --format dot");
    CHECK(dot.code == 0);
    CHECK(dot.out.find("digraph \"U(1,2)\"") == 0);

    // continuation chains show as dotted ellipsis nodes
    CliResult deep = run_cli("lattice --variety v --beta 1,-1 --max-degree 6 --format dot");
    CHECK(deep.code == 0);
    CHECK(deep.out.find(":more") != std::string::npos);

    CliResult json = run_cli("lattice --variety b --max-degree 3 --format json");
    CHECK(json.code == 0);
    CHECK(json.out.find("\"ambient\": \"B\"") != std::string::npos);

    // the identity-free pencil stops being displayable past degree 3
    CliResult refuse = run_cli("lattice --variety b --max-degree 4", true);
    CHECK(refuse.code == 3);
    CHECK(refuse.out.find("invalid input:") != std::string::npos);

    CHECK(run_cli("lattice --variety b --max-degree 1").code == 2);
}

TEST_CASE("repeated runs emit identical bytes") {
    const std::string cmds[] = {
        "lattice --variety v --beta 1,0 --max-degree 5 --format dot",
        "cocharacter --variety u --alpha 2,3 --max-degree 5",
        "verify-paper --scope eq-1",
    };
    for (const std::string& c : cmds) {
        CliResult a = run_cli(c);
        CliResult b = run_cli(c);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("the verification driver reports per-claim results") {
    CliResult list = run_cli("verify-paper --list");
    CHECK(list.code == 0);
    CHECK(count_lines(list.out) == 27);

    CliResult one = run_cli("verify-paper --scope eq-1");
    CHECK(one.code == 0);
    CHECK(one.out.find("[PASS] eq-1\n") == 0);
    CHECK(one.out.find("passed 1/1 claims\n") != std::string::npos);

    CliResult two = run_cli("verify-paper --scope codim --scope prop-3.2");
    CHECK(two.code == 0);
    CHECK(two.out.find("passed 2/2 claims\n") != std::string::npos);

    // timings go to stderr so stdout stays byte-stable
    CliResult merged = run_cli("verify-paper --scope eq-1", true);
    CHECK(merged.out.find("eq-1: ") != std::string::npos);

    CHECK(run_cli("verify-paper --scope no-such-claim", true).code == 2);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <path-to-cli-binary>\n", argv[0]);
        return 2;
    }
    g_binary = argv[1];

    doctest::Context ctx;
    ctx.applyCommandLine(1, argv); // keep the binary path away from doctest
    return ctx.run();
}
