#include "CLI11.hpp"

#include "bicomm/figures.hpp"
#include "bicomm/io.hpp"
#include "bicomm/lattice.hpp"
#include "bicomm/varieties.hpp"
#include "bicomm/verify.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace bicomm;

namespace {

// Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
// 3 invariant violation in the input data.
constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kBadInput = 3;

int degree_cap() {
    const char* env = std::getenv("BICOMM_MAX_DEGREE_CAP");
    if (!env || !*env) return 12;
    try {
        std::size_t pos = 0;
        int cap = std::stoi(env, &pos);
        if (pos == std::string(env).size() && cap >= 1) return cap;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("BICOMM_MAX_DEGREE_CAP must be a positive integer");
}

void check_capped(int n, const char* what) {
    int cap = degree_cap();
    if (n > cap)
        throw std::invalid_argument(std::string(what) + " " + std::to_string(n) +
                                    " exceeds the degree cap " + std::to_string(cap) +
                                    " (raise BICOMM_MAX_DEGREE_CAP to override)");
}

std::pair<Rational, Rational> parse_pair(const std::string& s, const char* flag) {
    auto comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
        throw std::invalid_argument(std::string(flag) + ": expected two comma-separated values");
    try {
        return {Rational::from_string(s.substr(0, comma)),
                Rational::from_string(s.substr(comma + 1))};
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(flag) + ": " + e.what());
    }
}

// Options every computing subcommand shares: where the variety comes from.
struct SpecSource {
    std::string variety;   // "b", "u", or "v"
    std::string alpha;     // "a1,a2" for u
    std::string beta;      // "b1,b2" for v
    std::string spec_file; // JSON file path

    void attach(CLI::App* cmd) {
        cmd->add_option("--variety", variety, "built-in variety: b (free), u, or v");
        cmd->add_option("--alpha", alpha, "coefficient pair a1,a2 for --variety u");
        cmd->add_option("--beta", beta, "coefficient pair b1,b2 for --variety v");
        cmd->add_option("--spec-file", spec_file, "JSON file with identity generators");
    }

    bool given() const { return !variety.empty() || !spec_file.empty(); }

    VarietySpec resolve() const {
        if (!spec_file.empty()) {
            if (!variety.empty())
                throw std::invalid_argument("--variety and --spec-file are mutually exclusive");
            if (!alpha.empty() || !beta.empty())
                throw std::invalid_argument("--alpha/--beta do not apply to --spec-file");
            return spec_from_json_file(spec_file);
        }
        if (variety == "b") {
            if (!alpha.empty() || !beta.empty())
                throw std::invalid_argument("--alpha/--beta do not apply to --variety b");
            return free_spec();
        }
        if (variety == "u") {
            if (alpha.empty()) throw std::invalid_argument("--variety u requires --alpha a1,a2");
            if (!beta.empty()) throw std::invalid_argument("--beta does not apply to --variety u");
            auto [a1, a2] = parse_pair(alpha, "--alpha");
            if (a1.is_zero() && a2.is_zero())
                throw std::invalid_argument("--alpha: the zero pair defines no identity");
            return make_u(a1, a2);
        }
        if (variety == "v") {
            if (beta.empty()) throw std::invalid_argument("--variety v requires --beta b1,b2");
            if (!alpha.empty()) throw std::invalid_argument("--alpha does not apply to --variety v");
            auto [b1, b2] = parse_pair(beta, "--beta");
            if (b1.is_zero() && b2.is_zero())
                throw std::invalid_argument("--beta: the zero pair defines no identity");
            return make_v(b1, b2);
        }
        if (variety.empty())
            throw std::invalid_argument("select a variety with --variety b|u|v or --spec-file");
        throw std::invalid_argument("unknown variety '" + variety + "' (expected b, u, or v)");
    }
};

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

// Nonzero rows of a cocharacter table, e.g. "(4):1, (2,2):1"; "none" when the
// whole degree vanishes.
std::string nonzero_rows(const MultiplicityTable& t) {
    std::string out;
    for (const auto& [lam, m] : t.rows) {
        if (m == 0) continue;
        if (!out.empty()) out += ", ";
        out += lam.str() + ":" + std::to_string(m);
    }
    return out.empty() ? "none" : out;
}

int run_hwv(const std::string& partition) {
    Partition lam = Partition::parse(partition);
    check_capped(lam.n(), "--partition degree");
    if (lam.n() == 1) {
        std::cout << "x1\n";
        return kOk;
    }
    for (const Poly& p : hwv_basis(lam)) std::cout << p.str() << "\n";
    return kOk;
}

int run_cocharacter(const SpecSource& src, int max_degree, bool expected,
                    const std::string& format, const std::string& out_path) {
    if (max_degree < 1) throw std::invalid_argument("--max-degree must be at least 1");
    check_capped(max_degree, "--max-degree");
    VarietySpec spec = src.resolve();

    std::vector<MultiplicityTable> engine;
    for (int n = 1; n <= max_degree; ++n) engine.push_back(cocharacter(spec, n));

    std::vector<MultiplicityTable> closed;
    if (expected) {
        if (src.variety == "b") {
            for (int n = 1; n <= max_degree; ++n) closed.push_back(expected_cocharacter_free(n));
        } else if (src.variety == "u") {
            AlphaCase c = classify_alpha(spec.p1, spec.p2);
            for (int n = 1; n <= max_degree; ++n) closed.push_back(expected_cocharacter_u(c, n));
        } else if (src.variety == "v") {
            BetaCase c = classify_beta(spec.p1, spec.p2);
            for (int n = 1; n <= max_degree; ++n) closed.push_back(expected_cocharacter_v(c, n));
        } else {
            throw std::invalid_argument("--expected needs a built-in variety (b, u, or v)");
        }
    }

    bool all_match = true;
    std::ostringstream os;
    if (format == "json") {
        os << tables_to_json(engine) << "\n";
        for (std::size_t i = 0; i < closed.size(); ++i)
            all_match = all_match && engine[i] == closed[i];
    } else {
        os << "cocharacter of " << spec.label << " up to degree " << max_degree << "\n";
        for (int n = 1; n <= max_degree; ++n) {
            os << "n=" << n << ": " << nonzero_rows(engine[n - 1]);
            if (expected) {
                bool match = engine[n - 1] == closed[n - 1];
                all_match = all_match && match;
                os << " | expected: " << nonzero_rows(closed[n - 1])
                   << (match ? " | ok" : " | MISMATCH");
            }
            os << "\n";
        }
    }
    emit(out_path, os.str());
    return all_match ? kOk : kMismatch;
}

int run_multiplicity(const SpecSource& src, const std::string& partition) {
    Partition lam = Partition::parse(partition);
    check_capped(lam.n(), "--partition degree");
    VarietySpec spec = src.resolve();
    std::cout << multiplicity(spec, lam) << "\n";
    return kOk;
}

int run_consequences(const SpecSource& src, const std::string& partition,
                     const std::string& format, const std::string& out_path) {
    Partition lam = Partition::parse(partition);
    if (lam.n() < 2)
        throw std::invalid_argument("--partition: consequence spans live in degree 2 and up");
    check_capped(lam.n(), "--partition degree");
    VarietySpec spec = src.resolve();
    std::vector<Poly> span = consequence_span(spec, lam);
    std::ostringstream os;
    if (format == "json") {
        os << polys_to_json(span) << "\n";
    } else {
        for (const Poly& p : span) os << p.str() << "\n";
    }
    emit(out_path, os.str());
    return kOk;
}

std::string render_graph_text(const ConsequenceGraph& g) {
    std::ostringstream os;
    os << "graph " << g.ambient << " up to degree " << g.max_degree << "\n";
    for (const IdentityVertex& v : g.vertices)
        os << "vertex " << v.name << "  degree " << v.degree << "  " << v.line_tag() << "\n";
    for (const auto& [a, b] : g.edges)
        os << "edge " << g.vertices[a].name << " -> " << g.vertices[b].name << "\n";
    for (const auto& [a, b] : g.segments)
        os << "segment " << g.vertices[a].name << " -- " << g.vertices[b].name << "\n";
    for (int i : g.continuations) os << "continues " << g.vertices[i].name << "\n";
    for (const std::string& s : g.sink_names()) os << "sink " << s << "\n";
    return os.str();
}

int run_lattice(const SpecSource& src, int max_degree, const std::string& format,
                const std::string& figure_id, std::uint64_t seed, const std::string& out_path) {
    if (!figure_id.empty()) {
        const FigureGolden* fig = find_figure(figure_id);
        if (!fig) {
            std::string known;
            for (const FigureGolden& f : figure_goldens()) {
                if (!known.empty()) known += ", ";
                known += f.id;
            }
            throw std::invalid_argument("unknown figure id '" + figure_id + "' (known: " + known +
                                        ")");
        }
        int depth = max_degree > 0 ? max_degree : fig->depth;
        check_capped(depth, "--max-degree");
        VarietySpec spec = src.given() ? src.resolve() : figure_spec(figure_id);
        FigureCheck fc = compare_graph(*fig, build_graph(spec, depth, seed));
        std::cout << fc.report;
        std::cout << "figure " << figure_id << ": " << (fc.pass ? "PASS" : "FAIL") << "\n";
        return fc.pass ? kOk : kMismatch;
    }

    if (max_degree < 2) throw std::invalid_argument("--max-degree must be at least 2");
    check_capped(max_degree, "--max-degree");
    ConsequenceGraph g = build_graph(src.resolve(), max_degree, seed);
    std::string text;
    if (format == "dot")
        text = to_dot(g);
    else if (format == "json")
        text = graph_to_json(g) + "\n";
    else
        text = render_graph_text(g);
    emit(out_path, text);
    return kOk;
}

int run_verify(const std::vector<std::string>& scopes, bool list, std::uint64_t seed) {
    if (list) {
        for (const std::string& id : claim_ids()) std::cout << id << "\n";
        return kOk;
    }
    std::vector<ClaimResult> results = run_claims(scopes, seed);
    int passed = 0;
    double total = 0.0;
    for (const ClaimResult& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << "\n" << r.detail;
        std::fprintf(stderr, "%s: %.2fs\n", r.id.c_str(), r.seconds);
        passed += r.pass ? 1 : 0;
        total += r.seconds;
    }
    std::cout << "passed " << passed << "/" << results.size() << " claims\n";
    std::fprintf(stderr, "total: %.2fs\n", total);
    return passed == static_cast<int>(results.size()) ? kOk : kMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cocharacters, consequence spans, and identity-lattice graphs for "
                 "two-variable bicommutative varieties"};
    app.require_subcommand(1);

    std::string partition;
    std::string format = "text";
    std::string out_path;
    std::string figure_id;
    int max_degree = 0;
    bool expected = false;
    bool list_scopes = false;
    std::uint64_t seed = kDefaultSeed;
    std::vector<std::string> scopes;
    SpecSource src;

    CLI::App* cmd_hwv = app.add_subcommand("hwv", "print the highest-weight vectors of a shape");
    cmd_hwv->add_option("--partition", partition, "shape: n or l1,l2")->required();

    CLI::App* cmd_cochar =
        app.add_subcommand("cocharacter", "multiplicity tables per degree, optionally "
                                          "checked against the closed form");
    src.attach(cmd_cochar);
    cmd_cochar->add_option("--max-degree", max_degree, "top degree")->required();
    cmd_cochar->add_flag("--expected", expected, "compare with the closed-form table");
    cmd_cochar->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_cochar->add_option("-o,--output", out_path, "write to file instead of stdout");

    CLI::App* cmd_mult =
        app.add_subcommand("multiplicity", "one cocharacter multiplicity m(lambda)");
    src.attach(cmd_mult);
    cmd_mult->add_option("--partition", partition, "shape: n or l1,l2")->required();

    CLI::App* cmd_cons =
        app.add_subcommand("consequences", "reduced basis of one component of the "
                                           "identity ideal");
    src.attach(cmd_cons);
    cmd_cons->add_option("--partition", partition, "shape: n or l1,l2")->required();
    cmd_cons->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_cons->add_option("-o,--output", out_path, "write to file instead of stdout");

    CLI::App* cmd_lattice =
        app.add_subcommand("lattice", "identity-line consequence graph, or a check "
                                      "against a stored figure");
    src.attach(cmd_lattice);
    cmd_lattice->add_option("--max-degree", max_degree, "top degree of the graph");
    cmd_lattice->add_option("--format", format, "text, json, or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    cmd_lattice->add_option("--check-figure", figure_id, "compare against a stored golden graph");
    cmd_lattice->add_option("--seed", seed, "seed for pencil-representative sampling");
    cmd_lattice->add_option("-o,--output", out_path, "write to file instead of stdout");

    CLI::App* cmd_verify =
        app.add_subcommand("verify-paper", "replay the quantitative verification suite");
    cmd_verify->add_option("--scope", scopes, "claim id (repeatable; default all)");
    cmd_verify->add_flag("--list", list_scopes, "list claim ids and exit");
    cmd_verify->add_option("--seed", seed, "seed for sampled parameter draws");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (cmd_hwv->parsed()) return run_hwv(partition);
        if (cmd_cochar->parsed())
            return run_cocharacter(src, max_degree, expected, format, out_path);
        if (cmd_mult->parsed()) return run_multiplicity(src, partition);
        if (cmd_cons->parsed()) return run_consequences(src, partition, format, out_path);
        if (cmd_lattice->parsed())
            return run_lattice(src, max_degree, format, figure_id, seed, out_path);
        if (cmd_verify->parsed()) return run_verify(scopes, list_scopes, seed);
        std::cerr << "error: no subcommand\n";
        return kUsage;
    } catch (const parse_error& e) {
        std::cerr << "parse error at line " << e.line << ", column " << e.column << ": "
                  << e.what() << "\n";
        return kUsage;
    } catch (const invariant_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
