#include "bicomm/figures.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bicomm {

namespace {

using NamePair = std::pair<std::string, std::string>;

void fan(std::vector<NamePair>& edges, std::initializer_list<const char*> from,
         std::initializer_list<const char*> to) {
    for (const char* f : from)
        for (const char* t : to) edges.emplace_back(f, t);
}

FigureGolden u_case1() {
    FigureGolden f;
    f.id = "u-case1";
    f.family = "u";
    f.depth = 4;
    f.vertices = {{"f1", 1}, {"f2", 2}, {"g2", 2}, {"f3", 3}, {"g3", 3}, {"h3", 3}};
    fan(f.edges, {"f1"}, {"f2", "g2"});
    fan(f.edges, {"f2", "g2"}, {"f3", "g3", "h3"});
    f.segments = {{"g3", "h3"}};
    f.sinks = {"f3", "g3", "h3"};
    return f;
}

FigureGolden u_case2() {
    FigureGolden f;
    f.id = "u-case2";
    f.family = "u";
    f.depth = 5;
    f.vertices = {{"f1", 1}, {"f2", 2}, {"g2", 2}, {"f3", 3}, {"g3", 3}, {"h3", 3},
                  {"j3", 3}, {"f4", 4}, {"g4", 4}, {"f5", 5}, {"g5", 5}};
    fan(f.edges, {"f1"}, {"f2", "g2"});
    fan(f.edges, {"f2", "g2"}, {"f3", "g3", "h3", "j3"});
    fan(f.edges, {"f3", "g3", "j3"}, {"f4", "g4"});
    fan(f.edges, {"f4", "g4"}, {"f5", "g5"});
    f.segments = {{"g3", "j3"}, {"j3", "h3"}};
    f.sinks = {"h3"};
    f.continuations = {"f5", "g5"};
    return f;
}

FigureGolden u_case4() {
    FigureGolden f;
    f.id = "u-case4";
    f.family = "u";
    f.depth = 5;
    f.vertices = {{"f1", 1}, {"f2", 2}, {"g2", 2}, {"f3", 3}, {"g3", 3},
                  {"h3", 3}, {"j3", 3}, {"f4", 4}, {"p4", 4}, {"f5", 5}};
    fan(f.edges, {"f1"}, {"f2", "g2"});
    fan(f.edges, {"f2"}, {"f3", "g3", "h3", "j3"});
    fan(f.edges, {"g2"}, {"g3", "h3", "j3"});
    fan(f.edges, {"f3"}, {"f4", "p4"});
    fan(f.edges, {"g3", "h3", "j3"}, {"p4"});
    fan(f.edges, {"f4"}, {"f5"});
    f.segments = {{"g3", "j3"}, {"j3", "h3"}};
    f.sinks = {"p4"};
    f.continuations = {"f5"};
    return f;
}

FigureGolden u_case5() {
    FigureGolden f;
    f.id = "u-case5";
    f.family = "u";
    f.depth = 5;
    f.vertices = {{"f1", 1}, {"f2", 2}, {"g2", 2}, {"f3", 3},
                  {"g3", 3}, {"h3", 3}, {"j3", 3}, {"g4", 4}};
    fan(f.edges, {"f1"}, {"f2", "g2"});
    fan(f.edges, {"f2", "g2"}, {"f3", "g3", "h3", "j3"});
    fan(f.edges, {"f3", "g3", "h3", "j3"}, {"g4"});
    f.segments = {{"g3", "j3"}, {"j3", "h3"}};
    f.sinks = {"g4"};
    return f;
}

FigureGolden v_case1() {
    FigureGolden f;
    f.id = "v-case1";
    f.family = "v";
    f.depth = 6;
    f.vertices = {{"f1", 1}, {"f2", 2}, {"h2", 2}, {"f3", 3}, {"g3", 3},
                  {"i3", 3}, {"j3", 3}, {"h3", 3}, {"f4", 4}, {"g4", 4},
                  {"i4", 4}, {"j4", 4}, {"f5", 5}, {"f6", 6}};
    fan(f.edges, {"f1"}, {"f2", "h2"});
    fan(f.edges, {"f2"}, {"f3", "g3", "i3", "j3", "h3"});
    fan(f.edges, {"h2"}, {"i3", "h3"});
    fan(f.edges, {"f3", "g3", "j3"}, {"f4", "g4", "i4", "j4"});
    fan(f.edges, {"i3", "h3"}, {"i4"});
    fan(f.edges, {"f4", "g4", "j4"}, {"f5"});
    fan(f.edges, {"f5"}, {"f6"});
    f.segments = {{"j3", "f3"}, {"f3", "i3"}, {"i3", "g3"},
                  {"j4", "f4"}, {"f4", "i4"}, {"i4", "g4"}};
    f.sinks = {"i4"};
    f.continuations = {"f6"};
    return f;
}

FigureGolden v_case2() {
    FigureGolden f;
    f.id = "v-case2";
    f.family = "v";
    f.depth = 5;
    f.vertices = {{"f1", 1}, {"f2", 2}, {"h2", 2}};
    for (int n = 3; n <= 5; ++n)
        for (const char* base : {"f", "g", "i", "j", "h"})
            f.vertices.emplace_back(base + std::to_string(n), n);
    fan(f.edges, {"f1"}, {"f2", "h2"});
    fan(f.edges, {"f2"}, {"f3", "g3", "i3", "j3", "h3"});
    fan(f.edges, {"h2"}, {"i3", "h3"});
    fan(f.edges, {"f3"}, {"f4"});
    fan(f.edges, {"g3", "j3"}, {"f4", "g4", "i4", "j4", "h4"});
    fan(f.edges, {"i3", "h3"}, {"i4", "h4"});
    fan(f.edges, {"f4"}, {"f5"});
    fan(f.edges, {"g4", "j4"}, {"f5", "g5", "i5", "j5", "h5"});
    fan(f.edges, {"i4", "h4"}, {"i5", "h5"});
    for (int n = 3; n <= 5; ++n) {
        std::string s = std::to_string(n);
        f.segments.push_back({"j" + s, "f" + s});
        f.segments.push_back({"f" + s, "i" + s});
        f.segments.push_back({"i" + s, "g" + s});
    }
    f.continuations = {"f5", "g5", "i5", "j5", "h5"};
    return f;
}

FigureGolden v_case4() {
    FigureGolden f;
    f.id = "v-case4";
    f.family = "v";
    f.depth = 5;
    f.vertices = {{"f1", 1}, {"f2", 2}, {"h2", 2}};
    for (int n = 3; n <= 5; ++n)
        for (const char* base : {"f", "g", "i", "j", "h"})
            f.vertices.emplace_back(base + std::to_string(n), n);
    fan(f.edges, {"f1"}, {"f2", "h2"});
    fan(f.edges, {"f2"}, {"f3", "g3", "i3", "j3", "h3"});
    fan(f.edges, {"h2"}, {"i3", "h3"});
    fan(f.edges, {"f3", "g3", "j3"}, {"f4", "g4", "i4", "j4", "h4"});
    fan(f.edges, {"i3", "h3"}, {"i4", "h4"});
    fan(f.edges, {"f4", "g4", "j4"}, {"f5", "g5", "i5", "j5", "h5"});
    fan(f.edges, {"i4", "h4"}, {"i5", "h5"});
    for (int n = 3; n <= 5; ++n) {
        std::string s = std::to_string(n);
        f.segments.push_back({"j" + s, "f" + s});
        f.segments.push_back({"f" + s, "i" + s});
        f.segments.push_back({"i" + s, "g" + s});
    }
    f.continuations = {"f5", "g5", "i5", "j5", "h5"};
    return f;
}

FigureGolden v_case5() {
    FigureGolden f;
    f.id = "v-case5";
    f.family = "v";
    f.depth = 5;
    f.vertices = {{"f1", 1}, {"f2", 2}, {"h2", 2}, {"f3", 3}, {"g3", 3}, {"i3", 3},
                  {"j3", 3}, {"h3", 3}, {"f4", 4}, {"g4", 4}, {"i4", 4}, {"j4", 4},
                  {"f5", 5}};
    fan(f.edges, {"f1"}, {"f2", "h2"});
    fan(f.edges, {"f2"}, {"f3", "g3", "i3", "j3", "h3"});
    fan(f.edges, {"h2"}, {"i3", "h3"});
    fan(f.edges, {"f3", "g3", "j3"}, {"f4", "g4", "i4", "j4"});
    fan(f.edges, {"i3", "h3"}, {"i4"});
    fan(f.edges, {"f4", "g4", "j4"}, {"f5"});
    f.segments = {{"j3", "f3"}, {"f3", "i3"}, {"i3", "g3"},
                  {"j4", "f4"}, {"f4", "i4"}, {"i4", "g4"}};
    f.sinks = {"i4"};
    f.continuations = {"f5"};
    return f;
}

std::string diff_report(const char* what, std::set<std::string> want, std::set<std::string> got,
                        bool& pass) {
    std::vector<std::string> missing, extra;
    for (const std::string& w : want)
        if (!got.count(w)) missing.push_back(w);
    for (const std::string& g : got)
        if (!want.count(g)) extra.push_back(g);
    std::ostringstream os;
    os << what << ": ";
    if (missing.empty() && extra.empty()) {
        os << "ok (" << want.size() << ")";
    } else {
        pass = false;
        os << "MISMATCH";
        if (!missing.empty()) {
            os << " missing {";
            for (std::size_t i = 0; i < missing.size(); ++i) os << (i ? ", " : "") << missing[i];
            os << "}";
        }
        if (!extra.empty()) {
            os << " extra {";
            for (std::size_t i = 0; i < extra.size(); ++i) os << (i ? ", " : "") << extra[i];
            os << "}";
        }
    }
    os << "\n";
    return os.str();
}

} // namespace

const std::vector<FigureGolden>& figure_goldens() {
    static const std::vector<FigureGolden> all = {
        u_case1(), u_case2(), u_case4(), u_case5(),
        v_case1(), v_case2(), v_case4(), v_case5(),
    };
    return all;
}

const FigureGolden* find_figure(const std::string& id) {
    for (const FigureGolden& f : figure_goldens())
        if (f.id == id) return &f;
    return nullptr;
}

VarietySpec figure_spec(const std::string& id) {
    const FigureGolden* f = find_figure(id);
    if (!f) throw std::invalid_argument("unknown figure id: " + id);
    if (f->family == "u") {
        AlphaCase c = id == "u-case1"   ? AlphaCase::Generic
                      : id == "u-case2" ? AlphaCase::Alpha2Zero
                      : id == "u-case4" ? AlphaCase::SumZero
                                        : AlphaCase::DiffZero;
        auto rep = alpha_representative(c);
        return make_u(rep.first, rep.second);
    }
    BetaCase c = id == "v-case1"   ? BetaCase::Generic
                 : id == "v-case2" ? BetaCase::Beta2Zero
                 : id == "v-case4" ? BetaCase::SumZero
                                   : BetaCase::DiffZero;
    auto rep = beta_representative(c);
    return make_v(rep.first, rep.second);
}

FigureCheck compare_graph(const FigureGolden& fig, const ConsequenceGraph& g) {
    FigureCheck out;
    out.pass = true;
    std::ostringstream report;

    std::set<std::string> want, got;
    for (const auto& v : fig.vertices) want.insert(v.first + "@" + std::to_string(v.second));
    for (const auto& v : g.vertices) got.insert(v.name + "@" + std::to_string(v.degree));
    report << diff_report("vertices", std::move(want), std::move(got), out.pass);

    want.clear();
    got.clear();
    for (const auto& e : fig.edges) want.insert(e.first + " -> " + e.second);
    for (const auto& e : g.edges)
        got.insert(g.vertices[e.first].name + " -> " + g.vertices[e.second].name);
    report << diff_report("edges", std::move(want), std::move(got), out.pass);

    want.clear();
    got.clear();
    auto unordered = [](std::string a, std::string b) {
        if (b < a) std::swap(a, b);
        return a + " ~ " + b;
    };
    for (const auto& s : fig.segments) want.insert(unordered(s.first, s.second));
    for (const auto& s : g.segments)
        got.insert(unordered(g.vertices[s.first].name, g.vertices[s.second].name));
    report << diff_report("segments", std::move(want), std::move(got), out.pass);

    want.clear();
    got.clear();
    for (const std::string& s : fig.sinks) want.insert(s);
    for (const std::string& s : g.sink_names()) got.insert(s);
    report << diff_report("sinks", std::move(want), std::move(got), out.pass);

    want.clear();
    got.clear();
    for (const std::string& c : fig.continuations) want.insert(c);
    for (int c : g.continuations) got.insert(g.vertices[c].name);
    report << diff_report("continuations", std::move(want), std::move(got), out.pass);

    out.report = report.str();
    return out;
}

FigureCheck check_figure(const std::string& id, std::uint64_t seed) {
    const FigureGolden* fig = find_figure(id);
    if (!fig) throw std::invalid_argument("unknown figure id: " + id);
    ConsequenceGraph g = build_graph(figure_spec(id), fig->depth, seed);
    return compare_graph(*fig, g);
}

} // namespace bicomm
