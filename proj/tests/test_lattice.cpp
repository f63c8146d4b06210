#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bicomm/figures.hpp"
#include "bicomm/lattice.hpp"
#include "bicomm/varieties.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace bicomm;

namespace {

std::vector<std::string> names_of(const ConsequenceGraph& g) {
    std::vector<std::string> out;
    for (const IdentityVertex& v : g.vertices) out.push_back(v.name);
    return out;
}

std::vector<std::string> out_neighbors(const ConsequenceGraph& g, const std::string& from) {
    std::vector<std::string> out;
    int i = g.vertex_index(from);
    for (const auto& [a, b] : g.edges)
        if (a == i) out.push_back(g.vertices[b].name);
    std::sort(out.begin(), out.end());
    return out;
}

int count_lines_with(const std::string& text, const std::string& needle) {
    int count = 0;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        if (line.find(needle) != std::string::npos) ++count;
    return count;
}

} // namespace

TEST_CASE("the identity-free graph at depth 3 is the two-level fan") {
    ConsequenceGraph g = build_graph(free_spec(), 3);
    CHECK(g.ambient == "B");
    CHECK(g.max_degree == 3);

    CHECK(names_of(g) ==
          std::vector<std::string>{"x1", "L((2),[1])", "L((1,1),[1])", "L((3),[1,0])",
                                   "L((3),[0,1])", "P((3))", "L((2,1),[1,0])", "L((2,1),[0,1])",
                                   "P((2,1))"});
    CHECK(g.edges.size() == 11);

    // the generator line reaches both degree-2 lines
    CHECK(out_neighbors(g, "x1") == std::vector<std::string>{"L((1,1),[1])", "L((2),[1])"});

    // the symmetric degree-2 line reaches every degree-3 line
    CHECK(out_neighbors(g, "L((2),[1])") ==
          std::vector<std::string>{"L((2,1),[0,1])", "L((2,1),[1,0])", "L((3),[0,1])",
                                   "L((3),[1,0])", "P((2,1))", "P((3))"});

    // the antisymmetric one only forces the mixed-shape row
    CHECK(out_neighbors(g, "L((1,1),[1])") ==
          std::vector<std::string>{"L((2,1),[0,1])", "L((2,1),[1,0])", "P((2,1))"});

    CHECK(g.continuations.empty());
    CHECK(g.sink_names().size() == 6);
    CHECK(g.has_edge("x1", "L((2),[1])"));
    CHECK_FALSE(g.has_edge("L((1,1),[1])", "L((3),[1,0])"));
    CHECK(g.vertex_index("missing") == -1);
}

TEST_CASE("every stored figure is reproduced from scratch") {
    for (const FigureGolden& fig : figure_goldens()) {
        FigureCheck fc = check_figure(fig.id);
        INFO(fig.id, "\n", fc.report);
        CHECK(fc.pass);
    }
    CHECK(figure_goldens().size() == 8);
    CHECK(find_figure("u-case1") != nullptr);
    CHECK(find_figure("nope") == nullptr);
    CHECK_THROWS_AS(figure_spec("nope"), std::invalid_argument);
}

TEST_CASE("figure comparison reports structural differences") {
    const FigureGolden* fig = find_figure("u-case5");
    REQUIRE(fig != nullptr);
    // a graph built from the wrong parameter line cannot match
    FigureCheck fc = compare_graph(*fig, build_graph(make_u(Rational(1), Rational(2)), 5));
    CHECK_FALSE(fc.pass);
    CHECK(fc.report.find("MISMATCH") != std::string::npos);
}

TEST_CASE("pencil vertices expose their members deterministically") {
    ConsequenceGraph g = build_graph(make_u(Rational(1), Rational(0)), 5);
    int pencil = -1;
    for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
        if (g.vertices[i].is_family) pencil = i;
    REQUIRE(pencil >= 0);
    const IdentityVertex& v = g.vertices[pencil];
    CHECK(v.reps.size() >= 3);
    for (const auto& [c1, c2] : v.reps) {
        CHECK_FALSE(c1.is_zero());
        CHECK_FALSE(c2.is_zero());
        if (v.exclude_sum_zero) CHECK_FALSE((c1 + c2).is_zero());
        CHECK_FALSE(v.element_at(c1, c2).is_zero());
    }
    CHECK(v.elements().size() == v.reps.size());
    CHECK_THROWS_AS(v.element(), std::logic_error);

    // fixed vertices scale their displayed vector so the last entry is 1
    for (const IdentityVertex& w : g.vertices) {
        if (w.is_family || w.degree < 2) continue;
        REQUIRE_FALSE(w.coords.empty());
        Rational last(0);
        for (const Rational& c : w.coords)
            if (!c.is_zero()) last = c;
        CHECK(last == Rational(1));
        CHECK_FALSE(w.element().is_zero());
    }
}

TEST_CASE("graph structure is independent of the sampling seed") {
    VarietySpec spec = make_u(Rational(1), Rational(1));
    ConsequenceGraph a = build_graph(spec, 5, 1);
    ConsequenceGraph b = build_graph(spec, 5, 987654321);
    CHECK(names_of(a) == names_of(b));
    CHECK(a.edges == b.edges);
    CHECK(a.segments == b.segments);
    CHECK(a.continuations == b.continuations);
    CHECK(to_dot(a) == to_dot(b));
    CHECK(build_graph(spec, 5) == build_graph(spec, 5));
}

TEST_CASE("edges agree with direct ideal-membership queries") {
    VarietySpec spec = make_u(Rational(1), Rational(0));
    ConsequenceGraph g = build_graph(spec, 4);
    for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i) {
        const IdentityVertex& u = g.vertices[i];
        if (u.is_family) continue;
        for (int j = 0; j < static_cast<int>(g.vertices.size()); ++j) {
            const IdentityVertex& w = g.vertices[j];
            if (w.is_family || w.degree != u.degree + 1) continue;
            CHECK(g.has_edge(u.name, w.name) == implies(spec, u.element(), w.element()));
        }
    }
}

TEST_CASE("untagged specs get the systematic line names") {
    // same identity as a tagged parameter line, but supplied anonymously:
    // the builder must fall back to basis-line enumeration
    Poly y = Poly::var_y(0, 1), z = Poly::var_z(0, 1);
    VarietySpec spec("S", {GElement::from_square(y * y * z - y * z * z)});
    ConsequenceGraph g = build_graph(spec, 3);

    // degree 3 keeps one line of the straight shape (the two basis residues
    // coincide modulo the ideal) and the full mixed-shape row
    CHECK(g.vertices.size() == 7);
    int straight = 0, mixed = 0, pencils = 0;
    for (const IdentityVertex& v : g.vertices) {
        if (v.degree != 3) continue;
        if (v.is_family) ++pencils;
        else if (v.shape == Partition(3)) ++straight;
        else if (v.shape == Partition(2, 1)) ++mixed;
    }
    CHECK(straight == 1);
    CHECK(mixed == 2);
    CHECK(pencils == 1);
    CHECK(out_neighbors(g, "x1").size() == 2);
}

TEST_CASE("graphs refuse depths where a pencil has non-uniform consequences") {
    // past degree 3 the identity-free mixed-shape pencil generates different
    // ideals for different members, which the fixed-edge display cannot show
    CHECK_THROWS_AS(build_graph(free_spec(), 4), invariant_error);
    CHECK_THROWS_AS(build_graph(free_spec(), 1), std::invalid_argument);
}

TEST_CASE("dot export is structurally well formed") {
    ConsequenceGraph g = build_graph(make_u(Rational(1), Rational(2)), 4);
    std::string dot = to_dot(g);

    CHECK(dot.find("digraph \"U(1,2)\"") == 0);
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    CHECK(count_lines_with(dot, "[label=") == 6);
    CHECK(count_lines_with(dot, "->") == 9); // 8 consequences + 1 dashed pencil tie
    CHECK(count_lines_with(dot, "rank=same") == 3);

    // every quoted endpoint of an arrow has a declared node line
    std::set<std::string> declared;
    std::istringstream is(dot);
    std::string line;
    while (std::getline(is, line)) {
        auto q = line.find('"');
        if (line.find("[label=") != std::string::npos && q != std::string::npos)
            declared.insert(line.substr(q + 1, line.find('"', q + 1) - q - 1));
    }
    is = std::istringstream(dot);
    while (std::getline(is, line)) {
        auto arrow = line.find("->");
        if (arrow == std::string::npos) continue;
        auto a0 = line.find('"');
        auto a1 = line.find('"', a0 + 1);
        auto b0 = line.find('"', arrow);
        auto b1 = line.find('"', b0 + 1);
        REQUIRE(a1 != std::string::npos);
        REQUIRE(b1 != std::string::npos);
        CHECK(declared.count(line.substr(a0 + 1, a1 - a0 - 1)) == 1);
        CHECK(declared.count(line.substr(b0 + 1, b1 - b0 - 1)) == 1);
    }

    // chains that continue past the top row get dotted ellipsis markers
    std::string deep = to_dot(build_graph(make_u(Rational(1), Rational(0)), 5));
    CHECK(count_lines_with(deep, ":more") > 0);
    CHECK(count_lines_with(deep, "style=dotted") > 0);
}

TEST_CASE("union and intersection behave lattice-like on closed subgraphs") {
    ConsequenceGraph g = build_graph(make_u(Rational(1), Rational(1)), 5);

    auto closed = [&](const std::vector<std::string>& seeds) {
        std::vector<int> idx;
        for (const std::string& s : seeds) {
            int i = g.vertex_index(s);
            REQUIRE(i >= 0);
            idx.push_back(i);
        }
        return consequence_closure(g, idx);
    };

    // everything is a consequence of the generator line
    CHECK(closed({"f1"}) == g);

    ConsequenceGraph a = closed({"f2"});
    ConsequenceGraph b = closed({"g2"});
    ConsequenceGraph c = closed({"f3"});
    CHECK(a.vertices.size() == 6);
    CHECK(c.vertices.size() == 2);

    CHECK(graph_union(a, a) == a);
    CHECK(graph_intersection(a, a) == a);
    CHECK(graph_union(a, b) == closed({"f2", "g2"}));

    // c sits below a, so it is absorbed
    CHECK(graph_union(a, c) == a);
    CHECK(graph_intersection(a, c) == c);
    CHECK(graph_intersection(graph_union(a, c), c) == c);

    // union/intersection distribute over each other on this family
    ConsequenceGraph lhs = graph_intersection(graph_union(a, b), c);
    ConsequenceGraph rhs = graph_union(graph_intersection(a, c), graph_intersection(b, c));
    CHECK(lhs == rhs);
    CHECK(lhs == c);

    ConsequenceGraph other = build_graph(make_v(Rational(1), Rational(1)), 5);
    CHECK_THROWS_WITH_AS(graph_union(g, other),
                         "graph_union: graphs live over different ambient varieties",
                         std::invalid_argument);
    CHECK_THROWS_AS(graph_intersection(g, build_graph(make_u(Rational(1), Rational(1)), 4)),
                    std::invalid_argument);
}

TEST_CASE("closure respects unions of seed sets") {
    ConsequenceGraph g = build_graph(make_v(Rational(1), Rational(0)), 5);
    REQUIRE(g.vertices[1].name == "f2");
    REQUIRE(g.vertices[2].name == "h2");
    ConsequenceGraph ca = consequence_closure(g, {1});
    ConsequenceGraph cb = consequence_closure(g, {2});
    ConsequenceGraph cab = consequence_closure(g, {1, 2});
    CHECK(graph_union(ca, cb) == cab);
    CHECK(graph_intersection(cab, ca) == ca);
}

TEST_CASE("multiplicity bounds decide distributivity through degree 6") {
    CHECK_FALSE(is_distributive(free_spec(), 5));
    CHECK_FALSE(is_distributive(make_u(Rational(1), Rational(2)), 5));
    CHECK_FALSE(is_distributive(make_v(Rational(1), Rational(1)), 5));
    CHECK(is_distributive(variety_meet(make_u(Rational(1), Rational(0)),
                                       make_v(Rational(1), Rational(0))),
                          6));
    CHECK(is_distributive(variety_meet(make_u(Rational(1), Rational(2)),
                                       make_v(Rational(1), Rational(-1))),
                          6));
    CHECK_THROWS_AS(is_distributive(free_spec(), 2), std::invalid_argument);
}

TEST_CASE("mirror parameter cases build cleanly at depth 5") {
    ConsequenceGraph ua = build_graph(make_u(Rational(0), Rational(1)), 5);
    ConsequenceGraph ub = build_graph(make_u(Rational(1), Rational(0)), 5);
    CHECK(ua.vertices.size() == ub.vertices.size());
    CHECK(ua.edges.size() == ub.edges.size());

    ConsequenceGraph va = build_graph(make_v(Rational(0), Rational(1)), 5);
    ConsequenceGraph vb = build_graph(make_v(Rational(1), Rational(0)), 5);
    CHECK(va.vertices.size() == vb.vertices.size());
    CHECK_FALSE(va.edges.empty());

    for (const ConsequenceGraph* g : {&ua, &va})
        for (const auto& [s, t] : g->edges)
            CHECK(g->vertices[t].degree == g->vertices[s].degree + 1);
}
