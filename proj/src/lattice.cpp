#include "bicomm/lattice.hpp"

#include "bicomm/galgebra.hpp"
#include "bicomm/hwv.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bicomm {

namespace {

std::vector<Rational> normalized(std::vector<Rational> c) {
    int last = -1;
    for (int i = 0; i < static_cast<int>(c.size()); ++i)
        if (!c[i].is_zero()) last = i;
    if (last < 0) return c;
    Rational pivot = c[last];
    for (auto& x : c) x /= pivot;
    return c;
}

std::string coords_str(const std::vector<Rational>& c) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += c[i].str();
    }
    return s + "]";
}

Poly monic(Poly p) {
    if (!p.is_zero()) p *= Rational(1) / p.lead_coeff();
    return p;
}

IdentityVertex fixed_vertex(std::string name, int degree, Partition shape,
                            std::vector<Rational> coords) {
    IdentityVertex v;
    v.name = std::move(name);
    v.degree = degree;
    v.shape = shape;
    v.coords = normalized(std::move(coords));
    return v;
}

IdentityVertex family_vertex(std::string name, int degree, Partition shape, int lo, int hi,
                             bool exclude_sum_zero) {
    IdentityVertex v;
    v.name = std::move(name);
    v.degree = degree;
    v.shape = shape;
    v.is_family = true;
    v.axis_lo = lo;
    v.axis_hi = hi;
    v.exclude_sum_zero = exclude_sum_zero;
    return v;
}

std::vector<Rational> unit(int dim, int k) {
    std::vector<Rational> c(dim, Rational(0));
    c[k] = Rational(1);
    return c;
}

// (0, ..., 0, -1, 1): the difference of the two highest basis lines.
std::vector<Rational> diff_high(int dim) {
    std::vector<Rational> c(dim, Rational(0));
    c[dim - 2] = Rational(-1);
    c[dim - 1] = Rational(1);
    return c;
}

// (-1, 1, 0, ..., 0): the difference of the two lowest basis lines.
std::vector<Rational> diff_low(int dim) {
    std::vector<Rational> c(dim, Rational(0));
    c[0] = Rational(-1);
    c[1] = Rational(1);
    return c;
}

// One row of a graph: its vertices, the same-degree pencil segments, and the
// names whose chains continue past this degree when it is the top row.
struct RowSpec {
    std::vector<IdentityVertex> verts;
    std::vector<std::pair<std::string, std::string>> segments;
    std::vector<std::string> continuing;
};

std::string nm(const char* base, int n) { return std::string(base) + std::to_string(n); }

// ---------------------------------------------------------------------------
// Display templates for the one-generator families.  Rows list the identity
// lines a figure shows for the given coefficient case at each degree; edges
// are never part of a template, they are always computed.
// ---------------------------------------------------------------------------

RowSpec u_row(AlphaCase c, int n) {
    RowSpec r;
    if (n == 1) {
        r.verts.push_back(fixed_vertex("f1", 1, Partition(1), {Rational(1)}));
        r.continuing = {"f1"};
        return r;
    }
    if (n == 2) {
        r.verts.push_back(fixed_vertex("f2", 2, Partition(2), {Rational(1)}));
        r.verts.push_back(fixed_vertex("g2", 2, Partition(1, 1), {Rational(1)}));
        r.continuing = {"f2", "g2"};
        return r;
    }
    if (n == 3) {
        const Partition p3(3), p21(2, 1);
        switch (c) {
        case AlphaCase::Generic:
            r.verts.push_back(fixed_vertex("f3", 3, p3, unit(2, 1)));
            r.verts.push_back(fixed_vertex("g3", 3, p21, unit(2, 1)));
            r.verts.push_back(fixed_vertex("h3", 3, p21, unit(2, 0)));
            r.segments = {{"g3", "h3"}};
            return r;
        case AlphaCase::Alpha2Zero:
            r.verts.push_back(fixed_vertex("f3", 3, p3, unit(2, 0)));
            r.verts.push_back(fixed_vertex("g3", 3, p21, unit(2, 0)));
            r.verts.push_back(fixed_vertex("h3", 3, p21, unit(2, 1)));
            break;
        case AlphaCase::Alpha1Zero:
            r.verts.push_back(fixed_vertex("f3", 3, p3, unit(2, 1)));
            r.verts.push_back(fixed_vertex("g3", 3, p21, unit(2, 1)));
            r.verts.push_back(fixed_vertex("h3", 3, p21, unit(2, 0)));
            break;
        case AlphaCase::SumZero:
            r.verts.push_back(fixed_vertex("f3", 3, p3, unit(2, 0)));
            r.verts.push_back(fixed_vertex("g3", 3, p21, unit(2, 1)));
            r.verts.push_back(fixed_vertex("h3", 3, p21, unit(2, 0)));
            break;
        case AlphaCase::DiffZero:
            r.verts.push_back(fixed_vertex("f3", 3, p3, unit(2, 1)));
            r.verts.push_back(fixed_vertex("g3", 3, p21, unit(2, 1)));
            r.verts.push_back(fixed_vertex("h3", 3, p21, unit(2, 0)));
            break;
        }
        r.verts.push_back(family_vertex("j3", 3, p21, 0, 1, false));
        r.segments = {{"g3", "j3"}, {"j3", "h3"}};
        switch (c) {
        case AlphaCase::Generic: break;
        case AlphaCase::Alpha2Zero:
        case AlphaCase::Alpha1Zero: r.continuing = {"f3", "g3", "j3"}; break;
        case AlphaCase::SumZero:
        case AlphaCase::DiffZero: r.continuing = {"f3", "g3", "h3", "j3"}; break;
        }
        return r;
    }
    // n >= 4
    switch (c) {
    case AlphaCase::Generic:
        break;
    case AlphaCase::Alpha2Zero:
        r.verts.push_back(fixed_vertex(nm("f", n), n, Partition(n), unit(n - 1, 0)));
        r.verts.push_back(fixed_vertex(nm("g", n), n, Partition(n - 1, 1), unit(n - 1, 0)));
        r.continuing = {nm("f", n), nm("g", n)};
        break;
    case AlphaCase::Alpha1Zero:
        r.verts.push_back(fixed_vertex(nm("f", n), n, Partition(n), unit(n - 1, n - 2)));
        r.verts.push_back(fixed_vertex(nm("g", n), n, Partition(n - 1, 1), unit(n - 1, n - 2)));
        r.continuing = {nm("f", n), nm("g", n)};
        break;
    case AlphaCase::SumZero:
        r.verts.push_back(fixed_vertex(nm("f", n), n, Partition(n), unit(n - 1, 0)));
        if (n == 4) r.verts.push_back(fixed_vertex("p4", 4, Partition(2, 2), {Rational(1)}));
        r.continuing = {nm("f", n)};
        break;
    case AlphaCase::DiffZero:
        if (n == 4) r.verts.push_back(fixed_vertex("g4", 4, Partition(3, 1), unit(3, 2)));
        break;
    }
    return r;
}

RowSpec v_row(BetaCase c, int n) {
    RowSpec r;
    if (n == 1) {
        r.verts.push_back(fixed_vertex("f1", 1, Partition(1), {Rational(1)}));
        r.continuing = {"f1"};
        return r;
    }
    if (n == 2) {
        r.verts.push_back(fixed_vertex("f2", 2, Partition(2), {Rational(1)}));
        r.verts.push_back(fixed_vertex("h2", 2, Partition(1, 1), {Rational(1)}));
        r.continuing = {"f2", "h2"};
        return r;
    }
    const int dim = n - 1; // hwv space dimension at shape (n)
    const Partition pn(n), pn1(n - 1, 1);
    const bool generic_like = (c == BetaCase::Generic || c == BetaCase::DiffZero);
    if (generic_like && n >= 5) {
        r.verts.push_back(fixed_vertex(nm("f", n), n, pn, unit(dim, dim - 1)));
        r.continuing = {nm("f", n)};
        return r;
    }
    switch (c) {
    case BetaCase::Generic:
    case BetaCase::DiffZero:
        // n is 3 or 4 here
        r.verts.push_back(fixed_vertex(nm("f", n), n, pn, unit(dim, n - 2)));
        r.verts.push_back(fixed_vertex(nm("g", n), n, pn, unit(dim, n - 3)));
        r.verts.push_back(fixed_vertex(nm("i", n), n, pn, diff_high(dim)));
        r.verts.push_back(family_vertex(nm("j", n), n, pn, n - 3, n - 2, true));
        if (n == 3) r.verts.push_back(fixed_vertex("h3", 3, pn1, unit(2, 1)));
        r.continuing = (n == 3)
            ? std::vector<std::string>{"f3", "g3", "i3", "j3", "h3"}
            : std::vector<std::string>{"f4", "g4", "j4"};
        break;
    case BetaCase::Beta2Zero:
        r.verts.push_back(fixed_vertex(nm("f", n), n, pn, unit(dim, 1)));
        r.verts.push_back(fixed_vertex(nm("g", n), n, pn, unit(dim, 0)));
        r.verts.push_back(fixed_vertex(nm("i", n), n, pn, diff_low(dim)));
        r.verts.push_back(family_vertex(nm("j", n), n, pn, 0, 1, true));
        r.verts.push_back(fixed_vertex(nm("h", n), n, pn1, unit(n - 1, 0)));
        r.continuing = {nm("f", n), nm("g", n), nm("i", n), nm("j", n), nm("h", n)};
        break;
    case BetaCase::Beta1Zero:
        r.verts.push_back(fixed_vertex(nm("f", n), n, pn, unit(dim, n - 3)));
        r.verts.push_back(fixed_vertex(nm("g", n), n, pn, unit(dim, n - 2)));
        r.verts.push_back(fixed_vertex(nm("i", n), n, pn, diff_high(dim)));
        r.verts.push_back(family_vertex(nm("j", n), n, pn, n - 3, n - 2, true));
        r.verts.push_back(fixed_vertex(nm("h", n), n, pn1, unit(n - 1, n - 2)));
        r.continuing = {nm("f", n), nm("g", n), nm("i", n), nm("j", n), nm("h", n)};
        break;
    case BetaCase::SumZero:
        r.verts.push_back(fixed_vertex(nm("f", n), n, pn, unit(dim, n - 2)));
        r.verts.push_back(fixed_vertex(nm("g", n), n, pn, unit(dim, n - 3)));
        r.verts.push_back(fixed_vertex(nm("i", n), n, pn, diff_high(dim)));
        r.verts.push_back(family_vertex(nm("j", n), n, pn, n - 3, n - 2, true));
        r.verts.push_back(fixed_vertex(nm("h", n), n, pn1, unit(n - 1, n - 2)));
        r.continuing = {nm("f", n), nm("g", n), nm("i", n), nm("j", n), nm("h", n)};
        break;
    }
    r.segments = {{nm("j", n), nm("f", n)}, {nm("f", n), nm("i", n)}, {nm("i", n), nm("g", n)}};
    return r;
}

// Span of the highest-weight vectors of shape lam inside the ideal's
// component of the same multidegree: the relations that cut the vertex lines.
RowSpan hwv_ideal_span(ConsequenceOracle& oracle, const Partition& lam) {
    const RowSpan& comp = oracle.component(lam.l1, lam.l2);
    RowSpan h(2);
    for (const Poly& p : hwv_subspace(comp.rows(), lam)) h.insert(p);
    return h;
}

void sample_reps(IdentityVertex& v, Rng& rng) {
    v.reps.clear();
    v.reps.emplace_back(Rational(1), Rational(2)); // fixed witness pair
    while (v.reps.size() < 4) {
        int a = 0, b = 0;
        while (a == 0) a = rng.range(-4, 4);
        while (b == 0) b = rng.range(-4, 4);
        if (v.exclude_sum_zero && a + b == 0) continue;
        v.reps.emplace_back(Rational(a), Rational(b));
    }
}

// Every displayed line must be a proper nonzero identity: nonzero in the
// quotient by the ideal, and pencil members must stay off the fixed lines of
// their own shape.  A violation means the display template contradicts the
// computed ideal, which is a hard error rather than a reportable mismatch.
void validate_row(ConsequenceOracle& oracle, const RowSpec& row, int n) {
    if (row.verts.empty()) return;
    if (n == 1) {
        if (oracle.multiplicity(Partition(1)) != 1)
            throw invariant_error("display template shows a degree-1 line but the variety has a degree-1 identity");
        return;
    }
    std::map<std::string, RowSpan> ideals;
    std::map<std::string, std::vector<Poly>> fixed_residues;
    auto ideal_for = [&](const Partition& lam) -> RowSpan& {
        auto it = ideals.find(lam.str());
        if (it == ideals.end())
            it = ideals.emplace(lam.str(), hwv_ideal_span(oracle, lam)).first;
        return it->second;
    };
    for (const IdentityVertex& v : row.verts) {
        RowSpan& h = ideal_for(v.shape);
        if (!v.is_family) {
            Poly res = h.reduce(v.element().square);
            if (res.is_zero())
                throw invariant_error("display template line " + v.name +
                                      " lies in the ideal of " + std::to_string(n));
            fixed_residues[v.shape.str()].push_back(monic(res));
            continue;
        }
        for (const auto& rep : v.reps) {
            Poly res = monic(h.reduce(v.element_at(rep.first, rep.second).square));
            if (res.is_zero())
                throw invariant_error("pencil member of " + v.name + " lies in the ideal");
            for (const Poly& f : fixed_residues[v.shape.str()])
                if (res == f)
                    throw invariant_error("pencil member of " + v.name +
                                          " collides with a fixed line of the same degree");
        }
    }
}

// Degrees and shapes not covered by a display template must really have
// multiplicity zero; otherwise the template would silently hide lines.
void validate_template_coverage(ConsequenceOracle& oracle, const RowSpec& row, int n) {
    std::set<std::string> shown;
    for (const IdentityVertex& v : row.verts) shown.insert(v.shape.str());
    for (const Partition& lam : two_row_partitions(n)) {
        if (shown.count(lam.str())) continue;
        if (oracle.multiplicity(lam) != 0)
            throw invariant_error("display template omits shape " + lam.str() +
                                  " at degree " + std::to_string(n) +
                                  " although its multiplicity is positive");
    }
}

RowSpec systematic_row(ConsequenceOracle& oracle, int n) {
    RowSpec r;
    if (n == 1) {
        if (oracle.multiplicity(Partition(1)) == 1)
            r.verts.push_back(fixed_vertex("x1", 1, Partition(1), {Rational(1)}));
        return r;
    }
    for (const Partition& lam : two_row_partitions(n)) {
        int m = oracle.multiplicity(lam);
        if (m == 0) continue;
        std::vector<Poly> basis = hwv_basis(lam);
        RowSpan h = hwv_ideal_span(oracle, lam);
        std::vector<Poly> images;
        std::vector<int> kept;
        for (int j = 0; j < static_cast<int>(basis.size()); ++j) {
            Poly res = h.reduce(basis[j]);
            if (res.is_zero()) continue;
            Poly key = monic(std::move(res));
            bool dup = false;
            for (const Poly& seen : images)
                if (seen == key) { dup = true; break; }
            if (dup) continue;
            images.push_back(std::move(key));
            kept.push_back(j);
            std::vector<Rational> c = unit(static_cast<int>(basis.size()), j);
            std::string name = "L(" + lam.str() + "," + coords_str(c) + ")";
            r.verts.push_back(fixed_vertex(std::move(name), n, lam, std::move(c)));
        }
        if (m == 2 && kept.size() >= 2)
            r.verts.push_back(family_vertex("P(" + lam.str() + ")", n, lam, kept[0], kept[1], false));
    }
    return r;
}

// An edge means the lower line generates the upper one; for pencils every
// sampled member must give the same answer, since the display claims the
// relation uniformly in the pencil parameter.
bool edge_decision(ConsequenceOracle& oracle, const IdentityVertex& u, const IdentityVertex& v) {
    int yes = 0, no = 0;
    for (const GElement& ue : u.elements())
        for (const GElement& ve : v.elements())
            (oracle.implies(ue, ve) ? yes : no)++;
    if (yes > 0 && no > 0)
        throw invariant_error("consequence relation " + u.name + " -> " + v.name +
                              " is not uniform across sampled pencil members");
    return yes > 0;
}

} // namespace

GElement IdentityVertex::element() const {
    if (degree == 1) return GElement::variable(0, 2);
    if (is_family)
        throw std::logic_error("IdentityVertex::element called on a pencil vertex");
    std::vector<Poly> basis = hwv_basis(shape);
    Poly p(2);
    for (std::size_t k = 0; k < basis.size(); ++k) p += basis[k] * coords[k];
    return GElement::from_square(p);
}

GElement IdentityVertex::element_at(const Rational& lo, const Rational& hi) const {
    std::vector<Poly> basis = hwv_basis(shape);
    return GElement::from_square(basis[axis_lo] * lo + basis[axis_hi] * hi);
}

std::vector<GElement> IdentityVertex::elements() const {
    std::vector<GElement> out;
    if (!is_family) {
        out.push_back(element());
        return out;
    }
    for (const auto& rep : reps) out.push_back(element_at(rep.first, rep.second));
    return out;
}

std::string IdentityVertex::line_tag() const {
    if (degree == 1) return "x";
    if (!is_family) return shape.str() + " " + coords_str(coords);
    std::string tag = shape.str() + " pencil(B" + std::to_string(axis_lo) + ",B" +
                      std::to_string(axis_hi) + "), c1*c2";
    if (exclude_sum_zero) tag += "*(c1+c2)";
    return tag + "!=0";
}

int ConsequenceGraph::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].name == name) return static_cast<int>(i);
    return -1;
}

bool ConsequenceGraph::has_edge(const std::string& from, const std::string& to) const {
    int a = vertex_index(from), b = vertex_index(to);
    if (a < 0 || b < 0) return false;
    for (const auto& e : edges)
        if (e.first == a && e.second == b) return true;
    return false;
}

std::vector<std::string> ConsequenceGraph::sink_names() const {
    std::vector<bool> outgoing(vertices.size(), false);
    for (const auto& e : edges) outgoing[e.first] = true;
    for (int c : continuations) outgoing[c] = true;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (!outgoing[i]) out.push_back(vertices[i].name);
    return out;
}

namespace {
bool same_vertex(const IdentityVertex& a, const IdentityVertex& b) {
    return a.name == b.name && a.degree == b.degree && a.shape == b.shape &&
           a.coords == b.coords && a.is_family == b.is_family && a.axis_lo == b.axis_lo &&
           a.axis_hi == b.axis_hi && a.exclude_sum_zero == b.exclude_sum_zero && a.reps == b.reps;
}
} // namespace

bool ConsequenceGraph::operator==(const ConsequenceGraph& o) const {
    if (ambient != o.ambient || max_degree != o.max_degree ||
        vertices.size() != o.vertices.size())
        return false;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (!same_vertex(vertices[i], o.vertices[i])) return false;
    return edges == o.edges && segments == o.segments && continuations == o.continuations;
}

std::string vertex_key(const IdentityVertex& v) {
    std::string k = std::to_string(v.degree) + "|" + v.shape.str() + "|";
    if (v.is_family) {
        k += "pencil(" + std::to_string(v.axis_lo) + "," + std::to_string(v.axis_hi) + ")";
        if (v.exclude_sum_zero) k += "|s";
        return k;
    }
    return k + coords_str(normalized(v.coords));
}

ConsequenceGraph build_graph(const VarietySpec& spec, int max_degree, std::uint64_t seed) {
    if (max_degree < 2)
        throw std::invalid_argument("build_graph: max_degree must be at least 2");
    Rng rng(seed);
    ConsequenceOracle oracle(spec);
    ConsequenceGraph g;
    g.ambient = spec.label;
    g.max_degree = max_degree;

    std::optional<AlphaCase> ucase;
    std::optional<BetaCase> vcase;
    if (spec.family == "u") ucase = classify_alpha(spec.p1, spec.p2);
    else if (spec.family == "v") vcase = classify_beta(spec.p1, spec.p2);

    std::vector<std::vector<int>> rows(max_degree + 1);
    std::vector<std::pair<std::string, std::string>> seg_names;
    std::vector<std::string> cont_names;

    for (int n = 1; n <= max_degree; ++n) {
        RowSpec row = ucase ? u_row(*ucase, n)
                    : vcase ? v_row(*vcase, n)
                            : systematic_row(oracle, n);
        for (IdentityVertex& v : row.verts)
            if (v.is_family) sample_reps(v, rng);
        validate_row(oracle, row, n);
        if (ucase || vcase) validate_template_coverage(oracle, row, n);
        for (IdentityVertex& v : row.verts) {
            rows[n].push_back(static_cast<int>(g.vertices.size()));
            g.vertices.push_back(std::move(v));
        }
        for (auto& s : row.segments) seg_names.push_back(std::move(s));
        if (n == max_degree) cont_names = std::move(row.continuing);
    }

    for (int n = 1; n < max_degree; ++n)
        for (int ui : rows[n])
            for (int vi : rows[n + 1])
                if (edge_decision(oracle, g.vertices[ui], g.vertices[vi]))
                    g.edges.emplace_back(ui, vi);

    for (const auto& s : seg_names) {
        int a = g.vertex_index(s.first), b = g.vertex_index(s.second);
        // stored orientation-free and sorted so subgraph algebra can match
        // them up with the set-operation results
        g.segments.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(g.segments.begin(), g.segments.end());
    for (const std::string& c : cont_names) g.continuations.push_back(g.vertex_index(c));
    return g;
}

bool is_distributive(const VarietySpec& spec, int max_degree) {
    if (max_degree < 3)
        throw std::invalid_argument("is_distributive: max_degree must be at least 3");
    ConsequenceOracle oracle(spec);
    // A multiplicity above 1 first shows up in degree 3 when it shows up at
    // all, so the degree-3 check certifies the whole scan; if the two ever
    // disagreed the certificate would be unsound, hence the hard error.
    bool certificate =
        oracle.multiplicity(Partition(3)) <= 1 && oracle.multiplicity(Partition(2, 1)) <= 1;
    bool exhaustive = true;
    for (int n = 1; n <= max_degree && exhaustive; ++n)
        for (const Partition& lam : two_row_partitions(n))
            if (oracle.multiplicity(lam) > 1) {
                exhaustive = false;
                break;
            }
    if (exhaustive != certificate)
        throw std::logic_error(
            "degree-3 distributivity certificate disagrees with the exhaustive scan");
    return exhaustive;
}

namespace {
void require_same_ambient(const ConsequenceGraph& a, const ConsequenceGraph& b,
                          const char* what) {
    if (a.ambient != b.ambient || a.max_degree != b.max_degree)
        throw std::invalid_argument(std::string(what) +
                                    ": graphs live over different ambient varieties");
}

std::string edge_key(const ConsequenceGraph& g, const std::pair<int, int>& e) {
    return vertex_key(g.vertices[e.first]) + ">" + vertex_key(g.vertices[e.second]);
}

std::string segment_key(const ConsequenceGraph& g, const std::pair<int, int>& e) {
    std::string a = vertex_key(g.vertices[e.first]);
    std::string b = vertex_key(g.vertices[e.second]);
    if (b < a) std::swap(a, b);
    return a + "~" + b;
}
} // namespace

ConsequenceGraph graph_union(const ConsequenceGraph& a, const ConsequenceGraph& b) {
    require_same_ambient(a, b, "graph_union");
    ConsequenceGraph g;
    g.ambient = a.ambient;
    g.max_degree = a.max_degree;
    std::map<std::string, int> index;
    auto add_vertices = [&](const ConsequenceGraph& src) {
        for (const IdentityVertex& v : src.vertices)
            if (index.emplace(vertex_key(v), 0).second) g.vertices.push_back(v);
    };
    add_vertices(a);
    add_vertices(b);
    std::stable_sort(g.vertices.begin(), g.vertices.end(),
                     [](const IdentityVertex& x, const IdentityVertex& y) {
                         return x.degree < y.degree;
                     });
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        index[vertex_key(g.vertices[i])] = static_cast<int>(i);

    std::set<std::pair<int, int>> edges, segments;
    std::set<int> conts;
    auto add_rest = [&](const ConsequenceGraph& src) {
        for (const auto& e : src.edges)
            edges.emplace(index.at(vertex_key(src.vertices[e.first])),
                          index.at(vertex_key(src.vertices[e.second])));
        for (const auto& s : src.segments) {
            int x = index.at(vertex_key(src.vertices[s.first]));
            int y = index.at(vertex_key(src.vertices[s.second]));
            segments.emplace(std::min(x, y), std::max(x, y));
        }
        for (int c : src.continuations) conts.insert(index.at(vertex_key(src.vertices[c])));
    };
    add_rest(a);
    add_rest(b);
    g.edges.assign(edges.begin(), edges.end());
    g.segments.assign(segments.begin(), segments.end());
    g.continuations.assign(conts.begin(), conts.end());
    return g;
}

ConsequenceGraph graph_intersection(const ConsequenceGraph& a, const ConsequenceGraph& b) {
    require_same_ambient(a, b, "graph_intersection");
    std::set<std::string> bverts;
    for (const IdentityVertex& v : b.vertices) bverts.insert(vertex_key(v));
    std::set<std::string> bedges, bsegs;
    for (const auto& e : b.edges) bedges.insert(edge_key(b, e));
    for (const auto& s : b.segments) bsegs.insert(segment_key(b, s));
    std::set<std::string> bconts;
    for (int c : b.continuations) bconts.insert(vertex_key(b.vertices[c]));

    ConsequenceGraph g;
    g.ambient = a.ambient;
    g.max_degree = a.max_degree;
    std::map<int, int> remap;
    for (std::size_t i = 0; i < a.vertices.size(); ++i)
        if (bverts.count(vertex_key(a.vertices[i]))) {
            remap[static_cast<int>(i)] = static_cast<int>(g.vertices.size());
            g.vertices.push_back(a.vertices[i]);
        }
    for (const auto& e : a.edges)
        if (remap.count(e.first) && remap.count(e.second) && bedges.count(edge_key(a, e)))
            g.edges.emplace_back(remap[e.first], remap[e.second]);
    for (const auto& s : a.segments)
        if (remap.count(s.first) && remap.count(s.second) && bsegs.count(segment_key(a, s)))
            g.segments.emplace_back(remap[s.first], remap[s.second]);
    for (int c : a.continuations)
        if (remap.count(c) && bconts.count(vertex_key(a.vertices[c])))
            g.continuations.push_back(remap[c]);
    return g;
}

ConsequenceGraph induced_subgraph(const ConsequenceGraph& g, const std::vector<int>& keep) {
    std::set<int> ks(keep.begin(), keep.end());
    ConsequenceGraph out;
    out.ambient = g.ambient;
    out.max_degree = g.max_degree;
    std::map<int, int> remap;
    for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
        if (ks.count(i)) {
            remap[i] = static_cast<int>(out.vertices.size());
            out.vertices.push_back(g.vertices[i]);
        }
    for (const auto& e : g.edges)
        if (remap.count(e.first) && remap.count(e.second))
            out.edges.emplace_back(remap[e.first], remap[e.second]);
    for (const auto& s : g.segments)
        if (remap.count(s.first) && remap.count(s.second))
            out.segments.emplace_back(remap[s.first], remap[s.second]);
    for (int c : g.continuations)
        if (remap.count(c)) out.continuations.push_back(remap[c]);
    return out;
}

ConsequenceGraph consequence_closure(const ConsequenceGraph& g, const std::vector<int>& seeds) {
    std::set<int> reach(seeds.begin(), seeds.end());
    std::vector<int> work(seeds.begin(), seeds.end());
    while (!work.empty()) {
        int u = work.back();
        work.pop_back();
        for (const auto& e : g.edges)
            if (e.first == u && reach.insert(e.second).second) work.push_back(e.second);
    }
    return induced_subgraph(g, std::vector<int>(reach.begin(), reach.end()));
}

std::string to_dot(const ConsequenceGraph& g) {
    std::ostringstream os;
    os << "digraph \"" << g.ambient << "\" {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=plaintext, fontsize=11];\n";
    for (const IdentityVertex& v : g.vertices)
        os << "  \"" << v.name << "\" [label=\"" << v.name << "\\n" << v.line_tag() << "\"];\n";
    for (int c : g.continuations)
        os << "  \"" << g.vertices[c].name << ":more\" [label=\"...\"];\n";
    for (int n = 1; n <= g.max_degree; ++n) {
        std::vector<std::string> level;
        for (const IdentityVertex& v : g.vertices)
            if (v.degree == n) level.push_back(v.name);
        if (level.empty()) continue;
        os << "  { rank=same;";
        for (const std::string& name : level) os << " \"" << name << "\";";
        os << " }\n";
    }
    for (const auto& e : g.edges)
        os << "  \"" << g.vertices[e.first].name << "\" -> \"" << g.vertices[e.second].name
           << "\";\n";
    for (const auto& s : g.segments)
        os << "  \"" << g.vertices[s.first].name << "\" -> \"" << g.vertices[s.second].name
           << "\" [dir=none, style=dashed, constraint=false];\n";
    for (int c : g.continuations)
        os << "  \"" << g.vertices[c].name << "\" -> \"" << g.vertices[c].name
           << ":more\" [style=dotted, arrowhead=none];\n";
    os << "}\n";
    return os.str();
}

} // namespace bicomm
