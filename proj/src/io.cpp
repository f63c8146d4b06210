#include "bicomm/io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace bicomm {

namespace {

using ordered_json = nlohmann::ordered_json;

// nlohmann reports byte offsets; recover the 1-based line/column for the
// error message the CLI prints.
[[noreturn]] void rethrow_with_position(const std::string& text,
                                        const nlohmann::json::parse_error& e) {
    std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    if (byte > text.size()) byte = text.size();
    int line = 1, column = 1;
    for (std::size_t i = 0; i < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    throw parse_error(line, column, e.what());
}

ordered_json parse_text(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        rethrow_with_position(text, e);
    }
}

Rational rational_from_json(const ordered_json& j, const char* what) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Rational::from_string(j.get<std::string>());
        } catch (const std::exception& e) {
            throw invariant_error(std::string(what) + ": " + e.what());
        }
    }
    throw invariant_error(std::string(what) + ": expected an integer or a \"p/q\" string");
}

std::vector<int> exponents_from_json(const ordered_json& j, int d, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != d)
        throw invariant_error(std::string(what) + ": expected an array of " + std::to_string(d) +
                              " exponents");
    std::vector<int> out;
    for (const auto& e : j) {
        if (!e.is_number_integer() || e.get<long long>() < 0)
            throw invariant_error(std::string(what) + ": exponents must be non-negative integers");
        out.push_back(e.get<int>());
    }
    return out;
}

GElement gelement_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("d") || !j["d"].is_number_integer())
        throw invariant_error("element: expected an object with an integer \"d\"");
    int d = j["d"].get<int>();
    if (d < 1 || d > 64) throw invariant_error("element: dimension out of range");
    GElement g(d);
    if (j.contains("linear")) {
        const ordered_json& lin = j["linear"];
        if (!lin.is_array() || static_cast<int>(lin.size()) != d)
            throw invariant_error("element: \"linear\" must list one coefficient per generator");
        for (int i = 0; i < d; ++i) g.linear[i] = rational_from_json(lin[i], "linear coefficient");
    }
    if (j.contains("square")) {
        const ordered_json& sq = j["square"];
        if (!sq.is_array()) throw invariant_error("element: \"square\" must be an array of terms");
        for (const auto& term : sq) {
            if (!term.is_object() || !term.contains("coeff") || !term.contains("y") ||
                !term.contains("z"))
                throw invariant_error("element: each term needs \"coeff\", \"y\" and \"z\"");
            Rational coeff = rational_from_json(term["coeff"], "term coefficient");
            Monomial m(exponents_from_json(term["y"], d, "term y"),
                       exponents_from_json(term["z"], d, "term z"));
            if (!m.is_product_monomial())
                throw invariant_error("element: square monomial missing a y or z factor");
            g.square.add_term(m, coeff);
        }
    }
    g.validate();
    return g;
}

ordered_json partition_to_json(const Partition& lam) {
    ordered_json a = ordered_json::array();
    a.push_back(lam.l1);
    if (lam.l2 > 0) a.push_back(lam.l2);
    return a;
}

ordered_json poly_to_json(const Poly& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        ordered_json t;
        t["coeff"] = coeff.str();
        t["y"] = mono.yexp;
        t["z"] = mono.zexp;
        terms.push_back(std::move(t));
    }
    return terms;
}

} // namespace

GElement gelement_from_json_text(const std::string& text) {
    return gelement_from_json(parse_text(text));
}

VarietySpec spec_from_json_text(const std::string& text, const std::string& fallback_label) {
    ordered_json j = parse_text(text);
    if (!j.is_object()) throw invariant_error("spec: expected a JSON object");
    VarietySpec spec;
    spec.label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>()
                                                               : fallback_label;
    if (!j.contains("generators") || !j["generators"].is_array())
        throw invariant_error("spec: expected a \"generators\" array");
    for (const auto& gj : j["generators"]) {
        GElement g = gelement_from_json(gj);
        if (g.is_zero()) throw invariant_error("spec: zero generator");
        if (!g.is_multihomogeneous())
            throw invariant_error("spec: generators must be multihomogeneous");
        spec.generators.push_back(std::move(g));
    }
    return spec;
}

VarietySpec spec_from_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string stem = path;
    if (auto slash = stem.find_last_of('/'); slash != std::string::npos)
        stem = stem.substr(slash + 1);
    if (auto dot = stem.find_last_of('.'); dot != std::string::npos) stem = stem.substr(0, dot);
    return spec_from_json_text(buf.str(), stem);
}

namespace {

ordered_json table_json(const MultiplicityTable& table) {
    ordered_json j;
    j["n"] = table.n;
    ordered_json rows = ordered_json::array();
    for (const auto& [lam, m] : table.rows) {
        ordered_json r;
        r["lambda"] = partition_to_json(lam);
        r["m"] = m;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

} // namespace

std::string table_to_json(const MultiplicityTable& table) { return table_json(table).dump(2); }

std::string tables_to_json(const std::vector<MultiplicityTable>& tables) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : tables) arr.push_back(table_json(t));
    return arr.dump(2);
}

std::string polys_to_json(const std::vector<Poly>& ps) {
    ordered_json arr = ordered_json::array();
    for (const Poly& p : ps) arr.push_back(poly_to_json(p));
    return arr.dump(2);
}

std::string graph_to_json(const ConsequenceGraph& g) {
    ordered_json j;
    j["ambient"] = g.ambient;
    j["max_degree"] = g.max_degree;
    ordered_json verts = ordered_json::array();
    for (const IdentityVertex& v : g.vertices) {
        ordered_json vj;
        vj["name"] = v.name;
        vj["degree"] = v.degree;
        vj["lambda"] = partition_to_json(v.shape);
        ordered_json coords = ordered_json::array();
        for (const Rational& c : v.coords) coords.push_back(c.str());
        vj["coords"] = std::move(coords);
        if (v.is_family) {
            ordered_json pj;
            pj["axes"] = {v.axis_lo, v.axis_hi};
            pj["exclude_sum_zero"] = v.exclude_sum_zero;
            ordered_json reps = ordered_json::array();
            for (const auto& rep : v.reps)
                reps.push_back({rep.first.str(), rep.second.str()});
            pj["reps"] = std::move(reps);
            vj["pencil"] = std::move(pj);
        }
        verts.push_back(std::move(vj));
    }
    j["vertices"] = std::move(verts);
    ordered_json edges = ordered_json::array();
    for (const auto& e : g.edges) edges.push_back({e.first, e.second});
    j["edges"] = std::move(edges);
    ordered_json segs = ordered_json::array();
    for (const auto& s : g.segments) segs.push_back({s.first, s.second});
    j["segments"] = std::move(segs);
    j["continuations"] = g.continuations;
    return j.dump(2);
}

} // namespace bicomm
