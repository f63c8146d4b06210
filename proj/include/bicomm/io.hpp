#pragma once

#include "bicomm/lattice.hpp"
#include "bicomm/tideal.hpp"

#include <stdexcept>
#include <string>

namespace bicomm {

// Malformed JSON input; positions are 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(int line_, int column_, const std::string& what)
        : std::runtime_error(what), line(line_), column(column_) {}
    int line;
    int column;
};

// Element JSON:
//   {"d": 2, "linear": ["0", "1/2"], "square": [{"coeff": "1", "y": [2,0], "z": [1,0]}]}
// "linear" may be omitted (all zero); coefficients are integers or "p/q"
// strings.  Structural violations (exponent arrays of the wrong length,
// square monomials without both a y and a z factor, non-multihomogeneous
// generators) raise invariant_error; malformed JSON raises parse_error.
GElement gelement_from_json_text(const std::string& text);

// Spec JSON: {"label": "...", "generators": [ <element>, ... ]}.
VarietySpec spec_from_json_text(const std::string& text, const std::string& fallback_label);
VarietySpec spec_from_json_file(const std::string& path);

// Serializers emit deterministic, insertion-ordered JSON.  One-row shapes
// render as [n], two-row shapes as [l1, l2]; coordinates are strings.
std::string table_to_json(const MultiplicityTable& table);
std::string tables_to_json(const std::vector<MultiplicityTable>& tables);
std::string polys_to_json(const std::vector<Poly>& ps);
std::string graph_to_json(const ConsequenceGraph& g);

} // namespace bicomm
