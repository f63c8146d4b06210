#pragma once

#include "bicomm/galgebra.hpp"
#include "bicomm/hwv.hpp"
#include "bicomm/poly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bicomm {

// A variety presented by a finite set of identities.  Generators must be
// multihomogeneous elements (each in its own model dimension).  `family` and
// the parameters tag specs produced by the built-in one-parameter families so
// graph construction can pick the matching vertex template; it carries no
// mathematical content.
struct VarietySpec {
    std::string label;
    std::vector<GElement> generators;
    std::string family;     // "", "u", or "v"
    Rational p1, p2;        // family parameters when tagged

    VarietySpec() = default;
    VarietySpec(std::string lbl, std::vector<GElement> gens)
        : label(std::move(lbl)), generators(std::move(gens)) {}
};

// Cocharacter row data for one degree: multiplicities per two-row shape.
struct MultiplicityTable {
    int n = 0;
    std::vector<std::pair<Partition, int>> rows; // ordered as two_row_partitions(n)

    int multiplicity_of(const Partition& lambda) const;
    // Sum of multiplicity * irreducible dimension over all rows.
    long long codimension() const;

    friend bool operator==(const MultiplicityTable& a, const MultiplicityTable& b) {
        return a.n == b.n && a.rows == b.rows;
    }
    friend bool operator!=(const MultiplicityTable& a, const MultiplicityTable& b) {
        return !(a == b);
    }
    std::string str() const;
};

// Span (deterministic reduced basis) of the (deg1, deg2) multihomogeneous
// component of the T-ideal generated by spec's identities, inside the
// two-variable model.  deg1 + deg2 >= 2 is required; the degree-1 component
// is handled directly by `multiplicity`.
std::vector<Poly> consequence_span_component(const VarietySpec& spec, int deg1, int deg2);

// Same, for a partition-shaped component.
std::vector<Poly> consequence_span(const VarietySpec& spec, const Partition& lambda);

// Multiplicity of the shape-lambda module in the variety's cocharacter:
// free multiplicity minus the number of independent highest-weight vectors
// of that shape absorbed by the T-ideal.
int multiplicity(const VarietySpec& spec, const Partition& lambda);

// All two-row multiplicities in degree n.
MultiplicityTable cocharacter(const VarietySpec& spec, int n);

// True when v lies in the T-ideal generated by spec's identities together
// with u (so v is a consequence of u inside the variety).  v must be
// multihomogeneous in the two-variable model.
bool implies(const VarietySpec& spec, const GElement& u, const GElement& v);

// Dimension of the degree-n multilinear component of the T-ideal, computed on
// the subset basis y_S z_{S^c} by degree-stepping closure (one-sided
// multiplications by the fresh variable, slot substitutions x_i -> x_i*x_m,
// and symmetric-group closure).  Entirely independent of the component-span
// route above, so the two can cross-check each other.
int oracle_multilinear_dim(const VarietySpec& spec, int n, int cap = 10);

// Caches base-ideal component spans of one variety so repeated implication
// and multiplicity queries (graph construction) stay cheap.
class ConsequenceOracle {
public:
    explicit ConsequenceOracle(VarietySpec spec) : spec_(std::move(spec)) {}

    const VarietySpec& spec() const { return spec_; }
    const RowSpan& component(int deg1, int deg2);
    int multiplicity(const Partition& lambda);
    bool implies(const GElement& u, const GElement& v);

private:
    VarietySpec spec_;
    std::map<std::pair<int, int>, RowSpan> components_;
    std::map<std::pair<int, int>, int> multiplicities_;
};

} // namespace bicomm
