#pragma once

#include "bicomm/rng.hpp"
#include "bicomm/tideal.hpp"
#include "bicomm/varieties.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bicomm {

// One node of a consequence graph: either a single identity line inside the
// highest-weight space of its shape, or a pencil of such lines spanned by two
// basis axes and restricted by an open coefficient condition.  Pencil nodes
// carry the sampled coefficient pairs that were used to decide their edges.
struct IdentityVertex {
    std::string name;
    int degree = 0;
    Partition shape{1};
    // Fixed line: coordinates in hwv_basis(shape), scaled so the last nonzero
    // entry is 1.  The degree-1 vertex stores {1}.
    std::vector<Rational> coords;

    bool is_family = false;
    int axis_lo = -1;
    int axis_hi = -1;
    // Pencil condition: both coefficients nonzero, and when this flag is set
    // their sum must be nonzero as well.
    bool exclude_sum_zero = false;
    std::vector<std::pair<Rational, Rational>> reps;

    // The identity this vertex displays.  Fixed vertices have exactly one;
    // pencil vertices return one member per sampled coefficient pair.
    GElement element() const;
    GElement element_at(const Rational& lo, const Rational& hi) const;
    std::vector<GElement> elements() const;

    // Human-readable description of the line/pencil, used in DOT labels.
    std::string line_tag() const;
};

struct ConsequenceGraph {
    std::string ambient; // label of the variety the graph lives over
    int max_degree = 0;
    std::vector<IdentityVertex> vertices; // grouped by increasing degree
    // Directed consequence edges; always from degree n to degree n+1.
    std::vector<std::pair<int, int>> edges;
    // Undirected markers tying a pencil vertex to the fixed lines of the same
    // degree it degenerates to (or two fixed lines of one pencil's closure).
    std::vector<std::pair<int, int>> segments;
    // Vertices of the top row whose consequence chains continue past
    // max_degree.
    std::vector<int> continuations;

    int vertex_index(const std::string& name) const; // -1 when absent
    bool has_edge(const std::string& from, const std::string& to) const;
    // Names of vertices with no outgoing edge and no continuation mark.
    std::vector<std::string> sink_names() const;

    bool operator==(const ConsequenceGraph& o) const;
};

// Identity of a vertex independent of its display name: degree, shape and
// either the normalized line coordinates or the pencil axes and condition.
std::string vertex_key(const IdentityVertex& v);

// Graph of the proper nonzero identity lines of the variety, degree by degree
// up to max_degree (which must be at least 2), with one edge for each
// consequence relation between lines of consecutive degrees.  The seed drives
// the sampling of pencil representatives; the fixed structure never depends
// on it.
ConsequenceGraph build_graph(const VarietySpec& spec, int max_degree,
                             std::uint64_t seed = kDefaultSeed);

// Whether every multiplicity of the variety up to max_degree (at least 3) is
// 0 or 1, which makes the subvariety lattice distributive.  Cross-checks the
// exhaustive scan against the degree-3 certificate and throws on mismatch.
bool is_distributive(const VarietySpec& spec, int max_degree);

// Set operations on subgraphs of a common ambient graph.  Both arguments must
// agree on ambient label and max_degree; vertices are matched by vertex_key.
ConsequenceGraph graph_union(const ConsequenceGraph& a, const ConsequenceGraph& b);
ConsequenceGraph graph_intersection(const ConsequenceGraph& a, const ConsequenceGraph& b);

// Subgraph on the given vertex indices, with induced edges, segments and
// continuation marks.
ConsequenceGraph induced_subgraph(const ConsequenceGraph& g, const std::vector<int>& keep);

// Vertices reachable from the given seed vertices along consequence edges
// (the seeds included): the subgraph generated by a set of identities.
ConsequenceGraph consequence_closure(const ConsequenceGraph& g, const std::vector<int>& seeds);

std::string to_dot(const ConsequenceGraph& g);

} // namespace bicomm
