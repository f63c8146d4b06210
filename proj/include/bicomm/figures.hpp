#pragma once

#include "bicomm/lattice.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bicomm {

// Reference shape of one published consequence graph: the vertex names with
// their degrees, the full edge list, the same-degree pencil segments, the
// terminal vertices and the chains marked as continuing past the cut-off.
struct FigureGolden {
    std::string id;     // "u-case1", "u-case2", "u-case4", "u-case5", "v-..."
    std::string family; // "u" or "v"
    int depth = 0;
    std::vector<std::pair<std::string, int>> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::pair<std::string, std::string>> segments;
    std::vector<std::string> sinks;
    std::vector<std::string> continuations;
};

const std::vector<FigureGolden>& figure_goldens();
const FigureGolden* find_figure(const std::string& id); // nullptr when unknown

// The coefficient-case representative variety the figure describes.
VarietySpec figure_spec(const std::string& id);

struct FigureCheck {
    bool pass = false;
    std::string report; // one line per category, mismatches spelled out
};

// Compares a computed graph against the reference shape, by vertex name.
FigureCheck compare_graph(const FigureGolden& fig, const ConsequenceGraph& g);

// Builds the graph of the figure's representative variety at the figure's
// depth and compares it against the reference shape.
FigureCheck check_figure(const std::string& id, std::uint64_t seed = kDefaultSeed);

} // namespace bicomm
