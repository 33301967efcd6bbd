#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pushgame/types.hpp"

namespace pushgame {

// Parsed board file: the validated graph plus any named labelings and an
// optional modulus. Labeling values are kept raw; resolve_labeling pairs
// them with a concrete modulus and range-checks.
struct GraphFile {
    SimplexGraph graph;
    std::vector<std::pair<std::string, std::vector<int>>> labelings;
    std::optional<int> modulus;
};

// Line-based text format, '#' starts a comment:
//   simplex n <n>
//   vertices <v>
//   region <i0> ... <in>        (one line per region)
//   modulus <m>                 (optional)
//   labeling <name> <v values>  (optional, repeatable)
// The first two lines are fixed; unknown keywords are errors.
GraphFile parse_graph_file(std::istream& in);
GraphFile parse_graph_text(const std::string& text);

std::string serialize_graph(const SimplexGraph& g);

Labeling resolve_labeling(const GraphFile& file, const std::string& name, int modulus);

}  // namespace pushgame
