#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "clocklattice/clock.hpp"
#include "clocklattice/decompose.hpp"
#include "clocklattice/matchings.hpp"
#include "clocklattice/morse.hpp"
#include "clocklattice/tait.hpp"

namespace clocklattice {

using Point = std::array<double, 2>;

// A balanced graph as stored on disk, with an optional drawing.
struct BalancedDocument {
  BalancedGraph graph;
  std::string label;
  std::vector<Point> positions;  // empty or one per vertex
};

// Schema: {"label"?, "black": [v...], "white": [v...], "edges": [[b, w]...],
// "embedding": [[edge...] per vertex, counterclockwise], "outer": [edge, from],
// "stars"?: {"faces": [i, j]}, "labels"?: [...], "positions"?: [[x, y]...]}.
// "outer" names a dart with the unbounded face on its left.
BalancedDocument parse_balanced_document(std::string_view json_text);
std::string serialize_balanced_json(const BalancedGraph& b, const std::string& label = {},
                                    const std::vector<Point>& positions = {});

std::string matchings_json(const BalancedGraph& b, const std::vector<Matching>& ms);
std::string decomposition_json(const Decomposition& d, const BalancedGraph& b);
std::string lattice_json(const ClockDag& cd);
std::string morse_json(const MorsePairing& p, const MorseReport& r);

// Black and white vertices filled accordingly; positions pinned when given.
std::string gamma_dot(const BalancedGraph& b, const std::vector<Point>& positions = {});
// Hasse diagram of the lattice, ranked by distance from the clocked state.
std::string lattice_dot(const ClockDag& cd);

}  // namespace clocklattice
