#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clocklattice/clock.hpp"
#include "clocklattice/decompose.hpp"
#include "clocklattice/generators.hpp"
#include "clocklattice/io.hpp"

namespace clocklattice {

// Everything needed to run the lattice computations on one input.
struct Instance {
  std::string label;
  std::optional<Universe> universe;
  std::optional<StarPair> stars;
  BalancedGraph gamma;
  std::vector<Point> positions;  // empty when the input carries no drawing
  std::optional<GridSpec> grid;
};

Instance instance_from_universe(const Universe& u, std::optional<StarPair> stars = std::nullopt);
Instance instance_from_balanced(const BalancedDocument& doc);
// Grid names are generated; named universes use their stored or automatic stars.
Instance instance_from_fixture(std::string_view name, std::optional<StarPair> stars = std::nullopt);
// Accepts universe JSON, balanced-graph JSON, or PD text.
Instance instance_from_text(std::string_view text, std::optional<StarPair> stars = std::nullopt);

// Throws NugatoryPresent / NotPrimeLike unless the diagram meets the
// hypotheses of the peeling construction.
void require_strict(const Instance& inst);

// The clock lattice: enumeration, flip graph, orientation.
ClockDag build_lattice(const BalancedGraph& b, std::size_t cap = kDefaultMatchingCap);

struct HeightRoutes {
  std::optional<int> bfs;                 // unset when enumeration exceeds the cap
  std::optional<std::size_t> num_states;
  std::string bfs_skipped;

  Decomposition symdiff;
  int symdiff_height = 0;

  std::optional<Decomposition> peel;      // unset when the diagram is outside its hypotheses
  std::optional<int> peel_height;
  std::string peel_skipped;

  std::optional<int> closed_form;         // grids only

  std::vector<std::string> disagreements;
  bool agree() const { return disagreements.empty(); }
  // The height by the most direct route available.
  int height() const { return bfs ? *bfs : symdiff_height; }
};

// BFS height, the symmetric-difference sum, the peeling sum and, for grids,
// the closed form; any mismatch is listed in `disagreements`.
HeightRoutes compute_height_routes(const Instance& inst, std::size_t cap = kDefaultMatchingCap);

}  // namespace clocklattice
