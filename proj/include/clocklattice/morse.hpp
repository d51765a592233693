#pragma once

#include <compare>
#include <string>
#include <vector>

#include "clocklattice/diagram.hpp"
#include "clocklattice/matchings.hpp"
#include "clocklattice/tait.hpp"

namespace clocklattice {

// A cell of the sphere complex whose 1-skeleton is the Tait graph G: 0-cells
// are the black faces of the universe, 1-cells the crossings, 2-cells the
// white faces. `id` is the universe face id for dimensions 0 and 2 and the
// crossing index for dimension 1.
struct Cell {
  int dim = 0;
  int id = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct CellComplex {
  std::vector<Cell> cells;  // sorted
  // Hasse diagram: one entry per corner (c, s), joining the 1-cell c to the
  // face cell at that corner. Index k of this list is corner k = 4c+s.
  std::vector<std::array<Cell, 2>> incidences;  // (upper, lower)

  int index_of(const Cell& c) const;
  int euler_characteristic() const;
};

// Cells and incidences of the complex; `coloring` decides which faces are 0-cells.
CellComplex build_cell_complex(const Universe& u, const FaceColoring& coloring);

struct MorsePair {
  Cell lower;
  Cell upper;
  int incidence = -1;  // corner realizing the pair
};

struct MorsePairing {
  CellComplex complex;
  std::vector<MorsePair> pairs;
  std::vector<Cell> critical;  // the cells the construction leaves unpaired (the starred faces)
};

// Reads each matched edge of b (crossing to face) as an elementary collapse.
// b must be the graph obtained from u with its stars deleted.
MorsePairing matching_to_morse(const BalancedGraph& b, const Matching& m, const Universe& u);

struct MorseReport {
  bool nonempty = false;
  bool is_matching = false;  // pairs are disjoint, incident, and one dimension apart
  bool acyclic = false;      // Hasse digraph with paired incidences reversed
  std::vector<Cell> critical;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
  std::vector<int> critical_dimensions() const;
};

MorseReport verify_morse(const MorsePairing& p);

}  // namespace clocklattice
