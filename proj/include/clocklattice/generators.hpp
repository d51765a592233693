#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "clocklattice/diagram.hpp"
#include "clocklattice/io.hpp"
#include "clocklattice/tait.hpp"

namespace clocklattice {

// m x n squares; both odd.
struct GridSpec {
  int m = 1;
  int n = 1;
};

// Vertex (i, j), 0 <= i <= m, 0 <= j <= n, has id i*(n+1)+j and sits at
// x = j, y = i. Corner (0, 0) is black.
BalancedGraph grid_graph(const GridSpec& spec);
std::vector<Point> grid_positions(const GridSpec& spec);

// Sum over i of (m-2i)(n-2i) while both factors stay positive.
int grid_height_closed_form(const GridSpec& spec);

// Parses "grid_M_N". Returns nullopt for other names.
std::optional<GridSpec> parse_grid_name(std::string_view name);

// Universe of the closure of a braid word on `strands` strands. Letter k in
// 1..strands-1 crosses positions k and k+1; signs are ignored.
Universe braid_closure(const std::vector<int>& word, int strands, std::string label = {});

// Random braid word in which every generator occurs at least once.
std::vector<int> random_braid_word(std::mt19937_64& rng, int strands, int length);

struct Fixture {
  std::string name;
  std::optional<Universe> universe;
  std::optional<StarPair> stars;       // explicit choice stored with the fixture
  std::optional<BalancedGraph> drawn;  // graph transcribed from a drawing, if any
  std::vector<Point> positions;        // positions of drawn's vertices

  // Stars to use: the stored pair or the automatic one.
  StarPair star_pair() const;
  // The balanced graph of the fixture: the universe with its stars deleted.
  // Drawn fixtures (including grids) carry the universe recovered from the drawing.
  BalancedGraph gamma() const;
};

std::vector<std::string> fixture_names();  // stored fixtures; grid_M_N is generated on demand
// Raw bytes of a stored fixture file, e.g. "abe6.gamma.json". Throws UnknownFixture.
std::string_view fixture_file(std::string_view filename);
std::vector<std::string> fixture_files();
std::uint64_t fnv1a64(std::string_view bytes);

Fixture load_fixture(std::string_view name);

}  // namespace clocklattice
