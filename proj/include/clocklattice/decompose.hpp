#pragma once

#include <string>
#include <vector>

#include "clocklattice/matchings.hpp"
#include "clocklattice/tait.hpp"

namespace clocklattice {

enum class DecompositionRoute { symdiff, peel };

std::string_view to_string(DecompositionRoute route);

struct Cycle {
  int id = 0;
  std::vector<EdgeId> edges;        // in counterclockwise order around the interior
  std::vector<VertexId> vertices;   // aligned with edges: edges[i] leaves vertices[i]
  std::vector<FaceId> interior;     // bounded faces of the host graph inside the cycle
  int s = 0;                        // square faces inside, counted once per enclosing cycle
  std::vector<VertexId> two_valent_blacks;  // blacks on the cycle of valence 2 within the interior graph
  int parent = -1;                  // innermost enclosing cycle, -1 for a root
  int depth = 0;
};

struct Decomposition {
  DecompositionRoute route = DecompositionRoute::symdiff;
  std::vector<EdgeId> leaves;  // ascending
  std::vector<Cycle> cycles;

  std::vector<std::vector<EdgeId>> cycle_edge_sets() const;  // each sorted, list sorted
};

// Cycles are the components of zero xor one; leaves are the shared edges.
// Throws NotExtremal when zero/one are not the clocked/counterclocked states.
Decomposition symdiff_decompose(const BalancedGraph& b, const Matching& zero, const Matching& one);

// Repeatedly strips the outer cycle, prunes leaves and breaks cut vertices.
// Throws NugatoryPresent or NotPrimeLike when the graph does not come from a
// prime-like diagram without nugatory crossings, and OddComponentAssertFailed
// when a break does not find exactly one odd component.
Decomposition peel_decompose(const BalancedGraph& b);
// Peeling without the diagram preconditions.
Decomposition peel_decompose_unchecked(const BalancedGraph& b);

struct SquareCount {
  int cycle = 0;
  int s = 0;
};

std::vector<SquareCount> square_counts(const Decomposition& d, const BalancedGraph& b);

// Sum of s over all cycles.
int height_formula(const Decomposition& d);

// Bounded faces of b separated from the outer face by the given edges.
std::vector<FaceId> faces_inside(const BalancedGraph& b, const std::vector<EdgeId>& boundary);

// Everything of b on or inside the cycle, as a balanced graph of its own.
BalancedGraph interior_graph(const BalancedGraph& b, const Cycle& c);

struct CycleCheck {
  int cycle = 0;
  bool periphery_ok = false;      // exactly two 2-valent blacks, no black leaf, no 4-valent black on it
  bool elementary = false;
  bool two_connected = false;
  bool alternating = false;       // alternates between zero and one
  bool positive_area = false;     // s >= 1
  std::vector<std::string> failures;
};

struct CycleReport {
  bool leaves_are_intersection = false;  // leaves == zero & one
  bool partition = false;                // cycles and leaves cover every vertex exactly once
  std::vector<CycleCheck> cycles;
  std::vector<std::string> failures;
  bool passed() const;
};

CycleReport check_cycle_properties(const Decomposition& d, const BalancedGraph& b, const Matching& zero,
                                   const Matching& one, std::size_t cap = kDefaultMatchingCap);

}  // namespace clocklattice
