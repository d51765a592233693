#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clocklattice/matchings.hpp"
#include "clocklattice/tait.hpp"

namespace clocklattice {

inline constexpr std::size_t kDefaultDiameterBound = 20000;
inline constexpr std::size_t kDefaultLatticeCheckBound = 2000;

// Which way a square face is walked when deciding the direction of a flip.
// Counterclockwise is the standard clock convention.
enum class ClockConvention { counterclockwise, clockwise };

struct FlipEdge {
  int a = 0;  // node indices, a < b
  int b = 0;
  FaceId face = 0;
};

// Perfect matchings joined by single-square flips.
class FlipGraph {
 public:
  FlipGraph(std::vector<Matching> nodes, std::vector<FlipEdge> edges);

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Matching>& nodes() const { return nodes_; }
  const Matching& node(int i) const { return nodes_[i]; }
  const std::vector<FlipEdge>& edges() const { return edges_; }
  // (neighbor, edge index) pairs.
  const std::vector<std::pair<int, int>>& neighbors(int i) const { return adjacency_[i]; }
  // Index of m among the nodes (which are kept sorted), or -1.
  int index_of(const Matching& m) const;

 private:
  std::vector<Matching> nodes_;
  std::vector<FlipEdge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

// Matching obtained by flipping square f, or nullopt when m does not
// alternate on f.
std::optional<Matching> flip(const BalancedGraph& b, const Matching& m, FaceId f);

// Whether m is the tail of the clock move across square f (m alternates on f
// and its edges there run white to black along the walk of f).
bool is_clock_tail(const BalancedGraph& b, const Matching& m, FaceId f,
                   ClockConvention convention = ClockConvention::counterclockwise);

FlipGraph build_flip_graph(const BalancedGraph& b, std::vector<Matching> ms);

// The flip graph with every edge directed tail -> head.
struct ClockDag {
  FlipGraph base;
  std::vector<int> tail;  // per flip edge
  std::vector<int> head;
  int zero_hat = -1;  // clocked state: the unique source
  int one_hat = -1;   // counterclocked state: the unique sink
  int height = 0;     // undirected BFS distance zero_hat -> one_hat
};

// Directs every flip; throws ClockTheoremViolation unless the result is
// acyclic with one source and one sink.
ClockDag orient_clock(FlipGraph fg, const BalancedGraph& b,
                      ClockConvention convention = ClockConvention::counterclockwise);

// Greedy walks against (resp. along) clock moves starting from any perfect
// matching; no enumeration involved.
Matching clocked_state(const BalancedGraph& b, ClockConvention convention = ClockConvention::counterclockwise);
Matching counterclocked_state(const BalancedGraph& b, ClockConvention convention = ClockConvention::counterclockwise);

// True iff no square admits a move out of m in the given direction.
bool admits_no_counterclock_move(const BalancedGraph& b, const Matching& m);
bool admits_no_clock_move(const BalancedGraph& b, const Matching& m);

struct HeightReport {
  int height = 0;
  int clock_number = 0;  // height + 1
};

HeightReport height(const ClockDag& cd);

// Largest shortest-path distance over all pairs. Throws TooLarge above `bound` nodes.
int diameter(const FlipGraph& fg, std::size_t bound = kDefaultDiameterBound);

struct ClockTheoremReport {
  bool acyclic = false;
  std::vector<int> sources;
  std::vector<int> sinks;
  std::vector<int> unreachable;     // nodes not reachable from the unique source
  std::vector<int> misoriented;     // flip edges contradicting the convention
  std::vector<int> cycle_edges;     // a directed cycle, when one exists
  bool passed() const {
    return acyclic && sources.size() == 1 && sinks.size() == 1 && unreachable.empty() && misoriented.empty();
  }
  std::string summary() const;
};

// Structural checks only.
ClockTheoremReport verify_clock_theorem(const ClockDag& cd);
// Structural checks plus re-deriving each edge direction from the embedding.
ClockTheoremReport verify_clock_theorem(const ClockDag& cd, const BalancedGraph& b,
                                        ClockConvention convention = ClockConvention::counterclockwise);

// Diagnostics about the partial order: longest chain from the source and, for
// small lattices, whether every pair has a meet and a join.
struct LatticeDiagnostics {
  int longest_chain = 0;
  bool graded = false;  // longest chain equals the BFS height
  std::optional<bool> is_lattice;  // unset above the size bound
};

LatticeDiagnostics lattice_diagnostics(const ClockDag& cd, std::size_t bound = kDefaultLatticeCheckBound);

}  // namespace clocklattice
