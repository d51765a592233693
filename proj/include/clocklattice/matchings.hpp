#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "clocklattice/plane_graph.hpp"
#include "clocklattice/tait.hpp"

namespace clocklattice {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultMatchingCap = 100000;

// A perfect matching of a BalancedGraph, stored as the matched edge of every
// black vertex (indexed by BalancedGraph::black_index). Ordering is
// lexicographic over that vector, which is the canonical enumeration order.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<EdgeId> edge_of_black) : edges_(std::move(edge_of_black)) {}

  const std::vector<EdgeId>& edges() const { return edges_; }
  EdgeId edge_of_black(int black_index) const { return edges_[black_index]; }
  int size() const { return static_cast<int>(edges_.size()); }

  bool contains(const BalancedGraph& b, EdgeId e) const { return edges_[b.black_index(b.black_end(e))] == e; }

  // (black vertex, white vertex) pairs in black order.
  std::vector<std::array<VertexId, 2>> pairs(const BalancedGraph& b) const;

  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<EdgeId> edges_;
};

// Throws InvalidGraph unless m covers every vertex of b exactly once.
void validate_matching(const BalancedGraph& b, const Matching& m);

// Some perfect matching (augmenting paths), or nullopt when none exists.
std::optional<Matching> find_matching(const BalancedGraph& b);

// Every perfect matching in canonical order. Throws CapExceeded once more
// than `cap` matchings are found.
std::vector<Matching> enumerate_matchings(const BalancedGraph& b, std::size_t cap = kDefaultMatchingCap);

// Matrix-tree count with exact integers. Loops are ignored.
BigInt count_spanning_trees(const PlaneGraph& g);
BigInt count_spanning_trees(const TaitGraph& g);

enum class EdgeState { allowed, forbidden };
using EdgeStatus = std::vector<EdgeState>;

EdgeStatus edge_status(const BalancedGraph& b, const std::vector<Matching>& ms);
// Same classification without enumerating: edge bw is allowed iff the graph
// minus b and w still has a perfect matching.
EdgeStatus edge_status(const BalancedGraph& b);

// Allowed edges form a connected spanning subgraph.
bool is_elementary(const BalancedGraph& b, const std::vector<Matching>& ms);
bool is_elementary(const BalancedGraph& b, const EdgeStatus& status);

// Whether the boundary of face f alternates with respect to m (matched edges
// at every other position).
bool alternates_on(const BalancedGraph& b, FaceId f, const Matching& m);
bool is_resonant(const BalancedGraph& b, FaceId f, const std::vector<Matching>& ms);

// Deleting any single vertex leaves at most one odd component.
bool single_vertex_tutte_holds(const PlaneGraph& g);

}  // namespace clocklattice
