#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clocklattice/diagram.hpp"
#include "clocklattice/plane_graph.hpp"

namespace clocklattice {

// Face colors of a universe; adjacent faces always differ.
using FaceColoring = std::vector<Color>;

// Proper 2-coloring of the faces with `black_face` colored black.
FaceColoring checkerboard(const Universe& u, FaceId black_face);
// Same, with the face containing stars.first colored black.
FaceColoring checkerboard(const Universe& u, const StarPair& stars);

// One checkerboard class of faces as vertices, crossings as edges. Edge e is
// crossing e. Rotation at a vertex follows the corners of its face.
struct TaitGraph {
  PlaneGraph graph;
  std::vector<FaceId> face_of_vertex;
  std::vector<VertexId> vertex_of_face;  // -1 for faces of the other class
};

// (G, G*): the Tait graph on the black faces and the one on the white faces.
std::pair<TaitGraph, TaitGraph> build_tait(const Universe& u, const FaceColoring& coloring);

// Crossings as black vertices 0..n-1, faces as white vertices n..n+F-1, and
// one edge per corner: edge 4c+s joins crossing c to the face at corner (c, s).
struct OverlaidGraph {
  PlaneGraph graph;
  int num_crossings = 0;

  VertexId crossing_vertex(int c) const { return c; }
  VertexId face_vertex(FaceId f) const { return num_crossings + f; }
  std::vector<Color> colors() const;
};

OverlaidGraph build_overlaid(const Universe& u);

// Plane bipartite graph with equally many black and white vertices whose
// bounded faces are all squares. The unbounded face is tracked explicitly.
class BalancedGraph {
 public:
  // `labels` names the crossing (black) or universe face (white) a vertex came
  // from, -1 when the graph was given directly.
  BalancedGraph(PlaneGraph graph, std::vector<Color> colors, FaceId outer_face,
                std::optional<StarPair> stars = std::nullopt, std::vector<int> labels = {});

  const PlaneGraph& graph() const { return graph_; }
  int num_vertices() const { return graph_.num_vertices(); }
  int num_edges() const { return graph_.num_edges(); }
  Color color(VertexId v) const { return colors_[v]; }
  const std::vector<Color>& colors() const { return colors_; }
  const std::vector<VertexId>& blacks() const { return blacks_; }
  const std::vector<VertexId>& whites() const { return whites_; }
  int black_index(VertexId v) const { return rank_[v]; }
  int white_index(VertexId v) const { return rank_[v]; }
  int size() const { return static_cast<int>(blacks_.size()); }

  VertexId black_end(EdgeId e) const;
  VertexId white_end(EdgeId e) const;

  FaceId outer_face() const { return outer_; }
  // Bounded faces, ascending ids. Every one is a 4-cycle.
  const std::vector<FaceId>& squares() const { return squares_; }
  // Boundary of the outer face, walked counterclockwise around the drawing and
  // starting at the smallest black vertex on it.
  const std::vector<VertexId>& periphery() const { return periphery_; }
  // Edges of the outer face boundary, in the same order as periphery().
  const std::vector<EdgeId>& periphery_edges() const { return periphery_edges_; }

  const std::optional<StarPair>& stars() const { return stars_; }
  const std::vector<int>& labels() const { return labels_; }

  // Dart along edge e oriented from its white end to its black end.
  DartId white_to_black(EdgeId e) const;

 private:
  PlaneGraph graph_;
  std::vector<Color> colors_;
  FaceId outer_;
  std::optional<StarPair> stars_;
  std::vector<int> labels_;
  std::vector<VertexId> blacks_, whites_;
  std::vector<int> rank_;
  std::vector<FaceId> squares_;
  std::vector<VertexId> periphery_;
  std::vector<EdgeId> periphery_edges_;
};

// Deletes the two starred white vertices from the overlaid graph.
BalancedGraph build_balanced(const OverlaidGraph& g, const Universe& u, const StarPair& stars);
BalancedGraph build_balanced(const Universe& u, const StarPair& stars);

struct PeripheryReport {
  // Black valence histograms (index = valence, 0..4) on and off the periphery.
  std::array<int, 5> on_periphery{};
  std::array<int, 5> off_periphery{};
  std::vector<VertexId> two_valent_blacks;  // on the periphery, ascending
  std::optional<VertexId> offending_vertex;
  std::string message;

  int n2() const { return on_periphery[2]; }
  int n3() const { return on_periphery[3]; }
  int n4() const { return on_periphery[4]; }
  bool ok() const { return !offending_vertex.has_value(); }
};

// Counts black valences and checks: no black leaf, no 4-valent black on the
// periphery, exactly two 2-valent blacks on it. Never throws.
PeripheryReport periphery_report(const BalancedGraph& b);
// Same, throwing PeripheryViolation on failure.
PeripheryReport check_periphery(const BalancedGraph& b);

struct ReconstructedUniverse {
  Universe universe;
  StarPair stars;
  // Crossing index of each black vertex of the input graph.
  std::vector<int> crossing_of_black;
};

// Re-inserts the two deleted white vertices along the periphery and reads the
// universe off the resulting overlaid graph.
ReconstructedUniverse reconstruct_universe(const BalancedGraph& b);

}  // namespace clocklattice
