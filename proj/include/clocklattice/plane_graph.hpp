#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace clocklattice {

using VertexId = int;
using EdgeId = int;
using DartId = int;
using FaceId = int;

enum class Color : std::uint8_t { black, white };

inline Color opposite(Color c) { return c == Color::black ? Color::white : Color::black; }

// A connected-or-not plane multigraph given by a rotation system.
//
// Edge e joins endpoints(e)[0] and endpoints(e)[1]. Dart 2e runs from the
// first endpoint to the second, dart 2e+1 runs back. rotation(v) lists the
// darts leaving v in counterclockwise order. Faces are traced with the face on
// the left of every dart, so a bounded face is walked counterclockwise and the
// outer face clockwise (seen from outside the drawing).
class PlaneGraph {
 public:
  PlaneGraph() = default;
  PlaneGraph(std::vector<std::array<VertexId, 2>> edges, std::vector<std::vector<DartId>> rotation);

  int num_vertices() const { return static_cast<int>(rotation_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_darts() const { return 2 * num_edges(); }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  static constexpr EdgeId edge_of(DartId d) { return d >> 1; }
  static constexpr DartId twin(DartId d) { return d ^ 1; }
  static constexpr DartId dart(EdgeId e, bool reversed = false) { return 2 * e + (reversed ? 1 : 0); }

  const std::array<VertexId, 2>& endpoints(EdgeId e) const { return edges_[e]; }
  VertexId tail(DartId d) const { return edges_[edge_of(d)][d & 1]; }
  VertexId head(DartId d) const { return edges_[edge_of(d)][(d & 1) ^ 1]; }
  VertexId other_end(EdgeId e, VertexId v) const { return edges_[e][0] == v ? edges_[e][1] : edges_[e][0]; }

  std::span<const DartId> rotation(VertexId v) const { return rotation_[v]; }
  int degree(VertexId v) const { return static_cast<int>(rotation_[v].size()); }
  int position(DartId d) const { return position_[d]; }

  DartId next_ccw(DartId d) const;
  DartId next_cw(DartId d) const;
  // Successor of d along the boundary of its left face.
  DartId face_next(DartId d) const { return next_cw(twin(d)); }

  FaceId face_of(DartId d) const { return face_of_dart_[d]; }
  std::span<const DartId> face_boundary(FaceId f) const { return faces_[f]; }
  int face_length(FaceId f) const { return static_cast<int>(faces_[f].size()); }

  // Vertices along the boundary walk of f, one per dart (tails).
  std::vector<VertexId> face_vertices(FaceId f) const;

  PlaneGraph dual() const;

 private:
  void trace_faces();

  std::vector<std::array<VertexId, 2>> edges_;
  std::vector<std::vector<DartId>> rotation_;
  std::vector<int> position_;
  std::vector<std::vector<DartId>> faces_;
  std::vector<FaceId> face_of_dart_;
};

// A plane subgraph obtained by keeping some edges of a parent graph. Vertices
// left without edges are dropped; ids are compacted in increasing parent order.
struct Restriction {
  PlaneGraph graph;
  std::vector<VertexId> to_parent_vertex;
  std::vector<EdgeId> to_parent_edge;
  std::vector<VertexId> from_parent_vertex;  // -1 when dropped
  std::vector<EdgeId> from_parent_edge;      // -1 when dropped
};

Restriction restrict_edges(const PlaneGraph& parent, const std::vector<bool>& keep_edge);

// The face of `sub` that contains the parent face `parent_face`.
FaceId locate_face(const PlaneGraph& parent, const Restriction& sub, FaceId parent_face);

// Parent faces that merge into each face of the restriction: the label of
// parent face f is the id of the restriction face containing it.
std::vector<FaceId> parent_face_regions(const PlaneGraph& parent, const Restriction& sub);

// Component id per vertex, counting only vertices flagged in `alive` (others get -1).
std::vector<int> connected_components(const PlaneGraph& g, const std::vector<bool>& alive_edge);
std::vector<int> connected_components(const PlaneGraph& g);
bool is_connected(const PlaneGraph& g);

// Cut vertices of the graph restricted to `alive_edge`, ascending. Loops are ignored.
std::vector<VertexId> articulation_points(const PlaneGraph& g, const std::vector<bool>& alive_edge);
std::vector<VertexId> articulation_points(const PlaneGraph& g);
bool is_two_connected(const PlaneGraph& g);

// Edges whose removal disconnects their component (never loops).
std::vector<EdgeId> bridges(const PlaneGraph& g);

// Searches for an orientation-preserving isomorphism; returns the image of
// every dart of `a` in `b`. When colors are given they must be preserved.
std::optional<std::vector<DartId>> plane_isomorphism(const PlaneGraph& a, const PlaneGraph& b,
                                                     const std::vector<Color>* colors_a = nullptr,
                                                     const std::vector<Color>* colors_b = nullptr);

}  // namespace clocklattice
