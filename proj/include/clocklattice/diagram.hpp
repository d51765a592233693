#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clocklattice/plane_graph.hpp"

namespace clocklattice {

// Half of a universe edge, leaving `crossing` through arm `slot`. Slots are
// numbered 0..3 counterclockwise around the crossing.
struct Dart {
  int crossing = 0;
  int slot = 0;

  int index() const { return 4 * crossing + slot; }
  static Dart from_index(int i) { return {i / 4, i % 4}; }
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

// A face of the universe. Corner (c, s) is the sector of crossing c between
// arms s and s+1; the face leaving c through arm s occupies that corner.
struct Face {
  FaceId id = 0;
  std::vector<Dart> boundary;  // corners in counterclockwise walk order

  int degree() const { return static_cast<int>(boundary.size()); }
};

struct StarPair {
  FaceId first = 0;
  FaceId second = 0;
  friend bool operator==(const StarPair&, const StarPair&) = default;
};

// A 4-regular plane curve system: the projection graph of a knot or link with
// crossing information forgotten. Immutable once built.
class Universe {
 public:
  // `mate[4c+s]` is the dart glued to dart (c, s). Throws on fixed points,
  // a non-involution, a disconnected map, or a non-spherical embedding.
  explicit Universe(std::vector<int> mate, std::string label = {});

  int num_crossings() const { return static_cast<int>(mate_.size() / 4); }
  int num_edges() const { return 2 * num_crossings(); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  const std::string& label() const { return label_; }

  Dart mate(Dart d) const { return Dart::from_index(mate_[d.index()]); }
  const std::vector<int>& mates() const { return mate_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId f) const { return faces_[f]; }

  // Face occupying corner (crossing, slot).
  FaceId face_at(int crossing, int slot) const { return corner_face_[4 * crossing + ((slot % 4) + 4) % 4]; }

  // Faces on either side of the edge containing dart d: the corners (c, s-1) and (c, s).
  std::array<FaceId, 2> faces_beside(Dart d) const { return {face_at(d.crossing, d.slot - 1), face_at(d.crossing, d.slot)}; }

  bool faces_adjacent(FaceId a, FaceId b) const;

  // Arc labels 1..2n, numbered by first occurrence in dart order.
  std::vector<std::array<int, 4>> pd_tuples() const;

 private:
  std::vector<int> mate_;
  std::string label_;
  std::vector<Face> faces_;
  std::vector<FaceId> corner_face_;
};

// A universe together with an optional explicit star choice (JSON fixtures).
struct UniverseDocument {
  Universe universe;
  std::optional<StarPair> stars;
};

Universe universe_from_tuples(const std::vector<std::array<int, 4>>& tuples, std::string label = {});
Universe parse_pd(std::string_view text);
UniverseDocument parse_universe_document(std::string_view json_text);
Universe parse_universe_json(std::string_view json_text);
std::string serialize_universe_json(const Universe& u, const std::optional<StarPair>& stars = std::nullopt);
std::string to_pd_string(const Universe& u);

// The face list in canonical order (sorted by smallest corner).
std::vector<Face> trace_faces(const Universe& u);

std::vector<int> detect_nugatory(const Universe& u);

// Whether the Tait graph on the color class of `black_face` has no cut vertex.
// Throws NugatoryPresent when the universe has a nugatory crossing.
bool is_prime_like(const Universe& u);
bool is_prime_like(const Universe& u, FaceId black_face);

StarPair auto_stars(const Universe& u);
void require_adjacent(const Universe& u, const StarPair& stars);

// Orientation-preserving isomorphism test (crossing relabeling plus cyclic
// slot shifts).
bool isomorphic(const Universe& a, const Universe& b);

}  // namespace clocklattice
