#include "clocklattice/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <string>

#include "clocklattice/error.hpp"
#include "clocklattice/tait.hpp"
#include "json.hpp"

namespace clocklattice {

using nlohmann::json;

namespace {

int root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

Universe::Universe(std::vector<int> mate, std::string label) : mate_(std::move(mate)), label_(std::move(label)) {
  const int darts = static_cast<int>(mate_.size());
  if (darts == 0 || darts % 4 != 0) throw Error(ErrorKind::InvalidGraph, "a universe needs 4 darts per crossing and at least one crossing");
  for (int d = 0; d < darts; ++d) {
    const int m = mate_[d];
    if (m < 0 || m >= darts) throw Error(ErrorKind::InvalidGraph, "dart glued outside the universe");
    if (m == d) throw Error(ErrorKind::InvalidGraph, "dart glued to itself");
    if (mate_[m] != d) throw Error(ErrorKind::InvalidGraph, "edge gluing is not an involution");
  }
  const int n = num_crossings();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (int d = 0; d < darts; ++d) parent[root(parent, d / 4)] = root(parent, mate_[d] / 4);
  for (int c = 0; c < n; ++c) {
    if (root(parent, c) != root(parent, 0)) {
      throw Error(ErrorKind::Disconnected, "crossing " + std::to_string(c) + " is not connected to crossing 0");
    }
  }

  // Leaving c through arm s, the face on the left turns into arm s'-1 at the
  // far crossing.
  corner_face_.assign(darts, -1);
  for (int start = 0; start < darts; ++start) {
    if (corner_face_[start] != -1) continue;
    Face face;
    face.id = static_cast<FaceId>(faces_.size());
    int d = start;
    do {
      corner_face_[d] = face.id;
      face.boundary.push_back(Dart::from_index(d));
      const Dart far = Dart::from_index(mate_[d]);
      d = 4 * far.crossing + (far.slot + 3) % 4;
    } while (d != start);
    faces_.push_back(std::move(face));
  }
  if (num_faces() != n + 2) {
    throw Error(ErrorKind::NonSpherical, "V - E + F = " + std::to_string(n - 2 * n + num_faces()) +
                                             " (expected 2); the rotation system does not embed in the sphere");
  }
}

bool Universe::faces_adjacent(FaceId a, FaceId b) const {
  for (int d = 0; d < static_cast<int>(mate_.size()); ++d) {
    const auto sides = faces_beside(Dart::from_index(d));
    if ((sides[0] == a && sides[1] == b) || (sides[0] == b && sides[1] == a)) return true;
  }
  return false;
}

std::vector<std::array<int, 4>> Universe::pd_tuples() const {
  std::vector<int> arc(mate_.size(), 0);
  int next = 1;
  for (int d = 0; d < static_cast<int>(mate_.size()); ++d) {
    if (arc[d] != 0) continue;
    arc[d] = arc[mate_[d]] = next++;
  }
  std::vector<std::array<int, 4>> out(num_crossings());
  for (int c = 0; c < num_crossings(); ++c) {
    for (int s = 0; s < 4; ++s) out[c][s] = arc[4 * c + s];
  }
  return out;
}

Universe universe_from_tuples(const std::vector<std::array<int, 4>>& tuples, std::string label) {
  std::map<long long, std::vector<int>> uses;
  for (int c = 0; c < static_cast<int>(tuples.size()); ++c) {
    for (int s = 0; s < 4; ++s) uses[tuples[c][s]].push_back(4 * c + s);
  }
  std::vector<int> mate(4 * tuples.size(), -1);
  for (const auto& [arc, darts] : uses) {
    if (darts.size() != 2) {
      throw Error(ErrorKind::LabelArity,
                  "arc label " + std::to_string(arc) + " appears " + std::to_string(darts.size()) + " times");
    }
    mate[darts[0]] = darts[1];
    mate[darts[1]] = darts[0];
  }
  return Universe(std::move(mate), std::move(label));
}

Universe parse_pd(std::string_view text) {
  std::vector<std::array<int, 4>> tuples;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) -> void {
    throw Error(ErrorKind::MalformedToken, why + " at offset " + std::to_string(i));
  };
  auto skip_separators = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  auto expect = [&](char ch) {
    skip_separators();
    if (i >= text.size() || text[i] != ch) fail(std::string("expected '") + ch + "'");
    ++i;
  };
  auto number = [&]() -> int {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (begin == i || i - begin > 9) fail("expected a positive arc label");
    const int value = std::stoi(std::string(text.substr(begin, i - begin)));
    if (value <= 0) fail("arc labels must be positive");
    return value;
  };

  skip_separators();
  bool wrapped = false;
  if (text.substr(i, 3) == "PD[") {
    wrapped = true;
    i += 3;
  }
  while (true) {
    skip_separators();
    if (i >= text.size()) break;
    if (wrapped && text[i] == ']') {
      ++i;
      wrapped = false;
      skip_separators();
      if (i < text.size()) fail("trailing characters");
      break;
    }
    if (text[i] != 'X') fail("expected a crossing token X[a,b,c,d]");
    ++i;
    expect('[');
    std::array<int, 4> tuple{};
    for (int k = 0; k < 4; ++k) {
      if (k > 0) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size() || text[i] != ',') fail("expected ','");
        ++i;
      }
      tuple[k] = number();
    }
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size() || text[i] != ']') fail("expected ']'");
    ++i;
    tuples.push_back(tuple);
  }
  if (wrapped) fail("unterminated PD[");
  if (tuples.empty()) fail("no crossings");
  return universe_from_tuples(tuples);
}

UniverseDocument parse_universe_document(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::SchemaViolation, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::SchemaViolation, "top level must be an object");
  if (!doc.contains("crossings") || !doc["crossings"].is_array() || doc["crossings"].empty()) {
    throw Error(ErrorKind::SchemaViolation, "\"crossings\" must be a non-empty array");
  }
  std::vector<std::array<int, 4>> tuples;
  for (const auto& item : doc["crossings"]) {
    if (!item.is_array() || item.size() != 4) throw Error(ErrorKind::SchemaViolation, "each crossing must list 4 arc labels");
    std::array<int, 4> t{};
    for (int k = 0; k < 4; ++k) {
      if (!item[k].is_number_integer() || item[k].get<long long>() <= 0) {
        throw Error(ErrorKind::SchemaViolation, "arc labels must be positive integers");
      }
      t[k] = item[k].get<int>();
    }
    tuples.push_back(t);
  }
  std::string label;
  if (doc.contains("label") && !doc["label"].is_null()) {
    if (!doc["label"].is_string()) throw Error(ErrorKind::SchemaViolation, "\"label\" must be a string");
    label = doc["label"].get<std::string>();
  }
  UniverseDocument out{universe_from_tuples(tuples, label), std::nullopt};
  if (doc.contains("stars") && !doc["stars"].is_null()) {
    const auto& s = doc["stars"];
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() || !s[1].is_number_integer()) {
      throw Error(ErrorKind::SchemaViolation, "\"stars\" must be a pair of face indices");
    }
    StarPair stars{s[0].get<int>(), s[1].get<int>()};
    const int f = out.universe.num_faces();
    if (stars.first < 0 || stars.first >= f || stars.second < 0 || stars.second >= f) {
      throw Error(ErrorKind::SchemaViolation, "star face index out of range");
    }
    out.stars = stars;
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "crossings" && key != "label" && key != "stars") {
      throw Error(ErrorKind::SchemaViolation, "unexpected key \"" + key + "\"");
    }
  }
  return out;
}

Universe parse_universe_json(std::string_view json_text) { return parse_universe_document(json_text).universe; }

std::string serialize_universe_json(const Universe& u, const std::optional<StarPair>& stars) {
  json doc;
  if (!u.label().empty()) doc["label"] = u.label();
  doc["crossings"] = u.pd_tuples();
  if (stars) doc["stars"] = {stars->first, stars->second};
  return doc.dump();
}

std::string to_pd_string(const Universe& u) {
  std::string out;
  for (const auto& t : u.pd_tuples()) {
    if (!out.empty()) out += ' ';
    out += "X[" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "," +
           std::to_string(t[3]) + "]";
  }
  return out;
}

std::vector<Face> trace_faces(const Universe& u) { return u.faces(); }

std::vector<int> detect_nugatory(const Universe& u) {
  std::vector<int> out;
  for (int c = 0; c < u.num_crossings(); ++c) {
    if (u.face_at(c, 0) == u.face_at(c, 2) || u.face_at(c, 1) == u.face_at(c, 3)) out.push_back(c);
  }
  return out;
}

bool is_prime_like(const Universe& u, FaceId black_face) {
  const auto nugatory = detect_nugatory(u);
  if (!nugatory.empty()) {
    throw Error(ErrorKind::NugatoryPresent, "crossing " + std::to_string(nugatory.front()) + " is nugatory");
  }
  const auto coloring = checkerboard(u, black_face);
  const auto tait = build_tait(u, coloring);
  return articulation_points(tait.first.graph).empty();
}

bool is_prime_like(const Universe& u) { return is_prime_like(u, 0); }

StarPair auto_stars(const Universe& u) {
  for (FaceId i = 0; i < u.num_faces(); ++i) {
    for (FaceId j = i + 1; j < u.num_faces(); ++j) {
      if (u.faces_adjacent(i, j)) return {i, j};
    }
  }
  throw Error(ErrorKind::InvalidGraph, "universe has no pair of adjacent faces");
}

void require_adjacent(const Universe& u, const StarPair& stars) {
  if (stars.first == stars.second || stars.first < 0 || stars.second < 0 || stars.first >= u.num_faces() ||
      stars.second >= u.num_faces() || !u.faces_adjacent(stars.first, stars.second)) {
    throw Error(ErrorKind::StarsNotAdjacent,
                "faces " + std::to_string(stars.first) + " and " + std::to_string(stars.second) + " do not share an edge");
  }
}

bool isomorphic(const Universe& a, const Universe& b) {
  if (a.num_crossings() != b.num_crossings()) return false;
  const int n = a.num_crossings();
  for (int target = 0; target < n; ++target) {
    for (int shift = 0; shift < 4; ++shift) {
      std::vector<int> image(n, -1), rot(n, 0), preimage(n, -1);
      std::vector<int> stack{0};
      image[0] = target;
      rot[0] = shift;
      preimage[target] = 0;
      bool ok = true;
      while (ok && !stack.empty()) {
        const int c = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4 && ok; ++s) {
          const Dart far_a = a.mate({c, s});
          const Dart far_b = b.mate({image[c], (s + rot[c]) % 4});
          const int want_rot = ((far_b.slot - far_a.slot) % 4 + 4) % 4;
          if (image[far_a.crossing] == -1) {
            if (preimage[far_b.crossing] != -1) {
              ok = false;
              break;
            }
            image[far_a.crossing] = far_b.crossing;
            preimage[far_b.crossing] = far_a.crossing;
            rot[far_a.crossing] = want_rot;
            stack.push_back(far_a.crossing);
          } else if (image[far_a.crossing] != far_b.crossing || rot[far_a.crossing] != want_rot) {
            ok = false;
          }
        }
      }
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace clocklattice
