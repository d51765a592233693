#include "clocklattice/tait.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "clocklattice/error.hpp"

namespace clocklattice {

FaceColoring checkerboard(const Universe& u, FaceId black_face) {
  FaceColoring color(u.num_faces(), Color::black);
  std::vector<bool> seen(u.num_faces(), false);
  std::deque<FaceId> queue{black_face};
  seen[black_face] = true;
  // Neighbors of a face are the faces across each of its boundary edges.
  while (!queue.empty()) {
    const FaceId f = queue.front();
    queue.pop_front();
    for (const Dart& corner : u.face(f).boundary) {
      // Corner (c, s) is bounded by arms s and s+1.
      for (const Dart arm : {corner, Dart{corner.crossing, (corner.slot + 1) % 4}}) {
        const auto sides = u.faces_beside(arm);
        const FaceId g = sides[0] == f ? sides[1] : sides[0];
        if (!seen[g]) {
          seen[g] = true;
          color[g] = opposite(color[f]);
          queue.push_back(g);
        } else if (color[g] == color[f]) {
          throw Error(ErrorKind::NotBipartiteDual, "faces " + std::to_string(f) + " and " + std::to_string(g) +
                                                       " share an edge but received the same color");
        }
      }
    }
  }
  return color;
}

FaceColoring checkerboard(const Universe& u, const StarPair& stars) { return checkerboard(u, stars.first); }

namespace {

TaitGraph tait_for(const Universe& u, const FaceColoring& coloring, Color cls) {
  TaitGraph t;
  t.vertex_of_face.assign(u.num_faces(), -1);
  for (FaceId f = 0; f < u.num_faces(); ++f) {
    if (coloring[f] != cls) continue;
    t.vertex_of_face[f] = static_cast<VertexId>(t.face_of_vertex.size());
    t.face_of_vertex.push_back(f);
  }
  const int n = u.num_crossings();
  // Corner parity of the class at each crossing: corners k and k+2 belong to it.
  std::vector<int> parity(n);
  std::vector<std::array<VertexId, 2>> edges(n);
  for (int c = 0; c < n; ++c) {
    parity[c] = coloring[u.face_at(c, 0)] == cls ? 0 : 1;
    edges[c] = {t.vertex_of_face[u.face_at(c, parity[c])], t.vertex_of_face[u.face_at(c, parity[c] + 2)]};
  }
  std::vector<std::vector<DartId>> rot(t.face_of_vertex.size());
  for (std::size_t v = 0; v < t.face_of_vertex.size(); ++v) {
    for (const Dart& corner : u.face(t.face_of_vertex[v]).boundary) {
      rot[v].push_back(PlaneGraph::dart(corner.crossing, corner.slot != parity[corner.crossing]));
    }
  }
  t.graph = PlaneGraph(std::move(edges), std::move(rot));
  return t;
}

}  // namespace

std::pair<TaitGraph, TaitGraph> build_tait(const Universe& u, const FaceColoring& coloring) {
  return {tait_for(u, coloring, Color::black), tait_for(u, coloring, Color::white)};
}

std::vector<Color> OverlaidGraph::colors() const {
  std::vector<Color> out(graph.num_vertices(), Color::white);
  std::fill(out.begin(), out.begin() + num_crossings, Color::black);
  return out;
}

OverlaidGraph build_overlaid(const Universe& u) {
  const int n = u.num_crossings();
  std::vector<std::array<VertexId, 2>> edges(4 * n);
  std::vector<std::vector<DartId>> rot(n + u.num_faces());
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      const EdgeId e = 4 * c + s;
      edges[e] = {c, n + u.face_at(c, s)};
      rot[c].push_back(PlaneGraph::dart(e));
    }
  }
  for (const Face& f : u.faces()) {
    for (const Dart& corner : f.boundary) rot[n + f.id].push_back(PlaneGraph::dart(corner.index(), true));
  }
  return OverlaidGraph{PlaneGraph(std::move(edges), std::move(rot)), n};
}

BalancedGraph::BalancedGraph(PlaneGraph graph, std::vector<Color> colors, FaceId outer_face,
                             std::optional<StarPair> stars, std::vector<int> labels)
    : graph_(std::move(graph)), colors_(std::move(colors)), outer_(outer_face), stars_(stars),
      labels_(std::move(labels)) {
  const int nv = graph_.num_vertices();
  if (static_cast<int>(colors_.size()) != nv) throw Error(ErrorKind::InvalidGraph, "one color per vertex required");
  if (labels_.empty()) labels_.assign(nv, -1);
  if (static_cast<int>(labels_.size()) != nv) throw Error(ErrorKind::InvalidGraph, "one label per vertex required");
  rank_.assign(nv, -1);
  for (VertexId v = 0; v < nv; ++v) {
    auto& bucket = colors_[v] == Color::black ? blacks_ : whites_;
    rank_[v] = static_cast<int>(bucket.size());
    bucket.push_back(v);
    if (graph_.degree(v) == 0) throw Error(ErrorKind::InvalidGraph, "isolated vertex " + std::to_string(v));
  }
  if (blacks_.size() != whites_.size() || blacks_.empty()) {
    throw Error(ErrorKind::InvalidGraph, "graph is not balanced: " + std::to_string(blacks_.size()) + " black vs " +
                                             std::to_string(whites_.size()) + " white");
  }
  for (EdgeId e = 0; e < graph_.num_edges(); ++e) {
    const auto& ends = graph_.endpoints(e);
    if (colors_[ends[0]] == colors_[ends[1]]) throw Error(ErrorKind::InvalidGraph, "edge " + std::to_string(e) + " is monochromatic");
  }
  if (!is_connected(graph_)) throw Error(ErrorKind::InvalidGraph, "graph is disconnected");
  if (outer_ < 0 || outer_ >= graph_.num_faces()) throw Error(ErrorKind::InvalidGraph, "outer face out of range");
  if (graph_.num_vertices() - graph_.num_edges() + graph_.num_faces() != 2) {
    throw Error(ErrorKind::InvalidGraph, "rotation system is not planar");
  }
  for (FaceId f = 0; f < graph_.num_faces(); ++f) {
    if (f == outer_) continue;
    if (graph_.face_length(f) != 4) {
      throw Error(ErrorKind::InvalidGraph, "bounded face " + std::to_string(f) + " has length " +
                                               std::to_string(graph_.face_length(f)));
    }
    squares_.push_back(f);
  }

  // The outer walk keeps the outer face on its left, i.e. runs clockwise
  // around the drawing; reverse it.
  const auto walk = graph_.face_boundary(outer_);
  const int len = static_cast<int>(walk.size());
  std::vector<DartId> ccw;
  ccw.reserve(len);
  for (int i = len - 1; i >= 0; --i) ccw.push_back(PlaneGraph::twin(walk[i]));
  int start = 0;
  for (int i = 0; i < len; ++i) {
    const VertexId v = graph_.tail(ccw[i]);
    const VertexId best = graph_.tail(ccw[start]);
    const bool v_black = colors_[v] == Color::black;
    const bool best_black = colors_[best] == Color::black;
    if ((v_black && !best_black) || (v_black == best_black && v < best)) start = i;
  }
  for (int i = 0; i < len; ++i) {
    const DartId d = ccw[(start + i) % len];
    periphery_.push_back(graph_.tail(d));
    periphery_edges_.push_back(PlaneGraph::edge_of(d));
  }
}

VertexId BalancedGraph::black_end(EdgeId e) const {
  const auto& ends = graph_.endpoints(e);
  return colors_[ends[0]] == Color::black ? ends[0] : ends[1];
}

VertexId BalancedGraph::white_end(EdgeId e) const {
  const auto& ends = graph_.endpoints(e);
  return colors_[ends[0]] == Color::white ? ends[0] : ends[1];
}

DartId BalancedGraph::white_to_black(EdgeId e) const {
  return colors_[graph_.endpoints(e)[0]] == Color::white ? PlaneGraph::dart(e) : PlaneGraph::dart(e, true);
}

BalancedGraph build_balanced(const OverlaidGraph& g, const Universe& u, const StarPair& stars) {
  require_adjacent(u, stars);
  const VertexId w1 = g.face_vertex(stars.first);
  const VertexId w2 = g.face_vertex(stars.second);
  std::vector<bool> keep(g.graph.num_edges(), true);
  for (EdgeId e = 0; e < g.graph.num_edges(); ++e) {
    const VertexId w = g.graph.endpoints(e)[1];
    if (w == w1 || w == w2) keep[e] = false;
  }
  Restriction r = restrict_edges(g.graph, keep);
  for (int c = 0; c < g.num_crossings; ++c) {
    if (r.from_parent_vertex[c] < 0) {
      throw PeripheryViolation(c, "crossing " + std::to_string(c) + " touches only the starred faces");
    }
  }
  const FaceId outer = locate_face(g.graph, r, g.graph.face_of(g.graph.rotation(w1).front()));
  const auto parent_colors = g.colors();
  std::vector<Color> colors;
  std::vector<int> labels;
  for (VertexId p : r.to_parent_vertex) {
    colors.push_back(parent_colors[p]);
    labels.push_back(p < g.num_crossings ? p : p - g.num_crossings);
  }
  return BalancedGraph(std::move(r.graph), std::move(colors), outer, stars, std::move(labels));
}

BalancedGraph build_balanced(const Universe& u, const StarPair& stars) {
  return build_balanced(build_overlaid(u), u, stars);
}

PeripheryReport periphery_report(const BalancedGraph& b) {
  PeripheryReport report;
  const auto& g = b.graph();
  std::vector<bool> on(b.num_vertices(), false);
  for (VertexId v : b.periphery()) on[v] = true;
  auto flag = [&](VertexId v, std::string why) {
    if (!report.offending_vertex) {
      report.offending_vertex = v;
      report.message = std::move(why);
    }
  };
  std::vector<VertexId> periphery_blacks;
  for (VertexId v : b.blacks()) {
    const int deg = g.degree(v);
    if (deg > 4) {
      flag(v, "black vertex " + std::to_string(v) + " has valence " + std::to_string(deg));
      continue;
    }
    (on[v] ? report.on_periphery : report.off_periphery)[deg]++;
    if (deg <= 1) flag(v, "black leaf at vertex " + std::to_string(v));
    if (on[v]) {
      periphery_blacks.push_back(v);
      if (deg == 4) flag(v, "four-valent black vertex " + std::to_string(v) + " on the periphery");
      if (deg == 2) report.two_valent_blacks.push_back(v);
    }
  }
  if (report.two_valent_blacks.size() > 2) {
    flag(report.two_valent_blacks[2], "more than two two-valent black vertices on the periphery");
  } else if (report.two_valent_blacks.size() < 2 && !periphery_blacks.empty()) {
    flag(periphery_blacks.front(), "fewer than two two-valent black vertices on the periphery");
  }
  return report;
}

PeripheryReport check_periphery(const BalancedGraph& b) {
  auto report = periphery_report(b);
  if (!report.ok()) throw PeripheryViolation(*report.offending_vertex, report.message);
  return report;
}

ReconstructedUniverse reconstruct_universe(const BalancedGraph& b) {
  const auto report = check_periphery(b);
  const auto& g = b.graph();
  const auto walk = g.face_boundary(b.outer_face());
  const int len = static_cast<int>(walk.size());
  {
    std::vector<int> seen(g.num_vertices(), 0);
    for (DartId d : walk) {
      if (++seen[g.tail(d)] > 1) throw PeripheryViolation(g.tail(d), "periphery is not a simple cycle");
    }
  }
  const VertexId a = report.two_valent_blacks[0];
  const VertexId bb = report.two_valent_blacks[1];
  int ia = -1, ib = -1;
  for (int i = 0; i < len; ++i) {
    if (g.tail(walk[i]) == a) ia = i;
    if (g.tail(walk[i]) == bb) ib = i;
  }

  const VertexId w1 = g.num_vertices();
  const VertexId w2 = w1 + 1;
  std::vector<std::array<VertexId, 2>> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) edges.push_back(g.endpoints(e));
  std::vector<std::vector<DartId>> rot(g.num_vertices() + 2);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    rot[v].assign(g.rotation(v).begin(), g.rotation(v).end());
  }
  // Outer sector at walk position k sits just counterclockwise of walk[k].
  auto attach = [&](int k, VertexId w) {
    const VertexId p = g.tail(walk[k]);
    const EdgeId e = static_cast<EdgeId>(edges.size());
    edges.push_back({p, w});
    return e;
  };
  std::vector<std::vector<DartId>> inserted(len);
  // Arc from a to b (walk order) hangs off w1; from b back to a off w2.
  for (int k = ia;; k = (k + 1) % len) {
    if (b.color(g.tail(walk[k])) == Color::black) {
      const EdgeId e = attach(k, w1);
      inserted[k].push_back(PlaneGraph::dart(e));
      rot[w1].push_back(PlaneGraph::dart(e, true));
    }
    if (k == ib) break;
  }
  for (int k = ib;; k = (k + 1) % len) {
    if (b.color(g.tail(walk[k])) == Color::black) {
      const EdgeId e = attach(k, w2);
      inserted[k].push_back(PlaneGraph::dart(e));
      rot[w2].push_back(PlaneGraph::dart(e, true));
    }
    if (k == ia) break;
  }
  // At a the sector sees w1 first, then w2; at b it sees w2 first, then w1.
  std::swap(inserted[ib][0], inserted[ib][1]);
  for (int k = 0; k < len; ++k) {
    if (inserted[k].empty()) continue;
    auto& r = rot[g.tail(walk[k])];
    auto it = std::find(r.begin(), r.end(), walk[k]);
    r.insert(it + 1, inserted[k].begin(), inserted[k].end());
  }

  PlaneGraph hat(std::move(edges), std::move(rot));
  const int n = b.size();
  if (hat.num_faces() != 2 * n) throw Error(ErrorKind::InvalidGraph, "re-inserted overlaid graph is not spherical");
  for (FaceId f = 0; f < hat.num_faces(); ++f) {
    if (hat.face_length(f) != 4) throw Error(ErrorKind::InvalidGraph, "re-inserted overlaid graph has a non-square face");
  }
  // Universe dart (c, s) runs through the square left of corner s-1.
  std::vector<std::vector<int>> darts_in_square(hat.num_faces());
  std::vector<int> crossing_of_black(b.num_vertices(), -1);
  for (VertexId v : b.blacks()) crossing_of_black[v] = b.black_index(v);
  for (VertexId v : b.blacks()) {
    const auto r = hat.rotation(v);
    if (r.size() != 4) throw Error(ErrorKind::InvalidGraph, "black vertex is not four-valent after re-insertion");
    for (int s = 0; s < 4; ++s) darts_in_square[hat.face_of(r[(s + 3) % 4])].push_back(4 * b.black_index(v) + s);
  }
  std::vector<int> mate(4 * n, -1);
  for (const auto& pair : darts_in_square) {
    if (pair.size() != 2) throw Error(ErrorKind::InvalidGraph, "square without exactly two crossing arms");
    mate[pair[0]] = pair[1];
    mate[pair[1]] = pair[0];
  }
  Universe u(std::move(mate));
  auto star_face = [&](VertexId w) {
    const DartId d = PlaneGraph::twin(hat.rotation(w).front());
    const VertexId black = hat.tail(d);
    return u.face_at(b.black_index(black), hat.position(d));
  };
  StarPair stars{star_face(w1), star_face(w2)};
  if (stars.first > stars.second) std::swap(stars.first, stars.second);
  return ReconstructedUniverse{std::move(u), stars, std::move(crossing_of_black)};
}

}  // namespace clocklattice
