#include "clocklattice/plane_graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "clocklattice/error.hpp"

namespace clocklattice {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PlaneGraph::PlaneGraph(std::vector<std::array<VertexId, 2>> edges, std::vector<std::vector<DartId>> rotation)
    : edges_(std::move(edges)), rotation_(std::move(rotation)) {
  const int nv = num_vertices();
  position_.assign(num_darts(), -1);
  for (const auto& e : edges_) {
    if (e[0] < 0 || e[0] >= nv || e[1] < 0 || e[1] >= nv) {
      throw Error(ErrorKind::InvalidGraph, "edge endpoint out of range");
    }
  }
  for (VertexId v = 0; v < nv; ++v) {
    for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i) {
      const DartId d = rotation_[v][i];
      if (d < 0 || d >= num_darts()) throw Error(ErrorKind::InvalidGraph, "rotation names an unknown dart");
      if (tail(d) != v) {
        throw Error(ErrorKind::InvalidGraph, "dart " + std::to_string(d) + " listed at a vertex it does not leave");
      }
      if (position_[d] != -1) throw Error(ErrorKind::InvalidGraph, "dart listed twice in the rotation system");
      position_[d] = i;
    }
  }
  for (DartId d = 0; d < num_darts(); ++d) {
    if (position_[d] == -1) throw Error(ErrorKind::InvalidGraph, "dart missing from the rotation system");
  }
  trace_faces();
}

DartId PlaneGraph::next_ccw(DartId d) const {
  const auto& rot = rotation_[tail(d)];
  return rot[(position_[d] + 1) % rot.size()];
}

DartId PlaneGraph::next_cw(DartId d) const {
  const auto& rot = rotation_[tail(d)];
  return rot[(position_[d] + rot.size() - 1) % rot.size()];
}

void PlaneGraph::trace_faces() {
  face_of_dart_.assign(num_darts(), -1);
  faces_.clear();
  for (DartId start = 0; start < num_darts(); ++start) {
    if (face_of_dart_[start] != -1) continue;
    const FaceId f = num_faces();
    std::vector<DartId> boundary;
    DartId d = start;
    do {
      face_of_dart_[d] = f;
      boundary.push_back(d);
      d = face_next(d);
    } while (d != start);
    faces_.push_back(std::move(boundary));
  }
}

std::vector<VertexId> PlaneGraph::face_vertices(FaceId f) const {
  std::vector<VertexId> out;
  out.reserve(faces_[f].size());
  for (DartId d : faces_[f]) out.push_back(tail(d));
  return out;
}

PlaneGraph PlaneGraph::dual() const {
  // Dual dart 2e+k crosses primal dart 2e+k from its left face to its right face.
  std::vector<std::array<VertexId, 2>> dual_edges(num_edges());
  for (EdgeId e = 0; e < num_edges(); ++e) dual_edges[e] = {face_of(dart(e)), face_of(dart(e, true))};
  std::vector<std::vector<DartId>> rot(num_faces());
  for (FaceId f = 0; f < num_faces(); ++f) {
    for (DartId d : faces_[f]) rot[f].push_back(d);
  }
  return PlaneGraph(std::move(dual_edges), std::move(rot));
}

Restriction restrict_edges(const PlaneGraph& parent, const std::vector<bool>& keep_edge) {
  Restriction r;
  r.from_parent_vertex.assign(parent.num_vertices(), -1);
  r.from_parent_edge.assign(parent.num_edges(), -1);
  std::vector<bool> used(parent.num_vertices(), false);
  for (EdgeId e = 0; e < parent.num_edges(); ++e) {
    if (!keep_edge[e]) continue;
    used[parent.endpoints(e)[0]] = true;
    used[parent.endpoints(e)[1]] = true;
  }
  for (VertexId v = 0; v < parent.num_vertices(); ++v) {
    if (!used[v]) continue;
    r.from_parent_vertex[v] = static_cast<int>(r.to_parent_vertex.size());
    r.to_parent_vertex.push_back(v);
  }
  std::vector<std::array<VertexId, 2>> edges;
  for (EdgeId e = 0; e < parent.num_edges(); ++e) {
    if (!keep_edge[e]) continue;
    r.from_parent_edge[e] = static_cast<int>(edges.size());
    r.to_parent_edge.push_back(e);
    edges.push_back({r.from_parent_vertex[parent.endpoints(e)[0]], r.from_parent_vertex[parent.endpoints(e)[1]]});
  }
  std::vector<std::vector<DartId>> rot(r.to_parent_vertex.size());
  for (std::size_t i = 0; i < r.to_parent_vertex.size(); ++i) {
    for (DartId d : parent.rotation(r.to_parent_vertex[i])) {
      const EdgeId e = r.from_parent_edge[PlaneGraph::edge_of(d)];
      if (e >= 0) rot[i].push_back(PlaneGraph::dart(e, d & 1));
    }
  }
  r.graph = PlaneGraph(std::move(edges), std::move(rot));
  return r;
}

std::vector<FaceId> parent_face_regions(const PlaneGraph& parent, const Restriction& sub) {
  UnionFind uf(parent.num_faces());
  for (EdgeId e = 0; e < parent.num_edges(); ++e) {
    if (sub.from_parent_edge[e] < 0) {
      uf.unite(parent.face_of(PlaneGraph::dart(e)), parent.face_of(PlaneGraph::dart(e, true)));
    }
  }
  std::vector<FaceId> root_to_sub(parent.num_faces(), -1);
  for (DartId d = 0; d < sub.graph.num_darts(); ++d) {
    const DartId pd = PlaneGraph::dart(sub.to_parent_edge[PlaneGraph::edge_of(d)], d & 1);
    root_to_sub[uf.find(parent.face_of(pd))] = sub.graph.face_of(d);
  }
  std::vector<FaceId> out(parent.num_faces());
  for (FaceId f = 0; f < parent.num_faces(); ++f) out[f] = root_to_sub[uf.find(f)];
  return out;
}

FaceId locate_face(const PlaneGraph& parent, const Restriction& sub, FaceId parent_face) {
  return parent_face_regions(parent, sub)[parent_face];
}

std::vector<int> connected_components(const PlaneGraph& g, const std::vector<bool>& alive_edge) {
  UnionFind uf(g.num_vertices());
  std::vector<bool> touched(g.num_vertices(), false);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!alive_edge[e]) continue;
    const auto& ends = g.endpoints(e);
    uf.unite(ends[0], ends[1]);
    touched[ends[0]] = touched[ends[1]] = true;
  }
  std::vector<int> label(g.num_vertices(), -1);
  std::vector<int> root_label(g.num_vertices(), -1);
  int next = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!touched[v]) continue;
    const int r = uf.find(v);
    if (root_label[r] < 0) root_label[r] = next++;
    label[v] = root_label[r];
  }
  return label;
}

std::vector<int> connected_components(const PlaneGraph& g) {
  UnionFind uf(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e) uf.unite(g.endpoints(e)[0], g.endpoints(e)[1]);
  std::vector<int> label(g.num_vertices(), -1);
  std::vector<int> root_label(g.num_vertices(), -1);
  int next = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const int r = uf.find(v);
    if (root_label[r] < 0) root_label[r] = next++;
    label[v] = root_label[r];
  }
  return label;
}

bool is_connected(const PlaneGraph& g) {
  const auto label = connected_components(g);
  return std::all_of(label.begin(), label.end(), [](int l) { return l == 0; });
}

namespace {

// Tarjan low-link over the live edges. Parallel edges are distinguished by id,
// so a doubled edge is never a bridge.
struct LowLink {
  const PlaneGraph& g;
  const std::vector<bool>& alive;
  std::vector<int> order, low;
  std::vector<bool> is_cut;
  std::vector<EdgeId> bridge_list;
  int counter = 0;

  LowLink(const PlaneGraph& graph, const std::vector<bool>& alive_edge)
      : g(graph), alive(alive_edge), order(graph.num_vertices(), -1), low(graph.num_vertices(), 0),
        is_cut(graph.num_vertices(), false) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (order[v] < 0) visit(v, -1);
    }
  }

  void visit(VertexId v, EdgeId via) {
    order[v] = low[v] = counter++;
    int children = 0;
    for (DartId d : g.rotation(v)) {
      const EdgeId e = PlaneGraph::edge_of(d);
      if (!alive[e] || e == via) continue;
      const VertexId w = g.head(d);
      if (w == v) continue;
      if (order[w] < 0) {
        ++children;
        visit(w, e);
        low[v] = std::min(low[v], low[w]);
        if (via >= 0 && low[w] >= order[v]) is_cut[v] = true;
        if (low[w] > order[v]) bridge_list.push_back(e);
      } else {
        low[v] = std::min(low[v], order[w]);
      }
    }
    if (via < 0 && children > 1) is_cut[v] = true;
  }
};

}  // namespace

std::vector<VertexId> articulation_points(const PlaneGraph& g, const std::vector<bool>& alive_edge) {
  LowLink ll(g, alive_edge);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (ll.is_cut[v]) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> articulation_points(const PlaneGraph& g) {
  return articulation_points(g, std::vector<bool>(g.num_edges(), true));
}

bool is_two_connected(const PlaneGraph& g) {
  return g.num_vertices() >= 2 && is_connected(g) && articulation_points(g).empty();
}

std::vector<EdgeId> bridges(const PlaneGraph& g) {
  LowLink ll(g, std::vector<bool>(g.num_edges(), true));
  std::sort(ll.bridge_list.begin(), ll.bridge_list.end());
  return ll.bridge_list;
}

std::optional<std::vector<DartId>> plane_isomorphism(const PlaneGraph& a, const PlaneGraph& b,
                                                     const std::vector<Color>* colors_a,
                                                     const std::vector<Color>* colors_b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() || a.num_faces() != b.num_faces()) {
    return std::nullopt;
  }
  if (a.num_edges() == 0) {
    if (a.num_vertices() > 1) return std::nullopt;
    return std::vector<DartId>{};
  }
  const bool colored = colors_a != nullptr && colors_b != nullptr;
  for (DartId candidate = 0; candidate < b.num_darts(); ++candidate) {
    std::vector<DartId> image(a.num_darts(), -1);
    std::vector<DartId> preimage(b.num_darts(), -1);
    std::vector<DartId> stack{0};
    image[0] = candidate;
    preimage[candidate] = 0;
    bool ok = true;
    auto assign = [&](DartId x, DartId y) {
      if (image[x] == -1 && preimage[y] == -1) {
        image[x] = y;
        preimage[y] = x;
        stack.push_back(x);
        return true;
      }
      return image[x] == y;
    };
    while (ok && !stack.empty()) {
      const DartId x = stack.back();
      stack.pop_back();
      const DartId y = image[x];
      if (colored && (*colors_a)[a.tail(x)] != (*colors_b)[b.tail(y)]) {
        ok = false;
        break;
      }
      if (a.degree(a.tail(x)) != b.degree(b.tail(y))) {
        ok = false;
        break;
      }
      ok = assign(PlaneGraph::twin(x), PlaneGraph::twin(y)) && assign(a.next_ccw(x), b.next_ccw(y));
    }
    if (!ok) continue;
    if (std::find(image.begin(), image.end(), -1) != image.end()) continue;
    return image;
  }
  return std::nullopt;
}

}  // namespace clocklattice
