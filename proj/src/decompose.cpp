#include "clocklattice/decompose.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "clocklattice/clock.hpp"
#include "clocklattice/error.hpp"

namespace clocklattice {

std::string_view to_string(DecompositionRoute route) {
  return route == DecompositionRoute::symdiff ? "symdiff" : "peel";
}

std::vector<std::vector<EdgeId>> Decomposition::cycle_edge_sets() const {
  std::vector<std::vector<EdgeId>> out;
  for (const auto& c : cycles) {
    auto edges = c.edges;
    std::sort(edges.begin(), edges.end());
    out.push_back(std::move(edges));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FaceId> faces_inside(const BalancedGraph& b, const std::vector<EdgeId>& boundary) {
  const PlaneGraph& g = b.graph();
  std::vector<bool> wall(g.num_edges(), false);
  for (EdgeId e : boundary) wall.at(e) = true;
  std::vector<bool> seen(g.num_faces(), false);
  std::deque<FaceId> queue{b.outer_face()};
  seen[b.outer_face()] = true;
  while (!queue.empty()) {
    const FaceId f = queue.front();
    queue.pop_front();
    for (DartId d : g.face_boundary(f)) {
      if (wall[PlaneGraph::edge_of(d)]) continue;
      const FaceId other = g.face_of(PlaneGraph::twin(d));
      if (!seen[other]) {
        seen[other] = true;
        queue.push_back(other);
      }
    }
  }
  std::vector<FaceId> out;
  for (FaceId f = 0; f < g.num_faces(); ++f) {
    if (!seen[f]) out.push_back(f);
  }
  return out;
}

namespace {

// Edges bounding any of the given faces.
std::vector<bool> edges_of_faces(const PlaneGraph& g, const std::vector<FaceId>& faces) {
  std::vector<bool> keep(g.num_edges(), false);
  for (FaceId f : faces) {
    for (DartId d : g.face_boundary(f)) keep[PlaneGraph::edge_of(d)] = true;
  }
  return keep;
}

// Orders the edge set of a simple cycle counterclockwise around its interior,
// starting at its smallest vertex, and fills in the interior data.
Cycle make_cycle(const BalancedGraph& b, const std::vector<EdgeId>& edge_set) {
  const PlaneGraph& g = b.graph();
  if (edge_set.empty()) throw Error(ErrorKind::InvalidGraph, "empty cycle");
  std::map<VertexId, std::vector<EdgeId>> incident;
  for (EdgeId e : edge_set) {
    const auto [u, v] = g.endpoints(e);
    if (u == v) throw Error(ErrorKind::InvalidGraph, "cycle contains a loop");
    incident[u].push_back(e);
    incident[v].push_back(e);
  }
  for (const auto& [v, es] : incident) {
    if (es.size() != 2) throw Error(ErrorKind::InvalidGraph, "edge set is not a simple cycle at vertex " + std::to_string(v));
  }
  const VertexId start = incident.begin()->first;

  auto walk = [&](EdgeId first) {
    Cycle c;
    VertexId v = start;
    EdgeId e = first;
    do {
      c.vertices.push_back(v);
      c.edges.push_back(e);
      v = g.other_end(e, v);
      const auto& es = incident[v];
      e = es[0] == e ? es[1] : es[0];
    } while (v != start);
    return c;
  };

  Cycle c = walk(incident[start][0]);
  if (c.edges.size() != edge_set.size()) throw Error(ErrorKind::InvalidGraph, "edge set is not a single cycle");
  c.interior = faces_inside(b, c.edges);
  const EdgeId e0 = c.edges[0];
  const DartId d0 = g.endpoints(e0)[0] == start ? PlaneGraph::dart(e0) : PlaneGraph::dart(e0, true);
  if (!std::binary_search(c.interior.begin(), c.interior.end(), g.face_of(d0))) {
    auto interior = std::move(c.interior);
    c = walk(incident[start][1]);
    c.interior = std::move(interior);
  }
  c.s = static_cast<int>(c.interior.size());

  const auto inside = edges_of_faces(g, c.interior);
  for (VertexId v : c.vertices) {
    if (b.color(v) != Color::black) continue;
    int valence = 0;
    for (DartId d : g.rotation(v)) valence += inside[PlaneGraph::edge_of(d)] ? 1 : 0;
    if (valence == 2) c.two_valent_blacks.push_back(v);
  }
  std::sort(c.two_valent_blacks.begin(), c.two_valent_blacks.end());
  return c;
}

// Parent = innermost cycle whose interior strictly contains this one's.
void assign_nesting(std::vector<Cycle>& cycles) {
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    auto& c = cycles[i];
    c.parent = -1;
    std::size_t best = 0;
    for (std::size_t j = 0; j < cycles.size(); ++j) {
      if (i == j) continue;
      const auto& o = cycles[j];
      if (o.interior.size() <= c.interior.size()) continue;
      if (!std::includes(o.interior.begin(), o.interior.end(), c.interior.begin(), c.interior.end())) continue;
      if (c.parent < 0 || o.interior.size() < best) {
        c.parent = static_cast<int>(j);
        best = o.interior.size();
      }
    }
  }
  for (auto& c : cycles) {
    c.depth = 0;
    for (int p = c.parent; p >= 0; p = cycles[p].parent) ++c.depth;
  }
}

VertexId smallest_vertex(const Cycle& c) { return *std::min_element(c.vertices.begin(), c.vertices.end()); }

// Reorders by (depth, smallest vertex) and renumbers ids and parents.
void sort_by_nesting(std::vector<Cycle>& cycles) {
  std::vector<int> order(cycles.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (cycles[x].depth != cycles[y].depth) return cycles[x].depth < cycles[y].depth;
    return smallest_vertex(cycles[x]) < smallest_vertex(cycles[y]);
  });
  std::vector<int> new_id(cycles.size());
  for (std::size_t k = 0; k < order.size(); ++k) new_id[order[k]] = static_cast<int>(k);
  std::vector<Cycle> sorted;
  for (int k : order) {
    Cycle c = cycles[k];
    c.id = new_id[k];
    if (c.parent >= 0) c.parent = new_id[c.parent];
    sorted.push_back(std::move(c));
  }
  cycles = std::move(sorted);
}

}  // namespace

Decomposition symdiff_decompose(const BalancedGraph& b, const Matching& zero, const Matching& one) {
  validate_matching(b, zero);
  validate_matching(b, one);
  if (!admits_no_counterclock_move(b, zero)) {
    throw Error(ErrorKind::NotExtremal, "first matching admits a move against the clock");
  }
  if (!admits_no_clock_move(b, one)) throw Error(ErrorKind::NotExtremal, "second matching admits a clock move");

  const PlaneGraph& g = b.graph();
  Decomposition d;
  d.route = DecompositionRoute::symdiff;
  std::vector<bool> in_diff(g.num_edges(), false);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const bool z = zero.contains(b, e);
    const bool o = one.contains(b, e);
    if (z && o) d.leaves.push_back(e);
    in_diff[e] = z != o;
  }
  const auto comp = connected_components(g, in_diff);
  std::map<int, std::vector<EdgeId>> by_component;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (in_diff[e]) by_component[comp[g.endpoints(e)[0]]].push_back(e);
  }
  for (const auto& [id, edges] : by_component) d.cycles.push_back(make_cycle(b, edges));
  assign_nesting(d.cycles);
  sort_by_nesting(d.cycles);
  return d;
}

Decomposition peel_decompose(const BalancedGraph& b) {
  // A black leaf, or a black joined twice to one white, means some face meets
  // the crossing at two corners. Reconstruction would reject these graphs with
  // a periphery error, so report the real cause first.
  const PlaneGraph& g = b.graph();
  for (VertexId v : b.blacks()) {
    std::set<VertexId> whites;
    for (DartId dd : g.rotation(v)) whites.insert(g.head(dd));
    if (g.degree(v) <= 1 || static_cast<int>(whites.size()) < g.degree(v)) {
      throw Error(ErrorKind::NugatoryPresent, "crossing " + std::to_string(b.labels()[v]) + " is nugatory");
    }
  }
  const auto rebuilt = reconstruct_universe(b);
  const auto nugatory = detect_nugatory(rebuilt.universe);
  if (!nugatory.empty()) {
    throw Error(ErrorKind::NugatoryPresent, "crossing " + std::to_string(nugatory.front()) + " is nugatory");
  }
  if (!is_prime_like(rebuilt.universe)) throw Error(ErrorKind::NotPrimeLike, "diagram is not prime-like");
  return peel_decompose_unchecked(b);
}

Decomposition peel_decompose_unchecked(const BalancedGraph& b) {
  const PlaneGraph& g = b.graph();
  const int nv = g.num_vertices();
  Decomposition d;
  d.route = DecompositionRoute::peel;
  std::vector<bool> alive(g.num_edges(), true);
  std::vector<bool> removed(nv, false);  // vertex already assigned to a leaf or a cycle

  auto kill_vertex = [&](VertexId v) {
    removed[v] = true;
    for (DartId dd : g.rotation(v)) alive[PlaneGraph::edge_of(dd)] = false;
  };
  auto alive_degree = [&](VertexId v) {
    int k = 0;
    for (DartId dd : g.rotation(v)) k += alive[PlaneGraph::edge_of(dd)] ? 1 : 0;
    return k;
  };

  while (true) {
    for (VertexId v = 0; v < nv; ++v) {
      if (!removed[v] && alive_degree(v) == 0) {
        throw Error(ErrorKind::OddComponentAssertFailed, "vertex " + std::to_string(v) + " left without partner");
      }
    }
    const auto comp = connected_components(g, alive);
    // Component holding the smallest remaining vertex.
    int target = -1;
    for (VertexId v = 0; v < nv && target < 0; ++v) {
      if (!removed[v]) target = comp[v];
    }
    if (target < 0) break;
    std::vector<VertexId> members;
    for (VertexId v = 0; v < nv; ++v) {
      if (!removed[v] && comp[v] == target) members.push_back(v);
    }
    std::vector<bool> in_comp(g.num_edges(), false);
    for (EdgeId e = 0; e < g.num_edges(); ++e) in_comp[e] = alive[e] && comp[g.endpoints(e)[0]] == target;

    // Pruning: a vertex of degree one hangs on a leaf edge.
    std::optional<VertexId> hanging;
    for (VertexId v : members) {
      if (alive_degree(v) == 1) {
        hanging = v;
        break;
      }
    }
    if (hanging) {
      EdgeId leaf = -1;
      for (DartId dd : g.rotation(*hanging)) {
        if (alive[PlaneGraph::edge_of(dd)]) leaf = PlaneGraph::edge_of(dd);
      }
      const auto [u, v] = g.endpoints(leaf);
      d.leaves.push_back(leaf);
      kill_vertex(u);
      kill_vertex(v);
      continue;
    }

    // Breaking: keep only the cut vertex's edges into the odd component.
    const auto cuts = articulation_points(g, in_comp);
    if (!cuts.empty()) {
      const VertexId cut = cuts.front();
      std::vector<bool> without(g.num_edges(), false);
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        without[e] = in_comp[e] && g.endpoints(e)[0] != cut && g.endpoints(e)[1] != cut;
      }
      const auto sub = connected_components(g, without);
      // Isolated vertices get their own component keys below zero.
      auto key = [&](VertexId v) { return sub[v] >= 0 ? sub[v] : -1 - v; };
      std::map<int, int> size;
      for (VertexId v : members) {
        if (v != cut) ++size[key(v)];
      }
      std::vector<int> odd;
      for (const auto& [k, n] : size) {
        if (n % 2 == 1) odd.push_back(k);
      }
      if (odd.size() != 1) {
        throw Error(ErrorKind::OddComponentAssertFailed, "cut vertex " + std::to_string(cut) + " leaves " +
                                                             std::to_string(odd.size()) + " odd components");
      }
      for (DartId dd : g.rotation(cut)) {
        const EdgeId e = PlaneGraph::edge_of(dd);
        if (alive[e] && key(g.head(dd)) != odd.front()) alive[e] = false;
      }
      continue;
    }

    // Two-connected: the outer boundary is the next cycle.
    const auto restriction = restrict_edges(g, in_comp);
    const FaceId outer = locate_face(g, restriction, b.outer_face());
    std::vector<EdgeId> boundary;
    for (DartId dd : restriction.graph.face_boundary(outer)) {
      boundary.push_back(restriction.to_parent_edge[PlaneGraph::edge_of(dd)]);
    }
    Cycle c = make_cycle(b, boundary);
    c.id = static_cast<int>(d.cycles.size());
    for (VertexId v : c.vertices) kill_vertex(v);
    d.cycles.push_back(std::move(c));
  }

  std::sort(d.leaves.begin(), d.leaves.end());
  assign_nesting(d.cycles);
  return d;
}

std::vector<SquareCount> square_counts(const Decomposition& d, const BalancedGraph& b) {
  std::vector<SquareCount> out;
  for (const auto& c : d.cycles) {
    const auto inside = faces_inside(b, c.edges);
    int s = 0;
    for (FaceId f : inside) s += b.graph().face_length(f) == 4 ? 1 : 0;
    out.push_back({c.id, s});
  }
  return out;
}

int height_formula(const Decomposition& d) {
  int total = 0;
  for (const auto& c : d.cycles) total += c.s;
  return total;
}

BalancedGraph interior_graph(const BalancedGraph& b, const Cycle& c) {
  const PlaneGraph& g = b.graph();
  const auto interior = faces_inside(b, c.edges);
  if (interior.empty()) throw Error(ErrorKind::InvalidGraph, "cycle encloses no face");
  const auto keep = edges_of_faces(g, interior);
  auto r = restrict_edges(g, keep);
  const FaceId outer = locate_face(g, r, b.outer_face());
  std::vector<Color> colors;
  std::vector<int> labels;
  for (VertexId v : r.to_parent_vertex) {
    colors.push_back(b.color(v));
    if (!b.labels().empty()) labels.push_back(b.labels()[v]);
  }
  return BalancedGraph(std::move(r.graph), std::move(colors), outer, std::nullopt, std::move(labels));
}

bool CycleReport::passed() const {
  if (!leaves_are_intersection || !partition || !failures.empty()) return false;
  return std::all_of(cycles.begin(), cycles.end(), [](const CycleCheck& c) { return c.failures.empty(); });
}

CycleReport check_cycle_properties(const Decomposition& d, const BalancedGraph& b, const Matching& zero,
                                   const Matching& one, std::size_t cap) {
  const PlaneGraph& g = b.graph();
  CycleReport report;

  std::vector<EdgeId> shared;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (zero.contains(b, e) && one.contains(b, e)) shared.push_back(e);
  }
  auto leaves = d.leaves;
  std::sort(leaves.begin(), leaves.end());
  report.leaves_are_intersection = leaves == shared;
  if (!report.leaves_are_intersection) report.failures.push_back("leaves differ from the edges shared by both extremal states");

  std::vector<int> cover(g.num_vertices(), 0);
  for (EdgeId e : d.leaves) {
    ++cover[g.endpoints(e)[0]];
    ++cover[g.endpoints(e)[1]];
  }
  for (const auto& c : d.cycles) {
    std::set<VertexId> on;
    for (EdgeId e : c.edges) {
      on.insert(g.endpoints(e)[0]);
      on.insert(g.endpoints(e)[1]);
    }
    for (VertexId v : on) ++cover[v];
  }
  report.partition = std::all_of(cover.begin(), cover.end(), [](int k) { return k == 1; });
  if (!report.partition) report.failures.push_back("cycles and leaves do not partition the vertices");

  for (const auto& c : d.cycles) {
    CycleCheck check;
    check.cycle = c.id;
    const int len = static_cast<int>(c.edges.size());

    // Consecutive edges must share a vertex and the walk must close up.
    bool closed = len >= 2;
    for (int i = 0; i < len && closed; ++i) {
      const auto a = g.endpoints(c.edges[i]);
      const auto z = g.endpoints(c.edges[(i + 1) % len]);
      closed = a[0] == z[0] || a[0] == z[1] || a[1] == z[0] || a[1] == z[1];
    }
    if (!closed) check.failures.push_back("edges do not form a closed walk");

    check.alternating = closed && len % 2 == 0;
    for (int i = 0; i < len && check.alternating; ++i) {
      const EdgeId e = c.edges[i];
      const EdgeId f = c.edges[(i + 1) % len];
      const bool in_zero = zero.contains(b, e);
      check.alternating = in_zero != one.contains(b, e) && in_zero != zero.contains(b, f);
    }
    if (!check.alternating) check.failures.push_back("cycle does not alternate between the extremal states");

    const auto inside = faces_inside(b, c.edges);
    check.positive_area = !inside.empty();
    if (!check.positive_area) check.failures.push_back("cycle encloses no square");

    if (closed && check.positive_area) {
      try {
        const BalancedGraph gi = interior_graph(b, c);
        const auto pr = periphery_report(gi);
        check.periphery_ok = pr.ok() && gi.periphery().size() == c.edges.size();
        if (!check.periphery_ok) check.failures.push_back("periphery rule fails: " + pr.message);
        check.two_connected = is_two_connected(gi.graph());
        if (!check.two_connected) check.failures.push_back("interior graph has a cut vertex");
        EdgeStatus status;
        try {
          status = edge_status(gi, enumerate_matchings(gi, cap));
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::CapExceeded) throw;
          status = edge_status(gi);
        }
        check.elementary = is_elementary(gi, status);
        if (!check.elementary) check.failures.push_back("interior graph is not elementary");
      } catch (const Error& err) {
        check.failures.push_back(std::string("interior graph rejected: ") + err.what());
      }
    }
    report.cycles.push_back(std::move(check));
  }
  return report;
}

}  // namespace clocklattice
