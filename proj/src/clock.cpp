#include "clocklattice/clock.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <sstream>

#include "clocklattice/error.hpp"

namespace clocklattice {

FlipGraph::FlipGraph(std::vector<Matching> nodes, std::vector<FlipEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), adjacency_(nodes_.size()) {
  if (!std::is_sorted(nodes_.begin(), nodes_.end())) std::sort(nodes_.begin(), nodes_.end());
  for (int i = 0; i < num_edges(); ++i) {
    adjacency_[edges_[i].a].push_back({edges_[i].b, i});
    adjacency_[edges_[i].b].push_back({edges_[i].a, i});
  }
}

int FlipGraph::index_of(const Matching& m) const {
  const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), m);
  return it != nodes_.end() && *it == m ? static_cast<int>(it - nodes_.begin()) : -1;
}

namespace {

// Boundary positions of f (0..3) whose edges m uses, when m alternates on f.
std::optional<int> matched_parity(const BalancedGraph& b, const Matching& m, FaceId f) {
  const auto boundary = b.graph().face_boundary(f);
  if (boundary.size() != 4) return std::nullopt;
  for (int parity = 0; parity < 2; ++parity) {
    if (m.contains(b, PlaneGraph::edge_of(boundary[parity])) &&
        m.contains(b, PlaneGraph::edge_of(boundary[parity + 2]))) {
      return parity;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Matching> flip(const BalancedGraph& b, const Matching& m, FaceId f) {
  const auto parity = matched_parity(b, m, f);
  if (!parity) return std::nullopt;
  const auto boundary = b.graph().face_boundary(f);
  std::vector<EdgeId> edges = m.edges();
  for (int k : {1 - *parity, 3 - *parity}) {
    const EdgeId e = PlaneGraph::edge_of(boundary[k]);
    edges[b.black_index(b.black_end(e))] = e;
  }
  return Matching(std::move(edges));
}

bool is_clock_tail(const BalancedGraph& b, const Matching& m, FaceId f, ClockConvention convention) {
  const auto parity = matched_parity(b, m, f);
  if (!parity) return false;
  const DartId d = b.graph().face_boundary(f)[*parity];
  const bool white_to_black = b.color(b.graph().tail(d)) == Color::white;
  return convention == ClockConvention::counterclockwise ? white_to_black : !white_to_black;
}

FlipGraph build_flip_graph(const BalancedGraph& b, std::vector<Matching> ms) {
  std::sort(ms.begin(), ms.end());
  std::vector<FlipEdge> edges;
  for (int i = 0; i < static_cast<int>(ms.size()); ++i) {
    for (FaceId f : b.squares()) {
      const auto other = flip(b, ms[i], f);
      if (!other) continue;
      const auto it = std::lower_bound(ms.begin(), ms.end(), *other);
      if (it == ms.end() || *it != *other) {
        throw Error(ErrorKind::InvalidGraph, "matching list is not closed under flips; enumeration incomplete");
      }
      const int j = static_cast<int>(it - ms.begin());
      if (i < j) edges.push_back({i, j, f});
    }
  }
  return FlipGraph(std::move(ms), std::move(edges));
}

namespace {

std::vector<int> bfs_distances(const FlipGraph& fg, int source) {
  std::vector<int> dist(fg.num_nodes(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (const auto& [y, e] : fg.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

// Kahn order over the directed edges; shorter than num_nodes when cyclic.
std::vector<int> topological_order(const ClockDag& cd) {
  const int n = cd.base.num_nodes();
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (int e = 0; e < cd.base.num_edges(); ++e) {
    out[cd.tail[e]].push_back(cd.head[e]);
    ++indeg[cd.head[e]];
  }
  std::deque<int> queue;
  for (int i = 0; i < n; ++i) {
    if (indeg[i] == 0) queue.push_back(i);
  }
  std::vector<int> order;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    order.push_back(x);
    for (int y : out[x]) {
      if (--indeg[y] == 0) queue.push_back(y);
    }
  }
  return order;
}

}  // namespace

ClockDag orient_clock(FlipGraph fg, const BalancedGraph& b, ClockConvention convention) {
  ClockDag cd{std::move(fg), {}, {}, -1, -1, 0};
  const int m = cd.base.num_edges();
  cd.tail.resize(m);
  cd.head.resize(m);
  for (int e = 0; e < m; ++e) {
    const auto& fe = cd.base.edges()[e];
    const bool a_tail = is_clock_tail(b, cd.base.node(fe.a), fe.face, convention);
    cd.tail[e] = a_tail ? fe.a : fe.b;
    cd.head[e] = a_tail ? fe.b : fe.a;
  }
  const auto report = verify_clock_theorem(cd);
  if (!report.acyclic || report.sources.size() != 1 || report.sinks.size() != 1) {
    throw Error(ErrorKind::ClockTheoremViolation, report.summary());
  }
  cd.zero_hat = report.sources.front();
  cd.one_hat = report.sinks.front();
  cd.height = bfs_distances(cd.base, cd.zero_hat)[cd.one_hat];
  return cd;
}

namespace {

Matching walk_to_extreme(const BalancedGraph& b, ClockConvention convention, bool toward_source) {
  auto m = find_matching(b);
  if (!m) throw Error(ErrorKind::InvalidGraph, "graph has no perfect matching");
  // Every step moves one rank along the finite DAG; the guard only trips on a
  // directed cycle.
  const long long guard = 1LL << 32;
  for (long long steps = 0;; ++steps) {
    if (steps > guard) throw Error(ErrorKind::ClockTheoremViolation, "greedy walk does not terminate");
    bool moved = false;
    for (FaceId f : b.squares()) {
      if (!matched_parity(b, *m, f)) continue;
      const bool tail = is_clock_tail(b, *m, f, convention);
      if (tail != toward_source) {
        m = flip(b, *m, f);
        moved = true;
        break;
      }
    }
    if (!moved) return *m;
  }
}

}  // namespace

Matching clocked_state(const BalancedGraph& b, ClockConvention convention) {
  return walk_to_extreme(b, convention, true);
}

Matching counterclocked_state(const BalancedGraph& b, ClockConvention convention) {
  return walk_to_extreme(b, convention, false);
}

bool admits_no_counterclock_move(const BalancedGraph& b, const Matching& m) {
  for (FaceId f : b.squares()) {
    if (matched_parity(b, m, f) && !is_clock_tail(b, m, f)) return false;
  }
  return true;
}

bool admits_no_clock_move(const BalancedGraph& b, const Matching& m) {
  for (FaceId f : b.squares()) {
    if (is_clock_tail(b, m, f)) return false;
  }
  return true;
}

HeightReport height(const ClockDag& cd) { return {cd.height, cd.height + 1}; }

int diameter(const FlipGraph& fg, std::size_t bound) {
  if (static_cast<std::size_t>(fg.num_nodes()) > bound) {
    throw Error(ErrorKind::TooLarge, std::to_string(fg.num_nodes()) + " states exceed the all-pairs bound " +
                                         std::to_string(bound));
  }
  int best = 0;
  for (int s = 0; s < fg.num_nodes(); ++s) {
    const auto dist = bfs_distances(fg, s);
    for (int d : dist) {
      if (d < 0) throw Error(ErrorKind::InvalidGraph, "flip graph is disconnected");
      best = std::max(best, d);
    }
  }
  return best;
}

std::string ClockTheoremReport::summary() const {
  std::ostringstream os;
  os << (acyclic ? "acyclic" : "has a directed cycle") << ", " << sources.size() << " source(s), " << sinks.size()
     << " sink(s), " << unreachable.size() << " unreachable, " << misoriented.size() << " misoriented edge(s)";
  return os.str();
}

ClockTheoremReport verify_clock_theorem(const ClockDag& cd) {
  ClockTheoremReport report;
  const int n = cd.base.num_nodes();
  std::vector<int> indeg(n, 0), outdeg(n, 0);
  for (int e = 0; e < cd.base.num_edges(); ++e) {
    ++outdeg[cd.tail[e]];
    ++indeg[cd.head[e]];
  }
  for (int i = 0; i < n; ++i) {
    if (indeg[i] == 0) report.sources.push_back(i);
    if (outdeg[i] == 0) report.sinks.push_back(i);
  }
  const auto order = topological_order(cd);
  report.acyclic = static_cast<int>(order.size()) == n;
  if (!report.acyclic) {
    // Every node Kahn could not process keeps a predecessor among the
    // unprocessed ones; walk backwards until a node repeats.
    std::vector<bool> done(n, false);
    for (int x : order) done[x] = true;
    std::vector<std::vector<std::pair<int, int>>> in(n);
    for (int e = 0; e < cd.base.num_edges(); ++e) {
      if (!done[cd.tail[e]] && !done[cd.head[e]]) in[cd.head[e]].push_back({cd.tail[e], e});
    }
    int x = static_cast<int>(std::find(done.begin(), done.end(), false) - done.begin());
    std::vector<int> seen_at(n, -1);
    std::vector<int> path_edges;
    while (seen_at[x] < 0) {
      seen_at[x] = static_cast<int>(path_edges.size());
      const auto [y, e] = in[x].front();
      path_edges.push_back(e);
      x = y;
    }
    report.cycle_edges.assign(path_edges.begin() + seen_at[x], path_edges.end());
  }
  if (report.sources.size() == 1) {
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> out(n);
    for (int e = 0; e < cd.base.num_edges(); ++e) out[cd.tail[e]].push_back(cd.head[e]);
    std::vector<int> stack{report.sources.front()};
    seen[stack.back()] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : out[x]) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      if (!seen[i]) report.unreachable.push_back(i);
    }
  }
  return report;
}

ClockTheoremReport verify_clock_theorem(const ClockDag& cd, const BalancedGraph& b, ClockConvention convention) {
  auto report = verify_clock_theorem(cd);
  for (int e = 0; e < cd.base.num_edges(); ++e) {
    const auto& fe = cd.base.edges()[e];
    if (!is_clock_tail(b, cd.base.node(cd.tail[e]), fe.face, convention)) report.misoriented.push_back(e);
  }
  return report;
}

LatticeDiagnostics lattice_diagnostics(const ClockDag& cd, std::size_t bound) {
  LatticeDiagnostics diag;
  const int n = cd.base.num_nodes();
  const auto order = topological_order(cd);
  if (static_cast<int>(order.size()) != n) throw Error(ErrorKind::ClockTheoremViolation, "orientation has a cycle");
  std::vector<std::vector<int>> preds(n), succs(n);
  for (int e = 0; e < cd.base.num_edges(); ++e) {
    preds[cd.head[e]].push_back(cd.tail[e]);
    succs[cd.tail[e]].push_back(cd.head[e]);
  }
  std::vector<int> longest(n, 0);
  for (int x : order) {
    for (int p : preds[x]) longest[x] = std::max(longest[x], longest[p] + 1);
  }
  diag.longest_chain = longest[cd.one_hat];
  diag.graded = diag.longest_chain == cd.height;
  if (static_cast<std::size_t>(n) > bound) return diag;

  // Nodes renumbered by topological rank so the maximum of a down-set is its
  // highest set bit.
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;
  const int words = (n + 63) / 64;
  using Bits = std::vector<std::uint64_t>;
  std::vector<Bits> down(n, Bits(words, 0)), up(n, Bits(words, 0));
  for (int x : order) {
    auto& d = down[rank[x]];
    d[rank[x] / 64] |= 1ULL << (rank[x] % 64);
    for (int p : preds[x]) {
      for (int w = 0; w < words; ++w) d[w] |= down[rank[p]][w];
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int x = *it;
    auto& u = up[rank[x]];
    u[rank[x] / 64] |= 1ULL << (rank[x] % 64);
    for (int s : succs[x]) {
      for (int w = 0; w < words; ++w) u[w] |= up[rank[s]][w];
    }
  }
  auto highest = [&](const Bits& bits) {
    for (int w = words - 1; w >= 0; --w) {
      if (bits[w]) return w * 64 + 63 - __builtin_clzll(bits[w]);
    }
    return -1;
  };
  auto lowest = [&](const Bits& bits) {
    for (int w = 0; w < words; ++w) {
      if (bits[w]) return w * 64 + __builtin_ctzll(bits[w]);
    }
    return -1;
  };
  Bits common(words);
  for (int a = 0; a < n; ++a) {
    for (int c = a + 1; c < n; ++c) {
      for (int w = 0; w < words; ++w) common[w] = down[a][w] & down[c][w];
      const int meet = highest(common);
      if (meet < 0 || down[meet] != common) {
        diag.is_lattice = false;
        return diag;
      }
      for (int w = 0; w < words; ++w) common[w] = up[a][w] & up[c][w];
      const int join = lowest(common);
      if (join < 0 || up[join] != common) {
        diag.is_lattice = false;
        return diag;
      }
    }
  }
  diag.is_lattice = true;
  return diag;
}

}  // namespace clocklattice
