#include "clocklattice/matchings.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "clocklattice/error.hpp"

namespace clocklattice {

std::vector<std::array<VertexId, 2>> Matching::pairs(const BalancedGraph& b) const {
  std::vector<std::array<VertexId, 2>> out;
  out.reserve(edges_.size());
  for (EdgeId e : edges_) out.push_back({b.black_end(e), b.white_end(e)});
  return out;
}

void validate_matching(const BalancedGraph& b, const Matching& m) {
  if (m.size() != b.size()) throw Error(ErrorKind::InvalidGraph, "matching has the wrong number of edges");
  std::vector<bool> white_used(b.size(), false);
  for (int i = 0; i < m.size(); ++i) {
    const EdgeId e = m.edge_of_black(i);
    if (e < 0 || e >= b.num_edges() || b.black_index(b.black_end(e)) != i) {
      throw Error(ErrorKind::InvalidGraph, "matching edge does not cover its black vertex");
    }
    const int w = b.white_index(b.white_end(e));
    if (white_used[w]) throw Error(ErrorKind::InvalidGraph, "white vertex matched twice");
    white_used[w] = true;
  }
}

namespace {

// Candidate edges of each black vertex, sorted by white partner then edge id.
std::vector<std::vector<EdgeId>> candidates(const BalancedGraph& b) {
  std::vector<std::vector<EdgeId>> out(b.size());
  for (VertexId v : b.blacks()) {
    auto& list = out[b.black_index(v)];
    for (DartId d : b.graph().rotation(v)) list.push_back(PlaneGraph::edge_of(d));
    // Ascending edge ids make the depth-first enumeration come out in
    // canonical (lexicographic) order.
    std::sort(list.begin(), list.end());
  }
  return out;
}

// Augmenting-path matching that skips one black and one white (both -1 for none).
std::optional<std::vector<EdgeId>> kuhn(const BalancedGraph& b, const std::vector<std::vector<EdgeId>>& cand,
                                        int skip_black, int skip_white) {
  const int n = b.size();
  std::vector<EdgeId> of_black(n, -1), of_white(n, -1);
  std::vector<int> stamp(n, -1);
  std::function<bool(int, int)> augment = [&](int black, int round) -> bool {
    for (EdgeId e : cand[black]) {
      const int w = b.white_index(b.white_end(e));
      if (w == skip_white || stamp[w] == round) continue;
      stamp[w] = round;
      if (of_white[w] < 0 || augment(b.black_index(b.black_end(of_white[w])), round)) {
        of_white[w] = e;
        of_black[black] = e;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < n; ++i) {
    if (i != skip_black && !augment(i, i)) return std::nullopt;
  }
  return of_black;
}

}  // namespace

std::optional<Matching> find_matching(const BalancedGraph& b) {
  auto m = kuhn(b, candidates(b), -1, -1);
  if (!m) return std::nullopt;
  return Matching(std::move(*m));
}

std::vector<Matching> enumerate_matchings(const BalancedGraph& b, std::size_t cap) {
  const int n = b.size();
  const auto cand = candidates(b);
  // Black neighbors of each white, for the symmetric dead-end test.
  std::vector<std::vector<int>> white_nbrs(n);
  for (int i = 0; i < n; ++i) {
    for (EdgeId e : cand[i]) white_nbrs[b.white_index(b.white_end(e))].push_back(i);
  }
  std::vector<EdgeId> chosen(n, -1);
  std::vector<bool> white_used(n, false);
  std::vector<Matching> out;

  auto dead_end = [&](int next_black) {
    for (int i = next_black; i < n; ++i) {
      bool free = false;
      for (EdgeId e : cand[i]) {
        if (!white_used[b.white_index(b.white_end(e))]) {
          free = true;
          break;
        }
      }
      if (!free) return true;
    }
    for (int w = 0; w < n; ++w) {
      if (white_used[w]) continue;
      bool free = false;
      for (int i : white_nbrs[w]) {
        if (i >= next_black) {
          free = true;
          break;
        }
      }
      if (!free) return true;
    }
    return false;
  };

  std::function<void(int)> descend = [&](int black) {
    if (black == n) {
      if (out.size() >= cap) {
        throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(cap) + " perfect matchings");
      }
      out.emplace_back(chosen);
      return;
    }
    for (EdgeId e : cand[black]) {
      const int w = b.white_index(b.white_end(e));
      if (white_used[w]) continue;
      // Parallel edges to the same white give distinct matchings.
      white_used[w] = true;
      chosen[black] = e;
      if (!dead_end(black + 1)) descend(black + 1);
      white_used[w] = false;
    }
    chosen[black] = -1;
  };
  if (!dead_end(0)) descend(0);
  return out;
}

BigInt count_spanning_trees(const PlaneGraph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return BigInt(1);
  if (!is_connected(g)) return BigInt(0);
  // Reduced Laplacian (drop vertex 0), fraction-free Bareiss elimination.
  const int m = n - 1;
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(m, 0));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.endpoints(e);
    if (u == v) continue;
    if (u > 0) a[u - 1][u - 1] += 1;
    if (v > 0) a[v - 1][v - 1] += 1;
    if (u > 0 && v > 0) {
      a[u - 1][v - 1] -= 1;
      a[v - 1][u - 1] -= 1;
    }
  }
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < m; ++r) {
        if (a[r][k] != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return BigInt(0);
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i) {
      for (int j = k + 1; j < m; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[m - 1][m - 1];
}

BigInt count_spanning_trees(const TaitGraph& g) { return count_spanning_trees(g.graph); }

EdgeStatus edge_status(const BalancedGraph& b, const std::vector<Matching>& ms) {
  EdgeStatus status(b.num_edges(), EdgeState::forbidden);
  for (const auto& m : ms) {
    for (EdgeId e : m.edges()) status[e] = EdgeState::allowed;
  }
  return status;
}

EdgeStatus edge_status(const BalancedGraph& b) {
  const auto cand = candidates(b);
  EdgeStatus status(b.num_edges(), EdgeState::forbidden);
  for (EdgeId e = 0; e < b.num_edges(); ++e) {
    if (b.graph().endpoints(e)[0] == b.graph().endpoints(e)[1]) continue;
    if (kuhn(b, cand, b.black_index(b.black_end(e)), b.white_index(b.white_end(e)))) status[e] = EdgeState::allowed;
  }
  return status;
}

bool is_elementary(const BalancedGraph& b, const std::vector<Matching>& ms) {
  return is_elementary(b, edge_status(b, ms));
}

bool is_elementary(const BalancedGraph& b, const EdgeStatus& status) {
  std::vector<bool> alive(b.num_edges());
  for (EdgeId e = 0; e < b.num_edges(); ++e) alive[e] = status[e] == EdgeState::allowed;
  const auto comp = connected_components(b.graph(), alive);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

bool alternates_on(const BalancedGraph& b, FaceId f, const Matching& m) {
  const auto boundary = b.graph().face_boundary(f);
  const int len = static_cast<int>(boundary.size());
  if (len % 2 != 0) return false;
  for (int parity = 0; parity < 2; ++parity) {
    bool all = true;
    for (int i = parity; i < len && all; i += 2) all = m.contains(b, PlaneGraph::edge_of(boundary[i]));
    if (all) return true;
  }
  return false;
}

bool is_resonant(const BalancedGraph& b, FaceId f, const std::vector<Matching>& ms) {
  return std::any_of(ms.begin(), ms.end(), [&](const Matching& m) { return alternates_on(b, f, m); });
}

bool single_vertex_tutte_holds(const PlaneGraph& g) {
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    std::vector<bool> alive(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      alive[e] = g.endpoints(e)[0] != s && g.endpoints(e)[1] != s;
    }
    const auto comp = connected_components(g, alive);
    std::vector<int> size;
    int isolated = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (v == s) continue;
      if (comp[v] < 0) {
        ++isolated;
        continue;
      }
      if (comp[v] >= static_cast<int>(size.size())) size.resize(comp[v] + 1, 0);
      ++size[comp[v]];
    }
    const int odd = isolated + static_cast<int>(std::count_if(size.begin(), size.end(), [](int k) { return k % 2 == 1; }));
    if (odd > 1) return false;
  }
  return true;
}

}  // namespace clocklattice
