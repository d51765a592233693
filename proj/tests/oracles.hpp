#pragma once

// Brute-force reference computations. None of these call the algorithms they
// are used to check; they work from raw edge lists and PD tuples.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "clocklattice/generators.hpp"
#include "clocklattice/tait.hpp"

namespace oracle {

namespace cl = clocklattice;

// Perfect matchings of a bipartite graph by memoised search over subsets of
// used whites (blacks are processed in order).
inline std::uint64_t count_matchings(const cl::BalancedGraph& b) {
  const auto& blacks = b.blacks();
  std::map<cl::VertexId, int> white_bit;
  for (std::size_t i = 0; i < b.whites().size(); ++i) white_bit[b.whites()[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> options(blacks.size());
  for (cl::EdgeId e = 0; e < b.num_edges(); ++e) {
    const auto [u, v] = b.graph().endpoints(e);
    const cl::VertexId black = b.color(u) == cl::Color::black ? u : v;
    const cl::VertexId white = black == u ? v : u;
    const auto pos = std::find(blacks.begin(), blacks.end(), black) - blacks.begin();
    options[pos].push_back(white_bit.at(white));
  }
  std::map<std::uint64_t, std::uint64_t> memo;
  std::function<std::uint64_t(std::size_t, std::uint64_t)> go = [&](std::size_t i, std::uint64_t used) -> std::uint64_t {
    if (i == blacks.size()) return 1;
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (int w : options[i]) {
      if (!(used >> w & 1)) total += go(i + 1, used | (std::uint64_t{1} << w));
    }
    return memo[used] = total;
  };
  return go(0, 0);
}

// Spanning trees by trying every (V-1)-subset of non-loop edges.
inline std::uint64_t count_spanning_trees_by_subsets(int vertices, const std::vector<std::array<int, 2>>& edges) {
  std::vector<std::array<int, 2>> es;
  for (const auto& e : edges) {
    if (e[0] != e[1]) es.push_back(e);
  }
  const int k = vertices - 1;
  if (k == 0) return 1;
  if (static_cast<int>(es.size()) < k) return 0;
  std::vector<bool> pick(es.size(), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  std::uint64_t trees = 0;
  do {
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    bool acyclic = true;
    for (std::size_t i = 0; i < es.size() && acyclic; ++i) {
      if (!pick[i]) continue;
      const int a = find(es[i][0]);
      const int c = find(es[i][1]);
      if (a == c) acyclic = false;
      parent[a] = c;
    }
    trees += acyclic;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return trees;
}

// Domino tilings of an a x b vertex grid (Kasteleyn's product formula).
inline std::uint64_t grid_dimers(int a, int b) {
  long double p = 1;
  const long double pi = std::acos(-1.0L);
  for (int j = 1; j <= (a + 1) / 2; ++j) {
    for (int k = 1; k <= (b + 1) / 2; ++k) {
      const long double cj = std::cos(pi * j / (a + 1));
      const long double ck = std::cos(pi * k / (b + 1));
      p *= 4 * cj * cj + 4 * ck * ck;
    }
  }
  return static_cast<std::uint64_t>(std::llround(p));
}

// Kauffman states read straight from PD tuples: each crossing picks one of
// its four corners, every unstarred face receives exactly one crossing. Two
// states are adjacent when they differ by a transposition across an arc.
struct StateSpace {
  int faces = 0;
  std::vector<std::vector<int>> states;  // corner slot chosen per crossing
  std::vector<std::vector<int>> adjacent;

  int diameter() const {
    int best = 0;
    for (std::size_t s = 0; s < states.size(); ++s) {
      std::vector<int> dist(states.size(), -1);
      std::deque<int> q{static_cast<int>(s)};
      dist[s] = 0;
      while (!q.empty()) {
        const int x = q.front();
        q.pop_front();
        best = std::max(best, dist[x]);
        for (int y : adjacent[x]) {
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            q.push_back(y);
          }
        }
      }
      if (std::count(dist.begin(), dist.end(), -1) > 0) return -1;
    }
    return best;
  }
};

// Face id of every corner (c, s), the sector between arms s and s+1.
// Arriving along an arc at arm s' of c' the walk turns to arm s'-1, so the
// face of corner (c', s'-1) continues the face of the corner it came from.
inline std::vector<int> corner_faces(const std::vector<std::array<int, 4>>& pd, int* num_faces) {
  const int n = static_cast<int>(pd.size());
  std::map<int, std::vector<int>> where;
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) where[pd[c][s]].push_back(4 * c + s);
  }
  std::vector<int> mate(4 * n);
  for (const auto& [label, ds] : where) {
    mate[ds[0]] = ds[1];
    mate[ds[1]] = ds[0];
  }
  std::vector<int> face(4 * n, -1);
  int f = 0;
  for (int start = 0; start < 4 * n; ++start) {
    if (face[start] >= 0) continue;
    int d = start;
    while (face[d] < 0) {
      face[d] = f;
      const int m = mate[d];
      d = 4 * (m / 4) + (m % 4 + 3) % 4;
    }
    ++f;
  }
  *num_faces = f;
  // Dart (c, s) leaves along the face of corner (c, s).
  return face;
}

inline StateSpace kauffman_states(const std::vector<std::array<int, 4>>& pd, int star_a, int star_b) {
  const int n = static_cast<int>(pd.size());
  StateSpace sp;
  const auto face = corner_faces(pd, &sp.faces);
  std::vector<int> chosen(n, -1);
  std::vector<bool> taken(sp.faces, false);
  taken[star_a] = taken[star_b] = true;
  std::function<void(int)> go = [&](int c) {
    if (c == n) {
      sp.states.push_back(chosen);
      return;
    }
    for (int s = 0; s < 4; ++s) {
      const int f = face[4 * c + s];
      if (taken[f]) continue;
      taken[f] = true;
      chosen[c] = s;
      go(c + 1);
      taken[f] = false;
    }
  };
  go(0);

  // Arcs: the two arms carrying the same label. Around the arc the corners
  // (c1, s1-1), (c1, s1) and (c2, s2-1), (c2, s2) pair up by face.
  std::map<int, std::vector<std::array<int, 2>>> arms;
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) arms[pd[c][s]].push_back({c, s});
  }
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < sp.states.size(); ++i) index[sp.states[i]] = static_cast<int>(i);
  sp.adjacent.assign(sp.states.size(), {});
  std::set<std::pair<int, int>> seen;
  for (const auto& [label, ends] : arms) {
    const auto [c1, s1] = ends[0];
    const auto [c2, s2] = ends[1];
    if (c1 == c2) continue;
    const int a1 = (s1 + 3) % 4, b1 = s1;
    int a2 = (s2 + 3) % 4, b2 = s2;
    if (face[4 * c2 + a2] != face[4 * c1 + a1]) std::swap(a2, b2);
    if (face[4 * c1 + a1] == face[4 * c1 + b1]) continue;
    for (std::size_t i = 0; i < sp.states.size(); ++i) {
      const auto& st = sp.states[i];
      if (st[c1] == a1 && st[c2] == b2) {
        auto other = st;
        other[c1] = b1;
        other[c2] = a2;
        if (auto it = index.find(other); it != index.end()) {
          const int j = it->second;
          if (seen.insert({std::min<int>(i, j), std::max<int>(i, j)}).second) {
            sp.adjacent[i].push_back(j);
            sp.adjacent[j].push_back(static_cast<int>(i));
          }
        }
      }
    }
  }
  return sp;
}

}  // namespace oracle
