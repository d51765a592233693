#include "clocklattice/morse.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "clocklattice/error.hpp"

namespace clocklattice {

int CellComplex::index_of(const Cell& c) const {
  const auto it = std::lower_bound(cells.begin(), cells.end(), c);
  return it != cells.end() && *it == c ? static_cast<int>(it - cells.begin()) : -1;
}

int CellComplex::euler_characteristic() const {
  int chi = 0;
  for (const auto& c : cells) chi += c.dim == 1 ? -1 : 1;
  return chi;
}

CellComplex build_cell_complex(const Universe& u, const FaceColoring& coloring) {
  CellComplex cx;
  auto face_cell = [&](FaceId f) { return Cell{coloring[f] == Color::black ? 0 : 2, f}; };
  for (FaceId f = 0; f < u.num_faces(); ++f) cx.cells.push_back(face_cell(f));
  for (int c = 0; c < u.num_crossings(); ++c) {
    cx.cells.push_back(Cell{1, c});
    for (int s = 0; s < 4; ++s) {
      const Cell face = face_cell(u.face_at(c, s));
      const Cell edge{1, c};
      cx.incidences.push_back(face.dim == 2 ? std::array<Cell, 2>{face, edge} : std::array<Cell, 2>{edge, face});
    }
  }
  std::sort(cx.cells.begin(), cx.cells.end());
  return cx;
}

MorsePairing matching_to_morse(const BalancedGraph& b, const Matching& m, const Universe& u) {
  if (!b.stars()) throw Error(ErrorKind::InvalidGraph, "graph does not remember its starred faces");
  const StarPair stars = *b.stars();
  validate_matching(b, m);
  MorsePairing p;
  p.complex = build_cell_complex(u, checkerboard(u, stars));

  // Edges of b are the corners away from the stars, in increasing order.
  std::vector<int> corner_of_edge;
  for (int k = 0; k < 4 * u.num_crossings(); ++k) {
    const FaceId f = u.face_at(k / 4, k % 4);
    if (f != stars.first && f != stars.second) corner_of_edge.push_back(k);
  }
  if (static_cast<int>(corner_of_edge.size()) != b.num_edges()) {
    throw Error(ErrorKind::InvalidGraph, "graph does not come from this universe and star pair");
  }
  for (EdgeId e = 0; e < b.num_edges(); ++e) {
    const int k = corner_of_edge[e];
    if (b.labels()[b.black_end(e)] != k / 4 || b.labels()[b.white_end(e)] != u.face_at(k / 4, k % 4)) {
      throw Error(ErrorKind::InvalidGraph, "edge " + std::to_string(e) + " does not match corner " + std::to_string(k));
    }
  }

  for (EdgeId e : m.edges()) {
    const int k = corner_of_edge[e];
    const auto& inc = p.complex.incidences[k];
    p.pairs.push_back({inc[1], inc[0], k});
  }
  std::sort(p.pairs.begin(), p.pairs.end(), [](const MorsePair& x, const MorsePair& y) { return x.incidence < y.incidence; });
  const auto& inc = p.complex.incidences;
  for (const FaceId f : {stars.first, stars.second}) {
    for (int k = 0; k < static_cast<int>(inc.size()); ++k) {
      for (const Cell& c : inc[k]) {
        if (c.dim != 1 && c.id == f && std::find(p.critical.begin(), p.critical.end(), c) == p.critical.end()) {
          p.critical.push_back(c);
        }
      }
    }
  }
  std::sort(p.critical.begin(), p.critical.end());
  return p;
}

std::vector<int> MorseReport::critical_dimensions() const {
  std::vector<int> dims;
  for (const auto& c : critical) dims.push_back(c.dim);
  return dims;
}

MorseReport verify_morse(const MorsePairing& p) {
  MorseReport r;
  const auto& cx = p.complex;
  const int n = static_cast<int>(cx.cells.size());
  r.nonempty = n > 0;
  if (!r.nonempty) {
    r.failures.push_back("EmptyComplex: the complex has no cells");
    return r;
  }

  std::vector<int> partner_incidence(n, -1);
  r.is_matching = true;
  for (const auto& pair : p.pairs) {
    const int lo = cx.index_of(pair.lower);
    const int hi = cx.index_of(pair.upper);
    const bool incident = pair.incidence >= 0 && pair.incidence < static_cast<int>(cx.incidences.size()) &&
                          cx.incidences[pair.incidence][0] == pair.upper &&
                          cx.incidences[pair.incidence][1] == pair.lower;
    if (lo < 0 || hi < 0 || !incident || pair.upper.dim != pair.lower.dim + 1) {
      r.is_matching = false;
      r.failures.push_back("pair at incidence " + std::to_string(pair.incidence) + " is not a face relation");
      continue;
    }
    for (const int i : {lo, hi}) {
      if (partner_incidence[i] >= 0) {
        r.is_matching = false;
        r.failures.push_back("cell (" + std::to_string(cx.cells[i].dim) + "," + std::to_string(cx.cells[i].id) +
                             ") is paired twice");
      }
      partner_incidence[i] = pair.incidence;
    }
  }

  // Hasse edges point down, except the paired ones which point up.
  std::vector<std::vector<int>> out(n);
  std::vector<int> indegree(n, 0);
  for (int k = 0; k < static_cast<int>(cx.incidences.size()); ++k) {
    int hi = cx.index_of(cx.incidences[k][0]);
    int lo = cx.index_of(cx.incidences[k][1]);
    if (partner_incidence[hi] == k && partner_incidence[lo] == k) std::swap(hi, lo);
    out[hi].push_back(lo);
    ++indegree[lo];
  }
  std::deque<int> queue;
  for (int i = 0; i < n; ++i) {
    if (indegree[i] == 0) queue.push_back(i);
  }
  int processed = 0;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    ++processed;
    for (int y : out[x]) {
      if (--indegree[y] == 0) queue.push_back(y);
    }
  }
  r.acyclic = processed == n;
  if (!r.acyclic) r.failures.push_back("modified Hasse diagram has a directed cycle");

  for (int i = 0; i < n; ++i) {
    if (partner_incidence[i] < 0) r.critical.push_back(cx.cells[i]);
  }
  if (r.critical.size() != 2) {
    r.failures.push_back("expected 2 critical cells, found " + std::to_string(r.critical.size()));
  }
  if (r.critical != p.critical) r.failures.push_back("critical cells differ from the starred cells");
  return r;
}

}  // namespace clocklattice
