#include "clocklattice/io.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "clocklattice/error.hpp"
#include "json.hpp"

namespace clocklattice {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& why) { throw Error(ErrorKind::SchemaViolation, why); }

std::vector<int> int_list(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) schema(std::string("\"") + key + "\" must be an array");
  std::vector<int> out;
  for (const auto& x : doc[key]) {
    if (!x.is_number_integer()) schema(std::string("\"") + key + "\" must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

BalancedDocument parse_balanced_document(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    schema(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema("top level must be an object");
  static const std::set<std::string> known{"label", "black", "white", "edges", "embedding", "outer", "stars", "labels", "positions"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) schema("unexpected key \"" + key + "\"");
  }

  const auto black = int_list(doc, "black");
  const auto white = int_list(doc, "white");
  const int nv = static_cast<int>(black.size() + white.size());
  std::vector<Color> colors(nv, Color::black);
  std::vector<bool> named(nv, false);
  for (int v : black) {
    if (v < 0 || v >= nv || named[v]) schema("black/white lists must partition 0..V-1");
    named[v] = true;
  }
  for (int v : white) {
    if (v < 0 || v >= nv || named[v]) schema("black/white lists must partition 0..V-1");
    named[v] = true;
    colors[v] = Color::white;
  }

  if (!doc.contains("edges") || !doc["edges"].is_array()) schema("\"edges\" must be an array");
  std::vector<std::array<VertexId, 2>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      schema("each edge must be a pair of vertex ids");
    }
    const int u = e[0].get<int>();
    const int v = e[1].get<int>();
    if (u < 0 || u >= nv || v < 0 || v >= nv) schema("edge endpoint out of range");
    edges.push_back({u, v});
  }

  if (!doc.contains("embedding") || !doc["embedding"].is_array() || static_cast<int>(doc["embedding"].size()) != nv) {
    schema("\"embedding\" must list one rotation per vertex");
  }
  std::vector<std::vector<DartId>> rotation(nv);
  for (int v = 0; v < nv; ++v) {
    const auto& ring = doc["embedding"][v];
    if (!ring.is_array()) schema("rotation lists must be arrays");
    for (const auto& x : ring) {
      if (!x.is_number_integer()) schema("rotation lists hold edge ids");
      const int e = x.get<int>();
      if (e < 0 || e >= static_cast<int>(edges.size())) schema("rotation names an unknown edge");
      if (edges[e][0] == v) {
        rotation[v].push_back(PlaneGraph::dart(e));
      } else if (edges[e][1] == v) {
        rotation[v].push_back(PlaneGraph::dart(e, true));
      } else {
        schema("rotation of vertex " + std::to_string(v) + " lists edge " + std::to_string(e) + " which misses it");
      }
    }
  }
  PlaneGraph g(std::move(edges), std::move(rotation));

  const auto outer = int_list(doc, "outer");
  if (outer.size() != 2 || outer[0] < 0 || outer[0] >= g.num_edges()) schema("\"outer\" must be [edge, from-vertex]");
  const auto& ends = g.endpoints(outer[0]);
  if (outer[1] != ends[0] && outer[1] != ends[1]) schema("\"outer\" vertex is not an end of the edge");
  const FaceId outer_face = g.face_of(PlaneGraph::dart(outer[0], outer[1] != ends[0]));

  std::optional<StarPair> stars;
  if (doc.contains("stars") && !doc["stars"].is_null()) {
    const auto& s = doc["stars"];
    if (!s.is_object() || !s.contains("faces")) schema("\"stars\" must be {\"faces\": [i, j]}");
    const auto faces = int_list(s, "faces");
    if (faces.size() != 2) schema("\"stars\" must name two faces");
    stars = StarPair{faces[0], faces[1]};
  }
  std::vector<int> labels;
  if (doc.contains("labels")) {
    labels = int_list(doc, "labels");
    if (static_cast<int>(labels.size()) != nv) schema("\"labels\" must hold one entry per vertex");
  }
  BalancedDocument out{BalancedGraph(std::move(g), std::move(colors), outer_face, stars, std::move(labels)), {}, {}};
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) schema("\"label\" must be a string");
    out.label = doc["label"].get<std::string>();
  }
  if (doc.contains("positions")) {
    const auto& ps = doc["positions"];
    if (!ps.is_array() || static_cast<int>(ps.size()) != nv) schema("\"positions\" must hold one point per vertex");
    for (const auto& p : ps) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) schema("positions are [x, y] pairs");
      out.positions.push_back({p[0].get<double>(), p[1].get<double>()});
    }
  }
  return out;
}

std::string serialize_balanced_json(const BalancedGraph& b, const std::string& label, const std::vector<Point>& positions) {
  const PlaneGraph& g = b.graph();
  json doc = json::object();
  if (!label.empty()) doc["label"] = label;
  doc["black"] = b.blacks();
  doc["white"] = b.whites();
  json edges = json::array();
  for (EdgeId e = 0; e < g.num_edges(); ++e) edges.push_back({g.endpoints(e)[0], g.endpoints(e)[1]});
  doc["edges"] = edges;
  json embedding = json::array();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    json ring = json::array();
    for (DartId d : g.rotation(v)) ring.push_back(PlaneGraph::edge_of(d));
    embedding.push_back(ring);
  }
  doc["embedding"] = embedding;
  const DartId d = g.face_boundary(b.outer_face()).front();
  doc["outer"] = {PlaneGraph::edge_of(d), g.tail(d)};
  if (b.stars()) doc["stars"] = {{"faces", {b.stars()->first, b.stars()->second}}};
  if (std::any_of(b.labels().begin(), b.labels().end(), [](int x) { return x >= 0; })) doc["labels"] = b.labels();
  if (!positions.empty()) doc["positions"] = positions;
  return doc.dump(1) + "\n";
}

std::string matchings_json(const BalancedGraph& b, const std::vector<Matching>& ms) {
  json doc = json::object();
  doc["num_matchings"] = ms.size();
  json list = json::array();
  for (const auto& m : ms) {
    json pairs = json::array();
    for (const auto& p : m.pairs(b)) pairs.push_back({p[0], p[1]});
    list.push_back({{"edges", m.edges()}, {"pairs", pairs}});
  }
  doc["matchings"] = list;
  return doc.dump(1) + "\n";
}

std::string decomposition_json(const Decomposition& d, const BalancedGraph& b) {
  json doc = json::object();
  doc["route"] = std::string(to_string(d.route));
  doc["leaves"] = d.leaves;
  json cycles = json::array();
  for (const auto& c : d.cycles) {
    // Two-valent blacks are reported by crossing when the graph knows them.
    std::vector<int> named;
    for (VertexId v : c.two_valent_blacks) named.push_back(b.labels()[v] >= 0 ? b.labels()[v] : v);
    cycles.push_back({{"id", c.id},
                      {"edges", c.edges},
                      {"vertices", c.vertices},
                      {"s", c.s},
                      {"two_valent_blacks", named},
                      {"parent", c.parent}});
  }
  doc["cycles"] = cycles;
  doc["height_formula"] = height_formula(d);
  return doc.dump(1) + "\n";
}

std::string lattice_json(const ClockDag& cd) {
  json doc = json::object();
  doc["num_states"] = cd.base.num_nodes();
  doc["num_moves"] = cd.base.num_edges();
  doc["zero_hat"] = cd.zero_hat;
  doc["one_hat"] = cd.one_hat;
  doc["height"] = cd.height;
  json states = json::array();
  for (const auto& m : cd.base.nodes()) states.push_back(m.edges());
  doc["states"] = states;
  json moves = json::array();
  for (int k = 0; k < cd.base.num_edges(); ++k) {
    moves.push_back({{"tail", cd.tail[k]}, {"head", cd.head[k]}, {"face", cd.base.edges()[k].face}});
  }
  doc["moves"] = moves;
  return doc.dump(1) + "\n";
}

std::string morse_json(const MorsePairing& p, const MorseReport& r) {
  json doc = json::object();
  json pairs = json::array();
  for (const auto& pair : p.pairs) pairs.push_back({pair.lower.dim, pair.lower.id, pair.upper.dim, pair.upper.id});
  doc["pairs"] = pairs;
  json critical = json::array();
  for (const auto& c : p.critical) critical.push_back({c.dim, c.id});
  doc["critical"] = critical;
  doc["euler_characteristic"] = p.complex.euler_characteristic();
  doc["valid"] = r.passed();
  doc["failures"] = r.failures;
  return doc.dump(1) + "\n";
}

std::string gamma_dot(const BalancedGraph& b, const std::vector<Point>& positions) {
  const PlaneGraph& g = b.graph();
  std::ostringstream os;
  os << "graph gamma {\n  node [shape=circle, width=0.25, label=\"\"];\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const bool black = b.color(v) == Color::black;
    os << "  v" << v << " [style=filled, fillcolor=" << (black ? "black" : "white");
    if (!positions.empty()) os << ", pos=\"" << fmt(positions[v][0]) << "," << fmt(positions[v][1]) << "!\"";
    os << "];\n";
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) os << "  v" << g.endpoints(e)[0] << " -- v" << g.endpoints(e)[1] << ";\n";
  os << "}\n";
  return os.str();
}

std::string lattice_dot(const ClockDag& cd) {
  const int n = cd.base.num_nodes();
  std::vector<int> rank(n, -1);
  std::deque<int> queue{cd.zero_hat};
  rank[cd.zero_hat] = 0;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (const auto& [y, k] : cd.base.neighbors(x)) {
      if (rank[y] < 0) {
        rank[y] = rank[x] + 1;
        queue.push_back(y);
      }
    }
  }
  std::map<int, std::vector<int>> by_rank;
  for (int i = 0; i < n; ++i) by_rank[rank[i]].push_back(i);
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=TB;\n  node [shape=box];\n";
  for (const auto& [r, nodes] : by_rank) {
    os << "  { rank=same;";
    for (int i : nodes) os << " s" << i << ";";
    os << " }\n";
  }
  for (int i = 0; i < n; ++i) {
    os << "  s" << i << " [label=\"" << i;
    if (i == cd.zero_hat) os << " (clocked)";
    if (i == cd.one_hat) os << " (counterclocked)";
    os << "\"];\n";
  }
  for (int k = 0; k < cd.base.num_edges(); ++k) {
    os << "  s" << cd.tail[k] << " -> s" << cd.head[k] << " [label=\"" << cd.base.edges()[k].face << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace clocklattice
