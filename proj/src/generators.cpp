#include "clocklattice/generators.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "clocklattice/error.hpp"
#include "fixture_data.hpp"

namespace clocklattice {

namespace {

void check_spec(const GridSpec& spec) {
  if (spec.m <= 0 || spec.n <= 0) throw Error(ErrorKind::InvalidGraph, "grid sides must be positive");
  if (spec.m % 2 == 0 || spec.n % 2 == 0) {
    throw Error(ErrorKind::EvenDimension, "grid " + std::to_string(spec.m) + "x" + std::to_string(spec.n) +
                                              " has an even side and cannot be balanced");
  }
}

}  // namespace

BalancedGraph grid_graph(const GridSpec& spec) {
  check_spec(spec);
  const int rows = spec.m + 1;
  const int cols = spec.n + 1;
  auto id = [&](int i, int j) { return i * cols + j; };
  auto black = [](int i, int j) { return (i + j) % 2 == 0; };

  std::vector<std::array<VertexId, 2>> edges;
  std::map<std::pair<VertexId, VertexId>, EdgeId> edge_id;
  auto add = [&](int i1, int j1, int i2, int j2) {
    const VertexId u = id(i1, j1);
    const VertexId v = id(i2, j2);
    const EdgeId e = static_cast<EdgeId>(edges.size());
    edges.push_back(black(i1, j1) ? std::array<VertexId, 2>{u, v} : std::array<VertexId, 2>{v, u});
    edge_id[{std::min(u, v), std::max(u, v)}] = e;
  };
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) add(i, j, i, j + 1);
      if (i + 1 < rows) add(i, j, i + 1, j);
    }
  }
  auto dart_to = [&](VertexId u, VertexId v) {
    const EdgeId e = edge_id.at({std::min(u, v), std::max(u, v)});
    return PlaneGraph::dart(e, edges[e][0] != u);
  };

  std::vector<std::vector<DartId>> rotation(rows * cols);
  std::vector<Color> colors(rows * cols);
  constexpr int di[] = {0, 1, 0, -1};  // east, north, west, south
  constexpr int dj[] = {1, 0, -1, 0};
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      colors[id(i, j)] = black(i, j) ? Color::black : Color::white;
      for (int k = 0; k < 4; ++k) {
        const int a = i + di[k];
        const int b = j + dj[k];
        if (a >= 0 && a < rows && b >= 0 && b < cols) rotation[id(i, j)].push_back(dart_to(id(i, j), id(a, b)));
      }
    }
  }
  // Walking west along the bottom row keeps the outside on the left.
  const DartId outer_dart = dart_to(id(0, 1), id(0, 0));
  PlaneGraph g(std::move(edges), std::move(rotation));
  const FaceId outer = g.face_of(outer_dart);
  return BalancedGraph(std::move(g), std::move(colors), outer);
}

std::vector<Point> grid_positions(const GridSpec& spec) {
  check_spec(spec);
  std::vector<Point> out;
  for (int i = 0; i <= spec.m; ++i) {
    for (int j = 0; j <= spec.n; ++j) out.push_back({static_cast<double>(j), static_cast<double>(i)});
  }
  return out;
}

int grid_height_closed_form(const GridSpec& spec) {
  check_spec(spec);
  int total = 0;
  for (int i = 0; spec.m - 2 * i > 0 && spec.n - 2 * i > 0; ++i) total += (spec.m - 2 * i) * (spec.n - 2 * i);
  return total;
}

std::optional<GridSpec> parse_grid_name(std::string_view name) {
  constexpr std::string_view prefix = "grid_";
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  name.remove_prefix(prefix.size());
  const auto sep = name.find('_');
  if (sep == std::string_view::npos) return std::nullopt;
  GridSpec spec;
  const auto m = name.substr(0, sep);
  const auto n = name.substr(sep + 1);
  auto parse = [](std::string_view s, int& out) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
  };
  if (!parse(m, spec.m) || !parse(n, spec.n)) return std::nullopt;
  return spec;
}

Universe braid_closure(const std::vector<int>& word, int strands, std::string label) {
  if (strands < 2) throw Error(ErrorKind::InvalidGraph, "a braid needs at least two strands");
  if (word.empty()) throw Error(ErrorKind::InvalidGraph, "empty braid word");
  std::vector<int> at(strands);
  for (int p = 0; p < strands; ++p) at[p] = p + 1;
  int next = strands + 1;
  std::vector<std::array<int, 4>> tuples;
  for (int letter : word) {
    const int i = std::abs(letter) - 1;
    if (i < 0 || i + 1 >= strands) throw Error(ErrorKind::InvalidGraph, "braid letter out of range");
    // Strands enter at the bottom and leave at the top; counterclockwise from
    // bottom left the arms are: in-left, in-right, out-right, out-left.
    const int out_left = next++;
    const int out_right = next++;
    tuples.push_back({at[i], at[i + 1], out_right, out_left});
    at[i] = out_left;
    at[i + 1] = out_right;
  }
  // Closing the braid glues the top of each position to its bottom.
  std::map<int, int> closing;
  for (int p = 0; p < strands; ++p) closing[at[p]] = p + 1;
  for (auto& t : tuples) {
    for (int& x : t) {
      if (const auto it = closing.find(x); it != closing.end()) x = it->second;
    }
  }
  return universe_from_tuples(tuples, std::move(label));
}

std::vector<int> random_braid_word(std::mt19937_64& rng, int strands, int length) {
  if (length < strands - 1) throw Error(ErrorKind::InvalidGraph, "word too short to use every generator");
  std::uniform_int_distribution<int> pick(1, strands - 1);
  std::vector<int> word(length);
  for (int k = 0; k < strands - 1; ++k) word[k] = k + 1;
  for (int k = strands - 1; k < length; ++k) word[k] = pick(rng);
  std::shuffle(word.begin(), word.end(), rng);
  return word;
}

StarPair Fixture::star_pair() const {
  if (stars) return *stars;
  if (!universe) throw Error(ErrorKind::InvalidGraph, "fixture " + name + " has no universe");
  return auto_stars(*universe);
}

BalancedGraph Fixture::gamma() const {
  if (universe) return build_balanced(*universe, star_pair());
  if (drawn) return *drawn;
  throw Error(ErrorKind::InvalidGraph, "fixture " + name + " is empty");
}

std::vector<std::string> fixture_files() {
  std::vector<std::string> out;
  for (const auto& f : detail::embedded_fixtures()) out.emplace_back(f.name);
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view fixture_file(std::string_view filename) {
  for (const auto& f : detail::embedded_fixtures()) {
    if (f.name == filename) return f.content;
  }
  throw Error(ErrorKind::UnknownFixture, "no fixture file " + std::string(filename));
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& file : fixture_files()) {
    std::string name = file.substr(0, file.find('.'));
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(std::move(name));
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

Fixture load_fixture(std::string_view name) {
  Fixture fx;
  fx.name = std::string(name);
  if (const auto spec = parse_grid_name(name)) {
    fx.drawn = grid_graph(*spec);
    fx.positions = grid_positions(*spec);
    auto rebuilt = reconstruct_universe(*fx.drawn);
    fx.universe = std::move(rebuilt.universe);
    fx.stars = rebuilt.stars;
    return fx;
  }
  const auto files = fixture_files();
  const auto has = [&](const std::string& f) { return std::find(files.begin(), files.end(), f) != files.end(); };
  const std::string universe_file = fx.name + ".json";
  const std::string drawn_file = fx.name + ".gamma.json";
  if (!has(universe_file) && !has(drawn_file)) throw Error(ErrorKind::UnknownFixture, "unknown fixture " + fx.name);

  if (has(drawn_file)) {
    auto doc = parse_balanced_document(fixture_file(drawn_file));
    fx.positions = std::move(doc.positions);
    fx.drawn = std::move(doc.graph);
  }
  if (has(universe_file)) {
    auto doc = parse_universe_document(fixture_file(universe_file));
    fx.universe = std::move(doc.universe);
    fx.stars = doc.stars;
  } else {
    // Only the drawing is stored: recover the universe and its stars from it.
    auto rebuilt = reconstruct_universe(*fx.drawn);
    fx.universe = std::move(rebuilt.universe);
    fx.stars = rebuilt.stars;
  }
  return fx;
}

}  // namespace clocklattice
