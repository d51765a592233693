#include "clocklattice/pipeline.hpp"

#include <algorithm>

#include "clocklattice/error.hpp"

namespace clocklattice {

Instance instance_from_universe(const Universe& u, std::optional<StarPair> stars) {
  const StarPair chosen = stars ? *stars : auto_stars(u);
  return Instance{u.label(), u, chosen, build_balanced(u, chosen), {}, std::nullopt};
}

Instance instance_from_balanced(const BalancedDocument& doc) {
  return Instance{doc.label, std::nullopt, doc.graph.stars(), doc.graph, doc.positions, std::nullopt};
}

Instance instance_from_fixture(std::string_view name, std::optional<StarPair> stars) {
  Fixture fx = load_fixture(name);
  if (stars) fx.stars = stars;
  Instance inst{fx.name, fx.universe, fx.star_pair(), fx.gamma(), {}, parse_grid_name(name)};
  if (fx.drawn && !stars) {
    // Carry the drawing over to the graph rebuilt from the universe.
    const auto ca = fx.drawn->colors();
    const auto cb = inst.gamma.colors();
    const auto image = plane_isomorphism(fx.drawn->graph(), inst.gamma.graph(), &ca, &cb);
    if (!image) throw Error(ErrorKind::InvalidGraph, "fixture " + fx.name + ": drawing and universe disagree");
    inst.positions.assign(inst.gamma.num_vertices(), Point{0, 0});
    const auto& a = fx.drawn->graph();
    for (DartId x = 0; x < a.num_darts(); ++x) inst.positions[inst.gamma.graph().tail((*image)[x])] = fx.positions[a.tail(x)];
  }
  return inst;
}

Instance instance_from_text(std::string_view text, std::optional<StarPair> stars) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    if (text.find("\"crossings\"") != std::string_view::npos) {
      auto doc = parse_universe_document(text);
      return instance_from_universe(doc.universe, stars ? stars : doc.stars);
    }
    return instance_from_balanced(parse_balanced_document(text));
  }
  return instance_from_universe(parse_pd(text), stars);
}

void require_strict(const Instance& inst) {
  const Universe u = inst.universe ? *inst.universe : reconstruct_universe(inst.gamma).universe;
  const auto nugatory = detect_nugatory(u);
  if (!nugatory.empty()) {
    throw Error(ErrorKind::NugatoryPresent, "crossing " + std::to_string(nugatory.front()) + " is nugatory");
  }
  if (!is_prime_like(u)) throw Error(ErrorKind::NotPrimeLike, "diagram is not prime-like");
}

ClockDag build_lattice(const BalancedGraph& b, std::size_t cap) {
  return orient_clock(build_flip_graph(b, enumerate_matchings(b, cap)), b);
}

HeightRoutes compute_height_routes(const Instance& inst, std::size_t cap) {
  const BalancedGraph& b = inst.gamma;
  HeightRoutes r;
  try {
    const ClockDag cd = build_lattice(b, cap);
    r.bfs = cd.height;
    r.num_states = static_cast<std::size_t>(cd.base.num_nodes());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
    r.bfs_skipped = e.what();
  }

  const Matching zero = clocked_state(b);
  const Matching one = counterclocked_state(b);
  r.symdiff = symdiff_decompose(b, zero, one);
  r.symdiff_height = height_formula(r.symdiff);

  try {
    r.peel = peel_decompose(b);
    r.peel_height = height_formula(*r.peel);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NugatoryPresent && e.kind() != ErrorKind::NotPrimeLike) throw;
    r.peel_skipped = e.what();
  }
  if (inst.grid) r.closed_form = grid_height_closed_form(*inst.grid);

  auto compare = [&](const char* name, const std::optional<int>& value) {
    if (value && *value != r.symdiff_height) {
      r.disagreements.push_back(std::string(name) + " gives " + std::to_string(*value) + " but the symmetric difference gives " +
                                std::to_string(r.symdiff_height));
    }
  };
  compare("breadth-first search", r.bfs);
  compare("peeling", r.peel_height);
  compare("the closed form", r.closed_form);
  if (r.peel) {
    if (r.peel->leaves != r.symdiff.leaves) r.disagreements.push_back("peeling and symmetric difference find different leaves");
    if (r.peel->cycle_edge_sets() != r.symdiff.cycle_edge_sets()) {
      r.disagreements.push_back("peeling and symmetric difference find different cycles");
    }
  }
  return r;
}

}  // namespace clocklattice
