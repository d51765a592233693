// Command-line front end: parse diagrams, enumerate states, build the clock
// lattice, decompose, and export.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "clocklattice/clock.hpp"
#include "clocklattice/decompose.hpp"
#include "clocklattice/error.hpp"
#include "clocklattice/generators.hpp"
#include "clocklattice/io.hpp"
#include "clocklattice/morse.hpp"
#include "clocklattice/pipeline.hpp"
#include "json.hpp"

namespace cl = clocklattice;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kParse = 2, kPrecondition = 3, kCap = 4, kTheorem = 5 };

int exit_code(cl::ErrorKind kind) {
  switch (kind) {
    case cl::ErrorKind::MalformedToken:
    case cl::ErrorKind::LabelArity:
    case cl::ErrorKind::Disconnected:
    case cl::ErrorKind::NonSpherical:
    case cl::ErrorKind::SchemaViolation:
    case cl::ErrorKind::UnknownFixture:
      return kParse;
    case cl::ErrorKind::CapExceeded:
    case cl::ErrorKind::TooLarge:
      return kCap;
    case cl::ErrorKind::ClockTheoremViolation:
    case cl::ErrorKind::OddComponentAssertFailed:
      return kTheorem;
    default:
      return kPrecondition;
  }
}

struct Config {
  std::string pd;
  std::string file;
  std::string fixture;
  std::string stars = "auto";
  std::size_t cap = cl::kDefaultMatchingCap;
  bool strict = false;
  std::string format;
  std::string out;
  bool verify = false;
};

std::optional<cl::StarPair> parse_stars(const std::string& text) {
  if (text.empty() || text == "auto") return std::nullopt;
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw cl::Error(cl::ErrorKind::MalformedToken, "--stars expects i,j or auto");
  try {
    return cl::StarPair{std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw cl::Error(cl::ErrorKind::MalformedToken, "--stars expects i,j or auto");
  }
}

cl::Instance load(const Config& cfg) {
  const int sources = !cfg.pd.empty() + !cfg.file.empty() + !cfg.fixture.empty();
  if (sources != 1) throw cl::Error(cl::ErrorKind::SchemaViolation, "give exactly one of --pd, --file, --fixture");
  const auto stars = parse_stars(cfg.stars);
  if (cfg.strict) {
    // Reject diagrams outside the theorem hypotheses before building anything.
    std::optional<cl::Universe> u;
    if (!cfg.pd.empty()) u = cl::parse_pd(cfg.pd);
    if (!cfg.fixture.empty() && !cl::parse_grid_name(cfg.fixture)) u = cl::load_fixture(cfg.fixture).universe;
    if (u) {
      const auto nugatory = cl::detect_nugatory(*u);
      if (!nugatory.empty()) {
        throw cl::Error(cl::ErrorKind::NugatoryPresent, "crossing " + std::to_string(nugatory.front()) + " is nugatory");
      }
      if (!cl::is_prime_like(*u)) throw cl::Error(cl::ErrorKind::NotPrimeLike, "diagram is not prime-like");
    }
  }
  cl::Instance inst = [&] {
    if (!cfg.pd.empty()) return cl::instance_from_universe(cl::parse_pd(cfg.pd), stars);
    if (!cfg.fixture.empty()) return cl::instance_from_fixture(cfg.fixture, stars);
    std::ifstream in(cfg.file);
    if (!in) throw cl::Error(cl::ErrorKind::SchemaViolation, "cannot read " + cfg.file);
    std::stringstream buf;
    buf << in.rdbuf();
    return cl::instance_from_text(buf.str(), stars);
  }();
  if (cfg.strict) cl::require_strict(inst);
  return inst;
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream os(cfg.out, std::ios::binary);
  if (!os) throw cl::Error(cl::ErrorKind::SchemaViolation, "cannot write " + cfg.out);
  os << text;
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::vector<int> s_list(const cl::Decomposition& d) {
  std::vector<int> out;
  for (const auto& c : d.cycles) out.push_back(c.s);
  return out;
}

int cmd_parse(const Config& cfg) {
  const auto inst = load(cfg);
  if (!inst.universe) {
    emit(cfg, cl::serialize_balanced_json(inst.gamma, inst.label, inst.positions));
    return kOk;
  }
  const auto& u = *inst.universe;
  if (cfg.format == "json") {
    emit(cfg, cl::serialize_universe_json(u, inst.stars));
    return kOk;
  }
  std::ostringstream os;
  os << "crossings: " << u.num_crossings() << "\nfaces: " << u.num_faces() << "\npd: " << cl::to_pd_string(u)
     << "\nnugatory: [" << join(cl::detect_nugatory(u)) << "]\n";
  if (cl::detect_nugatory(u).empty()) os << "prime_like: " << (cl::is_prime_like(u) ? "yes" : "no") << "\n";
  os << "stars: " << inst.stars->first << "," << inst.stars->second << "\n";
  emit(cfg, os.str());
  return kOk;
}

int cmd_matchings(const Config& cfg) {
  const auto inst = load(cfg);
  const auto ms = cl::enumerate_matchings(inst.gamma, cfg.cap);
  if (cfg.format == "json") {
    emit(cfg, cl::matchings_json(inst.gamma, ms));
  } else {
    emit(cfg, "num_matchings: " + std::to_string(ms.size()) + "\n");
  }
  return kOk;
}

int cmd_lattice(const Config& cfg) {
  const auto inst = load(cfg);
  const auto cd = cl::build_lattice(inst.gamma, cfg.cap);
  const auto report = cl::verify_clock_theorem(cd, inst.gamma);
  if (cfg.format == "dot") {
    emit(cfg, cl::lattice_dot(cd));
  } else if (cfg.format == "json") {
    emit(cfg, cl::lattice_json(cd));
  } else {
    const auto diag = cl::lattice_diagnostics(cd);
    std::ostringstream os;
    os << "states: " << cd.base.num_nodes() << "\nmoves: " << cd.base.num_edges() << "\nheight: " << cd.height
       << "\nlongest_chain: " << diag.longest_chain << "\nclock_theorem: " << report.summary() << "\n";
    if (diag.is_lattice) os << "is_lattice: " << (*diag.is_lattice ? "yes" : "no") << "\n";
    emit(cfg, os.str());
  }
  return report.passed() ? kOk : kTheorem;
}

int cmd_height(const Config& cfg) {
  const auto inst = load(cfg);
  const auto r = cl::compute_height_routes(inst, cfg.cap);
  json doc;
  doc["height"] = r.height();
  doc["clock_number"] = r.height() + 1;
  doc["num_states"] = r.num_states ? json(*r.num_states) : json(nullptr);
  doc["num_cycles"] = r.symdiff.cycles.size();
  doc["num_leaves"] = r.symdiff.leaves.size();
  doc["s_list"] = s_list(r.symdiff);
  if (cfg.verify) {
    doc["routes"] = {{"bfs", r.bfs ? json(*r.bfs) : json(nullptr)},
                     {"symdiff", r.symdiff_height},
                     {"peel", r.peel_height ? json(*r.peel_height) : json(nullptr)},
                     {"closed_form", r.closed_form ? json(*r.closed_form) : json(nullptr)}};
    if (!r.bfs_skipped.empty()) doc["bfs_skipped"] = r.bfs_skipped;
    if (!r.peel_skipped.empty()) doc["peel_skipped"] = r.peel_skipped;
    doc["disagreements"] = r.disagreements;
    doc["agree"] = r.agree();
  }
  if (cfg.format == "json") {
    emit(cfg, doc.dump(1));
  } else {
    std::ostringstream os;
    for (const auto& [key, value] : doc.items()) os << key << ": " << value.dump() << "\n";
    emit(cfg, os.str());
  }
  if (cfg.verify && !r.agree()) return kTheorem;
  if (cfg.verify && !r.peel && cfg.strict) return kPrecondition;
  return kOk;
}

int cmd_decompose(const Config& cfg, const std::string& route) {
  const auto inst = load(cfg);
  cl::Decomposition d;
  if (route == "peel") {
    d = cl::peel_decompose(inst.gamma);
  } else {
    d = cl::symdiff_decompose(inst.gamma, cl::clocked_state(inst.gamma), cl::counterclocked_state(inst.gamma));
  }
  if (cfg.format == "text") {
    std::ostringstream os;
    os << "route: " << cl::to_string(d.route) << "\ncycles: " << d.cycles.size() << "\nleaves: " << d.leaves.size()
       << "\ns: [" << join(s_list(d)) << "]\nheight_formula: " << cl::height_formula(d) << "\n";
    emit(cfg, os.str());
  } else {
    emit(cfg, cl::decomposition_json(d, inst.gamma));
  }
  return kOk;
}

int cmd_grid(const Config& cfg, int m, int n) {
  const cl::GridSpec spec{m, n};
  const auto b = cl::grid_graph(spec);
  if (cfg.format == "dot") {
    emit(cfg, cl::gamma_dot(b, cl::grid_positions(spec)));
  } else if (cfg.format == "json") {
    emit(cfg, cl::serialize_balanced_json(b, "grid_" + std::to_string(m) + "_" + std::to_string(n), cl::grid_positions(spec)));
  } else {
    std::ostringstream os;
    os << "vertices: " << b.num_vertices() << "\nedges: " << b.num_edges() << "\nsquares: " << b.squares().size()
       << "\nclosed_form_height: " << cl::grid_height_closed_form(spec) << "\n";
    emit(cfg, os.str());
  }
  return kOk;
}

int cmd_fixture(const Config& cfg, const std::string& name, bool list) {
  if (list || name.empty()) {
    std::string text;
    for (const auto& f : cl::fixture_names()) text += f + "\n";
    text += "grid_M_N (M, N odd)\n";
    emit(cfg, text);
    return kOk;
  }
  Config c = cfg;
  c.fixture = name;
  return cmd_parse(c);
}

int cmd_export(const Config& cfg, const std::string& what) {
  const auto inst = load(cfg);
  if (what == "gamma") {
    emit(cfg, cfg.format == "json" ? cl::serialize_balanced_json(inst.gamma, inst.label, inst.positions)
                                   : cl::gamma_dot(inst.gamma, inst.positions));
  } else if (what == "lattice") {
    const auto cd = cl::build_lattice(inst.gamma, cfg.cap);
    emit(cfg, cfg.format == "json" ? cl::lattice_json(cd) : cl::lattice_dot(cd));
  } else if (what == "morse") {
    if (!inst.universe) throw cl::Error(cl::ErrorKind::InvalidGraph, "Morse export needs a universe");
    const auto p = cl::matching_to_morse(inst.gamma, cl::clocked_state(inst.gamma), *inst.universe);
    const auto r = cl::verify_morse(p);
    emit(cfg, cl::morse_json(p, r));
    return r.passed() ? kOk : kTheorem;
  } else if (what == "universe") {
    if (inst.universe) {
      emit(cfg, cl::serialize_universe_json(*inst.universe, inst.stars));
    } else {
      const auto rebuilt = cl::reconstruct_universe(inst.gamma);
      emit(cfg, cl::serialize_universe_json(rebuilt.universe, rebuilt.stars));
    }
  } else {
    throw cl::Error(cl::ErrorKind::SchemaViolation, "unknown export target " + what);
  }
  return kOk;
}

// Height by every route, the clock theorem, the cycle properties, and the
// Morse reading of every state.
int cmd_verify(const Config& cfg) {
  const auto inst = load(cfg);
  const auto& b = inst.gamma;
  std::ostringstream os;
  bool ok = true;
  auto line = [&](const std::string& name, bool pass, const std::string& detail) {
    os << (pass ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
    ok = ok && pass;
  };

  const auto r = cl::compute_height_routes(inst, cfg.cap);
  std::string detail = "symdiff=" + std::to_string(r.symdiff_height);
  if (r.bfs) detail += " bfs=" + std::to_string(*r.bfs);
  if (r.peel_height) detail += " peel=" + std::to_string(*r.peel_height);
  if (r.closed_form) detail += " closed_form=" + std::to_string(*r.closed_form);
  for (const auto& d : r.disagreements) detail += "; " + d;
  line("height routes", r.agree(), detail);

  std::vector<cl::Matching> states;
  try {
    states = cl::enumerate_matchings(b, cfg.cap);
    const auto cd = cl::orient_clock(cl::build_flip_graph(b, states), b);
    const auto report = cl::verify_clock_theorem(cd, b);
    line("clock theorem", report.passed(), report.summary());
  } catch (const cl::Error& e) {
    if (e.kind() != cl::ErrorKind::CapExceeded && e.kind() != cl::ErrorKind::ClockTheoremViolation) throw;
    line("clock theorem", e.kind() == cl::ErrorKind::CapExceeded, std::string("skipped: ") + e.what());
  }

  const auto zero = cl::clocked_state(b);
  const auto one = cl::counterclocked_state(b);
  const auto cycles = cl::check_cycle_properties(r.symdiff, b, zero, one, cfg.cap);
  std::string why = std::to_string(r.symdiff.cycles.size()) + " cycles, " + std::to_string(r.symdiff.leaves.size()) + " leaves";
  for (const auto& f : cycles.failures) why += "; " + f;
  for (const auto& c : cycles.cycles) {
    for (const auto& f : c.failures) why += "; cycle " + std::to_string(c.cycle) + ": " + f;
  }
  line("cycle properties", cycles.passed(), why);

  if (inst.universe && !states.empty()) {
    std::size_t bad = 0;
    for (const auto& m : states) bad += cl::verify_morse(cl::matching_to_morse(b, m, *inst.universe)).passed() ? 0 : 1;
    line("discrete Morse", bad == 0, std::to_string(states.size() - bad) + "/" + std::to_string(states.size()) + " valid pairings");
  }
  emit(cfg, os.str());
  return ok ? kOk : kTheorem;
}

void add_input(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--pd", cfg.pd, "PD code, e.g. \"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\"");
  cmd->add_option("--file", cfg.file, "universe JSON, balanced-graph JSON, or PD text");
  cmd->add_option("--fixture", cfg.fixture, "stored fixture name or grid_M_N");
  cmd->add_option("--stars", cfg.stars, "starred faces as i,j, or auto");
  cmd->add_option("--cap", cfg.cap, "maximum number of perfect matchings to enumerate")->check(CLI::PositiveNumber);
  cmd->add_flag("--strict", cfg.strict, "reject nugatory or non-prime-like diagrams");
}

void add_output(CLI::App* cmd, Config& cfg, const std::string& default_format) {
  cfg.format = default_format;
  cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "dot", "text"}));
  cmd->add_option("--out", cfg.out, "write to this path instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clock lattices of knot universes"};
  app.require_subcommand(1);
  Config cfg;
  std::string route = "symdiff";
  std::string export_what;
  std::string fixture_name;
  bool list = false;
  int m = 0;
  int n = 0;

  auto* parse = app.add_subcommand("parse", "parse a diagram and report its faces, nugatory crossings and stars");
  add_input(parse, cfg);
  add_output(parse, cfg, "text");
  auto* matchings = app.add_subcommand("matchings", "enumerate the perfect matchings of the balanced graph");
  add_input(matchings, cfg);
  add_output(matchings, cfg, "text");
  auto* lattice = app.add_subcommand("lattice", "build the clock lattice and check the clock theorem");
  add_input(lattice, cfg);
  add_output(lattice, cfg, "text");
  auto* height = app.add_subcommand("height", "height of the clock lattice");
  add_input(height, cfg);
  add_output(height, cfg, "text");
  height->add_flag("--verify", cfg.verify, "compare every route and fail on disagreement");
  auto* decompose = app.add_subcommand("decompose", "leaves and nested cycles of the balanced graph");
  add_input(decompose, cfg);
  add_output(decompose, cfg, "json");
  decompose->add_option("--route", route, "symdiff or peel")->check(CLI::IsMember({"symdiff", "peel"}));
  auto* grid = app.add_subcommand("grid", "grid graph of M x N squares");
  grid->add_option("m", m, "squares per column (odd)")->required();
  grid->add_option("n", n, "squares per row (odd)")->required();
  add_output(grid, cfg, "text");
  auto* fixture = app.add_subcommand("fixture", "list or show stored fixtures");
  fixture->add_option("name", fixture_name, "fixture name");
  fixture->add_flag("--list", list, "list fixture names");
  add_output(fixture, cfg, "json");
  auto* exporter = app.add_subcommand("export", "export gamma, lattice, morse or universe");
  exporter->add_option("what", export_what, "gamma | lattice | morse | universe")
      ->required()
      ->check(CLI::IsMember({"gamma", "lattice", "morse", "universe"}));
  add_input(exporter, cfg);
  add_output(exporter, cfg, "dot");
  auto* verify = app.add_subcommand("verify", "run every check on one input");
  add_input(verify, cfg);
  add_output(verify, cfg, "text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*parse) return cmd_parse(cfg);
    if (*matchings) return cmd_matchings(cfg);
    if (*lattice) return cmd_lattice(cfg);
    if (*height) return cmd_height(cfg);
    if (*decompose) return cmd_decompose(cfg, route);
    if (*grid) return cmd_grid(cfg, m, n);
    if (*fixture) return cmd_fixture(cfg, fixture_name, list);
    if (*exporter) {
      if (export_what == "morse" || export_what == "universe") {
        if (!exporter->count("--format")) cfg.format = "json";
      }
      return cmd_export(cfg, export_what);
    }
    if (*verify) return cmd_verify(cfg);
  } catch (const cl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return kOk;
}
