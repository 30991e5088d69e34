#include "cpmc/cli_app.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cpmc/embedding.hpp"
#include "cpmc/exec.hpp"
#include "cpmc/generate.hpp"
#include "cpmc/lcsp.hpp"
#include "cpmc/oracle.hpp"
#include "cpmc/reductions.hpp"
#include "cpmc/solver.hpp"
#include "json.hpp"

namespace cpmc {

namespace {

using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point from) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - from).count();
}

std::string swap_json_suffix(const std::string& path, const std::string& tail) {
  const std::string suffix = ".json";
  if (path.size() > suffix.size() &&
      path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0)
    return path.substr(0, path.size() - suffix.size()) + tail;
  return path + tail;
}

std::string default_result_path(const std::string& instance_path) {
  return swap_json_suffix(instance_path, ".result.json");
}

std::string ids_to_string(const std::vector<int>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ids[i]);
  }
  return s + "}";
}

// "LO:HI" -> pair; PreconditionError on junk.
std::pair<std::int64_t, std::int64_t> parse_weight_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw PreconditionError("weight range must look like LO:HI, got " + text);
  try {
    std::int64_t lo = std::stoll(text.substr(0, colon));
    std::int64_t hi = std::stoll(text.substr(colon + 1));
    return {lo, hi};
  } catch (const std::exception&) {
    throw PreconditionError("weight range must look like LO:HI, got " + text);
  }
}

int outer_face_of(const PlanarInstance& inst) {
  auto it = inst.metadata.find("outer_face");
  if (it == inst.metadata.end()) return 0;
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw ParseError("instance metadata outer_face is not a face id: " + it->second);
  }
}

bool fail_with(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

// Walks the claimed edge sequence from `a`; true iff it is a simple
// path ending at `b`.  Fills the node sequence.
bool walk_path(const Graph& g, NodeId a, NodeId b, const std::vector<int>& edges,
               std::vector<NodeId>& nodes, std::string* why) {
  nodes = {a};
  std::vector<bool> seen(static_cast<std::size_t>(g.node_count()), false);
  seen[static_cast<std::size_t>(a)] = true;
  NodeId cur = a;
  for (int e : edges) {
    if (!g.has_edge(e)) return fail_with(why, "path uses edge id out of range");
    NodeId nxt;
    try {
      nxt = g.other_end(e, cur);
    } catch (const GraphError&) {
      return fail_with(why, "path edges do not chain");
    }
    if (seen[static_cast<std::size_t>(nxt)]) return fail_with(why, "path repeats a node");
    seen[static_cast<std::size_t>(nxt)] = true;
    nodes.push_back(nxt);
    cur = nxt;
  }
  if (cur != b) return fail_with(why, "path does not end at its target");
  return true;
}

bool verify_lcsp_result(const PlanarInstance& inst, const Graph& g, const ResultDoc& doc,
                        const PerturbedWeight& claimed, std::string* why) {
  if (doc.kind != CutKind::Edge) return fail_with(why, "a path result must have edge kind");
  if (!inst.rotations) return fail_with(why, "instance has no embedding to verify against");
  auto need = [&](const char* key) -> std::optional<int> {
    auto it = doc.params.find(key);
    if (it == doc.params.end()) return std::nullopt;
    try {
      return std::stoi(it->second);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  auto from = need("from"), to = need("to"), face = need("face");
  if (!from || !to || !face)
    return fail_with(why, "path result lacks from/to/face params");
  auto rule_it = doc.params.find("rule");
  if (rule_it == doc.params.end() || rule_it->second != "above-arc")
    return fail_with(why, "unknown side rule in result params");

  Embedding emb = validate_embedding(g, *inst.rotations);
  try {
    emb.set_outer_face(outer_face_of(inst));
  } catch (const std::exception& e) {
    return fail_with(why, e.what());
  }
  LcspQuery q{*from, *to, *face, SideRule::AboveArc, -1};
  try {
    validate_lcsp_query(g, emb, q);
  } catch (const PreconditionError& e) {
    return fail_with(why, e.what());
  }

  std::vector<NodeId> nodes;
  if (!walk_path(g, q.a, q.b, doc.elements, nodes, why)) return false;

  const auto& outer_nodes = emb.face(emb.outer_face()).nodes;
  for (std::size_t i = 1; i + 1 < nodes.size(); ++i)
    if (std::find(outer_nodes.begin(), outer_nodes.end(), nodes[i]) != outer_nodes.end())
      return fail_with(why, "path intermediate sits on the outer face");

  std::vector<EdgeId> edge_ids(doc.elements.begin(), doc.elements.end());
  if (!lcsp_feasible(g, emb, q, edge_ids))
    return fail_with(why, "path leaves the constrained face on the wrong side");

  PerturbedWeight total = PerturbedWeight::zero();
  for (int e : doc.elements) total += g.edge(e).weight;
  if (total != claimed) return fail_with(why, "value field does not match the path weight");

  auto cert = doc.certificates.find("path");
  if (cert != doc.certificates.end()) {
    std::vector<int> as_ints(nodes.begin(), nodes.end());
    if (cert->second != as_ints) return fail_with(why, "path certificate does not match edges");
  }
  return true;
}

}  // namespace

PerturbMode perturb_mode_for(const std::string& solver) {
  if (solver == "cpmnc-same-face") return PerturbMode::Nodes;
  if (solver == "cpmec-planar" || solver == "cpmec-same-face" || solver == "lcsp")
    return PerturbMode::Edges;
  throw PreconditionError("unknown solver name: " + solver);
}

bool verify_result(const PlanarInstance& inst, const ResultDoc& doc, std::string* why) {
  Graph g;
  try {
    g = perturb(inst.graph, perturb_mode_for(doc.solver));
  } catch (const std::runtime_error& e) {
    return fail_with(why, e.what());
  }
  PerturbedWeight claimed;
  try {
    claimed = result_value(doc);
  } catch (const std::exception& e) {
    return fail_with(why, e.what());
  }

  if (doc.solver == "lcsp") return verify_lcsp_result(inst, g, doc, claimed, why);

  CutKind want_kind = doc.solver == "cpmnc-same-face" ? CutKind::Node : CutKind::Edge;
  if (doc.kind != want_kind) return fail_with(why, "cut kind does not match the solver");
  for (NodeId v : {inst.s1, inst.s2, inst.t})
    if (!g.has_node(v)) return fail_with(why, "instance terminals are missing or out of range");
  if (inst.s1 == inst.s2 || inst.s1 == inst.t || inst.s2 == inst.t)
    return fail_with(why, "instance terminals are not distinct");

  std::vector<int> sorted = doc.elements;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return fail_with(why, "cut lists an element twice");

  std::vector<bool> node_mask(static_cast<std::size_t>(g.node_count()), false);
  std::vector<bool> edge_mask(static_cast<std::size_t>(g.edge_count()), false);
  PerturbedWeight total = PerturbedWeight::zero();
  for (int x : sorted) {
    if (doc.kind == CutKind::Node) {
      if (!g.has_node(x)) return fail_with(why, "cut names a node id out of range");
      if (x == inst.s1 || x == inst.s2 || x == inst.t)
        return fail_with(why, "cut removes a terminal");
      node_mask[static_cast<std::size_t>(x)] = true;
      total += g.node_weight(x);
    } else {
      if (!g.has_edge(x)) return fail_with(why, "cut names an edge id out of range");
      edge_mask[static_cast<std::size_t>(x)] = true;
      total += g.edge(x).weight;
    }
  }

  std::vector<NodeId> comp = connected_component(g, inst.s1, node_mask, edge_mask);
  if (!std::binary_search(comp.begin(), comp.end(), inst.s2))
    return fail_with(why, "cut disconnects s1 from s2");
  if (std::binary_search(comp.begin(), comp.end(), inst.t))
    return fail_with(why, "cut does not separate t from s1");
  if (total != claimed) return fail_with(why, "value field does not match the cut weight");

  auto preserved = doc.certificates.find("preserved");
  auto separated = doc.certificates.find("separated");
  if (preserved == doc.certificates.end() || separated == doc.certificates.end())
    return fail_with(why, "result lacks preserved/separated certificates");
  std::vector<int> comp_ints(comp.begin(), comp.end());
  if (preserved->second != comp_ints)
    return fail_with(why, "preserved certificate does not match the s1 component");
  std::vector<NodeId> t_comp = connected_component(g, inst.t, node_mask, edge_mask);
  std::vector<int> t_ints(t_comp.begin(), t_comp.end());
  if (separated->second != t_ints)
    return fail_with(why, "separated certificate does not match the t component");
  return true;
}

namespace {

struct SolveFlags {
  bool oracle = false;
  bool serial = false;
  bool unsafe_nonplanar = false;
  int jobs = 0;
  std::string out;
  std::string dot;
  int from = -1, to = -1, face = -1;
  bool exclusive_output = false;  // -o/--dot given with several instances
};

struct SolveOutcome {
  int code = ExitOk;
  std::string out_text;  // stdout lines, printed in input order
  std::string err_text;
};

// One instance end to end: load, perturb, dispatch, optional oracle
// cross-check, write the result file.
SolveOutcome solve_one(const std::string& problem, const std::string& path,
                       const SolveFlags& flags, Exec exec) {
  SolveOutcome out;
  std::ostringstream msg, err;
  auto done = [&](int code) {
    out.code = code;
    out.out_text = msg.str();
    out.err_text = err.str();
    return out;
  };

  PlanarInstance raw;
  try {
    raw = read_instance(path);
  } catch (const std::exception& e) {
    err << path << ": " << e.what() << "\n";
    return done(ExitMalformed);
  }

  PlanarInstance inst = raw;
  inst.graph = perturb(raw.graph, perturb_mode_for(problem));

  ResultDoc doc;
  doc.solver = problem;
  Clock::time_point t0 = Clock::now();

  try {
    if (problem == "lcsp") {
      if (!inst.rotations) throw PreconditionError("lcsp needs an instance embedding");
      Embedding emb = validate_embedding(inst.graph, *inst.rotations);
      emb.set_outer_face(outer_face_of(inst));
      LcspQuery q{flags.from, flags.to, flags.face, SideRule::AboveArc, -1};
      validate_lcsp_query(inst.graph, emb, q);
      auto best = solve_lcsp(inst.graph, emb, q);
      doc.wall_ms = elapsed_ms(t0);
      if (flags.oracle) {
        auto ref = oracle_lcsp(inst.graph, emb, q);
        bool same = best.has_value() == ref.has_value() &&
                    (!best || (best->edges == ref->edges && best->total == ref->total));
        if (!same) {
          err << path << ": oracle disagrees with solve_lcsp\n";
          return done(ExitOracleMismatch);
        }
        msg << "oracle: match\n";
      }
      if (!best) {
        err << path << ": no feasible constrained path\n";
        return done(ExitInfeasible);
      }
      doc.kind = CutKind::Edge;
      doc.elements.assign(best->edges.begin(), best->edges.end());
      set_result_value(doc, best->total);
      doc.certificates["path"].assign(best->nodes.begin(), best->nodes.end());
      doc.certificates["side_faces"].assign(best->side_witness.begin(),
                                            best->side_witness.end());
      doc.params = {{"from", std::to_string(q.a)},
                    {"to", std::to_string(q.b)},
                    {"face", std::to_string(q.face_c)},
                    {"rule", "above-arc"}};
      msg << problem << " " << path << ": path edges " << ids_to_string(doc.elements)
          << " value " << best->total.to_string();
    } else {
      if (!inst.graph.has_node(inst.s1) || !inst.graph.has_node(inst.s2) ||
          !inst.graph.has_node(inst.t))
        throw PreconditionError("instance lacks terminals");

      CpmcSolution sol;
      if (problem == "cpmnc-same-face") {
        sol = solve_cpmnc_same_face(inst);
      } else if (problem == "cpmec-same-face") {
        sol = solve_cpmec_same_face(inst);
      } else {
        SolveOptions opts;
        opts.exec = exec;
        opts.jobs = flags.jobs;
        opts.allow_nonplanar = flags.unsafe_nonplanar;
        sol = solve_cpmec_planar(inst, opts);
      }
      doc.wall_ms = elapsed_ms(t0);

      if (flags.oracle) {
        CutResult ref = problem == "cpmnc-same-face"
                            ? oracle_cpmnc(inst.graph, inst.s1, inst.s2, inst.t)
                            : oracle_cpmec(inst.graph, inst.s1, inst.s2, inst.t);
        bool same = sol.cut.finite() == ref.finite() &&
                    (!sol.cut.finite() ||
                     (sol.cut.elements == ref.elements && sol.cut.total == ref.total));
        if (!same) {
          err << path << ": oracle disagrees with " << problem << "\n";
          return done(ExitOracleMismatch);
        }
        msg << "oracle: match\n";
      }
      if (!sol.feasible()) {
        err << path << ": no valid cut exists\n";
        return done(ExitInfeasible);
      }
      doc.kind = sol.cut.kind;
      doc.elements = sol.cut.elements;
      set_result_value(doc, sol.cut.total);
      doc.certificates["preserved"].assign(sol.preserved.begin(), sol.preserved.end());
      doc.certificates["separated"].assign(sol.separated.begin(), sol.separated.end());
      msg << problem << " " << path << ": cut "
          << (doc.kind == CutKind::Node ? "nodes " : "edges ") << ids_to_string(doc.elements)
          << " value " << sol.cut.total.to_string();
    }
  } catch (const PreconditionError& e) {
    err << path << ": " << e.what() << "\n";
    return done(ExitPrecondition);
  } catch (const ParseError& e) {
    err << path << ": " << e.what() << "\n";
    return done(ExitMalformed);
  }

  std::string out_path = flags.out.empty() ? default_result_path(path) : flags.out;
  try {
    write_result(doc, out_path);
    if (!flags.dot.empty()) {
      std::ofstream dot(flags.dot, std::ios::binary);
      if (!dot) throw ParseError("cannot write " + flags.dot);
      dot << to_dot(raw, doc.kind, doc.elements);
    }
  } catch (const std::exception& e) {
    err << path << ": " << e.what() << "\n";
    return done(ExitMalformed);
  }
  msg << " (" << doc.wall_ms << "ms) -> " << out_path << "\n";
  return done(ExitOk);
}

int run_solve(const std::string& problem, const std::vector<std::string>& paths,
              const SolveFlags& flags) {
  if (paths.size() > 1 && flags.exclusive_output) {
    std::cerr << "-o/--dot apply to a single instance, got " << paths.size() << "\n";
    return ExitMalformed;
  }
  if (problem == "lcsp" && (flags.from < 0 || flags.to < 0 || flags.face < 0)) {
    std::cerr << "lcsp needs --from, --to and --face\n";
    return ExitMalformed;
  }

  std::vector<SolveOutcome> outcomes(paths.size());
  Exec exec = flags.serial ? Exec::Serial : Exec::Parallel;
  if (paths.size() > 1 && !flags.serial && resolve_jobs(flags.jobs) > 1) {
    // Batch mode: spread instances over threads, keep each solve serial.
    int count = static_cast<int>(paths.size());
#pragma omp parallel for schedule(dynamic) num_threads(resolve_jobs(flags.jobs))
    for (int i = 0; i < count; ++i)
      outcomes[static_cast<std::size_t>(i)] =
          solve_one(problem, paths[static_cast<std::size_t>(i)], flags, Exec::Serial);
  } else {
    for (std::size_t i = 0; i < paths.size(); ++i)
      outcomes[i] = solve_one(problem, paths[i], flags, exec);
  }

  int worst = ExitOk;
  for (const auto& o : outcomes) {
    std::cout << o.out_text;
    std::cerr << o.err_text;
    worst = std::max(worst, o.code);
  }
  return worst;
}

int run_reduce(const std::string& path, const std::string& out_opt, const std::string& map_opt,
               std::optional<std::int64_t> d1, bool unit_weight, bool bipartite) {
  SetCoverInstance sc;
  ReductionArtifact art;
  try {
    sc = read_set_cover(path);
    art = build_cpmnc_from_set_cover(sc, d1);
  } catch (const std::exception& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return ExitMalformed;
  }

  PlanarInstance inst;
  inst.graph = art.graph;
  inst.s1 = art.s1;
  inst.s2 = art.s2;
  inst.t = art.t;
  inst.metadata["family"] = "set-cover-artifact";
  inst.metadata["scale"] = std::to_string(art.scale);
  inst.metadata["d1"] = std::to_string(art.d1);
  inst.metadata["budget"] = std::to_string(art.budget);

  ordered_json map;
  map["endpoints"] = art.endpoints;
  map["hub_of_set"] = art.hub_of_set;
  ordered_json internals = ordered_json::object();
  for (std::size_t e = 0; e < art.internals_of_element.size(); ++e) {
    ordered_json list = ordered_json::array();
    for (const auto& [set_id, node] : art.internals_of_element[e])
      list.push_back({{"set", set_id}, {"node", node}});
    internals[std::to_string(e)] = std::move(list);
  }
  map["internals_of_element"] = std::move(internals);

  if (unit_weight) {
    UnitWeightGraph unit = to_unit_weight(art.graph, {art.s1, art.s2, art.t});
    inst.graph = unit.graph;
    inst.s1 = unit.clique_of[static_cast<std::size_t>(art.s1)][0];
    inst.s2 = unit.clique_of[static_cast<std::size_t>(art.s2)][0];
    inst.t = unit.clique_of[static_cast<std::size_t>(art.t)][0];
    inst.metadata["transform"] = "unit-weight";
    map["unit_original_of"] = unit.original_of;
  }

  if (bipartite) {
    // Two-color whatever is being emitted; the raw artifact always
    // passes, a clique expansion of a weighted artifact honestly fails.
    std::vector<int> color(static_cast<std::size_t>(inst.graph.node_count()), -1);
    for (NodeId start = 0; start < inst.graph.node_count(); ++start) {
      if (color[static_cast<std::size_t>(start)] >= 0) continue;
      color[static_cast<std::size_t>(start)] = 0;
      std::vector<NodeId> queue = {start};
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        NodeId x = queue[qi];
        for (EdgeId e : inst.graph.incident(x)) {
          NodeId y = inst.graph.other_end(e, x);
          if (color[static_cast<std::size_t>(y)] < 0) {
            color[static_cast<std::size_t>(y)] = 1 - color[static_cast<std::size_t>(x)];
            queue.push_back(y);
          } else if (color[static_cast<std::size_t>(y)] ==
                     color[static_cast<std::size_t>(x)]) {
            std::cerr << path << ": output is not two-colorable (edge " << e << ")\n";
            return ExitInvalid;
          }
        }
      }
    }
    inst.metadata["bipartite"] = "verified";
    map["color"] = color;
  }

  std::string out_path = out_opt.empty() ? swap_json_suffix(path, ".instance.json") : out_opt;
  std::string map_path = map_opt.empty() ? swap_json_suffix(out_path, ".map.json") : map_opt;
  try {
    write_instance(inst, out_path);
    std::ofstream mf(map_path, std::ios::binary);
    if (!mf) throw ParseError("cannot write " + map_path);
    mf << map.dump(2) << "\n";
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return ExitMalformed;
  }
  std::cout << "artifact: " << inst.graph.node_count() << " nodes, " << inst.graph.edge_count()
            << " edges, scale " << art.scale << ", budget " << art.budget << " -> " << out_path
            << " (map " << map_path << ")\n";
  return ExitOk;
}

int run_import(const std::string& dimacs_path, const std::string& out_opt) {
  PlanarInstance inst;
  try {
    inst.graph = import_dimacs_file(dimacs_path);
  } catch (const std::exception& e) {
    std::cerr << dimacs_path << ": " << e.what() << "\n";
    return ExitMalformed;
  }
  try {
    std::string text = instance_to_json(inst);
    if (out_opt.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out_opt, std::ios::binary);
      if (!f) throw ParseError("cannot write " + out_opt);
      f << text;
      std::cout << "imported: " << inst.graph.node_count() << " nodes, "
                << inst.graph.edge_count() << " edges -> " << out_opt << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return ExitMalformed;
  }
  return ExitOk;
}

int run_verify(const std::string& instance_path, const std::string& result_path) {
  PlanarInstance inst;
  ResultDoc doc;
  try {
    inst = read_instance(instance_path);
    doc = read_result(result_path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return ExitMalformed;
  }
  std::string why;
  if (!verify_result(inst, doc, &why)) {
    std::cerr << "invalid: " << why << "\n";
    return ExitInvalid;
  }
  std::cout << "valid\n";
  return ExitOk;
}

struct GenFlags {
  std::uint32_t seed = 0;
  std::string weights, node_weights, cofacial, out, dot;
};

int run_gen(const std::string& family, const std::string& shape, int nodes, int edges,
            const GenFlags& flags) {
  PlanarInstance inst;
  try {
    if (family == "grid") {
      auto x = shape.find('x');
      if (shape.empty() || x == std::string::npos)
        throw PreconditionError("grid wants a shape like 3x3");
      inst = gen_grid(std::stoi(shape.substr(0, x)), std::stoi(shape.substr(x + 1)));
    } else if (family == "path") {
      if (shape.empty()) throw PreconditionError("path wants a length");
      inst = gen_path(std::stoi(shape));
    } else {  // random-planar
      if (!shape.empty())
        throw PreconditionError("random-planar takes --nodes/--edges, not a shape");
      inst = gen_random_planar(nodes, edges, flags.seed);
    }

    // Post-processing draws from one stream in a fixed order, so a seed
    // pins the bytes.
    std::mt19937 rng(flags.seed);
    if (!flags.cofacial.empty()) {
      if (flags.cofacial != "s1s2" && flags.cofacial != "s1t")
        throw PreconditionError("--cofacial must be s1s2 or s1t");
      pick_terminals(inst, flags.cofacial == "s1s2" ? CofacialPair::S1S2 : CofacialPair::S1T,
                     rng);
    }
    if (!flags.weights.empty()) {
      auto [lo, hi] = parse_weight_range(flags.weights);
      randomize_edge_weights(inst, lo, hi, rng);
    }
    if (!flags.node_weights.empty()) {
      auto [lo, hi] = parse_weight_range(flags.node_weights);
      randomize_node_weights(inst, lo, hi, rng);
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return ExitMalformed;
  }

  try {
    std::string text = instance_to_json(inst);
    if (flags.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(flags.out, std::ios::binary);
      if (!f) throw ParseError("cannot write " + flags.out);
      f << text;
      std::cout << family << ": " << inst.graph.node_count() << " nodes, "
                << inst.graph.edge_count() << " edges -> " << flags.out << "\n";
    }
    if (!flags.dot.empty()) {
      std::ofstream f(flags.dot, std::ios::binary);
      if (!f) throw ParseError("cannot write " + flags.dot);
      f << to_dot(inst);
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return ExitMalformed;
  }
  return ExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"exact connectivity-preserving minimum cuts on planar graphs"};
  app.require_subcommand(1);

  // solve
  std::string problem;
  std::vector<std::string> instance_paths;
  SolveFlags sflags;
  auto* solve = app.add_subcommand("solve", "run a solver and write a result file");
  solve->add_option("problem", problem, "cpmnc-same-face | cpmec-planar | cpmec-same-face | lcsp")
      ->required()
      ->check(CLI::IsMember({"cpmnc-same-face", "cpmec-planar", "cpmec-same-face", "lcsp"}));
  solve->add_option("instances", instance_paths, "instance JSON files")->required();
  solve->add_flag("--oracle", sflags.oracle, "cross-check against the exhaustive reference");
  solve->add_flag("--serial", sflags.serial, "single-threaded kernels and batch");
  solve->add_option("--jobs", sflags.jobs, "threads for batch runs over several instances");
  solve->add_flag("--unsafe-nonplanar", sflags.unsafe_nonplanar,
                  "let cpmec-planar run without an embedding");
  auto* out_opt = solve->add_option("-o,--out", sflags.out, "result path (single instance)");
  auto* dot_opt = solve->add_option("--dot", sflags.dot, "also write a Graphviz view of the cut");
  solve->add_option("--from", sflags.from, "lcsp: path start (outer face node)");
  solve->add_option("--to", sflags.to, "lcsp: path target (outer face node)");
  solve->add_option("--face", sflags.face, "lcsp: face that must end up above the path");

  // reduce
  std::string sc_path, reduce_out, map_out;
  std::int64_t d1_value = -1;
  bool unit_weight = false, bipartite = false;
  auto* reduce = app.add_subcommand("reduce", "build a cut instance from a set-cover file");
  reduce->add_option("setcover", sc_path, "set-cover JSON file")->required();
  reduce->add_option("-o,--out", reduce_out, "instance output path");
  reduce->add_option("--map", map_out, "sidecar map path");
  auto* d1_opt = reduce->add_option("--d1", d1_value, "cover weight bound for the budget");
  reduce->add_flag("--unit-weight", unit_weight, "expand weighted nodes into cliques");
  reduce->add_flag("--bipartite", bipartite, "assert the output is two-colorable");

  // verify
  std::string v_instance, v_result;
  auto* verify = app.add_subcommand("verify", "re-check a result file by plain connectivity");
  verify->add_option("instance", v_instance, "instance JSON file")->required();
  verify->add_option("result", v_result, "result JSON file")->required();

  // import
  std::string d_path, d_out;
  auto* import_cmd = app.add_subcommand("import", "convert a DIMACS edge list to instance JSON");
  import_cmd->add_option("dimacs", d_path, "DIMACS .col/.edge file")->required();
  import_cmd->add_option("-o,--out", d_out, "write here instead of stdout");

  // gen
  std::string family, shape;
  int g_nodes = 0, g_edges = 0;
  GenFlags gflags;
  auto* gen = app.add_subcommand("gen", "emit a test instance");
  gen->add_option("family", family, "grid | path | random-planar")
      ->required()
      ->check(CLI::IsMember({"grid", "path", "random-planar"}));
  gen->add_option("shape", shape, "grid: RxC (node counts); path: length");
  gen->add_option("--nodes", g_nodes, "random-planar: node count");
  gen->add_option("--edges", g_edges, "random-planar: edge count");
  gen->add_option("--seed", gflags.seed, "random seed (default 0)");
  gen->add_option("--weights", gflags.weights, "random edge weights LO:HI");
  gen->add_option("--node-weights", gflags.node_weights, "random node weights LO:HI");
  gen->add_option("--cofacial", gflags.cofacial, "re-pick terminals: s1s2 | s1t share a face");
  gen->add_option("-o,--out", gflags.out, "write here instead of stdout");
  gen->add_option("--dot", gflags.dot, "also write a Graphviz view");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ExitOk : ExitMalformed;
  }

  if (solve->parsed()) {
    sflags.exclusive_output = out_opt->count() > 0 || dot_opt->count() > 0;
    return run_solve(problem, instance_paths, sflags);
  }
  if (reduce->parsed())
    return run_reduce(sc_path, reduce_out, map_out,
                      d1_opt->count() ? std::optional<std::int64_t>(d1_value) : std::nullopt,
                      unit_weight, bipartite);
  if (verify->parsed()) return run_verify(v_instance, v_result);
  if (import_cmd->parsed()) return run_import(d_path, d_out);
  if (gen->parsed()) return run_gen(family, shape, g_nodes, g_edges, gflags);
  return ExitMalformed;
}

}  // namespace cpmc
