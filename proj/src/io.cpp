#include "cpmc/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "cpmc/embedding.hpp"
#include "cpmc/reductions.hpp"
#include "json.hpp"

namespace cpmc {

using json = nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

json parse(const std::string& text, const char* what) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError(std::string(what) + ": not valid JSON");
  return doc;
}

std::int64_t plain_weight(const PerturbedWeight& w, const char* what) {
  if (w.is_infinite() || !w.eps_terms().empty())
    throw PreconditionError(std::string(what) + " files carry plain integer weights");
  return w.base();
}

std::int64_t int_field(const json& obj, const char* key, const char* ctx) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer())
    throw ParseError(std::string(ctx) + ": missing integer field \"" + key + "\"");
  return it->get<std::int64_t>();
}

std::int64_t int_or(const json& obj, const char* key, std::int64_t fallback, const char* ctx) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer())
    throw ParseError(std::string(ctx) + ": field \"" + key + "\" must be an integer");
  return it->get<std::int64_t>();
}

std::vector<int> int_list(const json& arr, const char* ctx) {
  if (!arr.is_array()) throw ParseError(std::string(ctx) + ": expected an array");
  std::vector<int> out;
  for (const auto& x : arr) {
    if (!x.is_number_integer()) throw ParseError(std::string(ctx) + ": expected integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

std::string instance_to_json(const PlanarInstance& inst) {
  const Graph& g = inst.graph;
  json doc;
  doc["nodes"] = json::array();
  for (NodeId v = 0; v < g.node_count(); ++v)
    doc["nodes"].push_back({{"id", v}, {"weight", plain_weight(g.node_weight(v), "instance")}});
  doc["edges"] = json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    doc["edges"].push_back(
        {{"id", e}, {"u", ed.u}, {"v", ed.v}, {"weight", plain_weight(ed.weight, "instance")}});
  }
  if (inst.s1 >= 0 || inst.s2 >= 0 || inst.t >= 0)
    doc["terminals"] = {{"s1", inst.s1}, {"s2", inst.s2}, {"t", inst.t}};
  if (inst.rotations) {
    json rot = json::object();
    for (NodeId v = 0; v < g.node_count(); ++v)
      rot[std::to_string(v)] = (*inst.rotations)[static_cast<std::size_t>(v)];
    doc["embedding"] = {{"rotations", std::move(rot)}};
  }
  if (!inst.metadata.empty()) {
    json meta = json::object();
    for (const auto& [k, v] : inst.metadata) meta[k] = v;
    doc["metadata"] = std::move(meta);
  }
  return doc.dump(2) + "\n";
}

PlanarInstance instance_from_json(const std::string& text) {
  json doc = parse(text, "instance");
  if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges"))
    throw ParseError("instance: needs \"nodes\" and \"edges\" arrays");

  const json& jn = doc["nodes"];
  if (!jn.is_array()) throw ParseError("instance: \"nodes\" must be an array");
  int n = static_cast<int>(jn.size());
  std::vector<std::int64_t> node_w(static_cast<std::size_t>(n), -1);
  for (const auto& node : jn) {
    std::int64_t id = int_field(node, "id", "instance node");
    std::int64_t w = int_or(node, "weight", 1, "instance node");
    if (id < 0 || id >= n || node_w[static_cast<std::size_t>(id)] >= 0)
      throw ParseError("instance: node ids must be dense from 0, each once");
    if (w < 1) throw ParseError("instance: node weights must be positive");
    node_w[static_cast<std::size_t>(id)] = w;
  }

  PlanarInstance inst;
  inst.graph = Graph(n);
  for (NodeId v = 0; v < n; ++v)
    inst.graph.set_node_weight(v, PerturbedWeight::finite(node_w[static_cast<std::size_t>(v)]));

  const json& je = doc["edges"];
  if (!je.is_array()) throw ParseError("instance: \"edges\" must be an array");
  int m = static_cast<int>(je.size());
  struct Parsed {
    NodeId u, v;
    std::int64_t w;
    bool seen = false;
  };
  std::vector<Parsed> parsed(static_cast<std::size_t>(m));
  for (const auto& edge : je) {
    std::int64_t id = int_field(edge, "id", "instance edge");
    if (id < 0 || id >= m || parsed[static_cast<std::size_t>(id)].seen)
      throw ParseError("instance: edge ids must be dense from 0, each once");
    auto& p = parsed[static_cast<std::size_t>(id)];
    p.u = static_cast<NodeId>(int_field(edge, "u", "instance edge"));
    p.v = static_cast<NodeId>(int_field(edge, "v", "instance edge"));
    p.w = int_or(edge, "weight", 1, "instance edge");
    if (p.w < 1) throw ParseError("instance: edge weights must be positive");
    p.seen = true;
  }
  try {
    for (const auto& p : parsed) inst.graph.add_edge(p.u, p.v, PerturbedWeight::finite(p.w));
  } catch (const GraphError& err) {
    throw ParseError(std::string("instance: ") + err.what());
  }

  if (doc.contains("terminals")) {
    const json& t = doc["terminals"];
    inst.s1 = static_cast<NodeId>(int_field(t, "s1", "instance terminals"));
    inst.s2 = static_cast<NodeId>(int_field(t, "s2", "instance terminals"));
    inst.t = static_cast<NodeId>(int_field(t, "t", "instance terminals"));
    for (NodeId v : {inst.s1, inst.s2, inst.t})
      if (v != -1 && !inst.graph.has_node(v))
        throw ParseError("instance: terminal id out of range");
  }

  if (doc.contains("embedding")) {
    const json& emb = doc["embedding"];
    if (!emb.is_object() || !emb.contains("rotations"))
      throw ParseError("instance: \"embedding\" needs a \"rotations\" object");
    const json& rot = emb["rotations"];
    if (!rot.is_object()) throw ParseError("instance: rotations must map node ids to edge lists");
    std::vector<std::vector<EdgeId>> rotations(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const auto& [key, value] : rot.items()) {
      int v = -1;
      try {
        v = std::stoi(key);
      } catch (...) {
        throw ParseError("instance: rotation key is not a node id: " + key);
      }
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
        throw ParseError("instance: rotation keys must be node ids, each once");
      seen[static_cast<std::size_t>(v)] = true;
      rotations[static_cast<std::size_t>(v)] = int_list(value, "instance rotations");
    }
    for (bool s : seen)
      if (!s) throw ParseError("instance: rotations must cover every node");
    try {
      validate_embedding(inst.graph, rotations);
    } catch (const std::runtime_error& err) {
      throw ParseError(std::string("instance embedding: ") + err.what());
    }
    inst.rotations = std::move(rotations);
  }

  if (doc.contains("metadata")) {
    const json& meta = doc["metadata"];
    if (!meta.is_object()) throw ParseError("instance: metadata must be an object");
    for (const auto& [k, v] : meta.items()) {
      if (!v.is_string()) throw ParseError("instance: metadata values must be strings");
      inst.metadata[k] = v.get<std::string>();
    }
  }
  return inst;
}

PlanarInstance read_instance(const std::string& path) { return instance_from_json(slurp(path)); }

void write_instance(const PlanarInstance& inst, const std::string& path) {
  spill(path, instance_to_json(inst));
}

PerturbedWeight result_value(const ResultDoc& doc) {
  PerturbedWeight w = PerturbedWeight::finite(doc.base);
  for (int r : doc.eps_ranks) {
    if (r < 1) throw ParseError("result: epsilon ranks must be >= 1");
    w += PerturbedWeight::with_eps(0, r);
  }
  return w;
}

void set_result_value(ResultDoc& doc, const PerturbedWeight& w) {
  if (w.is_infinite()) throw PreconditionError("result files hold finite values only");
  doc.base = w.base();
  doc.eps_ranks.clear();
  for (const auto& [rank, coeff] : w.eps_terms()) {
    if (coeff < 0) throw PreconditionError("result values cannot carry negative epsilon terms");
    for (std::int64_t i = 0; i < coeff; ++i) doc.eps_ranks.push_back(rank);
  }
}

std::string result_to_json(const ResultDoc& doc) {
  json out;
  out["solver"] = doc.solver;
  out["cut_kind"] = doc.kind == CutKind::Edge ? "edge" : "node";
  out["cut"] = doc.elements;
  out["base_value"] = doc.base;
  out["eps_ranks"] = doc.eps_ranks;
  json certs = json::object();
  for (const auto& [k, v] : doc.certificates) certs[k] = v;
  out["certificates"] = std::move(certs);
  if (!doc.params.empty()) {
    json params = json::object();
    for (const auto& [k, v] : doc.params) params[k] = v;
    out["params"] = std::move(params);
  }
  out["wall_ms"] = doc.wall_ms;
  return out.dump(2) + "\n";
}

ResultDoc result_from_json(const std::string& text) {
  json doc = parse(text, "result");
  if (!doc.is_object()) throw ParseError("result: expected an object");
  ResultDoc out;
  if (!doc.contains("solver") || !doc["solver"].is_string())
    throw ParseError("result: missing \"solver\" string");
  out.solver = doc["solver"].get<std::string>();
  if (!doc.contains("cut_kind") || !doc["cut_kind"].is_string())
    throw ParseError("result: missing \"cut_kind\"");
  std::string kind = doc["cut_kind"].get<std::string>();
  if (kind == "edge")
    out.kind = CutKind::Edge;
  else if (kind == "node")
    out.kind = CutKind::Node;
  else
    throw ParseError("result: cut_kind must be \"edge\" or \"node\"");
  if (!doc.contains("cut")) throw ParseError("result: missing \"cut\" array");
  out.elements = int_list(doc["cut"], "result cut");
  out.base = int_field(doc, "base_value", "result");
  if (!doc.contains("eps_ranks")) throw ParseError("result: missing \"eps_ranks\" array");
  out.eps_ranks = int_list(doc["eps_ranks"], "result eps_ranks");
  for (int r : out.eps_ranks)
    if (r < 1) throw ParseError("result: epsilon ranks must be >= 1");
  if (doc.contains("certificates")) {
    const json& certs = doc["certificates"];
    if (!certs.is_object()) throw ParseError("result: certificates must be an object");
    for (const auto& [k, v] : certs.items()) out.certificates[k] = int_list(v, "result certificate");
  }
  if (doc.contains("params")) {
    const json& params = doc["params"];
    if (!params.is_object()) throw ParseError("result: params must be an object");
    for (const auto& [k, v] : params.items()) {
      if (!v.is_string()) throw ParseError("result: param values must be strings");
      out.params[k] = v.get<std::string>();
    }
  }
  out.wall_ms = int_or(doc, "wall_ms", 0, "result");
  return out;
}

ResultDoc read_result(const std::string& path) { return result_from_json(slurp(path)); }

void write_result(const ResultDoc& doc, const std::string& path) {
  spill(path, result_to_json(doc));
}

std::string set_cover_to_json(const SetCoverInstance& sc) {
  json doc;
  doc["n"] = sc.n1;
  doc["sets"] = json::array();
  for (std::size_t i = 0; i < sc.sets.size(); ++i)
    doc["sets"].push_back({{"ids", sc.sets[i]},
                           {"weight", i < sc.weights.size() ? sc.weights[i] : std::int64_t{1}}});
  return doc.dump(2) + "\n";
}

SetCoverInstance set_cover_from_json(const std::string& text) {
  json doc = parse(text, "set cover");
  if (!doc.is_object()) throw ParseError("set cover: expected an object");
  SetCoverInstance sc;
  sc.n1 = static_cast<int>(int_field(doc, "n", "set cover"));
  if (!doc.contains("sets") || !doc["sets"].is_array())
    throw ParseError("set cover: missing \"sets\" array");
  for (const auto& s : doc["sets"]) {
    if (!s.is_object() || !s.contains("ids"))
      throw ParseError("set cover: each set needs an \"ids\" array");
    sc.sets.push_back(int_list(s["ids"], "set cover ids"));
    sc.weights.push_back(int_or(s, "weight", 1, "set cover set"));
  }
  try {
    validate_set_cover(sc);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("set cover: ") + e.what());
  }
  return sc;
}

SetCoverInstance read_set_cover(const std::string& path) {
  return set_cover_from_json(slurp(path));
}

void write_set_cover(const SetCoverInstance& sc, const std::string& path) {
  spill(path, set_cover_to_json(sc));
}

Graph import_dimacs(std::istream& in) {
  std::string line;
  int n = -1, m = -1;
  int seen_edges = 0;
  Graph g;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    auto fail = [&](const std::string& why) {
      throw ParseError("dimacs line " + std::to_string(lineno) + ": " + why);
    };
    if (tag == "c") continue;
    if (tag == "p") {
      std::string fmt;
      if (n >= 0) fail("second problem line");
      if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0)
        fail("expected \"p edge N M\"");
      g = Graph(n);
    } else if (tag == "e") {
      if (n < 0) fail("edge before problem line");
      long long u = 0, v = 0, w = 1;
      if (!(ls >> u >> v)) fail("expected \"e U V [W]\"");
      ls >> w;  // optional weight, default 1
      if (u < 1 || u > n || v < 1 || v > n) fail("endpoint out of range");
      if (w < 1) fail("weights must be positive");
      try {
        g.add_edge(static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1),
                   PerturbedWeight::finite(w));
      } catch (const GraphError& err) {
        fail(err.what());
      }
      ++seen_edges;
    } else {
      fail("unsupported line type \"" + tag + "\"");
    }
  }
  if (n < 0) throw ParseError("dimacs: no problem line");
  if (seen_edges != m) throw ParseError("dimacs: header promised " + std::to_string(m) +
                                        " edges, file has " + std::to_string(seen_edges));
  return g;
}

Graph import_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return import_dimacs(in);
}

std::string to_dot(const PlanarInstance& inst, CutKind kind, const std::vector<int>& highlight) {
  const Graph& g = inst.graph;
  std::vector<bool> hot(static_cast<std::size_t>(kind == CutKind::Edge ? g.edge_count()
                                                                       : g.node_count()),
                        false);
  for (int x : highlight)
    if (x >= 0 && x < static_cast<int>(hot.size())) hot[static_cast<std::size_t>(x)] = true;

  std::ostringstream out;
  out << "graph instance {\n  node [shape=circle];\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out << "  " << v << " [label=\"" << v;
    if (v == inst.s1) out << " s1";
    if (v == inst.s2) out << " s2";
    if (v == inst.t) out << " t";
    std::int64_t w = g.node_weight(v).base();
    if (w != 1) out << " w" << w;
    out << "\"";
    if (kind == CutKind::Node && hot[static_cast<std::size_t>(v)])
      out << ", color=red, penwidth=2";
    out << "];\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out << "  " << ed.u << " -- " << ed.v;
    std::int64_t w = ed.weight.base();
    bool cut = kind == CutKind::Edge && hot[static_cast<std::size_t>(e)];
    if (w != 1 || cut) {
      out << " [";
      if (w != 1) out << "label=\"" << w << "\"";
      if (w != 1 && cut) out << ", ";
      if (cut) out << "color=red, penwidth=2";
      out << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cpmc
