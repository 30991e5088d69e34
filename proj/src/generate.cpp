#include "cpmc/generate.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpmc/embedding.hpp"

namespace cpmc {

namespace {

struct Pt {
  std::int64_t x = 0, y = 0;
};

std::int64_t cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::uint32_t draw(std::mt19937& rng, std::uint32_t bound) { return rng() % bound; }

// Outer face of a straight-line drawing: the one traced clockwise, i.e.
// with negative signed area.  A lone face (tree) is its own outside.
int outer_face_by_area(const Embedding& emb, const std::vector<Pt>& pts) {
  if (emb.face_count() == 1) return 0;
  int best = 0;
  std::int64_t best_area = 0;
  bool first = true;
  for (int f = 0; f < emb.face_count(); ++f) {
    const auto& nodes = emb.face(f).nodes;
    std::int64_t area2 = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Pt& a = pts[static_cast<std::size_t>(nodes[i])];
      const Pt& b = pts[static_cast<std::size_t>(nodes[(i + 1) % nodes.size()])];
      area2 += a.x * b.y - b.x * a.y;
    }
    if (first || area2 < best_area) {
      best = f;
      best_area = area2;
      first = false;
    }
  }
  return best;
}

void set_default_metadata(PlanarInstance& inst, const std::string& family, int outer) {
  inst.metadata["family"] = family;
  inst.metadata["outer_face"] = std::to_string(outer);
}

}  // namespace

PlanarInstance gen_grid(int rows, int cols) {
  if (rows < 2 || rows > 12 || cols < 2 || cols > 12)
    throw PreconditionError("grid dimensions must be in 2..12");
  auto node = [&](int r, int c) { return r * cols + c; };
  PlanarInstance inst;
  inst.graph = Graph(rows * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c) inst.graph.add_edge(node(r, c), node(r, c + 1));
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c < cols; ++c) inst.graph.add_edge(node(r, c), node(r + 1, c));
  auto h = [&](int r, int c) { return r * (cols - 1) + c; };
  auto v = [&](int r, int c) { return rows * (cols - 1) + r * cols + c; };
  std::vector<std::vector<EdgeId>> rotations(static_cast<std::size_t>(rows * cols));
  std::vector<Pt> pts(static_cast<std::size_t>(rows * cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      auto& rot = rotations[static_cast<std::size_t>(node(r, c))];
      if (c + 1 < cols) rot.push_back(h(r, c));
      if (r + 1 < rows) rot.push_back(v(r, c));
      if (c > 0) rot.push_back(h(r, c - 1));
      if (r > 0) rot.push_back(v(r - 1, c));
      pts[static_cast<std::size_t>(node(r, c))] = {c, r};
    }
  Embedding emb = validate_embedding(inst.graph, rotations);
  inst.rotations = std::move(rotations);
  inst.s1 = node(0, 0);
  inst.s2 = node(0, cols - 1);
  inst.t = node(rows - 1, cols - 1);
  set_default_metadata(inst, "grid", outer_face_by_area(emb, pts));
  inst.metadata["rows"] = std::to_string(rows);
  inst.metadata["cols"] = std::to_string(cols);
  return inst;
}

PlanarInstance gen_path(int n) {
  if (n < 3 || n > 50) throw PreconditionError("path length must be in 3..50");
  PlanarInstance inst;
  inst.graph = Graph(n);
  for (int i = 0; i + 1 < n; ++i) inst.graph.add_edge(i, i + 1);
  std::vector<std::vector<EdgeId>> rotations(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (i > 0) rotations[static_cast<std::size_t>(i)].push_back(i - 1);
    if (i + 1 < n) rotations[static_cast<std::size_t>(i)].push_back(i);
  }
  validate_embedding(inst.graph, rotations);
  inst.rotations = std::move(rotations);
  inst.s1 = 0;
  inst.s2 = (n - 1) / 2;
  inst.t = n - 1;
  set_default_metadata(inst, "path", 0);
  return inst;
}

namespace {

// Random points, pairwise distinct, no three collinear.  Each rejected
// draw resamples only the newest point, so the sequence converges fast
// and stays a pure function of the rng stream.
std::vector<Pt> sample_points(int n, std::mt19937& rng) {
  std::uint32_t range = static_cast<std::uint32_t>(4 * n + 1);
  std::vector<Pt> pts;
  pts.reserve(static_cast<std::size_t>(n));
  while (static_cast<int>(pts.size()) < n) {
    Pt p{static_cast<std::int64_t>(draw(rng, range)), static_cast<std::int64_t>(draw(rng, range))};
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i) {
      if (pts[i].x == p.x && pts[i].y == p.y) ok = false;
      for (std::size_t j = i + 1; j < pts.size() && ok; ++j)
        if (cross(pts[i], pts[j], p) == 0) ok = false;
    }
    if (ok) pts.push_back(p);
  }
  return pts;
}

// Sweep triangulation of lex-sorted points in general position: each
// new point connects to every hull vertex it sees.  Returns the edge
// list in creation order.
std::vector<std::pair<int, int>> triangulate(const std::vector<Pt>& pts) {
  int n = static_cast<int>(pts.size());
  std::vector<std::pair<int, int>> edges;
  std::vector<int> hull = {0, 1};
  edges.emplace_back(0, 1);
  for (int i = 2; i < n; ++i) {
    int h = static_cast<int>(hull.size());
    std::vector<bool> visible(static_cast<std::size_t>(h));
    for (int j = 0; j < h; ++j)
      visible[static_cast<std::size_t>(j)] =
          cross(pts[static_cast<std::size_t>(hull[static_cast<std::size_t>(j)])],
                pts[static_cast<std::size_t>(hull[static_cast<std::size_t>((j + 1) % h)])],
                pts[static_cast<std::size_t>(i)]) < 0;
    int j0 = -1;
    for (int j = 0; j < h; ++j)
      if (visible[static_cast<std::size_t>(j)] &&
          !visible[static_cast<std::size_t>((j - 1 + h) % h)]) {
        j0 = j;
        break;
      }
    if (j0 < 0) throw std::logic_error("sweep point sees no hull edge");
    int len = 0;
    while (visible[static_cast<std::size_t>((j0 + len) % h)]) ++len;
    for (int s = 0; s <= len; ++s)
      edges.emplace_back(hull[static_cast<std::size_t>((j0 + s) % h)], i);
    std::vector<int> next_hull = {hull[static_cast<std::size_t>(j0)], i};
    for (int k = (j0 + len) % h; k != j0; k = (k + 1) % h)
      next_hull.push_back(hull[static_cast<std::size_t>(k)]);
    hull = std::move(next_hull);
  }
  return edges;
}

// Incident edges sorted counterclockwise from the +x axis, by exact
// integer angle comparison.
std::vector<std::vector<EdgeId>> rotations_from_points(const Graph& g,
                                                       const std::vector<Pt>& pts) {
  std::vector<std::vector<EdgeId>> rotations(static_cast<std::size_t>(g.node_count()));
  for (NodeId v = 0; v < g.node_count(); ++v) {
    auto rot = g.incident(v);
    const Pt& pv = pts[static_cast<std::size_t>(v)];
    auto dir = [&](EdgeId e) {
      const Pt& pw = pts[static_cast<std::size_t>(g.other_end(e, v))];
      return Pt{pw.x - pv.x, pw.y - pv.y};
    };
    auto lower_half = [](const Pt& d) { return d.y < 0 || (d.y == 0 && d.x < 0); };
    std::sort(rot.begin(), rot.end(), [&](EdgeId a, EdgeId b) {
      Pt da = dir(a), db = dir(b);
      bool ha = lower_half(da), hb = lower_half(db);
      if (ha != hb) return hb;
      return da.x * db.y - da.y * db.x > 0;
    });
    rotations[static_cast<std::size_t>(v)] = std::move(rot);
  }
  return rotations;
}

}  // namespace

PlanarInstance gen_random_planar(int nodes, int edges, std::uint32_t seed) {
  if (nodes < 3 || nodes > 30) throw PreconditionError("node count must be in 3..30");
  if (edges < nodes - 1 || edges > 3 * nodes - 6)
    throw PreconditionError("edge count must be in [nodes-1, 3*nodes-6]");
  std::mt19937 rng(seed);

  // A very flat point set can have fewer triangulation edges than
  // requested; redraw the points when that happens.
  std::vector<Pt> pts;
  std::vector<std::pair<int, int>> tri;
  for (int attempt = 0;; ++attempt) {
    if (attempt >= 200)
      throw PreconditionError("cannot realize that many edges from this seed");
    pts = sample_points(nodes, rng);
    std::sort(pts.begin(), pts.end(),
              [](const Pt& a, const Pt& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
    tri = triangulate(pts);
    if (static_cast<int>(tri.size()) >= edges) break;
  }

  Graph full(nodes);
  for (const auto& [u, v] : tri) full.add_edge(u, v);

  // Spanning tree by breadth-first search; only non-tree edges may go.
  std::vector<bool> keep(tri.size(), false);
  {
    std::vector<bool> seen(static_cast<std::size_t>(nodes), false);
    std::vector<NodeId> queue = {0};
    seen[0] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      NodeId x = queue[qi];
      for (EdgeId e : full.incident(x)) {
        NodeId y = full.other_end(e, x);
        if (seen[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = true;
        keep[static_cast<std::size_t>(e)] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<EdgeId> optional_edges;
  for (EdgeId e = 0; e < full.edge_count(); ++e)
    if (!keep[static_cast<std::size_t>(e)]) optional_edges.push_back(e);
  for (std::size_t i = optional_edges.size(); i > 1; --i)
    std::swap(optional_edges[i - 1],
              optional_edges[static_cast<std::size_t>(draw(rng, static_cast<std::uint32_t>(i)))]);
  int to_add = edges - (nodes - 1);
  for (int i = 0; i < to_add; ++i)
    keep[static_cast<std::size_t>(optional_edges[static_cast<std::size_t>(i)])] = true;

  PlanarInstance inst;
  inst.graph = Graph(nodes);
  for (EdgeId e = 0; e < full.edge_count(); ++e)
    if (keep[static_cast<std::size_t>(e)])
      inst.graph.add_edge(full.edge(e).u, full.edge(e).v);

  auto rotations = rotations_from_points(inst.graph, pts);
  Embedding emb = validate_embedding(inst.graph, rotations);
  inst.rotations = std::move(rotations);

  inst.s1 = static_cast<NodeId>(draw(rng, static_cast<std::uint32_t>(nodes)));
  do {
    inst.s2 = static_cast<NodeId>(draw(rng, static_cast<std::uint32_t>(nodes)));
  } while (inst.s2 == inst.s1);
  do {
    inst.t = static_cast<NodeId>(draw(rng, static_cast<std::uint32_t>(nodes)));
  } while (inst.t == inst.s1 || inst.t == inst.s2);

  set_default_metadata(inst, "random-planar", outer_face_by_area(emb, pts));
  inst.metadata["seed"] = std::to_string(seed);
  return inst;
}

void pick_terminals(PlanarInstance& inst, CofacialPair pair, std::mt19937& rng) {
  int n = inst.graph.node_count();
  if (n < 3) throw PreconditionError("terminal selection needs at least three nodes");
  if (pair == CofacialPair::None) {
    inst.s1 = static_cast<NodeId>(draw(rng, static_cast<std::uint32_t>(n)));
    do {
      inst.s2 = static_cast<NodeId>(draw(rng, static_cast<std::uint32_t>(n)));
    } while (inst.s2 == inst.s1);
    do {
      inst.t = static_cast<NodeId>(draw(rng, static_cast<std::uint32_t>(n)));
    } while (inst.t == inst.s1 || inst.t == inst.s2);
    return;
  }
  if (!inst.rotations) throw PreconditionError("co-facial terminal selection needs an embedding");
  Embedding emb = validate_embedding(inst.graph, *inst.rotations);
  int f = static_cast<int>(draw(rng, static_cast<std::uint32_t>(emb.face_count())));
  auto on_face = emb.face(f).nodes;
  std::sort(on_face.begin(), on_face.end());
  on_face.erase(std::unique(on_face.begin(), on_face.end()), on_face.end());
  NodeId a = on_face[draw(rng, static_cast<std::uint32_t>(on_face.size()))];
  NodeId b = a;
  while (b == a) b = on_face[draw(rng, static_cast<std::uint32_t>(on_face.size()))];
  NodeId c = a;
  while (c == a || c == b) c = static_cast<NodeId>(draw(rng, static_cast<std::uint32_t>(n)));
  if (pair == CofacialPair::S1S2) {
    inst.s1 = a;
    inst.s2 = b;
    inst.t = c;
  } else {
    inst.s1 = a;
    inst.t = b;
    inst.s2 = c;
  }
}

void randomize_edge_weights(PlanarInstance& inst, std::int64_t lo, std::int64_t hi,
                            std::mt19937& rng) {
  if (lo < 1 || hi < lo) throw PreconditionError("weight range must satisfy 1 <= lo <= hi");
  auto span = static_cast<std::uint32_t>(hi - lo + 1);
  for (EdgeId e = 0; e < inst.graph.edge_count(); ++e)
    inst.graph.set_edge_weight(e, PerturbedWeight::finite(lo + draw(rng, span)));
}

void randomize_node_weights(PlanarInstance& inst, std::int64_t lo, std::int64_t hi,
                            std::mt19937& rng) {
  if (lo < 1 || hi < lo) throw PreconditionError("weight range must satisfy 1 <= lo <= hi");
  auto span = static_cast<std::uint32_t>(hi - lo + 1);
  for (NodeId v = 0; v < inst.graph.node_count(); ++v)
    inst.graph.set_node_weight(v, PerturbedWeight::finite(lo + draw(rng, span)));
}

}  // namespace cpmc
