#include "rtmorph/schnyder.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>

namespace rtmorph {

std::string_view to_string(Color c) {
  switch (c) {
    case Color::Red: return "red";
    case Color::Green: return "green";
    case Color::Blue: return "blue";
  }
  return "?";
}

std::optional<Color> parse_color(std::string_view s) {
  if (s == "red") return Color::Red;
  if (s == "green") return Color::Green;
  if (s == "blue") return Color::Blue;
  return std::nullopt;
}

namespace {

// Outgoing edges of an inner vertex appear counter-clockwise as red, blue, green.
Color next_out_ccw(Color c) {
  switch (c) {
    case Color::Red: return Color::Blue;
    case Color::Blue: return Color::Green;
    case Color::Green: return Color::Red;
  }
  return c;
}

// Incoming edges between out-edge `start` and the next out-edge (ccw) carry
// this color.
Color incoming_after(Color start) {
  switch (start) {
    case Color::Red: return Color::Green;
    case Color::Blue: return Color::Red;
    case Color::Green: return Color::Blue;
  }
  return start;
}

Color sector_start_for_incoming(Color in) {
  switch (in) {
    case Color::Green: return Color::Red;
    case Color::Red: return Color::Blue;
    case Color::Blue: return Color::Green;
  }
  return in;
}

std::string vs(Vertex v) { return std::to_string(v); }

bool is_forward(const PlaneTriangulation& g, const EdgeDirections& dirs, Vertex u, Vertex v) {
  const int e = g.edge_id(u, v);
  if (e < 0 || dirs[e] == 0) return false;
  return (g.edge(e)[0] == u) == (dirs[e] > 0);
}

void require_same_lattice(const SchnyderWood& a, const SchnyderWood& b) {
  if (!a.graph().same_embedding(b.graph())) throw Error(ErrorKind::GraphMismatch, "woods live on different graphs");
  if (!(a.roots() == b.roots())) throw Error(ErrorKind::RootMismatch, "woods use different outer roots");
}

// Maintains the oriented 3-cycles of a 3-orientation under flips.
class LatticeWalker {
 public:
  LatticeWalker(const PlaneTriangulation& g, EdgeDirections dirs, bool faces_only)
      : g_(g), dirs_(std::move(dirs)), faces_only_(faces_only), turn_(g.cycles().size(), 0) {
    for (int c = 0; c < static_cast<int>(g_.cycles().size()); ++c) refresh(c);
  }

  const std::set<int>& ccw() const { return ccw_; }
  const std::set<int>& cw() const { return cw_; }
  const EdgeDirections& directions() const { return dirs_; }

  void flip(int cycle) {
    const auto& edges = g_.cycles()[cycle].edges;
    for (int e : edges) dirs_[e] = static_cast<std::int8_t>(-dirs_[e]);
    for (int e : edges) {
      for (int c : g_.cycles_of_edge(e)) refresh(c);
    }
  }

 private:
  void refresh(int c) {
    const auto& cyc = g_.cycles()[c];
    if (cyc.has_outer_edge || (faces_only_ && !cyc.is_face)) return;
    const auto t = cycle_turn(g_, dirs_, c);
    const std::int8_t now = !t ? 0 : (*t == Turn::CounterClockwise ? 1 : -1);
    if (now == turn_[c]) return;
    if (turn_[c] == 1) ccw_.erase(c);
    if (turn_[c] == -1) cw_.erase(c);
    if (now == 1) ccw_.insert(c);
    if (now == -1) cw_.insert(c);
    turn_[c] = now;
  }

  const PlaneTriangulation& g_;
  EdgeDirections dirs_;
  bool faces_only_;
  std::vector<std::int8_t> turn_;
  std::set<int> ccw_, cw_;
};

long flip_ceiling(const PlaneTriangulation& g) { return 8L * g.n() * g.n(); }

// Potential indexed by cycle id.
std::vector<long> potential_by_cycle(const PlaneTriangulation& g, const EdgeDirections& dirs, TieBreak tie,
                                     EdgeDirections* minimum = nullptr) {
  LatticeWalker walker(g, dirs, false);
  std::vector<long> pot(g.cycles().size(), 0);
  long steps = 0;
  const long ceiling = flip_ceiling(g);
  while (!walker.ccw().empty()) {
    const int c = tie == TieBreak::SmallestFirst ? *walker.ccw().begin() : *walker.ccw().rbegin();
    walker.flip(c);
    ++pot[c];
    if (++steps > ceiling) {
      throw Error(ErrorKind::InternalInvariant, "flip descent exceeded 8n^2 = " + std::to_string(ceiling));
    }
  }
  if (minimum) *minimum = walker.directions();
  return pot;
}

// Walks from `start` (potential `current`) to the element whose potential is
// `target`, flipping ccw triangles whose potential is above target and cw
// triangles whose potential is below. Returns the flipped cycle ids.
std::vector<int> walk_to_potential(const PlaneTriangulation& g, EdgeDirections start, std::vector<long> current,
                                   const std::vector<long>& target, bool faces_only, EdgeDirections* end) {
  LatticeWalker walker(g, std::move(start), faces_only);
  std::vector<int> flips;
  const long ceiling = flip_ceiling(g);
  while (current != target) {
    int pick = -1;
    for (int c : walker.ccw()) {
      if (current[c] > target[c]) {
        pick = c;
        break;
      }
    }
    if (pick >= 0) {
      --current[pick];
    } else {
      for (int c : walker.cw()) {
        if (current[c] < target[c]) {
          pick = c;
          break;
        }
      }
      if (pick < 0) {
        throw Error(ErrorKind::InternalInvariant, "lattice walk stalled before reaching the target potential");
      }
      ++current[pick];
    }
    walker.flip(pick);
    flips.push_back(pick);
    if (static_cast<long>(flips.size()) > ceiling) {
      throw Error(ErrorKind::InternalInvariant, "lattice walk exceeded 8n^2 flips");
    }
  }
  if (end) *end = walker.directions();
  return flips;
}

PotentialVector to_vector(const PlaneTriangulation& g, const std::vector<long>& pot) {
  PotentialVector pv;
  for (std::size_t c = 0; c < pot.size(); ++c) {
    if (pot[c] != 0) pv.values.emplace(g.cycles()[c].key, pot[c]);
  }
  return pv;
}

void validate_out(const PlaneTriangulation& g, const Roots& roots, const std::vector<SchnyderWood::OutEdges>& out,
                  Diagnostics& diags) {
  const int n = g.n();
  const auto& o = g.outer();
  bool roots_ok = false;
  for (int i = 0; i < 3; ++i) {
    if (o[i] == roots.red && o[(i + 1) % 3] == roots.blue && o[(i + 2) % 3] == roots.green) roots_ok = true;
  }
  if (!roots_ok) {
    diags.push_back({"roots", "roots (red " + vs(roots.red) + ", green " + vs(roots.green) + ", blue " +
                                  vs(roots.blue) + ") do not match the outer face order X_b, X_g, X_r"});
  }
  if (static_cast<int>(out.size()) != n) {
    diags.push_back({"size", "out-edge table has wrong size"});
    return;
  }

  std::vector<int> uses(g.edge_count(), 0);
  std::vector<char> complete(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    int degree = 0;
    bool bad_head = false;
    for (Color c : kColors) {
      const Vertex w = out[v][idx(c)];
      if (w < 0) continue;
      ++degree;
      const int e = g.edge_id(v, w);
      if (e < 0) {
        diags.push_back({"not_an_edge", "vertex " + vs(v) + " has " + std::string(to_string(c)) +
                                            " out-edge to non-neighbor " + vs(w)});
        bad_head = true;
        continue;
      }
      ++uses[e];
    }
    if (g.is_outer(v)) {
      if (degree != 0) diags.push_back({"outer_out_degree", "outer vertex " + vs(v) + " has out-degree " + vs(degree)});
      continue;
    }
    if (degree != 3) {
      diags.push_back({"out_degree", "inner vertex " + vs(v) + " has out-degree " + vs(degree)});
      continue;
    }
    const auto& oe = out[v];
    if (oe[0] == oe[1] || oe[1] == oe[2] || oe[0] == oe[2]) {
      diags.push_back({"out_distinct", "inner vertex " + vs(v) + " has two out-edges to the same neighbor"});
      continue;
    }
    if (!bad_head) complete[v] = 1;
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.edge(e);
    const std::string es = vs(a) + "-" + vs(b);
    if (g.is_outer_edge(e)) {
      if (uses[e] != 0) diags.push_back({"outer_edge_oriented", "outer edge " + es + " is oriented"});
    } else if (uses[e] == 0) {
      diags.push_back({"edge_unoriented", "inner edge " + es + " is not oriented"});
    } else if (uses[e] > 1) {
      diags.push_back({"edge_double", "inner edge " + es + " is oriented both ways"});
    }
  }

  auto color_into = [&](Vertex u, Vertex v) -> std::optional<Color> {
    if (u < 0 || u >= n) return std::nullopt;
    for (Color c : kColors) {
      if (out[u][idx(c)] == v) return c;
    }
    return std::nullopt;
  };

  for (Color c : kColors) {
    const Vertex x = roots.of(c);
    if (x < 0 || x >= n) continue;
    for (Vertex u : g.rotation(x)) {
      if (g.is_outer(u)) continue;
      const auto col = color_into(u, x);
      if (col && *col != c) {
        diags.push_back({"outer_color", "edge " + vs(u) + "->" + vs(x) + " into X_" +
                                            std::string(to_string(c)).substr(0, 1) + " is " +
                                            std::string(to_string(*col))});
      }
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    if (!complete[v]) continue;
    const auto& rot = g.rotation(v);
    const int start = g.position(v, out[v][idx(Color::Red)]);
    Color expected_out = Color::Red;
    bool ok = true;
    std::optional<Color> sector;
    for (std::size_t k = 0; k < rot.size() && ok; ++k) {
      const Vertex u = rot[(start + k) % rot.size()];
      const auto self = color_into(v, u);
      if (self) {
        if (*self != expected_out) ok = false;
        sector = incoming_after(*self);
        expected_out = next_out_ccw(*self);
        continue;
      }
      const auto in = color_into(u, v);
      if (in && sector && *in != *sector) ok = false;
    }
    if (ok && expected_out != Color::Red) ok = false;
    if (!ok) {
      diags.push_back({"color_pattern", "colors around inner vertex " + vs(v) +
                                            " do not follow out red, in green, out blue, in red, out green, in blue "
                                            "(counter-clockwise)"});
    }
  }
}

}  // namespace

Roots roots_for(const PlaneTriangulation& g, Vertex red_root) {
  const auto& o = g.outer();
  for (int i = 0; i < 3; ++i) {
    if (o[i] == red_root) return Roots{red_root, o[(i + 2) % 3], o[(i + 1) % 3]};
  }
  throw Error(ErrorKind::BadRoot, "vertex " + vs(red_root) + " is not on the outer face");
}

SchnyderWood::SchnyderWood(GraphPtr graph, Roots roots, std::vector<OutEdges> out)
    : graph_(std::move(graph)), roots_(roots), out_(std::move(out)) {}

std::optional<Color> SchnyderWood::color_of(Vertex u, Vertex v) const {
  if (u < 0 || u >= graph_->n()) return std::nullopt;
  for (Color c : kColors) {
    if (out_[u][idx(c)] == v) return c;
  }
  return std::nullopt;
}

EdgeDirections SchnyderWood::directions() const {
  EdgeDirections dirs(graph_->edge_count(), 0);
  for (Vertex v = 0; v < graph_->n(); ++v) {
    for (Vertex w : out_[v]) {
      if (w < 0) continue;
      const int e = graph_->edge_id(v, w);
      if (e >= 0) dirs[e] = v < w ? 1 : -1;
    }
  }
  return dirs;
}

std::vector<WoodEdge> SchnyderWood::edges() const {
  std::vector<WoodEdge> es;
  for (Vertex v = 0; v < graph_->n(); ++v) {
    for (Color c : kColors) {
      if (out_[v][idx(c)] >= 0) es.push_back({v, out_[v][idx(c)], c});
    }
  }
  return es;
}

std::vector<Vertex> SchnyderWood::in_neighbors(Vertex v, Color c) const {
  std::vector<Vertex> res;
  for (Vertex u : graph_->rotation(v)) {
    if (out_[u][idx(c)] == v) res.push_back(u);
  }
  return res;
}

bool SchnyderWood::operator==(const SchnyderWood& other) const {
  return roots_ == other.roots_ && out_ == other.out_ && graph_->same_embedding(*other.graph_);
}

SchnyderWood SchnyderWood::from_edges(GraphPtr graph, Roots roots, const std::vector<WoodEdge>& edges) {
  Diagnostics diags = validate_wood_edges(*graph, roots, edges);
  if (!diags.empty()) throw Error(ErrorKind::ValidationError, "invalid Schnyder wood", diags);
  std::vector<OutEdges> out(graph->n(), OutEdges{-1, -1, -1});
  for (const auto& e : edges) out[e.tail][idx(e.color)] = e.head;
  return SchnyderWood(std::move(graph), roots, std::move(out));
}

SchnyderWood SchnyderWood::from_directions(GraphPtr graph, Roots roots, const EdgeDirections& dirs) {
  const PlaneTriangulation& g = *graph;
  const int n = g.n();
  if (static_cast<int>(dirs.size()) != g.edge_count()) {
    throw Error(ErrorKind::ValidationError, "direction table has wrong size");
  }
  auto forward = [&](Vertex u, Vertex v) { return is_forward(g, dirs, u, v); };

  for (Vertex v = 0; v < n; ++v) {
    int deg = 0;
    for (Vertex w : g.rotation(v)) deg += forward(v, w) ? 1 : 0;
    const int want = g.is_outer(v) ? 0 : 3;
    if (deg != want) {
      throw Error(ErrorKind::ValidationError,
                  "not a 3-orientation: vertex " + vs(v) + " has out-degree " + vs(deg));
    }
  }

  std::vector<OutEdges> out(n, OutEdges{-1, -1, -1});
  std::vector<char> known(n, 0);
  std::deque<Vertex> queue;

  // Fixes all three out-colors of v from one out-edge v -> o of color c.
  auto settle = [&](Vertex v, Vertex o, Color c) {
    if (known[v]) return;
    known[v] = 1;
    Color col = c;
    Vertex w = o;
    for (int k = 0; k < 3; ++k) {
      out[v][idx(col)] = w;
      col = next_out_ccw(col);
      do {
        w = g.ccw_next(v, w);
      } while (!forward(v, w));
    }
    queue.push_back(v);
  };
  // First out-edge of v met when turning clockwise from neighbor u.
  auto out_before = [&](Vertex v, Vertex u) {
    Vertex w = g.cw_next(v, u);
    while (!forward(v, w)) w = g.cw_next(v, w);
    return w;
  };

  for (Color c : kColors) {
    const Vertex x = roots.of(c);
    for (Vertex v : g.rotation(x)) {
      if (!g.is_outer(v)) settle(v, x, c);
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Color c : kColors) {
      const Vertex w = out[v][idx(c)];
      if (g.is_outer(w) || known[w]) continue;
      const Vertex start = out_before(w, v);
      settle(w, start, sector_start_for_incoming(c));
    }
    for (Vertex u : g.rotation(v)) {
      if (g.is_outer(u) || known[u] || !forward(u, v)) continue;
      const Vertex start = out_before(v, u);
      const Color start_color = *std::find_if(kColors.begin(), kColors.end(),
                                              [&](Color c) { return out[v][idx(c)] == start; });
      settle(u, v, incoming_after(start_color));
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!g.is_outer(v) && !known[v]) {
      throw Error(ErrorKind::ValidationError, "coloring did not reach vertex " + vs(v));
    }
  }
  SchnyderWood wood(std::move(graph), roots, std::move(out));
  Diagnostics diags = validate_wood(wood);
  if (!diags.empty()) throw Error(ErrorKind::ValidationError, "3-orientation admits no Schnyder coloring", diags);
  return wood;
}

SchnyderWood initial_wood(GraphPtr graph, Vertex red_root) {
  const PlaneTriangulation& g = *graph;
  const int n = g.n();
  const Roots roots = roots_for(g, red_root);
  if (n < 4) throw Error(ErrorKind::TooSmall, "Schnyder woods need n >= 4");
  const Vertex xb = roots.blue, xg = roots.green, xr = roots.red;

  std::vector<SchnyderWood::OutEdges> out(n, SchnyderWood::OutEdges{-1, -1, -1});
  std::vector<char> removed(n, 0), on_path(n, 0);
  std::vector<Vertex> prev(n, -1), next(n, -1);
  std::vector<int> chords(n, 0);
  std::set<Vertex> eligible;

  auto chord_count = [&](Vertex x) {
    int k = 0;
    for (Vertex y : g.rotation(x)) {
      if (on_path[y] && y != prev[x] && y != next[x]) ++k;
    }
    return k;
  };
  auto refresh = [&](Vertex x) {
    eligible.erase(x);
    if (!on_path[x]) return;
    chords[x] = chord_count(x);
    if (chords[x] == 0 && x != xb && x != xg) eligible.insert(x);
  };

  // Removing `top` exposes its lower neighbors between `left` and `right`
  // (counter-clockwise around top), which join the contour and point their
  // red edge at top.
  auto expose = [&](Vertex top, Vertex left, Vertex right) {
    std::vector<Vertex> fresh;
    for (Vertex w = g.ccw_next(top, left); w != right; w = g.ccw_next(top, w)) fresh.push_back(w);
    Vertex before = left;
    for (Vertex w : fresh) {
      out[w][idx(Color::Red)] = top;
      on_path[w] = 1;
      prev[w] = before;
      next[before] = w;
      before = w;
    }
    next[before] = right;
    prev[right] = before;
    std::set<Vertex> touched{left, right};
    for (Vertex w : fresh) {
      touched.insert(w);
      for (Vertex y : g.rotation(w)) {
        if (on_path[y]) touched.insert(y);
      }
    }
    for (Vertex x : touched) refresh(x);
  };

  removed[xr] = 1;
  on_path[xb] = on_path[xg] = 1;
  prev[xb] = xg;
  next[xg] = xb;
  expose(xr, xb, xg);

  int remaining = n - 3;
  while (remaining > 0) {
    if (eligible.empty()) throw Error(ErrorKind::InternalInvariant, "canonical ordering got stuck");
    const Vertex v = *eligible.begin();
    eligible.erase(eligible.begin());
    const Vertex left = prev[v], right = next[v];
    out[v][idx(Color::Blue)] = left;
    out[v][idx(Color::Green)] = right;
    removed[v] = 1;
    on_path[v] = 0;
    expose(v, left, right);
    --remaining;
  }

  SchnyderWood wood(std::move(graph), roots, std::move(out));
  Diagnostics diags = validate_wood(wood);
  if (!diags.empty()) throw Error(ErrorKind::InternalInvariant, "initial wood is invalid", diags);
  return wood;
}

Diagnostics validate_wood(const SchnyderWood& wood) {
  Diagnostics diags;
  std::vector<SchnyderWood::OutEdges> out(wood.graph().n());
  for (Vertex v = 0; v < wood.graph().n(); ++v) out[v] = wood.out(v);
  validate_out(wood.graph(), wood.roots(), out, diags);
  return diags;
}

Diagnostics validate_wood_edges(const PlaneTriangulation& g, const Roots& roots, const std::vector<WoodEdge>& edges) {
  Diagnostics diags;
  const int n = g.n();
  std::vector<SchnyderWood::OutEdges> out(n, SchnyderWood::OutEdges{-1, -1, -1});
  for (const auto& e : edges) {
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) {
      diags.push_back({"range", "edge " + vs(e.tail) + "->" + vs(e.head) + " has an out-of-range endpoint"});
      continue;
    }
    if (!g.adjacent(e.tail, e.head)) {
      diags.push_back({"not_an_edge", vs(e.tail) + "-" + vs(e.head) + " is not an edge of the graph"});
      continue;
    }
    auto& slot = out[e.tail][idx(e.color)];
    if (slot >= 0) {
      diags.push_back({"duplicate_color", "vertex " + vs(e.tail) + " has two outgoing " +
                                              std::string(to_string(e.color)) + " edges"});
      continue;
    }
    slot = e.head;
  }
  validate_out(g, roots, out, diags);
  return diags;
}

Digraph derived_dag(const SchnyderWood& wood, Color kept) {
  const auto& g = wood.graph();
  Digraph d{g.n(), std::vector<std::vector<Vertex>>(g.n())};
  for (Vertex v = 0; v < g.n(); ++v) {
    for (Color c : kColors) {
      const Vertex w = wood.parent(v, c);
      if (w < 0) continue;
      if (c == kept) {
        d.succ[v].push_back(w);
      } else {
        d.succ[w].push_back(v);
      }
    }
  }
  return d;
}

std::vector<Vertex> topological_order(const Digraph& dag) {
  std::vector<int> indeg(dag.n, 0);
  for (const auto& s : dag.succ) {
    for (Vertex w : s) ++indeg[w];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < dag.n; ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<Vertex> order;
  while (!ready.empty()) {
    const Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Vertex w : dag.succ[v]) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(order.size()) != dag.n) {
    throw Error(ErrorKind::InternalInvariant, "derived digraph has a directed cycle");
  }
  return order;
}

std::optional<Turn> cycle_turn(const PlaneTriangulation& g, const EdgeDirections& dirs, int cycle) {
  const auto& c = g.cycles()[cycle];
  int fwd = 0, bwd = 0;
  for (int i = 0; i < 3; ++i) {
    const Vertex a = c.ccw[i], b = c.ccw[(i + 1) % 3];
    if (is_forward(g, dirs, a, b)) ++fwd;
    if (is_forward(g, dirs, b, a)) ++bwd;
  }
  if (fwd == 3) return Turn::CounterClockwise;
  if (bwd == 3) return Turn::Clockwise;
  return std::nullopt;
}

std::vector<OrientedTriangle> oriented_triangles(const SchnyderWood& wood, TriangleScope scope) {
  const auto& g = wood.graph();
  const EdgeDirections dirs = wood.directions();
  std::vector<OrientedTriangle> res;
  for (int c = 0; c < static_cast<int>(g.cycles().size()); ++c) {
    const auto& cyc = g.cycles()[c];
    if (cyc.has_outer_edge || (scope == TriangleScope::FacesOnly && !cyc.is_face)) continue;
    if (auto t = cycle_turn(g, dirs, c)) res.push_back({cyc.key, *t});
  }
  return res;
}

SchnyderWood flip(const SchnyderWood& wood, const Triangle3& t) {
  const auto& g = wood.graph();
  const int ci = g.cycle_index(t);
  EdgeDirections dirs = wood.directions();
  if (ci < 0 || !cycle_turn(g, dirs, ci)) {
    throw Error(ErrorKind::NotOriented, t.str() + " is not an oriented triangle");
  }
  const auto& cyc = g.cycles()[ci];
  if (cyc.is_face) {
    // Each vertex keeps the color of its outgoing edge on the face; that
    // color moves to the reversed (formerly incoming) edge.
    std::vector<SchnyderWood::OutEdges> out(g.n());
    for (Vertex v = 0; v < g.n(); ++v) out[v] = wood.out(v);
    for (Vertex x : t.v) {
      const Vertex succ = *std::find_if(t.v.begin(), t.v.end(), [&](Vertex y) { return wood.directed(x, y); });
      const Vertex pred = *std::find_if(t.v.begin(), t.v.end(), [&](Vertex y) { return wood.directed(y, x); });
      out[x][idx(*wood.color_of(x, succ))] = pred;
    }
    return SchnyderWood(wood.graph_ptr(), wood.roots(), std::move(out));
  }
  for (int e : cyc.edges) dirs[e] = static_cast<std::int8_t>(-dirs[e]);
  return SchnyderWood::from_directions(wood.graph_ptr(), wood.roots(), dirs);
}

PotentialVector potential(const SchnyderWood& wood, TieBreak tie) {
  return to_vector(wood.graph(), potential_by_cycle(wood.graph(), wood.directions(), tie));
}

SchnyderWood lattice_minimum(const SchnyderWood& wood) {
  EdgeDirections minimum;
  potential_by_cycle(wood.graph(), wood.directions(), TieBreak::SmallestFirst, &minimum);
  return SchnyderWood::from_directions(wood.graph_ptr(), wood.roots(), minimum);
}

namespace {

SchnyderWood lattice_bound(const SchnyderWood& a, const SchnyderWood& b, bool lower) {
  require_same_lattice(a, b);
  const auto& g = a.graph();
  const auto pa = potential_by_cycle(g, a.directions(), TieBreak::SmallestFirst);
  const auto pb = potential_by_cycle(g, b.directions(), TieBreak::SmallestFirst);
  std::vector<long> target(pa.size());
  for (std::size_t i = 0; i < pa.size(); ++i) target[i] = lower ? std::min(pa[i], pb[i]) : std::max(pa[i], pb[i]);
  EdgeDirections end;
  walk_to_potential(g, a.directions(), pa, target, false, &end);
  return SchnyderWood::from_directions(a.graph_ptr(), a.roots(), end);
}

}  // namespace

SchnyderWood meet(const SchnyderWood& a, const SchnyderWood& b) { return lattice_bound(a, b, true); }

SchnyderWood join(const SchnyderWood& a, const SchnyderWood& b) { return lattice_bound(a, b, false); }

std::optional<Triangle3> separating_potential_witness(const SchnyderWood& a, const SchnyderWood& b) {
  require_same_lattice(a, b);
  const auto& g = a.graph();
  const auto pa = potential_by_cycle(g, a.directions(), TieBreak::SmallestFirst);
  const auto pb = potential_by_cycle(g, b.directions(), TieBreak::SmallestFirst);
  for (std::size_t c = 0; c < pa.size(); ++c) {
    if (!g.cycles()[c].is_face && pa[c] != pb[c]) return g.cycles()[c].key;
  }
  return std::nullopt;
}

bool can_morph_woods(const SchnyderWood& a, const SchnyderWood& b) {
  return !separating_potential_witness(a, b).has_value();
}

std::vector<Triangle3> facial_flip_sequence(const SchnyderWood& a, const SchnyderWood& b) {
  require_same_lattice(a, b);
  const auto& g = a.graph();
  const auto pa = potential_by_cycle(g, a.directions(), TieBreak::SmallestFirst);
  const auto pb = potential_by_cycle(g, b.directions(), TieBreak::SmallestFirst);
  std::vector<long> low(pa.size());
  for (std::size_t c = 0; c < pa.size(); ++c) {
    if (!g.cycles()[c].is_face && pa[c] != pb[c]) {
      throw Error(ErrorKind::NotMorphable, "potentials differ on separating triangle " + g.cycles()[c].key.str());
    }
    low[c] = std::min(pa[c], pb[c]);
  }
  // Both descents only use ccw flips toward the meet, so they never leave
  // the faces when the separating potentials agree.
  const auto down_a = walk_to_potential(g, a.directions(), pa, low, true, nullptr);
  const auto down_b = walk_to_potential(g, b.directions(), pb, low, true, nullptr);
  std::vector<Triangle3> seq;
  seq.reserve(down_a.size() + down_b.size());
  for (int c : down_a) seq.push_back(g.cycles()[c].key);
  for (auto it = down_b.rbegin(); it != down_b.rend(); ++it) seq.push_back(g.cycles()[*it].key);
  return seq;
}

}  // namespace rtmorph
