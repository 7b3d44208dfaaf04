#include "rtmorph/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "rtmorph/error.hpp"

namespace rtmorph {

Triangle3::Triangle3(Vertex a, Vertex b, Vertex c) : v{a, b, c} { std::sort(v.begin(), v.end()); }

std::string Triangle3::str() const {
  return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + ")";
}

namespace {

std::string dart_str(Vertex u, Vertex v) { return std::to_string(u) + "->" + std::to_string(v); }

}  // namespace

PlaneTriangulation PlaneTriangulation::build(EmbeddingSpec spec) {
  const int n = spec.n;
  if (n < 3) throw Error(ErrorKind::NotTriangulation, "need at least 3 vertices, got " + std::to_string(n));
  if (static_cast<int>(spec.rotations.size()) != n) {
    throw Error(ErrorKind::BadEmbedding, "expected " + std::to_string(n) + " rotations, got " +
                                             std::to_string(spec.rotations.size()));
  }

  PlaneTriangulation g;
  g.n_ = n;
  g.rotations_ = std::move(spec.rotations);
  g.outer_ = spec.outer;

  // Simple, symmetric rotation system.
  for (Vertex u = 0; u < n; ++u) {
    const auto& rot = g.rotations_[u];
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
      const Vertex v = rot[i];
      if (v < 0 || v >= n) {
        throw Error(ErrorKind::BadEmbedding, "vertex " + std::to_string(u) + " lists out-of-range neighbor " +
                                                 std::to_string(v));
      }
      if (v == u) throw Error(ErrorKind::BadEmbedding, "loop at vertex " + std::to_string(u));
      if (!g.dart_pos_.emplace(g.dart_key(u, v), i).second) {
        throw Error(ErrorKind::BadEmbedding, "parallel edge " + dart_str(u, v));
      }
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.rotations_[u]) {
      if (!g.dart_pos_.contains(g.dart_key(v, u))) {
        throw Error(ErrorKind::BadEmbedding, "asymmetric adjacency " + dart_str(u, v));
      }
    }
  }

  const std::size_t darts = g.dart_pos_.size();
  const std::size_t expected_edges = 3 * static_cast<std::size_t>(n) - 6;
  if (darts / 2 != expected_edges) {
    throw Error(ErrorKind::NotTriangulation, "edge count " + std::to_string(darts / 2) + " != 3n-6 = " +
                                                 std::to_string(expected_edges));
  }

  // Edge ids, aligned with rotations.
  g.edge_at_.resize(n);
  for (Vertex u = 0; u < n; ++u) g.edge_at_[u].assign(g.rotations_[u].size(), -1);
  for (Vertex u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < g.rotations_[u].size(); ++i) {
      const Vertex v = g.rotations_[u][i];
      if (u < v) {
        const int id = static_cast<int>(g.edges_.size());
        g.edges_.push_back({u, v});
        g.edge_at_[u][i] = id;
        g.edge_at_[v][g.dart_pos_.at(g.dart_key(v, u))] = id;
      }
    }
  }

  // Connectivity.
  {
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.rotations_[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
      }
    }
    if (count != n) throw Error(ErrorKind::BadEmbedding, "graph is disconnected");
  }

  // Face walk: the face left of dart u->v continues with v->cw_next(v, u).
  std::set<std::uint64_t> visited;
  std::vector<std::array<Vertex, 3>> faces;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.rotations_[u]) {
      if (visited.contains(g.dart_key(u, v))) continue;
      std::vector<Vertex> walk;
      Vertex a = u, b = v;
      while (!visited.contains(g.dart_key(a, b))) {
        visited.insert(g.dart_key(a, b));
        walk.push_back(a);
        const Vertex c = g.cw_next(b, a);
        a = b;
        b = c;
        if (walk.size() > darts) break;
      }
      if (walk.size() != 3 || a != u || b != v) {
        throw Error(ErrorKind::NotTriangulation,
                    "face starting at dart " + dart_str(u, v) + " has " + std::to_string(walk.size()) + " sides");
      }
      faces.push_back({walk[0], walk[1], walk[2]});
    }
  }
  if (static_cast<int>(faces.size()) != 2 * n - 4) {
    throw Error(ErrorKind::BadEmbedding, "face count " + std::to_string(faces.size()) + " violates Euler (2n-4 = " +
                                             std::to_string(2 * n - 4) + ")");
  }

  // The outer face is traced clockwise by the walk: (a, c, b) for outer (a, b, c).
  const auto& o = g.outer_;
  for (Vertex x : o) {
    if (x < 0 || x >= n) throw Error(ErrorKind::BadOuterFace, "outer vertex out of range");
  }
  auto cyclic_equal = [](const std::array<Vertex, 3>& f, const std::array<Vertex, 3>& t) {
    for (int r = 0; r < 3; ++r) {
      if (f[r] == t[0] && f[(r + 1) % 3] == t[1] && f[(r + 2) % 3] == t[2]) return true;
    }
    return false;
  };
  const std::array<Vertex, 3> outer_walk{o[0], o[2], o[1]};
  int outer_idx = -1;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (cyclic_equal(faces[i], outer_walk)) {
      outer_idx = static_cast<int>(i);
      break;
    }
  }
  if (outer_idx < 0) {
    throw Error(ErrorKind::BadOuterFace, "(" + std::to_string(o[0]) + "," + std::to_string(o[1]) + "," +
                                             std::to_string(o[2]) + ") is not a counter-clockwise face boundary");
  }
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (static_cast<int>(i) != outer_idx) g.inner_faces_.push_back(faces[i]);
  }

  // 3-cycles via common neighbors of each edge.
  std::map<Triangle3, std::array<Vertex, 3>> face_order;
  for (const auto& f : g.inner_faces_) face_order.emplace(Triangle3(f[0], f[1], f[2]), f);
  std::set<Triangle3> triples;
  for (const auto& [u, v] : g.edges_) {
    for (Vertex w : g.rotations_[u]) {
      if (w != v && g.adjacent(v, w)) triples.insert(Triangle3(u, v, w));
    }
  }
  const Triangle3 outer_key(o[0], o[1], o[2]);
  for (const auto& t : triples) {
    Cycle3 c;
    c.key = t;
    auto it = face_order.find(t);
    std::array<Vertex, 3> ccw{};
    if (it != face_order.end()) {
      c.is_face = true;
      ccw = it->second;
    } else if (t == outer_key) {
      c.is_face = true;
      ccw = o;
    } else {
      // Separating triangle: the side left of a->b->c is the interior iff no
      // outer vertex can be reached from it without crossing the triangle.
      const Vertex a = t.v[0], b = t.v[1], cc = t.v[2];
      std::vector<Vertex> frontier;
      for (Vertex x = g.ccw_next(b, cc); x != a; x = g.ccw_next(b, x)) frontier.push_back(x);
      std::vector<char> seen(n, 0);
      seen[a] = seen[b] = seen[cc] = 1;
      bool reaches_outer = false;
      for (Vertex x : frontier) seen[x] = 1;
      while (!frontier.empty() && !reaches_outer) {
        const Vertex x = frontier.back();
        frontier.pop_back();
        if (g.is_outer(x)) reaches_outer = true;
        for (Vertex y : g.rotations_[x]) {
          if (!seen[y]) {
            seen[y] = 1;
            frontier.push_back(y);
          }
        }
      }
      ccw = reaches_outer ? std::array<Vertex, 3>{a, cc, b} : std::array<Vertex, 3>{a, b, cc};
    }
    while (ccw[0] != t.v[0]) std::rotate(ccw.begin(), ccw.begin() + 1, ccw.end());
    c.ccw = ccw;
    for (int i = 0; i < 3; ++i) c.edges[i] = g.edge_id(ccw[i], ccw[(i + 1) % 3]);
    for (int e : c.edges) c.has_outer_edge = c.has_outer_edge || g.is_outer_edge(e);
    g.cycles_.push_back(c);
  }
  g.cycles_of_edge_.assign(g.edges_.size(), {});
  for (std::size_t i = 0; i < g.cycles_.size(); ++i) {
    for (int e : g.cycles_[i].edges) g.cycles_of_edge_[e].push_back(static_cast<int>(i));
  }
  return g;
}

int PlaneTriangulation::position(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  auto it = dart_pos_.find(dart_key(u, v));
  return it == dart_pos_.end() ? -1 : it->second;
}

int PlaneTriangulation::edge_id(Vertex u, Vertex v) const {
  const int p = position(u, v);
  return p < 0 ? -1 : edge_at_[u][p];
}

bool PlaneTriangulation::is_outer_edge(int id) const {
  const auto [u, v] = edges_[id];
  return is_outer(u) && is_outer(v);
}

Vertex PlaneTriangulation::ccw_next(Vertex u, Vertex v) const {
  const auto& rot = rotations_[u];
  const int p = position(u, v);
  return rot[(p + 1) % rot.size()];
}

Vertex PlaneTriangulation::cw_next(Vertex u, Vertex v) const {
  const auto& rot = rotations_[u];
  const int p = position(u, v);
  return rot[(p + rot.size() - 1) % rot.size()];
}

bool PlaneTriangulation::is_face(const Triangle3& t) const {
  const int i = cycle_index(t);
  return i >= 0 && cycles_[i].is_face;
}

int PlaneTriangulation::cycle_index(const Triangle3& t) const {
  auto it = std::lower_bound(cycles_.begin(), cycles_.end(), t,
                             [](const Cycle3& c, const Triangle3& k) { return c.key < k; });
  return (it != cycles_.end() && it->key == t) ? static_cast<int>(it - cycles_.begin()) : -1;
}

EmbeddingSpec PlaneTriangulation::spec() const { return EmbeddingSpec{n_, rotations_, outer_}; }

bool PlaneTriangulation::same_embedding(const PlaneTriangulation& other) const {
  if (n_ != other.n_) return false;
  for (Vertex u = 0; u < n_; ++u) {
    const auto& a = rotations_[u];
    const auto& b = other.rotations_[u];
    if (a.size() != b.size()) return false;
    const int shift = other.position(u, a[0]);
    if (shift < 0) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[(i + shift) % b.size()]) return false;
    }
  }
  for (int r = 0; r < 3; ++r) {
    if (outer_[0] == other.outer_[r] && outer_[1] == other.outer_[(r + 1) % 3] &&
        outer_[2] == other.outer_[(r + 2) % 3]) {
      return true;
    }
  }
  return false;
}

std::vector<Triangle3> separating_triangles(const PlaneTriangulation& g) {
  std::vector<Triangle3> out;
  for (const auto& c : g.cycles()) {
    if (!c.is_face) out.push_back(c.key);
  }
  return out;
}

bool is_four_connected(const PlaneTriangulation& g) {
  if (g.n() < 5) throw Error(ErrorKind::TooSmall, "4-connectivity needs n >= 5");
  return separating_triangles(g).empty();
}

}  // namespace rtmorph
