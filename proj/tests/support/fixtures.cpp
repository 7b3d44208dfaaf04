#include "support/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rtmorph::testing {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

EmbeddingSpec spec_from_drawing(const std::vector<Point2>& pts, const std::vector<std::pair<int, int>>& edges,
                                std::array<Vertex, 3> outer) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<Vertex>> rot(n);
  for (auto [a, b] : edges) {
    rot[a].push_back(b);
    rot[b].push_back(a);
  }
  for (int u = 0; u < n; ++u) {
    std::sort(rot[u].begin(), rot[u].end(), [&](Vertex a, Vertex b) {
      return std::atan2(pts[a].y - pts[u].y, pts[a].x - pts[u].x) <
             std::atan2(pts[b].y - pts[u].y, pts[b].x - pts[u].x);
    });
  }
  return EmbeddingSpec{n, rot, outer};
}

EmbeddingSpec k4_spec() {
  return spec_from_drawing({{0, 0}, {10, 0}, {5, 10}, {5, 3}}, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {3, 2}},
                           {0, 1, 2});
}

namespace {

std::vector<Point2> octahedron_points() { return {{0, 0}, {10, 0}, {5, 10}, {5, 2}, {6.5, 5}, {3.5, 5}}; }

std::vector<std::pair<int, int>> octahedron_edges() {
  return {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}};
}

}  // namespace

EmbeddingSpec octahedron_spec() { return spec_from_drawing(octahedron_points(), octahedron_edges(), {0, 1, 2}); }

EmbeddingSpec stacked_octahedron_spec() {
  auto pts = octahedron_points();
  pts.push_back({5, 4});
  auto edges = octahedron_edges();
  edges.insert(edges.end(), {{6, 3}, {6, 4}, {6, 5}});
  return spec_from_drawing(pts, edges, {0, 1, 2});
}

EmbeddingSpec icosahedron_spec() {
  std::vector<Point2> pts(12);
  auto at = [](double deg, double r) {
    const double a = deg * std::numbers::pi / 180.0;
    return Point2{r * std::cos(a), r * std::sin(a)};
  };
  std::vector<double> ang(12);
  for (int k = 0; k < 3; ++k) {
    ang[k] = 90 + 120 * k;
    pts[k] = at(ang[k], 20);
    ang[9 + k] = 30 + 120 * k;
    pts[9 + k] = at(ang[9 + k], 2);
  }
  for (int j = 0; j < 6; ++j) {
    ang[3 + j] = 90 + 60 * j;
    pts[3 + j] = at(ang[3 + j], 5);
  }
  auto close = [&](int a, int b) {
    double d = std::fmod(std::abs(ang[a] - ang[b]), 360.0);
    d = std::min(d, 360 - d);
    return d <= 60.5;
  };
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 0}, {9, 10}, {10, 11}, {11, 9}};
  for (int j = 0; j < 6; ++j) {
    const int r = 3 + j;
    edges.push_back({r, 3 + (j + 1) % 6});
    for (int k = 0; k < 3; ++k) {
      if (close(r, k)) edges.push_back({r, k});
      if (close(r, 9 + k)) edges.push_back({r, 9 + k});
    }
  }
  return spec_from_drawing(pts, edges, {0, 1, 2});
}

namespace {

int pos_in(const std::vector<Vertex>& rot, Vertex v) {
  return static_cast<int>(std::find(rot.begin(), rot.end(), v) - rot.begin());
}

void insert_after(std::vector<Vertex>& rot, Vertex after, Vertex v) {
  rot.insert(rot.begin() + pos_in(rot, after) + 1, v);
}

Vertex cw_before(const std::vector<Vertex>& rot, Vertex v) {
  return rot[(pos_in(rot, v) + rot.size() - 1) % rot.size()];
}

}  // namespace

EmbeddingSpec grid_triangulation(int k) {
  // Outer triangle first: 0 below, 1 upper right, 2 upper left (ccw).
  std::vector<Point2> pts{{k / 2.0, -10.0 * k}, {11.0 * k, 10.0 * k}, {-10.0 * k, 10.0 * k}};
  std::vector<std::vector<int>> id(k + 1, std::vector<int>(k + 1, -1));
  for (int j = 0; j <= k; ++j) {
    for (int i = 0; i + j <= k; ++i) {
      id[i][j] = static_cast<int>(pts.size());
      pts.push_back({i + j / 2.0, j * std::numbers::sqrt3 / 2.0});
    }
  }
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 0}};
  for (int j = 0; j <= k; ++j) {
    for (int i = 0; i + j <= k; ++i) {
      if (i + j < k) {
        edges.push_back({id[i][j], id[i + 1][j]});
        edges.push_back({id[i][j], id[i][j + 1]});
        edges.push_back({id[i + 1][j], id[i][j + 1]});
      }
    }
  }
  for (int t = 0; t <= k; ++t) {
    edges.push_back({0, id[t][0]});          // bottom side
    edges.push_back({1, id[k - t][t]});      // right side
    edges.push_back({2, id[0][t]});          // left side
  }
  return spec_from_drawing(pts, edges, {0, 1, 2});
}

EmbeddingSpec random_triangulation(int n, Rng& rng, int edge_flips) {
  EmbeddingSpec s = k4_spec();
  std::vector<std::array<Vertex, 3>> faces{{0, 1, 3}, {1, 2, 3}, {2, 0, 3}};
  s.rotations.resize(n);
  for (Vertex v = 4; v < n; ++v) {
    const int fi = uniform(rng, 0, static_cast<int>(faces.size()) - 1);
    const auto [a, b, c] = faces[fi];
    insert_after(s.rotations[a], b, v);
    insert_after(s.rotations[b], c, v);
    insert_after(s.rotations[c], a, v);
    s.rotations[v] = {a, b, c};
    faces[fi] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({c, a, v});
  }
  s.n = n;
  auto is_outer = [&](Vertex x) { return x <= 2; };
  for (int k = 0; k < edge_flips; ++k) {
    const Vertex u = uniform(rng, 0, n - 1);
    auto& ru = s.rotations[u];
    const Vertex v = ru[uniform(rng, 0, static_cast<int>(ru.size()) - 1)];
    if (is_outer(u) && is_outer(v)) continue;
    auto& rv = s.rotations[v];
    const Vertex x = cw_before(rv, u);  // apex left of u->v
    const Vertex y = cw_before(ru, v);  // apex left of v->u
    if (std::find(s.rotations[x].begin(), s.rotations[x].end(), y) != s.rotations[x].end()) continue;
    if (ru.size() <= 3 || rv.size() <= 3) continue;
    // Face (u, v, x): at x, v follows u ccw. Face (v, u, y): at y, u follows v.
    insert_after(s.rotations[x], u, y);
    insert_after(s.rotations[y], v, x);
    ru.erase(ru.begin() + pos_in(ru, v));
    rv.erase(rv.begin() + pos_in(rv, u));
  }
  return s;
}

SchnyderWood random_wood(const GraphPtr& g, Vertex red_root, Rng& rng, int steps) {
  SchnyderWood w = initial_wood(g, red_root);
  for (int i = 0; i < steps; ++i) {
    const auto faces = oriented_triangles(w, TriangleScope::FacesOnly);
    if (faces.empty()) break;
    w = flip(w, faces[uniform(rng, 0, static_cast<int>(faces.size()) - 1)].triangle);
  }
  return w;
}

namespace {

std::vector<Vertex> random_topological_order(const Digraph& d, Rng& rng) {
  std::vector<int> indeg(d.n, 0);
  for (const auto& s : d.succ) {
    for (Vertex w : s) ++indeg[w];
  }
  std::vector<Vertex> ready, order;
  for (Vertex v = 0; v < d.n; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    const int i = uniform(rng, 0, static_cast<int>(ready.size()) - 1);
    const Vertex v = ready[i];
    ready.erase(ready.begin() + i);
    order.push_back(v);
    for (Vertex w : d.succ[v]) {
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  return order;
}

std::vector<Rational> tau_from_order(const SchnyderWood& wood, const std::vector<Vertex>& order,
                                     const std::vector<Rational>& values) {
  const auto& g = wood.graph();
  std::vector<Rational> tau(g.n());
  tau[wood.roots().blue] = 0;
  tau[wood.roots().green] = 0;
  tau[wood.roots().red] = g.n() - 2;
  std::size_t k = 0;
  for (Vertex v : order) {
    if (!g.is_outer(v)) tau[v] = values[k++];
  }
  return tau;
}

}  // namespace

std::vector<Rational> random_strict_tau(const SchnyderWood& wood, Rng& rng) {
  const int inner = wood.graph().n() - 3;
  const auto order = random_topological_order(derived_dag(wood, Color::Red), rng);
  // Distinct random rationals in (0, n - 2), sorted.
  std::vector<Rational> vals;
  const int den = 4 * inner + 7;
  std::vector<int> pool;
  for (int i = 1; i < den * (wood.graph().n() - 2); ++i) pool.push_back(i);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(inner);
  std::sort(pool.begin(), pool.end());
  for (int p : pool) {
    Rational r(p, den);
    r.canonicalize();
    vals.push_back(r);
  }
  return tau_from_order(wood, order, vals);
}

std::vector<Rational> lex_strict_tau(const SchnyderWood& wood) {
  const auto order = topological_order(derived_dag(wood, Color::Red));
  std::vector<Rational> vals;
  for (int i = 1; i <= wood.graph().n() - 3; ++i) vals.emplace_back(i);
  return tau_from_order(wood, order, vals);
}

}  // namespace rtmorph::testing
