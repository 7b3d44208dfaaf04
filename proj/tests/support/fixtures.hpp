#pragma once

#include <random>
#include <utility>
#include <vector>

#include "rtmorph/plane_graph.hpp"
#include "rtmorph/rational.hpp"
#include "rtmorph/schnyder.hpp"

namespace rtmorph::testing {

using Rng = std::mt19937_64;

struct Point2 {
  double x = 0;
  double y = 0;
};

/// Rotation system of a straight-line drawing (angles sorted ccw).
EmbeddingSpec spec_from_drawing(const std::vector<Point2>& pts, const std::vector<std::pair<int, int>>& edges,
                                std::array<Vertex, 3> outer);

EmbeddingSpec k4_spec();
/// Outer (0,1,2), inner face (3,4,5), 3~0,1  4~1,2  5~2,0.
EmbeddingSpec octahedron_spec();
/// Octahedron with vertex 6 stacked into face (3,4,5).
EmbeddingSpec stacked_octahedron_spec();
EmbeddingSpec icosahedron_spec();
/// Triangular grid of side k fanned into an outer triangle;
/// (k + 1)(k + 2) / 2 + 3 vertices and a tall lattice of woods.
EmbeddingSpec grid_triangulation(int k);

/// Random stacked triangulation on n >= 4 vertices, optionally followed by
/// random inner edge flips so that non-stacked graphs appear too.
EmbeddingSpec random_triangulation(int n, Rng& rng, int edge_flips = 0);

/// Random walk of facial flips starting at initial_wood.
SchnyderWood random_wood(const GraphPtr& g, Vertex red_root, Rng& rng, int steps);

/// tau(X_b) = tau(X_g) = 0, tau(X_r) = n - 2 and distinct values strictly in
/// between following a random topological order of DAG_r.
std::vector<Rational> random_strict_tau(const SchnyderWood& wood, Rng& rng);

/// Deterministic lex-first variant (tau = position in the order).
std::vector<Rational> lex_strict_tau(const SchnyderWood& wood);

int uniform(Rng& rng, int lo, int hi);

}  // namespace rtmorph::testing
