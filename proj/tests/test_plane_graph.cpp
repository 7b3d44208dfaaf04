#include <set>

#include "doctest.h"
#include "rtmorph/error.hpp"
#include "rtmorph/plane_graph.hpp"
#include "support/enumerate.hpp"
#include "support/fixtures.hpp"

using namespace rtmorph;
using namespace rtmorph::testing;

namespace {

ErrorKind kind_of(const EmbeddingSpec& s) {
  try {
    PlaneTriangulation::build(s);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InternalInvariant;
}

// All 3-cycles by brute force over vertex triples.
std::set<Triangle3> brute_cycles(const PlaneTriangulation& g) {
  std::set<Triangle3> out;
  for (Vertex a = 0; a < g.n(); ++a)
    for (Vertex b = a + 1; b < g.n(); ++b)
      for (Vertex c = b + 1; c < g.n(); ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) out.insert(Triangle3(a, b, c));
  return out;
}

}  // namespace

TEST_CASE("K4 builds with four faces") {
  const auto g = PlaneTriangulation::build(k4_spec());
  CHECK(g.n() == 4);
  CHECK(g.edge_count() == 6);
  CHECK(g.face_count() == 4);
  CHECK(separating_triangles(g).empty());
}

TEST_CASE("octahedron has eight faces and is 4-connected") {
  const auto g = PlaneTriangulation::build(octahedron_spec());
  CHECK(g.face_count() == 8);
  CHECK(separating_triangles(g).empty());
  CHECK(is_four_connected(g));
}

TEST_CASE("stacked octahedron has the separating triangle (3,4,5)") {
  const auto g = PlaneTriangulation::build(stacked_octahedron_spec());
  const auto sep = separating_triangles(g);
  REQUIRE(sep.size() == 1);
  CHECK(sep[0] == Triangle3(3, 4, 5));
  CHECK_FALSE(is_four_connected(g));
}

TEST_CASE("icosahedron is 4-connected") {
  const auto g = PlaneTriangulation::build(icosahedron_spec());
  CHECK(g.face_count() == 20);
  CHECK(is_four_connected(g));
}

TEST_CASE("is_four_connected needs five vertices") {
  const auto g = PlaneTriangulation::build(k4_spec());
  CHECK_THROWS_AS(is_four_connected(g), Error);
}

TEST_CASE("malformed embeddings are rejected with the right kind") {
  auto s = k4_spec();
  // Drop edge 0-3.
  for (auto* r : {&s.rotations[0], &s.rotations[3]}) {
    const Vertex other = r == &s.rotations[0] ? 3 : 0;
    r->erase(std::find(r->begin(), r->end(), other));
  }
  CHECK(kind_of(s) == ErrorKind::NotTriangulation);

  auto t = k4_spec();
  t.rotations[0].push_back(0);
  CHECK(kind_of(t) == ErrorKind::BadEmbedding);

  auto u = k4_spec();
  u.rotations[1].pop_back();
  CHECK(kind_of(u) == ErrorKind::BadEmbedding);

  auto w = k4_spec();
  w.outer = {0, 2, 1};  // clockwise listing
  CHECK(kind_of(w) == ErrorKind::BadOuterFace);

  auto x = k4_spec();
  std::reverse(x.rotations[3].begin(), x.rotations[3].end());
  const auto k = kind_of(x);
  CHECK((k == ErrorKind::NotTriangulation || k == ErrorKind::BadEmbedding));
}

TEST_CASE("rotations may start anywhere") {
  auto s = k4_spec();
  std::rotate(s.rotations[3].begin(), s.rotations[3].begin() + 1, s.rotations[3].end());
  const auto a = PlaneTriangulation::build(k4_spec());
  const auto b = PlaneTriangulation::build(s);
  CHECK(a.same_embedding(b));
}

TEST_CASE("face count and 3-cycle partition on random triangulations") {
  Rng rng(11);
  for (int it = 0; it < 60; ++it) {
    const int n = uniform(rng, 4, 12);
    const auto g = PlaneTriangulation::build(random_triangulation(n, rng, 3 * n));
    CHECK(g.face_count() == 2 * n - 4);
    std::set<Triangle3> faces, all;
    for (const auto& f : g.inner_faces()) faces.insert(Triangle3(f[0], f[1], f[2]));
    faces.insert(Triangle3(g.outer()[0], g.outer()[1], g.outer()[2]));
    for (const auto& t : separating_triangles(g)) {
      CHECK_FALSE(faces.contains(t));
      all.insert(t);
    }
    all.insert(faces.begin(), faces.end());
    CHECK(all == brute_cycles(g));
  }
}

TEST_CASE("separating triangles list their vertices counter-clockwise") {
  const auto g = PlaneTriangulation::build(stacked_octahedron_spec());
  const auto& c = g.cycles()[g.cycle_index(Triangle3(3, 4, 5))];
  // Vertices 3, 4, 5 sit at (5,2), (6.5,5), (3.5,5): counter-clockwise.
  CHECK(c.ccw == std::array<Vertex, 3>{3, 4, 5});
  CHECK_FALSE(c.is_face);
}

TEST_CASE("build is deterministic") {
  Rng rng(3);
  const auto s = random_triangulation(30, rng, 40);
  const auto a = PlaneTriangulation::build(s);
  const auto b = PlaneTriangulation::build(s);
  CHECK(a.same_embedding(b));
  CHECK(a.inner_faces() == b.inner_faces());
  REQUIRE(a.cycles().size() == b.cycles().size());
  for (std::size_t i = 0; i < a.cycles().size(); ++i) CHECK(a.cycles()[i].ccw == b.cycles()[i].ccw);
}

TEST_CASE("sphere triangulation counts for small n") {
  CHECK(all_sphere_triangulations(4).size() == 1);
  CHECK(all_sphere_triangulations(5).size() == 1);
  CHECK(all_sphere_triangulations(6).size() == 2);
  // Five up to reflection; one of them is chiral.
  CHECK(all_sphere_triangulations(7).size() == 6);
  for (const auto& s : all_plane_triangulations(7)) CHECK_NOTHROW(PlaneTriangulation::build(s));
}
