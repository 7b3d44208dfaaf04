#include <algorithm>

#include "doctest.h"
#include "rtmorph/morph.hpp"
#include "support/fixtures.hpp"

using namespace rtmorph;
using namespace rtmorph::testing;

namespace {

Labeling labels(const RTRepresentation& r) {
  Labeling t;
  for (const auto& tri : r.triangles) t.push_back(tri.yb);
  return t;
}

// Independent recomputation: every inner vertex other than x keeps its ratio
// on the diagonal of its green parent, evaluated in DAG_b order.
Labeling oracle_adjust(const Labeling& tau, const SchnyderWood& w, Vertex x, const Rational& y) {
  const Roots& roots = w.roots();
  auto top = [&](const Labeling& t, Vertex p) -> Rational {
    return p == roots.green ? t[roots.red] : t[w.parent(p, Color::Red)];
  };
  Labeling t = tau;
  t[x] = y;
  for (Vertex v : topological_order(derived_dag(w, Color::Blue))) {
    if (!w.is_inner(v) || v == x) continue;
    const Vertex p = w.parent(v, Color::Green);
    const Rational ratio = (tau[v] - tau[p]) / (top(tau, p) - tau[p]);
    t[v] = t[p] + ratio * (top(t, p) - t[p]);
  }
  return t;
}

// Open interval of heights that keeps x strictly between its neighbors on the
// diagonal of x_g, worked out from sorted heights.
std::pair<Rational, Rational> free_window(const Labeling& tau, const SchnyderWood& w, Vertex x) {
  const Vertex p = w.parent(x, Color::Green);
  std::vector<Rational> others;
  for (Vertex v = 0; v < w.graph().n(); ++v) {
    if (w.is_inner(v) && v != x && w.parent(v, Color::Green) == p) others.push_back(tau[v]);
  }
  Rational lo = tau[p];
  Rational hi = p == w.roots().green ? tau[w.roots().red] : tau[w.parent(p, Color::Red)];
  for (const auto& o : others) {
    if (o < tau[x]) lo = std::max(lo, o);
    if (o > tau[x]) hi = std::min(hi, o);
  }
  hi = std::min(hi, tau[w.parent(x, Color::Red)]);
  return {lo, hi};
}

void check_plan(const MorphPlan& plan, const RTRepresentation& from, const RTRepresentation& to) {
  REQUIRE(!plan.keyframes.empty());
  CHECK(plan.keyframes.front() == from);
  CHECK(plan.keyframes.back() == to);
  CHECK(plan.events.size() + 1 == plan.keyframes.size());
  for (std::size_t i = 0; i + 1 < plan.keyframes.size(); ++i) {
    const auto& a = plan.keyframes[i];
    const auto& b = plan.keyframes[i + 1];
    CHECK_FALSE(a == b);
    const LinearMorphCheck m = is_linear_morph(a, b);
    INFO("step " << i << ": " << m.reason);
    CHECK(m.ok);
    CHECK(validate_rt(interpolate(a, b, ratio(1, 2))).empty());
  }
}

std::pair<GraphPtr, SchnyderWood> random_instance(Rng& rng, int lo, int hi) {
  const int n = uniform(rng, lo, hi);
  const auto g = make_graph(random_triangulation(n, rng, n));
  return {g, random_wood(g, g->outer()[uniform(rng, 0, 2)], rng, uniform(rng, 0, 20))};
}

}  // namespace

TEST_CASE("K4: ratio and order") {
  const auto g = make_graph(k4_spec());
  const auto w = initial_wood(g, 0);  // X_r = 0, X_g = 2, X_b = 1
  const Labeling tau{2, 0, 0, 1};
  CHECK(lambda_ratio(tau, w, 3) == ratio(1, 2));
  CHECK(lambda_ratio(tau, w, 1) == 0);
  CHECK(lambda_ratio(tau, w, 0) == 1);
  try {
    lambda_ratio(tau, w, 2);
    FAIL("expected Undefined");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Undefined);
  }
  CHECK(respects_order(tau, w, 3, ratio(1, 2)));
  CHECK(respects_order(tau, w, 3, ratio(3, 2)));
  CHECK_FALSE(respects_order(tau, w, 3, 0));  // never level with X_g
  CHECK_FALSE(respects_order(tau, w, 3, 2));  // would flatten 3
  CHECK_FALSE(respects_order(tau, w, 0, 1));  // outer vertices do not move

  CHECK(adjust(tau, w, 3, ratio(1, 2)) == Labeling{2, 0, 0, ratio(1, 2)});
  try {
    adjust(tau, w, 3, 5);
    FAIL("expected OrderViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderViolation);
  }
}

TEST_CASE("adjust agrees with direct recomputation") {
  Rng rng(21);
  for (int iter = 0; iter < 150; ++iter) {
    auto [g, w] = random_instance(rng, 5, 40);
    const int n = g->n();
    const Labeling tau = random_strict_tau(w, rng);
    Vertex x;
    do x = uniform(rng, 0, n - 1);
    while (!w.is_inner(x));
    const auto [lo, hi] = free_window(tau, w, x);
    const Rational y = lo + (hi - lo) * ratio(uniform(rng, 1, 99), 100);
    REQUIRE(respects_order(tau, w, x, y));
    const Labeling got = adjust(tau, w, x, y);
    CHECK(got == oracle_adjust(tau, w, x, y));
    CHECK(validate_adt(got, w).empty());
    for (Vertex v = 0; v < n; ++v) {
      if (w.is_inner(v) && v != x) CHECK(lambda_ratio(got, w, v) == lambda_ratio(tau, w, v));
    }
    const auto a = construct_rt(w, tau, canonical_frame(n));
    const auto b = construct_rt(w, got, canonical_frame(n));
    const LinearMorphCheck m = is_linear_morph(a, b);
    INFO(m.reason);
    CHECK(m.ok);
  }
}

TEST_CASE("adjust refuses heights outside the window") {
  Rng rng(8);
  int refused = 0;
  for (int iter = 0; iter < 60; ++iter) {
    auto [g, w] = random_instance(rng, 6, 20);
    const Labeling tau = random_strict_tau(w, rng);
    Vertex x;
    do x = uniform(rng, 0, g->n() - 1);
    while (!w.is_inner(x));
    const auto [lo, hi] = free_window(tau, w, x);
    for (const Rational& y : std::vector<Rational>{hi, hi + 1, lo - 1}) {
      if (respects_order(tau, w, x, y)) continue;
      CHECK_THROWS_AS(adjust(tau, w, x, y), Error);
      ++refused;
    }
  }
  CHECK(refused > 60);
}

TEST_CASE("next_movable_index") {
  using V = std::vector<Rational>;
  CHECK(next_movable_index(V{1, 3}, V{2, 4}) == 1u);
  CHECK(next_movable_index(V{2, 4}, V{1, 3}) == 0u);
  CHECK(next_movable_index(V{1, 5}, V{4, 6}) == 1u);
  CHECK_FALSE(next_movable_index(V{1, 2}, V{1, 2}).has_value());
  CHECK_FALSE(next_movable_index(V{}, V{}).has_value());
  try {
    next_movable_index(V{1}, V{1, 2});
    FAIL("expected SizeMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeMismatch);
  }

  Rng rng(4);
  for (int iter = 0; iter < 300; ++iter) {
    const int len = uniform(rng, 1, 12);
    auto sorted_set = [&] {
      std::vector<int> raw;
      while (static_cast<int>(raw.size()) < len) {
        const int v = uniform(rng, 0, 30);
        if (std::find(raw.begin(), raw.end(), v) == raw.end()) raw.push_back(v);
      }
      std::sort(raw.begin(), raw.end());
      return V(raw.begin(), raw.end());
    };
    V p = sorted_set();
    const V target = sorted_set();
    int moves = 0;
    while (auto i = next_movable_index(p, target)) {
      p[*i] = target[*i];
      CHECK(std::adjacent_find(p.begin(), p.end(), [](const Rational& a, const Rational& b) { return a >= b; }) ==
            p.end());
      ++moves;
    }
    CHECK(p == target);
    CHECK(moves <= len);
  }
}

TEST_CASE("normalize_outer reaches the canonical frame") {
  const auto g = make_graph(k4_spec());
  const auto w = initial_wood(g, 0);
  const auto canon = construct_rt(w, {2, 0, 0, 1}, canonical_frame(4));
  CHECK(normalize_outer(canon, w).empty());

  // X_b reaches above the horizontal side of X_r; everything is then scaled.
  OuterFrame f;
  f.blue = {-2, 0, 0, 3};
  f.green = {0, 2, 0, 2};
  f.red = {0, 3, 2, 4};
  const auto loose = construct_rt(w, {2, 0, 0, 1}, f);
  REQUIRE(validate_rt(loose).empty());
  RTRepresentation scaled = loose;
  for (auto& t : scaled.triangles) {
    t.xl = 3 * t.xl + 7;
    t.xr = 3 * t.xr + 7;
    t.yb = 5 * t.yb - 1;
    t.yt = 5 * t.yt - 1;
  }
  REQUIRE(validate_rt(scaled).empty());
  for (const RTRepresentation* start : std::vector<const RTRepresentation*>{&loose, &scaled}) {
    const auto steps = normalize_outer(*start, w);
    REQUIRE(!steps.empty());
    CHECK(steps.size() <= 3);
    CHECK(frame_of(steps.back(), w.roots()) == canonical_frame(4));
    CHECK(steps.back() == canon);
    RTRepresentation prev = *start;
    for (const auto& s : steps) {
      CHECK(validate_rt(s).empty());
      CHECK(is_linear_morph(prev, s).ok);
      prev = s;
    }
  }
}

TEST_CASE("octahedron flip through a degenerate point") {
  const auto g = make_graph(octahedron_spec());
  const auto w = initial_wood(g, 0);
  const Triangle3 face(3, 4, 5);
  const auto r = construct_rt(w, lex_strict_tau(w), canonical_frame(6));
  const FlipMorph fm = flip_morph(r, w, face);
  CHECK(fm.wood == flip(w, face));

  const ContactMap cm = contacts(fm.degenerate);
  REQUIRE(cm.degenerate.size() == 1);
  CHECK(cm.degenerate[0].face() == face);
  const WoodSet ws = extract_wood_set(fm.degenerate);
  CHECK(ws.contains(w));
  CHECK(ws.contains(fm.wood));
  CHECK(contacts(fm.flipped).degenerate.empty());
  CHECK(extract_wood_set(fm.flipped).base() == fm.wood);
  CHECK(is_linear_morph(r, fm.degenerate).ok);
  CHECK(is_linear_morph(fm.degenerate, fm.flipped).ok);

  try {
    flip_morph(fm.degenerate, w, face);
    FAIL("expected Degenerate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Degenerate);
  }
  try {
    flip_morph(r, w, Triangle3(0, 1, 3));
    FAIL("expected NotOrientedFace");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotOrientedFace);
  }
  try {
    flip_morph(r, fm.wood, face);
    FAIL("expected WoodMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WoodMismatch);
  }
}

TEST_CASE("random facial flips are realized by two linear morphs") {
  Rng rng(99);
  int flips = 0;
  for (int iter = 0; iter < 120; ++iter) {
    auto [g, w] = random_instance(rng, 5, 30);
    const auto r = construct_rt(w, random_strict_tau(w, rng), canonical_frame(g->n()));
    for (const auto& t : oriented_triangles(w, TriangleScope::FacesOnly)) {
      const FlipMorph fm = flip_morph(r, w, t.triangle);
      INFO("face " << t.triangle.str());
      CHECK(fm.wood == flip(w, t.triangle));
      CHECK(validate_rt(fm.degenerate).empty());
      CHECK(validate_rt(fm.flipped).empty());
      CHECK(extract_wood_set(fm.degenerate).size() == 2);
      CHECK(extract_wood_set(fm.flipped).base() == fm.wood);
      CHECK(is_linear_morph(r, fm.degenerate).ok);
      CHECK(is_linear_morph(fm.degenerate, fm.flipped).ok);
      ++flips;
    }
  }
  CHECK(flips > 100);
}

TEST_CASE("same-wood morphs stay within 2n steps") {
  Rng rng(17);
  for (int iter = 0; iter < 40; ++iter) {
    auto [g, w] = random_instance(rng, 4, 30);
    const int n = g->n();
    const auto a = construct_rt(w, random_strict_tau(w, rng), canonical_frame(n));
    const auto b = construct_rt(w, random_strict_tau(w, rng), canonical_frame(n));
    const MorphPlan plan = same_wood_morph(a, b, w);
    check_plan(plan, a, b);
    CHECK(static_cast<int>(plan.transitions()) <= 2 * n);
    for (const auto& e : plan.events) CHECK(e.kind != MorphEvent::Kind::FlipStep);
  }
}

TEST_CASE("same_wood_morph rejects a foreign wood") {
  const auto g = make_graph(octahedron_spec());
  const auto w = initial_wood(g, 0);
  const auto r = construct_rt(w, lex_strict_tau(w), canonical_frame(6));
  try {
    same_wood_morph(r, r, flip(w, Triangle3(3, 4, 5)));
    FAIL("expected WoodMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WoodMismatch);
  }
  CHECK(same_wood_morph(r, r, w).transitions() == 0);
}

TEST_CASE("decide") {
  const auto k4 = make_graph(k4_spec());
  const auto r0 = construct_rt(initial_wood(k4, 0), {2, 0, 0, 1}, canonical_frame(4));
  const auto w1 = initial_wood(k4, 1);
  Labeling t1(4, 0);
  t1[1] = 2;
  t1[3] = 1;
  const auto r1 = construct_rt(w1, t1, canonical_frame(4));
  MorphDecision d = decide(r0, r1);
  CHECK_FALSE(d.possible);
  CHECK(d.reason == MorphDecision::Reason::TopmostDiffers);
  CHECK(d.witness == std::vector<Vertex>{0, 1});

  const auto oct = make_graph(octahedron_spec());
  const auto ow = initial_wood(oct, 0);
  const auto ro = construct_rt(ow, lex_strict_tau(ow), canonical_frame(6));
  d = decide(r0, ro);
  CHECK(d.reason == MorphDecision::Reason::GraphMismatch);

  const auto ow2 = flip(ow, Triangle3(3, 4, 5));
  const auto ro2 = construct_rt(ow2, lex_strict_tau(ow2), canonical_frame(6));
  d = decide(ro, ro2);
  CHECK(d.possible);
  CHECK(d.flip_count == 1);
  CHECK(decide(ro, ro).flip_count == 0);

  const auto so = make_graph(stacked_octahedron_spec());
  bool found = false;
  Rng rng(2);
  for (int iter = 0; iter < 200 && !found; ++iter) {
    const auto a = random_wood(so, 0, rng, 10);
    for (const auto& t : oriented_triangles(a, TriangleScope::AllTriangles)) {
      if (t.triangle != Triangle3(3, 4, 5)) continue;
      const auto b = flip(a, t.triangle);
      const auto ra = construct_rt(a, lex_strict_tau(a), canonical_frame(7));
      const auto rb = construct_rt(b, lex_strict_tau(b), canonical_frame(7));
      d = decide(ra, rb);
      CHECK_FALSE(d.possible);
      CHECK(d.reason == MorphDecision::Reason::SeparatingPotentialDiffers);
      CHECK(d.witness == std::vector<Vertex>{3, 4, 5});
      try {
        full_morph(ra, rb);
        FAIL("expected NotMorphable");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotMorphable);
      }
      found = true;
      break;
    }
  }
  CHECK(found);

  RTRepresentation broken = ro;
  broken.triangles[3].xr += 1;
  CHECK_THROWS_AS(decide(broken, ro), Error);
}

TEST_CASE("full morphs between facial-flip-connected woods") {
  Rng rng(31);
  for (int iter = 0; iter < 40; ++iter) {
    auto [g, wa] = random_instance(rng, 4, 25);
    const int n = g->n();
    SchnyderWood wb = wa;
    for (int s = uniform(rng, 0, 12); s > 0; --s) {
      const auto faces = oriented_triangles(wb, TriangleScope::FacesOnly);
      if (faces.empty()) break;
      wb = flip(wb, faces[uniform(rng, 0, static_cast<int>(faces.size()) - 1)].triangle);
    }
    const auto a = construct_rt(wa, random_strict_tau(wa, rng), canonical_frame(n));
    const auto b = construct_rt(wb, random_strict_tau(wb, rng), canonical_frame(n));
    const MorphDecision d = decide(a, b);
    REQUIRE(d.possible);
    const MorphPlan plan = full_morph(a, b);
    check_plan(plan, a, b);
    CHECK(static_cast<long>(plan.transitions()) <= 2 * n + 2 * d.flip_count + 6);
    long flip_steps = 0;
    for (const auto& e : plan.events) flip_steps += e.kind == MorphEvent::Kind::FlipStep;
    CHECK(flip_steps <= 2 * d.flip_count);
  }
}

TEST_CASE("plans reverse cleanly") {
  const auto g = make_graph(octahedron_spec());
  const auto w = initial_wood(g, 0);
  const auto a = construct_rt(w, lex_strict_tau(w), canonical_frame(6));
  const auto w2 = flip(w, Triangle3(3, 4, 5));
  Rng rng(1);
  const auto b = construct_rt(w2, random_strict_tau(w2, rng), canonical_frame(6));
  const MorphPlan plan = full_morph(a, b);
  const MorphPlan back = plan.reversed();
  check_plan(back, b, a);
  CHECK(labels(back.keyframes.front()) == labels(b));
}
