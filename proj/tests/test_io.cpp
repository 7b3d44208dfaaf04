#include <algorithm>
#include <functional>

#include "doctest.h"
#include "rtmorph/io.hpp"
#include "rtmorph/render.hpp"
#include "support/fixtures.hpp"

using namespace rtmorph;
using namespace rtmorph::testing;
using io::Json;

namespace {

std::string error_text(const std::function<void()>& f, ErrorKind expected) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.kind() == expected);
    return e.what();
  }
  FAIL("no error raised");
  return {};
}

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t c = 0;
  for (auto pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + 1)) ++c;
  return c;
}

MorphPlan k4_adjust_plan() {
  const auto g = make_graph(k4_spec());
  const auto w = initial_wood(g, 0);
  MorphPlan plan;
  plan.push(construct_rt(w, {2, 0, 0, 1}, canonical_frame(4)), MorphEvent::normalization());
  plan.push(construct_rt(w, {2, 0, 0, ratio(1, 2)}, canonical_frame(4)), MorphEvent::ratio_move(3));
  return plan;
}

}  // namespace

TEST_CASE("graph JSON") {
  const Json j = Json::parse(R"({"n": 4, "rotations": [[1,3,2],[2,3,0],[0,3,1],[0,1,2]], "outer": [0,1,2]})");
  const GraphPtr g = io::graph_from_json(j);
  CHECK(g->n() == 4);
  CHECK(g->face_count() == 4);
  CHECK(io::graph_to_json(*g) == j);

  std::string msg = error_text([] { io::graph_from_json(Json::parse(R"({"n": 4, "outer": [0,1,2]})"), "g.json"); },
                               ErrorKind::ParseError);
  CHECK(msg.find("g.json") != std::string::npos);
  CHECK(msg.find("/rotations") != std::string::npos);
  msg = error_text([] { io::graph_from_json(Json::parse(R"({"n": 4, "rotations": [[1,"x",2]], "outer": [0,1,2]})")); },
                   ErrorKind::ParseError);
  CHECK(msg.find("/rotations/0/1") != std::string::npos);
  error_text([] { io::graph_from_json(Json::parse(R"({"n": 4, "rotations": [[1],[0],[],[]], "outer": [0,1,2]})")); },
             ErrorKind::NotTriangulation);
}

TEST_CASE("rationals normalize on round trip") {
  const auto g = make_graph(k4_spec());
  Json j = io::rep_to_json(construct_rt(initial_wood(g, 0), {2, 0, 0, 1}, canonical_frame(4)));
  j["triangles"]["3"]["xr"] = "2/2";
  j["triangles"]["3"]["yb"] = "2/2";
  j["triangles"]["3"]["xl"] = "0/5";
  const auto r = io::rep_from_json(j, g);
  CHECK(r[3].xr == 1);
  const Json again = io::rep_to_json(r);
  CHECK(again["triangles"]["3"]["xr"] == "1/1");
  CHECK(again["triangles"]["3"]["xl"] == "0/1");

  Json half = j;
  half["triangles"]["3"]["xr"] = "2/4";
  const auto rr = io::rep_from_json_unchecked(half, g);
  CHECK(io::rep_to_json(rr)["triangles"]["3"]["xr"] == "1/2");

  Json bad = j;
  bad["triangles"]["3"]["xr"] = "1/0";
  const std::string msg = error_text([&] { io::rep_from_json(bad, g, "r.json"); }, ErrorKind::ParseError);
  CHECK(msg.find("/triangles/3/xr") != std::string::npos);
  CHECK(msg.find("ParseError") == msg.rfind("ParseError"));  // kind named once
  bad = j;
  bad["triangles"].erase("2");
  CHECK(error_text([&] { io::rep_from_json(bad, g); }, ErrorKind::ParseError).find("/triangles/2") !=
        std::string::npos);
  bad = j;
  bad["triangles"]["3"]["xr"] = "3/2";
  error_text([&] { io::rep_from_json(bad, g); }, ErrorKind::ValidationError);
}

TEST_CASE("representation may carry its graph") {
  const auto g = make_graph(octahedron_spec());
  const auto w = initial_wood(g, 0);
  const auto r = construct_rt(w, lex_strict_tau(w), canonical_frame(6));
  const Json j = io::rep_to_json(r, true);
  CHECK(j.contains("graph"));
  const auto back = io::rep_from_json(j, nullptr);
  CHECK(back == r);
  CHECK(io::rep_to_json(back, true).dump() == j.dump());
  error_text([&] { io::rep_from_json(io::rep_to_json(r), nullptr); }, ErrorKind::ParseError);
  error_text([&] { io::rep_from_json(j, make_graph(stacked_octahedron_spec())); }, ErrorKind::ValidationError);
}

TEST_CASE("wood JSON") {
  Rng rng(6);
  for (int iter = 0; iter < 30; ++iter) {
    const int n = uniform(rng, 4, 30);
    const auto g = make_graph(random_triangulation(n, rng, n));
    const auto w = random_wood(g, g->outer()[uniform(rng, 0, 2)], rng, 10);
    const Json j = io::wood_to_json(w);
    CHECK(io::wood_from_json(j, g) == w);
    CHECK(io::wood_to_json(io::wood_from_json(j, g)).dump() == j.dump());
  }

  const auto g = make_graph(k4_spec());
  Json j = io::wood_to_json(initial_wood(g, 0));
  auto& edges = j["edges"];
  // Drop one of vertex 3's out-edges.
  edges.erase(std::find_if(edges.begin(), edges.end(), [](const Json& e) { return e["tail"] == 3; }));
  const std::string msg = error_text([&] { io::wood_from_json(j, g); }, ErrorKind::ValidationError);
  CHECK(msg.find("vertex 3") != std::string::npos);

  j = io::wood_to_json(initial_wood(g, 0));
  j["edges"][0]["color"] = "purple";
  CHECK(error_text([&] { io::wood_from_json(j, g); }, ErrorKind::ParseError).find("/edges/0/color") !=
        std::string::npos);
}

TEST_CASE("labeling, wood set, potential and decision JSON") {
  const auto g = make_graph(octahedron_spec());
  const auto w = initial_wood(g, 0);
  const Labeling tau = lex_strict_tau(w);
  const Json tj = io::labeling_to_json(tau);
  CHECK(io::labeling_from_json(tj, 6) == tau);
  Json short_tau = tj;
  short_tau["tau"].erase("5");
  error_text([&] { io::labeling_from_json(short_tau, 6); }, ErrorKind::ParseError);

  const auto w2 = flip(w, Triangle3(3, 4, 5));
  const Json ws = io::wood_set_to_json(WoodSet(w, {Triangle3(3, 4, 5)}));
  CHECK(ws["degenerate_faces"] == Json::parse("[[3,4,5]]"));
  CHECK(io::wood_from_json(ws["base"], g) == w);

  const auto pj = io::potential_to_json(potential(w2));
  const auto pj1 = io::potential_to_json(potential(w));
  CHECK((pj["potential"].size() + pj1["potential"].size()) == 1);

  MorphDecision d;
  d.reason = MorphDecision::Reason::SeparatingPotentialDiffers;
  d.witness = {3, 4, 5};
  const Json dj = io::decision_to_json(d);
  CHECK(dj["possible"] == false);
  CHECK(dj["reason"] == "separating_potential_differs");
  CHECK(dj["witness"] == Json::parse("[3,4,5]"));
}

TEST_CASE("plan JSON round trip") {
  const auto g = make_graph(octahedron_spec());
  const auto w = initial_wood(g, 0);
  const auto w2 = flip(w, Triangle3(3, 4, 5));
  Rng rng(12);
  const auto a = construct_rt(w, random_strict_tau(w, rng), canonical_frame(6));
  const auto b = construct_rt(w2, random_strict_tau(w2, rng), canonical_frame(6));
  const MorphPlan plan = full_morph(a, b);
  const Json j = io::plan_to_json(plan);
  CHECK(j["events"].size() + 1 == j["keyframes"].size());
  const MorphPlan back = io::plan_from_json(j, nullptr);
  CHECK(back.keyframes == plan.keyframes);
  CHECK(back.events == plan.events);
  CHECK(io::plan_to_json(back).dump() == j.dump());
  CHECK(count(j.dump(), "\"flip_step\"") == 2);

  Json bad = j;
  bad["events"][0]["kind"] = "teleport";
  CHECK(error_text([&] { io::plan_from_json(bad, nullptr, "p.json"); }, ErrorKind::ParseError).find("/events/0/kind") !=
        std::string::npos);
  bad = j;
  bad["events"].erase(0);
  error_text([&] { io::plan_from_json(bad, nullptr); }, ErrorKind::ParseError);
}

TEST_CASE("frames sample each transition evenly") {
  const MorphPlan plan = k4_adjust_plan();
  render::RenderConfig cfg;
  cfg.frame_count = 3;
  const auto samples = render::sample_plan(plan, cfg);
  REQUIRE(samples.size() == 3);
  const RightTriangle& mid = samples[1][3];
  CHECK(mid.left() == Point{0, ratio(3, 4)});
  CHECK(mid.right() == Point{ratio(3, 4), ratio(3, 4)});
  CHECK(mid.top() == Point{ratio(3, 4), 2});

  const auto docs = render::render_frames(plan, cfg);
  REQUIRE(docs.size() == 3);
  for (std::size_t i = 0; i < docs.size(); ++i) {
    CHECK(count(docs[i], "<polygon") == 4);
    const auto r = render::parse_frame(docs[i], plan.keyframes[0].graph);
    CHECK(r == samples[i]);
    CHECK(validate_rt(r).empty());
  }
  // World y grows upward, screen y downward: the topmost triangle is drawn
  // nearest to the top edge.
  CHECK(docs[0].find(",20\" fill") != std::string::npos);

  MorphPlan single;
  single.push(plan.keyframes[0], MorphEvent::normalization());
  CHECK(render::render_frames(single, cfg).size() == 1);

  cfg.frame_count = 1;
  error_text([&] { render::render_frames(plan, cfg); }, ErrorKind::ValidationError);
  cfg.frame_count = 3;
  cfg.width = 0;
  error_text([&] { render::render_frames(plan, cfg); }, ErrorKind::ValidationError);
}

TEST_CASE("rendered frames of a full morph re-parse as valid representations") {
  const auto g = make_graph(octahedron_spec());
  const auto w = initial_wood(g, 0);
  const auto w2 = flip(w, Triangle3(3, 4, 5));
  Rng rng(40);
  const auto a = construct_rt(w, random_strict_tau(w, rng), canonical_frame(6));
  const auto b = construct_rt(w2, random_strict_tau(w2, rng), canonical_frame(6));
  const MorphPlan plan = full_morph(a, b);
  render::RenderConfig cfg;
  cfg.frame_count = 5;
  const auto docs = render::render_frames(plan, cfg);
  CHECK(docs.size() == 1 + 4 * plan.transitions());
  for (const auto& d : docs) CHECK(validate_rt(render::parse_frame(d, g)).empty());
}

TEST_CASE("animated rendering") {
  render::RenderConfig cfg;
  cfg.mode = render::RenderConfig::Mode::Animated;
  const MorphPlan plan = k4_adjust_plan();
  MorphPlan single;
  single.push(plan.keyframes[0], MorphEvent::normalization());
  const std::string still = render::render_animated(single, cfg);
  CHECK(count(still, "<animate") == 0);
  CHECK(count(still, "<polygon") == 4);

  const std::string two = render::render_animated(plan, cfg);
  CHECK(count(two, "<animate") == 4);
  CHECK(count(two, "keyTimes=\"0;1\"") == 4);

  const auto g = make_graph(octahedron_spec());
  const auto w = initial_wood(g, 0);
  const auto w2 = flip(w, Triangle3(3, 4, 5));
  Rng rng(41);
  const auto a = construct_rt(w, random_strict_tau(w, rng), canonical_frame(6));
  const auto b = construct_rt(w2, random_strict_tau(w2, rng), canonical_frame(6));
  const MorphPlan full = full_morph(a, b);
  const std::string anim = render::render_animated(full, cfg);
  const auto pos = anim.find("keyTimes=\"");
  REQUIRE(pos != std::string::npos);
  const std::string times = anim.substr(pos + 10, anim.find('"', pos + 10) - pos - 10);
  CHECK(count(times, ";") == full.transitions());
}
