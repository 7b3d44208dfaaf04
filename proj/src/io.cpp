#include "rtmorph/io.hpp"

#include <fstream>
#include <sstream>

namespace rtmorph::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& ptr, const std::string& msg) {
  throw Error(ErrorKind::ParseError, where + ": " + (ptr.empty() ? "/" : ptr) + ": " + msg);
}

const Json& field(const Json& obj, const char* name, const std::string& where, const std::string& ptr) {
  if (!obj.is_object()) fail(where, ptr, "expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) fail(where, ptr + "/" + name, "missing field");
  return *it;
}

long long as_int(const Json& j, const std::string& where, const std::string& ptr) {
  if (!j.is_number_integer()) fail(where, ptr, "expected an integer");
  return j.get<long long>();
}

Vertex as_vertex(const Json& j, int n, const std::string& where, const std::string& ptr) {
  const long long v = as_int(j, where, ptr);
  if (v < 0 || v >= n) fail(where, ptr, "vertex " + std::to_string(v) + " out of range");
  return static_cast<Vertex>(v);
}

const Json& as_array(const Json& j, const std::string& where, const std::string& ptr) {
  if (!j.is_array()) fail(where, ptr, "expected an array");
  return j;
}

Rational as_rational(const Json& j, const std::string& where, const std::string& ptr) {
  if (!j.is_string()) fail(where, ptr, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(where, ptr, e.message());
  }
}

Vertex parse_key(const std::string& key, int n, const std::string& where, const std::string& ptr) {
  Vertex v = -1;
  std::istringstream is(key);
  if (!(is >> v) || !is.eof() || std::to_string(v) != key) fail(where, ptr, "bad vertex key '" + key + "'");
  if (v < 0 || v >= n) fail(where, ptr, "vertex " + key + " out of range");
  return v;
}

Json triangle_json(const Triangle3& t) { return Json::array({t.v[0], t.v[1], t.v[2]}); }

Triangle3 triangle_from(const Json& j, int n, const std::string& where, const std::string& ptr) {
  as_array(j, where, ptr);
  if (j.size() != 3) fail(where, ptr, "expected three vertices");
  return Triangle3(as_vertex(j[0], n, where, ptr + "/0"), as_vertex(j[1], n, where, ptr + "/1"),
                   as_vertex(j[2], n, where, ptr + "/2"));
}

GraphPtr resolve_graph(const Json& j, const GraphPtr& g, const std::string& where) {
  if (j.is_object() && j.contains("graph")) {
    GraphPtr embedded = graph_from_json(j["graph"], where + ":/graph");
    if (g && !g->same_embedding(*embedded)) {
      throw Error(ErrorKind::ValidationError, where + ": embedded graph differs from the given one");
    }
    return embedded;
  }
  if (!g) fail(where, "/graph", "no graph given and none embedded");
  return g;
}

}  // namespace

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, path.string() + ": cannot write file");
  out << j.dump(2) << '\n';
}

Json graph_to_json(const PlaneTriangulation& g) {
  const EmbeddingSpec s = g.spec();
  return Json{{"n", s.n}, {"rotations", s.rotations}, {"outer", s.outer}};
}

GraphPtr graph_from_json(const Json& j, const std::string& where) {
  EmbeddingSpec s;
  const long long n = as_int(field(j, "n", where, ""), where, "/n");
  if (n < 0 || n > 1'000'000) fail(where, "/n", "unreasonable vertex count");
  s.n = static_cast<int>(n);
  const Json& rot = as_array(field(j, "rotations", where, ""), where, "/rotations");
  for (std::size_t u = 0; u < rot.size(); ++u) {
    const std::string p = "/rotations/" + std::to_string(u);
    std::vector<Vertex> r;
    for (std::size_t k = 0; k < as_array(rot[u], where, p).size(); ++k) {
      r.push_back(static_cast<Vertex>(as_int(rot[u][k], where, p + "/" + std::to_string(k))));
    }
    s.rotations.push_back(std::move(r));
  }
  const Json& outer = as_array(field(j, "outer", where, ""), where, "/outer");
  if (outer.size() != 3) fail(where, "/outer", "expected three vertices");
  for (int i = 0; i < 3; ++i) s.outer[i] = static_cast<Vertex>(as_int(outer[i], where, "/outer/" + std::to_string(i)));
  return make_graph(std::move(s));
}

Json wood_to_json(const SchnyderWood& w) {
  Json edges = Json::array();
  for (const auto& e : w.edges()) edges.push_back({{"tail", e.tail}, {"head", e.head}, {"color", to_string(e.color)}});
  const Roots& r = w.roots();
  return Json{{"roots", {{"red", r.red}, {"green", r.green}, {"blue", r.blue}}}, {"edges", std::move(edges)}};
}

SchnyderWood wood_from_json(const Json& j, const GraphPtr& g, const std::string& where) {
  const int n = g->n();
  const Json& rj = field(j, "roots", where, "");
  Roots roots{as_vertex(field(rj, "red", where, "/roots"), n, where, "/roots/red"),
              as_vertex(field(rj, "green", where, "/roots"), n, where, "/roots/green"),
              as_vertex(field(rj, "blue", where, "/roots"), n, where, "/roots/blue")};
  std::vector<WoodEdge> edges;
  const Json& ej = as_array(field(j, "edges", where, ""), where, "/edges");
  for (std::size_t i = 0; i < ej.size(); ++i) {
    const std::string p = "/edges/" + std::to_string(i);
    WoodEdge e;
    e.tail = as_vertex(field(ej[i], "tail", where, p), n, where, p + "/tail");
    e.head = as_vertex(field(ej[i], "head", where, p), n, where, p + "/head");
    const Json& c = field(ej[i], "color", where, p);
    if (!c.is_string()) fail(where, p + "/color", "expected a color name");
    auto col = parse_color(c.get<std::string>());
    if (!col) fail(where, p + "/color", "unknown color '" + c.get<std::string>() + "'");
    e.color = *col;
    edges.push_back(e);
  }
  if (!(roots == roots_for(*g, roots.red))) {
    throw Error(ErrorKind::ValidationError, where + ": roots do not follow the outer face order");
  }
  return SchnyderWood::from_edges(g, roots, edges);
}

Json rational_to_json(const Rational& r) { return format_rational(r); }

Json rep_to_json(const RTRepresentation& r, bool with_graph) {
  Json tri = Json::object();
  for (std::size_t v = 0; v < r.triangles.size(); ++v) {
    const RightTriangle& t = r.triangles[v];
    tri[std::to_string(v)] = {{"xl", rational_to_json(t.xl)},
                              {"xr", rational_to_json(t.xr)},
                              {"yb", rational_to_json(t.yb)},
                              {"yt", rational_to_json(t.yt)}};
  }
  Json j{{"triangles", std::move(tri)}};
  if (with_graph) j["graph"] = graph_to_json(*r.graph);
  return j;
}

RTRepresentation rep_from_json_unchecked(const Json& j, const GraphPtr& g, const std::string& where) {
  const GraphPtr graph = resolve_graph(j, g, where);
  const int n = graph->n();
  const Json& tri = field(j, "triangles", where, "");
  if (!tri.is_object()) fail(where, "/triangles", "expected an object keyed by vertex");
  RTRepresentation r{graph, std::vector<RightTriangle>(n)};
  std::vector<char> seen(n, 0);
  for (const auto& [key, val] : tri.items()) {
    const std::string p = "/triangles/" + key;
    const Vertex v = parse_key(key, n, where, p);
    seen[v] = 1;
    RightTriangle& t = r.triangles[v];
    t.xl = as_rational(field(val, "xl", where, p), where, p + "/xl");
    t.xr = as_rational(field(val, "xr", where, p), where, p + "/xr");
    t.yb = as_rational(field(val, "yb", where, p), where, p + "/yb");
    t.yt = as_rational(field(val, "yt", where, p), where, p + "/yt");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v]) fail(where, "/triangles/" + std::to_string(v), "missing triangle");
  }
  return r;
}

RTRepresentation rep_from_json(const Json& j, const GraphPtr& g, const std::string& where) {
  RTRepresentation r = rep_from_json_unchecked(j, g, where);
  const Diagnostics d = validate_rt(r);
  if (!d.empty()) throw Error(ErrorKind::ValidationError, where + ": not a valid RT-representation", d);
  return r;
}

Json labeling_to_json(const Labeling& tau) {
  Json t = Json::object();
  for (std::size_t v = 0; v < tau.size(); ++v) t[std::to_string(v)] = rational_to_json(tau[v]);
  return Json{{"tau", std::move(t)}};
}

Labeling labeling_from_json(const Json& j, int n, const std::string& where) {
  const Json& t = field(j, "tau", where, "");
  if (!t.is_object()) fail(where, "/tau", "expected an object keyed by vertex");
  Labeling tau(n);
  std::vector<char> seen(n, 0);
  for (const auto& [key, val] : t.items()) {
    const Vertex v = parse_key(key, n, where, "/tau/" + key);
    seen[v] = 1;
    tau[v] = as_rational(val, where, "/tau/" + key);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v]) fail(where, "/tau/" + std::to_string(v), "missing label");
  }
  return tau;
}

Json wood_set_to_json(const WoodSet& ws) {
  Json faces = Json::array();
  for (const auto& f : ws.degenerate_faces()) faces.push_back(triangle_json(f));
  return Json{{"base", wood_to_json(ws.base())}, {"degenerate_faces", std::move(faces)}};
}

Json potential_to_json(const PotentialVector& p) {
  Json arr = Json::array();
  for (const auto& [t, v] : p.values) arr.push_back({{"triangle", triangle_json(t)}, {"value", v}});
  return Json{{"potential", std::move(arr)}};
}

Json decision_to_json(const MorphDecision& d) {
  return Json{{"possible", d.possible},
              {"reason", to_string(d.reason)},
              {"witness", d.witness},
              {"flip_count", d.flip_count}};
}

Json plan_to_json(const MorphPlan& plan) {
  Json frames = Json::array();
  for (const auto& k : plan.keyframes) frames.push_back(rep_to_json(k));
  Json events = Json::array();
  for (const auto& e : plan.events) {
    Json ej{{"kind", to_string(e.kind)}};
    if (e.kind == MorphEvent::Kind::RatioMove) ej["vertex"] = e.vertex;
    if (e.kind == MorphEvent::Kind::FlipStep) {
      ej["face"] = triangle_json(e.face);
      ej["phase"] = e.phase;
    }
    events.push_back(std::move(ej));
  }
  Json j{{"keyframes", std::move(frames)}, {"events", std::move(events)}};
  if (!plan.keyframes.empty()) j["graph"] = graph_to_json(*plan.keyframes.front().graph);
  return j;
}

MorphPlan plan_from_json(const Json& j, const GraphPtr& g, const std::string& where) {
  const GraphPtr graph = resolve_graph(j, g, where);
  const int n = graph->n();
  MorphPlan plan;
  const Json& frames = as_array(field(j, "keyframes", where, ""), where, "/keyframes");
  for (std::size_t i = 0; i < frames.size(); ++i) {
    plan.keyframes.push_back(rep_from_json_unchecked(frames[i], graph, where + ":/keyframes/" + std::to_string(i)));
  }
  const Json& events = as_array(field(j, "events", where, ""), where, "/events");
  for (std::size_t i = 0; i < events.size(); ++i) {
    const std::string p = "/events/" + std::to_string(i);
    const Json& kj = field(events[i], "kind", where, p);
    if (!kj.is_string()) fail(where, p + "/kind", "expected an event kind");
    const std::string kind = kj.get<std::string>();
    MorphEvent e;
    if (kind == "outer_normalization") {
      e = MorphEvent::normalization();
    } else if (kind == "ratio_move") {
      e = MorphEvent::ratio_move(as_vertex(field(events[i], "vertex", where, p), n, where, p + "/vertex"));
    } else if (kind == "flip_step") {
      const Triangle3 f = triangle_from(field(events[i], "face", where, p), n, where, p + "/face");
      const long long phase = as_int(field(events[i], "phase", where, p), where, p + "/phase");
      if (phase != 1 && phase != 2) fail(where, p + "/phase", "phase must be 1 or 2");
      e = MorphEvent::flip_step(f, static_cast<int>(phase));
    } else {
      fail(where, p + "/kind", "unknown event kind '" + kind + "'");
    }
    plan.events.push_back(e);
  }
  if (!plan.keyframes.empty() && plan.events.size() + 1 != plan.keyframes.size()) {
    fail(where, "/events", "expected one event fewer than keyframes");
  }
  return plan;
}

}  // namespace rtmorph::io
