#include "rtmorph/rt_geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rtmorph {

std::string_view to_string(Corner c) {
  switch (c) {
    case Corner::Left: return "left";
    case Corner::Right: return "right";
    case Corner::Top: return "top";
  }
  return "?";
}

std::string_view to_string(Side s) {
  switch (s) {
    case Side::Horizontal: return "horizontal";
    case Side::Vertical: return "vertical";
    case Side::Diagonal: return "diagonal";
  }
  return "?";
}

Point RightTriangle::corner(Corner c) const {
  switch (c) {
    case Corner::Left: return left();
    case Corner::Right: return right();
    case Corner::Top: return top();
  }
  return left();
}

Side compatible_side(Corner c) {
  switch (c) {
    case Corner::Left: return Side::Vertical;
    case Corner::Right: return Side::Diagonal;
    case Corner::Top: return Side::Horizontal;
  }
  return Side::Horizontal;
}

Color corner_color(Corner c) {
  switch (c) {
    case Corner::Left: return Color::Blue;
    case Corner::Right: return Color::Green;
    case Corner::Top: return Color::Red;
  }
  return Color::Red;
}

namespace {

Corner corner_of_color(Color c) {
  switch (c) {
    case Color::Blue: return Corner::Left;
    case Color::Green: return Corner::Right;
    case Color::Red: return Corner::Top;
  }
  return Corner::Top;
}

std::string vs(Vertex v) { return std::to_string(v); }
std::string ps(const Point& p) { return "(" + format_rational(p.x) + ", " + format_rational(p.y) + ")"; }

// Closed half-plane functions of a triangle: all three are >= 0 exactly on it.
Rational side_value(const RightTriangle& t, Side s, const Point& p) {
  switch (s) {
    case Side::Horizontal: return p.y - t.yb;
    case Side::Vertical: return t.xr - p.x;
    case Side::Diagonal: return (p.x - t.xl) * (t.yt - t.yb) - (p.y - t.yb) * (t.xr - t.xl);
  }
  return 0;
}

constexpr std::array<Side, 3> kSides{Side::Horizontal, Side::Vertical, Side::Diagonal};
constexpr std::array<Corner, 3> kCorners{Corner::Left, Corner::Right, Corner::Top};

struct Where {
  enum Kind { Outside, Interior, OnSide, AtCorner } kind = Outside;
  Side side = Side::Horizontal;
  Corner corner = Corner::Left;
};

Where locate(const RightTriangle& t, const Point& p) {
  bool zero[3];
  for (int i = 0; i < 3; ++i) {
    const Rational v = side_value(t, kSides[i], p);
    if (v < 0) return {};
    zero[i] = v == 0;
  }
  const int zeros = zero[0] + zero[1] + zero[2];
  if (zeros == 0) return {Where::Interior};
  if (zeros == 1) {
    Where w{Where::OnSide};
    w.side = zero[0] ? Side::Horizontal : zero[1] ? Side::Vertical : Side::Diagonal;
    return w;
  }
  Where w{Where::AtCorner};
  w.corner = zero[0] && zero[1] ? Corner::Right : zero[1] && zero[2] ? Corner::Top : Corner::Left;
  return w;
}

bool corner_on_side(Corner c, Side s) {
  switch (c) {
    case Corner::Left: return s == Side::Horizontal || s == Side::Diagonal;
    case Corner::Right: return s == Side::Horizontal || s == Side::Vertical;
    case Corner::Top: return s == Side::Vertical || s == Side::Diagonal;
  }
  return false;
}

bool point_on_side(const RightTriangle& t, Side s, const Point& p) {
  const Where w = locate(t, p);
  if (w.kind == Where::OnSide) return w.side == s;
  if (w.kind == Where::AtCorner) return corner_on_side(w.corner, s);
  return false;
}

// Exact intersection of two closed triangles.
struct PairGeometry {
  enum Kind { Disjoint, PointTouch, SegmentTouch, AreaOverlap } kind = Disjoint;
  Point point;
};

// Clips a against b; only reached for pairs whose interiors overlap.
PairGeometry clip_overlap(const RightTriangle& a, const RightTriangle& b) {
  std::vector<Point> poly{a.left(), a.right(), a.top()};
  for (Side s : kSides) {
    std::vector<Point> next;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Point& p = poly[i];
      const Point& q = poly[(i + 1) % poly.size()];
      const Rational fp = side_value(b, s, p);
      const Rational fq = side_value(b, s, q);
      if (fp >= 0) next.push_back(p);
      if ((fp > 0 && fq < 0) || (fp < 0 && fq > 0)) {
        const Rational t = fp / (fp - fq);
        next.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
      }
    }
    poly = std::move(next);
    if (poly.empty()) return {};
  }
  return {PairGeometry::AreaOverlap, poly[0]};
}

// Separating axis test over the edge normals of both triangles. A zero-width
// overlap on some axis means the triangles only touch along the line where
// that axis is constant, and the contact is read off that line.
PairGeometry intersect(const RightTriangle& a, const RightTriangle& b) {
  if (a.xr < b.xl || b.xr < a.xl || a.yt < b.yb || b.yt < a.yb) return {};
  const std::array<Point, 3> pa{a.left(), a.right(), a.top()}, pb{b.left(), b.right(), b.top()};
  const std::array<Point, 4> axes{Point{1, 0}, Point{0, 1}, Point{a.yt - a.yb, a.xl - a.xr},
                                  Point{b.yt - b.yb, b.xl - b.xr}};
  auto dot = [](const Point& n, const Point& p) -> Rational { return n.x * p.x + n.y * p.y; };
  for (std::size_t k = 0; k < axes.size(); ++k) {
    const Point& n = axes[k];
    auto proj = [&](const Point& p) -> Rational { return k == 0 ? p.x : k == 1 ? p.y : dot(n, p); };
    std::array<Rational, 3> va, vb;
    for (int i = 0; i < 3; ++i) {
      va[i] = proj(pa[i]);
      vb[i] = proj(pb[i]);
    }
    const Rational lo = std::max(*std::min_element(va.begin(), va.end()), *std::min_element(vb.begin(), vb.end()));
    const Rational hi = std::min(*std::max_element(va.begin(), va.end()), *std::max_element(vb.begin(), vb.end()));
    if (hi < lo) return {};
    if (hi > lo) continue;
    // Both triangles meet the line n . p = lo in a vertex or an edge.
    const Point d{-n.y, n.x};
    std::vector<Point> on;
    Rational a_lo, a_hi, b_lo, b_hi;
    bool a_seen = false, b_seen = false;
    for (int i = 0; i < 3; ++i) {
      if (va[i] == lo) {
        const Rational s = dot(d, pa[i]);
        if (!a_seen || s < a_lo) a_lo = s;
        if (!a_seen || s > a_hi) a_hi = s;
        a_seen = true;
        on.push_back(pa[i]);
      }
      if (vb[i] == lo) {
        const Rational s = dot(d, pb[i]);
        if (!b_seen || s < b_lo) b_lo = s;
        if (!b_seen || s > b_hi) b_hi = s;
        b_seen = true;
        on.push_back(pb[i]);
      }
    }
    const Rational s_lo = std::max(a_lo, b_lo), s_hi = std::min(a_hi, b_hi);
    if (s_hi < s_lo) return {};
    std::vector<Point> ends;
    for (const Point& p : on) {
      const Rational s = dot(d, p);
      if (s == s_lo || s == s_hi) ends.push_back(p);
    }
    const Point first = *std::min_element(ends.begin(), ends.end());
    return {s_lo == s_hi ? PairGeometry::PointTouch : PairGeometry::SegmentTouch, first};
  }
  return clip_overlap(a, b);
}

struct Finding {
  ErrorKind kind;
  Diagnostic diag;
};

struct Touch {
  Vertex u = -1, w = -1;
  Point point;
  Where at_u, at_w;
};

struct Analysis {
  ContactMap map;
  std::vector<Finding> findings;
  std::vector<Touch> touches;
};

// Reads a corner-to-corner touch as a compatible corner-side pair if possible.
std::optional<Contact> corner_corner_reading(const Touch& t) {
  if (corner_on_side(t.at_w.corner, compatible_side(t.at_u.corner))) {
    return Contact{t.u, t.at_u.corner, t.w, compatible_side(t.at_u.corner), t.point};
  }
  if (corner_on_side(t.at_u.corner, compatible_side(t.at_w.corner))) {
    return Contact{t.w, t.at_w.corner, t.u, compatible_side(t.at_w.corner), t.point};
  }
  return std::nullopt;
}

std::optional<Contact> corner_side_reading(const Touch& t) {
  if (t.at_u.kind == Where::AtCorner && t.at_w.kind == Where::OnSide &&
      compatible_side(t.at_u.corner) == t.at_w.side) {
    return Contact{t.u, t.at_u.corner, t.w, t.at_w.side, t.point};
  }
  if (t.at_w.kind == Where::AtCorner && t.at_u.kind == Where::OnSide &&
      compatible_side(t.at_w.corner) == t.at_u.side) {
    return Contact{t.w, t.at_w.corner, t.u, t.at_u.side, t.point};
  }
  return std::nullopt;
}

// Exact comparison of counter-clockwise angles measured from `ref`.
bool angle_less(const Point& ref, const Point& a, const Point& b) {
  auto cross = [](const Point& p, const Point& q) -> Rational { return p.x * q.y - p.y * q.x; };
  auto dot = [](const Point& p, const Point& q) -> Rational { return p.x * q.x + p.y * q.y; };
  auto half = [&](const Point& v) {
    const Rational c = cross(ref, v);
    return (c > 0 || (c == 0 && dot(ref, v) > 0)) ? 0 : 1;
  };
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

// Position of p along the counter-clockwise boundary of t in [0, 3).
Rational boundary_param(const RightTriangle& t, const Point& p) {
  const Where w = locate(t, p);
  if (w.kind == Where::AtCorner) return w.corner == Corner::Left ? 0 : w.corner == Corner::Right ? 1 : 2;
  switch (w.side) {
    case Side::Horizontal: return (p.x - t.xl) / (t.xr - t.xl);
    case Side::Vertical: return 1 + (p.y - t.yb) / (t.yt - t.yb);
    case Side::Diagonal: return 2 + (t.xr - p.x) / (t.xr - t.xl);
  }
  return 0;
}

Point reverse_incoming(const RightTriangle& t, Corner c) {
  switch (c) {
    case Corner::Left: return {t.xr - t.xl, t.yt - t.yb};
    case Corner::Right: return {-1, 0};
    case Corner::Top: return {0, -1};
  }
  return {1, 0};
}

Point centroid(const RightTriangle& t) { return {(t.xl + 2 * t.xr) / 3, (2 * t.yb + t.yt) / 3}; }

void check_embedding(const RTRepresentation& r, const Analysis& an, std::vector<Finding>& out) {
  const auto& g = *r.graph;
  std::vector<std::vector<std::pair<Vertex, Point>>> around(g.n());
  for (const auto& t : an.touches) {
    around[t.u].push_back({t.w, t.point});
    around[t.w].push_back({t.u, t.point});
  }
  for (Vertex u = 0; u < g.n(); ++u) {
    const RightTriangle& tu = r[u];
    auto& list = around[u];
    std::vector<Rational> param(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) param[i] = boundary_param(tu, list[i].second);
    std::vector<std::size_t> idx(list.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
      if (param[i] != param[j]) return param[i] < param[j];
      const Where w = locate(tu, list[i].second);
      const Point ref = reverse_incoming(tu, w.corner);
      const Point& p = list[i].second;
      const Point ci = centroid(r[list[i].first]);
      const Point cj = centroid(r[list[j].first]);
      return angle_less(ref, {ci.x - p.x, ci.y - p.y}, {cj.x - p.x, cj.y - p.y});
    });
    std::vector<Vertex> seq;
    for (std::size_t i : idx) seq.push_back(list[i].first);
    const auto& rot = g.rotation(u);
    bool same = seq.size() == rot.size();
    if (same && !seq.empty()) {
      const int shift = g.position(u, seq[0]);
      for (std::size_t i = 0; same && i < seq.size(); ++i) same = rot[(shift + i) % rot.size()] == seq[i];
    }
    if (!same) {
      out.push_back({ErrorKind::ValidationError,
                     {"embedding", "contacts around vertex " + vs(u) + " do not follow its rotation"}});
    }
  }
}

Analysis analyze(const RTRepresentation& r, bool embedding) {
  Analysis an;
  const auto& g = *r.graph;
  const int n = g.n();
  if (static_cast<int>(r.triangles.size()) != n) {
    an.findings.push_back({ErrorKind::ValidationError,
                           {"size", "expected " + vs(n) + " triangles, got " + vs(static_cast<int>(r.triangles.size()))}});
    return an;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!r[v].well_formed()) {
      an.findings.push_back({ErrorKind::ValidationError, {"bad_triangle", "triangle " + vs(v) + " has a non-positive side"}});
    }
  }
  if (!an.findings.empty()) return an;

  std::vector<Vertex> by_x(n);
  std::iota(by_x.begin(), by_x.end(), 0);
  std::sort(by_x.begin(), by_x.end(), [&](Vertex a, Vertex b) { return r[a].xl < r[b].xl; });
  std::set<std::pair<Vertex, Vertex>> touching;
  for (int i = 0; i < n; ++i) {
    const Vertex a = by_x[i];
    for (int j = i + 1; j < n && r[by_x[j]].xl <= r[a].xr; ++j) {
      const Vertex b = by_x[j];
      const auto geo = intersect(r[a], r[b]);
      if (geo.kind == PairGeometry::Disjoint) continue;
      const Vertex u = std::min(a, b), w = std::max(a, b);
      if (geo.kind == PairGeometry::AreaOverlap) {
        an.findings.push_back({ErrorKind::Overlap, {"overlap", "triangles " + vs(u) + " and " + vs(w) + " overlap"}});
        continue;
      }
      if (geo.kind == PairGeometry::SegmentTouch) {
        an.findings.push_back({ErrorKind::Overlap, {"segment_contact", "triangles " + vs(u) + " and " + vs(w) +
                                                                           " share a segment"}});
        continue;
      }
      touching.insert({u, w});
      if (!g.adjacent(u, w)) {
        an.findings.push_back({ErrorKind::StrayContact, {"stray_contact", "non-adjacent " + vs(u) + " and " + vs(w) +
                                                                              " touch at " + ps(geo.point)}});
        continue;
      }
      an.touches.push_back({u, w, geo.point, locate(r[u], geo.point), locate(r[w], geo.point)});
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, w] = g.edge(e);
    if (!touching.contains({u, w})) {
      an.findings.push_back({ErrorKind::MissingContact, {"missing_contact", "adjacent " + vs(u) + " and " + vs(w) +
                                                                                " do not touch"}});
    }
  }

  std::map<Point, std::vector<std::size_t>> at_point;
  for (std::size_t i = 0; i < an.touches.size(); ++i) at_point[an.touches[i].point].push_back(i);
  for (const auto& [p, ids] : at_point) {
    std::map<Vertex, Where> who;
    for (std::size_t i : ids) {
      who[an.touches[i].u] = an.touches[i].at_u;
      who[an.touches[i].w] = an.touches[i].at_w;
    }
    if (ids.size() == 1 && who.size() == 2) {
      const Touch& t = an.touches[ids[0]];
      std::optional<Contact> c;
      if (t.at_u.kind == Where::AtCorner && t.at_w.kind == Where::AtCorner) {
        if (!(g.is_outer(t.u) && g.is_outer(t.w))) {
          an.findings.push_back({ErrorKind::ValidationError, {"corner_coincidence", "corners of " + vs(t.u) + " and " +
                                                                                          vs(t.w) + " coincide at " + ps(p)}});
          continue;
        }
        c = corner_corner_reading(t);
      } else {
        c = corner_side_reading(t);
      }
      if (!c) {
        an.findings.push_back({ErrorKind::ValidationError, {"incompatible_contact", "contact of " + vs(t.u) + " and " +
                                                                                          vs(t.w) + " at " + ps(p) +
                                                                                          " is not a compatible corner-side pair"}});
        continue;
      }
      an.map.by_edge[{t.u, t.w}] = *c;
      continue;
    }
    if (ids.size() == 3 && who.size() == 3) {
      DegeneratePoint d{p};
      bool ok = true;
      for (const auto& [v, w] : who) {
        if (w.kind != Where::AtCorner) {
          ok = false;
          break;
        }
        Vertex& slot = w.corner == Corner::Top ? d.top_owner : w.corner == Corner::Left ? d.left_owner : d.right_owner;
        if (slot >= 0) ok = false;
        slot = v;
      }
      ok = ok && d.top_owner >= 0 && d.left_owner >= 0 && d.right_owner >= 0;
      if (ok) {
        const Triangle3 f = d.face();
        const int ci = g.cycle_index(f);
        const bool outer_face = f == Triangle3(g.outer()[0], g.outer()[1], g.outer()[2]);
        ok = ci >= 0 && g.cycles()[ci].is_face && !outer_face;
      }
      if (!ok) {
        an.findings.push_back({ErrorKind::ValidationError, {"crowded_point", "three triangles meet at " + ps(p) +
                                                                                  " without forming a degenerate face"}});
        continue;
      }
      const Vertex a = d.top_owner, b = d.left_owner, c = d.right_owner;
      an.map.by_edge[{std::min(a, b), std::max(a, b)}] = {a, Corner::Top, b, Side::Horizontal, p};
      an.map.by_edge[{std::min(b, c), std::max(b, c)}] = {b, Corner::Left, c, Side::Vertical, p};
      an.map.by_edge[{std::min(c, a), std::max(c, a)}] = {c, Corner::Right, a, Side::Diagonal, p};
      an.map.degenerate.push_back(d);
      continue;
    }
    an.findings.push_back({ErrorKind::ValidationError, {"crowded_point", vs(static_cast<int>(who.size())) +
                                                                              " triangles meet at " + ps(p)}});
  }

  if (!an.findings.empty()) return an;

  // The outer vertices must bound the drawing.
  Vertex top = 0, bottom = 0, left = 0, right = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (r[v].yt > r[top].yt) top = v;
    if (r[v].yb < r[bottom].yb) bottom = v;
    if (r[v].xl < r[left].xl) left = v;
    if (r[v].xr > r[right].xr) right = v;
  }
  for (Vertex v : {top, bottom, left, right}) {
    if (!g.is_outer(v)) {
      an.findings.push_back({ErrorKind::ValidationError, {"outer_face", "inner vertex " + vs(v) +
                                                                            " reaches the boundary of the drawing"}});
      break;
    }
  }
  Vertex topmost = 0;
  int ties = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (r[v].yb > r[topmost].yb) {
      topmost = v;
      ties = 0;
    } else if (r[v].yb == r[topmost].yb) {
      ++ties;
    }
  }
  if (ties > 0 || !g.is_outer(topmost)) {
    an.findings.push_back({ErrorKind::ValidationError,
                           {"topmost", "the highest horizontal side must belong to a single outer vertex"}});
  }
  if (embedding && an.findings.empty()) check_embedding(r, an, an.findings);
  return an;
}

[[noreturn]] void raise(const std::vector<Finding>& findings) {
  Diagnostics d;
  for (const auto& f : findings) d.push_back(f.diag);
  throw Error(findings.front().kind, findings.front().diag.message, d);
}

}  // namespace

bool RTRepresentation::operator==(const RTRepresentation& o) const {
  return triangles == o.triangles && graph->same_embedding(*o.graph);
}

ContactMap contacts(const RTRepresentation& r) {
  Analysis an = analyze(r, false);
  if (!an.findings.empty()) raise(an.findings);
  return std::move(an.map);
}

Diagnostics validate_rt(const RTRepresentation& r) {
  const Analysis an = analyze(r, true);
  Diagnostics d;
  for (const auto& f : an.findings) d.push_back(f.diag);
  return d;
}

Roots roots_of(const RTRepresentation& r) {
  Vertex top = 0;
  for (Vertex v = 1; v < r.graph->n(); ++v) {
    if (r[v].yb > r[top].yb) top = v;
  }
  return roots_for(*r.graph, top);
}

WoodSet::WoodSet(SchnyderWood base, std::vector<Triangle3> degenerate_faces)
    : base_(std::move(base)), faces_(std::move(degenerate_faces)) {
  std::sort(faces_.begin(), faces_.end());
}

SchnyderWood WoodSet::member(std::size_t mask) const {
  SchnyderWood w = base_;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (mask >> i & 1) w = flip(w, faces_[i]);
  }
  return w;
}

bool WoodSet::contains(const SchnyderWood& w) const {
  if (!(w.roots() == base_.roots()) || !w.graph().same_embedding(base_.graph())) return false;
  const auto& g = base_.graph();
  const EdgeDirections a = base_.directions(), b = w.directions();
  std::size_t mask = 0;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    const auto& c = g.cycles()[g.cycle_index(faces_[i])];
    int diff = 0;
    for (int e : c.edges) diff += a[e] != b[e];
    if (diff == 3) {
      mask |= std::size_t{1} << i;
    } else if (diff != 0) {
      return false;
    }
  }
  return member(mask) == w;
}

namespace {

WoodSet wood_set_of(const RTRepresentation& r, const ContactMap& cm) {
  const auto& g = *r.graph;
  std::vector<SchnyderWood::OutEdges> out(g.n(), SchnyderWood::OutEdges{-1, -1, -1});
  for (const auto& [key, c] : cm.by_edge) {
    if (g.is_outer(key.first) && g.is_outer(key.second)) continue;
    out[c.corner_owner][idx(corner_color(c.corner))] = c.side_owner;
  }
  SchnyderWood base(r.graph, roots_of(r), std::move(out));
  const Diagnostics d = validate_wood(base);
  if (!d.empty()) throw Error(ErrorKind::ValidationError, "contacts do not induce a Schnyder wood", d);
  std::vector<Triangle3> faces;
  for (const auto& p : cm.degenerate) faces.push_back(p.face());
  return WoodSet(std::move(base), std::move(faces));
}

}  // namespace

WoodSet extract_wood_set(const RTRepresentation& r) { return wood_set_of(r, contacts(r)); }

Labeling labeling_from_rep(const RTRepresentation& r, const SchnyderWood& w) {
  if (!extract_wood_set(r).contains(w)) {
    throw Error(ErrorKind::WoodMismatch, "the wood is not represented by this representation");
  }
  Labeling tau(r.graph->n());
  for (Vertex v = 0; v < r.graph->n(); ++v) tau[v] = r[v].yb;
  return tau;
}

Diagnostics validate_adt(const Labeling& tau, const SchnyderWood& w) {
  Diagnostics d;
  const auto& g = w.graph();
  if (static_cast<int>(tau.size()) != g.n()) {
    d.push_back({"size", "labeling has " + vs(static_cast<int>(tau.size())) + " entries for " + vs(g.n()) + " vertices"});
    return d;
  }
  std::set<std::pair<Triangle3, Turn>> oriented;
  for (const auto& t : oriented_triangles(w, TriangleScope::FacesOnly)) oriented.insert({t.triangle, t.turn});
  auto in_oriented_face = [&](Vertex a, Vertex b, Turn turn) {
    for (Vertex apex : {g.left_apex(a, b), g.left_apex(b, a)}) {
      if (oriented.contains({Triangle3(a, b, apex), turn})) return true;
    }
    return false;
  };
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.is_outer(v)) continue;
    for (Color c : kColors) {
      const Vertex p = w.parent(v, c);
      // DAG_r keeps red edges and reverses green and blue ones.
      const Vertex from = c == Color::Red ? v : p;
      const Vertex to = c == Color::Red ? p : v;
      const std::string edge = vs(from) + "->" + vs(to) + " (" + std::string(to_string(c)) + ")";
      if (tau[from] > tau[to]) {
        d.push_back({"cond1", "tau decreases along " + edge});
      } else if (tau[from] == tau[to]) {
        const bool allowed = (c == Color::Green && in_oriented_face(v, p, Turn::Clockwise)) ||
                             (c == Color::Blue && in_oriented_face(v, p, Turn::CounterClockwise));
        if (!allowed) d.push_back({"cond2", "tau is constant along " + edge});
      }
    }
    const Vertex vb = w.parent(v, Color::Blue), vg = w.parent(v, Color::Green);
    if (tau[vb] == tau[v] && tau[v] == tau[vg]) {
      const Vertex u1 = g.left_apex(vg, v);
      const Vertex u2 = g.left_apex(v, vb);
      if (u1 == u2) d.push_back({"cond3", "vertex " + vs(v) + " is level with v_b and v_g around a single face"});
    }
  }
  return d;
}

OuterFrame canonical_frame(int n) {
  const Rational m = n - 2;
  OuterFrame f;
  f.blue = {-1, 0, 0, m};
  f.green = {0, m, 0, m};
  f.red = {0, m, m, m + 1};
  return f;
}

OuterFrame frame_of(const RTRepresentation& r, const Roots& roots) {
  return {r[roots.red], r[roots.green], r[roots.blue]};
}

RTRepresentation construct_rt(const SchnyderWood& w, const Labeling& tau, const OuterFrame& frame) {
  const auto& g = w.graph();
  const Roots& roots = w.roots();
  if (static_cast<int>(tau.size()) != g.n()) throw Error(ErrorKind::BadLabeling, "labeling size mismatch");
  const Diagnostics d = validate_adt(tau, w);
  if (!d.empty()) throw Error(ErrorKind::BadLabeling, "not an ADT-labeling of DAG_r", d);

  for (Color c : kColors) {
    const RightTriangle& t = frame.of(c);
    if (!t.well_formed()) throw Error(ErrorKind::BadFrame, "outer triangle has a non-positive side");
    if (t.yb != tau[roots.of(c)]) {
      throw Error(ErrorKind::BadFrame, "horizontal side of outer vertex " + vs(roots.of(c)) + " is not at its label");
    }
  }
  for (auto [a, b] : {std::pair{Color::Blue, Color::Green}, {Color::Blue, Color::Red}, {Color::Green, Color::Red}}) {
    const auto geo = intersect(frame.of(a), frame.of(b));
    bool ok = geo.kind == PairGeometry::PointTouch;
    if (ok) {
      const Touch t{0, 1, geo.point, locate(frame.of(a), geo.point), locate(frame.of(b), geo.point)};
      ok = (t.at_u.kind == Where::AtCorner && t.at_w.kind == Where::AtCorner) ? corner_corner_reading(t).has_value()
                                                                                : corner_side_reading(t).has_value();
    }
    if (!ok) {
      throw Error(ErrorKind::BadFrame, "outer triangles " + std::string(to_string(a)) + " and " +
                                           std::string(to_string(b)) + " do not touch in a compatible point");
    }
  }

  RTRepresentation r{w.graph_ptr(), std::vector<RightTriangle>(g.n())};
  for (Color c : kColors) r.triangles[roots.of(c)] = frame.of(c);
  for (Vertex v : topological_order(derived_dag(w, Color::Red))) {
    if (g.is_outer(v)) continue;
    const RightTriangle& tb = r[w.parent(v, Color::Blue)];
    const RightTriangle& tg = r[w.parent(v, Color::Green)];
    RightTriangle t;
    t.yb = tau[v];
    t.yt = tau[w.parent(v, Color::Red)];
    t.xl = tb.xr;
    const Rational lambda = (tau[v] - tg.yb) / (tg.yt - tg.yb);
    if (lambda < 0 || lambda > 1) {
      throw Error(ErrorKind::InternalInvariant, "right corner of " + vs(v) + " falls off the diagonal of its green parent");
    }
    t.xr = tg.xl + lambda * (tg.xr - tg.xl);
    if (!t.well_formed()) throw Error(ErrorKind::InternalInvariant, "triangle " + vs(v) + " has a non-positive side");
    r.triangles[v] = t;
  }
  return r;
}

namespace {

// Decides, for a corner known to lie on a side in both drawings, which of the
// two sufficient conditions holds.
std::optional<MorphCase> contact_case(const RightTriangle& sa, const RightTriangle& sb, Side side, const Point& pa,
                                      const Point& pb) {
  if (side != Side::Diagonal) return MorphCase::Parallel;
  const Rational wa = sa.xr - sa.xl, ha = sa.yt - sa.yb;
  const Rational wb = sb.xr - sb.xl, hb = sb.yt - sb.yb;
  if (wa * hb == wb * ha) return MorphCase::Parallel;
  if ((pa.x - sa.xl) / wa == (pb.x - sb.xl) / wb) return MorphCase::SameRatio;
  return std::nullopt;
}

// Finds subsets of the degenerate faces of two wood sets that give the same
// orientation: one parity equation per inner edge.
std::optional<SchnyderWood> intersect_wood_sets(const WoodSet& a, const WoodSet& b) {
  const auto& g = a.base().graph();
  if (!(a.base().roots() == b.base().roots())) return std::nullopt;
  const int fa = static_cast<int>(a.degenerate_faces().size());
  const int fb = static_cast<int>(b.degenerate_faces().size());
  const int zero = fa + fb;
  std::vector<int> parent(zero + 1), parity(zero + 1, 0);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](auto&& self, int x) -> std::pair<int, int> {
    if (parent[x] == x) return {x, 0};
    auto [root, p] = self(self, parent[x]);
    parent[x] = root;
    parity[x] ^= p;
    return {root, parity[x]};
  };
  std::vector<int> var_a(g.edge_count(), zero), var_b(g.edge_count(), zero);
  for (int i = 0; i < fa; ++i) {
    for (int e : g.cycles()[g.cycle_index(a.degenerate_faces()[i])].edges) var_a[e] = i;
  }
  for (int i = 0; i < fb; ++i) {
    for (int e : g.cycles()[g.cycle_index(b.degenerate_faces()[i])].edges) var_b[e] = fa + i;
  }
  const EdgeDirections da = a.base().directions(), db = b.base().directions();
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_outer_edge(e)) continue;
    const int want = da[e] != db[e];
    auto [ra, pa] = find(find, var_a[e]);
    auto [rb, pb] = find(find, var_b[e]);
    if (ra == rb) {
      if ((pa ^ pb) != want) return std::nullopt;
    } else {
      parent[ra] = rb;
      parity[ra] = pa ^ pb ^ want;
    }
  }
  std::size_t mask = 0;
  for (int i = 0; i < fa; ++i) {
    auto [ri, pi] = find(find, i);
    auto [rz, pz] = find(find, zero);
    // Components without the zero node are solved with their root unflipped.
    const int bit = ri == rz ? (pi ^ pz) : pi;
    if (bit) mask |= std::size_t{1} << i;
  }
  SchnyderWood w = a.member(mask);
  if (!b.contains(w)) throw Error(ErrorKind::InternalInvariant, "wood set intersection is inconsistent");
  return w;
}

}  // namespace

LinearMorphCheck is_linear_morph(const RTRepresentation& a, const RTRepresentation& b) {
  if (!a.graph->same_embedding(*b.graph)) throw Error(ErrorKind::GraphMismatch, "representations of different graphs");
  LinearMorphCheck res;
  const auto& g = *a.graph;
  const Analysis an_a = analyze(a, true), an_b = analyze(b, true);
  if (!an_a.findings.empty() || !an_b.findings.empty()) {
    res.reason = "an endpoint is not a valid representation";
    return res;
  }
  const WoodSet wa = wood_set_of(a, an_a.map), wb = wood_set_of(b, an_b.map);
  auto common = intersect_wood_sets(wa, wb);
  if (!common) {
    res.reason = "the wood sets are disjoint";
    return res;
  }
  for (Vertex x = 0; x < g.n(); ++x) {
    if (g.is_outer(x)) continue;
    for (Color c : kColors) {
      const Vertex y = common->parent(x, c);
      const Corner corner = corner_of_color(c);
      const Side side = compatible_side(corner);
      auto how = contact_case(a[y], b[y], side, a[x].corner(corner), b[x].corner(corner));
      if (!how) {
        res.reason = std::string(to_string(corner)) + " corner of " + vs(x) + " moves along the diagonal of " + vs(y) +
                     " with a changing ratio";
        return res;
      }
      res.certificate.push_back({x, corner, y, side, *how});
    }
  }
  const auto& o = g.outer();
  for (int i = 0; i < 3; ++i) {
    const Vertex u = o[i], w = o[(i + 1) % 3];
    bool found = false;
    for (auto [p, q] : {std::pair{u, w}, {w, u}}) {
      for (Corner corner : kCorners) {
        const Side side = compatible_side(corner);
        const Point pa = a[p].corner(corner), pb = b[p].corner(corner);
        if (!point_on_side(a[q], side, pa) || !point_on_side(b[q], side, pb)) continue;
        if (auto how = contact_case(a[q], b[q], side, pa, pb)) {
          res.certificate.push_back({p, corner, q, side, *how});
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      res.reason = "outer contact " + vs(u) + "-" + vs(w) + " is not preserved";
      res.certificate.clear();
      return res;
    }
  }
  res.ok = true;
  res.common_wood = std::move(common);
  return res;
}

RTRepresentation interpolate(const RTRepresentation& a, const RTRepresentation& b, const Rational& param) {
  if (a.triangles.size() != b.triangles.size()) throw Error(ErrorKind::GraphMismatch, "size mismatch");
  RTRepresentation r{a.graph, a.triangles};
  Rational t = param;
  t.canonicalize();
  const Rational s = 1 - t;
  for (std::size_t v = 0; v < a.triangles.size(); ++v) {
    auto& x = r.triangles[v];
    const auto& p = a.triangles[v];
    const auto& q = b.triangles[v];
    x.xl = s * p.xl + t * q.xl;
    x.xr = s * p.xr + t * q.xr;
    x.yb = s * p.yb + t * q.yb;
    x.yt = s * p.yt + t * q.yt;
  }
  return r;
}

}  // namespace rtmorph
