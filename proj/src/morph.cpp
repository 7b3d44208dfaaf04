#include "rtmorph/morph.hpp"

#include <algorithm>

namespace rtmorph {

namespace {

std::string vs(Vertex v) { return std::to_string(v); }

Rational top_of(const Labeling& tau, const SchnyderWood& w, Vertex v, const std::optional<Rational>& green_root_top) {
  const Roots& roots = w.roots();
  if (v == roots.green) return green_root_top.value_or(tau[roots.red]);
  if (v == roots.blue) return tau[roots.red];
  if (v == roots.red) throw Error(ErrorKind::InternalInvariant, "top of X_r is not a label");
  return tau[w.parent(v, Color::Red)];
}

// Right corners on the diagonal of w, from its left end to its top end.
std::vector<Vertex> diagonal_occupants(const SchnyderWood& wood, Vertex w) {
  const auto& g = wood.graph();
  const Roots& roots = wood.roots();
  Vertex start, stop;
  if (w == roots.green) {
    start = roots.red;
    stop = roots.blue;
  } else {
    start = wood.parent(w, Color::Red);
    stop = wood.parent(w, Color::Blue);
  }
  std::vector<Vertex> res;
  for (Vertex u = g.ccw_next(w, start); u != stop; u = g.ccw_next(w, u)) {
    if (wood.parent(u, Color::Green) == w) res.push_back(u);
  }
  std::reverse(res.begin(), res.end());
  return res;
}

Labeling labels_of(const RTRepresentation& r) {
  Labeling tau(r.graph->n());
  for (Vertex v = 0; v < r.graph->n(); ++v) tau[v] = r[v].yb;
  return tau;
}

void require_valid(const RTRepresentation& r, const char* what) {
  const Diagnostics d = validate_rt(r);
  if (!d.empty()) throw Error(ErrorKind::ValidationError, std::string(what) + " is not a valid RT-representation", d);
}

}  // namespace

Rational lambda_ratio(const Labeling& tau, const SchnyderWood& w, Vertex v,
                      const std::optional<Rational>& green_root_top) {
  const Roots& roots = w.roots();
  if (v == roots.green) throw Error(ErrorKind::Undefined, "X_g has no green parent");
  const Vertex p = w.is_inner(v) ? w.parent(v, Color::Green) : roots.green;
  const Rational top = top_of(tau, w, p, green_root_top);
  if (top == tau[p]) throw Error(ErrorKind::Undefined, "diagonal of " + vs(p) + " has zero height");
  return (tau[v] - tau[p]) / (top - tau[p]);
}

bool respects_order(const Labeling& tau, const SchnyderWood& wood, Vertex x, const Rational& y,
                    const std::optional<Rational>& green_root_top) {
  if (!wood.is_inner(x)) return false;
  const Vertex w = wood.parent(x, Color::Green);
  const std::vector<Vertex> occ = diagonal_occupants(wood, w);
  const auto it = std::find(occ.begin(), occ.end(), x);
  if (it == occ.end()) return false;
  const std::size_t i = static_cast<std::size_t>(it - occ.begin());
  const std::size_t last = occ.size() - 1;

  if (i == 0) {
    if (y < tau[w]) return false;
    if (y == tau[w]) {
      // Touching the left end is fine unless left(x) then sits on the vertical
      // side that also carries left(w).
      if (w == wood.roots().green) return false;
      if (wood.parent(x, Color::Blue) == wood.parent(w, Color::Blue)) return false;
    }
  } else if (!(tau[occ[i - 1]] < y)) {
    return false;
  }

  if (i == last) {
    if (y > top_of(tau, wood, w, green_root_top)) return false;
    if (!(y < tau[wood.parent(x, Color::Red)])) return false;
  } else if (!(y < tau[occ[i + 1]])) {
    return false;
  }
  return true;
}

Labeling adjust(const Labeling& tau, const SchnyderWood& wood, Vertex x, const Rational& y,
                const std::optional<Rational>& green_root_top) {
  const auto& g = wood.graph();
  const int n = g.n();
  if (static_cast<int>(tau.size()) != n) throw Error(ErrorKind::OrderViolation, "labeling size mismatch");
  if (!respects_order(tau, wood, x, y, green_root_top)) {
    throw Error(ErrorKind::OrderViolation, "moving " + vs(x) + " to " + format_rational(y) +
                                               " breaks the order along the diagonal of its green parent");
  }
  std::vector<std::vector<Vertex>> red_in(n), green_in(n);
  std::vector<Rational> lambda(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!wood.is_inner(v)) continue;
    red_in[wood.parent(v, Color::Red)].push_back(v);
    green_in[wood.parent(v, Color::Green)].push_back(v);
    lambda[v] = lambda_ratio(tau, wood, v, green_root_top);
  }

  Labeling t = tau;
  t[x] = y;
  std::vector<char> red(n, 0), green(n, 0);
  std::vector<Vertex> stack;
  // The first pass marks every vertex whose label depends on x. The second one
  // recomputes them; a vertex is expanded only once both its green parent and
  // its red parent have been settled.
  for (int pass = 1; pass <= 2; ++pass) {
    stack.push_back(x);
    for (Vertex u : red_in[x]) {
      red[u] ^= 1;
      if (!green[u]) stack.push_back(u);
    }
    while (!stack.empty()) {
      const Vertex w = stack.back();
      stack.pop_back();
      for (Vertex v : green_in[w]) {
        if (pass == 2) t[v] = lambda[v] * (top_of(t, wood, w, green_root_top) - t[w]) + t[w];
        green[v] ^= 1;
        if (!red[v]) stack.push_back(v);
        for (Vertex u : red_in[v]) {
          red[u] ^= 1;
          if (!green[u]) stack.push_back(u);
        }
      }
    }
  }
  return t;
}

FlipMorph flip_morph(const RTRepresentation& r, const SchnyderWood& w, const Triangle3& face) {
  const auto& g = w.graph();
  const ContactMap cm = contacts(r);
  if (!cm.degenerate.empty()) throw Error(ErrorKind::Degenerate, "representation has a degenerate point");
  if (!extract_wood_set(r).contains(w)) throw Error(ErrorKind::WoodMismatch, "wood is not represented by r");
  std::optional<Turn> turn;
  if (g.is_face(face)) {
    for (const auto& t : oriented_triangles(w, TriangleScope::FacesOnly)) {
      if (t.triangle == face) turn = t.turn;
    }
  }
  if (!turn) throw Error(ErrorKind::NotOrientedFace, face.str() + " is not an oriented face");

  Roots on_cycle;  // C_r, C_g, C_b
  for (Vertex x : face.v) {
    for (Color c : kColors) {
      const Vertex p = w.parent(x, c);
      if (p >= 0 && p != x && face.contains(p)) {
        (c == Color::Red ? on_cycle.red : c == Color::Green ? on_cycle.green : on_cycle.blue) = x;
      }
    }
  }
  if (on_cycle.red < 0 || on_cycle.green < 0 || on_cycle.blue < 0) {
    throw Error(ErrorKind::InternalInvariant, "oriented face " + face.str() + " does not carry three colors");
  }

  const OuterFrame frame = frame_of(r, w.roots());
  const Rational gtop = frame.green.yt;
  const Labeling t1 = labels_of(r);
  const Vertex cg = on_cycle.green;
  const Labeling t2 = adjust(t1, w, cg, t1[on_cycle.blue], gtop);

  SchnyderWood flipped = flip(w, face);
  Rational bound;
  if (*turn == Turn::Clockwise) {
    bound = t2[on_cycle.red];
    for (Vertex u : w.in_neighbors(on_cycle.red, Color::Green)) bound = std::max(bound, t2[u]);
  } else {
    bound = t2[w.parent(on_cycle.blue, Color::Red)];
    for (Vertex u : w.in_neighbors(on_cycle.blue, Color::Green)) bound = std::min(bound, t2[u]);
  }
  const Rational y = midpoint(t2[cg], bound);
  if (!respects_order(t2, flipped, cg, y, gtop)) {
    throw Error(ErrorKind::InternalInvariant, "second flip step leaves the order along a diagonal");
  }
  const Labeling t3 = adjust(t2, flipped, cg, y, gtop);
  FlipMorph res{construct_rt(w, t2, frame), construct_rt(flipped, t3, frame), std::move(flipped)};
  return res;
}

std::vector<RTRepresentation> normalize_outer(const RTRepresentation& r, const SchnyderWood& w) {
  const int n = r.graph->n();
  const Roots& roots = w.roots();
  std::vector<RTRepresentation> out;
  auto emit = [&](RTRepresentation next) {
    const RTRepresentation& prev = out.empty() ? r : out.back();
    if (!(next == prev)) out.push_back(std::move(next));
  };

  // Step 1: cut the outer triangles back to the three lines that carry inner
  // contacts, so that they meet corner to corner.
  RTRepresentation cur = r;
  {
    const RightTriangle b = r[roots.blue], gr = r[roots.green], rd = r[roots.red];
    const Rational vx = b.xr;   // vertical(X_b)
    const Rational hy = rd.yb;  // horizontal(X_r)
    const Rational slope = (gr.yt - gr.yb) / (gr.xr - gr.xl);
    const Point p1{vx, gr.yb + slope * (vx - gr.xl)};
    const Point p2{vx, hy};
    const Point p3{gr.xl + (hy - gr.yb) / slope, hy};
    const Rational sb = (b.yt - b.yb) / (b.xr - b.xl);
    const Rational sr = (rd.yt - rd.yb) / (rd.xr - rd.xl);
    RightTriangle nb{p1.x - (p2.y - p1.y) / sb, p1.x, p1.y, p2.y};
    RightTriangle ng{p1.x, p3.x, p1.y, p3.y};
    RightTriangle nr{p2.x, p3.x, p2.y, p2.y + sr * (p3.x - p2.x)};
    cur.triangles[roots.blue] = nb;
    cur.triangles[roots.green] = ng;
    cur.triangles[roots.red] = nr;
    emit(cur);
  }
  // Step 2: axis-parallel scaling and translation onto the canonical corners.
  {
    const RightTriangle ng = cur[roots.green];
    const Rational m = n - 2;
    const Rational ax = m / (ng.xr - ng.xl), bx = -ax * ng.xl;
    const Rational ay = m / (ng.yt - ng.yb), by = -ay * ng.yb;
    for (auto& t : cur.triangles) {
      t.xl = ax * t.xl + bx;
      t.xr = ax * t.xr + bx;
      t.yb = ay * t.yb + by;
      t.yt = ay * t.yt + by;
    }
    emit(cur);
  }
  // Step 3: unit length for the two sides that touch nothing.
  {
    const OuterFrame f = canonical_frame(n);
    cur.triangles[roots.blue] = f.blue;
    cur.triangles[roots.red] = f.red;
    emit(cur);
  }
  return out;
}

std::optional<std::size_t> next_movable_index(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  if (p.size() != q.size()) throw Error(ErrorKind::SizeMismatch, "sequences differ in length");
  std::optional<std::size_t> pick;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] < q[i]) {
      pick = i;
      break;
    }
  }
  if (!pick) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] > q[i]) {
        pick = i;
        break;
      }
    }
  }
  if (!pick) return std::nullopt;
  const Rational lo = std::min(p[*pick], q[*pick]), hi = std::max(p[*pick], q[*pick]);
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j != *pick && lo <= p[j] && p[j] <= hi) {
      throw Error(ErrorKind::InternalInvariant, "no movable index: sequences are not strictly increasing");
    }
  }
  return pick;
}

std::string_view to_string(MorphEvent::Kind k) {
  switch (k) {
    case MorphEvent::Kind::OuterNormalization: return "outer_normalization";
    case MorphEvent::Kind::RatioMove: return "ratio_move";
    case MorphEvent::Kind::FlipStep: return "flip_step";
  }
  return "?";
}

void MorphPlan::push(RTRepresentation r, MorphEvent e) {
  if (!keyframes.empty() && keyframes.back() == r) return;
  if (keyframes.empty()) {
    keyframes.push_back(std::move(r));
    return;
  }
  keyframes.push_back(std::move(r));
  events.push_back(e);
}

void MorphPlan::append(const MorphPlan& other) {
  if (other.keyframes.empty()) return;
  if (keyframes.empty()) {
    *this = other;
    return;
  }
  if (!(keyframes.back() == other.keyframes.front())) {
    throw Error(ErrorKind::InternalInvariant, "appended plan does not start at the last keyframe");
  }
  for (std::size_t i = 0; i < other.events.size(); ++i) push(other.keyframes[i + 1], other.events[i]);
}

MorphPlan MorphPlan::reversed() const {
  MorphPlan res{{keyframes.rbegin(), keyframes.rend()}, {events.rbegin(), events.rend()}};
  return res;
}

Labeling canonical_labeling(const SchnyderWood& w) {
  const auto& g = w.graph();
  Labeling tau(g.n());
  tau[w.roots().blue] = 0;
  tau[w.roots().green] = 0;
  tau[w.roots().red] = g.n() - 2;
  int next = 1;
  for (Vertex v : topological_order(derived_dag(w, Color::Red))) {
    if (w.is_inner(v)) tau[v] = next++;
  }
  return tau;
}

MorphPlan forward_to(const RTRepresentation& r, const SchnyderWood& w, const Labeling& target) {
  const auto& g = w.graph();
  const int n = g.n();
  if (!extract_wood_set(r).contains(w)) throw Error(ErrorKind::WoodMismatch, "wood is not represented by r");
  const OuterFrame frame = canonical_frame(n);
  const Rational gtop = n - 2;

  MorphPlan plan;
  plan.push(r, MorphEvent::normalization());
  for (auto& k : normalize_outer(r, w)) plan.push(std::move(k), MorphEvent::normalization());

  std::vector<Rational> want(n);
  for (Vertex v = 0; v < n; ++v) {
    if (w.is_inner(v)) want[v] = lambda_ratio(target, w, v, gtop);
  }
  Labeling tau = labels_of(plan.keyframes.back());
  std::vector<Vertex> order = topological_order(derived_dag(w, Color::Blue));
  std::reverse(order.begin(), order.end());
  for (Vertex p : order) {
    if (p == w.roots().red || p == w.roots().blue) continue;
    const std::vector<Vertex> occ = diagonal_occupants(w, p);
    if (occ.empty()) continue;
    const Rational base = tau[p];
    const Rational top = top_of(tau, w, p, gtop);
    std::vector<Rational> cur, goal;
    for (Vertex v : occ) {
      cur.push_back(tau[v]);
      goal.push_back(base + want[v] * (top - base));
    }
    while (auto i = next_movable_index(cur, goal)) {
      const Vertex v = occ[*i];
      if (!respects_order(tau, w, v, goal[*i], gtop)) {
        throw Error(ErrorKind::InternalInvariant, "ratio move of " + vs(v) + " leaves the order along a diagonal");
      }
      tau = adjust(tau, w, v, goal[*i], gtop);
      cur[*i] = goal[*i];
      plan.push(construct_rt(w, tau, frame), MorphEvent::ratio_move(v));
    }
  }
  if (tau != target) throw Error(ErrorKind::InternalInvariant, "ratio moves did not reach the target labeling");
  return plan;
}

MorphPlan same_wood_morph(const RTRepresentation& a, const RTRepresentation& b, const SchnyderWood& w) {
  const Labeling target = canonical_labeling(w);
  MorphPlan plan = forward_to(a, w, target);
  plan.append(forward_to(b, w, target).reversed());
  return plan;
}

std::string_view to_string(MorphDecision::Reason r) {
  switch (r) {
    case MorphDecision::Reason::Ok: return "ok";
    case MorphDecision::Reason::GraphMismatch: return "graph_mismatch";
    case MorphDecision::Reason::TooSmall: return "too_small";
    case MorphDecision::Reason::TopmostDiffers: return "topmost_differs";
    case MorphDecision::Reason::SeparatingPotentialDiffers: return "separating_potential_differs";
  }
  return "?";
}

MorphDecision decide(const RTRepresentation& a, const RTRepresentation& b) {
  MorphDecision d;
  if (!a.graph->same_embedding(*b.graph)) {
    d.reason = MorphDecision::Reason::GraphMismatch;
    return d;
  }
  if (a.graph->n() < 4) {
    d.reason = MorphDecision::Reason::TooSmall;
    return d;
  }
  require_valid(a, "first input");
  require_valid(b, "second input");
  const Roots ra = roots_of(a), rb = roots_of(b);
  if (!(ra == rb)) {
    d.reason = MorphDecision::Reason::TopmostDiffers;
    d.witness = {ra.red, rb.red};
    return d;
  }
  const WoodSet wa = extract_wood_set(a), wb = extract_wood_set(b);
  if (auto t = separating_potential_witness(wa.base(), wb.base())) {
    d.reason = MorphDecision::Reason::SeparatingPotentialDiffers;
    d.witness.assign(t->v.begin(), t->v.end());
    return d;
  }
  d.possible = true;
  d.flip_count = static_cast<long>(facial_flip_sequence(wa.base(), wb.base()).size());
  return d;
}

MorphPlan full_morph(const RTRepresentation& a, const RTRepresentation& b) {
  const MorphDecision d = decide(a, b);
  if (!d.possible) throw Error(ErrorKind::NotMorphable, "no morph exists: " + std::string(to_string(d.reason)));
  const SchnyderWood ta = extract_wood_set(a).base();
  const SchnyderWood tb = extract_wood_set(b).base();

  MorphPlan plan = forward_to(a, ta, canonical_labeling(ta));
  SchnyderWood cur = ta;
  for (const Triangle3& c : facial_flip_sequence(ta, tb)) {
    FlipMorph fm = flip_morph(plan.keyframes.back(), cur, c);
    plan.push(std::move(fm.degenerate), MorphEvent::flip_step(c, 1));
    plan.push(std::move(fm.flipped), MorphEvent::flip_step(c, 2));
    cur = std::move(fm.wood);
  }
  if (!(cur == tb)) throw Error(ErrorKind::InternalInvariant, "flip sequence did not reach the target wood");
  plan.append(forward_to(b, tb, labels_of(plan.keyframes.back())).reversed());
  return plan;
}

}  // namespace rtmorph
