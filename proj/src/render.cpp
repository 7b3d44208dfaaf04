#include "rtmorph/render.hpp"

#include <regex>
#include <sstream>

namespace rtmorph::render {

namespace {

struct Box {
  Rational minx, maxx, miny, maxy;
};

Box bounds(const MorphPlan& plan) {
  const auto& t0 = plan.keyframes.front().triangles.front();
  Box b{t0.xl, t0.xr, t0.yb, t0.yt};
  for (const auto& k : plan.keyframes) {
    for (const auto& t : k.triangles) {
      b.minx = std::min(b.minx, t.xl);
      b.maxx = std::max(b.maxx, t.xr);
      b.miny = std::min(b.miny, t.yb);
      b.maxy = std::max(b.maxy, t.yt);
    }
  }
  return b;
}

// World to pixel mapping with the y-axis pointing down.
struct Mapping {
  Box box;
  Rational scale;
  Rational margin;

  Mapping(const Box& b, const RenderConfig& cfg) : box(b), margin(cfg.margin) {
    Rational w = b.maxx - b.minx, h = b.maxy - b.miny;
    if (w == 0) w = 1;
    if (h == 0) h = 1;
    const Rational sx = Rational(cfg.width - 2 * cfg.margin) / w;
    const Rational sy = Rational(cfg.height - 2 * cfg.margin) / h;
    scale = std::min(sx, sy);
  }
  std::string x(const Rational& v) const { return format_decimal(margin + (v - box.minx) * scale); }
  std::string y(const Rational& v) const { return format_decimal(margin + (box.maxy - v) * scale); }
  std::string point(const Point& p) const { return x(p.x) + "," + y(p.y); }
};

std::string points_of(const Mapping& m, const RightTriangle& t) {
  return m.point(t.left()) + " " + m.point(t.right()) + " " + m.point(t.top());
}

std::string fill_of(const PlaneTriangulation& g, Vertex v) { return g.is_outer(v) ? "#d9d9d9" : "#cfe3f7"; }

std::string header(const RenderConfig& cfg) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cfg.width << "\" height=\"" << cfg.height
     << "\" viewBox=\"0 0 " << cfg.width << " " << cfg.height << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return os.str();
}

std::string label(const Mapping& m, const RightTriangle& t, Vertex v) {
  const Point c{(t.xl + 2 * t.xr) / 3, (2 * t.yb + t.yt) / 3};
  return "<text x=\"" + m.x(c.x) + "\" y=\"" + m.y(c.y) +
         "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + std::to_string(v) + "</text>\n";
}

}  // namespace

void validate_config(const RenderConfig& cfg) {
  Diagnostics d;
  if (cfg.width <= 0 || cfg.height <= 0) d.push_back({"size", "width and height must be positive"});
  if (cfg.margin < 0 || 2 * cfg.margin >= std::min(cfg.width, cfg.height)) {
    d.push_back({"margin", "margin must leave room for the drawing"});
  }
  if (cfg.mode == RenderConfig::Mode::Frames && cfg.frame_count < 2) {
    d.push_back({"frame_count", "frames mode needs at least 2 samples per transition"});
  }
  if (cfg.mode == RenderConfig::Mode::Animated && cfg.fps <= 0) d.push_back({"fps", "fps must be positive"});
  if (!d.empty()) throw Error(ErrorKind::ValidationError, "bad render configuration", d);
}

std::vector<RTRepresentation> sample_plan(const MorphPlan& plan, const RenderConfig& cfg) {
  validate_config(cfg);
  std::vector<RTRepresentation> out;
  if (plan.keyframes.empty()) return out;
  out.push_back(plan.keyframes.front());
  for (std::size_t i = 0; i + 1 < plan.keyframes.size(); ++i) {
    for (int k = 1; k < cfg.frame_count; ++k) {
      out.push_back(interpolate(plan.keyframes[i], plan.keyframes[i + 1], ratio(k, cfg.frame_count - 1)));
    }
  }
  return out;
}

std::vector<std::string> render_frames(const MorphPlan& plan, const RenderConfig& cfg) {
  std::vector<std::string> docs;
  const auto samples = sample_plan(plan, cfg);
  if (samples.empty()) return docs;
  const Mapping m(bounds(plan), cfg);
  for (const auto& r : samples) {
    std::ostringstream os;
    os << header(cfg);
    for (Vertex v = 0; v < static_cast<Vertex>(r.triangles.size()); ++v) {
      const RightTriangle& t = r[v];
      os << "<polygon data-v=\"" << v << "\" data-xl=\"" << format_rational(t.xl) << "\" data-xr=\""
         << format_rational(t.xr) << "\" data-yb=\"" << format_rational(t.yb) << "\" data-yt=\""
         << format_rational(t.yt) << "\" points=\"" << points_of(m, t) << "\" fill=\"" << fill_of(*r.graph, v)
         << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    if (cfg.labels) {
      for (Vertex v = 0; v < static_cast<Vertex>(r.triangles.size()); ++v) os << label(m, r[v], v);
    }
    os << "</svg>\n";
    docs.push_back(os.str());
  }
  return docs;
}

std::string render_animated(const MorphPlan& plan, const RenderConfig& cfg) {
  validate_config(cfg);
  if (plan.keyframes.empty()) return header(cfg) + "</svg>\n";
  const Mapping m(bounds(plan), cfg);
  const std::size_t k = plan.keyframes.size();
  const auto& first = plan.keyframes.front();
  const Rational seconds = ratio(cfg.frame_count, cfg.fps) * static_cast<long>(k - 1);
  std::string key_times;
  for (std::size_t i = 0; i < k && k > 1; ++i) {
    if (i) key_times += ";";
    key_times += format_decimal(ratio(static_cast<long>(i), static_cast<long>(k - 1)));
  }
  std::ostringstream os;
  os << header(cfg);
  for (Vertex v = 0; v < static_cast<Vertex>(first.triangles.size()); ++v) {
    os << "<polygon data-v=\"" << v << "\" points=\"" << points_of(m, first[v]) << "\" fill=\""
       << fill_of(*first.graph, v) << "\" stroke=\"black\" stroke-width=\"1\"";
    if (k == 1) {
      os << "/>\n";
      continue;
    }
    os << ">\n<animate attributeName=\"points\" calcMode=\"linear\" dur=\"" << format_decimal(seconds)
       << "s\" repeatCount=\"indefinite\" keyTimes=\"" << key_times << "\" values=\"";
    for (std::size_t i = 0; i < k; ++i) os << (i ? ";" : "") << points_of(m, plan.keyframes[i][v]);
    os << "\"/>\n</polygon>\n";
  }
  os << "</svg>\n";
  return os.str();
}

RTRepresentation parse_frame(const std::string& svg, const GraphPtr& g) {
  static const std::regex poly(
      "data-v=\"(\\d+)\" data-xl=\"([^\"]+)\" data-xr=\"([^\"]+)\" data-yb=\"([^\"]+)\" data-yt=\"([^\"]+)\"");
  RTRepresentation r{g, std::vector<RightTriangle>(g->n())};
  std::vector<char> seen(g->n(), 0);
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), poly); it != std::sregex_iterator(); ++it) {
    const auto& mt = *it;
    const int v = std::stoi(mt[1]);
    if (v < 0 || v >= g->n()) throw Error(ErrorKind::ParseError, "frame: vertex " + mt[1].str() + " out of range");
    r.triangles[v] = {parse_rational(mt[2].str()), parse_rational(mt[3].str()), parse_rational(mt[4].str()),
                      parse_rational(mt[5].str())};
    seen[v] = 1;
  }
  for (Vertex v = 0; v < g->n(); ++v) {
    if (!seen[v]) throw Error(ErrorKind::ParseError, "frame: triangle " + std::to_string(v) + " missing");
  }
  return r;
}

}  // namespace rtmorph::render
