#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rtmorph/io.hpp"
#include "rtmorph/render.hpp"

namespace fs = std::filesystem;
using namespace rtmorph;
using io::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitNotMorphable = 2;
constexpr int kExitInternal = 3;

void emit(const Json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    io::write_json(out, j);
  }
}

GraphPtr optional_graph(const std::string& path) {
  if (path.empty()) return nullptr;
  return io::graph_from_json(io::read_json(path), path);
}

RTRepresentation load_rep(const std::string& path, const GraphPtr& g) {
  return io::rep_from_json(io::read_json(path), g, path);
}

void print_diagnostics(const Diagnostics& d) {
  for (const auto& x : d) std::cerr << "  [" << x.code << "] " << x.message << '\n';
}

// Validates whatever the file holds; the kind is read off its top-level fields.
int run_validate(const std::string& path, const std::string& graph_path, const std::string& wood_path) {
  const Json j = io::read_json(path);
  const GraphPtr g = optional_graph(graph_path);
  Diagnostics d;
  if (j.contains("rotations")) {
    io::graph_from_json(j, path);
  } else if (j.contains("triangles")) {
    d = validate_rt(io::rep_from_json_unchecked(j, g, path));
  } else if (j.contains("edges")) {
    if (!g) throw Error(ErrorKind::ParseError, path + ": a wood needs --graph");
    io::wood_from_json(j, g, path);
  } else if (j.contains("tau")) {
    if (!g || wood_path.empty()) throw Error(ErrorKind::ParseError, path + ": a labeling needs --graph and --wood");
    const SchnyderWood w = io::wood_from_json(io::read_json(wood_path), g, wood_path);
    d = validate_adt(io::labeling_from_json(j, g->n(), path), w);
  } else if (j.contains("keyframes")) {
    const MorphPlan plan = io::plan_from_json(j, g, path);
    for (std::size_t i = 0; i + 1 < plan.keyframes.size(); ++i) {
      const LinearMorphCheck m = is_linear_morph(plan.keyframes[i], plan.keyframes[i + 1]);
      if (!m.ok) d.push_back({"transition", "transition " + std::to_string(i) + ": " + m.reason});
    }
    for (std::size_t i = 0; i < plan.keyframes.size(); ++i) {
      for (const auto& x : validate_rt(plan.keyframes[i])) {
        d.push_back({x.code, "keyframe " + std::to_string(i) + ": " + x.message});
      }
    }
  } else {
    throw Error(ErrorKind::ParseError, path + ": unrecognized document");
  }
  if (!d.empty()) {
    std::cerr << path << ": invalid\n";
    print_diagnostics(d);
    return kExitInvalid;
  }
  std::cerr << path << ": ok\n";
  return kExitOk;
}

int run_render(const std::string& plan_path, const std::string& graph_path, const std::string& out_dir,
               const render::RenderConfig& cfg) {
  const MorphPlan plan = io::plan_from_json(io::read_json(plan_path), optional_graph(graph_path), plan_path);
  fs::create_directories(out_dir);
  if (cfg.mode == render::RenderConfig::Mode::Animated) {
    std::ofstream(fs::path(out_dir) / "morph.svg") << render::render_animated(plan, cfg);
    return kExitOk;
  }
  const fs::path frames = fs::path(out_dir) / "frames";
  fs::create_directories(frames);
  const auto docs = render::render_frames(plan, cfg);
  for (std::size_t i = 0; i < docs.size(); ++i) {
    std::ostringstream name;
    name << std::setw(4) << std::setfill('0') << i << ".svg";
    std::ofstream(frames / name.str()) << docs[i];
  }
  std::cerr << "wrote " << docs.size() << " frames to " << frames.string() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morphs between right-triangle contact representations of planar triangulations"};
  app.require_subcommand(1);

  std::string graph_path, wood_path, tau_path, out, in_a, in_b, frame = "canonical";
  bool no_graph = false;
  int red = -1;
  render::RenderConfig cfg;
  std::optional<int> frames;
  bool animated = false;

  auto* validate = app.add_subcommand("validate", "Check a graph, wood, labeling, representation or plan");
  validate->add_option("file", in_a, "JSON document")->required();
  validate->add_option("--graph", graph_path, "Graph JSON for documents that do not embed one");
  validate->add_option("--wood", wood_path, "Wood JSON (for labelings)");

  auto* wood = app.add_subcommand("wood", "Compute a Schnyder wood");
  wood->add_option("graph", graph_path, "Graph JSON")->required();
  wood->add_option("--red", red, "Outer vertex used as the red root")->required();
  wood->add_option("-o,--output", out, "Output file (default stdout)");

  auto* construct = app.add_subcommand("construct", "Build the representation of a wood and labeling");
  construct->add_option("graph", graph_path, "Graph JSON")->required();
  construct->add_option("wood", wood_path, "Wood JSON")->required();
  construct->add_option("tau", tau_path, "Labeling JSON")->required();
  construct->add_option("--frame", frame, "Outer frame")->check(CLI::IsMember({"canonical"}));
  construct->add_flag("--no-graph", no_graph, "Do not embed the graph in the output");
  construct->add_option("-o,--output", out, "Output file (default stdout)");

  auto* extract = app.add_subcommand("extract", "Read the woods off a representation");
  extract->add_option("rep", in_a, "Representation JSON")->required();
  extract->add_option("--graph", graph_path, "Graph JSON if the representation does not embed one");
  extract->add_option("-o,--output", out, "Output file (default stdout)");

  auto* pot = app.add_subcommand("potential", "Potential of a wood over the 3-cycles");
  pot->add_option("graph", graph_path, "Graph JSON")->required();
  pot->add_option("wood", wood_path, "Wood JSON")->required();
  pot->add_option("-o,--output", out, "Output file (default stdout)");

  auto* decide_cmd = app.add_subcommand("decide", "Decide whether two representations can be morphed");
  decide_cmd->add_option("a", in_a, "First representation")->required();
  decide_cmd->add_option("b", in_b, "Second representation")->required();
  decide_cmd->add_option("--graph", graph_path, "Graph JSON if the representations do not embed one");
  decide_cmd->add_option("-o,--output", out, "Output file (default stdout)");

  auto* morph = app.add_subcommand("morph", "Compute a piecewise linear morph");
  morph->add_option("a", in_a, "First representation")->required();
  morph->add_option("b", in_b, "Second representation")->required();
  morph->add_option("--graph", graph_path, "Graph JSON if the representations do not embed one");
  morph->add_option("-o,--output", out, "Plan file (default stdout)");

  auto* rend = app.add_subcommand("render", "Render a plan as SVG");
  rend->add_option("plan", in_a, "Plan JSON")->required();
  rend->add_option("-o,--output", out, "Output directory")->required();
  rend->add_option("--graph", graph_path, "Graph JSON if the plan does not embed one");
  auto* frames_opt = rend->add_option("--frames", frames, "Samples per transition");
  auto* anim_opt = rend->add_flag("--animated", animated, "One animated SVG instead of frames");
  frames_opt->excludes(anim_opt);
  rend->add_option("--width", cfg.width, "Width in pixels");
  rend->add_option("--height", cfg.height, "Height in pixels");
  rend->add_option("--margin", cfg.margin, "Margin in pixels");
  rend->add_option("--fps", cfg.fps, "Animated mode: samples per second");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*validate) return run_validate(in_a, graph_path, wood_path);
    if (*wood) {
      const GraphPtr g = io::graph_from_json(io::read_json(graph_path), graph_path);
      emit(io::wood_to_json(initial_wood(g, red)), out);
      return kExitOk;
    }
    if (*construct) {
      const GraphPtr g = io::graph_from_json(io::read_json(graph_path), graph_path);
      const SchnyderWood w = io::wood_from_json(io::read_json(wood_path), g, wood_path);
      const Labeling tau = io::labeling_from_json(io::read_json(tau_path), g->n(), tau_path);
      emit(io::rep_to_json(construct_rt(w, tau, canonical_frame(g->n())), !no_graph), out);
      return kExitOk;
    }
    if (*extract) {
      emit(io::wood_set_to_json(extract_wood_set(load_rep(in_a, optional_graph(graph_path)))), out);
      return kExitOk;
    }
    if (*pot) {
      const GraphPtr g = io::graph_from_json(io::read_json(graph_path), graph_path);
      emit(io::potential_to_json(potential(io::wood_from_json(io::read_json(wood_path), g, wood_path))), out);
      return kExitOk;
    }
    if (*decide_cmd) {
      const GraphPtr g = optional_graph(graph_path);
      const MorphDecision d = decide(load_rep(in_a, g), load_rep(in_b, g));
      emit(io::decision_to_json(d), out);
      return d.possible ? kExitOk : kExitNotMorphable;
    }
    if (*morph) {
      const GraphPtr g = optional_graph(graph_path);
      const RTRepresentation a = load_rep(in_a, g), b = load_rep(in_b, g);
      const MorphDecision d = decide(a, b);
      if (!d.possible) {
        std::cerr << "not morphable: " << to_string(d.reason) << '\n';
        std::cout << io::decision_to_json(d).dump(2) << '\n';
        return kExitNotMorphable;
      }
      emit(io::plan_to_json(full_morph(a, b)), out);
      return kExitOk;
    }
    if (*rend) {
      cfg.mode = animated ? render::RenderConfig::Mode::Animated : render::RenderConfig::Mode::Frames;
      if (frames) cfg.frame_count = *frames;
      return run_render(in_a, graph_path, out, cfg);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::NotMorphable: return kExitNotMorphable;
      case ErrorKind::InternalInvariant: return kExitInternal;
      default: return kExitInvalid;
    }
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInvalid;
}
