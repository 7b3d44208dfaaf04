// JSON-in, JSON-out bindings; the Python package wraps them with dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rtmorph/io.hpp"
#include "rtmorph/render.hpp"

namespace py = pybind11;
using namespace rtmorph;
using io::Json;

namespace {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("input: ") + e.what());
  }
}

GraphPtr graph_of(const std::string& text) { return io::graph_from_json(parse(text)); }

GraphPtr optional_graph(const std::optional<std::string>& text) {
  return text ? graph_of(*text) : nullptr;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Morphs between right-triangle contact representations";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string kind(to_string(e.kind()));
      py::list diags;
      for (const auto& d : e.diagnostics()) diags.append(py::make_tuple(d.code, d.message));
      PyErr_SetObject(error.ptr(), py::make_tuple(kind, e.what(), diags).ptr());
    } catch (const Json::exception& e) {
      PyErr_SetObject(error.ptr(), py::make_tuple("ParseError", e.what(), py::list()).ptr());
    }
  });

  m.def("validate_graph", [](const std::string& g) { graph_of(g); }, py::arg("graph"));

  m.def(
      "initial_wood", [](const std::string& g, int red) { return dump(io::wood_to_json(initial_wood(graph_of(g), red))); },
      py::arg("graph"), py::arg("red"));

  m.def(
      "construct",
      [](const std::string& g, const std::string& wood, const std::string& tau) {
        const GraphPtr graph = graph_of(g);
        const SchnyderWood w = io::wood_from_json(parse(wood), graph);
        const Labeling t = io::labeling_from_json(parse(tau), graph->n());
        return dump(io::rep_to_json(construct_rt(w, t, canonical_frame(graph->n())), true));
      },
      py::arg("graph"), py::arg("wood"), py::arg("tau"));

  m.def(
      "validate_rt",
      [](const std::string& rep, const std::optional<std::string>& g) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& d : validate_rt(io::rep_from_json_unchecked(parse(rep), optional_graph(g)))) {
          out.emplace_back(d.code, d.message);
        }
        return out;
      },
      py::arg("rep"), py::arg("graph") = py::none());

  m.def(
      "extract",
      [](const std::string& rep, const std::optional<std::string>& g) {
        return dump(io::wood_set_to_json(extract_wood_set(io::rep_from_json(parse(rep), optional_graph(g)))));
      },
      py::arg("rep"), py::arg("graph") = py::none());

  m.def(
      "potential",
      [](const std::string& g, const std::string& wood) {
        return dump(io::potential_to_json(potential(io::wood_from_json(parse(wood), graph_of(g)))));
      },
      py::arg("graph"), py::arg("wood"));

  m.def(
      "decide",
      [](const std::string& a, const std::string& b, const std::optional<std::string>& g) {
        const GraphPtr graph = optional_graph(g);
        return dump(io::decision_to_json(decide(io::rep_from_json(parse(a), graph), io::rep_from_json(parse(b), graph))));
      },
      py::arg("a"), py::arg("b"), py::arg("graph") = py::none());

  m.def(
      "morph",
      [](const std::string& a, const std::string& b, const std::optional<std::string>& g) {
        const GraphPtr graph = optional_graph(g);
        return dump(io::plan_to_json(full_morph(io::rep_from_json(parse(a), graph), io::rep_from_json(parse(b), graph))));
      },
      py::arg("a"), py::arg("b"), py::arg("graph") = py::none());

  m.def(
      "render_frames",
      [](const std::string& plan, int frames, int width, int height) {
        render::RenderConfig cfg;
        cfg.frame_count = frames;
        cfg.width = width;
        cfg.height = height;
        return render::render_frames(io::plan_from_json(parse(plan), nullptr), cfg);
      },
      py::arg("plan"), py::arg("frames") = 10, py::arg("width") = 800, py::arg("height") = 800);

  m.def(
      "render_animated",
      [](const std::string& plan, int frames, int fps) {
        render::RenderConfig cfg;
        cfg.mode = render::RenderConfig::Mode::Animated;
        cfg.frame_count = frames;
        cfg.fps = fps;
        return render::render_animated(io::plan_from_json(parse(plan), nullptr), cfg);
      },
      py::arg("plan"), py::arg("frames") = 10, py::arg("fps") = 10);
}
