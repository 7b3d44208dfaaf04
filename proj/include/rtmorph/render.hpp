#pragma once

#include <string>
#include <vector>

#include "rtmorph/morph.hpp"

namespace rtmorph::render {

struct RenderConfig {
  enum class Mode { Frames, Animated };
  int width = 800;
  int height = 800;
  int margin = 20;
  int frame_count = 10;  // samples per transition, endpoints included
  int fps = 10;          // animated mode: frame_count / fps seconds per transition
  Mode mode = Mode::Frames;
  bool labels = true;    // vertex ids at triangle centroids
};

/// Throws ValidationError on non-positive sizes or frame_count < 2.
void validate_config(const RenderConfig& cfg);

/// Exact sample representations: frame_count evenly spaced times on every
/// transition, shared endpoints listed once. A plan with one keyframe gives
/// one sample.
std::vector<RTRepresentation> sample_plan(const MorphPlan& plan, const RenderConfig& cfg);

/// One SVG document per sample. All frames share one coordinate mapping.
std::vector<std::string> render_frames(const MorphPlan& plan, const RenderConfig& cfg);

/// A single SVG whose polygons animate linearly between keyframes.
std::string render_animated(const MorphPlan& plan, const RenderConfig& cfg);

/// Recovers the exact triangles stored in the data attributes of a frame.
/// Throws ParseError.
RTRepresentation parse_frame(const std::string& svg, const GraphPtr& g);

}  // namespace rtmorph::render
