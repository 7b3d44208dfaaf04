#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rtmorph/rt_geometry.hpp"
#include "rtmorph/schnyder.hpp"

namespace rtmorph {

/// Ratio with which right(v) cuts the diagonal of v_g. `green_root_top` is
/// top(X_g); it defaults to tau(X_r), which is where it sits whenever the
/// outer triangles touch corner to corner. Throws Undefined for X_g.
Rational lambda_ratio(const Labeling& tau, const SchnyderWood& w, Vertex v,
                      const std::optional<Rational>& green_root_top = std::nullopt);

/// Whether moving inner vertex x to height y keeps the order of the right
/// corners along the diagonal of x_g.
bool respects_order(const Labeling& tau, const SchnyderWood& w, Vertex x, const Rational& y,
                    const std::optional<Rational>& green_root_top = std::nullopt);

/// Moves x to height y, re-solving the dependent labels so that every other
/// right corner keeps its ratio on its diagonal. Throws OrderViolation.
Labeling adjust(const Labeling& tau, const SchnyderWood& w, Vertex x, const Rational& y,
                const std::optional<Rational>& green_root_top = std::nullopt);

struct FlipMorph {
  RTRepresentation degenerate;  // both woods at once
  RTRepresentation flipped;     // non-degenerate, wood = flip(T, C)
  SchnyderWood wood;
};

/// Realizes a facial flip by two linear morphs. Throws Degenerate,
/// NotOrientedFace, WoodMismatch, InternalInvariant.
FlipMorph flip_morph(const RTRepresentation& r, const SchnyderWood& w, const Triangle3& face);

/// Trims the outer triangles, maps them affinely onto the canonical frame and
/// fixes the two free side lengths. Returns the new keyframes (no-op steps are
/// left out, so the result may be empty).
std::vector<RTRepresentation> normalize_outer(const RTRepresentation& r, const SchnyderWood& w);

/// Index i with p_i != q_i and no other element of P between p_i and q_i
/// (inclusive), or nullopt when P == Q. Throws SizeMismatch.
std::optional<std::size_t> next_movable_index(const std::vector<Rational>& p, const std::vector<Rational>& q);

struct MorphEvent {
  enum class Kind { OuterNormalization, RatioMove, FlipStep };
  Kind kind = Kind::OuterNormalization;
  Vertex vertex = -1;  // RatioMove
  Triangle3 face;      // FlipStep
  int phase = 0;       // FlipStep: 1 or 2
  bool operator==(const MorphEvent&) const = default;

  static MorphEvent normalization() { return {Kind::OuterNormalization, -1, {}, 0}; }
  static MorphEvent ratio_move(Vertex v) { return {Kind::RatioMove, v, {}, 0}; }
  static MorphEvent flip_step(const Triangle3& f, int phase) { return {Kind::FlipStep, -1, f, phase}; }
};

std::string_view to_string(MorphEvent::Kind k);

struct MorphPlan {
  std::vector<RTRepresentation> keyframes;
  std::vector<MorphEvent> events;  // events[i] leads from keyframe i to i + 1

  std::size_t transitions() const { return events.size(); }
  /// Appends a keyframe unless it repeats the last one.
  void push(RTRepresentation r, MorphEvent e);
  /// Appends `other` (which must start at this plan's last keyframe).
  void append(const MorphPlan& other);
  MorphPlan reversed() const;
};

/// Morph from r to construct_rt(w, target, canonical_frame(n)); target must
/// be a strict ADT-labeling with the canonical outer labels.
MorphPlan forward_to(const RTRepresentation& r, const SchnyderWood& w, const Labeling& target);

/// Lexicographically smallest strict topological labeling with
/// tau(X_b) = tau(X_g) = 0 and tau(X_r) = n - 2.
Labeling canonical_labeling(const SchnyderWood& w);

/// Piecewise linear morph between two representations of the same wood.
/// Throws WoodMismatch.
MorphPlan same_wood_morph(const RTRepresentation& a, const RTRepresentation& b, const SchnyderWood& w);

struct MorphDecision {
  enum class Reason { Ok, GraphMismatch, TooSmall, TopmostDiffers, SeparatingPotentialDiffers };
  bool possible = false;
  Reason reason = Reason::Ok;
  std::vector<Vertex> witness;  // offending triangle, or the two topmost vertices
  long flip_count = 0;
};

std::string_view to_string(MorphDecision::Reason r);

/// Throws ValidationError when an input is not a valid representation.
MorphDecision decide(const RTRepresentation& a, const RTRepresentation& b);

/// Throws NotMorphable (refusal) and ValidationError.
MorphPlan full_morph(const RTRepresentation& a, const RTRepresentation& b);

}  // namespace rtmorph
