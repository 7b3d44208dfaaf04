#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rtmorph/error.hpp"
#include "rtmorph/plane_graph.hpp"
#include "rtmorph/rational.hpp"
#include "rtmorph/schnyder.hpp"

namespace rtmorph {

struct Point {
  Rational x;
  Rational y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

enum class Corner { Left, Right, Top };
enum class Side { Horizontal, Vertical, Diagonal };

std::string_view to_string(Corner c);
std::string_view to_string(Side s);

/// Lower-right half of the box [xl, xr] x [yb, yt]. Corners: left (xl, yb),
/// right (xr, yb), top (xr, yt). The diagonal joins left and top.
struct RightTriangle {
  Rational xl, xr, yb, yt;

  Point left() const { return {xl, yb}; }
  Point right() const { return {xr, yb}; }
  Point top() const { return {xr, yt}; }
  Point corner(Corner c) const;
  bool well_formed() const { return xl < xr && yb < yt; }
  bool operator==(const RightTriangle& o) const {
    return xl == o.xl && xr == o.xr && yb == o.yb && yt == o.yt;
  }
};

/// The side a corner must touch and the wood color it induces.
Side compatible_side(Corner c);
Color corner_color(Corner c);

struct RTRepresentation {
  GraphPtr graph;
  std::vector<RightTriangle> triangles;  // indexed by vertex

  const RightTriangle& operator[](Vertex v) const { return triangles[v]; }
  bool operator==(const RTRepresentation& o) const;
};

/// A point contact: `corner` of `corner_owner` lies on `side` of `side_owner`.
struct Contact {
  Vertex corner_owner = -1;
  Corner corner = Corner::Left;
  Vertex side_owner = -1;
  Side side = Side::Horizontal;
  Point point;
};

/// Point shared by top(top_owner), left(left_owner) and right(right_owner).
struct DegeneratePoint {
  Point point;
  Vertex top_owner = -1;
  Vertex left_owner = -1;
  Vertex right_owner = -1;
  Triangle3 face() const { return Triangle3(top_owner, left_owner, right_owner); }
};

struct ContactMap {
  /// Keyed by sorted vertex pair. Corner-to-corner contacts list one of the
  /// compatible readings; degenerate inner contacts are resolved by the
  /// counter-clockwise option.
  std::map<std::pair<Vertex, Vertex>, Contact> by_edge;
  std::vector<DegeneratePoint> degenerate;
};

/// Classifies all contacts. Throws Overlap, StrayContact, MissingContact or
/// ValidationError (malformed corner configurations) with diagnostics.
ContactMap contacts(const RTRepresentation& r);

/// Empty iff r is a valid RT-representation of its graph (including the
/// cyclic order of contacts around every triangle).
Diagnostics validate_rt(const RTRepresentation& r);

/// Roles of the outer vertices read off the geometry: X_r is the topmost one.
Roots roots_of(const RTRepresentation& r);

/// Woods represented by a (possibly degenerate) representation.
class WoodSet {
 public:
  WoodSet(SchnyderWood base, std::vector<Triangle3> degenerate_faces);

  const SchnyderWood& base() const { return base_; }
  const std::vector<Triangle3>& degenerate_faces() const { return faces_; }
  /// Number of members, 2^|degenerate_faces|.
  std::size_t size() const { return std::size_t{1} << faces_.size(); }
  bool contains(const SchnyderWood& w) const;
  /// Member obtained by flipping the faces whose bits are set in `mask`.
  SchnyderWood member(std::size_t mask) const;

 private:
  SchnyderWood base_;
  std::vector<Triangle3> faces_;
};

WoodSet extract_wood_set(const RTRepresentation& r);

using Labeling = std::vector<Rational>;  // indexed by vertex

/// tau(v) = y-coordinate of the horizontal side. Throws WoodMismatch when w
/// is not one of the woods of r.
Labeling labeling_from_rep(const RTRepresentation& r, const SchnyderWood& w);

/// Empty iff tau is an ADT-labeling of DAG_r(w).
Diagnostics validate_adt(const Labeling& tau, const SchnyderWood& w);

/// Outer triangles indexed by color role.
struct OuterFrame {
  RightTriangle red, green, blue;
  const RightTriangle& of(Color c) const { return c == Color::Red ? red : c == Color::Green ? green : blue; }
  bool operator==(const OuterFrame&) const = default;
};

/// X_b = (-1, 0, 0, n-2), X_g = (0, n-2, 0, n-2), X_r = (0, n-2, n-2, n-1).
OuterFrame canonical_frame(int n);
OuterFrame frame_of(const RTRepresentation& r, const Roots& roots);

/// The unique representation with wood w, horizontal sides at tau and the
/// given outer triangles. Throws BadLabeling, BadFrame, InternalInvariant.
RTRepresentation construct_rt(const SchnyderWood& w, const Labeling& tau, const OuterFrame& frame);

enum class MorphCase { Parallel, SameRatio };

struct ContactCertificate {
  Vertex corner_owner = -1;
  Corner corner = Corner::Left;
  Vertex side_owner = -1;
  Side side = Side::Horizontal;
  MorphCase how = MorphCase::Parallel;
};

struct LinearMorphCheck {
  bool ok = false;
  std::string reason;                      // why it failed, empty on success
  std::optional<SchnyderWood> common_wood;  // a member of both wood sets
  std::vector<ContactCertificate> certificate;
};

/// Decides whether interpolating a and b corner-wise is a linear morph.
/// Throws GraphMismatch.
LinearMorphCheck is_linear_morph(const RTRepresentation& a, const RTRepresentation& b);

/// (1 - t) a + t b, corner-wise.
RTRepresentation interpolate(const RTRepresentation& a, const RTRepresentation& b, const Rational& t);

}  // namespace rtmorph
