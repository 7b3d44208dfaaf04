#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rtmorph/error.hpp"
#include "rtmorph/plane_graph.hpp"

namespace rtmorph {

enum class Color : int { Red = 0, Green = 1, Blue = 2 };

inline constexpr std::array<Color, 3> kColors{Color::Red, Color::Green, Color::Blue};

inline int idx(Color c) { return static_cast<int>(c); }
std::string_view to_string(Color c);
/// Parses "red" | "green" | "blue".
std::optional<Color> parse_color(std::string_view s);

/// Outer vertex roles X_r, X_g, X_b. Around the outer face the
/// counter-clockwise order is X_b, X_g, X_r.
struct Roots {
  Vertex red = -1;
  Vertex green = -1;
  Vertex blue = -1;

  Vertex of(Color c) const { return c == Color::Red ? red : c == Color::Green ? green : blue; }
  bool operator==(const Roots&) const = default;
};

/// Role assignment determined by the choice of X_r. Throws BadRoot.
Roots roots_for(const PlaneTriangulation& g, Vertex red_root);

/// One colored, directed inner edge as it appears in Wood JSON.
struct WoodEdge {
  Vertex tail = -1;
  Vertex head = -1;
  Color color = Color::Red;
  bool operator==(const WoodEdge&) const = default;
};

enum class Turn { Clockwise, CounterClockwise };

/// Per-edge direction of a 3-orientation: +1 when the edge runs from its
/// smaller to its larger endpoint, -1 for the reverse, 0 for outer edges.
using EdgeDirections = std::vector<std::int8_t>;

/// A 3-orientation with its Schnyder coloring. Stores, for every vertex, the
/// head of its outgoing edge of each color (-1 when absent). The class does
/// not enforce validity; use validate_wood or the checked factories.
class SchnyderWood {
 public:
  using OutEdges = std::array<Vertex, 3>;  // indexed by Color

  SchnyderWood(GraphPtr graph, Roots roots, std::vector<OutEdges> out);

  /// Colors a 3-orientation by its unique Schnyder coloring. Throws
  /// ValidationError when `dirs` is not a 3-orientation.
  static SchnyderWood from_directions(GraphPtr graph, Roots roots, const EdgeDirections& dirs);
  /// Builds from JSON-style edges; throws ValidationError on any violation.
  static SchnyderWood from_edges(GraphPtr graph, Roots roots, const std::vector<WoodEdge>& edges);

  const PlaneTriangulation& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const Roots& roots() const { return roots_; }
  bool is_inner(Vertex v) const { return !graph_->is_outer(v); }

  /// v_r, v_g, v_b of an inner vertex.
  Vertex parent(Vertex v, Color c) const { return out_[v][idx(c)]; }
  const OutEdges& out(Vertex v) const { return out_[v]; }

  /// Color of the edge u -> v if the wood directs it that way.
  std::optional<Color> color_of(Vertex u, Vertex v) const;
  bool directed(Vertex u, Vertex v) const { return color_of(u, v).has_value(); }

  EdgeDirections directions() const;
  std::vector<WoodEdge> edges() const;

  /// Vertices u with u_c == v, in counter-clockwise order around v.
  std::vector<Vertex> in_neighbors(Vertex v, Color c) const;

  bool operator==(const SchnyderWood& other) const;

 private:
  GraphPtr graph_;
  Roots roots_;
  std::vector<OutEdges> out_;
};

/// Deterministic Schnyder wood with X_r = red_root (canonical-ordering
/// shelling). Throws BadRoot, TooSmall.
SchnyderWood initial_wood(GraphPtr graph, Vertex red_root);

/// Empty iff `wood` is a valid Schnyder wood of its graph.
Diagnostics validate_wood(const SchnyderWood& wood);
Diagnostics validate_wood_edges(const PlaneTriangulation& g, const Roots& roots, const std::vector<WoodEdge>& edges);

struct Digraph {
  int n = 0;
  std::vector<std::vector<Vertex>> succ;
};

/// DAG_r (kept = Red) or DAG_b (kept = Blue) over the inner edges: edges of
/// the kept color keep their direction, the other two classes are reversed.
Digraph derived_dag(const SchnyderWood& wood, Color kept);

/// Lexicographically smallest topological order (smallest available index
/// first). Throws InternalInvariant on a cycle.
std::vector<Vertex> topological_order(const Digraph& dag);

enum class TriangleScope { FacesOnly, AllTriangles };

struct OrientedTriangle {
  Triangle3 triangle;
  Turn turn = Turn::CounterClockwise;
  bool operator==(const OrientedTriangle&) const = default;
};

/// Directed 3-cycles of the wood with their rotational direction.
std::vector<OrientedTriangle> oriented_triangles(const SchnyderWood& wood, TriangleScope scope);

/// Orientation of a 3-cycle under `dirs`: CounterClockwise/Clockwise if it is
/// a directed cycle, nullopt otherwise.
std::optional<Turn> cycle_turn(const PlaneTriangulation& g, const EdgeDirections& dirs, int cycle);

/// Reverses an oriented triangle and recolors. Throws NotOriented.
SchnyderWood flip(const SchnyderWood& wood, const Triangle3& c);

/// pi_T over the 3-cycles of the graph; zero entries are omitted.
struct PotentialVector {
  std::map<Triangle3, long> values;

  long at(const Triangle3& t) const {
    auto it = values.find(t);
    return it == values.end() ? 0 : it->second;
  }
  bool operator==(const PotentialVector&) const = default;
};

enum class TieBreak { SmallestFirst, LargestFirst };

/// Flip-descent to the lattice minimum, counting flips per triangle.
/// Throws InternalInvariant past 8 n^2 flips.
PotentialVector potential(const SchnyderWood& wood, TieBreak tie = TieBreak::SmallestFirst);

/// The lattice minimum reached by the descent.
SchnyderWood lattice_minimum(const SchnyderWood& wood);

SchnyderWood meet(const SchnyderWood& a, const SchnyderWood& b);
SchnyderWood join(const SchnyderWood& a, const SchnyderWood& b);

/// True iff the potentials agree on every separating triangle.
bool can_morph_woods(const SchnyderWood& a, const SchnyderWood& b);

/// First separating triangle (lexicographic) where the potentials differ.
std::optional<Triangle3> separating_potential_witness(const SchnyderWood& a, const SchnyderWood& b);

/// Faces whose successive flips turn `a` into `b`, routed through meet(a, b).
/// Throws NotMorphable, InternalInvariant.
std::vector<Triangle3> facial_flip_sequence(const SchnyderWood& a, const SchnyderWood& b);

}  // namespace rtmorph
