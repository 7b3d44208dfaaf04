#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace rtmorph {

using Vertex = int;

/// A vertex triple stored sorted, so each 3-cycle has exactly one identity.
struct Triangle3 {
  std::array<Vertex, 3> v{};

  Triangle3() = default;
  Triangle3(Vertex a, Vertex b, Vertex c);

  bool contains(Vertex x) const { return v[0] == x || v[1] == x || v[2] == x; }
  auto operator<=>(const Triangle3&) const = default;
  std::string str() const;
};

/// Raw embedding data as it appears in Graph JSON.
struct EmbeddingSpec {
  int n = 0;
  std::vector<std::vector<Vertex>> rotations;  // counter-clockwise
  std::array<Vertex, 3> outer{};                // counter-clockwise
};

/// A 3-cycle of the graph together with its counter-clockwise vertex order
/// in the embedding and the ids of its three edges.
struct Cycle3 {
  Triangle3 key;
  std::array<Vertex, 3> ccw{};  // ccw[0] == key.v[0]
  std::array<int, 3> edges{};   // edge ccw[i] -- ccw[(i+1)%3]
  bool is_face = false;
  bool has_outer_edge = false;
};

/// Combinatorial embedding of a maximal planar graph with a distinguished
/// outer face. Immutable once built.
class PlaneTriangulation {
 public:
  /// Validates `spec` and derives faces and 3-cycles. Malformed input throws
  /// one of the plane_graph error kinds.
  static PlaneTriangulation build(EmbeddingSpec spec);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Vertex>& rotation(Vertex u) const { return rotations_[u]; }
  const std::array<Vertex, 3>& outer() const { return outer_; }
  bool is_outer(Vertex u) const { return outer_[0] == u || outer_[1] == u || outer_[2] == u; }

  /// Index of `v` in rotation(u), or -1 when not adjacent.
  int position(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return position(u, v) >= 0; }
  /// Edge id of {u, v}, or -1.
  int edge_id(Vertex u, Vertex v) const;
  /// Endpoints of an edge, smaller index first.
  std::array<Vertex, 2> edge(int id) const { return edges_[id]; }
  bool is_outer_edge(int id) const;

  /// Neighbor following `v` counter-clockwise around `u`.
  Vertex ccw_next(Vertex u, Vertex v) const;
  /// Neighbor following `v` clockwise around `u`.
  Vertex cw_next(Vertex u, Vertex v) const;
  /// Third vertex of the face to the left of the dart u -> v.
  Vertex left_apex(Vertex u, Vertex v) const { return cw_next(v, u); }

  /// Inner faces, each listed counter-clockwise.
  const std::vector<std::array<Vertex, 3>>& inner_faces() const { return inner_faces_; }
  /// Number of faces including the outer one.
  int face_count() const { return static_cast<int>(inner_faces_.size()) + 1; }
  bool is_face(const Triangle3& t) const;

  /// All 3-cycles, sorted lexicographically by key.
  const std::vector<Cycle3>& cycles() const { return cycles_; }
  /// Index into cycles() or -1.
  int cycle_index(const Triangle3& t) const;
  /// Indices of the 3-cycles through an edge.
  const std::vector<int>& cycles_of_edge(int edge) const { return cycles_of_edge_[edge]; }

  /// Original embedding data (for serialization and equality).
  EmbeddingSpec spec() const;

  bool same_embedding(const PlaneTriangulation& other) const;

 private:
  PlaneTriangulation() = default;

  int n_ = 0;
  std::vector<std::vector<Vertex>> rotations_;
  std::array<Vertex, 3> outer_{};
  std::vector<std::array<Vertex, 2>> edges_;
  std::vector<std::vector<int>> edge_at_;  // aligned with rotations_
  std::unordered_map<std::uint64_t, int> dart_pos_;
  std::vector<std::array<Vertex, 3>> inner_faces_;
  std::vector<Cycle3> cycles_;
  std::vector<std::vector<int>> cycles_of_edge_;

  std::uint64_t dart_key(Vertex u, Vertex v) const {
    return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(v);
  }
};

using GraphPtr = std::shared_ptr<const PlaneTriangulation>;

inline GraphPtr make_graph(EmbeddingSpec spec) {
  return std::make_shared<const PlaneTriangulation>(PlaneTriangulation::build(std::move(spec)));
}

/// 3-cycles that are not faces.
std::vector<Triangle3> separating_triangles(const PlaneTriangulation& g);

/// True iff the triangulation has no separating triangle. Requires n >= 5.
bool is_four_connected(const PlaneTriangulation& g);

}  // namespace rtmorph
