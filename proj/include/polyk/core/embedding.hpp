#pragma once

#include <vector>

#include "polyk/core/graph.hpp"

namespace polyk {

/// A facial walk v0 -> v1 -> ... -> v_{m-1} -> v0.
using FaceWalk = std::vector<Vertex>;

/// Cyclic neighbor order per vertex. Mutable scratch form used while
/// transformations rewire a neighborhood; freeze into an Embedding when done.
class RotationSystem {
 public:
  RotationSystem() = default;
  explicit RotationSystem(std::vector<std::vector<Vertex>> rotation)
      : rotation_(std::move(rotation)) {}

  int order() const { return static_cast<int>(rotation_.size()); }
  const std::vector<Vertex>& at(Vertex v) const { return rotation_[v]; }

  Vertex add_vertex(std::vector<Vertex> rotation);
  /// Removes u from v's rotation and v from u's rotation.
  void remove_edge(Vertex u, Vertex v);
  /// Places w immediately after anchor in v's rotation.
  void insert_after(Vertex v, Vertex anchor, Vertex w);
  void replace(Vertex v, Vertex old_nbr, Vertex new_nbr);

  const std::vector<std::vector<Vertex>>& lists() const { return rotation_; }

 private:
  std::vector<std::vector<Vertex>> rotation_;
};

/// A graph together with a rotation system.
///
/// Face tracing rule: the dart u->v is followed by v->w where w is the
/// neighbor after u in the rotation at v. Faces are recomputed on demand.
class Embedding {
 public:
  Embedding() = default;

  /// Throws GraphError unless each rotation is a permutation of the
  /// corresponding neighbor set.
  Embedding(Graph graph, std::vector<std::vector<Vertex>> rotation);

  /// Derives the graph from the rotation lists, which must be symmetric.
  static Embedding from_rotation(const RotationSystem& rotation);

  const Graph& graph() const { return graph_; }
  const std::vector<Vertex>& rotation(Vertex v) const { return rotation_[v]; }
  const std::vector<std::vector<Vertex>>& rotations() const { return rotation_; }
  RotationSystem rotation_system() const { return RotationSystem(rotation_); }

  /// Neighbor following u in the rotation at v.
  Vertex successor(Vertex v, Vertex u) const;
  Vertex predecessor(Vertex v, Vertex u) const;

  /// All facial walks; every dart lies on exactly one. Throws GraphError when
  /// the underlying graph is disconnected.
  std::vector<FaceWalk> faces() const;

  /// The facial walk starting with the dart u->v.
  FaceWalk face_of_dart(Vertex u, Vertex v) const;

  /// p - q + r; equals 2 exactly for spherical embeddings.
  int euler_characteristic() const;

  friend bool operator==(const Embedding&, const Embedding&) = default;

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> rotation_;
};

bool is_connected(const Graph& g);

}  // namespace polyk
