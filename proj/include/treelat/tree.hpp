#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treelat {

using VertexId = int;  // dense internal id, 0..V-1
using FaceId = int;    // dense, in ccw boundary order
using EdgeId = int;    // dense, interior edges first (sorted by labels)

enum class Dir { cw, ccw };
enum class Turn { left, right };

struct TreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotATree : TreeError {
  using TreeError::TreeError;
};
struct InteriorDegreeTooSmall : TreeError {
  using TreeError::TreeError;
};
struct NoInteriorVertex : TreeError {
  using TreeError::TreeError;
};
struct NotACorner : TreeError {
  using TreeError::TreeError;
};

// Corner (v,F): interior vertex together with an incident face.
struct Corner {
  VertexId v = -1;
  FaceId face = -1;
  bool operator==(const Corner&) const = default;
  bool operator<(const Corner& o) const {
    return v != o.v ? v < o.v : face < o.face;
  }
};

// Input form: one entry per vertex, neighbors listed counterclockwise.
// Labels are arbitrary integers; leaves may be omitted (derived from the
// neighbor lists of the others).
struct TreeSpec {
  std::vector<std::pair<int, std::vector<int>>> rotations;
};

// A tree embedded in a disk, encoded as a rotation system (ccw neighbor
// lists). Faces and corners are derived by the boundary walk. Immutable
// after construction.
class EmbeddedTree {
 public:
  static EmbeddedTree load(const TreeSpec& spec);

  int vertex_count() const { return static_cast<int>(rot_.size()); }
  int edge_count() const { return vertex_count() - 1; }
  int face_count() const { return static_cast<int>(face_corners_.size()); }
  int leaf_count() const { return face_count(); }

  int label(VertexId v) const { return labels_[v]; }
  VertexId vertex_by_label(int label) const;

  bool is_leaf(VertexId v) const { return rot_[v].size() == 1; }
  int degree(VertexId v) const { return static_cast<int>(rot_[v].size()); }
  const std::vector<VertexId>& neighbors(VertexId v) const { return rot_[v]; }
  const std::vector<VertexId>& interior_vertices() const { return interior_; }
  // Leaves in counterclockwise order around the disk boundary, starting at
  // the smallest label.
  const std::vector<VertexId>& leaves_ccw() const { return leaves_ccw_; }

  bool adjacent(VertexId u, VertexId v) const;
  // Position of neighbor w in rot(v); throws if not adjacent.
  int rot_index(VertexId v, VertexId w) const;
  VertexId rot_succ(VertexId v, VertexId w) const;  // next ccw neighbor
  VertexId rot_pred(VertexId v, VertexId w) const;  // next cw neighbor

  // Face on the left of the directed edge v->w.
  FaceId face_left(VertexId v, VertexId w) const;
  FaceId face_right(VertexId v, VertexId w) const { return face_left(w, v); }

  // Corners. corner_index is dense over all (interior v, incident face).
  const std::vector<Corner>& corners() const { return corners_; }
  int corner_index(const Corner& c) const;
  // Face of the wedge between rot(v)[i] and rot(v)[i+1].
  FaceId wedge_face(VertexId v, int i) const;
  // The corner at the same vertex immediately clockwise/counterclockwise.
  Corner corner_step(const Corner& c, Dir d) const;
  const std::vector<Corner>& corners_of_face(FaceId f) const {
    return face_corners_[f];
  }

  // Turn of the directed walk a -> v -> b at v. Throws NotACorner unless the
  // two edges are cyclically adjacent at v. With ccw rotation lists, the
  // outgoing edge being the immediate ccw successor of the incoming one is a
  // right turn (the traversed face sits on the turning side).
  Turn turn(VertexId a, VertexId v, VertexId b) const;
  // Face traversed by the walk a -> v -> b (the common face of both edges).
  FaceId traversed_face(VertexId a, VertexId v, VertexId b) const;

  // Edges. Interior edges (both endpoints interior) come first, sorted by
  // endpoint labels; these index the tiling-algebra quiver vertices.
  EdgeId edge_index(VertexId u, VertexId v) const;
  std::pair<VertexId, VertexId> edge(EdgeId e) const { return edges_[e]; }
  int interior_edge_count() const { return n_interior_edges_; }
  bool is_interior_edge(EdgeId e) const { return e < n_interior_edges_; }

  // Unique path between two vertices.
  std::vector<VertexId> path(VertexId u, VertexId v) const;

  // Canonical code for embedded isomorphism (orientation-preserving).
  std::string canonical_code() const;

  TreeSpec to_spec() const;

 private:
  std::vector<std::vector<VertexId>> rot_;
  std::vector<int> labels_;
  std::vector<VertexId> interior_;
  std::vector<VertexId> leaves_ccw_;
  std::vector<std::vector<FaceId>> wedge_face_;     // per vertex, per wedge
  std::vector<std::vector<Corner>> face_corners_;   // per face
  std::vector<Corner> corners_;
  std::vector<std::vector<int>> corner_index_;      // per vertex, per wedge
  std::vector<std::pair<VertexId, VertexId>> edges_;
  int n_interior_edges_ = 0;

  void build_faces();
};

}  // namespace treelat
