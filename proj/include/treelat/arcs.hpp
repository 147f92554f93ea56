#pragma once

#include <cstdint>
#include <vector>

#include "treelat/segments.hpp"

namespace treelat {

using ArcId = int;
using FaceSet = std::uint64_t;  // bitset over FaceId

// Acyclic path between two distinct leaves whose consecutive edges share a
// face. Stored with the smaller endpoint label first.
struct Arc {
  std::vector<VertexId> path;
  VertexId from() const { return path.front(); }
  VertexId to() const { return path.back(); }
};

// Arc table for one tree: all arcs with their regions, containment order at
// corners, and the pairwise crossing matrix.
class Arcs {
 public:
  explicit Arcs(const Segments& segs);

  const EmbeddedTree& tree() const { return *t_; }
  const Segments& segments() const { return *segs_; }

  int count() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(ArcId a) const { return arcs_[a]; }
  ArcId id_by_endpoints(VertexId leaf1, VertexId leaf2) const;  // -1 if none
  bool is_boundary(ArcId a) const { return boundary_[a]; }
  // Boundary arc hugging a face.
  ArcId boundary_arc_of_face(FaceId f) const { return face_arc_[f]; }

  // The two complementary face sets cut out by the arc.
  std::pair<FaceSet, FaceSet> regions(ArcId a) const { return regions_[a]; }
  FaceSet region_of(ArcId a, FaceId f) const;

  bool contains_corner(ArcId a, const Corner& c) const;
  const std::vector<Corner>& corners_of(ArcId a) const { return corners_[a]; }

  bool cross(ArcId a, ArcId b) const { return cross_[a * count() + b]; }

  // Interior subsegments turning right at the start and left at the end
  // (C_p), and the left/right swap (K_p); orientation-independent as sets.
  SegSet cp(ArcId a) const { return cp_[a]; }
  SegSet kp(ArcId a) const { return kp_[a]; }

  std::string arc_name(ArcId a) const;  // "(l1 v .. v l2)" by labels

 private:
  const EmbeddedTree* t_;
  const Segments* segs_;
  std::vector<Arc> arcs_;
  std::vector<bool> boundary_;
  std::vector<ArcId> face_arc_;
  std::vector<std::pair<FaceSet, FaceSet>> regions_;
  std::vector<std::vector<Corner>> corners_;
  std::vector<char> cross_;
  std::vector<SegSet> cp_, kp_;
};

}  // namespace treelat
