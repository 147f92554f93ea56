#include "treelat/arcs.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

namespace treelat {

namespace {

bool path_has_corners(const EmbeddedTree& t, const std::vector<VertexId>& p) {
  for (size_t i = 1; i + 1 < p.size(); ++i) {
    if (t.rot_succ(p[i], p[i - 1]) != p[i + 1] &&
        t.rot_succ(p[i], p[i + 1]) != p[i - 1])
      return false;
  }
  return true;
}

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
  void unite(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace

Arcs::Arcs(const Segments& segs) : t_(&segs.tree()), segs_(&segs) {
  const EmbeddedTree& t = *t_;
  std::vector<VertexId> leaves;
  for (VertexId v = 0; v < t.vertex_count(); ++v)
    if (t.is_leaf(v)) leaves.push_back(v);

  for (size_t i = 0; i < leaves.size(); ++i)
    for (size_t j = i + 1; j < leaves.size(); ++j) {
      auto p = t.path(leaves[i], leaves[j]);
      if (path_has_corners(t, p)) arcs_.push_back({std::move(p)});
    }

  int n = count();
  regions_.resize(n);
  corners_.resize(n);
  boundary_.assign(n, false);
  face_arc_.assign(t.face_count(), -1);
  cp_.assign(n, 0);
  kp_.assign(n, 0);

  for (ArcId a = 0; a < n; ++a) {
    const auto& p = arcs_[a].path;
    // Corners traversed at the interior vertices of the arc.
    for (size_t i = 1; i + 1 < p.size(); ++i)
      corners_[a].push_back(
          {p[i], t.traversed_face(p[i - 1], p[i], p[i + 1])});

    // Regions: faces connected across edges the arc does not use.
    std::vector<char> on_arc(t.vertex_count() * t.vertex_count(), 0);
    auto mark = [&](VertexId u, VertexId v) {
      on_arc[u * t.vertex_count() + v] = 1;
      on_arc[v * t.vertex_count() + u] = 1;
    };
    for (size_t i = 0; i + 1 < p.size(); ++i) mark(p[i], p[i + 1]);
    UnionFind uf(t.face_count());
    for (VertexId u = 0; u < t.vertex_count(); ++u)
      for (VertexId v : t.neighbors(u)) {
        if (u > v || on_arc[u * t.vertex_count() + v]) continue;
        uf.unite(t.face_left(u, v), t.face_left(v, u));
      }
    FaceSet side0 = 0, side1 = 0;
    int root0 = uf.find(0);
    for (FaceId f = 0; f < t.face_count(); ++f)
      (uf.find(f) == root0 ? side0 : side1) |= FaceSet{1} << f;
    assert(side1 != 0);  // an arc separates the disk
    regions_[a] = {side0, side1};

    int c0 = __builtin_popcountll(side0), c1 = __builtin_popcountll(side1);
    if (c0 == 1 || c1 == 1) {
      boundary_[a] = true;
      FaceSet single = (c0 == 1) ? side0 : side1;
      face_arc_[__builtin_ctzll(single)] = a;
    }

    // C_p / K_p over interior subsegments (both turn conditions mandatory).
    int l = static_cast<int>(p.size()) - 1;
    auto turn_of = [&](int i) { return t.turn(p[i - 1], p[i], p[i + 1]); };
    for (int i = 1; i < l; ++i)
      for (int j = i + 1; j < l; ++j) {
        SegId sub = segs.id_by_endpoints(p[i], p[j]);
        if (sub < 0) continue;
        if (turn_of(i) == Turn::right && turn_of(j) == Turn::left)
          cp_[a] |= seg_bit(sub);
        if (turn_of(i) == Turn::left && turn_of(j) == Turn::right)
          kp_[a] |= seg_bit(sub);
      }
  }
  for (FaceId f = 0; f < t.face_count(); ++f) assert(face_arc_[f] >= 0);

  // Crossing matrix: a common segment must exist (two adjacent interior
  // vertices shared) and no region of one side may contain a region of the
  // other.
  cross_.assign(static_cast<size_t>(n) * n, 0);
  for (ArcId a = 0; a < n; ++a)
    for (ArcId b = a + 1; b < n; ++b) {
      const auto& pa = arcs_[a].path;
      const auto& pb = arcs_[b].path;
      int shared_interior = 0;
      std::vector<VertexId> shared;
      for (VertexId v : pa)
        if (!t.is_leaf(v) &&
            std::find(pb.begin(), pb.end(), v) != pb.end()) {
          ++shared_interior;
          shared.push_back(v);
        }
      bool common_segment = false;
      for (size_t i = 0; i + 1 < shared.size(); ++i)
        if (t.adjacent(shared[i], shared[i + 1])) common_segment = true;
      if (!common_segment || shared_interior < 2) continue;
      auto [a0, a1] = regions_[a];
      auto [b0, b1] = regions_[b];
      auto subset = [](FaceSet x, FaceSet y) { return (x & ~y) == 0; };
      bool contained = false;
      for (FaceSet x : {a0, a1})
        for (FaceSet y : {b0, b1})
          if (subset(x, y) || subset(y, x)) contained = true;
      if (!contained) cross_[a * n + b] = cross_[b * n + a] = 1;
    }
}

ArcId Arcs::id_by_endpoints(VertexId l1, VertexId l2) const {
  if (t_->label(l1) > t_->label(l2)) std::swap(l1, l2);
  for (ArcId a = 0; a < count(); ++a)
    if (arcs_[a].from() == l1 && arcs_[a].to() == l2) return a;
  return -1;
}

FaceSet Arcs::region_of(ArcId a, FaceId f) const {
  auto [r0, r1] = regions_[a];
  return (r0 >> f) & 1 ? r0 : r1;
}

bool Arcs::contains_corner(ArcId a, const Corner& c) const {
  for (const Corner& d : corners_[a])
    if (d == c) return true;
  return false;
}

std::string Arcs::arc_name(ArcId a) const {
  std::string s = "(";
  for (size_t i = 0; i < arcs_[a].path.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t_->label(arcs_[a].path[i]));
  }
  return s + ")";
}

}  // namespace treelat
