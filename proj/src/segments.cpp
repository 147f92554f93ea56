#include "treelat/segments.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <string>

namespace treelat {

namespace {

// Checks the arc/segment incidence condition on a path's interior vertices.
bool path_has_corners(const EmbeddedTree& t, const std::vector<VertexId>& p) {
  for (size_t i = 1; i + 1 < p.size(); ++i) {
    if (t.rot_succ(p[i], p[i - 1]) != p[i + 1] &&
        t.rot_succ(p[i], p[i + 1]) != p[i - 1])
      return false;
  }
  return true;
}

}  // namespace

Segments::Segments(const EmbeddedTree& t) : t_(&t) {
  const auto& interior = t.interior_vertices();
  // Interior labels are sorted by construction, so pairs come out in
  // canonical order.
  for (size_t i = 0; i < interior.size(); ++i)
    for (size_t j = i + 1; j < interior.size(); ++j) {
      auto p = t.path(interior[i], interior[j]);
      if (p.size() < 2 || !path_has_corners(t, p)) continue;
      segs_.push_back({std::move(p)});
    }
  if (count() > 64) throw TreeError("more than 64 segments; out of desk scale");

  turns_.resize(count());
  for (SegId s = 0; s < count(); ++s) {
    const auto& p = segs_[s].path;
    for (size_t i = 1; i + 1 < p.size(); ++i)
      turns_[s].push_back(t.turn(p[i - 1], p[i], p[i + 1]));
  }

  // Composition table. s1 o s2 needs a unique shared endpoint, disjoint
  // interiors, and the concatenation must again be a segment.
  compose_.assign(static_cast<size_t>(count()) * count(), -1);
  for (SegId a = 0; a < count(); ++a)
    for (SegId b = 0; b < count(); ++b) {
      if (a == b) continue;
      const auto& pa = segs_[a].path;
      const auto& pb = segs_[b].path;
      // find shared endpoint
      std::array<VertexId, 2> ea{pa.front(), pa.back()};
      std::array<VertexId, 2> eb{pb.front(), pb.back()};
      VertexId shared = -1;
      int n_shared = 0;
      for (VertexId x : ea)
        for (VertexId y : eb)
          if (x == y) {
            shared = x;
            ++n_shared;
          }
      if (n_shared != 1) continue;
      std::vector<VertexId> joined;
      auto append = [&](const std::vector<VertexId>& p, bool from_shared) {
        if (from_shared == (p.front() == shared))
          joined.insert(joined.end(), p.begin(), p.end());
        else
          joined.insert(joined.end(), p.rbegin(), p.rend());
      };
      append(pa, false);
      joined.pop_back();
      append(pb, true);
      // disjoint apart from the shared endpoint
      std::vector<VertexId> sorted = joined;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        continue;
      if (!path_has_corners(t, joined)) continue;
      SegId c = id_of_path(joined);
      if (c >= 0) {
        compose_[a * count() + b] = c;
        if (a < b) triples_.push_back({a, b, c});  // composition is symmetric
      }
    }

  // C_s / K_s over subsegments of the canonical orientation.
  cs_.assign(count(), 0);
  ks_.assign(count(), 0);
  for (SegId s = 0; s < count(); ++s) {
    const auto& p = segs_[s].path;
    int l = segs_[s].edge_len();
    for (int i = 0; i <= l; ++i)
      for (int j = i + 1; j <= l; ++j) {
        SegId sub = id_by_endpoints(p[i], p[j]);
        if (sub < 0) continue;
        bool c_ok = (i == 0 || turn_at(s, i) == Turn::right) &&
                    (j == l || turn_at(s, j) == Turn::left);
        bool k_ok = (i == 0 || turn_at(s, i) == Turn::left) &&
                    (j == l || turn_at(s, j) == Turn::right);
        if (c_ok) cs_[s] |= seg_bit(sub);
        if (k_ok) ks_[s] |= seg_bit(sub);
      }
  }
}

SegId Segments::id_by_endpoints(VertexId u, VertexId v) const {
  if (t_->label(u) > t_->label(v)) std::swap(u, v);
  for (SegId s = 0; s < count(); ++s)
    if (segs_[s].from() == u && segs_[s].to() == v) return s;
  return -1;
}

SegId Segments::id_of_path(const std::vector<VertexId>& path) const {
  if (path.size() < 2) return -1;
  return id_by_endpoints(path.front(), path.back());
}

SegSet Segments::closure(SegSet x) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& tr : triples_)
      if (seg_in(x, tr.a) && seg_in(x, tr.b) && !seg_in(x, tr.c)) {
        x |= seg_bit(tr.c);
        changed = true;
      }
  }
  return x;
}

bool Segments::is_closed(SegSet x) const {
  for (const auto& tr : triples_)
    if (seg_in(x, tr.a) && seg_in(x, tr.b) && !seg_in(x, tr.c)) return false;
  return true;
}

bool Segments::is_biclosed(SegSet x) const {
  for (const auto& tr : triples_) {
    bool a = seg_in(x, tr.a), b = seg_in(x, tr.b), c = seg_in(x, tr.c);
    if (a && b && !c) return false;
    if (!a && !b && c) return false;
  }
  return true;
}

std::pair<Corner, Corner> Segments::endpoints(const ColoredSegment& c) const {
  const auto& p = segs_[c.seg].path;
  auto flag = [&](VertexId v, VertexId toward) -> Corner {
    FaceId f = (c.color == Color::green) ? t_->face_left(v, toward)
                                         : t_->face_right(v, toward);
    return {v, f};
  };
  return {flag(p.front(), p[1]), flag(p.back(), p[p.size() - 2])};
}

std::vector<VertexId> Segments::common_path(SegId a, SegId b) const {
  const auto& pa = segs_[a].path;
  const auto& pb = segs_[b].path;
  std::vector<VertexId> common;
  for (VertexId v : pa)
    if (std::find(pb.begin(), pb.end(), v) != pb.end()) common.push_back(v);
  // the intersection of two tree paths is a path; common is contiguous in pa
  for (size_t i = 1; i < common.size(); ++i)
    assert(t_->adjacent(common[i - 1], common[i]));
  return common;
}

bool Segments::colored_cross(const ColoredSegment& a,
                             const ColoredSegment& b) const {
  auto ea = endpoints(a);
  auto eb = endpoints(b);
  if (ea.first == eb.first || ea.first == eb.second ||
      ea.second == eb.first || ea.second == eb.second)
    return true;

  std::vector<VertexId> t = common_path(a.seg, b.seg);
  if (t.size() < 2) return false;

  // Slot positions around the shared corridor, in cyclic order:
  //   0 z(a,L)   1 T_L at a   2 T_L at b   3 z(b,red)=L side
  //   4 z(b,green)=R side   5 T_R at b   6 T_R at a   7 z(a,R)
  // Two curves cross iff their slot pairs interleave.
  VertexId va = t.front(), vb = t.back();
  auto slots = [&](const ColoredSegment& c) -> std::pair<int, int> {
    const auto& p = segs_[c.seg].path;
    // the segment's edge at `end` outside the common path
    auto outward = [&](VertexId end, VertexId inward) -> VertexId {
      size_t i = std::find(p.begin(), p.end(), end) - p.begin();
      if (i + 1 < p.size() && p[i + 1] == inward) return p[i - 1];
      return p[i + 1];
    };
    int sa, sb;
    if (p.front() == va || p.back() == va)
      sa = (c.color == Color::green) ? 0 : 7;
    else {
      // travel enters the corridor at a: out -> a -> t[1]
      Turn tn = t_->turn(outward(va, t[1]), va, t[1]);
      sa = (tn == Turn::left) ? 1 : 6;
    }
    if (p.front() == vb || p.back() == vb)
      sb = (c.color == Color::green) ? 4 : 3;
    else {
      // travel leaves the corridor at b: t[-2] -> b -> out
      Turn tn = t_->turn(t[t.size() - 2], vb, outward(vb, t[t.size() - 2]));
      sb = (tn == Turn::left) ? 2 : 5;
    }
    return {sa, sb};
  };
  std::pair<int, int> sa = slots(a), sb = slots(b);
  assert(sa.first != sb.first && sa.second != sb.second);
  // interleaved on the 8-cycle: exactly one of b's slots lies in the open
  // arc between a's slots
  auto inside = [&](int x) {
    for (int k = (sa.first + 1) % 8; k != sa.second; k = (k + 1) % 8)
      if (k == x) return true;
    return false;
  };
  return inside(sb.first) != inside(sb.second);
}

std::string Segments::seg_name(SegId s) const {
  return std::to_string(t_->label(segs_[s].from())) + "-" +
         std::to_string(t_->label(segs_[s].to()));
}

}  // namespace treelat
