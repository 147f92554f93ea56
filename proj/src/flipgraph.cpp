#include "treelat/flipgraph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace treelat {

NoncrossingComplex::NoncrossingComplex(const Arcs& arcs)
    : t_(&arcs.tree()), segs_(&arcs.segments()), arcs_(&arcs) {}

bool NoncrossingComplex::pairwise_noncrossing(
    const std::vector<ArcId>& as) const {
  for (size_t i = 0; i < as.size(); ++i)
    for (size_t j = i + 1; j < as.size(); ++j)
      if (arcs_->cross(as[i], as[j])) return false;
  return true;
}

bool NoncrossingComplex::is_facet(const std::vector<ArcId>& as) const {
  if (!pairwise_noncrossing(as)) return false;
  for (ArcId a = 0; a < arcs_->count(); ++a) {
    if (std::find(as.begin(), as.end(), a) != as.end()) continue;
    bool compatible = true;
    for (ArcId b : as)
      if (arcs_->cross(a, b)) compatible = false;
    if (compatible) return false;  // extendable
  }
  return true;
}

Facet NoncrossingComplex::make_facet(std::vector<ArcId> as) const {
  std::sort(as.begin(), as.end());
  if (!is_facet(as)) throw TreeError("arc set is not a facet");
  Facet f;
  f.arcs = std::move(as);
  const auto& corners = t_->corners();
  f.marks.assign(corners.size(), -1);
  for (size_t ci = 0; ci < corners.size(); ++ci) {
    const Corner& c = corners[ci];
    ArcId best = -1;
    for (ArcId a : f.arcs) {
      if (!arcs_->contains_corner(a, c)) continue;
      if (best < 0 ||
          (arcs_->region_of(best, c.face) & ~arcs_->region_of(a, c.face)) == 0)
        best = a;
    }
    assert(best >= 0);  // boundary arcs cover every corner
    f.marks[ci] = best;
  }
  return f;
}

int NoncrossingComplex::facet_rank() const {
  return (static_cast<int>(t_->corners().size()) - t_->face_count()) / 2;
}

ArcId NoncrossingComplex::arc_from_corner(const Corner& c, SegSet x) const {
  int wedge = -1;
  for (int i = 0; i < t_->degree(c.v); ++i)
    if (t_->wedge_face(c.v, i) == c.face) wedge = i;
  assert(wedge >= 0);
  VertexId a = t_->neighbors(c.v)[wedge];
  VertexId b = t_->neighbors(c.v)[(wedge + 1) % t_->degree(c.v)];

  auto extend = [&](VertexId first) {
    std::vector<VertexId> p{c.v, first};
    while (!t_->is_leaf(p.back())) {
      VertexId u = p.back();
      SegId vu = segs_->id_by_endpoints(c.v, u);
      assert(vu >= 0);
      VertexId prev = p[p.size() - 2];
      VertexId next =
          seg_in(x, vu) ? t_->rot_pred(u, prev) : t_->rot_succ(u, prev);
      p.push_back(next);
    }
    return p;
  };
  std::vector<VertexId> left = extend(a), right = extend(b);
  std::vector<VertexId> path(left.rbegin(), left.rend());
  path.insert(path.end(), right.begin() + 1, right.end());
  ArcId id = arcs_->id_by_endpoints(path.front(), path.back());
  assert(id >= 0);
  // the unique leaf-to-leaf path equals the constructed one
  assert(arcs_->arc(id).path == path ||
         std::equal(path.rbegin(), path.rend(), arcs_->arc(id).path.begin()));
  return id;
}

Facet NoncrossingComplex::eta(SegSet x) const {
  std::vector<ArcId> as;
  for (const Corner& c : t_->corners()) as.push_back(arc_from_corner(c, x));
  std::sort(as.begin(), as.end());
  as.erase(std::unique(as.begin(), as.end()), as.end());
  return make_facet(std::move(as));
}

SegSet NoncrossingComplex::phi(const Facet& f) const {
  SegSet u = 0;
  for (ArcId a : f.arcs) u |= arcs_->cp(a);
  return segs_->closure(u);
}

std::vector<Corner> NoncrossingComplex::marked_corners(const Facet& f,
                                                       ArcId p) const {
  std::vector<Corner> cs;
  const auto& corners = t_->corners();
  for (size_t ci = 0; ci < corners.size(); ++ci)
    if (f.marks[ci] == p) cs.push_back(corners[ci]);
  return cs;
}

SegId NoncrossingComplex::marked_segment(const Facet& f, ArcId p) const {
  auto mc = marked_corners(f, p);
  if (mc.size() != 2) throw BoundaryArcNotFlippable("arc is marked once");
  SegId s = segs_->id_by_endpoints(mc[0].v, mc[1].v);
  assert(s >= 0);
  return s;
}

FlipResult NoncrossingComplex::flip(const Facet& f, ArcId p) const {
  if (arcs_->is_boundary(p))
    throw BoundaryArcNotFlippable("boundary arcs cannot be flipped");
  auto mc = marked_corners(f, p);
  assert(mc.size() == 2);
  SegId s = marked_segment(f, p);
  const auto& spath0 = segs_->seg(s).path;

  // orient the exchange segment from each marked corner's vertex
  auto neighbor_along = [&](VertexId v) {
    // next vertex from v along the segment
    if (spath0.front() == v) return spath0[1];
    assert(spath0.back() == v);
    return spath0[spath0.size() - 2];
  };

  bool fwd[2];
  Corner opposite[2];
  for (int k = 0; k < 2; ++k) {
    VertexId v = mc[k].v;
    VertexId w = neighbor_along(v);
    FaceId l = t_->face_left(v, w), r = t_->face_right(v, w);
    assert(mc[k].face == l || mc[k].face == r);
    fwd[k] = (mc[k].face == l);
    opposite[k] = {v, mc[k].face == l ? r : l};
  }
  assert(fwd[0] == fwd[1]);  // orientation consistent at both endpoints

  // q is assembled from the arcs marked at the opposite corners: their tails
  // away from the segment, joined through the segment itself
  auto tail_away = [&](ArcId a, VertexId v) {
    const auto& ap = arcs_->arc(a).path;
    size_t i = std::find(ap.begin(), ap.end(), v) - ap.begin();
    assert(i < ap.size());
    VertexId toward = neighbor_along(v);
    std::vector<VertexId> tail;
    if (i + 1 < ap.size() && ap[i + 1] == toward)
      for (size_t k = i; k-- > 0;) tail.push_back(ap[k]);
    else {
      assert(i > 0 && ap[i - 1] == toward);
      for (size_t k = i + 1; k < ap.size(); ++k) tail.push_back(ap[k]);
    }
    return tail;  // from just past v to the leaf
  };
  ArcId q2 = f.marks[t_->corner_index(opposite[0])];
  ArcId q1 = f.marks[t_->corner_index(opposite[1])];
  std::vector<VertexId> t2 = tail_away(q2, mc[0].v);
  std::vector<VertexId> t1 = tail_away(q1, mc[1].v);

  std::vector<VertexId> spath = spath0;
  if (spath.front() != mc[0].v) std::reverse(spath.begin(), spath.end());
  std::vector<VertexId> qpath(t2.rbegin(), t2.rend());
  qpath.insert(qpath.end(), spath.begin(), spath.end());
  qpath.insert(qpath.end(), t1.begin(), t1.end());
  ArcId q = arcs_->id_by_endpoints(qpath.front(), qpath.back());
  assert(q >= 0 && q != p);

  FlipResult res;
  res.removed = p;
  res.added = q;
  res.label = s;
  res.forward = fwd[0];
  std::vector<ArcId> as = f.arcs;
  as.erase(std::remove(as.begin(), as.end(), p), as.end());
  as.push_back(q);
  res.facet = make_facet(std::move(as));
  return res;
}

int OrientedFlipGraph::index_of(const Facet& f) const {
  for (size_t i = 0; i < facets.size(); ++i)
    if (facets[i].arcs == f.arcs) return static_cast<int>(i);
  return -1;
}

OrientedFlipGraph build_flip_graph(const NoncrossingComplex& ncc) {
  if (ncc.segments().count() > 20)
    throw DeskScaleError("flip graph enumeration needs at most 20 segments");
  // flip-BFS from eta(empty); the quotient lattice is connected via covers
  std::vector<Facet> facets{ncc.eta(0)};
  std::map<std::vector<ArcId>, int> index{{facets[0].arcs, 0}};
  struct Edge {
    int from, to;
    SegId label;
  };
  std::vector<Edge> edges;
  for (size_t i = 0; i < facets.size(); ++i) {
    Facet f = facets[i];
    for (ArcId p : f.arcs) {
      if (ncc.arcs().is_boundary(p)) continue;
      FlipResult r = ncc.flip(f, p);
      auto [it, fresh] = index.emplace(r.facet.arcs, facets.size());
      if (fresh) facets.push_back(r.facet);
      if (r.forward)
        edges.push_back({static_cast<int>(i), it->second, r.label});
    }
  }

  // canonical topological order of the flip orientation, ties by arc set
  int n = static_cast<int>(facets.size());
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (const auto& e : edges) {
    out[e.from].push_back(e.to);
    ++indeg[e.to];
  }
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  while (static_cast<int>(order.size()) < n) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!placed[v] && indeg[v] == 0 &&
          (best < 0 || facets[v].arcs < facets[best].arcs))
        best = v;
    if (best < 0) throw TreeError("oriented flip graph has a directed cycle");
    placed[best] = 1;
    order.push_back(best);
    for (int w : out[best]) --indeg[w];
  }
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  OrientedFlipGraph g;
  g.facets.resize(n);
  for (int i = 0; i < n; ++i) g.facets[pos[i]] = facets[i];
  std::vector<Cover> covers;
  for (const auto& e : edges)
    covers.push_back({pos[e.from], pos[e.to], e.label});
  g.lattice = FiniteLattice::build(n, covers);
  return g;
}

}  // namespace treelat
