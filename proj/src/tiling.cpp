#include "treelat/tiling.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace treelat {

std::vector<SegId> SmcCollection::degree_segs(int degree) const {
  std::vector<SegId> out;
  for (const auto& o : objects)
    if (o.degree == degree) out.push_back(o.seg);
  return out;
}

TilingAlgebra::TilingAlgebra(const Segments& segs)
    : t_(&segs.tree()), segs_(&segs), n_(segs.tree().interior_edge_count()) {
  const EmbeddedTree& t = *t_;
  // one arrow per corner whose two flanking edges are both interior,
  // directed toward the counterclockwise flank
  for (VertexId v : t.interior_vertices()) {
    int d = t.degree(v);
    for (int i = 0; i < d; ++i) {
      VertexId a = t.neighbors(v)[i];
      VertexId b = t.neighbors(v)[(i + 1) % d];
      if (t.is_leaf(a) || t.is_leaf(b)) continue;
      Corner c{v, t.wedge_face(v, i)};
      arrows_.push_back({t.edge_index(v, a), t.edge_index(v, b), c});
    }
  }
  // relations: composable arrow pairs whose corners sit at one tree vertex
  for (int i = 0; i < static_cast<int>(arrows_.size()); ++i)
    for (int j = 0; j < static_cast<int>(arrows_.size()); ++j)
      if (arrows_[i].to == arrows_[j].from &&
          arrows_[i].corner.v == arrows_[j].corner.v)
        relations_.emplace_back(i, j);
}

bool TilingAlgebra::is_gentle(std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  std::vector<int> out(n_, 0), in(n_, 0);
  for (const auto& a : arrows_) {
    ++out[a.from];
    ++in[a.to];
  }
  for (int v = 0; v < n_; ++v)
    if (out[v] > 2 || in[v] > 2) return fail("more than two arrows at a vertex");
  auto is_relation = [&](int i, int j) {
    for (auto [a, b] : relations_)
      if (a == i && b == j) return true;
    return false;
  };
  for (int b = 0; b < static_cast<int>(arrows_.size()); ++b) {
    int comp_free = 0, comp_rel = 0, pre_free = 0, pre_rel = 0;
    for (int a = 0; a < static_cast<int>(arrows_.size()); ++a) {
      if (arrows_[b].to == arrows_[a].from)
        (is_relation(b, a) ? comp_rel : comp_free)++;
      if (arrows_[a].to == arrows_[b].from)
        (is_relation(a, b) ? pre_rel : pre_free)++;
    }
    if (comp_free > 1 || comp_rel > 1 || pre_free > 1 || pre_rel > 1)
      return fail("gentle conditions ii/iii violated");
  }
  return true;
}

int TilingAlgebra::arrow_between(EdgeId a, EdgeId b) const {
  for (int i = 0; i < static_cast<int>(arrows_.size()); ++i)
    if (arrows_[i].from == a && arrows_[i].to == b) return i;
  return -1;
}

std::vector<EdgeId> TilingAlgebra::support(SegId s) const {
  const auto& p = segs_->seg(s).path;
  std::vector<EdgeId> e;
  for (size_t i = 0; i + 1 < p.size(); ++i)
    e.push_back(t_->edge_index(p[i], p[i + 1]));
  return e;
}

bool TilingAlgebra::junction_forward(SegId s, int i) const {
  return segs_->turn_at(s, i) == Turn::right;
}

int TilingAlgebra::hom_dim(SegId u, SegId v) const {
  // a nonzero map factors M(u) ->> M(w) '-> M(v); quotient substrings of u
  // are K_u, submodule substrings of v are C_v
  return (segs_->ks(u) & segs_->cs(v)) ? 1 : 0;
}

int TilingAlgebra::ext_dim(SegId top, SegId bot) const {
  if (top == bot) return 0;
  std::vector<VertexId> common = segs_->common_path(top, bot);
  if (common.empty()) return 0;
  const auto& pt = segs_->seg(top).path;
  const auto& pb = segs_->seg(bot).path;
  auto is_end = [](const std::vector<VertexId>& p, VertexId v) {
    return p.front() == v || p.back() == v;
  };
  if (common.size() == 1) {
    VertexId w = common[0];
    if (!is_end(pt, w) || !is_end(pb, w)) return 0;
    if (!segs_->compose(bot, top)) return 0;
    // a nonsplit extension needs the string (bot <- top): the walk out of
    // the bot side must turn left into the top side at w
    VertexId into_bot = (pb.front() == w) ? pb[1] : pb[pb.size() - 2];
    VertexId into_top = (pt.front() == w) ? pt[1] : pt[pt.size() - 2];
    return t_->turn(into_bot, w, into_top) == Turn::left ? 1 : 0;
  }
  // overlap along a segment: no shared endpoints allowed, then the pattern
  // bot = u1 <- w -> u2, top = v1 -> w <- v2 says w in K_bot and w in C_top
  VertexId a = common.front(), b = common.back();
  if ((is_end(pt, a) && is_end(pb, a)) || (is_end(pt, b) && is_end(pb, b)))
    return 0;
  SegId w = segs_->id_by_endpoints(a, b);
  assert(w >= 0);
  return (seg_in(segs_->ks(bot), w) && seg_in(segs_->cs(top), w)) ? 1 : 0;
}

std::vector<SegId> TilingAlgebra::ext_middle(SegId top, SegId bot) const {
  if (ext_dim(top, bot) != 1) throw NoExtension("ext_dim is zero");
  std::vector<VertexId> common = segs_->common_path(top, bot);
  const auto& pt = segs_->seg(top).path;
  const auto& pb = segs_->seg(bot).path;
  if (common.size() == 1) {
    // single summand M(bot <- top), the composed segment
    SegId j = segs_->compose(bot, top).value();
    return {j};
  }
  VertexId a = common.front(), b = common.back();
  // part of segment s strictly beyond vertex x, walking away from the
  // common path; empty when s ends at x
  auto beyond = [&](const std::vector<VertexId>& p, VertexId x,
                    VertexId inward) {
    std::vector<VertexId> out;
    size_t i = std::find(p.begin(), p.end(), x) - p.begin();
    if (i + 1 < p.size() && p[i + 1] == inward) {
      for (size_t k = i; k-- > 0;) out.push_back(p[k]);
    } else if (i > 0 && p[i - 1] == inward) {
      for (size_t k = i + 1; k < p.size(); ++k) out.push_back(p[k]);
    }
    return out;  // oriented away from x
  };
  VertexId a_in = common[1], b_in = common[common.size() - 2];
  auto assemble = [&](const std::vector<VertexId>& before,
                      const std::vector<VertexId>& after) {
    std::vector<VertexId> path(before.rbegin(), before.rend());
    path.insert(path.end(), common.begin(), common.end());
    path.insert(path.end(), after.begin(), after.end());
    SegId s = segs_->id_of_path(path);
    assert(s >= 0);
    return s;
  };
  std::vector<SegId> mid{
      assemble(beyond(pb, a, a_in), beyond(pt, b, b_in)),
      assemble(beyond(pt, a, a_in), beyond(pb, b, b_in))};
  std::sort(mid.begin(), mid.end());
  return mid;
}

int TilingAlgebra::SubcatLattice::index_of(SegSet x) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == x) return static_cast<int>(i);
  return -1;
}

namespace {

FiniteLattice inclusion_lattice(std::vector<SegSet>& elems) {
  std::sort(elems.begin(), elems.end(), [](SegSet a, SegSet b) {
    int ca = __builtin_popcountll(a), cb = __builtin_popcountll(b);
    return ca != cb ? ca < cb : a < b;
  });
  int n = static_cast<int>(elems.size());
  std::vector<Cover> covers;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || (elems[i] & ~elems[j])) continue;
      bool is_cover = true;
      for (int k = 0; k < n && is_cover; ++k)
        if (k != i && k != j && !(elems[i] & ~elems[k]) &&
            !(elems[k] & ~elems[j]))
          is_cover = false;
      if (is_cover) covers.push_back({i, j, -1});
    }
  return FiniteLattice::build(n, std::move(covers));
}

}  // namespace

TilingAlgebra::SubcatLattice TilingAlgebra::torsion_free_classes(
    const BicLattice& bic) const {
  std::set<SegSet> dedup;
  for (int i = 0; i < bic.size(); ++i) dedup.insert(bic.pi_down(bic.element(i)));
  SubcatLattice out;
  out.elements.assign(dedup.begin(), dedup.end());
  out.lattice = inclusion_lattice(out.elements);
  return out;
}

TilingAlgebra::SubcatLattice TilingAlgebra::wide_subcategories(
    const NcpLattice& ncp) const {
  std::set<SegSet> dedup;
  for (const auto& p : ncp.elements) {
    SegSet b = 0;
    for (SegId s : partition_segments(*segs_, p)) b |= seg_bit(s);
    dedup.insert(segs_->closure(b));
  }
  SubcatLattice out;
  out.elements.assign(dedup.begin(), dedup.end());
  out.lattice = inclusion_lattice(out.elements);
  return out;
}

SmcCollection TilingAlgebra::theta_map(const TreePartition& p) const {
  if (!is_ncp(*segs_, p)) throw NotNCP("partition is not noncrossing");
  SmcCollection x;
  for (SegId s : partition_segments(*segs_, p)) x.objects.push_back({s, -1});
  TreePartition kr = kreweras_complement(*segs_, p);
  for (SegId s : partition_segments(*segs_, kr)) x.objects.push_back({s, 0});
  x.canonicalize();
  assert(static_cast<int>(x.objects.size()) == n_);
  return x;
}

bool TilingAlgebra::is_2term_smc(const SmcCollection& x,
                                 std::string* why) const {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (static_cast<int>(x.objects.size()) != n_)
    return fail("collection must have one object per quiver vertex");
  for (size_t i = 0; i < x.objects.size(); ++i)
    for (size_t j = 0; j < x.objects.size(); ++j) {
      if (i == j) continue;
      const auto& oi = x.objects[i];
      const auto& oj = x.objects[j];
      if (oi.degree == oj.degree && hom_dim(oi.seg, oj.seg))
        return fail("Hom between same-degree objects");
      if (oi.degree == 0 && oj.degree == -1) {
        if (hom_dim(oi.seg, oj.seg))
          return fail("Hom from degree 0 into degree -1");
        if (ext_dim(oi.seg, oj.seg))
          return fail("Ext1 from degree 0 into degree -1");
      }
    }
  // generation: the degree -1 part must be Seg(B) of a noncrossing tree
  // partition whose Kreweras complement carries the degree 0 part
  std::vector<SegId> reds = x.degree_segs(-1), greens = x.degree_segs(0);
  TreePartition b = partition_from_segments(*segs_, reds);
  if (!is_ncp(*segs_, b) || partition_segments(*segs_, b) != reds)
    return fail("degree -1 objects are not the segments of a noncrossing "
                "tree partition");
  TreePartition kr = kreweras_complement(*segs_, b);
  if (partition_segments(*segs_, kr) != greens)
    return fail("degree 0 objects are not the Kreweras complement segments");
  return true;
}

SmcCollection TilingAlgebra::mutate(const SmcCollection& x, int k,
                                    bool left) const {
  const SmcObject at = x.objects.at(k);
  if (left && at.degree != 0)
    throw WrongDegreeForDirection("left mutation needs degree 0");
  if (!left && at.degree != -1)
    throw WrongDegreeForDirection("right mutation needs degree -1");

  auto edge_set = [&](SegId s) {
    SegSet e = 0;
    for (EdgeId i : support(s)) e |= SegSet{1} << i;
    return e;
  };
  // segment spanning a contiguous set of interior edges
  auto seg_of_edges = [&](SegSet edges) -> SegId {
    std::vector<VertexId> verts;
    for (int e = 0; e < n_; ++e)
      if ((edges >> e) & 1) {
        auto [u, v] = t_->edge(e);
        verts.push_back(u);
        verts.push_back(v);
      }
    std::sort(verts.begin(), verts.end());
    // endpoints appear once, inner vertices twice
    std::vector<VertexId> ends;
    for (size_t i = 0; i < verts.size();) {
      size_t j = i;
      while (j < verts.size() && verts[j] == verts[i]) ++j;
      if (j - i == 1) ends.push_back(verts[i]);
      i = j;
    }
    assert(ends.size() == 2);
    SegId s = segs_->id_by_endpoints(ends[0], ends[1]);
    assert(s >= 0 && edge_set(s) == edges);
    return s;
  };

  SmcCollection out;
  SegSet ek = edge_set(at.seg);
  for (int i = 0; i < static_cast<int>(x.objects.size()); ++i) {
    if (i == k) {
      out.objects.push_back({at.seg, left ? -1 : 0});
      continue;
    }
    const SmcObject oi = x.objects[i];
    SegSet ei = edge_set(oi.seg);
    SmcObject res = oi;
    if (left) {
      // X_k = M(v) in degree 0
      if (oi.degree == 0) {
        if (ext_dim(oi.seg, at.seg) == 1 && (ei & ek) == 0)
          res = {segs_->compose(at.seg, oi.seg).value(), 0};
      } else if (hom_dim(oi.seg, at.seg) == 1) {
        if ((ei & ~ek) == 0)
          res = {seg_of_edges(ek & ~ei), 0};
        else if ((ek & ~ei) == 0)
          res = {seg_of_edges(ei & ~ek), -1};
        else
          throw TreeError("mutation on an invalid collection");
      }
    } else {
      // X_k = M(u)[1] in degree -1
      if (oi.degree == -1) {
        if (ext_dim(at.seg, oi.seg) == 1 && (ei & ek) == 0)
          res = {segs_->compose(oi.seg, at.seg).value(), -1};
      } else if (hom_dim(at.seg, oi.seg) == 1) {
        if ((ei & ~ek) == 0)
          res = {seg_of_edges(ek & ~ei), -1};
        else if ((ek & ~ei) == 0)
          res = {seg_of_edges(ei & ~ek), 0};
        else
          throw TreeError("mutation on an invalid collection");
      }
    }
    out.objects.push_back(res);
  }
  out.canonicalize();
  return out;
}

CMatrix TilingAlgebra::c_matrix(const TreePartition& p) const {
  for (VertexId v : t_->interior_vertices())
    if (t_->degree(v) != 3)
      throw NotDegreeThree("c-matrices need all interior degrees 3");
  if (!is_ncp(*segs_, p)) throw NotNCP("partition is not noncrossing");
  auto phi_row = [&](SegId s, int sign) {
    std::vector<int> row(n_, 0);
    for (EdgeId e : support(s)) row[e] = sign;
    return row;
  };
  CMatrix c;
  for (SegId s : partition_segments(*segs_, p)) c.rows.push_back(phi_row(s, -1));
  TreePartition kr = kreweras_complement(*segs_, p);
  for (SegId s : partition_segments(*segs_, kr))
    c.rows.push_back(phi_row(s, +1));
  assert(static_cast<int>(c.rows.size()) == n_);
  c.canonicalize();
  return c;
}

}  // namespace treelat
