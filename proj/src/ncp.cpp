#include "treelat/ncp.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>

namespace treelat {

void TreePartition::canonicalize() {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
}

bool TreePartition::refines(const TreePartition& o) const {
  for (const auto& b : blocks) {
    bool inside = false;
    for (const auto& c : o.blocks)
      if (std::includes(c.begin(), c.end(), b.begin(), b.end())) inside = true;
    if (!inside) return false;
  }
  return true;
}

std::vector<SegId> min_segments(const Segments& segs,
                                const std::vector<VertexId>& block) {
  std::vector<SegId> out;
  for (size_t i = 0; i < block.size(); ++i)
    for (size_t j = i + 1; j < block.size(); ++j) {
      SegId s = segs.id_by_endpoints(block[i], block[j]);
      if (s < 0) continue;
      const auto& p = segs.seg(s).path;
      bool minimal = true;
      for (size_t k = 1; k + 1 < p.size(); ++k)
        if (std::find(block.begin(), block.end(), p[k]) != block.end())
          minimal = false;
      if (minimal) out.push_back(s);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SegId> partition_segments(const Segments& segs,
                                      const TreePartition& p) {
  std::vector<SegId> out;
  for (const auto& b : p.blocks) {
    auto ms = min_segments(segs, b);
    out.insert(out.end(), ms.begin(), ms.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_segment_connected(const Segments& segs,
                          const std::vector<VertexId>& block) {
  if (block.size() <= 1) return true;
  auto ms = min_segments(segs, block);
  std::map<VertexId, int> pos;
  for (size_t i = 0; i < block.size(); ++i) pos[block[i]] = static_cast<int>(i);
  std::vector<int> uf(block.size());
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return uf[x] == x ? x : uf[x] = find(uf[x]);
  };
  for (SegId s : ms)
    uf[find(pos[segs.seg(s).from()])] = find(pos[segs.seg(s).to()]);
  for (size_t i = 1; i < block.size(); ++i)
    if (find(0) != find(static_cast<int>(i))) return false;
  return true;
}

bool is_ncp(const Segments& segs, const TreePartition& p) {
  for (const auto& b : p.blocks)
    if (!is_segment_connected(segs, b)) return false;
  auto ss = partition_segments(segs, p);
  for (size_t i = 0; i < ss.size(); ++i)
    for (size_t j = i + 1; j < ss.size(); ++j)
      if (segs.colored_cross({ss[i], Color::red}, {ss[j], Color::red}))
        return false;
  return true;
}

TreePartition partition_from_segments(const Segments& segs,
                                      const std::vector<SegId>& ss) {
  const EmbeddedTree& t = segs.tree();
  const auto& interior = t.interior_vertices();
  std::map<VertexId, int> pos;
  for (size_t i = 0; i < interior.size(); ++i)
    pos[interior[i]] = static_cast<int>(i);
  std::vector<int> uf(interior.size());
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return uf[x] == x ? x : uf[x] = find(uf[x]);
  };
  for (SegId s : ss)
    uf[find(pos[segs.seg(s).from()])] = find(pos[segs.seg(s).to()]);
  std::map<int, std::vector<VertexId>> comps;
  for (size_t i = 0; i < interior.size(); ++i)
    comps[find(static_cast<int>(i))].push_back(interior[i]);
  TreePartition p;
  for (auto& [root, vs] : comps) p.blocks.push_back(std::move(vs));
  p.canonicalize();
  return p;
}

RedGreenTree red_green_complete(const Segments& segs,
                                const std::vector<SegId>& red) {
  TreePartition p = partition_from_segments(segs, red);
  if (!is_ncp(segs, p) || partition_segments(segs, p) != [&] {
        auto r = red;
        std::sort(r.begin(), r.end());
        return r;
      }())
    throw NotNCP("red segments are not the minimal segments of a "
                 "noncrossing tree partition");

  const EmbeddedTree& t = segs.tree();
  int n_interior = static_cast<int>(t.interior_vertices().size());
  std::map<VertexId, int> pos;
  for (int i = 0; i < n_interior; ++i) pos[t.interior_vertices()[i]] = i;

  std::vector<ColoredSegment> current;
  for (SegId s : red) current.push_back({s, Color::red});

  std::vector<int> uf(n_interior);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return uf[x] == x ? x : uf[x] = find(uf[x]);
  };
  int comps = n_interior;
  for (SegId s : red) {
    int a = find(pos[segs.seg(s).from()]), b = find(pos[segs.seg(s).to()]);
    if (a != b) {
      uf[a] = b;
      --comps;
    }
  }

  // The completion is unique, so a combination search (increasing ids, with
  // backtracking) terminates at exactly that green set.
  std::vector<SegId> green;
  std::function<bool(SegId, int)> grow = [&](SegId start, int ncomp) -> bool {
    if (ncomp == 1) return true;
    for (SegId g = start; g < segs.count(); ++g) {
      int a = find(pos[segs.seg(g).from()]), b = find(pos[segs.seg(g).to()]);
      if (a == b) continue;
      ColoredSegment cg{g, Color::green};
      bool ok = true;
      for (const auto& c : current)
        if (segs.colored_cross(cg, c)) ok = false;
      if (!ok) continue;
      std::vector<int> saved = uf;
      uf[a] = b;
      current.push_back(cg);
      green.push_back(g);
      if (grow(g + 1, ncomp - 1)) return true;
      green.pop_back();
      current.pop_back();
      uf = saved;
    }
    return false;
  };
  if (!grow(0, comps))
    throw NotNCP("no red-green completion exists");
  RedGreenTree rg;
  rg.red = red;
  std::sort(rg.red.begin(), rg.red.end());
  rg.green = std::move(green);
  std::sort(rg.green.begin(), rg.green.end());
  assert(static_cast<int>(rg.red.size() + rg.green.size()) == n_interior - 1);
  return rg;
}

TreePartition kreweras_complement(const Segments& segs,
                                  const TreePartition& p) {
  if (!is_ncp(segs, p)) throw NotNCP("partition is not noncrossing");
  RedGreenTree rg = red_green_complete(segs, partition_segments(segs, p));
  return partition_from_segments(segs, rg.green);
}

TreePartition rho(const NoncrossingComplex& ncc, const Facet& f) {
  std::vector<SegId> lower;
  for (ArcId p : f.arcs) {
    if (ncc.arcs().is_boundary(p)) continue;
    FlipResult r = ncc.flip(f, p);
    if (!r.forward) lower.push_back(r.label);
  }
  TreePartition b = partition_from_segments(ncc.segments(), lower);
  assert(is_ncp(ncc.segments(), b));
  return b;
}

NcpLattice enumerate_ncp(const NoncrossingComplex& ncc,
                         const OrientedFlipGraph* fg) {
  const Segments& segs = ncc.segments();
  const auto& interior = ncc.tree().interior_vertices();
  std::vector<TreePartition> found;
  if (fg) {
    for (const Facet& f : fg->facets) found.push_back(rho(ncc, f));
    std::sort(found.begin(), found.end());
    auto dup = std::adjacent_find(found.begin(), found.end());
    assert(dup == found.end());  // rho is a bijection
    (void)dup;
  } else {
    if (interior.size() > 9)
      throw TreeError("interior too large to filter set partitions");
    // enumerate set partitions by restricted growth strings
    int n = static_cast<int>(interior.size());
    std::vector<int> assign(n, 0);
    std::function<void(int, int)> rec = [&](int i, int maxb) {
      if (i == n) {
        TreePartition p;
        p.blocks.assign(maxb, {});
        for (int k = 0; k < n; ++k) p.blocks[assign[k]].push_back(interior[k]);
        p.canonicalize();
        if (is_ncp(segs, p)) found.push_back(p);
        return;
      }
      for (int b = 0; b <= maxb; ++b) {
        assign[i] = b;
        rec(i + 1, std::max(maxb, b + 1));
      }
    };
    rec(0, 0);
    std::sort(found.begin(), found.end());
  }

  // refinement order; finer partitions (more blocks) come first
  std::stable_sort(found.begin(), found.end(),
                   [](const TreePartition& a, const TreePartition& b) {
                     return a.blocks.size() > b.blocks.size();
                   });
  int n = static_cast<int>(found.size());
  std::vector<Bits> below(n, Bits(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && found[i].refines(found[j])) below[j].set(i);
  std::vector<Cover> covers;
  for (int j = 0; j < n; ++j)
    below[j].for_each([&](int i) {
      bool is_cover = true;
      below[j].for_each([&](int k) {
        if (k != i && below[k].test(i)) is_cover = false;
      });
      if (is_cover) covers.push_back({i, j, -1});
    });
  NcpLattice out;
  out.elements = std::move(found);
  out.lattice = FiniteLattice::build(n, std::move(covers));
  return out;
}

int NcpLattice::index_of(const TreePartition& p) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == p) return static_cast<int>(i);
  return -1;
}

EmbeddedTree contract_tree(const Segments& segs,
                           const std::vector<VertexId>& block) {
  if (!is_segment_connected(segs, block))
    throw NotSegmentConnected("block is not segment-connected");
  const EmbeddedTree& t = segs.tree();
  auto ms = min_segments(segs, block);

  int next_leaf = 0;
  for (VertexId v = 0; v < t.vertex_count(); ++v)
    next_leaf = std::max(next_leaf, t.label(v) + 1);

  TreeSpec spec;
  for (VertexId u : block) {
    std::vector<int> nbrs;
    for (VertexId x : t.neighbors(u)) {
      VertexId other = -1;
      for (SegId s : ms) {
        const auto& p = segs.seg(s).path;
        if (p.front() == u && p[1] == x) other = p.back();
        if (p.back() == u && p[p.size() - 2] == x) other = p.front();
      }
      nbrs.push_back(other >= 0 ? t.label(other) : next_leaf++);
    }
    spec.rotations.emplace_back(t.label(u), std::move(nbrs));
  }
  return EmbeddedTree::load(spec);
}

std::string partition_name(const EmbeddedTree& t, const TreePartition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    if (i) s += ",";
    s += "{";
    for (size_t j = 0; j < p.blocks[i].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(t.label(p.blocks[i][j]));
    }
    s += "}";
  }
  return s + ")";
}

}  // namespace treelat
