#include "treelat/polygon.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace treelat {

void PolygonSubdivision::canonicalize() {
  for (auto& d : diagonals)
    if (d.first > d.second) std::swap(d.first, d.second);
  std::sort(diagonals.begin(), diagonals.end());
}

PolygonSubdivision tree_to_subdivision(const EmbeddedTree& t) {
  PolygonSubdivision s;
  s.n = t.face_count();
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    if (!t.is_interior_edge(e)) continue;
    auto [u, v] = t.edge(e);
    s.diagonals.emplace_back(t.face_left(u, v), t.face_left(v, u));
  }
  s.canonicalize();
  return s;
}

PolygonSubdivision facet_to_subdivision(const NoncrossingComplex& ncc,
                                        const Facet& f) {
  const EmbeddedTree& t = ncc.tree();
  const auto& lccw = t.leaves_ccw();
  int L = static_cast<int>(lccw.size());
  // face whose ccw-most leaf is the given leaf
  auto face_of_leaf = [&](VertexId l) {
    int pos =
        static_cast<int>(std::find(lccw.begin(), lccw.end(), l) - lccw.begin());
    return (pos + L - 1) % L;
  };
  PolygonSubdivision s;
  s.n = L;
  for (ArcId a : f.arcs) {
    if (ncc.arcs().is_boundary(a)) continue;
    const Arc& arc = ncc.arcs().arc(a);
    s.diagonals.emplace_back(face_of_leaf(arc.from()), face_of_leaf(arc.to()));
  }
  s.canonicalize();
  return s;
}

PolygonSubdivision rotate(const PolygonSubdivision& s) {
  PolygonSubdivision r;
  r.n = s.n;
  for (auto [a, b] : s.diagonals)
    r.diagonals.emplace_back((a + s.n - 1) % s.n, (b + s.n - 1) % s.n);
  r.canonicalize();
  return r;
}

EmbeddedTree subdivision_to_tree(const PolygonSubdivision& s) {
  int L = s.n;
  // planar graph on the polygon vertices: boundary edges plus diagonals
  std::vector<std::vector<int>> adj(L);
  auto add = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int i = 0; i < L; ++i) add(i, (i + 1) % L);
  for (auto [a, b] : s.diagonals) add(a, b);
  // ccw rotation at a convex-position vertex: neighbors by (w - v) mod L
  for (int v = 0; v < L; ++v)
    std::sort(adj[v].begin(), adj[v].end(), [&](int a, int b) {
      return (a - v + L) % L < (b - v + L) % L;
    });

  // face walk: arriving along (u,v), leave along the ccw predecessor of u;
  // each directed edge lies in the face on its left
  auto next_step = [&](int u, int v) {
    const auto& r = adj[v];
    int i = static_cast<int>(std::find(r.begin(), r.end(), u) - r.begin());
    return std::make_pair(v, r[(i - 1 + static_cast<int>(r.size())) %
                               static_cast<int>(r.size())]);
  };
  std::map<std::pair<int, int>, int> cell_of;  // directed edge -> cell id
  std::vector<std::vector<std::pair<int, int>>> cells;
  // outer face is to the left of the clockwise boundary edge (1,0)
  {
    std::pair<int, int> e{1 % L, 0};
    do {
      cell_of[e] = -1;
      e = next_step(e.first, e.second);
    } while (e != std::make_pair(1 % L, 0));
  }
  for (int v = 0; v < L; ++v)
    for (int w : adj[v]) {
      std::pair<int, int> e{v, w};
      if (cell_of.count(e)) continue;
      int id = static_cast<int>(cells.size());
      cells.emplace_back();
      auto cur = e;
      do {
        cell_of[cur] = id;
        cells[id].push_back(cur);
        cur = next_step(cur.first, cur.second);
      } while (cur != e);
    }

  // dual tree: a vertex per cell, a leaf per boundary edge
  TreeSpec spec;
  int next_label = static_cast<int>(cells.size()) + 1;
  for (size_t c = 0; c < cells.size(); ++c) {
    std::vector<int> nbrs;
    for (auto [u, v] : cells[c]) {
      bool is_boundary = (v == (u + 1) % L) || (u == (v + 1) % L);
      auto rev = std::make_pair(v, u);
      int other = cell_of.at(rev);
      if (is_boundary && other == -1)
        nbrs.push_back(next_label++);
      else
        nbrs.push_back(static_cast<int>(other) + 1);
    }
    spec.rotations.emplace_back(static_cast<int>(c) + 1, std::move(nbrs));
  }
  return EmbeddedTree::load(spec);
}

}  // namespace treelat
