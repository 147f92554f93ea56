#include "treelat/tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace treelat {

EmbeddedTree EmbeddedTree::load(const TreeSpec& spec) {
  // Collect the full label set. Leaves may appear only as neighbors.
  std::set<int> label_set;
  for (const auto& [lab, nbrs] : spec.rotations) {
    label_set.insert(lab);
    for (int n : nbrs) label_set.insert(n);
  }
  if (label_set.empty()) throw NotATree("empty tree spec");

  EmbeddedTree t;
  t.labels_.assign(label_set.begin(), label_set.end());
  std::map<int, VertexId> by_label;
  for (int i = 0; i < static_cast<int>(t.labels_.size()); ++i)
    by_label[t.labels_[i]] = i;

  int V = static_cast<int>(t.labels_.size());
  t.rot_.assign(V, {});
  std::vector<bool> listed(V, false);
  for (const auto& [lab, nbrs] : spec.rotations) {
    VertexId v = by_label.at(lab);
    if (listed[v]) throw NotATree("vertex listed twice: " + std::to_string(lab));
    listed[v] = true;
    std::set<int> seen;
    for (int n : nbrs) {
      if (n == lab || !seen.insert(n).second)
        throw NotATree("bad neighbor list at vertex " + std::to_string(lab));
      t.rot_[v].push_back(by_label.at(n));
    }
  }
  // Fill in omitted leaves and check symmetry of adjacency.
  for (VertexId v = 0; v < V; ++v) {
    for (VertexId w : t.rot_[v]) {
      if (!listed[w]) {
        t.rot_[w].push_back(v);
        listed[w] = true;
      }
    }
  }
  for (VertexId v = 0; v < V; ++v) {
    if (!listed[v] || t.rot_[v].empty())
      throw NotATree("isolated vertex " + std::to_string(t.labels_[v]));
    for (VertexId w : t.rot_[v]) {
      const auto& back = t.rot_[w];
      if (std::find(back.begin(), back.end(), v) == back.end())
        throw NotATree("asymmetric adjacency at vertex " +
                       std::to_string(t.labels_[v]));
    }
  }

  // Connected and acyclic.
  int E2 = 0;
  for (VertexId v = 0; v < V; ++v) E2 += static_cast<int>(t.rot_[v].size());
  if (E2 != 2 * (V - 1)) throw NotATree("edge count does not match a tree");
  {
    std::vector<bool> vis(V, false);
    std::vector<VertexId> stack{0};
    vis[0] = true;
    int seen = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : t.rot_[v])
        if (!vis[w]) {
          vis[w] = true;
          ++seen;
          stack.push_back(w);
        }
    }
    if (seen != V) throw NotATree("graph is disconnected");
  }

  for (VertexId v = 0; v < V; ++v) {
    int d = static_cast<int>(t.rot_[v].size());
    if (d == 2)
      throw InteriorDegreeTooSmall("interior vertex " +
                                   std::to_string(t.labels_[v]) +
                                   " has degree 2");
    if (d >= 3) t.interior_.push_back(v);
  }
  if (t.interior_.empty())
    throw NoInteriorVertex("tree has no interior vertex");

  // Edges: interior first, each sorted by labels.
  std::vector<std::pair<VertexId, VertexId>> interior_edges, leaf_edges;
  for (VertexId v = 0; v < V; ++v)
    for (VertexId w : t.rot_[v]) {
      if (t.labels_[v] > t.labels_[w]) continue;
      auto e = std::make_pair(v, w);
      if (!t.is_leaf(v) && !t.is_leaf(w))
        interior_edges.push_back(e);
      else
        leaf_edges.push_back(e);
    }
  auto by_labels = [&](const auto& a, const auto& b) {
    return std::make_pair(t.labels_[a.first], t.labels_[a.second]) <
           std::make_pair(t.labels_[b.first], t.labels_[b.second]);
  };
  std::sort(interior_edges.begin(), interior_edges.end(), by_labels);
  std::sort(leaf_edges.begin(), leaf_edges.end(), by_labels);
  t.n_interior_edges_ = static_cast<int>(interior_edges.size());
  t.edges_ = std::move(interior_edges);
  t.edges_.insert(t.edges_.end(), leaf_edges.begin(), leaf_edges.end());

  t.build_faces();
  return t;
}

void EmbeddedTree::build_faces() {
  int V = vertex_count();
  // Boundary walk over all directed edges: after arriving at v along (u,v),
  // leave along the ccw predecessor of u at v. Each directed edge (v,w) gets
  // the face on its left; the walk meets the leaves in clockwise order and
  // each face is the run between two consecutive leaf visits.
  std::vector<std::vector<FaceId>> left(V);
  for (VertexId v = 0; v < V; ++v) left[v].assign(rot_[v].size(), -1);

  VertexId start_leaf = -1;
  for (VertexId v = 0; v < V; ++v)
    if (is_leaf(v) && (start_leaf == -1 || labels_[v] < labels_[start_leaf]))
      start_leaf = v;

  std::vector<VertexId> walk_leaves;  // clockwise order, starts at start_leaf
  struct Step {
    VertexId v;
    int i;  // leaving edge index in rot_[v]
  };
  std::vector<std::vector<Step>> face_steps;
  VertexId v = start_leaf;
  int i = 0;
  std::vector<Step> cur;
  int guard = 0;
  do {
    cur.push_back({v, i});
    VertexId w = rot_[v][i];
    // arrive at w along (v,w); leave along ccw predecessor of v
    int j = rot_index(w, v);
    int d = static_cast<int>(rot_[w].size());
    int k = (j - 1 + d) % d;
    if (is_leaf(w)) {
      walk_leaves.push_back(w);
      face_steps.push_back(std::move(cur));
      cur.clear();
    }
    v = w;
    i = k;
    if (++guard > 4 * V) throw NotATree("boundary walk failed to close");
  } while (!(v == start_leaf && i == 0));
  if (!cur.empty()) throw NotATree("boundary walk did not end at a leaf");

  // Faces indexed in ccw boundary order: the walk is clockwise, so reverse.
  // walk_leaves ends with the return to start_leaf.
  int L = static_cast<int>(walk_leaves.size());
  leaves_ccw_.assign(L, -1);
  leaves_ccw_[0] = start_leaf;
  for (int r = 1; r < L; ++r) leaves_ccw_[r] = walk_leaves[L - 1 - r];

  wedge_face_.assign(V, {});
  corner_index_.assign(V, {});
  for (VertexId u = 0; u < V; ++u) {
    wedge_face_[u].assign(rot_[u].size(), -1);
    corner_index_[u].assign(rot_[u].size(), -1);
  }
  face_corners_.assign(L, {});
  // Run r of the walk (0-based; run 0 starts at start_leaf) is the face whose
  // ccw-most leaf is walk_leaves[(r + L - 1) % L]... we simply number faces so
  // that face f is the ccw sector ending at leaves_ccw_[(f+1) % L].
  for (int r = 0; r < L; ++r) {
    VertexId end_leaf = walk_leaves[r];
    // ccw position of this sector: it ends (ccw) at the leaf the run started
    // from, which is walk_leaves[r-1] (start_leaf for r = 0).
    VertexId ccw_most = (r == 0) ? start_leaf : walk_leaves[r - 1];
    int pos = static_cast<int>(std::find(leaves_ccw_.begin(),
                                         leaves_ccw_.end(), ccw_most) -
                               leaves_ccw_.begin());
    FaceId f = (pos + L - 1) % L;  // sector from leaves_ccw_[f] to ccw_most
    for (const Step& s : face_steps[r]) {
      // face on the left of (s.v, rot_[s.v][s.i]) is f; the wedge at s.v
      // starting at that neighbor is f as well.
      left[s.v][s.i] = f;
      wedge_face_[s.v][s.i] = f;
    }
    (void)end_leaf;
  }

  for (VertexId u : interior_) {
    for (int w = 0; w < degree(u); ++w) {
      FaceId f = wedge_face_[u][w];
      corner_index_[u][w] = static_cast<int>(corners_.size());
      corners_.push_back({u, f});
      face_corners_[f].push_back({u, f});
    }
  }
}

VertexId EmbeddedTree::vertex_by_label(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label)
    throw TreeError("no vertex with label " + std::to_string(label));
  return static_cast<VertexId>(it - labels_.begin());
}

bool EmbeddedTree::adjacent(VertexId u, VertexId v) const {
  const auto& r = rot_[u];
  return std::find(r.begin(), r.end(), v) != r.end();
}

int EmbeddedTree::rot_index(VertexId v, VertexId w) const {
  const auto& r = rot_[v];
  auto it = std::find(r.begin(), r.end(), w);
  if (it == r.end())
    throw TreeError("vertices not adjacent: " + std::to_string(labels_[v]) +
                    "," + std::to_string(labels_[w]));
  return static_cast<int>(it - r.begin());
}

VertexId EmbeddedTree::rot_succ(VertexId v, VertexId w) const {
  int i = rot_index(v, w);
  return rot_[v][(i + 1) % rot_[v].size()];
}

VertexId EmbeddedTree::rot_pred(VertexId v, VertexId w) const {
  int i = rot_index(v, w);
  int d = static_cast<int>(rot_[v].size());
  return rot_[v][(i - 1 + d) % d];
}

FaceId EmbeddedTree::face_left(VertexId v, VertexId w) const {
  // left of v->w is the wedge at v starting at neighbor w
  return wedge_face_[v][rot_index(v, w)];
}

int EmbeddedTree::corner_index(const Corner& c) const {
  for (int w = 0; w < degree(c.v); ++w)
    if (wedge_face_[c.v][w] == c.face) return corner_index_[c.v][w];
  throw TreeError("no such corner");
}

FaceId EmbeddedTree::wedge_face(VertexId v, int i) const {
  return wedge_face_[v][i];
}

Corner EmbeddedTree::corner_step(const Corner& c, Dir d) const {
  int deg = degree(c.v);
  int w = -1;
  for (int i = 0; i < deg; ++i)
    if (wedge_face_[c.v][i] == c.face) w = i;
  if (w < 0) throw TreeError("no such corner");
  int step = (d == Dir::ccw) ? 1 : deg - 1;
  return {c.v, wedge_face_[c.v][(w + step) % deg]};
}

Turn EmbeddedTree::turn(VertexId a, VertexId v, VertexId b) const {
  if (rot_succ(v, a) == b) return Turn::right;
  if (rot_succ(v, b) == a) return Turn::left;
  throw NotACorner("edges not cyclically adjacent at vertex " +
                   std::to_string(labels_[v]));
}

FaceId EmbeddedTree::traversed_face(VertexId a, VertexId v, VertexId b) const {
  // the common face of edges (v,a),(v,b): the wedge between them
  if (rot_succ(v, a) == b) return wedge_face_[v][rot_index(v, a)];
  if (rot_succ(v, b) == a) return wedge_face_[v][rot_index(v, b)];
  throw NotACorner("edges not cyclically adjacent at vertex " +
                   std::to_string(labels_[v]));
}

EdgeId EmbeddedTree::edge_index(VertexId u, VertexId v) const {
  if (labels_[u] > labels_[v]) std::swap(u, v);
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e)
    if (edges_[e] == std::make_pair(u, v)) return e;
  throw TreeError("no such edge");
}

std::vector<VertexId> EmbeddedTree::path(VertexId u, VertexId v) const {
  std::vector<VertexId> parent(vertex_count(), -1);
  std::vector<VertexId> stack{u};
  parent[u] = u;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    if (x == v) break;
    for (VertexId w : rot_[x])
      if (parent[w] == -1) {
        parent[w] = x;
        stack.push_back(w);
      }
  }
  std::vector<VertexId> p;
  for (VertexId x = v;; x = parent[x]) {
    p.push_back(x);
    if (x == u) break;
  }
  std::reverse(p.begin(), p.end());
  return p;
}

std::string EmbeddedTree::canonical_code() const {
  // BFS relabeling from each directed leaf edge, following rotation order;
  // the minimum code over all starts is canonical for orientation-preserving
  // embedded isomorphism.
  std::string best;
  for (VertexId l = 0; l < vertex_count(); ++l) {
    if (!is_leaf(l)) continue;
    std::vector<int> new_id(vertex_count(), -1);
    std::vector<VertexId> entry(vertex_count(), -1);  // BFS entry neighbor
    std::vector<VertexId> order;
    new_id[l] = 0;
    entry[l] = rot_[l][0];
    order.push_back(l);
    size_t qi = 0;
    while (qi < order.size()) {
      VertexId v = order[qi++];
      int j = rot_index(v, entry[v]);
      int d = degree(v);
      for (int k = 0; k < d; ++k) {
        VertexId w = rot_[v][(j + k) % d];
        if (new_id[w] == -1) {
          new_id[w] = static_cast<int>(order.size());
          entry[w] = v;
          order.push_back(w);
        }
      }
    }
    std::ostringstream code;
    for (VertexId v : order) {
      code << degree(v) << ':';
      int j = rot_index(v, entry[v]);
      int d = degree(v);
      for (int k = 0; k < d; ++k) code << new_id[rot_[v][(j + k) % d]] << ',';
      code << ';';
    }
    std::string s = code.str();
    if (best.empty() || s < best) best = s;
  }
  return best;
}

TreeSpec EmbeddedTree::to_spec() const {
  TreeSpec spec;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (is_leaf(v)) continue;
    std::vector<int> nbrs;
    for (VertexId w : rot_[v]) nbrs.push_back(labels_[w]);
    spec.rotations.emplace_back(labels_[v], std::move(nbrs));
  }
  return spec;
}

}  // namespace treelat
