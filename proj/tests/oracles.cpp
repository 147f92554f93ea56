#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace treelat::oracle {

std::vector<std::vector<ArcId>> facets_exhaustive(const Arcs& arcs) {
  int n = arcs.count();
  std::vector<std::vector<ArcId>> maximal;
  // grow noncrossing sets arc by arc (increasing ids), keep the ones no arc
  // extends
  std::vector<ArcId> cur;
  std::function<void(ArcId)> rec = [&](ArcId start) {
    bool extendable = false;
    for (ArcId a = 0; a < n; ++a) {
      bool ok = true;
      for (ArcId b : cur)
        if (a == b || arcs.cross(a, b)) ok = false;
      if (!ok) continue;
      extendable = true;
      if (a >= start) {
        cur.push_back(a);
        rec(a + 1);
        cur.pop_back();
      }
    }
    if (!extendable) maximal.push_back(cur);
  };
  rec(0);
  std::sort(maximal.begin(), maximal.end());
  maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
  return maximal;
}

std::vector<SegSet> biclosed_exhaustive(const Segments& segs) {
  std::vector<SegSet> out;
  SegSet all = segs.all();
  for (SegSet x = 0;; ++x) {
    if (segs.is_biclosed(x)) out.push_back(x);
    if (x == all) break;
  }
  return out;
}

std::vector<SegSet> torsf_exhaustive(const TilingAlgebra& alg) {
  const Segments& segs = alg.segments();
  int n = segs.count();
  std::vector<SegSet> out;
  SegSet all = segs.all();
  for (SegSet x = 0;; ++x) {
    bool ok = true;
    for (SegId u = 0; u < n && ok; ++u) {
      if (!seg_in(x, u)) continue;
      if (alg.submodule_segs(u) & ~x) ok = false;  // submodule-closed
    }
    for (SegId u = 0; u < n && ok; ++u)
      for (SegId v = 0; v < n && ok; ++v) {
        if (!seg_in(x, u) || !seg_in(x, v)) continue;
        if (alg.ext_dim(u, v) != 1) continue;
        for (SegId m : alg.ext_middle(u, v))
          if (!seg_in(x, m)) ok = false;  // extension-closed
      }
    if (ok) out.push_back(x);
    if (x == all) break;
  }
  return out;
}

namespace {

// exchange matrix of the framed quiver: rows = mutable vertices, columns =
// mutable then frozen copies
using BMat = std::vector<std::vector<int>>;

BMat framed_matrix(const TilingAlgebra& alg) {
  int n = alg.vertex_count();
  BMat b(n, std::vector<int>(2 * n, 0));
  for (const auto& a : alg.arrows()) {
    b[a.from][a.to] += 1;
    b[a.to][a.from] -= 1;
  }
  for (int i = 0; i < n; ++i) b[i][n + i] = 1;
  return b;
}

BMat mutate_matrix(const BMat& b, int k) {
  int n = static_cast<int>(b.size());
  int m = static_cast<int>(b[0].size());
  BMat r = b;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == k || j == k)
        r[i][j] = -b[i][j];
      else
        r[i][j] = b[i][j] +
                  (std::abs(b[i][k]) * b[k][j] + b[i][k] * std::abs(b[k][j])) /
                      2;
    }
  return r;
}

CMatrix c_of(const BMat& b) {
  int n = static_cast<int>(b.size());
  CMatrix c;
  for (int i = 0; i < n; ++i)
    c.rows.emplace_back(b[i].begin() + n, b[i].end());
  c.canonicalize();
  return c;
}

// quivers are identified up to isomorphism fixing the frozen vertices:
// simultaneous permutation of the rows and the mutable columns
BMat canonical_form(const BMat& b) {
  int n = static_cast<int>(b.size());
  if (n > 7) throw std::runtime_error("canonical form needs a small quiver");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  BMat best = b;
  do {
    BMat p(n, std::vector<int>(2 * n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < 2 * n; ++j)
        p[perm[i]][j < n ? perm[j] : j] = b[i][j];
    if (p < best) best = p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// BFS over the mutation class of the framed quiver
std::vector<std::pair<int, int>> mutation_bfs(const TilingAlgebra& alg,
                                              std::vector<BMat>* states_out) {
  int n = alg.vertex_count();
  std::vector<BMat> states{framed_matrix(alg)};
  std::map<BMat, int> index{{canonical_form(states[0]), 0}};
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> edge_set;
  for (size_t i = 0; i < states.size(); ++i) {
    BMat b = states[i];
    for (int k = 0; k < n; ++k) {
      bool pos = false, neg = false;
      for (int j = n; j < 2 * n; ++j) {
        if (b[k][j] > 0) pos = true;
        if (b[k][j] < 0) neg = true;
      }
      if (pos == neg) throw std::runtime_error("c-vector not sign-coherent");
      BMat nb = mutate_matrix(b, k);
      auto [it, fresh] = index.emplace(canonical_form(nb), states.size());
      if (fresh) states.push_back(nb);
      if (pos && edge_set.emplace(static_cast<int>(i), it->second).second)
        edges.emplace_back(static_cast<int>(i), it->second);
      if (states.size() > 100000)
        throw std::runtime_error("exchange graph too large");
    }
  }
  if (states_out) *states_out = std::move(states);
  return edges;
}

}  // namespace

std::set<CMatrix> cmat_by_mutation(const TilingAlgebra& alg) {
  std::vector<BMat> states;
  mutation_bfs(alg, &states);
  std::set<CMatrix> out;
  for (const auto& b : states) out.insert(c_of(b));
  return out;
}

ExchangeGraph oriented_exchange_graph(const TilingAlgebra& alg) {
  ExchangeGraph g;
  std::vector<BMat> states;
  g.edges = mutation_bfs(alg, &states);
  g.n_vertices = static_cast<int>(states.size());
  return g;
}

bool semidistributive_bruteforce(const FiniteLattice& l) {
  int n = l.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (l.meet(x, z) == l.meet(y, z) &&
            l.meet(l.join(x, y), z) != l.meet(x, z))
          return false;
        if (l.join(x, z) == l.join(y, z) &&
            l.join(l.meet(x, y), z) != l.join(x, z))
          return false;
      }
  return true;
}

bool generates_all_segments(const TilingAlgebra& alg, const SmcCollection& x) {
  const Segments& segs = alg.segments();
  SegSet have = 0;
  for (const auto& o : x.objects) have |= seg_bit(o.seg);
  bool grew = true;
  while (grew) {
    grew = false;
    auto add = [&](SegId s) {
      if (s >= 0 && !seg_in(have, s)) {
        have |= seg_bit(s);
        grew = true;
      }
    };
    for (SegId a = 0; a < segs.count(); ++a)
      for (SegId b = 0; b < segs.count(); ++b) {
        if (!seg_in(have, a) || !seg_in(have, b) || a == b) continue;
        // extension triangle: composition at a shared endpoint
        if (auto c = segs.compose(a, b)) add(*c);
        // cone triangle: strands sharing an endpoint and overlapping split
        // into the two support differences
        const auto& pa = segs.seg(a).path;
        const auto& pb = segs.seg(b).path;
        VertexId shared = -1;
        for (VertexId e1 : {pa.front(), pa.back()})
          for (VertexId e2 : {pb.front(), pb.back()})
            if (e1 == e2) shared = e1;
        if (shared < 0) continue;
        auto common = segs.common_path(a, b);
        if (common.size() < 2) continue;
        VertexId junction =
            (common.front() == shared) ? common.back() : common.front();
        for (const auto* p : {&pa, &pb}) {
          VertexId far = (p->front() == shared) ? p->back() : p->front();
          if (far != junction) add(segs.id_by_endpoints(junction, far));
        }
      }
  }
  return have == segs.all();
}

}  // namespace treelat::oracle
