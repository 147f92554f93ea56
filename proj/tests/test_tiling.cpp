#include <algorithm>
#include <set>

#include "doctest.h"
#include "la_oracle.hpp"
#include "oracles.hpp"
#include "treelat/corpus.hpp"
#include "treelat/tiling.hpp"

using namespace treelat;

namespace {
struct Ctx {
  EmbeddedTree t;
  Segments segs;
  Arcs arcs;
  NoncrossingComplex ncc;
  TilingAlgebra alg;
  explicit Ctx(const TreeSpec& s)
      : t(EmbeddedTree::load(s)), segs(t), arcs(segs), ncc(arcs), alg(segs) {}
};
}  // namespace

TEST_CASE("quivers of the reference trees") {
  // the degree-4 center tree: a linear A3 quiver with one relation
  Ctx lin(corpus_linear3());
  CHECK(lin.alg.vertex_count() == 3);
  CHECK(lin.alg.arrows().size() == 2);
  CHECK(lin.alg.relations().size() == 1);
  CHECK(lin.alg.is_gentle());

  // the spider: a 3-cycle with all three compositions killed
  Ctx sp(corpus_spider3());
  CHECK(sp.alg.vertex_count() == 3);
  CHECK(sp.alg.arrows().size() == 3);
  CHECK(sp.alg.relations().size() == 3);
  CHECK(sp.alg.is_gentle());

  // one vertex, no arrows
  Ctx a1(corpus_a1());
  CHECK(a1.alg.vertex_count() == 1);
  CHECK(a1.alg.arrows().empty());
}

TEST_CASE("indecomposables are in bijection with segments") {
  CHECK(Ctx(corpus_spider3()).segs.count() == 6);  // the 3-cycle has 6 strings
  CHECK(Ctx(corpus_a1()).segs.count() == 1);
  CHECK(Ctx(corpus_a2()).segs.count() == 3);
}

TEST_CASE("hom/ext of the 3-cycle algebra against the linear oracle") {
  Ctx c(corpus_spider3());
  int homs = 0, exts = 0;
  for (SegId u = 0; u < c.segs.count(); ++u)
    for (SegId v = 0; v < c.segs.count(); ++v) {
      CHECK(c.alg.hom_dim(u, v) == oracle::la_hom_dim(c.alg, u, v));
      CHECK(c.alg.ext_dim(u, v) == oracle::la_ext_dim(c.alg, u, v));
      homs += c.alg.hom_dim(u, v);
      exts += c.alg.ext_dim(u, v);
    }
  CHECK(homs > 6);  // more than just the identities
  CHECK(exts > 0);
}

TEST_CASE("hom/ext match the linear oracle on every small tree") {
  for (const TreeSpec& spec : corpus_small(4)) {
    Ctx c(spec);
    if (c.t.interior_edge_count() > 4) continue;
    for (SegId u = 0; u < c.segs.count(); ++u)
      for (SegId v = 0; v < c.segs.count(); ++v) {
        CAPTURE(c.segs.seg_name(u));
        CAPTURE(c.segs.seg_name(v));
        CHECK(c.alg.hom_dim(u, v) == oracle::la_hom_dim(c.alg, u, v));
        CHECK(c.alg.ext_dim(u, v) == oracle::la_ext_dim(c.alg, u, v));
      }
  }
}

TEST_CASE("extensions at a shared endpoint compose the segments") {
  Ctx c(corpus_a2());
  VertexId v1 = c.t.vertex_by_label(1), v2 = c.t.vertex_by_label(2),
           v3 = c.t.vertex_by_label(3);
  SegId e1 = c.segs.id_by_endpoints(v1, v2), e2 = c.segs.id_by_endpoints(v2, v3);
  SegId e12 = c.segs.id_by_endpoints(v1, v3);
  // exactly one of the two orders has the extension
  int d1 = c.alg.ext_dim(e1, e2), d2 = c.alg.ext_dim(e2, e1);
  CHECK(d1 + d2 == 1);
  auto mid = c.alg.ext_middle(d1 ? e1 : e2, d1 ? e2 : e1);
  CHECK(mid == std::vector<SegId>{e12});
  CHECK_THROWS_AS(c.alg.ext_middle(e12, e12), NoExtension);
}

TEST_CASE("torsion-free classes agree with the closure filter oracle") {
  for (const TreeSpec& spec :
       {corpus_a1(), corpus_a2(), corpus_spider3(), corpus_linear3()}) {
    Ctx c(spec);
    BicLattice bic(c.ncc);
    auto torsf = c.alg.torsion_free_classes(bic);
    auto filtered = oracle::torsf_exhaustive(c.alg);
    std::vector<SegSet> got = torsf.elements;
    std::sort(got.begin(), got.end());
    std::sort(filtered.begin(), filtered.end());
    CHECK(got == filtered);
  }
}

TEST_CASE("A2 torsion-free classes: brute force gives five") {
  Ctx c(corpus_a2());
  CHECK(oracle::torsf_exhaustive(c.alg).size() == 5);
}

namespace {

// complement pieces of a subsegment inside a segment: the parts of `whole`
// strictly before and after `part`, each a segment (empty when absent)
std::vector<SegId> complement_pieces(const Segments& segs, SegId whole,
                                     SegId part) {
  const auto& pw = segs.seg(whole).path;
  const auto& pp = segs.seg(part).path;
  auto edge_in_part = [&](VertexId x, VertexId y) {
    for (size_t i = 0; i + 1 < pp.size(); ++i)
      if ((pp[i] == x && pp[i + 1] == y) || (pp[i] == y && pp[i + 1] == x))
        return true;
    return false;
  };
  std::vector<SegId> out;
  std::vector<VertexId> run{pw[0]};
  for (size_t i = 0; i + 1 < pw.size(); ++i) {
    if (edge_in_part(pw[i], pw[i + 1])) {
      if (run.size() >= 2) out.push_back(segs.id_of_path(run));
      run = {pw[i + 1]};
    } else {
      run.push_back(pw[i + 1]);
    }
  }
  if (run.size() >= 2) out.push_back(segs.id_of_path(run));
  for (SegId s : out) REQUIRE(s >= 0);
  return out;
}

}  // namespace

TEST_CASE("wide subcategories are kernel, cokernel and extension closed") {
  for (const TreeSpec& spec : {corpus_a2(), corpus_spider3(), corpus_linear3(),
                               corpus_arc_example()}) {
    Ctx c(spec);
    OrientedFlipGraph fg = build_flip_graph(c.ncc);
    NcpLattice ncp = enumerate_ncp(c.ncc, &fg);
    auto wide = c.alg.wide_subcategories(ncp);
    for (SegSet w : wide.elements) {
      for (SegId u = 0; u < c.segs.count(); ++u)
        for (SegId v = 0; v < c.segs.count(); ++v) {
          if (!seg_in(w, u) || !seg_in(w, v)) continue;
          if (u != v && c.alg.hom_dim(u, v)) {
            // image = the longest factor substring; image, kernel pieces and
            // cokernel pieces all stay inside the subcategory
            SegSet cands = c.segs.ks(u) & c.segs.cs(v);
            REQUIRE(cands != 0);
            SegId im = -1;
            for (SegId m = 0; m < c.segs.count(); ++m)
              if (seg_in(cands, m) &&
                  (im < 0 ||
                   c.segs.seg(m).edge_len() > c.segs.seg(im).edge_len()))
                im = m;
            CHECK(seg_in(w, im));
            for (SegId k : complement_pieces(c.segs, u, im))
              CHECK(seg_in(w, k));  // kernel of the surjection onto the image
            for (SegId k : complement_pieces(c.segs, v, im))
              CHECK(seg_in(w, k));  // cokernel of the inclusion of the image
          }
          if (c.alg.ext_dim(u, v) == 1)
            for (SegId m : c.alg.ext_middle(u, v)) CHECK(seg_in(w, m));
        }
    }
  }
}

TEST_CASE("theta images of the spider generate everything") {
  Ctx c(corpus_spider3());
  OrientedFlipGraph fg = build_flip_graph(c.ncc);
  NcpLattice ncp = enumerate_ncp(c.ncc, &fg);
  for (const auto& p : ncp.elements)
    CHECK(oracle::generates_all_segments(c.alg, c.alg.theta_map(p)));
}

TEST_CASE("theta images are valid and degree flips stay inside the family") {
  Ctx c(corpus_a2());
  OrientedFlipGraph fg = build_flip_graph(c.ncc);
  NcpLattice ncp = enumerate_ncp(c.ncc, &fg);
  std::set<SmcCollection> valid;
  for (const auto& p : ncp.elements) {
    SmcCollection x = c.alg.theta_map(p);
    CHECK(c.alg.is_2term_smc(x));
    CHECK(oracle::generates_all_segments(c.alg, x));
    valid.insert(x);
  }
  // flipping one object's degree either breaks the collection or lands on
  // another theta image (it never passes while being something new)
  int rejected = 0;
  for (const SmcCollection& x : valid)
    for (size_t k = 0; k < x.objects.size(); ++k) {
      SmcCollection y = x;
      y.objects[k].degree = -1 - y.objects[k].degree;
      y.canonicalize();
      if (c.alg.is_2term_smc(y))
        CHECK(valid.count(y) == 1);
      else
        ++rejected;
    }
  CHECK(rejected > 0);
}

TEST_CASE("mutation example on the A2 algebra") {
  Ctx c(corpus_a2());
  VertexId v1 = c.t.vertex_by_label(1), v2 = c.t.vertex_by_label(2),
           v3 = c.t.vertex_by_label(3);
  SegId e1 = c.segs.id_by_endpoints(v1, v2), e2 = c.segs.id_by_endpoints(v2, v3);
  SegId e12 = c.segs.id_by_endpoints(v1, v3);
  SmcCollection simples;
  simples.objects = {{e1, 0}, {e2, 0}};
  simples.canonicalize();
  REQUIRE(c.alg.is_2term_smc(simples));
  // left mutation at the bottom of the extension produces the composite
  SegId bottom = c.alg.ext_dim(e2, e1) ? e1 : e2;
  SegId top = (bottom == e1) ? e2 : e1;
  int k = 0;
  for (size_t i = 0; i < simples.objects.size(); ++i)
    if (simples.objects[i].seg == bottom) k = static_cast<int>(i);
  SmcCollection mutated = c.alg.mutate(simples, k, true);
  SmcCollection expect;
  expect.objects = {{bottom, -1}, {e12, 0}};
  expect.canonicalize();
  CHECK(mutated == expect);
  (void)top;
  // wrong degree for the direction
  CHECK_THROWS_AS(c.alg.mutate(mutated, 0, true) /* degree -1 at 0 */,
                  WrongDegreeForDirection);
}

TEST_CASE("c-matrices match framed-quiver mutation") {
  for (const TreeSpec& spec : {corpus_a1(), corpus_a2(), corpus_spider3()}) {
    Ctx c(spec);
    OrientedFlipGraph fg = build_flip_graph(c.ncc);
    NcpLattice ncp = enumerate_ncp(c.ncc, &fg);
    std::set<CMatrix> ours;
    for (const auto& p : ncp.elements) ours.insert(c.alg.c_matrix(p));
    CHECK(ours == oracle::cmat_by_mutation(c.alg));
  }
}

TEST_CASE("c-matrix errors") {
  Ctx c(corpus_linear3());  // degree-4 center
  OrientedFlipGraph fg = build_flip_graph(c.ncc);
  NcpLattice ncp = enumerate_ncp(c.ncc, &fg);
  CHECK_THROWS_AS(c.alg.c_matrix(ncp.elements[0]), NotDegreeThree);
}

TEST_CASE("A2 flip graph is the oriented exchange graph of its quiver") {
  Ctx c(corpus_a2());
  OrientedFlipGraph fg = build_flip_graph(c.ncc);
  oracle::ExchangeGraph eg = oracle::oriented_exchange_graph(c.alg);
  REQUIRE(eg.n_vertices == static_cast<int>(fg.facets.size()));
  std::vector<std::pair<int, int>> fg_edges;
  for (const auto& cv : fg.lattice.covers()) fg_edges.emplace_back(cv.lo, cv.hi);
  CHECK(digraphs_isomorphic(eg.n_vertices, fg_edges, eg.edges));
}

TEST_CASE("direction conventions on the 3-cycle algebra") {
  // for each composite string e <- f the arrow's source f is the top:
  // M(composite) surjects onto M(f), includes M(e), and the unique
  // extension is 0 -> M(e) -> M(composite) -> M(f) -> 0
  Ctx c(corpus_spider3());
  int composites = 0;
  for (SegId m = 0; m < c.segs.count(); ++m) {
    if (c.segs.seg(m).edge_len() != 2) continue;
    ++composites;
    auto supp = c.alg.support(m);
    REQUIRE(supp.size() == 2);
    EdgeId e0 = supp[0], e1 = supp[1];
    // junction arrow direction (true: e0 -> e1)
    bool fwd = c.alg.junction_forward(m, 1);
    EdgeId target = fwd ? e1 : e0;  // submodule simple
    EdgeId source = fwd ? e0 : e1;  // quotient simple
    SegId es = -1, fs = -1;
    for (SegId s = 0; s < c.segs.count(); ++s) {
      if (c.segs.seg(s).edge_len() != 1) continue;
      if (c.alg.support(s)[0] == target) es = s;
      if (c.alg.support(s)[0] == source) fs = s;
    }
    REQUIRE(es >= 0);
    REQUIRE(fs >= 0);
    CHECK(c.alg.hom_dim(m, fs) == 1);  // quotient onto the arrow source
    CHECK(c.alg.hom_dim(m, es) == 0);
    CHECK(c.alg.hom_dim(es, m) == 1);  // submodule at the arrow target
    CHECK(c.alg.hom_dim(fs, m) == 0);
    CHECK(c.alg.ext_dim(fs, es) == 1);
    CHECK(c.alg.ext_dim(es, fs) == 0);
    CHECK(c.alg.ext_middle(fs, es) == std::vector<SegId>{m});
    // the same values from the representation-theoretic oracle
    CHECK(oracle::la_hom_dim(c.alg, m, fs) == 1);
    CHECK(oracle::la_hom_dim(c.alg, m, es) == 0);
    CHECK(oracle::la_ext_dim(c.alg, fs, es) == 1);
  }
  CHECK(composites == 3);
}

TEST_CASE("the 3-cycle flip graph is its oriented exchange graph") {
  Ctx c(corpus_spider3());
  OrientedFlipGraph fg = build_flip_graph(c.ncc);
  oracle::ExchangeGraph eg = oracle::oriented_exchange_graph(c.alg);
  REQUIRE(eg.n_vertices == static_cast<int>(fg.facets.size()));
  std::vector<std::pair<int, int>> fge;
  for (const auto& cv : fg.lattice.covers()) fge.emplace_back(cv.lo, cv.hi);
  CHECK(digraphs_isomorphic(eg.n_vertices, fge, eg.edges));
}

TEST_CASE("crossing extensions carry the factor-through Hom one way") {
  // a crossing Ext1(top, bot) comes with Hom(bot, top) and never the
  // reverse; shared-endpoint extensions have no Homs either way
  for (const TreeSpec& spec : corpus_small(4)) {
    Ctx c(spec);
    for (SegId top = 0; top < c.segs.count(); ++top)
      for (SegId bot = 0; bot < c.segs.count(); ++bot) {
        if (c.alg.ext_dim(top, bot) != 1) continue;
        bool crossing = c.segs.common_path(top, bot).size() >= 2;
        if (crossing) {
          CHECK(c.alg.hom_dim(bot, top) == 1);
          CHECK(c.alg.hom_dim(top, bot) == 0);
        } else {
          CHECK(c.alg.hom_dim(bot, top) == 0);
          CHECK(c.alg.hom_dim(top, bot) == 0);
        }
      }
  }
}

TEST_CASE("is_2term_smc accepts exactly the theta images") {
  for (const TreeSpec& spec : {corpus_a2(), corpus_spider3(),
                               corpus_linear3()}) {
    Ctx c(spec);
    OrientedFlipGraph fg = build_flip_graph(c.ncc);
    NcpLattice ncp = enumerate_ncp(c.ncc, &fg);
    std::set<SmcCollection> images;
    for (const auto& p : ncp.elements) images.insert(c.alg.theta_map(p));
    // every n-subset of segments with every degree assignment
    int n = c.alg.vertex_count();
    std::vector<SegId> pick;
    long accepted = 0;
    std::function<void(SegId)> rec = [&](SegId start) {
      if (static_cast<int>(pick.size()) == n) {
        for (int mask = 0; mask < (1 << n); ++mask) {
          SmcCollection x;
          for (int i = 0; i < n; ++i)
            x.objects.push_back({pick[i], ((mask >> i) & 1) ? -1 : 0});
          x.canonicalize();
          bool ok = c.alg.is_2term_smc(x);
          CHECK(ok == (images.count(x) == 1));
          accepted += ok;
        }
        return;
      }
      for (SegId s = start; s < c.segs.count(); ++s) {
        pick.push_back(s);
        rec(s + 1);
        pick.pop_back();
      }
    };
    rec(0);
    CHECK(accepted == static_cast<long>(images.size()));
  }
}
