#include "treelat/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "treelat/biclosed.hpp"
#include "treelat/ncp.hpp"
#include "treelat/polygon.hpp"
#include "treelat/tiling.hpp"

namespace treelat {

namespace {

// integer determinant up to sign via fraction-free elimination
long long det_bareiss(std::vector<std::vector<long long>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) p = i;
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<SegId> to_vec(SegSet x) {
  std::vector<SegId> v;
  for (SegId s = 0; s < 64; ++s)
    if (seg_in(x, s)) v.push_back(s);
  return v;
}

}  // namespace

VerifyReport verify_tree(const TreeSpec& spec, const std::string& name) {
  VerifyReport rep;
  rep.tree_name = name;
  auto check = [&](const std::string& what, const std::function<void()>& fn) {
    CheckResult r;
    r.name = what;
    try {
      fn();
      r.pass = true;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    rep.checks.push_back(std::move(r));
  };
  auto require = [](bool cond, const std::string& msg) {
    if (!cond) throw TreeError(msg);
  };

  EmbeddedTree t = EmbeddedTree::load(spec);
  Segments segs(t);
  Arcs arcs(segs);
  NoncrossingComplex ncc(arcs);
  OrientedFlipGraph fg = build_flip_graph(ncc);
  BicLattice bic(ncc);
  TilingAlgebra alg(segs);
  NcpLattice ncp = enumerate_ncp(ncc, &fg);

  const int n_seg = segs.count();
  const FiniteLattice& fl = fg.lattice;
  const int n_facets = static_cast<int>(fg.facets.size());

  // label order for CN2: subsegment containment
  auto seg_contains = [&](SegId big, SegId small) {
    const auto& pb = segs.seg(big).path;
    const auto& ps = segs.seg(small).path;
    return std::search(pb.begin(), pb.end(), ps.begin(), ps.end()) !=
               pb.end() ||
           std::search(pb.begin(), pb.end(), ps.rbegin(), ps.rend()) !=
               pb.end();
  };
  FiniteLattice::LabelLess seg_less = [&](int a, int b) {
    return a != b && seg_contains(b, a);
  };

  check("tree: faces equal leaves; corner count is total interior degree",
        [&] {
          int L = 0;
          for (VertexId v = 0; v < t.vertex_count(); ++v)
            if (t.is_leaf(v)) ++L;
          require(t.face_count() == L, "face count");
          int degsum = 0;
          for (VertexId v : t.interior_vertices()) degsum += t.degree(v);
          require(static_cast<int>(t.corners().size()) == degsum,
                  "corner count");
          for (const Corner& c : t.corners()) {
            Corner d = c;
            for (int k = 0; k < t.degree(c.v); ++k)
              d = t.corner_step(d, Dir::cw);
            require(d == c, "corner_step order");
            require(t.corner_step(t.corner_step(c, Dir::cw), Dir::ccw) == c,
                    "cw then ccw");
          }
        });

  check("segments: subsegment lemma and biclosed C_s", [&] {
    for (SegId s = 0; s < n_seg; ++s) {
      require(seg_in(segs.cs(s), s) && seg_in(segs.ks(s), s),
              "s must lie in C_s and K_s");
      require(segs.is_biclosed(segs.cs(s)), "C_s biclosed");
      for (SegId u = 0; u < n_seg; ++u) {
        if (!seg_in(segs.cs(s), u)) continue;
        for (SegId a = 0; a < n_seg; ++a)
          for (SegId b = 0; b < n_seg; ++b)
            if (segs.compose(a, b) == u)
              require(seg_in(segs.cs(s), a) || seg_in(segs.cs(s), b),
                      "subsegment lemma for C_s");
      }
    }
  });

  check("colored crossing: symmetry, red/green lemmas", [&] {
    for (SegId i = 0; i < n_seg; ++i)
      for (SegId j = 0; j < n_seg; ++j) {
        for (Color ci : {Color::red, Color::green})
          for (Color cj : {Color::red, Color::green}) {
            ColoredSegment a{i, ci}, b{j, cj};
            if (a == b) continue;
            require(segs.colored_cross(a, b) == segs.colored_cross(b, a),
                    "colored_cross symmetric");
          }
        if (i == j) continue;
        // noncrossing red pair: K_i and C_j disjoint
        if (!segs.colored_cross({i, Color::red}, {j, Color::red}))
          require((segs.ks(i) & segs.cs(j)) == 0,
                  "red-red noncrossing forces empty K cap C");
        if (!segs.colored_cross({i, Color::green}, {j, Color::red}))
          require((segs.ks(i) & segs.cs(j)) == 0,
                  "green-red noncrossing forces empty K cap C");
        if (!segs.colored_cross({i, Color::green}, {j, Color::green}))
          require(!segs.colored_cross({i, Color::red}, {j, Color::red}),
                  "green noncrossing implies red noncrossing");
      }
  });

  check("colored crossing: splitting a green segment at a vertex", [&] {
    for (SegId ac = 0; ac < n_seg; ++ac) {
      const auto& p = segs.seg(ac).path;
      for (size_t bi = 1; bi + 1 < p.size(); ++bi) {
        SegId ab = segs.id_by_endpoints(p.front(), p[bi]);
        SegId bc = segs.id_by_endpoints(p[bi], p.back());
        if (ab < 0 || bc < 0) continue;
        for (SegId de = 0; de < n_seg; ++de) {
          if (de == ac ||
              !segs.colored_cross({ac, Color::green}, {de, Color::green}))
            continue;
          require(segs.colored_cross({ab, Color::green}, {de, Color::green}) ||
                      segs.colored_cross({bc, Color::green},
                                         {de, Color::green}),
                  "a piece must still cross");
        }
      }
    }
  });

  check("facets: purity, thinness, marks", [&] {
    int rank = ncc.facet_rank();
    std::map<std::vector<ArcId>, int> codim1;
    for (const Facet& f : fg.facets) {
      int nb = 0;
      for (ArcId a : f.arcs)
        if (!arcs.is_boundary(a)) ++nb;
      require(nb == rank, "facet size is the rank");
      for (ArcId a : f.arcs) {
        auto mc = ncc.marked_corners(f, a);
        if (arcs.is_boundary(a)) {
          require(mc.size() == 1, "boundary arcs marked once");
        } else {
          require(mc.size() == 2, "nonboundary arcs marked twice");
          FaceSet r0 = arcs.region_of(a, mc[0].face);
          FaceSet r1 = arcs.region_of(a, mc[1].face);
          require(r0 != r1, "marks in opposite regions");
          std::vector<ArcId> rest;
          for (ArcId b : f.arcs)
            if (b != a && !arcs.is_boundary(b)) rest.push_back(b);
          codim1[rest]++;
        }
      }
    }
    for (const auto& [key, cnt] : codim1)
      require(cnt == 2, "codimension-1 face lies in exactly two facets");
  });

  check("flip graph: involution, unique source and sink", [&] {
    for (const Facet& f : fg.facets)
      for (ArcId a : f.arcs) {
        if (arcs.is_boundary(a)) continue;
        FlipResult r = ncc.flip(f, a);
        FlipResult back = ncc.flip(r.facet, r.added);
        require(back.facet == f && back.added == a, "flip is an involution");
        require(back.forward != r.forward, "flip directions opposite");
        require(back.label == r.label, "flip labels agree");
      }
    require(fg.facets[fl.bottom()] == ncc.eta(0), "source is eta(empty)");
    require(fg.facets[fl.top()] == ncc.eta(segs.all()),
            "sink is eta(all segments)");
  });

  check("eta/phi: eta o phi = id, phi o eta = pi_down", [&] {
    for (const Facet& f : fg.facets)
      require(ncc.eta(ncc.phi(f)) == f, "eta o phi = id");
    for (int i = 0; i < bic.size(); ++i) {
      SegSet x = bic.element(i);
      require(ncc.phi(ncc.eta(x)) == bic.pi_down(x), "phi o eta = pi_down");
      require(bic.index_of(bic.pi_down(x)) >= 0, "pi_down lands in Bic");
      require(bic.index_of(bic.pi_up(x)) >= 0, "pi_up lands in Bic");
      require(bic.pi_down(bic.pi_up(x)) == bic.pi_down(x),
              "pi_down o pi_up = pi_down");
      require(bic.pi_up(bic.pi_down(x)) == bic.pi_up(x),
              "pi_up o pi_down = pi_up");
      require((bic.pi_down(x) & ~x) == 0 && (x & ~bic.pi_up(x)) == 0,
              "pi_down <= id <= pi_up");
    }
  });

  check("theta: lattice congruence with interval fibers; quotient is FG",
        [&] {
          Congruence th = bic.theta();
          std::string why;
          require(bic.lattice().is_congruence(th, &why), "theta: " + why);
          require(th.class_count == n_facets, "class count equals facets");
          std::vector<int> cidx;
          FiniteLattice q = bic.lattice().quotient(th, &cidx);
          // class -> facet through eta
          std::vector<int> fg_of(th.class_count, -1);
          for (int i = 0; i < bic.size(); ++i) {
            int fi = fg.index_of(bic.eta(bic.element(i)));
            require(fi >= 0, "eta image is a facet");
            if (fg_of[cidx[i]] < 0) fg_of[cidx[i]] = fi;
            require(fg_of[cidx[i]] == fi, "eta constant on classes");
          }
          std::set<std::tuple<int, int, int>> qcov, fcov;
          for (const auto& c : q.covers())
            qcov.insert({fg_of[c.lo], fg_of[c.hi], c.label});
          for (const auto& c : fl.covers())
            fcov.insert({c.lo, c.hi, c.label});
          require(qcov == fcov, "quotient Hasse diagram matches FG labels");
        });

  check("flip edges match removing one segment from phi", [&] {
    for (const auto& c : fl.covers()) {
      SegSet x = ncc.phi(fg.facets[c.hi]);
      require(seg_in(x, c.label), "label lies in the upper phi");
      SegSet y = x & ~seg_bit(c.label);
      require(segs.is_biclosed(y), "phi minus label biclosed");
      require(ncc.eta(y) == fg.facets[c.lo], "lower facet is eta of it");
    }
  });

  check("biclosed: join formula on small lattices", [&] {
    if (bic.size() > 40) return;
    for (int xi = 0; xi < bic.size(); ++xi)
      for (int yi = 0; yi < bic.size(); ++yi)
        for (int wi = 0; wi < bic.size(); ++wi) {
          SegSet x = bic.element(xi), y = bic.element(yi),
                 w = bic.element(wi);
          if (w & ~(x & y)) continue;
          require(segs.is_biclosed(w | segs.closure((x | y) & ~w)),
                  "join formula output biclosed");
        }
  });

  check("CN labels on Bic, CU labels on FG, semidistributivity", [&] {
    // the added-segment labeling of Bic is a CN-labeling; only the flip
    // graph labeling satisfies the CU axioms
    auto r1 = bic.lattice().check_cn_labeling(seg_less);
    require(r1.ok, "Bic: " + r1.failure);
    auto r2 = fl.check_cu_labeling(seg_less);
    require(r2.ok, "FG: " + r2.failure);
    require(bic.lattice().is_semidistributive(), "Bic semidistributive");
    require(fl.is_semidistributive(), "FG semidistributive");
  });

  check("FG has a doubling construction", [&] {
    require(fl.find_doubling_sequence().has_value(),
            "no doubling sequence found");
  });

  check("canonical join representation of facets (eta of C_s)", [&] {
    for (int i = 0; i < n_facets; ++i) {
      std::set<int> want;
      for (int lo : fl.lower_covers(i))
        want.insert(fg.index_of(ncc.eta(segs.cs(fl.cover_label(lo, i)))));
      auto cjr = fl.canonical_join_rep(i);
      require(std::set<int>(cjr.begin(), cjr.end()) == want,
              "canonical join rep mismatch");
    }
  });

  check("facial intervals of FG: atoms and coatoms pair up", [&] {
    // lem_cu_facial_interval specialized to upper covers of x
    for (int x = 0; x < n_facets; ++x) {
      const auto& ups = fl.upper_covers(x);
      if (ups.empty()) continue;
      int y = fl.join_all(ups);
      std::vector<int> alab;
      for (int a : ups) alab.push_back(fl.cover_label(x, a));
      std::sort(alab.begin(), alab.end());
      std::vector<int> chosen;
      for (int c : fl.lower_covers(y)) {
        int l = fl.cover_label(c, y);
        if (fl.leq(x, c) &&
            std::binary_search(alab.begin(), alab.end(), l))
          chosen.push_back(c);
      }
      std::vector<int> clab;
      for (int c : chosen) clab.push_back(fl.cover_label(c, y));
      std::sort(clab.begin(), clab.end());
      require(clab == alab, "coatom labels match atom labels");
      require(fl.meet_all(chosen) == x, "coatoms meet back to x");
    }
  });

  // rho, NCP, Kreweras, shard
  std::vector<TreePartition> rho_of(n_facets);
  for (int i = 0; i < n_facets; ++i) rho_of[i] = rho(ncc, fg.facets[i]);

  check("ncp: rho is a bijection onto the noncrossing tree partitions", [&] {
    require(static_cast<int>(ncp.elements.size()) == n_facets,
            "|NCP| equals |FG|");
    std::set<TreePartition> seen;
    for (const auto& p : rho_of) {
      require(ncp.index_of(p) >= 0, "rho image is noncrossing");
      require(seen.insert(p).second, "rho injective");
    }
    if (static_cast<int>(t.interior_vertices().size()) <= 9) {
      NcpLattice filtered = enumerate_ncp(ncc, nullptr);
      require(filtered.elements == ncp.elements,
              "filter and rho enumerations agree");
    }
  });

  check("ncp: blocks decompose along minimal segments", [&] {
    for (const auto& p : ncp.elements)
      for (const auto& b : p.blocks) {
        auto ms = min_segments(segs, b);
        require(ms.size() == b.size() - 1,
                "|Seg(B)| = |B| - 1 for noncrossing blocks");
        for (size_t i = 0; i < b.size(); ++i)
          for (size_t j = i + 1; j < b.size(); ++j) {
            auto path = t.path(b[i], b[j]);
            std::vector<VertexId> stops;
            for (VertexId v : path)
              if (std::find(b.begin(), b.end(), v) != b.end())
                stops.push_back(v);
            if (segs.id_by_endpoints(b[i], b[j]) < 0 ||
                !std::count(ms.begin(), ms.end(),
                            segs.id_by_endpoints(b[i], b[j])))
              require(stops.size() > 2,
                      "non-minimal pairs pass through the block");
            for (size_t k = 0; k + 1 < stops.size(); ++k) {
              SegId leg = segs.id_by_endpoints(stops[k], stops[k + 1]);
              require(leg >= 0 && std::count(ms.begin(), ms.end(), leg),
                      "legs are minimal segments");
            }
          }
      }
  });

  check("ncp: meet is common refinement", [&] {
    for (size_t i = 0; i < ncp.elements.size(); ++i)
      for (size_t j = i + 1; j < ncp.elements.size(); ++j) {
        int m = ncp.lattice.meet(static_cast<int>(i), static_cast<int>(j));
        // common refinement by block intersection
        TreePartition r;
        for (const auto& a : ncp.elements[i].blocks)
          for (const auto& b : ncp.elements[j].blocks) {
            std::vector<VertexId> c;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(c));
            if (!c.empty()) r.blocks.push_back(c);
          }
        r.canonicalize();
        require(ncp.elements[m] == r, "meet = common refinement");
      }
  });

  check("kreweras: red-green completion matches the lattice map", [&] {
    for (int i = 0; i < n_facets; ++i) {
      int k = fl.kreweras(i);
      require(kreweras_complement(segs, rho_of[i]) == rho_of[k],
              "Kr through rho agrees");
      // red-green tree from the facet labels
      std::vector<SegId> lower, upper;
      for (int lo : fl.lower_covers(i)) lower.push_back(fl.cover_label(lo, i));
      for (int up : fl.upper_covers(i)) upper.push_back(fl.cover_label(i, up));
      std::sort(lower.begin(), lower.end());
      std::sort(upper.begin(), upper.end());
      RedGreenTree rg = red_green_complete(segs, lower);
      require(rg.green == upper, "green part is the upper labels");
    }
    require(fl.kreweras(fl.bottom()) == fl.top(), "Kr(bottom) = top");
  });

  check("shard order is NCP, Kreweras-equivariantly", [&] {
    ShardOrder sh = fl.shard_order();
    for (int i = 0; i < n_facets; ++i) {
      SegSet closure = 0;
      for (SegId s : partition_segments(segs, rho_of[i]))
        closure |= seg_bit(s);
      closure = segs.closure(closure);
      require(sh.psi[i] == to_vec(closure),
              "psi is the closure of Seg(rho)");
    }
    for (int i = 0; i < n_facets; ++i)
      for (int j = 0; j < n_facets; ++j) {
        bool inc = std::includes(sh.psi[j].begin(), sh.psi[j].end(),
                                 sh.psi[i].begin(), sh.psi[i].end());
        require(inc == rho_of[i].refines(rho_of[j]),
                "inclusion order matches refinement");
      }
    require(sh.poset.is_lattice(), "shard order of FG is a lattice");
  });

  check("contracted trees: facial intervals factor through products", [&] {
    for (int x = 0; x < n_facets; ++x) {
      const auto& ups = fl.upper_covers(x);
      if (ups.empty()) continue;
      int y = fl.join_all(ups);
      Bits iv = fl.up(x) & fl.down(y);
      std::vector<SegId> upper;
      for (int up : ups) upper.push_back(fl.cover_label(x, up));
      TreePartition b = partition_from_segments(segs, upper);
      std::vector<OrientedFlipGraph> factors;
      long long expect = 1;
      for (const auto& blk : b.blocks) {
        if (blk.size() == 1) continue;
        EmbeddedTree tb = contract_tree(segs, blk);
        Segments sb(tb);
        Arcs ab(sb);
        NoncrossingComplex nb(ab);
        factors.push_back(build_flip_graph(nb));
        expect *= factors.back().facets.size();
      }
      require(iv.count() == expect,
              "interval size is the product over contracted trees");
      if (expect > 24) continue;
      // Hasse diagrams agree, not just sizes: compare the interval digraph
      // with the product of the contracted flip graphs
      std::vector<int> members;
      iv.for_each([&](int z) { members.push_back(z); });
      std::map<int, int> pos;
      for (size_t i = 0; i < members.size(); ++i)
        pos[members[i]] = static_cast<int>(i);
      std::vector<std::pair<int, int>> interval_edges;
      for (const auto& cv : fl.covers())
        if (pos.count(cv.lo) && pos.count(cv.hi))
          interval_edges.emplace_back(pos[cv.lo], pos[cv.hi]);
      // product vertices are mixed-radix tuples; edges change one slot
      std::vector<int> radix;
      for (const auto& f : factors)
        radix.push_back(static_cast<int>(f.facets.size()));
      if (radix.empty()) {
        require(members.size() == 1, "empty product is a point");
        continue;
      }
      std::vector<std::pair<int, int>> product_edges;
      for (int v = 0; v < static_cast<int>(expect); ++v) {
        // decode tuple and step each slot along its factor covers
        std::vector<int> tup(radix.size());
        int rem = v;
        for (size_t i = radix.size(); i-- > 0;) {
          tup[i] = rem % radix[i];
          rem /= radix[i];
        }
        int stride = 1;
        for (size_t i = radix.size(); i-- > 0;) {
          for (const auto& cv : factors[i].lattice.covers())
            if (tup[i] == cv.lo)
              product_edges.emplace_back(v, v + (cv.hi - cv.lo) * stride);
          stride *= radix[i];
        }
      }
      require(digraphs_isomorphic(static_cast<int>(members.size()),
                                  interval_edges, product_edges),
              "interval Hasse diagram is the product diagram");
    }
  });

  check("biclosed facial intervals decompose as products", [&] {
    for (int x = 0; x < n_facets; ++x) {
      SegSet w = bic.pi_up(ncc.phi(fg.facets[x]));
      std::vector<SegId> singles;
      for (int up : fl.upper_covers(x))
        singles.push_back(fl.cover_label(x, up));
      if (singles.empty()) continue;
      bic.facial_interval(w, singles);  // throws on failure
    }
  });

  check("tiling algebra: gentle; Hom/Ext sanity", [&] {
    std::string why;
    require(alg.is_gentle(&why), "gentle: " + why);
    for (SegId u = 0; u < n_seg; ++u) {
      require(alg.hom_dim(u, u) == 1, "End(M) = k");
      require(alg.ext_dim(u, u) == 0, "no self-extension");
      for (SegId v = 0; v < n_seg; ++v) {
        if (u == v) continue;
        require(!(alg.ext_dim(u, v) == 1 && alg.ext_dim(v, u) == 1),
                "ext is one-way");
        if (alg.ext_dim(u, v) == 1) {
          auto mid = alg.ext_middle(u, v);
          int dim = 0;
          for (SegId m : mid) dim += segs.seg(m).edge_len();
          require(dim == segs.seg(u).edge_len() + segs.seg(v).edge_len(),
                  "middle term dimension additive");
        }
      }
    }
  });

  TilingAlgebra::SubcatLattice torsf = alg.torsion_free_classes(bic);
  check("torsion-free classes form FG through zeta", [&] {
    require(static_cast<int>(torsf.elements.size()) == n_facets,
            "|torsf| = |FG|");
    std::vector<int> of(n_facets, -1);
    for (int i = 0; i < n_facets; ++i) {
      of[i] = torsf.index_of(ncc.phi(fg.facets[i]));
      require(of[i] >= 0, "phi image is a torsion-free class");
    }
    for (int i = 0; i < n_facets; ++i)
      for (int j = 0; j < n_facets; ++j)
        require(fl.leq(i, j) == torsf.lattice.leq(of[i], of[j]),
                "zeta is an order isomorphism");
  });

  check("wide subcategories form NCP", [&] {
    TilingAlgebra::SubcatLattice wide = alg.wide_subcategories(ncp);
    require(wide.elements.size() == ncp.elements.size(), "|wide| = |NCP|");
    std::vector<int> of(ncp.elements.size(), -1);
    for (size_t i = 0; i < ncp.elements.size(); ++i) {
      SegSet b = 0;
      for (SegId s : partition_segments(segs, ncp.elements[i]))
        b |= seg_bit(s);
      of[i] = wide.index_of(segs.closure(b));
      require(of[i] >= 0, "closure lands in wide");
    }
    for (size_t i = 0; i < ncp.elements.size(); ++i)
      for (size_t j = 0; j < ncp.elements.size(); ++j)
        require(ncp.elements[i].refines(ncp.elements[j]) ==
                    wide.lattice.leq(of[i], of[j]),
                "wide inclusion matches refinement");
  });

  check("smc: theta images, mutation closure, Hasse matches FG", [&] {
    std::set<SmcCollection> all;
    std::map<SmcCollection, int> facet_of;
    for (int i = 0; i < n_facets; ++i) {
      SmcCollection x = alg.theta_map(rho_of[i]);
      std::string why;
      require(alg.is_2term_smc(x, &why), "theta image valid: " + why);
      all.insert(x);
      facet_of[x] = i;
    }
    require(static_cast<int>(all.size()) == n_facets, "|2-smc| = |NCP|");
    // mutation reachability from the simples in degree 0
    SmcCollection bottom = alg.theta_map(rho_of[fl.bottom()]);
    for (const auto& o : bottom.objects)
      require(o.degree == 0 && segs.seg(o.seg).edge_len() == 1,
              "bottom collection is the simples");
    std::vector<SmcCollection> queue{bottom};
    std::set<SmcCollection> seen{bottom};
    std::set<std::pair<int, int>> mut_edges;
    while (!queue.empty()) {
      SmcCollection x = queue.back();
      queue.pop_back();
      for (int k = 0; k < static_cast<int>(x.objects.size()); ++k) {
        if (x.objects[k].degree != 0) continue;
        SmcObject moved = x.objects[k];
        SmcCollection y = alg.mutate(x, k, true);
        std::string why;
        require(alg.is_2term_smc(y, &why), "mutation stays valid: " + why);
        // inverse: right mutation at the shifted object
        int kk = -1;
        for (int i = 0; i < static_cast<int>(y.objects.size()); ++i)
          if (y.objects[i] == SmcObject{moved.seg, -1}) kk = i;
        require(kk >= 0, "shifted object present");
        require(alg.mutate(y, kk, false) == x, "right undoes left");
        require(facet_of.count(y), "mutation stays within theta images");
        mut_edges.insert({facet_of[x], facet_of[y]});
        if (seen.insert(y).second) queue.push_back(y);
      }
    }
    require(seen == all, "mutation reaches every collection");
    std::set<std::pair<int, int>> fg_edges;
    for (const auto& c : fl.covers()) fg_edges.insert({c.lo, c.hi});
    require(mut_edges == fg_edges, "mutation Hasse diagram is FG");
  });

  bool degree3 = true;
  for (VertexId v : t.interior_vertices())
    if (t.degree(v) != 3) degree3 = false;
  if (degree3) {
    check("c-matrices: sign-coherent, distinct, unimodular", [&] {
      std::set<CMatrix> cms;
      for (const auto& p : ncp.elements) {
        CMatrix c = alg.c_matrix(p);
        for (const auto& row : c.rows) {
          bool pos = false, neg = false, nonzero = false;
          for (int x : row) {
            if (x > 0) pos = true;
            if (x < 0) neg = true;
            if (x != 0) nonzero = true;
          }
          require(nonzero && !(pos && neg), "rows sign-coherent");
        }
        std::vector<std::vector<long long>> m;
        for (const auto& row : c.rows)
          m.emplace_back(row.begin(), row.end());
        long long d = det_bareiss(m);
        require(d == 1 || d == -1, "matrix invertible over Z");
        cms.insert(c);
      }
      require(cms.size() == ncp.elements.size(), "matrices pairwise distinct");
    });
  }

  check("polygon: duality round-trip and rotation of the extremes", [&] {
    PolygonSubdivision pt = tree_to_subdivision(t);
    require(subdivision_to_tree(pt).canonical_code() == t.canonical_code(),
            "round-trip embedded isomorphism");
    std::set<PolygonSubdivision> images;
    for (const Facet& f : fg.facets) {
      auto s = facet_to_subdivision(ncc, f);
      require(!images.count(s), "facet subdivisions injective");
      images.insert(s);
    }
    require(facet_to_subdivision(ncc, fg.facets[fl.bottom()]) == pt,
            "bottom facet is the tree subdivision");
    require(facet_to_subdivision(ncc, fg.facets[fl.top()]) == rotate(pt),
            "top facet is its clockwise rotation");
  });

  return rep;
}

}  // namespace treelat
