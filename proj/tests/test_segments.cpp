#include <algorithm>

#include "doctest.h"
#include "treelat/corpus.hpp"
#include "treelat/segments.hpp"

using namespace treelat;

namespace {
SegId seg(const EmbeddedTree& t, const Segments& s, int a, int b) {
  return s.id_by_endpoints(t.vertex_by_label(a), t.vertex_by_label(b));
}
}  // namespace

TEST_CASE("segment enumeration on the reference trees") {
  EmbeddedTree a1 = EmbeddedTree::load(corpus_a1());
  CHECK(Segments(a1).count() == 1);

  EmbeddedTree star = EmbeddedTree::load(corpus_star(4));
  CHECK(Segments(star).count() == 0);

  EmbeddedTree a2 = EmbeddedTree::load(corpus_a2());
  Segments s2(a2);
  CHECK(s2.count() == 3);
  CHECK(seg(a2, s2, 1, 2) >= 0);
  CHECK(seg(a2, s2, 2, 3) >= 0);
  CHECK(seg(a2, s2, 1, 3) >= 0);
}

TEST_CASE("composition") {
  EmbeddedTree t = EmbeddedTree::load(corpus_a2());
  Segments s(t);
  SegId s12 = seg(t, s, 1, 2), s23 = seg(t, s, 2, 3), s13 = seg(t, s, 1, 3);
  CHECK(s.compose(s12, s23) == s13);
  CHECK(s.compose(s23, s12) == s13);
  CHECK_FALSE(s.compose(s12, s12).has_value());
  CHECK_FALSE(s.compose(s12, s13).has_value());  // overlap, not composable
  // segments sharing no vertex: the spider spokes do share the center, so
  // use the curves tree
  EmbeddedTree c = EmbeddedTree::load(corpus_curves());
  Segments sc(c);
  CHECK_FALSE(sc.compose(seg(c, sc, 1, 3), seg(c, sc, 5, 6)).has_value());
}

TEST_CASE("C_s and K_s") {
  EmbeddedTree t = EmbeddedTree::load(corpus_a2());
  Segments s(t);
  for (SegId i = 0; i < s.count(); ++i) {
    CHECK(seg_in(s.cs(i), i));
    CHECK(seg_in(s.ks(i), i));
  }
  SegId s12 = seg(t, s, 1, 2), s23 = seg(t, s, 2, 3), s13 = seg(t, s, 1, 3);
  // single-edge segments have no interior turns
  CHECK(s.cs(s12) == seg_bit(s12));
  CHECK(s.ks(s12) == seg_bit(s12));
  // the long segment turns once; one of the halves lands in C, the other in K
  CHECK(s.cs(s13) != s.ks(s13));
  CHECK((s.cs(s13) | s.ks(s13)) == (seg_bit(s12) | seg_bit(s23) | seg_bit(s13)));
  CHECK((s.cs(s13) & s.ks(s13)) == seg_bit(s13));
}

TEST_CASE("closure is a closure operator") {
  EmbeddedTree t = EmbeddedTree::load(corpus_spider3());
  Segments s(t);
  for (SegSet x = 0; x < (SegSet{1} << s.count()); ++x) {
    SegSet c = s.closure(x);
    CHECK((x & ~c) == 0);
    CHECK(s.closure(c) == c);
    for (SegSet y = x;; y = (y - 1) & x) {
      CHECK((s.closure(y) & ~c) == 0);  // monotone
      if (y == 0) break;
    }
  }
}

TEST_CASE("biclosed examples") {
  EmbeddedTree t = EmbeddedTree::load(corpus_a2());
  Segments s(t);
  SegId s12 = seg(t, s, 1, 2), s23 = seg(t, s, 2, 3), s13 = seg(t, s, 1, 3);
  CHECK(s.is_biclosed(0));
  CHECK(s.is_biclosed(s.all()));
  CHECK(s.is_biclosed(seg_bit(s12)));
  CHECK_FALSE(s.is_biclosed(seg_bit(s13)));            // complement not closed
  CHECK_FALSE(s.is_biclosed(seg_bit(s12) | seg_bit(s23)));  // not closed
}

TEST_CASE("colored endpoints and crossings") {
  EmbeddedTree t = EmbeddedTree::load(corpus_a1());
  Segments s(t);
  ColoredSegment green{0, Color::green}, red{0, Color::red};
  auto [g1, g2] = s.endpoints(green);
  auto [r1, r2] = s.endpoints(red);
  CHECK(g1 != r1);
  CHECK(g2 != r2);
  // the same segment in both colors crosses itself
  CHECK(s.colored_cross(green, red));
  CHECK(s.colored_cross(red, green));

  // A2: red edge segments at the shared vertex do not cross; adding the
  // composite as red crosses neither
  EmbeddedTree a2 = EmbeddedTree::load(corpus_a2());
  Segments s2(a2);
  ColoredSegment ra{seg(a2, s2, 1, 2), Color::red};
  ColoredSegment rb{seg(a2, s2, 2, 3), Color::red};
  ColoredSegment rc{seg(a2, s2, 1, 3), Color::red};
  CHECK_FALSE(s2.colored_cross(ra, rb));
  CHECK(s2.colored_cross(ra, rc) == s2.colored_cross(rc, ra));
}

TEST_CASE("colored crossing is symmetric on a larger tree") {
  EmbeddedTree t = EmbeddedTree::load(corpus_curves());
  Segments s(t);
  for (SegId i = 0; i < s.count(); ++i)
    for (SegId j = 0; j < s.count(); ++j)
      for (Color ci : {Color::red, Color::green})
        for (Color cj : {Color::red, Color::green}) {
          ColoredSegment a{i, ci}, b{j, cj};
          if (a == b) continue;
          CHECK(s.colored_cross(a, b) == s.colored_cross(b, a));
        }
}

TEST_CASE("C_s and K_s do not depend on the stored orientation") {
  EmbeddedTree t = EmbeddedTree::load(corpus_arc_example());
  Segments s(t);
  for (SegId i = 0; i < s.count(); ++i) {
    auto path = s.seg(i).path;
    std::reverse(path.begin(), path.end());
    SegSet cs = 0, ks = 0;
    int l = static_cast<int>(path.size()) - 1;
    for (int x = 0; x <= l; ++x)
      for (int y = x + 1; y <= l; ++y) {
        SegId sub = s.id_by_endpoints(path[x], path[y]);
        if (sub < 0) continue;
        auto turn = [&](int k) { return t.turn(path[k - 1], path[k], path[k + 1]); };
        bool c_ok = (x == 0 || turn(x) == Turn::right) &&
                    (y == l || turn(y) == Turn::left);
        bool k_ok = (x == 0 || turn(x) == Turn::left) &&
                    (y == l || turn(y) == Turn::right);
        if (c_ok) cs |= seg_bit(sub);
        if (k_ok) ks |= seg_bit(sub);
      }
    CHECK(cs == s.cs(i));
    CHECK(ks == s.ks(i));
  }
}
