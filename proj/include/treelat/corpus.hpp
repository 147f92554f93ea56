#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treelat/tree.hpp"

namespace treelat {

// Named reference trees.

// Two facets; leaves 1..4, interior 5,6.
TreeSpec corpus_a1();
// Path of three degree-3 interior vertices 1,2,3; the pentagon flip graph.
TreeSpec corpus_a2();
// One interior vertex of the given degree.
TreeSpec corpus_star(int degree);
// Degree-3 interior vertex whose three neighbors are interior of degree 3;
// its biclosed lattice has 26 elements (the 3-cycle tiling algebra).
TreeSpec corpus_spider3();
// Degree-4 center with three interior spokes and one leaf; its quiver is the
// linear A3 quiver with one relation.
TreeSpec corpus_linear3();
// Ten interior vertices 1..10 carrying the reference noncrossing tree
// partition ({1,3,4},{2,8},{5,6,7,9},{10}).
TreeSpec corpus_curves();
// Eight leaves, interior 9..12; carries the reference crossing arc pair
// (7,10,11,12,5) and (6,10,11,9,1).
TreeSpec corpus_arc_example();

// All embedded trees with at most max_interior interior vertices and
// interior degrees 3 or 4, up to orientation-preserving embedded
// isomorphism.
std::vector<TreeSpec> corpus_small(int max_interior);

// Seeded random tree with the given interior size and at most 14 segments.
TreeSpec corpus_random(int n_interior, std::uint64_t seed);

// The fixed verification corpus: all small trees plus seeded 5-6 interior
// vertex trees.
std::vector<std::pair<std::string, TreeSpec>> corpus_default(
    std::uint64_t seed);

}  // namespace treelat
