#pragma once

#include <vector>

#include "treelat/flipgraph.hpp"

namespace treelat {

// Subdivision of a convex polygon whose vertices are the faces of the tree
// in ccw boundary order (polygon position == FaceId).
struct PolygonSubdivision {
  int n = 0;                                    // polygon vertices
  std::vector<std::pair<int, int>> diagonals;   // position pairs, i < j
  void canonicalize();
  bool operator==(const PolygonSubdivision&) const = default;
  bool operator<(const PolygonSubdivision& o) const {
    return n != o.n ? n < o.n : diagonals < o.diagonals;
  }
};

// 𝒫_T: one diagonal per interior edge of the tree.
PolygonSubdivision tree_to_subdivision(const EmbeddedTree& t);

// 𝒫(F): one diagonal per nonboundary arc, endpoints through the
// ccw-most-leaf bijection between faces and leaves.
PolygonSubdivision facet_to_subdivision(const NoncrossingComplex& ncc,
                                        const Facet& f);

// Every diagonal endpoint moves one polygon vertex clockwise.
PolygonSubdivision rotate(const PolygonSubdivision& s);

// Dual tree of a polygonal subdivision (inverse of tree_to_subdivision up to
// embedded isomorphism).
EmbeddedTree subdivision_to_tree(const PolygonSubdivision& s);

}  // namespace treelat
