#pragma once

#include <map>
#include <vector>

#include "treelat/arcs.hpp"
#include "treelat/lattice.hpp"

namespace treelat {

struct BoundaryArcNotFlippable : TreeError {
  using TreeError::TreeError;
};

// Maximal pairwise-noncrossing arc set with its marked-corner map: marks[c]
// is the containment-maximal arc through corner c (indexed as in
// EmbeddedTree::corners()).
struct Facet {
  std::vector<ArcId> arcs;   // sorted
  std::vector<ArcId> marks;  // per corner index
  bool operator==(const Facet& o) const { return arcs == o.arcs; }
};

struct FlipResult {
  Facet facet;
  ArcId removed = -1, added = -1;
  SegId label = -1;  // segment between the removed arc's marked corners
  bool forward = false;
};

// Facet machinery for one tree.
class NoncrossingComplex {
 public:
  explicit NoncrossingComplex(const Arcs& arcs);

  const Arcs& arcs() const { return *arcs_; }
  const Segments& segments() const { return *segs_; }
  const EmbeddedTree& tree() const { return *t_; }

  bool pairwise_noncrossing(const std::vector<ArcId>& as) const;
  bool is_facet(const std::vector<ArcId>& as) const;
  // computes marks; throws if not a facet
  Facet make_facet(std::vector<ArcId> as) const;

  // Number of nonboundary arcs every facet carries: (|Cor| - |faces|) / 2.
  int facet_rank() const;

  // The arc defined at corner (v,F) by a biclosed set X: oriented away from
  // v it turns left at u exactly when [v,u] lies in X.
  ArcId arc_from_corner(const Corner& c, SegSet x) const;
  // eta: the facet {p_(v,F)} of a biclosed set.
  Facet eta(SegSet x) const;
  // phi: closure of the union of C_p over the facet's arcs.
  SegSet phi(const Facet& f) const;

  // The containment-maximal arc of the facet through a corner.
  ArcId marked_arc(const Facet& f, const Corner& c) const {
    return f.marks[t_->corner_index(c)];
  }
  // Marked corners of an arc within a facet (1 for boundary, 2 otherwise).
  std::vector<Corner> marked_corners(const Facet& f, ArcId p) const;
  // Segment spanned by the two marked corners of a nonboundary arc.
  SegId marked_segment(const Facet& f, ArcId p) const;

  FlipResult flip(const Facet& f, ArcId p) const;

 private:
  const EmbeddedTree* t_;
  const Segments* segs_;
  const Arcs* arcs_;
};

// The oriented flip graph as a labeled lattice; facet indices follow a
// linear extension of the orientation.
struct OrientedFlipGraph {
  std::vector<Facet> facets;
  FiniteLattice lattice;  // cover labels are SegIds
  int index_of(const Facet& f) const;
};

OrientedFlipGraph build_flip_graph(const NoncrossingComplex& ncc);

}  // namespace treelat
