#pragma once

#include <vector>

#include "treelat/flipgraph.hpp"

namespace treelat {

struct NotNCP : TreeError {
  using TreeError::TreeError;
};
struct NotSegmentConnected : TreeError {
  using TreeError::TreeError;
};

// Set partition of the interior vertices. Canonical form: vertices sorted
// within blocks, blocks sorted by first vertex.
struct TreePartition {
  std::vector<std::vector<VertexId>> blocks;
  void canonicalize();
  bool operator==(const TreePartition&) const = default;
  bool operator<(const TreePartition& o) const { return blocks < o.blocks; }
  // true when every block of this partition lies inside a block of o
  bool refines(const TreePartition& o) const;
};

struct RedGreenTree {
  std::vector<SegId> red, green;
};

// Inclusion-minimal segments with both endpoints in the block.
std::vector<SegId> min_segments(const Segments& segs,
                                const std::vector<VertexId>& block);
// Seg(B): union of min_segments over all blocks.
std::vector<SegId> partition_segments(const Segments& segs,
                                      const TreePartition& p);

bool is_segment_connected(const Segments& segs,
                          const std::vector<VertexId>& block);

// Noncrossing: blocks segment-connected, red minimal segments pairwise
// noncrossing.
bool is_ncp(const Segments& segs, const TreePartition& p);

// Blocks = segment-connected components spanned by the given segments;
// untouched interior vertices become singletons.
TreePartition partition_from_segments(const Segments& segs,
                                      const std::vector<SegId>& ss);

// The unique red-green tree whose red part is Seg(B); throws NotNCP when the
// red segments are not of that form.
RedGreenTree red_green_complete(const Segments& segs,
                                const std::vector<SegId>& red);

TreePartition kreweras_complement(const Segments& segs,
                                  const TreePartition& p);

// The partition spanned by the lower flip labels of a facet.
TreePartition rho(const NoncrossingComplex& ncc, const Facet& f);

struct NcpLattice {
  std::vector<TreePartition> elements;  // refinement order
  FiniteLattice lattice;                // unlabeled
  int index_of(const TreePartition& p) const;
};

// All noncrossing tree partitions: filtered from the full partition lattice
// when the interior is small, through rho otherwise (requires fg).
NcpLattice enumerate_ncp(const NoncrossingComplex& ncc,
                         const OrientedFlipGraph* fg = nullptr);

// Contracted tree T_B: interior vertices the block, interior edges its
// minimal segments, remaining edge slots become leaves.
EmbeddedTree contract_tree(const Segments& segs,
                           const std::vector<VertexId>& block);

std::string partition_name(const EmbeddedTree& t, const TreePartition& p);

}  // namespace treelat
