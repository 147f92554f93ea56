#pragma once

#include <set>
#include <vector>

#include "treelat/flipgraph.hpp"
#include "treelat/tiling.hpp"

// Brute-force reference implementations, independent of the construction
// paths they check. Test-only.
namespace treelat::oracle {

// all maximal pairwise-noncrossing arc sets, by subset filtering
std::vector<std::vector<ArcId>> facets_exhaustive(const Arcs& arcs);

// all biclosed segment sets, by filtering every subset
std::vector<SegSet> biclosed_exhaustive(const Segments& segs);

// subsets of indecomposables closed under submodules and extension middle
// terms (the closure-filter definition of torsion-free classes)
std::vector<SegSet> torsf_exhaustive(const TilingAlgebra& alg);

// c-matrices of the framed quiver Q_T by exhaustive matrix mutation
std::set<CMatrix> cmat_by_mutation(const TilingAlgebra& alg);

// oriented exchange graph of the framed quiver: vertices indexed by
// discovery, edges follow positive c-vectors
struct ExchangeGraph {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;
};
ExchangeGraph oriented_exchange_graph(const TilingAlgebra& alg);

// O(n^3) semidistributivity check straight from the definition
bool semidistributive_bruteforce(const FiniteLattice& l);

// admissible-sequence generation check: the collection's segments generate
// every segment under composition and overlap differences
bool generates_all_segments(const TilingAlgebra& alg, const SmcCollection& x);

}  // namespace treelat::oracle
