#pragma once

#include <vector>

#include "treelat/flipgraph.hpp"

namespace treelat {

struct PreconditionViolated : TreeError {
  using TreeError::TreeError;
};

// The lattice Bic(T) of biclosed segment sets under single-step inclusion,
// with the projections pi_down / pi_up, the congruence Theta, and the maps
// eta / phi to and from the oriented flip graph.
class BicLattice {
 public:
  explicit BicLattice(const NoncrossingComplex& ncc);

  const Segments& segments() const { return *segs_; }
  const NoncrossingComplex& ncc() const { return *ncc_; }

  int size() const { return static_cast<int>(elements_.size()); }
  SegSet element(int i) const { return elements_[i]; }
  int index_of(SegSet x) const;  // -1 when not biclosed
  const FiniteLattice& lattice() const { return lattice_; }

  SegSet pi_down(SegSet x) const;
  SegSet pi_up(SegSet x) const;

  // Theta: X ~ Y iff pi_down(X) = pi_down(Y); fibers are intervals
  // [pi_down(X), pi_up(X)].
  Congruence theta() const;

  Facet eta(SegSet x) const { return ncc_->eta(x); }
  SegSet phi(const Facet& f) const { return ncc_->phi(f); }

  // Facial interval [W, W u closure(singles)] with its product structure.
  struct FacialInterval {
    std::vector<std::vector<SegId>> blocks;  // partition of the singles
    std::vector<SegSet> block_closures;
    std::vector<int> interval;  // Bic indices, bottom first
    // for each interval element, its component in each block closure
    std::vector<std::vector<SegSet>> components;
  };
  // Requires each W u {s} biclosed; verifies the interval is isomorphic to
  // the product of the restricted biclosed lattices and throws otherwise.
  FacialInterval facial_interval(SegSet w,
                                 const std::vector<SegId>& singles) const;

  // Biclosed subsets of a restricted closure space (subset of Seg(T)).
  std::vector<SegSet> restricted_biclosed(SegSet space) const;

 private:
  const Segments* segs_;
  const NoncrossingComplex* ncc_;
  std::vector<SegSet> elements_;
  FiniteLattice lattice_;
};

}  // namespace treelat
