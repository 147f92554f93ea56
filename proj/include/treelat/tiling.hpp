#pragma once

#include <string>
#include <vector>

#include "treelat/biclosed.hpp"
#include "treelat/ncp.hpp"

namespace treelat {

struct NotDegreeThree : TreeError {
  using TreeError::TreeError;
};
struct WrongDegreeForDirection : TreeError {
  using TreeError::TreeError;
};
struct NoExtension : TreeError {
  using TreeError::TreeError;
};

// Stalk degree of an smc object: 0 or -1.
struct SmcObject {
  SegId seg = -1;
  int degree = 0;
  bool operator==(const SmcObject&) const = default;
  bool operator<(const SmcObject& o) const {
    return seg != o.seg ? seg < o.seg : degree < o.degree;
  }
};

struct SmcCollection {
  std::vector<SmcObject> objects;  // sorted
  void canonicalize() { std::sort(objects.begin(), objects.end()); }
  bool operator==(const SmcCollection&) const = default;
  bool operator<(const SmcCollection& o) const { return objects < o.objects; }
  std::vector<SegId> degree_segs(int degree) const;
};

// Signed 0/1 row vectors over the interior edges, compared as row sets.
struct CMatrix {
  std::vector<std::vector<int>> rows;  // sorted
  void canonicalize() { std::sort(rows.begin(), rows.end()); }
  bool operator==(const CMatrix&) const = default;
  bool operator<(const CMatrix& o) const { return rows < o.rows; }
};

// The tiling algebra of a tree: bound quiver on the interior edges,
// string-module combinatorics (Hom/Ext), torsion-free classes, wide
// subcategories, 2-term simple-minded collections, c-matrices.
class TilingAlgebra {
 public:
  explicit TilingAlgebra(const Segments& segs);

  const Segments& segments() const { return *segs_; }
  const EmbeddedTree& tree() const { return *t_; }

  // --- bound quiver (Q_T, I_T) ---
  struct QArrow {
    EdgeId from, to;
    Corner corner;
  };
  int vertex_count() const { return n_; }  // interior edges of the tree
  const std::vector<QArrow>& arrows() const { return arrows_; }
  // composable arrow pairs (first, second) with second o first a relation
  const std::vector<std::pair<int, int>>& relations() const {
    return relations_;
  }
  bool is_gentle(std::string* why = nullptr) const;
  // arrow index from edge a to edge b, -1 if absent
  int arrow_between(EdgeId a, EdgeId b) const;

  // --- string modules; one per segment ---
  // support of M(s): interior edge ids along the segment
  std::vector<EdgeId> support(SegId s) const;
  // junction arrow of the segment at interior position i points forward
  // (e_i -> e_{i+1}) iff the segment turns right there
  bool junction_forward(SegId s, int i) const;

  // dim Hom(M(u), M(v)), always 0 or 1: nonzero iff K_u and C_v intersect.
  int hom_dim(SegId u, SegId v) const;
  // dim Ext^1(M(top), M(bot)) for extensions 0 -> M(bot) -> X -> M(top) -> 0.
  int ext_dim(SegId top, SegId bot) const;
  // summands of the middle term of the unique nonsplit extension
  std::vector<SegId> ext_middle(SegId top, SegId bot) const;

  // indecomposable submodules / quotients of M(u): the C_u / K_u subsegments
  SegSet submodule_segs(SegId u) const { return segs_->cs(u); }
  SegSet quotient_segs(SegId u) const { return segs_->ks(u); }

  // --- torsion-free classes and wide subcategories ---
  struct SubcatLattice {
    std::vector<SegSet> elements;  // module sets, by inclusion
    FiniteLattice lattice;
    int index_of(SegSet x) const;
  };
  // lattice of torsion-free classes = pi_down images of Bic(T)
  SubcatLattice torsion_free_classes(const BicLattice& bic) const;
  // wide subcategories: closures of Seg(B) over noncrossing tree partitions
  SubcatLattice wide_subcategories(const NcpLattice& ncp) const;

  // --- 2-term simple-minded collections ---
  SmcCollection theta_map(const TreePartition& p) const;
  bool is_2term_smc(const SmcCollection& x, std::string* why = nullptr) const;
  // left mutation needs degree 0 at k, right mutation degree -1
  SmcCollection mutate(const SmcCollection& x, int k, bool left) const;

  // --- c-matrices (trees with all interior degrees 3) ---
  CMatrix c_matrix(const TreePartition& p) const;

 private:
  const EmbeddedTree* t_;
  const Segments* segs_;
  int n_;
  std::vector<QArrow> arrows_;
  std::vector<std::pair<int, int>> relations_;
};

}  // namespace treelat
