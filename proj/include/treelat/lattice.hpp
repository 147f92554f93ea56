#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace treelat {

struct ShardOrder;

struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotALattice : LatticeError {
  using LatticeError::LatticeError;
};
struct NotACongruence : LatticeError {
  using LatticeError::LatticeError;
};
struct NotAnInterval : LatticeError {
  using LatticeError::LatticeError;
};

// Dynamic bitset sized at runtime; element sets inside one lattice.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  int size() const { return n_; }
  int count() const;
  int first() const;  // -1 if empty
  bool any() const;
  bool subset_of(const Bits& o) const;
  Bits& operator&=(const Bits& o);
  Bits& operator|=(const Bits& o);
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  bool operator==(const Bits&) const = default;
  // visits set bits in increasing index order
  template <typename F>
  void for_each(F f) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t m = w_[k];
      while (m) {
        f(static_cast<int>(k * 64 + __builtin_ctzll(m)));
        m &= m - 1;
      }
    }
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct Cover {
  int lo, hi;
  int label = -1;  // opaque LabelId, -1 = unlabeled
};

// Partition of lattice elements into congruence classes.
struct Congruence {
  std::vector<int> class_of;
  int class_count = 0;
};

// Finite lattice (or poset, when built without the lattice requirement) with
// explicit cover relations, optional edge labels and an optional partial
// order on labels. Element indices must come in a linear extension:
// cover.lo < cover.hi as indices.
class FiniteLattice {
 public:
  using LabelLess = std::function<bool(int, int)>;  // strict partial order

  // Validates: indices form a linear extension, each (lo,hi) is a genuine
  // cover, unique top/bottom, and (unless require_lattice is false) that all
  // joins and meets exist.
  static FiniteLattice build(int n, std::vector<Cover> covers,
                             bool require_lattice = true);

  int size() const { return n_; }
  bool is_lattice() const { return lattice_ok_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  bool leq(int x, int y) const { return down_[y].test(x); }
  const Bits& down(int x) const { return down_[x]; }
  const Bits& up(int x) const { return up_[x]; }

  int join(int x, int y) const;
  int meet(int x, int y) const;
  int join_all(const std::vector<int>& xs) const;
  int meet_all(const std::vector<int>& xs) const;

  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int x) const { return up_adj_[x]; }
  const std::vector<int>& lower_covers(int x) const { return lo_adj_[x]; }
  int cover_label(int lo, int hi) const;  // -1 when unlabeled/absent

  std::vector<int> join_irreducibles() const;
  std::vector<int> meet_irreducibles() const;
  // unique lower cover of a join-irreducible / upper cover of a meet-irr.
  int ji_star(int j) const { return lo_adj_[j][0]; }
  int mi_star(int m) const { return up_adj_[m][0]; }

  // labels of covers below / above x
  std::vector<int> labels_down(int x) const;
  std::vector<int> labels_up(int x) const;

  // --- lattice-theoretic toolkit ---

  bool is_meet_semidistributive() const;
  bool is_semidistributive() const {
    return is_meet_semidistributive() && dual().is_meet_semidistributive();
  }
  FiniteLattice dual() const;

  struct LabelCheck {
    bool ok = true;
    std::string failure;  // axiom + witnessing configuration
  };
  // CN1-CN3 on L and its dual, then CU1/CU2. With no label order, the CN2
  // comparisons degrade to label inequality (weaker check).
  LabelCheck check_cn_labeling(const LabelLess& less = nullptr) const;
  LabelCheck check_cu_labeling(const LabelLess& less = nullptr) const;

  // Congruences.
  bool is_congruence(const Congruence& theta, std::string* why = nullptr) const;
  Congruence congruence_from_classes(const std::vector<int>& class_of) const;
  // Smallest congruence identifying the cover (a,b).
  Congruence principal_congruence(int a, int b) const;
  // Quotient lattice; classes indexed in a linear extension; labels induced.
  FiniteLattice quotient(const Congruence& theta,
                         std::vector<int>* class_index = nullptr) const;

  // Doubling of the interval [a,b]; unlabeled result. new_index, when given,
  // receives the (x, copy) -> index map encoded as x*2+copy (-1 if absent).
  FiniteLattice doubling(int a, int b,
                         std::vector<int>* new_index = nullptr) const;
  // A sequence of interval doublings constructing the lattice, if congruence
  // uniform; nullopt otherwise. Entries are sizes after each doubling.
  std::optional<std::vector<int>> find_doubling_sequence() const;

  // Canonical join-representation via CU labels: the join-irreducibles whose
  // label appears below x. Requires a CU-labeling to be meaningful.
  std::vector<int> canonical_join_rep(int x) const;
  // The unique y with up-labels(x) = down-labels(y); throws if absent.
  int kreweras(int x) const;

  // Shard intersection order: psi(x) = labels of covers inside
  // [meet(lower covers of x), x]; poset of those sets under inclusion.
  ShardOrder shard_order() const;

 private:
  int n_ = 0;
  bool lattice_ok_ = false;
  int bottom_ = -1, top_ = -1;
  std::vector<Cover> covers_;
  std::vector<Bits> down_, up_;
  std::vector<std::vector<int>> up_adj_, lo_adj_;

  void chains_between(int lo, int hi, std::vector<int>& chain,
                      const std::function<void(const std::vector<int>&)>& f,
                      long& budget) const;
};

struct ShardOrder {
  std::vector<std::vector<int>> psi;  // sorted label sets, per element
  FiniteLattice poset;                // may be a non-lattice poset
  std::vector<int> element_of;        // poset index -> lattice element
};

// Backtracking digraph isomorphism for small graphs (used to compare flip
// graphs with exchange graphs).
bool digraphs_isomorphic(int n, const std::vector<std::pair<int, int>>& e1,
                         const std::vector<std::pair<int, int>>& e2);

}  // namespace treelat
