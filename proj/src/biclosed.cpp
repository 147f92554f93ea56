#include "treelat/biclosed.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace treelat {

BicLattice::BicLattice(const NoncrossingComplex& ncc)
    : segs_(&ncc.segments()), ncc_(&ncc) {
  const Segments& S = *segs_;
  if (S.count() > 20)
    throw DeskScaleError("biclosed enumeration needs at most 20 segments");
  // bottom-up BFS by single-segment additions; every biclosed set is
  // reachable this way since covers are single-step inclusions
  std::map<SegSet, int> seen{{SegSet{0}, 0}};
  elements_.push_back(0);
  for (size_t i = 0; i < elements_.size(); ++i) {
    SegSet x = elements_[i];
    for (SegId s = 0; s < S.count(); ++s) {
      if (seg_in(x, s)) continue;
      SegSet y = x | seg_bit(s);
      if (!S.is_biclosed(y)) continue;
      if (seen.emplace(y, elements_.size()).second) elements_.push_back(y);
    }
  }
  std::sort(elements_.begin(), elements_.end(), [](SegSet a, SegSet b) {
    int ca = __builtin_popcountll(a), cb = __builtin_popcountll(b);
    return ca != cb ? ca < cb : a < b;
  });
  std::vector<Cover> covers;
  for (int i = 0; i < size(); ++i)
    for (SegId s = 0; s < S.count(); ++s) {
      if (seg_in(elements_[i], s)) continue;
      int j = index_of(elements_[i] | seg_bit(s));
      if (j >= 0) covers.push_back({i, j, s});
    }
  lattice_ = FiniteLattice::build(size(), std::move(covers));
}

int BicLattice::index_of(SegSet x) const {
  auto less = [](SegSet a, SegSet b) {
    int ca = __builtin_popcountll(a), cb = __builtin_popcountll(b);
    return ca != cb ? ca < cb : a < b;
  };
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x, less);
  if (it != elements_.end() && *it == x)
    return static_cast<int>(it - elements_.begin());
  return -1;
}

SegSet BicLattice::pi_down(SegSet x) const {
  SegSet r = 0;
  for (SegId s = 0; s < segs_->count(); ++s)
    if (seg_in(x, s) && (segs_->cs(s) & ~x) == 0) r |= seg_bit(s);
  return r;
}

SegSet BicLattice::pi_up(SegSet x) const {
  SegSet r = 0;
  for (SegId s = 0; s < segs_->count(); ++s)
    if (segs_->ks(s) & x) r |= seg_bit(s);
  return r;
}

Congruence BicLattice::theta() const {
  std::map<SegSet, int> fiber;
  std::vector<int> class_of(size());
  // assign class ids in element order so classes sort by their minimum
  for (int i = 0; i < size(); ++i) {
    SegSet d = pi_down(elements_[i]);
    auto [it, fresh] = fiber.emplace(d, static_cast<int>(fiber.size()));
    (void)fresh;
    class_of[i] = it->second;
  }
  Congruence th;
  th.class_of = std::move(class_of);
  th.class_count = static_cast<int>(fiber.size());
  return th;
}

std::vector<SegSet> BicLattice::restricted_biclosed(SegSet space) const {
  // subsets Z of the space closed under the inherited closure
  // X -> closure(X) & space, with closed complement within the space
  std::vector<SegId> members;
  for (SegId s = 0; s < segs_->count(); ++s)
    if (seg_in(space, s)) members.push_back(s);
  std::vector<SegSet> out;
  for (SegSet pick = 0;; ++pick) {
    SegSet z = 0;
    for (size_t k = 0; k < members.size(); ++k)
      if ((pick >> k) & 1) z |= seg_bit(members[k]);
    bool closed = (segs_->closure(z) & space) == z;
    SegSet comp = space & ~z;
    bool co_closed = (segs_->closure(comp) & space) == comp;
    if (closed && co_closed) out.push_back(z);
    if (pick + 1 == (SegSet{1} << members.size())) break;
  }
  return out;
}

BicLattice::FacialInterval BicLattice::facial_interval(
    SegSet w, const std::vector<SegId>& singles) const {
  if (!segs_->is_biclosed(w))
    throw PreconditionViolated("W is not biclosed");
  for (SegId s : singles)
    if (seg_in(w, s) || !segs_->is_biclosed(w | seg_bit(s)))
      throw PreconditionViolated("W u {s} is not biclosed");

  FacialInterval out;
  // finest partition with concatenable singles together
  std::vector<int> block_of(singles.size());
  for (size_t i = 0; i < singles.size(); ++i) block_of[i] = static_cast<int>(i);
  bool merged = true;
  while (merged) {
    merged = false;
    for (size_t i = 0; i < singles.size(); ++i)
      for (size_t j = 0; j < singles.size(); ++j)
        if (block_of[i] != block_of[j] &&
            segs_->compose(singles[i], singles[j])) {
          int from = block_of[j], to = block_of[i];
          for (int& b : block_of)
            if (b == from) b = to;
          merged = true;
        }
  }
  std::map<int, int> renum;
  for (int b : block_of) renum.emplace(b, static_cast<int>(renum.size()));
  out.blocks.resize(renum.size());
  for (size_t i = 0; i < singles.size(); ++i)
    out.blocks[renum[block_of[i]]].push_back(singles[i]);
  for (const auto& blk : out.blocks) {
    SegSet b = 0;
    for (SegId s : blk) b |= seg_bit(s);
    out.block_closures.push_back(segs_->closure(b));
  }
  // block closures pairwise disjoint and disjoint from W
  for (size_t i = 0; i < out.block_closures.size(); ++i) {
    if (out.block_closures[i] & w)
      throw PreconditionViolated("block closure meets W");
    for (size_t j = i + 1; j < out.block_closures.size(); ++j)
      if (out.block_closures[i] & out.block_closures[j])
        throw PreconditionViolated("block closures intersect");
  }

  SegSet all = 0;
  for (SegId s : singles) all |= seg_bit(s);
  SegSet top = w | segs_->closure(all);
  int lo = index_of(w), hi = index_of(top);
  assert(lo >= 0 && hi >= 0);
  for (int i = 0; i < size(); ++i)
    if (lattice_.leq(lo, i) && lattice_.leq(i, hi)) out.interval.push_back(i);

  // verify the product decomposition elementwise
  std::vector<std::vector<SegSet>> factor;
  for (SegSet bc : out.block_closures) factor.push_back(restricted_biclosed(bc));
  size_t expect = 1;
  for (const auto& f : factor) expect *= f.size();
  if (expect != out.interval.size())
    throw PreconditionViolated("interval is not the product of the blocks");
  std::map<std::vector<SegSet>, int> seen;
  for (int i : out.interval) {
    std::vector<SegSet> comp;
    for (SegSet bc : out.block_closures) comp.push_back(elements_[i] & bc);
    if ((elements_[i] & ~w & ~segs_->closure(all)) != 0)
      throw PreconditionViolated("interval element leaves the block closures");
    if (!seen.emplace(comp, i).second)
      throw PreconditionViolated("product map is not injective");
    out.components.push_back(comp);
  }
  return out;
}

}  // namespace treelat
