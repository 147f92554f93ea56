#include "treelat/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace treelat {

int Bits::count() const {
  int c = 0;
  for (auto w : w_) c += __builtin_popcountll(w);
  return c;
}

int Bits::first() const {
  for (size_t k = 0; k < w_.size(); ++k)
    if (w_[k]) return static_cast<int>(k * 64 + __builtin_ctzll(w_[k]));
  return -1;
}

bool Bits::any() const {
  for (auto w : w_)
    if (w) return true;
  return false;
}

bool Bits::subset_of(const Bits& o) const {
  for (size_t k = 0; k < w_.size(); ++k)
    if (w_[k] & ~o.w_[k]) return false;
  return true;
}

Bits& Bits::operator&=(const Bits& o) {
  for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
  return *this;
}

Bits& Bits::operator|=(const Bits& o) {
  for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
  return *this;
}

FiniteLattice FiniteLattice::build(int n, std::vector<Cover> covers,
                                   bool require_lattice) {
  FiniteLattice L;
  L.n_ = n;
  if (n == 0) throw LatticeError("empty lattice");
  for (const auto& c : covers)
    if (c.lo < 0 || c.hi >= n || c.lo >= c.hi)
      throw LatticeError("cover indices must follow a linear extension");
  std::sort(covers.begin(), covers.end(), [](const Cover& a, const Cover& b) {
    return std::make_pair(a.lo, a.hi) < std::make_pair(b.lo, b.hi);
  });
  L.covers_ = std::move(covers);

  L.down_.assign(n, Bits(n));
  L.up_.assign(n, Bits(n));
  L.up_adj_.assign(n, {});
  L.lo_adj_.assign(n, {});
  for (int x = 0; x < n; ++x) L.down_[x].set(x);
  for (const auto& c : L.covers_) {
    L.up_adj_[c.lo].push_back(c.hi);
    L.lo_adj_[c.hi].push_back(c.lo);
  }
  // index order is a linear extension, so a single pass closes downward
  for (int y = 0; y < n; ++y)
    for (int x : L.lo_adj_[y]) L.down_[y] |= L.down_[x];
  for (int x = 0; x < n; ++x) L.up_[x].set(x);
  for (int x = n - 1; x >= 0; --x)
    for (int y : L.up_adj_[x]) L.up_[x] |= L.up_[y];

  // genuine covers: exactly the two endpoints between lo and hi
  for (const auto& c : L.covers_)
    if ((L.down_[c.hi] & L.up_[c.lo]).count() != 2)
      throw LatticeError("edge is not a cover relation");
  // duplicate covers
  for (size_t i = 1; i < L.covers_.size(); ++i)
    if (L.covers_[i].lo == L.covers_[i - 1].lo &&
        L.covers_[i].hi == L.covers_[i - 1].hi)
      throw LatticeError("duplicate cover");

  int n_bottom = 0, n_top = 0;
  for (int x = 0; x < n; ++x) {
    if (L.lo_adj_[x].empty()) {
      L.bottom_ = x;
      ++n_bottom;
    }
    if (L.up_adj_[x].empty()) {
      L.top_ = x;
      ++n_top;
    }
  }
  if (n > 1 && (n_bottom != 1 || n_top != 1)) {
    if (require_lattice) throw NotALattice("no unique top/bottom");
    return L;  // poset only; lattice_ok_ stays false
  }

  L.lattice_ok_ = true;
  for (int x = 0; x < n && L.lattice_ok_; ++x)
    for (int y = x + 1; y < n; ++y) {
      Bits s = L.up_[x] & L.up_[y];
      int z = s.first();
      if (z < 0 || !s.subset_of(L.up_[z])) {
        L.lattice_ok_ = false;
        break;
      }
      // meets then exist too (finite poset with top and all joins), but a
      // cheap direct check keeps the error honest
      Bits m = L.down_[x] & L.down_[y];
      int w = -1;
      m.for_each([&](int i) { w = i; });
      if (w < 0 || !m.subset_of(L.down_[w])) {
        L.lattice_ok_ = false;
        break;
      }
    }
  if (require_lattice && !L.lattice_ok_)
    throw NotALattice("a pair of elements lacks a join or meet");
  return L;
}

int FiniteLattice::join(int x, int y) const {
  Bits s = up_[x] & up_[y];
  int z = s.first();
  if (z < 0 || !s.subset_of(up_[z])) throw NotALattice("join does not exist");
  return z;
}

int FiniteLattice::meet(int x, int y) const {
  Bits m = down_[x] & down_[y];
  int w = -1;
  m.for_each([&](int i) { w = i; });
  if (w < 0 || !m.subset_of(down_[w])) throw NotALattice("meet does not exist");
  return w;
}

int FiniteLattice::join_all(const std::vector<int>& xs) const {
  int r = bottom_;
  for (int x : xs) r = join(r, x);
  return r;
}

int FiniteLattice::meet_all(const std::vector<int>& xs) const {
  int r = top_;
  for (int x : xs) r = meet(r, x);
  return r;
}

int FiniteLattice::cover_label(int lo, int hi) const {
  for (const auto& c : covers_)
    if (c.lo == lo && c.hi == hi) return c.label;
  return -1;
}

std::vector<int> FiniteLattice::join_irreducibles() const {
  std::vector<int> ji;
  for (int x = 0; x < n_; ++x)
    if (lo_adj_[x].size() == 1) ji.push_back(x);
  return ji;
}

std::vector<int> FiniteLattice::meet_irreducibles() const {
  std::vector<int> mi;
  for (int x = 0; x < n_; ++x)
    if (up_adj_[x].size() == 1) mi.push_back(x);
  return mi;
}

std::vector<int> FiniteLattice::labels_down(int x) const {
  std::vector<int> ls;
  for (int y : lo_adj_[x]) ls.push_back(cover_label(y, x));
  std::sort(ls.begin(), ls.end());
  return ls;
}

std::vector<int> FiniteLattice::labels_up(int x) const {
  std::vector<int> ls;
  for (int y : up_adj_[x]) ls.push_back(cover_label(x, y));
  std::sort(ls.begin(), ls.end());
  return ls;
}

bool FiniteLattice::is_meet_semidistributive() const {
  // Finite lattice is meet-semidistributive iff for each join-irreducible j,
  // {x : x meet j = j_*} has a greatest element.
  for (int j : join_irreducibles()) {
    int jstar = ji_star(j);
    std::vector<int> k;
    for (int x = 0; x < n_; ++x)
      if (meet(x, j) == jstar) k.push_back(x);
    if (k.empty()) return false;
    int top_candidate = k.back();  // largest index = maximal candidate
    for (int x : k)
      if (!leq(x, top_candidate)) return false;
  }
  return true;
}

FiniteLattice FiniteLattice::dual() const {
  std::vector<Cover> cs;
  for (const auto& c : covers_)
    cs.push_back({n_ - 1 - c.hi, n_ - 1 - c.lo, c.label});
  return build(n_, cs, false);
}

void FiniteLattice::chains_between(
    int lo, int hi, std::vector<int>& chain,
    const std::function<void(const std::vector<int>&)>& f,
    long& budget) const {
  if (--budget < 0) throw LatticeError("too many maximal chains in interval");
  int x = chain.back();
  if (x == hi) {
    f(chain);
    return;
  }
  for (int y : up_adj_[x])
    if (leq(y, hi)) {
      chain.push_back(y);
      chains_between(lo, hi, chain, f, budget);
      chain.pop_back();
    }
}

FiniteLattice::LabelCheck FiniteLattice::check_cn_labeling(
    const LabelLess& less) const {
  auto lab_lt = [&](int a, int b) { return less ? less(a, b) : a != b; };
  LabelCheck out;
  auto fail = [&](const std::string& msg) {
    out.ok = false;
    if (out.failure.empty()) out.failure = msg;
  };

  auto check_one_side = [&](const FiniteLattice& L, const char* side) {
    for (int z = 0; z < L.n_ && out.ok; ++z) {
      const auto& ups = L.up_adj_[z];
      for (size_t i = 0; i < ups.size() && out.ok; ++i)
        for (size_t j = i + 1; j < ups.size() && out.ok; ++j) {
          int x = ups[i], y = ups[j];
          int top = L.join(x, y);
          int lzx = L.cover_label(z, x), lzy = L.cover_label(z, y);
          for (int first : {x, y}) {
            int want_top_label = (first == x) ? lzy : lzx;
            long budget = 200000;
            std::vector<int> chain{z, first};
            L.chains_between(z, top, chain,
                             [&](const std::vector<int>& c) {
                               if (!out.ok) return;
                               int m = static_cast<int>(c.size());
                               int top_lab =
                                   L.cover_label(c[m - 2], c[m - 1]);
                               if (top_lab != want_top_label)
                                 fail(std::string("CN1 fails (") + side +
                                      ") at z=" + std::to_string(z));
                               std::set<int> seen;
                               for (int k = 0; k + 1 < m; ++k) {
                                 int l = L.cover_label(c[k], c[k + 1]);
                                 if (!seen.insert(l).second)
                                   fail(std::string("CN3 fails (") + side +
                                        ") at z=" + std::to_string(z));
                                 if (k > 0 && k + 2 < m) {
                                   if (!lab_lt(lzx, l) || !lab_lt(lzy, l))
                                     fail(std::string("CN2 fails (") + side +
                                          ") at z=" + std::to_string(z));
                                 }
                               }
                             },
                             budget);
          }
        }
    }
  };
  check_one_side(*this, "primal");
  if (out.ok) check_one_side(dual(), "dual");
  return out;
}

FiniteLattice::LabelCheck FiniteLattice::check_cu_labeling(
    const LabelLess& less) const {
  LabelCheck out = check_cn_labeling(less);
  if (!out.ok) return out;
  std::set<int> seen;
  for (int j : join_irreducibles())
    if (!seen.insert(cover_label(ji_star(j), j)).second) {
      out.ok = false;
      out.failure = "CU1 fails: two join-irreducibles share a label";
      return out;
    }
  seen.clear();
  for (int m : meet_irreducibles())
    if (!seen.insert(cover_label(m, mi_star(m))).second) {
      out.ok = false;
      out.failure = "CU2 fails: two meet-irreducibles share a label";
      return out;
    }
  return out;
}

Congruence FiniteLattice::congruence_from_classes(
    const std::vector<int>& class_of) const {
  Congruence th;
  th.class_of = class_of;
  th.class_count = *std::max_element(class_of.begin(), class_of.end()) + 1;
  return th;
}

bool FiniteLattice::is_congruence(const Congruence& theta,
                                  std::string* why) const {
  auto bad = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (static_cast<int>(theta.class_of.size()) != n_)
    return bad("class map has wrong size");
  // classes are closed intervals
  std::vector<int> mn(theta.class_count, -1), mx(theta.class_count, -1);
  std::vector<int> sz(theta.class_count, 0);
  for (int x = 0; x < n_; ++x) {
    int c = theta.class_of[x];
    if (mn[c] < 0) mn[c] = x;
    mx[c] = x;
    ++sz[c];
  }
  for (int c = 0; c < theta.class_count; ++c) {
    if (mn[c] < 0) return bad("empty class");
    Bits iv = up_[mn[c]] & down_[mx[c]];
    if (iv.count() != sz[c]) return bad("class is not a closed interval");
    bool ok = true;
    iv.for_each([&](int x) { ok = ok && theta.class_of[x] == c; });
    if (!ok) return bad("class is not a closed interval");
  }
  // min/max maps order-preserving; checking covers suffices
  for (const auto& cv : covers_) {
    int cl = theta.class_of[cv.lo], ch = theta.class_of[cv.hi];
    if (!leq(mn[cl], mn[ch]) || !leq(mx[cl], mx[ch]))
      return bad("class min/max maps are not order-preserving");
  }
  return true;
}

Congruence FiniteLattice::principal_congruence(int a, int b) const {
  // union-find closure of: x ~ y forces x v z ~ y v z and x ^ z ~ y ^ z
  std::vector<int> up(n_);
  std::iota(up.begin(), up.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return up[x] == x ? x : up[x] = find(up[x]);
  };
  std::vector<std::pair<int, int>> work;
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    up[x] = y;
    work.emplace_back(x, y);
  };
  unite(a, b);
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (int z = 0; z < n_; ++z) {
      unite(join(x, z), join(y, z));
      unite(meet(x, z), meet(y, z));
    }
  }
  // classes in linear-extension order of representatives
  std::vector<int> class_of(n_, -1);
  std::map<int, int> id;
  for (int x = 0; x < n_; ++x) {
    int r = find(x);
    auto [it, fresh] = id.emplace(r, static_cast<int>(id.size()));
    (void)fresh;
    class_of[x] = it->second;
  }
  // re-number classes by smallest member so quotient indices are a linear
  // extension
  std::vector<int> first(id.size(), n_);
  for (int x = 0; x < n_; ++x)
    first[class_of[x]] = std::min(first[class_of[x]], x);
  std::vector<int> order(id.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int c, int d) { return first[c] < first[d]; });
  std::vector<int> rank(id.size());
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  for (int& c : class_of) c = rank[c];
  return congruence_from_classes(class_of);
}

FiniteLattice FiniteLattice::quotient(const Congruence& theta,
                                      std::vector<int>* class_index) const {
  std::string why;
  if (!is_congruence(theta, &why)) throw NotACongruence(why);
  // class order by smallest member is a linear extension of the quotient
  std::vector<int> first(theta.class_count, n_);
  for (int x = 0; x < n_; ++x)
    first[theta.class_of[x]] = std::min(first[theta.class_of[x]], x);
  std::vector<int> order(theta.class_count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int c, int d) { return first[c] < first[d]; });
  std::vector<int> rank(theta.class_count);
  for (int i = 0; i < theta.class_count; ++i) rank[order[i]] = i;

  std::map<std::pair<int, int>, int> edge_label;
  for (const auto& cv : covers_) {
    int cl = rank[theta.class_of[cv.lo]], ch = rank[theta.class_of[cv.hi]];
    if (cl == ch) continue;
    auto key = std::make_pair(cl, ch);
    auto it = edge_label.find(key);
    if (it == edge_label.end())
      edge_label[key] = cv.label;
    else if (it->second != cv.label)
      throw NotACongruence("induced labels disagree on a quotient cover");
  }
  std::vector<Cover> qcovers;
  for (const auto& [k, l] : edge_label) qcovers.push_back({k.first, k.second, l});
  if (class_index) {
    class_index->assign(n_, -1);
    for (int x = 0; x < n_; ++x)
      (*class_index)[x] = rank[theta.class_of[x]];
  }
  return build(theta.class_count, std::move(qcovers));
}

FiniteLattice FiniteLattice::doubling(int a, int b,
                                      std::vector<int>* new_index) const {
  if (!leq(a, b)) throw NotAnInterval("doubling needs an interval [a,b]");
  // lower zone: everything below some element of [a,b] = down(b)
  const Bits& zone = down_[b];
  // elements (x,0) for x in zone, (x,1) for x outside zone or x in [a,b]
  std::vector<std::pair<int, int>> elems;
  for (int x = 0; x < n_; ++x) {
    if (zone.test(x)) elems.push_back({x, 0});
    if (!zone.test(x) || (leq(a, x) && leq(x, b))) elems.push_back({x, 1});
  }
  // (x,i) <= (y,j) iff x <= y and i <= j; elems is already sorted by (x,i)
  // lexicographically which is a linear extension
  int m = static_cast<int>(elems.size());
  std::vector<Bits> dn(m, Bits(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (leq(elems[i].first, elems[j].first) &&
          elems[i].second <= elems[j].second)
        dn[j].set(i);
  std::vector<Cover> cs;
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) {
      if (i == j || !dn[j].test(i)) continue;
      bool is_cover = true;
      dn[j].for_each([&](int k) {
        if (k != i && k != j && dn[k].test(i)) is_cover = false;
      });
      if (is_cover) cs.push_back({i, j, -1});
    }
  if (new_index) {
    new_index->assign(2 * n_, -1);
    for (int i = 0; i < m; ++i)
      (*new_index)[elems[i].first * 2 + elems[i].second] = i;
  }
  return build(m, std::move(cs));
}

std::optional<std::vector<int>> FiniteLattice::find_doubling_sequence() const {
  // peel: look for a join-irreducible whose principal congruence has classes
  // of size <= 2 and collapses to a lattice from which this one is a doubling
  if (n_ == 1) return std::vector<int>{1};
  for (int j : join_irreducibles()) {
    Congruence th = principal_congruence(ji_star(j), j);
    if (th.class_count == n_) continue;
    std::vector<int> sz(th.class_count, 0);
    for (int c : th.class_of) ++sz[c];
    if (*std::max_element(sz.begin(), sz.end()) > 2) continue;
    std::string why;
    if (!is_congruence(th, &why)) continue;
    std::vector<int> cidx;
    FiniteLattice q = quotient(th, &cidx);
    // collapsed classes must form an interval of the quotient
    std::vector<int> doubled;
    for (int c = 0; c < th.class_count; ++c)
      if (sz[c] == 2) doubled.push_back(c);
    if (doubled.empty()) continue;
    // translate to quotient indices
    std::vector<int> dq;
    for (int x = 0; x < n_; ++x)
      if (sz[th.class_of[x]] == 2 &&
          std::find(dq.begin(), dq.end(), cidx[x]) == dq.end())
        dq.push_back(cidx[x]);
    std::sort(dq.begin(), dq.end());
    int lo = dq.front(), hi = dq.back();
    bool interval_ok = q.leq(lo, hi);
    if (interval_ok) {
      Bits iv = q.up(lo) & q.down(hi);
      interval_ok = iv.count() == static_cast<int>(dq.size());
      for (int x : dq) interval_ok = interval_ok && iv.test(x);
    }
    if (!interval_ok) continue;
    // verify this lattice is the doubling of the quotient at [lo,hi]
    std::vector<int> nidx;
    FiniteLattice redoubled = q.doubling(lo, hi, &nidx);
    if (redoubled.size() != n_) continue;
    // canonical map x -> (class(x), copy); in a 2-element class the smaller
    // index (linear extension) is the lower copy
    std::vector<int> class_min(th.class_count, n_);
    for (int x = 0; x < n_; ++x)
      class_min[th.class_of[x]] = std::min(class_min[th.class_of[x]], x);
    std::vector<int> f(n_, -1);
    bool map_ok = true;
    for (int x = 0; x < n_; ++x) {
      int c = cidx[x];
      int copy;
      if (sz[th.class_of[x]] == 2)
        copy = (x == class_min[th.class_of[x]]) ? 0 : 1;
      else
        copy = q.leq(c, hi) ? 0 : 1;
      int y = nidx[static_cast<size_t>(c) * 2 + copy];
      if (y < 0) map_ok = false;
      f[x] = y;
    }
    // f must carry covers to covers bijectively (Hasse isomorphism)
    if (redoubled.covers().size() != covers_.size()) continue;
    std::set<std::pair<int, int>> rcovers;
    for (const auto& cv : redoubled.covers()) rcovers.insert({cv.lo, cv.hi});
    for (const auto& cv : covers_)
      if (map_ok && (f[cv.lo] < 0 || f[cv.hi] < 0 ||
                     !rcovers.count({f[cv.lo], f[cv.hi]})))
        map_ok = false;
    if (!map_ok) continue;
    auto rest = q.find_doubling_sequence();
    if (!rest) continue;
    rest->push_back(n_);
    return rest;
  }
  return std::nullopt;
}

std::vector<int> FiniteLattice::canonical_join_rep(int x) const {
  std::vector<int> lab = labels_down(x);
  std::vector<int> d;
  for (int j : join_irreducibles()) {
    int l = cover_label(ji_star(j), j);
    if (std::binary_search(lab.begin(), lab.end(), l)) d.push_back(j);
  }
  if (join_all(d) != x)
    throw LatticeError("canonical join representation failed; not CU-labeled");
  return d;
}

int FiniteLattice::kreweras(int x) const {
  std::vector<int> want = labels_up(x);
  int found = -1;
  for (int y = 0; y < n_; ++y)
    if (labels_down(y) == want) {
      if (found >= 0) throw LatticeError("kreweras image not unique");
      found = y;
    }
  if (found < 0) throw LatticeError("kreweras image does not exist");
  return found;
}

ShardOrder FiniteLattice::shard_order() const {
  ShardOrder out;
  out.psi.resize(n_);
  for (int x = 0; x < n_; ++x) {
    int m = x;
    for (int y : lo_adj_[x]) m = meet(m, y);
    std::set<int> labels;
    for (const auto& cv : covers_)
      if (leq(m, cv.lo) && leq(cv.hi, x)) labels.insert(cv.label);
    out.psi[x].assign(labels.begin(), labels.end());
  }
  // order by inclusion; psi need not be injective in general, but is for the
  // lattices this project builds (asserted by callers)
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return out.psi[a].size() < out.psi[b].size();
  });
  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  int n = n_;
  std::vector<Cover> cs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int a = order[i], b = order[j];
      if (i == j || !subset(out.psi[a], out.psi[b])) continue;
      if (out.psi[a].size() == out.psi[b].size())
        throw LatticeError("shard map is not injective");
      bool is_cover = true;
      for (int k = 0; k < n && is_cover; ++k) {
        int c = order[k];
        if (k == i || k == j) continue;
        if (subset(out.psi[a], out.psi[c]) && subset(out.psi[c], out.psi[b]) &&
            out.psi[a].size() < out.psi[c].size() &&
            out.psi[c].size() < out.psi[b].size())
          is_cover = false;
      }
      if (is_cover) cs.push_back({i, j, -1});
    }
  out.poset = build(n, std::move(cs), false);
  out.element_of = order;
  return out;
}

bool digraphs_isomorphic(int n, const std::vector<std::pair<int, int>>& e1,
                         const std::vector<std::pair<int, int>>& e2) {
  if (e1.size() != e2.size()) return false;
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false)),
      b(n, std::vector<bool>(n, false));
  for (auto [x, y] : e1) a[x][y] = true;
  for (auto [x, y] : e2) b[x][y] = true;
  std::vector<int> perm(n, -1), used(n, 0);
  std::function<bool(int)> rec = [&](int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = (a[u][v] == b[perm[u]][w]) && (a[v][u] == b[w][perm[u]]);
      if (!ok) continue;
      perm[v] = w;
      used[w] = 1;
      if (rec(v + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return rec(0);
}

}  // namespace treelat
