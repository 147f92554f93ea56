#include "treelat/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "treelat/segments.hpp"

namespace treelat {

TreeSpec corpus_a1() {
  return TreeSpec{{{5, {1, 6, 4}}, {6, {5, 2, 3}}}};
}

TreeSpec corpus_a2() {
  return TreeSpec{{{1, {4, 2, 5}}, {2, {1, 6, 3}}, {3, {2, 7, 8}}}};
}

TreeSpec corpus_star(int degree) {
  std::vector<int> nbrs;
  for (int i = 0; i < degree; ++i) nbrs.push_back(2 + i);
  return TreeSpec{{{1, nbrs}}};
}

TreeSpec corpus_spider3() {
  return TreeSpec{{{1, {2, 3, 4}},
                   {2, {1, 5, 6}},
                   {3, {1, 7, 8}},
                   {4, {1, 9, 10}}}};
}

TreeSpec corpus_linear3() {
  return TreeSpec{{{1, {2, 3, 4, 5}},
                   {2, {1, 6, 7}},
                   {3, {1, 8, 9}},
                   {4, {1, 10, 11}}}};
}

TreeSpec corpus_curves() {
  // Interior skeleton: every reference segment is a single interior edge;
  // rotations keep the red part ({1,3,4},{2,8},{5,6,7,9},{10}) noncrossing
  // with green completion {2-4, 5-8, 7-10}.
  return TreeSpec{{{1, {3, 11, 12}},
                   {3, {1, 4, 13}},
                   {4, {3, 2, 14}},
                   {2, {8, 4, 15}},
                   {8, {2, 5, 16}},
                   {5, {6, 8, 17}},
                   {6, {5, 7, 9}},
                   {7, {6, 10, 18}},
                   {9, {6, 19, 20}},
                   {10, {7, 21, 22}}}};
}

TreeSpec corpus_arc_example() {
  // Interior 9..12 with eight leaves on the boundary in ccw order
  // 7,6,5,4,3,1,2,8; carries the crossing arcs (7,10,11,12,5) and
  // (6,10,11,9,1).
  return TreeSpec{{{10, {7, 6, 11}},
                   {11, {10, 12, 9}},
                   {12, {5, 4, 3, 11}},
                   {9, {1, 2, 8, 11}}}};
}

namespace {

// cyclic arrangements of the neighbor multiset (interior neighbors distinct,
// leaves interchangeable), deduplicated by rotation
std::vector<std::vector<int>> cyclic_arrangements(std::vector<int> items) {
  std::sort(items.begin(), items.end());
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> best = items;
    std::vector<int> cur = items;
    for (size_t r = 1; r < items.size(); ++r) {
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
      best = std::min(best, cur);
    }
    if (seen.insert(best).second) out.push_back(best);
  } while (std::next_permutation(items.begin(), items.end()));
  return out;
}

}  // namespace

std::vector<TreeSpec> corpus_small(int max_interior) {
  // interior tree shapes as adjacency lists on 1..k
  std::vector<std::vector<std::pair<int, int>>> shapes;
  shapes.push_back({});                                    // k = 1
  if (max_interior >= 2) shapes.push_back({{1, 2}});       // edge
  if (max_interior >= 3) shapes.push_back({{1, 2}, {2, 3}});
  if (max_interior >= 4) {
    shapes.push_back({{1, 2}, {2, 3}, {3, 4}});            // path
    shapes.push_back({{1, 2}, {1, 3}, {1, 4}});            // claw
  }

  std::vector<TreeSpec> out;
  std::set<std::string> codes;
  for (const auto& shape : shapes) {
    int k = 1;
    for (auto [a, b] : shape) k = std::max({k, a, b});
    std::vector<std::vector<int>> inbrs(k + 1);
    for (auto [a, b] : shape) {
      inbrs[a].push_back(b);
      inbrs[b].push_back(a);
    }
    // degree choice 3 or 4 per interior vertex
    for (int mask = 0; mask < (1 << k); ++mask) {
      std::vector<int> deg(k + 1);
      bool ok = true;
      for (int v = 1; v <= k; ++v) {
        deg[v] = ((mask >> (v - 1)) & 1) ? 4 : 3;
        if (static_cast<int>(inbrs[v].size()) > deg[v]) ok = false;
      }
      if (!ok) continue;
      // neighbor lists: interior neighbors plus anonymous leaves (0)
      std::vector<std::vector<std::vector<int>>> choices(k + 1);
      for (int v = 1; v <= k; ++v) {
        std::vector<int> items = inbrs[v];
        items.resize(deg[v], 0);
        choices[v] = cyclic_arrangements(items);
      }
      std::vector<int> pick(k + 1, 0);
      while (true) {
        TreeSpec spec;
        int next_leaf = k + 1;
        for (int v = 1; v <= k; ++v) {
          std::vector<int> nbrs;
          for (int x : choices[v][pick[v]])
            nbrs.push_back(x == 0 ? next_leaf++ : x);
          spec.rotations.emplace_back(v, std::move(nbrs));
        }
        EmbeddedTree t = EmbeddedTree::load(spec);
        if (codes.insert(t.canonical_code()).second) out.push_back(spec);
        int v = 1;
        while (v <= k && pick[v] + 1 == static_cast<int>(choices[v].size()))
          pick[v++] = 0;
        if (v > k) break;
        ++pick[v];
      }
    }
  }
  return out;
}

TreeSpec corpus_random(int n_interior, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::vector<int>> inbrs(n_interior + 1);
    for (int v = 2; v <= n_interior; ++v) {
      int u = static_cast<int>(rng() % (v - 1)) + 1;
      inbrs[u].push_back(v);
      inbrs[v].push_back(u);
    }
    TreeSpec spec;
    int next_leaf = n_interior + 1;
    for (int v = 1; v <= n_interior; ++v) {
      int idg = static_cast<int>(inbrs[v].size());
      int deg = std::max(3, idg) + static_cast<int>(rng() % 2);
      std::vector<int> nbrs = inbrs[v];
      while (static_cast<int>(nbrs.size()) < deg) nbrs.push_back(next_leaf++);
      std::shuffle(nbrs.begin(), nbrs.end(), rng);
      spec.rotations.emplace_back(v, std::move(nbrs));
    }
    EmbeddedTree t = EmbeddedTree::load(spec);
    Segments segs(t);
    if (segs.count() <= 14) return spec;
  }
  throw TreeError("random tree generation failed to meet the segment cap");
}

std::vector<std::pair<std::string, TreeSpec>> corpus_default(
    std::uint64_t seed) {
  std::vector<std::pair<std::string, TreeSpec>> out;
  auto small = corpus_small(4);
  for (size_t i = 0; i < small.size(); ++i)
    out.emplace_back("small" + std::to_string(i), small[i]);
  for (int n : {5, 5, 6, 6}) {
    out.emplace_back("random" + std::to_string(n) + "_" + std::to_string(seed),
                     corpus_random(n, seed));
    ++seed;
  }
  return out;
}

}  // namespace treelat
