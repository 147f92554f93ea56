#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treelat/tree.hpp"

namespace treelat {

using SegId = int;
// Bitset over segment ids. Desk-scale trees stay well under 64 segments.
using SegSet = std::uint64_t;

inline bool seg_in(SegSet x, SegId s) { return (x >> s) & 1u; }
inline SegSet seg_bit(SegId s) { return SegSet{1} << s; }

// Thrown by the enumerative constructions when a tree exceeds the scale the
// library is built for (exhaustive enumeration over segment subsets).
struct DeskScaleError : TreeError {
  using TreeError::TreeError;
};

// Acyclic path between interior vertices whose consecutive edges share a
// face. Stored with the smaller endpoint label first.
struct Segment {
  std::vector<VertexId> path;
  VertexId from() const { return path.front(); }
  VertexId to() const { return path.back(); }
  int edge_len() const { return static_cast<int>(path.size()) - 1; }
};

enum class Color { red, green };

struct ColoredSegment {
  SegId seg = -1;
  Color color = Color::red;
  bool operator==(const ColoredSegment&) const = default;
  bool operator<(const ColoredSegment& o) const {
    return seg != o.seg ? seg < o.seg : color < o.color;
  }
};

// Segment table for one tree: enumeration, composition, turns, the C_s/K_s
// subsegment sets, closure / biclosedness, and crossing of colored segments.
class Segments {
 public:
  explicit Segments(const EmbeddedTree& t);

  const EmbeddedTree& tree() const { return *t_; }
  int count() const { return static_cast<int>(segs_.size()); }
  SegSet all() const {
    return count() == 64 ? ~SegSet{0} : (SegSet{1} << count()) - 1;
  }
  const Segment& seg(SegId s) const { return segs_[s]; }
  // -1 when the pair does not span a segment.
  SegId id_by_endpoints(VertexId u, VertexId v) const;
  SegId id_of_path(const std::vector<VertexId>& path) const;

  // Turn of the canonically oriented segment at interior position i
  // (0 < i < edge_len).
  Turn turn_at(SegId s, int i) const { return turns_[s][i - 1]; }

  // s1 o s2 when they share exactly one endpoint, are otherwise disjoint and
  // the concatenation is again a segment; nullopt otherwise.
  std::optional<SegId> compose(SegId s1, SegId s2) const {
    int r = compose_[s1 * count() + s2];
    return r < 0 ? std::nullopt : std::optional<SegId>(r);
  }

  SegSet cs(SegId s) const { return cs_[s]; }
  SegSet ks(SegId s) const { return ks_[s]; }

  SegSet closure(SegSet x) const;
  bool is_closed(SegSet x) const;
  bool is_biclosed(SegSet x) const;

  // Endpoint corners of a colored segment (flag rule: green takes the face
  // left of the edge leaving the endpoint, red the face right of it).
  std::pair<Corner, Corner> endpoints(const ColoredSegment& c) const;

  // Crossing of colored segments per the admissible-curve case analysis.
  // Curves sharing an endpoint corner always cross.
  bool colored_cross(const ColoredSegment& a, const ColoredSegment& b) const;

  // Common subpath of two segments (empty when disjoint), oriented along a.
  std::vector<VertexId> common_path(SegId a, SegId b) const;

  std::string seg_name(SegId s) const;  // "u-v" by labels

 private:
  const EmbeddedTree* t_;
  std::vector<Segment> segs_;
  std::vector<std::vector<Turn>> turns_;
  std::vector<int> compose_;
  std::vector<SegSet> cs_, ks_;
  struct Triple {
    SegId a, b, c;  // a o b = c
  };
  std::vector<Triple> triples_;
};

}  // namespace treelat
