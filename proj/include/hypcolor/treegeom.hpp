#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypcolor/parallel.hpp"

namespace hypcolor {

/// Vertex handle inside a TreeBall.
using VertexId = std::int32_t;

/// A finite piece of the q-regular tree: the radius-R ball around the base
/// vertex x0 plus the spine x0, x1, ..., xK toward a fixed end. The tree is
/// rooted at that end: every vertex except xK has a parent one step closer to
/// the end, and the Busemann level of a vertex is its depth below xK minus K.
///
/// Ids 0 .. ball_size()-1 are exactly the ball vertices in breadth-first
/// order from x0 (x0 has id 0); spine vertices beyond the ball follow.
class TreeBall {
 public:
  int q() const { return q_; }
  int radius() const { return radius_; }
  int spine_length() const { return spineLen_; }

  std::size_t vertex_count() const { return parent_.size(); }
  std::size_t ball_size() const { return ballSize_; }
  bool in_ball(VertexId v) const { return static_cast<std::size_t>(v) < ballSize_; }

  VertexId base() const { return 0; }
  /// Spine vertex x_k, 0 <= k <= K.
  VertexId spine(int k) const { return spine_.at(static_cast<std::size_t>(k)); }

  /// -1 for the topmost spine vertex.
  VertexId parent(VertexId v) const { return parent_[idx(v)]; }
  /// Label 0..q-2 among the siblings under the parent, -1 for the top.
  int child_label(VertexId v) const { return childLabel_[idx(v)]; }
  int level(VertexId v) const { return level_[idx(v)]; }
  /// Distance from x0.
  int depth_from_base(VertexId v) const { return baseDist_[idx(v)]; }

  /// Ancestor `height` steps toward the end, if it exists in this piece.
  std::optional<VertexId> ancestor(VertexId v, int height) const;

  /// Neighbours of a ball vertex that are themselves ball vertices.
  std::span<const VertexId> ball_neighbors(VertexId v) const {
    const auto i = idx(v);
    return {adj_.data() + adjStart_[i], adj_.data() + adjStart_[i + 1]};
  }

  /// Children of any vertex, ordered by label.
  std::span<const VertexId> children(VertexId v) const {
    const auto i = idx(v);
    return {kids_.data() + kidStart_[i], kids_.data() + kidStart_[i + 1]};
  }

  /// Edge list of the ball, zero-based ids, parent-child orientation.
  std::vector<std::pair<VertexId, VertexId>> ball_edges() const;

 private:
  friend TreeBall build_ball(int q, int radius, int spineLen, std::size_t vertexCap);
  static std::size_t idx(VertexId v) { return static_cast<std::size_t>(v); }

  int q_ = 0;
  int radius_ = 0;
  int spineLen_ = 0;
  std::size_t ballSize_ = 0;
  std::vector<VertexId> parent_;
  std::vector<int> childLabel_;
  std::vector<int> level_;
  std::vector<int> baseDist_;
  std::vector<VertexId> spine_;
  std::vector<std::size_t> adjStart_;
  std::vector<VertexId> adj_;
  std::vector<std::size_t> kidStart_;
  std::vector<VertexId> kids_;
};

inline constexpr std::size_t kDefaultVertexCap = 10'000'000;

/// Builds the ball of radius R around x0 in T_q together with the spine to
/// x_K. Requires q >= 3, R >= 1, K >= R + 1. Throws std::invalid_argument on
/// bad parameters and std::length_error when the vertex count would exceed
/// `vertexCap`.
TreeBall build_ball(int q, int radius, int spineLen, std::size_t vertexCap = kDefaultVertexCap);

/// Number of vertices of the radius-R ball in T_q (closed form).
std::size_t ball_vertex_count(int q, int radius);

int busemann_level(const TreeBall& ball, VertexId v);

/// Distance in the tree via the lowest common ancestor in the end-rooted tree.
int tree_distance(const TreeBall& ball, VertexId u, VertexId v);

/// Lowest common ancestor in the end-rooted tree.
VertexId lowest_common_ancestor(const TreeBall& ball, VertexId u, VertexId v);

// ---------------------------------------------------------------------------
// Colorings. Each returns std::nullopt when an ancestor the rule needs lies
// outside the stored spine.

/// Two colors by level parity; proper for every odd forbidden distance.
int color_odd(const TreeBall& ball, VertexId v);

struct EvenColor {
  int branch = 0;   // 0..q-2
  int stratum = 0;  // 0..d
  int index(int q) const { return branch + (q - 1) * stratum; }
};

/// (q-1)(d+1)-coloring for even d: bundles of vertices sharing the ancestor
/// at height (d-2)/2, told apart inside their super bundle (ancestor at
/// height d/2) by the child label of the bundle root; strata repeat mod d+1.
std::optional<EvenColor> color_even(const TreeBall& ball, VertexId v, int d);

struct IntervalColor {
  std::int64_t word = 0;  // base-(q-1) path word, (q-1)^(superHeight - bundleHeight) values
  int stratum = 0;        // 0..floor(cd)
};

/// Heights used by the interval coloring for forbidden set [d, floor(cd)].
struct IntervalColorShape {
  int bundleHeight = 0;  // ceil((d-2)/2)
  int superHeight = 0;   // floor(cd/2 + 1)
  int strataPeriod = 0;  // floor(cd) + 1
  std::int64_t wordsPerStratum = 0;
  std::int64_t paletteBound() const { return wordsPerStratum * strataPeriod; }
};

IntervalColorShape interval_color_shape(int q, int d, double c);

std::optional<IntervalColor> color_interval_tree(const TreeBall& ball, VertexId v, int d, double c);

// ---------------------------------------------------------------------------
// Cliques and spindles.

/// q vertices pairwise at distance d (d even, d >= 2), one per branch at x0.
std::vector<VertexId> clique_q(const TreeBall& ball, int d);

struct Spindle {
  std::vector<VertexId> vertices;  // v0, v1..v_{q-1}, v_q, v'1..v'_{q-1}, v'_q
  std::vector<std::pair<int, int>> pairs;  // indices into `vertices`, all at distance d
};

/// Generalized Moser spindle for even d >= 4. Needs radius >= 3d/2.
Spindle moser_spindle(const TreeBall& ball, int d);

/// q (q-1)^(floor(cd/2) - ceil(d/2)) vertices pairwise at distance in
/// [d, floor(cd)]: one descendant at depth floor(cd/2) below every vertex of
/// the sphere of radius floor(cd/2) - ceil(d/2) + 1 around x0.
std::vector<VertexId> interval_clique_tree(const TreeBall& ball, int d, double c);

/// Brooks bound q (q-1)^(d-1) + 1 for the distance-d graph of T_q.
std::int64_t brooks_bound(int q, int d);

// ---------------------------------------------------------------------------
// Exhaustive verification.

/// Color of a vertex, or std::nullopt when the rule is undefined there.
using TreeColorFn = std::function<std::optional<std::int64_t>(VertexId)>;

struct TreeViolation {
  VertexId u = 0;
  VertexId v = 0;
  int distance = 0;
  std::int64_t color = 0;
};

struct TreeVerifyReport {
  std::size_t verticesChecked = 0;
  std::size_t verticesSkipped = 0;  // color undefined
  std::size_t pairsChecked = 0;
  std::size_t violationCount = 0;
  std::size_t paletteUsed = 0;
  std::vector<TreeViolation> witnesses;  // first few, ordered by (u, v)
  bool ok() const { return violationCount == 0; }
};

/// Scans every pair of ball vertices whose distance lies in `distances` and
/// reports same-colored pairs. The parallel and serial paths give identical
/// reports.
TreeVerifyReport verify_tree_coloring(const TreeBall& ball, const TreeColorFn& color,
                                      std::span<const int> distances,
                                      Exec exec = Exec::Parallel, std::size_t maxWitnesses = 16);

/// Calls `visit(u, v, dist)` for every unordered pair u < v of ball vertices
/// with dist in [minDist, maxDist], walking the tree locally from u.
void for_each_pair_within(const TreeBall& ball, VertexId u, int minDist, int maxDist,
                          const std::function<void(VertexId, int)>& visit);

}  // namespace hypcolor
