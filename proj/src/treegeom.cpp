#include "hypcolor/treegeom.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace hypcolor {

namespace {

// floor(c d) with a guard against c*d landing a hair below an integer.
int floor_cd(int d, double c) { return static_cast<int>(std::floor(c * d + 1e-9)); }

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::int64_t>::max() / std::max<std::int64_t>(base, 1)) {
      throw std::overflow_error("integer power overflow");
    }
    r *= base;
  }
  return r;
}

}  // namespace

std::size_t ball_vertex_count(int q, int radius) {
  if (q < 3 || radius < 0) throw std::invalid_argument("ball_vertex_count: q >= 3, radius >= 0");
  // 1 + q + q(q-1) + ... + q(q-1)^(R-1)
  std::size_t total = 1;
  std::size_t sphere = static_cast<std::size_t>(q);
  for (int r = 1; r <= radius; ++r) {
    total += sphere;
    if (total > (std::numeric_limits<std::size_t>::max() >> 2)) {
      throw std::length_error("ball_vertex_count: overflow");
    }
    sphere *= static_cast<std::size_t>(q - 1);
  }
  return total;
}

TreeBall build_ball(int q, int radius, int spineLen, std::size_t vertexCap) {
  if (q < 3) throw std::invalid_argument("build_ball: q must be >= 3");
  if (radius < 1) throw std::invalid_argument("build_ball: radius must be >= 1");
  if (spineLen < radius + 1) throw std::invalid_argument("build_ball: spine length must be >= radius + 1");
  const std::size_t ballCount = ball_vertex_count(q, radius);
  const std::size_t total = ballCount + static_cast<std::size_t>(spineLen - radius);
  if (total > vertexCap) {
    throw std::length_error("build_ball: " + std::to_string(total) + " vertices exceed the cap of " +
                            std::to_string(vertexCap));
  }

  TreeBall t;
  t.q_ = q;
  t.radius_ = radius;
  t.spineLen_ = spineLen;
  t.parent_.assign(total, -1);
  t.childLabel_.assign(total, -1);
  t.level_.assign(total, 0);
  t.baseDist_.assign(total, 0);
  t.spine_.assign(static_cast<std::size_t>(spineLen) + 1, -1);

  VertexId next = 0;
  auto make = [&](int level, int dist) {
    const VertexId v = next++;
    t.level_[v] = level;
    t.baseDist_[v] = dist;
    return v;
  };

  // Breadth-first from x0; spineIndex[v] = k when v = x_k, else -1.
  std::vector<int> spineIndex(total, -1);
  const VertexId x0 = make(0, 0);
  spineIndex[x0] = 0;
  t.spine_[0] = x0;
  std::deque<VertexId> queue{x0};
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (t.baseDist_[v] >= radius) continue;
    const int k = spineIndex[v];
    int firstLabel = 0;
    if (k >= 0) {
      // Step toward the end along the spine.
      const VertexId up = make(-(k + 1), t.baseDist_[v] + 1);
      spineIndex[up] = k + 1;
      t.spine_[static_cast<std::size_t>(k + 1)] = up;
      t.parent_[v] = up;
      t.childLabel_[v] = 0;
      queue.push_back(up);
      // x_k for k >= 1 already has x_{k-1} as its label-0 child.
      firstLabel = (k >= 1) ? 1 : 0;
    }
    for (int label = firstLabel; label <= q - 2; ++label) {
      const VertexId c = make(t.level_[v] + 1, t.baseDist_[v] + 1);
      t.parent_[c] = v;
      t.childLabel_[c] = label;
      queue.push_back(c);
    }
  }
  t.ballSize_ = static_cast<std::size_t>(next);
  if (t.ballSize_ != ballCount) throw std::logic_error("build_ball: ball count mismatch");

  // Spine beyond the ball.
  for (int k = radius + 1; k <= spineLen; ++k) {
    const VertexId below = t.spine_[static_cast<std::size_t>(k - 1)];
    const VertexId up = make(-k, k);
    t.spine_[static_cast<std::size_t>(k)] = up;
    t.parent_[below] = up;
    t.childLabel_[below] = 0;
  }

  // Children, ordered by label.
  std::vector<std::vector<VertexId>> kids(total);
  for (std::size_t v = 0; v < total; ++v) {
    if (t.parent_[v] >= 0) kids[static_cast<std::size_t>(t.parent_[v])].push_back(static_cast<VertexId>(v));
  }
  t.kidStart_.assign(total + 1, 0);
  for (std::size_t v = 0; v < total; ++v) {
    std::sort(kids[v].begin(), kids[v].end(),
              [&](VertexId a, VertexId b) { return t.childLabel_[a] < t.childLabel_[b]; });
    t.kidStart_[v + 1] = t.kidStart_[v] + kids[v].size();
    t.kids_.insert(t.kids_.end(), kids[v].begin(), kids[v].end());
  }

  // Ball adjacency restricted to ball vertices.
  t.adjStart_.assign(t.ballSize_ + 1, 0);
  for (std::size_t v = 0; v < t.ballSize_; ++v) {
    const VertexId p = t.parent_[v];
    if (p >= 0 && t.in_ball(p)) t.adj_.push_back(p);
    for (VertexId c : kids[v]) {
      if (t.in_ball(c)) t.adj_.push_back(c);
    }
    t.adjStart_[v + 1] = t.adj_.size();
  }
  return t;
}

std::optional<VertexId> TreeBall::ancestor(VertexId v, int height) const {
  for (int h = 0; h < height; ++h) {
    v = parent_[idx(v)];
    if (v < 0) return std::nullopt;
  }
  return v;
}

std::vector<std::pair<VertexId, VertexId>> TreeBall::ball_edges() const {
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(ballSize_ > 0 ? ballSize_ - 1 : 0);
  for (std::size_t v = 0; v < ballSize_; ++v) {
    const VertexId p = parent_[v];
    if (p >= 0 && in_ball(p)) edges.emplace_back(p, static_cast<VertexId>(v));
  }
  return edges;
}

int busemann_level(const TreeBall& ball, VertexId v) { return ball.level(v); }

VertexId lowest_common_ancestor(const TreeBall& ball, VertexId u, VertexId v) {
  int lu = ball.level(u);
  int lv = ball.level(v);
  while (lu > lv) {
    u = ball.parent(u);
    --lu;
  }
  while (lv > lu) {
    v = ball.parent(v);
    --lv;
  }
  while (u != v) {
    u = ball.parent(u);
    v = ball.parent(v);
  }
  return u;
}

int tree_distance(const TreeBall& ball, VertexId u, VertexId v) {
  const VertexId a = lowest_common_ancestor(ball, u, v);
  return (ball.level(u) - ball.level(a)) + (ball.level(v) - ball.level(a));
}

int color_odd(const TreeBall& ball, VertexId v) {
  const int l = ball.level(v) % 2;
  return l < 0 ? l + 2 : l;
}

std::optional<EvenColor> color_even(const TreeBall& ball, VertexId v, int d) {
  if (d < 2 || d % 2 != 0) throw std::invalid_argument("color_even: d must be even and >= 2");
  const auto root = ball.ancestor(v, (d - 2) / 2);
  if (!root || ball.parent(*root) < 0) return std::nullopt;
  const int period = d + 1;
  int s = ball.level(v) % period;
  if (s < 0) s += period;
  return EvenColor{ball.child_label(*root), s};
}

IntervalColorShape interval_color_shape(int q, int d, double c) {
  if (d < 2) throw std::invalid_argument("interval coloring: d must be >= 2");
  if (!(c > 1.0)) throw std::invalid_argument("interval coloring: c must be > 1");
  IntervalColorShape s;
  const int top = floor_cd(d, c);
  s.bundleHeight = (d - 1) / 2;  // ceil((d-2)/2)
  s.superHeight = top / 2 + 1;   // floor(cd/2 + 1) = floor(floor(cd)/2) + 1
  s.strataPeriod = top + 1;
  s.wordsPerStratum = ipow(q - 1, s.superHeight - s.bundleHeight);
  return s;
}

std::optional<IntervalColor> color_interval_tree(const TreeBall& ball, VertexId v, int d, double c) {
  const IntervalColorShape s = interval_color_shape(ball.q(), d, c);
  if (!ball.ancestor(v, s.superHeight)) return std::nullopt;
  // Labels of the ancestors at heights superHeight-1 down to bundleHeight.
  std::int64_t word = 0;
  std::int64_t place = 1;
  VertexId a = *ball.ancestor(v, s.bundleHeight);
  for (int h = s.bundleHeight; h < s.superHeight; ++h) {
    word += place * ball.child_label(a);
    place *= ball.q() - 1;
    a = ball.parent(a);
  }
  int st = ball.level(v) % s.strataPeriod;
  if (st < 0) st += s.strataPeriod;
  return IntervalColor{word, st};
}

std::vector<VertexId> clique_q(const TreeBall& ball, int d) {
  if (d < 2 || d % 2 != 0) throw std::invalid_argument("clique_q: d must be even and >= 2");
  const int half = d / 2;
  if (ball.radius() < half) throw std::invalid_argument("clique_q: ball radius below d/2");
  std::vector<VertexId> out;
  // Toward the end along the spine.
  out.push_back(ball.spine(half));
  // Down each child branch of x0, then along label-0 children.
  for (VertexId c : ball.children(ball.base())) {
    VertexId v = c;
    for (int s = 1; s < half; ++s) v = ball.children(v).front();
    out.push_back(v);
  }
  return out;
}

namespace {

// Descend `steps` times along label-0 children.
VertexId descend(const TreeBall& ball, VertexId v, int steps) {
  for (int s = 0; s < steps; ++s) {
    const auto kids = ball.children(v);
    if (kids.empty()) throw std::invalid_argument("descend: ran off the ball");
    v = kids.front();
  }
  return v;
}

}  // namespace

Spindle moser_spindle(const TreeBall& ball, int d) {
  if (d < 4 || d % 2 != 0) throw std::invalid_argument("moser_spindle: d must be even and >= 4");
  if (2 * ball.radius() < 3 * d) throw std::invalid_argument("moser_spindle: ball radius below 3d/2");
  const int q = ball.q();
  const int half = d / 2;
  const int s1 = half / 2;
  const int s2 = half - s1;

  // One half of the spindle: a center at distance d/2 from v0 below child
  // `branch` of v0, the q-1 far vertices around it, and the apex that shares
  // the first `share` steps back toward v0.
  const VertexId v0 = ball.base();
  auto half_spindle = [&](int branch, int share, std::vector<VertexId>& fam) {
    const VertexId first = ball.children(v0)[static_cast<std::size_t>(branch)];
    const VertexId center = descend(ball, first, half - 1);
    for (VertexId c : ball.children(center)) fam.push_back(descend(ball, c, half - 1));
    // p sits `share` steps above the center on the path back to v0; the apex
    // leaves p through its label-1 child (the path uses label 0 below p).
    const VertexId p = *ball.ancestor(center, share);
    const auto kids = ball.children(p);
    VertexId off = -1;
    const VertexId onPath = *ball.ancestor(center, share - 1);
    for (VertexId k : kids) {
      if (k != onPath) {
        off = k;
        break;
      }
    }
    if (off < 0) throw std::logic_error("moser_spindle: no free branch");
    fam.push_back(descend(ball, off, half - share - 1));
  };

  std::vector<VertexId> famA;
  std::vector<VertexId> famB;
  half_spindle(0, s1, famA);
  half_spindle(1, s2, famB);

  Spindle sp;
  sp.vertices.push_back(v0);
  sp.vertices.insert(sp.vertices.end(), famA.begin(), famA.end());
  sp.vertices.insert(sp.vertices.end(), famB.begin(), famB.end());
  // Index layout: 0 = v0, 1..q-1 = v_i, q = v_q, q+1..2q-1 = v'_i, 2q = v'_q.
  const int apexA = q;
  const int apexB = 2 * q;
  for (int base : {1, q + 1}) {
    const int apex = (base == 1) ? apexA : apexB;
    for (int i = 0; i < q - 1; ++i) {
      sp.pairs.emplace_back(0, base + i);
      sp.pairs.emplace_back(base + i, apex);
      for (int j = i + 1; j < q - 1; ++j) sp.pairs.emplace_back(base + i, base + j);
    }
  }
  sp.pairs.emplace_back(apexA, apexB);

  for (auto [i, j] : sp.pairs) {
    if (tree_distance(ball, sp.vertices[static_cast<std::size_t>(i)], sp.vertices[static_cast<std::size_t>(j)]) != d) {
      throw std::logic_error("moser_spindle: construction produced a pair off distance d");
    }
  }
  return sp;
}

std::vector<VertexId> interval_clique_tree(const TreeBall& ball, int d, double c) {
  if (d < 1) throw std::invalid_argument("interval_clique_tree: d must be >= 1");
  if (!(c > 1.0)) throw std::invalid_argument("interval_clique_tree: c must be > 1");
  const int top = floor_cd(d, c);
  const int outer = top / 2;           // floor(cd/2)
  const int inner = outer - (d + 1) / 2 + 1;  // sphere radius of the seeds
  if (inner < 1) throw std::invalid_argument("interval_clique_tree: c d too small for d");
  if (ball.radius() < outer) throw std::invalid_argument("interval_clique_tree: ball radius below floor(cd/2)");

  std::vector<VertexId> out;
  for (std::size_t v = 0; v < ball.ball_size(); ++v) {
    const auto vid = static_cast<VertexId>(v);
    if (ball.depth_from_base(vid) != inner) continue;
    VertexId w = vid;
    while (ball.depth_from_base(w) < outer) {
      VertexId next = -1;
      for (VertexId nb : ball.ball_neighbors(w)) {
        if (ball.depth_from_base(nb) == ball.depth_from_base(w) + 1) {
          next = nb;
          break;
        }
      }
      if (next < 0) throw std::logic_error("interval_clique_tree: no outward neighbor");
      w = next;
    }
    out.push_back(w);
  }
  return out;
}

std::int64_t brooks_bound(int q, int d) {
  if (q < 3 || d < 1) throw std::invalid_argument("brooks_bound: q >= 3, d >= 1");
  return q * ipow(q - 1, d - 1) + 1;
}

void for_each_pair_within(const TreeBall& ball, VertexId u, int minDist, int maxDist,
                          const std::function<void(VertexId, int)>& visit) {
  struct Frame {
    VertexId v;
    VertexId from;
    int dist;
  };
  std::vector<Frame> stack{{u, -1, 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.dist >= minDist && f.v > u) visit(f.v, f.dist);
    if (f.dist == maxDist) continue;
    for (VertexId nb : ball.ball_neighbors(f.v)) {
      if (nb != f.from) stack.push_back({nb, f.v, f.dist + 1});
    }
  }
}

TreeVerifyReport verify_tree_coloring(const TreeBall& ball, const TreeColorFn& color,
                                      std::span<const int> distances, Exec exec,
                                      std::size_t maxWitnesses) {
  TreeVerifyReport rep;
  if (distances.empty()) return rep;
  const int minD = *std::min_element(distances.begin(), distances.end());
  const int maxD = *std::max_element(distances.begin(), distances.end());
  if (minD < 1) throw std::invalid_argument("verify_tree_coloring: distances must be positive");
  std::vector<char> forbidden(static_cast<std::size_t>(maxD) + 1, 0);
  for (int dd : distances) forbidden[static_cast<std::size_t>(dd)] = 1;

  const auto n = static_cast<std::int64_t>(ball.ball_size());
  std::vector<std::optional<std::int64_t>> colors(static_cast<std::size_t>(n));
  for (std::int64_t v = 0; v < n; ++v) colors[static_cast<std::size_t>(v)] = color(static_cast<VertexId>(v));

  std::vector<std::int64_t> palette;
  for (const auto& c : colors) {
    if (c) {
      ++rep.verticesChecked;
      palette.push_back(*c);
    } else {
      ++rep.verticesSkipped;
    }
  }
  std::sort(palette.begin(), palette.end());
  rep.paletteUsed = static_cast<std::size_t>(std::unique(palette.begin(), palette.end()) - palette.begin());

  // Per-source results so both paths aggregate in the same order.
  std::vector<std::size_t> pairCount(static_cast<std::size_t>(n), 0);
  std::vector<std::size_t> badCount(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<TreeViolation>> found(static_cast<std::size_t>(n));

  auto scan = [&](std::int64_t ui) {
    const auto u = static_cast<VertexId>(ui);
    const auto cu = colors[static_cast<std::size_t>(ui)];
    if (!cu) return;
    auto& bad = found[static_cast<std::size_t>(ui)];
    for_each_pair_within(ball, u, minD, maxD, [&](VertexId v, int dist) {
      if (!forbidden[static_cast<std::size_t>(dist)]) return;
      const auto cv = colors[static_cast<std::size_t>(v)];
      if (!cv) return;
      ++pairCount[static_cast<std::size_t>(ui)];
      if (*cv == *cu) {
        ++badCount[static_cast<std::size_t>(ui)];
        if (bad.size() < maxWitnesses) bad.push_back({u, v, dist, *cu});
      }
    });
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t u = 0; u < n; ++u) scan(u);
  } else {
    for (std::int64_t u = 0; u < n; ++u) scan(u);
  }

  for (std::int64_t u = 0; u < n; ++u) {
    const auto i = static_cast<std::size_t>(u);
    rep.pairsChecked += pairCount[i];
    rep.violationCount += badCount[i];
    for (const auto& w : found[i]) {
      if (rep.witnesses.size() >= maxWitnesses) break;
      rep.witnesses.push_back(w);
    }
  }
  std::sort(rep.witnesses.begin(), rep.witnesses.end(),
            [](const TreeViolation& a, const TreeViolation& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  return rep;
}

}  // namespace hypcolor
