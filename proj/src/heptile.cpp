#include "hypcolor/heptile.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace hypcolor {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDedupTol = 1e-7;

const HeptagonGeometry& geometry() {
  static const HeptagonGeometry g = heptagon_geometry();
  return g;
}

// Maps the unit semicircle (arc length s from i at (tanh s, 1/cosh s)) onto
// the supporting geodesic of edge j of the base heptagon.
Isometry base_edge_frame(int edge) {
  return Isometry::rotation_about_i(2.0 * kPi * edge / 7.0 - kPi / 2.0) *
         Isometry::scaling(std::exp(geometry().inradius));
}

HPoint on_frame(const Isometry& frame, double s) {
  return apply_isometry(frame, HPoint{std::tanh(s), 1.0 / std::cosh(s)});
}

Isometry power(const Isometry& m, int k) {
  Isometry r;
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

int find_tile(const std::vector<Tile>& tiles, const HPoint& c) {
  for (const auto& t : tiles) {
    if (std::fabs(std::log(t.center.y / c.y)) > 1e-6) continue;
    if (hyp_distance(t.center, c) < kDedupTol) return t.dualId;
  }
  return kNoTile;
}

// Golden-section minimization of a convex function on [a, b].
template <class F>
double golden_min(F f, double a, double b, int iterations) {
  const double inv = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv * (b - a), x2 = a + inv * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iterations; ++i) {
    if (f1 < f2) {
      b = x2, x2 = x1, f2 = f1;
      x1 = b - inv * (b - a), f1 = f(x1);
    } else {
      a = x1, x1 = x2, f1 = f2;
      x2 = a + inv * (b - a), f2 = f(x2);
    }
  }
  return std::min({f1, f2, f(a), f(b)});
}

int dual_distance(const TilingPatch& patch, int from, int to) {
  std::vector<int> dist(patch.tiles.size(), -1);
  std::deque<int> queue{from};
  dist[static_cast<std::size_t>(from)] = 0;
  while (!queue.empty()) {
    const int t = queue.front();
    queue.pop_front();
    if (t == to) return dist[static_cast<std::size_t>(t)];
    for (int n : patch.neighbors[static_cast<std::size_t>(t)]) {
      if (n == kNoTile || dist[static_cast<std::size_t>(n)] >= 0) continue;
      dist[static_cast<std::size_t>(n)] = dist[static_cast<std::size_t>(t)] + 1;
      queue.push_back(n);
    }
  }
  return -1;
}

}  // namespace

HeptagonGeometry heptagon_geometry() {
  HeptagonGeometry g;
  const double a = kPi / 7.0;  // half the central angle of a side
  const double b = kPi / 3.0;  // half the interior angle
  g.circumradius = std::acosh(1.0 / (std::tan(a) * std::tan(b)));
  g.inradius = std::acosh(std::cos(b) / std::sin(a));
  g.halfSide = std::acosh(std::cos(a) / std::sin(b));
  g.interiorAngle = 2.0 * kPi / 3.0;
  const double ch = std::cosh(g.circumradius), sh = std::sinh(g.circumradius);
  for (int k = 1; k <= 3; ++k) {
    g.diameter = std::max(g.diameter, std::acosh(ch * ch - sh * sh * std::cos(2.0 * kPi * k / 7.0)));
  }
  return g;
}

HPoint base_vertex(int k) {
  return point_in_direction(HPoint{0.0, 1.0}, 2.0 * kPi * k / 7.0 + kPi / 7.0, geometry().circumradius);
}

HPoint base_edge_point(int edge, double s) { return on_frame(base_edge_frame(edge), s); }

int TilingPatch::edge_towards(int t, int u) const {
  const auto& nb = neighbors[static_cast<std::size_t>(t)];
  for (int j = 0; j < 7; ++j) {
    if (nb[static_cast<std::size_t>(j)] == u) return j;
  }
  return -1;
}

TilingPatch generate_patch(int depth) {
  if (depth < 0 || depth > 5) throw std::invalid_argument("generate_patch: depth must be in [0, 5]");
  const HPoint i{0.0, 1.0};
  const Isometry turn = Isometry::rotation_about_i(2.0 * kPi / 7.0);
  const Isometry flip = Isometry::rotation_about(point_in_direction(i, 0.0, geometry().inradius), kPi);
  std::array<Isometry, 7> across;  // base heptagon onto its neighbor through edge j
  for (int j = 0; j < 7; ++j) across[static_cast<std::size_t>(j)] = power(turn, j) * flip;

  TilingPatch patch;
  patch.depth = depth;
  patch.tiles.push_back(Tile{Isometry::identity(), i, 0, 0, -1});
  for (std::size_t t = 0; t < patch.tiles.size(); ++t) {
    patch.neighbors.push_back({kNoTile, kNoTile, kNoTile, kNoTile, kNoTile, kNoTile, kNoTile});
    const Tile cur = patch.tiles[t];
    for (int j = 0; j < 7; ++j) {
      const Isometry m = cur.motion * across[static_cast<std::size_t>(j)];
      const HPoint c = apply_isometry(m, i);
      int id = find_tile(patch.tiles, c);
      if (id == kNoTile && cur.depth < depth) {
        id = static_cast<int>(patch.tiles.size());
        patch.tiles.push_back(Tile{m, c, id, cur.depth + 1, -1});
      }
      patch.neighbors[t][static_cast<std::size_t>(j)] = id;
    }
  }
  return patch;
}

ColoringReport color_patch(TilingPatch& patch) {
  auto& tiles = patch.tiles;
  for (auto& t : tiles) t.colorId = -1;
  tiles[0].colorId = 0;
  for (int j = 0; j < 7; ++j) {
    const int n = patch.neighbors[0][static_cast<std::size_t>(j)];
    if (n != kNoTile) tiles[static_cast<std::size_t>(n)].colorId = j + 1;
  }

  auto walk_end = [&](int u, int j) -> ColorWalk {
    ColorWalk wk{u, patch.neighbors[static_cast<std::size_t>(u)][static_cast<std::size_t>(j)], kNoTile, kNoTile};
    if (wk.a == kNoTile) return wk;
    const int back = patch.edge_towards(wk.a, u);
    wk.v = patch.neighbors[static_cast<std::size_t>(wk.a)][static_cast<std::size_t>((back + 2) % 7)];
    if (wk.v == kNoTile) return wk;
    const int back2 = patch.edge_towards(wk.v, wk.a);
    wk.w = patch.neighbors[static_cast<std::size_t>(wk.v)][static_cast<std::size_t>((back2 + 4) % 7)];
    return wk;
  };

  const int n = static_cast<int>(tiles.size());
  for (bool changed = true; changed;) {
    changed = false;
    for (int u = 0; u < n; ++u) {
      for (int j = 0; j < 7; ++j) {
        const ColorWalk wk = walk_end(u, j);
        if (wk.w == kNoTile) continue;
        int& cu = tiles[static_cast<std::size_t>(u)].colorId;
        int& cw = tiles[static_cast<std::size_t>(wk.w)].colorId;
        if (cu >= 0 && cw < 0) {
          cw = cu;
          changed = true;
        } else if (cw >= 0 && cu < 0) {
          cu = cw;
          changed = true;
        }
      }
    }
  }

  ColoringReport rep;
  for (int u = 0; u < n; ++u) {
    if (tiles[static_cast<std::size_t>(u)].colorId >= 0) {
      ++rep.colored;
    } else if (patch.interior(u)) {
      ++rep.uncoloredInterior;
    }
    for (int j = 0; j < 7; ++j) {
      const ColorWalk wk = walk_end(u, j);
      if (wk.w == kNoTile) continue;
      const int cu = tiles[static_cast<std::size_t>(u)].colorId;
      const int cw = tiles[static_cast<std::size_t>(wk.w)].colorId;
      if (cu >= 0 && cw >= 0 && cu != cw) rep.conflicts.push_back(wk);
    }
  }
  return rep;
}

int adjacent_same_color_pairs(const TilingPatch& patch) {
  int count = 0;
  for (std::size_t t = 0; t < patch.tiles.size(); ++t) {
    const int c = patch.tiles[t].colorId;
    if (c < 0) continue;
    for (int u : patch.neighbors[t]) {
      if (u > static_cast<int>(t) && patch.tiles[static_cast<std::size_t>(u)].colorId == c) ++count;
    }
  }
  return count;
}

double tile_distance(const TilingPatch& patch, int a, int b) {
  const double half = geometry().halfSide;
  constexpr int kCoarse = 8;
  std::array<Isometry, 7> fa, fb;
  std::array<std::array<HPoint, kCoarse>, 7> pa, pb;
  for (int e = 0; e < 7; ++e) {
    const auto ue = static_cast<std::size_t>(e);
    fa[ue] = patch.tiles[static_cast<std::size_t>(a)].motion * base_edge_frame(e);
    fb[ue] = patch.tiles[static_cast<std::size_t>(b)].motion * base_edge_frame(e);
    for (int k = 0; k < kCoarse; ++k) {
      const double s = -half + 2.0 * half * k / (kCoarse - 1);
      pa[ue][static_cast<std::size_t>(k)] = on_frame(fa[ue], s);
      pb[ue][static_cast<std::size_t>(k)] = on_frame(fb[ue], s);
    }
  }

  double upper = std::numeric_limits<double>::infinity();
  for (const auto& ea : pa)
    for (const auto& p : ea)
      for (const auto& eb : pb)
        for (const auto& q : eb) upper = std::min(upper, hyp_distance(p, q));

  double best = upper;
  for (std::size_t ea = 0; ea < 7; ++ea) {
    for (std::size_t eb = 0; eb < 7; ++eb) {
      // Every point of an edge lies within half a side of its midpoint.
      const double lower = hyp_distance(on_frame(fa[ea], 0.0), on_frame(fb[eb], 0.0)) - 2.0 * half;
      if (lower > upper) continue;
      const auto inner = [&](double s) {
        const HPoint p = on_frame(fa[ea], s);
        return golden_min([&](double t) { return hyp_distance(p, on_frame(fb[eb], t)); }, -half, half, 60);
      };
      best = std::min(best, golden_min(inner, -half, half, 60));
    }
  }
  return best;
}

SeparationReport min_same_color_separation(const TilingPatch& patch, Exec exec) {
  struct Pair {
    double centerDist;
    int a, b;
  };
  std::vector<Pair> pairs;
  const int n = static_cast<int>(patch.tiles.size());
  for (int a = 0; a < n; ++a) {
    const auto& ta = patch.tiles[static_cast<std::size_t>(a)];
    if (ta.colorId < 0) continue;
    for (int b = a + 1; b < n; ++b) {
      const auto& tb = patch.tiles[static_cast<std::size_t>(b)];
      if (tb.colorId == ta.colorId) pairs.push_back({hyp_distance(ta.center, tb.center), a, b});
    }
  }
  if (pairs.empty()) throw std::invalid_argument("min_same_color_separation: no same-colored pair in patch");
  std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
    if (x.centerDist != y.centerDist) return x.centerDist < y.centerDist;
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });

  // Tiles lie within the circumradius of their centers, so a pair whose
  // centers are further apart than estimate + 2R cannot beat the estimate.
  const double estimate = tile_distance(patch, pairs.front().a, pairs.front().b);
  const double reach = estimate + 2.0 * geometry().circumradius;
  std::size_t count = 0;
  while (count < pairs.size() && pairs[count].centerDist <= reach) ++count;

  std::vector<double> dist(count);
  const auto m = static_cast<std::int64_t>(count);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t k = 0; k < m; ++k) {
      dist[static_cast<std::size_t>(k)] = tile_distance(patch, pairs[static_cast<std::size_t>(k)].a, pairs[static_cast<std::size_t>(k)].b);
    }
  } else {
    for (std::int64_t k = 0; k < m; ++k) {
      dist[static_cast<std::size_t>(k)] = tile_distance(patch, pairs[static_cast<std::size_t>(k)].a, pairs[static_cast<std::size_t>(k)].b);
    }
  }

  SeparationReport rep;
  rep.separation = std::numeric_limits<double>::infinity();
  rep.pairsExamined = static_cast<long long>(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (dist[k] < rep.separation - 1e-12) {
      rep.separation = dist[k];
      rep.tileA = pairs[k].a;
      rep.tileB = pairs[k].b;
    }
  }
  rep.dualDistance = dual_distance(patch, rep.tileA, rep.tileB);
  return rep;
}

void write_tiles_csv(const TilingPatch& patch, std::ostream& out) {
  const auto old = out.precision(12);
  out << "dualId,colorId,centerX,centerY\n";
  for (const auto& t : patch.tiles) out << t.dualId << ',' << t.colorId << ',' << t.center.x << ',' << t.center.y << '\n';
  out.precision(old);
}

}  // namespace hypcolor
