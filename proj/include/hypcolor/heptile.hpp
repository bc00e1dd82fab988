#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "hypcolor/hypgeom.hpp"
#include "hypcolor/parallel.hpp"

namespace hypcolor {

struct HeptagonGeometry {
  double circumradius = 0.0;
  double inradius = 0.0;
  double halfSide = 0.0;  // half the side length
  double diameter = 0.0;
  double interiorAngle = 0.0;
  int vertexCount = 7;
};

/// Regular heptagon with interior angles 2 pi / 3, the tile of {7,3}.
HeptagonGeometry heptagon_geometry();

/// Vertex k of the base heptagon (centered at i; edge j faces direction 2 pi j / 7).
HPoint base_vertex(int k);
/// Point of edge `edge` of the base heptagon at signed arc length s from its
/// midpoint, s in [-halfSide, halfSide].
HPoint base_edge_point(int edge, double s);

constexpr int kNoTile = -1;

struct Tile {
  Isometry motion;  // carries the base heptagon onto this tile
  HPoint center;
  int dualId = 0;
  int depth = 0;  // dual-graph distance from the base tile
  int colorId = -1;
};

struct TilingPatch {
  std::vector<Tile> tiles;
  /// neighbors[t][j]: tile across edge j of tile t, or kNoTile outside the patch.
  std::vector<std::array<int, 7>> neighbors;
  int depth = 0;

  bool interior(int t) const { return tiles[static_cast<std::size_t>(t)].depth < depth; }
  /// Edge index of t facing u; -1 when u is not a neighbor.
  int edge_towards(int t, int u) const;
};

/// All tiles within dual distance `depth` of the base tile, in breadth-first
/// order. Throws std::invalid_argument unless 0 <= depth <= 5.
TilingPatch generate_patch(int depth);

/// Walk u -> a -> v -> w: any edge out of u, then the edge two steps
/// counter-clockwise from the way back at a, then three steps clockwise from
/// the way back at v. Turning only two steps at v leaves tiles unreached.
struct ColorWalk {
  int u = 0, a = 0, v = 0, w = 0;
};

struct ColoringReport {
  int colored = 0;
  int uncoloredInterior = 0;
  std::vector<ColorWalk> conflicts;  // walks whose endpoints disagree
  bool ok() const { return conflicts.empty() && uncoloredInterior == 0; }
};

/// Seeds the base tile and its neighbors with colors 0..7 and propagates
/// color(w) = color(u) along every walk inside the patch until nothing
/// changes, then re-checks every walk.
ColoringReport color_patch(TilingPatch& patch);

/// Pairs of adjacent tiles sharing a color.
int adjacent_same_color_pairs(const TilingPatch& patch);

/// Distance between the closed tiles a and b: coarse boundary sampling picks
/// candidate edge pairs, each refined by nested golden-section search (the
/// distance is jointly convex along two geodesic segments).
double tile_distance(const TilingPatch& patch, int a, int b);

struct SeparationReport {
  double separation = 0.0;
  int tileA = -1, tileB = -1;
  int dualDistance = 0;  // between the minimizing tiles
  long long pairsExamined = 0;
};

/// Minimum distance between distinct same-colored tiles. Throws
/// std::invalid_argument when the patch has no same-colored pair.
SeparationReport min_same_color_separation(const TilingPatch& patch, Exec exec = Exec::Parallel);

/// `dualId,colorId,centerX,centerY`
void write_tiles_csv(const TilingPatch& patch, std::ostream& out);

}  // namespace hypcolor
