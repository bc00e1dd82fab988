#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

namespace hypcolor {

/// Finite patch of H_n: unit equilateral triangles, n around every vertex,
/// grown ring by ring from a base vertex. Vertices at ring < depth are
/// complete (n triangles); ring `depth` is the boundary.
struct FlatComplex {
  int n = 0;
  int depth = 0;
  std::vector<int> ring;                  // combinatorial distance from vertex 0
  std::vector<std::array<int, 3>> triangles;  // counter-clockwise
  /// Neighbors in counter-clockwise order. Cyclic of length n for complete
  /// vertices; for boundary vertices the open fan, first to last.
  std::vector<std::vector<int>> rotation;

  std::size_t vertex_count() const { return ring.size(); }
  bool complete(int v) const { return ring[static_cast<std::size_t>(v)] < depth; }
  /// Position of neighbor u in rotation[v], or -1.
  int position(int v, int u) const;
  /// Vertex count on each ring.
  std::vector<std::size_t> ring_sizes() const;
};

/// Throws std::invalid_argument unless n >= 6 and 0 <= depth <= 6, and
/// std::length_error when the patch would exceed `vertexCap` vertices.
FlatComplex build_flat_patch(int n, int depth, std::size_t vertexCap = 5'000'000);

/// Ring sizes of H_n: a_0 = 1, a_1 = n, a_2 = n(n-4) and
/// a_{k+1} = (n-4) a_k - a_{k-1} from k = 2 on, independent of any construction.
std::vector<std::size_t> flat_ring_sizes(int n, int depth);

/// Ball of radius `depth` in T_q mapped into H_n. Tree vertices are numbered
/// breadth-first from the root (id 0); tree vertex t sits on complex vertex
/// image[t]. The edge to the parent of t is the complex edge
/// (image[parent[t]], image[t]).
struct EmbeddingMap {
  int q = 0;
  int n = 0;
  int depth = 0;
  FlatComplex complex;
  std::vector<int> parent;  // -1 at the root
  std::vector<int> treeDepth;
  std::vector<int> image;
};

/// Breadth-first embedding: at the root the q edges sit at rotation
/// positions s j, at every other vertex the q-1 child edges sit at
/// b + s j (j = 1..q-1) where b is the position of the edge back to the
/// parent and s = floor(n / q). Throws std::invalid_argument when q < 2 or
/// q > floor(n / 3).
EmbeddingMap embed_tree(int q, int n, int depth);

struct CertificateResult {
  bool ok = false;
  int witness = -1;    // tree vertex whose image violates the angle condition
  int minGap = 0;      // fewest non-image edges between consecutive image edges
  bool injective = false;
};

/// At every image vertex of an interior tree vertex, consecutive image edges
/// in the cyclic order must have at least two non-image edges between them
/// (combinatorial angle >= pi). Also checks that every tree edge is a complex
/// edge and that the vertex map is injective.
CertificateResult check_angle_certificate(const EmbeddingMap& map);

/// `treeVertex,complexVertex` rows.
void write_embedding(const EmbeddingMap& map, std::ostream& out);

}  // namespace hypcolor
