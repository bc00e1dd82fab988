#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypcolor/hypgeom.hpp"
#include "hypcolor/parallel.hpp"
#include "hypcolor/treegeom.hpp"

namespace hypcolor {

/// Simple undirected graph whose edges join points at a forbidden distance.
class DistGraph {
 public:
  DistGraph() = default;
  /// Normalizes every edge to (min, max), sorts and deduplicates. Throws
  /// std::invalid_argument on loops or out-of-range endpoints.
  DistGraph(int vertexCount, std::vector<std::pair<int, int>> edges, std::string provenance = {});

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::string& provenance() const { return provenance_; }

  std::span<const int> neighbors(int v) const {
    const auto i = static_cast<std::size_t>(v);
    return {adj_.data() + start_[i], adj_.data() + start_[i + 1]};
  }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const;

  /// Subgraph induced on `vertices` (relabelled 0..k-1 in the given order).
  DistGraph induced(std::span<const int> vertices) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::size_t> start_{0};
  std::vector<int> adj_;
  std::string provenance_;
};

/// Inclusive integer distance window; d alone is {d, d}.
struct ForbiddenRange {
  int lo = 1;
  int hi = 1;
  static ForbiddenRange single(int d) { return {d, d}; }
  bool contains(int x) const { return lo <= x && x <= hi; }
};

/// Distance graph on the ball vertices of a TreeBall. The parallel path walks
/// the tree locally from each vertex; the serial path compares every pair by
/// lowest common ancestor. Both yield the same sorted edge list.
DistGraph build_distance_graph(const TreeBall& ball, ForbiddenRange forbidden, Exec exec = Exec::Parallel);

/// Distance graph on a point list; an edge joins points whose distance lies
/// in [lo - tol, hi + tol].
DistGraph build_distance_graph(std::span<const HPoint> points, double lo, double hi, double tol = 1e-9);

/// Reads `n` on the first line (optional, "n <count>") followed by `u v`
/// pairs, one per line; '#' starts a comment. Without the header the vertex
/// count is one more than the largest id.
DistGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const DistGraph& g);

/// Work limit counted in search-node expansions.
struct Budget {
  std::uint64_t nodes = 100'000'000;
};

struct CliqueResult {
  std::vector<int> vertices;
  bool exact = false;
  std::uint64_t nodes = 0;
  int size() const { return static_cast<int>(vertices.size()); }
};

/// Maximum clique by branch and bound with a greedy-coloring bound, seeded by
/// a greedy clique. Without enough budget the best clique found is returned
/// with exact = false.
CliqueResult max_clique(const DistGraph& g, Budget budget = {});

enum class Decision { Sat, Unsat, Timeout };
const char* to_string(Decision d);

struct KColorResult {
  Decision status = Decision::Timeout;
  std::vector<int> coloring;  // present when Sat
  std::uint64_t nodes = 0;
};

/// Exact k-colorability by DSATUR backtracking with forward checking. A
/// maximum clique is pre-colored and new colors are opened in order, which
/// removes color-permutation symmetry. Unsat is only reported after an
/// exhaustive search.
KColorResult k_colorable(const DistGraph& g, int k, Budget budget = {});

enum class SolveStatus { Solved, Bounded, Timeout };
const char* to_string(SolveStatus s);

struct ColoringResult {
  int lowerBound = 0;
  int upperBound = 0;
  std::optional<int> exact;
  std::optional<std::vector<int>> certificate;
  SolveStatus status = SolveStatus::Timeout;
  std::uint64_t nodes = 0;
};

/// Clique lower bound, DSATUR greedy upper bound, then a k-colorability
/// decision for each k in between.
ColoringResult chromatic_number(const DistGraph& g, Budget budget = {});

/// Greedy DSATUR coloring (saturation, then degree, then lowest id).
std::vector<int> dsatur_greedy(const DistGraph& g);

bool is_proper_coloring(const DistGraph& g, std::span<const int> coloring);
int color_count(std::span<const int> coloring);

/// DIMACS CNF for k-colorability. Variable x_{v,c} = v*k + c + 1. Clauses, in
/// order: one at-least-one clause per vertex, the pairwise at-most-one clauses
/// per vertex, then one conflict clause per edge and color.
void export_dimacs_cnf(const DistGraph& g, int k, std::ostream& out);
/// Throws std::runtime_error when the destination cannot be written.
void export_dimacs_cnf(const DistGraph& g, int k, const std::filesystem::path& destination);

/// Clause count of the CNF above: n + n k(k-1)/2 + |E| k.
std::uint64_t dimacs_clause_count(const DistGraph& g, int k);

}  // namespace hypcolor
