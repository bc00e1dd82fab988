#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <doctest.h>

#include "hypcolor/chromasolve.hpp"
#include "hypcolor/treegeom.hpp"
#include "oracles.hpp"

using namespace hypcolor;

namespace {

DistGraph triangle() { return DistGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

DistGraph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int k = 0; k < n; ++k) e.emplace_back(k, (k + 1) % n);
  return DistGraph(n, e);
}

}  // namespace

TEST_SUITE("chromasolve") {

TEST_CASE("graph normalization") {
  const DistGraph g(4, {{1, 0}, {0, 1}, {3, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edges().front() == std::pair{0, 1});
  CHECK(g.adjacent(2, 3));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(0) == 1);
  CHECK_THROWS_AS(DistGraph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(DistGraph(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("tree distance graphs against BFS") {
  const TreeBall b2 = build_ball(3, 2, 3);
  const DistGraph g2 = build_distance_graph(b2, ForbiddenRange::single(2));
  CHECK(g2.edge_count() == oracle::bfs_distance_edge_count(b2, 2, 2));
  for (auto [u, v] : g2.edges()) CHECK(tree_distance(b2, u, v) == 2);

  const TreeBall b8 = build_ball(3, 8, 9);
  const DistGraph g8 = build_distance_graph(b8, ForbiddenRange::single(8));
  CHECK(g8.vertex_count() == 766);
  CHECK(g8.edge_count() == oracle::bfs_distance_edge_count(b8, 8, 8));
  CHECK(build_distance_graph(b8, ForbiddenRange::single(8), Exec::Serial).edges() == g8.edges());

  const TreeBall b5 = build_ball(3, 5, 6);
  const DistGraph win = build_distance_graph(b5, {2, 6});
  std::size_t sum = 0;
  for (int k = 2; k <= 6; ++k) sum += build_distance_graph(b5, ForbiddenRange::single(k)).edge_count();
  CHECK(win.edge_count() == sum);
  CHECK(win.edge_count() == oracle::bfs_distance_edge_count(b5, 2, 6));
}

TEST_CASE("point distance graphs") {
  const HPoint o = HPoint::make(0, 1);
  const std::vector<HPoint> pts{o, point_at_distance(o, 0.3, 1.0), point_at_distance(o, 2.0, 1.0), point_at_distance(o, 1.0, 2.5)};
  const DistGraph g = build_distance_graph(pts, 1.0, 1.0);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(0, 2));
  CHECK_FALSE(g.adjacent(0, 3));
  CHECK(build_distance_graph(pts, 0.5, 3.0).edge_count() >= 3);
}

TEST_CASE("clique examples") {
  CHECK(max_clique(triangle()).size() == 3);
  CHECK(max_clique(build_distance_graph(build_ball(3, 2, 3), ForbiddenRange::single(2))).size() == 3);
  const CliqueResult r4 = max_clique(build_distance_graph(build_ball(4, 2, 3), ForbiddenRange::single(4)));
  CHECK(r4.exact);
  CHECK(r4.size() == 4);
  CHECK(max_clique(DistGraph(0, {})).size() == 0);
}

TEST_CASE("chromatic number examples") {
  for (int r : {2, 3, 4}) {
    const ColoringResult res = chromatic_number(build_distance_graph(build_ball(3, r, r + 1), ForbiddenRange::single(2)));
    REQUIRE(res.exact);
    CHECK(*res.exact == 3);
    CHECK(res.status == SolveStatus::Solved);
  }
  const ColoringResult edge = chromatic_number(DistGraph(2, {{0, 1}}));
  REQUIRE(edge.exact);
  CHECK(*edge.exact == 2);
  CHECK(*chromatic_number(cycle(5)).exact == 3);
  CHECK(*chromatic_number(cycle(6)).exact == 2);
  CHECK(*chromatic_number(DistGraph(3, {})).exact == 1);
}

TEST_CASE("certificates are proper and tight") {
  const DistGraph g = build_distance_graph(build_ball(3, 5, 6), {2, 3});
  const ColoringResult res = chromatic_number(g);
  REQUIRE(res.exact);
  REQUIRE(res.certificate);
  CHECK(is_proper_coloring(g, *res.certificate));
  CHECK(color_count(*res.certificate) == *res.exact);
  CHECK(res.lowerBound == *res.exact);
  CHECK(res.upperBound == *res.exact);
  CHECK(max_clique(g).size() <= *res.exact);
  const auto greedy = dsatur_greedy(g);
  CHECK(is_proper_coloring(g, greedy));
}

TEST_CASE("k-colorability decisions") {
  const KColorResult empty = k_colorable(DistGraph(4, {}), 1);
  CHECK(empty.status == Decision::Sat);
  CHECK(k_colorable(triangle(), 2).status == Decision::Unsat);
  const KColorResult t3 = k_colorable(triangle(), 3);
  REQUIRE(t3.status == Decision::Sat);
  CHECK(is_proper_coloring(triangle(), t3.coloring));
  CHECK(k_colorable(cycle(7), 2).status == Decision::Unsat);
}

TEST_CASE("budgets bound the work") {
  const DistGraph g = build_distance_graph(build_ball(3, 6, 7), ForbiddenRange::single(6));
  const KColorResult k = k_colorable(g, 4, Budget{10});
  CHECK(k.status != Decision::Unsat);
  const ColoringResult res = chromatic_number(g, Budget{10});
  CHECK(res.lowerBound <= res.upperBound);
  if (!res.exact) CHECK(res.status != SolveStatus::Solved);
}

TEST_CASE("brute-force oracle agreement on small tree graphs") {
  const auto graphs = oracle::small_tree_graphs();
  CHECK(graphs.size() > 300);
  int chromBad = 0, cliqueBad = 0;
  for (const auto& g : graphs) {
    REQUIRE(g.vertex_count() <= 12);
    const ColoringResult res = chromatic_number(g);
    REQUIRE(res.exact);
    chromBad += *res.exact != oracle::brute_chromatic(g.vertex_count(), g.edges());
    REQUIRE(res.certificate);
    chromBad += !is_proper_coloring(g, *res.certificate);
    cliqueBad += max_clique(g).size() != oracle::brute_clique(g.vertex_count(), g.edges());
  }
  CHECK(chromBad == 0);
  CHECK(cliqueBad == 0);
}

TEST_CASE("DIMACS export") {
  std::ostringstream out;
  export_dimacs_cnf(triangle(), 3, out);
  std::istringstream in(out.str());
  std::string line;
  std::vector<std::string> clauses;
  std::string header;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      header = line;
      continue;
    }
    clauses.push_back(line);
  }
  CHECK(header == "p cnf 9 21");
  REQUIRE(clauses.size() == 21);
  CHECK(clauses[0] == "1 2 3 0");
  CHECK(clauses[3] == "-1 -2 0");
  // Edge (0, 1), color 0: x_{0,0} = 1 and x_{1,0} = 4.
  CHECK(clauses[12] == "-1 -4 0");
  CHECK(dimacs_clause_count(triangle(), 3) == 21);

  std::ostringstream single;
  export_dimacs_cnf(DistGraph(1, {}), 1, single);
  CHECK(single.str().find("p cnf 1 1\n1 0\n") != std::string::npos);

  CHECK_THROWS_AS(export_dimacs_cnf(triangle(), 3, std::filesystem::path("/nonexistent-dir/x.cnf")), std::runtime_error);
}

TEST_CASE("edge list round trip") {
  std::istringstream in("# comment\nn 5\n0 1\n3 2 # trailing\n\n1 4\n");
  const DistGraph g = read_edge_list(in);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 3);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream back(out.str());
  const DistGraph h = read_edge_list(back);
  CHECK(h.vertex_count() == 5);
  CHECK(h.edges() == g.edges());
  std::istringstream noHeader("0 1\n1 6\n");
  CHECK(read_edge_list(noHeader).vertex_count() == 7);
}

}  // TEST_SUITE
