// Serial reference vs OpenMP kernel timings. Each row also checks that both
// paths agree; a mismatch makes the run exit nonzero.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <vector>

#include "hypcolor/bounds.hpp"
#include "hypcolor/checkerboard.hpp"
#include "hypcolor/chromasolve.hpp"
#include "hypcolor/heptile.hpp"
#include "hypcolor/parallel.hpp"
#include "hypcolor/treegeom.hpp"

using namespace hypcolor;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool row(const char* name, const std::function<long long(Exec)>& kernel) {
  long long serialOut = 0, parallelOut = 0;
  const double ts = seconds([&] { serialOut = kernel(Exec::Serial); });
  const double tp = seconds([&] { parallelOut = kernel(Exec::Parallel); });
  const bool same = serialOut == parallelOut;
  std::printf("%-22s serial %8.3f s  parallel %8.3f s  speedup %5.2fx  %s\n", name, ts, tp, ts / tp,
              same ? "match" : "MISMATCH");
  return same;
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  std::printf("workers %d%s\n", max_workers(), quick ? " (quick)" : "");
  bool ok = true;

  const BoundResult br = optimize_checkerboard(1.0);
  const Scheme scheme = scheme_from(*br.params, 1.0);
  SamplingOptions opt;
  opt.samples = quick ? 100'000 : 4'000'000;
  opt.seed = 11;
  ok &= row("checker sampling", [&](Exec e) {
    const auto r = verify_by_sampling(scheme, opt, e);
    return static_cast<long long>(r.violationCount * 1'000'003 + r.screenedCount);
  });

  const TreeBall ball = build_ball(3, quick ? 8 : 11, quick ? 9 : 12);
  const int d = 4;
  const std::vector<int> ds{3, 4, 5, 6, 7, 8};
  const TreeColorFn fn = [&](VertexId v) -> std::optional<std::int64_t> { return color_odd(ball, v) + ball.level(v) % 5; };
  ok &= row("tree verify", [&](Exec e) {
    const auto r = verify_tree_coloring(ball, fn, ds, e);
    return static_cast<long long>(r.pairsChecked * 7 + r.violationCount);
  });

  // The serial reference here is an all-pairs scan, not the local tree walk,
  // so this ratio measures the algorithm as well as the threads.
  ok &= row("tree distance graph*", [&](Exec e) {
    return static_cast<long long>(build_distance_graph(ball, {d, d + 2}, e).edge_count());
  });

  TilingPatch patch = generate_patch(quick ? 3 : 4);
  color_patch(patch);
  ok &= row("heptagon separation", [&](Exec e) {
    const auto r = min_same_color_separation(patch, e);
    return static_cast<long long>(r.separation * 1e12) ^ r.pairsExamined;
  });

  std::printf("* serial reference is all-pairs; parallel kernel walks the tree locally\n");
  return ok ? 0 : 1;
}
