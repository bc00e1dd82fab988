// hypcolor: command-line front end for the bounds, samplers, tree colorings,
// heptagon patches and exact coloring search.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "hypcolor/bounds.hpp"
#include "hypcolor/checkerboard.hpp"
#include "hypcolor/chromasolve.hpp"
#include "hypcolor/flatmodel.hpp"
#include "hypcolor/heptile.hpp"
#include "hypcolor/parallel.hpp"
#include "hypcolor/report_json.hpp"
#include "hypcolor/treegeom.hpp"

namespace fs = std::filesystem;
using namespace hypcolor;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3 };

constexpr const char* kOutDirEnv = "HYPCOLOR_OUT_DIR";

struct Output {
  std::string path;
  bool csv = false;

  fs::path resolve(const std::string& p) const {
    fs::path out(p);
    const char* dir = std::getenv(kOutDirEnv);
    if (out.is_relative() && dir && *dir) out = fs::path(dir) / out;
    return out;
  }

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    const fs::path dest = resolve(path);
    if (dest.has_parent_path()) fs::create_directories(dest.parent_path());
    std::ofstream f(dest);
    if (!f) throw std::runtime_error("cannot write " + dest.string());
    f << text;
  }

  void json(const Json& j) const { write(j.dump(2) + "\n"); }
};

struct TreeArgs {
  int q = 3;
  int d = 2;
  std::optional<double> c;
  int radius = 4;
  std::string mode = "verify";
  int k = 0;
  std::uint64_t budget = 100'000'000;
};

TreeBall tree_ball(const TreeArgs& a) {
  const int reach = a.c ? static_cast<int>(std::floor(*a.c * a.d + 1e-9)) : a.d;
  return build_ball(a.q, a.radius, a.radius + reach + 2);
}

ForbiddenRange forbidden(const TreeArgs& a) {
  if (!a.c) return ForbiddenRange::single(a.d);
  return {a.d, static_cast<int>(std::floor(*a.c * a.d + 1e-9))};
}

TreeColorFn tree_coloring(const TreeBall& ball, const TreeArgs& a) {
  if (a.c) {
    const auto shape = interval_color_shape(a.q, a.d, *a.c);
    const double c = *a.c;
    return [&ball, shape, c, d = a.d](VertexId v) -> std::optional<std::int64_t> {
      const auto col = color_interval_tree(ball, v, d, c);
      if (!col) return std::nullopt;
      return col->word + shape.wordsPerStratum * col->stratum;
    };
  }
  if (a.d % 2 == 1) return [&ball](VertexId v) -> std::optional<std::int64_t> { return color_odd(ball, v); };
  return [&ball, q = a.q, d = a.d](VertexId v) -> std::optional<std::int64_t> {
    const auto col = color_even(ball, v, d);
    if (!col) return std::nullopt;
    return col->index(q);
  };
}

bool pairwise_tree(const TreeBall& ball, const std::vector<VertexId>& vs, ForbiddenRange r) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!r.contains(tree_distance(ball, vs[i], vs[j]))) return false;
  return true;
}

int run_tree(const TreeArgs& a, const Output& out) {
  const TreeBall ball = tree_ball(a);
  const ForbiddenRange range = forbidden(a);
  Json j{{"q", a.q}, {"d", a.d}, {"radius", a.radius}, {"mode", a.mode}, {"ballSize", ball.ball_size()}};
  if (a.c) j["c"] = sig12(*a.c);
  j["forbidden"] = {range.lo, range.hi};

  if (a.mode == "color" || a.mode == "verify") {
    const TreeColorFn color = tree_coloring(ball, a);
    if (a.mode == "color" && out.csv) {
      std::ostringstream s;
      s << "vertexId,level,colorIndex\n";
      for (VertexId v = 0; v < static_cast<VertexId>(ball.ball_size()); ++v) {
        const auto c = color(v);
        s << v << ',' << ball.level(v) << ',' << (c ? std::to_string(*c) : std::string("")) << '\n';
      }
      out.write(s.str());
      return kOk;
    }
    std::vector<int> distances;
    for (int x = range.lo; x <= range.hi; ++x) distances.push_back(x);
    const TreeVerifyReport rep = verify_tree_coloring(ball, color, distances);
    j["verify"] = to_json(rep);
    if (a.c) j["paletteBound"] = interval_color_shape(a.q, a.d, *a.c).paletteBound();
    else j["paletteBound"] = a.d % 2 == 1 ? 2 : (a.q - 1) * (a.d + 1);
    out.json(j);
    return rep.ok() ? kOk : kFailed;
  }

  if (a.mode == "clique") {
    std::vector<VertexId> construction;
    if (a.c) construction = interval_clique_tree(ball, a.d, *a.c);
    else if (a.d % 2 == 0) construction = clique_q(ball, a.d);
    const DistGraph g = build_distance_graph(ball, range);
    const CliqueResult mc = max_clique(g, Budget{a.budget});
    const bool ok = pairwise_tree(ball, construction, range);
    if (out.csv) {
      std::ostringstream s;
      s << "vertexId\n";
      for (auto v : construction) s << v << '\n';
      out.write(s.str());
    } else {
      j["construction"] = {{"size", construction.size()}, {"pairwiseOk", ok}, {"vertices", construction}};
      j["maxClique"] = to_json(mc);
      out.json(j);
    }
    if (!ok) return kFailed;
    return mc.exact ? kOk : kBudget;
  }

  if (a.mode == "spindle") {
    const Spindle sp = moser_spindle(ball, a.d);
    const DistGraph g(static_cast<int>(sp.vertices.size()), sp.pairs, "spindle");
    const ColoringResult cr = chromatic_number(g, Budget{a.budget});
    j["spindle"] = {{"vertices", sp.vertices}, {"pairs", sp.pairs.size()}};
    j["chromatic"] = to_json(cr);
    out.json(j);
    return cr.exact ? kOk : kBudget;
  }

  if (a.mode == "chroma") {
    const DistGraph g = build_distance_graph(ball, range);
    j["edges"] = g.edge_count();
    if (a.k > 0) {
      const KColorResult kr = k_colorable(g, a.k, Budget{a.budget});
      j["k"] = a.k;
      j["decision"] = to_json(kr);
      out.json(j);
      return kr.status == Decision::Timeout ? kBudget : kOk;
    }
    const ColoringResult cr = chromatic_number(g, Budget{a.budget});
    j["chromatic"] = to_json(cr);
    out.json(j);
    return cr.exact ? kOk : kBudget;
  }

  if (a.mode == "export-cnf") {
    if (a.k < 1) throw std::invalid_argument("export-cnf needs --k >= 1");
    const DistGraph g = build_distance_graph(ball, range);
    std::string name = "tree_q" + std::to_string(a.q) + "_d" + std::to_string(a.d) + "_r" + std::to_string(a.radius) +
                       "_k" + std::to_string(a.k) + ".cnf";
    const fs::path dest = out.resolve(out.path.empty() ? name : out.path);
    if (dest.has_parent_path()) fs::create_directories(dest.parent_path());
    export_dimacs_cnf(g, a.k, dest);
    j["file"] = dest.string();
    j["variables"] = static_cast<std::uint64_t>(g.vertex_count()) * static_cast<std::uint64_t>(a.k);
    j["clauses"] = dimacs_clause_count(g, a.k);
    std::cout << j.dump(2) << "\n";
    return kOk;
  }

  throw std::invalid_argument("unknown tree mode " + a.mode);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colorings of the hyperbolic plane and of regular trees at forbidden distances"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  int jobs = 0;
  app.add_option("--out", out.path, "Write the payload here (relative paths go under $HYPCOLOR_OUT_DIR)");
  app.add_flag("--csv", out.csv, "Tabular payload instead of JSON where available");
  app.add_option("--jobs", jobs, "Worker threads (0: runtime default)")->check(CLI::NonNegativeNumber);

  double d = 1.0;
  std::optional<double> c;

  auto* bound = app.add_subcommand("hyp-bound", "Upper bounds for the hyperbolic plane");
  bound->add_option("--d", d, "Forbidden distance")->required()->check(CLI::PositiveNumber);
  bound->add_option("--c", c, "Interval ratio: forbid [d, c d]");

  std::uint64_t samples = 1'000'000, seed = 1;
  std::string schemeKind = "optimized";
  bool broken = false;
  std::string colorMap;
  auto* verify = app.add_subcommand("hyp-verify", "Sample point pairs at forbidden distances against a checkerboard scheme");
  verify->add_option("--d", d, "Forbidden distance")->required()->check(CLI::PositiveNumber);
  verify->add_option("--c", c, "Interval ratio: forbid [d, c d]");
  verify->add_option("--samples", samples, "Number of sampled pairs");
  verify->add_option("--seed", seed, "Sampler seed");
  verify->add_option("--scheme", schemeKind, "optimized, k3 or k4 (single distance)")
      ->check(CLI::IsMember({"optimized", "k3", "k4"}));
  verify->add_flag("--break-vertical", broken, "Decrement the vertical period (the sampler must then find violations)");
  verify->add_option("--color-map", colorMap, "Also write the color map CSV here");

  TreeArgs ta;
  auto* tree = app.add_subcommand("tree", "Distance colorings of regular trees");
  tree->add_option("--q", ta.q, "Degree")->check(CLI::Range(3, 64));
  tree->add_option("--d", ta.d, "Forbidden distance")->required()->check(CLI::Range(1, 64));
  tree->add_option("--c", ta.c, "Interval ratio: forbid [d, floor(c d)]");
  tree->add_option("--radius", ta.radius, "Ball radius")->check(CLI::Range(1, 64));
  tree->add_option("--mode", ta.mode, "color, verify, clique, spindle, chroma or export-cnf")
      ->check(CLI::IsMember({"color", "verify", "clique", "spindle", "chroma", "export-cnf"}));
  tree->add_option("--k", ta.k, "Colors for chroma decisions and CNF export");
  tree->add_option("--budget", ta.budget, "Search node budget");

  int depth = 3;
  auto* hept = app.add_subcommand("heptile", "Heptagonal tiling patch, 8-coloring and separation");
  hept->add_option("--depth", depth, "Patch depth (0 = geometry only)")->check(CLI::Range(0, 5));

  std::string input;
  int k = 0;
  std::uint64_t budget = 100'000'000;
  auto* chroma = app.add_subcommand("chroma", "Exact coloring of an edge-list graph");
  chroma->add_option("--input", input, "Edge list file ('-' for stdin)")->required();
  chroma->add_option("--k", k, "Decide k-colorability instead of computing the chromatic number");
  chroma->add_option("--budget", budget, "Search node budget");

  int q = 3, n = 9;
  auto* embed = app.add_subcommand("embed", "Embed a regular tree ball into the flat model H_n");
  embed->add_option("--q", q, "Tree degree")->check(CLI::Range(2, 64));
  embed->add_option("--n", n, "Triangles per vertex")->check(CLI::Range(6, 64));
  embed->add_option("--depth", depth, "Ball radius")->check(CLI::Range(0, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (jobs > 0) set_workers(jobs);

  try {
    if (*bound) {
      out.json(bounds_report(d, c));
      return kOk;
    }

    if (*verify) {
      Scheme s;
      if (c) {
        const IntervalBound ib = interval_upper_bound(d, *c);
        if (!ib.applicable) throw std::invalid_argument("interval bound not applicable: " + ib.reason);
        s = *ib.scheme;
      } else if (schemeKind == "optimized") {
        s = scheme_from(*optimize_checkerboard(d).params, d);
      } else {
        const double h = std::log(schemeKind == "k3" ? 3.0 : 4.0);
        const int kk = schemeKind == "k3" ? 3 : 4;
        s = Scheme::make(d, d, h, d, kk, static_cast<int>(ceil_tol(d / h)));
      }
      SamplingOptions opt;
      opt.samples = samples;
      opt.seed = seed;
      if (broken) {
        if (s.mPeriod < 2) throw std::invalid_argument("--break-vertical needs mPeriod >= 2");
        s.mPeriod -= 1;
        opt.allowInvalid = true;
      }
      if (!colorMap.empty()) {
        std::ofstream f(out.resolve(colorMap));
        if (!f) throw std::runtime_error("cannot write " + colorMap);
        export_color_map_csv(s, 256, 256, f);
      }
      const ViolationReport rep = verify_by_sampling(s, opt);
      if (out.csv) {
        std::ostringstream t;
        t.precision(12);
        t << "px,py,qx,qy,t,horiz,vert\n";
        for (const auto& v : rep.violations) {
          t << v.p.x << ',' << v.p.y << ',' << v.q.x << ',' << v.q.y << ',' << v.t << ',' << v.color.horiz << ','
            << v.color.vert << '\n';
        }
        out.write(t.str());
      } else {
        Json j = to_json(rep);
        j["validation"] = to_json(validate_scheme(s));
        out.json(j);
      }
      return rep.ok() ? kOk : kFailed;
    }

    if (*tree) return run_tree(ta, out);

    if (*hept) {
      Json j{{"depth", depth}, {"geometry", to_json(heptagon_geometry())}};
      if (depth == 0) {
        out.json(j);
        return kOk;
      }
      TilingPatch patch = generate_patch(depth);
      const ColoringReport cr = color_patch(patch);
      if (out.csv) {
        std::ostringstream s;
        write_tiles_csv(patch, s);
        out.write(s.str());
        return cr.ok() ? kOk : kFailed;
      }
      j["tiles"] = patch.tiles.size();
      j["coloring"] = to_json(cr);
      j["adjacentSameColor"] = adjacent_same_color_pairs(patch);
      if (depth >= 2) j["separation"] = to_json(min_same_color_separation(patch));
      out.json(j);
      return cr.ok() ? kOk : kFailed;
    }

    if (*chroma) {
      DistGraph g;
      if (input == "-") {
        g = read_edge_list(std::cin);
      } else {
        std::ifstream f(input);
        if (!f) throw std::invalid_argument("cannot read " + input);
        g = read_edge_list(f);
      }
      Json j{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
      if (k > 0) {
        const KColorResult kr = k_colorable(g, k, Budget{budget});
        j["k"] = k;
        j["decision"] = to_json(kr);
        out.json(j);
        return kr.status == Decision::Timeout ? kBudget : kOk;
      }
      const ColoringResult cr = chromatic_number(g, Budget{budget});
      j["chromatic"] = to_json(cr);
      out.json(j);
      return cr.exact ? kOk : kBudget;
    }

    if (*embed) {
      const EmbeddingMap m = embed_tree(q, n, depth);
      const CertificateResult cert = check_angle_certificate(m);
      if (out.csv) {
        std::ostringstream s;
        write_embedding(m, s);
        out.write(s.str());
      } else {
        out.json(Json{{"q", q}, {"n", n}, {"depth", depth}, {"treeVertices", m.image.size()},
                      {"complexVertices", m.complex.vertex_count()}, {"certificate", to_json(cert)}});
      }
      return cert.ok ? kOk : kFailed;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "hypcolor: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "hypcolor: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "hypcolor: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
