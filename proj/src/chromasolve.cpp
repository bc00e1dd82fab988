#include "hypcolor/chromasolve.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <random>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hypcolor {

// ---------------------------------------------------------------------------
// DistGraph

DistGraph::DistGraph(int vertexCount, std::vector<std::pair<int, int>> edges, std::string provenance)
    : n_(vertexCount), edges_(std::move(edges)), provenance_(std::move(provenance)) {
  if (n_ < 0) throw std::invalid_argument("DistGraph: negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("DistGraph: loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("DistGraph: endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  std::vector<std::size_t> deg(static_cast<std::size_t>(n_), 0);
  for (auto [u, v] : edges_) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  start_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (std::size_t i = 0; i < deg.size(); ++i) start_[i + 1] = start_[i] + deg[i];
  adj_.assign(start_.back(), 0);
  std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
  for (auto [u, v] : edges_) {
    adj_[fill[static_cast<std::size_t>(u)]++] = v;
    adj_[fill[static_cast<std::size_t>(v)]++] = u;
  }
  for (int v = 0; v < n_; ++v) {
    const auto i = static_cast<std::size_t>(v);
    std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(start_[i]),
              adj_.begin() + static_cast<std::ptrdiff_t>(start_[i + 1]));
  }
}

bool DistGraph::adjacent(int u, int v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

DistGraph DistGraph::induced(std::span<const int> vertices) const {
  std::vector<int> where(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) where[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : edges_) {
    const int a = where[static_cast<std::size_t>(u)];
    const int b = where[static_cast<std::size_t>(v)];
    if (a >= 0 && b >= 0) e.emplace_back(a, b);
  }
  return DistGraph(static_cast<int>(vertices.size()), std::move(e), provenance_ + " (induced)");
}

// ---------------------------------------------------------------------------
// Builders

DistGraph build_distance_graph(const TreeBall& ball, ForbiddenRange forbidden, Exec exec) {
  if (forbidden.lo < 1 || forbidden.hi < forbidden.lo) throw std::invalid_argument("build_distance_graph: bad distance window");
  const auto n = static_cast<std::int64_t>(ball.ball_size());
  std::vector<std::pair<int, int>> edges;
  if (exec == Exec::Parallel) {
    std::vector<std::vector<std::pair<int, int>>> per(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t u = 0; u < n; ++u) {
      auto& out = per[static_cast<std::size_t>(u)];
      for_each_pair_within(ball, static_cast<VertexId>(u), forbidden.lo, forbidden.hi,
                           [&](VertexId v, int) { out.emplace_back(static_cast<int>(u), v); });
    }
    for (auto& p : per) edges.insert(edges.end(), p.begin(), p.end());
  } else {
    for (std::int64_t u = 0; u < n; ++u) {
      for (std::int64_t v = u + 1; v < n; ++v) {
        if (forbidden.contains(tree_distance(ball, static_cast<VertexId>(u), static_cast<VertexId>(v)))) {
          edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
      }
    }
  }
  std::ostringstream prov;
  prov << "T_" << ball.q() << " ball radius " << ball.radius() << ", distances [" << forbidden.lo << ", "
       << forbidden.hi << "]";
  return DistGraph(static_cast<int>(n), std::move(edges), prov.str());
}

DistGraph build_distance_graph(std::span<const HPoint> points, double lo, double hi, double tol) {
  std::vector<std::pair<int, int>> edges;
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dist = hyp_distance(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
      if (dist >= lo - tol && dist <= hi + tol) edges.emplace_back(i, j);
    }
  }
  std::ostringstream prov;
  prov << "hyperbolic point list, distances [" << lo << ", " << hi << "]";
  return DistGraph(n, std::move(edges), prov.str());
}

DistGraph read_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  int declared = -1;
  int maxId = -1;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "n") {
      if (!(ls >> declared) || declared < 0) throw std::runtime_error("edge list: bad 'n' header");
      continue;
    }
    int u = 0;
    int v = 0;
    try {
      u = std::stoi(first);
    } catch (const std::exception&) {
      throw std::runtime_error("edge list: cannot parse '" + line + "'");
    }
    if (!(ls >> v)) throw std::runtime_error("edge list: missing second endpoint in '" + line + "'");
    edges.emplace_back(u, v);
    maxId = std::max({maxId, u, v});
  }
  const int n = declared >= 0 ? declared : maxId + 1;
  return DistGraph(n, std::move(edges), "edge list");
}

void write_edge_list(std::ostream& out, const DistGraph& g) {
  out << "n " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

// ---------------------------------------------------------------------------
// Maximum clique

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  void and_with(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  }
  void and_not(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Tomita-style branch and bound. Vertices are renumbered by non-increasing
// degree so that greedy coloring bounds are tight early.
class CliqueSearch {
 public:
  CliqueSearch(const DistGraph& g, Budget budget) : g_(g), budget_(budget) {
    const int n = g.vertex_count();
    order_.resize(static_cast<std::size_t>(n));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    pos_.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) pos_[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;
    adj_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    for (auto [u, v] : g.edges()) {
      adj_[static_cast<std::size_t>(pos_[static_cast<std::size_t>(u)])].set(static_cast<std::size_t>(pos_[static_cast<std::size_t>(v)]));
      adj_[static_cast<std::size_t>(pos_[static_cast<std::size_t>(v)])].set(static_cast<std::size_t>(pos_[static_cast<std::size_t>(u)]));
    }
  }

  CliqueResult run() {
    const int n = g_.vertex_count();
    CliqueResult res;
    if (n == 0) {
      res.exact = true;
      return res;
    }
    seed_greedy();
    Bitset all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all.set(static_cast<std::size_t>(i));
    std::vector<int> current;
    aborted_ = false;
    expand(current, all);
    res.exact = !aborted_;
    res.nodes = nodes_;
    for (int p : best_) res.vertices.push_back(order_[static_cast<std::size_t>(p)]);
    std::sort(res.vertices.begin(), res.vertices.end());
    return res;
  }

 private:
  void seed_greedy() {
    // Greedy clique from each of the first few high-degree vertices.
    const int n = g_.vertex_count();
    const int tries = std::min(n, 32);
    for (int s = 0; s < tries; ++s) {
      std::vector<int> clique{s};
      Bitset cand = adj_[static_cast<std::size_t>(s)];
      while (cand.any()) {
        int pick = -1;
        cand.for_each([&](std::size_t v) {
          if (pick < 0) pick = static_cast<int>(v);
        });
        clique.push_back(pick);
        cand.and_with(adj_[static_cast<std::size_t>(pick)]);
      }
      if (clique.size() > best_.size()) best_ = clique;
    }
  }

  void expand(std::vector<int>& current, Bitset cand) {
    if (aborted_) return;
    if (++nodes_ > budget_.nodes) {
      aborted_ = true;
      return;
    }
    // Greedy color classes give an upper bound per vertex.
    std::vector<int> verts;
    std::vector<int> bound;
    {
      Bitset uncolored = cand;
      int color = 0;
      while (uncolored.any()) {
        ++color;
        Bitset q = uncolored;
        while (q.any()) {
          int v = -1;
          q.for_each([&](std::size_t x) {
            if (v < 0) v = static_cast<int>(x);
          });
          uncolored.reset(static_cast<std::size_t>(v));
          q.reset(static_cast<std::size_t>(v));
          q.and_not(adj_[static_cast<std::size_t>(v)]);
          verts.push_back(v);
          bound.push_back(color);
        }
      }
    }
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (current.size() + static_cast<std::size_t>(bound[i]) <= best_.size()) return;
      const int v = verts[i];
      current.push_back(v);
      Bitset next = cand;
      next.and_with(adj_[static_cast<std::size_t>(v)]);
      if (next.any()) {
        expand(current, next);
      } else if (current.size() > best_.size()) {
        best_ = current;
      }
      current.pop_back();
      cand.reset(static_cast<std::size_t>(v));
      if (aborted_) return;
    }
  }

  const DistGraph& g_;
  Budget budget_;
  std::vector<int> order_;
  std::vector<int> pos_;
  std::vector<Bitset> adj_;
  std::vector<int> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

CliqueResult max_clique(const DistGraph& g, Budget budget) { return CliqueSearch(g, budget).run(); }

// ---------------------------------------------------------------------------
// Coloring

const char* to_string(Decision d) {
  switch (d) {
    case Decision::Sat: return "SAT";
    case Decision::Unsat: return "UNSAT";
    case Decision::Timeout: return "TIMEOUT";
  }
  return "?";
}

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved: return "SOLVED";
    case SolveStatus::Bounded: return "BOUNDED";
    case SolveStatus::Timeout: return "TIMEOUT";
  }
  return "?";
}

bool is_proper_coloring(const DistGraph& g, std::span<const int> coloring) {
  if (coloring.size() != static_cast<std::size_t>(g.vertex_count())) return false;
  if (std::any_of(coloring.begin(), coloring.end(), [](int c) { return c < 0; })) return false;
  return std::none_of(g.edges().begin(), g.edges().end(), [&](const auto& e) {
    return coloring[static_cast<std::size_t>(e.first)] == coloring[static_cast<std::size_t>(e.second)];
  });
}

int color_count(std::span<const int> coloring) {
  std::vector<int> c(coloring.begin(), coloring.end());
  std::sort(c.begin(), c.end());
  return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
}

std::vector<int> dsatur_greedy(const DistGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<char>> seen(static_cast<std::size_t>(n));
  std::vector<int> sat(static_cast<std::size_t>(n), 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<std::size_t>(v)] >= 0) continue;
      if (best < 0) {
        best = v;
        continue;
      }
      const auto sv = sat[static_cast<std::size_t>(v)];
      const auto sb = sat[static_cast<std::size_t>(best)];
      if (sv > sb || (sv == sb && g.degree(v) > g.degree(best))) best = v;
    }
    const auto& used = seen[static_cast<std::size_t>(best)];
    int c = 0;
    while (c < static_cast<int>(used.size()) && used[static_cast<std::size_t>(c)]) ++c;
    color[static_cast<std::size_t>(best)] = c;
    for (int w : g.neighbors(best)) {
      auto& s = seen[static_cast<std::size_t>(w)];
      if (s.size() <= static_cast<std::size_t>(c)) s.resize(static_cast<std::size_t>(c) + 1, 0);
      if (!s[static_cast<std::size_t>(c)]) {
        s[static_cast<std::size_t>(c)] = 1;
        ++sat[static_cast<std::size_t>(w)];
      }
    }
  }
  return color;
}

namespace {

// Tabu search for a proper k-coloring (Hertz and de Werra's TabuCol). Used
// only to find SAT certificates quickly; never to claim UNSAT.
std::optional<std::vector<int>> tabu_coloring(const DistGraph& g, int k, std::uint64_t maxIters,
                                              std::uint64_t seed) {
  const int n = g.vertex_count();
  std::mt19937_64 rng(seed);
  std::vector<int> color = dsatur_greedy(g);
  for (auto& c : color) {
    if (c >= k) c = static_cast<int>(rng() % static_cast<std::uint64_t>(k));
  }
  const auto at = [k](int v, int c) { return static_cast<std::size_t>(v) * static_cast<std::size_t>(k) + static_cast<std::size_t>(c); };
  std::vector<int> gamma(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), 0);
  std::vector<std::uint64_t> tabu(gamma.size(), 0);
  long conflicts = 0;
  for (auto [u, v] : g.edges()) {
    ++gamma[at(u, color[static_cast<std::size_t>(v)])];
    ++gamma[at(v, color[static_cast<std::size_t>(u)])];
    if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) ++conflicts;
  }
  for (std::uint64_t it = 1; it <= maxIters && conflicts > 0; ++it) {
    int bestV = -1;
    int bestC = -1;
    int bestDelta = std::numeric_limits<int>::max();
    std::uint64_t ties = 0;
    for (int v = 0; v < n; ++v) {
      const int cv = color[static_cast<std::size_t>(v)];
      const int own = gamma[at(v, cv)];
      if (own == 0) continue;
      for (int c = 0; c < k; ++c) {
        if (c == cv) continue;
        const int delta = gamma[at(v, c)] - own;
        const bool aspiration = conflicts + delta == 0;
        if (tabu[at(v, c)] >= it && !aspiration) continue;
        if (delta < bestDelta) {
          bestDelta = delta;
          bestV = v;
          bestC = c;
          ties = 1;
        } else if (delta == bestDelta && rng() % ++ties == 0) {
          bestV = v;
          bestC = c;
        }
      }
    }
    if (bestV < 0) continue;
    const int old = color[static_cast<std::size_t>(bestV)];
    color[static_cast<std::size_t>(bestV)] = bestC;
    conflicts += bestDelta;
    for (int w : g.neighbors(bestV)) {
      --gamma[at(w, old)];
      ++gamma[at(w, bestC)];
    }
    tabu[at(bestV, old)] = it + static_cast<std::uint64_t>(0.6 * static_cast<double>(conflicts)) + rng() % 10;
  }
  if (conflicts > 0) return std::nullopt;
  return color;
}

// Backtracking k-colorability with domains as bit masks (k <= 64).
class KColorSearch {
 public:
  KColorSearch(const DistGraph& g, int k, Budget budget)
      : g_(g), k_(k), budget_(budget), n_(g.vertex_count()),
        domain_(static_cast<std::size_t>(n_), k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1),
        color_(static_cast<std::size_t>(n_), -1) {}

  KColorResult run(const std::vector<int>& clique) {
    KColorResult res;
    if (static_cast<int>(clique.size()) > k_) {
      res.status = Decision::Unsat;
      return res;
    }
    int opened = 0;
    for (int v : clique) {
      if (!assign(v, opened)) {
        res.status = Decision::Unsat;
        return res;
      }
      ++opened;
    }
    const bool found = search(static_cast<int>(clique.size()), opened);
    res.nodes = nodes_;
    if (found) {
      res.status = Decision::Sat;
      res.coloring = color_;
    } else {
      res.status = aborted_ ? Decision::Timeout : Decision::Unsat;
    }
    return res;
  }

 private:
  struct Change {
    int v;
    std::uint64_t old;
  };

  // Colors v with c and prunes c from uncolored neighbours; false on wipeout.
  bool assign(int v, int c) {
    color_[static_cast<std::size_t>(v)] = c;
    const std::uint64_t bit = std::uint64_t{1} << c;
    for (int w : g_.neighbors(v)) {
      auto& dom = domain_[static_cast<std::size_t>(w)];
      if (color_[static_cast<std::size_t>(w)] >= 0) {
        if (color_[static_cast<std::size_t>(w)] == c) return false;
        continue;
      }
      if (dom & bit) {
        trail_.push_back({w, dom});
        dom &= ~bit;
        if (dom == 0) return false;
      }
    }
    return true;
  }

  void undo_to(std::size_t mark, int v) {
    while (trail_.size() > mark) {
      domain_[static_cast<std::size_t>(trail_.back().v)] = trail_.back().old;
      trail_.pop_back();
    }
    color_[static_cast<std::size_t>(v)] = -1;
  }

  int select() const {
    int best = -1;
    int bestSize = 65;
    for (int v = 0; v < n_; ++v) {
      if (color_[static_cast<std::size_t>(v)] >= 0) continue;
      const int sz = std::popcount(domain_[static_cast<std::size_t>(v)]);
      if (sz < bestSize || (sz == bestSize && g_.degree(v) > g_.degree(best))) {
        best = v;
        bestSize = sz;
      }
    }
    return best;
  }

  bool search(int colored, int opened) {
    if (colored == n_) return true;
    if (++nodes_ > budget_.nodes) {
      aborted_ = true;
      return false;
    }
    const int v = select();
    std::uint64_t dom = domain_[static_cast<std::size_t>(v)];
    // Only the first unopened color is worth trying.
    const std::uint64_t openMask = opened >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (opened + 1)) - 1;
    dom &= openMask;
    while (dom) {
      const int c = std::countr_zero(dom);
      dom &= dom - 1;
      const std::size_t mark = trail_.size();
      if (assign(v, c)) {
        if (search(colored + 1, std::max(opened, c + 1))) return true;
      }
      undo_to(mark, v);
      if (aborted_) return false;
    }
    return false;
  }

  const DistGraph& g_;
  int k_;
  Budget budget_;
  int n_;
  std::vector<std::uint64_t> domain_;
  std::vector<int> color_;
  std::vector<Change> trail_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

KColorResult k_colorable(const DistGraph& g, int k, Budget budget) {
  if (k < 1) throw std::invalid_argument("k_colorable: k must be >= 1");
  KColorResult res;
  const int n = g.vertex_count();
  if (n == 0) {
    res.status = Decision::Sat;
    return res;
  }
  // Cheap decisions first.
  auto greedy = dsatur_greedy(g);
  if (color_count(greedy) <= k) {
    res.status = Decision::Sat;
    res.coloring = std::move(greedy);
    return res;
  }
  if (auto tabu = tabu_coloring(g, k, std::min<std::uint64_t>(budget.nodes, 200'000), 0x9e3779b97f4a7c15ULL)) {
    res.status = Decision::Sat;
    res.coloring = std::move(*tabu);
    return res;
  }
  if (k > 64) throw std::invalid_argument("k_colorable: exact search supports k <= 64");
  const CliqueResult clique = max_clique(g, Budget{std::min<std::uint64_t>(budget.nodes, 1'000'000)});
  res = KColorSearch(g, k, budget).run(clique.vertices);
  res.nodes += clique.nodes;
  if (res.status == Decision::Sat && !is_proper_coloring(g, res.coloring)) {
    throw std::logic_error("k_colorable: search produced an improper coloring");
  }
  return res;
}

ColoringResult chromatic_number(const DistGraph& g, Budget budget) {
  ColoringResult res;
  const int n = g.vertex_count();
  if (n == 0) {
    res.exact = 0;
    res.certificate = std::vector<int>{};
    res.status = SolveStatus::Solved;
    return res;
  }
  const CliqueResult clique = max_clique(g, budget);
  res.nodes += clique.nodes;
  auto greedy = dsatur_greedy(g);
  res.lowerBound = std::max(1, clique.size());
  res.upperBound = color_count(greedy);
  std::vector<int> best = greedy;
  bool progressed = false;
  while (res.lowerBound < res.upperBound) {
    const std::uint64_t left = budget.nodes > res.nodes ? budget.nodes - res.nodes : 0;
    const KColorResult kr = k_colorable(g, res.lowerBound, Budget{left});
    res.nodes += kr.nodes;
    if (kr.status == Decision::Sat) {
      res.upperBound = res.lowerBound;
      best = kr.coloring;
    } else if (kr.status == Decision::Unsat) {
      ++res.lowerBound;
      progressed = true;
    } else {
      res.status = progressed ? SolveStatus::Bounded : SolveStatus::Timeout;
      res.certificate = best;
      return res;
    }
  }
  if (!is_proper_coloring(g, best) || color_count(best) != res.upperBound) {
    throw std::logic_error("chromatic_number: certificate failed re-verification");
  }
  res.exact = res.upperBound;
  res.certificate = std::move(best);
  res.status = SolveStatus::Solved;
  return res;
}

// ---------------------------------------------------------------------------
// DIMACS

std::uint64_t dimacs_clause_count(const DistGraph& g, int k) {
  const auto n = static_cast<std::uint64_t>(g.vertex_count());
  const auto kk = static_cast<std::uint64_t>(k);
  return n + n * kk * (kk - 1) / 2 + static_cast<std::uint64_t>(g.edge_count()) * kk;
}

void export_dimacs_cnf(const DistGraph& g, int k, std::ostream& out) {
  if (k < 1) throw std::invalid_argument("export_dimacs_cnf: k must be >= 1");
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const auto var = [k](std::int64_t v, int c) { return v * k + c + 1; };
  out << "p cnf " << n * k << ' ' << dimacs_clause_count(g, k) << '\n';
  for (std::int64_t v = 0; v < n; ++v) {
    for (int c = 0; c < k; ++c) out << var(v, c) << ' ';
    out << "0\n";
  }
  for (std::int64_t v = 0; v < n; ++v) {
    for (int c1 = 0; c1 < k; ++c1) {
      for (int c2 = c1 + 1; c2 < k; ++c2) out << -var(v, c1) << ' ' << -var(v, c2) << " 0\n";
    }
  }
  for (auto [u, v] : g.edges()) {
    for (int c = 0; c < k; ++c) out << -var(u, c) << ' ' << -var(v, c) << " 0\n";
  }
}

void export_dimacs_cnf(const DistGraph& g, int k, const std::filesystem::path& destination) {
  std::ofstream f(destination);
  if (!f) throw std::runtime_error("export_dimacs_cnf: cannot open " + destination.string());
  export_dimacs_cnf(g, k, f);
  f.flush();
  if (!f) throw std::runtime_error("export_dimacs_cnf: write failed for " + destination.string());
}

}  // namespace hypcolor
