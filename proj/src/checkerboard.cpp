#include "hypcolor/checkerboard.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

namespace hypcolor {

namespace {

constexpr std::uint64_t kChunk = 4096;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool le_tol(double a, double b) { return a <= b + 1e-9 * std::fmax(1.0, std::fabs(b)); }

long long floor_mod(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

// Position of p inside its rectangle, each coordinate in [0, 1).
std::array<double, 2> cell_fraction(const Scheme& s, const HPoint& p, const RectIndex& idx) {
  const double fy = std::log(p.y) / s.h - static_cast<double>(idx.j);
  const double width = s.r * std::exp(static_cast<double>(idx.j) * s.h);
  const double fx = p.x / width - static_cast<double>(idx.i);
  return {fx, fy};
}

bool near_boundary(const Scheme& s, const HPoint& p) {
  const auto f = cell_fraction(s, p, rect_of_point(s, p));
  constexpr double eps = 1e-7;
  return f[0] < eps || f[0] > 1.0 - eps || f[1] < eps || f[1] > 1.0 - eps;
}

}  // namespace

Scheme Scheme::make(double dMin, double dMax, double h, double w, int kPeriod, int mPeriod) {
  if (!(dMin > 0.0) || !(dMax >= dMin)) throw std::invalid_argument("Scheme: need 0 < dMin <= dMax");
  if (!(h > 0.0) || !(w > 0.0)) throw std::invalid_argument("Scheme: h and w must be positive");
  if (kPeriod < 2) throw std::invalid_argument("Scheme: kPeriod must be >= 2");
  if (mPeriod < 1) throw std::invalid_argument("Scheme: mPeriod must be >= 1");
  Scheme s;
  s.dMin = dMin;
  s.dMax = dMax;
  s.h = h;
  s.w = w;
  s.r = std::sqrt(2.0 * coshm1(w));
  s.kPeriod = kPeriod;
  s.mPeriod = mPeriod;
  return s;
}

RectIndex rect_of_point(const Scheme& s, const HPoint& p) {
  long long j = static_cast<long long>(std::floor(std::log(p.y) / s.h));
  // Repair rounding so that e^{jh} <= y < e^{(j+1)h} holds as computed.
  while (p.y < std::exp(static_cast<double>(j) * s.h)) --j;
  while (p.y >= std::exp(static_cast<double>(j + 1) * s.h)) ++j;
  const double width = s.r * std::exp(static_cast<double>(j) * s.h);
  long long i = static_cast<long long>(std::floor(p.x / width));
  while (p.x < static_cast<double>(i) * width) --i;
  while (p.x >= static_cast<double>(i + 1) * width) ++i;
  return {i, j};
}

Color color_of_rect(const Scheme& s, const RectIndex& idx) {
  return {static_cast<int>(floor_mod(idx.i, s.kPeriod + 1)), static_cast<int>(floor_mod(idx.j, s.mPeriod + 1))};
}

Color color_of_point(const Scheme& s, const HPoint& p) { return color_of_rect(s, rect_of_point(s, p)); }

double rect_diameter(double w, double h) {
  const double eh = std::exp(h);
  const double em1 = std::expm1(h);
  const double diagonal = acosh1p((2.0 * coshm1(w) + em1 * em1) / (2.0 * eh));
  return std::max(w, diagonal);
}

double upper_corner_distance(double w, double h) { return acosh1p(coshm1(w) * std::exp(-2.0 * h)); }

double same_stratum_separation(double w, double h, long long gap) {
  if (gap < 0) throw std::invalid_argument("same_stratum_separation: negative gap");
  const double g = static_cast<double>(gap);
  return acosh1p(g * g * coshm1(w) * std::exp(-2.0 * h));
}

double required_k(double dMax, double w, double h) { return std::exp(h) * std::sqrt(coshm1(dMax) / coshm1(w)); }

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const SchemeCheck& c) { return c.pass; });
}

ValidationReport validate_scheme(const Scheme& s) {
  ValidationReport rep;
  const double rExpected = std::sqrt(2.0 * coshm1(s.w));
  rep.checks.push_back({"base width r = sqrt(2(cosh w - 1))", "<=", std::fabs(s.r - rExpected), 1e-12 * std::fmax(1.0, rExpected),
                        std::fabs(s.r - rExpected) <= 1e-12 * std::fmax(1.0, rExpected)});
  const double kNeed = required_k(s.dMax, s.w, s.h);
  rep.checks.push_back({"horizontal period kPeriod >= e^h sqrt((cosh dMax - 1)/(cosh w - 1))", ">=",
                        static_cast<double>(s.kPeriod), kNeed, static_cast<long long>(s.kPeriod) >= ceil_tol(kNeed)});
  const double vert = s.mPeriod * s.h;
  rep.checks.push_back({"vertical period mPeriod * h >= dMax", ">=", vert, s.dMax, le_tol(s.dMax, vert)});
  const double diam = rect_diameter(s.w, s.h);
  rep.checks.push_back({"rectangle diameter <= dMin", "<=", diam, s.dMin, le_tol(diam, s.dMin)});
  return rep;
}

ViolationReport verify_by_sampling(const Scheme& s, const SamplingOptions& opt, Exec exec) {
  if (!opt.allowInvalid && !validate_scheme(s).ok()) {
    throw std::invalid_argument("verify_by_sampling: scheme fails validation");
  }
  ViolationReport rep;
  rep.scheme = s;
  rep.samples = opt.samples;
  rep.seed = opt.seed;
  if (opt.samples == 0) return rep;

  const int strata = opt.strata > 0 ? opt.strata : 3 * (s.mPeriod + 1);
  const double periods = static_cast<double>(opt.horizontalPeriods) * (s.kPeriod + 1);
  const bool interval = s.dMax > s.dMin;
  const std::uint64_t chunks = (opt.samples + kChunk - 1) / kChunk;

  struct ChunkResult {
    std::uint64_t bad = 0;
    std::uint64_t screened = 0;
    std::vector<Violation> exemplars;
  };
  std::vector<ChunkResult> results(chunks);

  auto run_chunk = [&](std::uint64_t c) {
    std::mt19937_64 rng(splitmix64(opt.seed ^ splitmix64(c)));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    ChunkResult& out = results[c];
    const std::uint64_t begin = c * kChunk;
    const std::uint64_t end = std::min(opt.samples, begin + kChunk);
    for (std::uint64_t n = begin; n < end; ++n) {
      const double level = unit(rng) * strata;
      const double y = std::exp(level * s.h);
      const double width = s.r * std::exp(std::floor(level) * s.h);
      const double x = unit(rng) * periods * width;
      const double phi = unit(rng) * 2.0 * std::numbers::pi;
      const double t = interval ? s.dMin + unit(rng) * (s.dMax - s.dMin) : s.dMin;
      const HPoint p{x, y};
      const HPoint q = point_at_distance(p, phi, t);
      const Color cp = color_of_point(s, p);
      if (!(cp == color_of_point(s, q))) continue;
      if (near_boundary(s, p) || near_boundary(s, q)) {
        ++out.screened;
        continue;
      }
      ++out.bad;
      if (out.exemplars.size() < opt.maxExemplars) out.exemplars.push_back({p, q, t, cp});
    }
  };

  const auto nChunks = static_cast<std::int64_t>(chunks);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < nChunks; ++c) run_chunk(static_cast<std::uint64_t>(c));
  } else {
    for (std::int64_t c = 0; c < nChunks; ++c) run_chunk(static_cast<std::uint64_t>(c));
  }

  for (const auto& r : results) {
    rep.violationCount += r.bad;
    rep.screenedCount += r.screened;
    for (const auto& v : r.exemplars) {
      if (rep.violations.size() < opt.maxExemplars) rep.violations.push_back(v);
    }
  }
  return rep;
}

void export_color_map_csv(const Scheme& s, int nx, int ny, std::ostream& out) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("export_color_map_csv: grid must be non-empty");
  const int strata = 3 * (s.mPeriod + 1);
  const double periods = 3.0 * (s.kPeriod + 1);
  out << "x,y,horiz,vert,colorIndex\n";
  const auto old = out.precision(12);
  for (int b = 0; b < ny; ++b) {
    const double level = (b + 0.5) / ny * strata;
    const double y = std::exp(level * s.h);
    const double width = s.r * std::exp(std::floor(level) * s.h);
    for (int a = 0; a < nx; ++a) {
      const double x = (a + 0.5) / nx * periods * width;
      const Color c = color_of_point(s, HPoint{x, y});
      out << x << ',' << y << ',' << c.horiz << ',' << c.vert << ',' << c.index(s) << '\n';
    }
  }
  out.precision(old);
}

}  // namespace hypcolor
