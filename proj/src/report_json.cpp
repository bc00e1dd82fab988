#include "hypcolor/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace hypcolor {

double sig12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

Json to_json(const HPoint& p) { return Json{{"x", sig12(p.x)}, {"y", sig12(p.y)}}; }

Json to_json(const CheckerParams& p) {
  return Json{{"h", sig12(p.h)}, {"w", sig12(p.w)}, {"k", p.k}, {"m", p.m}};
}

Json to_json(const BoundResult& b) {
  Json j{{"value", b.value}, {"source", to_string(b.source)}};
  j["params"] = b.params ? to_json(*b.params) : Json(nullptr);
  return j;
}

Json to_json(const Scheme& s) {
  return Json{{"dMin", sig12(s.dMin)}, {"dMax", sig12(s.dMax)}, {"h", sig12(s.h)}, {"w", sig12(s.w)},
              {"r", sig12(s.r)},       {"kPeriod", s.kPeriod},   {"mPeriod", s.mPeriod},
              {"palette", s.palette_size()}};
}

Json to_json(const ValidationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"relation", c.relation}, {"lhs", sig12(c.lhs)}, {"rhs", sig12(c.rhs)}, {"pass", c.pass}});
  }
  return Json{{"ok", r.ok()}, {"checks", checks}};
}

Json to_json(const ViolationReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"p", to_json(x.p)}, {"q", to_json(x.q)}, {"t", sig12(x.t)}, {"color", {x.color.horiz, x.color.vert}}});
  }
  return Json{{"scheme", to_json(r.scheme)},
              {"samples", r.samples},
              {"seed", r.seed},
              {"violationCount", r.violationCount},
              {"screenedCount", r.screenedCount},
              {"violations", v}};
}

Json to_json(const IntervalBound& b) {
  Json j{{"applicable", b.applicable}, {"bound", to_json(b.bound)}, {"envelope", sig12(b.envelope)}};
  if (!b.reason.empty()) j["reason"] = b.reason;
  j["scheme"] = b.scheme ? to_json(*b.scheme) : Json(nullptr);
  return j;
}

Json to_json(const CliqueWitness& w) {
  Json pts = Json::array();
  for (const auto& p : w.points) pts.push_back(to_json(p));
  return Json{{"n", w.size()},          {"dMin", sig12(w.dMin)}, {"dMax", sig12(w.dMax)},
              {"theta", sig12(w.theta)}, {"pairwiseOk", w.pairwiseOk}, {"points", pts}};
}

Json to_json(const HeptagonGeometry& g) {
  return Json{{"circumradius", sig12(g.circumradius)}, {"inradius", sig12(g.inradius)},
              {"halfSide", sig12(g.halfSide)},         {"diameter", sig12(g.diameter)},
              {"interiorAngle", sig12(g.interiorAngle)}, {"vertexCount", g.vertexCount}};
}

Json to_json(const ColoringReport& r) {
  Json conflicts = Json::array();
  for (const auto& w : r.conflicts) conflicts.push_back({w.u, w.a, w.v, w.w});
  return Json{{"ok", r.ok()}, {"colored", r.colored}, {"uncoloredInterior", r.uncoloredInterior}, {"conflicts", conflicts}};
}

Json to_json(const SeparationReport& r) {
  return Json{{"separation", sig12(r.separation)}, {"tileA", r.tileA}, {"tileB", r.tileB},
              {"dualDistance", r.dualDistance},   {"pairsExamined", r.pairsExamined}};
}

Json to_json(const TreeVerifyReport& r) {
  Json w = Json::array();
  for (const auto& x : r.witnesses) w.push_back({{"u", x.u}, {"v", x.v}, {"distance", x.distance}, {"color", x.color}});
  return Json{{"ok", r.ok()},
              {"verticesChecked", r.verticesChecked},
              {"verticesSkipped", r.verticesSkipped},
              {"pairsChecked", r.pairsChecked},
              {"violationCount", r.violationCount},
              {"paletteUsed", r.paletteUsed},
              {"witnesses", w}};
}

Json to_json(const CliqueResult& r) {
  return Json{{"size", r.size()}, {"exact", r.exact}, {"nodes", r.nodes}, {"vertices", r.vertices}};
}

Json to_json(const KColorResult& r) {
  Json j{{"status", to_string(r.status)}, {"nodes", r.nodes}};
  j["coloring"] = r.status == Decision::Sat ? Json(r.coloring) : Json(nullptr);
  return j;
}

Json to_json(const ColoringResult& r) {
  Json j{{"status", to_string(r.status)}, {"lowerBound", r.lowerBound}, {"upperBound", r.upperBound}};
  j["exact"] = r.exact ? Json(*r.exact) : Json(nullptr);
  j["certificate"] = r.certificate ? Json(*r.certificate) : Json(nullptr);
  j["nodes"] = r.nodes;
  return j;
}

Json to_json(const CertificateResult& r) {
  return Json{{"ok", r.ok}, {"injective", r.injective}, {"minGap", r.minGap}, {"witness", r.witness}};
}

Json bounds_report(double d, std::optional<double> c) {
  Json j{{"d", sig12(d)}};
  Json bounds = Json::array();
  if (c) {
    j["c"] = sig12(*c);
    const IntervalBound ib = interval_upper_bound(d, *c);
    bounds.push_back(to_json(ib.bound));
    j["bounds"] = bounds;
    j["best"] = ib.applicable ? Json(ib.bound.value) : Json(nullptr);
    j["interval"] = to_json(ib);
    return j;
  }
  std::vector<BoundResult> all = applicable_closed_forms(d);
  all.push_back(optimize_checkerboard(d));
  long long best = all.front().value;
  for (const auto& b : all) {
    bounds.push_back(to_json(b));
    best = std::min(best, b.value);
  }
  j["bounds"] = bounds;
  j["best"] = best;
  return j;
}

}  // namespace hypcolor
