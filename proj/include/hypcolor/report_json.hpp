#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "hypcolor/bounds.hpp"
#include "hypcolor/checkerboard.hpp"
#include "hypcolor/chromasolve.hpp"
#include "hypcolor/flatmodel.hpp"
#include "hypcolor/heptile.hpp"
#include "hypcolor/treegeom.hpp"

namespace hypcolor {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits; every float in a report goes through it.
double sig12(double x);

Json to_json(const HPoint& p);
Json to_json(const CheckerParams& p);
Json to_json(const BoundResult& b);
Json to_json(const Scheme& s);
Json to_json(const ValidationReport& r);
Json to_json(const ViolationReport& r);
Json to_json(const IntervalBound& b);
Json to_json(const CliqueWitness& w);
Json to_json(const HeptagonGeometry& g);
Json to_json(const ColoringReport& r);
Json to_json(const SeparationReport& r);
Json to_json(const TreeVerifyReport& r);
Json to_json(const CliqueResult& r);
Json to_json(const KColorResult& r);
Json to_json(const ColoringResult& r);
Json to_json(const CertificateResult& r);

/// {d, c?, bounds: [...], best}. Without c the bounds are the applicable
/// closed forms and the optimizer; with c the interval bound.
Json bounds_report(double d, std::optional<double> c);

}  // namespace hypcolor
