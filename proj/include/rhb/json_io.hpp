#pragma once

#include <nlohmann/json.hpp>

#include "rhb/obstruction.hpp"
#include "rhb/polyseq.hpp"
#include "rhb/sl2z.hpp"
#include "rhb/slide.hpp"

namespace rhb {

using json = nlohmann::json;

// Potentially large integers travel as decimal strings; small structural
// fields (k, m, move positions) stay JSON numbers.

json lens_to_json(const LensSpace& lens);
LensSpace lens_from_json(const json& j);

json poly_to_json(const IntPoly& poly);
IntPoly poly_from_json(const json& j);

json curve_to_json(const FramedCurve& c);
FramedCurve curve_from_json(const json& j);

json triple_to_json(const CurveTriple& t);
CurveTriple triple_from_json(const json& j);

json move_to_json(const Move& m);
Move move_from_json(const json& j);

/// Certificate schema:
/// {"k":0,"m":3,"start":[[p,q,delta]x3],"moves":[{"kind":...,"pos":...}],"end":[...]}
json trace_to_json(const ReductionTrace& trace);
ReductionTrace trace_from_json(const json& j);

json verdict_to_json(const EmbeddingVerdict& v);

}  // namespace rhb
