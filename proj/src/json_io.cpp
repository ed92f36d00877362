#include "rhb/json_io.hpp"

#include <stdexcept>

namespace rhb {

namespace {

Int int_field(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("json: expected a decimal-string integer");
    return parse_decimal(j.get<std::string>());
}

}  // namespace

json lens_to_json(const LensSpace& lens) {
    return json{{"p", lens.p.str()}, {"q", lens.q.str()}};
}

LensSpace lens_from_json(const json& j) {
    return lens_space(int_field(j.at("p")), int_field(j.at("q")));
}

json poly_to_json(const IntPoly& poly) {
    json coeffs = json::array();
    for (const Int& c : poly.coeffs()) coeffs.push_back(c.str());
    return json{{"coeffs", coeffs}};
}

IntPoly poly_from_json(const json& j) {
    std::vector<Int> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(int_field(c));
    return IntPoly(std::move(coeffs));
}

json curve_to_json(const FramedCurve& c) {
    return json::array({c.p.str(), c.q.str(), std::to_string(c.delta)});
}

FramedCurve curve_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("json: framed curve must be [p, q, delta]");
    Int delta = int_field(j[2]);
    if (delta != 1 && delta != -1)
        throw std::invalid_argument("json: framing sign must be 1 or -1");
    return FramedCurve(int_field(j[0]), int_field(j[1]), delta == 1 ? 1 : -1);
}

json triple_to_json(const CurveTriple& t) {
    return json::array({curve_to_json(t.nu[0]), curve_to_json(t.nu[1]), curve_to_json(t.nu[2])});
}

CurveTriple triple_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("json: curve triple must have three components");
    return CurveTriple{{curve_from_json(j[0]), curve_from_json(j[1]), curve_from_json(j[2])}};
}

json move_to_json(const Move& m) {
    return json{{"kind", move_kind_name(m.kind)}, {"pos", m.pos}};
}

Move move_from_json(const json& j) {
    Move m{move_kind_from_name(j.at("kind").get<std::string>()), j.at("pos").get<int>()};
    if (m.pos < 1 || m.pos > 3)
        throw std::invalid_argument("json: move position out of range");
    return m;
}

json trace_to_json(const ReductionTrace& trace) {
    json moves = json::array();
    for (const Move& m : trace.moves) moves.push_back(move_to_json(m));
    return json{{"k", trace.k},
                {"m", trace.m},
                {"start", triple_to_json(trace.start)},
                {"moves", moves},
                {"end", triple_to_json(trace.end)}};
}

ReductionTrace trace_from_json(const json& j) {
    ReductionTrace trace;
    trace.k = j.at("k").get<long long>();
    trace.m = j.at("m").get<long long>();
    trace.start = triple_from_json(j.at("start"));
    for (const auto& m : j.at("moves")) trace.moves.push_back(move_from_json(m));
    trace.end = triple_from_json(j.at("end"));
    return trace;
}

json verdict_to_json(const EmbeddingVerdict& v) {
    return json{{"k", v.k},
                {"m", v.m},
                {"p", v.p.str()},
                {"q", v.q.str()},
                {"smooth", v.smooth ? "yes" : "no"},
                {"symplectic", symplectic_status_name(v.symplectic)},
                {"markov", markov_membership_name(v.markov)},
                {"divides_q2_plus_9", v.divides},
                {"reason", v.reason}};
}

}  // namespace rhb
