#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "rhb/fraction.hpp"
#include "rhb/json_io.hpp"
#include "rhb/obstruction.hpp"
#include "rhb/polyseq.hpp"
#include "rhb/reports.hpp"
#include "rhb/sl2z.hpp"
#include "rhb/slide.hpp"
#include "rhb/strings.hpp"
#include "rhb/version.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// boost cpp_int <-> python int, exact via decimal strings
template <>
struct type_caster<rhb::Int> {
    PYBIND11_TYPE_CASTER(rhb::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = rhb::Int(static_cast<std::string>(py::str(src)));
        return true;
    }

    static handle cast(const rhb::Int& src, return_value_policy, handle) {
        return PyLong_FromString(src.str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using Entries = std::vector<rhb::Int>;
using PyCurve = std::tuple<rhb::Int, rhb::Int, int>;
using PyTriple = std::array<PyCurve, 3>;

rhb::PlumbingString to_string_obj(const Entries& entries) {
    return rhb::PlumbingString(entries);
}

PyCurve from_curve(const rhb::FramedCurve& c) { return {c.p, c.q, c.delta}; }

rhb::FramedCurve to_curve(const PyCurve& t) {
    return rhb::FramedCurve(std::get<0>(t), std::get<1>(t), std::get<2>(t));
}

PyTriple from_triple(const rhb::CurveTriple& t) {
    return {from_curve(t.nu[0]), from_curve(t.nu[1]), from_curve(t.nu[2])};
}

rhb::CurveTriple to_triple(const PyTriple& t) {
    return rhb::CurveTriple{{to_curve(t[0]), to_curve(t[1]), to_curve(t[2])}};
}

py::dict trace_to_dict(const rhb::ReductionTrace& trace) {
    py::dict d;
    d["k"] = trace.k;
    d["m"] = trace.m;
    d["start"] = from_triple(trace.start);
    py::list moves;
    for (const rhb::Move& move : trace.moves)
        moves.append(py::make_tuple(rhb::move_kind_name(move.kind), move.pos));
    d["moves"] = moves;
    d["end"] = from_triple(trace.end);
    return d;
}

rhb::ReductionTrace trace_from_dict(const py::dict& d) {
    rhb::ReductionTrace trace;
    trace.k = d["k"].cast<long long>();
    trace.m = d["m"].cast<long long>();
    trace.start = to_triple(d["start"].cast<PyTriple>());
    for (auto item : d["moves"]) {
        auto pair = item.cast<std::pair<std::string, int>>();
        trace.moves.push_back({rhb::move_kind_from_name(pair.first), pair.second});
    }
    trace.end = to_triple(d["end"].cast<PyTriple>());
    return trace;
}

py::dict verdict_to_dict(const rhb::EmbeddingVerdict& v) {
    py::dict d;
    d["k"] = v.k;
    d["m"] = v.m;
    d["p"] = v.p;
    d["q"] = v.q;
    d["smooth"] = v.smooth ? "yes" : "no";
    d["symplectic"] = rhb::symplectic_status_name(v.symplectic);
    d["markov"] = rhb::markov_membership_name(v.markov);
    d["divides_q2_plus_9"] = v.divides;
    d["reason"] = v.reason;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact calculus for the rational homology balls B(s_{k,m}): plumbing strings, "
              "Hirzebruch-Jung fractions, SL2(Z) chain products, handle-slide reduction "
              "certificates and the q^2+9 embedding obstruction";
    m.attr("__version__") = rhb::kVersion;

    // plumbing strings
    m.def("make_s", [](long long k, long long m) { return rhb::make_s(k, m).entries(); },
          py::arg("k"), py::arg("m"));
    m.def("make_s_prime",
          [](long long k, long long m) { return rhb::make_s_prime(k, m).entries(); },
          py::arg("k"), py::arg("m"));
    m.def("make_s_doubleprime",
          [](long long k, long long m) { return rhb::make_s_doubleprime(k, m).entries(); },
          py::arg("k"), py::arg("m"));
    m.def("parse_string",
          [](const std::string& text) { return rhb::parse_plumbing_string(text).entries(); },
          py::arg("text"), "Parse the repeat-block literal syntax, e.g. '2,(2^2,5)^3,2,2'");
    m.def("format_string",
          [](const Entries& e) { return rhb::format_plumbing_string(to_string_obj(e)); });
    m.def("blow_down_once", [](const Entries& e, std::size_t pos) {
        return rhb::blow_down_once(to_string_obj(e), pos).entries();
    }, py::arg("entries"), py::arg("pos"), "pos is 1-based");
    m.def("blows_down_to_zero", [](const Entries& e) {
        auto r = rhb::blows_down_to_zero(to_string_obj(e));
        return std::make_pair(r.reaches_zero, r.moves);
    });

    // continued fractions
    m.def("hj_evaluate", [](const Entries& e) {
        rhb::Fraction f = rhb::hj_evaluate(to_string_obj(e));
        return std::make_pair(f.num, f.den);
    });
    m.def("hj_expand", [](const rhb::Int& p, const rhb::Int& q) {
        return rhb::hj_expand(p, q).entries();
    }, py::arg("p"), py::arg("q"));
    m.def("riemenschneider_dual", [](const Entries& e) {
        return rhb::riemenschneider_dual(to_string_obj(e)).entries();
    });

    // SL2(Z) calculus
    m.def("string_product", [](const Entries& e) {
        rhb::Mat2 p = rhb::string_product(to_string_obj(e));
        return std::make_pair(std::make_pair(p.a, p.b), std::make_pair(p.c, p.d));
    });
    m.def("meridian_coords", [](const Entries& e, std::size_t t) {
        rhb::Vec2 v = rhb::meridian_coords(to_string_obj(e), t);
        return std::make_pair(v.x, v.y);
    }, py::arg("entries"), py::arg("t"), "t is 1-based");
    m.def("lens_from_string", [](const Entries& e) {
        rhb::LensSpace lens = rhb::lens_from_string(to_string_obj(e));
        return std::make_pair(lens.p, lens.q);
    });
    m.def("lens_equivalent",
          [](const rhb::Int& p1, const rhb::Int& q1, const rhb::Int& p2, const rhb::Int& q2) {
              return rhb::lens_equivalent(rhb::lens_space(p1, q1), rhb::lens_space(p2, q2));
          });
    m.def("lens_of_form_p2_pq_minus_1", [](const rhb::Int& p, const rhb::Int& q) {
        return rhb::lens_of_form_p2_pq_minus_1(rhb::lens_space(p, q));
    });

    // polynomial sequences
    m.def("seq_P", [](long long l) { return rhb::seq_P(l).coeffs(); }, py::arg("l"),
          "Coefficients, constant term first");
    m.def("seq_Q", [](long long l) { return rhb::seq_Q(l).coeffs(); }, py::arg("l"));
    m.def("seq_S", [](long long l) { return rhb::seq_S(l).coeffs(); }, py::arg("l"));
    m.def("seq_T", [](long long l) { return rhb::seq_T(l).coeffs(); }, py::arg("l"));
    m.def("eval_poly", [](const std::vector<rhb::Int>& coeffs, const rhb::Int& x) {
        return rhb::IntPoly(std::vector<rhb::Int>(coeffs))(x);
    }, py::arg("coeffs"), py::arg("x"));
    m.def("verify_identity", &rhb::verify_identity, py::arg("id"), py::arg("l_max"));

    // slide calculus
    m.def("slide_F", [](const PyCurve& a, const PyCurve& b) {
        auto [x, y] = rhb::slide_F(to_curve(a), to_curve(b));
        return std::make_pair(from_curve(x), from_curve(y));
    });
    m.def("slide_F_inverse", [](const PyCurve& b, const PyCurve& c) {
        auto [x, y] = rhb::slide_F_inverse(to_curve(b), to_curve(c));
        return std::make_pair(from_curve(x), from_curve(y));
    });
    m.def("flip_sign", [](const PyTriple& t, int i) {
        return from_triple(rhb::flip_sign(to_triple(t), i));
    }, py::arg("triple"), py::arg("i"), "i is 1-based");
    m.def("tau", [](long long l, long long m) { return from_triple(rhb::tau(l, m)); },
          py::arg("l"), py::arg("m"));
    m.def("starting_triple", [](long long k, long long m) {
        return from_triple(rhb::starting_triple(k, m));
    }, py::arg("k"), py::arg("m"));
    m.def("is_cp2_normal_form",
          [](const PyTriple& t) { return rhb::is_cp2_normal_form(to_triple(t)); });
    m.def("cp2_normal_form", [] { return from_triple(rhb::cp2_normal_form()); });
    m.def("reduce_to_cp2", [](long long k, long long m) {
        return trace_to_dict(rhb::reduce_to_cp2(k, m));
    }, py::arg("k"), py::arg("m"));
    m.def("replay", [](const py::dict& trace) {
        return from_triple(rhb::replay(trace_from_dict(trace)));
    });
    m.def("verify_trace", [](const py::dict& trace) {
        rhb::TraceVerification v = rhb::verify_trace(trace_from_dict(trace));
        py::dict d;
        d["replay_matches"] = v.replay_matches;
        d["start_matches_tau"] = v.start_matches_tau;
        d["end_is_normal_form"] = v.end_is_normal_form;
        d["ok"] = v.ok();
        return d;
    });
    m.def("trace_to_json", [](const py::dict& trace) {
        return rhb::trace_to_json(trace_from_dict(trace)).dump(2);
    }, "Certificate JSON, byte-compatible with the rhb CLI");
    m.def("trace_from_json", [](const std::string& text) {
        return trace_to_dict(rhb::trace_from_json(rhb::json::parse(text)));
    });

    // obstruction
    m.def("boundary_pq", [](long long k, long long m) { return rhb::boundary_pq(k, m); },
          py::arg("k"), py::arg("m"));
    m.def("divides_q2_plus_9", &rhb::divides_q2_plus_9, py::arg("p"), py::arg("q"));
    m.def("q2_plus_9_identity_check", &rhb::q2_plus_9_identity_check, py::arg("k"), py::arg("m"));
    m.def("markov_tree", [](int depth) {
        std::vector<std::array<rhb::Int, 3>> out;
        for (const rhb::MarkovTriple& t : rhb::markov_tree(depth)) out.push_back(t.p);
        return out;
    }, py::arg("depth"));
    m.def("is_markov_number", [](const rhb::Int& p, const rhb::Int& bound) {
        return rhb::markov_membership_name(rhb::is_markov_number(p, bound));
    }, py::arg("p"), py::arg("search_bound"));
    m.def("markov_q_candidates", [](const rhb::Int& a, const rhb::Int& b, const rhb::Int& c) {
        return rhb::markov_q_candidates(rhb::MarkovTriple(a, b, c));
    });
    m.def("odd_fibonacci", &rhb::odd_fibonacci, py::arg("n"));
    m.def("verify_fibonacci_case", &rhb::verify_fibonacci_case, py::arg("k"));
    m.def("owens_string", [](long long k) { return rhb::owens_string(k).entries(); },
          py::arg("k"));
    m.def("symplectic_verdict", [](long long k, long long m) {
        return verdict_to_dict(rhb::symplectic_verdict(k, m));
    }, py::arg("k"), py::arg("m"));

    // full per-cell pipeline
    m.def("verify_cell", [](long long k, long long m) {
        rhb::CellResult cell = rhb::verify_cell(k, m, false);
        py::dict d;
        d["k"] = cell.k;
        d["m"] = cell.m;
        d["string"] = cell.string_s;
        d["lens"] = std::make_pair(cell.lens.p, cell.lens.q);
        d["verdict"] = verdict_to_dict(cell.verdict);
        d["trace_moves"] = cell.trace_moves;
        py::list checks;
        for (const rhb::CheckResult& c : cell.checks)
            checks.append(py::make_tuple(c.name, c.pass));
        d["checks"] = checks;
        d["ok"] = cell.ok;
        return d;
    }, py::arg("k"), py::arg("m"));
}
