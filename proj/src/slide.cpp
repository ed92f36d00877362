#include "rhb/slide.hpp"

#include <stdexcept>

#include "rhb/polyseq.hpp"
#include "rhb/sl2z.hpp"

namespace rhb {

FramedCurve::FramedCurve(Int p_, Int q_, int delta_) : p(std::move(p_)), q(std::move(q_)), delta(delta_) {
    if (p == 0 && q == 0)
        throw std::domain_error("FramedCurve: coordinates (0,0) are degenerate");
    if (delta != 1 && delta != -1)
        throw std::invalid_argument("FramedCurve: framing sign must be +1 or -1");
}

std::string FramedCurve::str() const {
    return "(" + p.str() + "," + q.str() + ")_" + (delta > 0 ? "+1" : "-1");
}

std::string CurveTriple::str() const {
    return "[" + nu[0].str() + ", " + nu[1].str() + ", " + nu[2].str() + "]";
}

std::string move_kind_name(MoveKind kind) {
    switch (kind) {
        case MoveKind::slide_forward: return "slide_forward";
        case MoveKind::slide_backward: return "slide_backward";
        case MoveKind::sign_flip: return "sign_flip";
    }
    throw std::logic_error("move_kind_name: unreachable");
}

MoveKind move_kind_from_name(const std::string& name) {
    if (name == "slide_forward") return MoveKind::slide_forward;
    if (name == "slide_backward") return MoveKind::slide_backward;
    if (name == "sign_flip") return MoveKind::sign_flip;
    throw std::invalid_argument("unknown move kind '" + name + "'");
}

std::pair<FramedCurve, FramedCurve> slide_F(const FramedCurve& a, const FramedCurve& b) {
    Int delta0 = b.p * a.q - b.q * a.p;
    Int step = b.delta * delta0;
    return {b, FramedCurve(a.p - step * b.p, a.q - step * b.q, a.delta)};
}

std::pair<FramedCurve, FramedCurve> slide_F_inverse(const FramedCurve& b, const FramedCurve& c) {
    // D0 of the original pair recovers from the output: D0 = p0 Q - q0 P.
    Int delta0 = b.p * c.q - b.q * c.p;
    Int step = b.delta * delta0;
    return {FramedCurve(c.p + step * b.p, c.q + step * b.q, c.delta), b};
}

CurveTriple flip_sign(const CurveTriple& t, int i) {
    if (i < 1 || i > 3) throw std::invalid_argument("flip_sign: component index must be 1..3");
    CurveTriple out = t;
    FramedCurve& c = out.nu[static_cast<std::size_t>(i - 1)];
    c.p = -c.p;
    c.q = -c.q;
    return out;
}

namespace {

int parity_sign(long long l) { return (l % 2 == 0) ? 1 : -1; }  // (-1)^l, any integer l

}  // namespace

CurveTriple tau(long long l, long long m) {
    if (l < -1) throw std::invalid_argument("tau: l must be >= -1");
    if (m < 1) throw std::invalid_argument("tau: m must be >= 1");
    Int x(m);
    return CurveTriple{{FramedCurve(seq_P(l + 1)(x), seq_Q(l + 1)(x), parity_sign(l)),
                        FramedCurve(seq_P(l + 2)(x), seq_Q(l + 2)(x), parity_sign(l + 1)),
                        FramedCurve(Int(m), Int(m - 1), 1)}};
}

namespace {

bool equal_up_to_sign(const FramedCurve& a, const FramedCurve& b) {
    if (a.delta != b.delta) return false;
    return (a.p == b.p && a.q == b.q) || (a.p == -b.p && a.q == -b.q);
}

bool triples_equal_up_to_signs(const CurveTriple& a, const CurveTriple& b) {
    for (std::size_t i = 0; i < 3; ++i)
        if (!equal_up_to_sign(a.nu[i], b.nu[i])) return false;
    return true;
}

}  // namespace

CurveTriple starting_triple(long long k, long long m) {
    if (k < 0) throw std::invalid_argument("starting_triple: k must be >= 0");
    if (m < 1) throw std::invalid_argument("starting_triple: m must be >= 1");

    // nu_3: first column of A_2^{m-1}
    std::vector<Int> twos(static_cast<std::size_t>(m - 1), Int(2));
    Mat2 a2_pow = string_product(PlumbingString(twos));

    // nu_2: first column of A_2 (A_2^{m-1} A_{m+2})^{k+1}
    std::vector<Int> head;
    head.emplace_back(2);
    for (long long i = 0; i <= k; ++i) {
        head.insert(head.end(), static_cast<std::size_t>(m - 1), Int(2));
        head.emplace_back(m + 2);
    }
    Mat2 nu2_mat = string_product(PlumbingString(head));

    // nu_1: first column of A_2 (A_2^{m-1} A_{m+2})^{k+1} A_1 A_2^{m-1}
    Mat2 nu1_mat = nu2_mat * matrix_A(Int(1)) * a2_pow;

    CurveTriple result{{FramedCurve(nu1_mat.a, nu1_mat.c, 1),
                        FramedCurve(nu2_mat.a, nu2_mat.c, -1),
                        FramedCurve(a2_pow.a, a2_pow.c, 1)}};

    if (!triples_equal_up_to_signs(result, tau(2 * k, m)))
        throw std::logic_error("starting_triple: matrix route disagrees with tau(2k,m) at k=" +
                               std::to_string(k) + ", m=" + std::to_string(m));
    return result;
}

CurveTriple cp2_normal_form() {
    return CurveTriple{{FramedCurve(0, 1, 1), FramedCurve(1, 0, -1), FramedCurve(1, 0, 1)}};
}

bool is_cp2_normal_form(const CurveTriple& t) {
    return triples_equal_up_to_signs(t, cp2_normal_form());
}

CurveTriple apply_move(const CurveTriple& t, const Move& move) {
    if (move.kind == MoveKind::sign_flip) return flip_sign(t, move.pos);
    if (move.pos != 1 && move.pos != 2)
        throw std::invalid_argument("apply_move: slide position must be 1 or 2");
    std::size_t i = static_cast<std::size_t>(move.pos - 1);
    CurveTriple out = t;
    auto pair = (move.kind == MoveKind::slide_forward)
                    ? slide_F(t.nu[i], t.nu[i + 1])
                    : slide_F_inverse(t.nu[i], t.nu[i + 1]);
    out.nu[i] = pair.first;
    out.nu[i + 1] = pair.second;
    return out;
}

CurveTriple replay(const ReductionTrace& trace) {
    CurveTriple cur = trace.start;
    for (const Move& move : trace.moves) cur = apply_move(cur, move);
    return cur;
}

ReductionTrace reduce_to_cp2(long long k, long long m) {
    if (k < 0) throw std::invalid_argument("reduce_to_cp2: k must be >= 0");
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("reduce_to_cp2: m must be odd and >= 1");

    ReductionTrace trace;
    trace.k = k;
    trace.m = m;
    trace.start = tau(2 * k, m);

    CurveTriple cur = trace.start;
    auto push = [&](MoveKind kind, int pos) {
        Move move{kind, pos};
        cur = apply_move(cur, move);
        trace.moves.push_back(move);
    };

    // descend tau_{2k,m} -> tau_{-1,m}
    for (long long i = 0; i < 2 * k + 1; ++i) push(MoveKind::slide_backward, 1);
    // shrink the (2,3) pair by 2 per round
    for (long long j = 0; j < (m - 1) / 2; ++j) {
        push(MoveKind::slide_forward, 2);
        push(MoveKind::sign_flip, 3);
    }
    // invert the three slides of the normal-form pair
    for (int i = 0; i < 3; ++i) push(MoveKind::slide_backward, 1);

    trace.end = cur;
    if (!(cur == cp2_normal_form()))
        throw std::logic_error("reduce_to_cp2: end state is not the CP^2 normal form at k=" +
                               std::to_string(k) + ", m=" + std::to_string(m));
    return trace;
}

}  // namespace rhb
