#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rhb/bigint.hpp"

namespace rhb {

/// Attaching curve with homology coordinates (p,q) w.r.t. (l_1, m_1) and
/// framing sign delta = +-1 relative to the nested torus carrying it.
struct FramedCurve {
    Int p;
    Int q;
    int delta;

    FramedCurve() : p(1), q(0), delta(1) {}
    FramedCurve(Int p_, Int q_, int delta_);

    bool operator==(const FramedCurve& o) const = default;
    std::string str() const;
};

/// Ordered (nu_1, nu_2, nu_3), right to left along the surgery diagram.
struct CurveTriple {
    std::array<FramedCurve, 3> nu;

    const FramedCurve& operator[](std::size_t i1based) const { return nu.at(i1based - 1); }
    bool operator==(const CurveTriple& o) const = default;
    std::string str() const;
};

enum class MoveKind { slide_forward, slide_backward, sign_flip };

/// A replayable move: slides act on the component pair (pos, pos+1) with
/// pos in {1,2}; sign flips act on component pos in {1,2,3}.
struct Move {
    MoveKind kind;
    int pos;
    bool operator==(const Move& o) const = default;
};

std::string move_kind_name(MoveKind kind);
MoveKind move_kind_from_name(const std::string& name);

/// The sliding map on a consecutive pair:
///   F((p,q)_d, (p0,q0)_d0) = ((p0,q0)_d0, (p - d0 D0 p0, q - d0 D0 q0)_d),
/// with D0 = p0 q - q0 p. Throws std::domain_error if the new coordinates
/// degenerate to (0,0).
std::pair<FramedCurve, FramedCurve> slide_F(const FramedCurve& a, const FramedCurve& b);

/// Exact inverse: slide_F_inverse(slide_F(a,b)) = (a,b).
std::pair<FramedCurve, FramedCurve> slide_F_inverse(const FramedCurve& b, const FramedCurve& c);

/// Negates the coordinates (not the framing) of component i in {1,2,3}.
CurveTriple flip_sign(const CurveTriple& t, int i);

/// tau_{l,m} = ((P_{l+1}(m), Q_{l+1}(m))_{(-1)^l},
///              (P_{l+2}(m), Q_{l+2}(m))_{(-1)^{l+1}}, (m, m-1)_1); l >= -1, m >= 1.
CurveTriple tau(long long l, long long m);

/// The triple (nu_1, nu_2, nu_3) of B(s_{k,m}) computed from matrix first
/// columns, framings (+1,-1,+1); checked against tau(2k,m) up to
/// component-wise sign flips. Requires k >= 0, m >= 1.
CurveTriple starting_triple(long long k, long long m);

/// ((0,1)_1, (1,0)_-1, (1,0)_1), the endpoint identified with CP^2.
CurveTriple cp2_normal_form();

/// True iff t equals the normal form up to component-wise coordinate sign flips.
bool is_cp2_normal_form(const CurveTriple& t);

/// Replayable certificate: applying `moves` to `start` yields `end`.
struct ReductionTrace {
    long long k = 0;
    long long m = 0;
    CurveTriple start;
    std::vector<Move> moves;
    CurveTriple end;
};

CurveTriple apply_move(const CurveTriple& t, const Move& move);

/// Applies trace.moves to trace.start and returns the final triple
/// (independent of how the trace was built).
CurveTriple replay(const ReductionTrace& trace);

/// Certified reduction of tau_{2k,m} to the CP^2 normal form:
/// 2k+1 backward slides on pair (1,2), then (m-1)/2 rounds of
/// {forward slide on pair (2,3), sign flip on component 3}, then 3 backward
/// slides on pair (1,2). Requires k >= 0 and m odd >= 1; throws
/// std::logic_error if the end state is not the normal form.
ReductionTrace reduce_to_cp2(long long k, long long m);

}  // namespace rhb
