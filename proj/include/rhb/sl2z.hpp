#pragma once

#include <optional>
#include <string>
#include <utility>

#include "rhb/bigint.hpp"
#include "rhb/strings.hpp"

namespace rhb {

/// 2x2 integer matrix, row-major ((a,b),(c,d)).
struct Mat2 {
    Int a, b, c, d;

    static Mat2 identity() { return {1, 0, 0, 1}; }

    Int det() const { return a * d - b * c; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    bool operator==(const Mat2& o) const = default;
};

/// Column vector of homology coordinates w.r.t. the basis (l_1, m_1).
struct Vec2 {
    Int x, y;
    bool operator==(const Vec2& o) const = default;
};

/// A_m = ((m,-1),(1,0)), the gluing matrix of an m-framed chain component.
inline Mat2 matrix_A(const Int& m) { return {m, -1, 1, 0}; }

/// A_{a_1} ... A_{a_n}, left to right. Empty string gives the identity.
Mat2 string_product(const PlumbingString& s);

/// Coordinates of the meridian mu_t: second column of A_{a_1} ... A_{a_t}.
/// t is 1-based, 1 <= t <= n.
Vec2 meridian_coords(const PlumbingString& s, std::size_t t);

/// Lens space L(p,q), normalized: p >= 0; 0 <= q < p and gcd(p,q) = 1 when
/// p >= 2; L(0,1) is S^1 x S^2 and L(1,0) is S^3.
struct LensSpace {
    Int p;
    Int q;
    bool operator==(const LensSpace& o) const = default;
    std::string str() const { return "L(" + p.str() + "," + q.str() + ")"; }
};

/// Normalizes (p,q) into the canonical representative above.
LensSpace lens_space(Int p, Int q);

/// Boundary lens space of the plumbing on s: L(p, p-q) for first column (p,q).
LensSpace lens_from_string(const PlumbingString& s);

/// Orientation-preserving diffeomorphism: equal p and q1 = q2 or q1 q2 = 1 mod p.
bool lens_equivalent(const LensSpace& l1, const LensSpace& l2);

/// Coprime p > q >= 1 with L equivalent to L(p^2, pq-1), when such a pair
/// exists (smallest q); otherwise nullopt.
std::optional<std::pair<Int, Int>> lens_of_form_p2_pq_minus_1(const LensSpace& lens);

}  // namespace rhb
