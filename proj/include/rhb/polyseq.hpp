#pragma once

#include <limits>
#include <string>
#include <vector>

#include "rhb/bigint.hpp"
#include "rhb/sl2z.hpp"

namespace rhb {

/// Univariate integer polynomial, dense coefficients with constant term first.
/// Canonical form has no trailing zero coefficients; the zero polynomial has
/// an empty coefficient list and degree kDegreeOfZero.
class IntPoly {
public:
    static constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

    IntPoly() = default;
    IntPoly(std::initializer_list<Int> coeffs) : coeffs_(coeffs) { trim(); }
    explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPoly constant(Int c) { return IntPoly({std::move(c)}); }
    static IntPoly x() { return IntPoly({Int(0), Int(1)}); }

    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? kDegreeOfZero : static_cast<int>(coeffs_.size()) - 1; }
    Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;

    bool operator==(const IntPoly& o) const = default;

    /// Horner evaluation at an integer point.
    Int operator()(const Int& x0) const;

    /// Human-readable form, e.g. "x^2 + 2x + 2"; "0" for the zero polynomial.
    std::string str() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

inline Int eval_at(const IntPoly& poly, const Int& x0) { return poly(x0); }

/// 2x2 matrix over Z[x], row-major.
struct PolyMat2 {
    IntPoly a, b, c, d;

    static PolyMat2 identity();

    IntPoly det() const { return a * d - b * c; }

    PolyMat2 operator*(const PolyMat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    Mat2 operator()(const Int& x0) const { return {a(x0), b(x0), c(x0), d(x0)}; }

    bool operator==(const PolyMat2& o) const = default;
};

/// C = ((x+1,-1),(x,-1)); det C = -1, and C^2 evaluated at m equals A_2^{m-1} A_{m+2}.
PolyMat2 matrix_C();

/// The sequences defined by f_{l+2} = x f_{l+1} + f_l from the base rows
///   l=-1: P=-x+2, Q=1, S=1-x, T=1        l=0: P=2, Q=1, S=1, T=0.
/// Defined for all integer l (downward via f_l = f_{l+2} - x f_{l+1}).
IntPoly seq_P(long long l);
IntPoly seq_Q(long long l);
IntPoly seq_S(long long l);
IntPoly seq_T(long long l);

/// M_l = A_2 C^l = ((P_l, -Q_{l-1}), (Q_l, -T_l)); computed both from the
/// sequences and as the matrix power, and checked to agree. Requires l >= -1.
PolyMat2 matrix_M(long long l);

/// Exact polynomial identities, checked for every admissible l up to l_max:
///   1: P_{l+1} - P_l = x Q_l            2: Q_{l+1} - Q_l = x T_{l+1}
///   3: Q_{l+1} + Q_l = P_{l+1}          4: T_{l+1} + T_l = Q_l
///   5: P_{l+1} Q_l - P_l Q_{l+1} = (-1)^{l+1} x
///   6: Q_{2l} Q_{2l-1} - P_{2l} T_{2l} = 1
///   7: P_{2l} T_{2l-1} - Q_{2l-1}^2 = 1
bool verify_identity(int id, long long l_max);

}  // namespace rhb
