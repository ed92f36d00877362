#pragma once

#include <string>

#include "rhb/bigint.hpp"
#include "rhb/strings.hpp"

namespace rhb {

/// Rational number kept in lowest terms with positive denominator.
struct Fraction {
    Int num;
    Int den;

    Fraction() : num(0), den(1) {}
    Fraction(Int numerator, Int denominator);

    bool operator==(const Fraction& other) const = default;

    std::string str() const { return num.str() + "/" + den.str(); }
};

/// Hirzebruch-Jung value [a_1,...,a_n] = a_1 - 1/(a_2 - 1/(... - 1/a_n)).
/// Requires n >= 1 and every entry >= 2; the result satisfies p > q >= 1.
Fraction hj_evaluate(const PlumbingString& s);

/// Unique string with all entries >= 2 whose HJ value is p/q.
/// Requires gcd(p,q) = 1 and p > q >= 1. Greedy: a = ceil(p/q), recurse on (q, aq-p).
PlumbingString hj_expand(const Int& p, const Int& q);

/// Riemenschneider point-rule dual: if [s] = p/q then [dual] = p/(p-q).
/// Rows of a_i - 1 dots, each row starting under the last dot of the previous
/// one; dual entries are column counts plus one. Involutive.
PlumbingString riemenschneider_dual(const PlumbingString& s);

}  // namespace rhb
