#include "rhb/fraction.hpp"

#include <stdexcept>

namespace rhb {

Fraction::Fraction(Int numerator, Int denominator) : num(std::move(numerator)), den(std::move(denominator)) {
    if (den == 0) throw std::invalid_argument("Fraction: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Int g = gcd(num < 0 ? Int(-num) : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Fraction hj_evaluate(const PlumbingString& s) {
    if (s.empty()) throw std::invalid_argument("hj_evaluate: empty string");
    if (!s.all_entries_at_least(2))
        throw std::invalid_argument("hj_evaluate: all entries must be >= 2");
    const auto& e = s.entries();
    // right-to-left: [a_i, rest] = a_i - q/p = (a_i p - q) / p
    Int p = e.back(), q = 1;
    for (std::size_t i = e.size() - 1; i-- > 0;) {
        Int next = e[i] * p - q;
        q = p;
        p = next;
    }
    return Fraction(p, q);
}

PlumbingString hj_expand(const Int& p, const Int& q) {
    if (!(p > q && q >= 1)) throw std::invalid_argument("hj_expand: need p > q >= 1");
    if (gcd(p, q) != 1) throw std::invalid_argument("hj_expand: p and q must be coprime");
    std::vector<Int> entries;
    Int a = p, b = q;
    for (;;) {
        Int ceil_div = (a + b - 1) / b;
        entries.push_back(ceil_div);
        Int r = ceil_div * b - a;
        if (r == 0) break;
        a = b;
        b = r;
    }
    return PlumbingString(std::move(entries));
}

PlumbingString riemenschneider_dual(const PlumbingString& s) {
    if (s.empty()) throw std::invalid_argument("riemenschneider_dual: empty string");
    if (!s.all_entries_at_least(2))
        throw std::invalid_argument("riemenschneider_dual: all entries must be >= 2");

    const auto& e = s.entries();
    // Row i spans columns [start_i, start_i + a_i - 2]; the next row starts at
    // the column of the previous row's last dot. Entry widths a_i - 1 are kept
    // as size_t: the dual is only used at desk scale.
    std::vector<std::size_t> width(e.size());
    std::size_t start = 0, columns = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        width[i] = static_cast<std::size_t>(static_cast<long long>(e[i]) - 1);
        if (i) start += width[i - 1] - 1;
        columns = start + width[i];
    }
    std::vector<Int> counts(columns, Int(0));
    start = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) start += width[i - 1] - 1;
        for (std::size_t j = start; j < start + width[i]; ++j) counts[j] += 1;
    }
    for (Int& c : counts) c += 1;
    return PlumbingString(std::move(counts));
}

}  // namespace rhb
