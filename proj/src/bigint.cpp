#include "rhb/bigint.hpp"

namespace rhb {

Int mod_inverse(const Int& a, const Int& p) {
    if (p <= 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
    // extended Euclid on (a mod p, p)
    Int r0 = mod_floor(a, p), r1 = p;
    Int s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
    return mod_floor(s0, p);
}

Int parse_decimal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_decimal: empty string");
    std::size_t i = (text[0] == '-') ? 1 : 0;
    if (i == text.size()) throw std::invalid_argument("parse_decimal: sign without digits");
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("parse_decimal: invalid character in '" + text + "'");
    }
    return Int(text);
}

}  // namespace rhb
