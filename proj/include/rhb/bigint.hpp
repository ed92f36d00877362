#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace rhb {

using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::gcd;

/// Floor square root; input must be >= 0.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

/// Representative of a mod p in [0, p); requires p > 0.
inline Int mod_floor(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    return r;
}

/// Inverse of a mod p; throws std::domain_error when gcd(a,p) != 1.
Int mod_inverse(const Int& a, const Int& p);

inline std::string to_decimal(const Int& n) { return n.str(); }

/// Parses a decimal integer with optional leading '-'; rejects anything else.
Int parse_decimal(const std::string& text);

}  // namespace rhb
