#include "rhb/sl2z.hpp"

#include <stdexcept>

namespace rhb {

Mat2 string_product(const PlumbingString& s) {
    Mat2 m = Mat2::identity();
    for (const Int& a : s.entries()) m = m * matrix_A(a);
    return m;
}

Vec2 meridian_coords(const PlumbingString& s, std::size_t t) {
    if (t < 1 || t > s.size())
        throw std::invalid_argument("meridian_coords: index out of range");
    Mat2 m = Mat2::identity();
    for (std::size_t i = 0; i < t; ++i) m = m * matrix_A(s.entries()[i]);
    return {m.b, m.d};
}

LensSpace lens_space(Int p, Int q) {
    if (p < 0) {
        p = -p;
        q = -q;
    }
    if (p == 0) {
        if (q == 0) throw std::invalid_argument("lens_space: L(0,0) is not a lens space");
        return {Int(0), Int(1)};
    }
    if (p == 1) return {Int(1), Int(0)};
    q = mod_floor(q, p);
    if (gcd(p, q) != 1)
        throw std::invalid_argument("lens_space: p and q must be coprime");
    return {std::move(p), std::move(q)};
}

LensSpace lens_from_string(const PlumbingString& s) {
    if (s.empty()) throw std::invalid_argument("lens_from_string: empty string");
    Mat2 m = string_product(s);
    return lens_space(m.a, m.a - m.c);  // L(p, p-q) for first column (p,q)
}

bool lens_equivalent(const LensSpace& l1, const LensSpace& l2) {
    if (l1.p != l2.p) return false;
    if (l1.p <= 1) return true;
    if (l1.q == l2.q) return true;
    return mod_floor(l1.q * l2.q, l1.p) == 1;
}

std::optional<std::pair<Int, Int>> lens_of_form_p2_pq_minus_1(const LensSpace& lens) {
    const Int& big_p = lens.p;
    if (big_p < 4) return std::nullopt;  // need p >= 2, so p^2 >= 4
    Int p = isqrt(big_p);
    if (p * p != big_p) return std::nullopt;

    // L(p^2, pq-1) ~ lens requires q_lens = -1 mod p in both branches:
    // either pq-1 = q_lens exactly, or (pq-1) q_lens = 1 mod p^2 with
    // q = -t mod p where t = (q_lens+1)/p.
    if (mod_floor(lens.q + 1, p) != 0) return std::nullopt;
    Int t = (lens.q + 1) / p;

    Int best = -1;
    for (const Int& q : {t, mod_floor(-t, p)}) {
        if (q < 1 || q >= p || gcd(p, q) != 1) continue;
        if (!lens_equivalent(lens, lens_space(p * p, p * q - 1))) continue;
        if (best < 0 || q < best) best = q;
    }
    if (best < 0) return std::nullopt;
    return std::make_pair(p, best);
}

}  // namespace rhb
