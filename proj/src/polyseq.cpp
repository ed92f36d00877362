#include "rhb/polyseq.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace rhb {

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly{};
    std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> out(coeffs_);
    for (Int& c : out) c = -c;
    return IntPoly(std::move(out));
}

Int IntPoly::operator()(const Int& x0) const {
    Int r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x0 + coeffs_[i];
    return r;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        Int abs_c = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || abs_c != 1) os << abs_c;
        if (i >= 1) {
            os << 'x';
            if (i >= 2) os << '^' << i;
        }
    }
    return os.str();
}

PolyMat2 PolyMat2::identity() {
    return {IntPoly::constant(1), IntPoly{}, IntPoly{}, IntPoly::constant(1)};
}

PolyMat2 matrix_C() {
    return {IntPoly({1, 1}), IntPoly::constant(-1), IntPoly::x(), IntPoly::constant(-1)};
}

namespace {

// C^{-1} = ((1,-1),(x,-x-1)); det C = -1 keeps the inverse in Z[x].
PolyMat2 matrix_C_inverse() {
    return {IntPoly::constant(1), IntPoly::constant(-1), IntPoly::x(), IntPoly({-1, -1})};
}

PolyMat2 matrix_A2_poly() {
    return {IntPoly::constant(2), IntPoly::constant(-1), IntPoly::constant(1), IntPoly{}};
}

class SequenceTable {
public:
    SequenceTable(IntPoly at_minus1, IntPoly at_zero)
        : up_{std::move(at_minus1), std::move(at_zero)} {}

    IntPoly get(long long l) {
        std::lock_guard<std::mutex> lock(mu_);
        if (l >= -1) {
            std::size_t idx = static_cast<std::size_t>(l + 1);
            while (up_.size() <= idx) {
                std::size_t n = up_.size();
                up_.push_back(IntPoly::x() * up_[n - 1] + up_[n - 2]);
            }
            return up_[idx];
        }
        std::size_t idx = static_cast<std::size_t>(-l - 2);  // l = -2 -> 0
        while (down_.size() <= idx) {
            const IntPoly& f1 = down_.empty() ? up_[0] : down_.back();        // f_{l+1}
            const IntPoly& f2 = down_.size() <= 1 ? up_[1 - down_.size()] : down_[down_.size() - 2];  // f_{l+2}
            down_.push_back(f2 - IntPoly::x() * f1);
        }
        return down_[idx];
    }

private:
    std::mutex mu_;
    std::vector<IntPoly> up_;    // index i holds f_{i-1}
    std::vector<IntPoly> down_;  // index i holds f_{-2-i}
};

}  // namespace

IntPoly seq_P(long long l) {
    static SequenceTable table(IntPoly({2, -1}), IntPoly::constant(2));
    return table.get(l);
}

IntPoly seq_Q(long long l) {
    static SequenceTable table(IntPoly::constant(1), IntPoly::constant(1));
    return table.get(l);
}

IntPoly seq_S(long long l) {
    static SequenceTable table(IntPoly({1, -1}), IntPoly::constant(1));
    return table.get(l);
}

IntPoly seq_T(long long l) {
    static SequenceTable table(IntPoly::constant(1), IntPoly{});
    return table.get(l);
}

PolyMat2 matrix_M(long long l) {
    if (l < -1) throw std::invalid_argument("matrix_M: l must be >= -1");
    PolyMat2 from_sequences{seq_P(l), -seq_S(l), seq_Q(l), -seq_T(l)};

    PolyMat2 power = matrix_A2_poly();
    if (l >= 0) {
        PolyMat2 c = matrix_C();
        for (long long i = 0; i < l; ++i) power = power * c;
    } else {
        power = power * matrix_C_inverse();
    }
    if (!(from_sequences == power))
        throw std::logic_error("matrix_M: sequence table and A_2 C^l disagree at l=" + std::to_string(l));
    return from_sequences;
}

bool verify_identity(int id, long long l_max) {
    if (l_max < 1) throw std::invalid_argument("verify_identity: l_max must be >= 1");
    const IntPoly x = IntPoly::x();
    const IntPoly one = IntPoly::constant(1);
    long long l_min = (id >= 6) ? 0 : -1;
    for (long long l = l_min; l <= l_max; ++l) {
        bool ok = false;
        switch (id) {
            case 1: ok = seq_P(l + 1) - seq_P(l) == x * seq_Q(l); break;
            case 2: ok = seq_Q(l + 1) - seq_Q(l) == x * seq_T(l + 1); break;
            case 3: ok = seq_Q(l + 1) + seq_Q(l) == seq_P(l + 1); break;
            case 4: ok = seq_T(l + 1) + seq_T(l) == seq_Q(l); break;
            case 5: {
                IntPoly rhs = (l % 2 == 0) ? -x : x;  // (-1)^{l+1} x
                ok = seq_P(l + 1) * seq_Q(l) - seq_P(l) * seq_Q(l + 1) == rhs;
                break;
            }
            case 6: ok = seq_Q(2 * l) * seq_Q(2 * l - 1) - seq_P(2 * l) * seq_T(2 * l) == one; break;
            case 7: ok = seq_P(2 * l) * seq_T(2 * l - 1) - seq_Q(2 * l - 1) * seq_Q(2 * l - 1) == one; break;
            default: throw std::invalid_argument("verify_identity: id must be 1..7");
        }
        if (!ok) return false;
    }
    return true;
}

}  // namespace rhb
