#include "rhb/obstruction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rhb/fraction.hpp"
#include "rhb/polyseq.hpp"
#include "rhb/sl2z.hpp"

namespace rhb {

MarkovTriple::MarkovTriple(Int a, Int b, Int c) : p{std::move(a), std::move(b), std::move(c)} {
    std::sort(p.begin(), p.end());
    if (p[0] < 1) throw std::invalid_argument("MarkovTriple: entries must be positive");
    if (p[0] * p[0] + p[1] * p[1] + p[2] * p[2] != 3 * p[0] * p[1] * p[2])
        throw std::invalid_argument("MarkovTriple: Markov equation fails for (" + p[0].str() +
                                    "," + p[1].str() + "," + p[2].str() + ")");
}

std::string MarkovTriple::str() const {
    return "(" + p[0].str() + "," + p[1].str() + "," + p[2].str() + ")";
}

namespace {

std::array<MarkovTriple, 3> mutations(const MarkovTriple& t) {
    const Int &a = t.p[0], &b = t.p[1], &c = t.p[2];
    return {MarkovTriple(3 * b * c - a, b, c),
            MarkovTriple(a, 3 * a * c - b, c),
            MarkovTriple(a, b, 3 * a * b - c)};
}

}  // namespace

std::vector<MarkovTriple> markov_tree(int depth) {
    if (depth < 0) throw std::invalid_argument("markov_tree: depth must be >= 0");
    std::set<std::array<Int, 3>> seen;
    std::vector<MarkovTriple> frontier{MarkovTriple(1, 1, 1)};
    seen.insert(frontier.front().p);
    for (int level = 0; level < depth; ++level) {
        std::vector<MarkovTriple> next;
        for (const MarkovTriple& t : frontier)
            for (const MarkovTriple& child : mutations(t))
                if (seen.insert(child.p).second) next.push_back(child);
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    std::vector<MarkovTriple> out;
    out.reserve(seen.size());
    for (const auto& p : seen) out.push_back(MarkovTriple(p[0], p[1], p[2]));
    std::sort(out.begin(), out.end());
    return out;
}

MarkovMembership is_markov_number(const Int& p, const Int& search_bound) {
    if (p < 1) throw std::invalid_argument("is_markov_number: p must be positive");
    if (p == 1 || p == 2) return MarkovMembership::yes;
    // enumerate every triple whose max entry stays <= search_bound; any Markov
    // number p appears as the max of some triple, so the search is exhaustive
    // below the bound
    std::set<std::array<Int, 3>> seen;
    std::vector<MarkovTriple> frontier{MarkovTriple(1, 1, 1)};
    seen.insert(frontier.front().p);
    while (!frontier.empty()) {
        std::vector<MarkovTriple> next;
        for (const MarkovTriple& t : frontier) {
            if (t.p[0] == p || t.p[1] == p || t.p[2] == p) return MarkovMembership::yes;
            for (const MarkovTriple& child : mutations(t)) {
                if (child.p[2] > search_bound) continue;
                if (seen.insert(child.p).second) next.push_back(child);
            }
        }
        frontier = std::move(next);
    }
    return MarkovMembership::no_below_bound;
}

std::array<std::vector<Int>, 3> markov_q_candidates(const MarkovTriple& t) {
    std::array<std::vector<Int>, 3> out;
    for (std::size_t i = 0; i < 3; ++i) {
        const Int& pi = t.p[i];
        if (pi == 1) continue;  // no residues mod 1
        const Int& pj = t.p[(i + 1) % 3];
        const Int& pk = t.p[(i + 2) % 3];
        Int plus = mod_floor(3 * pj * mod_inverse(pk, pi), pi);
        Int minus = mod_floor(-plus, pi);
        out[i].push_back(std::min(plus, minus));
        if (plus != minus) out[i].push_back(std::max(plus, minus));
    }
    return out;
}

Int odd_fibonacci(long long n) {
    if (n < 1) throw std::invalid_argument("odd_fibonacci: n must be >= 1");
    Int prev = 1, cur = 2;  // F_1, F_3
    if (n == 1) return prev;
    for (long long i = 2; i < n; ++i) {
        Int next = 3 * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::pair<Int, Int> boundary_pq(long long k, long long m) {
    if (k < 0) throw std::invalid_argument("boundary_pq: k must be >= 0");
    if (m < 1) throw std::invalid_argument("boundary_pq: m must be >= 1");
    Int x(m);
    Int p = seq_P(2 * k + 2)(x);
    Int q = seq_Q(2 * k + 1)(x);

    // route 1: full chain product M_{2k+2} A_2 M_{2k+2} at x=m has first
    // column (p^2, p Q_{2k+2}(m) + 1)
    Mat2 mk = matrix_M(2 * k + 2)(x);
    Mat2 full = mk * matrix_A(Int(2)) * mk;
    if (full.a != p * p || full.c != p * seq_Q(2 * k + 2)(x) + 1)
        throw std::logic_error("boundary_pq: matrix route disagrees at k=" + std::to_string(k) +
                               ", m=" + std::to_string(m));

    // route 2: the plumbing string itself
    if (!lens_equivalent(lens_from_string(make_s(k, m)), lens_space(p * p, p * q - 1)))
        throw std::logic_error("boundary_pq: lens route disagrees at k=" + std::to_string(k) +
                               ", m=" + std::to_string(m));
    return {std::move(p), std::move(q)};
}

bool divides_q2_plus_9(const Int& p, const Int& q) {
    if (p < 1) throw std::invalid_argument("divides_q2_plus_9: p must be >= 1");
    return (q * q + 9) % p == 0;
}

bool q2_plus_9_identity_check(long long k, long long m) {
    if (k < 0 || m < 1) throw std::invalid_argument("q2_plus_9_identity_check: need k >= 0, m >= 1");
    IntPoly nine = IntPoly::constant(9);
    IntPoly eight = IntPoly::constant(8);
    IntPoly lhs = seq_Q(2 * k + 1) * seq_Q(2 * k + 1) + nine;
    IntPoly rhs = seq_P(2 * k + 2) * seq_T(2 * k + 1) + eight;
    if (!(lhs == rhs)) return false;
    Int x(m);
    return lhs(x) == rhs(x);
}

PlumbingString owens_string(long long k) {
    if (k < 0) throw std::invalid_argument("owens_string: k must be >= 0");
    std::vector<Int> e;
    e.insert(e.end(), static_cast<std::size_t>(k + 1), Int(3));
    e.emplace_back(5);
    e.insert(e.end(), static_cast<std::size_t>(k), Int(3));
    e.emplace_back(2);
    return PlumbingString(std::move(e));
}

bool verify_fibonacci_case(long long k) {
    if (k < -1) throw std::invalid_argument("verify_fibonacci_case: k must be >= -1");
    Int f_hi = odd_fibonacci(k + 3);  // F_{2k+5}
    Int f_lo = odd_fibonacci(k + 2);  // F_{2k+3}

    if (k == -1) {
        // s_{-1,1} = (2,2,2); its dual (4) carries the Fibonacci fraction 4/1
        if (!(riemenschneider_dual(make_s(-1, 1)) == PlumbingString{4})) return false;
        if (!(hj_evaluate(PlumbingString{4}) == Fraction(f_hi * f_hi, f_hi * f_lo - 1))) return false;
        auto pq = lens_of_form_p2_pq_minus_1(lens_from_string(make_s(-1, 1)));
        return pq.has_value() && pq->first == f_hi && pq->second == f_lo;
    }

    if (!(hj_evaluate(owens_string(k)) == Fraction(f_hi * f_hi, f_hi * f_lo - 1))) return false;
    auto [p, q] = boundary_pq(k, 1);
    return p == f_hi && q == f_lo;
}

std::string symplectic_status_name(SymplecticStatus s) {
    switch (s) {
        case SymplecticStatus::yes: return "yes";
        case SymplecticStatus::obstructed: return "obstructed";
        case SymplecticStatus::unknown: return "unknown";
    }
    throw std::logic_error("symplectic_status_name: unreachable");
}

std::string markov_membership_name(MarkovMembership m) {
    return m == MarkovMembership::yes ? "yes" : "no_below_bound";
}

EmbeddingVerdict symplectic_verdict(long long k, long long m) {
    if (k < -1) throw std::invalid_argument("symplectic_verdict: k must be >= -1");
    if (m < 1 || m % 2 == 0)
        throw std::invalid_argument("symplectic_verdict: m must be odd and >= 1");

    EmbeddingVerdict v;
    v.k = k;
    v.m = m;

    if (k == -1) {
        // B(s_{-1,m}) = B_{2,1}, the complement of a conic neighborhood
        v.p = 2;
        v.q = 1;
        v.symplectic = SymplecticStatus::yes;
        v.markov = MarkovMembership::yes;
        v.divides = divides_q2_plus_9(v.p, v.q);
        v.reason = "conic_complement";
        return v;
    }

    auto [p, q] = boundary_pq(k, m);
    v.p = p;
    v.q = q;
    v.divides = divides_q2_plus_9(p, q);
    v.markov = is_markov_number(p, 10 * p);
    if (m >= 3 && p < Int(m) * m)
        throw std::logic_error("symplectic_verdict: growth bound P_{2k+2}(m) >= m^2 fails");
    if (!v.divides) {
        v.symplectic = SymplecticStatus::obstructed;
        v.reason = "q2_plus_9";
    } else if (v.markov == MarkovMembership::no_below_bound) {
        v.symplectic = SymplecticStatus::obstructed;
        v.reason = "not_markov_below_bound";
    } else {
        v.symplectic = SymplecticStatus::unknown;
        v.reason = "passes_necessary_conditions";
    }
    return v;
}

}  // namespace rhb
