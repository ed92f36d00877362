#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "rhb/bigint.hpp"
#include "rhb/strings.hpp"

namespace rhb {

/// Positive solution of p1^2 + p2^2 + p3^2 = 3 p1 p2 p3, stored sorted ascending.
struct MarkovTriple {
    std::array<Int, 3> p;

    MarkovTriple(Int a, Int b, Int c);

    bool operator==(const MarkovTriple& o) const = default;
    auto operator<=>(const MarkovTriple& o) const = default;
    std::string str() const;
};

/// All triples reachable from (1,1,1) by at most `depth` Vieta mutations
/// p_i -> 3 p_j p_k - p_i, deduplicated, sorted ascending.
std::vector<MarkovTriple> markov_tree(int depth);

enum class MarkovMembership { yes, no_below_bound };

/// Tree search over all triples with max entry <= search_bound. `yes` is
/// definitive; `no_below_bound` reports that the bounded search exhausted
/// without finding p.
MarkovMembership is_markov_number(const Int& p, const Int& search_bound);

/// For each i, the residue set {+-3 p_j p_k^{-1} mod p_i}; empty for p_i = 1.
/// The two signs collapse to one residue when equal; j/k order does not
/// matter because (p_j/p_k)^2 = -1 mod p_i on Markov triples.
std::array<std::vector<Int>, 3> markov_q_candidates(const MarkovTriple& t);

/// F_{2n-1} by F_1 = 1, F_3 = 2, F_{2n+3} = 3 F_{2n+1} - F_{2n-1}; n >= 1.
Int odd_fibonacci(long long n);

/// Boundary invariants of B(s_{k,m}): p = P_{2k+2}(m), q = Q_{2k+1}(m).
/// Cross-checked against the first column of M_{2k+2} A_2 M_{2k+2} at x=m,
/// which is (p^2, p Q_{2k+2}(m) + 1), and against lens_from_string(s_{k,m}).
/// Requires k >= 0, m >= 1.
std::pair<Int, Int> boundary_pq(long long k, long long m);

/// True iff p divides q^2 + 9; p >= 1.
bool divides_q2_plus_9(const Int& p, const Int& q);

/// Checks Q_{2k+1}^2 + 9 = P_{2k+2} T_{2k+1} + 8 both as polynomials and
/// evaluated at m.
bool q2_plus_9_identity_check(long long k, long long m);

/// hj([3^[k+1],5,3^[k],2]) = F_{2k+5}^2 / (F_{2k+5} F_{2k+3} - 1) and
/// boundary_pq(k,1) = (F_{2k+5}, F_{2k+3}). For k = -1 the string degenerates:
/// the dual of (2,2,2) is (4) and the boundary pair is (2,1). k >= -1.
bool verify_fibonacci_case(long long k);

/// The Owens string (3^[k+1], 5, 3^[k], 2); k >= 0.
PlumbingString owens_string(long long k);

enum class SymplecticStatus { yes, obstructed, unknown };

struct EmbeddingVerdict {
    long long k = 0;
    long long m = 0;
    Int p;
    Int q;
    bool smooth = true;  // Theorem level: every B(s_{k,m}) with m odd embeds smoothly
    SymplecticStatus symplectic = SymplecticStatus::unknown;
    MarkovMembership markov = MarkovMembership::no_below_bound;
    bool divides = false;  // p | q^2 + 9
    std::string reason;
};

std::string symplectic_status_name(SymplecticStatus s);
std::string markov_membership_name(MarkovMembership m);

/// k = -1 gives (p,q) = (2,1) and symplectic = yes (conic complement).
/// k >= 0: obstructed with reason "q2_plus_9" when p does not divide q^2+9;
/// the Markov membership is recorded with bound 10 p. m must be odd.
EmbeddingVerdict symplectic_verdict(long long k, long long m);

}  // namespace rhb
