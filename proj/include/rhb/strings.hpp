#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rhb/bigint.hpp"

namespace rhb {

/// Framing coefficients (a_1,...,a_n) of a linear plumbing chain.
/// The empty string is allowed; it is the terminal state of blowing down (1).
class PlumbingString {
public:
    PlumbingString() = default;
    explicit PlumbingString(std::vector<Int> entries) : entries_(std::move(entries)) {}
    PlumbingString(std::initializer_list<Int> entries) : entries_(entries) {}

    const std::vector<Int>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    /// 1-based access, matching the paper's a_1..a_n indexing.
    const Int& at(std::size_t pos) const;

    bool all_entries_at_least(long long bound) const;

    bool operator==(const PlumbingString& other) const = default;

private:
    std::vector<Int> entries_;
};

/// s_{k,m} = (2,(2^[m-1],m+2)^[k+1],2,2,(2^[m-1],m+2)^[k+1]); k >= -1, m >= 1.
PlumbingString make_s(long long k, long long m);

/// s'_{k,m}: s_{k,m} with the entry at position (k+1)m+2 changed from 2 to 1; k >= -1, m >= 1.
PlumbingString make_s_prime(long long k, long long m);

/// s''_{k,m} = (2^[m-1],1,m+2,(2^[m-1],m+2)^[k],2^[m],1,m+2,(2^[m-1],m+2)^[k]); k >= 0, m >= 1.
/// Differs from s_{k,m} by 2 -> 1 at positions m and (k+2)m+2.
PlumbingString make_s_doubleprime(long long k, long long m);

/// One blow-down of the 1-entry at 1-based position pos:
///   (...,a,1,b,...) -> (...,a-1,b-1,...)
///   (1,b,...) -> (b-1,...)       (...,a,1) -> (...,a-1)       (1) -> ()
PlumbingString blow_down_once(const PlumbingString& s, std::size_t pos);

struct BlowDownResult {
    bool reaches_zero = false;
    std::vector<std::size_t> moves;  // 1-based positions, relative to the string at each step
};

/// Repeatedly blows down the leftmost 1-entry; reports whether exactly (0) is reached.
BlowDownResult blows_down_to_zero(const PlumbingString& s);

/// Parses the repeat-block literal syntax, e.g. "2,(2^2,5)^3,2,2".
/// Grammar: LIST := ENTRY ("," ENTRY)*;
///          ENTRY := INT | INT "^" INT | "(" LIST ")" "^" INT.
PlumbingString parse_plumbing_string(std::string_view text);

/// Plain comma-separated form, e.g. "2,3,2,2,3".
std::string format_plumbing_string(const PlumbingString& s);

}  // namespace rhb
