#include "rhb/strings.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rhb {

const Int& PlumbingString::at(std::size_t pos) const {
    if (pos < 1 || pos > entries_.size())
        throw std::invalid_argument("PlumbingString::at: position out of range");
    return entries_[pos - 1];
}

bool PlumbingString::all_entries_at_least(long long bound) const {
    for (const Int& a : entries_)
        if (a < bound) return false;
    return true;
}

namespace {

void check_km(long long k, long long m, long long k_min) {
    if (k < k_min)
        throw std::invalid_argument("k must be >= " + std::to_string(k_min));
    if (m < 1) throw std::invalid_argument("m must be >= 1");
}

// The block (2^[m-1], m+2), appended `count` times.
void append_blocks(std::vector<Int>& out, long long m, long long count) {
    for (long long i = 0; i < count; ++i) {
        out.insert(out.end(), static_cast<std::size_t>(m - 1), Int(2));
        out.emplace_back(m + 2);
    }
}

}  // namespace

PlumbingString make_s(long long k, long long m) {
    check_km(k, m, -1);
    std::vector<Int> e;
    e.reserve(static_cast<std::size_t>(3 + 2 * (k + 1) * m));
    e.emplace_back(2);
    append_blocks(e, m, k + 1);
    e.emplace_back(2);
    e.emplace_back(2);
    append_blocks(e, m, k + 1);
    return PlumbingString(std::move(e));
}

PlumbingString make_s_prime(long long k, long long m) {
    check_km(k, m, -1);
    std::vector<Int> e;
    e.reserve(static_cast<std::size_t>(3 + 2 * (k + 1) * m));
    e.emplace_back(2);
    append_blocks(e, m, k + 1);
    e.emplace_back(1);
    e.emplace_back(2);
    append_blocks(e, m, k + 1);
    return PlumbingString(std::move(e));
}

PlumbingString make_s_doubleprime(long long k, long long m) {
    // the definition repeats a block k times, so k = -1 has no expansion
    check_km(k, m, 0);
    std::vector<Int> e;
    e.reserve(static_cast<std::size_t>(3 + 2 * (k + 1) * m));
    e.insert(e.end(), static_cast<std::size_t>(m - 1), Int(2));
    e.emplace_back(1);
    e.emplace_back(m + 2);
    append_blocks(e, m, k);
    e.insert(e.end(), static_cast<std::size_t>(m), Int(2));
    e.emplace_back(1);
    e.emplace_back(m + 2);
    append_blocks(e, m, k);
    return PlumbingString(std::move(e));
}

PlumbingString blow_down_once(const PlumbingString& s, std::size_t pos) {
    const auto& e = s.entries();
    const std::size_t n = e.size();
    if (pos < 1 || pos > n)
        throw std::invalid_argument("blow_down_once: position out of range");
    if (e[pos - 1] != 1)
        throw std::invalid_argument("blow_down_once: entry at position is not 1");

    std::vector<Int> out;
    out.reserve(n - 1);
    if (n == 1) return PlumbingString{};  // lone (1) -> empty string
    if (pos == 1) {
        out.push_back(e[1] - 1);
        out.insert(out.end(), e.begin() + 2, e.end());
    } else if (pos == n) {
        out.insert(out.end(), e.begin(), e.end() - 2);
        out.push_back(e[n - 2] - 1);
    } else {
        out.insert(out.end(), e.begin(), e.begin() + static_cast<long>(pos) - 2);
        out.push_back(e[pos - 2] - 1);
        out.push_back(e[pos] - 1);
        out.insert(out.end(), e.begin() + static_cast<long>(pos) + 1, e.end());
    }
    return PlumbingString(std::move(out));
}

BlowDownResult blows_down_to_zero(const PlumbingString& s) {
    BlowDownResult result;
    PlumbingString cur = s;
    for (;;) {
        if (cur.size() == 1 && cur.entries()[0] == 0) {
            result.reaches_zero = true;
            return result;
        }
        std::size_t pos = 0;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (cur.entries()[i] == 1) {
                pos = i + 1;
                break;
            }
        }
        if (pos == 0) return result;  // no 1-entry left and not (0)
        result.moves.push_back(pos);
        cur = blow_down_once(cur, pos);
    }
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t i = 0;

    void skip_ws() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    }

    bool eof() {
        skip_ws();
        return i >= text.size();
    }

    char peek() {
        skip_ws();
        return i < text.size() ? text[i] : '\0';
    }

    void expect(char c) {
        if (peek() != c)
            throw std::invalid_argument(std::string("plumbing string: expected '") + c + "'");
        ++i;
    }

    Int parse_int() {
        skip_ws();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        std::size_t digits_from = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits_from)
            throw std::invalid_argument("plumbing string: expected an integer");
        return Int(std::string(text.substr(start, i - start)));
    }

    void parse_list(std::vector<Int>& out) {
        parse_entry(out);
        while (peek() == ',') {
            ++i;
            parse_entry(out);
        }
    }

    void parse_entry(std::vector<Int>& out) {
        std::vector<Int> group;
        if (peek() == '(') {
            ++i;
            parse_list(group);
            expect(')');
            expect('^');
        } else {
            group.push_back(parse_int());
            if (peek() != '^') {  // plain integer entry
                out.push_back(std::move(group.front()));
                return;
            }
            ++i;
        }
        Int count = parse_int();
        if (count < 0)
            throw std::invalid_argument("plumbing string: negative repeat count");
        for (Int r = 0; r < count; ++r)
            out.insert(out.end(), group.begin(), group.end());
    }
};

}  // namespace

PlumbingString parse_plumbing_string(std::string_view text) {
    Parser p{text};
    std::vector<Int> out;
    if (p.eof()) return PlumbingString{};
    p.parse_list(out);
    if (!p.eof())
        throw std::invalid_argument("plumbing string: trailing characters");
    return PlumbingString(std::move(out));
}

std::string format_plumbing_string(const PlumbingString& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ',';
        os << s.entries()[i];
    }
    return os.str();
}

}  // namespace rhb
