#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace netautoma {

// A Life-Like rule B<x>/S<y>: two 9-bit membership sets over the neighbor
// density levels 0..8. The full rule space has 2^18 = 262,144 members.
struct Rule {
    std::uint16_t born = 0;     // bit L set: a dead cell at density level L is born
    std::uint16_t survive = 0;  // bit L set: an alive cell at density level L survives

    bool operator==(const Rule&) const = default;
};

inline constexpr std::uint32_t kRuleSpaceSize = 1u << 18;

// Packs a rule into an 18-bit index (born = low 9 bits, survive = high 9),
// used to enumerate or sample the rule space.
inline std::uint32_t rule_index(Rule r) {
    return static_cast<std::uint32_t>(r.born) | (static_cast<std::uint32_t>(r.survive) << 9);
}

inline Rule rule_from_index(std::uint32_t index) {
    if (index >= kRuleSpaceSize) throw std::invalid_argument("rule index out of range");
    return {static_cast<std::uint16_t>(index & 0x1ff),
            static_cast<std::uint16_t>((index >> 9) & 0x1ff)};
}

// Accepts "B<digits>/S<digits>" and "B<digits>-S<digits>"; digit groups may
// be empty ("B3-S" never survives). Digits must be 0..8 with no repeats.
inline Rule parse_rule(std::string_view text) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("bad rule '" + std::string(text) + "': " + why);
    };
    std::size_t i = 0;
    auto digits = [&](char terminator) {
        std::uint16_t mask = 0;
        while (i < text.size() && text[i] != terminator) {
            const char c = text[i++];
            if (c < '0' || c > '8') fail(std::string("unexpected character '") + c + "'");
            const std::uint16_t bit = 1u << (c - '0');
            if (mask & bit) fail(std::string("repeated digit '") + c + "'");
            mask |= bit;
        }
        return mask;
    };
    if (i >= text.size() || text[i] != 'B') fail("expected leading 'B'");
    ++i;
    const char sep = text.find('/') != std::string_view::npos ? '/' : '-';
    Rule r;
    r.born = digits(sep);
    if (i >= text.size()) fail("missing survive group");
    ++i;  // separator
    if (i >= text.size() || text[i] != 'S') fail("expected 'S' after separator");
    ++i;
    r.survive = digits('\0');
    return r;
}

// Canonical form "B<digits>-S<digits>" with digits strictly increasing;
// parse_rule(canonical_name(r)) == r for every rule.
inline std::string canonical_name(Rule r) {
    std::string out = "B";
    for (int l = 0; l <= 8; ++l)
        if (r.born >> l & 1) out += static_cast<char>('0' + l);
    out += "-S";
    for (int l = 0; l <= 8; ++l)
        if (r.survive >> l & 1) out += static_cast<char>('0' + l);
    return out;
}

}  // namespace netautoma
