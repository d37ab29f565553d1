#pragma once
#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "rational.hpp"

namespace ricalc::alg {

enum class AtomKind { H, Hcond, Imutual, Icoh, Icmi };

using LabelGroup = std::vector<std::string>;  // sorted, duplicate free

inline std::size_t arity(AtomKind k) {
    switch (k) {
    case AtomKind::H: return 1;
    case AtomKind::Icmi: return 3;
    default: return 2;
    }
}

// Entropic constant such as I(A;B)@psi. Groups are label sets; symmetric
// kinds order their symmetric groups so that I(A;B) == I(B;A).
class EntropicAtom {
public:
    EntropicAtom() = default;
    EntropicAtom(AtomKind kind, std::vector<LabelGroup> groups, std::string tag) : kind_(kind), groups_(std::move(groups)), tag_(std::move(tag)) {
        if (groups_.size() != arity(kind_)) fail(ErrorKind::ParseError, "wrong number of label groups for entropic atom");
        if (tag_.empty()) fail(ErrorKind::ParseError, "entropic atom without a state tag");
        std::set<std::string> seen;
        for (auto& g : groups_) {
            std::sort(g.begin(), g.end());
            g.erase(std::unique(g.begin(), g.end()), g.end());
            if (g.empty()) fail(ErrorKind::ParseError, "empty label group");
            for (const auto& l : g)
                if (!seen.insert(l).second) fail(ErrorKind::OverlappingGroups, "label '" + l + "' appears in two groups");
        }
        if (kind_ == AtomKind::Imutual || kind_ == AtomKind::Icmi)
            if (groups_[1] < groups_[0]) std::swap(groups_[0], groups_[1]);
    }

    AtomKind kind() const { return kind_; }
    const std::vector<LabelGroup>& groups() const { return groups_; }
    const std::string& tag() const { return tag_; }

    // Nonnegative for every state (the scaling whitelist).
    bool whitelisted() const { return kind_ != AtomKind::Icoh; }

    auto key() const { return std::tie(tag_, kind_, groups_); }
    bool operator<(const EntropicAtom& o) const { return key() < o.key(); }
    bool operator==(const EntropicAtom& o) const { return key() == o.key(); }

private:
    AtomKind kind_ = AtomKind::H;
    std::vector<LabelGroup> groups_;
    std::string tag_;
};

// Label grammar: an uppercase letter, then digits or primes, then an optional
// subscript "_c" (one alphanumeric character, possibly followed by digits/primes).
inline bool parse_label(const std::string& s, std::size_t& pos, std::string& out) {
    if (pos >= s.size() || !std::isupper(static_cast<unsigned char>(s[pos]))) return false;
    std::size_t start = pos++;
    auto tail = [&] {
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '\'')) ++pos;
    };
    tail();
    if (pos + 1 < s.size() && s[pos] == '_' && std::isalnum(static_cast<unsigned char>(s[pos + 1]))) {
        pos += 2;
        tail();
    }
    out = s.substr(start, pos - start);
    return true;
}

inline bool is_label(const std::string& s) {
    std::size_t pos = 0;
    std::string out;
    return parse_label(s, pos, out) && pos == s.size();
}

// "ABE", "A',E,E'", "X_BB".
inline LabelGroup parse_group(const std::string& s) {
    LabelGroup g;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] == ',' || std::isspace(static_cast<unsigned char>(s[pos]))) {
            ++pos;
            continue;
        }
        std::string l;
        if (!parse_label(s, pos, l)) fail(ErrorKind::ParseError, "bad label group '" + s + "'");
        g.push_back(l);
    }
    if (g.empty()) fail(ErrorKind::ParseError, "empty label group");
    return g;
}

inline std::string group_to_string(const LabelGroup& g) {
    std::string out;
    for (const auto& l : g) out += l;
    return out;
}

inline std::string to_string(const EntropicAtom& a) {
    const auto& g = a.groups();
    std::string body;
    switch (a.kind()) {
    case AtomKind::H: body = "H(" + group_to_string(g[0]) + ")"; break;
    case AtomKind::Hcond: body = "H(" + group_to_string(g[0]) + "|" + group_to_string(g[1]) + ")"; break;
    case AtomKind::Imutual: body = "I(" + group_to_string(g[0]) + ";" + group_to_string(g[1]) + ")"; break;
    case AtomKind::Icoh: body = "Icoh(" + group_to_string(g[0]) + ">" + group_to_string(g[1]) + ")"; break;
    case AtomKind::Icmi:
        body = "I(" + group_to_string(g[0]) + ";" + group_to_string(g[1]) + "|" + group_to_string(g[2]) + ")";
        break;
    }
    return body + "@" + a.tag();
}

// Joint-entropy coordinate h(S)@tag.
struct Coord {
    std::string tag;
    LabelGroup labels;
    bool operator<(const Coord& o) const { return std::tie(tag, labels) < std::tie(o.tag, o.labels); }
    bool operator==(const Coord& o) const { return tag == o.tag && labels == o.labels; }
};

inline LabelGroup unite(LabelGroup a, const LabelGroup& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

// Expansion of an atom into signed joint-entropy coordinates.
inline std::vector<std::pair<Coord, int>> expand(const EntropicAtom& a) {
    const auto& g = a.groups();
    const auto& t = a.tag();
    switch (a.kind()) {
    case AtomKind::H: return {{{t, g[0]}, 1}};
    case AtomKind::Hcond: return {{{t, unite(g[0], g[1])}, 1}, {{t, g[1]}, -1}};
    case AtomKind::Imutual: return {{{t, g[0]}, 1}, {{t, g[1]}, 1}, {{t, unite(g[0], g[1])}, -1}};
    case AtomKind::Icoh: return {{{t, g[1]}, 1}, {{t, unite(g[0], g[1])}, -1}};
    case AtomKind::Icmi:
        return {{{t, unite(g[0], g[2])}, 1}, {{t, unite(g[1], g[2])}, 1}, {{t, unite(unite(g[0], g[1]), g[2])}, -1}, {{t, g[2]}, -1}};
    }
    return {};
}

} // namespace ricalc::alg
