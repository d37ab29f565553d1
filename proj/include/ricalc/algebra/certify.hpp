#pragma once
#include <vector>

#include "context.hpp"

namespace ricalc::alg {

enum class Tri { False, Unknown, True };

inline Tri operator&&(Tri a, Tri b) {
    if (a == Tri::False || b == Tri::False) return Tri::False;
    if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
    return Tri::True;
}

inline const char* to_string(Tri t) {
    switch (t) {
    case Tri::False: return "false";
    case Tri::Unknown: return "unknown";
    case Tri::True: return "true";
    }
    return "?";
}

// Lower bound on a single atom from the declared facts: (bound, strict).
inline bool atom_bound(const EntropicAtom& a, const Context& ctx, Rational& bound, bool& strict) {
    bool found = false;
    for (const auto& f : ctx.facts) {
        if (f.value.constant() != 0 || f.value.atoms().size() != 1) continue;
        const auto& [fa, w] = *f.value.atoms().begin();
        if (!(fa == a) || w <= 0) continue;
        Rational b = f.bound / w;
        if (!found || b > bound || (b == bound && f.strict)) {
            bound = b;
            strict = f.strict;
        }
        found = true;
    }
    return found;
}

inline bool atom_nonneg(const EntropicAtom& a, const Context& ctx) {
    if (a.whitelisted()) return true;
    Rational b;
    bool s = false;
    return atom_bound(a, ctx, b, s) && b >= 0;
}

inline bool atom_positive(const EntropicAtom& a, const Context& ctx) {
    Rational b;
    bool s = false;
    return atom_bound(a, ctx, b, s) && (b > 0 || (b == 0 && s));
}

namespace detail {

// c + shift >= 0 (or > 0) read off the formal form term by term.
inline bool formal_sign(const Coefficient& c, const Rational& shift, bool shift_strict, const Context& ctx, bool strict) {
    Rational k = c.constant() + shift;
    if (k < 0) return false;
    bool positive = k > 0 || shift_strict;
    for (const auto& [a, w] : c.atoms()) {
        if (w <= 0 || !atom_nonneg(a, ctx)) return false;
        if (atom_positive(a, ctx)) positive = true;
    }
    return !strict || positive;
}

} // namespace detail

// Entropies and (conditional) mutual informations among the labels of each
// purity declaration; these are the natural nonnegative atoms of that state.
inline std::vector<EntropicAtom> purity_candidates(const Context& ctx) {
    std::vector<EntropicAtom> out;
    for (const auto& [tag, d] : ctx.pure) {
        const auto n = d.labels.size();
        if (n > 6) continue;
        auto subset = [&](unsigned mask) {
            LabelGroup g;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1u) g.push_back(d.labels[i]);
            return g;
        };
        const unsigned full = (1u << n) - 1;
        for (unsigned m1 = 1; m1 <= full; ++m1) {
            LabelGroup s1 = subset(m1);
            if (d.given.empty()) out.emplace_back(AtomKind::H, std::vector<LabelGroup>{s1}, tag);
            else out.emplace_back(AtomKind::Hcond, std::vector<LabelGroup>{s1, d.given}, tag);
            for (unsigned m2 = m1 + 1; m2 <= full; ++m2) {
                if (m1 & m2) continue;
                LabelGroup s2 = subset(m2);
                if (d.given.empty()) out.emplace_back(AtomKind::Imutual, std::vector<LabelGroup>{s1, s2}, tag);
                else out.emplace_back(AtomKind::Icmi, std::vector<LabelGroup>{s1, s2, d.given}, tag);
            }
        }
    }
    return out;
}

// Certifies c >= 0 (or c > 0 when strict) from the context. `hints` are
// extra atoms that may be matched against the canonical value.
inline Tri certify(const Coefficient& c, const Context& ctx, bool strict, const std::vector<EntropicAtom>& hints = {}) {
    Canonical can = canonical(c, ctx);
    if (can.is_constant()) return (strict ? can.constant > 0 : can.constant >= 0) ? Tri::True : Tri::False;
    if (detail::formal_sign(c, 0, false, ctx, strict)) return Tri::True;

    for (const auto& f : ctx.facts) {
        Canonical cf = canonical(f.value, ctx);
        if (cf.is_constant()) continue;
        const auto& [coord, w] = *cf.coords.begin();
        auto it = can.coords.find(coord);
        if (it == can.coords.end()) continue;
        Rational lambda = it->second / w;
        if (lambda <= 0) continue;
        Coefficient rest = c - lambda * f.value;
        Canonical rc = canonical(rest, ctx);
        Rational shift = lambda * f.bound;
        if (rc.is_constant()) {
            Rational v = shift + rc.constant;
            if (strict ? (v > 0 || (v == 0 && f.strict)) : v >= 0) return Tri::True;
        } else if (detail::formal_sign(rest, shift, f.strict, ctx, strict)) {
            return Tri::True;
        }
    }

    std::vector<EntropicAtom> cands = hints;
    for (const auto& [a, w] : c.atoms()) cands.push_back(a);
    for (const auto& f : ctx.facts)
        for (const auto& [a, w] : f.value.atoms()) cands.push_back(a);
    for (const auto& a : purity_candidates(ctx)) cands.push_back(a);
    for (const auto& a : cands) {
        if (!atom_nonneg(a, ctx)) continue;
        Canonical ca = canonical(Coefficient(a), ctx);
        if (ca.is_constant()) continue;
        const auto& [coord, w] = *ca.coords.begin();
        auto it = can.coords.find(coord);
        if (it == can.coords.end()) continue;
        Rational lambda = it->second / w;
        if (lambda <= 0) continue;
        Canonical rest = can - ca * lambda;
        if (!rest.is_constant()) continue;
        if (strict ? (rest.constant > 0 || (rest.constant == 0 && atom_positive(a, ctx))) : rest.constant >= 0) return Tri::True;
    }
    return Tri::Unknown;
}

} // namespace ricalc::alg
