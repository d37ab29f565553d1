#pragma once
#include <map>
#include <set>
#include <string>

#include "certify.hpp"
#include "symbol.hpp"

namespace ricalc::alg {

// Coefficient-weighted bag of resources with sublinear (o) and unbounded (inf) parts.
struct ResourceExpr {
    std::map<ResourceSymbol, Coefficient> terms;
    std::set<ResourceSymbol> o;
    std::set<ResourceSymbol> inf;
    std::map<ResourceSymbol, Flag> flags;

    static ResourceExpr term(const ResourceSymbol& s, Coefficient c = Coefficient(1), Flag f = Flag::None) {
        ResourceExpr e;
        if (!c.is_zero()) {
            e.terms[s] = std::move(c);
            if (f != Flag::None) e.set_flag(s, f);
        }
        return e;
    }
    static ResourceExpr sublinear(const ResourceSymbol& s) {
        ResourceExpr e;
        e.o.insert(s);
        return e;
    }
    static ResourceExpr unbounded(const ResourceSymbol& s) {
        ResourceExpr e;
        e.inf.insert(s);
        return e;
    }

    bool empty() const { return terms.empty() && o.empty() && inf.empty(); }

    Coefficient coefficient(const ResourceSymbol& s) const {
        auto it = terms.find(s);
        return it == terms.end() ? Coefficient() : it->second;
    }
    Flag flag(const ResourceSymbol& s) const {
        auto it = flags.find(s);
        return it == flags.end() ? Flag::None : it->second;
    }
    void set_flag(const ResourceSymbol& s, Flag f) {
        if (f == Flag::None) {
            flags.erase(s);
            return;
        }
        if (!s.is_classical()) fail(ErrorKind::SchemaMismatch, "decoupling flag on non-classical term " + to_string(s));
        flags[s] = f;
    }
    bool has_protected() const {
        for (const auto& [s, c] : terms) if (s.is_protected()) return true;
        for (const auto& s : o) if (s.is_protected()) return true;
        for (const auto& s : inf) if (s.is_protected()) return true;
        return false;
    }
    std::set<ResourceSymbol> support() const {
        std::set<ResourceSymbol> out;
        for (const auto& [s, c] : terms) out.insert(s);
        out.insert(o.begin(), o.end());
        out.insert(inf.begin(), inf.end());
        return out;
    }

    // Restores the absorption invariants: inf absorbs finite and o parts,
    // finite nonzero parts absorb o parts, flags live on finite and o parts.
    void tidy() {
        for (auto it = terms.begin(); it != terms.end();)
            it = (it->second.is_zero() || inf.count(it->first)) ? terms.erase(it) : std::next(it);
        for (auto it = o.begin(); it != o.end();) it = (inf.count(*it) || terms.count(*it)) ? o.erase(it) : std::next(it);
        for (auto it = flags.begin(); it != flags.end();)
            it = (terms.count(it->first) || o.count(it->first)) ? std::next(it) : flags.erase(it);
    }
};

// Minimum over every contribution, including cancelled and o parts.
inline Flag combine_flags(const ResourceExpr& a, const ResourceExpr& b, const ResourceSymbol& s) {
    bool in_a = a.terms.count(s) || a.o.count(s), in_b = b.terms.count(s) || b.o.count(s);
    if (in_a && in_b) return std::min(a.flag(s), b.flag(s));
    return in_a ? a.flag(s) : b.flag(s);
}

// Coefficient-wise sum. A symbol whose parts cancel exactly leaves an o term.
inline ResourceExpr add(const ResourceExpr& a, const ResourceExpr& b) {
    ResourceExpr out;
    out.inf = a.inf;
    out.inf.insert(b.inf.begin(), b.inf.end());
    out.o = a.o;
    out.o.insert(b.o.begin(), b.o.end());
    std::set<ResourceSymbol> keys;
    for (const auto& [s, c] : a.terms) keys.insert(s);
    for (const auto& [s, c] : b.terms) keys.insert(s);
    for (const auto& s : keys) {
        Coefficient sum = a.coefficient(s) + b.coefficient(s);
        if (sum.is_zero()) out.o.insert(s);
        else out.terms[s] = sum;
    }
    for (const auto& s : out.o) keys.insert(s);
    for (const auto& s : keys) {
        Flag f = combine_flags(a, b, s);
        if (f != Flag::None) out.flags[s] = f;
    }
    out.tidy();
    return out;
}

inline ResourceExpr operator+(const ResourceExpr& a, const ResourceExpr& b) { return add(a, b); }

// Finite parts negated; o and inf parts kept.
inline ResourceExpr negate(const ResourceExpr& a) {
    ResourceExpr out = a;
    for (auto& [s, c] : out.terms) c = -c;
    return out;
}

// z * a. z must be certified nonnegative; atom x atom products are refused.
inline ResourceExpr scale(const Coefficient& z, const ResourceExpr& a, const Context& ctx = {}) {
    if (z.is_rational() && z.constant() < 0) fail(ErrorKind::NegativeScale, "negative scale factor " + to_string(z));
    if (certify(z, ctx, false) != Tri::True) fail(ErrorKind::NegativeScale, "scale factor not certified nonnegative: " + to_string(z));
    if (z.is_zero()) return {};
    ResourceExpr out = a;
    for (auto& [s, c] : out.terms) c = multiply(z, c);
    return out;
}

// Compact representative of a coefficient modulo the basis.
inline Coefficient reduce(const Coefficient& c, const Context& basis) {
    Canonical can = canonical(c, basis);
    if (can.is_constant()) return Coefficient(can.constant);
    Coefficient alt = from_canonical(can);
    return alt.atoms().size() < c.atoms().size() ? alt : c;
}

inline ResourceExpr normalize(const ResourceExpr& a, const IdentityBasis& basis = {}) {
    ResourceExpr e = a;
    if (basis.coherent_identity) {
        ResourceSymbol cobit = ResourceSymbol::cobit();
        auto it = e.terms.find(cobit);
        if (it != e.terms.end()) {
            Coefficient half = it->second * Rational(1, 2);
            e.terms.erase(it);
            for (const auto& s : {ResourceSymbol::qubit(), ResourceSymbol::ebit()}) {
                Coefficient& slot = e.terms[s];
                slot += half;
            }
        }
        for (auto* set : {&e.o, &e.inf})
            if (set->erase(cobit)) {
                set->insert(ResourceSymbol::qubit());
                set->insert(ResourceSymbol::ebit());
            }
    }
    for (auto it = e.terms.begin(); it != e.terms.end();) {
        Coefficient r = reduce(it->second, basis);
        if (r.is_zero()) {
            it = e.terms.erase(it);
        } else {
            it->second = r;
            ++it;
        }
    }
    e.tidy();
    return e;
}

// Equality modulo the basis, including o/inf parts and flags.
inline bool equivalent(const ResourceExpr& a, const ResourceExpr& b, const IdentityBasis& basis = {}) {
    ResourceExpr na = normalize(a, basis), nb = normalize(b, basis);
    if (na.o != nb.o || na.inf != nb.inf || na.flags != nb.flags || na.terms.size() != nb.terms.size()) return false;
    for (const auto& [s, c] : na.terms) {
        auto it = nb.terms.find(s);
        if (it == nb.terms.end() || !equivalent(c, it->second, basis)) return false;
    }
    return true;
}

// a <= b termwise: every coefficient of b - a certified nonnegative; o/inf by containment.
inline Tri expr_leq(const ResourceExpr& a, const ResourceExpr& b, const IdentityBasis& basis = {},
                    const std::vector<EntropicAtom>& hints = {}) {
    ResourceExpr na = normalize(a, basis), nb = normalize(b, basis);
    Tri result = Tri::True;
    std::set<ResourceSymbol> keys;
    for (const auto& [s, c] : na.terms) keys.insert(s);
    for (const auto& [s, c] : nb.terms) keys.insert(s);
    for (const auto& s : keys) {
        if (nb.inf.count(s)) continue;
        result = result && certify(nb.coefficient(s) - na.coefficient(s), basis, false, hints);
    }
    for (const auto& s : na.inf)
        if (!nb.inf.count(s)) return Tri::False;
    for (const auto& s : na.o) {
        if (nb.o.count(s) || nb.inf.count(s)) continue;
        if (!nb.terms.count(s)) return Tri::False;
        result = result && certify(nb.coefficient(s), basis, true, hints);
    }
    return result;
}

inline std::string term_to_string(const ResourceSymbol& s, const Coefficient& c, Flag f) {
    std::string sym = to_string(s) + to_string(f);
    if (c.is_rational()) {
        if (c.constant() == 1) return sym;
        if (is_integer(c.constant())) return to_string(c.constant()) + sym;
        return to_string(c.constant()) + " " + sym;
    }
    return to_string(c) + " " + sym;
}

inline std::string to_string(const ResourceExpr& e) {
    std::string out;
    auto put = [&](bool neg, const std::string& body) {
        if (out.empty()) out = neg ? "-" + body : body;
        else out += (neg ? " - " : " + ") + body;
    };
    for (const auto& [s, c] : e.terms) {
        bool neg = c.negative_single();
        put(neg, term_to_string(s, neg ? -c : c, e.flag(s)));
    }
    for (const auto& s : e.o) put(false, "o" + to_string(s) + to_string(e.flag(s)));
    for (const auto& s : e.inf) put(false, "inf" + to_string(s));
    return out.empty() ? "0" : out;
}

} // namespace ricalc::alg
