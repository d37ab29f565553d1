#pragma once
#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "coefficient.hpp"
#include "symbol.hpp"

namespace ricalc::alg {

// State `tag` is pure on `labels` once conditioned on the classical `given` labels.
struct PureDecl {
    std::string tag;
    LabelGroup labels;
    LabelGroup given;
    bool operator<(const PureDecl& o) const { return std::tie(tag, labels, given) < std::tie(o.tag, o.labels, o.given); }
    bool operator==(const PureDecl& o) const { return std::tie(tag, labels, given) == std::tie(o.tag, o.labels, o.given); }
};

// Declared numeric fact: value >= bound, or value > bound when strict.
struct Fact {
    Coefficient value;
    bool strict = false;
    Rational bound = 0;
    bool operator<(const Fact& o) const { return std::tie(value, strict, bound) < std::tie(o.value, o.strict, o.bound); }
    bool operator==(const Fact& o) const { return std::tie(value, strict, bound) == std::tie(o.value, o.strict, o.bound); }
};

// Declared facts about states and resources. Doubles as the identity basis:
// purity declarations generate the linear relations among entropic atoms, and
// `coherent_identity` adds [q->qq] = 1/2 [q->q] + 1/2 [qq].
struct Context {
    std::map<std::string, PureDecl> pure;
    std::set<Fact> facts;
    std::set<std::string> isometric;
    std::set<std::pair<ResourceSymbol, ResourceSymbol>> refines;
    bool coherent_identity = false;

    void add_pure(PureDecl d) {
        std::sort(d.labels.begin(), d.labels.end());
        d.labels.erase(std::unique(d.labels.begin(), d.labels.end()), d.labels.end());
        std::sort(d.given.begin(), d.given.end());
        d.given.erase(std::unique(d.given.begin(), d.given.end()), d.given.end());
        for (const auto& g : d.given)
            if (std::binary_search(d.labels.begin(), d.labels.end(), g))
                fail(ErrorKind::OverlappingGroups, "label '" + g + "' is both pure and given");
        auto it = pure.find(d.tag);
        if (it != pure.end() && !(it->second == d)) fail(ErrorKind::SchemaMismatch, "conflicting purity declarations for '" + d.tag + "'");
        pure[d.tag] = d;
    }

    void merge(const Context& o) {
        for (const auto& [t, d] : o.pure) add_pure(d);
        facts.insert(o.facts.begin(), o.facts.end());
        isometric.insert(o.isometric.begin(), o.isometric.end());
        refines.insert(o.refines.begin(), o.refines.end());
        coherent_identity = coherent_identity || o.coherent_identity;
    }

    bool contains(const Context& o) const {
        for (const auto& [t, d] : o.pure) {
            auto it = pure.find(t);
            if (it == pure.end() || !(it->second == d)) return false;
        }
        return std::includes(facts.begin(), facts.end(), o.facts.begin(), o.facts.end()) &&
               std::includes(isometric.begin(), isometric.end(), o.isometric.begin(), o.isometric.end()) &&
               std::includes(refines.begin(), refines.end(), o.refines.begin(), o.refines.end()) &&
               (coherent_identity || !o.coherent_identity);
    }

    bool empty() const { return pure.empty() && facts.empty() && isometric.empty() && refines.empty() && !coherent_identity; }

    bool operator==(const Context& o) const { return contains(o) && o.contains(*this); }
};

using IdentityBasis = Context;

inline bool smaller(const LabelGroup& a, const LabelGroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// Representative of h(S)@tag modulo the purity relations h(S) = h(G + (L \ (S \ G))).
inline Coord reduce(const Coord& c, const Context& ctx) {
    auto it = ctx.pure.find(c.tag);
    if (it == ctx.pure.end()) return c;
    const auto& d = it->second;
    const auto& s = c.labels;
    if (!std::includes(s.begin(), s.end(), d.given.begin(), d.given.end())) return c;
    LabelGroup rest;
    std::set_difference(s.begin(), s.end(), d.given.begin(), d.given.end(), std::back_inserter(rest));
    if (!std::includes(d.labels.begin(), d.labels.end(), rest.begin(), rest.end())) return c;
    LabelGroup comp;
    std::set_difference(d.labels.begin(), d.labels.end(), rest.begin(), rest.end(), std::back_inserter(comp));
    LabelGroup alt = unite(d.given, comp);
    return smaller(alt, s) ? Coord{c.tag, alt} : c;
}

// Coefficient in reduced joint-entropy coordinates.
struct Canonical {
    Rational constant = 0;
    std::map<Coord, Rational> coords;

    bool is_constant() const { return coords.empty(); }
    bool is_zero() const { return constant == 0 && coords.empty(); }
    void add(const Coord& c, const Rational& w) {
        auto& slot = coords[c];
        slot += w;
        if (slot == 0) coords.erase(c);
    }
    Canonical& operator+=(const Canonical& o) {
        constant += o.constant;
        for (const auto& [c, w] : o.coords) add(c, w);
        return *this;
    }
    Canonical operator*(const Rational& r) const {
        Canonical out;
        if (r == 0) return out;
        out.constant = constant * r;
        for (const auto& [c, w] : coords) out.coords[c] = w * r;
        return out;
    }
    Canonical operator-(const Canonical& o) const {
        Canonical out = *this;
        out += o * Rational(-1);
        return out;
    }
    bool operator==(const Canonical& o) const { return constant == o.constant && coords == o.coords; }
};

inline Canonical canonical(const Coefficient& c, const Context& ctx) {
    Canonical out;
    out.constant = c.constant();
    for (const auto& [a, w] : c.atoms())
        for (const auto& [coord, sign] : expand(a)) {
            Coord r = reduce(coord, ctx);
            if (!r.labels.empty()) out.add(r, w * sign);
        }
    return out;
}

inline bool equivalent(const Coefficient& a, const Coefficient& b, const Context& ctx) {
    return canonical(a - b, ctx).is_zero();
}

// Coefficient written back in the reduced coordinates as H atoms.
inline Coefficient from_canonical(const Canonical& c) {
    Coefficient out(c.constant);
    for (const auto& [coord, w] : c.coords) out += Coefficient(EntropicAtom(AtomKind::H, {coord.labels}, coord.tag), w);
    return out;
}

} // namespace ricalc::alg
