#pragma once
#include <functional>
#include <string>
#include <vector>

#include "../algebra/parser.hpp"
#include "axioms.hpp"
#include "rename.hpp"

namespace ricalc::der {

// What a rule may consult besides its premises: the proof-level context and
// the targets of other proofs (for the lemma rule).
struct RuleEnv {
    Context ctx;
    std::function<ResourceInequality(const std::string&)> lemma;
};

inline const std::vector<std::string>& rule_kinds() {
    static const std::vector<std::string> kinds = {
        "axiom",        "lemma",          "reflexivity",  "weaken",      "transitivity", "addition",
        "scaling",      "cancellation",   "o-removal",    "closure",     "recycle-randomness", "derandomize",
        "rule-I",       "incoherent-rule-I", "rule-O",    "absolutize",  "relativize",   "convex-split",
        "source-fake",  "sopm",           "equality-substitution", "antisymmetry",
    };
    return kinds;
}

namespace rules {

inline void need(bool ok, ErrorKind k, const std::string& msg) {
    if (!ok) fail(k, msg);
}

inline void arity(const std::vector<ResourceInequality>& p, std::size_t n, const std::string& rule) {
    need(p.size() == n, ErrorKind::SchemaMismatch, rule + " takes " + std::to_string(n) + " premise(s), got " + std::to_string(p.size()));
}

inline std::string str(const json& inst, const char* key) {
    need(inst.contains(key) && inst[key].is_string(), ErrorKind::SchemaMismatch, std::string("instantiation needs string field '") + key + "'");
    return inst[key].get<std::string>();
}

inline Coefficient coef(const json& inst, const char* key, Coefficient fallback = Coefficient(1)) {
    if (!inst.contains(key)) return fallback;
    if (inst[key].is_number_integer()) return Coefficient(Rational(inst[key].get<long>()));
    need(inst[key].is_string(), ErrorKind::SchemaMismatch, std::string("field '") + key + "' must be a coefficient string");
    return parse_coefficient(inst[key].get<std::string>());
}

inline std::vector<EntropicAtom> hints(const std::vector<ResourceInequality>& ps) {
    std::vector<EntropicAtom> out;
    for (const auto& p : ps)
        for (const auto* side : {&p.lhs, &p.rhs})
            for (const auto& [s, c] : side->terms)
                for (const auto& [a, w] : c.atoms()) out.push_back(a);
    return out;
}

inline Relation weakest(Relation a, Relation b) {
    if (a == Relation::GeqS || b == Relation::GeqS) return Relation::GeqS;
    if (a == Relation::Eq && b == Relation::Eq) return Relation::Eq;
    return Relation::Geq;
}

inline ResourceInequality make(ResourceExpr lhs, ResourceExpr rhs, Relation rel, const Context& ctx) {
    ResourceInequality out;
    out.lhs = std::move(lhs);
    out.rhs = std::move(rhs);
    out.rel = rel;
    out.ctx = ctx;
    out.lhs.tidy();
    out.rhs.tidy();
    out.check_well_formed();
    return out;
}

// e - g on finite parts, without turning exact cancellations into o terms.
inline ResourceExpr minus(const ResourceExpr& e, const ResourceExpr& g) {
    ResourceExpr out = e;
    for (const auto& [s, c] : g.terms) {
        if (out.inf.count(s)) continue;
        Coefficient r = out.coefficient(s) - c;
        if (r.is_zero()) out.terms.erase(s);
        else out.terms[s] = r;
    }
    out.tidy();
    return out;
}

inline void require_leq(const ResourceExpr& a, const ResourceExpr& b, const Context& ctx, const std::vector<EntropicAtom>& h,
                        const std::string& what) {
    Tri t = expr_leq(a, b, ctx, h);
    need(t == Tri::True, ErrorKind::MissingSideCondition,
         what + ": cannot certify " + to_string(a) + " <= " + to_string(b) + " (" + to_string(t) + ")");
}

inline bool positive_in(const ResourceExpr& e, const ResourceSymbol& s, const Context& ctx, const std::vector<EntropicAtom>& h) {
    if (e.inf.count(s)) return true;
    auto it = e.terms.find(s);
    return it != e.terms.end() && certify(it->second, ctx, true, h) == Tri::True;
}

// Side premise for removing an o term: its left side is made of resources
// present in `alpha` at a positive rate, and it produces `target` at a positive rate.
inline void check_generator(const ResourceInequality& side, const ResourceExpr& alpha, const ResourceSymbol& target,
                            const Context& ctx, const std::vector<EntropicAtom>& h, const std::string& rule) {
    need(side.rel != Relation::GeqS, ErrorKind::SchemaMismatch, rule + ": side premise must be a proper inequality");
    for (const auto& [s, c] : side.lhs.terms)
        need(positive_in(alpha, s, ctx, h), ErrorKind::MissingSideCondition,
             rule + ": side premise consumes " + to_string(s) + " which is not available at a certified positive rate");
    for (const auto& s : side.lhs.o)
        need(alpha.o.count(s) || positive_in(alpha, s, ctx, h), ErrorKind::MissingSideCondition,
             rule + ": side premise needs o" + to_string(s));
    for (const auto& s : side.lhs.inf)
        need(alpha.inf.count(s) > 0, ErrorKind::MissingSideCondition, rule + ": side premise needs inf" + to_string(s));
    need(positive_in(side.rhs, target, ctx, h), ErrorKind::MissingSideCondition,
         rule + ": side premise does not produce " + to_string(target) + " at a certified positive rate");
    for (const auto& [s, c] : side.rhs.terms)
        need(certify(c, ctx, false, h) == Tri::True, ErrorKind::MissingSideCondition,
             rule + ": side premise output " + to_string(s) + " not certified nonnegative");
}

inline bool pure_symbol(const ResourceSymbol& s, const Context& ctx) {
    switch (s.kind()) {
    case SymbolKind::Ebit:
    case SymbolKind::Qubit:
    case SymbolKind::Cobit:
    case SymbolKind::QubitTau:
    case SymbolKind::CobitTau: return true;
    case SymbolKind::Static:
    case SymbolKind::Channel:
    case SymbolKind::Relative:
    case SymbolKind::Protected: return ctx.isometric.count(s.name()) > 0;
    default: return false;
    }
}

inline std::string applied_name(const ResourceSymbol& s) { return s.name() + "(" + s.test() + ")"; }

inline ResourceSymbol symbol_field(const json& inst, const char* key) { return parse_symbol(str(inst, key)); }

inline EntropicAtom conditioned(const EntropicAtom& a, const LabelGroup& x, const std::string& tag) {
    auto g = a.groups();
    switch (a.kind()) {
    case AtomKind::H: return EntropicAtom(AtomKind::Hcond, {g[0], x}, tag);
    case AtomKind::Hcond: return EntropicAtom(AtomKind::Hcond, {g[0], unite(g[1], x)}, tag);
    case AtomKind::Imutual: return EntropicAtom(AtomKind::Icmi, {g[0], g[1], x}, tag);
    case AtomKind::Icoh: return EntropicAtom(AtomKind::Icoh, {g[0], unite(g[1], x)}, tag);
    case AtomKind::Icmi: return EntropicAtom(AtomKind::Icmi, {g[0], g[1], unite(g[2], x)}, tag);
    }
    return a;
}

} // namespace rules

// Recomputes the conclusion of one rule application. Never consults the stated conclusion.
inline ResourceInequality apply_rule(const std::string& kind, const std::vector<ResourceInequality>& p, const json& inst,
                                     const RuleEnv& env) {
    using namespace rules;
    const Context& ctx = env.ctx;
    const auto h = hints(p);

    if (kind == "axiom" || kind == "lemma") {
        arity(p, 0, kind);
        std::string name = str(inst, "name");
        ResourceInequality base;
        if (kind == "axiom") base = lookup(name).ri;
        else {
            need(static_cast<bool>(env.lemma), ErrorKind::SchemaMismatch, "no lemma resolver");
            base = env.lemma(name);
        }
        ResourceInequality r = Renaming::from_json(inst)(base);
        need(ctx.contains(r.ctx), ErrorKind::MissingSideCondition,
             kind + " '" + name + "' needs context entries not declared by the proof");
        return make(r.lhs, r.rhs, r.rel, ctx);
    }
    if (kind == "reflexivity") {
        arity(p, 0, kind);
        ResourceExpr e = parse_expr(str(inst, "expr"));
        return make(e, e, Relation::Geq, ctx);
    }
    if (kind == "weaken") {
        arity(p, 1, kind);
        ResourceExpr lhs = inst.contains("lhs") ? parse_expr(str(inst, "lhs")) : p[0].lhs;
        ResourceExpr rhs = inst.contains("rhs") ? parse_expr(str(inst, "rhs")) : p[0].rhs;
        require_leq(p[0].lhs, lhs, ctx, h, kind);
        require_leq(rhs, p[0].rhs, ctx, h, kind);
        return make(lhs, rhs, p[0].rel == Relation::GeqS ? Relation::GeqS : Relation::Geq, ctx);
    }
    if (kind == "transitivity") {
        arity(p, 2, kind);
        require_leq(p[1].lhs, p[0].rhs, ctx, h, kind);
        Relation rel = weakest(p[0].rel, p[1].rel);
        if (rel == Relation::Eq && !equivalent(p[1].lhs, p[0].rhs, ctx)) rel = Relation::Geq;
        return make(p[0].lhs, p[1].rhs, rel, ctx);
    }
    if (kind == "addition") {
        arity(p, 2, kind);
        return make(add(p[0].lhs, p[1].lhs), add(p[0].rhs, p[1].rhs), weakest(p[0].rel, p[1].rel), ctx);
    }
    if (kind == "scaling") {
        arity(p, 1, kind);
        Coefficient z = coef(inst, "factor");
        return make(scale(z, p[0].lhs, ctx), scale(z, p[0].rhs, ctx), p[0].rel, ctx);
    }
    if (kind == "closure") {
        // z a >= b for every z > z0 gives z0 a >= b; premise is stated at a rate z0 + t, t > 0 removed.
        arity(p, 1, kind);
        Coefficient z0 = coef(inst, "factor");
        Coefficient slack = coef(inst, "slack");
        need(certify(z0, ctx, true, h) == Tri::True, ErrorKind::MissingSideCondition, "closure needs z0 > 0");
        need(slack.is_rational() && slack.constant() > 0, ErrorKind::SchemaMismatch, "closure slack must be a positive rational");
        // The premise must hold as (z0 + slack) * base for the base given in the instantiation.
        ResourceExpr base = parse_expr(str(inst, "base"));
        need(equivalent(scale(z0 + slack, base, ctx), p[0].lhs, ctx), ErrorKind::SchemaMismatch,
             "closure premise is not (z0 + slack) times the base resource");
        return make(scale(z0, base, ctx), p[0].rhs, p[0].rel, ctx);
    }
    if (kind == "cancellation") {
        arity(p, 1, kind);
        ResourceExpr g = parse_expr(str(inst, "gamma"));
        need(g.o.empty() && g.inf.empty() && !g.terms.empty(), ErrorKind::SchemaMismatch, "cancellation needs a finite gamma");
        require_leq(g, p[0].lhs, ctx, h, "cancellation (left)");
        require_leq(g, p[0].rhs, ctx, h, "cancellation (right)");
        ResourceExpr lhs = minus(p[0].lhs, g);
        for (const auto& [s, c] : g.terms) lhs = add(lhs, ResourceExpr::sublinear(s));
        return make(lhs, minus(p[0].rhs, g), p[0].rel == Relation::GeqS ? Relation::GeqS : Relation::Geq, ctx);
    }
    if (kind == "o-removal") {
        arity(p, 2, kind);
        ResourceSymbol s = symbol_field(inst, "symbol");
        need(p[0].lhs.o.count(s) > 0, ErrorKind::SchemaMismatch, "o-removal: no o" + to_string(s) + " on the left");
        ResourceExpr alpha = p[0].lhs;
        alpha.o.erase(s);
        alpha.flags.erase(s);
        check_generator(p[1], alpha, s, ctx, h, kind);
        return make(alpha, p[0].rhs, p[0].rel, ctx);
    }
    if (kind == "recycle-randomness") {
        arity(p, 1, kind);
        ResourceSymbol cc = ResourceSymbol::rbit();
        need(p[0].lhs.terms.count(cc) > 0, ErrorKind::SchemaMismatch, "recycle-randomness: no [cc] consumed");
        need(p[0].lhs.flag(cc) != Flag::None, ErrorKind::UndischargedFlag, "recycle-randomness: [cc] is not incoherently decoupled");
        ResourceExpr lhs = p[0].lhs;
        lhs.terms.erase(cc);
        lhs.flags.erase(cc);
        lhs = add(lhs, ResourceExpr::sublinear(cc));
        return make(lhs, p[0].rhs, p[0].rel, ctx);
    }
    if (kind == "derandomize") {
        arity(p, 2, kind);
        ResourceSymbol cc = ResourceSymbol::rbit();
        need(p[0].lhs.terms.count(cc) || p[0].lhs.o.count(cc), ErrorKind::SchemaMismatch, "derandomize: no [cc] consumed");
        for (const auto& s : p[0].rhs.support())
            need(pure_symbol(s, ctx), ErrorKind::MissingSideCondition, "derandomize: output " + to_string(s) + " is not pure");
        ResourceExpr alpha = p[0].lhs;
        alpha.terms.erase(cc);
        alpha.o.erase(cc);
        alpha.flags.erase(cc);
        check_generator(p[1], alpha, cc, ctx, h, kind);
        return make(alpha, p[0].rhs, p[0].rel, ctx);
    }
    if (kind == "rule-I" || kind == "incoherent-rule-I") {
        arity(p, 1, kind);
        ResourceSymbol tau(SymbolKind::CbitTau);
        need(p[0].lhs.terms.count(tau) > 0, ErrorKind::SchemaMismatch, kind + ": no [c->c:tau] consumed");
        Flag f = p[0].lhs.flag(tau);
        if (kind == "rule-I") need(f == Flag::Coherent, ErrorKind::UndischargedFlag, "rule-I: [c->c:tau] is not coherently decoupled");
        else need(f != Flag::None, ErrorKind::UndischargedFlag, "incoherent-rule-I: [c->c:tau] is not decoupled");
        Coefficient r = p[0].lhs.coefficient(tau);
        need(certify(r, ctx, false, h) == Tri::True, ErrorKind::MissingSideCondition, kind + ": rate not certified nonnegative");
        if (kind == "incoherent-rule-I")
            return make(p[0].lhs, add(p[0].rhs, ResourceExpr::term(ResourceSymbol::rbit(), r)), p[0].rel, ctx);
        ResourceExpr lhs = p[0].lhs;
        lhs.terms.erase(tau);
        lhs.flags.erase(tau);
        Coefficient half = r * Rational(1, 2);
        lhs = add(lhs, ResourceExpr::term(ResourceSymbol::qubit(), half));
        return make(lhs, add(p[0].rhs, ResourceExpr::term(ResourceSymbol::ebit(), half)), p[0].rel, ctx);
    }
    if (kind == "rule-O") {
        arity(p, 1, kind);
        ResourceSymbol cb = ResourceSymbol::cbit();
        need(p[0].rhs.terms.count(cb) > 0, ErrorKind::SchemaMismatch, "rule-O: no [c->c] produced");
        need(p[0].rhs.flag(cb) == Flag::Coherent, ErrorKind::UndischargedFlag, "rule-O: [c->c] is not coherently decoupled");
        Coefficient r = p[0].rhs.coefficient(cb);
        need(certify(r, ctx, false, h) == Tri::True, ErrorKind::MissingSideCondition, "rule-O: rate not certified nonnegative");
        ResourceExpr rhs = p[0].rhs;
        rhs.terms.erase(cb);
        rhs.flags.erase(cb);
        Coefficient half = r * Rational(1, 2);
        rhs = add(rhs, ResourceExpr::term(ResourceSymbol::ebit(), half) + ResourceExpr::term(ResourceSymbol::qubit(), half));
        return make(p[0].lhs, rhs, p[0].rel, ctx);
    }
    if (kind == "absolutize") {
        arity(p, 1, kind);
        ResourceSymbol s = symbol_field(inst, "symbol");
        need(s.toggled_tau() != s, ErrorKind::SchemaMismatch, "absolutize applies to [c->c], [q->q], [q->qq] and their tau forms");
        std::string side = inst.value("side", "lhs");
        need(side == "lhs" || side == "rhs", ErrorKind::SchemaMismatch, "absolutize side must be lhs or rhs");
        ResourceInequality out = p[0];
        ResourceExpr& e = side == "lhs" ? out.lhs : out.rhs;
        bool found = false;
        ResourceExpr swapped;
        for (const auto& [sym, c] : e.terms) {
            if (sym == s) {
                found = true;
                swapped = add(swapped, ResourceExpr::term(s.toggled_tau(), c, e.flag(sym)));
            } else {
                swapped = add(swapped, ResourceExpr::term(sym, c, e.flag(sym)));
            }
        }
        for (const auto& sym : e.o) {
            found = found || sym == s;
            swapped = add(swapped, ResourceExpr::sublinear(sym == s ? s.toggled_tau() : sym));
        }
        for (const auto& sym : e.inf) {
            found = found || sym == s;
            swapped = add(swapped, ResourceExpr::unbounded(sym == s ? s.toggled_tau() : sym));
        }
        need(found, ErrorKind::SchemaMismatch, "absolutize: " + to_string(s) + " does not occur on the " + side);
        e = swapped;
        return make(out.lhs, out.rhs, out.rel, ctx);
    }
    if (kind == "relativize") {
        arity(p, 0, kind);
        need(inst.contains("item") && inst["item"].is_number_integer(), ErrorKind::SchemaMismatch, "relativize needs an item number");
        int item = inst["item"].get<int>();
        auto one = [](const ResourceSymbol& s) { return ResourceExpr::term(s); };
        switch (item) {
        case 1: {
            ResourceSymbol from = symbol_field(inst, "from"), to = symbol_field(inst, "to");
            need(from.kind() == SymbolKind::Channel && to.kind() == SymbolKind::Relative && from.name() == to.name(),
                 ErrorKind::SchemaMismatch, "relativize 1: <N:*> >= <N:w>");
            return make(one(from), one(to), Relation::Geq, ctx);
        }
        case 2: {
            ResourceSymbol from = symbol_field(inst, "from"), to = symbol_field(inst, "to");
            need((from.kind() == SymbolKind::Relative || from.kind() == SymbolKind::Protected) && to.kind() == SymbolKind::Static &&
                     to.name() == applied_name(from),
                 ErrorKind::SchemaMismatch, "relativize 2: <N:w> >= <N(w)>");
            return make(one(from), one(to), Relation::Geq, ctx);
        }
        case 3: {
            ResourceSymbol first = symbol_field(inst, "first"), second = symbol_field(inst, "second"), to = symbol_field(inst, "to");
            need((first.kind() == SymbolKind::Relative || first.kind() == SymbolKind::Protected) && second.kind() == SymbolKind::Relative &&
                     to.kind() == first.kind() && to.test() == first.test(),
                 ErrorKind::SchemaMismatch, "relativize 3: <N:w> + <M:N(w)> >= <M.N:w>");
            return make(one(first) + one(second), one(to), Relation::Geq, ctx);
        }
        case 4: {
            ResourceSymbol st = symbol_field(inst, "static"), ch = symbol_field(inst, "channel"), to = symbol_field(inst, "to");
            need(st.kind() == SymbolKind::Static && ch.kind() == SymbolKind::Relative && to.kind() == SymbolKind::Static &&
                     to.name() == ch.name() + "(" + st.name() + ")",
                 ErrorKind::SchemaMismatch, "relativize 4: <rho> + <N:w> >= <N(rho)>");
            return make(one(st) + one(ch), one(to), Relation::Geq, ctx);
        }
        case 5: {
            ResourceSymbol from = symbol_field(inst, "from"), to = symbol_field(inst, "to");
            need(ctx.refines.count({from, to}) > 0, ErrorKind::MissingSideCondition,
                 "relativize 5: context does not declare refines " + to_string(from) + " " + to_string(to));
            return make(one(from), one(to), Relation::Geq, ctx);
        }
        default: fail(ErrorKind::SchemaMismatch, "relativize item must be 1..5");
        }
    }
    if (kind == "convex-split") {
        arity(p, 1, kind);
        ResourceSymbol st = symbol_field(inst, "static"), mix = symbol_field(inst, "mixture");
        std::string tag = str(inst, "tag"), new_tag = str(inst, "new_tag");
        LabelGroup x = parse_group(str(inst, "given"));
        need(st.kind() == SymbolKind::Static && mix.kind() == SymbolKind::Static, ErrorKind::SchemaMismatch,
             "convex-split acts on static resources");
        need(p[0].lhs.coefficient(st) == Coefficient(1), ErrorKind::SchemaMismatch, "convex-split: " + to_string(st) + " must be consumed once");
        for (const auto* side : {&p[0].lhs, &p[0].rhs})
            for (const auto& s : side->support())
                need(s.is_unit() || s == st, ErrorKind::SchemaMismatch, "convex-split: only unit resources may accompany " + to_string(st));
        auto it = ctx.pure.find(tag);
        if (it != ctx.pure.end()) {
            PureDecl want{new_tag, it->second.labels, unite(it->second.given, x)};
            auto jt = ctx.pure.find(new_tag);
            need(jt != ctx.pure.end() && jt->second == want, ErrorKind::MissingSideCondition,
                 "convex-split: context must declare pure " + new_tag + " given the classical labels");
        }
        auto cond = [&](const ResourceExpr& e) {
            ResourceExpr out;
            for (const auto& [s, c] : e.terms) {
                Coefficient nc(c.constant());
                for (const auto& [a, w] : c.atoms()) {
                    need(a.tag() == tag, ErrorKind::SchemaMismatch, "convex-split: atom " + to_string(a) + " is not tagged " + tag);
                    nc += Coefficient(conditioned(a, x, new_tag), w);
                }
                out = add(out, ResourceExpr::term(s == st ? mix : s, nc, e.flag(s)));
            }
            for (const auto& s : e.o) out = add(out, ResourceExpr::sublinear(s));
            for (const auto& s : e.inf) out = add(out, ResourceExpr::unbounded(s));
            return out;
        };
        return make(cond(p[0].lhs), cond(p[0].rhs), p[0].rel, ctx);
    }
    if (kind == "source-fake") {
        arity(p, 1, kind);
        ResourceSymbol s = symbol_field(inst, "symbol");
        need(s.kind() == SymbolKind::Protected && p[0].lhs.terms.count(s), ErrorKind::SchemaMismatch,
             "source-fake: protected " + to_string(s) + " not consumed");
        need(p[0].rel == Relation::Geq, ErrorKind::SchemaMismatch, "source-fake needs a proper inequality");
        need(!p[0].rhs.has_protected(), ErrorKind::MissingSideCondition, "source-fake: output refers to the Source");
        ResourceExpr lhs = p[0].lhs;
        Coefficient c = lhs.coefficient(s);
        lhs.terms.erase(s);
        lhs = add(lhs, ResourceExpr::term(ResourceSymbol::state(applied_name(s)), c));
        return make(lhs, p[0].rhs, Relation::Geq, ctx);
    }
    if (kind == "sopm") {
        arity(p, 1, kind);
        int item = inst.value("item", 0);
        if (item == 1) {
            need(p[0].rel == Relation::GeqS, ErrorKind::SchemaMismatch, "sopm 1 needs an improper inequality");
            return make(p[0].lhs, p[0].rhs, Relation::Geq, ctx);
        }
        need(item == 2, ErrorKind::SchemaMismatch, "sopm item must be 1 or 2");
        need(p[0].rel == Relation::Geq, ErrorKind::SchemaMismatch, "sopm 2 needs a proper inequality");
        ResourceSymbol m = symbol_field(inst, "symbol");
        need(m.kind() == SymbolKind::Protected && p[0].lhs.terms.count(m), ErrorKind::SchemaMismatch,
             "sopm 2: protected " + to_string(m) + " not consumed");
        return make(add(p[0].lhs, ResourceExpr::sublinear(ResourceSymbol::state(applied_name(m)))), p[0].rhs, Relation::GeqS, ctx);
    }
    if (kind == "equality-substitution") {
        arity(p, 2, kind);
        need(p[0].rel == Relation::Eq, ErrorKind::SchemaMismatch, "equality-substitution: first premise must be an equality");
        ResourceExpr from = p[0].lhs, to = p[0].rhs;
        if (inst.value("reverse", false)) std::swap(from, to);
        Coefficient z = coef(inst, "factor");
        from = scale(z, from, ctx);
        to = scale(z, to, ctx);
        std::string side = inst.value("side", "lhs");
        need(side == "lhs" || side == "rhs", ErrorKind::SchemaMismatch, "equality-substitution side must be lhs or rhs");
        ResourceInequality out = p[1];
        ResourceExpr& e = side == "lhs" ? out.lhs : out.rhs;
        require_leq(from, e, ctx, h, kind);
        e = add(minus(e, from), to);
        return make(out.lhs, out.rhs, out.rel, ctx);
    }
    if (kind == "antisymmetry") {
        arity(p, 2, kind);
        need(p[0].rel != Relation::GeqS && p[1].rel != Relation::GeqS, ErrorKind::SchemaMismatch, "antisymmetry needs proper inequalities");
        need(equivalent(p[1].lhs, p[0].rhs, ctx) && equivalent(p[1].rhs, p[0].lhs, ctx), ErrorKind::SchemaMismatch,
             "antisymmetry: premises are not converse to each other");
        return make(p[0].lhs, p[0].rhs, Relation::Eq, ctx);
    }
    fail(ErrorKind::SchemaMismatch, "unknown rule '" + kind + "'");
}

} // namespace ricalc::der
