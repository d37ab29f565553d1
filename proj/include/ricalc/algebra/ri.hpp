#pragma once
#include <string>
#include <vector>

#include "expr.hpp"

namespace ricalc::alg {

enum class Relation { Geq, Eq, GeqS };

inline const char* to_string(Relation r) {
    switch (r) {
    case Relation::Geq: return ">=";
    case Relation::Eq: return "=";
    case Relation::GeqS: return ">=s";
    }
    return "?";
}

struct ResourceInequality {
    ResourceExpr lhs, rhs;
    Relation rel = Relation::Geq;
    Context ctx;

    void check_well_formed() const {
        if (rel == Relation::GeqS && !lhs.has_protected() && !rhs.has_protected())
            fail(ErrorKind::SchemaMismatch, ">=s requires a protected symbol");
        for (const auto* side : {&lhs, &rhs})
            for (const auto& [s, f] : side->flags)
                if (!s.is_classical()) fail(ErrorKind::SchemaMismatch, "decoupling flag on non-classical term " + to_string(s));
    }
};

inline std::string group_list(const LabelGroup& g) {
    std::string out;
    for (const auto& l : g) out += (out.empty() ? "" : ",") + l;
    return out;
}

inline std::vector<std::string> context_entries(const Context& ctx) {
    std::vector<std::string> out;
    for (const auto& [t, d] : ctx.pure)
        out.push_back("pure " + t + " on " + group_list(d.labels) + (d.given.empty() ? "" : " given " + group_list(d.given)));
    for (const auto& f : ctx.facts) out.push_back("fact " + to_string(f.value) + (f.strict ? " > " : " >= ") + to_string(f.bound));
    for (const auto& n : ctx.isometric) out.push_back("iso " + n);
    for (const auto& [a, b] : ctx.refines) out.push_back("refines " + to_string(a) + " " + to_string(b));
    if (ctx.coherent_identity) out.push_back("identity ccc");
    return out;
}

inline std::string to_string(const ResourceInequality& ri) {
    std::string out = to_string(ri.lhs) + " " + to_string(ri.rel) + " " + to_string(ri.rhs);
    for (const auto& e : context_entries(ri.ctx)) out += "; " + e;
    return out;
}

inline ResourceInequality normalize(const ResourceInequality& ri) {
    ResourceInequality out = ri;
    out.lhs = normalize(ri.lhs, ri.ctx);
    out.rhs = normalize(ri.rhs, ri.ctx);
    return out;
}

// Same statement modulo the basis of `basis` (both sides compared separately).
inline bool equivalent(const ResourceInequality& a, const ResourceInequality& b, const IdentityBasis& basis) {
    return a.rel == b.rel && equivalent(a.lhs, b.lhs, basis) && equivalent(a.rhs, b.rhs, basis);
}

// Moves negated terms across: a - b >= a' - b'  becomes  a + b' + o b >= a' + b.
inline ResourceInequality ri_normal_form(const ResourceInequality& ri) {
    ResourceInequality out = ri;
    out.lhs = {};
    out.rhs = {};
    auto split = [](const ResourceExpr& e, ResourceExpr& pos, ResourceExpr& neg) {
        pos.o = e.o;
        pos.inf = e.inf;
        for (const auto& [s, c] : e.terms) {
            if (c.negative_single()) neg = add(neg, ResourceExpr::term(s, -c, e.flag(s)));
            else pos = add(pos, ResourceExpr::term(s, c, e.flag(s)));
        }
    };
    ResourceExpr lp, ln, rp, rn;
    split(ri.lhs, lp, ln);
    split(ri.rhs, rp, rn);
    out.lhs = add(lp, rn);
    for (const auto& [s, c] : ln.terms) out.lhs = add(out.lhs, ResourceExpr::sublinear(s));
    out.rhs = add(rp, ln);
    return out;
}

} // namespace ricalc::alg
