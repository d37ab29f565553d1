#pragma once
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "../algebra/evaluate.hpp"
#include "../qcore/random.hpp"
#include "proof.hpp"

namespace ricalc::der {

// ---- mutation fuzzing -------------------------------------------------------

struct Mutation {
    Proof proof;
    int step = -1;
    std::string description;
};

namespace detail {

inline std::string statement_text(const ResourceInequality& ri) {
    return to_string(ri.lhs) + " " + to_string(ri.rel) + " " + to_string(ri.rhs);
}

inline bool mutate_coefficient(Step& s, std::mt19937_64& rng, std::string& what) {
    ResourceInequality ri = parse_ri(s.conclusion);
    std::vector<std::pair<ResourceExpr*, ResourceSymbol>> slots;
    for (auto* side : {&ri.lhs, &ri.rhs})
        for (const auto& [sym, c] : side->terms) slots.emplace_back(side, sym);
    if (slots.empty()) return false;
    auto [side, sym] = slots[std::uniform_int_distribution<std::size_t>(0, slots.size() - 1)(rng)];
    Rational f = rng() % 2 ? Rational(2) : Rational(1, 3);
    side->terms[sym] = side->terms[sym] * f;
    s.conclusion = statement_text(ri);
    what = "coefficient of " + to_string(sym) + " times " + to_string(f);
    return true;
}

inline bool mutate_flag(Step& s, std::mt19937_64& rng, std::string& what) {
    ResourceInequality ri = parse_ri(s.conclusion);
    std::vector<std::pair<ResourceExpr*, ResourceSymbol>> slots;
    for (auto* side : {&ri.lhs, &ri.rhs}) {
        for (const auto& [sym, c] : side->terms)
            if (sym.is_classical()) slots.emplace_back(side, sym);
        for (const auto& sym : side->o)
            if (sym.is_classical()) slots.emplace_back(side, sym);
    }
    if (slots.empty()) return false;
    auto [side, sym] = slots[std::uniform_int_distribution<std::size_t>(0, slots.size() - 1)(rng)];
    Flag f = static_cast<Flag>((static_cast<int>(side->flag(sym)) + 1 + rng() % 2) % 3);
    side->set_flag(sym, f);
    s.conclusion = statement_text(ri);
    what = "flag of " + to_string(sym) + " set to " + (f == Flag::None ? std::string("none") : to_string(f));
    return true;
}

inline bool mutate_rule(Step& s, std::mt19937_64& rng, std::string& what) {
    const auto& kinds = rule_kinds();
    std::string r;
    do r = kinds[std::uniform_int_distribution<std::size_t>(0, kinds.size() - 1)(rng)];
    while (r == s.rule);
    what = "rule " + s.rule + " -> " + r;
    s.rule = r;
    return true;
}

inline bool mutate_instantiation(Step& s, std::string& what) {
    auto& in = s.instantiation;
    if (in.contains("factor") && in["factor"].is_string()) {
        in["factor"] = to_string(parse_coefficient(in["factor"].get<std::string>()) * Rational(2));
        what = "scaling factor doubled";
        return true;
    }
    for (const char* key : {"gamma", "expr"})
        if (in.contains(key) && in[key].is_string()) {
            ResourceExpr e = parse_expr(in[key].get<std::string>());
            in[key] = to_string(scale(Coefficient(2), e, Context{}));
            what = std::string(key) + " doubled";
            return true;
        }
    return false;
}

} // namespace detail

// One random corruption of a coefficient, rule name, flag or instantiation.
inline Mutation mutate(const Proof& p, std::mt19937_64& rng) {
    if (p.steps.empty()) fail(ErrorKind::SchemaMismatch, "cannot mutate an empty proof");
    for (;;) {
        Mutation m{p, 0, {}};
        m.step = static_cast<int>(std::uniform_int_distribution<std::size_t>(0, p.steps.size() - 1)(rng));
        Step& s = m.proof.steps[static_cast<std::size_t>(m.step)];
        bool done = false;
        switch (rng() % 4) {
        case 0: done = detail::mutate_coefficient(s, rng, m.description); break;
        case 1: done = detail::mutate_flag(s, rng, m.description); break;
        case 2: done = detail::mutate_rule(s, rng, m.description); break;
        default: done = detail::mutate_instantiation(s, m.description); break;
        }
        if (done) {
            m.description = "step " + s.id + ": " + m.description;
            return m;
        }
    }
}

// ---- numeric recheck --------------------------------------------------------

using Bindings = std::map<std::string, qc::StateSpec>;

namespace detail {

inline void collect(const ResourceExpr& e, std::map<std::string, std::set<std::string>>& used) {
    for (const auto& [s, c] : e.terms)
        for (const auto& [a, w] : c.atoms())
            for (const auto& g : a.groups()) used[a.tag()].insert(g.begin(), g.end());
}

// Random state with every label of dimension 2. With a purity declaration the
// state is sum_x p_x |x><x|_G (x) |psi_x><psi_x|_L; otherwise it is mixed.
inline qc::StateSpec sample_state(const std::set<std::string>& used, const PureDecl* decl, qc::Rng& rng) {
    using qc::Mat;
    if (!decl) {
        std::vector<std::string> labels(used.begin(), used.end());
        return qc::random_mixed_state(qc::SystemLayout(labels, std::vector<int>(labels.size(), 2)), rng);
    }
    for (const auto& l : used)
        if (std::find(decl->labels.begin(), decl->labels.end(), l) == decl->labels.end() &&
            std::find(decl->given.begin(), decl->given.end(), l) == decl->given.end())
            fail(ErrorKind::UnknownLabel, "label '" + l + "' is outside the purity declaration of '" + decl->tag + "'");
    std::vector<std::string> labels(decl->given.begin(), decl->given.end());
    labels.insert(labels.end(), decl->labels.begin(), decl->labels.end());
    const Eigen::Index nx = Eigen::Index(1) << decl->given.size();
    const Eigen::Index dl = Eigen::Index(1) << decl->labels.size();
    std::uniform_real_distribution<double> u(0.1, 1.0);
    std::vector<double> p(static_cast<std::size_t>(nx));
    double total = 0;
    for (auto& v : p) total += (v = u(rng));
    Mat m = Mat::Zero(nx * dl, nx * dl);
    for (Eigen::Index x = 0; x < nx; ++x)
        m.block(x * dl, x * dl, dl, dl) = p[static_cast<std::size_t>(x)] / total * qc::projector(qc::haar_vector(dl, rng));
    return qc::StateSpec::trusted(qc::SystemLayout(labels, std::vector<int>(labels.size(), 2)), m);
}

} // namespace detail

// Binds every state tag used by the proof to a random instance consistent with its purity declarations.
inline Bindings random_bindings(const Proof& p, qc::Rng& rng) {
    std::map<std::string, std::set<std::string>> used;
    auto visit = [&](const std::string& text) {
        ResourceInequality ri = parse_ri(text);
        detail::collect(ri.lhs, used);
        detail::collect(ri.rhs, used);
    };
    visit(p.target);
    for (const auto& s : p.steps) visit(s.conclusion);
    Context ctx = p.context();
    Bindings out;
    for (const auto& [tag, labels] : used) {
        auto it = ctx.pure.find(tag);
        out.emplace(tag, detail::sample_state(labels, it == ctx.pure.end() ? nullptr : &it->second, rng));
    }
    return out;
}

struct NumericReport {
    bool ok = true;
    int steps = 0;
    double max_error = 0;
    std::string message;
};

// Replays the proof and compares the stated and recomputed conclusion of every
// step numerically under `b`.
inline NumericReport numeric_recheck(const Proof& p, const Bindings& b, const ProofLookup& find = {}) {
    NumericReport rep;
    Context ctx = p.context();
    RuleEnv env;
    env.ctx = ctx;
    env.lemma = [&](const std::string& name) {
        auto sub = find ? find(name) : std::nullopt;
        if (!sub) fail(ErrorKind::SchemaMismatch, "unknown lemma '" + name + "'");
        return sub->target_ri();
    };
    auto compare = [&](const ResourceExpr& x, const ResourceExpr& y, const std::string& where) {
        NumericExpr a = evaluate(x, b), c = evaluate(y, b);
        std::set<ResourceSymbol> syms;
        for (const auto& [s, v] : a.terms) syms.insert(s);
        for (const auto& [s, v] : c.terms) syms.insert(s);
        for (const auto& s : syms) {
            double va = a.terms.count(s) ? a.terms.at(s) : 0.0, vc = c.terms.count(s) ? c.terms.at(s) : 0.0;
            if (!std::isfinite(va) || !std::isfinite(vc)) {
                rep.ok = false;
                rep.message = where + ": non-finite coefficient of " + to_string(s);
                continue;
            }
            double err = std::abs(va - vc);
            rep.max_error = std::max(rep.max_error, err);
            if (err > 1e-9 && rep.ok) {
                rep.ok = false;
                rep.message = where + ": " + to_string(s) + " stated " + std::to_string(va) + " recomputed " + std::to_string(vc);
            }
        }
    };
    std::map<std::string, ResourceInequality> done;
    for (const auto& s : p.steps) {
        std::vector<ResourceInequality> prem;
        for (const auto& r : s.premises) prem.push_back(done.at(r));
        ResourceInequality stated = parse_ri(s.conclusion);
        stated.ctx = ctx;
        ResourceInequality computed = apply_rule(s.rule, prem, s.instantiation, env);
        compare(stated.lhs, computed.lhs, "step " + s.id + " lhs");
        compare(stated.rhs, computed.rhs, "step " + s.id + " rhs");
        done[s.id] = stated;
        ++rep.steps;
    }
    ResourceInequality target = parse_ri(p.target);
    compare(done.at(p.steps.back().id).lhs, target.lhs, "target lhs");
    compare(done.at(p.steps.back().id).rhs, target.rhs, "target rhs");
    return rep;
}

} // namespace ricalc::der
