#include <gtest/gtest.h>

#include <optional>
#include <random>

#include "ricalc/derive.hpp"

using namespace ricalc;
using namespace ricalc::alg;
using namespace ricalc::der;

namespace {

ResourceInequality R(const std::string& s) { return parse_ri(s); }

ResourceInequality apply(const std::string& rule, const std::vector<std::string>& premises, const json& inst = json::object(),
                         const std::string& ctx = "") {
    RuleEnv env;
    if (!ctx.empty()) env.ctx = parse_context(ctx);
    std::vector<ResourceInequality> ps;
    for (const auto& p : premises) {
        auto ri = R(p);
        ri.ctx = env.ctx;
        ps.push_back(ri);
    }
    return apply_rule(rule, ps, inst, env);
}

bool same(const ResourceInequality& a, const std::string& b, const std::string& ctx = "") {
    Context c = ctx.empty() ? Context{} : parse_context(ctx);
    auto rb = R(b);
    rb.ctx = c;
    return equivalent(a, rb, c);
}

template <class F>
std::optional<ErrorKind> kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

bool invariants_hold(const ResourceExpr& e) {
    for (const auto& [s, c] : e.terms)
        if (c.is_zero() || e.inf.count(s)) return false;
    for (const auto& s : e.o)
        if (e.terms.count(s) || e.inf.count(s)) return false;
    for (const auto& [s, f] : e.flags)
        if (!s.is_classical() || f == Flag::None || (!e.terms.count(s) && !e.o.count(s))) return false;
    return true;
}

} // namespace

TEST(Axioms, CatalogParsesAndRoundTrips) {
    const auto& db = axiom_db();
    EXPECT_GE(db.size(), 28u);
    std::set<std::string> names;
    for (const auto& a : db) {
        EXPECT_TRUE(names.insert(a.name).second) << a.name;
        EXPECT_NO_THROW(a.ri.check_well_formed()) << a.name;
        auto again = parse_ri(to_string(a.ri));
        EXPECT_TRUE(equivalent(again, a.ri, a.ri.ctx)) << a.name;
        EXPECT_EQ(to_string(again), to_string(a.ri)) << a.name;
    }
}

TEST(Axioms, LookupExamples) {
    auto m = lookup("mother").ri;
    EXPECT_TRUE(same(m, "<rho> + 1/2 I(A;E)@psi [q->q] >= 1/2 I(A;B)@psi [qq]", "pure psi on A,B,E"));
    EXPECT_TRUE(m.ctx.pure.count("psi"));

    auto c = lookup("ccc").ri;
    EXPECT_EQ(c.rel, Relation::Eq);
    EXPECT_TRUE(same(c, "2[q->qq] = [q->q] + [qq]"));

    const auto& h = lookup("hashing");
    EXPECT_TRUE(has_side_condition(h, "coherently decoupled"));
    EXPECT_EQ(h.ri.lhs.flag(ResourceSymbol::cbit()), Flag::Coherent);

    EXPECT_EQ(kind_of([] { lookup("no-such-axiom"); }), ErrorKind::SchemaMismatch);
}

TEST(Rules, Cancellation) {
    auto r = apply("cancellation", {"<rho> + [qq] >= [c->c] + [qq]"}, {{"gamma", "[qq]"}});
    EXPECT_TRUE(same(r, "<rho> + o[qq] >= [c->c]"));
    EXPECT_EQ(kind_of([] { apply("cancellation", {"<rho> >= [c->c] + [qq]"}, {{"gamma", "[qq]"}}); }), ErrorKind::MissingSideCondition);
}

TEST(Rules, ORemovalNeedsSidePremise) {
    auto r = apply("o-removal", {"<rho> + o[qq] >= [c->c]", "<rho> >= [qq]"}, {{"symbol", "[qq]"}});
    EXPECT_TRUE(same(r, "<rho> >= [c->c]"));
    EXPECT_EQ(kind_of([] { apply("o-removal", {"<rho> + o[qq] >= [c->c]", "[q->q] >= [qq]"}, {{"symbol", "[qq]"}}); }),
              ErrorKind::MissingSideCondition);
    EXPECT_EQ(kind_of([] { apply("o-removal", {"<rho> + o[qq] >= [c->c]"}, {{"symbol", "[qq]"}}); }), ErrorKind::SchemaMismatch);
}

TEST(Rules, Composability) {
    EXPECT_TRUE(same(apply("transitivity", {"[q->q] >= [c->c]", "[c->c] >= [cc]"}), "[q->q] >= [cc]"));
    EXPECT_EQ(kind_of([] { apply("transitivity", {"[q->q] >= [c->c]", "[qq] >= [cc]"}); }), ErrorKind::MissingSideCondition);
    EXPECT_TRUE(same(apply("addition", {"[q->q] >= [c->c]", "[qq] >= [cc]"}), "[q->q] + [qq] >= [c->c] + [cc]"));
    EXPECT_TRUE(same(apply("scaling", {"2[c->c] + [qq] >= [q->q]"}, {{"factor", "1/2"}}), "[c->c] + 1/2 [qq] >= 1/2 [q->q]"));
    EXPECT_EQ(kind_of([] { apply("scaling", {"[q->q] >= [qq]"}, {{"factor", "-1"}}); }), ErrorKind::NegativeScale);
    EXPECT_EQ(kind_of([] { apply("scaling", {"[q->q] >= [qq]"}, {{"factor", "Icoh(A>B)@psi"}}); }), ErrorKind::NegativeScale);
    EXPECT_EQ(kind_of([] { apply("addition", {"[q->q] >= [qq]"}); }), ErrorKind::SchemaMismatch);
}

TEST(Rules, DecouplingFlags) {
    auto o = apply("rule-O", {"<N:rho> + H(R)@psi [qq] >= I(R;B)@psi [c->c]{coh}"});
    EXPECT_TRUE(same(o, "<N:rho> + H(R)@psi [qq] >= 1/2 I(R;B)@psi [qq] + 1/2 I(R;B)@psi [q->q]"));
    EXPECT_EQ(kind_of([] { apply("rule-O", {"<N:rho> >= [c->c]"}); }), ErrorKind::UndischargedFlag);
    EXPECT_EQ(kind_of([] { apply("rule-O", {"<N:rho> >= [c->c]{inc}"}); }), ErrorKind::UndischargedFlag);

    auto i = apply("rule-I", {"<rho> + 2[c->c:tau]{coh} >= [qq]"});
    EXPECT_TRUE(same(i, "<rho> + [q->q] >= 2[qq]"));
    EXPECT_EQ(kind_of([] { apply("rule-I", {"<rho> + 2[c->c:tau]{inc} >= [qq]"}); }), ErrorKind::UndischargedFlag);
    EXPECT_TRUE(same(apply("incoherent-rule-I", {"<rho> + 2[c->c:tau]{inc} >= [qq]"}), "<rho> + 2[c->c:tau]{inc} >= [qq] + 2[cc]"));

    EXPECT_TRUE(same(apply("recycle-randomness", {"<rho> + [cc]{inc} >= [qq]"}), "<rho> + o[cc] >= [qq]"));
    EXPECT_EQ(kind_of([] { apply("recycle-randomness", {"<rho> + [cc] >= [qq]"}); }), ErrorKind::UndischargedFlag);

    auto ab = apply("absolutize", {"<rho> + [c->c]{coh} >= [qq]"}, {{"side", "lhs"}, {"symbol", "[c->c]"}});
    EXPECT_TRUE(same(ab, "<rho> + [c->c:tau]{coh} >= [qq]"));
}

TEST(Rules, RelativizeAndSource) {
    EXPECT_TRUE(same(apply("relativize", {}, {{"item", 1}, {"from", "<N:*>"}, {"to", "<N:rho>"}}), "<N:*> >= <N:rho>"));
    EXPECT_TRUE(same(apply("relativize", {}, {{"item", 2}, {"from", "<N:rho>"}, {"to", "<N(rho)>"}}), "<N:rho> >= <N(rho)>"));
    EXPECT_EQ(kind_of([] { apply("relativize", {}, {{"item", 2}, {"from", "<N:rho>"}, {"to", "<M(rho)>"}}); }), ErrorKind::SchemaMismatch);
    EXPECT_EQ(kind_of([] { apply("relativize", {}, {{"item", 5}, {"from", "<N:rho>"}, {"to", "<M:rho>"}}); }),
              ErrorKind::MissingSideCondition);
    EXPECT_TRUE(same(apply("relativize", {}, {{"item", 5}, {"from", "<N:rho>"}, {"to", "<M:rho>"}}, "refines <N:rho> <M:rho>"),
                     "<N:rho> >= <M:rho>", "refines <N:rho> <M:rho>"));

    EXPECT_TRUE(same(apply("source-fake", {"<<U:rho>> + [c->c] >= [cc]"}, {{"symbol", "<<U:rho>>"}}), "<U(rho)> + [c->c] >= [cc]"));
    EXPECT_EQ(kind_of([] { apply("source-fake", {"<<U:rho>> >= <<V:rho>>"}, {{"symbol", "<<U:rho>>"}}); }), ErrorKind::MissingSideCondition);
    EXPECT_EQ(kind_of([] { apply("sopm", {"<<U:rho>> >= [qq]"}, {{"item", 1}}); }), ErrorKind::SchemaMismatch);
    EXPECT_TRUE(same(apply("sopm", {"<<U:rho>> >= [qq]"}, {{"item", 2}, {"symbol", "<<U:rho>>"}}), "<<U:rho>> + o<U(rho)> >=s [qq]"));
}

TEST(Rules, UnknownRule) {
    EXPECT_EQ(kind_of([] { apply("magic", {}); }), ErrorKind::SchemaMismatch);
}

TEST(Builtins, AllCheck) {
    const auto& bs = builtin_derivations();
    EXPECT_GE(bs.size(), 15u);
    for (const auto& p : bs) {
        auto r = check_builtin(p);
        EXPECT_TRUE(r.ok) << p.name << ": " << describe(r);
    }
}

TEST(Builtins, NamedTargets) {
    ASSERT_TRUE(find_builtin("nsd-from-mother"));
    ASSERT_TRUE(find_builtin("grandmother"));
    auto lsd = find_builtin("lsd-from-father")->target_ri();
    EXPECT_TRUE(equivalent(lsd, [&] {
        auto t = R("<N:*> + o[qq] >= Icoh(R>B)@psi [q->q]");
        t.ctx = lsd.ctx;
        return t;
    }(), lsd.ctx));
    auto ccc = find_builtin("ccc-identity")->target_ri();
    EXPECT_TRUE(same(ccc, "[q->qq] = 1/2 [q->q] + 1/2 [qq]"));
}

TEST(Builtins, TamperedCoefficientFailsAtThatStep) {
    int tampered = 0;
    for (const auto& p : builtin_derivations()) {
        for (std::size_t i = 0; i < p.steps.size(); ++i) {
            auto pos = p.steps[i].conclusion.find("1/2");
            if (pos == std::string::npos) continue;
            Proof q = p;
            q.steps[i].conclusion.replace(pos, 3, "1/3");
            auto r = check_builtin(q);
            EXPECT_FALSE(r.ok) << p.name << " step " << i;
            EXPECT_EQ(r.step_index, static_cast<int>(i)) << p.name << ": " << describe(r);
            ++tampered;
        }
    }
    EXPECT_GT(tampered, 20);
}

TEST(Builtins, MutationFuzz) {
    std::mt19937_64 rng(20261018);
    const auto& bs = builtin_derivations();
    for (int i = 0; i < 500; ++i) {
        const auto& p = bs[static_cast<std::size_t>(i) % bs.size()];
        auto m = mutate(p, rng);
        auto r = check_builtin(m.proof);
        EXPECT_FALSE(r.ok) << p.name << " " << m.description;
        EXPECT_EQ(r.step_index, m.step) << p.name << " " << m.description << ": " << describe(r);
    }
}

TEST(Builtins, NumericRecheck) {
    qc::Rng rng(5);
    for (const auto& p : builtin_derivations())
        for (int k = 0; k < 3; ++k) {
            auto rep = numeric_recheck(p, random_bindings(p, rng), find_builtin);
            EXPECT_TRUE(rep.ok) << p.name << ": " << rep.message;
            EXPECT_LT(rep.max_error, 1e-9) << p.name;
            EXPECT_EQ(rep.steps, static_cast<int>(p.steps.size()));
        }
}

TEST(Proofs, JsonRoundTripAndBareList) {
    for (const auto& p : builtin_derivations()) {
        auto q = proof_from_json(json::parse(to_json(p).dump()));
        EXPECT_TRUE(check_builtin(q).ok) << p.name;
    }
    auto bare = json::parse(R"([
      {"rule": "axiom", "instantiation": {"name": "qubit-cbit"}, "conclusion": "[q->q] >= [c->c]"},
      {"rule": "axiom", "instantiation": {"name": "cbit-rbit"}, "conclusion": "[c->c] >= [cc]"},
      {"rule": "transitivity", "premises": [0, 1], "conclusion": "[q->q] >= [cc]"}])");
    auto p = proof_from_json(bare);
    EXPECT_TRUE(check_proof(p).ok);
    EXPECT_EQ(p.target, "[q->q] >= [cc]");
}

TEST(Proofs, FailureReports) {
    Proof p;
    p.target = "[q->q] >= [cc]";
    p.steps.push_back({"a", "axiom", {}, {{"name", "qubit-cbit"}}, "[q->q] >= [c->c]"});
    p.steps.push_back({"b", "transitivity", {"a", "zz"}, json::object(), "[q->q] >= [cc]"});
    auto r = check_proof(p);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.step_index, 1);
    EXPECT_EQ(r.rule, "transitivity");

    p.steps[1] = {"b", "axiom", {}, {{"name", "cbit-rbit"}}, "[c->c] >= [cc]"};
    r = check_proof(p);
    EXPECT_FALSE(r.ok);
    EXPECT_NE(r.reason.find("target"), std::string::npos);

    Proof cyc;
    cyc.name = "loop";
    cyc.target = "[q->q] >= [qq]";
    cyc.steps.push_back({"a", "lemma", {}, {{"name", "loop"}}, "[q->q] >= [qq]"});
    r = check_proof(cyc, [&](const std::string& n) -> std::optional<Proof> {
        if (n == "loop") return cyc;
        return std::nullopt;
    });
    EXPECT_FALSE(r.ok);
    EXPECT_NE(r.reason.find("cyclic"), std::string::npos);
}

TEST(Properties, ComposabilityClosure) {
    const auto& db = axiom_db();
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> pick(0, db.size() - 1);
    int additions = 0, chains = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto& a = db[pick(rng)];
        const auto& b = db[pick(rng)];
        Context ctx = a.ri.ctx;
        try {
            ctx.merge(b.ri.ctx);
        } catch (const Error&) {
            continue;
        }
        RuleEnv env;
        env.ctx = ctx;
        auto pa = a.ri, pb = b.ri;
        pa.ctx = pb.ctx = ctx;
        std::vector<ResourceInequality> outs{apply_rule("addition", {pa, pb}, json::object(), env)};
        ++additions;
        try {
            outs.push_back(apply_rule("transitivity", {pa, pb}, json::object(), env));
            ++chains;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::MissingSideCondition);
        }
        for (const auto& r : outs) {
            EXPECT_NO_THROW(r.check_well_formed());
            EXPECT_TRUE(invariants_hold(r.lhs) && invariants_hold(r.rhs)) << to_string(r);
            auto again = parse_ri(to_string(r));
            EXPECT_TRUE(equivalent(again, r, ctx)) << to_string(r);
        }
    }
    EXPECT_GT(additions, 500);
    EXPECT_GT(chains, 5);
}
