#pragma once
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rules.hpp"

namespace ricalc::der {

struct Step {
    std::string id;
    std::string rule;
    std::vector<std::string> premises;
    json instantiation = json::object();
    std::string conclusion;
};

struct Proof {
    std::string name;
    std::string target;
    std::vector<std::string> contexts;
    std::vector<Step> steps;

    Context context() const {
        Context ctx;
        for (const auto& c : contexts) ctx.merge(parse_context(c));
        return ctx;
    }
    ResourceInequality target_ri() const {
        ResourceInequality t = parse_ri(target);
        t.ctx.merge(context());
        return t;
    }
};

inline Proof proof_from_json(const json& j) {
    Proof p;
    const json* steps = &j;
    if (j.is_object()) {
        p.name = j.value("name", "");
        p.target = j.value("target", "");
        if (j.contains("contexts")) p.contexts = j["contexts"].get<std::vector<std::string>>();
        if (!j.contains("steps")) fail(ErrorKind::SchemaMismatch, "proof has no steps");
        steps = &j["steps"];
    }
    if (!steps->is_array()) fail(ErrorKind::SchemaMismatch, "proof steps must be a list");
    std::size_t i = 0;
    for (const auto& s : *steps) {
        Step st;
        st.id = s.contains("id") ? s["id"].get<std::string>() : std::to_string(i);
        st.rule = s.at("rule").get<std::string>();
        if (s.contains("premises"))
            for (const auto& r : s["premises"]) st.premises.push_back(r.is_string() ? r.get<std::string>() : std::to_string(r.get<long>()));
        if (s.contains("instantiation")) st.instantiation = s["instantiation"];
        st.conclusion = s.at("conclusion").get<std::string>();
        p.steps.push_back(std::move(st));
        ++i;
    }
    if (p.target.empty() && !p.steps.empty()) p.target = p.steps.back().conclusion;
    return p;
}

inline json to_json(const Proof& p) {
    json steps = json::array();
    for (const auto& s : p.steps)
        steps.push_back({{"id", s.id}, {"rule", s.rule}, {"premises", s.premises}, {"instantiation", s.instantiation}, {"conclusion", s.conclusion}});
    return {{"name", p.name}, {"target", p.target}, {"contexts", p.contexts}, {"steps", steps}};
}

struct CheckResult {
    bool ok = false;
    int step_index = -1;
    std::string step_id;
    std::string rule;
    std::string reason;
    std::string expected;
    std::string computed;
};

inline std::string describe(const CheckResult& r) {
    if (r.ok) return "ok";
    std::string out = "step " + std::to_string(r.step_index);
    if (!r.step_id.empty()) out += " (" + r.step_id + ")";
    if (!r.rule.empty()) out += " [" + r.rule + "]";
    out += ": " + r.reason;
    if (!r.expected.empty()) out += "\n  stated:   " + r.expected;
    if (!r.computed.empty()) out += "\n  computed: " + r.computed;
    return out;
}

// Finds proofs by name for the lemma rule.
using ProofLookup = std::function<std::optional<Proof>(const std::string&)>;

namespace detail {

inline std::string statement(const ResourceInequality& ri) {
    return to_string(ri.lhs) + " " + to_string(ri.rel) + " " + to_string(ri.rhs);
}

inline CheckResult check_proof_impl(const Proof& p, const ProofLookup& find, std::set<std::string>& active,
                                    std::map<std::string, bool>& verified) {
    CheckResult res;
    auto failing = [&](int i, const Step* s, std::string reason) {
        res.ok = false;
        res.step_index = i;
        if (s) {
            res.step_id = s->id;
            res.rule = s->rule;
        }
        res.reason = std::move(reason);
        return res;
    };

    Context ctx;
    try {
        ctx = p.context();
    } catch (const Error& e) {
        return failing(-1, nullptr, std::string("bad context: ") + e.what());
    }

    RuleEnv env;
    env.ctx = ctx;
    env.lemma = [&](const std::string& name) -> ResourceInequality {
        if (active.count(name)) fail(ErrorKind::SchemaMismatch, "cyclic lemma reference '" + name + "'");
        auto sub = find ? find(name) : std::nullopt;
        if (!sub) fail(ErrorKind::SchemaMismatch, "unknown lemma '" + name + "'");
        auto it = verified.find(name);
        if (it == verified.end()) {
            active.insert(name);
            CheckResult r = check_proof_impl(*sub, find, active, verified);
            active.erase(name);
            it = verified.emplace(name, r.ok).first;
        }
        if (!it->second) fail(ErrorKind::MissingSideCondition, "lemma '" + name + "' does not check");
        return sub->target_ri();
    };

    std::map<std::string, ResourceInequality> done;
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        const Step& s = p.steps[i];
        int idx = static_cast<int>(i);
        if (done.count(s.id)) return failing(idx, &s, "duplicate step id");
        std::vector<ResourceInequality> prem;
        for (const auto& ref : s.premises) {
            auto it = done.find(ref);
            if (it == done.end()) return failing(idx, &s, "premise '" + ref + "' is not an earlier step");
            prem.push_back(it->second);
        }
        ResourceInequality stated;
        try {
            stated = parse_ri(s.conclusion);
            stated.ctx = ctx;
        } catch (const Error& e) {
            return failing(idx, &s, std::string("unparsable conclusion: ") + e.what());
        }
        ResourceInequality computed;
        try {
            computed = apply_rule(s.rule, prem, s.instantiation, env);
        } catch (const Error& e) {
            res.expected = s.conclusion;
            return failing(idx, &s, e.what());
        }
        if (!equivalent(stated, computed, ctx)) {
            res.expected = statement(normalize(stated));
            res.computed = statement(normalize(computed));
            return failing(idx, &s, "stated conclusion differs from the rule's result");
        }
        done[s.id] = stated;
    }
    if (p.steps.empty()) return failing(-1, nullptr, "empty proof");
    ResourceInequality target;
    try {
        target = parse_ri(p.target);
        target.ctx = ctx;
    } catch (const Error& e) {
        return failing(-1, nullptr, std::string("unparsable target: ") + e.what());
    }
    const Step& last = p.steps.back();
    if (!equivalent(done.at(last.id), target, ctx)) {
        res.expected = statement(normalize(target));
        res.computed = statement(normalize(done.at(last.id)));
        return failing(static_cast<int>(p.steps.size()) - 1, &last, "final conclusion does not match the target");
    }
    res.ok = true;
    return res;
}

} // namespace detail

inline CheckResult check_proof(const Proof& p, const ProofLookup& find = {}) {
    std::set<std::string> active;
    if (!p.name.empty()) active.insert(p.name);
    std::map<std::string, bool> verified;
    return detail::check_proof_impl(p, find, active, verified);
}

} // namespace ricalc::der
