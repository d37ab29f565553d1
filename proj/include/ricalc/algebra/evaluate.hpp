#pragma once
#include <map>
#include <memory>
#include <string>

#include "../info/entropy.hpp"
#include "expr.hpp"

namespace ricalc::alg {

struct NumericExpr {
    std::map<ResourceSymbol, double> terms;
    std::set<ResourceSymbol> o, inf;
};

class AtomEvaluator {
public:
    explicit AtomEvaluator(const std::map<std::string, qc::StateSpec>& bindings) {
        for (const auto& [tag, s] : bindings) evals_.emplace(tag, std::make_unique<info::EntropyEvaluator>(s));
    }

    double atom(const EntropicAtom& a) {
        auto it = evals_.find(a.tag());
        if (it == evals_.end()) fail(ErrorKind::UnboundTag, "state tag '" + a.tag() + "' is not bound");
        return it->second->quantity(static_cast<info::Quantity>(a.kind()), a.groups());
    }

    double coefficient(const Coefficient& c) {
        double v = to_double(c.constant());
        for (const auto& [a, w] : c.atoms()) v += to_double(w) * atom(a);
        return v;
    }

private:
    std::map<std::string, std::unique_ptr<info::EntropyEvaluator>> evals_;
};

inline NumericExpr evaluate(const ResourceExpr& e, const std::map<std::string, qc::StateSpec>& bindings) {
    AtomEvaluator ev(bindings);
    NumericExpr out;
    for (const auto& [s, c] : e.terms) out.terms[s] = ev.coefficient(c);
    out.o = e.o;
    out.inf = e.inf;
    return out;
}

inline double evaluate(const Coefficient& c, const std::map<std::string, qc::StateSpec>& bindings) {
    return AtomEvaluator(bindings).coefficient(c);
}

inline std::string to_string(const NumericExpr& e) {
    std::string out;
    char buf[64];
    for (const auto& [s, v] : e.terms) {
        std::snprintf(buf, sizeof buf, "%.6g", v);
        out += (out.empty() ? "" : " + ") + std::string(buf) + " " + to_string(s);
    }
    for (const auto& s : e.o) out += (out.empty() ? "o" : " + o") + to_string(s);
    for (const auto& s : e.inf) out += (out.empty() ? "inf" : " + inf") + to_string(s);
    return out.empty() ? "0" : out;
}

} // namespace ricalc::alg
