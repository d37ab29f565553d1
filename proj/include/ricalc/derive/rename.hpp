#pragma once
#include <map>
#include <string>

#include <nlohmann/json.hpp>
#include "../algebra/ri.hpp"

namespace ricalc::der {

using nlohmann::json;
using namespace ricalc::alg;

// Substitution of state tags, system labels (label -> label group) and resource names.
struct Renaming {
    std::map<std::string, std::string> tags;
    std::map<std::string, LabelGroup> labels;
    std::map<std::string, std::string> names;

    bool empty() const { return tags.empty() && labels.empty() && names.empty(); }

    static Renaming from_json(const json& inst) {
        Renaming r;
        if (inst.contains("tags")) for (auto& [k, v] : inst["tags"].items()) r.tags[k] = v.get<std::string>();
        if (inst.contains("labels")) for (auto& [k, v] : inst["labels"].items()) r.labels[k] = parse_group(v.get<std::string>());
        if (inst.contains("names")) for (auto& [k, v] : inst["names"].items()) r.names[k] = v.get<std::string>();
        return r;
    }

    std::string tag(const std::string& t) const {
        auto it = tags.find(t);
        return it == tags.end() ? t : it->second;
    }
    std::string name(const std::string& n) const {
        auto it = names.find(n);
        return it == names.end() ? n : it->second;
    }
    LabelGroup group(const LabelGroup& g) const {
        LabelGroup out;
        for (const auto& l : g) {
            auto it = labels.find(l);
            if (it == labels.end()) out.push_back(l);
            else out.insert(out.end(), it->second.begin(), it->second.end());
        }
        std::sort(out.begin(), out.end());
        if (std::adjacent_find(out.begin(), out.end()) != out.end()) fail(ErrorKind::OverlappingGroups, "label renaming merges systems");
        return out;
    }

    EntropicAtom operator()(const EntropicAtom& a) const {
        std::vector<LabelGroup> gs;
        for (const auto& g : a.groups()) gs.push_back(group(g));
        return EntropicAtom(a.kind(), gs, tag(a.tag()));
    }
    Coefficient operator()(const Coefficient& c) const {
        Coefficient out(c.constant());
        for (const auto& [a, w] : c.atoms()) out += Coefficient((*this)(a), w);
        return out;
    }
    ResourceSymbol operator()(const ResourceSymbol& s) const {
        if (s.is_unit()) return s;
        return ResourceSymbol(s.kind(), name(s.name()), s.test().empty() ? std::string() : name(s.test()));
    }
    ResourceExpr operator()(const ResourceExpr& e) const {
        ResourceExpr out;
        for (const auto& [s, c] : e.terms) out = add(out, ResourceExpr::term((*this)(s), (*this)(c), e.flag(s)));
        for (const auto& s : e.o) {
            ResourceExpr o = ResourceExpr::sublinear((*this)(s));
            if (e.flag(s) != Flag::None) o.set_flag((*this)(s), e.flag(s));
            out = add(out, o);
        }
        for (const auto& s : e.inf) out = add(out, ResourceExpr::unbounded((*this)(s)));
        return out;
    }
    Context operator()(const Context& c) const {
        Context out;
        for (const auto& [t, d] : c.pure) out.add_pure({tag(d.tag), group(d.labels), d.given.empty() ? LabelGroup{} : group(d.given)});
        for (const auto& f : c.facts) out.facts.insert({(*this)(f.value), f.strict, f.bound});
        for (const auto& n : c.isometric) out.isometric.insert(name(n));
        for (const auto& [a, b] : c.refines) out.refines.insert({(*this)(a), (*this)(b)});
        out.coherent_identity = c.coherent_identity;
        return out;
    }
    ResourceInequality operator()(const ResourceInequality& ri) const {
        ResourceInequality out;
        out.lhs = (*this)(ri.lhs);
        out.rhs = (*this)(ri.rhs);
        out.rel = ri.rel;
        out.ctx = (*this)(ri.ctx);
        return out;
    }
};

} // namespace ricalc::der
