#pragma once
#include <string>
#include <tuple>

#include "rational.hpp"

namespace ricalc::alg {

enum class SymbolKind {
    Cbit,       // [c->c]
    Qubit,      // [q->q]
    Ebit,       // [qq]
    Rbit,       // [cc]
    Cobit,      // [q->qq]
    CbitTau,    // [c->c:tau]
    QubitTau,   // [q->q:tau]
    CobitTau,   // [q->qq:tau]
    Static,     // <rho>
    Channel,    // <N:*>
    Relative,   // <N:rho>
    Protected,  // <<N:rho>>
};

class ResourceSymbol {
public:
    ResourceSymbol() = default;
    explicit ResourceSymbol(SymbolKind kind, std::string name = {}, std::string test = {})
        : kind_(kind), name_(std::move(name)), test_(std::move(test)) {
        bool named = kind_ >= SymbolKind::Static;
        if (named != !name_.empty()) fail(ErrorKind::ParseError, "unit symbols carry no name; noisy symbols need one");
        bool tested = kind_ == SymbolKind::Relative || kind_ == SymbolKind::Protected;
        if (tested != !test_.empty()) fail(ErrorKind::ParseError, "relative symbols need a test state");
    }

    static ResourceSymbol cbit() { return ResourceSymbol(SymbolKind::Cbit); }
    static ResourceSymbol qubit() { return ResourceSymbol(SymbolKind::Qubit); }
    static ResourceSymbol ebit() { return ResourceSymbol(SymbolKind::Ebit); }
    static ResourceSymbol rbit() { return ResourceSymbol(SymbolKind::Rbit); }
    static ResourceSymbol cobit() { return ResourceSymbol(SymbolKind::Cobit); }
    static ResourceSymbol state(std::string name) { return ResourceSymbol(SymbolKind::Static, std::move(name)); }
    static ResourceSymbol channel(std::string name) { return ResourceSymbol(SymbolKind::Channel, std::move(name)); }
    static ResourceSymbol relative(std::string name, std::string test) {
        return ResourceSymbol(SymbolKind::Relative, std::move(name), std::move(test));
    }
    static ResourceSymbol protected_source(std::string name, std::string test) {
        return ResourceSymbol(SymbolKind::Protected, std::move(name), std::move(test));
    }

    SymbolKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const std::string& test() const { return test_; }

    bool is_unit() const { return kind_ < SymbolKind::Static; }
    bool is_classical() const { return kind_ == SymbolKind::Cbit || kind_ == SymbolKind::CbitTau || kind_ == SymbolKind::Rbit; }
    bool is_relative_unit() const { return kind_ == SymbolKind::CbitTau || kind_ == SymbolKind::QubitTau || kind_ == SymbolKind::CobitTau; }
    bool is_protected() const { return kind_ == SymbolKind::Protected; }

    // [x] <-> [x:tau] for cbit, qubit and cobit; identity otherwise.
    ResourceSymbol toggled_tau() const {
        switch (kind_) {
        case SymbolKind::Cbit: return ResourceSymbol(SymbolKind::CbitTau);
        case SymbolKind::Qubit: return ResourceSymbol(SymbolKind::QubitTau);
        case SymbolKind::Cobit: return ResourceSymbol(SymbolKind::CobitTau);
        case SymbolKind::CbitTau: return ResourceSymbol(SymbolKind::Cbit);
        case SymbolKind::QubitTau: return ResourceSymbol(SymbolKind::Qubit);
        case SymbolKind::CobitTau: return ResourceSymbol(SymbolKind::Cobit);
        default: return *this;
        }
    }

    auto key() const { return std::tie(kind_, name_, test_); }
    bool operator<(const ResourceSymbol& o) const { return key() < o.key(); }
    bool operator==(const ResourceSymbol& o) const { return key() == o.key(); }
    bool operator!=(const ResourceSymbol& o) const { return !(*this == o); }

private:
    SymbolKind kind_ = SymbolKind::Cbit;
    std::string name_, test_;
};

inline std::string to_string(const ResourceSymbol& s) {
    switch (s.kind()) {
    case SymbolKind::Cbit: return "[c->c]";
    case SymbolKind::Qubit: return "[q->q]";
    case SymbolKind::Ebit: return "[qq]";
    case SymbolKind::Rbit: return "[cc]";
    case SymbolKind::Cobit: return "[q->qq]";
    case SymbolKind::CbitTau: return "[c->c:tau]";
    case SymbolKind::QubitTau: return "[q->q:tau]";
    case SymbolKind::CobitTau: return "[q->qq:tau]";
    case SymbolKind::Static: return "<" + s.name() + ">";
    case SymbolKind::Channel: return "<" + s.name() + ":*>";
    case SymbolKind::Relative: return "<" + s.name() + ":" + s.test() + ">";
    case SymbolKind::Protected: return "<<" + s.name() + ":" + s.test() + ">>";
    }
    return "?";
}

enum class Flag { None = 0, Incoherent = 1, Coherent = 2 };

inline const char* to_string(Flag f) {
    switch (f) {
    case Flag::None: return "";
    case Flag::Incoherent: return "{inc}";
    case Flag::Coherent: return "{coh}";
    }
    return "";
}

} // namespace ricalc::alg
