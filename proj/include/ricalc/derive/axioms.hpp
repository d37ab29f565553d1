#pragma once
#include <string>
#include <vector>

#include "../algebra/parser.hpp"

namespace ricalc::der {

using alg::ResourceInequality;

struct Axiom {
    std::string name;
    std::string text;
    ResourceInequality ri;
    std::vector<std::string> side_conditions;
    std::string source;
};

namespace detail {

struct AxiomText {
    const char* name;
    const char* text;
    std::vector<std::string> side;
    const char* source;
};

inline std::vector<Axiom> build_axioms() {
    static const AxiomText table[] = {
        {"schumacher", "H(B)@sigma [q->q] >= <id:rho>", {"holds iff delta >= 0"}, "Schumacher compression"},
        {"schumacher-source", "H(B)@sigma [q->q] + <<idSA:rho>> >=s <<idSB:rho>>", {"holds iff delta >= 0"},
         "Schumacher compression, Source version"},
        {"ent-concentration", "<phi> >= H(B)@phi [qq]; pure phi on A,B; iso phi", {}, "Entanglement concentration"},
        {"ent-dilution", "H(B)@phi [qq] + o[c->c] >= <phi>; pure phi on A,B; iso phi", {"o[c->c] cannot be removed"},
         "Entanglement dilution"},
        {"shannon-compression", "H(X_B)@sigma [c->c] >= <idbar:rho>", {"holds iff delta >= 0"}, "Shannon compression"},
        {"shannon-source", "H(X_B)@sigma [c->c] + <<idbarSA:rho>> >=s <<idbarSB:rho>>", {"holds iff delta >= 0"},
         "Shannon compression, Source version"},
        {"crc", "<rho> >= H(X_B)@rho [cc]", {}, "Common randomness concentration"},
        {"cr-dilution", "H(X_B)@rho [cc] >= <rho>", {}, "Common randomness dilution"},
        {"crst", "I(X_A;Y_B)@sigma [c->c] + H(X_A|Y_B)@sigma [cc] >= <Nbar:rho>", {}, "Classical reverse Shannon theorem"},
        {"crst-source", "I(X_A;Y_B)@sigma [c->c] + H(X_A|Y_B)@sigma [cc] + <<idbarSA:rho>> >=s <<NbarSB:rho>>", {},
         "Classical reverse Shannon theorem, Source version"},
        {"crst2", "I(X_A;Y_B)@sigma [c->c] + H(X_A|Y_B)@sigma [cc] >= <N':rho>", {}, "Classical reverse Shannon theorem with feedback"},
        {"cqsw", "H(X_B|B)@sigma [c->c] + <<idXA.idB:rhoXS>> >=s <<idXB.idB:rhoXS>>", {"holds iff delta >= 0"},
         "Classical compression with quantum side information"},
        {"cqsw-copy", "H(X_B|B)@sigma [c->c] + <<idXA.idB:rhoXS>> >=s <<DXAXB.idB:rhoXS>>", {"Alice keeps a copy of X"},
         "Classical compression with quantum side information, copy kept"},
        {"ict", "I(R;X_B)@sigma [c->c] + H(X_B|R)@sigma [cc] >= <T:rho>", {}, "Instrument compression theorem"},
        {"ict2", "I(R;X_B)@sigma [c->c] + H(X_B|R)@sigma [cc] >= <DT:rho>", {}, "Instrument compression theorem with copy"},
        {"tp", "2[c->c] + [qq] >= [q->q]", {}, "Teleportation"},
        {"sd", "[q->q] + [qq] >= 2[c->c]", {}, "Super-dense coding"},
        {"entanglement-distribution", "[q->q] >= [qq]", {}, "Entanglement distribution"},
        {"coherent-tp", "[q->q] + [qq] >= 2[q->qq]", {}, "Coherent teleportation"},
        {"coherent-sd", "2[q->qq] + [qq] >= [q->q] + 2[qq]", {}, "Coherent super-dense coding"},
        {"ccc", "2[q->qq] = [q->q] + [qq]", {}, "Coherent communication identity"},
        {"hsw", "<N:rho> >= I(X_A;B)@sigma [c->c]", {"holds iff delta >= 0"}, "Holevo-Schumacher-Westmoreland theorem"},
        {"shannon-channel", "<Nbar:*> >= I(X_A;Y_B)@sigma [c->c]", {"holds iff delta >= 0"}, "Shannon noisy channel coding"},
        {"eac", "<N:rho> + H(R)@psi [qq] >= I(R;B)@psi [c->c]{coh}; pure psi on R,B,E", {"cbit output coherently decoupled"},
         "Entanglement-assisted capacity theorem"},
        {"lsd", "<N:*> >= Icoh(R>B)@psi [q->q]; pure psi on R,B,E", {"meaningful when Icoh(R>B) >= 0"}, "Quantum capacity theorem"},
        {"nsd", "<rho> + H(A)@psi [q->q] >= I(A;B)@psi [c->c]{coh}; pure psi on A,B,E", {"cbit output coherently decoupled"},
         "Noisy super-dense coding theorem"},
        {"hashing", "<rho> + I(A;E)@psi [c->c]{coh} >= Icoh(A>B)@psi [qq]; pure psi on A,B,E",
         {"cbit input coherently decoupled", "cbit input uniformly random"}, "Hashing inequality"},
        {"merging", "<<U:rho>> + I(A;E)@psi [c->c] + H(A|B)@psi [qq] >=s <<idSB:rho>>; pure psi on A,B,E",
         {"holds irrespective of the sign of H(A|B)"}, "State merging"},
        {"ntp", "<rho> + I(A;B)@psi [c->c] >= Icoh(A>B)@psi [q->q]; pure psi on A,B,E", {}, "Noisy teleportation"},
        {"cqrsp", "<<idXA.idA:rhoXS>> + H(B|Y_B)@sigma [q->q] + I(X_A;Y_B)@sigma [c->c] >=s <<idSB:rhoS>>", {},
         "Quantum compression with classical side information"},
        {"crd", "<rho> + H(X_A|B)@rho [c->c] >= H(X_A)@rho [cc]", {}, "Common randomness distillation"},
        {"mother", "<rho> + 1/2 I(A;E)@psi [q->q] >= 1/2 I(A;B)@psi [qq]; pure psi on A,B,E", {}, "Mother"},
        {"father", "<N:*> + 1/2 I(R;E)@psi [qq] >= 1/2 I(R;B)@psi [q->q]; pure psi on R,B,E", {}, "Father"},
        {"schumacher-cs", "H(B|Y_B)@sigma [q->q] + <<N'.idA:rhoXS>> >= <<N'.idB:rhoXS>>", {},
         "Schumacher compression applied per classical branch"},
        {"qubit-cbit", "[q->q] >= [c->c]", {}, "A qubit can carry a classical bit"},
        {"qubit-ebit", "[q->q] >= [qq]", {}, "A qubit can distribute an ebit"},
        {"cobit-ebit", "[q->qq] >= [qq]", {}, "A cobit yields an ebit"},
        {"cobit-cbit", "[q->qq] >= [c->c]", {}, "A cobit carries a classical bit"},
        {"cbit-rbit", "[c->c] >= [cc]", {}, "A cbit yields a shared random bit"},
        {"ebit-rbit", "[qq] >= [cc]", {}, "Measuring an ebit yields a shared random bit"},
    };
    std::vector<Axiom> out;
    for (const auto& t : table) out.push_back({t.name, t.text, alg::parse_ri(t.text), t.side, t.source});
    return out;
}

} // namespace detail

inline const std::vector<Axiom>& axiom_db() {
    static const std::vector<Axiom> db = detail::build_axioms();
    return db;
}

inline const Axiom& lookup(const std::string& name) {
    for (const auto& a : axiom_db())
        if (a.name == name) return a;
    fail(ErrorKind::SchemaMismatch, "unknown axiom '" + name + "'");
}

inline bool has_side_condition(const Axiom& a, const std::string& needle) {
    for (const auto& s : a.side_conditions)
        if (s.find(needle) != std::string::npos) return true;
    return false;
}

} // namespace ricalc::der
