#pragma once
#include <string>
#include <vector>

#include "result.hpp"

namespace ricalc::sim {

namespace gates {

inline Mat I2() { return Mat::Identity(2, 2); }
inline Mat X() { return qc::shift_operator(2, 1); }
inline Mat Z() { return qc::clock_operator(2, 1); }
inline Mat H() {
    Mat h(2, 2);
    h << 1, 1, 1, -1;
    return h / std::sqrt(2.0);
}
inline Mat CX() { return controlled({I2(), X()}); }
inline Mat CZ() { return controlled({I2(), Z()}); }

} // namespace gates

namespace detail {

// Splits an input into reference labels and the trailing `n` payload qubits.
inline std::map<std::string, Party> owners_for(const StateSpec& input, std::size_t n, const char* what) {
    const auto& ls = input.layout().labels();
    if (ls.size() < n) fail(ErrorKind::DimensionMismatch, std::string(what) + " needs " + std::to_string(n) + " payload qubit(s)");
    std::map<std::string, Party> owners;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        bool payload = i + n >= ls.size();
        if (payload && input.layout().dim(i) != 2) fail(ErrorKind::DimensionMismatch, std::string(what) + " payload must be a qubit");
        owners[ls[i]] = payload ? Party::Alice : Party::Ref;
    }
    return owners;
}

inline StateSpec relabel(const StateSpec& s, const std::map<std::string, std::string>& names) {
    std::vector<std::string> ls;
    for (const auto& l : s.layout().labels()) ls.push_back(names.count(l) ? names.at(l) : l);
    return StateSpec::trusted(qc::SystemLayout(ls, s.layout().dims()), s.matrix());
}

inline std::vector<std::string> refs(const StateSpec& s, std::size_t n) {
    const auto& ls = s.layout().labels();
    return {ls.begin(), ls.end() - static_cast<long>(n)};
}

} // namespace detail

// Teleportation: the trailing qubit of `input` ends up with Bob on "TB".
inline SimResult run_tp(const StateSpec& input, bool keep_env = false) {
    using namespace gates;
    Lab lab(keep_env);
    lab.add(input, detail::owners_for(input, 1, "TP"));
    const std::string a = input.layout().labels().back();
    lab.ebit("TA", "TB");
    lab.unitary(Party::Alice, CX(), {a, "TA"});
    lab.unitary(Party::Alice, H(), {a});
    lab.cbit(a, "M1");
    lab.cbit("TA", "M2");
    lab.unitary(Party::Bob, CX(), {"M2", "TB"});
    lab.unitary(Party::Bob, CZ(), {"M1", "TB"});
    return finish(lab, "TP", detail::relabel(input, {{a, "TB"}}), "2[c->c] + [qq]", "[q->q]");
}

// Super-dense coding of the two trailing (classical) qubits of `input`; Bob decodes into "D1", "D2".
inline SimResult run_sd(const StateSpec& input, bool keep_env = false) {
    using namespace gates;
    Lab lab(keep_env);
    lab.add(input, detail::owners_for(input, 2, "SD"));
    const auto& ls = input.layout().labels();
    const std::string m1 = ls[ls.size() - 2], m2 = ls.back();
    lab.ebit("TA", "TB");
    lab.unitary(Party::Alice, CX(), {m2, "TA"});
    lab.unitary(Party::Alice, CZ(), {m1, "TA"});
    lab.qubit("TA", "D1");
    lab.unitary(Party::Bob, CX(), {"D1", "TB"});
    lab.unitary(Party::Bob, H(), {"D1"});
    return finish(lab, "SD", detail::relabel(input, {{m1, "D1"}, {m2, "TB"}}), "[q->q] + [qq]", "2[c->c]");
}

// Entanglement distribution: Alice prepares Phi_2 locally and sends half.
inline SimResult run_ed(bool keep_env = false) {
    Lab lab(keep_env);
    lab.add(qc::phi(2, "A", "T"), {{"A", Party::Alice}, {"T", Party::Alice}});
    lab.qubit("T", "B");
    return finish(lab, "ED", qc::phi(2, "A", "B"), "[q->q]", "[qq]");
}

// 2[q->qq] + [qq] >= [q->q] + 2[qq]: teleportation with cobits in place of cbits.
// The trailing qubit moves to Bob's "TB"; (K1,C1) and (K2,C2) are returned ebits.
inline SimResult run_coherent_sd(const StateSpec& input, bool keep_env = false) {
    using namespace gates;
    Lab lab(keep_env);
    lab.add(input, detail::owners_for(input, 1, "coherent-SD"));
    const std::string a = input.layout().labels().back();
    lab.ebit("TA", "TB");
    lab.unitary(Party::Alice, CX(), {a, "TA"});
    lab.unitary(Party::Alice, H(), {a});
    lab.cobit(a, "K1", "C1");
    lab.cobit("TA", "K2", "C2");
    lab.unitary(Party::Bob, CX(), {"C2", "TB"});
    lab.unitary(Party::Bob, CZ(), {"C1", "TB"});
    StateSpec target = qc::tensor(qc::tensor(detail::relabel(input, {{a, "TB"}}), qc::phi(2, "K1", "C1")), qc::phi(2, "K2", "C2"));
    return finish(lab, "coherent-SD", target, "2[q->qq] + [qq]", "[q->q] + 2[qq]");
}

namespace detail {

// Bob ends with copies of Alice's qubits a1, a2 in "Q", "TB" (two cobits from one qubit and one ebit).
inline void coherent_dense(Lab& lab, const std::string& a1, const std::string& a2, const std::string& ta, const std::string& tb,
                           const std::string& q) {
    using namespace gates;
    lab.ebit(ta, tb);
    lab.unitary(Party::Alice, CX(), {a2, ta});
    lab.unitary(Party::Alice, CZ(), {a1, ta});
    lab.qubit(ta, q);
    lab.unitary(Party::Bob, CX(), {q, tb});
    lab.unitary(Party::Bob, H(), {q});
}

} // namespace detail

// [q->q] + [qq] >= 2[q->qq]: coherent super-dense coding of the two trailing qubits.
inline SimResult run_coherent_tp(const StateSpec& input, bool keep_env = false) {
    Lab lab(keep_env);
    lab.add(input, detail::owners_for(input, 2, "coherent-TP"));
    const auto& ls = input.layout().labels();
    const std::string a1 = ls[ls.size() - 2], a2 = ls.back();
    detail::coherent_dense(lab, a1, a2, "TA", "TB", "Q");
    StateSpec target = qc::apply(qc::coherent_channel(2, a1, a1, "Q"), input, {a1});
    target = qc::apply(qc::coherent_channel(2, a2, a2, "TB"), target, {a2});
    return finish(lab, "coherent-TP", target, "[q->q] + [qq]", "2[q->qq]");
}

// Coherent-SD whose two cobits are produced by coherent-TP: one copy of the
// coherent communication identity. Net ledger: [q->q] + 2[qq] in and out.
inline SimResult run_ccc_roundtrip(const StateSpec& input, bool keep_env = false) {
    using namespace gates;
    Lab lab(keep_env);
    lab.add(input, detail::owners_for(input, 1, "ccc round trip"));
    const std::string a = input.layout().labels().back();
    lab.ebit("TA", "TB");
    lab.unitary(Party::Alice, CX(), {a, "TA"});
    lab.unitary(Party::Alice, H(), {a});
    detail::coherent_dense(lab, a, "TA", "SA", "C2", "C1");
    lab.unitary(Party::Bob, CX(), {"C2", "TB"});
    lab.unitary(Party::Bob, CZ(), {"C1", "TB"});
    StateSpec target = qc::tensor(qc::tensor(detail::relabel(input, {{a, "TB"}}), qc::phi(2, a, "C1")), qc::phi(2, "TA", "C2"));
    return finish(lab, "ccc-roundtrip", target, "[q->q] + 2[qq]", "[q->q] + 2[qq]");
}

inline const std::vector<std::string>& unit_protocols() {
    static const std::vector<std::string> names = {"TP", "SD", "ED", "coherent-SD", "coherent-TP", "ccc-roundtrip"};
    return names;
}

inline SimResult run_unit(const std::string& name, const StateSpec& input, bool keep_env = false) {
    if (name == "TP") return run_tp(input, keep_env);
    if (name == "SD") return run_sd(input, keep_env);
    if (name == "ED") return run_ed(keep_env);
    if (name == "coherent-SD") return run_coherent_sd(input, keep_env);
    if (name == "coherent-TP") return run_coherent_tp(input, keep_env);
    if (name == "ccc-roundtrip") return run_ccc_roundtrip(input, keep_env);
    fail(ErrorKind::UnknownKind, "unknown unit protocol '" + name + "'");
}

} // namespace ricalc::sim
