#pragma once
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "../algebra/expr.hpp"
#include "../info/distance.hpp"
#include "../qcore/ops.hpp"
#include "../qcore/standard.hpp"

namespace ricalc::sim {

using qc::Mat;
using qc::StateSpec;

enum class Party { Alice, Bob, Ref, Env };

inline const char* to_string(Party p) {
    switch (p) {
    case Party::Alice: return "Alice";
    case Party::Bob: return "Bob";
    case Party::Ref: return "Ref";
    case Party::Env: return "Env";
    }
    return "?";
}

// Block-diagonal controlled unitary sum_c |c><c| (x) U_c, control first.
inline Mat controlled(const std::vector<Mat>& us) {
    const auto n = static_cast<Eigen::Index>(us.size());
    const Eigen::Index d = us.front().rows();
    Mat m = Mat::Zero(n * d, n * d);
    for (Eigen::Index c = 0; c < n; ++c) m.block(c * d, c * d, d, d) = us[static_cast<std::size_t>(c)];
    return m;
}

inline Mat dephase(const Mat& m) { return m.diagonal().asDiagonal(); }

// One invocation of a unit resource, with the deviation of its input from the test state.
struct Invocation {
    std::string resource;
    double validity = 0;
};

// Distant laboratories sharing one global state. Every operation names the
// acting party and may only touch labels that party owns. Unit resources are
// the only way to move systems between parties; each use is tallied.
class Lab {
public:
    explicit Lab(bool keep_env = false) : keep_env_(keep_env) {}

    const StateSpec& state() const { return state_; }
    bool keeps_env() const { return keep_env_; }
    const alg::ResourceExpr& consumed() const { return consumed_; }
    const std::vector<Invocation>& invocations() const { return invocations_; }
    const std::vector<std::string>& env_labels() const { return env_; }
    Party owner(const std::string& l) const {
        auto it = owner_.find(l);
        if (it == owner_.end()) fail(ErrorKind::UnknownLabel, "no system '" + l + "' in the lab");
        return it->second;
    }
    double max_validity() const {
        double v = 0;
        for (const auto& i : invocations_) v = std::max(v, i.validity);
        return v;
    }

    // Prepares a system for free (inputs, local ancillas).
    void add(const StateSpec& s, const std::map<std::string, Party>& owners) {
        for (const auto& l : s.layout().labels()) {
            if (owner_.count(l)) fail(ErrorKind::DuplicateLabel, "system '" + l + "' already exists");
            auto it = owners.find(l);
            if (it == owners.end()) fail(ErrorKind::UnknownLabel, "no owner given for '" + l + "'");
            owner_[l] = it->second;
        }
        state_ = state_.layout().empty() ? s : qc::tensor(state_, s);
    }

    void unitary(Party p, const Mat& u, const std::vector<std::string>& labels) {
        require_owned(p, labels);
        qc::SystemLayout in;
        for (const auto& l : labels) in.push(l, state_.layout().dim_of(l));
        state_ = qc::apply(qc::IsometrySpec(in, in, u), state_, labels);
    }

    // Local CPTP map; with keep_env the Stinespring environment is kept and handed to Env.
    void channel(Party p, const qc::ChannelSpec& c, const std::vector<std::string>& labels) {
        require_owned(p, labels);
        apply_channel(c, labels, p);
    }

    void discard(Party p, const std::vector<std::string>& labels) {
        require_owned(p, labels);
        std::vector<std::string> keep;
        for (const auto& l : state_.layout().labels())
            if (std::find(labels.begin(), labels.end(), l) == labels.end()) keep.push_back(l);
        state_ = qc::partial_trace(state_, keep);
        for (const auto& l : labels) owner_.erase(l);
    }

    // [c->c]: dephasing channel from -> to, `to` handed to the other party.
    void cbit(const std::string& from, const std::string& to) {
        auto p = owner(from);
        check_qubit(from, "[c->c]");
        record_input(from, "[c->c]", true);
        consumed_ = alg::add(consumed_, alg::ResourceExpr::term(alg::ResourceSymbol::cbit()));
        apply_channel(qc::dephasing_channel(2, from, to), {from}, other(p));
    }

    // [q->q]: identity channel from -> to.
    void qubit(const std::string& from, const std::string& to) {
        auto p = owner(from);
        check_qubit(from, "[q->q]");
        record_input(from, "[q->q]");
        consumed_ = alg::add(consumed_, alg::ResourceExpr::term(alg::ResourceSymbol::qubit()));
        apply_channel(qc::identity_channel(2, from, to), {from}, other(p));
    }

    // [q->qq]: coherent channel |x> -> |x>_keep |x>_to, `keep` stays with the sender.
    void cobit(const std::string& from, const std::string& keep, const std::string& to) {
        auto p = owner(from);
        check_qubit(from, "[q->qq]");
        record_input(from, "[q->qq]", true);
        consumed_ = alg::add(consumed_, alg::ResourceExpr::term(alg::ResourceSymbol::cobit()));
        state_ = qc::apply(qc::coherent_channel(2, from, keep, to), state_, {from});
        owner_.erase(from);
        owner_[keep] = p;
        owner_[to] = other(p);
    }

    // [qq]: Phi_2 shared between Alice's `a` and Bob's `b`.
    void ebit(const std::string& a, const std::string& b) {
        consumed_ = alg::add(consumed_, alg::ResourceExpr::term(alg::ResourceSymbol::ebit()));
        add(qc::phi(2, a, b), {{a, Party::Alice}, {b, Party::Bob}});
    }

    // Shared randomness PhiBar_d; tallied as log2(d) [cc] when d is a power of two.
    void randomness(int d, const std::string& a, const std::string& b) {
        int k = 0;
        while ((1 << k) < d) ++k;
        if ((1 << k) == d) consumed_ = alg::add(consumed_, alg::ResourceExpr::term(alg::ResourceSymbol::rbit(), alg::Coefficient(k)));
        else untallied_.push_back("PhiBar_" + std::to_string(d));
        add(qc::phibar(d, a, b), {{a, Party::Alice}, {b, Party::Bob}});
    }
    const std::vector<std::string>& untallied() const { return untallied_; }

    // Uses a noisy channel resource on `labels`; `validity` is the caller-measured input deviation.
    void use_channel(const std::string& name, const qc::ChannelSpec& c, const std::vector<std::string>& labels, Party receiver,
                     double validity) {
        auto p = owner(labels.front());
        require_owned(p, labels);
        invocations_.push_back({name, validity});
        for (const auto& l : labels) owner_.erase(l);
        std::vector<std::string> outs = c.out_layout().labels();
        if (keep_env_ && c.kraus().size() > 1) {
            std::string e = fresh_env();
            state_ = qc::apply(qc::stinespring(c, e), state_, labels);
            owner_[e] = Party::Env;
        } else {
            state_ = qc::apply(c, state_, labels);
        }
        for (const auto& l : outs) owner_[l] = receiver;
    }

    void give(const std::string& label, Party p) { owner_[label] = p; }

    StateSpec reduced(const std::vector<std::string>& keep) const { return qc::reorder(qc::partial_trace(state_, keep), keep); }

    // State without the environment systems.
    StateSpec qq_state() const {
        std::vector<std::string> keep;
        for (const auto& l : state_.layout().labels())
            if (std::find(env_.begin(), env_.end(), l) == env_.end()) keep.push_back(l);
        return qc::partial_trace(state_, keep);
    }

private:
    static Party other(Party p) { return p == Party::Alice ? Party::Bob : Party::Alice; }

    void require_owned(Party p, const std::vector<std::string>& labels) const {
        for (const auto& l : labels)
            if (owner(l) != p)
                fail(ErrorKind::OwnershipViolation, std::string(to_string(p)) + " acts on '" + l + "' owned by " + to_string(owner(l)));
    }

    void check_qubit(const std::string& l, const char* what) const {
        if (state_.layout().dim_of(l) != 2) fail(ErrorKind::DimensionMismatch, std::string(what) + " carries one qubit");
    }

    // Classical-basis resources are tested on the dephased input.
    void record_input(const std::string& l, const char* what, bool classical = false) {
        Mat in = qc::partial_trace(state_, {l}).matrix();
        if (classical) in = dephase(in);
        invocations_.push_back({what, qc::trace_norm_hermitian(in - qc::tau(2).matrix())});
    }

    std::string fresh_env() {
        std::string e = "Env" + std::to_string(env_.size() + 1);
        env_.push_back(e);
        return e;
    }

    void apply_channel(const qc::ChannelSpec& c, const std::vector<std::string>& labels, Party receiver) {
        for (const auto& l : labels) owner_.erase(l);
        std::vector<std::string> outs = c.out_layout().labels();
        if (keep_env_ && c.kraus().size() > 1) {
            std::string e = fresh_env();
            state_ = qc::apply(qc::stinespring(c, e), state_, labels);
            owner_[e] = Party::Env;
        } else {
            state_ = qc::apply(c, state_, labels);
        }
        for (const auto& l : outs) owner_[l] = receiver;
    }

    StateSpec state_;
    std::map<std::string, Party> owner_;
    alg::ResourceExpr consumed_;
    std::vector<Invocation> invocations_;
    std::vector<std::string> env_;
    std::vector<std::string> untallied_;
    bool keep_env_ = false;
};

} // namespace ricalc::sim
