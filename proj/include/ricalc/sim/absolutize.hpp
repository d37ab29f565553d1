#pragma once
#include <string>

#include "result.hpp"

namespace ricalc::sim {

enum class AbsolutizeKind { Id, Coherent, Classical };

inline AbsolutizeKind absolutize_kind(const std::string& s) {
    if (s == "id") return AbsolutizeKind::Id;
    if (s == "coherent") return AbsolutizeKind::Coherent;
    if (s == "classical") return AbsolutizeKind::Classical;
    fail(ErrorKind::UnknownKind, "absolutize kind must be id, coherent or classical");
}

inline const char* to_string(AbsolutizeKind k) {
    switch (k) {
    case AbsolutizeKind::Id: return "id";
    case AbsolutizeKind::Coherent: return "coherent";
    case AbsolutizeKind::Classical: return "classical";
    }
    return "?";
}

// Weyl operators X^a Z^b indexed by x = a d + b, or the cyclic shifts X^x for the classical kind.
inline std::vector<Mat> twirl_group(AbsolutizeKind k, int d) {
    std::vector<Mat> us;
    if (k == AbsolutizeKind::Classical)
        for (int a = 0; a < d; ++a) us.push_back(qc::shift_operator(d, a));
    else
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) us.push_back(qc::weyl_operator(d, a, b));
    return us;
}

// Corrections V_x with Delta o U_x = (V_x (x) U_x) o Delta for the coherent channel: V_x = X^a.
inline std::vector<Mat> coherent_corrections(int d) {
    std::vector<Mat> vs;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) vs.push_back(qc::shift_operator(d, a));
    return vs;
}

// Largest entry of Delta U_x - (V_x (x) U_x) Delta over the Weyl group.
inline double intertwining_error(int d) {
    Mat delta = qc::coherent_channel(d).matrix();
    auto us = twirl_group(AbsolutizeKind::Id, d);
    auto vs = coherent_corrections(d);
    double worst = 0;
    for (std::size_t x = 0; x < us.size(); ++x)
        worst = std::max(worst, (delta * us[x] - qc::kron(vs[x], us[x]) * delta).cwiseAbs().maxCoeff());
    return worst;
}

namespace detail {

// Block-diagonal assembly sum_x p |x><x|_XA (x) |x><x|_XB (x) rho_x with uniform p.
inline StateSpec with_randomness(const std::vector<StateSpec>& branches) {
    const auto nx = static_cast<Eigen::Index>(branches.size());
    const Eigen::Index dq = branches.front().matrix().rows();
    qc::SystemLayout layout{{"XA", static_cast<int>(nx)}, {"XB", static_cast<int>(nx)}};
    layout = concat(layout, branches.front().layout());
    Mat m = Mat::Zero(nx * nx * dq, nx * nx * dq);
    for (Eigen::Index x = 0; x < nx; ++x) {
        const Eigen::Index at = (x * nx + x) * dq;
        m.block(at, at, dq, dq) = branches[static_cast<std::size_t>(x)].matrix() / static_cast<double>(nx);
    }
    return StateSpec::trusted(std::move(layout), std::move(m));
}

} // namespace detail

// Simulates a channel that is only valid on tau_d as an absolute one: Alice
// applies U_x keyed by shared randomness x, Bob (and for the coherent channel
// Alice on her output) undoes it. `input` is phi^{R A'} with the trailing label
// of dimension d; the channel output is "B" (and "A" for the coherent kind).
// Every operation is controlled by x, so each value of x is simulated in its own
// lab and the branches are assembled with the randomness registers XA, XB.
// The environment is always kept so both decoupling notions can be checked.
inline SimResult run_absolutize(AbsolutizeKind kind, int d, const StateSpec& input) {
    const auto& ls = input.layout().labels();
    if (ls.empty() || input.layout().dim(ls.size() - 1) != d)
        fail(ErrorKind::DimensionMismatch, "absolutize input must end with a system of dimension d");
    const std::string a = ls.back();
    std::map<std::string, Party> owners;
    for (const auto& l : ls) owners[l] = l == a ? Party::Alice : Party::Ref;

    const auto us = twirl_group(kind, d);
    const auto vs = coherent_corrections(d);
    const int nx = static_cast<int>(us.size());
    Lab shared;
    shared.randomness(nx, "XA", "XB");

    std::vector<StateSpec> qp, qq;
    Mat restriction = Mat::Zero(d, d);
    StateSpec ideal;
    for (int x = 0; x < nx; ++x) {
        const Mat& u = us[static_cast<std::size_t>(x)];
        Lab lab(true);
        lab.add(input, owners);
        lab.unitary(Party::Alice, u, {a});
        Mat in = lab.reduced({a}).matrix();
        restriction += (kind == AbsolutizeKind::Classical ? dephase(in) : in) / static_cast<double>(nx);
        switch (kind) {
        case AbsolutizeKind::Id:
            lab.use_channel("<id>", qc::identity_channel(d, a, "B"), {a}, Party::Bob, 0.0);
            ideal = qc::apply(qc::identity_channel(d, a, "B"), input, {a});
            break;
        case AbsolutizeKind::Coherent: {
            auto iso = qc::coherent_channel(d, a, "A", "B");
            lab.use_channel("<Delta>", qc::ChannelSpec(iso.in_layout(), iso.out_layout(), {iso.matrix()}), {a}, Party::Bob, 0.0);
            lab.give("A", Party::Alice);
            lab.unitary(Party::Alice, vs[static_cast<std::size_t>(x)].adjoint(), {"A"});
            ideal = qc::apply(iso, input, {a});
            break;
        }
        case AbsolutizeKind::Classical:
            lab.use_channel("<DeltaBar>", qc::dephasing_channel(d, a, "B"), {a}, Party::Bob, 0.0);
            ideal = qc::apply(qc::dephasing_channel(d, a, "B"), input, {a});
            break;
        }
        lab.unitary(Party::Bob, u.adjoint(), {"B"});
        qp.push_back(lab.state());
        qq.push_back(qc::reorder(lab.qq_state(), ideal.layout().labels()));
    }

    // Both distances are block diagonal in the uniform randomness, so they are
    // averages of per-branch trace norms.
    Mat avg = Mat::Zero(qp.front().matrix().rows(), qp.front().matrix().cols());
    for (const auto& b : qp) avg += b.matrix() / static_cast<double>(nx);
    SimResult r;
    r.protocol = std::string("absolutize-") + to_string(kind);
    r.validity = qc::trace_norm_hermitian(restriction - qc::tau(d).matrix());
    for (int x = 0; x < nx; ++x) {
        r.accuracy += qc::trace_norm_hermitian(qq[static_cast<std::size_t>(x)].matrix() - ideal.matrix()) / nx;
        r.residual += qc::trace_norm_hermitian(qp[static_cast<std::size_t>(x)].matrix() - avg) / nx;
    }
    r.qp = detail::with_randomness(qp);
    r.output = detail::with_randomness(qq);
    r.consumed = shared.consumed();
    r.untallied = shared.untallied();
    return r;
}

inline SimResult run_absolutize(const std::string& kind, int d, const StateSpec& input) {
    return run_absolutize(absolutize_kind(kind), d, input);
}

} // namespace ricalc::sim
