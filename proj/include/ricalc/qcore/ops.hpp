#pragma once
#include <algorithm>
#include <string>
#include <vector>

#include "objects.hpp"

namespace ricalc::qc {

inline StateSpec tensor(const StateSpec& a, const StateSpec& b) {
    SystemLayout layout = concat(a.layout(), b.layout());
    return StateSpec::trusted(std::move(layout), kron(a.matrix(), b.matrix()));
}

inline std::vector<std::size_t> positions_of(const SystemLayout& layout, const std::vector<std::string>& labels) {
    std::vector<std::size_t> pos;
    for (const auto& l : labels) {
        auto p = layout.index_of(l);
        if (std::find(pos.begin(), pos.end(), p) != pos.end()) fail(ErrorKind::DuplicateLabel, "label '" + l + "' listed twice");
        pos.push_back(p);
    }
    return pos;
}

// Restriction to `keep`, in the order listed.
inline StateSpec partial_trace(const StateSpec& s, const std::vector<std::string>& keep) {
    if (keep.empty()) fail(ErrorKind::UnknownLabel, "partial trace must keep at least one label");
    auto pos = positions_of(s.layout(), keep);
    return StateSpec::trusted(s.layout().select(keep), partial_trace_positions(s.matrix(), s.layout().dims(), pos));
}

inline StateSpec reorder(const StateSpec& s, const std::vector<std::string>& order) {
    if (order.size() != s.layout().size()) fail(ErrorKind::UnknownLabel, "reorder must list every label");
    auto pos = positions_of(s.layout(), order);
    return StateSpec::trusted(s.layout().select(order), permute_systems(s.matrix(), s.layout().dims(), pos));
}

// Canonical purification: eigenvalues descending, each eigenvector phase-fixed so
// that its first nonzero component is real positive. The reference dimension is the rank.
inline Vec purification_vector(const StateSpec& s, std::size_t* ref_dim = nullptr) {
    Eigen::SelfAdjointEigenSolver<Mat> es(s.matrix());
    const Eigen::Index n = es.eigenvalues().size();
    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = n; i-- > 0;)
        if (es.eigenvalues()(i) > 1e-12) idx.push_back(i);
    if (idx.empty()) idx.push_back(n - 1);
    const auto r = static_cast<Eigen::Index>(idx.size());
    Vec psi = Vec::Zero(n * r);
    double norm2 = 0;
    for (Eigen::Index k = 0; k < r; ++k) norm2 += std::max(0.0, es.eigenvalues()(idx[k]));
    for (Eigen::Index k = 0; k < r; ++k) {
        Vec e = es.eigenvectors().col(idx[k]);
        for (Eigen::Index j = 0; j < n; ++j)
            if (std::abs(e(j)) > 1e-12) {
                e *= std::conj(e(j)) / std::abs(e(j));
                break;
            }
        double w = std::sqrt(std::max(0.0, es.eigenvalues()(idx[k])) / norm2);
        for (Eigen::Index j = 0; j < n; ++j) psi(j * r + k) = w * e(j);
    }
    if (ref_dim) *ref_dim = static_cast<std::size_t>(r);
    return psi;
}

inline StateSpec purify(const StateSpec& s, const std::string& ref_label) {
    if (s.layout().contains(ref_label)) fail(ErrorKind::DuplicateLabel, "reference label '" + ref_label + "' is not fresh");
    std::size_t r = 1;
    Vec psi = purification_vector(s, &r);
    SystemLayout layout = s.layout();
    layout.push(ref_label, static_cast<int>(r));
    return StateSpec::trusted(std::move(layout), projector(psi));
}

inline IsometrySpec stinespring(const ChannelSpec& c, const std::string& env_label) {
    if (!c.trace_preserving()) fail(ErrorKind::NotTracePreserving, "dilation needs a CPTP map");
    const auto& ks = c.kraus();
    const auto nk = static_cast<Eigen::Index>(ks.size());
    const Eigen::Index dout = ks.front().rows(), din = ks.front().cols();
    Mat v = Mat::Zero(dout * nk, din);
    for (Eigen::Index k = 0; k < nk; ++k)
        for (Eigen::Index o = 0; o < dout; ++o) v.row(o * nk + k) = ks[k].row(o);
    SystemLayout out = c.out_layout();
    out.push(env_label, static_cast<int>(nk));
    return IsometrySpec(c.in_layout(), out, v);
}

namespace detail {

struct Targeted {
    Mat matrix;               // state with targets moved to the end
    SystemLayout rest;        // non-target labels in original order
    Eigen::Index rest_dim = 1;
};

inline Targeted move_targets_last(const StateSpec& s, const std::vector<std::string>& target, const SystemLayout& expected) {
    auto pos = positions_of(s.layout(), target);
    if (target.size() != expected.size()) fail(ErrorKind::DimensionMismatch, "target count differs from input layout");
    for (std::size_t i = 0; i < target.size(); ++i)
        if (s.layout().dim(pos[i]) != expected.dim(i))
            fail(ErrorKind::DimensionMismatch, "target '" + target[i] + "' has the wrong dimension");
    Targeted t;
    t.rest = s.layout().without(target);
    std::vector<std::size_t> order;
    for (const auto& l : t.rest.labels()) order.push_back(s.layout().index_of(l));
    order.insert(order.end(), pos.begin(), pos.end());
    t.matrix = permute_systems(s.matrix(), s.layout().dims(), order);
    t.rest_dim = static_cast<Eigen::Index>(t.rest.total_dim());
    return t;
}

} // namespace detail

// Applies a CP map given by Kraus operators to `target`; output layout is the
// non-target labels followed by `out`.
inline StateSpec apply_kraus(const std::vector<Mat>& kraus, const SystemLayout& in, const SystemLayout& out, const StateSpec& s,
                             const std::vector<std::string>& target) {
    auto t = detail::move_targets_last(s, target, in);
    SystemLayout layout = concat(t.rest, out);
    Mat acc = Mat::Zero(static_cast<Eigen::Index>(layout.total_dim()), static_cast<Eigen::Index>(layout.total_dim()));
    for (const auto& k : kraus) acc += sandwich_tail(t.matrix, k, k, t.rest_dim);
    return StateSpec::trusted(std::move(layout), std::move(acc));
}

inline StateSpec apply(const ChannelSpec& c, const StateSpec& s, const std::vector<std::string>& target) {
    return apply_kraus(c.kraus(), c.in_layout(), c.out_layout(), s, target);
}

inline StateSpec apply(const IsometrySpec& v, const StateSpec& s, const std::vector<std::string>& target) {
    return apply_kraus({v.matrix()}, v.in_layout(), v.out_layout(), s, target);
}

inline StateSpec apply(const ChannelSpec& c, const StateSpec& s) { return apply(c, s, c.in_layout().labels()); }
inline StateSpec apply(const IsometrySpec& v, const StateSpec& s) { return apply(v, s, v.in_layout().labels()); }

// Output is sum_x |x><x| (outcome) (x) P_x(rho), with the outcome label first.
inline StateSpec apply_instrument(const InstrumentSpec& t, const StateSpec& s, const std::vector<std::string>& target,
                                  const std::string& outcome_label) {
    if (s.layout().contains(outcome_label) && std::find(target.begin(), target.end(), outcome_label) == target.end())
        fail(ErrorKind::DuplicateLabel, "outcome label '" + outcome_label + "' is not fresh");
    auto tg = detail::move_targets_last(s, target, t.in_layout());
    SystemLayout inner = concat(tg.rest, t.out_layout());
    const auto nb = static_cast<Eigen::Index>(t.branches().size());
    SystemLayout layout;
    layout.push(outcome_label, static_cast<int>(nb));
    layout = concat(layout, inner);
    const auto di = static_cast<Eigen::Index>(inner.total_dim());
    Mat out = Mat::Zero(nb * di, nb * di);
    for (Eigen::Index x = 0; x < nb; ++x)
        for (const auto& k : t.branches()[static_cast<std::size_t>(x)])
            out.block(x * di, x * di, di, di) += sandwich_tail(tg.matrix, k, k, tg.rest_dim);
    return StateSpec::trusted(std::move(layout), std::move(out));
}

inline double trace_of(const StateSpec& s) { return s.matrix().trace().real(); }

inline double purity(const StateSpec& s) { return (s.matrix() * s.matrix()).trace().real(); }

} // namespace ricalc::qc

namespace ricalc::qc {

// Parallel composition; layouts are concatenated.
inline ChannelSpec tensor(const ChannelSpec& a, const ChannelSpec& b) {
    std::vector<Mat> ks;
    for (const auto& x : a.kraus())
        for (const auto& y : b.kraus()) ks.push_back(kron(x, y));
    return ChannelSpec(concat(a.in_layout(), b.in_layout()), concat(a.out_layout(), b.out_layout()), ks,
                       a.trace_preserving() && b.trace_preserving());
}

// second o first; the output layout of `first` must match the input of `second` dimensionally.
inline ChannelSpec compose(const ChannelSpec& first, const ChannelSpec& second) {
    if (first.out_layout().total_dim() != second.in_layout().total_dim())
        fail(ErrorKind::DimensionMismatch, "composition dimensions differ");
    std::vector<Mat> ks;
    for (const auto& y : second.kraus())
        for (const auto& x : first.kraus()) ks.push_back(y * x);
    return ChannelSpec(first.in_layout(), second.out_layout(), ks, first.trace_preserving() && second.trace_preserving());
}

} // namespace ricalc::qc
