#pragma once
#include <cmath>
#include <random>
#include <string>

#include "../qcore/random.hpp"
#include "distance.hpp"

namespace ricalc::info {

using qc::ChannelSpec;

inline void require_same_shape(const ChannelSpec& m, const ChannelSpec& n) {
    if (m.in_layout().dims() != n.in_layout().dims() || m.out_layout().dims() != n.out_layout().dims())
        fail(ErrorKind::DimensionMismatch, "operations act on different spaces");
}

// ||(M - N) xi||_1 for a given extension xi of the channel input.
inline double op_distance_on(const ChannelSpec& m, const ChannelSpec& n, const StateSpec& xi, const std::vector<std::string>& target) {
    require_same_shape(m, n);
    ChannelSpec n2(m.in_layout(), m.out_layout(), n.kraus(), n.trace_preserving());
    auto a = qc::apply(m, xi, target);
    auto b = qc::apply(n2, xi, target);
    return qc::trace_norm_hermitian(a.matrix() - b.matrix());
}

// Relative distance: evaluated on the canonical purification of omega (omega on the input labels).
inline double op_distance(const ChannelSpec& m, const ChannelSpec& n, const StateSpec& omega) {
    require_same_shape(m, n);
    if (omega.layout().dims() != m.in_layout().dims()) fail(ErrorKind::DimensionMismatch, "test state does not match the input");
    std::map<std::string, std::string> names;
    for (std::size_t i = 0; i < omega.layout().size(); ++i) names[omega.layout().label(i)] = m.in_layout().label(i);
    auto xi = qc::purify(omega.relabeled(names), "#ref");
    return op_distance_on(m, n, xi, m.in_layout().labels());
}

struct AbsoluteSearch {
    int restarts = 64;
    int refine_rounds = 200;
    std::uint64_t seed = 1;
};

// Absolute distance: best value over random pure inputs on (input (x) reference of
// equal dimension) plus local refinement. A lower bound on the supremum.
inline double op_distance_absolute(const ChannelSpec& m, const ChannelSpec& n, const AbsoluteSearch& cfg = {}) {
    require_same_shape(m, n);
    const auto din = static_cast<Eigen::Index>(m.in_layout().total_dim());
    qc::SystemLayout layout = m.in_layout();
    layout.push("#ref", static_cast<int>(din));
    auto value = [&](const qc::Vec& v) {
        return op_distance_on(m, n, StateSpec::trusted(layout, qc::projector(v)), m.in_layout().labels());
    };
    qc::Rng rng(cfg.seed);
    double best = 0;
    for (int r = 0; r < cfg.restarts; ++r) {
        qc::Vec v;
        if (r == 0) {
            v = qc::Vec::Zero(din * din);
            for (Eigen::Index i = 0; i < din; ++i) v(i * din + i) = 1.0 / std::sqrt(static_cast<double>(din));
        } else {
            v = qc::haar_vector(din * din, rng);
        }
        double cur = value(v), step = 0.3;
        for (int it = 0; it < cfg.refine_rounds && step > 1e-6; ++it) {
            qc::Vec cand = v + step * qc::ginibre(din * din, 1, rng).col(0);
            cand /= cand.norm();
            double c = value(cand);
            if (c > cur) {
                cur = c;
                v = cand;
            } else {
                step *= 0.8;
            }
        }
        best = std::max(best, cur);
    }
    return best;
}

// eta(eps) + K eps log2(dim) with K = 1; eta(eps) = -eps log2 eps for eps <= 1/e, else log2(dim).
inline double fannes_bound(int dim, double eps) {
    if (dim < 2) fail(ErrorKind::OutOfRange, "fannes_bound needs dim >= 2");
    if (!(eps >= 0.0 && eps <= 2.0)) fail(ErrorKind::OutOfRange, "fannes_bound needs eps in [0,2]");
    const double logd = std::log2(static_cast<double>(dim));
    double eta = 0;
    if (eps > 0) eta = eps <= std::exp(-1.0) ? -eps * std::log2(eps) : logd;
    return eta + eps * logd;
}

} // namespace ricalc::info
