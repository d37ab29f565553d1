#pragma once
#include <cmath>
#include <vector>

#include "optimize.hpp"

namespace ricalc::trade {

// f: (Q,E) -> (Q+E, 2E) takes MOTHER points to NSD points;
// g: (R,E) -> (R+2E, E) takes ED points to NTP points.
inline std::pair<double, double> f_map(double q, double e) { return {q + e, 2 * e}; }
inline std::pair<double, double> f_inverse(double q, double r) { return {q - r / 2, r / 2}; }
inline std::pair<double, double> g_map(double r, double e) { return {r + 2 * e, e}; }
inline std::pair<double, double> g_inverse(double r, double q) { return {r - 2 * q, q}; }

struct BijectionReport {
    double worst_violation = 0;  // how far any mapped point lies outside the partner region
    double max_discrepancy = 0;  // largest |mapped - partner boundary| over both coordinates
    std::size_t witnesses = 0;
};

namespace detail {

// Folds in one mapped point (budget, value) checked against the partner witness evaluation.
inline void account(BijectionReport& r, Family partner, const Evaluation& e, double budget, double value) {
    double over_budget = e.constraint - budget;
    double over_value = value - bound_at(partner, e, budget);
    r.worst_violation = std::max({r.worst_violation, over_budget, over_value});
    r.max_discrepancy = std::max({r.max_discrepancy, std::abs(over_budget), std::abs(over_value)});
}

inline bool same_object(const RegionSpec& a, const RegionSpec& b) {
    if (a.state.has_value() != b.state.has_value() || a.channel.has_value() != b.channel.has_value()) return false;
    if (a.env_dim != b.env_dim || a.max_ensemble != b.max_ensemble) return false;
    if (a.state) {
        if (a.alice != b.alice || a.state->layout() != b.state->layout()) return false;
        return (a.state->matrix() - b.state->matrix()).cwiseAbs().maxCoeff() < 1e-12;
    }
    return false;
}

} // namespace detail

// Evaluates each witness under both formulas of a pair and checks that the
// bijection carries the boundary point of one region onto the other, in both directions.
inline BijectionReport check_witnesses(const RegionSpec& a, const RegionSpec& b, const std::vector<Witness>& sample) {
    auto pair_of = [](Family f) {
        if (f == Family::Mother || f == Family::NSD) return 0;
        if (f == Family::NTP || f == Family::ED) return 1;
        return -1;
    };
    if (a.family == b.family || pair_of(a.family) < 0 || pair_of(a.family) != pair_of(b.family))
        fail(ErrorKind::IncompatibleCurves, std::string("no bijection between ") + to_string(a.family) + " and " + to_string(b.family));
    if (!detail::same_object(a, b)) fail(ErrorKind::IncompatibleCurves, "curves were computed for different resources");
    const bool mother_pair = pair_of(a.family) == 0;
    RegionSpec src = a, dst = b;
    src.family = mother_pair ? Family::Mother : Family::ED;
    dst.family = mother_pair ? Family::NSD : Family::NTP;
    const Instance from(src), to(dst);
    BijectionReport r;
    for (const auto& w : sample) {
        Evaluation es = eval_point(from, w), ed = eval_point(to, w);
        // Boundary points certified by the witness at its own constraint value.
        double sb = es.constraint, sv = bound_at(src.family, es, sb);
        double db = ed.constraint, dv = bound_at(dst.family, ed, db);
        auto fwd = mother_pair ? f_map(sb, sv) : g_map(sb, sv);
        auto back = mother_pair ? f_inverse(db, dv) : g_inverse(db, dv);
        detail::account(r, dst.family, ed, fwd.first, fwd.second);
        detail::account(r, src.family, es, back.first, back.second);
        ++r.witnesses;
    }
    return r;
}

// Pools the witnesses of both curves and checks them under both formulas.
inline BijectionReport check_bijections(const TradeoffCurve& a, const TradeoffCurve& b) {
    std::vector<Witness> sample;
    for (const auto* c : {&a, &b})
        for (const auto& p : c->points) sample.push_back(p.witness);
    return check_witnesses(a.spec, b.spec, sample);
}

} // namespace ricalc::trade
