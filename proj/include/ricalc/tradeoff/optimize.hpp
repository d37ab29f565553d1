#pragma once
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "../qcore/random.hpp"
#include "../util/parallel.hpp"
#include "evaluate.hpp"

namespace ricalc::trade {

struct OptimizerConfig {
    int restarts = 64;
    std::uint64_t seed = 1;
    int max_iter = 2000;
    double rel_tol = 1e-7;
    double initial_step = 0.5;
    double min_step = 1e-4;
    double feasibility_tol = 1e-10;
};

struct CurvePoint {
    double budget = 0;
    double value = 0;  // region bound certified by the witness at this budget
    Evaluation eval;
    bool feasible = false;
    Witness witness;
};

struct TradeoffCurve {
    RegionSpec spec;
    OptimizerConfig config;
    std::vector<CurvePoint> points;
};

// Evenly spaced budgets from 0 to the largest value the constraint can take.
inline std::vector<double> budget_grid(const RegionSpec& spec, int n) {
    if (n < 1) fail(ErrorKind::OutOfRange, "grid needs at least one point");
    double top = std::log2(static_cast<double>(spec.input_dim()));
    if (spec.family == Family::NTP || spec.family == Family::ED) top *= 2;
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(n == 1 ? 0.0 : top * i / (n - 1));
    return out;
}

namespace detail {

inline Mat embed(int d, int k, bool discard) {
    Mat u = Mat::Zero(static_cast<Eigen::Index>(d) * k, d);
    for (int a = 0; a < d; ++a) u(discard ? a : a * k, a) = 1;
    return u;
}

inline Vec max_entangled(int d) {
    Vec v = Vec::Zero(static_cast<Eigen::Index>(d) * d);
    for (int a = 0; a < d; ++a) v(a * d + a) = 1 / std::sqrt(static_cast<double>(d));
    return v;
}

} // namespace detail

// Fixed starting witnesses: 0 keeps the input intact (A' = A, or Phi_d into the
// channel); 1 discards it (A into E', or a classical product ensemble).
inline Witness canonical_witness(const RegionSpec& spec, int kind) {
    const int d = spec.input_dim(), k = spec.witness_env_dim();
    const bool discard = kind == 1 && k >= d;
    Witness w;
    w.env_dim = k;
    switch (spec.family) {
    case Family::NSD:
    case Family::Mother:
        w.p = {1.0};
        w.maps = {detail::embed(d, k, discard)};
        break;
    case Family::NTP:
    case Family::ED: w.maps = {detail::embed(d, k, discard)}; break;
    case Family::Father:
        w.inputs = {detail::max_entangled(d)};
        w.maps = {detail::embed(d, k, discard)};
        break;
    case Family::EAC:
        if (kind == 1) {
            const int n = std::min(d, spec.max_ensemble);
            for (int x = 0; x < n; ++x) {
                w.p.push_back(1.0 / n);
                w.inputs.push_back(qc::basis_vector(static_cast<Eigen::Index>(d) * d, x));
            }
        } else {
            w.p = {1.0};
            w.inputs = {detail::max_entangled(d)};
        }
        break;
    }
    return w;
}

inline Witness random_witness(const RegionSpec& spec, qc::Rng& rng) {
    const int d = spec.input_dim(), k = spec.witness_env_dim();
    std::uniform_int_distribution<int> size(1, spec.max_ensemble);
    std::exponential_distribution<double> expo(1.0);
    auto simplex = [&](int n) {
        std::vector<double> p(static_cast<std::size_t>(n));
        double s = 0;
        for (auto& x : p) s += (x = expo(rng));
        for (auto& x : p) x /= s;
        return p;
    };
    Witness w;
    w.env_dim = k;
    const auto dk = static_cast<Eigen::Index>(d) * k;
    switch (spec.family) {
    case Family::NSD:
    case Family::Mother:
        w.p = simplex(size(rng));
        for (std::size_t x = 0; x < w.p.size(); ++x) w.maps.push_back(qc::haar_isometry(dk, d, rng));
        break;
    case Family::NTP:
    case Family::ED:
        w.outcomes = size(rng);
        w.maps = {qc::haar_isometry(w.outcomes * dk, d, rng)};
        break;
    case Family::Father:
        w.inputs = {qc::haar_vector(static_cast<Eigen::Index>(d) * d, rng)};
        w.maps = {qc::haar_isometry(dk, d, rng)};
        break;
    case Family::EAC:
        w.p = simplex(size(rng));
        for (std::size_t x = 0; x < w.p.size(); ++x) w.inputs.push_back(qc::haar_vector(static_cast<Eigen::Index>(d) * d, rng));
        break;
    }
    return w;
}

// Removes the rounding drift accumulated by many small rotations.
inline void polish(Witness& w) {
    for (auto& m : w.maps) m = m * qc::hermitian_function(m.adjoint() * m, [](double x) { return 1 / std::sqrt(x); });
    for (auto& v : w.inputs) v /= v.norm();
    double s = 0;
    for (auto& x : w.p) s += (x = std::max(0.0, x));
    for (auto& x : w.p) x /= s;
}

namespace detail {

struct Score {
    bool ok = false;
    double violation = std::numeric_limits<double>::infinity();
    double value = -std::numeric_limits<double>::infinity();
};

inline Score score(Family f, const Evaluation& e, double budget, double tol) {
    Score s;
    s.ok = feasible(f, e, budget, tol);
    s.violation = f == Family::Father ? 0.0 : std::max(0.0, e.constraint - budget);
    s.value = bound_at(f, e, budget);
    return s;
}

// Feasible beats infeasible; then larger value, or smaller violation.
inline bool better(const Score& a, const Score& b) {
    if (a.ok != b.ok) return a.ok;
    return a.ok ? a.value > b.value : a.violation < b.violation;
}

inline double gain(const Score& now, const Score& before) {
    if (now.ok && !before.ok) return std::numeric_limits<double>::infinity();
    return now.ok ? now.value - before.value : before.violation - now.violation;
}

inline Mat random_skew(Eigen::Index n, qc::Rng& rng) {
    Mat g = qc::ginibre(n, n, rng);
    Mat k = (g - g.adjoint()) / 2.0;
    return k / k.norm();
}

// Block b of the witness moved by +-step along one random direction.
struct Move {
    int block;
    Mat rotation;
    int i = 0, j = 0;
};

inline int block_count(const Witness& w) {
    return (w.p.size() > 1 ? 1 : 0) + static_cast<int>(w.maps.size() + w.inputs.size());
}

inline Move draw_move(const Witness& w, int block, qc::Rng& rng) {
    Move m{block, {}};
    int b = block;
    if (w.p.size() > 1) {
        if (b == 0) {
            std::uniform_int_distribution<int> pick(0, static_cast<int>(w.p.size()) - 1);
            m.i = pick(rng);
            do m.j = pick(rng);
            while (m.j == m.i);
            return m;
        }
        --b;
    }
    Eigen::Index n = b < static_cast<int>(w.maps.size()) ? w.maps[static_cast<std::size_t>(b)].rows()
                                                          : w.inputs[static_cast<std::size_t>(b) - w.maps.size()].size();
    m.rotation = random_skew(n, rng);
    return m;
}

inline Witness apply_move(const Witness& w, const Move& m, double step) {
    Witness out = w;
    int b = m.block;
    if (w.p.size() > 1) {
        if (b == 0) {
            double delta = std::clamp(0.5 * step, -out.p[static_cast<std::size_t>(m.i)], out.p[static_cast<std::size_t>(m.j)]);
            out.p[static_cast<std::size_t>(m.i)] += delta;
            out.p[static_cast<std::size_t>(m.j)] -= delta;
            return out;
        }
        --b;
    }
    Mat r = qc::expm_skew(step * m.rotation);
    if (b < static_cast<int>(w.maps.size())) {
        out.maps[static_cast<std::size_t>(b)] = r * out.maps[static_cast<std::size_t>(b)];
    } else {
        auto& v = out.inputs[static_cast<std::size_t>(b) - w.maps.size()];
        v = r * v;
    }
    return out;
}

} // namespace detail

struct Refined {
    Witness witness;
    Evaluation eval;
    int iterations = 0;
};

// Local refinement at one budget: random rotations and simplex steps, accepted
// when they improve; the step halves whenever a sweep gains less than rel_tol.
inline Refined refine(const Instance& in, Witness w, double budget, const OptimizerConfig& cfg, qc::Rng& rng) {
    const Family f = in.spec.family;
    Evaluation ev = detail::evaluate(in, w);
    detail::Score cur = detail::score(f, ev, budget, cfg.feasibility_tol);
    double step = cfg.initial_step;
    int it = 0;
    for (; it < cfg.max_iter && step >= cfg.min_step; ++it) {
        double sweep = 0;
        for (int b = 0; b < detail::block_count(w); ++b) {
            detail::Move m = detail::draw_move(w, b, rng);
            for (double sign : {1.0, -1.0}) {
                Witness cand = detail::apply_move(w, m, sign * step);
                Evaluation ce = detail::evaluate(in, cand);
                detail::Score cs = detail::score(f, ce, budget, cfg.feasibility_tol);
                if (detail::better(cs, cur)) {
                    sweep += detail::gain(cs, cur);
                    w = std::move(cand);
                    ev = std::move(ce);
                    cur = cs;
                    break;
                }
            }
        }
        if (sweep < cfg.rel_tol * std::max(1.0, std::abs(cur.ok ? cur.value : cur.violation))) step /= 2;
    }
    polish(w);
    return {w, detail::evaluate(in, w), it};
}

// Best witness per budget. Restart 0 and 1 start from the canonical witnesses,
// the rest from seeded random ones. Every refined witness is then scored at
// every budget, so the reported curve is the envelope of all of them.
inline TradeoffCurve optimize_boundary(const RegionSpec& spec, const std::vector<double>& budgets, const OptimizerConfig& cfg = {}) {
    if (budgets.empty()) fail(ErrorKind::OutOfRange, "empty budget grid");
    if (cfg.restarts < 1) fail(ErrorKind::OutOfRange, "restarts must be at least 1");
    const Instance in(spec);
    const std::size_t nr = static_cast<std::size_t>(cfg.restarts);
    std::vector<Refined> found(budgets.size() * nr);
    parallel_for(found.size(), [&](std::size_t t) {
        const std::size_t bi = t / nr, r = t % nr;
        std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32), static_cast<std::uint32_t>(bi),
                          static_cast<std::uint32_t>(r)};
        qc::Rng rng(seq);
        Witness start = r < 2 ? canonical_witness(spec, static_cast<int>(r)) : random_witness(spec, rng);
        found[t] = refine(in, std::move(start), budgets[bi], cfg, rng);
    });
    TradeoffCurve curve{spec, cfg, {}};
    for (double b : budgets) {
        const Refined* best = nullptr;
        detail::Score best_score;
        for (const auto& c : found) {
            detail::Score s = detail::score(spec.family, c.eval, b, cfg.feasibility_tol);
            if (!best || detail::better(s, best_score)) {
                best = &c;
                best_score = s;
            }
        }
        CurvePoint p;
        p.budget = b;
        p.witness = best->witness;
        p.eval = eval_point(in, p.witness);
        p.feasible = feasible(spec.family, p.eval, b, 1e-9);
        p.value = p.feasible ? bound_at(spec.family, p.eval, b) : std::numeric_limits<double>::quiet_NaN();
        curve.points.push_back(std::move(p));
    }
    return curve;
}

} // namespace ricalc::trade
