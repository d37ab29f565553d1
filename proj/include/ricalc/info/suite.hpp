#pragma once
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "../qcore/random.hpp"
#include "../util/parallel.hpp"
#include "distance.hpp"
#include "entropy.hpp"
#include "op_distance.hpp"

namespace ricalc::info {

// One family of sampled checks; `worst` is the largest violation seen
// (a residual, or an amount by which an inequality fails).
struct SuiteCheck {
    std::string name;
    double worst = 0;
    double tolerance = 0;
    bool passed() const { return worst < tolerance; }
};

struct SuiteReport {
    std::uint64_t seed = 0;
    int samples = 0;
    std::vector<SuiteCheck> checks;
    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed()) return false;
        return true;
    }
};

namespace detail {

// Violations of one sample, in the order of suite_check_names().
inline std::vector<double> suite_sample(std::uint64_t seed, int i, int samples) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(i)};
    qc::Rng rng(seq);
    const int db = i % 2 ? 3 : 2;
    std::vector<double> v;

    const qc::SystemLayout tri{{"X", 2}, {"A", db}, {"B", 2}};
    auto s = qc::random_mixed_state(tri, rng, 1 + static_cast<Eigen::Index>(rng() % (4 * db)));
    v.push_back(check_trip_identity(s, {"X"}, {"A"}, {"B"}));
    v.push_back(std::max(0.0, -Icmi(s, {"A"}, {"B"}, {"X"})));

    auto psi = qc::random_pure_state(qc::SystemLayout{{"A", 2}, {"B", db}, {"E", 2}}, rng);
    double iab = I(psi, {"A"}, {"B"}), iae = I(psi, {"A"}, {"E"});
    v.push_back(std::max(std::abs(0.5 * iab + 0.5 * iae - H(psi, {"A"})), std::abs(0.5 * iab - 0.5 * iae - Icoh(psi, {"A"}, {"B"}))));

    const qc::SystemLayout one{{"A", db}};
    auto r = qc::random_mixed_state(one, rng), o = qc::random_mixed_state(one, rng);
    double f = fidelity(r, o), d = 0.5 * trace_distance(r, o);
    v.push_back(std::max({0.0, 1 - std::sqrt(f) - d, d - std::sqrt(std::max(0.0, 1 - f))}));
    auto pr = qc::random_pure_state(one, rng), po = qc::random_pure_state(one, rng);
    v.push_back(std::abs(0.5 * trace_distance(pr, po) - std::sqrt(std::max(0.0, 1 - fidelity(pr, po)))));

    // A pair at distance eps = 0.1 (i+1)/samples on a qubit pair.
    const qc::SystemLayout two{{"A", 2}, {"B", 2}};
    auto a = qc::random_mixed_state(two, rng), b = qc::random_mixed_state(two, rng);
    double eps = 0.1 * (i + 1) / samples;
    double t = std::min(1.0, eps / trace_distance(a, b));
    auto c = qc::StateSpec::trusted(two, (1 - t) * a.matrix() + t * b.matrix());
    double gap = std::abs(Icoh(a, {"A"}, {"B"}) - Icoh(c, {"A"}, {"B"}));
    v.push_back(std::max(0.0, gap - fannes_bound(4, trace_distance(a, c))));
    return v;
}

} // namespace detail

inline const std::vector<std::string>& suite_check_names() {
    static const std::vector<std::string> names = {"trip-identity", "strong-subadditivity", "pure-state-duality",
                                                   "fuchs-van-de-graaf", "pure-fidelity-equality", "fannes-bound"};
    return names;
}

// Sampled identities and inequalities; alternates X,A,B dims 2x2x2 and 2x3x2.
inline SuiteReport run_identity_suite(int samples, std::uint64_t seed, double tol = 1e-9) {
    if (samples < 1) fail(ErrorKind::OutOfRange, "identity suite needs at least one sample");
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(samples));
    parallel_for(rows.size(), [&](std::size_t i) { rows[i] = detail::suite_sample(seed, static_cast<int>(i), samples); });
    SuiteReport rep{seed, samples, {}};
    const auto& names = suite_check_names();
    for (std::size_t k = 0; k < names.size(); ++k) {
        SuiteCheck c{names[k], 0, names[k] == "fannes-bound" ? 1e-12 : tol};
        for (const auto& r : rows) c.worst = std::max(c.worst, r[k]);
        rep.checks.push_back(c);
    }
    return rep;
}

} // namespace ricalc::info
