#include <gtest/gtest.h>

#include <cmath>
#include <optional>

#include "ricalc/qcore/channels.hpp"
#include "ricalc/qcore/random.hpp"
#include "ricalc/qcore/standard.hpp"
#include "ricalc/tradeoff.hpp"

using namespace ricalc;
using namespace ricalc::trade;

namespace {

std::optional<ErrorKind> kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

StateSpec schmidt(double theta) {
    Mat v = Mat::Zero(4, 1);
    v(0, 0) = std::cos(theta);
    v(3, 0) = std::sin(theta);
    return StateSpec::trusted(qc::SystemLayout({"A", "B"}, {2, 2}), v * v.adjoint());
}

StateSpec isotropic(double f) {
    Mat m = f * qc::phi(2, "A", "B").matrix() + (1 - f) * Mat::Identity(4, 4) / 4.0;
    return StateSpec::trusted(qc::SystemLayout({"A", "B"}, {2, 2}), m);
}

OptimizerConfig quick(int restarts = 6, std::uint64_t seed = 17) {
    OptimizerConfig c;
    c.restarts = restarts;
    c.seed = seed;
    return c;
}

// Oracle values from tests/oracles/tradeoff_oracle.py.
constexpr double kH2Pi8 = 0.600876036693, kH2Pi6 = 0.811278124459;
constexpr double kDepol01 = 1.496816268319, kDepol025 = 1.006607270990;
constexpr double kDephIcoh = 0.278071905113, kDephHalfIAB = 0.639035952556, kDephHalfIAE = 0.360964047444;

} // namespace

TEST(Evaluate, TrivialWitnesses) {
    auto m = RegionSpec::of_state(Family::Mother, qc::phi(2, "A", "B"));
    auto e = eval_point(m, canonical_witness(m, 0));
    EXPECT_NEAR(e.constraint, 0, 1e-12);
    EXPECT_NEAR(e.objective, 1, 1e-12);

    auto f = RegionSpec::of_channel(Family::Father, qc::identity_channel(2, "A'", "B"));
    auto ef = eval_point(f, canonical_witness(f, 0));
    EXPECT_NEAR(ef.terms.at("I(A>B)"), 1, 1e-12);
    EXPECT_NEAR(ef.objective, 1, 1e-12);

    // Classical bits pass the dephasing channel unharmed.
    auto eac = RegionSpec::of_channel(Family::EAC, qc::dephasing(0.3));
    auto ee = eval_point(eac, canonical_witness(eac, 1));
    EXPECT_NEAR(ee.objective, 1, 1e-12);
    EXPECT_NEAR(ee.constraint, 0, 1e-12);
}

TEST(Evaluate, ChannelReferencePoints) {
    auto f = RegionSpec::of_channel(Family::Father, qc::dephasing(0.2));
    auto e = eval_point(f, canonical_witness(f, 0));
    EXPECT_NEAR(e.terms.at("I(A>B)"), kDephIcoh, 1e-9);
    EXPECT_NEAR(e.objective, kDephHalfIAB, 1e-9);
    // The two father bounds meet at E = 1/2 I(A;E).
    double meet = e.objective - e.terms.at("I(A>B)");
    EXPECT_NEAR(meet, 0.5 * e.terms.at("I(A;E)"), 1e-6);
    EXPECT_NEAR(meet, kDephHalfIAE, 1e-9);
    for (auto [p, ref] : {std::pair{0.1, kDepol01}, std::pair{0.25, kDepol025}}) {
        auto s = RegionSpec::of_channel(Family::EAC, qc::depolarizing(p));
        EXPECT_NEAR(eval_point(s, canonical_witness(s, 0)).objective, ref, 1e-6) << p;
    }
}

TEST(Evaluate, IdentitiesOnRandomWitnesses) {
    qc::Rng rng(4);
    auto rho = qc::random_mixed_state(qc::SystemLayout({"A", "B"}, {2, 2}), rng);
    auto m = RegionSpec::of_state(Family::Mother, rho);
    auto n = RegionSpec::of_state(Family::NSD, rho);
    for (int t = 0; t < 20; ++t) {
        auto w = random_witness(m, rng);
        auto em = eval_point(m, w), en = eval_point(n, w);
        // H(A'|X) = 1/2 I(A';EE'|X) + 1/2 I(A';B|X) on pure branches.
        EXPECT_NEAR(en.constraint, em.constraint + 0.5 * em.terms.at("I(A';B|X)"), 1e-9);
        EXPECT_NEAR(em.objective, en.objective, 1e-12);
        EXPECT_LE(em.objective, en.constraint + 1e-9);  // I(A'>BX) <= H(A'|X)
    }
    auto ntp = RegionSpec::of_state(Family::NTP, rho);
    for (int t = 0; t < 20; ++t) {
        auto e = eval_point(ntp, random_witness(ntp, rng));
        EXPECT_GE(e.terms.at("I(X;BE)"), -1e-9);
        EXPECT_GE(e.terms.at("I(A';B|X)"), -1e-9);
    }
}

TEST(Evaluate, Errors) {
    EXPECT_EQ(kind_of([] { RegionSpec::of_state(Family::Father, qc::phi(2, "A", "B")); }), ErrorKind::InvalidObject);
    EXPECT_EQ(kind_of([] { RegionSpec::of_channel(Family::Mother, qc::dephasing(0.1)); }), ErrorKind::InvalidObject);
    EXPECT_EQ(kind_of([] { family_from_string("uncle"); }), ErrorKind::UnknownKind);
    auto m = RegionSpec::of_state(Family::Mother, qc::phi(2, "A", "B"));
    auto w = canonical_witness(m, 0);
    w.p = {0.7};
    EXPECT_EQ(kind_of([&] { eval_point(m, w); }), ErrorKind::InvalidWitness);
    w = canonical_witness(m, 0);
    w.maps[0] *= 2.0;
    EXPECT_EQ(kind_of([&] { eval_point(m, w); }), ErrorKind::InvalidWitness);
    w = canonical_witness(m, 0);
    w.env_dim = 3;
    EXPECT_EQ(kind_of([&] { eval_point(m, w); }), ErrorKind::InvalidWitness);
    auto f = RegionSpec::of_channel(Family::Father, qc::dephasing(0.1));
    auto wf = canonical_witness(f, 0);
    wf.inputs[0] *= 1.1;
    EXPECT_EQ(kind_of([&] { eval_point(f, wf); }), ErrorKind::InvalidWitness);
}

TEST(Optimize, MotherReferencePoints) {
    auto m = RegionSpec::of_state(Family::Mother, qc::phi(2, "A", "B"));
    auto c = optimize_boundary(m, {0.0, 0.5}, quick());
    EXPECT_GE(c.points[0].value, 1 - 1e-3);
    for (auto [th, ref] : {std::pair{M_PI / 8, kH2Pi8}, std::pair{M_PI / 6, kH2Pi6}}) {
        auto s = RegionSpec::of_state(Family::Mother, schmidt(th));
        auto cs = optimize_boundary(s, {0.0}, quick());
        EXPECT_NEAR(cs.points[0].value, ref, 1e-2);
    }
}

TEST(Optimize, FatherReferencePoints) {
    auto perfect = RegionSpec::of_channel(Family::Father, qc::identity_channel(2, "A'", "B"));
    EXPECT_GE(optimize_boundary(perfect, {0.0}, quick()).points[0].value, 1 - 1e-3);
    auto deph = RegionSpec::of_channel(Family::Father, qc::dephasing(0.2));
    auto c = optimize_boundary(deph, budget_grid(deph, 5), quick());
    EXPECT_GE(c.points.front().value, kDephIcoh - 1e-3);
    EXPECT_NEAR(c.points.back().value, kDephHalfIAB, 1e-3);
}

TEST(Optimize, EnvelopeIsMonotoneAndFeasible) {
    auto rho = isotropic(0.8);
    for (Family f : {Family::NSD, Family::Mother, Family::NTP, Family::ED}) {
        auto s = RegionSpec::of_state(f, rho);
        auto c = optimize_boundary(s, budget_grid(s, 5), quick(4));
        for (std::size_t i = 0; i < c.points.size(); ++i) {
            const auto& p = c.points[i];
            ASSERT_TRUE(p.feasible) << to_string(f) << " " << p.budget;
            EXPECT_LE(p.eval.constraint, p.budget + 1e-9);
            EXPECT_NO_THROW(validate(s, p.witness));
            if (i > 0) EXPECT_LE(c.points[i - 1].value, p.value + 1e-9) << to_string(f);
        }
    }
    auto eac = RegionSpec::of_channel(Family::EAC, qc::depolarizing(0.25));
    auto c = optimize_boundary(eac, budget_grid(eac, 4), quick(4));
    for (std::size_t i = 1; i < c.points.size(); ++i) EXPECT_LE(c.points[i - 1].value, c.points[i].value + 1e-9);
    EXPECT_NEAR(c.points.back().value, kDepol025, 1e-3);
}

TEST(Optimize, Errors) {
    auto m = RegionSpec::of_state(Family::Mother, qc::phi(2, "A", "B"));
    EXPECT_EQ(kind_of([&] { optimize_boundary(m, {}, quick()); }), ErrorKind::OutOfRange);
    EXPECT_EQ(kind_of([&] { optimize_boundary(m, {0.0}, quick(0)); }), ErrorKind::OutOfRange);
    EXPECT_EQ(kind_of([&] { budget_grid(m, 0); }), ErrorKind::OutOfRange);
}

TEST(Bijection, IsotropicState) {
    auto rho = isotropic(0.8);
    auto grid = budget_grid(RegionSpec::of_state(Family::Mother, rho), 5);
    auto m = optimize_boundary(RegionSpec::of_state(Family::Mother, rho), grid, quick(3));
    auto n = optimize_boundary(RegionSpec::of_state(Family::NSD, rho), grid, quick(3));
    auto r = check_bijections(m, n);
    EXPECT_EQ(r.witnesses, 10u);
    EXPECT_LT(r.worst_violation, 1e-6);
    EXPECT_LT(r.max_discrepancy, 1e-6);
    auto ntp = optimize_boundary(RegionSpec::of_state(Family::NTP, rho), grid, quick(3));
    auto ed = optimize_boundary(RegionSpec::of_state(Family::ED, rho), grid, quick(3));
    auto g = check_bijections(ntp, ed);
    EXPECT_LT(g.worst_violation, 1e-6);
    EXPECT_LT(g.max_discrepancy, 1e-6);
    // Phi_2: f(0,1) = (1,2), the super-dense coding endpoint.
    auto [q, r2] = f_map(0, 1);
    EXPECT_EQ(q, 1);
    EXPECT_EQ(r2, 2);
    EXPECT_EQ(f_map(0.7, 0).second, 0);
}

TEST(Bijection, IncompatibleCurves) {
    auto grid = std::vector<double>{0.0};
    auto m = optimize_boundary(RegionSpec::of_state(Family::Mother, isotropic(0.8)), grid, quick(2));
    auto n = optimize_boundary(RegionSpec::of_state(Family::NSD, isotropic(0.7)), grid, quick(2));
    auto ntp = optimize_boundary(RegionSpec::of_state(Family::NTP, isotropic(0.8)), grid, quick(2));
    EXPECT_EQ(kind_of([&] { check_bijections(m, n); }), ErrorKind::IncompatibleCurves);
    EXPECT_EQ(kind_of([&] { check_bijections(m, ntp); }), ErrorKind::IncompatibleCurves);
    EXPECT_EQ(kind_of([&] { check_bijections(m, m); }), ErrorKind::IncompatibleCurves);
}

TEST(Properties, TensorPowerContainsSingleCopy) {
    qc::Rng rng(12);
    auto rho = qc::random_mixed_state(qc::SystemLayout({"A", "B"}, {2, 2}), rng, 2);
    auto rho2 = qc::tensor(rho, StateSpec::trusted(qc::SystemLayout({"A2", "B2"}, {2, 2}), rho.matrix()));
    auto one = RegionSpec::of_state(Family::Mother, rho);
    one.max_ensemble = 2;  // products stay within |X| <= 4
    auto two = RegionSpec::of_state(Family::Mother, rho2, {"A", "A2"});
    for (int t = 0; t < 10; ++t) {
        auto w = random_witness(one, rng);
        auto e1 = eval_point(one, w);
        auto e2 = eval_point(two, product_witness(w, w, 2, 2));
        EXPECT_NEAR(0.5 * e2.constraint, e1.constraint, 1e-6);
        EXPECT_NEAR(0.5 * e2.objective, e1.objective, 1e-6);
    }
}

TEST(Io, DeterministicOutputsAndRoundTrip) {
    auto s = RegionSpec::of_state(Family::Mother, isotropic(0.8));
    auto a = optimize_boundary(s, budget_grid(s, 3), quick(3, 99));
    auto b = optimize_boundary(s, budget_grid(s, 3), quick(3, 99));
    EXPECT_EQ(to_csv(a), to_csv(b));
    EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
    auto back = curve_from_json(json::parse(to_json(a).dump()));
    EXPECT_EQ(to_json(back).dump(), to_json(a).dump());
    auto ch = RegionSpec::of_channel(Family::EAC, qc::depolarizing(0.1));
    auto c = optimize_boundary(ch, {0.0, 1.0}, quick(2));
    EXPECT_EQ(to_json(curve_from_json(to_json(c))).dump(), to_json(c).dump());
}

TEST(Io, Base64AndCsv) {
    for (std::string s : {"", "a", "ab", "abc", "abcd", "{\"p\":[1]}"}) EXPECT_EQ(base64_decode(base64_encode(s)), s);
    EXPECT_EQ(base64_encode("abcd"), "YWJjZA==");
    auto s = RegionSpec::of_state(Family::NSD, qc::phi(2, "A", "B"));
    auto c = optimize_boundary(s, {0.0}, quick(2));
    std::string csv = to_csv(c);
    EXPECT_EQ(csv.rfind("budget,value,witness\n", 0), 0u);
    auto row = csv.substr(csv.find('\n') + 1);
    auto blob = row.substr(row.rfind(',') + 1);
    blob.pop_back();
    EXPECT_NO_THROW(validate(s, witness_from_json(json::parse(base64_decode(blob)))));
}
