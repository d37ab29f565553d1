#include <gtest/gtest.h>

#include "ricalc/info.hpp"
#include "ricalc/qcore.hpp"

using namespace ricalc;
using namespace ricalc::qc;

namespace {

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace

TEST(Layout, RejectsDuplicateLabels) {
    SystemLayout l{{"A", 2}};
    EXPECT_THROW(l.push("A", 3), Error);
    try {
        l.push("A", 3);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DuplicateLabel);
    }
}

TEST(Layout, RejectsOversizedSystems) {
    SystemLayout l{{"A", 64}, {"B", 64}};
    EXPECT_THROW(l.push("C", 2), Error);
}

TEST(State, SymmetrizesAndClampsDrift) {
    Mat m(2, 2);
    m << 1.0 + 5e-11, 1e-12, 0, -5e-11;
    StateSpec s(SystemLayout{{"A", 2}}, m);
    EXPECT_GE(hermitian_eigenvalues(s.matrix()).minCoeff(), 0.0);
    EXPECT_LT(max_abs(s.matrix() - s.matrix().adjoint()), 1e-15);
}

TEST(State, RejectsBadTraceAndNegativity) {
    Mat m = Mat::Identity(2, 2);
    EXPECT_THROW(StateSpec(SystemLayout{{"A", 2}}, m), Error);
    Mat n(2, 2);
    n << 1.1, 0, 0, -0.1;
    EXPECT_THROW(StateSpec(SystemLayout{{"A", 2}}, n), Error);
}

TEST(Tensor, MaximallyMixedProductAndTrace) {
    auto t = tensor(tau(2, "A"), tau(2, "B"));
    EXPECT_LT(max_abs(t.matrix() - Mat::Identity(4, 4) / 4.0), 1e-15);
    auto p = tensor(phi(2), basis_state(2, 0, "C"));
    EXPECT_EQ(p.dim(), 8u);
    EXPECT_NEAR(purity(p), 1.0, 1e-12);
    EXPECT_THROW(tensor(tau(2, "A"), tau(2, "A")), Error);
}

TEST(PartialTrace, RestrictionsOfStandardStates) {
    auto a = partial_trace(phi(2), {"A"});
    EXPECT_LT(max_abs(a.matrix() - Mat::Identity(2, 2) / 2.0), 1e-15);
    Rng rng(3);
    auto r = random_mixed_state(SystemLayout{{"A", 2}}, rng);
    auto s = random_mixed_state(SystemLayout{{"B", 3}}, rng);
    EXPECT_LT(max_abs(partial_trace(tensor(r, s), {"A"}).matrix() - r.matrix()), 1e-14);
    EXPECT_LT(max_abs(partial_trace(tensor(r, s), {"B"}).matrix() - s.matrix()), 1e-14);
    EXPECT_THROW(partial_trace(r, {"Z"}), Error);
}

TEST(PartialTrace, PureStateComplementarySpectra) {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        auto psi = random_pure_state(SystemLayout{{"A", 2}, {"B", 2}, {"E", 2}}, rng);
        RVec a = hermitian_eigenvalues(partial_trace(psi, {"A"}).matrix());
        RVec be = hermitian_eigenvalues(partial_trace(psi, {"B", "E"}).matrix());
        EXPECT_NEAR(a(0), be(2), 1e-12);
        EXPECT_NEAR(a(1), be(3), 1e-12);
        EXPECT_NEAR(be(0), 0.0, 1e-12);
    }
}

TEST(PartialTrace, KeepOrderIsRespected) {
    Rng rng(5);
    auto s = random_mixed_state(SystemLayout{{"A", 2}, {"B", 3}}, rng);
    auto ba = partial_trace(s, {"B", "A"});
    EXPECT_EQ(ba.layout().label(0), "B");
    auto back = reorder(ba, {"A", "B"});
    EXPECT_LT(max_abs(back.matrix() - s.matrix()), 1e-14);
}

TEST(Purify, CanonicalConstruction) {
    Mat d = Mat::Zero(2, 2);
    d(0, 0) = 0.9;
    d(1, 1) = 0.1;
    StateSpec s(SystemLayout{{"A", 2}}, d);
    auto p = purify(s, "R");
    EXPECT_NEAR(purity(p), 1.0, 1e-12);
    EXPECT_LT(max_abs(partial_trace(p, {"A"}).matrix() - d), 1e-12);
    EXPECT_EQ(p.layout().dim_of("R"), 2);
    auto pp = purify(phi(2), "R");
    EXPECT_EQ(pp.layout().dim_of("R"), 1);
    EXPECT_THROW(purify(s, "A"), Error);
    // Deterministic: same input, same purification.
    EXPECT_LT(max_abs(purify(s, "R").matrix() - p.matrix()), 0.0 + 1e-300);
}

TEST(Purify, RoundTripOnRandomStates) {
    Rng rng(21);
    for (int t = 0; t < 100; ++t) {
        int d = 2 + t % 7;
        auto s = random_mixed_state(SystemLayout{{"A", d}}, rng, 1 + t % d);
        auto p = purify(s, "R");
        EXPECT_NEAR(purity(p), 1.0, 1e-9);
        EXPECT_LT(max_abs(partial_trace(p, {"A"}).matrix() - s.matrix()), 1e-9);
    }
}

TEST(Purify, PurificationsShareReferenceSpectrum) {
    Rng rng(8);
    auto s = random_mixed_state(SystemLayout{{"A", 3}}, rng);
    auto p1 = purify(s, "R");
    // A second purification: a random unitary on the reference.
    Mat u = haar_unitary(3, rng);
    IsometrySpec v(SystemLayout{{"R", 3}}, SystemLayout{{"R", 3}}, u);
    auto p2 = apply(v, p1, {"R"});
    RVec a = hermitian_eigenvalues(partial_trace(p1, {"R"}).matrix());
    RVec b = hermitian_eigenvalues(partial_trace(p2, {"R"}).matrix());
    EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Stinespring, MatchesChannelOnMatrixUnits) {
    for (const auto& c : {dephasing_channel(2, "A", "B"), depolarizing(0.5, "A", "B"), amplitude_damping(0.3, "A", "B")}) {
        auto v = stinespring(c, "E");
        EXPECT_LT(max_abs(v.matrix().adjoint() * v.matrix() - Mat::Identity(2, 2)), 1e-12);
        EXPECT_EQ(v.out_layout().dim_of("E"), static_cast<int>(c.kraus().size()));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Mat e = Mat::Zero(2, 2);
                e(i, j) = 1;
                Mat viaV = partial_trace_positions(v.matrix() * e * v.matrix().adjoint(), {2, static_cast<int>(c.kraus().size())}, {0});
                Mat viaK = Mat::Zero(2, 2);
                for (const auto& k : c.kraus()) viaK += k * e * k.adjoint();
                EXPECT_LT(max_abs(viaV - viaK), 1e-9);
            }
    }
    auto vid = stinespring(identity_channel(2), "E");
    EXPECT_EQ(vid.out_layout().dim_of("E"), 1);
}

TEST(Stinespring, RejectsNonTracePreserving) {
    Mat k = Mat::Zero(2, 2);
    k(0, 0) = 1;
    ChannelSpec cp(SystemLayout{{"A", 2}}, SystemLayout{{"B", 2}}, {k}, false);
    EXPECT_THROW(stinespring(cp, "E"), Error);
}

TEST(Apply, IdentityDephasingAndCoherentChannel) {
    auto out = apply(identity_channel(2, "A", "C"), phi(2), {"A"});
    EXPECT_EQ(out.layout().label(1), "C");
    EXPECT_LT(max_abs(out.matrix() - phi(2).matrix()), 1e-15);

    Vec plus(2);
    plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
    auto deph = apply(dephasing_channel(2), StateSpec::pure(SystemLayout{{"A", 2}}, plus));
    EXPECT_LT(max_abs(deph.matrix() - Mat::Identity(2, 2) / 2.0), 1e-15);

    auto ghz = apply(coherent_channel(2, "A'", "A", "B"), phi(2, "R", "A'"), {"A'"});
    EXPECT_NEAR(purity(ghz), 1.0, 1e-12);
    for (auto pair : std::vector<std::vector<std::string>>{{"R", "A"}, {"R", "B"}, {"A", "B"}}) {
        auto r = partial_trace(ghz, pair);
        EXPECT_LT(max_abs(r.matrix() - phibar(2).matrix()), 1e-12);
    }
    EXPECT_THROW(apply(identity_channel(3), phi(2), {"A"}), Error);
    EXPECT_THROW(apply(identity_channel(2), phi(2), {"Q"}), Error);
}

TEST(Instrument, OutcomeRegisterAndMarginals) {
    InstrumentSpec one(SystemLayout{{"A", 2}}, SystemLayout{{"A", 2}}, {{Mat::Identity(2, 2)}});
    auto s = apply_instrument(one, tau(2), {"A"}, "X");
    EXPECT_EQ(s.layout().dim_of("X"), 1);

    InstrumentSpec meas(SystemLayout{{"A", 2}}, SystemLayout{{"A", 2}},
                        {{projector(basis_vector(2, 0))}, {projector(basis_vector(2, 1))}});
    auto m = apply_instrument(meas, tensor(tau(2, "A"), tau(2, "C")), {"A"}, "X");
    EXPECT_LT(max_abs(partial_trace(m, {"X"}).matrix() - Mat::Identity(2, 2) / 2.0), 1e-14);
    EXPECT_NEAR(info::I(m, {"X"}, {"C"}), 0.0, 1e-12);

    Rng rng(4);
    std::vector<double> p{0.2, 0.3, 0.5};
    std::vector<std::vector<Mat>> br;
    for (double px : p) br.push_back({std::sqrt(px) * haar_unitary(2, rng)});
    InstrumentSpec ens(SystemLayout{{"A", 2}}, SystemLayout{{"A", 2}}, br);
    auto e = apply_instrument(ens, phi(2), {"A"}, "X");
    auto px = partial_trace(e, {"X"});
    for (int x = 0; x < 3; ++x) EXPECT_NEAR(px.matrix()(x, x).real(), p[x], 1e-12);
    EXPECT_NEAR(trace_of(e), 1.0, 1e-9);
}

TEST(Standard, ObjectsMatchDefinitions) {
    auto f = std::get<StateSpec>(standard_object("Phi", 2));
    Mat expect = Mat::Zero(4, 4);
    expect(0, 0) = expect(0, 3) = expect(3, 0) = expect(3, 3) = 0.5;
    EXPECT_LT(max_abs(f.matrix() - expect), 1e-15);
    auto fb = std::get<StateSpec>(standard_object("PhiBar", 2));
    EXPECT_NEAR(fb.matrix()(0, 0).real(), 0.5, 1e-15);
    EXPECT_NEAR(fb.matrix()(3, 3).real(), 0.5, 1e-15);
    EXPECT_NEAR(fb.matrix()(0, 3).real(), 0.0, 1e-15);
    auto delta = std::get<IsometrySpec>(standard_object("Delta", 2));
    EXPECT_EQ(delta.matrix()(0, 0), cplx(1.0));
    EXPECT_EQ(delta.matrix()(3, 1), cplx(1.0));
    EXPECT_THROW(standard_object("Omega", 2), Error);
    EXPECT_THROW(standard_object("Phi", 1), Error);
}

TEST(Standard, CovarianceHoldsForIdentityNotForCoherentChannel) {
    // (U (x) U*) Phi = Phi; id commutes with the twirl, Delta does not.
    Rng rng(9);
    Mat u = haar_unitary(2, rng);
    IsometrySpec uu(SystemLayout{{"A", 2}, {"B", 2}}, SystemLayout{{"A", 2}, {"B", 2}}, kron(u, u.conjugate()));
    auto twirled = apply(uu, phi(2));
    EXPECT_LT(max_abs(twirled.matrix() - phi(2).matrix()), 1e-12);

    // Covariance of a channel N: N(U rho U^dagger) = U N(rho) U^dagger on the output.
    auto rho = random_mixed_state(SystemLayout{{"A'", 2}}, rng);
    IsometrySpec uin(SystemLayout{{"A'", 2}}, SystemLayout{{"A'", 2}}, u);
    auto idc = identity_channel(2, "A'", "B");
    IsometrySpec uout(SystemLayout{{"B", 2}}, SystemLayout{{"B", 2}}, u);
    EXPECT_LT(max_abs(apply(idc, apply(uin, rho)).matrix() - apply(uout, apply(idc, rho)).matrix()), 1e-12);

    auto dc = coherent_channel(2, "A'", "A", "B");
    IsometrySpec uab(SystemLayout{{"A", 2}, {"B", 2}}, SystemLayout{{"A", 2}, {"B", 2}}, kron(u, u));
    EXPECT_GT(max_abs(apply(dc, apply(uin, rho)).matrix() - apply(uab, apply(dc, rho)).matrix()), 1e-3);
}

TEST(Channels, MonotonicityOfTraceDistance) {
    Rng rng(13);
    std::vector<ChannelSpec> chans{depolarizing(0.3, "A", "B"), amplitude_damping(0.4, "A", "B"), dephasing(0.2, "A", "B")};
    for (int t = 0; t < 100; ++t) {
        int d = t % 2 ? 3 : 2;
        SystemLayout l{{"A", d}};
        auto r = random_mixed_state(l, rng), s = random_mixed_state(l, rng);
        ChannelSpec c = chans[t % 3];
        if (d == 3) {
            Mat v = haar_isometry(d * 2, d, rng);
            c = ChannelSpec(l, SystemLayout{{"B", d}}, {v.topRows(d), v.bottomRows(d)});
        }
        double before = info::trace_distance(r, s);
        double after = info::trace_distance(apply(c, r), apply(c, s));
        EXPECT_LE(after, before + 1e-9);
    }
}

TEST(Json, StateRoundTrip) {
    auto s = phi(2);
    auto j = state_to_json(s);
    auto back = state_from_json(j);
    EXPECT_EQ(back.layout(), s.layout());
    EXPECT_LT(max_abs(back.matrix() - s.matrix()), 1e-15);
    EXPECT_THROW(state_from_json(json{{"labels", json::array()}}), Error);
    auto c = channel_from_json(channel_to_json(dephasing(0.2)));
    EXPECT_EQ(c.kraus().size(), 2u);
}

TEST(Channels, NamedConstructors) {
    EXPECT_EQ(named_channel("erasure:0.3").out_layout().total_dim(), 3u);
    EXPECT_THROW(named_channel("depolarizing:1.5"), Error);
    EXPECT_THROW(named_channel("bogus:0.1"), Error);
    EXPECT_THROW(named_channel("dephasing"), Error);
}
