#pragma once
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "../info/entropy.hpp"
#include "region.hpp"

namespace ricalc::trade {

// Constraint and objective of one witness, plus the entropic terms behind them.
//   NSD     constraint H(A'|X)                  objective I(A'>BX)
//   MOTHER  constraint 1/2 I(A';EE'|X)          objective I(A'>BX)
//   NTP     constraint I(A';B|X) + I(X;BE)      objective I(A'>BX)
//   ED      constraint I(A';EE'|X) + I(X;BE)    objective I(A'>BX)
//   FATHER  constraint I(A>B)                   objective 1/2 I(A;B)
//   EAC     constraint H(A|X)                   objective I(AX;B)
struct Evaluation {
    double constraint = 0;
    double objective = 0;
    std::map<std::string, double> terms;
};

// Noisy resource in the fixed form the evaluators use.
//   states:   psi^{ABE} as a (dA) x (dB dE) matrix, canonical purification
//   channels: Stinespring isometry A' -> B E
struct Instance {
    RegionSpec spec;
    Mat psi;
    Mat dilation;
    int dA = 1, dB = 1, dE = 1;

    explicit Instance(RegionSpec s) : spec(std::move(s)) {
        spec.validate();
        if (spec.state) {
            auto order = spec.alice;
            auto bob = spec.bob();
            order.insert(order.end(), bob.begin(), bob.end());
            std::size_t r = 1;
            Vec v = qc::purification_vector(qc::reorder(*spec.state, order), &r);
            dA = static_cast<int>(spec.state->layout().dim_of(spec.alice));
            dB = static_cast<int>(spec.state->layout().dim_of(bob));
            dE = static_cast<int>(r);
            psi = Eigen::Map<const Eigen::Matrix<qc::cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(v.data(), dA, dB * dE);
        } else {
            const auto& n = *spec.channel;
            dilation = qc::stinespring(n, "E").matrix();
            dA = static_cast<int>(n.in_layout().total_dim());
            dB = static_cast<int>(n.out_layout().total_dim());
            dE = static_cast<int>(n.kraus().size());
        }
    }
};

namespace detail {

using RowMat = Eigen::Matrix<qc::cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Reduced state of a pure vector on the subsystems `keep` (positions into dims).
inline Mat reduce_pure(const Vec& v, const std::vector<int>& dims, const std::vector<std::size_t>& keep) {
    std::vector<std::size_t> order = keep;
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (std::find(keep.begin(), keep.end(), i) == keep.end()) order.push_back(i);
    Eigen::Index dk = 1;
    for (auto k : keep) dk *= dims[k];
    Vec w = qc::permute_systems(v, dims, order);
    Eigen::Map<const RowMat> m(w.data(), dk, w.size() / dk);
    return m * m.adjoint();
}

inline double S(const Vec& v, const std::vector<int>& dims, const std::vector<std::size_t>& keep) {
    return info::von_neumann(reduce_pure(v, dims, keep));
}

inline Vec flatten(const Mat& m) {
    RowMat r = m;
    return Eigen::Map<const Vec>(r.data(), r.size());
}

// Per-branch entropies of a pure state on A' E' B E. Purity gives H(EE') = H(A'B).
struct Branch {
    double hA, hB, hAB;
    Mat be;  // reduced state on B E
};

inline Branch branch(const Mat& phi, int dA, int dEp, int dB, int dE) {
    Vec v = flatten(phi);
    const std::vector<int> dims{dA, dEp, dB, dE};
    Branch b;
    b.hA = S(v, dims, {0});
    b.hB = S(v, dims, {2});
    b.hAB = S(v, dims, {0, 2});
    b.be = reduce_pure(v, dims, {2, 3});
    return b;
}

inline Evaluation static_ensemble(const Instance& in, const Witness& w) {
    const bool nsd = in.spec.family == Family::NSD;
    double hA = 0, icoh = 0, iae = 0, iab = 0;
    for (std::size_t x = 0; x < w.p.size(); ++x) {
        if (w.p[x] <= 0) continue;
        Branch b = branch(w.maps[x] * in.psi, in.dA, w.env_dim, in.dB, in.dE);
        hA += w.p[x] * b.hA;
        icoh += w.p[x] * (b.hB - b.hAB);
        iae += w.p[x] * (b.hA + b.hAB - b.hB);
        iab += w.p[x] * (b.hA + b.hB - b.hAB);
    }
    Evaluation e;
    e.objective = icoh;
    e.constraint = nsd ? hA : 0.5 * iae;
    e.terms = {{"H(A'|X)", hA}, {"I(A'>BX)", icoh}, {"I(A';EE'|X)", iae}, {"I(A';B|X)", iab}, {"I(X;BE)", 0.0}};
    return e;
}

inline Evaluation instrument(const Instance& in, const Witness& w) {
    const Mat out = w.maps[0] * in.psi;
    const Eigen::Index block = static_cast<Eigen::Index>(in.dA) * w.env_dim;
    double icoh = 0, iae = 0, iab = 0, hbe = 0;
    Mat avg = Mat::Zero(static_cast<Eigen::Index>(in.dB) * in.dE, static_cast<Eigen::Index>(in.dB) * in.dE);
    for (int x = 0; x < w.outcomes; ++x) {
        Mat phi = out.middleRows(x * block, block);
        double px = phi.squaredNorm();
        if (px <= 1e-15) continue;
        Branch b = branch(phi / std::sqrt(px), in.dA, w.env_dim, in.dB, in.dE);
        icoh += px * (b.hB - b.hAB);
        iae += px * (b.hA + b.hAB - b.hB);
        iab += px * (b.hA + b.hB - b.hAB);
        hbe += px * info::von_neumann(b.be);
        avg += px * b.be;
    }
    double ixbe = info::von_neumann(avg) - hbe;
    Evaluation e;
    e.objective = icoh;
    e.constraint = (in.spec.family == Family::NTP ? iab : iae) + ixbe;
    e.terms = {{"I(A'>BX)", icoh}, {"I(A';EE'|X)", iae}, {"I(A';B|X)", iab}, {"I(X;BE)", ixbe}};
    return e;
}

// (id_A (x) U_N)(phi) for phi given as a dA x dA' matrix; result is A x (B E).
inline Mat through_channel(const Instance& in, const Mat& phi) { return phi * in.dilation.transpose(); }

inline Evaluation father(const Instance& in, const Witness& w) {
    const int d = in.dA;
    Mat phi = Eigen::Map<const RowMat>(w.inputs[0].data(), d, d);
    // Encoder A'' -> A' E'', then the channel on A'.
    Mat enc = phi * w.maps[0].transpose();  // A x (A' E'')
    Mat full = qc::kron(in.dilation, Mat::Identity(w.env_dim, w.env_dim));
    Vec v = flatten(enc * full.transpose());  // A, B, E, E''
    const std::vector<int> dims{d, in.dB, in.dE, w.env_dim};
    double hA = S(v, dims, {0}), hB = S(v, dims, {1}), hE = S(v, dims, {2});
    double hAB = S(v, dims, {0, 1}), hAE = S(v, dims, {0, 2});
    Evaluation e;
    e.constraint = hB - hAB;
    e.objective = 0.5 * (hA + hB - hAB);
    e.terms = {{"I(A>B)", hB - hAB}, {"I(A;B)", hA + hB - hAB}, {"I(A;E)", hA + hE - hAE}};
    return e;
}

inline Evaluation eac(const Instance& in, const Witness& w) {
    const int d = in.dA;
    double hAgX = 0, hBgAX = 0;
    Mat avgB = Mat::Zero(in.dB, in.dB);
    for (std::size_t x = 0; x < w.p.size(); ++x) {
        if (w.p[x] <= 0) continue;
        Mat phi = Eigen::Map<const RowMat>(w.inputs[x].data(), d, d);
        Vec v = flatten(through_channel(in, phi));
        const std::vector<int> dims{d, in.dB, in.dE};
        double hA = S(v, dims, {0}), hAB = S(v, dims, {2});  // H(AB) = H(E)
        hAgX += w.p[x] * hA;
        hBgAX += w.p[x] * (hAB - hA);
        avgB += w.p[x] * reduce_pure(v, dims, {1});
    }
    Evaluation e;
    e.constraint = hAgX;
    e.objective = info::von_neumann(avgB) - hBgAX;
    e.terms = {{"H(A|X)", hAgX}, {"I(AX;B)", e.objective}};
    return e;
}

inline Evaluation evaluate(const Instance& in, const Witness& w) {
    switch (in.spec.family) {
    case Family::NSD:
    case Family::Mother: return detail::static_ensemble(in, w);
    case Family::NTP:
    case Family::ED: return detail::instrument(in, w);
    case Family::Father: return detail::father(in, w);
    case Family::EAC: return detail::eac(in, w);
    }
    fail(ErrorKind::UnknownKind, "family");
}

} // namespace detail

inline Evaluation eval_point(const Instance& in, const Witness& w) {
    validate(in.spec, w);
    return detail::evaluate(in, w);
}

inline Evaluation eval_point(const RegionSpec& spec, const Witness& w) { return eval_point(Instance(spec), w); }

// Whether the witness is admissible at this budget. FATHER has no constraint.
inline bool feasible(Family f, const Evaluation& e, double budget, double tol = 1e-9) {
    return f == Family::Father || e.constraint <= budget + tol;
}

// Region bound on the value axis that the witness certifies at this budget.
inline double bound_at(Family f, const Evaluation& e, double budget) {
    switch (f) {
    case Family::NSD:
    case Family::Mother: return budget + e.objective;
    case Family::Father: return std::min(budget + e.constraint, e.objective);
    default: return e.objective;
    }
}

} // namespace ricalc::trade
