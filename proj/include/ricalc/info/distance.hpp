#pragma once
#include <cmath>

#include "../qcore/ops.hpp"

namespace ricalc::info {

using qc::Mat;
using qc::StateSpec;

inline void require_same_layout(const StateSpec& a, const StateSpec& b) {
    if (a.layout() != b.layout()) fail(ErrorKind::DimensionMismatch, "states live on different layouts");
}

inline double trace_distance(const StateSpec& a, const StateSpec& b) {
    require_same_layout(a, b);
    return qc::trace_norm_hermitian(a.matrix() - b.matrix());
}

inline double fidelity(const StateSpec& a, const StateSpec& b) {
    require_same_layout(a, b);
    double f = qc::trace_norm(qc::sqrtm_psd(a.matrix()) * qc::sqrtm_psd(b.matrix()));
    return std::clamp(f * f, 0.0, 1.0);
}

// Uhlmann-aligned extension: given rho on A and an extension sigma_ext of sigma
// (A first, then the extension labels), returns rho' on the same layout as
// sigma_ext with tr_ext rho' = rho, obtained from the purification of rho that
// maximizes overlap with the purification of sigma_ext.
inline StateSpec uhlmann_extension(const StateSpec& rho, const StateSpec& sigma_ext) {
    const auto& la = rho.layout();
    for (std::size_t i = 0; i < la.size(); ++i)
        if (sigma_ext.layout().label(i) != la.label(i) || sigma_ext.layout().dim(i) != la.dim(i))
            fail(ErrorKind::DimensionMismatch, "extension must start with the layout of rho");
    const auto da = static_cast<Eigen::Index>(la.total_dim());
    const auto dtot = static_cast<Eigen::Index>(sigma_ext.dim());
    const Eigen::Index dc = dtot / da;

    // sigma_ext = G G^dagger with G = V sqrt(D), purification |psi> = sum_k G(:,k) (x) |k>.
    Eigen::SelfAdjointEigenSolver<Mat> es(sigma_ext.matrix());
    Mat g = es.eigenvectors() * es.eigenvalues().cwiseMax(0.0).cwiseSqrt().cast<qc::cplx>().asDiagonal();
    // As an operator from the purifying space P = C (x) R into A.
    const Eigen::Index dp = dc * dtot;
    Mat psi_op(da, dp);
    for (Eigen::Index a = 0; a < da; ++a)
        for (Eigen::Index c = 0; c < dc; ++c)
            for (Eigen::Index k = 0; k < dtot; ++k) psi_op(a, c * dtot + k) = g(a * dc + c, k);

    Mat sr = qc::sqrtm_psd(rho.matrix());  // purification operator of rho on a copy of A
    Eigen::JacobiSVD<Mat> svd(psi_op.adjoint() * sr, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::Index m = std::min(dp, da);
    Mat w = svd.matrixV().leftCols(m) * svd.matrixU().leftCols(m).adjoint();  // da x dp partial isometry
    Mat phi_op = sr * w;                                                       // da x dp

    Mat out = Mat::Zero(dtot, dtot);
    for (Eigen::Index k = 0; k < dtot; ++k) {
        qc::Vec v(dtot);
        for (Eigen::Index a = 0; a < da; ++a)
            for (Eigen::Index c = 0; c < dc; ++c) v(a * dc + c) = phi_op(a, c * dtot + k);
        out += v * v.adjoint();
    }
    return StateSpec::trusted(sigma_ext.layout(), qc::hermitian_part(out));
}

} // namespace ricalc::info
