#pragma once
#include <random>

#include "objects.hpp"

namespace ricalc::qc {

using Rng = std::mt19937_64;

inline Mat ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Mat m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = cplx(n(rng), n(rng));
    return m;
}

inline Vec haar_vector(Eigen::Index dim, Rng& rng) {
    Vec v = ginibre(dim, 1, rng).col(0);
    return v / v.norm();
}

// Haar isometry (rows x cols) via QR with phase correction.
inline Mat haar_isometry(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
    Mat g = ginibre(rows, cols, rng);
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ() * Mat::Identity(rows, cols);
    Mat r = qr.matrixQR().topLeftCorner(cols, cols);
    for (Eigen::Index k = 0; k < cols; ++k) {
        cplx d = r(k, k);
        if (std::abs(d) > 0) q.col(k) *= d / std::abs(d);
    }
    return q;
}

inline Mat haar_unitary(Eigen::Index d, Rng& rng) { return haar_isometry(d, d, rng); }

inline StateSpec random_pure_state(const SystemLayout& layout, Rng& rng) {
    return StateSpec::trusted(layout, projector(haar_vector(static_cast<Eigen::Index>(layout.total_dim()), rng)));
}

// Mixed state from the Hilbert-Schmidt ensemble (rank = dim unless `rank` given).
inline StateSpec random_mixed_state(const SystemLayout& layout, Rng& rng, Eigen::Index rank = 0) {
    const auto d = static_cast<Eigen::Index>(layout.total_dim());
    Mat g = ginibre(d, rank > 0 ? rank : d, rng);
    Mat m = g * g.adjoint();
    m /= m.trace().real();
    return StateSpec::trusted(layout, hermitian_part(m));
}

} // namespace ricalc::qc
