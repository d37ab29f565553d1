#pragma once
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "../util/error.hpp"

namespace ricalc::qc {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

inline constexpr double kTol = 1e-10;

inline Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline Vec kron(const Vec& a, const Vec& b) {
    Vec out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

inline Mat hermitian_part(const Mat& m) { return (m + m.adjoint()) / 2.0; }

// Maps each index of the permuted space to the index of the original space.
// `order` lists original subsystem positions in their new order.
inline std::vector<Eigen::Index> permutation_map(const std::vector<int>& dims, const std::vector<std::size_t>& order) {
    const std::size_t n = dims.size();
    std::vector<std::size_t> old_stride(n, 1);
    for (std::size_t i = n; i-- > 1;) old_stride[i - 1] = old_stride[i] * static_cast<std::size_t>(dims[i]);
    std::size_t total = 1;
    for (int d : dims) total *= static_cast<std::size_t>(d);
    std::vector<Eigen::Index> map(total);
    std::vector<std::size_t> digit(n, 0);
    for (std::size_t k = 0; k < total; ++k) {
        std::size_t old = 0;
        for (std::size_t p = 0; p < n; ++p) old += digit[p] * old_stride[order[p]];
        map[k] = static_cast<Eigen::Index>(old);
        for (std::size_t p = n; p-- > 0;) {
            if (++digit[p] < static_cast<std::size_t>(dims[order[p]])) break;
            digit[p] = 0;
        }
    }
    return map;
}

inline Mat permute_systems(const Mat& m, const std::vector<int>& dims, const std::vector<std::size_t>& order) {
    auto map = permutation_map(dims, order);
    const auto n = static_cast<Eigen::Index>(map.size());
    Mat out(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i) out(i, j) = m(map[i], map[j]);
    return out;
}

inline Vec permute_systems(const Vec& v, const std::vector<int>& dims, const std::vector<std::size_t>& order) {
    auto map = permutation_map(dims, order);
    Vec out(static_cast<Eigen::Index>(map.size()));
    for (std::size_t i = 0; i < map.size(); ++i) out(static_cast<Eigen::Index>(i)) = v(map[i]);
    return out;
}

// Partial trace keeping the subsystems at positions `keep` (result ordered as listed).
inline Mat partial_trace_positions(const Mat& m, const std::vector<int>& dims, const std::vector<std::size_t>& keep) {
    std::vector<std::size_t> traced;
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (std::find(keep.begin(), keep.end(), i) == keep.end()) traced.push_back(i);
    std::vector<std::size_t> order = keep;
    order.insert(order.end(), traced.begin(), traced.end());
    auto map = permutation_map(dims, order);
    Eigen::Index dk = 1, dt = 1;
    for (auto i : keep) dk *= dims[i];
    for (auto i : traced) dt *= dims[i];
    Mat out = Mat::Zero(dk, dk);
    for (Eigen::Index b = 0; b < dk; ++b)
        for (Eigen::Index a = 0; a < dk; ++a) {
            cplx s = 0;
            for (Eigen::Index t = 0; t < dt; ++t) s += m(map[a * dt + t], map[b * dt + t]);
            out(a, b) = s;
        }
    return out;
}

// (I_rest (x) K) M (I_rest (x) L)^dagger for M ordered (rest, target).
inline Mat sandwich_tail(const Mat& m, const Mat& k, const Mat& l, Eigen::Index rest) {
    const Eigen::Index din = k.cols(), dout = k.rows();
    Mat left(rest * dout, m.cols());
    for (Eigen::Index p = 0; p < rest; ++p) left.middleRows(p * dout, dout).noalias() = k * m.middleRows(p * din, din);
    Mat out(rest * dout, rest * dout);
    Mat la = l.adjoint();
    for (Eigen::Index q = 0; q < rest; ++q) out.middleCols(q * dout, dout).noalias() = left.middleCols(q * din, din) * la;
    return out;
}

// Eigenvalues of a Hermitian matrix, ascending.
inline RVec hermitian_eigenvalues(const Mat& m) {
    Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

// f applied to the spectrum of a Hermitian matrix, eigenvalues clamped at zero.
template <class F>
Mat hermitian_function(const Mat& m, F f) {
    Eigen::SelfAdjointEigenSolver<Mat> es(m);
    RVec ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) ev(i) = f(std::max(0.0, ev(i)));
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

inline Mat sqrtm_psd(const Mat& m) {
    return hermitian_function(m, [](double x) { return std::sqrt(x); });
}

// exp(S) for skew-Hermitian S, through the spectrum of the Hermitian iS.
inline Mat expm_skew(const Mat& s) {
    Mat h = cplx(0, 1) * s;
    Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_part(h));
    Vec phase(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < phase.size(); ++i) phase(i) = std::exp(cplx(0, -es.eigenvalues()(i)));
    return es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
}

inline double trace_norm_hermitian(const Mat& m) { return hermitian_eigenvalues(hermitian_part(m)).cwiseAbs().sum(); }

inline double trace_norm(const Mat& m) {
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues().sum();
}

inline Mat projector(const Vec& v) { return v * v.adjoint(); }

inline Vec basis_vector(Eigen::Index dim, Eigen::Index i) {
    Vec v = Vec::Zero(dim);
    v(i) = 1.0;
    return v;
}

} // namespace ricalc::qc
