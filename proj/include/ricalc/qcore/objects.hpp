#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "layout.hpp"
#include "linalg.hpp"

namespace ricalc::qc {

class StateSpec {
public:
    StateSpec() = default;

    // Validating constructor: symmetrizes, checks the trace and clamps tiny
    // negative eigenvalues.
    StateSpec(SystemLayout layout, const Mat& matrix) : layout_(std::move(layout)) {
        const auto n = static_cast<Eigen::Index>(layout_.total_dim());
        if (matrix.rows() != n || matrix.cols() != n)
            fail(ErrorKind::DimensionMismatch, "state matrix size does not match layout dimension");
        if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
            fail(ErrorKind::InvalidObject, "state matrix is not Hermitian");
        Mat h = hermitian_part(matrix);
        double tr = h.trace().real();
        if (std::abs(tr - 1.0) > kTol) fail(ErrorKind::InvalidObject, "state trace is " + std::to_string(tr));
        Eigen::SelfAdjointEigenSolver<Mat> es(h);
        RVec ev = es.eigenvalues();
        if (ev.minCoeff() < -kTol) fail(ErrorKind::InvalidObject, "state has a negative eigenvalue");
        if (ev.minCoeff() < 0) {
            for (Eigen::Index i = 0; i < ev.size(); ++i) ev(i) = std::max(0.0, ev(i));
            h = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
        }
        matrix_ = std::move(h);
    }

    // For matrices produced by exact CPTP operations on valid states.
    static StateSpec trusted(SystemLayout layout, Mat matrix) {
        StateSpec s;
        s.layout_ = std::move(layout);
        s.matrix_ = std::move(matrix);
        return s;
    }

    static StateSpec pure(SystemLayout layout, const Vec& v) {
        if (static_cast<std::size_t>(v.size()) != layout.total_dim())
            fail(ErrorKind::DimensionMismatch, "vector size does not match layout dimension");
        double n = v.norm();
        if (std::abs(n - 1.0) > 1e-8) fail(ErrorKind::InvalidObject, "state vector is not normalized");
        return trusted(std::move(layout), projector(v / n));
    }

    const SystemLayout& layout() const { return layout_; }
    const Mat& matrix() const { return matrix_; }
    std::size_t dim() const { return layout_.total_dim(); }

    StateSpec relabeled(const std::map<std::string, std::string>& names) const {
        return trusted(layout_.renamed(names), matrix_);
    }

private:
    SystemLayout layout_;
    Mat matrix_;
};

class ChannelSpec {
public:
    ChannelSpec() = default;
    ChannelSpec(SystemLayout in, SystemLayout out, std::vector<Mat> kraus, bool trace_preserving = true)
        : in_(std::move(in)), out_(std::move(out)), kraus_(std::move(kraus)), tp_(trace_preserving) {
        if (kraus_.empty()) fail(ErrorKind::InvalidObject, "channel without Kraus operators");
        const auto di = static_cast<Eigen::Index>(in_.total_dim()), dout = static_cast<Eigen::Index>(out_.total_dim());
        Mat sum = Mat::Zero(di, di);
        for (const auto& k : kraus_) {
            if (k.rows() != dout || k.cols() != di) fail(ErrorKind::DimensionMismatch, "Kraus operator shape");
            sum += k.adjoint() * k;
        }
        Mat gap = Mat::Identity(di, di) - sum;
        if (tp_) {
            if (gap.cwiseAbs().maxCoeff() > kTol) fail(ErrorKind::NotTracePreserving, "sum of N^dagger N differs from identity");
        } else if (hermitian_eigenvalues(hermitian_part(gap)).minCoeff() < -kTol) {
            fail(ErrorKind::InvalidObject, "sum of N^dagger N exceeds identity");
        }
    }

    const SystemLayout& in_layout() const { return in_; }
    const SystemLayout& out_layout() const { return out_; }
    const std::vector<Mat>& kraus() const { return kraus_; }
    bool trace_preserving() const { return tp_; }

    ChannelSpec relabeled(const std::map<std::string, std::string>& in_names,
                          const std::map<std::string, std::string>& out_names) const {
        return ChannelSpec(in_.renamed(in_names), out_.renamed(out_names), kraus_, tp_);
    }

private:
    SystemLayout in_, out_;
    std::vector<Mat> kraus_;
    bool tp_ = true;
};

class IsometrySpec {
public:
    IsometrySpec() = default;
    IsometrySpec(SystemLayout in, SystemLayout out, Mat v) : in_(std::move(in)), out_(std::move(out)), v_(std::move(v)) {
        const auto di = static_cast<Eigen::Index>(in_.total_dim()), dout = static_cast<Eigen::Index>(out_.total_dim());
        if (v_.rows() != dout || v_.cols() != di) fail(ErrorKind::DimensionMismatch, "isometry shape");
        if (dout < di) fail(ErrorKind::DimensionMismatch, "isometry output smaller than input");
        if ((v_.adjoint() * v_ - Mat::Identity(di, di)).cwiseAbs().maxCoeff() > kTol)
            fail(ErrorKind::InvalidObject, "V^dagger V differs from identity");
    }

    const SystemLayout& in_layout() const { return in_; }
    const SystemLayout& out_layout() const { return out_; }
    const Mat& matrix() const { return v_; }

    ChannelSpec as_channel() const { return ChannelSpec(in_, out_, {v_}); }

private:
    SystemLayout in_, out_;
    Mat v_;
};

class InstrumentSpec {
public:
    InstrumentSpec() = default;
    InstrumentSpec(SystemLayout in, SystemLayout out, std::vector<std::vector<Mat>> branches)
        : in_(std::move(in)), out_(std::move(out)), branches_(std::move(branches)) {
        if (branches_.empty()) fail(ErrorKind::InvalidObject, "instrument without branches");
        const auto di = static_cast<Eigen::Index>(in_.total_dim()), dout = static_cast<Eigen::Index>(out_.total_dim());
        Mat sum = Mat::Zero(di, di);
        for (const auto& br : branches_)
            for (const auto& k : br) {
                if (k.rows() != dout || k.cols() != di) fail(ErrorKind::DimensionMismatch, "instrument Kraus shape");
                sum += k.adjoint() * k;
            }
        if ((Mat::Identity(di, di) - sum).cwiseAbs().maxCoeff() > kTol)
            fail(ErrorKind::NotTracePreserving, "instrument branches do not sum to a channel");
    }

    const SystemLayout& in_layout() const { return in_; }
    const SystemLayout& out_layout() const { return out_; }
    const std::vector<std::vector<Mat>>& branches() const { return branches_; }

private:
    SystemLayout in_, out_;
    std::vector<std::vector<Mat>> branches_;
};

} // namespace ricalc::qc
