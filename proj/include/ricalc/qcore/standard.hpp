#pragma once
#include <string>
#include <variant>

#include "objects.hpp"

namespace ricalc::qc {

enum class StandardKind { Phi, PhiBar, Tau, Id, IdBar, Delta, DeltaBar };

inline StandardKind standard_kind_from_string(const std::string& s) {
    if (s == "Phi") return StandardKind::Phi;
    if (s == "PhiBar") return StandardKind::PhiBar;
    if (s == "tau") return StandardKind::Tau;
    if (s == "id") return StandardKind::Id;
    if (s == "idbar") return StandardKind::IdBar;
    if (s == "Delta") return StandardKind::Delta;
    if (s == "DeltaBar") return StandardKind::DeltaBar;
    fail(ErrorKind::UnknownKind, "no standard object named '" + s + "'");
}

inline void require_d(int d) {
    if (d < 2) fail(ErrorKind::OutOfRange, "standard objects need d >= 2");
}

// |Phi_d> on A,B.
inline StateSpec phi(int d, const std::string& a = "A", const std::string& b = "B") {
    require_d(d);
    Vec v = Vec::Zero(d * d);
    for (int x = 0; x < d; ++x) v(x * d + x) = 1.0 / std::sqrt(static_cast<double>(d));
    return StateSpec::trusted(SystemLayout{{a, d}, {b, d}}, projector(v));
}

inline StateSpec phibar(int d, const std::string& a = "A", const std::string& b = "B") {
    require_d(d);
    Mat m = Mat::Zero(d * d, d * d);
    for (int x = 0; x < d; ++x) m(x * d + x, x * d + x) = 1.0 / d;
    return StateSpec::trusted(SystemLayout{{a, d}, {b, d}}, m);
}

inline StateSpec tau(int d, const std::string& a = "A") {
    if (d < 1) fail(ErrorKind::OutOfRange, "dimension must be positive");
    return StateSpec::trusted(SystemLayout{{a, d}}, Mat::Identity(d, d) / static_cast<double>(d));
}

inline StateSpec basis_state(int d, int k, const std::string& a = "A") {
    return StateSpec::trusted(SystemLayout{{a, d}}, projector(basis_vector(d, k)));
}

inline ChannelSpec identity_channel(int d, const std::string& in = "A", const std::string& out = "B") {
    require_d(d);
    return ChannelSpec(SystemLayout{{in, d}}, SystemLayout{{out, d}}, {Mat::Identity(d, d)});
}

inline ChannelSpec dephasing_channel(int d, const std::string& in = "A", const std::string& out = "B") {
    require_d(d);
    std::vector<Mat> ks;
    for (int x = 0; x < d; ++x) ks.push_back(projector(basis_vector(d, x)));
    return ChannelSpec(SystemLayout{{in, d}}, SystemLayout{{out, d}}, ks);
}

// Coherent channel sum_x |x>^A |x>^B <x|.
inline IsometrySpec coherent_channel(int d, const std::string& in = "A'", const std::string& a = "A", const std::string& b = "B") {
    require_d(d);
    Mat v = Mat::Zero(d * d, d);
    for (int x = 0; x < d; ++x) v(x * d + x, x) = 1.0;
    return IsometrySpec(SystemLayout{{in, d}}, SystemLayout{{a, d}, {b, d}}, v);
}

// Classical copy channel with Kraus operators |x>^A |x>^B <x|.
inline ChannelSpec classical_copy_channel(int d, const std::string& in = "A'", const std::string& a = "A", const std::string& b = "B") {
    require_d(d);
    std::vector<Mat> ks;
    for (int x = 0; x < d; ++x) {
        Mat k = Mat::Zero(d * d, d);
        k(x * d + x, x) = 1.0;
        ks.push_back(k);
    }
    return ChannelSpec(SystemLayout{{in, d}}, SystemLayout{{a, d}, {b, d}}, ks);
}

using StandardObject = std::variant<StateSpec, ChannelSpec, IsometrySpec>;

inline StandardObject standard_object(StandardKind kind, int d) {
    switch (kind) {
    case StandardKind::Phi: return phi(d);
    case StandardKind::PhiBar: return phibar(d);
    case StandardKind::Tau: require_d(d); return tau(d);
    case StandardKind::Id: return identity_channel(d);
    case StandardKind::IdBar: return dephasing_channel(d);
    case StandardKind::Delta: return coherent_channel(d);
    case StandardKind::DeltaBar: return classical_copy_channel(d);
    }
    fail(ErrorKind::UnknownKind, "unknown standard object kind");
}

inline StandardObject standard_object(const std::string& kind, int d) { return standard_object(standard_kind_from_string(kind), d); }

// Generalized Pauli (Weyl) operators X^a Z^b.
inline Mat shift_operator(int d, int a) {
    Mat x = Mat::Zero(d, d);
    for (int k = 0; k < d; ++k) x(((k + a) % d + d) % d, k) = 1.0;
    return x;
}

inline Mat clock_operator(int d, int b) {
    Mat z = Mat::Zero(d, d);
    const double pi = std::acos(-1.0);
    for (int k = 0; k < d; ++k) z(k, k) = std::polar(1.0, 2.0 * pi * b * k / d);
    return z;
}

inline Mat weyl_operator(int d, int a, int b) { return shift_operator(d, a) * clock_operator(d, b); }

} // namespace ricalc::qc
