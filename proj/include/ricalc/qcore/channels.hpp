#pragma once
#include <string>

#include "objects.hpp"

// Named qubit channels. Kraus forms:
//   depolarizing(p):      sqrt(1-3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z   (rho -> (1-p) rho + p I/2)
//   dephasing(p):         sqrt(1-p) I, sqrt(p) Z
//   erasure(p):           sqrt(1-p) (|0><0| + |1><1|), sqrt(p) |2><0|, sqrt(p) |2><1|   (output qutrit)
//   amplitude-damping(g): [[1,0],[0,sqrt(1-g)]], [[0,sqrt(g)],[0,0]]
namespace ricalc::qc {

namespace detail {
inline void check_prob(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) fail(ErrorKind::OutOfRange, std::string(what) + " parameter must lie in [0,1]");
}
inline Mat pauli(char c) {
    Mat m = Mat::Zero(2, 2);
    switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    }
    return m;
}
} // namespace detail

inline ChannelSpec depolarizing(double p, const std::string& in = "A'", const std::string& out = "B") {
    detail::check_prob(p, "depolarizing");
    std::vector<Mat> ks{std::sqrt(1 - 3 * p / 4) * detail::pauli('I'), std::sqrt(p / 4) * detail::pauli('X'),
                        std::sqrt(p / 4) * detail::pauli('Y'), std::sqrt(p / 4) * detail::pauli('Z')};
    return ChannelSpec(SystemLayout{{in, 2}}, SystemLayout{{out, 2}}, ks);
}

inline ChannelSpec dephasing(double p, const std::string& in = "A'", const std::string& out = "B") {
    detail::check_prob(p, "dephasing");
    std::vector<Mat> ks{std::sqrt(1 - p) * detail::pauli('I'), std::sqrt(p) * detail::pauli('Z')};
    return ChannelSpec(SystemLayout{{in, 2}}, SystemLayout{{out, 2}}, ks);
}

inline ChannelSpec erasure(double p, const std::string& in = "A'", const std::string& out = "B") {
    detail::check_prob(p, "erasure");
    Mat k0 = Mat::Zero(3, 2), k1 = Mat::Zero(3, 2), k2 = Mat::Zero(3, 2);
    k0(0, 0) = k0(1, 1) = std::sqrt(1 - p);
    k1(2, 0) = std::sqrt(p);
    k2(2, 1) = std::sqrt(p);
    return ChannelSpec(SystemLayout{{in, 2}}, SystemLayout{{out, 3}}, {k0, k1, k2});
}

inline ChannelSpec amplitude_damping(double g, const std::string& in = "A'", const std::string& out = "B") {
    detail::check_prob(g, "amplitude-damping");
    Mat k0 = Mat::Zero(2, 2), k1 = Mat::Zero(2, 2);
    k0(0, 0) = 1;
    k0(1, 1) = std::sqrt(1 - g);
    k1(0, 1) = std::sqrt(g);
    return ChannelSpec(SystemLayout{{in, 2}}, SystemLayout{{out, 2}}, {k0, k1});
}

// Parses "name:param", e.g. "dephasing:0.2".
inline ChannelSpec named_channel(const std::string& spec, const std::string& in = "A'", const std::string& out = "B") {
    auto colon = spec.find(':');
    if (colon == std::string::npos) fail(ErrorKind::ParseError, "channel spec must look like name:param");
    std::string name = spec.substr(0, colon);
    double p = 0;
    try {
        std::size_t used = 0;
        p = std::stod(spec.substr(colon + 1), &used);
        if (used != spec.size() - colon - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "bad channel parameter in '" + spec + "'");
    }
    if (name == "depolarizing") return depolarizing(p, in, out);
    if (name == "dephasing") return dephasing(p, in, out);
    if (name == "erasure") return erasure(p, in, out);
    if (name == "amplitude-damping") return amplitude_damping(p, in, out);
    fail(ErrorKind::UnknownKind, "unknown channel '" + name + "'");
}

} // namespace ricalc::qc
