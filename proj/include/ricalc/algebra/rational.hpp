#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "../util/error.hpp"

namespace ricalc::alg {

using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline std::string to_string(const Rational& r) {
    BigInt n = boost::multiprecision::numerator(r), d = boost::multiprecision::denominator(r);
    return d == 1 ? n.str() : n.str() + "/" + d.str();
}

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    auto digits = [&](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = (allow_sign && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!digits(s, true)) fail(ErrorKind::ParseError, "bad rational '" + s + "'");
        return Rational(BigInt(s));
    }
    std::string n = s.substr(0, slash), d = s.substr(slash + 1);
    if (!digits(n, true) || !digits(d, false)) fail(ErrorKind::ParseError, "bad rational '" + s + "'");
    BigInt den(d);
    if (den == 0) fail(ErrorKind::ParseError, "zero denominator in '" + s + "'");
    return Rational(BigInt(n), den);
}

} // namespace ricalc::alg
