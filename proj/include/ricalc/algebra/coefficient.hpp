#pragma once
#include <map>
#include <string>

#include "atom.hpp"

namespace ricalc::alg {

// Rational constant plus a rational combination of entropic atoms.
class Coefficient {
public:
    Coefficient() = default;
    Coefficient(Rational c) : constant_(std::move(c)) {}
    Coefficient(long c) : constant_(c) {}
    Coefficient(const EntropicAtom& a, Rational w = 1) {
        if (w != 0) atoms_[a] = std::move(w);
    }

    const Rational& constant() const { return constant_; }
    const std::map<EntropicAtom, Rational>& atoms() const { return atoms_; }

    bool is_rational() const { return atoms_.empty(); }
    bool is_zero() const { return constant_ == 0 && atoms_.empty(); }

    Rational weight(const EntropicAtom& a) const {
        auto it = atoms_.find(a);
        return it == atoms_.end() ? Rational(0) : it->second;
    }

    Coefficient& operator+=(const Coefficient& o) {
        constant_ += o.constant_;
        for (const auto& [a, w] : o.atoms_) {
            auto& slot = atoms_[a];
            slot += w;
            if (slot == 0) atoms_.erase(a);
        }
        return *this;
    }
    Coefficient& operator-=(const Coefficient& o) { return *this += -o; }
    Coefficient& operator*=(const Rational& r) {
        if (r == 0) return *this = Coefficient();
        constant_ *= r;
        for (auto& [a, w] : atoms_) w *= r;
        return *this;
    }
    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(Coefficient a, const Rational& r) { return a *= r; }
    friend Coefficient operator*(const Rational& r, Coefficient a) { return a *= r; }
    Coefficient operator-() const { return *this * Rational(-1); }

    // Product with the degree guard: at most one factor may carry atoms.
    friend Coefficient multiply(const Coefficient& a, const Coefficient& b) {
        if (!a.is_rational() && !b.is_rational()) fail(ErrorKind::DegreeOverflow, "atom x atom coefficient");
        if (a.is_rational()) return b * a.constant();
        return a * b.constant();
    }

    bool operator==(const Coefficient& o) const { return constant_ == o.constant_ && atoms_ == o.atoms_; }
    bool operator!=(const Coefficient& o) const { return !(*this == o); }
    bool operator<(const Coefficient& o) const {
        if (constant_ != o.constant_) return constant_ < o.constant_;
        return atoms_ < o.atoms_;
    }

    // Renders a leading sign only if the whole coefficient is a negated single part.
    bool single_part() const { return (atoms_.empty()) || (constant_ == 0 && atoms_.size() == 1); }
    bool negative_single() const {
        if (!single_part()) return false;
        return atoms_.empty() ? constant_ < 0 : atoms_.begin()->second < 0;
    }

private:
    Rational constant_ = 0;
    std::map<EntropicAtom, Rational> atoms_;
};

inline std::string part_to_string(const Rational& w, const EntropicAtom& a) {
    if (w == 1) return to_string(a);
    return to_string(w) + " " + to_string(a);
}

inline std::string to_string(const Coefficient& c) {
    if (c.is_rational()) return to_string(c.constant());
    if (c.single_part()) return part_to_string(c.atoms().begin()->second, c.atoms().begin()->first);
    std::string out;
    auto put = [&](bool neg, const std::string& body) {
        if (out.empty()) out = neg ? "-" + body : body;
        else out += (neg ? " - " : " + ") + body;
    };
    if (c.constant() != 0) put(c.constant() < 0, to_string(boost::multiprecision::abs(c.constant())));
    for (const auto& [a, w] : c.atoms()) put(w < 0, part_to_string(boost::multiprecision::abs(w), a));
    return "(" + out + ")";
}

} // namespace ricalc::alg
