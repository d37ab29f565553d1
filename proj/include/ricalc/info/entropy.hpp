#pragma once
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "../qcore/ops.hpp"

namespace ricalc::info {

using qc::StateSpec;

enum class Quantity { H, Hcond, Imutual, Icoh, Icmi };

inline const char* to_string(Quantity q) {
    switch (q) {
    case Quantity::H: return "H";
    case Quantity::Hcond: return "Hcond";
    case Quantity::Imutual: return "Imutual";
    case Quantity::Icoh: return "Icoh";
    case Quantity::Icmi: return "Icmi";
    }
    return "?";
}

inline std::size_t group_count(Quantity q) {
    switch (q) {
    case Quantity::H: return 1;
    case Quantity::Icmi: return 3;
    default: return 2;
    }
}

using Group = std::vector<std::string>;

struct EntropyReport {
    Quantity kind = Quantity::H;
    std::vector<Group> groups;
    double value = 0;
};

// Shannon entropy (bits) of a spectrum; eigenvalues below 1e-12 count as zero.
inline double entropy_of_spectrum(const qc::RVec& ev) {
    double h = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        double l = ev(i);
        if (l > 1e-12) h -= l * std::log2(l);
    }
    return h;
}

inline double von_neumann(const qc::Mat& m) { return entropy_of_spectrum(qc::hermitian_eigenvalues(m)); }

// Joint entropies of subsets of one state, memoized by subsystem positions.
class EntropyEvaluator {
public:
    explicit EntropyEvaluator(const StateSpec& s) : s_(s) {}

    double joint(const std::vector<std::string>& labels) {
        std::vector<std::size_t> pos;
        for (const auto& l : labels) pos.push_back(s_.layout().index_of(l));
        std::sort(pos.begin(), pos.end());
        pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
        if (pos.empty()) return 0.0;
        auto it = cache_.find(pos);
        if (it != cache_.end()) return it->second;
        double h = von_neumann(qc::partial_trace_positions(s_.matrix(), s_.layout().dims(), pos));
        cache_.emplace(pos, h);
        return h;
    }

    double quantity(Quantity q, const std::vector<Group>& g) {
        check_groups(q, g);
        auto u = [](Group a, const Group& b) {
            a.insert(a.end(), b.begin(), b.end());
            return a;
        };
        switch (q) {
        case Quantity::H: return joint(g[0]);
        case Quantity::Hcond: return joint(u(g[0], g[1])) - joint(g[1]);
        case Quantity::Imutual: return joint(g[0]) + joint(g[1]) - joint(u(g[0], g[1]));
        case Quantity::Icoh: return joint(g[1]) - joint(u(g[0], g[1]));
        case Quantity::Icmi:
            return joint(u(g[0], g[2])) + joint(u(g[1], g[2])) - joint(u(u(g[0], g[1]), g[2])) - joint(g[2]);
        }
        return 0;
    }

    const StateSpec& state() const { return s_; }

private:
    void check_groups(Quantity q, const std::vector<Group>& g) const {
        if (g.size() != group_count(q)) fail(ErrorKind::OverlappingGroups, std::string(to_string(q)) + " needs " + std::to_string(group_count(q)) + " groups");
        std::vector<std::string> seen;
        for (const auto& grp : g) {
            if (grp.empty()) fail(ErrorKind::UnknownLabel, "empty label group");
            for (const auto& l : grp) {
                s_.layout().index_of(l);
                if (std::find(seen.begin(), seen.end(), l) != seen.end()) fail(ErrorKind::OverlappingGroups, "label '" + l + "' in two groups");
                seen.push_back(l);
            }
        }
    }

    const StateSpec& s_;
    std::map<std::vector<std::size_t>, double> cache_;
};

inline EntropyReport entropy(const StateSpec& s, Quantity q, const std::vector<Group>& groups) {
    EntropyEvaluator ev(s);
    return {q, groups, ev.quantity(q, groups)};
}

inline double H(const StateSpec& s, const Group& a) { return entropy(s, Quantity::H, {a}).value; }
inline double Hcond(const StateSpec& s, const Group& a, const Group& b) { return entropy(s, Quantity::Hcond, {a, b}).value; }
inline double I(const StateSpec& s, const Group& a, const Group& b) { return entropy(s, Quantity::Imutual, {a, b}).value; }
inline double Icoh(const StateSpec& s, const Group& a, const Group& b) { return entropy(s, Quantity::Icoh, {a, b}).value; }
inline double Icmi(const StateSpec& s, const Group& a, const Group& b, const Group& c) { return entropy(s, Quantity::Icmi, {a, b, c}).value; }

// |I(X;AB) - [H(A) + I(A>BX) - I(A;B) + I(X;B)]|
inline double check_trip_identity(const StateSpec& s, const Group& x, const Group& a, const Group& b) {
    EntropyEvaluator ev(s);
    Group ab = a, bx = b;
    ab.insert(ab.end(), b.begin(), b.end());
    bx.insert(bx.end(), x.begin(), x.end());
    double lhs = ev.quantity(Quantity::Imutual, {x, ab});
    double rhs = ev.quantity(Quantity::H, {a}) + ev.quantity(Quantity::Icoh, {a, bx}) - ev.quantity(Quantity::Imutual, {a, b}) +
                 ev.quantity(Quantity::Imutual, {x, b});
    return std::abs(lhs - rhs);
}

} // namespace ricalc::info
