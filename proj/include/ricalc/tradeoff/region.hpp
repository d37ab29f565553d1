#pragma once
#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "../qcore/json_io.hpp"
#include "../qcore/ops.hpp"

namespace ricalc::trade {

using qc::ChannelSpec;
using qc::json;
using qc::Mat;
using qc::StateSpec;
using qc::Vec;

enum class Family { NSD, Mother, NTP, ED, Father, EAC };

inline const char* to_string(Family f) {
    switch (f) {
    case Family::NSD: return "NSD";
    case Family::Mother: return "MOTHER";
    case Family::NTP: return "NTP";
    case Family::ED: return "ED";
    case Family::Father: return "FATHER";
    case Family::EAC: return "EAC";
    }
    return "?";
}

inline Family family_from_string(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (Family f : {Family::NSD, Family::Mother, Family::NTP, Family::ED, Family::Father, Family::EAC})
        if (s == to_string(f)) return f;
    fail(ErrorKind::UnknownKind, "unknown trade-off family '" + s + "'");
}

inline bool is_static(Family f) { return f != Family::Father && f != Family::EAC; }

// (budget axis, value axis) of each region.
inline std::pair<const char*, const char*> axes(Family f) {
    switch (f) {
    case Family::NSD: return {"Q", "R"};
    case Family::Mother: return {"Q", "E"};
    case Family::NTP: return {"R", "Q"};
    case Family::ED: return {"R", "E"};
    case Family::Father: return {"E", "Q"};
    case Family::EAC: return {"E", "R"};
    }
    return {"?", "?"};
}

inline constexpr int kMaxEnsemble = 4;

// One noisy resource: a bipartite state with Alice's labels, or a channel.
struct RegionSpec {
    Family family = Family::Mother;
    std::optional<StateSpec> state;
    std::vector<std::string> alice;
    std::optional<ChannelSpec> channel;
    int max_ensemble = kMaxEnsemble;
    int env_dim = 0;  // dim E' of witness maps; 0 means the input dimension

    static RegionSpec of_state(Family f, StateSpec rho, std::vector<std::string> alice = {}) {
        RegionSpec r;
        r.family = f;
        if (alice.empty()) alice = {rho.layout().labels().front()};
        r.state = std::move(rho);
        r.alice = std::move(alice);
        r.validate();
        return r;
    }
    static RegionSpec of_channel(Family f, ChannelSpec n) {
        RegionSpec r;
        r.family = f;
        r.channel = std::move(n);
        r.validate();
        return r;
    }

    void validate() const {
        if (is_static(family) != state.has_value() || state.has_value() == channel.has_value())
            fail(ErrorKind::InvalidObject, std::string(to_string(family)) + (is_static(family) ? " needs a bipartite state" : " needs a channel"));
        if (max_ensemble < 1 || max_ensemble > kMaxEnsemble) fail(ErrorKind::OutOfRange, "ensemble size must lie in 1..4");
        if (state) {
            for (const auto& l : alice) state->layout().index_of(l);
            if (alice.size() >= state->layout().size()) fail(ErrorKind::InvalidObject, "Bob holds no system");
        }
        if (channel && !channel->trace_preserving()) fail(ErrorKind::NotTracePreserving, "noisy channel must be CPTP");
        if (env_dim < 0 || env_dim > input_dim()) fail(ErrorKind::OutOfRange, "environment dimension exceeds the input dimension");
    }

    std::vector<std::string> bob() const {
        std::vector<std::string> out;
        for (const auto& l : state->layout().labels())
            if (std::find(alice.begin(), alice.end(), l) == alice.end()) out.push_back(l);
        return out;
    }
    // Dimension of the system Alice encodes: A for states, A' for channels.
    int input_dim() const {
        if (state) return static_cast<int>(state->layout().dim_of(alice));
        return static_cast<int>(channel->in_layout().total_dim());
    }
    int witness_env_dim() const { return env_dim > 0 ? env_dim : input_dim(); }
};

// Witness for the maximization in each region formula.
//   NSD, MOTHER: p_x and isometries U_x: A -> A'E'           (maps[x])
//   NTP, ED:     one isometry V: A -> X A' E', X measured     (maps[0], outcomes = |X|)
//   FATHER:      pure input phi^{AA''} and encoder A'' -> A'E' (inputs[0], maps[0])
//   EAC:         p_x and pure inputs phi_x^{AA'}              (inputs[x])
struct Witness {
    std::vector<double> p;
    std::vector<Mat> maps;
    std::vector<Vec> inputs;
    int outcomes = 1;
    int env_dim = 1;
};

namespace detail {

inline void witness_fail(const std::string& what) { fail(ErrorKind::InvalidWitness, what); }

inline void check_probabilities(const std::vector<double>& p, int max_n) {
    if (p.empty() || static_cast<int>(p.size()) > max_n) witness_fail("ensemble size must lie in 1.." + std::to_string(max_n));
    double s = 0;
    for (double x : p) {
        if (!(x >= -1e-12)) witness_fail("negative probability");
        s += x;
    }
    if (std::abs(s - 1) > 1e-9) witness_fail("probabilities do not sum to 1");
}

inline void check_isometry(const Mat& v, Eigen::Index rows, Eigen::Index cols) {
    if (v.rows() != rows || v.cols() != cols)
        witness_fail("map shape " + std::to_string(v.rows()) + "x" + std::to_string(v.cols()) + ", expected " + std::to_string(rows) +
                     "x" + std::to_string(cols));
    if ((v.adjoint() * v - Mat::Identity(cols, cols)).cwiseAbs().maxCoeff() > 1e-9) witness_fail("V^dagger V differs from identity");
}

inline void check_unit(const Vec& v, Eigen::Index dim) {
    if (v.size() != dim) witness_fail("input vector has the wrong dimension");
    if (std::abs(v.norm() - 1) > 1e-9) witness_fail("input vector is not normalized");
}

} // namespace detail

inline void validate(const RegionSpec& spec, const Witness& w) {
    const int d = spec.input_dim();
    if (w.env_dim < 1 || w.env_dim > d) detail::witness_fail("environment dimension must lie in 1..input dimension");
    switch (spec.family) {
    case Family::NSD:
    case Family::Mother:
        detail::check_probabilities(w.p, spec.max_ensemble);
        if (w.maps.size() != w.p.size()) detail::witness_fail("one isometry per ensemble member");
        for (const auto& u : w.maps) detail::check_isometry(u, d * w.env_dim, d);
        break;
    case Family::NTP:
    case Family::ED:
        if (w.outcomes < 1 || w.outcomes > spec.max_ensemble) detail::witness_fail("outcome count must lie in 1..4");
        if (w.maps.size() != 1) detail::witness_fail("one instrument isometry");
        detail::check_isometry(w.maps[0], w.outcomes * d * w.env_dim, d);
        break;
    case Family::Father:
        if (w.maps.size() != 1 || w.inputs.size() != 1) detail::witness_fail("one input state and one encoder");
        detail::check_unit(w.inputs[0], d * d);
        detail::check_isometry(w.maps[0], d * w.env_dim, d);
        break;
    case Family::EAC:
        detail::check_probabilities(w.p, spec.max_ensemble);
        if (w.inputs.size() != w.p.size()) detail::witness_fail("one input state per ensemble member");
        for (const auto& v : w.inputs) detail::check_unit(v, d * d);
        break;
    }
}

// Product of two NSD/MOTHER witnesses: p_x q_y with U_x (x) V_y, outputs
// regrouped as (A1' A2')(E1' E2'). Acts on A1 A2 of the doubled resource.
inline Witness product_witness(const Witness& a, const Witness& b, int d1, int d2) {
    Witness w;
    w.env_dim = a.env_dim * b.env_dim;
    const std::vector<int> dims{d1, a.env_dim, d2, b.env_dim};
    const auto map = qc::permutation_map(dims, {0, 2, 1, 3});
    for (std::size_t x = 0; x < a.p.size(); ++x)
        for (std::size_t y = 0; y < b.p.size(); ++y) {
            w.p.push_back(a.p[x] * b.p[y]);
            Mat k = qc::kron(a.maps[x], b.maps[y]);
            Mat u(k.rows(), k.cols());
            for (Eigen::Index n = 0; n < k.rows(); ++n) u.row(n) = k.row(map[static_cast<std::size_t>(n)]);
            w.maps.push_back(u);
        }
    return w;
}

inline json to_json(const Witness& w) {
    json j;
    j["p"] = w.p;
    j["outcomes"] = w.outcomes;
    j["env_dim"] = w.env_dim;
    j["maps"] = json::array();
    for (const auto& m : w.maps) j["maps"].push_back(qc::matrix_to_json(m));
    j["inputs"] = json::array();
    for (const auto& v : w.inputs) j["inputs"].push_back(qc::matrix_to_json(Mat(v)));
    return j;
}

inline Witness witness_from_json(const json& j) {
    Witness w;
    try {
        w.p = j.value("p", std::vector<double>{});
        w.outcomes = j.value("outcomes", 1);
        w.env_dim = j.value("env_dim", 1);
        for (const auto& m : j.value("maps", json::array())) w.maps.push_back(qc::matrix_from_json(m));
        for (const auto& v : j.value("inputs", json::array())) {
            Mat m = qc::matrix_from_json(v);
            if (m.cols() != 1) fail(ErrorKind::SchemaMismatch, "input vectors are single columns");
            w.inputs.push_back(m.col(0));
        }
    } catch (const json::exception& e) {
        fail(ErrorKind::SchemaMismatch, std::string("witness: ") + e.what());
    }
    return w;
}

} // namespace ricalc::trade
