#pragma once
#include <boost/archive/iterators/base64_from_binary.hpp>
#include <boost/archive/iterators/binary_from_base64.hpp>
#include <boost/archive/iterators/transform_width.hpp>
#include <iomanip>
#include <sstream>
#include <string>

#include "optimize.hpp"

namespace ricalc::trade {

inline std::string base64_encode(const std::string& in) {
    using namespace boost::archive::iterators;
    using It = base64_from_binary<transform_width<std::string::const_iterator, 6, 8>>;
    std::string out(It(in.begin()), It(in.end()));
    out.append((3 - in.size() % 3) % 3, '=');
    return out;
}

inline std::string base64_decode(std::string in) {
    using namespace boost::archive::iterators;
    using It = transform_width<binary_from_base64<std::string::const_iterator>, 8, 6>;
    std::size_t pad = 0;
    while (!in.empty() && in.back() == '=') {
        in.pop_back();
        ++pad;
    }
    try {
        std::string out(It(in.begin()), It(in.end()));
        return out;
    } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "invalid base64");
    }
}

inline json spec_to_json(const RegionSpec& s) {
    json j{{"family", to_string(s.family)}, {"max_ensemble", s.max_ensemble}, {"env_dim", s.env_dim}};
    if (s.state) {
        j["state"] = qc::state_to_json(*s.state);
        j["alice"] = s.alice;
    } else {
        j["channel"] = qc::channel_to_json(*s.channel);
    }
    return j;
}

inline RegionSpec spec_from_json(const json& j) {
    try {
        RegionSpec s;
        s.family = family_from_string(j.at("family").get<std::string>());
        s.max_ensemble = j.value("max_ensemble", kMaxEnsemble);
        s.env_dim = j.value("env_dim", 0);
        if (j.contains("state")) {
            s.state = qc::state_from_json(j.at("state"));
            s.alice = j.value("alice", std::vector<std::string>{s.state->layout().labels().front()});
        }
        if (j.contains("channel")) s.channel = qc::channel_from_json(j.at("channel"));
        s.validate();
        return s;
    } catch (const json::exception& e) {
        fail(ErrorKind::SchemaMismatch, std::string("region: ") + e.what());
    }
}

inline json to_json(const TradeoffCurve& c) {
    auto [bx, vx] = axes(c.spec.family);
    json j{{"family", to_string(c.spec.family)},
           {"axes", {bx, vx}},
           {"region", spec_to_json(c.spec)},
           {"seed", c.config.seed},
           {"restarts", c.config.restarts},
           {"max_iter", c.config.max_iter},
           {"bound", "inner"}};
    j["points"] = json::array();
    for (const auto& p : c.points) {
        json q{{"budget", p.budget}, {"feasible", p.feasible}, {"constraint", p.eval.constraint}, {"objective", p.eval.objective}};
        q["value"] = p.feasible ? json(p.value) : json(nullptr);
        q["terms"] = p.eval.terms;
        q["witness"] = to_json(p.witness);
        j["points"].push_back(q);
    }
    return j;
}

// Rebuilds a curve; every witness is re-validated and re-evaluated, never trusted.
inline TradeoffCurve curve_from_json(const json& j) {
    try {
        TradeoffCurve c;
        c.spec = spec_from_json(j.at("region"));
        c.config.seed = j.value("seed", std::uint64_t{1});
        c.config.restarts = j.value("restarts", 64);
        c.config.max_iter = j.value("max_iter", 2000);
        const Instance in(c.spec);
        for (const auto& q : j.at("points")) {
            CurvePoint p;
            p.budget = q.at("budget").get<double>();
            p.witness = witness_from_json(q.at("witness"));
            p.eval = eval_point(in, p.witness);
            p.feasible = feasible(c.spec.family, p.eval, p.budget, 1e-9);
            p.value = p.feasible ? bound_at(c.spec.family, p.eval, p.budget) : std::numeric_limits<double>::quiet_NaN();
            c.points.push_back(std::move(p));
        }
        return c;
    } catch (const json::exception& e) {
        fail(ErrorKind::SchemaMismatch, std::string("curve: ") + e.what());
    }
}

// CSV columns: budget, value, witness (base64 of the witness JSON).
inline std::string to_csv(const TradeoffCurve& c) {
    std::ostringstream out;
    out << "budget,value,witness\n" << std::setprecision(17);
    for (const auto& p : c.points) {
        out << p.budget << ',';
        if (p.feasible) out << p.value;
        else out << "nan";
        out << ',' << base64_encode(to_json(p.witness).dump()) << '\n';
    }
    return out.str();
}

} // namespace ricalc::trade
