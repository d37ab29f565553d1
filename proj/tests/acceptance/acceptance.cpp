// Acceptance run: one PASS/FAIL line per criterion; exit status 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "ricalc/derive.hpp"
#include "ricalc/info.hpp"
#include "ricalc/qcore.hpp"
#include "ricalc/sim.hpp"
#include "ricalc/tradeoff.hpp"

using namespace ricalc;
using json = nlohmann::json;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [failed: " << what << "]";
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

bool report(int id, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail << " [exception: " << e.what() << "]";
    }
    double t = seconds_since(t0);
    if (t >= limit_s) {
        o.ok = false;
        o.detail << " [over the " << limit_s << " s budget]";
    }
    std::printf("%s %d %s:%s (%.2f s)\n", o.ok ? "[PASS]" : "[FAIL]", id, title.c_str(), o.detail.str().c_str(), t);
    std::fflush(stdout);
    return o.ok;
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

std::pair<int, std::string> run_cli(const std::string& args) {
    std::string cmd = std::string(RICALC_CLI) + " " + args + " 2>/dev/null";
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, out};
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

qc::StateSpec schmidt(double theta) {
    qc::Mat v = qc::Mat::Zero(4, 1);
    v(0, 0) = std::cos(theta);
    v(3, 0) = std::sin(theta);
    return qc::StateSpec::trusted(qc::SystemLayout({"A", "B"}, {2, 2}), v * v.adjoint());
}

qc::StateSpec isotropic(double f) {
    qc::Mat m = f * qc::phi(2, "A", "B").matrix() + (1 - f) * qc::Mat::Identity(4, 4) / 4.0;
    return qc::StateSpec::trusted(qc::SystemLayout({"A", "B"}, {2, 2}), m);
}

// (|00> + |11>)/sqrt2 embedded in d x d.
qc::StateSpec two_term_bell(int d) {
    qc::Mat v = qc::Mat::Zero(d * d, 1);
    v(0, 0) = v(d + 1, 0) = 1 / std::sqrt(2.0);
    return qc::StateSpec::trusted(qc::SystemLayout({"R", "A'"}, {d, d}), v * v.adjoint());
}

// Reference values from tests/oracles.
constexpr double kH2Pi8 = 0.600876036693, kH2Pi6 = 0.811278124459;
constexpr double kDepol01 = 1.496816268319, kDepol025 = 1.006607270990;
constexpr double kDephHalfIAE = 0.360964047444;

void derivation_replay(Outcome& o) {
    const auto& bs = der::builtin_derivations();
    int ok = 0;
    for (const auto& p : bs) {
        auto r = der::check_builtin(p);
        if (r.ok) ++ok;
        else o.require(false, p.name + ": " + der::describe(r));
    }
    o.require(bs.size() >= 15, "at least 15 builtin proofs");
    for (const char* name : {"grandmother", "ccc-identity", "mother-from-hashing-ruleI", "father-from-eac-ruleO", "dct-ntp", "dct-ed",
                             "ntp-from-hashing", "crd-from-cqsw", "cqrsp"})
        o.require(der::find_builtin(name).has_value(), std::string("builtin ") + name);
    std::mt19937_64 rng(20261018);
    int rejected = 0;
    const int n = 500;
    for (int i = 0; i < n; ++i) {
        const auto& p = bs[static_cast<std::size_t>(i) % bs.size()];
        auto m = der::mutate(p, rng);
        if (!der::check_builtin(m.proof).ok) ++rejected;
    }
    o.require(rejected == n, "every mutation rejected");
    o.detail << " " << ok << "/" << bs.size() << " builtin proofs check; " << rejected << "/" << n << " mutations rejected";
}

void coherent_identity(Outcome& o) {
    auto [code, out] = run_cli("ri derive ccc-identity");
    o.require(code == 0, "ri derive exit code 0");
    o.require(out.find("check: ok") != std::string::npos, "proof tree reports ok");
    auto p = der::find_builtin("ccc-identity");
    o.require(p.has_value(), "builtin present");
    if (!p) return;
    auto target = p->target_ri();
    auto want = alg::parse_ri("[q->qq] = 1/2 [q->q] + 1/2 [qq]");
    o.require(alg::equivalent(target, want, target.ctx), "target is [q->qq] = 1/2([q->q] + [qq])");
    o.require(!target.ctx.coherent_identity, "no identity context");
    // Substantive steps; antisymmetry and scaling only combine and rescale earlier ones.
    const std::set<std::string> axioms = {"coherent-tp", "coherent-sd", "cobit-ebit"};
    const std::set<std::string> rules = {"axiom", "cancellation", "o-removal", "antisymmetry", "scaling"};
    std::set<std::string> used;
    for (const auto& s : p->steps) {
        o.require(rules.count(s.rule) == 1, "rule " + s.rule + " allowed");
        if (s.rule == "axiom") {
            std::string name = s.instantiation.value("name", "");
            o.require(axioms.count(name) == 1, "axiom " + name + " allowed");
            used.insert(name);
        } else {
            used.insert(s.rule);
        }
    }
    for (const char* need : {"coherent-tp", "coherent-sd", "cobit-ebit", "cancellation", "o-removal"})
        o.require(used.count(need) == 1, std::string("uses ") + need);
    o.detail << " " << p->steps.size() << " steps via coherent-tp, coherent-sd, cobit-ebit, cancellation, o-removal";
}

void entropy_suite(Outcome& o) {
    auto rep = info::run_identity_suite(200, 7);
    for (const auto& c : rep.checks) {
        o.require(c.passed(), c.name);
        o.detail << " " << c.name << "=" << sci(c.worst);
    }
}

void unit_protocols(Outcome& o) {
    qc::Rng rng(2026);
    double worst = 0;
    bool ledger = true;
    const auto tp_cost = alg::parse_expr("2[c->c] + [qq]");
    for (int t = 0; t < 50; ++t) {
        auto r = sim::run_tp(qc::random_pure_state(qc::SystemLayout({"R", "A"}, {2, 2}), rng));
        worst = std::max(worst, r.accuracy);
        ledger = ledger && alg::equivalent(r.consumed, tp_cost, alg::Context{}) && r.validity < 1e-10;
    }
    o.require(worst < 1e-10, "TP accuracy");
    o.require(ledger, "TP consumes exactly 2[c->c] + [qq]");
    int decoded = 0;
    for (int m = 0; m < 4; ++m) {
        auto r = sim::run_sd(qc::tensor(qc::basis_state(2, m / 2, "M1"), qc::basis_state(2, m % 2, "M2")));
        if (r.accuracy < 1e-12 && sim::ledger_matches(r) && alg::equivalent(r.consumed, alg::parse_expr("[q->q] + [qq]"), alg::Context{}))
            ++decoded;
    }
    o.require(decoded == 4, "SD decodes all 4 messages");
    double csd = 0;
    bool cledger = true;
    for (int t = 0; t < 10; ++t) {
        auto r = sim::run_coherent_sd(qc::random_pure_state(qc::SystemLayout({"R", "A"}, {2, 2}), rng));
        csd = std::max(csd, r.accuracy);
        cledger = cledger && alg::equivalent(r.consumed, alg::parse_expr("2[q->qq] + [qq]"), alg::Context{}) &&
                  alg::equivalent(r.declared_created, alg::parse_expr("[q->q] + 2[qq]"), alg::Context{});
    }
    o.require(csd < 1e-10, "coherent-SD residual");
    o.require(cledger, "coherent-SD ledger");
    o.detail << " TP worst " << sci(worst) << " over 50 inputs; SD " << decoded << "/4; coherent-SD worst " << sci(csd);
}

void absolutization(Outcome& o) {
    for (int d : {2, 3})
        for (const char* k : {"id", "coherent", "classical"}) {
            auto r = sim::run_absolutize(k, d, two_term_bell(d));
            std::string tag = std::string(k) + " d=" + std::to_string(d);
            double inc = sim::check_decoupling(r, {"XA", "XB"}, sim::DecouplingMode::Incoherent);
            o.require(r.validity < 1e-12, tag + " twirled input");
            o.require(r.accuracy < 1e-10 && inc < 1e-10, tag + " factorization");
            if (std::string(k) == "classical") {
                o.require(r.residual > 0.1, tag + " coherent residual > 0.1");
                o.require(std::abs(r.residual - 2.0 * (1.0 - 1.0 / d)) < 1e-10, tag + " matches oracle");
            } else {
                o.require(r.residual < 1e-10, tag + " coherent residual");
            }
            o.detail << " " << tag << ":" << sci(r.residual);
        }
}

trade::OptimizerConfig full_config() {
    trade::OptimizerConfig c;
    c.restarts = 64;
    c.seed = 1;
    return c;
}

void tradeoff_points(Outcome& o) {
    const auto cfg = full_config();
    auto curve = [&](const trade::RegionSpec& s) { return trade::optimize_boundary(s, trade::budget_grid(s, 17), cfg); };

    auto m = curve(trade::RegionSpec::of_state(trade::Family::Mother, qc::phi(2, "A", "B")));
    o.require(m.points.front().value >= 1 - 1e-3, "MOTHER on Phi_2 at Q=0");
    o.detail << " MOTHER(Phi2) E(Q=0)=" << m.points.front().value;
    for (auto [th, ref, label] : {std::tuple{M_PI / 8, kH2Pi8, "pi/8"}, std::tuple{M_PI / 6, kH2Pi6, "pi/6"}}) {
        auto c = curve(trade::RegionSpec::of_state(trade::Family::Mother, schmidt(th)));
        double v = c.points.front().value;
        o.require(std::abs(v - ref) < 1e-2, std::string("MOTHER Schmidt ") + label);
        o.detail << "; Schmidt " << label << " " << v << " vs " << ref;
    }
    auto perfect = curve(trade::RegionSpec::of_channel(trade::Family::Father, qc::identity_channel(2, "A'", "B")));
    o.require(perfect.points.front().value >= 1 - 1e-3, "FATHER perfect channel at E=0");
    o.detail << "; FATHER(id) Q(E=0)=" << perfect.points.front().value;

    auto deph = curve(trade::RegionSpec::of_channel(trade::Family::Father, qc::dephasing(0.2)));
    const auto& top = deph.points.back();
    double meet = top.eval.objective - top.eval.terms.at("I(A>B)");
    double half_iae = 0.5 * top.eval.terms.at("I(A;E)");
    o.require(std::abs(meet - half_iae) < 1e-6, "father bounds meet at 1/2 I(A;E)");
    o.require(std::abs(meet - kDephHalfIAE) < 1e-6, "meeting point matches the oracle");
    o.detail << "; dephasing(0.2) bounds meet at E=" << meet << " (1/2 I(A;E)=" << half_iae << ")";

    for (auto [p, ref] : {std::pair{0.1, kDepol01}, std::pair{0.25, kDepol025}}) {
        auto s = trade::RegionSpec::of_channel(trade::Family::EAC, qc::depolarizing(p));
        double v = trade::eval_point(s, trade::canonical_witness(s, 0)).objective;
        auto c = curve(s);
        o.require(std::abs(v - ref) < 1e-6, "EAC maximally entangled witness");
        o.require(c.points.back().value >= ref - 1e-6, "EAC curve reaches I(A;B)");
        o.detail << "; EAC depol(" << p << ") " << v << " vs " << ref;
    }
}

void bijections(Outcome& o) {
    auto rho = isotropic(0.8);
    trade::OptimizerConfig cfg;
    cfg.restarts = 16;
    cfg.seed = 3;
    auto mother = trade::RegionSpec::of_state(trade::Family::Mother, rho);
    auto nsd = trade::RegionSpec::of_state(trade::Family::NSD, rho);
    auto ntp = trade::RegionSpec::of_state(trade::Family::NTP, rho);
    auto ed = trade::RegionSpec::of_state(trade::Family::ED, rho);
    auto sample = [&](const trade::RegionSpec& s) {
        std::vector<trade::Witness> w;
        for (const auto& p : trade::optimize_boundary(s, trade::budget_grid(s, 33), cfg).points) w.push_back(p.witness);
        return w;
    };
    auto mw = sample(mother);
    auto f = trade::check_witnesses(mother, nsd, mw);
    auto nw = sample(ntp);
    auto g = trade::check_witnesses(ed, ntp, nw);
    o.require(f.witnesses == 33 && g.witnesses == 33, "33-witness samples");
    o.require(f.worst_violation < 1e-6, "f: MOTHER -> NSD");
    o.require(g.worst_violation < 1e-6, "g: NTP -> ED");
    o.detail << " f worst " << sci(f.worst_violation) << " (max gap " << sci(f.max_discrepancy) << "), g worst " << sci(g.worst_violation)
             << " (max gap " << sci(g.max_discrepancy) << ") over 33 shared witnesses each";
}

void round_trips(Outcome& o) {
    int axioms = 0, proofs = 0;
    for (const auto& a : der::axiom_db()) {
        auto back = alg::parse_ri(alg::to_string(a.ri));
        if (alg::equivalent(back, a.ri, a.ri.ctx) && alg::to_string(back) == alg::to_string(a.ri)) ++axioms;
        else o.require(false, "axiom " + a.name);
    }
    for (const auto& p : der::builtin_derivations()) {
        auto q = der::proof_from_json(json::parse(der::to_json(p).dump()));
        if (der::check_builtin(q).ok && der::to_json(q) == der::to_json(p)) ++proofs;
        else o.require(false, "proof " + p.name);
    }
    auto spec = trade::RegionSpec::of_state(trade::Family::Mother, isotropic(0.8));
    trade::OptimizerConfig cfg;
    cfg.restarts = 4;
    cfg.seed = 42;
    auto grid = trade::budget_grid(spec, 5);
    auto a = trade::optimize_boundary(spec, grid, cfg), b = trade::optimize_boundary(spec, grid, cfg);
    o.require(trade::to_csv(a) == trade::to_csv(b), "library CSV identical");
    o.require(trade::to_json(a).dump() == trade::to_json(b).dump(), "library JSON identical");
    auto back = trade::curve_from_json(trade::to_json(a));
    o.require(trade::to_json(back).dump() == trade::to_json(a).dump(), "curve JSON re-evaluates identically");
    const std::string args = "tradeoff NSD --channel dephasing:0.2 --grid 5 --restarts 4 --seed 42 --out - --format ";
    o.require(run_cli(args + "csv").second == run_cli(args + "csv").second, "CLI CSV identical");
    o.require(run_cli(args + "json").second == run_cli(args + "json").second, "CLI JSON identical");
    o.require(run_cli("sim TP --trials 5 --seed 9").second == run_cli("sim TP --trials 5 --seed 9").second, "CLI sim JSON identical");
    o.detail << " " << axioms << "/" << der::axiom_db().size() << " axioms and " << proofs << "/" << der::builtin_derivations().size()
             << " proofs round-trip; CSV/JSON byte-identical across runs";
}

} // namespace

int main() {
    int failed = 0;
    failed += !report(1, "derivation replay", 5, derivation_replay);
    failed += !report(2, "coherent communication identity", 5, coherent_identity);
    failed += !report(3, "entropy identity suite", 30, entropy_suite);
    failed += !report(4, "unit protocol exactness", 5, unit_protocols);
    failed += !report(5, "absolutization", 5, absolutization);
    failed += !report(6, "trade-off reference points", 600, tradeoff_points);
    failed += !report(7, "bijection structure", 120, bijections);
    failed += !report(8, "format round-trips", 60, round_trips);
    std::printf("%d/8 criteria pass\n", 8 - failed);
    return failed == 0 ? 0 : 1;
}
