// Quantum communication vs entanglement trade-off for an isotropic state.
#include <cstdio>

#include "ricalc/qcore.hpp"
#include "ricalc/tradeoff.hpp"

using namespace ricalc;

int main() {
    qc::Mat m = 0.8 * qc::phi(2, "A", "B").matrix() + 0.2 * qc::Mat::Identity(4, 4) / 4.0;
    auto rho = qc::StateSpec(qc::SystemLayout{{"A", 2}, {"B", 2}}, m);
    auto spec = trade::RegionSpec::of_state(trade::Family::Mother, rho);
    trade::OptimizerConfig cfg;
    cfg.restarts = 8;
    auto curve = trade::optimize_boundary(spec, trade::budget_grid(spec, 9), cfg);
    std::printf("  Q (qubits)   E (ebits)   1/2 I(A';EE'|X)\n");
    for (const auto& p : curve.points) std::printf("  %10.4f  %10.6f  %10.6f\n", p.budget, p.value, p.eval.constraint);
}
