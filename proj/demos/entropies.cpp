// Entropic quantities of a few standard states.
#include <cstdio>

#include "ricalc/info.hpp"
#include "ricalc/qcore.hpp"

using namespace ricalc;

int main() {
    auto phi = qc::phi(2, "A", "B");
    std::printf("Phi_2:    H(A)=%.6f  I(A;B)=%.6f  I(A>B)=%.6f\n", info::H(phi, {"A"}), info::I(phi, {"A"}, {"B"}),
                info::Icoh(phi, {"A"}, {"B"}));

    auto deph = qc::apply(qc::dephasing(0.2, "A", "B"), qc::phi(2, "R", "A"), {"A"});
    std::printf("dephased: I(R;B)=%.6f  I(R>B)=%.6f\n", info::I(deph, {"R"}, {"B"}), info::Icoh(deph, {"R"}, {"B"}));

    qc::Rng rng(1);
    auto s = qc::random_mixed_state(qc::SystemLayout{{"X", 2}, {"A", 2}, {"B", 2}}, rng);
    std::printf("random:   I(A;B|X)=%.6f  identity residual=%.2e\n", info::Icmi(s, {"A"}, {"B"}, {"X"}),
                info::check_trip_identity(s, {"X"}, {"A"}, {"B"}));

    auto z = qc::basis_state(2, 0), t = qc::tau(2);
    std::printf("|0> vs tau_2: trace distance=%.6f  fidelity=%.6f\n", info::trace_distance(z, t), info::fidelity(z, t));
}
