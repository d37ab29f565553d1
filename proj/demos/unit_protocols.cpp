// Exact simulation of teleportation, super-dense coding and their coherent versions.
#include <cstdio>

#include "ricalc/qcore.hpp"
#include "ricalc/sim.hpp"

using namespace ricalc;

void show(const sim::SimResult& r) {
    std::printf("%-14s consumed %-18s created %-16s accuracy %.1e\n", r.protocol.c_str(), alg::to_string(r.consumed).c_str(),
                alg::to_string(r.declared_created).c_str(), r.accuracy);
}

int main() {
    qc::Rng rng(3);
    auto input = qc::random_pure_state(qc::SystemLayout{{"R", 2}, {"A", 2}}, rng);
    show(sim::run_tp(input));
    show(sim::run_sd(qc::tensor(qc::basis_state(2, 1, "M1"), qc::basis_state(2, 0, "M2"))));
    show(sim::run_ed());
    show(sim::run_coherent_sd(input));
    show(sim::run_coherent_tp(qc::random_pure_state(qc::SystemLayout{{"R", 4}, {"A1", 2}, {"A2", 2}}, rng)));
    show(sim::run_ccc_roundtrip(input));

    for (const char* kind : {"id", "coherent", "classical"}) {
        auto r = sim::run_absolutize(kind, 2, qc::phi(2, "R", "A'"));
        std::printf("absolutize %-9s input deviation %.1e  output %.1e  coherent residual %.3f\n", kind, r.validity, r.accuracy, r.residual);
    }
}
