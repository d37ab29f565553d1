// Replays every builtin derivation and shows one of them step by step.
#include <cstdio>

#include "ricalc/derive.hpp"

using namespace ricalc;

int main() {
    for (const auto& p : der::builtin_derivations()) {
        auto r = der::check_builtin(p);
        std::printf("%-28s %s\n", p.name.c_str(), der::describe(r).c_str());
    }
    auto p = der::find_builtin("nsd-from-mother");
    std::printf("\n%s\n", p->target.c_str());
    for (const auto& s : p->steps) std::printf("  %-4s %-14s %s\n", s.id.c_str(), s.rule.c_str(), s.conclusion.c_str());
}
