// Acceptance gate: one pass/fail line per criterion, nonzero exit on
// any failure. Usage: acceptance [--seed N]
#include <cstdint>
#include <cstring>
#include <iostream>
#include <string>

#include "hypnp/verify.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            seed = std::stoull(argv[i + 1]);
            ++i;
        }
    }
    auto results = hypnp::run_acceptance(seed);
    bool ok = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) std::cout << " — " << r.detail;
        std::cout << std::endl;
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
