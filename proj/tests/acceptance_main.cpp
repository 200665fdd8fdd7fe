// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "heckeforge/acceptance.hpp"

// Usage: acceptance [--fast] [--only N]...
int main(int argc, char** argv) {
    hf::AcceptanceOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--fast") == 0) opt.full = false;
        else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) opt.only.push_back(std::atoi(argv[++i]));
    }
    int failed = 0;
    auto results = hf::run_acceptance(opt, [](const hf::CriterionResult& r) {
        std::printf("%s\n", hf::format_result(r).c_str());
        std::fflush(stdout);
    });
    for (const auto& r : results)
        if (!r.pass()) ++failed;
    std::printf("%zu criteria, %d failed\n", results.size(), failed);
    return failed == 0 ? 0 : 1;
}
