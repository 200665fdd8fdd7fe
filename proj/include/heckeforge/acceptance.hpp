// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hf {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool ok = false;          // the property itself held
    double seconds = 0;
    double budget = 0;        // seconds
    std::string detail;
    bool pass() const { return ok && seconds < budget; }
};

struct AcceptanceOptions {
    bool full = true;                 // fast skips the Sp_4(F_3) enumeration
    std::uint64_t seed = 20240601;
    std::vector<int> only;            // empty: all criteria
    bool mutate_satake = false;       // negative control: shifts the Satake exponent by one
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_result = {});
std::string format_result(const CriterionResult& r);

}  // namespace hf
