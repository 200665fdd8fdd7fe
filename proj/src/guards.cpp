// SPDX-License-Identifier: Apache-2.0
#include "heckeforge/guards.hpp"

#include <cstdlib>
#include <sstream>

#include "heckeforge/errors.hpp"

namespace hf {

Guards& guards() {
    static Guards g;
    return g;
}

void apply_guard_overrides(const std::string& spec) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        require(eq != std::string::npos, "guard override '" + item + "' is not key=value");
        std::string key = item.substr(0, eq);
        long long val = 0;
        try {
            val = std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw ValidationError("guard override '" + item + "' has a non-integer value");
        }
        require(val > 0, "guard override '" + key + "' must be positive");
        Guards& g = guards();
        if (key == "max_enum_rank") g.max_enum_rank = static_cast<int>(val);
        else if (key == "oracle_max_n") g.oracle_max_n = static_cast<int>(val);
        else if (key == "oracle_max_q") g.oracle_max_q = static_cast<int>(val);
        else if (key == "max_group_order") g.max_group_order = static_cast<std::size_t>(val);
        else if (key == "max_precision") g.max_precision = static_cast<int>(val);
        else if (key == "max_matrix_dim") g.max_matrix_dim = static_cast<int>(val);
        else if (key == "oracle_max_column_space") g.oracle_max_column_space = static_cast<std::uint64_t>(val);
        else throw ValidationError("unknown guard '" + key + "'");
    }
}

void apply_guard_overrides_from_env() {
    if (const char* s = std::getenv("HECKE_FORGE_GUARDS")) apply_guard_overrides(s);
}

void check_guard(bool ok, const std::string& what) {
    if (!ok) throw GuardError("guard exceeded: " + what);
}

unsigned thread_count() {
    if (const char* s = std::getenv("HECKE_FORGE_THREADS")) {
        int v = std::atoi(s);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

}  // namespace hf
