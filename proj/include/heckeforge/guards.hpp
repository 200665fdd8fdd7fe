// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace hf {

struct Guards {
    int max_enum_rank = 8;          // n_s for full Weyl-group enumeration
    int oracle_max_n = 4;           // matrix size for finite-group enumeration
    int oracle_max_q = 5;
    std::size_t max_group_order = 20000;
    int max_precision = 6;          // e in Z/p^e for matrix rings
    int max_matrix_dim = 12;
    std::uint64_t oracle_max_column_space = 200000;  // residue vectors per column in brute-force counts
};

Guards& guards();

// Applies "key=value,key=value" overrides. Throws ValidationError on unknown keys.
void apply_guard_overrides(const std::string& spec);

// Reads HECKE_FORGE_GUARDS; only called when the caller acknowledged --guard-override.
void apply_guard_overrides_from_env();

void check_guard(bool ok, const std::string& what);

unsigned thread_count();

}  // namespace hf
