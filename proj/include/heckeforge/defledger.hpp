// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "heckeforge/weyl.hpp"

namespace hf {

enum class PlaceKind { AboveP, TaylorWiles, OtherFinite, Infinite };
std::string place_kind_name(PlaceKind k);
PlaceKind parse_place_kind(const std::string& s);

struct PlaceRecord {
    std::string label;
    PlaceKind kind = PlaceKind::OtherFinite;
    int h0 = 0;
    int l = 0;  // dim L_v; unused at infinite places
    int f = 0;  // [F_v : Q_p] for places above p
};

struct LedgerInput {
    GroupDescriptor group;
    int degree = 1;  // [F : Q]
    std::vector<PlaceRecord> places;
    int h0_global = 0;
    int h0_twist = 0;        // h⁰[1]
    int h1_Sperp_twist = 0;  // h¹_{S⊥}[1]
    void validate() const;
};

// dim ĝ for the dual group of the descriptor.
int dual_lie_dim(const GroupDescriptor& g);
// Number of positive roots of the dual group, i.e. dim Ĝ − dim B̂.
int dual_positive_roots(const GroupDescriptor& g);

int fl_defect(int f, const GroupDescriptor& g);
int h0_infinity(const GroupDescriptor& g);

struct LedgerReport {
    int dim_g = 0;
    int sum_h0_infinite = 0;
    int chi_global = 0;        // Σ_{v|∞} h0_v − [F:Q]·dim ĝ
    int sum_local_chi = 0;     // Σ_{v∈S} χ(H_v), −f_v·dim ĝ above p and 0 elsewhere
    int sum_defects = 0;       // Σ_{v∈S} (l_v − h0_v)
    int euler_chi_S = 0;       // χ(H) − Σχ(H_v) − Σ(l_v − h0_v)
    int chi_S_closed = 0;      // Σ_{v|∞} h0_v + Σ_{v∈S}(h0_v − l_v)
    int h0_S = 0, h1_S = 0, h2_S = 0, h3_S = 0;
    int alternating_sum = 0;
    bool covers_p = false;     // Σ_{v|p} f_v = [F:Q]
    bool consistent = false;   // alternating sum = euler_chi_S
    int fl_total = 0;          // Σ_{v|p} fl_defect(f_v)
    // [F:Q](dim Ĝ − dim B̂) against Σ_{v|∞} h0_v; reported, never asserted.
    int coincidence_lhs = 0;
    int coincidence_rhs = 0;
};

int euler_chi_S(const LedgerInput& in);
int h1_S(const LedgerInput& in);
LedgerReport ledger_report(const LedgerInput& in);

struct TwBudget {
    int q = 0;
    int bound = 0;
};
TwBudget tw_budget(int q0, int h1_Sperp_twist, const std::vector<int>& a_values, const std::vector<int>& infinite_h0s);

}  // namespace hf
