// SPDX-License-Identifier: Apache-2.0
#include "heckeforge/defledger.hpp"

#include <algorithm>

#include "heckeforge/errors.hpp"

namespace hf {

std::string place_kind_name(PlaceKind k) {
    switch (k) {
        case PlaceKind::AboveP: return "above_p";
        case PlaceKind::TaylorWiles: return "taylor_wiles";
        case PlaceKind::OtherFinite: return "other_finite";
        case PlaceKind::Infinite: return "infinite";
    }
    return "?";
}

PlaceKind parse_place_kind(const std::string& s) {
    for (auto k : {PlaceKind::AboveP, PlaceKind::TaylorWiles, PlaceKind::OtherFinite, PlaceKind::Infinite})
        if (place_kind_name(k) == s) return k;
    throw ValidationError("kind: unknown place kind '" + s + "'");
}

void LedgerInput::validate() const {
    require(degree >= 1, "degree: must be at least 1");
    require(h0_global >= 0 && h0_twist >= 0 && h1_Sperp_twist >= 0, "dimensions: must be nonnegative");
    for (std::size_t i = 0; i < places.size(); ++i) {
        const auto& v = places[i];
        std::string at = "places[" + std::to_string(i) + "]";
        require(v.h0 >= 0 && v.l >= 0 && v.f >= 0, at + ": dimensions must be nonnegative");
        switch (v.kind) {
            case PlaceKind::TaylorWiles:
                require(v.l - v.h0 == 1, at + ": taylor_wiles needs l − h0 = 1");
                break;
            case PlaceKind::OtherFinite:
                require(v.l - v.h0 == 0, at + ": other_finite needs l − h0 = 0");
                break;
            case PlaceKind::AboveP:
                require(v.f >= 1, at + ": above_p needs f ≥ 1");
                break;
            case PlaceKind::Infinite:
                break;
        }
    }
}

int dual_lie_dim(const GroupDescriptor& g) {
    int N = g.N;
    return g.kind == GroupKind::SOodd ? N * (N + 1) / 2 : N * (N - 1) / 2;
}

int dual_positive_roots(const GroupDescriptor& g) {
    int N = g.N;
    if (g.kind == GroupKind::SOodd) return N * N / 4;       // Sp_N
    if (g.kind == GroupKind::Sp) return (N - 1) * (N - 1) / 4;  // SO_N, N odd
    return N * (N - 2) / 4;                                 // SO_N, N even
}

int fl_defect(int f, const GroupDescriptor& g) {
    require(f >= 1, "f: must be at least 1");
    return f * dual_positive_roots(g);
}

int h0_infinity(const GroupDescriptor& g) {
    int N = g.N;
    return g.kind == GroupKind::SOodd ? N * (N + 1) / 2 : N * (N - 1) / 2;
}

LedgerReport ledger_report(const LedgerInput& in) {
    in.validate();
    LedgerReport r;
    r.dim_g = dual_lie_dim(in.group);
    int fsum = 0;
    for (const auto& v : in.places) {
        if (v.kind == PlaceKind::Infinite) {
            r.sum_h0_infinite += v.h0;
            continue;
        }
        r.sum_defects += v.l - v.h0;
        if (v.kind == PlaceKind::AboveP) {
            r.sum_local_chi -= v.f * r.dim_g;
            fsum += v.f;
            r.fl_total += fl_defect(v.f, in.group);
        }
    }
    r.covers_p = fsum == in.degree;
    r.chi_global = r.sum_h0_infinite - in.degree * r.dim_g;
    r.euler_chi_S = r.chi_global - r.sum_local_chi - r.sum_defects;
    r.chi_S_closed = r.sum_h0_infinite - r.sum_defects;
    r.h0_S = in.h0_global;
    r.h1_S = in.h1_Sperp_twist - in.h0_twist - r.sum_h0_infinite + r.sum_defects + in.h0_global;
    r.h2_S = in.h1_Sperp_twist;
    r.h3_S = in.h0_twist;
    r.alternating_sum = r.h0_S - r.h1_S + r.h2_S - r.h3_S;
    r.consistent = r.alternating_sum == r.euler_chi_S;
    r.coincidence_lhs = in.degree * dual_positive_roots(in.group);
    r.coincidence_rhs = r.sum_h0_infinite;
    return r;
}

int euler_chi_S(const LedgerInput& in) { return ledger_report(in).euler_chi_S; }
int h1_S(const LedgerInput& in) { return ledger_report(in).h1_S; }

TwBudget tw_budget(int q0, int h1_Sperp_twist, const std::vector<int>& a_values, const std::vector<int>& infinite_h0s) {
    require(q0 >= 1, "q0: must be at least 1");
    require(h1_Sperp_twist >= 0, "h1_Sperp_twist: must be nonnegative");
    TwBudget b;
    b.q = std::max(q0, h1_Sperp_twist);
    b.bound = b.q;
    for (int a : a_values) b.bound += a;
    for (int h : infinite_h0s) b.bound -= h;
    return b;
}

}  // namespace hf
