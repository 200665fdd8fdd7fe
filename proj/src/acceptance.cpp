// SPDX-License-Identifier: Apache-2.0
#include "heckeforge/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include "heckeforge/adequacy.hpp"
#include "heckeforge/congruence.hpp"
#include "heckeforge/defledger.hpp"
#include "heckeforge/galsplit.hpp"
#include "heckeforge/oracle.hpp"
#include "heckeforge/parahoric.hpp"
#include "heckeforge/satake.hpp"
#include "heckeforge/weyl.hpp"

namespace hf {

namespace {

using Rng = std::mt19937_64;

std::vector<GroupDescriptor> groups_up_to(int nmax) {
    std::vector<GroupDescriptor> out;
    for (GroupKind k : {GroupKind::SOodd, GroupKind::SOevenSplit, GroupKind::SOevenQuasi, GroupKind::Sp})
        for (int n = 2; n <= nmax; ++n) {
            try {
                out.push_back(make_group(k, n));
            } catch (const ValidationError&) {
            }
        }
    return out;
}

std::string label(const GroupDescriptor& d) { return kind_name(d.kind) + " n=" + std::to_string(d.n); }

Rational random_rational(Rng& rng) {
    long num = 1 + static_cast<long>(rng() % 19);
    long den = 1 + static_cast<long>(rng() % 7);
    if (rng() % 2) num = -num;
    return frac(num, den);
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// ---- 1 -------------------------------------------------------------------
CriterionResult weyl_orders(const AcceptanceOptions&) {
    CriterionResult r{1, "weyl-orders", true, 0, 5, ""};
    int checked = 0;
    for (int ns = 1; ns <= 6; ++ns)
        for (Flavor f : {Flavor::B, Flavor::D}) {
            std::uint64_t count = 0;
            for_each_signed(ns, f, [&](const SignedPermutation&) { ++count; });
            std::uint64_t expect = (std::uint64_t{1} << (f == Flavor::B ? ns : ns - 1)) * factorial(ns);
            ++checked;
            if (count != expect) {
                r.ok = false;
                r.detail += flavor_name(f) + std::to_string(ns) + ": " + std::to_string(count) + " != " + std::to_string(expect) + "; ";
            }
        }
    if (r.ok) r.detail = std::to_string(checked) + " (n_s, flavor) pairs exact";
    return r;
}

// ---- 2 -------------------------------------------------------------------
CriterionResult coset_bijection(const AcceptanceOptions&) {
    CriterionResult r{2, "coset-matrix-bijection", true, 0, 60, ""};
    std::size_t pairs = 0, elements = 0, bad = 0;
    for (int ns = 1; ns <= 5; ++ns)
        for (Flavor f : {Flavor::B, Flavor::D}) {
            GroupDescriptor d = f == Flavor::B ? make_group(GroupKind::SOodd, 2 * ns + 1) : make_group(GroupKind::SOevenSplit, 2 * ns);
            auto parts = IntervalPartition::all(ns);
            for (const auto& om : parts)
                for (const auto& th : parts) {
                    ++pairs;
                    auto dom = matrix_domain(d, om, th);
                    std::vector<CosetMatrix> img;
                    bool ok = true;
                    for (const auto& w : dom) {
                        auto m = coset_matrix(d, w, om, th);
                        if (!(matrix_to_rep(d, m, om, th) == w)) ok = false;
                        img.push_back(m);
                    }
                    elements += dom.size();
                    std::sort(img.begin(), img.end());
                    if (std::adjacent_find(img.begin(), img.end()) != img.end()) ok = false;
                    auto adm = admissible_matrices(d, om, th);
                    std::sort(adm.begin(), adm.end());
                    if (img != adm) ok = false;
                    if (!ok) ++bad;
                }
        }
    r.ok = bad == 0;
    r.detail = std::to_string(pairs) + " (Omega, Theta) pairs, " + std::to_string(elements) + " representatives, " +
               std::to_string(bad) + " failures";
    return r;
}

// ---- 3 -------------------------------------------------------------------
CriterionResult satake_coherence(const AcceptanceOptions& opt) {
    CriterionResult r{3, "satake-coherence", true, 0, 60, ""};
    Rng rng(opt.seed + 3);
    int cases = 0, failed = 0;
    std::string where;
    for (const auto& d : groups_up_to(8))
        for (int j = 1; j <= d.n_s; ++j) {
            auto image = satake_at_chi(d, j);
            bool ok = true;
            for (int t = 0; t < 50; ++t) {
                std::vector<Rational> chi;
                for (int i = 0; i < d.n_s; ++i) chi.push_back(random_rational(rng));
                Rational q = std::vector<int>{3, 5, 7, 9}[rng() % 4];
                Rational lhs = image.eval(chi, q);
                if (opt.mutate_satake) lhs *= q;
                if (lhs != unramified_eigenvalue(HeckeEvalInput{d, q, chi}, j)) ok = false;
            }
            ++cases;
            if (!ok) {
                ++failed;
                where += label(d) + " j=" + std::to_string(j) + "; ";
            }
        }
    r.ok = failed == 0;
    r.detail = std::to_string(cases - failed) + "/" + std::to_string(cases) + " (group, j) cases coherent";
    if (failed) r.detail += "; incoherent: " + where;
    return r;
}

// ---- 4 -------------------------------------------------------------------
CriterionResult oracle_formula(const AcceptanceOptions&) {
    CriterionResult r{4, "oracle-formula-agreement", true, 0, 120, ""};
    int cases = 0, failed = 0;
    std::string where;
    for (const auto& d : groups_up_to(8)) {
        if (d.n_s > 3) continue;
        for (int j = 1; j <= d.n_s; ++j) {
            ++cases;
            if (spherical_coset_sum(d, j) != unramified_eigenvalue_symbolic(d, j)) {
                ++failed;
                where += label(d) + " j=" + std::to_string(j) + "; ";
            }
        }
    }
    r.ok = failed == 0;
    r.detail = std::to_string(cases - failed) + "/" + std::to_string(cases) + " symbolic identities";
    if (failed) r.detail += "; mismatches: " + where;
    return r;
}

// ---- 5 -------------------------------------------------------------------
CriterionResult finite_groups(const AcceptanceOptions& opt) {
    CriterionResult r{5, "finite-group-cross-checks", true, 0, 900, ""};
    std::ostringstream os;
    auto sp2 = make_group(GroupKind::Sp, 2);
    auto so3 = make_group(GroupKind::SOodd, 3);
    auto Gsp = enumerate_points(sp2, 3);
    auto Gso = enumerate_points(so3, 3);
    os << "|Sp_2(F_3)|=" << Gsp.size() << " |SO_3(F_3)|=" << Gso.size();
    if (Gsp.size() != 24 || Gso.size() != 24) r.ok = false;
    for (const auto& [d, G] : {std::pair{sp2, &Gsp}, std::pair{so3, &Gso}}) {
        auto fc = flag_count(d, *G, IntervalPartition::singletons(1));
        if (!(fc.agree() && fc.index == 4)) r.ok = false;
        os << " Borel(" << kind_name(d.kind) << ")=" << fc.orbit_count;
    }
    if (opt.full) {
        auto sp4 = make_group(GroupKind::Sp, 4);
        auto G = enumerate_points(sp4, 3);
        os << " |Sp_4(F_3)|=" << G.size();
        int agree = 0, total = 0;
        for (const auto& th : IntervalPartition::all(2)) {
            ++total;
            auto fc = flag_count(sp4, G, th);
            if (fc.agree()) ++agree;
        }
        if (G.size() != 51840 || agree != total) r.ok = false;
        os << " flags " << agree << "/" << total << " Theta agree";
    } else {
        os << " (Sp_4 enumeration skipped in fast mode)";
    }
    r.detail = os.str();
    return r;
}

// ---- 6 -------------------------------------------------------------------
CriterionResult charpoly_division(const AcceptanceOptions& opt) {
    CriterionResult r{6, "charpoly-divisibility", true, 0, 30, ""};
    Rng rng(opt.seed + 6);
    int cases = 0, failed = 0;
    std::set<std::string> where;
    for (const auto& d : groups_up_to(10)) {
        if (d.n_s > 4) continue;
        for (int n0 = 1; n0 <= d.n_s; ++n0)
            for (int t = 0; t < 3; ++t) {
                std::vector<Rational> chi;
                for (int i = 0; i < d.n_s; ++i) chi.push_back(random_rational(rng));
                ++cases;
                bool ok = false;
                try {
                    ok = charpoly_divisibility(d, n0, chi, 5).divides;
                } catch (const ValidationError&) {
                }
                if (!ok) {
                    ++failed;
                    where.insert(label(d) + " n0=" + std::to_string(n0));
                }
            }
    }
    r.ok = failed == 0;
    r.detail = std::to_string(cases - failed) + "/" + std::to_string(cases) + " exact divisions";
    if (failed) {
        r.detail += "; fails at:";
        for (const auto& w : where) r.detail += " [" + w + "]";
    }
    return r;
}

// ---- 7 -------------------------------------------------------------------
CriterionResult projector(const AcceptanceOptions& opt) {
    CriterionResult r{7, "projector-theorem", true, 0, 60, ""};
    Rng rng(opt.seed + 7);
    int data = 0, dim_bad = 0, st_total = 0, st_bad = 0, wp_bad = 0, zero_bad = 0, no_mixed = 0;
    std::string first_dim, first_wp;
    const std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> fields{
        {3, {4, 7, 13, 16, 19, 25, 31}}, {5, {11, 16, 31}}};
    for (const auto& [p, qs] : fields) {
        ResidueRing R(p, 3);
        std::int64_t abar = 2;
        auto lift = [&](std::int64_t res) { return R(res + static_cast<std::int64_t>(p * (rng() % (p * p)))); };
        for (auto kind : {GroupKind::SOodd, GroupKind::Sp}) {
            for (int ns = 1; ns <= 3; ++ns) {
                auto d = make_group(kind, kind == GroupKind::Sp ? 2 * ns : 2 * ns + 1);
                for (const auto& om : IntervalPartition::all(ns))
                    for (int j0 = 1; j0 <= om.count(); ++j0)
                        for (int j1 = 1; j1 <= om.count(); ++j1) {
                            int i0 = block_rank(om, j0);
                            if (j0 == j1 || i0 < 1) continue;
                            for (auto q : qs) {
                                ParahoricDatum datum{d, om, j0, j1, q, p};
                                // Residues: ᾱ on i0 coordinates, 1 elsewhere, ordered so the last two agree when possible.
                                std::vector<std::int64_t> res;
                                if (i0 >= 2 || ns - i0 < 2) {
                                    for (int i = 0; i < ns - i0; ++i) res.push_back(1);
                                    for (int i = 0; i < i0; ++i) res.push_back(abar);
                                } else {
                                    for (int i = 0; i < i0; ++i) res.push_back(abar);
                                    for (int i = 0; i < ns - i0; ++i) res.push_back(1);
                                }
                                std::vector<Zmod> psi;
                                for (auto x : res) psi.push_back(lift(x));
                                std::vector<ProjectorComponent> comps{{ProjectorComponent::Type::Unramified, psi}};
                                bool mixed = ns >= 2 && res[static_cast<std::size_t>(ns - 1)] == res[static_cast<std::size_t>(ns - 2)];
                                if (mixed) {
                                    std::vector<Zmod> chi;
                                    for (int i = 0; i < ns - 1; ++i) chi.push_back(lift(res[static_cast<std::size_t>(i)]));
                                    comps.push_back({ProjectorComponent::Type::Steinberg, chi});
                                } else {
                                    ++no_mixed;
                                }
                                ProjectorReport rep;
                                try {
                                    rep = apply_projector(datum, comps, R);
                                } catch (const ValidationError& e) {
                                    ++dim_bad;
                                    if (first_dim.empty()) first_dim = std::string("error: ") + e.what();
                                    continue;
                                }
                                ++data;
                                if (!rep.dimension_matches()) {
                                    ++dim_bad;
                                    if (first_dim.empty())
                                        first_dim = label(d) + " Omega=" + om.to_string() + " j0=" + std::to_string(j0) +
                                                    " j1=" + std::to_string(j1) + " q=" + std::to_string(q) + ": image " +
                                                    std::to_string(rep.image_dim) + " vs " + std::to_string(rep.unramified_dim);
                                }
                                for (const auto& c : rep.components)
                                    if (c.type == ProjectorComponent::Type::Steinberg) {
                                        ++st_total;
                                        if (!c.annihilated) ++st_bad;
                                    }
                                auto a = rep.w_prime, b = rep.w_prime_literal;
                                std::sort(a.begin(), a.end());
                                std::sort(b.begin(), b.end());
                                if (a.empty()) ++zero_bad;
                                if (a != b) {
                                    ++wp_bad;
                                    if (first_wp.empty())
                                        first_wp = label(d) + " Omega=" + om.to_string() + " j0=" + std::to_string(j0) +
                                                   " j1=" + std::to_string(j1) + ": support " + std::to_string(a.size()) +
                                                   " vs W' " + std::to_string(b.size());
                                }
                            }
                        }
            }
        }
    }
    r.ok = dim_bad == 0 && st_bad == 0 && wp_bad == 0 && zero_bad == 0;
    std::ostringstream os;
    os << data << " data (" << no_mixed << " without a Steinberg summand of matching residue); dimension mismatches "
       << dim_bad << "; Steinberg not annihilated " << st_bad << "/" << st_total << "; pr(phi) = 0 in " << zero_bad
       << "; support != W' in " << wp_bad;
    if (!first_dim.empty()) os << "; first dimension mismatch: " << first_dim;
    if (!first_wp.empty()) os << "; first W' mismatch: " << first_wp;
    r.detail = os.str();
    return r;
}

// ---- 8 -------------------------------------------------------------------
ZMatrix diag_matrix(const std::vector<Zmod>& d, const ResidueRing& R) {
    int n = static_cast<int>(d.size());
    ZMatrix m(n, n, R(0));
    for (int i = 0; i < n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

ZPoly poly_from_roots(const std::vector<Zmod>& roots, const ResidueRing& R) {
    ZPoly f = ZPoly::constant(R(1));
    for (const auto& x : roots) f = f * ZPoly::linear(x, R(1));
    return f;
}

CriterionResult frobenius_split(const AcceptanceOptions& opt) {
    CriterionResult r{8, "frobenius-splitting", true, 0, 60, ""};
    Rng rng(opt.seed + 8);
    int trials = 0, bad = 0;
    for (int t = 0; t < 200; ++t) {
        std::uint64_t p = std::vector<std::uint64_t>{11, 13, 17}[t % 3];
        ResidueRing R(p, t % 2 ? 3 : 1);
        bool symp = t % 4 < 2;
        int N = symp ? 2 * (2 + static_cast<int>(rng() % 3)) : 3 + static_cast<int>(rng() % 6);
        if (N < 4 && !symp) N = 4;
        auto form = standard_form(symp ? FormKind::Symplectic : FormKind::Orthogonal, symp ? N / 2 : N, 0, R);
        int pairs = N / 2;
        // Residues: distinct, not ±1, no two mutually inverse.
        std::vector<std::int64_t> pool;
        for (std::int64_t x = 2; x < static_cast<std::int64_t>(p) - 1; ++x)
            if (x < Zmod(x, p).inv().value()) pool.push_back(x);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<Zmod> top;
        for (int i = 0; i < pairs; ++i)
            top.push_back(R(pool[static_cast<std::size_t>(i)] + static_cast<std::int64_t>(p * (rng() % (R.modulus / p)))));
        std::vector<Zmod> d(static_cast<std::size_t>(N), R(1));
        for (int i = 0; i < pairs; ++i) {
            d[static_cast<std::size_t>(i)] = top[static_cast<std::size_t>(i)];
            d[static_cast<std::size_t>(N - 1 - i)] = inv(top[static_cast<std::size_t>(i)]);
        }
        ZMatrix g = random_isometry(form, R, rng);
        ZMatrix M = g * diag_matrix(d, R) * *LocalLinalg{R}.inverse(g);
        int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(pairs));
        if (k == pairs && N % 2 == 0) k = pairs - 1;
        if (k < 1) continue;
        std::vector<Zmod> ra, rb;
        for (int i = 0; i < N; ++i) {
            int pi = std::min(i, N - 1 - i);
            bool middle = N % 2 == 1 && i == N / 2;
            (!middle && pi < k ? ra : rb).push_back(d[static_cast<std::size_t>(i)]);
        }
        ++trials;
        auto s = split_by_factor(M, form, poly_from_roots(ra, R), poly_from_roots(rb, R), R);
        if (!s.ok() || s.basis_s.cols() != static_cast<int>(ra.size()) || s.basis_psi.cols() != static_cast<int>(rb.size()))
            ++bad;
    }
    r.ok = bad == 0 && trials == 200;
    r.detail = std::to_string(trials - bad) + "/" + std::to_string(trials) + " splittings stable, orthogonal, nondegenerate";
    return r;
}

// ---- 9 -------------------------------------------------------------------
CriterionResult descent(const AcceptanceOptions& opt) {
    CriterionResult r{9, "dual-number-descent", true, 0, 30, ""};
    Rng rng(opt.seed + 9);
    int done = 0, bad = 0, reducible = 0;
    for (int t = 0; done < 100 && t < 400; ++t) {
        std::uint64_t p = std::vector<std::uint64_t>{7, 11, 13}[t % 3];
        ResidueRing R(p, 1);
        int which = t % 3;
        BilinearForm f = which == 0 ? standard_form(FormKind::Orthogonal, 3 + static_cast<int>(rng() % 4), 0, R)
                         : which == 1 ? standard_form(FormKind::Symplectic, 1 + static_cast<int>(rng() % 3), 0, R)
                                      : standard_form(FormKind::QuasiSplit, rng() % 2 ? 4 : 6, 2, R);
        std::vector<ZMatrix> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_isometry(f, R, rng));
        ZMatrix B = random_lie_element(f, R, rng);
        std::vector<DualMatrix> rho;
        for (const auto& g : gens) rho.push_back({g, B * g - g * B});
        try {
            auto res = descend_dual_numbers(rho, f, R);
            ++done;
            if (!(res.isometry && res.residual_equal && res.descended == gens)) ++bad;
        } catch (const ValidationError&) {
            ++reducible;
        }
    }
    r.ok = bad == 0 && done == 100;
    r.detail = std::to_string(done - bad) + "/" + std::to_string(done) + " descents verified (" + std::to_string(reducible) +
               " draws rejected as not absolutely irreducible)";
    return r;
}

// ---- 10 ------------------------------------------------------------------
CriterionResult ledger(const AcceptanceOptions& opt) {
    CriterionResult r{10, "ledger-identities", true, 0, 5, ""};
    Rng rng(opt.seed + 10);
    auto U = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    auto groups = groups_up_to(10);
    int bad = 0;
    for (int t = 0; t < 1000; ++t) {
        LedgerInput in;
        in.group = groups[static_cast<std::size_t>(t) % groups.size()];
        in.degree = U(1, 4);
        for (int left = in.degree; left > 0;) {
            int f = U(1, left);
            in.places.push_back({"p", PlaceKind::AboveP, U(0, 5), U(0, 8), f});
            left -= f;
        }
        for (int i = 0; i < in.degree; ++i) in.places.push_back({"inf", PlaceKind::Infinite, U(0, 10), 0, 0});
        for (int i = U(0, 3); i > 0; --i) {
            int h = U(0, 4);
            in.places.push_back({"v", PlaceKind::OtherFinite, h, h, 0});
        }
        in.h0_global = U(0, 3);
        in.h0_twist = U(0, 3);
        in.h1_Sperp_twist = U(0, 6);
        auto a = ledger_report(in);
        int h = U(0, 4);
        in.places.push_back({"tw", PlaceKind::TaylorWiles, h, h + 1, 0});
        auto b = ledger_report(in);
        h = U(0, 4);
        in.places.push_back({"min", PlaceKind::OtherFinite, h, h, 0});
        auto c = ledger_report(in);
        bool ok = a.consistent && b.consistent && c.consistent && a.euler_chi_S == a.chi_S_closed &&
                  b.euler_chi_S == a.euler_chi_S - 1 && b.h1_S == a.h1_S + 1 && c.euler_chi_S == b.euler_chi_S &&
                  c.h1_S == b.h1_S;
        if (!ok) ++bad;
    }
    bool constants = fl_defect(1, make_group(GroupKind::SOodd, 3)) == 1 && h0_infinity(make_group(GroupKind::SOodd, 3)) == 3 &&
                     h0_infinity(make_group(GroupKind::Sp, 2)) == 3 && h0_infinity(make_group(GroupKind::SOevenSplit, 4)) == 6;
    for (const auto& g : groups) {
        int N = g.N;
        int expect = g.kind == GroupKind::SOodd ? N * (N + 1) / 2 : N * (N - 1) / 2;
        if (h0_infinity(g) != expect) constants = false;
    }
    r.ok = bad == 0 && constants;
    r.detail = std::to_string(1000 - bad) + "/1000 fuzzed inputs consistent; constants " + (constants ? "match" : "differ");
    return r;
}

// ---- 11 ------------------------------------------------------------------
CriterionResult tate(const AcceptanceOptions& opt) {
    CriterionResult r{11, "tate-identity", true, 0, 5, ""};
    Rng rng(opt.seed + 11);
    int done = 0, bad = 0;
    while (done < 500) {
        std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7}[rng() % 4];
        ResidueRing R(p, 8);
        int deg = 1 + static_cast<int>(rng() % 6);
        std::vector<Zmod> roots;
        for (int i = 0; i < deg; ++i) roots.push_back(R(static_cast<std::int64_t>(rng() % R.modulus)));
        MonogenicAlgebra T{R, poly_from_roots(roots, R)};
        Augmentation th{roots[0]};
        Zmod h = cofactor(T, th)(th.a);
        if (h.is_zero()) continue;
        ++done;
        auto rep = tate_check(T, th);
        if (!rep.equal || !rep.c0.certified()) ++bad;
    }
    bool fixed = true;
    for (std::int64_t p : {3, 5}) {
        ResidueRing R(static_cast<std::uint64_t>(p), 8);
        std::int64_t p2 = p * p, p3 = p2 * p;
        auto v0 = tate_check({R, ZPoly(std::vector<Zmod>{R(0), R(1)})}, {R(0)});
        auto v2 = tate_check({R, ZPoly(std::vector<Zmod>{R(1 + p2), R(-(2 + p2)), R(1)})}, {R(1)});
        auto v3 = tate_check({R, ZPoly(std::vector<Zmod>{R(0), R(-p3), R(1)})}, {R(0)});
        fixed = fixed && v0.equal && v0.c0.value == 0 && v2.equal && v2.c0.value == 2 && v3.equal && v3.c0.value == 3;
    }
    r.ok = bad == 0 && fixed;
    r.detail = std::to_string(done - bad) + "/" + std::to_string(done) + " random algebras satisfy c0 = c1; fixed examples " +
               (fixed ? "0, 2, 3 reproduced" : "differ");
    return r;
}

// ---- 12 ------------------------------------------------------------------
CriterionResult adequacy(const AcceptanceOptions& opt) {
    CriterionResult r{12, "adequacy-sanity", true, 0, 30, ""};
    Rng rng(opt.seed + 12);
    int groups = 0, bad = 0;
    for (int t = 0; groups < 50 && t < 2000; ++t) {
        std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7}[t % 3];
        int N = 2 + static_cast<int>(rng() % 2);
        LocalLinalg la{ResidueRing(p, 1)};
        auto rand_inv = [&]() {
            for (;;) {
                ZMatrix m(N, N, Zmod(0, p));
                for (int i = 0; i < N; ++i)
                    for (int j = 0; j < N; ++j) m(i, j) = Zmod(static_cast<std::int64_t>(rng() % p), p);
                if (la.is_invertible(m)) return m;
            }
        };
        std::vector<ZMatrix> gens;
        if (t % 2 == 0) {
            gens.push_back(rand_inv());
        } else {
            ZMatrix P = rand_inv(), Pi = *la.inverse(P);
            for (int g = 0; g < 2; ++g) {
                std::vector<int> perm(static_cast<std::size_t>(N));
                for (int i = 0; i < N; ++i) perm[static_cast<std::size_t>(i)] = i;
                std::shuffle(perm.begin(), perm.end(), rng);
                ZMatrix m(N, N, Zmod(0, p));
                for (int i = 0; i < N; ++i) m(i, perm[static_cast<std::size_t>(i)]) = Zmod(rng() % 2 ? 1 : -1, p);
                gens.push_back(P * m * Pi);
            }
        }
        auto H = close_group(gens, p);
        if (H.size() % p == 0) continue;
        ++groups;
        if (h1_finite(H, gl_conjugation_module(H)) != 0 || h1_finite(H, trivial_module(H, 1)) != 0) ++bad;
    }
    bool boundary = true;
    for (int N = 1; N <= 12; ++N) {
        std::uint64_t b = 2 * static_cast<std::uint64_t>(N + 1);
        boundary = boundary && sufficient_conditions(b, N, true, true) == SufficientVerdict::AdequateByLemma &&
                   sufficient_conditions(b - 1, N, true, true) == SufficientVerdict::Inconclusive &&
                   sufficient_conditions(b, N, false, true) == SufficientVerdict::Inconclusive &&
                   sufficient_conditions(b, N, true, false) == SufficientVerdict::Inconclusive;
    }
    boundary = boundary && sufficient_conditions(11, 4, true, true) == SufficientVerdict::AdequateByLemma &&
               sufficient_conditions(7, 4, true, true) == SufficientVerdict::Inconclusive;
    r.ok = bad == 0 && groups == 50 && boundary;
    r.detail = std::to_string(groups - bad) + "/" + std::to_string(groups) + " coprime-order groups with H^1 = 0; thresholds " +
               (boundary ? "match at p = 2(N+1)" : "differ");
    return r;
}

}  // namespace

std::string format_result(const CriterionResult& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s / %.0f s", r.seconds, r.budget);
    std::string head = r.pass() ? "PASS" : "FAIL";
    std::string why;
    if (!r.ok) why = " property failed;";
    else if (r.seconds >= r.budget) why = " over time budget;";
    return head + " [" + std::to_string(r.id) + "] " + r.name + " (" + buf + "):" + why + " " + r.detail;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_result) {
    using Fn = CriterionResult (*)(const AcceptanceOptions&);
    const Fn all[] = {weyl_orders, coset_bijection, satake_coherence, oracle_formula, finite_groups, charpoly_division,
                      projector,   frobenius_split, descent,          ledger,         tate,          adequacy};
    std::vector<CriterionResult> out;
    for (int i = 0; i < 12; ++i) {
        if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), i + 1) == opt.only.end()) continue;
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = all[i](opt);
        } catch (const std::exception& e) {
            r.id = i + 1;
            r.name = "criterion-" + std::to_string(i + 1);
            r.ok = false;
            r.budget = 1;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (on_result) on_result(r);
        out.push_back(r);
    }
    return out;
}

}  // namespace hf
