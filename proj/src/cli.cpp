// SPDX-License-Identifier: Apache-2.0
#include "heckeforge/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "heckeforge/acceptance.hpp"
#include "heckeforge/adequacy.hpp"
#include "heckeforge/congruence.hpp"
#include "heckeforge/defledger.hpp"
#include "heckeforge/errors.hpp"
#include "heckeforge/galsplit.hpp"
#include "heckeforge/guards.hpp"
#include "heckeforge/oracle.hpp"
#include "heckeforge/parahoric.hpp"
#include "heckeforge/satake.hpp"
#include "heckeforge/weyl.hpp"

namespace hf {

namespace {

using json = nlohmann::json;

constexpr const char* kVersion = "1";

// A JSON value together with its location, so errors can name the field.
struct Node {
    const json* j;
    std::string path;

    [[noreturn]] void fail(const std::string& msg) const { throw ValidationError(path + ": " + msg); }

    bool has(const std::string& k) const { return j->is_object() && j->contains(k); }
    Node at(const std::string& k) const {
        if (!j->is_object()) fail("expected an object");
        if (!j->contains(k)) throw ValidationError(path + "." + k + ": missing field");
        return {&j->at(k), path + "." + k};
    }
    void allow(std::initializer_list<const char*> keys) const {
        if (!j->is_object()) fail("expected an object");
        std::set<std::string> ok(keys.begin(), keys.end());
        ok.insert("version");
        ok.insert("seed");
        for (auto it = j->begin(); it != j->end(); ++it)
            if (!ok.count(it.key())) throw ValidationError(path + "." + it.key() + ": unknown field");
        if (j->contains("version") && !(j->at("version").is_string() && j->at("version") == kVersion))
            throw ValidationError(path + ".version: unsupported version tag (expected \"" + std::string(kVersion) + "\")");
    }
    std::vector<Node> items() const {
        if (!j->is_array()) fail("expected an array");
        std::vector<Node> out;
        for (std::size_t i = 0; i < j->size(); ++i) out.push_back({&(*j)[i], path + "[" + std::to_string(i) + "]"});
        return out;
    }
    std::int64_t integer() const {
        if (j->is_number_integer()) return j->get<std::int64_t>();
        if (j->is_string()) {
            const auto& s = j->get_ref<const std::string&>();
            try {
                std::size_t used = 0;
                auto v = std::stoll(s, &used);
                if (used == s.size()) return v;
            } catch (const std::exception&) {
            }
        }
        fail("expected an integer");
    }
    int small_int() const {
        auto v = integer();
        if (v < -1000000 || v > 1000000) fail("integer out of range");
        return static_cast<int>(v);
    }
    bool boolean() const {
        if (!j->is_boolean()) fail("expected true or false");
        return j->get<bool>();
    }
    std::string str() const {
        if (!j->is_string()) fail("expected a string");
        return j->get<std::string>();
    }
    Rational rational() const {
        if (j->is_number_integer()) return Rational(static_cast<long>(j->get<std::int64_t>()));
        if (!j->is_string()) fail("expected a rational as an integer or \"num/den\" string");
        try {
            return parse_rational(j->get<std::string>());
        } catch (const ValidationError& e) {
            fail(e.what());
        }
    }
    template <class F>
    auto wrap(F&& f) const -> decltype(f()) {
        try {
            return f();
        } catch (const ValidationError& e) {
            fail(e.what());
        }
    }
};

// ---- decoding ----------------------------------------------------------------

GroupDescriptor read_group(const Node& kind, const Node& n) {
    GroupKind k = kind.wrap([&] { return parse_kind(kind.str()); });
    int nn = n.small_int();
    return n.wrap([&] { return make_group(k, nn); });
}

GroupDescriptor read_group(const Node& obj) {
    obj.allow({"kind", "n"});
    return read_group(obj.at("kind"), obj.at("n"));
}

IntervalPartition read_partition(const Node& node, int n_s) {
    std::vector<std::pair<int, int>> blocks;
    for (const auto& b : node.items()) {
        auto lh = b.items();
        if (lh.size() != 2) b.fail("expected a [lo, hi] pair");
        blocks.emplace_back(lh[0].small_int(), lh[1].small_int());
    }
    return node.wrap([&] { return IntervalPartition(n_s, blocks); });
}

std::vector<Rational> read_rationals(const Node& node) {
    std::vector<Rational> out;
    for (const auto& x : node.items()) out.push_back(x.rational());
    return out;
}

std::vector<Zmod> read_residues(const Node& node, const ResidueRing& R) {
    std::vector<Zmod> out;
    for (const auto& x : node.items()) out.push_back(R(x.integer()));
    return out;
}

ZMatrix read_matrix(const Node& node, const ResidueRing& R) {
    auto rows = node.items();
    if (rows.empty()) node.fail("empty matrix");
    int n = static_cast<int>(rows.size());
    check_guard(n <= guards().max_matrix_dim, "matrix dimension " + std::to_string(n) + " exceeds max_matrix_dim");
    ZMatrix m(n, n, R(0));
    for (int i = 0; i < n; ++i) {
        auto row = rows[static_cast<std::size_t>(i)].items();
        if (static_cast<int>(row.size()) != n) rows[static_cast<std::size_t>(i)].fail("matrix must be square");
        for (int k = 0; k < n; ++k) m(i, k) = R(row[static_cast<std::size_t>(k)].integer());
    }
    return m;
}

ZPoly read_poly(const Node& node, const ResidueRing& R) { return ZPoly(read_residues(node, R)); }

ResidueRing read_ring(const Node& payload, int default_e) {
    auto p = payload.at("p").integer();
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) payload.at("p").fail("must be a prime");
    int e = payload.has("e") ? payload.at("e").small_int() : default_e;
    if (e < 1) payload.at("e").fail("must be positive");
    return ResidueRing(static_cast<std::uint64_t>(p), e);
}

BilinearForm read_form(const Node& node, const ResidueRing& R) {
    node.allow({"kind", "m", "u"});
    std::string k = node.at("kind").str();
    FormKind kind = k == "orthogonal" ? FormKind::Orthogonal
                    : k == "symplectic" ? FormKind::Symplectic
                    : k == "quasi-split" ? FormKind::QuasiSplit
                                         : (node.at("kind").fail("expected orthogonal, symplectic or quasi-split"), FormKind::Orthogonal);
    int m = node.at("m").small_int();
    std::int64_t u = node.has("u") ? node.at("u").integer() : 0;
    return node.wrap([&] { return standard_form(kind, m, u, R); });
}

// ---- encoding ----------------------------------------------------------------

json rat(const Rational& r) { return to_string(r); }

json residue(const Zmod& z) { return std::to_string(z.value()); }

json residues(const std::vector<Zmod>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(residue(x));
    return a;
}

json matrix_json(const ZMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(residue(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

json laurent_json(const LaurentPoly& f) {
    json terms = json::array();
    for (const auto& [mono, c] : f.terms()) terms.push_back({{"exponents", mono.z}, {"q2", mono.q2}, {"coeff", rat(c)}});
    return {{"nvars", f.nvars()}, {"terms", terms}};
}

json qpoly_json(const QPoly& f) {
    json c = json::array();
    for (const auto& x : f.coeffs()) c.push_back(rat(x));
    return c;
}

json window_json(const SignedPermutation& w) { return w.window(); }

json windows_json(const std::vector<SignedPermutation>& ws) {
    json a = json::array();
    for (const auto& w : ws) a.push_back(window_json(w));
    return a;
}

json partition_json(const IntervalPartition& p) {
    json a = json::array();
    for (auto [lo, hi] : p.blocks()) a.push_back({lo, hi});
    return a;
}

json coset_matrix_json(const CosetMatrix& m) { return {{"b", m.b}, {"a", m.a}, {"neg", m.neg}}; }

std::string component_type(ProjectorComponent::Type t) {
    return t == ProjectorComponent::Type::Unramified ? "unramified" : "steinberg";
}

json projector_json(const ProjectorReport& rep) {
    json comps = json::array();
    for (const auto& c : rep.components) {
        json factors = json::array();
        for (const auto& [key, f] : c.factors)
            factors.push_back({{"block", key.first},
                               {"k", key.second},
                               {"r", f.r},
                               {"balanced", f.balanced},
                               {"degenerate", f.degenerate},
                               {"coprime", f.coprime},
                               {"r_roots", residues(f.r_roots)},
                               {"q_roots", residues(f.q_roots)}});
        comps.push_back({{"type", component_type(c.type)},
                         {"basis", windows_json(c.basis)},
                         {"diagonal", residues(c.diagonal)},
                         {"image_dim", c.image_dim},
                         {"annihilated", c.annihilated},
                         {"factors", factors}});
    }
    return {{"profile", {{"type", profile_name(rep.profile.type)}, {"alpha_bar", rep.profile.alpha_bar}}},
            {"components", comps},
            {"image_dim", rep.image_dim},
            {"unramified_dim", rep.unramified_dim},
            {"dimension_matches", rep.dimension_matches()},
            {"distinguished", rep.distinguished},
            {"w_prime", windows_json(rep.w_prime)},
            {"w_prime_literal", windows_json(rep.w_prime_literal)}};
}

json valuation_json(const Valuation& v) {
    return {{"value", v.value}, {"precision", v.precision}, {"certified", v.certified()}};
}

json tate_json(const TateReport& t) {
    return {{"c0", valuation_json(t.c0)}, {"c1", valuation_json(t.c1)}, {"equal", t.equal}, {"assumption", t.assumption}};
}

// ---- verbs -------------------------------------------------------------------

struct Ctx {
    std::string action;
    Node payload;
    std::uint64_t seed;
};

[[noreturn]] void bad_action(const std::string& verb, const std::string& action, const std::string& choices) {
    throw ValidationError("action: '" + action + "' is not a " + verb + " action (expected one of " + choices + ")");
}

json verb_weyl(const Ctx& c) {
    const Node& P = c.payload;
    if (c.action == "order") {
        P.allow({"kind", "n"});
        auto d = read_group(P.at("kind"), P.at("n"));
        return {{"order", weyl_order(d.n_s, d.flavor)}};
    }
    if (c.action == "cosets" || c.action == "double-cosets" || c.action == "matrices" || c.action == "poincare") {
        P.allow({"kind", "n", "omega", "theta"});
        auto d = read_group(P.at("kind"), P.at("n"));
        check_guard(d.n_s <= guards().max_enum_rank, "n_s exceeds max_enum_rank");
        auto theta = P.has("theta") ? read_partition(P.at("theta"), d.n_s) : IntervalPartition::singletons(d.n_s);
        if (c.action == "cosets") return {{"representatives", windows_json(min_coset_reps(d, theta))}};
        if (c.action == "poincare") return {{"coefficients", poincare_polynomial(d, theta)}};
        auto omega = P.has("omega") ? read_partition(P.at("omega"), d.n_s) : IntervalPartition::singletons(d.n_s);
        if (c.action == "double-cosets") return {{"representatives", windows_json(double_coset_reps(d, omega, theta))}};
        json rows = json::array();
        for (const auto& w : matrix_domain(d, omega, theta))
            rows.push_back({{"w", window_json(w)}, {"matrix", coset_matrix_json(coset_matrix(d, w, omega, theta))}});
        return {{"matrices", rows}};
    }
    if (c.action == "length") {
        P.allow({"kind", "n", "window"});
        auto d = read_group(P.at("kind"), P.at("n"));
        std::vector<int> win;
        for (const auto& x : P.at("window").items()) win.push_back(x.small_int());
        auto w = P.at("window").wrap([&] { return SignedPermutation(win, d.flavor); });
        return {{"length", length(w)}};
    }
    bad_action("weyl", c.action, "order, cosets, double-cosets, matrices, poincare, length");
}

json verb_satake(const Ctx& c) {
    const Node& P = c.payload;
    if (c.action == "image") {
        P.allow({"kind", "n", "j"});
        auto d = read_group(P.at("kind"), P.at("n"));
        int j = P.at("j").small_int();
        return {{"image", laurent_json(P.at("j").wrap([&] { return satake_image(d, j); }))}};
    }
    if (c.action == "eig") {
        P.allow({"kind", "n", "j", "q", "chi"});
        auto d = read_group(P.at("kind"), P.at("n"));
        int j = P.has("j") ? P.at("j").small_int() : 1;
        HeckeEvalInput in{d, P.at("q").rational(), read_rationals(P.at("chi"))};
        return {{"value", rat(P.wrap([&] { return unramified_eigenvalue(in, j); }))}};
    }
    if (c.action == "charpoly") {
        P.allow({"kind", "n", "q", "t"});
        auto d = read_group(P.at("kind"), P.at("n"));
        auto t = read_rationals(P.at("t"));
        auto pp = P.wrap([&] { return hecke_char_poly(d, t, P.at("q").rational()); });
        return {{"P", qpoly_json(pp.P)}, {"Ptilde", qpoly_json(pp.Ptilde)}};
    }
    if (c.action == "divisibility") {
        P.allow({"kind", "n", "n0", "q", "chi"});
        auto d = read_group(P.at("kind"), P.at("n"));
        int n0 = P.at("n0").small_int();
        auto chi = read_rationals(P.at("chi"));
        Rational q = P.at("q").rational();
        auto rep = P.wrap([&] { return charpoly_divisibility(d, n0, chi, q); });
        json spec = json::array();
        for (const auto& x : v_operator_spectrum(d, n0, chi, q)) spec.push_back(rat(x));
        return {{"exponent", rep.exponent}, {"divides", rep.divides}, {"roots_of_P", rep.roots_of_P}, {"spectrum", spec}};
    }
    bad_action("satake", c.action, "image, eig, charpoly, divisibility");
}

json verb_projector(const Ctx& c) {
    const Node& P = c.payload;
    if (c.action != "run") bad_action("projector", c.action, "run");
    P.allow({"group", "omega", "j0", "j1", "p", "q", "e", "components"});
    auto d = read_group(P.at("group"));
    auto R = read_ring(P, 3);
    auto q = P.at("q").integer();
    if (q < 2) P.at("q").fail("must be a prime power");
    ParahoricDatum datum{d, read_partition(P.at("omega"), d.n_s), P.at("j0").small_int(), P.at("j1").small_int(),
                         static_cast<std::uint64_t>(q), R.p};
    P.wrap([&] { datum.validate(); return 0; });
    std::vector<ProjectorComponent> comps;
    for (const auto& node : P.at("components").items()) {
        node.allow({"type", "chi"});
        std::string t = node.at("type").str();
        ProjectorComponent pc;
        if (t == "unramified") pc.type = ProjectorComponent::Type::Unramified;
        else if (t == "steinberg") pc.type = ProjectorComponent::Type::Steinberg;
        else node.at("type").fail("expected unramified or steinberg");
        pc.chi = read_residues(node.at("chi"), R);
        comps.push_back(pc);
    }
    return projector_json(P.wrap([&] { return apply_projector(datum, comps, R); }));
}

json verb_split(const Ctx& c) {
    const Node& P = c.payload;
    if (c.action == "run") {
        P.allow({"p", "e", "form", "M", "A", "B"});
        auto R = read_ring(P, 1);
        check_guard(R.e <= guards().max_precision, "precision e exceeds max_precision");
        auto form = read_form(P.at("form"), R);
        auto M = read_matrix(P.at("M"), R);
        auto s = P.wrap([&] { return split_by_factor(M, form, read_poly(P.at("A"), R), read_poly(P.at("B"), R), R); });
        json witness = s.witness;
        return {{"basis_s", matrix_json(s.basis_s)},     {"basis_psi", matrix_json(s.basis_psi)},
                {"gram_s", matrix_json(s.gram_s)},       {"gram_psi", matrix_json(s.gram_psi)},
                {"stable", s.stable},                    {"orthogonal", s.orthogonal},
                {"nondegenerate_s", s.nondegenerate_s},  {"nondegenerate_psi", s.nondegenerate_psi},
                {"charpoly_recombines", s.charpoly_recombines}, {"ok", s.ok()},
                {"witness", witness}};
    }
    if (c.action == "descend") {
        P.allow({"p", "form", "rho"});
        auto R = read_ring(P, 1);
        auto form = read_form(P.at("form"), R);
        std::vector<DualMatrix> rho;
        for (const auto& g : P.at("rho").items()) {
            g.allow({"re", "eps"});
            rho.push_back({read_matrix(g.at("re"), R), read_matrix(g.at("eps"), R)});
        }
        auto res = P.wrap([&] { return descend_dual_numbers(rho, form, R); });
        json desc = json::array();
        for (const auto& m : res.descended) desc.push_back(matrix_json(m));
        return {{"A", matrix_json(res.A)},         {"b", res.b},
                {"A_prime", matrix_json(res.A_prime)}, {"descended", desc},
                {"isometry", res.isometry},        {"residual_equal", res.residual_equal}};
    }
    bad_action("split", c.action, "run, descend");
}

json verb_adequacy(const Ctx& c) {
    const Node& P = c.payload;
    if (c.action == "sufficient") {
        P.allow({"p", "N", "irreducible", "split"});
        auto p = P.at("p").integer();
        if (p < 2) P.at("p").fail("must be a prime");
        auto v = sufficient_conditions(static_cast<std::uint64_t>(p), P.at("N").small_int(), P.at("irreducible").boolean(),
                                       P.at("split").boolean());
        return {{"verdict", verdict_name(v)}};
    }
    if (c.action != "check") bad_action("adequacy", c.action, "check, sufficient");
    P.allow({"p", "group", "form", "generators", "exhaustive_cyclic", "candidates"});
    auto R = read_ring(P, 1);
    std::vector<ZMatrix> gens;
    for (const auto& g : P.at("generators").items()) gens.push_back(read_matrix(g, R));
    if (gens.empty()) P.at("generators").fail("need at least one generator");
    auto H = close_group(gens, R.p);
    AdjointModule M;
    if (P.has("form")) M = P.wrap([&] { return adjoint_module(read_form(P.at("form"), R), R.p); });
    else M = P.wrap([&] { return adjoint_module(read_group(P.at("group")), R.p); });
    bool cyc = P.has("exhaustive_cyclic") && P.at("exhaustive_cyclic").boolean();
    auto rep = P.wrap([&] { return adequacy_check(H, M, cyc); });
    json out{{"order", rep.order},
             {"h0", rep.h0},
             {"h1", rep.h1},
             {"hom_to_kappa", rep.hom},
             {"condition4", {{"all_submodules", rep.cond4.all_submodules}, {"bad_submodule_dim", rep.cond4.bad_submodule_dim}}},
             {"adequate", rep.adequate()}};
    if (rep.cond4.all_cyclic) {
        out["condition4"]["all_cyclic"] = *rep.cond4.all_cyclic;
        out["condition4"]["cyclic_counterexample"] = rep.cond4.cyclic_counterexample;
    }
    if (P.has("candidates")) {
        json wit = json::array();
        for (const auto& cand : P.at("candidates").items()) {
            std::vector<ZMatrix> W;
            for (const auto& m : cand.items()) W.push_back(read_matrix(m, R));
            auto w = cand.wrap([&] { return trace_pairing_check(H, M, W); });
            if (w)
                wit.push_back({{"gamma", matrix_json(H.elements[w->gamma])}, {"eigenvalue", w->a}, {"w", w->w}, {"trace", residue(w->trace)}});
            else
                wit.push_back(nullptr);
        }
        out["witnesses"] = wit;
    }
    return out;
}

json verb_ledger(const Ctx& c) {
    const Node& P = c.payload;
    if (c.action != "report" && !c.action.empty()) bad_action("ledger", c.action, "report");
    P.allow({"group", "degree", "places", "h0_global", "h0_twist", "h1_Sperp_twist"});
    LedgerInput in;
    in.group = read_group(P.at("group"));
    in.degree = P.at("degree").small_int();
    for (const auto& pl : P.at("places").items()) {
        pl.allow({"label", "kind", "h0", "l", "f"});
        PlaceRecord r;
        r.label = pl.has("label") ? pl.at("label").str() : "";
        r.kind = pl.at("kind").wrap([&] { return parse_place_kind(pl.at("kind").str()); });
        r.h0 = pl.at("h0").small_int();
        r.l = pl.has("l") ? pl.at("l").small_int() : 0;
        r.f = pl.has("f") ? pl.at("f").small_int() : 0;
        in.places.push_back(r);
    }
    in.h0_global = P.has("h0_global") ? P.at("h0_global").small_int() : 0;
    in.h0_twist = P.has("h0_twist") ? P.at("h0_twist").small_int() : 0;
    in.h1_Sperp_twist = P.has("h1_Sperp_twist") ? P.at("h1_Sperp_twist").small_int() : 0;
    auto r = P.wrap([&] { return ledger_report(in); });
    json items = json::array();
    for (const auto& pl : in.places) {
        json it{{"label", pl.label}, {"kind", place_kind_name(pl.kind)}, {"h0", pl.h0}};
        if (pl.kind != PlaceKind::Infinite) it["defect"] = pl.l - pl.h0;
        if (pl.kind == PlaceKind::AboveP) {
            it["local_chi"] = -pl.f * r.dim_g;
            it["fl_defect"] = fl_defect(pl.f, in.group);
        }
        items.push_back(it);
    }
    return {{"places", items},
            {"dim_g", r.dim_g},
            {"sum_h0_infinite", r.sum_h0_infinite},
            {"chi_global", r.chi_global},
            {"sum_local_chi", r.sum_local_chi},
            {"sum_defects", r.sum_defects},
            {"euler_chi_S", r.euler_chi_S},
            {"chi_S_closed", r.chi_S_closed},
            {"h", {r.h0_S, r.h1_S, r.h2_S, r.h3_S}},
            {"alternating_sum", r.alternating_sum},
            {"covers_p", r.covers_p},
            {"consistent", r.consistent},
            {"fl_total", r.fl_total},
            {"coincidence", {{"lhs", r.coincidence_lhs}, {"rhs", r.coincidence_rhs}}}};
}

json verb_congruence(const Ctx& c) {
    const Node& P = c.payload;
    if (c.action == "fiber-product") {
        P.allow({"k", "precision"});
        int prec = P.has("precision") ? P.at("precision").small_int() : kDefaultCongruencePrecision;
        return tate_json(P.wrap([&] { return fiber_product_check(P.at("k").small_int(), prec); }));
    }
    if (c.action != "tate" && !c.action.empty()) bad_action("congruence", c.action, "tate, fiber-product");
    P.allow({"p", "e", "f", "a"});
    auto R = read_ring(P, kDefaultCongruencePrecision);
    MonogenicAlgebra T{R, read_poly(P.at("f"), R)};
    Augmentation th{R(P.at("a").integer())};
    return tate_json(P.wrap([&] { return tate_check(T, th); }));
}

json verb_oracle(const Ctx& c) {
    const Node& P = c.payload;
    if (c.action == "order" || c.action == "flags") {
        P.allow({"kind", "n", "q", "theta"});
        auto d = read_group(P.at("kind"), P.at("n"));
        auto q = P.at("q").integer();
        if (q < 2 || !is_prime(static_cast<std::uint64_t>(q))) P.at("q").fail("must be a prime");
        auto G = enumerate_points(d, static_cast<std::uint64_t>(q));
        if (c.action == "order") return {{"order", G.size()}};
        auto theta = P.has("theta") ? read_partition(P.at("theta"), d.n_s) : IntervalPartition::singletons(d.n_s);
        auto fc = flag_count(d, G, theta);
        return {{"group_order", fc.group_order}, {"parabolic_order", fc.parabolic_order}, {"index", fc.index},
                {"orbit_count", fc.orbit_count}, {"poincare", fc.poincare},               {"agree", fc.agree()}};
    }
    if (c.action == "cosets") {
        P.allow({"kind", "n", "level", "j", "n0", "m", "p"});
        auto d = read_group(P.at("kind"), P.at("n"));
        std::string lv = P.has("level") ? P.at("level").str() : "U0";
        if (lv != "U0" && lv != "U1") P.at("level").fail("expected U0 or U1");
        int j = P.at("j").small_int();
        int n0 = P.has("n0") ? P.at("n0").small_int() : 1;
        int m = P.has("m") ? P.at("m").small_int() : 1;
        auto p = P.at("p").integer();
        if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) P.at("p").fail("must be a prime");
        auto idx = P.wrap([&] {
            return double_coset_index(d, lv == "U0" ? LevelKind::U0 : LevelKind::U1, j, n0, m, static_cast<std::uint64_t>(p));
        });
        return {{"index", idx}, {"root_exponent", double_coset_root_exponent(d, j)}};
    }
    if (c.action == "hecke") {
        P.allow({"kind", "n", "j", "pattern"});
        auto d = read_group(P.at("kind"), P.at("n"));
        int j = P.at("j").small_int();
        bool pattern = P.has("pattern") && P.at("pattern").boolean();
        auto s = P.wrap([&] { return spherical_coset_sum(d, j, pattern); });
        return {{"sum", laurent_json(s)}, {"matches_formula", s == unramified_eigenvalue_symbolic(d, j)}};
    }
    bad_action("oracle", c.action, "order, flags, cosets, hecke");
}

// Operation coverage: every public module operation and the verb reaching it.
json coverage() {
    return {{"weyl", {"weyl order", "weyl cosets", "weyl double-cosets", "weyl matrices", "weyl poincare", "weyl length"}},
            {"laurent", {"satake image", "oracle hecke"}},
            {"satake", {"satake image", "satake eig", "satake charpoly", "satake divisibility"}},
            {"parahoric", {"projector run"}},
            {"galsplit", {"split run", "split descend"}},
            {"adequacy", {"adequacy check", "adequacy sufficient"}},
            {"defledger", {"ledger"}},
            {"congruence", {"congruence tate", "congruence fiber-product"}},
            {"oracle", {"oracle order", "oracle flags", "oracle cosets", "oracle hecke"}},
            {"cli", {"selftest fast", "selftest full"}}};
}

struct Flags {
    std::string kind, theta, omega, level;
    std::optional<int> n, j, n0, m, p;
    std::optional<std::string> q;
    std::vector<std::string> chi;
    std::vector<int> only;
    bool mutate = false;
};

json overlay(json payload, const Flags& f) {
    if (!f.kind.empty()) payload["kind"] = f.kind;
    if (f.n) payload["n"] = *f.n;
    if (f.j) payload["j"] = *f.j;
    if (f.n0) payload["n0"] = *f.n0;
    if (f.m) payload["m"] = *f.m;
    if (f.p) payload["p"] = *f.p;
    if (f.q) payload["q"] = *f.q;
    if (!f.chi.empty()) payload["chi"] = f.chi;
    if (!f.level.empty()) payload["level"] = f.level;
    for (auto [key, text] : {std::pair{"theta", &f.theta}, std::pair{"omega", &f.omega}})
        if (!text->empty()) {
            try {
                payload[key] = json::parse(*text);
            } catch (const json::parse_error& e) {
                throw ValidationError(std::string("--") + key + ": malformed JSON: " + e.what());
            }
        }
    return payload;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"hecke-forge: Hecke eigenvalue and deformation-theory toolkit"};
    app.set_version_flag("--version", std::string("hecke-forge ") + kVersion);
    std::string verb, action, json_text, file;
    std::uint64_t seed = 20240601;
    bool guard_override = false;
    Flags f;
    app.add_option("verb", verb, "weyl, satake, projector, split, adequacy, ledger, congruence, oracle, selftest")->required();
    app.add_option("action", action, "verb-specific action");
    app.add_option("--json", json_text, "payload inline");
    app.add_option("--file", file, "payload file ('-' for stdin)");
    app.add_option("--seed", seed, "seed for randomized runs");
    app.add_flag("--guard-override", guard_override, "apply guard overrides from HECKE_FORGE_GUARDS");
    app.add_option("--kind", f.kind);
    app.add_option("--n", f.n);
    app.add_option("--j", f.j);
    app.add_option("--n0", f.n0);
    app.add_option("--q", f.q);
    app.add_option("--p", f.p);
    app.add_option("--m", f.m);
    app.add_option("--chi", f.chi)->delimiter(',');
    app.add_option("--theta", f.theta, "partition JSON");
    app.add_option("--omega", f.omega, "partition JSON");
    app.add_option("--level", f.level);
    app.add_option("--only", f.only, "selftest: restrict to criteria")->delimiter(',');
    app.add_flag("--mutate-satake", f.mutate, "selftest: negative control");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << "hecke-forge " << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (guard_override) apply_guard_overrides_from_env();
        json payload = json::object();
        if (!json_text.empty() && !file.empty()) throw ValidationError("--json and --file are mutually exclusive");
        try {
            if (!json_text.empty()) payload = json::parse(json_text);
            else if (file == "-") payload = json::parse(in);
            else if (!file.empty()) {
                std::ifstream fs(file);
                if (!fs) throw ValidationError("--file: cannot open '" + file + "'");
                payload = json::parse(fs);
            }
        } catch (const json::parse_error& e) {
            throw ValidationError(std::string("payload: malformed JSON: ") + e.what());
        }
        if (!payload.is_object()) throw ValidationError("payload: expected a JSON object");
        if (payload.contains("seed")) seed = Node{&payload["seed"], "payload.seed"}.integer();
        payload = overlay(payload, f);
        Ctx ctx{action, Node{&payload, "payload"}, seed};

        json result;
        int code = 0;
        if (verb == "weyl") result = verb_weyl(ctx);
        else if (verb == "satake") result = verb_satake(ctx);
        else if (verb == "projector") result = verb_projector(ctx);
        else if (verb == "split") result = verb_split(ctx);
        else if (verb == "adequacy") result = verb_adequacy(ctx);
        else if (verb == "ledger") result = verb_ledger(ctx);
        else if (verb == "congruence") result = verb_congruence(ctx);
        else if (verb == "oracle") result = verb_oracle(ctx);
        else if (verb == "selftest") {
            if (action != "fast" && action != "full" && !action.empty()) bad_action("selftest", action, "fast, full");
            AcceptanceOptions opt;
            opt.full = action == "full";
            opt.seed = seed;
            opt.only = f.only;
            opt.mutate_satake = f.mutate;
            json rows = json::array(), failed = json::array();
            for (const auto& r : run_acceptance(opt, [&](const CriterionResult& r) { err << format_result(r) << "\n"; })) {
                rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass()}, {"property_holds", r.ok}, {"detail", r.detail}});
                if (!r.pass()) failed.push_back(r.name);
            }
            result = {{"level", opt.full ? "full" : "fast"}, {"criteria", rows}, {"failed", failed}, {"coverage", coverage()}};
            if (!failed.empty()) {
                err << "failed criteria:";
                for (const auto& n : failed) err << " " << n.get<std::string>();
                err << "\n";
                code = 1;
            }
        } else {
            throw ValidationError("verb: unknown verb '" + verb + "'");
        }
        out << result.dump() << "\n";
        return code;
    } catch (const GuardError& e) {
        err << "guard violation: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "validation error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace hf
