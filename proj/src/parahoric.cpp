// SPDX-License-Identifier: Apache-2.0
#include "heckeforge/parahoric.hpp"

#include <algorithm>
#include <set>

#include "heckeforge/errors.hpp"
#include "heckeforge/guards.hpp"
#include "heckeforge/laurent.hpp"

namespace hf {

void ParahoricDatum::validate() const {
    require(omega.rank() == desc.n_s, "omega: partition rank does not match n_s");
    require(j0 >= 1 && j0 <= omega.count(), "j0: block index out of range");
    require(j1 >= 1 && j1 <= omega.count(), "j1: block index out of range");
    require(j0 != j1, "j0, j1: must be distinct");
    require(is_prime(p) && p % 2 == 1, "p: must be an odd prime");
    require(q >= 2, "q: must be at least 2");
    require(q % p == 1, "q: must satisfy q = 1 (mod p)");
    require(block_rank(omega, j0) >= 1, "j0: block carries no torus coordinates");
}

std::vector<int> block_coordinates(const IntervalPartition& omega, int j) {
    require(j >= 1 && j <= omega.count(), "block: index out of range");
    auto [lo, hi] = omega.block(j - 1);
    std::vector<int> c;
    for (int x = std::max(lo, 1); x <= hi; ++x) c.push_back(x);
    return c;
}

int block_rank(const IntervalPartition& omega, int j) { return static_cast<int>(block_coordinates(omega, j).size()); }

std::vector<std::vector<int>> block_incidence(const SignedPermutation& w, const IntervalPartition& omega,
                                              const IntervalPartition& theta) {
    std::vector<std::vector<int>> a(static_cast<std::size_t>(omega.count()),
                                    std::vector<int>(static_cast<std::size_t>(theta.count()), 0));
    for (int x = 0; x <= w.size(); ++x) {
        int y = x == 0 ? 0 : w(x);
        ++a[static_cast<std::size_t>(omega.block_of(y))][static_cast<std::size_t>(theta.block_of(x))];
    }
    return a;
}

int invariant_dim(const GroupDescriptor& desc, const IntervalPartition& omega, const IntervalPartition& theta,
                  const LocalDims& local_dims) {
    int total = 0;
    for (const auto& w : double_coset_reps(desc, omega, theta)) {
        int prod = 1;
        for (int j = 1; j <= omega.count(); ++j) {
            int d = local_dims(j, w);
            require(d >= 0, "local_dims: negative dimension");
            prod *= d;
        }
        total += prod;
    }
    return total;
}

int invariant_dim(const GroupDescriptor& desc, const IntervalPartition& omega, const IntervalPartition& theta,
                  const std::map<std::pair<int, std::string>, int>& table) {
    return invariant_dim(desc, omega, theta, [&](int j, const SignedPermutation& w) {
        auto it = table.find({j, w.to_string()});
        require(it != table.end(), "local_dims: missing entry for block " + std::to_string(j) + ", w = " + w.to_string());
        return it->second;
    });
}

std::vector<SignedPermutation> jacquet_w_set(const GroupDescriptor& desc, const IntervalPartition& omega,
                                             const IntervalPartition& theta) {
    std::vector<SignedPermutation> out;
    for (const auto& w : double_coset_reps(desc, omega, theta)) {
        auto a = block_incidence(w, omega, theta);
        bool ok = true;
        for (const auto& row : a)
            for (int v : row) ok = ok && v <= 1;
        if (ok) out.push_back(w);
    }
    return out;
}

Zmod IwahoriPSModule::twisted(std::size_t b, int l) const {
    require(l >= 1 && l <= desc.n_s, "l: coordinate out of range");
    int x = invert(basis[b])(l);
    Zmod v = psi[static_cast<std::size_t>((x < 0 ? -x : x) - 1)];
    return x < 0 ? inv(v) : v;
}

IwahoriPSModule build_ps_module(const GroupDescriptor& desc, const IntervalPartition& theta,
                                const std::vector<Zmod>& psi, const Zmod& q,
                                const std::vector<SignedPermutation>& basis) {
    require(static_cast<int>(psi.size()) == desc.n_s, "psi: expected n_s values");
    for (const auto& v : psi) require(v.is_unit(), "psi: values must be invertible");
    require(theta.rank() == desc.n_s, "theta: partition rank does not match n_s");
    IwahoriPSModule m;
    m.desc = desc;
    m.theta = theta;
    m.psi = psi;
    m.q = q;
    for (const auto& w : basis) require(is_min_right(w, theta), "basis: element not in W^Theta");
    m.basis = basis;
    for (int b = 1; b < theta.count(); ++b) {
        auto c = block_coordinates(theta, b + 1);
        for (std::size_t i = 1; i < c.size(); ++i)
            if (psi[static_cast<std::size_t>(c[i] - 1)] != psi[static_cast<std::size_t>(c[0] - 1)]) m.block_constant = false;
    }
    return m;
}

IwahoriPSModule build_ps_module(const GroupDescriptor& desc, const IntervalPartition& theta,
                                const std::vector<Zmod>& psi, const Zmod& q) {
    return build_ps_module(desc, theta, psi, q, min_coset_reps(desc, theta));
}

std::vector<Zmod> v_operator(const IwahoriPSModule& m, const IntervalPartition& omega, int j, int k) {
    auto coords = block_coordinates(omega, j);
    require(k >= 1 && k <= static_cast<int>(coords.size()), "k: must satisfy 1 <= k <= block rank");
    std::vector<Zmod> diag;
    for (std::size_t b = 0; b < m.dim(); ++b) {
        std::vector<Zmod> vals;
        for (int l : coords) vals.push_back(m.twisted(b, l));
        diag.push_back(elem_sym(k, vals, Zmod(1, vals[0].modulus())));
    }
    return diag;
}

Zmod v_operator_signed_sum(const std::vector<Zmod>& values, int k) {
    require(!values.empty() && k >= 1 && k <= static_cast<int>(values.size()), "k: out of range");
    std::vector<Zmod> sym;
    for (const auto& v : values) sym.push_back(v + inv(v));
    return elem_sym(k, sym, Zmod(1, values[0].modulus()));
}

std::vector<Zmod> root_data(const std::vector<Zmod>& psi, bool sp) {
    std::vector<Zmod> r;
    for (const auto& v : psi) {
        r.push_back(v);
        r.push_back(inv(v));
    }
    if (sp && !psi.empty()) r.push_back(Zmod(1, psi[0].modulus()));
    return r;
}

std::vector<Zmod> phat_roots(const std::vector<Zmod>& roots, int block_size, int k) {
    int n = static_cast<int>(roots.size());
    require(block_size >= 1 && block_size <= n, "block: size exceeds the number of roots");
    require(k >= 1 && k <= block_size, "k: must satisfy 1 <= k <= block size");
    check_guard(n <= 2 * guards().max_enum_rank + 1, "max_enum_rank: root data too large");
    std::vector<Zmod> out;
    Zmod one(1, roots[0].modulus());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != block_size) continue;
        std::vector<Zmod> sub;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) sub.push_back(roots[static_cast<std::size_t>(i)]);
        out.push_back(elem_sym(k, sub, one));
    }
    return out;
}

ZPoly phat_poly(const std::vector<Zmod>& roots, int block_size, int k) {
    auto rs = phat_roots(roots, block_size, k);
    Zmod one(1, roots[0].modulus());
    ZPoly f = ZPoly::constant(one);
    for (const auto& r : rs) f = f * ZPoly::linear(r, one);
    return f;
}

namespace {

std::int64_t binom(int n, int k) {
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

ZPoly from_roots(const std::vector<Zmod>& rs, const Zmod& one) {
    ZPoly f = ZPoly::constant(one);
    for (const auto& r : rs) f = f * ZPoly::linear(r, one);
    return f;
}

}  // namespace

ProjectorFactor projector_factor(const std::vector<Zmod>& roots, const Zmod& alpha_bar, int i_j, int k,
                                 const ResidueRing& ring) {
    require(k >= 1 && k <= i_j, "k: must satisfy 1 <= k <= i_j");
    Zmod a(alpha_bar.value(), ring.p);
    require(a.is_unit(), "alpha_bar: must be a unit residue");
    Zmod C(binom(i_j, k), ring.p);
    Zmod tp = C * a.pow(k), tm = C * a.inv().pow(k);
    ProjectorFactor f;
    f.degenerate = tp == tm && a != a.inv();
    int np = 0, nm = 0;
    for (const auto& r : roots) {
        Zmod res(r.value(), ring.p);
        if (res == tp || res == tm) {
            f.r_roots.push_back(r);
            if (res == tp) ++np;
            if (res == tm && tp != tm) ++nm;
        } else {
            f.q_roots.push_back(r);
        }
    }
    if (tp == tm) {
        f.balanced = np % 2 == 0;
        f.r = np / 2;
    } else {
        f.balanced = np == nm;
        f.r = np;
    }
    Zmod one = ring(1);
    f.R = from_roots(f.r_roots, one);
    f.Q = from_roots(f.q_roots, one);
    f.coprime = f.R.degree() == 0 || f.Q.degree() == 0 || coprime(f.R, f.Q, ring);
    return f;
}

std::string profile_name(ProfileType t) {
    switch (t) {
        case ProfileType::Type1: return "type1";
        case ProfileType::Type2: return "type2";
        default: return "invalid";
    }
}

ProfileResult frobenius_profile_check(const std::vector<std::int64_t>& eigs, std::uint64_t p, int i_j0, bool sp) {
    require(is_prime(p), "p: must be prime");
    require(i_j0 >= 1, "i_j0: must be positive");
    std::map<std::int64_t, int> mult;
    for (auto e : eigs) {
        Zmod z(e, p);
        require(z.is_unit(), "eigenvalues: must be units");
        ++mult[z.value()];
    }
    for (auto [a, m] : mult) {
        std::int64_t ai = Zmod(a, p).inv().value();
        auto it = mult.find(ai);
        require(it != mult.end() && it->second == m, "eigenvalues: multiset is not closed under inversion");
    }
    ProfileResult r;
    for (auto [a, m] : mult) {
        std::int64_t ai = Zmod(a, p).inv().value();
        if (a != ai) {
            if (m == i_j0 && mult[ai] == i_j0) {
                r.type = ProfileType::Type1;
                r.alpha_bar = a;
                return r;
            }
        } else {
            int need = 2 * i_j0 + ((sp && a == 1) ? 1 : 0);
            if (m == need) {
                r.type = ProfileType::Type2;
                r.alpha_bar = a;
                return r;
            }
        }
    }
    return r;
}

ProjectorReport apply_projector(const ParahoricDatum& datum, const std::vector<ProjectorComponent>& components,
                                const ResidueRing& ring) {
    datum.validate();
    require(ring.p == datum.p, "ring: residue characteristic does not match p");
    require(!components.empty(), "components: empty module");
    const auto& desc = datum.desc;
    int ns = desc.n_s;
    bool sp = desc.is_sp();
    Zmod q = ring(static_cast<std::int64_t>(datum.q % ring.modulus));

    struct Built {
        IwahoriPSModule module;
        std::vector<Zmod> roots;
    };
    std::vector<Built> built;
    std::vector<std::int64_t> residual;
    for (std::size_t c = 0; c < components.size(); ++c) {
        const auto& comp = components[c];
        std::vector<Zmod> psi;
        for (const auto& v : comp.chi) psi.push_back(ring(v.value()));
        IntervalPartition theta = IntervalPartition::singletons(ns);
        std::vector<SignedPermutation> basis;
        if (comp.type == ProjectorComponent::Type::Unramified) {
            require(static_cast<int>(psi.size()) == ns, "components[" + std::to_string(c) + "].chi: expected n_s values");
            basis = double_coset_reps(desc, datum.omega, theta);
        } else {
            require(ns >= 2, "components[" + std::to_string(c) + "]: Steinberg pattern needs n_s >= 2");
            require(static_cast<int>(psi.size()) == ns - 1,
                    "components[" + std::to_string(c) + "].chi: expected n_s - 1 values");
            psi.push_back(psi.back() * inv(q));
            theta = IntervalPartition::from_subset(ns, {ns - 1});
            basis = jacquet_w_set(desc, datum.omega, theta);
        }
        Built b{build_ps_module(desc, theta, psi, q, basis), root_data(psi, sp)};
        std::vector<std::int64_t> res;
        for (const auto& r : b.roots) res.push_back(Zmod(r.value(), ring.p).value());
        std::sort(res.begin(), res.end());
        if (c == 0)
            residual = res;
        else
            require(res == residual, "components[" + std::to_string(c) + "]: residual Frobenius eigenvalues differ");
        built.push_back(b);
    }

    ProjectorReport rep;
    rep.profile = frobenius_profile_check(residual, ring.p, block_rank(datum.omega, datum.j0), sp);
    require(rep.profile.type != ProfileType::Invalid,
            "eigenvalues: multiplicity hypothesis fails at block j0 = " + std::to_string(datum.j0));
    Zmod abar(rep.profile.alpha_bar, ring.p);

    for (std::size_t c = 0; c < components.size(); ++c) {
        const auto& b = built[c];
        ComponentReport cr;
        cr.type = components[c].type;
        cr.basis = b.module.basis;
        cr.diagonal.assign(b.module.dim(), ring(1));
        for (int j = 1; j <= datum.omega.count(); ++j) {
            if (j == datum.j1) continue;
            int ij = block_rank(datum.omega, j);
            for (int k = 1; k <= ij; ++k) {
                auto f = projector_factor(phat_roots(b.roots, ij, k), abar, ij, k, ring);
                auto eig = v_operator(b.module, datum.omega, j, k);
                for (std::size_t w = 0; w < eig.size(); ++w) {
                    Zmod v = ring(1);
                    for (const auto& r : f.q_roots) v *= eig[w] - r;
                    cr.diagonal[w] *= v;
                }
                cr.factors.emplace(std::make_pair(j, k), f);
            }
        }
        cr.annihilated = true;
        for (const auto& d : cr.diagonal) {
            if (d.is_unit()) ++cr.image_dim;
            if (!d.is_zero()) cr.annihilated = false;
        }
        rep.image_dim += cr.image_dim;
        if (cr.type == ProjectorComponent::Type::Unramified) {
            rep.unramified_dim += invariant_dim(desc, IntervalPartition::whole(ns), IntervalPartition::singletons(ns),
                                                [](int, const SignedPermutation&) { return 1; });
            for (std::size_t w = 0; w < cr.diagonal.size(); ++w) {
                rep.distinguished.push_back(cr.diagonal[w].value());
                if (cr.diagonal[w].is_unit()) rep.w_prime.push_back(cr.basis[w]);
            }
            std::vector<int> l0;
            for (int i = 1; i <= ns; ++i) {
                Zmod r(components[c].chi[static_cast<std::size_t>(i - 1)].value(), ring.p);
                if (r == abar || r == inv(abar)) l0.push_back(i);
            }
            for (const auto& w : cr.basis) {
                if (l0.empty()) break;
                int blk = datum.omega.block_of(w(l0[0]));
                bool same = true;
                for (int i : l0) same = same && datum.omega.block_of(w(i)) == blk;
                if (same && blk + 1 != datum.j1) rep.w_prime_literal.push_back(w);
            }
        }
        rep.components.push_back(std::move(cr));
    }
    return rep;
}

}  // namespace hf
