// SPDX-License-Identifier: Apache-2.0
#include "heckeforge/weyl.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "heckeforge/errors.hpp"
#include "heckeforge/guards.hpp"

namespace hf {

std::string kind_name(GroupKind k) {
    switch (k) {
        case GroupKind::SOodd: return "so-odd";
        case GroupKind::SOevenSplit: return "so-even-split";
        case GroupKind::SOevenQuasi: return "so-even-quasi";
        case GroupKind::Sp: return "sp";
    }
    return "?";
}

GroupKind parse_kind(const std::string& s) {
    if (s == "so-odd" || s == "SOodd") return GroupKind::SOodd;
    if (s == "so-even-split" || s == "SOevenSplit") return GroupKind::SOevenSplit;
    if (s == "so-even-quasi" || s == "SOevenQuasi") return GroupKind::SOevenQuasi;
    if (s == "sp" || s == "Sp") return GroupKind::Sp;
    throw ValidationError("kind: unknown group kind '" + s + "'");
}

std::string flavor_name(Flavor f) { return f == Flavor::B ? "B" : "D"; }

int GroupDescriptor::satake_exponent(int j) const {
    int base = is_sp() ? n_s * (n_s + 1) / 2 : n_s * (n_s - 1) / 2;
    return base + (n - n_s - j) * j;
}

GroupDescriptor make_group(GroupKind kind, int n) {
    require(n >= 2, "n: must be at least 2");
    bool even = n % 2 == 0;
    switch (kind) {
        case GroupKind::SOodd: require(!even, "n: must be odd for so-odd"); break;
        case GroupKind::SOevenSplit:
        case GroupKind::SOevenQuasi: require(even, "n: must be even for so-even"); break;
        case GroupKind::Sp: require(even, "n: must be even for sp"); break;
    }
    GroupDescriptor d;
    d.kind = kind;
    d.n = n;
    d.N = kind == GroupKind::Sp ? n + 1 : 2 * (n / 2);
    d.n_s = kind == GroupKind::SOevenQuasi ? n / 2 - 1 : n / 2;
    require(d.n_s >= 1, "n: too small for a group of positive semisimple rank");
    require(d.n_s <= kMaxRank, "n: rank exceeds the supported maximum");
    d.flavor = (kind == GroupKind::SOevenSplit || kind == GroupKind::SOevenQuasi) ? Flavor::D : Flavor::B;
    return d;
}

SignedPermutation::SignedPermutation(const std::vector<int>& window, Flavor flavor) : flavor_(flavor) {
    int n = static_cast<int>(window.size());
    require(n >= 1 && n <= kMaxRank, "window: size out of range");
    std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
    int negs = 0;
    for (int i = 0; i < n; ++i) {
        int v = window[static_cast<std::size_t>(i)];
        int a = v < 0 ? -v : v;
        require(a >= 1 && a <= n, "window: entry out of range");
        require(!seen[static_cast<std::size_t>(a)], "window: absolute values are not a permutation");
        seen[static_cast<std::size_t>(a)] = true;
        if (v < 0) ++negs;
        w_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(v);
    }
    require(flavor == Flavor::B || negs % 2 == 0, "window: odd number of negative entries in flavor D");
    n_ = static_cast<std::int8_t>(n);
}

SignedPermutation SignedPermutation::identity(int n_s, Flavor flavor) {
    std::vector<int> w(static_cast<std::size_t>(n_s));
    for (int i = 0; i < n_s; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    return SignedPermutation(w, flavor);
}

SignedPermutation SignedPermutation::raw(const int* vals, int n, Flavor flavor) {
    SignedPermutation s;
    s.n_ = static_cast<std::int8_t>(n);
    s.flavor_ = flavor;
    for (int i = 0; i < n; ++i) s.w_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(vals[i]);
    return s;
}

SignedPermutation SignedPermutation::with_flavor(Flavor f) const {
    SignedPermutation s(*this);
    s.flavor_ = f;
    return s;
}

std::vector<int> SignedPermutation::window() const {
    return std::vector<int>(w_.begin(), w_.begin() + n_);
}

int SignedPermutation::negatives() const {
    int c = 0;
    for (int i = 0; i < n_; ++i) c += w_[static_cast<std::size_t>(i)] < 0;
    return c;
}

bool SignedPermutation::is_identity() const {
    for (int i = 0; i < n_; ++i)
        if (w_[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
}

std::string SignedPermutation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < n_; ++i) os << (i ? "," : "") << int(w_[static_cast<std::size_t>(i)]);
    os << ']';
    return os.str();
}

std::uint64_t SignedPermutation::key() const {
    std::uint64_t k = static_cast<std::uint64_t>(flavor_);
    for (int i = 0; i < n_; ++i) k = k * 32 + static_cast<std::uint64_t>(w_[static_cast<std::size_t>(i)] + 16);
    return k * 16 + static_cast<std::uint64_t>(n_);
}

SignedPermutation group_op(const SignedPermutation& u, const SignedPermutation& w) {
    require(u.size() == w.size(), "group_op: size mismatch");
    require(u.flavor() == w.flavor(), "group_op: flavor mismatch");
    int v[kMaxRank];
    for (int i = 1; i <= w.size(); ++i) v[i - 1] = u(w(i));
    return SignedPermutation::raw(v, w.size(), w.flavor());
}

SignedPermutation invert(const SignedPermutation& w) {
    int v[kMaxRank];
    for (int i = 1; i <= w.size(); ++i) {
        int y = w(i);
        if (y > 0)
            v[y - 1] = i;
        else
            v[-y - 1] = -i;
    }
    return SignedPermutation::raw(v, w.size(), w.flavor());
}

SignedPermutation generator(int n_s, Flavor flavor, int i) {
    require(i >= 0 && i < n_s, "generator: index out of range");
    std::vector<int> w(static_cast<std::size_t>(n_s));
    for (int k = 0; k < n_s; ++k) w[static_cast<std::size_t>(k)] = k + 1;
    if (i > 0) {
        std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
    } else if (flavor == Flavor::B) {
        w[0] = -1;
    } else {
        require(n_s >= 2, "generator: s_0 needs rank at least 2 in flavor D");
        w[0] = -2;
        w[1] = -1;
    }
    return SignedPermutation(w, flavor);
}

std::vector<SignedPermutation> generators(const GroupDescriptor& desc) {
    std::vector<SignedPermutation> g;
    for (int i = 0; i < desc.n_s; ++i) {
        if (i == 0 && desc.flavor == Flavor::D && desc.n_s < 2) continue;
        g.push_back(generator(desc.n_s, desc.flavor, i));
    }
    return g;
}

int length(const SignedPermutation& w) {
    int n = w.size();
    int len = 0;
    for (int i = 1; i <= n; ++i) {
        if (w.flavor() == Flavor::B && w(i) < 0) ++len;
        for (int j = i + 1; j <= n; ++j) {
            if (w(i) > w(j)) ++len;
            if (w(i) + w(j) < 0) ++len;
        }
    }
    return len;
}

bool has_right_descent(const SignedPermutation& w, int i) {
    if (i > 0) return w(i) > w(i + 1);
    if (w.flavor() == Flavor::B) return w(1) < 0;
    return w.size() >= 2 && w(1) + w(2) < 0;
}

bool has_left_descent(const SignedPermutation& w, int i) { return has_right_descent(invert(w), i); }

std::uint64_t weyl_order(int n_s, Flavor flavor) {
    std::uint64_t o = 1;
    for (int i = 1; i <= n_s; ++i) o *= static_cast<std::uint64_t>(2 * i);
    return flavor == Flavor::B ? o : o / 2;
}

IntervalPartition::IntervalPartition(int n_s, std::vector<std::pair<int, int>> blocks)
    : n_s_(n_s), blocks_(std::move(blocks)) {
    require(n_s >= 1, "partition: rank must be positive");
    require(!blocks_.empty(), "partition: no blocks");
    int next = 0;
    for (auto [lo, hi] : blocks_) {
        require(lo == next, "partition: blocks must be consecutive starting at 0");
        require(hi >= lo, "partition: empty block");
        next = hi + 1;
    }
    require(next == n_s + 1, "partition: blocks must cover 0..n_s");
    owner_.assign(static_cast<std::size_t>(n_s + 1), 0);
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        for (int x = blocks_[b].first; x <= blocks_[b].second; ++x) owner_[static_cast<std::size_t>(x)] = static_cast<int>(b);
}

IntervalPartition IntervalPartition::from_subset(int n_s, const std::vector<int>& theta) {
    std::vector<bool> in(static_cast<std::size_t>(n_s), false);
    for (int i : theta) {
        require(i >= 0 && i < n_s, "partition: subset element out of range");
        in[static_cast<std::size_t>(i)] = true;
    }
    std::vector<std::pair<int, int>> blocks;
    int lo = 0;
    for (int x = 0; x <= n_s; ++x) {
        if (x == n_s || !in[static_cast<std::size_t>(x)]) {
            blocks.emplace_back(lo, x);
            lo = x + 1;
        }
    }
    return IntervalPartition(n_s, blocks);
}

IntervalPartition IntervalPartition::singletons(int n_s) { return from_subset(n_s, {}); }

IntervalPartition IntervalPartition::whole(int n_s) { return IntervalPartition(n_s, {{0, n_s}}); }

std::vector<IntervalPartition> IntervalPartition::all(int n_s) {
    std::vector<IntervalPartition> r;
    for (unsigned mask = 0; mask < (1u << n_s); ++mask) {
        std::vector<int> th;
        for (int i = 0; i < n_s; ++i)
            if (mask & (1u << i)) th.push_back(i);
        r.push_back(from_subset(n_s, th));
    }
    return r;
}

std::vector<int> IntervalPartition::subset() const {
    std::vector<int> th;
    for (auto [lo, hi] : blocks_)
        for (int x = lo; x < hi; ++x) th.push_back(x);
    return th;
}

bool IntervalPartition::contains(int i) const {
    if (i < 0 || i >= n_s_) return false;
    return owner_[static_cast<std::size_t>(i)] == owner_[static_cast<std::size_t>(i + 1)];
}

std::string IntervalPartition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        os << (b ? "," : "") << '[' << blocks_[b].first << ',' << blocks_[b].second << ']';
    os << ']';
    return os.str();
}

void for_each_signed(int n_s, Flavor flavor, const std::function<void(const SignedPermutation&)>& fn) {
    require(n_s >= 1 && n_s <= kMaxRank, "rank out of range");
    int vals[kMaxRank];
    bool used[kMaxRank + 1] = {};
    std::function<void(int, int)> rec = [&](int pos, int negs) {
        if (pos == n_s) {
            if (flavor == Flavor::B || negs % 2 == 0) fn(SignedPermutation::raw(vals, n_s, flavor));
            return;
        }
        for (int v = -n_s; v <= n_s; ++v) {
            if (v == 0) continue;
            int a = v < 0 ? -v : v;
            if (used[a]) continue;
            used[a] = true;
            vals[pos] = v;
            rec(pos + 1, negs + (v < 0));
            used[a] = false;
        }
    };
    rec(0, 0);
}

std::vector<SignedPermutation> enumerate_signed(int n_s, Flavor flavor) {
    check_guard(n_s <= guards().max_enum_rank, "max_enum_rank: Weyl group enumeration at rank " + std::to_string(n_s));
    std::vector<SignedPermutation> out;
    out.reserve(weyl_order(n_s, flavor));
    for_each_signed(n_s, flavor, [&](const SignedPermutation& w) { out.push_back(w); });
    return out;
}

std::vector<SignedPermutation> enumerate_group(const GroupDescriptor& desc) {
    return enumerate_signed(desc.n_s, desc.flavor);
}

bool is_min_right(const SignedPermutation& w, const IntervalPartition& theta) {
    for (int i : theta.subset()) {
        if (i == 0 && w.flavor() == Flavor::D && w.size() < 2) continue;
        if (has_right_descent(w, i)) return false;
    }
    return true;
}

bool is_min_left(const SignedPermutation& w, const IntervalPartition& omega) {
    return is_min_right(invert(w), omega);
}

static void check_partition(const GroupDescriptor& desc, const IntervalPartition& p, const char* name) {
    require(p.rank() == desc.n_s, std::string(name) + ": partition rank does not match n_s");
}

std::vector<SignedPermutation> min_coset_reps(const GroupDescriptor& desc, const IntervalPartition& theta) {
    check_partition(desc, theta, "theta");
    check_guard(desc.n_s <= guards().max_enum_rank, "max_enum_rank: coset enumeration");
    std::vector<SignedPermutation> out;
    for_each_signed(desc.n_s, desc.flavor, [&](const SignedPermutation& w) {
        if (is_min_right(w, theta)) out.push_back(w);
    });
    return out;
}

std::vector<SignedPermutation> double_coset_reps(const GroupDescriptor& desc, const IntervalPartition& omega,
                                                 const IntervalPartition& theta) {
    check_partition(desc, omega, "omega");
    check_partition(desc, theta, "theta");
    check_guard(desc.n_s <= guards().max_enum_rank, "max_enum_rank: double coset enumeration");
    std::vector<SignedPermutation> out;
    for_each_signed(desc.n_s, desc.flavor, [&](const SignedPermutation& w) {
        if (is_min_right(w, theta) && is_min_left(w, omega)) out.push_back(w);
    });
    return out;
}

std::vector<SignedPermutation> parabolic_subgroup(const GroupDescriptor& desc, const IntervalPartition& theta) {
    check_partition(desc, theta, "theta");
    std::vector<SignedPermutation> gens;
    for (int i : theta.subset()) {
        if (i == 0 && desc.flavor == Flavor::D && desc.n_s < 2) continue;
        gens.push_back(generator(desc.n_s, desc.flavor, i));
    }
    auto id = SignedPermutation::identity(desc.n_s, desc.flavor);
    std::unordered_set<SignedPermutation, SignedPermutationHash> seen{id};
    std::deque<SignedPermutation> queue{id};
    while (!queue.empty()) {
        auto w = queue.front();
        queue.pop_front();
        for (const auto& s : gens) {
            auto ws = group_op(w, s);
            if (seen.insert(ws).second) queue.push_back(ws);
        }
    }
    std::vector<SignedPermutation> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<SignedPermutation, SignedPermutation> parabolic_factor(const SignedPermutation& w,
                                                                 const IntervalPartition& theta) {
    require(theta.rank() == w.size(), "theta: partition rank does not match element");
    SignedPermutation m = w;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i : theta.subset()) {
            if (i == 0 && w.flavor() == Flavor::D && w.size() < 2) continue;
            if (has_right_descent(m, i)) {
                m = group_op(m, generator(w.size(), w.flavor(), i));
                moved = true;
            }
        }
    }
    return {m, group_op(invert(m), w)};
}

std::vector<std::uint64_t> poincare_polynomial(const GroupDescriptor& desc, const IntervalPartition& theta) {
    std::vector<std::uint64_t> c;
    for (const auto& w : min_coset_reps(desc, theta)) {
        auto l = static_cast<std::size_t>(length(w));
        if (c.size() <= l) c.resize(l + 1, 0);
        ++c[l];
    }
    return c;
}

std::vector<SignedPermutation> matrix_domain(const GroupDescriptor& desc, const IntervalPartition& omega,
                                             const IntervalPartition& theta) {
    check_partition(desc, omega, "omega");
    check_partition(desc, theta, "theta");
    check_guard(desc.n_s <= guards().max_enum_rank, "max_enum_rank: double coset enumeration");
    std::vector<SignedPermutation> out;
    for_each_signed(desc.n_s, Flavor::B, [&](const SignedPermutation& w) {
        if (desc.flavor == Flavor::D && w.negatives() % 2) return;
        if (is_min_right(w, theta) && is_min_left(w, omega)) out.push_back(w.with_flavor(desc.flavor));
    });
    return out;
}

CosetMatrix coset_matrix(const GroupDescriptor& desc, const SignedPermutation& w, const IntervalPartition& omega,
                         const IntervalPartition& theta) {
    check_partition(desc, omega, "omega");
    check_partition(desc, theta, "theta");
    require(w.size() == desc.n_s, "w: size does not match n_s");
    auto wb = w.with_flavor(Flavor::B);
    require(is_min_right(wb, theta) && is_min_left(wb, omega), "w: not minimal in its double coset");
    require(desc.flavor == Flavor::B || w.negatives() % 2 == 0, "w: odd number of negative entries in flavor D");
    int qo = omega.count(), qt = theta.count();
    CosetMatrix m;
    m.b.assign(static_cast<std::size_t>(qo), 0);
    m.a.assign(static_cast<std::size_t>(qo), std::vector<int>(static_cast<std::size_t>(qt), 0));
    m.neg = m.a;
    for (int x = 0; x <= desc.n_s; ++x) {
        int y = w(x);
        auto i = static_cast<std::size_t>(omega.block_of(y));
        auto j = static_cast<std::size_t>(theta.block_of(x));
        ++m.a[i][j];
        if (y < 0) {
            ++m.neg[i][j];
            ++m.b[i];
        }
    }
    return m;
}

void validate_coset_matrix(const GroupDescriptor& desc, const CosetMatrix& m, const IntervalPartition& omega,
                           const IntervalPartition& theta) {
    std::size_t qo = static_cast<std::size_t>(omega.count()), qt = static_cast<std::size_t>(theta.count());
    require(m.a.size() == qo && m.neg.size() == qo && m.b.size() == qo, "matrix: row count does not match omega");
    int total_neg = 0;
    for (std::size_t i = 0; i < qo; ++i) {
        require(m.a[i].size() == qt && m.neg[i].size() == qt, "matrix: column count does not match theta");
        int row = 0, nrow = 0;
        for (std::size_t j = 0; j < qt; ++j) {
            require(m.a[i][j] >= 0, "matrix.a: negative entry");
            require(m.neg[i][j] >= 0 && m.neg[i][j] <= m.a[i][j], "matrix.neg: entry outside [0, a]");
            require(!(i == 0 || j == 0) || m.neg[i][j] == 0, "matrix.neg: must vanish in the first row and column");
            row += m.a[i][j];
            nrow += m.neg[i][j];
        }
        require(row == omega.block_size(static_cast<int>(i)), "matrix.a: row sum does not match omega block size");
        require(m.b[i] == nrow, "matrix.b: must equal the row sums of neg");
        require(m.b[i] <= omega.block_size(static_cast<int>(i)), "matrix.b: entry exceeds block size");
        total_neg += nrow;
    }
    for (std::size_t j = 0; j < qt; ++j) {
        int col = 0;
        for (std::size_t i = 0; i < qo; ++i) col += m.a[i][j];
        require(col == theta.block_size(static_cast<int>(j)), "matrix.a: column sum does not match theta block size");
    }
    require(m.a[0][0] >= 1, "matrix.a: the corner entry must be positive");
    require(desc.flavor == Flavor::B || total_neg % 2 == 0, "matrix.b: odd sign total in flavor D");
}

SignedPermutation matrix_to_rep(const GroupDescriptor& desc, const CosetMatrix& m, const IntervalPartition& omega,
                                const IntervalPartition& theta) {
    check_partition(desc, omega, "omega");
    check_partition(desc, theta, "theta");
    validate_coset_matrix(desc, m, omega, theta);
    int qo = omega.count(), qt = theta.count();
    using Chunks = std::vector<std::vector<std::vector<int>>>;
    Chunks negX(static_cast<std::size_t>(qo), std::vector<std::vector<int>>(static_cast<std::size_t>(qt)));
    Chunks posX = negX, negY = negX, posY = negX;
    auto pos = [&](int i, int j) { return m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] - m.neg[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
    auto neg = [&](int i, int j) { return m.neg[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
    for (int j = 0; j < qt; ++j) {
        int x = theta.block(j).first;
        for (int i = qo - 1; i >= 0; --i)
            for (int k = 0; k < neg(i, j); ++k) negX[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].push_back(x++);
        for (int i = 0; i < qo; ++i)
            for (int k = 0; k < pos(i, j); ++k) posX[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].push_back(x++);
    }
    for (int i = 0; i < qo; ++i) {
        int y = omega.block(i).first;
        for (int j = qt - 1; j >= 0; --j)
            for (int k = 0; k < neg(i, j); ++k) negY[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].push_back(y++);
        for (int j = 0; j < qt; ++j)
            for (int k = 0; k < pos(i, j); ++k) posY[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].push_back(y++);
    }
    std::vector<int> img(static_cast<std::size_t>(desc.n_s + 1), 0);
    for (std::size_t i = 0; i < static_cast<std::size_t>(qo); ++i)
        for (std::size_t j = 0; j < static_cast<std::size_t>(qt); ++j) {
            const auto& px = posX[i][j];
            const auto& py = posY[i][j];
            for (std::size_t k = 0; k < px.size(); ++k) img[static_cast<std::size_t>(px[k])] = py[k];
            const auto& nx = negX[i][j];
            const auto& ny = negY[i][j];
            for (std::size_t k = 0; k < nx.size(); ++k) img[static_cast<std::size_t>(nx[k])] = -ny[nx.size() - 1 - k];
        }
    require(img[0] == 0, "matrix: inconsistent placement of 0");
    return SignedPermutation(std::vector<int>(img.begin() + 1, img.end()), desc.flavor);
}

std::vector<CosetMatrix> admissible_matrices(const GroupDescriptor& desc, const IntervalPartition& omega,
                                             const IntervalPartition& theta) {
    check_partition(desc, omega, "omega");
    check_partition(desc, theta, "theta");
    int qo = omega.count(), qt = theta.count();
    std::vector<CosetMatrix> out;
    CosetMatrix cur;
    cur.b.assign(static_cast<std::size_t>(qo), 0);
    cur.a.assign(static_cast<std::size_t>(qo), std::vector<int>(static_cast<std::size_t>(qt), 0));
    cur.neg = cur.a;
    std::vector<int> rowrem(static_cast<std::size_t>(qo)), colrem(static_cast<std::size_t>(qt));
    for (int i = 0; i < qo; ++i) rowrem[static_cast<std::size_t>(i)] = omega.block_size(i);
    for (int j = 0; j < qt; ++j) colrem[static_cast<std::size_t>(j)] = theta.block_size(j);

    std::function<void(int, int)> fill_neg = [&](int cell, int total) {
        if (cell == qo * qt) {
            if (desc.flavor == Flavor::D && total % 2) return;
            for (int i = 0; i < qo; ++i) {
                int s = 0;
                for (int j = 0; j < qt; ++j) s += cur.neg[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                cur.b[static_cast<std::size_t>(i)] = s;
            }
            out.push_back(cur);
            return;
        }
        auto i = static_cast<std::size_t>(cell / qt), j = static_cast<std::size_t>(cell % qt);
        int hi = (i == 0 || j == 0) ? 0 : cur.a[i][j];
        for (int v = 0; v <= hi; ++v) {
            cur.neg[i][j] = v;
            fill_neg(cell + 1, total + v);
        }
        cur.neg[i][j] = 0;
    };
    std::function<void(int)> fill_a = [&](int cell) {
        if (cell == qo * qt) {
            for (int c : colrem)
                if (c) return;
            fill_neg(0, 0);
            return;
        }
        auto i = static_cast<std::size_t>(cell / qt), j = static_cast<std::size_t>(cell % qt);
        bool last_col = j + 1 == static_cast<std::size_t>(qt);
        int lo = last_col ? rowrem[i] : (cell == 0 ? 1 : 0);
        int hi = std::min(rowrem[i], colrem[j]);
        for (int v = lo; v <= hi; ++v) {
            cur.a[i][j] = v;
            rowrem[i] -= v;
            colrem[j] -= v;
            fill_a(cell + 1);
            rowrem[i] += v;
            colrem[j] += v;
        }
        cur.a[i][j] = 0;
    };
    fill_a(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hf
