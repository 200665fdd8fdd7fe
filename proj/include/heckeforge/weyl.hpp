// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hf {

enum class GroupKind { SOodd, SOevenSplit, SOevenQuasi, Sp };
enum class Flavor { B, D };

std::string kind_name(GroupKind k);
GroupKind parse_kind(const std::string& s);
std::string flavor_name(Flavor f);

struct GroupDescriptor {
    GroupKind kind = GroupKind::SOodd;
    int n = 0;
    int n_s = 0;
    int N = 0;
    Flavor flavor = Flavor::B;

    // Exponent E(j) of the normalizing q-power in the Satake transform.
    int satake_exponent(int j) const;
    bool is_sp() const { return kind == GroupKind::Sp; }
};

GroupDescriptor make_group(GroupKind kind, int n);

constexpr int kMaxRank = 12;

// Signed permutation of {±1..±n_s} in window notation.
class SignedPermutation {
public:
    SignedPermutation() = default;
    // Validating constructor.
    SignedPermutation(const std::vector<int>& window, Flavor flavor);
    static SignedPermutation identity(int n_s, Flavor flavor);

    int size() const { return n_; }
    Flavor flavor() const { return flavor_; }
    // w(i) for i in [-n_s, n_s], with w(0) = 0 and w(-i) = -w(i).
    int operator()(int i) const { return i > 0 ? w_[static_cast<std::size_t>(i - 1)] : (i < 0 ? -w_[static_cast<std::size_t>(-i - 1)] : 0); }
    std::vector<int> window() const;
    int negatives() const;
    bool is_identity() const;

    friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
        return a.n_ == b.n_ && a.flavor_ == b.flavor_ && a.w_ == b.w_;
    }
    friend bool operator!=(const SignedPermutation& a, const SignedPermutation& b) { return !(a == b); }
    // Lexicographic window order.
    friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
        for (int i = 0; i < std::min(a.n_, b.n_); ++i)
            if (a.w_[static_cast<std::size_t>(i)] != b.w_[static_cast<std::size_t>(i)])
                return a.w_[static_cast<std::size_t>(i)] < b.w_[static_cast<std::size_t>(i)];
        return a.n_ < b.n_;
    }

    std::string to_string() const;
    std::uint64_t key() const;

    // Unchecked construction for internal enumeration.
    static SignedPermutation raw(const int* vals, int n, Flavor flavor);
    SignedPermutation with_flavor(Flavor f) const;

private:
    std::array<std::int8_t, kMaxRank> w_{};
    std::int8_t n_ = 0;
    Flavor flavor_ = Flavor::B;
};

struct SignedPermutationHash {
    std::size_t operator()(const SignedPermutation& w) const { return static_cast<std::size_t>(w.key()); }
};

// u∘w: first w, then u.
SignedPermutation group_op(const SignedPermutation& u, const SignedPermutation& w);
SignedPermutation invert(const SignedPermutation& w);

// s_0, s_1, ..., s_{n_s-1}; empty for flavor D with n_s = 1.
std::vector<SignedPermutation> generators(const GroupDescriptor& desc);
SignedPermutation generator(int n_s, Flavor flavor, int i);

int length(const SignedPermutation& w);
bool has_right_descent(const SignedPermutation& w, int i);
bool has_left_descent(const SignedPermutation& w, int i);

std::uint64_t weyl_order(int n_s, Flavor flavor);

// Interval partition of {0, 1, ..., n_s}.
class IntervalPartition {
public:
    IntervalPartition() = default;
    IntervalPartition(int n_s, std::vector<std::pair<int, int>> blocks);
    static IntervalPartition from_subset(int n_s, const std::vector<int>& theta);
    static IntervalPartition singletons(int n_s);
    static IntervalPartition whole(int n_s);
    static std::vector<IntervalPartition> all(int n_s);

    int rank() const { return n_s_; }
    int count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::pair<int, int>>& blocks() const { return blocks_; }
    std::pair<int, int> block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
    int block_size(int i) const { return blocks_[static_cast<std::size_t>(i)].second - blocks_[static_cast<std::size_t>(i)].first + 1; }
    // Zero-based index of the block containing |x|.
    int block_of(int x) const { return owner_[static_cast<std::size_t>(x < 0 ? -x : x)]; }
    std::vector<int> subset() const;
    bool contains(int i) const;  // i ∈ Θ

    friend bool operator==(const IntervalPartition& a, const IntervalPartition& b) {
        return a.n_s_ == b.n_s_ && a.blocks_ == b.blocks_;
    }
    std::string to_string() const;

private:
    int n_s_ = 0;
    std::vector<std::pair<int, int>> blocks_;
    std::vector<int> owner_;
};

// All elements of W in lexicographic window order.
std::vector<SignedPermutation> enumerate_group(const GroupDescriptor& desc);
std::vector<SignedPermutation> enumerate_signed(int n_s, Flavor flavor);
void for_each_signed(int n_s, Flavor flavor, const std::function<void(const SignedPermutation&)>& fn);

bool is_min_right(const SignedPermutation& w, const IntervalPartition& theta);
bool is_min_left(const SignedPermutation& w, const IntervalPartition& omega);

// W^Θ: minimal representatives of the cosets w W_Θ.
std::vector<SignedPermutation> min_coset_reps(const GroupDescriptor& desc, const IntervalPartition& theta);
// ^ΩW^Θ: minimal representatives of W_Ω w W_Θ.
std::vector<SignedPermutation> double_coset_reps(const GroupDescriptor& desc, const IntervalPartition& omega,
                                                 const IntervalPartition& theta);
// W_Θ, generated by s_i for i ∈ Θ.
std::vector<SignedPermutation> parabolic_subgroup(const GroupDescriptor& desc, const IntervalPartition& theta);
// w = w^Θ ∘ w_Θ.
std::pair<SignedPermutation, SignedPermutation> parabolic_factor(const SignedPermutation& w,
                                                                 const IntervalPartition& theta);

// Coefficients of Σ_{w∈W^Θ} q^{ℓ(w)}.
std::vector<std::uint64_t> poincare_polynomial(const GroupDescriptor& desc, const IntervalPartition& theta);

// Matrix avatar of a double-coset representative. The negative-part matrix
// neg records how many entries of each Θ-block land in the negative of each
// Ω-block; b is its row sum.
struct CosetMatrix {
    std::vector<int> b;
    std::vector<std::vector<int>> a;
    std::vector<std::vector<int>> neg;

    friend bool operator==(const CosetMatrix& x, const CosetMatrix& y) {
        return x.b == y.b && x.a == y.a && x.neg == y.neg;
    }
    friend bool operator<(const CosetMatrix& x, const CosetMatrix& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.neg < y.neg;
    }
};

// Domain of the matrix map. For flavor B this is ^ΩW^Θ; for flavor D it is the
// set of even-sign elements of the flavor-B ^ΩW^Θ.
std::vector<SignedPermutation> matrix_domain(const GroupDescriptor& desc, const IntervalPartition& omega,
                                             const IntervalPartition& theta);
CosetMatrix coset_matrix(const GroupDescriptor& desc, const SignedPermutation& w, const IntervalPartition& omega,
                         const IntervalPartition& theta);
SignedPermutation matrix_to_rep(const GroupDescriptor& desc, const CosetMatrix& m, const IntervalPartition& omega,
                                const IntervalPartition& theta);
void validate_coset_matrix(const GroupDescriptor& desc, const CosetMatrix& m, const IntervalPartition& omega,
                           const IntervalPartition& theta);
// Every matrix satisfying the combinatorial constraints.
std::vector<CosetMatrix> admissible_matrices(const GroupDescriptor& desc, const IntervalPartition& omega,
                                             const IntervalPartition& theta);

}  // namespace hf
