#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ginirep/partition.hpp"
#include "ginirep/qpoly.hpp"

namespace ginirep {

/// eps_i - eps_j with 0-based i < j.
struct PositiveRoot {
    int i;
    int j;

    IntVector as_vector(std::size_t n) const;
    friend bool operator==(const PositiveRoot&, const PositiveRoot&) = default;
};

/// Positive roots of type A_{n-1}, ordered lexicographically in (i, j).
class RootSystemA {
public:
    explicit RootSystemA(int n);

    int rank_plus_one() const noexcept { return n_; }
    const std::vector<PositiveRoot>& roots() const noexcept { return roots_; }
    std::vector<IntVector> positive_roots() const;

private:
    int n_;
    std::vector<PositiveRoot> roots_;
};

/// Evaluates the q-analogue of Kostant's partition function,
///
///   P_q(alpha) = sum over multisets of positive roots summing to alpha
///                of q^(multiset size),
///
/// by recursing over the fixed root order: the multiplicity of the first
/// remaining root is chosen, then the rest of the roots handle what is left.
/// Sub-results are memoized on (alpha, root index).
///
/// Branches are cut as soon as alpha has a nonzero coordinate that no
/// remaining root can touch, a negative prefix sum, or a nonzero total.
///
/// Not thread-safe; use one evaluator per worker. Results never depend on
/// cache state.
class KostantEvaluator {
public:
    struct Options {
        bool memoize = true;
        /// Any alpha met during the recursion with |entry| above this bound is
        /// treated as unreachable. The caller must pick a bound at least as
        /// large as every reachable entry (see safe_entry_bound).
        std::optional<int> entry_bound;
    };

    explicit KostantEvaluator(int n) : KostantEvaluator(n, Options{}) {}
    KostantEvaluator(int n, Options options);

    int n() const noexcept { return system_.rank_plus_one(); }

    /// Throws InvalidInput if alpha does not have n entries.
    QPolynomial partition_q(const IntVector& alpha);
    std::int64_t partition(const IntVector& alpha);

    void clear_cache();
    std::size_t cache_size() const noexcept;

private:
    struct KeyHash {
        std::size_t operator()(const std::vector<int>& v) const noexcept;
    };
    using Cache = std::unordered_map<std::vector<int>, QPolynomial, KeyHash>;

    QPolynomial eval(std::vector<int>& alpha, std::size_t root_index);
    bool feasible(const std::vector<int>& alpha, std::size_t root_index) const;

    RootSystemA system_;
    Options options_;
    std::vector<Cache> cache_;  // one map per root index
};

/// Largest |entry| reachable while expanding alpha: entries only move mass
/// rightward, so they stay within [min entry, sum of positive entries].
int safe_entry_bound(const IntVector& alpha);

QPolynomial kostant_partition_q(const IntVector& alpha, int n);
std::int64_t kostant_partition(const IntVector& alpha, int n);

struct SignedPermutation {
    /// images[i] = w(i), 0-based.
    std::vector<int> images;
    int sign;
};

/// All n! permutations of {0..n-1} with their signs, in lexicographic order
/// of `images` starting at the identity.
std::vector<SignedPermutation> signed_permutations(int n);

/// (w.v)_i = v_{w(i)}.
IntVector permute(const IntVector& v, const SignedPermutation& w);

}  // namespace ginirep
