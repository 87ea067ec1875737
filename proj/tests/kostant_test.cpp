#include <gtest/gtest.h>

#include <set>

#include "brute_force.hpp"
#include "ginirep/errors.hpp"
#include "ginirep/kostant.hpp"

using namespace ginirep;
using Q = QPolynomial;

namespace {

// Every alpha in [-lo, hi]^n, in odometer order.
std::vector<std::vector<int>> box(int n, int lo, int hi) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(static_cast<std::size_t>(n), lo);
    while (true) {
        out.push_back(v);
        std::size_t i = 0;
        while (i < v.size() && v[i] == hi) v[i++] = lo;
        if (i == v.size()) break;
        ++v[i];
    }
    return out;
}

}  // namespace

TEST(RootSystemA, CountsAndShape) {
    for (int n = 1; n <= 6; ++n) {
        RootSystemA sys(n);
        EXPECT_EQ(sys.roots().size(), static_cast<std::size_t>(n * (n - 1) / 2));
        for (const auto& r : sys.positive_roots()) {
            EXPECT_EQ(r.sum(), 0);
            EXPECT_EQ(std::count(r.begin(), r.end(), 1), 1);
            EXPECT_EQ(std::count(r.begin(), r.end(), -1), 1);
        }
    }
    const RootSystemA three(3);
    EXPECT_EQ(three.roots(), (std::vector<PositiveRoot>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(KostantPartitionQ, Examples) {
    EXPECT_EQ(kostant_partition_q(IntVector({1, 0, -1}), 3), Q({0, 1, 1}));
    EXPECT_EQ(kostant_partition_q(IntVector({0, 0, 0}), 3), Q::one());
    EXPECT_EQ(kostant_partition_q(IntVector({2, -1, -1}), 3), Q({0, 0, 1, 1}));
}

TEST(KostantPartition, Examples) {
    EXPECT_EQ(kostant_partition(IntVector({1, 0, -1}), 3), 2);
    EXPECT_EQ(kostant_partition(IntVector({0, 0, 0}), 3), 1);
    EXPECT_EQ(kostant_partition(IntVector({-1, 0, 1}), 3), 0);
}

TEST(KostantPartitionQ, WrongLength) {
    EXPECT_THROW(kostant_partition_q(IntVector({1, -1}), 3), InvalidInput);
}

TEST(KostantPartitionQ, VanishesOnNonzeroSumAndNegativePrefix) {
    KostantEvaluator ev(4);
    for (const auto& a : box(4, -2, 2)) {
        const IntVector alpha(a);
        std::int64_t prefix = 0;
        bool negative_prefix = false;
        for (int x : a) {
            prefix += x;
            negative_prefix |= prefix < 0;
        }
        if (alpha.sum() != 0 || negative_prefix) EXPECT_TRUE(ev.partition_q(alpha).is_zero()) << alpha.to_string();
    }
}

TEST(KostantPartitionQ, MatchesRootMultisetEnumeration) {
    // Decompositions of alpha use at most sum of prefix sums <= 18 roots here.
    for (int n = 1; n <= 4; ++n) {
        const auto tally = oracle::root_multisets(n, 18);
        KostantEvaluator ev(n);
        for (const auto& a : box(n, -3, 3)) {
            const auto it = tally.find(a);
            const Q expected = it == tally.end() ? Q::zero() : Q(it->second);
            const Q got = ev.partition_q(IntVector(a));
            ASSERT_EQ(got, expected) << IntVector(a).to_string();
            EXPECT_EQ(ev.partition(IntVector(a)), expected.eval_at_one());
        }
    }
}

TEST(KostantEvaluator, MemoizedAndUnmemoizedAgree) {
    KostantEvaluator memo(5);
    KostantEvaluator plain(5, {.memoize = false, .entry_bound = std::nullopt});
    for (const auto& a : box(5, -2, 2)) {
        const IntVector alpha(a);
        EXPECT_EQ(memo.partition_q(alpha), plain.partition_q(alpha)) << alpha.to_string();
    }
    EXPECT_GT(memo.cache_size(), 0u);
    EXPECT_EQ(plain.cache_size(), 0u);
    memo.clear_cache();
    EXPECT_EQ(memo.cache_size(), 0u);
    EXPECT_EQ(memo.partition_q(IntVector({1, 0, 0, 0, -1})), plain.partition_q(IntVector({1, 0, 0, 0, -1})));
}

TEST(KostantEvaluator, SafeEntryBoundDoesNotChangeResults) {
    for (const auto& a : box(4, -3, 3)) {
        const IntVector alpha(a);
        KostantEvaluator bounded(4, {.memoize = true, .entry_bound = safe_entry_bound(alpha)});
        EXPECT_EQ(bounded.partition_q(alpha), kostant_partition_q(alpha, 4));
    }
    // An entry beyond the bound is unreachable by contract.
    KostantEvaluator tight(3, {.memoize = true, .entry_bound = 1});
    EXPECT_TRUE(tight.partition_q(IntVector({2, -1, -1})).is_zero());
}

TEST(SignedPermutations, SmallCases) {
    const auto one = signed_permutations(1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].images, std::vector<int>{0});
    EXPECT_EQ(one[0].sign, 1);

    const auto two = signed_permutations(2);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0].images, (std::vector<int>{0, 1}));
    EXPECT_EQ(two[0].sign, 1);
    EXPECT_EQ(two[1].images, (std::vector<int>{1, 0}));
    EXPECT_EQ(two[1].sign, -1);

    const auto three = signed_permutations(3);
    ASSERT_EQ(three.size(), 6u);
    EXPECT_EQ(std::count_if(three.begin(), three.end(), [](const auto& w) { return w.sign == 1; }), 3);

    EXPECT_THROW(signed_permutations(0), InvalidInput);
}

TEST(SignedPermutations, AllDistinctAndSignMultiplicative) {
    for (int n = 1; n <= 6; ++n) {
        const auto ws = signed_permutations(n);
        std::set<std::vector<int>> seen;
        for (const auto& w : ws) seen.insert(w.images);
        EXPECT_EQ(seen.size(), ws.size());
        std::size_t fact = 1;
        for (int i = 2; i <= n; ++i) fact *= static_cast<std::size_t>(i);
        EXPECT_EQ(ws.size(), fact);
        // Swapping the first two images flips the sign.
        if (n >= 2)
            for (const auto& w : ws) {
                auto swapped = w.images;
                std::swap(swapped[0], swapped[1]);
                const auto it = std::find_if(ws.begin(), ws.end(), [&](const auto& x) { return x.images == swapped; });
                ASSERT_NE(it, ws.end());
                EXPECT_EQ(it->sign, -w.sign);
            }
    }
}

TEST(Permute, ActsOnEntries) {
    const SignedPermutation w{{2, 0, 1}, 1};
    EXPECT_EQ(permute(IntVector({10, 20, 30}), w), IntVector({30, 10, 20}));
}
