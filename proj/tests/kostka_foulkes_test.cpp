#include <gtest/gtest.h>

#include <algorithm>

#include "brute_force.hpp"
#include "ginirep/errors.hpp"
#include "ginirep/gini.hpp"
#include "ginirep/json.hpp"
#include "ginirep/kostka_foulkes.hpp"
#include "ginirep/tableau.hpp"

using namespace ginirep;
using Q = QPolynomial;

TEST(Tableau, SemistandardCheck) {
    EXPECT_TRUE(Tableau({{1, 1, 2}, {2, 3}}).is_semistandard());
    EXPECT_FALSE(Tableau({{1, 2}, {1}}).is_semistandard());   // column
    EXPECT_FALSE(Tableau({{2, 1}}).is_semistandard());        // row
    EXPECT_FALSE(Tableau({{1}, {2, 3}}).is_semistandard());   // shape
    EXPECT_EQ(Tableau({{1, 1, 2}, {2, 3}}).content(3), (std::vector<int>{2, 2, 1}));
}

TEST(SsytEnumerate, Examples) {
    const auto two = ssyt_enumerate(Partition({2, 1}), Composition({1, 1, 1}));
    ASSERT_EQ(two.size(), 2u);
    EXPECT_NE(std::find(two.begin(), two.end(), Tableau({{1, 2}, {3}})), two.end());
    EXPECT_NE(std::find(two.begin(), two.end(), Tableau({{1, 3}, {2}})), two.end());

    const auto forced = ssyt_enumerate(Partition({3, 2, 2}), Composition({3, 2, 2}));
    ASSERT_EQ(forced.size(), 1u);
    EXPECT_EQ(forced[0], Tableau({{1, 1, 1}, {2, 2}, {3, 3}}));

    EXPECT_TRUE(ssyt_enumerate(Partition({1, 1}), Composition({2, 0})).empty());
    EXPECT_THROW(ssyt_enumerate(Partition({2, 1}), Composition({1, 1})), InvalidInput);
}

TEST(SsytEnumerate, MatchesBruteForceFillings) {
    for (int m = 0; m <= 6; ++m)
        for (const auto& shape : partitions_of(m, 4))
            for (int parts = 1; parts <= 4; ++parts)
                for (const auto& weight : oracle::compositions_brute(m, parts)) {
                    std::vector<int> sh;
                    for (int x : shape)
                        if (x) sh.push_back(x);
                    auto brute = oracle::ssyt_brute(sh, weight);
                    std::vector<std::vector<std::vector<int>>> got;
                    for (const auto& t : ssyt_enumerate(Partition(sh), Composition(weight))) {
                        EXPECT_TRUE(t.is_semistandard());
                        EXPECT_EQ(t.content(weight.size()), weight);
                        got.push_back(t.rows());
                    }
                    std::sort(got.begin(), got.end());
                    std::sort(brute.begin(), brute.end());
                    ASSERT_EQ(got, brute) << shape.to_string() << " / " << Composition(weight).to_string();
                    EXPECT_EQ(std::adjacent_find(got.begin(), got.end()), got.end());
                }
}

TEST(KostkaNumber, Examples) {
    EXPECT_EQ(kostka_number(Partition({2, 1}), Composition({1, 1, 1})), 2);
    EXPECT_EQ(kostka_number(Partition({4, 2, 1}), Composition({4, 2, 1})), 1);
    EXPECT_EQ(kostka_number(Partition({1, 1, 1}), Composition({2, 1, 0})), 0);
}

TEST(ReadingWord, Examples) {
    EXPECT_EQ(reading_word(Tableau({{1, 2}, {3}})), (std::vector<int>{3, 1, 2}));
    EXPECT_EQ(reading_word(Tableau({{1, 3}, {2}})), (std::vector<int>{2, 1, 3}));
    EXPECT_EQ(reading_word(Tableau({{1, 2, 3}})), (std::vector<int>{1, 2, 3}));
}

TEST(Charge, Examples) {
    EXPECT_EQ(charge(std::vector<int>{3, 1, 2}, Partition({1, 1, 1})), 2);
    EXPECT_EQ(charge(std::vector<int>{5, 4, 3, 2, 1}, Partition({1, 1, 1, 1, 1})), 0);
    EXPECT_EQ(charge(std::vector<int>{1, 2, 3}, Partition({1, 1, 1})), 3);
}

TEST(Charge, NonStandardWord) {
    // 2 1 1 2: the 1 at pos 2 pairs with the 2 at pos 0 (to its left, index 0);
    // the 1 at pos 1 wraps to the 2 at pos 3 (index 1).
    EXPECT_EQ(charge(std::vector<int>{2, 1, 1, 2}, Partition({2, 2})), 1);
    EXPECT_EQ(charge(std::vector<int>{1, 1, 2, 2}, Partition({2, 2})), 2);
}

TEST(Charge, ContentMismatch) {
    EXPECT_THROW(charge(std::vector<int>{1, 1, 2}, Partition({1, 1, 1})), InvalidInput);
    EXPECT_THROW(charge(std::vector<int>{1, 4}, Partition({1, 1})), InvalidInput);
}

TEST(KostkaFoulkesCharge, Examples) {
    EXPECT_EQ(kostka_foulkes_charge(Partition({2, 1}), Partition({1, 1, 1})), Q({0, 1, 1}));
    EXPECT_EQ(kostka_foulkes_charge(Partition({3, 1, 1}), Partition({3, 1, 1})), Q::one());
    EXPECT_EQ(kostka_foulkes_charge(Partition({2}), Partition({1, 1})), Q({0, 1}));
    EXPECT_THROW(kostka_foulkes_charge(Partition({2}), Partition({1})), InvalidInput);
}

TEST(KostkaFoulkesKostant, Examples) {
    EXPECT_EQ(kostka_foulkes_kostant(Partition({2, 1, 0}), Partition({1, 1, 1})), Q({0, 1, 1}));
    EXPECT_EQ(kostka_foulkes_kostant(Partition({1, 1, 1}), Partition({1, 1, 1})), Q::one());
    EXPECT_TRUE(kostka_foulkes_kostant(Partition({1, 1, 1}), Partition({2, 1, 0})).is_zero());
    EXPECT_THROW(kostka_foulkes_kostant(Partition({2, 1}), Partition({1, 1})), InvalidInput);
}

TEST(KostkaFoulkes, StandardWeightMatchesHookFormula) {
    for (int n = 1; n <= 7; ++n)
        for (const auto& lam : partitions_of(n, n)) {
            std::vector<int> parts;
            for (int x : lam)
                if (x) parts.push_back(x);
            const Q expected(oracle::kostka_foulkes_standard_weight(parts));
            const Partition ones = flat_partition(1, n);
            EXPECT_EQ(kostka_foulkes_charge(lam, ones), expected) << lam.to_string();
            EXPECT_EQ(kostka_foulkes_kostant(lam, ones), expected) << lam.to_string();
        }
}

TEST(KostkaFoulkes, KnownSmallTable) {
    const Partition ones({1, 1, 1, 1});
    EXPECT_EQ(kostka_foulkes_kostant(Partition({4, 0, 0, 0}), ones), Q::monomial(1, 6));
    EXPECT_EQ(kostka_foulkes_kostant(Partition({3, 1, 0, 0}), ones), Q({0, 0, 0, 1, 1, 1}));
    EXPECT_EQ(kostka_foulkes_kostant(Partition({2, 2, 0, 0}), ones), Q({0, 0, 1, 0, 1}));
    EXPECT_EQ(kostka_foulkes_kostant(Partition({2, 1, 1, 0}), ones), Q({0, 1, 1, 1}));
    EXPECT_EQ(kostka_foulkes_kostant(Partition({3, 0, 0}), Partition({1, 1, 1})), Q::monomial(1, 3));
}

TEST(KostkaFoulkes, RoutesAgreeWithSpecializationAndDegreeOnSmallSweep) {
    for (int m = 0; m <= 6; ++m) {
        const auto ps = partitions_of(m, 3);
        KostantEvaluator ev = make_sweep_evaluator(3, m);
        for (const auto& lam : ps)
            for (const auto& mu : ps) {
                const Q viaKostant = kostka_foulkes_kostant(lam, mu, ev);
                EXPECT_EQ(kostka_foulkes_charge(lam, mu), viaKostant) << lam.to_string() << mu.to_string();
                EXPECT_EQ(viaKostant.eval_at_one(), kostka_number(lam, mu));
                EXPECT_EQ(!viaKostant.is_zero(), dominates(lam, mu));
                if (dominates(lam, mu))
                    EXPECT_EQ(static_cast<std::int64_t>(*viaKostant.degree()), weighted_total(mu) - weighted_total(lam));
            }
    }
}

TEST(GradedMultiplicity, Examples) {
    EXPECT_EQ(graded_multiplicity(IntVector({1, 0, -1})), Q({0, 1, 1}));
    EXPECT_EQ(graded_multiplicity(IntVector({0, 0, 0})), Q::one());
    EXPECT_EQ(graded_multiplicity(IntVector({0, 0, 0, 0, 0})), Q::one());
    // K_{(3),(1^3)}(q): the single tableau 1 2 3 has charge 3.
    EXPECT_EQ(graded_multiplicity(IntVector({2, -1, -1})), Q::monomial(1, 3));
    EXPECT_EQ(graded_multiplicity(IntVector({2, -1, -1})),
              kostka_foulkes_charge(Partition({3, 0, 0}), Partition({1, 1, 1})));
}

TEST(GradedMultiplicity, InvalidWeights) {
    EXPECT_THROW(graded_multiplicity(IntVector({0, 1, -1})), InvalidInput);
    EXPECT_THROW(graded_multiplicity(IntVector({1, 0, 0})), InvalidInput);
}

TEST(GradedMultiplicity, ShiftIndependence) {
    const IntVector alpha({1, 0, -1});
    const Q m = graded_multiplicity(alpha);
    for (int k = 1; k <= 3; ++k) {
        const Partition flat = flat_partition(k, 3);
        const IntVector lam = alpha + IntVector(flat);
        EXPECT_EQ(kostka_foulkes_kostant(Partition({lam[0], lam[1], lam[2]}), flat), m) << k;
    }
}

TEST(GradedMultiplicityReport, RejectsSmallShift) {
    EXPECT_THROW(graded_multiplicity_report(IntVector({2, 0, -2}), 1), InvalidInput);
    const auto rep = graded_multiplicity_report(IntVector({2, 0, -2}), 2);
    EXPECT_EQ(rep.lambda, Partition({4, 2, 0}));
    EXPECT_TRUE(rep.routes_agree);
    EXPECT_TRUE(rep.theorem1_holds);
}

TEST(VerifyTheorem1, Examples) {
    const auto five = verify_theorem1(5, 3);
    EXPECT_EQ(five.size(), 84u);
    const auto it = std::find_if(five.begin(), five.end(),
                                 [](const auto& r) { return r.lambda == Partition({6, 4, 3, 1, 1}); });
    ASSERT_NE(it, five.end());
    EXPECT_EQ(it->gini, 13);
    EXPECT_EQ(it->degree, 13u);
    EXPECT_EQ(it->alpha, IntVector({3, 1, 0, -2, -2}));

    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= 2; ++k) {
            const auto reps = verify_theorem1(n, k);
            const auto flat = std::find_if(reps.begin(), reps.end(),
                                           [&](const auto& r) { return r.lambda == flat_partition(k, n); });
            ASSERT_NE(flat, reps.end());
            EXPECT_EQ(flat->gini, 0);
            EXPECT_EQ(flat->polynomial, Q::one());
            EXPECT_EQ(flat->degree, 0u);
        }

    const auto three = verify_theorem1(3, 1);
    const auto r210 = std::find_if(three.begin(), three.end(),
                                   [](const auto& r) { return r.lambda == Partition({2, 1, 0}); });
    ASSERT_NE(r210, three.end());
    EXPECT_EQ(r210->polynomial, Q({0, 1, 1}));
    EXPECT_EQ(r210->degree, 2u);
    EXPECT_EQ(r210->gini, 2);
}

TEST(VerifyTheorem1, EveryReportHoldsAndRoutesAgree) {
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k)
            for (const auto& r : verify_theorem1(n, k)) {
                EXPECT_TRUE(r.theorem1_holds) << r.lambda.to_string();
                EXPECT_TRUE(r.routes_agree) << r.lambda.to_string();
                EXPECT_FALSE(r.polynomial.is_zero());
                EXPECT_EQ(r.alpha + IntVector(flat_partition(k, n)), IntVector(r.lambda));
            }
}

TEST(VerifyTheorem1, ParallelMatchesSequential) {
    const auto seq = verify_theorem1(4, 3);
    const auto par = verify_theorem1(4, 3, {.workers = 4});
    ASSERT_EQ(seq.size(), par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        EXPECT_EQ(seq[i].lambda, par[i].lambda);
        EXPECT_EQ(seq[i].polynomial, par[i].polynomial);
    }
}

TEST(VerifyTheorem1, BadArguments) {
    EXPECT_THROW(verify_theorem1(1, 1), InvalidInput);
    EXPECT_THROW(verify_theorem1(3, 0), InvalidInput);
}

TEST(GradedMultiplicityReport, JsonShape) {
    const auto rep = graded_multiplicity_report(IntVector({1, 0, -1}), 1);
    const nlohmann::json j = rep;
    EXPECT_EQ(j.at("alpha"), nlohmann::json({1, 0, -1}));
    EXPECT_EQ(j.at("k"), 1);
    EXPECT_EQ(j.at("lambda"), nlohmann::json({2, 1, 0}));
    EXPECT_EQ(j.at("coefficients"), nlohmann::json({0, 1, 1}));
    EXPECT_EQ(j.at("degree"), 2);
    EXPECT_EQ(j.at("gini"), 2);
    EXPECT_EQ(j.at("theorem1_holds"), true);

    GradedMultiplicityReport zero;
    EXPECT_TRUE(nlohmann::json(zero).at("degree").is_null());
}
