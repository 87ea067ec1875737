#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ginirep/kostant.hpp"
#include "ginirep/partition.hpp"
#include "ginirep/qpoly.hpp"

namespace ginirep {

/// K_{lambda,mu}(q) as the charge generating function over SSYT(lambda, mu),
/// each tableau contributing q^charge(reading word). mu must be a partition.
/// Throws InvalidInput when the totals differ.
QPolynomial kostka_foulkes_charge(const Partition& lambda, const Partition& mu);

/// K_{lambda,mu}(q) as the alternating sum
///   sum over w in S_n of sign(w) * P_q(w(lambda + rho) - (mu + rho)),
/// with both partitions padded to a common length n.
QPolynomial kostka_foulkes_kostant(const Partition& lambda, const Partition& mu);
/// Same, reusing a caller-owned evaluator (its n must match the padded length).
QPolynomial kostka_foulkes_kostant(const Partition& lambda, const Partition& mu, KostantEvaluator& ev);

/// Graded multiplicity m_alpha(q) of the irrep with highest weight alpha in
/// the harmonic polynomials:
///   sum over w in S_n of sign(w) * P_q(w(alpha + rho) - rho).
/// Throws InvalidInput unless alpha is weakly decreasing with zero sum.
///
/// Note: m_0(q) comes out as 1 (the trivial representation in degree 0),
/// which is also K_{(k^n),(k^n)}(q).
QPolynomial graded_multiplicity(const IntVector& alpha);
QPolynomial graded_multiplicity(const IntVector& alpha, KostantEvaluator& ev);

struct GradedMultiplicityReport {
    IntVector alpha;
    int k = 0;
    Partition lambda;  // alpha + (k^n)
    QPolynomial polynomial;  // K_{lambda,(k^n)}(q)
    std::optional<std::size_t> degree;
    std::int64_t gini = 0;  // g_{nk,n}(lambda)
    /// degree == gini; vacuously true for a zero polynomial.
    bool theorem1_holds = false;
    /// The direct alternating sum for m_alpha(q) equals K_{lambda,(k^n)}(q).
    bool routes_agree = false;
};

/// Builds the report for a weakly decreasing, zero-sum alpha and a shift
/// k >= |alpha_n|. Throws InvalidInput otherwise.
GradedMultiplicityReport graded_multiplicity_report(const IntVector& alpha, int k, KostantEvaluator& ev);
GradedMultiplicityReport graded_multiplicity_report(const IntVector& alpha, int k);

struct VerifyOptions {
    /// Reports for distinct lambda are computed on this many threads, each
    /// with its own Kostant evaluator. Output order does not depend on it.
    unsigned workers = 1;
};

/// One report per partition lambda of n*k with at most n parts, in the order
/// of partitions_of(n*k, n). Requires n >= 2 and k >= 1.
std::vector<GradedMultiplicityReport> verify_theorem1(int n, int k, VerifyOptions options = {});

/// Evaluator sized for every Kostant argument met while computing
/// K_{lambda,mu}(q) for partitions of at most `total` into n parts.
KostantEvaluator make_sweep_evaluator(int n, std::int64_t total);

}  // namespace ginirep
