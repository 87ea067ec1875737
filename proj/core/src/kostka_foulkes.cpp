#include "ginirep/kostka_foulkes.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "ginirep/errors.hpp"
#include "ginirep/gini.hpp"
#include "ginirep/tableau.hpp"

namespace ginirep {

namespace {

void check_totals(const Partition& lambda, const Partition& mu) {
    if (lambda.total() != mu.total())
        throw InvalidInput("kostka-foulkes: " + lambda.to_string() + " and " + mu.to_string() +
                           " have different totals");
}

// Sum of signed permutations of `top`, shifted by `bottom`:
//   sum_w sign(w) P_q(w(top) - bottom).
QPolynomial alternating_sum(const IntVector& top, const IntVector& bottom, KostantEvaluator& ev) {
    QPolynomial acc;
    for (const auto& w : signed_permutations(static_cast<int>(top.size()))) {
        const QPolynomial term = ev.partition_q(permute(top, w) - bottom);
        if (!term.is_zero()) acc += term.scale_shift(w.sign, 0);
    }
    return acc;
}

void check_highest_weight(const IntVector& alpha) {
    if (alpha.size() == 0) throw InvalidInput("graded_multiplicity: empty weight");
    if (!alpha.is_weakly_decreasing())
        throw InvalidInput("graded_multiplicity: " + alpha.to_string() + " is not weakly decreasing");
    if (alpha.sum() != 0)
        throw InvalidInput("graded_multiplicity: " + alpha.to_string() + " does not sum to zero");
}

}  // namespace

KostantEvaluator make_sweep_evaluator(int n, std::int64_t total) {
    // Every argument w(x) - y has entries bounded by sum|x| + sum|y|, with x, y
    // of the form partition + rho.
    const std::int64_t rho_sum = static_cast<std::int64_t>(n) * (n - 1) / 2;
    const std::int64_t bound = 2 * (total + rho_sum);
    KostantEvaluator::Options opts;
    opts.entry_bound = static_cast<int>(std::min<std::int64_t>(bound, 1 << 30));
    return KostantEvaluator(n, opts);
}

QPolynomial kostka_foulkes_charge(const Partition& lambda, const Partition& mu) {
    check_totals(lambda, mu);
    const std::size_t letters = mu.length();
    if (letters == 0) return QPolynomial::one();  // both empty
    const Partition weight = mu.with_size(letters);
    QPolynomial acc;
    for_each_ssyt(lambda, Composition(weight), [&](const Tableau& t) {
        const auto word = reading_word(t);
        acc += QPolynomial::monomial(1, static_cast<std::size_t>(charge(word, weight)));
    });
    return acc;
}

QPolynomial kostka_foulkes_kostant(const Partition& lambda, const Partition& mu) {
    const std::size_t n = std::max<std::size_t>({lambda.size(), mu.size(), 1});
    KostantEvaluator ev = make_sweep_evaluator(static_cast<int>(n), lambda.total());
    return kostka_foulkes_kostant(lambda, mu, ev);
}

QPolynomial kostka_foulkes_kostant(const Partition& lambda, const Partition& mu, KostantEvaluator& ev) {
    check_totals(lambda, mu);
    const auto n = static_cast<std::size_t>(ev.n());
    if (lambda.length() > n || mu.length() > n)
        throw InvalidInput("kostka-foulkes: evaluator rank too small for " + lambda.to_string() +
                           ", " + mu.to_string());
    const IntVector r = rho(n);
    return alternating_sum(IntVector(lambda.with_size(n)) + r, IntVector(mu.with_size(n)) + r, ev);
}

QPolynomial graded_multiplicity(const IntVector& alpha) {
    check_highest_weight(alpha);
    const auto n = static_cast<int>(alpha.size());
    KostantEvaluator::Options opts;
    std::int64_t bound = 0;
    for (int a : alpha) bound += std::abs(a);
    opts.entry_bound = static_cast<int>(2 * (bound + static_cast<std::int64_t>(n) * (n - 1)));
    KostantEvaluator ev(n, opts);
    return graded_multiplicity(alpha, ev);
}

QPolynomial graded_multiplicity(const IntVector& alpha, KostantEvaluator& ev) {
    check_highest_weight(alpha);
    if (alpha.size() != static_cast<std::size_t>(ev.n()))
        throw InvalidInput("graded_multiplicity: evaluator rank does not match " + alpha.to_string());
    const IntVector r = rho(alpha.size());
    return alternating_sum(alpha + r, r, ev);
}

GradedMultiplicityReport graded_multiplicity_report(const IntVector& alpha, int k, KostantEvaluator& ev) {
    check_highest_weight(alpha);
    const int n = static_cast<int>(alpha.size());
    if (k < -alpha[alpha.size() - 1])
        throw InvalidInput("graded_multiplicity: k = " + std::to_string(k) + " is below |alpha_n| for " +
                           alpha.to_string());

    GradedMultiplicityReport rep;
    rep.alpha = alpha;
    rep.k = k;
    const Partition flat = flat_partition(k, n);
    const IntVector shifted = alpha + IntVector(flat);
    rep.lambda = Partition(std::vector<int>(shifted.begin(), shifted.end()));
    rep.polynomial = kostka_foulkes_kostant(rep.lambda, flat, ev);
    rep.degree = rep.polynomial.degree();
    rep.gini = gini_general(rep.lambda, n, k);
    rep.theorem1_holds = !rep.degree || static_cast<std::int64_t>(*rep.degree) == rep.gini;
    rep.routes_agree = graded_multiplicity(alpha, ev) == rep.polynomial;
    return rep;
}

GradedMultiplicityReport graded_multiplicity_report(const IntVector& alpha, int k) {
    const auto n = static_cast<int>(std::max<std::size_t>(alpha.size(), 1));
    KostantEvaluator ev = make_sweep_evaluator(n, static_cast<std::int64_t>(n) * std::max(k, 0));
    return graded_multiplicity_report(alpha, k, ev);
}

std::vector<GradedMultiplicityReport> verify_theorem1(int n, int k, VerifyOptions options) {
    if (n < 2) throw InvalidInput("verify_theorem1: n must be at least 2");
    if (k < 1) throw InvalidInput("verify_theorem1: k must be at least 1");

    const auto lambdas = partitions_of(n * k, n);
    const IntVector flat(flat_partition(k, n));
    std::vector<GradedMultiplicityReport> reports(lambdas.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        KostantEvaluator ev = make_sweep_evaluator(n, static_cast<std::int64_t>(n) * k);
        try {
            for (std::size_t idx; (idx = next.fetch_add(1)) < lambdas.size();)
                reports[idx] = graded_multiplicity_report(IntVector(lambdas[idx]) - flat, k, ev);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = lambdas.size();
        }
    };

    const unsigned workers = std::clamp<unsigned>(options.workers, 1, static_cast<unsigned>(lambdas.size()));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
    return reports;
}

}  // namespace ginirep
