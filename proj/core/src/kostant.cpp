#include "ginirep/kostant.hpp"

#include <algorithm>
#include <numeric>

#include "ginirep/errors.hpp"

namespace ginirep {

IntVector PositiveRoot::as_vector(std::size_t n) const {
    std::vector<int> v(n, 0);
    v[static_cast<std::size_t>(i)] = 1;
    v[static_cast<std::size_t>(j)] = -1;
    return IntVector(std::move(v));
}

RootSystemA::RootSystemA(int n) : n_(n) {
    if (n < 1) throw InvalidInput("RootSystemA: n must be positive");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) roots_.push_back({i, j});
}

std::vector<IntVector> RootSystemA::positive_roots() const {
    std::vector<IntVector> out;
    out.reserve(roots_.size());
    for (const auto& r : roots_) out.push_back(r.as_vector(static_cast<std::size_t>(n_)));
    return out;
}

std::size_t KostantEvaluator::KeyHash::operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : v) {
        h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
        h *= 0x100000001b3ULL;
    }
    return h;
}

KostantEvaluator::KostantEvaluator(int n, Options options)
    : system_(n), options_(options), cache_(system_.roots().size()) {}

void KostantEvaluator::clear_cache() {
    for (auto& c : cache_) c.clear();
}

std::size_t KostantEvaluator::cache_size() const noexcept {
    std::size_t s = 0;
    for (const auto& c : cache_) s += c.size();
    return s;
}

QPolynomial KostantEvaluator::partition_q(const IntVector& alpha) {
    if (alpha.size() != static_cast<std::size_t>(n()))
        throw InvalidInput("kostant: " + alpha.to_string() + " does not have " +
                           std::to_string(n()) + " entries");
    if (alpha.sum() != 0) return QPolynomial::zero();
    std::vector<int> a(alpha.begin(), alpha.end());
    return eval(a, 0);
}

std::int64_t KostantEvaluator::partition(const IntVector& alpha) {
    return partition_q(alpha).eval_at_one();
}

// Roots from `root_index` on all have first coordinate >= roots[root_index].i,
// so everything left of that coordinate must already be zero. Every positive
// root has non-negative prefix sums, hence so must alpha.
bool KostantEvaluator::feasible(const std::vector<int>& alpha, std::size_t root_index) const {
    const auto& roots = system_.roots();
    const std::size_t first =
        root_index < roots.size() ? static_cast<std::size_t>(roots[root_index].i) : alpha.size();
    std::int64_t prefix = 0;
    for (std::size_t a = 0; a < alpha.size(); ++a) {
        if (a < first && alpha[a] != 0) return false;
        prefix += alpha[a];
        if (prefix < 0) return false;
        if (options_.entry_bound && std::abs(alpha[a]) > *options_.entry_bound) return false;
    }
    return prefix == 0;
}

QPolynomial KostantEvaluator::eval(std::vector<int>& alpha, std::size_t root_index) {
    const auto& roots = system_.roots();
    if (!feasible(alpha, root_index)) return QPolynomial::zero();
    if (root_index == roots.size()) return QPolynomial::one();  // feasible => alpha == 0

    if (options_.memoize) {
        auto& cache = cache_[root_index];
        if (auto it = cache.find(alpha); it != cache.end()) return it->second;
    }

    const auto [i, j] = roots[root_index];
    const auto ui = static_cast<std::size_t>(i);
    const auto uj = static_cast<std::size_t>(j);
    const int available = alpha[ui];
    // The last root starting at i must clear coordinate i.
    const bool last_for_i = j == n() - 1;
    const int lo = last_for_i ? available : 0;

    QPolynomial result;
    for (int c = lo; c <= available; ++c) {
        alpha[ui] -= c;
        alpha[uj] += c;
        QPolynomial sub = eval(alpha, root_index + 1);
        alpha[ui] += c;
        alpha[uj] -= c;
        if (!sub.is_zero()) result += sub.scale_shift(1, static_cast<std::size_t>(c));
    }

    if (options_.memoize) cache_[root_index].emplace(alpha, result);
    return result;
}

int safe_entry_bound(const IntVector& alpha) {
    std::int64_t pos = 0;
    int most_negative = 0;
    for (int x : alpha) {
        if (x > 0) pos += x;
        most_negative = std::min(most_negative, x);
    }
    return static_cast<int>(std::max<std::int64_t>(pos, -static_cast<std::int64_t>(most_negative)));
}

QPolynomial kostant_partition_q(const IntVector& alpha, int n) {
    KostantEvaluator ev(n);
    return ev.partition_q(alpha);
}

std::int64_t kostant_partition(const IntVector& alpha, int n) {
    return kostant_partition_q(alpha, n).eval_at_one();
}

std::vector<SignedPermutation> signed_permutations(int n) {
    if (n < 1) throw InvalidInput("signed_permutations: n must be positive");
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<SignedPermutation> out;
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 1; b < p.size(); ++b)
                if (p[a] > p[b]) ++inversions;
        out.push_back({p, inversions % 2 == 0 ? 1 : -1});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

IntVector permute(const IntVector& v, const SignedPermutation& w) {
    if (v.size() != w.images.size()) throw InvalidInput("permute: length mismatch");
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = v[static_cast<std::size_t>(w.images[i])];
    return IntVector(std::move(out));
}

}  // namespace ginirep
