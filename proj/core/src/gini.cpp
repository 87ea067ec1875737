#include "ginirep/gini.hpp"

#include <sstream>

#include "ginirep/errors.hpp"

namespace ginirep {

namespace {

void check_nk(const Partition& lambda, int n, int k) {
    if (n < 1) throw InvalidInput("gini: n must be positive");
    if (k < 0) throw InvalidInput("gini: k must be non-negative");
    if (lambda.size() != static_cast<std::size_t>(n))
        throw InvalidInput("gini: " + lambda.to_string() + " does not have " +
                           std::to_string(n) + " entries");
    if (lambda.total() != static_cast<std::int64_t>(n) * k)
        throw InvalidInput("gini: " + lambda.to_string() + " is not a partition of " +
                           std::to_string(static_cast<std::int64_t>(n) * k));
}

}  // namespace

std::int64_t weighted_total(const Partition& lambda) {
    std::int64_t b = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        b += static_cast<std::int64_t>(i) * lambda[i];
    return b;
}

std::int64_t gini(const Partition& lambda) {
    const auto n = static_cast<std::int64_t>(lambda.size());
    if (lambda.total() != n)
        throw InvalidInput("gini: " + lambda.to_string() + " must have total equal to its length");
    return n * (n - 1) / 2 - weighted_total(lambda);
}

std::int64_t gini_general(const Partition& lambda, int n, int k) {
    check_nk(lambda, n, k);
    return weighted_total(flat_partition(k, n)) - weighted_total(lambda);
}

LorenzCurve lorenz_curve(const Partition& lambda) {
    std::vector<LorenzSample> s;
    s.reserve(lambda.size() + 1);
    s.push_back({0, 0});
    std::int64_t acc = 0;
    for (std::size_t j = 1; j <= lambda.size(); ++j) {
        acc += lambda[lambda.size() - j];
        s.push_back({static_cast<int>(j), acc});
    }
    return LorenzCurve(std::move(s));
}

std::int64_t gini_via_area(const Partition& lambda, int n, int k) {
    check_nk(lambda, n, k);
    const LorenzCurve curve = lorenz_curve(lambda);
    std::int64_t area = 0;
    for (int j = 1; j <= n; ++j) area += static_cast<std::int64_t>(j) * k - curve.at(j);
    return area;
}

std::string LorenzCurve::to_csv(bool header) const {
    std::ostringstream os;
    if (header) os << "j,value\n";
    for (const auto& s : samples_) os << s.j << ',' << s.value << '\n';
    return os.str();
}

}  // namespace ginirep
