#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ginirep/partition.hpp"

namespace ginirep {

/// Weighted total b(lambda) = sum over i of (i-1) * lambda_i, 1-based i.
std::int64_t weighted_total(const Partition& lambda);

/// Discrete Gini index of a partition of n with n (zero-padded) entries:
/// C(n,2) - b(lambda). Throws InvalidInput when total != length.
std::int64_t gini(const Partition& lambda);

/// Generalized discrete Gini index g_{nk,n}(lambda) = b((k^n)) - b(lambda)
/// for a partition of n*k stored with exactly n entries. Values are exact
/// lattice areas, not normalized ratios.
std::int64_t gini_general(const Partition& lambda, int n, int k);

struct LorenzSample {
    int j;
    std::int64_t value;

    friend bool operator==(const LorenzSample&, const LorenzSample&) = default;
};

/// Samples of the discrete Lorenz curve at j = 0..n. The curve is constant
/// on each interval (j-1, j], so these samples determine it.
class LorenzCurve {
public:
    explicit LorenzCurve(std::vector<LorenzSample> samples) : samples_(std::move(samples)) {}

    const std::vector<LorenzSample>& samples() const noexcept { return samples_; }
    std::size_t n() const noexcept { return samples_.empty() ? 0 : samples_.size() - 1; }
    std::int64_t at(int j) const { return samples_.at(static_cast<std::size_t>(j)).value; }

    /// `j,value` rows, optionally preceded by a `j,value` header line.
    std::string to_csv(bool header = false) const;

    friend bool operator==(const LorenzCurve&, const LorenzCurve&) = default;

private:
    std::vector<LorenzSample> samples_;
};

/// L(j) = cumulative total of the j smallest parts.
LorenzCurve lorenz_curve(const Partition& lambda);

/// Area between the line of equality (slope k) and the Lorenz curve,
/// summed step by step. Agrees with gini_general.
std::int64_t gini_via_area(const Partition& lambda, int n, int k);

}  // namespace ginirep
