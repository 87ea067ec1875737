#pragma once

#include <cstddef>
#include <cstdint>

#include "ginirep/partition.hpp"

namespace ginirep {

struct EmdResult {
    Composition mu;
    Composition lambda;
    /// Least number of single-unit moves between adjacent piles.
    std::int64_t distance = 0;
};

/// One-dimensional earth mover's distance, computed as the symmetric
/// difference of the Young diagrams of word_of(mu) and word_of(lambda).
/// Throws InvalidInput unless the compositions have equal totals and lengths.
EmdResult emd(const Composition& mu, const Composition& lambda);

/// b(lambda) - b(mu) for partitions with mu dominating lambda: the number of
/// moves needed to flatten mu into lambda. Throws InvalidInput when mu does
/// not dominate lambda.
std::int64_t emd_majorized(const Partition& mu, const Partition& lambda);

struct BfsLimits {
    /// Refuse (ResourceLimit) when C(s+n-1, n-1) exceeds this.
    std::size_t max_states = 5'000'000;
    /// Search from both endpoints when the state space exceeds this.
    std::size_t bidirectional_above = 100'000;
};

/// Number of compositions of s into n parts, saturating at SIZE_MAX.
std::size_t composition_count(std::int64_t s, std::size_t n);

/// Shortest move count by breadth-first search over the graph whose vertices
/// are compositions of s into n parts and whose edges move one unit to a
/// neighbouring pile. Ground truth for emd() on small inputs.
std::int64_t emd_bfs_oracle(const Composition& mu, const Composition& lambda, BfsLimits limits = {});

}  // namespace ginirep
