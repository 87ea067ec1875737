#include "ginirep/emd.hpp"

#include <limits>
#include <unordered_map>
#include <vector>

#include "ginirep/errors.hpp"
#include "ginirep/gini.hpp"

namespace ginirep {

namespace {

void check_pair(const Composition& mu, const Composition& lambda) {
    if (mu.size() != lambda.size())
        throw InvalidInput("emd: " + mu.to_string() + " and " + lambda.to_string() +
                           " have different numbers of parts");
    if (mu.total() != lambda.total())
        throw InvalidInput("emd: " + mu.to_string() + " and " + lambda.to_string() +
                           " have different totals");
}

using State = std::vector<int>;

struct StateHash {
    std::size_t operator()(const State& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int x : v) {
            h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};

using DistanceMap = std::unordered_map<State, std::int64_t, StateHash>;

template <typename F>
void for_each_neighbour(State& s, F&& f) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 0) continue;
        if (i > 0) {
            --s[i];
            ++s[i - 1];
            f(s);
            ++s[i];
            --s[i - 1];
        }
        if (i + 1 < s.size()) {
            --s[i];
            ++s[i + 1];
            f(s);
            ++s[i];
            --s[i + 1];
        }
    }
}

std::int64_t plain_bfs(const State& from, const State& to) {
    if (from == to) return 0;
    DistanceMap dist{{from, 0}};
    std::vector<State> frontier{from};
    for (std::int64_t depth = 1; !frontier.empty(); ++depth) {
        std::vector<State> next;
        for (State s : frontier) {
            bool found = false;
            for_each_neighbour(s, [&](const State& nb) {
                if (found || dist.contains(nb)) return;
                if (nb == to) found = true;
                dist.emplace(nb, depth);
                next.push_back(nb);
            });
            if (found) return depth;
        }
        frontier = std::move(next);
    }
    throw std::logic_error("emd_bfs_oracle: target unreachable");
}

// Expands one full level of `frontier`; returns the meeting distance if the
// other side has already seen a new state.
std::int64_t expand_level(std::vector<State>& frontier, DistanceMap& mine, const DistanceMap& other) {
    std::int64_t best = -1;
    std::vector<State> next;
    for (State s : frontier) {
        const std::int64_t d = mine.at(s) + 1;
        for_each_neighbour(s, [&](const State& nb) {
            if (mine.contains(nb)) return;
            mine.emplace(nb, d);
            next.push_back(nb);
            if (auto it = other.find(nb); it != other.end()) {
                const std::int64_t total = d + it->second;
                if (best < 0 || total < best) best = total;
            }
        });
    }
    frontier = std::move(next);
    return best;
}

std::int64_t bidirectional_bfs(const State& from, const State& to) {
    if (from == to) return 0;
    DistanceMap dist_a{{from, 0}};
    DistanceMap dist_b{{to, 0}};
    std::vector<State> front_a{from};
    std::vector<State> front_b{to};
    while (!front_a.empty() && !front_b.empty()) {
        // Completing a whole level before stopping keeps the answer exact.
        const bool grow_a = front_a.size() <= front_b.size();
        const std::int64_t met = grow_a ? expand_level(front_a, dist_a, dist_b)
                                        : expand_level(front_b, dist_b, dist_a);
        if (met >= 0) return met;
    }
    throw std::logic_error("emd_bfs_oracle: target unreachable");
}

}  // namespace

EmdResult emd(const Composition& mu, const Composition& lambda) {
    check_pair(mu, lambda);
    return {mu, lambda, diagram_symmetric_difference(word_of(mu), word_of(lambda))};
}

std::int64_t emd_majorized(const Partition& mu, const Partition& lambda) {
    if (!dominates(mu, lambda))
        throw InvalidInput("emd_majorized: " + mu.to_string() + " does not dominate " + lambda.to_string());
    return weighted_total(lambda) - weighted_total(mu);
}

std::size_t composition_count(std::int64_t s, std::size_t n) {
    if (n == 0) return s == 0 ? 1 : 0;
    // C(s + n - 1, n - 1), built as a running product of exact binomials.
    constexpr auto cap = std::numeric_limits<std::size_t>::max();
    std::size_t c = 1;
    for (std::size_t i = 1; i < n; ++i) {
        const auto top = static_cast<std::size_t>(s) + i;
        std::size_t product;
        if (__builtin_mul_overflow(c, top, &product)) return cap;
        c = product / i;
    }
    return c;
}

std::int64_t emd_bfs_oracle(const Composition& mu, const Composition& lambda, BfsLimits limits) {
    check_pair(mu, lambda);
    const std::size_t states = composition_count(mu.total(), mu.size());
    if (states > limits.max_states)
        throw ResourceLimit("emd_bfs_oracle: " + std::to_string(states) + " states exceeds the limit of " +
                            std::to_string(limits.max_states));
    const State from(mu.begin(), mu.end());
    const State to(lambda.begin(), lambda.end());
    return states > limits.bidirectional_above ? bidirectional_bfs(from, to) : plain_bfs(from, to);
}

}  // namespace ginirep
