#include "ginirep/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ginirep/errors.hpp"

namespace ginirep {

namespace {

std::string join(std::span<const int> xs) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ',';
        os << xs[i];
    }
    os << ')';
    return os.str();
}

std::int64_t sum_of(std::span<const int> xs) {
    return std::accumulate(xs.begin(), xs.end(), std::int64_t{0});
}

void partitions_rec(int remaining, int max_part, std::size_t slot,
                    std::vector<int>& current, std::vector<Partition>& out) {
    if (slot == current.size()) {
        if (remaining == 0) out.emplace_back(current);
        return;
    }
    const auto slots_left = static_cast<std::int64_t>(current.size() - slot);
    // Largest part first, so the output is lexicographically decreasing.
    for (int part = std::min(remaining, max_part); part >= 0; --part) {
        if (static_cast<std::int64_t>(part) * slots_left < remaining) break;
        current[slot] = part;
        partitions_rec(remaining - part, part, slot + 1, current, out);
    }
    current[slot] = 0;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw InvalidInput("partition " + join(parts_) + " has a negative part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw InvalidInput("partition " + join(parts_) + " is not weakly decreasing");
    }
}

Partition Partition::padded(std::vector<int> parts, std::size_t length) {
    while (parts.size() > length && !parts.empty() && parts.back() == 0) parts.pop_back();
    if (parts.size() > length)
        throw InvalidInput("partition " + join(parts) + " has more than " +
                           std::to_string(length) + " parts");
    parts.resize(length, 0);
    return Partition(std::move(parts));
}

std::int64_t Partition::total() const noexcept { return sum_of(parts_); }

std::size_t Partition::length() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(parts_.begin(), parts_.end(), [](int p) { return p != 0; }));
}

Partition Partition::with_size(std::size_t n) const { return padded(parts_, n); }

std::string Partition::to_string() const { return join(parts_); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InvalidInput("a composition needs at least one part");
    if (std::any_of(parts_.begin(), parts_.end(), [](int p) { return p < 0; }))
        throw InvalidInput("composition " + join(parts_) + " has a negative part");
}

Composition::Composition(const Partition& p)
    : Composition(std::vector<int>(p.begin(), p.end())) {}

std::int64_t Composition::total() const noexcept { return sum_of(parts_); }

std::string Composition::to_string() const { return join(parts_); }

IntVector::IntVector(const Partition& p) : entries_(p.begin(), p.end()) {}

std::int64_t IntVector::sum() const noexcept { return sum_of(entries_); }

bool IntVector::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

bool IntVector::is_weakly_decreasing() const noexcept {
    return std::is_sorted(entries_.begin(), entries_.end(), std::greater<>{});
}

std::string IntVector::to_string() const { return join(entries_); }

IntVector operator+(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw InvalidInput("IntVector length mismatch");
    IntVector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.entries_[i] += b.entries_[i];
    return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw InvalidInput("IntVector length mismatch");
    IntVector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.entries_[i] -= b.entries_[i];
    return r;
}

IntVector rho(std::size_t n) {
    std::vector<int> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<int>(n - 1 - i);
    return IntVector(std::move(r));
}

std::vector<Partition> partitions_of(int total, int max_parts) {
    if (total < 0) throw InvalidInput("partitions_of: total must be non-negative");
    if (max_parts < 1) throw InvalidInput("partitions_of: max_parts must be positive");
    std::vector<Partition> out;
    std::vector<int> current(static_cast<std::size_t>(max_parts), 0);
    partitions_rec(total, total, 0, current, out);
    return out;
}

bool dominates(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size())
        throw InvalidInput("dominates: " + mu.to_string() + " and " + lambda.to_string() +
                           " have different lengths");
    if (mu.total() != lambda.total())
        throw InvalidInput("dominates: " + mu.to_string() + " and " + lambda.to_string() +
                           " have different totals");
    std::int64_t pm = 0;
    std::int64_t pl = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        pm += mu[i];
        pl += lambda[i];
        if (pm < pl) return false;
    }
    return true;
}

Word word_of(const Composition& mu) {
    Word w;
    w.letters.reserve(static_cast<std::size_t>(mu.total()));
    for (std::size_t i = 0; i < mu.size(); ++i)
        w.letters.insert(w.letters.end(), static_cast<std::size_t>(mu[i]), static_cast<int>(i));
    return w;
}

// Both diagrams have the same number of rows, and row r of one lines up with
// row r of the other (rows fill bottom-up in ascending order). Cells in row r
// are columns [0, len), so the row contributes |a_r - b_r| to the symmetric
// difference.
std::int64_t diagram_symmetric_difference(const Word& a, const Word& b) {
    if (a.size() != b.size())
        throw InvalidInput("diagram_symmetric_difference: words have different lengths");
    if (!std::is_sorted(a.letters.begin(), a.letters.end()) ||
        !std::is_sorted(b.letters.begin(), b.letters.end()))
        throw InvalidInput("diagram_symmetric_difference: words must be weakly increasing");
    std::int64_t d = 0;
    for (std::size_t r = 0; r < a.size(); ++r) {
        if (a.letters[r] < 0 || b.letters[r] < 0)
            throw InvalidInput("diagram_symmetric_difference: negative letter");
        d += std::abs(static_cast<std::int64_t>(a.letters[r]) - b.letters[r]);
    }
    return d;
}

Partition flat_partition(int k, int n) {
    if (k < 0) throw InvalidInput("flat_partition: k must be non-negative");
    if (n < 1) throw InvalidInput("flat_partition: n must be positive");
    return Partition(std::vector<int>(static_cast<std::size_t>(n), k));
}

}  // namespace ginirep
