#pragma once

#include <compare>
#include <ostream>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ginirep {

/// Weakly decreasing tuple of non-negative integers.
///
/// Partitions are stored zero-padded to an explicit length: a partition of
/// s "with at most n parts" is represented with exactly n entries, the
/// trailing ones zero.
class Partition {
public:
    Partition() = default;
    /// Throws InvalidInput unless `parts` is weakly decreasing and non-negative.
    explicit Partition(std::vector<int> parts);

    /// Pads `parts` with zeros up to `length`. Throws if it already has more
    /// than `length` nonzero parts.
    static Partition padded(std::vector<int> parts, std::size_t length);

    std::size_t size() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    std::span<const int> parts() const noexcept { return parts_; }
    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    std::int64_t total() const noexcept;
    /// Number of nonzero parts.
    std::size_t length() const noexcept;

    /// Same partition with zeros appended (or trailing zeros removed) to
    /// reach `n` entries.
    Partition with_size(std::size_t n) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Tuple of non-negative integers with no ordering constraint.
class Composition {
public:
    Composition() = default;
    /// Throws InvalidInput on a negative entry or an empty tuple.
    explicit Composition(std::vector<int> parts);
    Composition(const Partition& p);  // NOLINT: every partition is a composition

    std::size_t size() const noexcept { return parts_.size(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    std::span<const int> parts() const noexcept { return parts_; }
    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    std::int64_t total() const noexcept;
    std::string to_string() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

/// Letters in {0, ..., n-1}. Words of compositions are weakly increasing.
struct Word {
    std::vector<int> letters;

    std::size_t size() const noexcept { return letters.size(); }
    friend bool operator==(const Word&, const Word&) = default;
};

/// Integer tuple of fixed length, entries of any sign. Used for weights and
/// for the arguments of the Kostant partition function.
class IntVector {
public:
    IntVector() = default;
    explicit IntVector(std::vector<int> entries) : entries_(std::move(entries)) {}
    explicit IntVector(const Partition& p);

    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    int& operator[](std::size_t i) { return entries_[i]; }
    std::span<const int> entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    std::int64_t sum() const noexcept;
    bool is_zero() const noexcept;
    bool is_weakly_decreasing() const noexcept;
    std::string to_string() const;

    /// Entrywise arithmetic; throws InvalidInput on a length mismatch.
    friend IntVector operator+(const IntVector& a, const IntVector& b);
    friend IntVector operator-(const IntVector& a, const IntVector& b);

    friend bool operator==(const IntVector&, const IntVector&) = default;
    friend auto operator<=>(const IntVector&, const IntVector&) = default;

private:
    std::vector<int> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << c.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const IntVector& v) { return os << v.to_string(); }

/// (n-1, n-2, ..., 1, 0).
IntVector rho(std::size_t n);

/// Every partition of `total` with at most `max_parts` parts, zero-padded to
/// `max_parts` entries, in lexicographically decreasing order starting at
/// (total, 0, ..., 0).
std::vector<Partition> partitions_of(int total, int max_parts);

/// Dominance (majorization) order: every prefix sum of `mu` is at least the
/// matching prefix sum of `lambda`. Throws InvalidInput when the totals or
/// lengths differ.
bool dominates(const Partition& mu, const Partition& lambda);

/// Letter i-1 written mu_i times, for i = 1..n.
Word word_of(const Composition& mu);

/// Reads each word as the ascending row lengths of a left-justified diagram
/// and counts the cells in exactly one of the two diagrams.
std::int64_t diagram_symmetric_difference(const Word& a, const Word& b);

/// (k, k, ..., k) with n entries.
Partition flat_partition(int k, int n);

}  // namespace ginirep
