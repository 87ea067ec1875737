#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ginirep/partition.hpp"

namespace ginirep {

/// A filling of a Young diagram (English convention: row 0 on top) with
/// letters 1..n. Rows of length zero are kept so that rows().size() equals
/// the length of the shape.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {}

    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    std::vector<int> shape() const;
    /// Multiplicity of each letter 1..letters.
    std::vector<int> content(std::size_t letters) const;

    /// Rows weakly increase, columns strictly increase, letters positive and
    /// row lengths weakly decrease.
    bool is_semistandard() const;

    std::string to_string() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// Calls `visit` once for every semistandard tableau of the given shape and
/// content (letter i+1 used weight[i] times). Tableaux are built one letter at
/// a time, each letter added as a horizontal strip. Throws InvalidInput when
/// the totals differ.
void for_each_ssyt(const Partition& shape, const Composition& weight,
                   const std::function<void(const Tableau&)>& visit);

std::vector<Tableau> ssyt_enumerate(const Partition& shape, const Composition& weight);

/// Number of SSYT of the given shape and content.
std::int64_t kostka_number(const Partition& lambda, const Composition& mu);

/// Rows read left to right, from the bottom row up to the top row.
std::vector<int> reading_word(const Tableau& t);

/// Lascoux-Schutzenberger charge of a word whose content is the partition
/// `weight` (letter i+1 occurs weight[i] times).
///
/// The word is split into standard subwords: starting from the rightmost
/// unused 1, scan leftward for an unused 2, wrapping around to the right end
/// when the left end is reached, then for 3, and so on. Inside a subword
/// letter 1 gets index 0 and letter r+1 gets index(r) + 1 when it sits to the
/// right of r, index(r) otherwise. Charge is the sum of all indices.
std::int64_t charge(std::span<const int> word, const Partition& weight);

}  // namespace ginirep
