#include "ginirep/tableau.hpp"

#include <algorithm>
#include <sstream>

#include "ginirep/errors.hpp"

namespace ginirep {

std::vector<int> Tableau::shape() const {
    std::vector<int> s;
    s.reserve(rows_.size());
    for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
    return s;
}

std::vector<int> Tableau::content(std::size_t letters) const {
    std::vector<int> c(letters, 0);
    for (const auto& r : rows_)
        for (int x : r)
            if (x >= 1 && static_cast<std::size_t>(x) <= letters) ++c[static_cast<std::size_t>(x - 1)];
    return c;
}

bool Tableau::is_semistandard() const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (r > 0 && row.size() > rows_[r - 1].size()) return false;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1) return false;
            if (c > 0 && row[c - 1] > row[c]) return false;
            if (r > 0 && rows_[r - 1][c] >= row[c]) return false;
        }
    }
    return true;
}

std::string Tableau::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) os << ',';
        os << '[';
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) os << ',';
            os << rows_[r][c];
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

namespace {

class StripFiller {
public:
    StripFiller(const Partition& shape, const Composition& weight,
                const std::function<void(const Tableau&)>& visit)
        : shape_(shape), weight_(weight), visit_(visit), rows_(shape.size()) {
        for (std::size_t r = 0; r < shape.size(); ++r)
            rows_[r].reserve(static_cast<std::size_t>(shape[r]));
    }

    void run() { next_letter(0); }

private:
    void next_letter(std::size_t letter) {
        if (letter == weight_.size()) {
            visit_(Tableau(rows_));
            return;
        }
        const std::vector<std::size_t> before = filled_lengths();
        strip(letter, 0, weight_[letter], before);
    }

    std::vector<std::size_t> filled_lengths() const {
        std::vector<std::size_t> f(rows_.size());
        for (std::size_t r = 0; r < rows_.size(); ++r) f[r] = rows_[r].size();
        return f;
    }

    // Distribute `remaining` copies of letter+1 over rows row.., at most one
    // per column (cells in row r must sit under cells filled before this
    // letter started).
    void strip(std::size_t letter, std::size_t row, int remaining, const std::vector<std::size_t>& before) {
        if (remaining == 0) {
            next_letter(letter + 1);
            return;
        }
        if (row == rows_.size()) return;

        const auto cap_shape = static_cast<std::size_t>(shape_[row]);
        const std::size_t cap_above = row == 0 ? cap_shape : before[row - 1];
        const std::size_t cap = std::min(cap_shape, cap_above);
        const std::size_t room = cap > before[row] ? cap - before[row] : 0;

        // Capacity left below this row bounds how few we may place here.
        std::size_t below = 0;
        for (std::size_t r = row + 1; r < rows_.size(); ++r) {
            const auto cs = static_cast<std::size_t>(shape_[r]);
            const std::size_t c = std::min(cs, before[r - 1]);
            below += c > before[r] ? c - before[r] : 0;
        }

        const auto rem = static_cast<std::size_t>(remaining);
        const std::size_t most = std::min(room, rem);
        const std::size_t least = rem > below ? rem - below : 0;
        for (std::size_t take = most + 1; take-- > least;) {
            rows_[row].insert(rows_[row].end(), take, static_cast<int>(letter + 1));
            strip(letter, row + 1, remaining - static_cast<int>(take), before);
            rows_[row].resize(before[row]);
        }
    }

    const Partition& shape_;
    const Composition& weight_;
    const std::function<void(const Tableau&)>& visit_;
    std::vector<std::vector<int>> rows_;
};

}  // namespace

void for_each_ssyt(const Partition& shape, const Composition& weight,
                   const std::function<void(const Tableau&)>& visit) {
    if (shape.total() != weight.total())
        throw InvalidInput("ssyt: shape " + shape.to_string() + " and weight " + weight.to_string() +
                           " have different totals");
    StripFiller(shape, weight, visit).run();
}

std::vector<Tableau> ssyt_enumerate(const Partition& shape, const Composition& weight) {
    std::vector<Tableau> out;
    for_each_ssyt(shape, weight, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

std::int64_t kostka_number(const Partition& lambda, const Composition& mu) {
    std::int64_t count = 0;
    for_each_ssyt(lambda, mu, [&](const Tableau&) { ++count; });
    return count;
}

std::vector<int> reading_word(const Tableau& t) {
    std::vector<int> w;
    for (auto r = t.rows().rbegin(); r != t.rows().rend(); ++r) w.insert(w.end(), r->begin(), r->end());
    return w;
}

std::int64_t charge(std::span<const int> word, const Partition& weight) {
    const std::size_t letters = weight.length();
    std::vector<int> seen(weight.size(), 0);
    for (int x : word) {
        if (x < 1 || static_cast<std::size_t>(x) > letters)
            throw InvalidInput("charge: letter " + std::to_string(x) + " outside 1.." +
                               std::to_string(letters));
        ++seen[static_cast<std::size_t>(x - 1)];
    }
    for (std::size_t i = 0; i < weight.size(); ++i)
        if (seen[i] != weight[i])
            throw InvalidInput("charge: word content does not match weight " + weight.to_string());

    const std::size_t len = word.size();
    std::vector<bool> used(len, false);
    std::vector<int> remaining(weight.begin(), weight.end());
    std::int64_t total = 0;
    std::size_t left = len;

    while (left > 0) {
        // With partition content the letters still present are exactly 1..top.
        std::size_t top = 0;
        while (top < remaining.size() && remaining[top] > 0) ++top;

        // Rightmost unused 1.
        std::size_t pos = len;
        for (std::size_t p = len; p-- > 0;)
            if (!used[p] && word[p] == 1) {
                pos = p;
                break;
            }
        used[pos] = true;
        --remaining[0];
        --left;

        std::int64_t index = 0;
        for (std::size_t letter = 2; letter <= top; ++letter) {
            // Scan leftward from pos, wrapping to the right end once.
            std::size_t p = pos;
            bool wrapped = false;
            while (true) {
                if (p == 0) {
                    p = len;
                    wrapped = true;
                }
                --p;
                if (!used[p] && word[p] == static_cast<int>(letter)) break;
            }
            if (wrapped) ++index;
            total += index;
            used[p] = true;
            pos = p;
            --remaining[letter - 1];
            --left;
        }
    }
    return total;
}

}  // namespace ginirep
