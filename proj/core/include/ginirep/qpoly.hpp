#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace ginirep {

/// Univariate polynomial in q with exact 64-bit integer coefficients.
///
/// Always canonical: the highest stored coefficient is nonzero, and the zero
/// polynomial stores nothing. Every arithmetic step is overflow-checked and
/// throws OverflowError instead of wrapping.
class QPolynomial {
public:
    using Coeff = std::int64_t;

    QPolynomial() = default;
    /// coeffs[d] is the coefficient of q^d.
    explicit QPolynomial(std::vector<Coeff> coeffs);

    static QPolynomial zero() { return {}; }
    static QPolynomial one() { return monomial(1, 0); }
    static QPolynomial monomial(Coeff c, std::size_t degree);

    std::span<const Coeff> coefficients() const noexcept { return coeffs_; }
    Coeff coeff(std::size_t d) const noexcept { return d < coeffs_.size() ? coeffs_[d] : 0; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Highest power with a nonzero coefficient; nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;

    Coeff eval_at_one() const;

    /// c * q^shift * (*this)
    QPolynomial scale_shift(Coeff c, std::size_t shift) const;

    QPolynomial& operator+=(const QPolynomial& other);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }

    /// Ascending terms, e.g. "q + q^2", "2 - 3q^4", "0".
    std::string to_string() const;

    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

private:
    void canonicalize() noexcept;

    std::vector<Coeff> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << p.to_string(); }

QPolynomial add(const QPolynomial& p, const QPolynomial& r);
QPolynomial scale_shift(const QPolynomial& p, QPolynomial::Coeff c, std::size_t m);

}  // namespace ginirep
