#include "ginirep/qpoly.hpp"

#include <sstream>

#include "ginirep/errors.hpp"

namespace ginirep {

namespace {

QPolynomial::Coeff checked_add(QPolynomial::Coeff a, QPolynomial::Coeff b) {
    QPolynomial::Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("QPolynomial: coefficient overflow in add");
    return r;
}

QPolynomial::Coeff checked_mul(QPolynomial::Coeff a, QPolynomial::Coeff b) {
    QPolynomial::Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("QPolynomial: coefficient overflow in scale");
    return r;
}

}  // namespace

QPolynomial::QPolynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { canonicalize(); }

QPolynomial QPolynomial::monomial(Coeff c, std::size_t degree) {
    std::vector<Coeff> v(degree + 1, 0);
    v[degree] = c;
    return QPolynomial(std::move(v));
}

void QPolynomial::canonicalize() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> QPolynomial::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

QPolynomial::Coeff QPolynomial::eval_at_one() const {
    Coeff s = 0;
    for (Coeff c : coeffs_) s = checked_add(s, c);
    return s;
}

QPolynomial QPolynomial::scale_shift(Coeff c, std::size_t shift) const {
    if (c == 0 || coeffs_.empty()) return {};
    std::vector<Coeff> v(coeffs_.size() + shift, 0);
    for (std::size_t d = 0; d < coeffs_.size(); ++d) v[d + shift] = checked_mul(coeffs_[d], c);
    return QPolynomial(std::move(v));
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t d = 0; d < other.coeffs_.size(); ++d)
        coeffs_[d] = checked_add(coeffs_[d], other.coeffs_[d]);
    canonicalize();
    return *this;
}

std::string QPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        Coeff c = coeffs_[d];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        // Magnitude without negating INT64_MIN.
        const auto mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        if (d == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag;
        os << 'q';
        if (d > 1) os << '^' << d;
    }
    return os.str();
}

QPolynomial add(const QPolynomial& p, const QPolynomial& r) { return p + r; }

QPolynomial scale_shift(const QPolynomial& p, QPolynomial::Coeff c, std::size_t m) {
    return p.scale_shift(c, m);
}

}  // namespace ginirep
