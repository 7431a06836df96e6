#ifndef CKB_POLYNOMIAL_HPP
#define CKB_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "ckb/bigint.hpp"

namespace ckb {

/// Exact division requested on a polynomial with a nonzero constant term.
struct NonzeroConstantTerm : std::domain_error {
    using std::domain_error::domain_error;
};

/// Polynomial long division left a nonzero remainder where none was allowed.
struct InexactDivision : std::domain_error {
    using std::domain_error::domain_error;
};

/// Dense univariate polynomial over an exact coefficient ring.
///
/// Coefficients are stored in increasing order of degree with trailing zeros
/// trimmed; the zero polynomial is the empty sequence. All arithmetic is
/// exact in the scalar ring. Values are immutable in practice: every
/// operation returns a fresh polynomial.
template <typename Scalar>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int value) : Polynomial(Scalar(value)) {}
    Polynomial(Scalar constant) {
        if (!(constant == Scalar(0))) coeffs_.push_back(std::move(constant));
    }
    Polynomial(std::initializer_list<Scalar> ascending) : coeffs_(ascending) { trim(); }
    explicit Polynomial(std::vector<Scalar> ascending) : coeffs_(std::move(ascending)) { trim(); }

    /// The monomial c*x^k.
    static Polynomial monomial(int degree, Scalar c = Scalar(1)) {
        Polynomial out;
        if (!(c == Scalar(0))) {
            out.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Scalar(0));
            out.coeffs_.back() = std::move(c);
        }
        return out;
    }
    static Polynomial variable() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of x^i (zero beyond the stored degree).
    Scalar coeff(int i) const {
        if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return Scalar(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

    /// Schoolbook convolution; degrees stay small enough that anything
    /// fancier would be wasted.
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
        Polynomial out;
        if (lhs.is_zero() || rhs.is_zero()) return out;
        out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
                out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        out.trim();
        return out;
    }

    Polynomial operator-() const {
        Polynomial out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
        return lhs.coeffs_ == rhs.coeffs_;
    }
    friend bool operator!=(const Polynomial& lhs, const Polynomial& rhs) {
        return !(lhs == rhs);
    }

    /// Horner evaluation in the scalar ring.
    Scalar operator()(const Scalar& x0) const {
        Scalar acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x0 + coeffs_[i];
        return acc;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
    }

    std::vector<Scalar> coeffs_;
};

using IntPoly = Polynomial<BigInt>;

/// Horner evaluation at a double, for floating-point spot checks.
template <typename Scalar>
double poly_eval_float(const Polynomial<Scalar>& p, double x0) {
    double acc = 0.0;
    for (int i = p.degree(); i >= 0; --i) {
        if constexpr (std::is_arithmetic_v<Scalar>) {
            acc = acc * x0 + static_cast<double>(p.coeff(i));
        } else {
            acc = acc * x0 + p.coeff(i).to_double();
        }
    }
    return acc;
}

/// Exact division by x. The constant term must vanish.
template <typename Scalar>
Polynomial<Scalar> poly_div_x_exact(const Polynomial<Scalar>& p) {
    if (p.is_zero()) return {};
    if (!(p.coeff(0) == Scalar(0)))
        throw NonzeroConstantTerm("poly_div_x_exact: constant term is nonzero");
    std::vector<Scalar> shifted(p.coeffs().begin() + 1, p.coeffs().end());
    return Polynomial<Scalar>(std::move(shifted));
}

/// Exact long division by a monic divisor; throws InexactDivision on a
/// nonzero remainder.
template <typename Scalar>
Polynomial<Scalar> poly_div_exact(const Polynomial<Scalar>& num, const Polynomial<Scalar>& den) {
    if (den.is_zero()) throw std::invalid_argument("poly_div_exact: zero divisor");
    if (!(den.coeff(den.degree()) == Scalar(1)))
        throw std::invalid_argument("poly_div_exact: divisor must be monic");
    if (num.is_zero()) return {};
    if (num.degree() < den.degree())
        throw InexactDivision("poly_div_exact: numerator degree below divisor degree");

    std::vector<Scalar> rem(num.coeffs());
    std::vector<Scalar> quot(static_cast<std::size_t>(num.degree() - den.degree()) + 1, Scalar(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        Scalar lead = rem[k + static_cast<std::size_t>(den.degree())];
        quot[k] = lead;
        for (int j = 0; j <= den.degree(); ++j)
            rem[k + static_cast<std::size_t>(j)] -= lead * den.coeff(j);
    }
    for (const Scalar& c : rem)
        if (!(c == Scalar(0))) throw InexactDivision("poly_div_exact: nonzero remainder");
    return Polynomial<Scalar>(std::move(quot));
}

std::string to_string(const IntPoly& p);
IntPoly parse_poly(std::string_view text);

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
    return os << to_string(p);
}

}  // namespace ckb

#endif
