#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense integer polynomials and the generating-function oracle.
 *
 * The oracle obtains coefficients by literally expanding (1+x)^n and
 * (1+x+x^2)^n. It is the second, independent computation route used to
 * cross-check the recurrence-based coefficients, so multiplication is
 * deliberately plain schoolbook convolution and nothing here touches
 * coefficients.hpp.
 */

#include "stickkit/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace stickkit {

// Dense polynomial with exact integer coefficients, coeffs[i] = coefficient
// of x^i. Canonical form: no trailing zeros; the zero polynomial has an
// empty coefficient list.
template <typename T = Integer>
class polynomial {
public:
    polynomial() = default;
    polynomial(std::initializer_list<T> cs) : coeffs_(cs) { trim(); }
    explicit polynomial(std::vector<T> cs) : coeffs_(std::move(cs)) { trim(); }

    static polynomial one() { return polynomial{T(1)}; }

    bool is_zero() const { return coeffs_.empty(); }

    // Degree of a nonzero polynomial.
    std::size_t degree() const { return coeffs_.size() - 1; }

    const std::vector<T>& coefficients() const { return coeffs_; }

    // Coefficient of x^power, 0 beyond the degree.
    T coefficient(std::size_t power) const {
        return power < coeffs_.size() ? coeffs_[power] : T(0);
    }

    bool operator==(const polynomial& other) const = default;

    polynomial operator*(const polynomial& other) const {
        if (is_zero() || other.is_zero()) return {};
        std::vector<T> result(coeffs_.size() + other.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
                result[i + j] += coeffs_[i] * other.coeffs_[j];
        return polynomial(std::move(result));
    }

    polynomial& operator*=(const polynomial& other) { return *this = *this * other; }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

/// base^n by binary exponentiation; base^0 = 1 for every base.
template <typename T>
polynomial<T> pow(const polynomial<T>& base, long long n) {
    if (n < 0) throw std::invalid_argument("polynomial pow: negative exponent");
    polynomial<T> result = polynomial<T>::one();
    polynomial<T> square = base;
    while (n > 0) {
        if (n & 1) result *= square;
        n >>= 1;
        if (n > 0) square *= square;
    }
    return result;
}

/// Coefficient list of (1+x)^n.
inline std::vector<Integer> binomial_expansion(long long n) {
    if (n < 0) throw std::invalid_argument("binomial_expansion: negative exponent");
    return pow(polynomial<Integer>{1, 1}, n).coefficients();
}

/// Coefficient list of (1+x+x^2)^n.
inline std::vector<Integer> trinomial_expansion(long long n) {
    if (n < 0) throw std::invalid_argument("trinomial_expansion: negative exponent");
    return pow(polynomial<Integer>{1, 1, 1}, n).coefficients();
}

/// Coefficient of x^k in (1+x)^n; 0 out of range.
inline Integer binomial_oracle(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("binomial_oracle: negative exponent");
    const auto coeffs = binomial_expansion(n);
    if (k < 0 || k >= static_cast<long long>(coeffs.size())) return 0;
    return coeffs[static_cast<std::size_t>(k)];
}

/// Coefficient of x^(n+k) in (1+x+x^2)^n; 0 when n+k is outside [0, 2n].
/// The Laurent-form definition over (1+x+1/x)^n is the same list shifted
/// by x^n, so a single ordinary-polynomial representation covers both.
inline Integer trinomial_oracle(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("trinomial_oracle: negative exponent");
    const long long power = n + k;
    if (power < 0 || power > 2 * n) return 0;
    return trinomial_expansion(n)[static_cast<std::size_t>(power)];
}

} // namespace stickkit
