#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kcomp/numeric.hpp"
#include "kcomp/part_bound.hpp"

namespace kcomp {

/**
 * Formal power series truncated at a fixed order, over an exact coefficient
 * ring. This is the second, independent route to the composition statistics:
 * with g(x) the part polynomial x + x^2 + ... + x^k,
 *
 *   count series       1 / (1 - g)
 *   part-count series  x^j / (1 - g)^2
 *   total-parts series 1 / (1 - g)^2 - 1 / (1 - g)
 *
 * Division by (1 - g) is a linear sweep over g's nonzero support, so the
 * three series cost O(order * k) ring operations each.
 */
template <typename T = bigint>
class truncated_series {
 public:
    explicit truncated_series(std::size_t order) : coeffs_(order + 1, T(0)) {}

    explicit truncated_series(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("truncated_series: needs at least the constant term");
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<T>& coefficients() const noexcept { return coeffs_; }

    const T& operator[](std::size_t i) const { return coeffs_.at(i); }
    T& operator[](std::size_t i) { return coeffs_.at(i); }

    friend bool operator==(const truncated_series&, const truncated_series&) = default;

    friend truncated_series operator+(const truncated_series& a, const truncated_series& b) {
        check_orders(a, b);
        truncated_series r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return r;
    }

    friend truncated_series operator-(const truncated_series& a, const truncated_series& b) {
        check_orders(a, b);
        truncated_series r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return r;
    }

    // Product modulo x^(order+1).
    friend truncated_series operator*(const truncated_series& a, const truncated_series& b) {
        check_orders(a, b);
        truncated_series r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; i + j <= a.order(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    // Multiplication by x^amount, dropping terms past the truncation order.
    truncated_series shift_up(std::size_t amount) const {
        truncated_series r(order());
        for (std::size_t i = amount; i <= order(); ++i) r.coeffs_[i] = coeffs_[i - amount];
        return r;
    }

 private:
    static void check_orders(const truncated_series& a, const truncated_series& b) {
        if (a.order() != b.order())
            throw std::invalid_argument("truncated_series: operands must share one order");
    }

    std::vector<T> coeffs_;
};

// The part polynomial g(x) = x + x^2 + ... + x^k, truncated at `order`.
template <typename T = bigint>
truncated_series<T> g_polynomial(part_bound k, std::size_t order) {
    truncated_series<T> g(order);
    for (std::size_t a = 1; a <= static_cast<std::size_t>(k.value()) && a <= order; ++a)
        g[a] = T(1);
    return g;
}

namespace detail {

// Solves y = numerator + s * y coefficient by coefficient, i.e. computes
// numerator / (1 - s) using only s's nonzero support.
template <typename T>
truncated_series<T> divide_by_one_minus(const truncated_series<T>& numerator,
                                        const truncated_series<T>& s) {
    if (numerator.order() != s.order())
        throw std::invalid_argument("truncated_series: operands must share one order");
    if (s[0] != 0)
        throw std::invalid_argument("reciprocal requires a zero constant term");
    std::vector<std::size_t> support;
    for (std::size_t i = 1; i <= s.order(); ++i)
        if (s[i] != 0) support.push_back(i);

    truncated_series<T> y(s.order());
    for (std::size_t n = 0; n <= s.order(); ++n) {
        T acc = numerator[n];
        for (std::size_t i : support) {
            if (i > n) break;
            acc += s[i] * y[n - i];
        }
        y[n] = std::move(acc);
    }
    return y;
}

} // namespace detail

// Expansion of 1 / (1 - s); s must have zero constant term.
template <typename T>
truncated_series<T> reciprocal_one_minus(const truncated_series<T>& s) {
    truncated_series<T> one(s.order());
    one[0] = T(1);
    return detail::divide_by_one_minus(one, s);
}

// Coefficient i is the number of compositions of i with parts in 1..k.
template <typename T = bigint>
truncated_series<T> f_series(part_bound k, std::size_t order) {
    return reciprocal_one_minus(g_polynomial<T>(k, order));
}

// Coefficient i is the number of occurrences of part size j among all
// compositions of i: x^j / (1 - g)^2.
template <typename T = bigint>
truncated_series<T> c_series(part_bound k, int j, std::size_t order) {
    detail::require_part_size(k, j);
    auto g = g_polynomial<T>(k, order);
    auto f = detail::divide_by_one_minus(reciprocal_one_minus(g), g);  // 1 / (1 - g)^2
    return f.shift_up(static_cast<std::size_t>(j));
}

// Coefficient i is the total number of parts among all compositions of i:
// 1 / (1 - g)^2 - 1 / (1 - g).
template <typename T = bigint>
truncated_series<T> t_series(part_bound k, std::size_t order) {
    auto g = g_polynomial<T>(k, order);
    auto f = reciprocal_one_minus(g);
    return detail::divide_by_one_minus(f, g) - f;
}

} // namespace kcomp
