#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kcomp/exact.hpp"
#include "kcomp/numeric.hpp"
#include "kcomp/part_bound.hpp"

namespace kcomp {

/**
 * Numerical realization of the singularity analysis.
 *
 * The count generating function 1/(1-g(z)) has a unique dominant simple pole
 * at sigma = 1/phi, where phi is the one root of
 *
 *   m(z) = z^k - z^(k-1) - ... - z - 1
 *
 * with modulus above one. Expanding at sigma gives the residue -1/g'(sigma)
 * and constant term g''(sigma) / (2 g'(sigma)^2), which drive closed-form
 * approximations for all five statistics. The remaining k-1 roots of m sit
 * strictly inside the unit circle; the largest of their moduli is the decay
 * rate of the approximation errors.
 */

template <typename Real>
struct dominant_root_data {
    part_bound k;
    Real phi;            // unique positive solution of g(1/phi) = 1
    Real sigma;          // 1 / phi, the dominant singularity
    Real g_prime;        // g'(sigma)
    Real g_second;       // g''(sigma)
    Real residue;        // -1 / g'(sigma)
    Real constant_term;  // g''(sigma) / (2 g'(sigma)^2)
    int precision_bits;
};

template <typename Real>
struct spectrum_data {
    part_bound k;
    std::vector<complex_for<Real>> roots;  // all k roots of m(z), by descending modulus
    Real subdominant_radius;               // distance to the nearest non-dominant singularity
    Real decay_rate;                       // 1 / subdominant_radius
};

// g, g', g'' at x, by Horner on the dense 1..k coefficient pattern.
template <typename Real>
Real part_polynomial(part_bound k, const Real& x) {
    Real acc(0);
    for (int a = k.value(); a >= 1; --a) acc = (acc + 1) * x;
    return acc;
}

template <typename Real>
Real part_polynomial_derivative(part_bound k, const Real& x) {
    Real acc(0);
    for (int a = k.value(); a >= 1; --a) acc = acc * x + a;
    return acc;
}

template <typename Real>
Real part_polynomial_second_derivative(part_bound k, const Real& x) {
    Real acc(0);
    for (int a = k.value(); a >= 2; --a) acc = acc * x + a * (a - 1);
    return acc;
}

namespace detail {

// m(z) and m'(z) for real or complex z.
template <typename Scalar>
Scalar characteristic_polynomial(int k, const Scalar& z) {
    Scalar acc(1);
    for (int i = 0; i < k; ++i) acc = acc * z - 1;
    return acc;
}

template <typename Scalar>
Scalar characteristic_polynomial_derivative(int k, const Scalar& z) {
    // m'(z) = k z^(k-1) - (k-1) z^(k-2) - ... - 1
    Scalar acc(k);
    for (int i = k - 1; i >= 1; --i) acc = acc * z - i;
    return acc;
}

} // namespace detail

// Locates phi by bisection on [1, 2] to width 1e-3 followed by Newton on the
// characteristic polynomial of the k-step recurrence, then derives the expansion data at sigma.
template <typename Real>
dominant_root_data<Real> dominant_root(part_bound k) {
    const int bits = precision_bits_of<Real>();
    Real phi(1);
    if (k.value() > 1) {
        Real lo(1), hi(2);
        while (hi - lo > Real(1) / 1000) {
            Real mid = (lo + hi) / 2;
            (detail::characteristic_polynomial(k.value(), mid) < 0 ? lo : hi) = mid;
        }
        Real x = (lo + hi) / 2;
        for (int iter = 0; iter < 200; ++iter) {
            Real step = detail::characteristic_polynomial(k.value(), x) /
                        detail::characteristic_polynomial_derivative(k.value(), x);
            x -= step;
            if (abs(step) <= ldexp(abs(x), -bits + 1)) break;
        }
        phi = x;
    }
    Real sigma = Real(1) / phi;
    Real g1 = part_polynomial_derivative(k, sigma);
    Real g2 = part_polynomial_second_derivative(k, sigma);
    return {k, phi, sigma, g1, g2, Real(-1) / g1, g2 / (2 * g1 * g1), bits};
}

// All-roots solve of the characteristic polynomial of the k-step recurrence by simultaneous (Durand-Kerner)
// iteration. Initial guesses are k-1 points on the circle of radius 0.9 at a
// fixed phase offset (an offset-free circle can start all-real, which never
// reaches complex roots) plus one point at 1.9.
template <typename Real>
spectrum_data<Real> subdominant_spectrum(part_bound k) {
    using complex_t = complex_for<Real>;
    const int bits = precision_bits_of<Real>();

    if (k.value() == 1) {
        // m(z) = z - 1; no singularity besides sigma.
        return {k, {complex_t(1)}, std::numeric_limits<Real>::infinity(), Real(0)};
    }

    const int degree = k.value();
    std::vector<complex_t> roots;
    roots.reserve(static_cast<std::size_t>(degree));
    const Real tau = 2 * boost::math::constants::pi<Real>();
    for (int m = 0; m < degree - 1; ++m) {
        Real angle = tau * (4 * m + 1) / (4 * (degree - 1));
        roots.emplace_back(Real(0.9) * cos(angle), Real(0.9) * sin(angle));
    }
    roots.emplace_back(Real(1.9), Real(0));

    const Real tolerance = ldexp(Real(1), -bits / 2);
    const int iteration_cap = 10'000;
    bool converged = false;
    for (int iter = 0; iter < iteration_cap && !converged; ++iter) {
        Real max_step(0);
        for (std::size_t i = 0; i < roots.size(); ++i) {
            complex_t denom(1);
            for (std::size_t j = 0; j < roots.size(); ++j)
                if (j != i) denom *= roots[i] - roots[j];
            complex_t step = detail::characteristic_polynomial(degree, roots[i]) / denom;
            roots[i] -= step;
            max_step = std::max(max_step, Real(abs(step)));
        }
        converged = max_step < tolerance;
    }
    if (!converged)
        throw std::runtime_error("subdominant_spectrum: root iteration did not converge for k=" +
                                 std::to_string(k.value()));

    std::sort(roots.begin(), roots.end(), [](const complex_t& a, const complex_t& b) {
        Real ma = abs(a), mb = abs(b);
        if (ma != mb) return ma > mb;
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });

    // One root beyond the unit circle, the rest strictly inside and distinct.
    std::size_t outside = 0;
    for (const complex_t& r : roots) outside += abs(r) > 1 ? 1u : 0u;
    bool distinct = true;
    for (std::size_t i = 0; i < roots.size() && distinct; ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (abs(roots[i] - roots[j]) < Real(1) / 1000000) { distinct = false; break; }
    if (outside != 1 || !distinct)
        throw std::runtime_error("subdominant_spectrum: root structure check failed for k=" +
                                 std::to_string(k.value()));

    Real largest_inside = abs(roots[1]);
    return {k, std::move(roots), Real(1) / largest_inside, largest_inside};
}

template <typename Real>
Real approx_count(const dominant_root_data<Real>& d, long long n) {
    return pow_int(d.phi, n + 1) / d.g_prime;
}

template <typename Real>
Real approx_total_parts(const dominant_root_data<Real>& d, long long n) {
    return pow_int(d.phi, n + 2) * Real(n + 1) / (d.g_prime * d.g_prime) +
           pow_int(d.phi, n + 1) * d.g_second / (d.g_prime * d.g_prime * d.g_prime) -
           pow_int(d.phi, n + 1) / d.g_prime;
}

template <typename Real>
Real approx_average_parts(const dominant_root_data<Real>& d, long long n) {
    return d.phi * Real(n + 1) / d.g_prime - 1 + d.g_second / (d.g_prime * d.g_prime);
}

template <typename Real>
Real approx_part_count(const dominant_root_data<Real>& d, long long n, int j) {
    detail::require_part_size(d.k, j);
    return pow_int(d.phi, n + 2 - j) * Real(n + 1 - j) / (d.g_prime * d.g_prime) +
           pow_int(d.phi, n + 1 - j) * d.g_second / (d.g_prime * d.g_prime * d.g_prime);
}

template <typename Real>
Real approx_average_part_count(const dominant_root_data<Real>& d, long long n, int j) {
    detail::require_part_size(d.k, j);
    return pow_int(d.phi, 1 - j) * Real(n + 1 - j) / d.g_prime +
           pow_int(d.phi, -j) * d.g_second / (d.g_prime * d.g_prime);
}

// Principal-part coefficients of 1/(1-g(z)) at sigma: the order -1
// coefficient and the constant term.
template <typename Real>
std::pair<Real, Real> principal_part_coefficients(const dominant_root_data<Real>& d) {
    return {d.residue, d.constant_term};
}

enum class statistic { count, total_parts, average_parts, part_count, average_part_count };

struct error_decay_fit {
    double slope;      // least-squares slope of ln|exact - approx| against n
    double predicted;  // ln(decay_rate) from the subdominant spectrum
};

// Empirical decay rate of the approximation error for one statistic over
// n in [n_lo, n_hi]. Exact hits are excluded from the fit; if everything is
// exact (k = 1) the slope reports -infinity.
inline error_decay_fit fit_error_decay(part_bound k, statistic stat, long long n_lo,
                                       long long n_hi, int j = 1, int precision_bits = 128) {
    detail::require_nonnegative(n_lo);
    if (n_hi - n_lo < 8)
        throw std::invalid_argument("fit_error_decay: the window must span at least 8 indices");
    if (stat == statistic::part_count || stat == statistic::average_part_count)
        detail::require_part_size(k, j);

    return with_precision(precision_bits, [&](auto tag) {
        using Real = typename decltype(tag)::type;
        const auto root = dominant_root<Real>(k);

        std::vector<double> xs, ys;
        for (long long n = n_lo; n <= n_hi; ++n) {
            Real exact(0), approx(0);
            switch (stat) {
                case statistic::count:
                    exact = to_real<Real>(count_compositions(k, n));
                    approx = approx_count(root, n);
                    break;
                case statistic::total_parts:
                    exact = to_real<Real>(total_parts(k, n));
                    approx = approx_total_parts(root, n);
                    break;
                case statistic::average_parts:
                    exact = to_real<Real>(average_parts(k, n));
                    approx = approx_average_parts(root, n);
                    break;
                case statistic::part_count:
                    exact = to_real<Real>(part_count(k, n, j));
                    approx = approx_part_count(root, n, j);
                    break;
                case statistic::average_part_count:
                    exact = to_real<Real>(average_part_count(k, n, j));
                    approx = approx_average_part_count(root, n, j);
                    break;
            }
            Real residual = abs(exact - approx);
            if (residual > 0) {
                xs.push_back(static_cast<double>(n));
                ys.push_back(static_cast<double>(log(residual)));
            }
        }

        double predicted = -std::numeric_limits<double>::infinity();
        if (k.value() > 1) {
            const auto spectrum = subdominant_spectrum<Real>(k);
            predicted = static_cast<double>(log(spectrum.decay_rate));
        }
        if (xs.size() < 2)
            return error_decay_fit{-std::numeric_limits<double>::infinity(), predicted};

        double x_mean = 0, y_mean = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) { x_mean += xs[i]; y_mean += ys[i]; }
        x_mean /= static_cast<double>(xs.size());
        y_mean /= static_cast<double>(xs.size());
        double num = 0, den = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            num += (xs[i] - x_mean) * (ys[i] - y_mean);
            den += (xs[i] - x_mean) * (xs[i] - x_mean);
        }
        return error_decay_fit{num / den, predicted};
    });
}

} // namespace kcomp
