#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/multiprecision/complex_adaptor.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace kcomp {

// Exact scalar types used by the counting and series modules.
using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

// Binary floating point with a Bits-wide mantissa.
template <unsigned Bits>
using binary_float = boost::multiprecision::number<
    boost::multiprecision::backends::cpp_bin_float<
        Bits, boost::multiprecision::backends::digit_base_2>,
    boost::multiprecision::et_off>;

using real64 = binary_float<64>;
using real128 = binary_float<128>;
using real256 = binary_float<256>;
using real512 = binary_float<512>;
using real1024 = binary_float<1024>;

// Complex counterpart of a binary_float instantiation.
template <typename Real>
using complex_for = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<typename Real::backend_type>,
    boost::multiprecision::et_off>;

template <typename Real>
constexpr int precision_bits_of() {
    return std::numeric_limits<Real>::digits;
}

// Integer power by repeated squaring; exponent may be negative.
template <typename Real>
Real pow_int(const Real& base, long long exponent) {
    if (exponent < 0) return Real(1) / pow_int(base, -exponent);
    Real result(1);
    Real acc = base;
    unsigned long long e = static_cast<unsigned long long>(exponent);
    while (e != 0) {
        if (e & 1u) result *= acc;
        acc *= acc;
        e >>= 1u;
    }
    return result;
}

template <typename Real>
Real to_real(const bigint& v) {
    return Real(v);
}

template <typename Real>
Real to_real(const bigrat& v) {
    return Real(numerator(v)) / Real(denominator(v));
}

// Invokes fn(std::type_identity<Real>{}) with the narrowest supported
// precision of at least precision_bits mantissa bits.
template <typename Fn>
decltype(auto) with_precision(int precision_bits, Fn&& fn) {
    if (precision_bits < 53)
        throw std::invalid_argument("precision_bits must be at least 53");
    if (precision_bits <= 64) return fn(std::type_identity<real64>{});
    if (precision_bits <= 128) return fn(std::type_identity<real128>{});
    if (precision_bits <= 256) return fn(std::type_identity<real256>{});
    if (precision_bits <= 512) return fn(std::type_identity<real512>{});
    if (precision_bits <= 1024) return fn(std::type_identity<real1024>{});
    throw std::invalid_argument("precision_bits exceeds the supported maximum of 1024 (requested " +
                                std::to_string(precision_bits) + ")");
}

} // namespace kcomp
