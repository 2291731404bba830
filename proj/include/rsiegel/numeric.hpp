#ifndef RSIEGEL_NUMERIC_HPP
#define RSIEGEL_NUMERIC_HPP

// Floating types and small complex helpers shared by every evaluation module.
//
// All evaluation code is templated on a Real type. double is used on the
// Riemann-Siegel path; the MPFR-backed types below serve the oracle and the
// contour checks, where cancellation eats into 53 bits.

#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace rsiegel {

namespace mp = boost::multiprecision;

// ~168 bits; the floor for oracle paths.
using real160 = mp::number<mp::mpfr_float_backend<50>, mp::et_off>;
// ~256 bits; default for the CLI oracle paths.
using real256 = mp::number<mp::mpfr_float_backend<77>, mp::et_off>;
// ~512 bits.
using real512 = mp::number<mp::mpfr_float_backend<155>, mp::et_off>;

template <class Real>
using complex_t = std::complex<Real>;

template <class Real>
inline Real pi()
{
    return boost::math::constants::pi<Real>();
}

template <class Real>
inline Real epsilon()
{
    return std::numeric_limits<Real>::epsilon();
}

template <class Real>
inline int precision_bits()
{
    return std::numeric_limits<Real>::digits;
}

template <class Real>
inline Real from_string(const std::string& s)
{
    if constexpr (std::is_floating_point_v<Real>) {
        return static_cast<Real>(std::stold(s));
    } else {
        return Real(s);
    }
}

template <class Real>
inline Real from_int(const mp::cpp_int& v)
{
    if constexpr (std::is_floating_point_v<Real>) {
        return v.convert_to<Real>();
    } else {
        return Real(v.str());
    }
}

template <class Real>
inline Real to_real(const mp::cpp_rational& q)
{
    if constexpr (std::is_floating_point_v<Real>) {
        return q.convert_to<Real>();
    } else {
        return from_int<Real>(mp::numerator(q)) / from_int<Real>(mp::denominator(q));
    }
}

// Converts a real to double regardless of its type.
template <class Real>
inline double to_double(const Real& x)
{
    if constexpr (std::is_floating_point_v<Real>) {
        return static_cast<double>(x);
    } else {
        return x.template convert_to<double>();
    }
}

template <class To, class From>
inline To convert(const From& x)
{
    if constexpr (std::is_same_v<To, From>) {
        return x;
    } else if constexpr (std::is_floating_point_v<From>) {
        return To(x);
    } else if constexpr (std::is_floating_point_v<To>) {
        return x.template convert_to<To>();
    } else {
        return To(x.str(std::numeric_limits<From>::max_digits10, std::ios_base::scientific));
    }
}

template <class To, class From>
inline complex_t<To> convert(const complex_t<From>& z)
{
    return {convert<To>(z.real()), convert<To>(z.imag())};
}

// Exact conversion of a binary floating value to a rational (every finite
// double or MPFR value is a dyadic rational).
template <class Real>
inline mp::cpp_rational exact_rational(const Real& x)
{
    if constexpr (std::is_floating_point_v<Real>) {
        return mp::cpp_rational(static_cast<double>(x));
    } else {
        if (x == 0) {
            return mp::cpp_rational(0);
        }
        mpz_t mant;
        mpz_init(mant);
        const mpfr_exp_t e = mpfr_get_z_2exp(mant, x.backend().data());
        char* digits = mpz_get_str(nullptr, 10, mant);
        mp::cpp_rational q{mp::cpp_int(std::string(digits))};
        void (*free_fn)(void*, std::size_t) = nullptr;
        mp_get_memory_functions(nullptr, nullptr, &free_fn);
        free_fn(digits, std::char_traits<char>::length(digits) + 1);
        mpz_clear(mant);
        const auto shift = static_cast<unsigned>(e >= 0 ? e : -e);
        const mp::cpp_rational scale{mp::cpp_int(1) << shift};
        return e >= 0 ? mp::cpp_rational(q * scale) : mp::cpp_rational(q / scale);
    }
}

// sin(z)/z, entire; series near the origin.
template <class T>
inline T sinc(const T& z)
{
    using std::abs;
    using std::sin;
    using R = std::decay_t<decltype(abs(z))>;
    if (abs(z) > R(0.5)) {
        return sin(z) / z;
    }
    const T z2 = z * z;
    T term = T(1);
    T sum = T(1);
    const R eps = epsilon<R>();
    for (int j = 1; j < 200; ++j) {
        term *= -z2 / T(R((2 * j) * (2 * j + 1)));
        sum += term;
        if (abs(term) <= eps * abs(sum)) {
            break;
        }
    }
    return sum;
}

// (exp(z) - 1)/z, entire; series near the origin.
template <class T>
inline T exprel(const T& z)
{
    using std::abs;
    using std::exp;
    using R = std::decay_t<decltype(abs(z))>;
    if (abs(z) > R(0.5)) {
        return (exp(z) - T(1)) / z;
    }
    T term = T(1);
    T sum = T(1);
    const R eps = epsilon<R>();
    for (int j = 2; j < 300; ++j) {
        term *= z / T(R(j));
        sum += term;
        if (abs(term) <= eps * abs(sum)) {
            break;
        }
    }
    return sum;
}

// Pairwise summation; the reduction order depends only on the length, so
// results are reproducible however the terms were produced.
template <class T>
inline T pairwise_sum(std::span<const T> v)
{
    if (v.empty()) {
        return T(0);
    }
    if (v.size() <= 8) {
        T s = v[0];
        for (std::size_t i = 1; i < v.size(); ++i) {
            s += v[i];
        }
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

template <class T>
inline T pairwise_sum(const std::vector<T>& v)
{
    return pairwise_sum(std::span<const T>(v.data(), v.size()));
}

}  // namespace rsiegel

#endif
