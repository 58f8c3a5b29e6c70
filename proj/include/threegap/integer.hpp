#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>

namespace threegap {

/// Unbounded signed integer. Coefficients of orbit points grow linearly in n,
/// and exact comparison squares them, so fixed-width types are not an option.
using Integer = boost::multiprecision::cpp_int;

inline int sign_of(const Integer& x) {
    return x.sign();
}

/// Floor division for d > 0 (cpp_int's operator/ truncates toward zero).
inline Integer floor_div(const Integer& n, const Integer& d) {
    Integer q = n / d;
    if (q * d != n && n < 0) {
        --q;
    }
    return q;
}

/// Largest r with r*r <= x. Requires x >= 0.
inline Integer isqrt(const Integer& x) {
    return boost::multiprecision::sqrt(x);
}

inline Integer gcd3(const Integer& a, const Integer& b, const Integer& c) {
    return boost::multiprecision::gcd(boost::multiprecision::gcd(a, b), c);
}

inline Integer pow10(unsigned k) {
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= 10;
    }
    return r;
}

/// Exact sign of A + B*sqrt(d); d >= 0. The only numeric kernel in the
/// library: every order decision reduces to it. When A and B have opposite
/// signs the magnitudes are compared squared, so no rounding enters.
inline int sign_of_surd(const Integer& a, const Integer& b, const Integer& d) {
    if (b == 0 || d == 0) {
        return sign_of(a);
    }
    const int sa = sign_of(a);
    const int sb = sign_of(b);
    if (sa == 0) {
        return sb;
    }
    if (sa == sb) {
        return sa;
    }
    // Opposite signs: |A| vs |B|*sqrt(d), squared.
    const Integer t = a * a - b * b * d;
    return sa > 0 ? sign_of(t) : -sign_of(t);
}

/// Floor of (A + B*sqrt(d)) / C for C > 0, d >= 0. Brackets B*sqrt(d)
/// between integer square-root bounds, then corrects the candidate with
/// exact sign tests; never touches floating point.
inline Integer floor_surd(const Integer& a, const Integer& b, const Integer& c,
                          const Integer& d) {
    if (b == 0 || d == 0) {
        return floor_div(a, c);
    }
    const Integer r = isqrt(b * b * d);  // r <= |B|sqrt(d) < r+1
    const Integer shifted = b > 0 ? Integer(a + r) : Integer(a - r - 1);
    Integer k = floor_div(shifted, c);
    // Candidate is within one of the true floor; nudge with exact tests.
    while (sign_of_surd(a - (k + 1) * c, b, d) >= 0) {
        ++k;
    }
    while (sign_of_surd(a - k * c, b, d) < 0) {
        --k;
    }
    return k;
}

/// Splits d >= 0 as s^2 * f with f squarefree. Used once at parse time;
/// callers guarantee d <= 10^12, so the trial division runs on hardware
/// integers.
inline std::pair<Integer, Integer> extract_square_part(const Integer& d) {
    std::uint64_t rest = d.convert_to<std::uint64_t>();
    std::uint64_t root = 1;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        const std::uint64_t pp = p * p;
        while (rest % pp == 0) {
            rest /= pp;
            root *= p;
        }
    }
    return {Integer(root), Integer(rest)};
}

inline std::string to_string(const Integer& x) {
    return x.str();
}

}  // namespace threegap
