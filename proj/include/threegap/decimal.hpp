#pragma once

#include <string>

#include "threegap/field_value.hpp"
#include "threegap/integer.hpp"

namespace threegap {

/// Decimal rendering of a FieldValue to a fixed number of significant digits,
/// correctly rounded (round half to even), computed entirely in integers.
///
/// Significant digits are counted from the first nonzero digit, so neither a
/// leading "0." nor zeros right after the point consume budget. Zero itself
/// keeps the one-integer-digit layout ("0.000...0").
///
/// Ties (the scaled value landing exactly on a half) can only occur for
/// rational inputs, where the sign test below is exact; for quadratic
/// irrationals sign_of_surd never returns 0 on the tie probe.
inline std::string to_decimal(const FieldValue& v, unsigned significant) {
    if (significant == 0) {
        significant = 1;
    }
    const int vsign = sign_of_surd(v.num(), v.surd_num(), v.radicand());
    if (vsign == 0) {
        std::string out = "0";
        if (significant > 1) {
            out += "." + std::string(significant - 1, '0');
        }
        return out;
    }
    const FieldValue mag = vsign < 0 ? sub_raw(FieldValue(), v) : v;

    const Integer ip = floor_value(mag);
    unsigned frac_digits = 0;
    if (ip == 0) {
        // 10^-(zeros+1) <= mag < 10^-zeros
        unsigned zeros = 0;
        FieldValue scaled = scale_raw(mag, 10);
        while (floor_value(scaled) == 0) {
            ++zeros;
            scaled = scale_raw(scaled, 10);
        }
        frac_digits = zeros + significant;
    } else {
        unsigned int_digits = 0;
        for (Integer t = ip; t > 0; t /= 10) {
            ++int_digits;
        }
        frac_digits = significant > int_digits ? significant - int_digits : 0;
    }

    // X = floor(mag * 10^k), then round by the sign of mag*10^k - (X + 1/2),
    // i.e. of 2*mag*10^k - (2X+1), evaluated exactly over the field.
    const Integer scale = pow10(frac_digits);
    const Integer sa = mag.num() * scale;
    Integer x = floor_surd(sa, mag.surd_num() * scale, mag.den(), mag.radicand());
    const Integer probe_a = 2 * sa - (2 * x + 1) * mag.den();
    const int s = sign_of_surd(probe_a, 2 * mag.surd_num() * scale, mag.radicand());
    if (s > 0 || (s == 0 && x % 2 != 0)) {
        ++x;
    }

    std::string digits = to_string(x);
    if (digits.size() < frac_digits + 1) {
        digits.insert(0, frac_digits + 1 - digits.size(), '0');
    }
    std::string out;
    if (vsign < 0 && x != 0) {
        out = "-";
    }
    out += digits.substr(0, digits.size() - frac_digits);
    if (frac_digits > 0) {
        out += ".";
        out += digits.substr(digits.size() - frac_digits);
    }
    return out;
}

}  // namespace threegap
