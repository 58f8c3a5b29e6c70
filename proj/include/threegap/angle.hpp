#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "threegap/errors.hpp"
#include "threegap/field_value.hpp"
#include "threegap/integer.hpp"

namespace threegap {

/// A rotation angle: a FieldValue reduced to [0,1), plus the text it was
/// parsed from (reports echo the caller's spelling, not the canonical form).
struct Angle {
    FieldValue value;
    std::string text;

    Angle() : value(), text("0") {}

    explicit Angle(FieldValue v) : value(reduce_mod1(v)) { text = value.to_exact_text(); }

    Angle(FieldValue v, std::string source)
        : value(reduce_mod1(std::move(v))), text(std::move(source)) {}

    bool is_rational() const { return value.is_rational(); }

    /// Reduced denominator q of a rational angle p/q. Meaningless for surds.
    const Integer& denominator() const { return value.den(); }
};

namespace detail {

// Largest accepted radicand. Keeps extract_square_part's trial division in
// 64-bit territory and bounds every later integer in the pipeline.
inline const Integer& max_radicand() {
    static const Integer limit = pow10(12);
    return limit;
}

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool eat(std::string_view word) {
        if (s.substr(i, word.size()) == word) {
            i += word.size();
            return true;
        }
        return false;
    }
};

inline int parse_sign(Cursor& cur) {
    if (cur.eat('-')) {
        return -1;
    }
    cur.eat('+');
    return 1;
}

inline Integer parse_uint(Cursor& cur) {
    if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        throw ParseError("expected digits at position " + std::to_string(cur.i));
    }
    const std::size_t start = cur.i;
    while (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        ++cur.i;
    }
    return Integer(std::string(cur.s.substr(start, cur.i - start)));
}

inline Integer parse_int(Cursor& cur) {
    const int sign = parse_sign(cur);
    Integer v = parse_uint(cur);
    return sign < 0 ? Integer(-v) : v;
}

/// "sqrt(d)" with the cursor past the 's'..."sqrt" decision already made by
/// the caller; validates the radicand's range before any factoring happens.
inline Integer parse_radicand(Cursor& cur) {
    if (!cur.eat('(')) {
        throw ParseError("expected '(' after sqrt");
    }
    const int sign = parse_sign(cur);
    Integer d = parse_uint(cur);
    if (!cur.eat(')')) {
        throw ParseError("unterminated sqrt(...)");
    }
    if (sign < 0) {
        throw InvalidAngle("negative radicand: sqrt(-" + to_string(d) + ")");
    }
    if (d > max_radicand()) {
        throw RadicandTooLarge("radicand " + to_string(d) + " exceeds 10^12");
    }
    return d;
}

/// Body of the parenthesized surd numerator: a, b*sqrt(d), sqrt(d),
/// or a +- (b*)sqrt(d). Returns (a, b, d) with d not yet squarefree.
inline void parse_surd_body(Cursor& cur, Integer& a, Integer& b, Integer& d) {
    a = 0;
    b = 0;
    d = 0;
    int sign = parse_sign(cur);
    if (cur.eat("sqrt")) {
        b = sign;
        d = parse_radicand(cur);
        return;
    }
    Integer lead = parse_uint(cur);
    if (cur.eat('*')) {
        if (!cur.eat("sqrt")) {
            throw ParseError("expected sqrt after '*'");
        }
        b = sign < 0 ? Integer(-lead) : lead;
        d = parse_radicand(cur);
        return;
    }
    a = sign < 0 ? Integer(-lead) : lead;
    if (cur.peek() != '+' && cur.peek() != '-') {
        throw ParseError("parenthesized angle needs a sqrt term");
    }
    sign = parse_sign(cur);
    Integer coeff = 1;
    if (!cur.eat("sqrt")) {
        coeff = parse_uint(cur);
        if (!cur.eat('*') || !cur.eat("sqrt")) {
            throw ParseError("expected sqrt term after '" + to_string(coeff) + "'");
        }
    }
    b = sign < 0 ? Integer(-coeff) : coeff;
    d = parse_radicand(cur);
}

}  // namespace detail

/// Parses an angle specification into an Angle in [0,1).
///
/// Accepted forms, whitespace-insensitive, with U+2212 treated as '-':
///   golden                 the alias (-1+1*sqrt(5))/2
///   p/q, n                 rationals (q != 0)
///   (a+b*sqrt(d))/c        quadratic irrationals; also the shorthands
///   (b*sqrt(d))/c, (a+sqrt(d))/c, (sqrt(d))/c
///
/// The radicand is factored into its squarefree part, so sqrt(8) becomes
/// 2*sqrt(2) and sqrt(9) folds into a plain rational. Anything left over in
/// the input is a ParseError.
inline Angle parse_angle(std::string_view input) {
    std::string cleaned;
    cleaned.reserve(input.size());
    for (std::size_t i = 0; i < input.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(input[i]);
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            continue;
        }
        // UTF-8 minus sign, E2 88 92.
        if (c == 0xE2 && i + 2 < input.size() &&
            static_cast<unsigned char>(input[i + 1]) == 0x88 &&
            static_cast<unsigned char>(input[i + 2]) == 0x92) {
            cleaned += '-';
            i += 2;
            continue;
        }
        cleaned += input[i];
    }
    if (cleaned.empty()) {
        throw ParseError("empty angle specification");
    }
    if (cleaned == "golden") {
        return Angle(FieldValue(-1, 1, 2, 5), std::string(input));
    }

    detail::Cursor cur{cleaned};
    FieldValue value;
    if (cur.peek() == '(') {
        cur.eat('(');
        Integer a, b, d;
        detail::parse_surd_body(cur, a, b, d);
        if (!cur.eat(')')) {
            throw ParseError("expected ')' at position " + std::to_string(cur.i));
        }
        if (!cur.eat('/')) {
            throw ParseError("expected '/' after ')'");
        }
        Integer c = detail::parse_int(cur);
        auto [root, rest] = extract_square_part(d);
        value = FieldValue(a, b * root, c, rest);
    } else {
        Integer p = detail::parse_int(cur);
        if (cur.eat('/')) {
            Integer q = detail::parse_int(cur);
            if (q == 0) {
                throw InvalidAngle("zero denominator");
            }
            value = FieldValue::rational(p, q);
        } else {
            value = FieldValue::from_integer(p);
        }
    }
    if (!cur.done()) {
        throw ParseError("trailing characters at position " + std::to_string(cur.i) +
                         ": '" + std::string(cur.s.substr(cur.i)) + "'");
    }
    return Angle(std::move(value), std::string(input));
}

/// {n * alpha}, computed directly from the scaled exact form.
inline FieldValue frac_point(const Angle& alpha, std::uint64_t n) {
    return reduce_mod1(scale_raw(alpha.value, Integer(n)));
}

/// The orbit ({0*alpha}, {1*alpha}, ..., {(n-1)*alpha}), built by repeated
/// frac_add so every element stays over the same reduced denominator.
inline std::vector<FieldValue> frac_orbit(const Angle& alpha, std::uint64_t n) {
    std::vector<FieldValue> orbit;
    orbit.reserve(n);
    if (n == 0) {
        return orbit;
    }
    orbit.push_back(FieldValue());
    for (std::uint64_t k = 1; k < n; ++k) {
        orbit.push_back(frac_add(orbit.back(), alpha.value));
    }
    return orbit;
}

}  // namespace threegap
