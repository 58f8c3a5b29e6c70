#pragma once

#include <compare>
#include <string>
#include <utility>

#include "threegap/errors.hpp"
#include "threegap/integer.hpp"

namespace threegap {

/// Exact element (A + B*sqrt(d)) / C of a real quadratic field, or a plain
/// rational when B = 0 (then d = 0 by convention).
///
/// Canonical form, established by every constructor:
///   - C > 0,
///   - gcd(A, B, C) = 1 (gcd(A, C) = 1 when B = 0),
///   - B = 0  <=>  d = 0,
///   - zero is 0/1.
/// d is assumed squarefree and >= 2 whenever nonzero; the angle parser is the
/// one place that canonicalizes user-supplied radicands. With that, structural
/// equality coincides with equality of the real values, and ordering never
/// needs an approximation: two values over the same radicand compare through
/// an integer sign computation (sign_of_surd).
///
/// Immutable value type; all operations on it are pure.
class FieldValue {
  public:
    FieldValue() : a_(0), b_(0), c_(1), d_(0) {}

    FieldValue(Integer a, Integer b, Integer c, Integer d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        normalize();
    }

    static FieldValue from_integer(Integer n) {
        return FieldValue(std::move(n), 0, 1, 0);
    }

    static FieldValue rational(Integer num, Integer den) {
        return FieldValue(std::move(num), 0, std::move(den), 0);
    }

    const Integer& num() const { return a_; }
    const Integer& surd_num() const { return b_; }
    const Integer& den() const { return c_; }
    const Integer& radicand() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    /// "A/C" (or plain "A") for rationals, "(A+B*sqrt(d))/C" otherwise.
    /// Surd output re-parses under the AngleSpec grammar.
    std::string to_exact_text() const {
        if (is_rational()) {
            if (c_ == 1) {
                return to_string(a_);
            }
            return to_string(a_) + "/" + to_string(c_);
        }
        std::string s = "(" + to_string(a_);
        s += b_ > 0 ? "+" : "-";
        s += to_string(boost::multiprecision::abs(b_));
        s += "*sqrt(" + to_string(d_) + "))/" + to_string(c_);
        return s;
    }

  private:
    void normalize() {
        if (c_ == 0) {
            throw InvalidAngle("zero denominator in field value");
        }
        if (d_ < 0) {
            throw InvalidAngle("negative radicand");
        }
        if (c_ < 0) {
            a_ = -a_;
            b_ = -b_;
            c_ = -c_;
        }
        if (b_ == 0 || d_ == 0) {
            b_ = 0;
            d_ = 0;
        } else if (d_ == 1) {
            a_ += b_;
            b_ = 0;
            d_ = 0;
        }
        if (a_ == 0 && b_ == 0) {
            c_ = 1;
            d_ = 0;
            return;
        }
        const Integer g = gcd3(boost::multiprecision::abs(a_),
                               boost::multiprecision::abs(b_), c_);
        if (g > 1) {
            a_ /= g;
            b_ /= g;
            c_ /= g;
        }
    }

    Integer a_, b_, c_, d_;
};

namespace detail {

/// Common radicand of two operands, or MixedRadicand if both are irrational
/// over different fields.
inline const Integer& joint_radicand(const FieldValue& x, const FieldValue& y) {
    if (x.radicand() == 0) {
        return y.radicand();
    }
    if (y.radicand() != 0 && y.radicand() != x.radicand()) {
        throw MixedRadicand("operands lie in different quadratic fields: sqrt(" +
                            to_string(x.radicand()) + ") vs sqrt(" +
                            to_string(y.radicand()) + ")");
    }
    return x.radicand();
}

}  // namespace detail

/// Exact order of the underlying reals. Strict weak (in fact total) order;
/// Equal means the real values coincide, which for canonical forms is the
/// same as structural equality.
inline std::strong_ordering compare(const FieldValue& x, const FieldValue& y) {
    const Integer& d = detail::joint_radicand(x, y);
    const Integer p = x.num() * y.den() - y.num() * x.den();
    const Integer q = x.surd_num() * y.den() - y.surd_num() * x.den();
    const int s = sign_of_surd(p, q, d);
    if (s < 0) {
        return std::strong_ordering::less;
    }
    if (s > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

inline std::strong_ordering operator<=>(const FieldValue& x, const FieldValue& y) {
    return compare(x, y);
}

inline bool operator==(const FieldValue& x, const FieldValue& y) {
    return compare(x, y) == std::strong_ordering::equal;
}

/// E(v): unique integer k with k <= v < k+1.
inline Integer floor_value(const FieldValue& v) {
    return floor_surd(v.num(), v.surd_num(), v.den(), v.radicand());
}

/// Plain field addition, no reduction mod 1.
inline FieldValue add_raw(const FieldValue& x, const FieldValue& y) {
    const Integer& d = detail::joint_radicand(x, y);
    return FieldValue(x.num() * y.den() + y.num() * x.den(),
                      x.surd_num() * y.den() + y.surd_num() * x.den(),
                      x.den() * y.den(), d);
}

/// Plain field subtraction, no reduction mod 1.
inline FieldValue sub_raw(const FieldValue& x, const FieldValue& y) {
    const Integer& d = detail::joint_radicand(x, y);
    return FieldValue(x.num() * y.den() - y.num() * x.den(),
                      x.surd_num() * y.den() - y.surd_num() * x.den(),
                      x.den() * y.den(), d);
}

/// v * n for integer n, no reduction.
inline FieldValue scale_raw(const FieldValue& v, const Integer& n) {
    return FieldValue(v.num() * n, v.surd_num() * n, v.den(), v.radicand());
}

/// {v}: v - E(v), in [0,1).
inline FieldValue reduce_mod1(const FieldValue& v) {
    const Integer k = floor_value(v);
    if (k == 0) {
        return v;
    }
    return FieldValue(v.num() - k * v.den(), v.surd_num(), v.den(), v.radicand());
}

inline const FieldValue& field_one() {
    static const FieldValue one = FieldValue::from_integer(1);
    return one;
}

/// {r1 + r2} for r1, r2 already in [0,1): the sum, minus 1 when it reaches 1.
inline FieldValue frac_add(const FieldValue& r1, const FieldValue& r2) {
    FieldValue s = add_raw(r1, r2);
    if (compare(s, field_one()) >= 0) {
        return sub_raw(s, field_one());
    }
    return s;
}

/// {r1 - r2} for r1, r2 in [0,1): the difference, plus 1 when it wraps.
inline FieldValue frac_sub(const FieldValue& r1, const FieldValue& r2) {
    if (compare(r1, r2) >= 0) {
        return sub_raw(r1, r2);
    }
    return add_raw(sub_raw(r1, r2), field_one());
}

/// ||x|| = min({x}, 1 - {x}) for x in [0,1); lands in [0, 1/2].
inline FieldValue norm_dist(const FieldValue& x) {
    FieldValue mirror = sub_raw(field_one(), x);
    if (compare(x, mirror) <= 0) {
        return x;
    }
    return mirror;
}

}  // namespace threegap
