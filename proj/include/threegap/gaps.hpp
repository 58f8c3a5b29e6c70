#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "threegap/angle.hpp"
#include "threegap/errors.hpp"
#include "threegap/field_value.hpp"

namespace threegap {

/// The three possible arc lengths between circularly adjacent orbit points.
/// FirstGap is the arc of length {first*alpha}, LastGap the arc of length
/// 1 - {last*alpha}, CombinedGap the sum of the two.
enum class GapKind { FirstGap, LastGap, CombinedGap };

inline const char* gap_kind_name(GapKind k) {
    switch (k) {
        case GapKind::FirstGap: return "FirstGap";
        case GapKind::LastGap: return "LastGap";
        case GapKind::CombinedGap: return "CombinedGap";
    }
    return "?";
}

/// One equivalence class of gaps: every arc of this kind has this exact
/// length, and there are count of them around the circle.
struct GapClass {
    GapKind kind;
    FieldValue length;
    std::uint64_t count = 0;
};

/// The input of every computation here: the points {k*alpha}, 0 <= k < n_points.
struct CircleConfig {
    Angle alpha;
    std::uint64_t n_points = 0;
};

inline void require_nonempty(const CircleConfig& cfg) {
    if (cfg.n_points == 0) {
        throw EmptyCircle("no points on the circle (n = 0)");
    }
}

inline void require_pair(const CircleConfig& cfg) {
    if (cfg.n_points < 2) {
        throw TooFewPoints("need at least 2 points, got " +
                           std::to_string(cfg.n_points));
    }
}

/// Rational alpha = p/q repeats after q steps, so n > q collides. Irrational
/// alpha never collides: k*alpha - m*alpha is irrational for k != m.
inline void require_distinct(const CircleConfig& cfg) {
    if (cfg.alpha.is_rational() && Integer(cfg.n_points) > cfg.alpha.denominator()) {
        throw PointCollision("points repeat: alpha has denominator " +
                             to_string(cfg.alpha.denominator()) + " but n = " +
                             std::to_string(cfg.n_points));
    }
}

/// Index of the orbit point closest to 0 from above, among 1 <= m < n:
/// first(n) = argmin_m {m*alpha}. Grown incrementally: first(2) = 1, and a
/// candidate s replaces the champion exactly when {s*alpha} < {first*alpha}.
inline std::uint64_t first_in_span(const std::vector<FieldValue>& orbit,
                                   std::uint64_t n) {
    std::uint64_t f = 1;
    for (std::uint64_t s = 2; s < n; ++s) {
        const auto cmp = compare(orbit[s], orbit[f]);
        if (cmp == std::strong_ordering::equal) {
            throw PointCollision("points " + std::to_string(s) + " and " +
                                 std::to_string(f) + " coincide");
        }
        if (cmp == std::strong_ordering::less) {
            f = s;
        }
    }
    return f;
}

/// Index of the orbit point closest to 1 from below: last(n) = argmax_m {m*alpha}.
inline std::uint64_t last_in_span(const std::vector<FieldValue>& orbit,
                                  std::uint64_t n) {
    std::uint64_t l = 1;
    for (std::uint64_t s = 2; s < n; ++s) {
        const auto cmp = compare(orbit[s], orbit[l]);
        if (cmp == std::strong_ordering::equal) {
            throw PointCollision("points " + std::to_string(s) + " and " +
                                 std::to_string(l) + " coincide");
        }
        if (cmp == std::strong_ordering::greater) {
            l = s;
        }
    }
    return l;
}

struct Extrema {
    std::uint64_t first = 0;
    std::uint64_t last = 0;
};

/// first(n) and last(n) in one pass with O(1) memory: the orbit point is a
/// running frac_add accumulator, never materialized as a vector.
inline Extrema extrema_points(const CircleConfig& cfg) {
    require_pair(cfg);
    require_distinct(cfg);
    const std::uint64_t n = cfg.n_points;
    FieldValue point = cfg.alpha.value;
    FieldValue best_min = point;
    FieldValue best_max = point;
    Extrema e{1, 1};
    for (std::uint64_t s = 2; s < n; ++s) {
        point = frac_add(point, cfg.alpha.value);
        if (compare(point, best_min) < 0) {
            best_min = point;
            e.first = s;
        } else if (compare(point, best_max) > 0) {
            best_max = point;
            e.last = s;
        }
    }
    return e;
}

inline std::uint64_t first_point(const CircleConfig& cfg) {
    return extrema_points(cfg).first;
}

inline std::uint64_t last_point(const CircleConfig& cfg) {
    return extrema_points(cfg).last;
}

/// Successor of point m by direct search, the defining construction: among
/// all k < n with {k*alpha} > {m*alpha}, the one with the smallest value;
/// 0 when no such k exists (m is the topmost point, its successor wraps).
inline std::uint64_t after_in_span(const std::vector<FieldValue>& orbit,
                                   std::uint64_t n, std::uint64_t m) {
    std::uint64_t best = 0;
    bool found = false;
    for (std::uint64_t k = 0; k < n; ++k) {
        if (k == m) {
            continue;
        }
        if (compare(orbit[k], orbit[m]) > 0 &&
            (!found || compare(orbit[k], orbit[best]) < 0)) {
            best = k;
            found = true;
        }
    }
    return found ? best : 0;
}

inline std::uint64_t after_inductive(const CircleConfig& cfg, std::uint64_t m) {
    require_pair(cfg);
    require_distinct(cfg);
    return after_in_span(frac_orbit(cfg.alpha, cfg.n_points), cfg.n_points, m);
}

enum class Branch { First, Combined, Last };

/// Which of the three index bands m falls into. The bands are well ordered
/// because first + last >= n always holds, so n-first <= last.
inline Branch branch_of(std::uint64_t n, std::uint64_t f, std::uint64_t l,
                        std::uint64_t m) {
    if (m < n - f) {
        return Branch::First;
    }
    if (m < l) {
        return Branch::Combined;
    }
    return Branch::Last;
}

/// The arc crossed when stepping from m to its successor: each band's step
/// traverses exactly one gap of the matching kind.
inline GapKind branch_kind(Branch b) {
    switch (b) {
        case Branch::First: return GapKind::FirstGap;
        case Branch::Combined: return GapKind::CombinedGap;
        case Branch::Last: return GapKind::LastGap;
    }
    return GapKind::FirstGap;
}

/// The closed form: after(m) - m depends only on which band m lies in.
///   m in [0, n-first)     -> m + first
///   m in [n-first, last)  -> m + first - last
///   m in [last, n)        -> m - last
inline std::uint64_t after_closed_form(std::uint64_t n, std::uint64_t f,
                                       std::uint64_t l, std::uint64_t m) {
    switch (branch_of(n, f, l, m)) {
        case Branch::First: return m + f;
        case Branch::Combined: return m + f - l;
        case Branch::Last: return m - l;
    }
    return 0;
}

/// Successor table for the whole configuration, one closed-form evaluation
/// per index. The table is a single n-cycle through the points in circular
/// order starting at 0.
struct AfterTable {
    std::uint64_t first = 0;
    std::uint64_t last = 0;
    std::vector<std::uint64_t> next;
};

inline AfterTable closed_form_table(const CircleConfig& cfg) {
    const Extrema e = extrema_points(cfg);
    AfterTable t;
    t.first = e.first;
    t.last = e.last;
    t.next.resize(cfg.n_points);
    for (std::uint64_t m = 0; m < cfg.n_points; ++m) {
        t.next[m] = after_closed_form(cfg.n_points, e.first, e.last, m);
    }
    return t;
}

/// Full gap structure of a configuration.
/// m = first + last is the saturation bound: the census stops changing only
/// in shape, and n points always satisfy n <= m.
struct GapReport {
    Angle alpha;
    std::uint64_t n = 0;
    std::uint64_t first = 0;
    std::uint64_t last = 0;
    std::uint64_t m = 0;
    std::vector<GapClass> classes;
};

/// True when the census can have no CombinedGap class: n = first + last.
inline bool is_saturated(std::uint64_t n, std::uint64_t f, std::uint64_t l) {
    return f + l == n;
}

/// The census: every gap kind present, with its exact length and count.
///   FirstGap     length {first*alpha}      count n - first
///   LastGap      length 1 - {last*alpha}   count n - last
///   CombinedGap  sum of the two            count first + last - n
/// Kinds with count 0 are omitted. A single point is its own degenerate
/// census: one wraparound arc of length 1, reported as a LastGap.
inline GapReport gap_census(const CircleConfig& cfg) {
    require_nonempty(cfg);
    GapReport r;
    r.alpha = cfg.alpha;
    r.n = cfg.n_points;
    if (cfg.n_points == 1) {
        r.classes.push_back({GapKind::LastGap, field_one(), 1});
        return r;
    }
    const Extrema e = extrema_points(cfg);
    r.first = e.first;
    r.last = e.last;
    r.m = e.first + e.last;
    const FieldValue first_len = frac_point(cfg.alpha, e.first);
    const FieldValue last_len = sub_raw(field_one(), frac_point(cfg.alpha, e.last));
    r.classes.push_back({GapKind::FirstGap, first_len, cfg.n_points - e.first});
    r.classes.push_back({GapKind::LastGap, last_len, cfg.n_points - e.last});
    if (!is_saturated(cfg.n_points, e.first, e.last)) {
        r.classes.push_back({GapKind::CombinedGap, add_raw(first_len, last_len),
                             e.first + e.last - cfg.n_points});
    }
    return r;
}

}  // namespace threegap
