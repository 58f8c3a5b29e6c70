#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "threegap/angle.hpp"
#include "threegap/errors.hpp"
#include "threegap/gaps.hpp"

using namespace threegap;

namespace {

FieldValue fv(long a, long b, long c, long d) {
    return FieldValue(Integer(a), Integer(b), Integer(c), Integer(d));
}

const Angle& golden() {
    static const Angle a = parse_angle("golden");
    return a;
}

}  // namespace

TEST_CASE("first and last on pinned configurations") {
    CHECK(first_point({golden(), 2}) == 1);
    CHECK(last_point({golden(), 2}) == 1);
    CHECK(first_point({golden(), 5}) == 2);
    CHECK(last_point({golden(), 5}) == 3);
    CHECK(first_point({golden(), 12}) == 5);
    CHECK(last_point({golden(), 12}) == 8);
}

TEST_CASE("extrema agree with the span scans") {
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<long> coef(-300, 300);
    std::uniform_int_distribution<long> den(1, 300);
    std::uniform_int_distribution<std::uint64_t> size(2, 80);
    for (int i = 0; i < 25; ++i) {
        long b = coef(rng);
        if (b == 0) {
            b = 1;
        }
        const Angle a(fv(coef(rng), b, den(rng), 19));
        const std::uint64_t n = size(rng);
        const CircleConfig cfg{a, n};
        const Extrema e = extrema_points(cfg);
        const auto orbit = frac_orbit(a, n);
        CHECK(e.first == first_in_span(orbit, n));
        CHECK(e.last == last_in_span(orbit, n));
    }
}

TEST_CASE("successor by direct search on pinned configurations") {
    CHECK(after_inductive({golden(), 4}, 2) == 1);
    CHECK(after_inductive({golden(), 4}, 0) == 2);
    CHECK(after_inductive({golden(), 4}, 3) == 0);
}

TEST_CASE("closed form table on a pinned configuration") {
    const AfterTable t = closed_form_table({golden(), 4});
    CHECK(t.first == 2);
    CHECK(t.last == 3);
    CHECK(t.next == std::vector<std::uint64_t>{2, 3, 1, 0});
    CHECK(branch_of(4, 2, 3, 0) == Branch::First);
    CHECK(branch_of(4, 2, 3, 1) == Branch::First);
    CHECK(branch_of(4, 2, 3, 2) == Branch::Combined);
    CHECK(branch_of(4, 2, 3, 3) == Branch::Last);
    CHECK(branch_kind(Branch::First) == GapKind::FirstGap);
    CHECK(branch_kind(Branch::Combined) == GapKind::CombinedGap);
    CHECK(branch_kind(Branch::Last) == GapKind::LastGap);
}

TEST_CASE("the successor table is one n-cycle") {
    std::mt19937_64 rng(8080);
    std::uniform_int_distribution<long> coef(-300, 300);
    std::uniform_int_distribution<long> den(1, 300);
    std::uniform_int_distribution<std::uint64_t> size(2, 200);
    for (int i = 0; i < 20; ++i) {
        long b = coef(rng);
        if (b == 0) {
            b = 7;
        }
        const Angle a(fv(coef(rng), b, den(rng), 29));
        const std::uint64_t n = size(rng);
        const AfterTable t = closed_form_table({a, n});
        std::set<std::uint64_t> seen;
        std::uint64_t at = 0;
        for (std::uint64_t step = 0; step < n; ++step) {
            CHECK(seen.insert(at).second);
            at = t.next[at];
        }
        CHECK(at == 0);
        CHECK(seen.size() == n);
    }
}

TEST_CASE("census of golden with four points") {
    const GapReport r = gap_census({golden(), 4});
    CHECK(r.n == 4);
    CHECK(r.first == 2);
    CHECK(r.last == 3);
    CHECK(r.m == 5);
    REQUIRE(r.classes.size() == 3);
    CHECK(r.classes[0].kind == GapKind::FirstGap);
    CHECK(r.classes[0].length == fv(-2, 1, 1, 5));
    CHECK(r.classes[0].count == 2);
    CHECK(r.classes[1].kind == GapKind::LastGap);
    CHECK(r.classes[1].length == fv(7, -3, 2, 5));
    CHECK(r.classes[1].count == 1);
    CHECK(r.classes[2].kind == GapKind::CombinedGap);
    CHECK(r.classes[2].length == fv(3, -1, 2, 5));
    CHECK(r.classes[2].count == 1);
}

TEST_CASE("census of golden with five points is saturated") {
    const GapReport r = gap_census({golden(), 5});
    CHECK(r.first == 2);
    CHECK(r.last == 3);
    CHECK(r.m == 5);
    CHECK(is_saturated(5, 2, 3));
    REQUIRE(r.classes.size() == 2);
    CHECK(r.classes[0].kind == GapKind::FirstGap);
    CHECK(r.classes[0].count == 3);
    CHECK(r.classes[1].kind == GapKind::LastGap);
    CHECK(r.classes[1].count == 2);
}

TEST_CASE("census of a full rational cycle") {
    const GapReport r = gap_census({parse_angle("3/7"), 7});
    CHECK(r.first == 5);
    CHECK(r.last == 2);
    CHECK(r.m == 7);
    REQUIRE(r.classes.size() == 2);
    CHECK(r.classes[0].length == FieldValue::rational(1, 7));
    CHECK(r.classes[0].count == 2);
    CHECK(r.classes[1].length == FieldValue::rational(1, 7));
    CHECK(r.classes[1].count == 5);
}

TEST_CASE("census counts follow the closed form") {
    std::mt19937_64 rng(1717);
    std::uniform_int_distribution<long> coef(-200, 200);
    std::uniform_int_distribution<long> den(1, 200);
    std::uniform_int_distribution<std::uint64_t> size(2, 150);
    for (int i = 0; i < 25; ++i) {
        long b = coef(rng);
        if (b == 0) {
            b = 5;
        }
        const Angle a(fv(coef(rng), b, den(rng), 31));
        const std::uint64_t n = size(rng);
        const GapReport r = gap_census({a, n});
        std::uint64_t total = 0;
        FieldValue measure;
        for (const GapClass& cls : r.classes) {
            total += cls.count;
            measure = add_raw(measure, scale_raw(cls.length, Integer(cls.count)));
        }
        CHECK(total == n);
        CHECK(measure == field_one());
        CHECK(r.classes[0].count == n - r.first);
        CHECK(r.classes[1].count == n - r.last);
        if (r.classes.size() == 3) {
            CHECK(r.classes[2].count == r.first + r.last - n);
        }
    }
}

TEST_CASE("degenerate configurations") {
    CHECK_THROWS_AS(gap_census({golden(), 0}), EmptyCircle);

    const GapReport single = gap_census({golden(), 1});
    CHECK(single.first == 0);
    CHECK(single.last == 0);
    CHECK(single.m == 0);
    REQUIRE(single.classes.size() == 1);
    CHECK(single.classes[0].kind == GapKind::LastGap);
    CHECK(single.classes[0].length == field_one());
    CHECK(single.classes[0].count == 1);

    CHECK_THROWS_AS(first_point({golden(), 1}), TooFewPoints);
    CHECK_THROWS_AS(first_point({golden(), 0}), TooFewPoints);
    CHECK_THROWS_AS(gap_census({parse_angle("1/3"), 4}), PointCollision);
    CHECK_THROWS_AS(gap_census({parse_angle("0/1"), 2}), PointCollision);
    CHECK_NOTHROW(gap_census({parse_angle("1/3"), 3}));
}

TEST_CASE("rational census at the cycle boundary") {
    const GapReport r = gap_census({parse_angle("1/3"), 3});
    CHECK(r.first == 1);
    CHECK(r.last == 2);
    REQUIRE(r.classes.size() == 2);
    CHECK(r.classes[0].length == FieldValue::rational(1, 3));
    CHECK(r.classes[1].length == FieldValue::rational(1, 3));
}
