#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <string>
#include <vector>

#include "threegap/angle.hpp"
#include "threegap/render.hpp"
#include "threegap/report.hpp"

using namespace threegap;

namespace {

const Angle& golden() {
    static const Angle a = parse_angle("golden");
    return a;
}

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t at = haystack.find(needle); at != std::string::npos;
         at = haystack.find(needle, at + needle.size())) {
        ++n;
    }
    return n;
}

/// Values of every occurrence of attr="..." in document order.
std::vector<std::string> attr_values(const std::string& svg, const std::string& attr) {
    std::vector<std::string> out;
    const std::string key = attr + "=\"";
    for (std::size_t at = svg.find(key); at != std::string::npos;
         at = svg.find(key, at + 1)) {
        const std::size_t start = at + key.size();
        const std::size_t end = svg.find('"', start);
        out.push_back(svg.substr(start, end - start));
    }
    return out;
}

}  // namespace

TEST_CASE("gaps json carries the full census") {
    const json j = gaps_json(gap_census({golden(), 4}));
    CHECK(j["alpha"] == "golden");
    CHECK(j["n"] == 4);
    CHECK(j["first"] == 2);
    CHECK(j["last"] == 3);
    CHECK(j["m"] == 5);
    REQUIRE(j["classes"].size() == 3);
    CHECK(j["classes"][0]["kind"] == "FirstGap");
    CHECK(j["classes"][0]["length_exact"]["a"] == "-2");
    CHECK(j["classes"][0]["length_exact"]["b"] == "1");
    CHECK(j["classes"][0]["length_exact"]["c"] == "1");
    CHECK(j["classes"][0]["length_exact"]["d"] == "5");
    CHECK(j["classes"][0]["length_decimal"] == "0.236067977500");
    CHECK(j["classes"][0]["count"] == 2);
    CHECK(j["classes"][1]["kind"] == "LastGap");
    CHECK(j["classes"][1]["length_decimal"] == "0.145898033750");
    CHECK(j["classes"][2]["kind"] == "CombinedGap");
    CHECK(j["classes"][2]["length_decimal"] == "0.381966011250");
}

TEST_CASE("rendered gaps json is stable and re-parses") {
    const GapReport rep = gap_census({golden(), 12});
    const std::string once = render_gaps(rep, OutputFormat::Json);
    const std::string twice = render_gaps(rep, OutputFormat::Json);
    CHECK(once == twice);
    CHECK(once.back() == '\n');
    const json parsed = json::parse(once);
    CHECK(parsed["first"] == 5);
    CHECK(parsed["last"] == 8);
    CHECK(parsed["m"] == 13);
}

TEST_CASE("gaps csv has the pinned header and one row per class") {
    const std::string csv = render_gaps(gap_census({golden(), 4}), OutputFormat::Csv);
    REQUIRE(csv.substr(0, csv.find('\n')) ==
            "alpha,n,first,last,kind,length_decimal,count");
    CHECK(count_occurrences(csv, "\n") == 4);
    CHECK(csv.find("golden,4,2,3,FirstGap,0.236067977500,2\n") != std::string::npos);
    CHECK(csv.find("golden,4,2,3,LastGap,0.145898033750,1\n") != std::string::npos);
    CHECK(csv.find("golden,4,2,3,CombinedGap,0.381966011250,1\n") != std::string::npos);
}

TEST_CASE("gaps table is human readable") {
    const std::string table = render_gaps(gap_census({golden(), 12}), OutputFormat::Table);
    CHECK(table.find("alpha: golden") != std::string::npos);
    CHECK(table.find("n: 12  first: 5  last: 8  m: 13") != std::string::npos);
    CHECK(table.find("FirstGap") != std::string::npos);
}

TEST_CASE("after serializations") {
    const CircleConfig cfg{golden(), 4};
    const AfterTable t = closed_form_table(cfg);

    const std::string single = render_after_single(cfg.alpha, 4, t, 2, OutputFormat::Json);
    const json js = json::parse(single);
    CHECK(js["index"] == 2);
    CHECK(js["after"] == 1);
    CHECK(js["crosses"] == "CombinedGap");

    const std::string csv = render_after_table(cfg.alpha, 4, t, OutputFormat::Csv);
    REQUIRE(csv.substr(0, csv.find('\n')) == "alpha,n,index,after,crosses");
    CHECK(count_occurrences(csv, "\n") == 5);
    CHECK(csv.find("golden,4,0,2,FirstGap\n") != std::string::npos);
    CHECK(csv.find("golden,4,3,0,LastGap\n") != std::string::npos);

    const std::string full = render_after_table(cfg.alpha, 4, t, OutputFormat::Json);
    const json jf = json::parse(full);
    CHECK(jf["next"] == json::array({2, 3, 1, 0}));

    const std::string table = render_after_single(cfg.alpha, 4, t, 2, OutputFormat::Table);
    CHECK(table.find("after(2) = 1") != std::string::npos);
}

TEST_CASE("verify rendering") {
    std::vector<VerificationReport> reports;
    for (std::uint64_t n = 2; n <= 10; ++n) {
        reports.push_back(verify_config({parse_angle("1/3"), n}, VerifyDepth::Census));
    }
    CHECK(render_verify(reports, OutputFormat::Table) ==
          "verify: 2 passed, 0 failed, 7 skipped\n");

    const json j = json::parse(render_verify(reports, OutputFormat::Json));
    CHECK(j["passed"] == 2);
    CHECK(j["failed"] == 0);
    CHECK(j["skipped"] == 7);
    CHECK(j["failures"].empty());
}

TEST_CASE("verify rendering reports failures with quoting intact") {
    VerificationReport rep;
    rep.alpha = parse_angle("golden");
    rep.n = 9;
    rep.checks.push_back({"census-matches-brute", false, "census a, b vs orbit c"});
    const std::vector<VerificationReport> reports{rep};

    const std::string table = render_verify(reports, OutputFormat::Table);
    CHECK(table.find("verify: 0 passed, 1 failed, 0 skipped") != std::string::npos);
    CHECK(table.find("FAIL alpha=golden n=9 check=census-matches-brute") !=
          std::string::npos);

    const std::string csv = render_verify(reports, OutputFormat::Csv);
    CHECK(csv.find("golden,9,census-matches-brute,\"census a, b vs orbit c\"") !=
          std::string::npos);
}

TEST_CASE("svg structure of a saturated configuration") {
    const std::string svg = render_svg({golden(), 5});
    CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
    CHECK(svg.find("data-alpha=\"golden\"") != std::string::npos);
    CHECK(svg.find("data-n=\"5\"") != std::string::npos);
    CHECK(count_occurrences(svg, "<path ") == 5);
    CHECK(svg.find("#1f77b4") != std::string::npos);
    CHECK(svg.find("#d62728") != std::string::npos);
    CHECK(svg.find("#2ca02c") == std::string::npos);

    const auto sweeps = attr_values(svg, "data-sweep-deg");
    REQUIRE(sweeps.size() == 5);
    long double total = 0;
    for (const std::string& s : sweeps) {
        total += strtold(s.c_str(), nullptr);
    }
    CHECK(std::abs(static_cast<double>(total - 360.0L)) < 1e-9);

    const auto starts = attr_values(svg, "data-start");
    std::vector<std::string> sorted_starts = starts;
    std::sort(sorted_starts.begin(), sorted_starts.end());
    CHECK(sorted_starts == std::vector<std::string>{"0", "1", "2", "3", "4"});
}

TEST_CASE("svg shows all three kinds when present") {
    const std::string svg = render_svg({golden(), 4});
    CHECK(svg.find("#1f77b4") != std::string::npos);
    CHECK(svg.find("#d62728") != std::string::npos);
    CHECK(svg.find("#2ca02c") != std::string::npos);
    const auto kinds = attr_values(svg, "data-kind");
    REQUIRE(kinds.size() == 4);
}

TEST_CASE("svg single point is a full circle") {
    const std::string svg = render_svg({golden(), 1});
    CHECK(svg.find("<path ") == std::string::npos);
    CHECK(svg.find("data-sweep-deg=\"360\"") != std::string::npos);
    CHECK(svg.find("data-kind=\"LastGap\"") != std::string::npos);
}

TEST_CASE("svg label toggle") {
    RenderStyle plain;
    plain.label_points = false;
    CHECK(render_svg({golden(), 6}, plain).find("<text") == std::string::npos);
    CHECK(render_svg({golden(), 6}).find("<text") != std::string::npos);

    RenderStyle small;
    small.size_px = 64;
    const std::string svg = render_svg({golden(), 3}, small);
    CHECK(svg.find("width=\"64\"") != std::string::npos);
}

TEST_CASE("svg is deterministic") {
    const std::string a = render_svg({golden(), 16});
    const std::string b = render_svg({golden(), 16});
    CHECK(a == b);
}
