#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "threegap/decimal.hpp"
#include "threegap/errors.hpp"
#include "threegap/gaps.hpp"
#include "threegap/oracle.hpp"

namespace threegap {

enum class OutputFormat { Json, Csv, Table };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "json") {
        return OutputFormat::Json;
    }
    if (s == "csv") {
        return OutputFormat::Csv;
    }
    if (s == "table") {
        return OutputFormat::Table;
    }
    throw ParseError("unknown format '" + s + "'");
}

/// Decimal precision of every length field in reports.
inline constexpr unsigned kLengthDigits = 12;

using json = nlohmann::ordered_json;

/// (A + B*sqrt(d))/C as {"a": "...", "b": "...", "c": "...", "d": "..."}.
/// Strings, not numbers: the integers routinely outgrow 64 bits.
inline json length_exact_json(const FieldValue& v) {
    return json{{"a", to_string(v.num())},
                {"b", to_string(v.surd_num())},
                {"c", to_string(v.den())},
                {"d", to_string(v.radicand())}};
}

inline json gaps_json(const GapReport& rep) {
    json classes = json::array();
    for (const GapClass& cls : rep.classes) {
        classes.push_back(json{{"kind", gap_kind_name(cls.kind)},
                               {"length_exact", length_exact_json(cls.length)},
                               {"length_decimal", to_decimal(cls.length, kLengthDigits)},
                               {"count", cls.count}});
    }
    return json{{"alpha", rep.alpha.text}, {"n", rep.n},    {"first", rep.first},
                {"last", rep.last},        {"m", rep.m},    {"classes", classes}};
}

namespace detail {

/// Minimal CSV quoting: only fields containing a delimiter, quote, or
/// newline get wrapped, with inner quotes doubled.
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

inline std::string render_gaps(const GapReport& rep, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) {
        return gaps_json(rep).dump(2) + "\n";
    }
    std::ostringstream os;
    if (fmt == OutputFormat::Csv) {
        os << "alpha,n,first,last,kind,length_decimal,count\n";
        for (const GapClass& cls : rep.classes) {
            os << detail::csv_field(rep.alpha.text) << ',' << rep.n << ',' << rep.first
               << ',' << rep.last << ',' << gap_kind_name(cls.kind) << ','
               << to_decimal(cls.length, kLengthDigits) << ',' << cls.count << '\n';
        }
        return os.str();
    }
    os << "alpha: " << rep.alpha.text << "\n";
    os << "n: " << rep.n << "  first: " << rep.first << "  last: " << rep.last
       << "  m: " << rep.m << "\n";
    os << std::setw(12) << "kind" << "  " << std::setw(18) << "length_decimal" << "  "
       << std::setw(24) << "length_exact" << "  " << std::setw(5) << "count" << "\n";
    for (const GapClass& cls : rep.classes) {
        os << std::setw(12) << gap_kind_name(cls.kind) << "  " << std::setw(18)
           << to_decimal(cls.length, kLengthDigits) << "  " << std::setw(24)
           << cls.length.to_exact_text() << "  " << std::setw(5) << cls.count << "\n";
    }
    return os.str();
}

inline std::string render_after_single(const Angle& alpha, std::uint64_t n,
                                       const AfterTable& table, std::uint64_t index,
                                       OutputFormat fmt) {
    const Branch b = branch_of(n, table.first, table.last, index);
    const std::uint64_t succ = table.next[index];
    if (fmt == OutputFormat::Json) {
        json j{{"alpha", alpha.text},   {"n", n},
               {"first", table.first},  {"last", table.last},
               {"index", index},        {"after", succ},
               {"crosses", gap_kind_name(branch_kind(b))}};
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (fmt == OutputFormat::Csv) {
        os << "alpha,n,index,after,crosses\n";
        os << detail::csv_field(alpha.text) << ',' << n << ',' << index << ',' << succ
           << ',' << gap_kind_name(branch_kind(b)) << '\n';
        return os.str();
    }
    os << "alpha: " << alpha.text << "\n";
    os << "n: " << n << "  first: " << table.first << "  last: " << table.last << "\n";
    os << "after(" << index << ") = " << succ << "  crossing a "
       << gap_kind_name(branch_kind(b)) << "\n";
    return os.str();
}

inline std::string render_after_table(const Angle& alpha, std::uint64_t n,
                                      const AfterTable& table, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) {
        json j{{"alpha", alpha.text},
               {"n", n},
               {"first", table.first},
               {"last", table.last},
               {"next", table.next}};
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (fmt == OutputFormat::Csv) {
        os << "alpha,n,index,after,crosses\n";
        for (std::uint64_t m = 0; m < n; ++m) {
            const Branch b = branch_of(n, table.first, table.last, m);
            os << detail::csv_field(alpha.text) << ',' << n << ',' << m << ','
               << table.next[m] << ',' << gap_kind_name(branch_kind(b)) << '\n';
        }
        return os.str();
    }
    os << "alpha: " << alpha.text << "\n";
    os << "n: " << n << "  first: " << table.first << "  last: " << table.last << "\n";
    os << std::setw(8) << "index" << "  " << std::setw(8) << "after" << "  "
       << std::setw(12) << "crosses" << "\n";
    for (std::uint64_t m = 0; m < n; ++m) {
        const Branch b = branch_of(n, table.first, table.last, m);
        os << std::setw(8) << m << "  " << std::setw(8) << table.next[m] << "  "
           << std::setw(12) << gap_kind_name(branch_kind(b)) << "\n";
    }
    return os.str();
}

struct VerifySummary {
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::uint64_t skipped = 0;
};

inline VerifySummary summarize(const std::vector<VerificationReport>& reports) {
    VerifySummary s;
    for (const VerificationReport& r : reports) {
        if (r.skipped) {
            ++s.skipped;
        } else if (r.all_passed()) {
            ++s.passed;
        } else {
            ++s.failed;
        }
    }
    return s;
}

/// Reports arrive in the caller's (deterministic) sweep order and are
/// rendered in that order, so equal inputs give byte-equal output.
inline std::string render_verify(const std::vector<VerificationReport>& reports,
                                 OutputFormat fmt) {
    const VerifySummary s = summarize(reports);
    if (fmt == OutputFormat::Json) {
        json failures = json::array();
        for (const VerificationReport& r : reports) {
            for (const CheckResult& c : r.checks) {
                if (!c.passed) {
                    failures.push_back(json{{"alpha", r.alpha.text},
                                            {"n", r.n},
                                            {"check", c.name},
                                            {"witness", c.witness}});
                }
            }
        }
        json j{{"passed", s.passed},
               {"failed", s.failed},
               {"skipped", s.skipped},
               {"failures", failures}};
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (fmt == OutputFormat::Csv) {
        os << "alpha,n,check,witness\n";
        for (const VerificationReport& r : reports) {
            for (const CheckResult& c : r.checks) {
                if (!c.passed) {
                    os << detail::csv_field(r.alpha.text) << ',' << r.n << ',' << c.name
                       << ',' << detail::csv_field(c.witness) << '\n';
                }
            }
        }
        return os.str();
    }
    os << "verify: " << s.passed << " passed, " << s.failed << " failed, " << s.skipped
       << " skipped\n";
    for (const VerificationReport& r : reports) {
        for (const CheckResult& c : r.checks) {
            if (!c.passed) {
                os << "FAIL alpha=" << r.alpha.text << " n=" << r.n << " check=" << c.name
                   << " witness=" << c.witness << "\n";
            }
        }
    }
    return os.str();
}

}  // namespace threegap
