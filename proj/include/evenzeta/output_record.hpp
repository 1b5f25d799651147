#pragma once

// Machine-readable records emitted by the command-line tool.
//
// json-lines: one object per line, absent fields omitted. Exact rationals
// travel as decimal integer strings in numerator/denominator.
// csv: a header row with every column, absent fields left empty.

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "evenzeta/rational.hpp"
#include "evenzeta/verification_report.hpp"

namespace evenzeta {

enum class RecordKind { ratio, decimal, bernoulli, euler_poly, phi, report, bench };

inline std::string_view to_string(RecordKind k) {
    switch (k) {
        case RecordKind::ratio: return "ratio";
        case RecordKind::decimal: return "decimal";
        case RecordKind::bernoulli: return "bernoulli";
        case RecordKind::euler_poly: return "euler_poly";
        case RecordKind::phi: return "phi";
        case RecordKind::report: return "report";
        case RecordKind::bench: return "bench";
    }
    return "?";
}

inline RecordKind parse_record_kind(std::string_view s) {
    for (auto k : {RecordKind::ratio, RecordKind::decimal, RecordKind::bernoulli, RecordKind::euler_poly,
                   RecordKind::phi, RecordKind::report, RecordKind::bench}) {
        if (to_string(k) == s) {
            return k;
        }
    }
    throw std::invalid_argument("unknown record kind: " + std::string(s));
}

struct OutputRecord {
    RecordKind kind = RecordKind::ratio;
    std::optional<std::string> identity;
    std::optional<std::int64_t> k;
    std::optional<std::int64_t> m;
    std::optional<std::int64_t> n;
    std::optional<std::string> u;
    std::optional<std::string> x;
    std::optional<std::string> numerator;
    std::optional<std::string> denominator;
    std::optional<std::string> decimal;
    std::optional<std::int64_t> digits;
    std::optional<bool> passed;
    std::optional<std::string> residual;
    std::optional<std::string> tolerance;
    std::optional<std::int64_t> terms;
    std::optional<std::int64_t> jmax;
    std::optional<std::string> seconds;

    void set_exact(const Rational& r) {
        numerator = r.numerator().get_str();
        denominator = r.denominator().get_str();
    }

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline constexpr std::array<std::string_view, 17> kRecordColumns{
    "kind", "identity", "k", "m", "n", "u", "x", "numerator", "denominator",
    "decimal", "digits", "passed", "residual", "tolerance", "terms", "jmax", "seconds"};

namespace detail {

// Visits (name, member) pairs in column order.
template <typename Rec, typename Fn>
void for_each_field(Rec& r, Fn&& fn) {
    fn("identity", r.identity);
    fn("k", r.k);
    fn("m", r.m);
    fn("n", r.n);
    fn("u", r.u);
    fn("x", r.x);
    fn("numerator", r.numerator);
    fn("denominator", r.denominator);
    fn("decimal", r.decimal);
    fn("digits", r.digits);
    fn("passed", r.passed);
    fn("residual", r.residual);
    fn("tolerance", r.tolerance);
    fn("terms", r.terms);
    fn("jmax", r.jmax);
    fn("seconds", r.seconds);
}

template <typename T>
std::string field_text(const T& v) {
    if constexpr (std::is_same_v<T, bool>) {
        return v ? "true" : "false";
    } else if constexpr (std::is_same_v<T, std::string>) {
        return v;
    } else {
        return std::to_string(v);
    }
}

template <typename T>
T parse_field(const std::string& s) {
    if constexpr (std::is_same_v<T, bool>) {
        if (s == "true") {
            return true;
        }
        if (s == "false") {
            return false;
        }
        throw std::invalid_argument("bad boolean: " + s);
    } else if constexpr (std::is_same_v<T, std::string>) {
        return s;
    } else {
        return static_cast<T>(std::stoll(s));
    }
}

inline std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out(1);
    for (char c : line) {
        if (c == ',') {
            out.emplace_back();
        } else {
            out.back() += c;
        }
    }
    return out;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const OutputRecord& r) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(r.kind);
    detail::for_each_field(r, [&](const char* name, const auto& field) {
        if (field) {
            j[name] = *field;
        }
    });
    return j;
}

inline OutputRecord record_from_json(const nlohmann::json& j) {
    OutputRecord r;
    r.kind = parse_record_kind(j.at("kind").get<std::string>());
    detail::for_each_field(r, [&](const char* name, auto& field) {
        if (j.contains(name)) {
            field = j.at(name).get<typename std::decay_t<decltype(field)>::value_type>();
        }
    });
    return r;
}

inline std::string to_json_line(const OutputRecord& r) { return to_json(r).dump(); }

inline std::string csv_header() {
    std::string out;
    for (auto c : kRecordColumns) {
        out += (out.empty() ? "" : ",") + std::string(c);
    }
    return out;
}

/// No field contains a comma (rationals use '/', decimals '.'), so no quoting.
inline std::string to_csv_row(const OutputRecord& r) {
    std::string out(to_string(r.kind));
    detail::for_each_field(r, [&](const char*, const auto& field) {
        out += ',';
        if (field) {
            out += detail::field_text(*field);
        }
    });
    return out;
}

inline OutputRecord record_from_csv(const std::string& row) {
    const auto cells = detail::split_csv(row);
    if (cells.size() != kRecordColumns.size()) {
        throw std::invalid_argument("csv row has " + std::to_string(cells.size()) + " cells");
    }
    OutputRecord r;
    r.kind = parse_record_kind(cells[0]);
    std::size_t i = 1;
    detail::for_each_field(r, [&](const char*, auto& field) {
        const std::string& cell = cells[i++];
        if (!cell.empty()) {
            field = detail::parse_field<typename std::decay_t<decltype(field)>::value_type>(cell);
        }
    });
    return r;
}

/// Human-readable single line: "kind key=value ...".
inline std::string to_plain(const OutputRecord& r) {
    std::string out(to_string(r.kind));
    detail::for_each_field(r, [&](const char* name, const auto& field) {
        if (field) {
            out += ' ';
            out += name;
            out += '=';
            out += detail::field_text(*field);
        }
    });
    return out;
}

/// Report -> record. Integer-valued parameters named like record fields are
/// lifted into those fields.
inline OutputRecord record_from_report(const VerificationReport& rep) {
    OutputRecord r;
    r.kind = RecordKind::report;
    r.identity = rep.identity;
    const auto int_param = [&](const char* name) -> std::optional<std::int64_t> {
        if (auto v = rep.parameter(name)) {
            return std::stoll(*v);
        }
        return std::nullopt;
    };
    r.k = int_param("k");
    r.m = int_param("m");
    r.u = rep.parameter("u");
    r.digits = int_param("digits");
    r.terms = int_param("terms");
    r.jmax = int_param("jmax");
    if (auto kmax = int_param("kmax")) {
        r.k = kmax;
    }
    r.passed = rep.passed;
    r.residual = rep.residual.to_string(12);
    r.tolerance = rep.tolerance.to_string(12);
    return r;
}

}  // namespace evenzeta
