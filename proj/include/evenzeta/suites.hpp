#pragma once

// Named batches of identity checks, as run by `evenzeta verify`.

#include <algorithm>
#include <cstddef>
#include <future>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "evenzeta/rational.hpp"
#include "evenzeta/series_verifier.hpp"
#include "evenzeta/verification_report.hpp"
#include "evenzeta/zeta_recurrence.hpp"

namespace evenzeta {

enum class Suite { recurrence, expansion, abel, phi, all };

inline Suite parse_suite(std::string_view s) {
    if (s == "recurrence") return Suite::recurrence;
    if (s == "expansion") return Suite::expansion;
    if (s == "abel") return Suite::abel;
    if (s == "phi") return Suite::phi;
    if (s == "all") return Suite::all;
    throw std::invalid_argument("unknown suite: " + std::string(s));
}

struct SuiteOptions {
    std::size_t kmax = 50;
    /// N for the direct-summation brackets.
    std::size_t terms = 1000;
    std::size_t jmax = 25;
    int digits = kDefaultDigits;
};

/// 10^-1, ..., 10^-count
inline std::vector<Rational> decade_deltas(int count) {
    std::vector<Rational> out;
    Integer den = 1;
    for (int i = 0; i < count; ++i) {
        den *= 10;
        out.emplace_back(Integer(1), den);
    }
    return out;
}

/// Fixed sample of rationals in (1, 4] used for the phi_0 closed form.
inline std::vector<Rational> closed_form_sample() {
    std::vector<Rational> out;
    for (long i = 1; i <= 20; ++i) {
        out.emplace_back(Rational(1) + Rational((i * 37) % 61 + 1, 20 + (i * 13) % 7));
    }
    return out;
}

inline std::vector<VerificationReport> run_recurrence_suite(const SuiteOptions& opt) {
    std::vector<VerificationReport> out;
    out.push_back(recurrence_cross_check(opt.kmax));
    for (std::size_t k = 1; k <= std::min<std::size_t>(opt.kmax, 10); ++k) {
        out.push_back(zeta_bracket_check(k, opt.terms, opt.digits));
    }
    return out;
}

inline std::vector<VerificationReport> run_expansion_suite(const SuiteOptions& opt) {
    std::vector<VerificationReport> out;
    out.push_back(identity_check_expansion(1, Rational(3, 2), opt.jmax, opt.digits));
    out.push_back(identity_check_expansion(2, Rational(2), opt.jmax, opt.digits));
    out.push_back(identity_check_expansion(3, Rational(3, 2), opt.jmax, opt.digits));
    return out;
}

inline std::vector<VerificationReport> run_abel_suite(const SuiteOptions& opt) {
    std::vector<VerificationReport> out;
    for (std::size_t k : {1u, 2u}) {
        out.push_back(abel_limit_check(k, decade_deltas(4), opt.digits));
    }
    return out;
}

inline std::vector<VerificationReport> run_phi_suite(const SuiteOptions& opt) {
    std::vector<VerificationReport> out;
    for (const Rational& u : {Rational(3, 2), Rational(2), Rational(3)}) {
        for (std::size_t m = 0; m <= 20; ++m) {
            out.push_back(phi_route_check(m, u, opt.digits));
        }
    }
    for (const Rational& u : closed_form_sample()) {
        out.push_back(phi_closed_form_check(u, opt.digits));
    }
    for (long m : {2L, 3L, 4L, 6L}) {
        out.push_back(phi_boundary_check(m, decade_deltas(4), opt.digits));
    }
    return out;
}

/// Reports in suite order (recurrence, expansion, abel, phi). `all` runs the
/// suites concurrently and concatenates in that order.
inline std::vector<VerificationReport> run_suite(Suite suite, const SuiteOptions& opt) {
    switch (suite) {
        case Suite::recurrence: return run_recurrence_suite(opt);
        case Suite::expansion: return run_expansion_suite(opt);
        case Suite::abel: return run_abel_suite(opt);
        case Suite::phi: return run_phi_suite(opt);
        case Suite::all: break;
    }
    std::vector<std::future<std::vector<VerificationReport>>> parts;
    for (Suite s : {Suite::recurrence, Suite::expansion, Suite::abel, Suite::phi}) {
        parts.push_back(std::async(std::launch::async, [s, &opt] { return run_suite(s, opt); }));
    }
    std::vector<VerificationReport> out;
    for (auto& p : parts) {
        auto reports = p.get();
        out.insert(out.end(), std::make_move_iterator(reports.begin()), std::make_move_iterator(reports.end()));
    }
    return out;
}

}  // namespace evenzeta
