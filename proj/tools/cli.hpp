#pragma once

// Command-line front end. `run` is separate from main() so the tests can
// drive it with captured streams.

#include <chrono>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "evenzeta/bernoulli.hpp"
#include "evenzeta/euler_polynomial.hpp"
#include "evenzeta/output_record.hpp"
#include "evenzeta/rational.hpp"
#include "evenzeta/series_verifier.hpp"
#include "evenzeta/suites.hpp"
#include "evenzeta/zeta_recurrence.hpp"

namespace evenzeta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedCheck = 1;
inline constexpr int kExitUsage = 2;

enum class Format { plain, json_lines, csv };

class Emitter {
public:
    Emitter(std::ostream& out, Format format) : out_(out), format_(format) {}

    void emit(const OutputRecord& r) {
        switch (format_) {
            case Format::plain:
                out_ << to_plain(r) << '\n';
                break;
            case Format::json_lines:
                out_ << to_json_line(r) << '\n';
                break;
            case Format::csv:
                if (!header_written_) {
                    out_ << csv_header() << '\n';
                    header_written_ = true;
                }
                out_ << to_csv_row(r) << '\n';
                break;
        }
        if (r.passed && !*r.passed) {
            any_failed_ = true;
        }
    }

    bool any_failed() const { return any_failed_; }

private:
    std::ostream& out_;
    Format format_;
    bool header_written_ = false;
    bool any_failed_ = false;
};

struct Options {
    std::string format = "plain";

    std::optional<std::size_t> zeta_k;
    std::optional<std::size_t> zeta_kmax;
    bool zeta_exact = false;
    int digits = kDefaultDigits;

    std::size_t bernoulli_n = 0;

    std::size_t euler_m = 0;
    std::optional<std::string> euler_at;

    long phi_m = 0;
    std::string phi_u;
    std::string phi_route = "series";

    std::string suite = "all";
    SuiteOptions suite_options;

    std::size_t bench_kmax = 0;
};

inline void emit_zeta(Emitter& em, const Options& opt, std::size_t k) {
    OutputRecord r;
    r.k = static_cast<std::int64_t>(k);
    if (opt.zeta_exact) {
        r.kind = RecordKind::ratio;
        r.set_exact(zeta_even_ratio(k));
    } else {
        r.kind = RecordKind::decimal;
        r.decimal = zeta_even_decimal(k, opt.digits);
        r.digits = opt.digits;
    }
    em.emit(r);
}

inline void run_phi(Emitter& em, const Options& opt) {
    const Rational u = Rational::parse(opt.phi_u);
    OutputRecord r;
    r.kind = RecordKind::phi;
    r.m = opt.phi_m;
    r.u = u.to_string();
    if (opt.phi_route == "taylor") {
        if (opt.phi_m < 0) {
            throw DomainError("the taylor route needs m >= 0");
        }
        const auto m = static_cast<std::size_t>(opt.phi_m);
        r.set_exact(phi_taylor_coeff(m, u, m));
    } else {
        const PhiEvaluation e = phi_series(opt.phi_m, u, opt.digits);
        r.decimal = e.value.to_string();
        r.digits = opt.digits;
        r.terms = static_cast<std::int64_t>(e.terms_used);
        r.tolerance = e.error_bound.to_string(12);
    }
    em.emit(r);
}

inline void run_euler_poly(Emitter& em, const Options& opt) {
    const EulerPolynomial p = euler_polynomial(opt.euler_m);
    if (opt.euler_at) {
        const Rational x = Rational::parse(*opt.euler_at);
        OutputRecord r;
        r.kind = RecordKind::euler_poly;
        r.m = static_cast<std::int64_t>(opt.euler_m);
        r.x = x.to_string();
        r.set_exact(euler_polynomial_eval(p, x));
        em.emit(r);
        return;
    }
    for (std::size_t j = 0; j <= p.degree(); ++j) {
        OutputRecord r;
        r.kind = RecordKind::euler_poly;
        r.m = static_cast<std::int64_t>(opt.euler_m);
        r.n = static_cast<std::int64_t>(j);
        r.set_exact(p.coefficient(j));
        em.emit(r);
    }
}

inline void run_bench(Emitter& em, const Options& opt, std::ostream& err) {
    ZetaEvenTable table;
    double total = 0;
    for (std::size_t k = 1; k <= opt.bench_kmax; ++k) {
        const auto start = std::chrono::steady_clock::now();
        table.extend_to(k);
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        total += dt.count();
        OutputRecord r;
        r.kind = RecordKind::bench;
        r.k = static_cast<std::int64_t>(k);
        r.seconds = std::to_string(dt.count());
        em.emit(r);
    }
    err << "table through k=" << opt.bench_kmax << " built in " << total << " s\n";
}

/// Exit status: 0 on success, 1 if any emitted report failed, 2 on usage or
/// domain errors.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Exact even zeta values and numerical checks of the series identities behind them",
                 "evenzeta"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"plain", "json-lines", "csv"}))
        ->capture_default_str();

    auto* zeta = app.add_subcommand("zeta", "zeta(2k)/pi^(2k) exactly, or zeta(2k) as a decimal");
    auto* k_opt = zeta->add_option("--k", opt.zeta_k, "Index k >= 1")->check(CLI::PositiveNumber);
    auto* kmax_opt = zeta->add_option("--kmax", opt.zeta_kmax, "Emit k = 1..kmax")->check(CLI::PositiveNumber);
    k_opt->excludes(kmax_opt);
    zeta->add_flag("--exact", opt.zeta_exact, "Emit the exact ratio instead of a decimal");
    zeta->add_option("--digits", opt.digits, "Significant digits")->check(CLI::Range(kMinDigits, 100000));

    auto* bern = app.add_subcommand("bernoulli", "Bernoulli number B_n (B_1 = -1/2)");
    bern->add_option("--n", opt.bernoulli_n, "Index n >= 0")->required();

    auto* euler = app.add_subcommand("euler-poly", "Euler polynomial E_m(x)");
    euler->add_option("--m", opt.euler_m, "Degree m >= 0")->required();
    euler->add_option("--at", opt.euler_at, "Evaluate at a rational x instead of listing coefficients");

    auto* phi = app.add_subcommand("phi", "phi_m(u) from 2e^t/(e^t+u)");
    phi->add_option("--m", opt.phi_m, "Index m (negative allowed on the series route)")->required();
    phi->add_option("--u", opt.phi_u, "Rational u, e.g. 3/2")->required();
    phi->add_option("--route", opt.phi_route, "series or taylor")
        ->check(CLI::IsMember({"series", "taylor"}))
        ->capture_default_str();
    phi->add_option("--digits", opt.digits, "Significant digits")->check(CLI::Range(kMinDigits, 100000));

    auto* verify = app.add_subcommand("verify", "Run identity checks and emit one report per check");
    verify->add_option("--suite", opt.suite, "recurrence, expansion, abel, phi or all")
        ->check(CLI::IsMember({"recurrence", "expansion", "abel", "phi", "all"}))
        ->capture_default_str();
    verify->add_option("--kmax", opt.suite_options.kmax, "Largest k for the recurrence cross-check")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--terms", opt.suite_options.terms, "N for direct-summation brackets")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--jmax", opt.suite_options.jmax, "Truncation order of the cosine expansion")
        ->capture_default_str();
    verify->add_option("--digits", opt.suite_options.digits, "Working precision")
        ->check(CLI::Range(kMinDigits, 100000))
        ->capture_default_str();

    auto* bench = app.add_subcommand("bench", "Time each entry of a recurrence table build");
    bench->add_option("--kmax", opt.bench_kmax, "Largest k")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    const Format format = opt.format == "csv" ? Format::csv
                        : opt.format == "json-lines" ? Format::json_lines
                                                     : Format::plain;
    Emitter em(out, format);
    try {
        if (zeta->parsed()) {
            if (opt.zeta_kmax) {
                for (std::size_t k = 1; k <= *opt.zeta_kmax; ++k) {
                    emit_zeta(em, opt, k);
                }
            } else if (opt.zeta_k) {
                emit_zeta(em, opt, *opt.zeta_k);
            } else {
                err << "error: zeta needs --k or --kmax\n\n" << zeta->help();
                return kExitUsage;
            }
        } else if (bern->parsed()) {
            OutputRecord r;
            r.kind = RecordKind::bernoulli;
            r.n = static_cast<std::int64_t>(opt.bernoulli_n);
            r.set_exact(bernoulli(opt.bernoulli_n));
            em.emit(r);
        } else if (euler->parsed()) {
            run_euler_poly(em, opt);
        } else if (phi->parsed()) {
            run_phi(em, opt);
        } else if (verify->parsed()) {
            for (const auto& rep : run_suite(parse_suite(opt.suite), opt.suite_options)) {
                em.emit(record_from_report(rep));
            }
        } else if (bench->parsed()) {
            run_bench(em, opt, err);
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailedCheck;
    }
    return em.any_failed() ? kExitFailedCheck : kExitOk;
}

}  // namespace evenzeta::cli
