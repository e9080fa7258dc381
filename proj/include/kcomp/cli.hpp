#pragma once

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kcomp/asymptotics.hpp"
#include "kcomp/composition.hpp"
#include "kcomp/enumerate.hpp"
#include "kcomp/exact.hpp"
#include "kcomp/numeric.hpp"
#include "kcomp/part_bound.hpp"
#include "kcomp/series.hpp"
#include "kcomp/tables.hpp"

namespace kcomp::cli {

struct options {
    int k = 1;
    long long n = 0;
    long long n_max = 50;
    int j = 0;  // 0 means "not requested"
    int precision_bits = 128;
    int decimals = 3;
    std::string kind;
    std::string format = "markdown";
    std::string as = "parts";
    std::string output;
    long long oracle_cap = default_enumeration_cap;
};

namespace detail {

inline std::string rational_line(const bigrat& v, int decimals) {
    std::ostringstream os;
    os << v << " = " << format_fixed(v, decimals);
    return os.str();
}

template <typename Real>
std::string significant(const Real& v, int digits = 20) {
    std::ostringstream os;
    os << std::setprecision(digits) << v;
    return os.str();
}

} // namespace detail

inline int cmd_count(const options& opt, std::ostream& out) {
    part_bound k(opt.k);
    out << "F = " << count_compositions(k, opt.n) << "\n";
    out << "T = " << total_parts(k, opt.n) << "\n";
    out << "A = " << detail::rational_line(average_parts(k, opt.n), opt.decimals) << "\n";
    if (opt.j != 0) {
        out << "C_" << opt.j << " = " << part_count(k, opt.n, opt.j) << "\n";
        out << "A_" << opt.j << " = "
            << detail::rational_line(average_part_count(k, opt.n, opt.j), opt.decimals) << "\n";
    }
    return 0;
}

inline int cmd_table(const options& opt, std::ostream& out) {
    table_format format;
    if (opt.format == "csv") format = table_format::csv;
    else if (opt.format == "json") format = table_format::json;
    else format = table_format::markdown;

    part_bound k(opt.k);
    stat_table table = opt.kind == "multiplicity"
                           ? build_multiplicity_table(k, opt.n_max)
                           : build_comparison_table(k, opt.n_max, opt.decimals,
                                                    opt.precision_bits,
                                                    opt.j == 0 ? 1 : opt.j);
    out << render(table, format);
    return 0;
}

inline int cmd_approx(const options& opt, std::ostream& out) {
    part_bound k(opt.k);
    const int j = opt.j == 0 ? 1 : opt.j;
    return with_precision(opt.precision_bits, [&](auto tag) {
        using Real = typename decltype(tag)::type;
        const auto root = dominant_root<Real>(k);
        const auto spectrum = subdominant_spectrum<Real>(k);
        out << "phi = " << detail::significant(root.phi) << "\n";
        out << "sigma = " << detail::significant(root.sigma) << "\n";
        out << "g_prime = " << detail::significant(root.g_prime) << "\n";
        out << "g_second = " << detail::significant(root.g_second) << "\n";
        if (k.value() == 1)
            out << "decay_rate = 0 (no subdominant singularity)\n";
        else
            out << "decay_rate = " << detail::significant(spectrum.decay_rate) << "\n";
        out << "precision_bits = " << root.precision_bits << "\n";
        out << "F_appr = " << format_fixed(approx_count(root, opt.n), opt.decimals) << "\n";
        out << "T_appr = " << format_fixed(approx_total_parts(root, opt.n), opt.decimals) << "\n";
        out << "A_appr = " << format_fixed(approx_average_parts(root, opt.n), opt.decimals)
            << "\n";
        out << "C_" << j << "_appr = "
            << format_fixed(approx_part_count(root, opt.n, j), opt.decimals) << "\n";
        out << "A_" << j << "_appr = "
            << format_fixed(approx_average_part_count(root, opt.n, j), opt.decimals) << "\n";
        return 0;
    });
}

inline int cmd_enumerate(const options& opt, std::ostream& out) {
    part_bound k(opt.k);
    bigint total = count_compositions(k, opt.n);
    if (total > opt.oracle_cap)
        throw std::length_error("enumerate: composition count " + total.str() +
                                " exceeds the enumeration cap (" +
                                std::to_string(opt.oracle_cap) + ")");
    long long produced = 0;
    for (const composition& c : composition_range(k, opt.n)) {
        if (opt.as == "rhythm")
            out << composition_to_rhythm(c).text() << "\n";
        else
            out << c.to_text() << "\n";
        ++produced;
    }
    out << "total " << produced << "\n";
    return 0;
}

inline int cmd_roots(const options& opt, std::ostream& out) {
    part_bound k(opt.k);
    if (k.value() == 1) {
        out << "k = 1: the only singularity is sigma = 1; no subdominant singularity exists.\n";
        return 0;
    }
    return with_precision(opt.precision_bits, [&](auto tag) {
        using Real = typename decltype(tag)::type;
        const auto spectrum = subdominant_spectrum<Real>(k);
        for (std::size_t i = 0; i < spectrum.roots.size(); ++i) {
            const auto& z = spectrum.roots[i];
            Real im = z.imag();
            out << "root " << i + 1 << " = " << detail::significant(z.real())
                << (im < 0 ? " - " : " + ") << detail::significant(im < 0 ? Real(-im) : im)
                << "i  |z| = " << detail::significant(Real(abs(z))) << "\n";
        }
        out << "r_prime = " << detail::significant(spectrum.subdominant_radius) << "\n";
        out << "decay_rate = " << detail::significant(spectrum.decay_rate) << "\n";
        return 0;
    });
}

inline int cmd_verify(const options& opt, std::ostream& out) {
    part_bound k(opt.k);
    bool all_pass = true;

    // (a) recurrences against the enumeration oracle
    {
        long long checked = -1;
        bigint max_dev(0);
        std::string first_fail;
        for (long long n = 0; n <= opt.n_max; ++n) {
            if (count_compositions(k, n) > opt.oracle_cap) break;
            exact_stats brute = brute_stats(k, n, opt.oracle_cap);
            exact_stats fast = recurrence_stats(k, n);
            auto record = [&](const bigint& a, const bigint& b, const std::string& name) {
                bigint dev = a < b ? b - a : a - b;
                if (dev > max_dev) max_dev = dev;
                if (dev != 0 && first_fail.empty())
                    first_fail = "k=" + std::to_string(k.value()) + " n=" + std::to_string(n) +
                                 " statistic=" + name;
            };
            record(fast.count, brute.count, "F");
            record(fast.total_parts, brute.total_parts, "T");
            for (int j = 1; j <= k.value(); ++j)
                record(fast.part_counts[static_cast<std::size_t>(j - 1)],
                       brute.part_counts[static_cast<std::size_t>(j - 1)],
                       "C_" + std::to_string(j));
            checked = n;
        }
        if (first_fail.empty()) {
            out << "PASS oracle: recurrence vs enumeration for n = 0.." << checked
                << " (max deviation " << max_dev << ")\n";
        } else {
            out << "FAIL oracle: first mismatch at " << first_fail << " (max deviation "
                << max_dev << ")\n";
            all_pass = false;
        }
    }

    // (b) series coefficients against the recurrences
    {
        const auto order = static_cast<std::size_t>(opt.n_max);
        auto f = f_series(k, order);
        auto t = t_series(k, order);
        bigint max_dev(0);
        std::string first_fail;
        auto record = [&](const bigint& a, const bigint& b, long long n, const std::string& name) {
            bigint dev = a < b ? b - a : a - b;
            if (dev > max_dev) max_dev = dev;
            if (dev != 0 && first_fail.empty())
                first_fail = "k=" + std::to_string(k.value()) + " n=" + std::to_string(n) +
                             " statistic=" + name;
        };
        for (long long n = 0; n <= opt.n_max; ++n) {
            record(f[static_cast<std::size_t>(n)], count_compositions(k, n), n, "F");
            record(t[static_cast<std::size_t>(n)], total_parts(k, n), n, "T");
        }
        for (int j = 1; j <= k.value(); ++j) {
            auto c = c_series(k, j, order);
            for (long long n = 0; n <= opt.n_max; ++n)
                record(c[static_cast<std::size_t>(n)], part_count(k, n, j), n,
                       "C_" + std::to_string(j));
        }
        if (first_fail.empty()) {
            out << "PASS series: coefficients vs recurrence for n = 0.." << opt.n_max
                << " (max deviation " << max_dev << ")\n";
        } else {
            out << "FAIL series: first mismatch at " << first_fail << " (max deviation "
                << max_dev << ")\n";
            all_pass = false;
        }
    }

    // (c) error decay against the subdominant prediction
    if (k.value() == 1) {
        bool exact = true;
        const auto root = dominant_root<real128>(k);
        for (long long n = 0; n <= std::min<long long>(opt.n_max, 50); ++n) {
            exact = exact && to_real<real128>(count_compositions(k, n)) == approx_count(root, n);
            exact = exact &&
                    to_real<real128>(total_parts(k, n)) == approx_total_parts(root, n);
            exact = exact &&
                    to_real<real128>(average_parts(k, n)) == approx_average_parts(root, n);
            exact = exact && to_real<real128>(part_count(k, n, 1)) == approx_part_count(root, n, 1);
            exact = exact && to_real<real128>(average_part_count(k, n, 1)) ==
                                 approx_average_part_count(root, n, 1);
        }
        if (exact) {
            out << "PASS decay: exact agreement, all residuals are zero (k = 1)\n";
        } else {
            out << "FAIL decay: k = 1 approximations should be exact\n";
            all_pass = false;
        }
    } else {
        const statistic stats[] = {statistic::count, statistic::total_parts,
                                   statistic::average_parts, statistic::part_count,
                                   statistic::average_part_count};
        const char* names[] = {"F", "T", "A", "C_1", "A_1"};
        bool pass = true;
        std::ostringstream detail_line;
        for (std::size_t i = 0; i < 5; ++i) {
            auto fit = fit_error_decay(k, stats[i], 10, 40, 1, opt.precision_bits);
            double bound = fit.predicted + 0.05;
            if (!(fit.slope <= bound)) pass = false;
            if (i != 0) detail_line << ", ";
            detail_line << names[i] << " slope " << std::fixed << std::setprecision(4)
                        << fit.slope;
        }
        auto fit = fit_error_decay(k, statistic::count, 10, 40, 1, opt.precision_bits);
        out << (pass ? "PASS" : "FAIL") << " decay: fitted slopes vs bound ln(decay_rate) + 0.05 = "
            << std::fixed << std::setprecision(4) << fit.predicted + 0.05 << " ("
            << detail_line.str() << ")\n";
        if (!pass) all_pass = false;
    }

    out << (all_pass ? "verify: all checks passed\n" : "verify: some checks failed\n");
    return all_pass ? 0 : 1;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and asymptotic statistics of integer compositions with bounded parts",
                 "kcomp"};
    app.require_subcommand(1);

    options opt;

    auto add_common = [&](CLI::App* sub, bool needs_n, bool needs_n_max) {
        sub->add_option("--k", opt.k, "largest allowed part size")
            ->required()
            ->check(CLI::PositiveNumber);
        if (needs_n)
            sub->add_option("--n", opt.n, "composition target")
                ->required()
                ->check(CLI::NonNegativeNumber);
        if (needs_n_max)
            sub->add_option("--n-max", opt.n_max, "largest row index")
                ->check(CLI::NonNegativeNumber);
        sub->add_option("--output", opt.output, "write output to a file instead of stdout");
        return sub;
    };
    auto add_precision = [&](CLI::App* sub) {
        sub->add_option("--precision-bits", opt.precision_bits, "working mantissa bits")
            ->check(CLI::Range(53, 1024))
            ->envname("COMPOSITIONS_PRECISION_BITS");
    };
    auto add_decimals = [&](CLI::App* sub) {
        sub->add_option("--decimals", opt.decimals, "decimal places for rendered values")
            ->check(CLI::Range(1, 50));
    };
    auto add_j = [&](CLI::App* sub) {
        sub->add_option("--j", opt.j, "part size column")->check(CLI::PositiveNumber);
    };

    CLI::App* count = add_common(app.add_subcommand("count", "exact statistics for one n"),
                                 true, false);
    add_j(count);
    add_decimals(count);

    CLI::App* table = add_common(app.add_subcommand("table", "render a statistics table"),
                                 false, true);
    table->add_option("--kind", opt.kind, "table shape")
        ->required()
        ->check(CLI::IsMember({"multiplicity", "comparison"}));
    table->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "markdown"}));
    add_j(table);
    add_decimals(table);
    add_precision(table);

    CLI::App* approx = add_common(app.add_subcommand("approx", "asymptotic approximations"),
                                  true, false);
    add_j(approx);
    add_decimals(approx);
    add_precision(approx);

    CLI::App* verify = add_common(app.add_subcommand("verify", "cross-check all three routes"),
                                  false, true);
    verify->add_option("--oracle-cap", opt.oracle_cap, "largest enumeration size")
        ->check(CLI::PositiveNumber);
    add_precision(verify);

    CLI::App* enumerate = add_common(
        app.add_subcommand("enumerate", "list every composition of n"), true, false);
    enumerate->add_option("--as", opt.as, "line encoding")
        ->check(CLI::IsMember({"parts", "rhythm"}));
    enumerate->add_option("--oracle-cap", opt.oracle_cap, "largest enumeration size")
        ->check(CLI::PositiveNumber);

    CLI::App* roots = add_common(app.add_subcommand("roots", "roots of the recurrence characteristic polynomial"),
                                 false, false);
    add_precision(roots);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    if (opt.j != 0 && opt.j > opt.k) {
        err << "error: --j (" << opt.j << ") must lie in 1..--k (" << opt.k << ")\n";
        return 1;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!opt.output.empty()) {
        file.open(opt.output);
        if (!file) {
            err << "error: cannot open output file: " << opt.output << "\n";
            return 1;
        }
        sink = &file;
    }

    try {
        if (*count) return cmd_count(opt, *sink);
        if (*table) return cmd_table(opt, *sink);
        if (*approx) return cmd_approx(opt, *sink);
        if (*verify) return cmd_verify(opt, *sink);
        if (*enumerate) return cmd_enumerate(opt, *sink);
        if (*roots) return cmd_roots(opt, *sink);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

inline int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(std::move(args), std::cout, std::cerr);
}

} // namespace kcomp::cli
