#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kcomp/asymptotics.hpp"
#include "kcomp/exact.hpp"
#include "kcomp/numeric.hpp"
#include "kcomp/part_bound.hpp"

namespace kcomp {

/**
 * Table assembly and rendering. Two shapes:
 *
 *   multiplicity — one exact column per part size j = 1..k;
 *   comparison   — each statistic paired with its closed-form approximation
 *                  (part-size columns fixed at one j, default 1).
 *
 * Rendering is deterministic and byte-stable. Decimal columns round half to
 * even at `decimals` places, then drop trailing zeros down to one fractional
 * digit, so 987.000 renders as "987.0" and 4.960 as "4.96".
 */

// Approximation storage is wide enough for any supported working precision.
using table_real = real1024;

namespace detail {

inline std::string render_scaled_decimal(bigint scaled, int decimals) {
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string digits = scaled.str();
    if (digits.size() <= static_cast<std::size_t>(decimals))
        digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    std::string whole = digits.substr(0, digits.size() - static_cast<std::size_t>(decimals));
    std::string frac = digits.substr(digits.size() - static_cast<std::size_t>(decimals));
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    return (negative ? "-" : "") + whole + "." + frac;
}

} // namespace detail

// Exact fixed-point rendering of a rational, round half to even.
inline std::string format_fixed(const bigrat& value, int decimals) {
    if (decimals < 1) throw std::invalid_argument("format_fixed: decimals must be >= 1");
    bigint num = numerator(value);
    bigint den = denominator(value);
    bool negative = num < 0;
    if (negative) num = -num;
    for (int i = 0; i < decimals; ++i) num *= 10;
    bigint q = num / den;
    bigint r = num % den;
    bigint twice = 2 * r;
    if (twice > den || (twice == den && (q & 1) != 0)) q += 1;
    if (negative) q = -q;
    return detail::render_scaled_decimal(q, decimals);
}

// Fixed-point rendering of a binary float, round half to even.
template <typename Real>
std::string format_fixed(const Real& value, int decimals) {
    if (decimals < 1) throw std::invalid_argument("format_fixed: decimals must be >= 1");
    Real magnitude = value < 0 ? Real(-value) : value;
    Real scaled = magnitude * pow_int(Real(10), decimals);
    Real whole = floor(scaled);
    bigint q = whole.template convert_to<bigint>();
    Real frac = scaled - whole;
    if (frac > Real(0.5) || (frac == Real(0.5) && (q & 1) != 0)) q += 1;
    if (value < 0) q = -q;
    return detail::render_scaled_decimal(q, decimals);
}

enum class table_kind { multiplicity, comparison };
enum class table_format { csv, json, markdown };

struct multiplicity_row {
    long long n;
    std::vector<bigint> part_counts;  // j = 1..k
};

struct comparison_row {
    long long n;
    bigint count;
    table_real count_appr;
    bigint total;
    table_real total_appr;
    bigrat average;
    table_real average_appr;
    bigint part_count;
    table_real part_count_appr;
    bigrat average_part_count;
    table_real average_part_count_appr;
};

struct stat_table {
    part_bound k;
    table_kind kind;
    int decimals = 3;
    int j = 1;  // part-size column of a comparison table
    std::vector<multiplicity_row> multiplicity_rows;
    std::vector<comparison_row> comparison_rows;
};

inline stat_table build_multiplicity_table(part_bound k, long long n_max) {
    detail::require_nonnegative(n_max);
    stat_table t{k, table_kind::multiplicity, 3, 1, {}, {}};
    for (long long n = 0; n <= n_max; ++n) {
        multiplicity_row row{n, {}};
        for (int j = 1; j <= k.value(); ++j) row.part_counts.push_back(part_count(k, n, j));
        t.multiplicity_rows.push_back(std::move(row));
    }
    return t;
}

inline stat_table build_comparison_table(part_bound k, long long n_max, int decimals = 3,
                                         int precision_bits = 128, int j = 1) {
    detail::require_nonnegative(n_max);
    if (decimals < 1) throw std::invalid_argument("build_comparison_table: decimals must be >= 1");
    detail::require_part_size(k, j);

    stat_table t{k, table_kind::comparison, decimals, j, {}, {}};
    with_precision(precision_bits, [&](auto tag) {
        using Real = typename decltype(tag)::type;
        const auto root = dominant_root<Real>(k);
        for (long long n = 0; n <= n_max; ++n) {
            comparison_row row{n,
                               count_compositions(k, n),
                               table_real(approx_count(root, n)),
                               total_parts(k, n),
                               table_real(approx_total_parts(root, n)),
                               average_parts(k, n),
                               table_real(approx_average_parts(root, n)),
                               part_count(k, n, j),
                               table_real(approx_part_count(root, n, j)),
                               average_part_count(k, n, j),
                               table_real(approx_average_part_count(root, n, j))};
            t.comparison_rows.push_back(std::move(row));
        }
    });
    return t;
}

namespace detail {

inline std::vector<std::string> table_header(const stat_table& t) {
    std::vector<std::string> names{"n"};
    if (t.kind == table_kind::multiplicity) {
        for (int j = 1; j <= t.k.value(); ++j) names.push_back("C" + std::to_string(j));
    } else {
        const std::string cj = "C" + std::to_string(t.j);
        const std::string aj = "A" + std::to_string(t.j);
        for (const std::string& col : {std::string("F"), std::string("T"), std::string("A"), cj, aj}) {
            names.push_back(col);
            names.push_back(col + "_appr");
        }
    }
    return names;
}

inline std::vector<std::string> table_row_cells(const stat_table& t, std::size_t i) {
    std::vector<std::string> cells;
    if (t.kind == table_kind::multiplicity) {
        const auto& row = t.multiplicity_rows[i];
        cells.push_back(std::to_string(row.n));
        for (const bigint& c : row.part_counts) cells.push_back(c.str());
    } else {
        const auto& row = t.comparison_rows[i];
        cells.push_back(std::to_string(row.n));
        cells.push_back(row.count.str());
        cells.push_back(format_fixed(row.count_appr, t.decimals));
        cells.push_back(row.total.str());
        cells.push_back(format_fixed(row.total_appr, t.decimals));
        cells.push_back(format_fixed(row.average, t.decimals));
        cells.push_back(format_fixed(row.average_appr, t.decimals));
        cells.push_back(row.part_count.str());
        cells.push_back(format_fixed(row.part_count_appr, t.decimals));
        cells.push_back(format_fixed(row.average_part_count, t.decimals));
        cells.push_back(format_fixed(row.average_part_count_appr, t.decimals));
    }
    return cells;
}

inline std::size_t table_row_count(const stat_table& t) {
    return t.kind == table_kind::multiplicity ? t.multiplicity_rows.size()
                                              : t.comparison_rows.size();
}

} // namespace detail

inline std::string render(const stat_table& t, table_format format) {
    const auto header = detail::table_header(t);
    const std::size_t rows = detail::table_row_count(t);

    if (format == table_format::csv) {
        std::string out;
        for (std::size_t c = 0; c < header.size(); ++c)
            out += (c == 0 ? "" : ",") + header[c];
        out += '\n';
        for (std::size_t i = 0; i < rows; ++i) {
            const auto cells = detail::table_row_cells(t, i);
            for (std::size_t c = 0; c < cells.size(); ++c)
                out += (c == 0 ? "" : ",") + cells[c];
            out += '\n';
        }
        return out;
    }

    if (format == table_format::json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < rows; ++i) {
            const auto cells = detail::table_row_cells(t, i);
            nlohmann::ordered_json obj;
            obj[header[0]] = t.kind == table_kind::multiplicity ? t.multiplicity_rows[i].n
                                                                : t.comparison_rows[i].n;
            for (std::size_t c = 1; c < cells.size(); ++c) obj[header[c]] = cells[c];
            arr.push_back(std::move(obj));
        }
        return arr.dump(2) + "\n";
    }

    // markdown pipe table
    std::string out = "|";
    for (const auto& name : header) out += " " + name + " |";
    out += "\n|";
    for (std::size_t c = 0; c < header.size(); ++c) out += " --- |";
    out += '\n';
    for (std::size_t i = 0; i < rows; ++i) {
        const auto cells = detail::table_row_cells(t, i);
        out += "|";
        for (const auto& cell : cells) out += " " + cell + " |";
        out += '\n';
    }
    return out;
}

} // namespace kcomp
