#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "kcomp/numeric.hpp"
#include "kcomp/part_bound.hpp"

namespace kcomp {

/**
 * Exact statistics of compositions with parts in 1..k.
 *
 * All five quantities follow from three mutually entangled recurrences:
 *
 *   count(n)        = sum of count(n-a) over a = 1..k, count(0) = 1
 *   part_count(n,j) = count(n-j) + sum of part_count(n-a, j)
 *   total_parts(n)  = count(n) + sum of total_parts(n-a)
 *
 * with every quantity zero at negative indices. A stat_engine owns one
 * per-k table holding all three columns and grows it bottom-up on demand,
 * so a sequence of queries costs linear work overall.
 */

// The full statistics record for one (k, n).
struct exact_stats {
    part_bound k;
    long long n;
    bigint count;                          // number of compositions
    bigint total_parts;                    // parts summed over all of them
    std::vector<bigint> part_counts;       // occurrences of part size j at [j-1]
    bigrat average_parts;                  // total_parts / count
    std::vector<bigrat> average_part_counts;
};

class stat_engine {
 public:
    explicit stat_engine(part_bound k)
        : k_(k), count_{bigint(1)}, total_{bigint(0)},
          part_(static_cast<std::size_t>(k.value()), std::vector<bigint>{bigint(0)}) {}

    part_bound bound() const noexcept { return k_; }

    const bigint& count(long long n) {
        detail::require_nonnegative(n);
        extend(n);
        return count_[static_cast<std::size_t>(n)];
    }

    const bigint& total_parts(long long n) {
        detail::require_nonnegative(n);
        extend(n);
        return total_[static_cast<std::size_t>(n)];
    }

    const bigint& part_count(long long n, int j) {
        detail::require_part_size(k_, j);
        detail::require_nonnegative(n);
        extend(n);
        return part_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(n)];
    }

    bigrat average_parts(long long n) {
        return bigrat(total_parts(n), count(n));
    }

    bigrat average_part_count(long long n, int j) {
        return bigrat(part_count(n, j), count(n));
    }

    exact_stats stats(long long n) {
        detail::require_nonnegative(n);
        extend(n);
        exact_stats s{k_, n, count(n), total_parts(n), {}, bigrat(0), {}};
        for (int j = 1; j <= k_.value(); ++j) {
            s.part_counts.push_back(part_count(n, j));
            s.average_part_counts.emplace_back(s.part_counts.back(), s.count);
        }
        s.average_parts = bigrat(s.total_parts, s.count);
        return s;
    }

 private:
    void extend(long long target) {
        const int k = k_.value();
        for (long long n = static_cast<long long>(count_.size()); n <= target; ++n) {
            bigint f(0), t(0);
            for (int a = 1; a <= k && a <= n; ++a) {
                f += count_[static_cast<std::size_t>(n - a)];
                t += total_[static_cast<std::size_t>(n - a)];
            }
            count_.push_back(f);
            total_.push_back(t + f);
            for (int j = 1; j <= k; ++j) {
                bigint c = n >= j ? count_[static_cast<std::size_t>(n - j)] : bigint(0);
                auto& column = part_[static_cast<std::size_t>(j - 1)];
                for (int a = 1; a <= k && a <= n; ++a)
                    c += column[static_cast<std::size_t>(n - a)];
                column.push_back(c);
            }
        }
    }

    part_bound k_;
    std::vector<bigint> count_;
    std::vector<bigint> total_;
    std::vector<std::vector<bigint>> part_;  // one column per part size
};

namespace detail {

// Process-wide per-k engines; a single mutex serializes growth and reads.
template <typename Fn>
auto with_shared_engine(part_bound k, Fn&& fn) {
    static std::map<int, stat_engine> engines;
    static std::mutex guard;
    std::scoped_lock lock(guard);
    auto [it, inserted] = engines.try_emplace(k.value(), k);
    return fn(it->second);
}

} // namespace detail

inline bigint count_compositions(part_bound k, long long n) {
    detail::require_nonnegative(n);
    return detail::with_shared_engine(k, [&](stat_engine& e) { return e.count(n); });
}

inline bigint total_parts(part_bound k, long long n) {
    detail::require_nonnegative(n);
    return detail::with_shared_engine(k, [&](stat_engine& e) { return e.total_parts(n); });
}

inline bigint part_count(part_bound k, long long n, int j) {
    detail::require_part_size(k, j);
    detail::require_nonnegative(n);
    return detail::with_shared_engine(k, [&](stat_engine& e) { return e.part_count(n, j); });
}

inline bigrat average_parts(part_bound k, long long n) {
    detail::require_nonnegative(n);
    return detail::with_shared_engine(k, [&](stat_engine& e) { return e.average_parts(n); });
}

inline bigrat average_part_count(part_bound k, long long n, int j) {
    detail::require_part_size(k, j);
    detail::require_nonnegative(n);
    return detail::with_shared_engine(k, [&](stat_engine& e) { return e.average_part_count(n, j); });
}

// All statistics for one (k, n) from the recurrence route.
inline exact_stats recurrence_stats(part_bound k, long long n) {
    detail::require_nonnegative(n);
    return detail::with_shared_engine(k, [&](stat_engine& e) { return e.stats(n); });
}

} // namespace kcomp
