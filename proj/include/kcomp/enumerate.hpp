#pragma once

#include <cstddef>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

#include "kcomp/composition.hpp"
#include "kcomp/exact.hpp"
#include "kcomp/part_bound.hpp"

namespace kcomp {

// Lazy range over all compositions of n with parts in 1..k, in lexicographic
// order of part lists. For n = 0 the range holds exactly the empty
// composition.
class composition_range {
 public:
    composition_range(part_bound k, long long n) : k_(k), n_(n) {
        detail::require_nonnegative(n);
    }

    class iterator {
     public:
        using value_type = composition;
        using difference_type = std::ptrdiff_t;
        using iterator_concept = std::input_iterator_tag;

        iterator() = default;

        iterator(part_bound k, long long n) : k_(k.value()), done_(false) {
            // Lexicographically smallest composition of n is all ones.
            current_ = composition(std::vector<int>(static_cast<std::size_t>(n), 1));
        }

        const composition& operator*() const noexcept { return current_; }
        const composition* operator->() const noexcept { return &current_; }

        iterator& operator++() {
            advance();
            return *this;
        }

        void operator++(int) { advance(); }

        friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept {
            return it.done_;
        }

     private:
        // In-place lexicographic successor: raise the last raisable part by
        // one and spread the rest of its suffix as ones.
        void advance() {
            std::vector<int> parts = current_.parts();
            long long suffix = 0;
            for (std::size_t i = parts.size(); i-- > 0;) {
                if (i + 1 < parts.size() && parts[i] < k_) {
                    ++parts[i];
                    parts.resize(i + 1);
                    parts.insert(parts.end(), static_cast<std::size_t>(suffix - 1), 1);
                    current_ = composition(std::move(parts));
                    return;
                }
                suffix += parts[i];
            }
            done_ = true;
        }

        composition current_;
        int k_ = 1;
        bool done_ = true;
    };

    iterator begin() const { return iterator(k_, n_); }
    std::default_sentinel_t end() const noexcept { return {}; }

 private:
    part_bound k_;
    long long n_;
};

inline constexpr long long default_enumeration_cap = 10'000'000;

// Independent oracle: tallies all five statistics by walking the full
// enumeration. Refuses inputs whose composition count exceeds the cap.
inline exact_stats brute_stats(part_bound k, long long n,
                               long long cap = default_enumeration_cap) {
    detail::require_nonnegative(n);
    if (count_compositions(k, n) > cap)
        throw std::length_error("brute_stats: composition count for n=" + std::to_string(n) +
                                " exceeds the enumeration cap (" + std::to_string(cap) + ")");

    exact_stats s{k, n, bigint(0), bigint(0),
                  std::vector<bigint>(static_cast<std::size_t>(k.value()), bigint(0)),
                  bigrat(0), {}};
    for (const composition& c : composition_range(k, n)) {
        s.count += 1;
        s.total_parts += static_cast<long long>(c.size());
        for (int part : c.parts())
            s.part_counts[static_cast<std::size_t>(part - 1)] += 1;
    }
    s.average_parts = bigrat(s.total_parts, s.count);
    for (const bigint& c : s.part_counts)
        s.average_part_counts.emplace_back(c, s.count);
    return s;
}

} // namespace kcomp
