#pragma once

#include <stdexcept>
#include <string>

namespace kcomp {

// Upper bound on part sizes: compositions may use parts 1..k.
class part_bound {
 public:
    explicit part_bound(int k) : k_(k) {
        if (k < 1)
            throw std::invalid_argument("part_bound: k must be a positive integer (got " +
                                        std::to_string(k) + ")");
    }

    int value() const noexcept { return k_; }

    friend bool operator==(const part_bound&, const part_bound&) = default;

 private:
    int k_;
};

namespace detail {

// Shared argument checks for the (k, n, j) operation family.
inline void require_nonnegative(long long n) {
    if (n < 0)
        throw std::domain_error("n must be nonnegative (got " + std::to_string(n) + ")");
}

inline void require_part_size(part_bound k, int j) {
    if (j < 1 || j > k.value())
        throw std::out_of_range("part size j must lie in 1.." + std::to_string(k.value()) +
                                " (got " + std::to_string(j) + ")");
}

} // namespace detail
} // namespace kcomp
