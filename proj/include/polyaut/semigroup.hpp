#ifndef POLYAUT_SEMIGROUP_HPP
#define POLYAUT_SEMIGROUP_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace polyaut {

/// target = k1 * d1 + k2 * d2
struct SemigroupRepresentation {
    std::int64_t k1 = 0;
    std::int64_t k2 = 0;

    friend bool operator==(const SemigroupRepresentation&, const SemigroupRepresentation&) = default;
};

/*
 * Membership of `target` in d1*N + d2*N. Scans k2 upward, so the returned
 * representation has the smallest possible k2. gcd(d1, d2) = 1 is not required.
 */
inline std::optional<SemigroupRepresentation> is_member(std::int64_t target, std::int64_t d1,
                                                        std::int64_t d2) {
    if (d1 < 1 || d2 < 1) {
        throw std::invalid_argument("semigroup generators must be positive");
    }
    if (target < 0) {
        throw std::invalid_argument("membership target must be nonnegative");
    }
    for (std::int64_t k2 = 0; k2 * d2 <= target; ++k2) {
        const std::int64_t rest = target - k2 * d2;
        if (rest % d1 == 0) {
            return SemigroupRepresentation{rest / d1, k2};
        }
    }
    return std::nullopt;
}

/// Largest integer outside d1*N + d2*N for coprime d1, d2 >= 2: (d1-1)(d2-1)-1.
inline std::int64_t frobenius(std::int64_t d1, std::int64_t d2) {
    if (d1 < 2 || d2 < 2) {
        throw std::invalid_argument("frobenius needs generators >= 2");
    }
    if (std::gcd(d1, d2) != 1) {
        throw std::invalid_argument("frobenius needs coprime generators");
    }
    return (d1 - 1) * (d2 - 1) - 1;
}

} // namespace polyaut

#endif // POLYAUT_SEMIGROUP_HPP
