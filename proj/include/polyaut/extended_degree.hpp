#ifndef POLYAUT_EXTENDED_DEGREE_HPP
#define POLYAUT_EXTENDED_DEGREE_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace polyaut {

/// A nonnegative integer degree or -infinity (the degree of the zero polynomial).
/// -infinity compares below every finite value and absorbs addition.
class ExtendedDegree {
public:
    constexpr ExtendedDegree() noexcept = default; // -infinity
    constexpr ExtendedDegree(std::int64_t value) : finite_(true), value_(value) {
        if (value < 0) {
            throw std::invalid_argument("finite degree must be nonnegative");
        }
    }

    static constexpr ExtendedDegree neg_infinity() noexcept { return ExtendedDegree{}; }

    constexpr bool is_finite() const noexcept { return finite_; }
    constexpr bool is_neg_infinity() const noexcept { return !finite_; }

    constexpr std::int64_t value() const {
        if (!finite_) {
            throw std::domain_error("degree is -infinity");
        }
        return value_;
    }

    friend constexpr bool operator==(const ExtendedDegree& a, const ExtendedDegree& b) noexcept {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }

    friend constexpr std::strong_ordering operator<=>(const ExtendedDegree& a,
                                                      const ExtendedDegree& b) noexcept {
        if (a.finite_ != b.finite_) {
            return a.finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        if (!a.finite_) {
            return std::strong_ordering::equal;
        }
        return a.value_ <=> b.value_;
    }

    friend constexpr ExtendedDegree operator+(const ExtendedDegree& a, const ExtendedDegree& b) {
        if (!a.finite_ || !b.finite_) {
            return neg_infinity();
        }
        return ExtendedDegree(a.value_ + b.value_);
    }

    std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

    friend std::ostream& operator<<(std::ostream& os, const ExtendedDegree& d) {
        return os << d.to_string();
    }

private:
    bool finite_ = false;
    std::int64_t value_ = 0;
};

} // namespace polyaut

#endif // POLYAUT_EXTENDED_DEGREE_HPP
