#ifndef POLYAUT_DEGREE_BOUND_HPP
#define POLYAUT_DEGREE_BOUND_HPP

#include <polyaut/polynomial.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace polyaut {

/*
 * Inputs of the lower bound on deg G(f, g) for deg f < deg g.
 * With p = deg_f / gcd(deg_f, deg_g), the y-degree of G is written p*q + r, 0 <= r < p.
 */
struct BoundInputs {
    std::int64_t deg_f = 1;
    std::int64_t deg_g = 2;
    ExtendedDegree deg_bracket;
    std::int64_t q = 0;
    std::int64_t r = 0;
};

inline std::int64_t bound_period(std::int64_t deg_f, std::int64_t deg_g) {
    return deg_f / std::gcd(deg_f, deg_g);
}

/// q (p deg_g - deg_g - deg_f + deg[f,g]) + r deg_g
inline std::int64_t composite_degree_lower_bound(const BoundInputs& b) {
    if (b.deg_f < 1 || b.deg_g <= b.deg_f) {
        throw std::invalid_argument("bound needs 1 <= deg f < deg g");
    }
    const std::int64_t p = bound_period(b.deg_f, b.deg_g);
    if (b.q < 0 || b.r < 0 || b.r >= p) {
        throw std::invalid_argument("bound needs q >= 0 and 0 <= r < p");
    }
    if (b.q == 0) {
        return b.r * b.deg_g;
    }
    if (!b.deg_bracket.is_finite()) {
        throw std::invalid_argument("bracket degree must be finite when q > 0");
    }
    return b.q * (p * b.deg_g - b.deg_g - b.deg_f + b.deg_bracket.value()) + b.r * b.deg_g;
}

/// Fills BoundInputs for the pair (f, g) and a G with the given y-degree.
inline BoundInputs bound_inputs(const Polynomial& f, const Polynomial& g, std::int64_t deg_y) {
    if (f.is_zero() || g.is_zero()) {
        throw std::invalid_argument("bound inputs need nonzero polynomials");
    }
    if (deg_y < 0) {
        throw std::invalid_argument("y-degree must be nonnegative");
    }
    BoundInputs b;
    b.deg_f = f.degree().value();
    b.deg_g = g.degree().value();
    if (b.deg_f < 1 || b.deg_g <= b.deg_f) {
        throw std::invalid_argument("bound needs 1 <= deg f < deg g");
    }
    b.deg_bracket = poisson_degree(f, g);
    const std::int64_t p = bound_period(b.deg_f, b.deg_g);
    b.q = deg_y / p;
    b.r = deg_y % p;
    return b;
}

/// f, g algebraically independent, and neither leading form lies in the algebra of the other.
inline bool lower_bound_hypotheses_hold(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) {
        throw std::invalid_argument("hypothesis check needs nonzero polynomials");
    }
    if (!(f.degree() < g.degree())) {
        throw std::invalid_argument("hypothesis check needs deg f < deg g");
    }
    if (!algebraically_independent(f, g)) {
        return false;
    }
    const LeadingForm fbar = leading_form(f);
    const LeadingForm gbar = leading_form(g);
    return !leading_in_subring(fbar, gbar) && !leading_in_subring(gbar, fbar);
}

} // namespace polyaut

#endif // POLYAUT_DEGREE_BOUND_HPP
