#ifndef POLYAUT_REDUCTION_HPP
#define POLYAUT_REDUCTION_HPP

#include <polyaut/errors.hpp>
#include <polyaut/linear_solve.hpp>
#include <polyaut/poly_map.hpp>
#include <polyaut/polynomial.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace polyaut {

/*
 * An elementary reduction of F = (F_1, F_2, F_3): subtracting g(F_a, F_b) from
 * F_target lowers its degree to achieved_degree. (a, b) are the two other
 * coordinates in ascending order; g is a polynomial in two variables (u, v).
 */
struct Reduction {
    std::size_t target;
    std::array<std::size_t, 2> sources;
    Polynomial g;
    ExtendedDegree achieved_degree;
};

namespace detail {

inline std::array<std::size_t, 2> other_coordinates(std::size_t target) {
    switch (target) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
    }
}

// Exponent pairs (alpha, beta) != (0, 0) with alpha*da + beta*db <= bound, in lex order.
// Constant sources only contribute constants, which never lower a degree.
inline std::vector<std::pair<unsigned, unsigned>> reduction_support(ExtendedDegree da,
                                                                    ExtendedDegree db,
                                                                    std::int64_t bound) {
    const std::int64_t a = da.is_finite() ? da.value() : 0;
    const std::int64_t b = db.is_finite() ? db.value() : 0;
    const std::int64_t max_alpha = a > 0 ? bound / a : 0;
    const std::int64_t max_beta = b > 0 ? bound / b : 0;
    std::vector<std::pair<unsigned, unsigned>> support;
    for (std::int64_t alpha = 0; alpha <= max_alpha; ++alpha) {
        for (std::int64_t beta = 0; beta <= max_beta; ++beta) {
            if ((alpha == 0 && beta == 0) || alpha * a + beta * b > bound) {
                continue;
            }
            support.emplace_back(static_cast<unsigned>(alpha), static_cast<unsigned>(beta));
        }
    }
    return support;
}

// Coefficients c solving: every monomial of degree >= threshold in
// target - sum c_k products[k] vanishes.
inline std::optional<std::vector<Rational>> cancel_from(const Polynomial& target,
                                                        const std::vector<Polynomial>& products,
                                                        unsigned threshold) {
    std::set<Exponents, GrlexDescending> rows;
    const auto collect = [&](const Polynomial& p) {
        for (const auto& [e, c] : p.terms()) {
            if (total_degree(e) < threshold) {
                break;
            }
            rows.insert(e);
        }
    };
    collect(target);
    for (const auto& p : products) {
        collect(p);
    }
    RationalMatrix a;
    std::vector<Rational> b;
    a.reserve(rows.size());
    for (const auto& e : rows) {
        std::vector<Rational> row;
        row.reserve(products.size());
        for (const auto& p : products) {
            row.push_back(p.coefficient(e));
        }
        a.push_back(std::move(row));
        b.push_back(target.coefficient(e));
    }
    if (a.empty()) {
        return std::vector<Rational>(products.size(), Rational(0));
    }
    return solve_exact(a, b);
}

} // namespace detail

/*
 * Searches for g with deg(F_target - g(F_a, F_b)) < deg F_target, where g ranges
 * over polynomials without constant term whose monomials u^alpha v^beta satisfy
 * alpha deg F_a + beta deg F_b <= bound. The coefficients of g are unknowns of a
 * linear system; among all such g, the one returned reaches the lowest possible
 * residual degree, with free unknowns set to zero.
 *
 * Sound, but only complete relative to `bound`: cancellation may need a larger
 * support than the degree filter admits.
 */
inline std::optional<Reduction> find_reduction_for_target(const PolyMap& f, std::size_t target,
                                                          std::int64_t bound) {
    if (f.dimension() != 3) {
        throw DimensionError("reduction search needs a map of affine 3-space");
    }
    if (target >= 3) {
        throw DimensionError("target coordinate out of range");
    }
    const Polynomial& ft = f[target];
    const ExtendedDegree dt = ft.degree();
    if (!dt.is_finite() || dt.value() == 0) {
        return std::nullopt;
    }
    const auto sources = detail::other_coordinates(target);
    const Polynomial& fa = f[sources[0]];
    const Polynomial& fb = f[sources[1]];
    const auto support = detail::reduction_support(fa.degree(), fb.degree(), bound);

    std::vector<Polynomial> a_pow{Polynomial::constant(3, 1)};
    std::vector<Polynomial> b_pow{Polynomial::constant(3, 1)};
    std::vector<Polynomial> products;
    products.reserve(support.size());
    for (const auto& [alpha, beta] : support) {
        while (a_pow.size() <= alpha) {
            a_pow.push_back(a_pow.back() * fa);
        }
        while (b_pow.size() <= beta) {
            b_pow.push_back(b_pow.back() * fb);
        }
        products.push_back(a_pow[alpha] * b_pow[beta]);
    }

    const auto top = static_cast<unsigned>(dt.value());
    auto solution = detail::cancel_from(ft, products, top);
    if (!solution) {
        return std::nullopt;
    }
    // Feasibility is monotone in the threshold; find the smallest feasible one.
    unsigned lo = 0;
    unsigned hi = top;
    while (lo < hi) {
        const unsigned mid = lo + (hi - lo) / 2;
        if (auto s = detail::cancel_from(ft, products, mid)) {
            hi = mid;
            solution = std::move(s);
        } else {
            lo = mid + 1;
        }
    }

    Polynomial g(2);
    Polynomial residual = ft;
    for (std::size_t k = 0; k < support.size(); ++k) {
        const Rational& c = (*solution)[k];
        if (c == 0) {
            continue;
        }
        g += Polynomial::monomial({support[k].first, support[k].second}, c);
        residual -= products[k] * c;
    }
    const ExtendedDegree achieved = residual.degree();
    if (!(achieved < dt)) {
        throw std::logic_error("reduction solver returned a non-reducing polynomial");
    }
    return Reduction{target, sources, std::move(g), achieved};
}

/// 2 * (largest component degree).
inline std::int64_t default_reduction_bound(const PolyMap& f) {
    std::int64_t top = 1;
    for (const auto& c : f.components()) {
        if (c.degree().is_finite()) {
            top = std::max(top, c.degree().value());
        }
    }
    return 2 * top;
}

/// First reducible coordinate (lowest index), if any, within the support bound.
inline std::optional<Reduction> find_elementary_reduction(const PolyMap& f,
                                                          std::optional<std::int64_t> bound = {}) {
    if (f.dimension() != 3) {
        throw DimensionError("reduction search needs a map of affine 3-space");
    }
    const std::int64_t b = bound.value_or(default_reduction_bound(f));
    if (b < 1) {
        throw std::invalid_argument("reduction bound must be positive");
    }
    for (std::size_t target = 0; target < 3; ++target) {
        if (auto r = find_reduction_for_target(f, target, b)) {
            return r;
        }
    }
    return std::nullopt;
}

/// The elementary map x_target ↦ x_target - g(x_a, x_b).
inline PolyMap reducing_automorphism(const Reduction& r) {
    const std::vector<Polynomial> images{Polynomial::variable(3, r.sources[0]),
                                         Polynomial::variable(3, r.sources[1])};
    return elementary(r.target, -substitute(r.g, images));
}

/// tau ∘ F, whose multidegree is strictly below that of F.
inline PolyMap apply_reduction(const PolyMap& f, const Reduction& r) {
    return compose(reducing_automorphism(r), f);
}

} // namespace polyaut

#endif // POLYAUT_REDUCTION_HPP
