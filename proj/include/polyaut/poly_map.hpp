#ifndef POLYAUT_POLY_MAP_HPP
#define POLYAUT_POLY_MAP_HPP

#include <polyaut/errors.hpp>
#include <polyaut/linear_solve.hpp>
#include <polyaut/polynomial.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polyaut {

/// A polynomial endomorphism of affine n-space, given by its n coordinate functions.
class PolyMap {
public:
    explicit PolyMap(std::vector<Polynomial> components) : components_(std::move(components)) {
        if (components_.empty()) {
            throw DimensionError("a map needs at least one component");
        }
        for (const auto& c : components_) {
            if (c.var_count() != components_.size()) {
                throw DimensionError("every component of an n-dimensional map needs n variables");
            }
        }
    }

    static PolyMap identity(std::size_t n) {
        std::vector<Polynomial> cs;
        for (std::size_t i = 0; i < n; ++i) {
            cs.push_back(Polynomial::variable(n, i));
        }
        return PolyMap(std::move(cs));
    }

    std::size_t dimension() const noexcept { return components_.size(); }
    const std::vector<Polynomial>& components() const noexcept { return components_; }
    const Polynomial& operator[](std::size_t i) const { return components_.at(i); }

    friend bool operator==(const PolyMap&, const PolyMap&) = default;

private:
    std::vector<Polynomial> components_;
};

/// Componentwise degrees of a map.
struct Multidegree {
    std::vector<ExtendedDegree> degrees;

    friend bool operator==(const Multidegree&, const Multidegree&) = default;

    std::string to_string() const {
        std::string s;
        for (const auto& d : degrees) {
            if (!s.empty()) {
                s += ' ';
            }
            s += d.to_string();
        }
        return s;
    }
};

/// Strict componentwise order: a <= b everywhere and a < b somewhere.
inline bool strictly_below(const Multidegree& a, const Multidegree& b) {
    if (a.degrees.size() != b.degrees.size()) {
        throw DimensionError("multidegrees of different length");
    }
    bool strict = false;
    for (std::size_t i = 0; i < a.degrees.size(); ++i) {
        if (a.degrees[i] > b.degrees[i]) {
            return false;
        }
        strict = strict || a.degrees[i] < b.degrees[i];
    }
    return strict;
}

inline Multidegree multidegree(const PolyMap& f) {
    Multidegree m;
    for (const auto& c : f.components()) {
        m.degrees.push_back(c.degree());
    }
    return m;
}

/// outer ∘ inner, i.e. x ↦ outer(inner(x)).
inline PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
    if (outer.dimension() != inner.dimension()) {
        throw DimensionError("cannot compose maps of different dimension");
    }
    std::vector<Polynomial> cs;
    cs.reserve(outer.dimension());
    for (const auto& c : outer.components()) {
        cs.push_back(substitute(c, inner.components()));
    }
    return PolyMap(std::move(cs));
}

/// x_index ↦ x_index + shift, where shift does not involve x_index.
struct ElementaryStep {
    std::size_t index;
    Polynomial shift;

    friend bool operator==(const ElementaryStep&, const ElementaryStep&) = default;
};

inline PolyMap elementary(std::size_t index, const Polynomial& shift) {
    const std::size_t n = shift.var_count();
    if (index >= n) {
        throw DimensionError("elementary map index out of range");
    }
    if (shift.involves(index)) {
        throw std::invalid_argument("elementary shift must not involve its own coordinate");
    }
    std::vector<Polynomial> cs;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial c = Polynomial::variable(n, i);
        if (i == index) {
            c += shift;
        }
        cs.push_back(std::move(c));
    }
    return PolyMap(std::move(cs));
}

inline PolyMap elementary(const ElementaryStep& step) {
    return elementary(step.index, step.shift);
}

/// Applies `steps` in order: the result is steps.back() ∘ ... ∘ steps.front().
inline PolyMap compose_steps(std::size_t n, const std::vector<ElementaryStep>& steps) {
    PolyMap acc = PolyMap::identity(n);
    for (const auto& s : steps) {
        acc = compose(elementary(s), acc);
    }
    return acc;
}

/// (x, y + f2(x), z + f3(x, y)) over three variables.
inline PolyMap triangular(const Polynomial& f2, const Polynomial& f3) {
    if (f2.var_count() != 3 || f3.var_count() != 3) {
        throw DimensionError("triangular maps are built over three variables");
    }
    if (f2.involves(1) || f2.involves(2)) {
        throw std::invalid_argument("f2 may only involve x");
    }
    if (f3.involves(2)) {
        throw std::invalid_argument("f3 may only involve x and y");
    }
    return PolyMap({Polynomial::variable(3, 0), Polynomial::variable(3, 1) + f2,
                    Polynomial::variable(3, 2) + f3});
}

/// Component i is the linear form given by row i of the matrix.
inline PolyMap linear(const RationalMatrix& rows) {
    const std::size_t n = rows.size();
    if (n == 0) {
        throw DimensionError("empty matrix");
    }
    for (const auto& r : rows) {
        if (r.size() != n) {
            throw DimensionError("linear map needs a square matrix");
        }
    }
    if (rank(rows) != n) {
        throw std::invalid_argument("singular matrix does not define an automorphism");
    }
    std::vector<Polynomial> cs;
    for (const auto& r : rows) {
        Polynomial c(n);
        for (std::size_t j = 0; j < n; ++j) {
            c += Polynomial::variable(n, j) * r[j];
        }
        cs.push_back(std::move(c));
    }
    return PolyMap(std::move(cs));
}

/// The quadric y^2 + zx left invariant by the Nagata map.
inline Polynomial nagata_quadric() {
    const auto x = Polynomial::variable(3, 0);
    const auto y = Polynomial::variable(3, 1);
    const auto z = Polynomial::variable(3, 2);
    return y * y + z * x;
}

/// N(x,y,z) = (x + 2y q - z q^2, y - z q, z) with q = y^2 + zx.
inline PolyMap nagata() {
    const auto x = Polynomial::variable(3, 0);
    const auto y = Polynomial::variable(3, 1);
    const auto z = Polynomial::variable(3, 2);
    const auto q = nagata_quadric();
    return PolyMap({x + Rational(2) * y * q - z * q * q, y - z * q, z});
}

/// T(x,y,z) = (z,y,x).
inline PolyMap swap_outer() {
    return PolyMap({Polynomial::variable(3, 2), Polynomial::variable(3, 1),
                    Polynomial::variable(3, 0)});
}

inline PolyMap twisted_nagata() { return compose(swap_outer(), nagata()); }

/*
 * (T∘N) ∘ inner. Equal to compose(twisted_nagata(), inner), but evaluated by
 * substituting into the quadric first: with (f, g, h) = inner and
 * Q = q(f, g, h) = g^2 + h f,
 *
 *   (T∘N)(f, g, h) = (h, g - h Q, f + 2 g Q - h Q^2).
 *
 * Expanding N's components before substitution instead creates intermediate
 * terms of degree up to 5 * deg(inner) that only cancel at the end.
 */
inline PolyMap twisted_nagata_after(const PolyMap& inner) {
    if (inner.dimension() != 3) {
        throw DimensionError("the Nagata map acts on affine 3-space");
    }
    const Polynomial& f = inner[0];
    const Polynomial& g = inner[1];
    const Polynomial& h = inner[2];
    const Polynomial quad = substitute(nagata_quadric(), inner.components());
    const Polynomial hq = h * quad;
    return PolyMap({h, g - hq, f + Rational(2) * g * quad - hq * quad});
}

/// (T∘N)^n by repeated composition; n = 0 gives the identity.
inline PolyMap twisted_iterate(unsigned n) {
    PolyMap acc = PolyMap::identity(3);
    for (unsigned i = 0; i < n; ++i) {
        acc = twisted_nagata_after(acc);
    }
    return acc;
}

/// For F = (f, g, h): does g^2 + h f equal y^2 + zx?
inline bool keystone_invariant_holds(const PolyMap& f) {
    if (f.dimension() != 3) {
        return false;
    }
    return f[1] * f[1] + f[2] * f[0] == nagata_quadric();
}

} // namespace polyaut

#endif // POLYAUT_POLY_MAP_HPP
