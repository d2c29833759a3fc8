#ifndef POLYAUT_POLYNOMIAL_HPP
#define POLYAUT_POLYNOMIAL_HPP

#include <polyaut/errors.hpp>
#include <polyaut/extended_degree.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace polyaut {

using Rational = mpq_class;

/// Exponent vector of a monomial; entry i is the power of variable i.
using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}

/// Graded lexicographic order with the largest monomial first (x > y > z).
struct GrlexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const unsigned da = total_degree(a);
        const unsigned db = total_degree(b);
        if (da != db) {
            return da > db;
        }
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

/*
 * Sparse multivariate polynomial over the rationals.
 *
 * Terms are kept in a map ordered by GrlexDescending, so the first term is the
 * grlex-leading one and iteration order is the canonical print order. No
 * stored coefficient is ever zero, which makes the representation unique and
 * lets operator== compare coefficient-wise.
 */
class Polynomial {
public:
    using Terms = std::map<Exponents, Rational, GrlexDescending>;

    explicit Polynomial(std::size_t var_count) : var_count_(var_count) {
        if (var_count == 0) {
            throw DimensionError("polynomial needs at least one variable");
        }
    }

    static Polynomial constant(std::size_t var_count, const Rational& c) {
        Polynomial p(var_count);
        p.add_term(Exponents(var_count, 0), c);
        return p;
    }

    static Polynomial variable(std::size_t var_count, std::size_t index) {
        if (index >= var_count) {
            throw DimensionError("variable index out of range");
        }
        Exponents e(var_count, 0);
        e[index] = 1;
        return monomial(std::move(e), 1);
    }

    static Polynomial monomial(Exponents e, const Rational& c) {
        Polynomial p(e.size());
        p.add_term(e, c);
        return p;
    }

    std::size_t var_count() const noexcept { return var_count_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    ExtendedDegree degree() const {
        if (terms_.empty()) {
            return ExtendedDegree::neg_infinity();
        }
        return ExtendedDegree(total_degree(terms_.begin()->first));
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    bool is_homogeneous() const {
        if (terms_.empty()) {
            return true;
        }
        const unsigned d = total_degree(terms_.begin()->first);
        return std::all_of(terms_.begin(), terms_.end(),
                           [d](const auto& t) { return total_degree(t.first) == d; });
    }

    unsigned degree_in(std::size_t var) const {
        check_index(var);
        unsigned d = 0;
        for (const auto& [e, c] : terms_) {
            d = std::max(d, e[var]);
        }
        return d;
    }

    bool involves(std::size_t var) const { return degree_in(var) > 0; }

    Rational coefficient(const Exponents& e) const {
        const auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Polynomial& operator+=(const Polynomial& other) {
        check_same_ring(other);
        for (const auto& [e, c] : other.terms_) {
            add_term(e, c);
        }
        return *this;
    }

    Polynomial& operator-=(const Polynomial& other) {
        check_same_ring(other);
        for (const auto& [e, c] : other.terms_) {
            add_term(e, -c);
        }
        return *this;
    }

    Polynomial& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) {
            c *= s;
        }
        return *this;
    }

    Polynomial& operator*=(const Polynomial& other) {
        *this = *this * other;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend Polynomial operator-(Polynomial a) {
        for (auto& [e, c] : a.terms_) {
            c = -c;
        }
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same_ring(b);
        Polynomial out(a.var_count_);
        Exponents e(a.var_count_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    Polynomial pow(unsigned k) const {
        Polynomial result = constant(var_count_, 1);
        Polynomial base = *this;
        while (k > 0) {
            if (k & 1u) {
                result *= base;
            }
            k >>= 1;
            if (k > 0) {
                base *= base;
            }
        }
        return result;
    }

    Polynomial derivative(std::size_t var) const {
        check_index(var);
        Polynomial out(var_count_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) {
                continue;
            }
            Exponents d = e;
            --d[var];
            out.add_term(d, c * e[var]);
        }
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.var_count_ == b.var_count_ && a.terms_ == b.terms_;
    }

private:
    void add_term(const Exponents& e, const Rational& c) {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    void check_same_ring(const Polynomial& other) const {
        if (var_count_ != other.var_count_) {
            throw DimensionError("polynomials have " + std::to_string(var_count_) + " and " +
                                 std::to_string(other.var_count_) + " variables");
        }
    }

    void check_index(std::size_t var) const {
        if (var >= var_count_) {
            throw DimensionError("variable index out of range");
        }
    }

    std::size_t var_count_;
    Terms terms_;
};

/// A nonzero homogeneous polynomial: the highest homogeneous part of something.
class LeadingForm {
public:
    explicit LeadingForm(Polynomial form) : form_(std::move(form)) {
        if (form_.is_zero()) {
            throw UndefinedInputError("leading form of the zero polynomial");
        }
        if (!form_.is_homogeneous()) {
            throw std::invalid_argument("leading form must be homogeneous");
        }
    }

    const Polynomial& polynomial() const noexcept { return form_; }
    std::int64_t degree() const { return form_.degree().value(); }

    friend bool operator==(const LeadingForm&, const LeadingForm&) = default;

private:
    Polynomial form_;
};

inline LeadingForm leading_form(const Polynomial& p) {
    if (p.is_zero()) {
        throw UndefinedInputError("leading form of the zero polynomial");
    }
    const unsigned d = total_degree(p.terms().begin()->first);
    Polynomial top(p.var_count());
    for (const auto& [e, c] : p.terms()) {
        if (total_degree(e) != d) {
            break;
        }
        top += Polynomial::monomial(e, c);
    }
    return LeadingForm(std::move(top));
}

namespace detail {

// powers[i][k] = images[i]^k, extended on demand.
class PowerCache {
public:
    explicit PowerCache(const std::vector<Polynomial>& images) : images_(images) {
        powers_.reserve(images.size());
        for (const auto& img : images) {
            powers_.push_back({Polynomial::constant(img.var_count(), 1)});
        }
    }

    const Polynomial& get(std::size_t var, unsigned k) {
        auto& row = powers_[var];
        while (row.size() <= k) {
            row.push_back(row.back() * images_[var]);
        }
        return row[k];
    }

private:
    const std::vector<Polynomial>& images_;
    std::vector<std::vector<Polynomial>> powers_;
};

// Nested evaluation: split on the exponent of `var`, recurse on the rest.
inline Polynomial substitute_from(const Polynomial::Terms& terms, std::size_t var,
                                  std::size_t target_vars, PowerCache& cache) {
    if (var == terms.begin()->first.size()) {
        Polynomial out(target_vars);
        for (const auto& [e, c] : terms) {
            out += Polynomial::constant(target_vars, c);
        }
        return out;
    }
    std::map<unsigned, Polynomial::Terms> groups;
    for (const auto& [e, c] : terms) {
        Exponents rest = e;
        rest[var] = 0;
        groups[e[var]].emplace(std::move(rest), c);
    }
    Polynomial out(target_vars);
    for (const auto& [k, group] : groups) {
        Polynomial inner = substitute_from(group, var + 1, target_vars, cache);
        out += k == 0 ? inner : cache.get(var, k) * inner;
    }
    return out;
}

} // namespace detail

/// Replaces variable i of `p` by images[i]. The result lives in the ring of the images.
inline Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
    if (images.size() != p.var_count()) {
        throw DimensionError("substitute needs " + std::to_string(p.var_count()) +
                             " images, got " + std::to_string(images.size()));
    }
    const std::size_t m = images.front().var_count();
    for (const auto& img : images) {
        if (img.var_count() != m) {
            throw DimensionError("substitution images live in different rings");
        }
    }
    if (p.is_zero()) {
        return Polynomial(m);
    }
    detail::PowerCache cache(images);
    return detail::substitute_from(p.terms(), 0, m, cache);
}

/// df/dx_i * dg/dx_j - df/dx_j * dg/dx_i
inline Polynomial jacobian_minor(const Polynomial& f, const Polynomial& g, std::size_t i,
                                 std::size_t j) {
    return f.derivative(i) * g.derivative(j) - f.derivative(j) * g.derivative(i);
}

namespace detail {

inline void check_bracket_operands(const Polynomial& f, const Polynomial& g) {
    if (f.var_count() != g.var_count()) {
        throw DimensionError("bracket operands live in different rings");
    }
    if (f.var_count() < 2) {
        throw DimensionError("bracket needs at least two variables");
    }
}

} // namespace detail

/// In characteristic zero, f and g are algebraically independent iff some
/// 2x2 minor of their Jacobian is nonzero.
inline bool algebraically_independent(const Polynomial& f, const Polynomial& g) {
    detail::check_bracket_operands(f, g);
    const std::size_t n = f.var_count();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!jacobian_minor(f, g, i, j).is_zero()) {
                return true;
            }
        }
    }
    return false;
}

/*
 * Degree of the Poisson bracket [f,g], where each symbol [X_i,X_j] has degree 2:
 * 2 + the largest minor degree when f, g are independent, and 0 when they are
 * dependent. A zero operand makes the bracket itself zero, hence -infinity.
 */
inline ExtendedDegree poisson_degree(const Polynomial& f, const Polynomial& g) {
    detail::check_bracket_operands(f, g);
    if (f.is_zero() || g.is_zero()) {
        return ExtendedDegree::neg_infinity();
    }
    const std::size_t n = f.var_count();
    ExtendedDegree best = ExtendedDegree::neg_infinity();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            best = std::max(best, jacobian_minor(f, g, i, j).degree());
        }
    }
    if (best.is_neg_infinity()) {
        return ExtendedDegree(0);
    }
    return best + ExtendedDegree(2);
}

/*
 * True iff fbar lies in C[gbar]. For homogeneous forms this means
 * fbar = c * gbar^k with c != 0, k >= 0: deg gbar must divide deg fbar and the
 * quotient fbar / gbar^k must be a constant.
 */
inline bool leading_in_subring(const LeadingForm& fbar, const LeadingForm& gbar) {
    const Polynomial& f = fbar.polynomial();
    const Polynomial& g = gbar.polynomial();
    if (f.var_count() != g.var_count()) {
        throw DimensionError("leading forms live in different rings");
    }
    const std::int64_t df = fbar.degree();
    const std::int64_t dg = gbar.degree();
    if (dg == 0) {
        return df == 0;
    }
    if (df % dg != 0) {
        return false;
    }
    const Polynomial gk = g.pow(static_cast<unsigned>(df / dg));
    if (gk.term_count() != f.term_count()) {
        return false;
    }
    const auto& lead = *f.terms().begin();
    const auto it = gk.terms().find(lead.first);
    if (it == gk.terms().end()) {
        return false;
    }
    const Rational c = lead.second / it->second;
    return gk * c == f;
}

} // namespace polyaut

#endif // POLYAUT_POLYNOMIAL_HPP
