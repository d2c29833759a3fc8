#ifndef POLYAUT_LINEAR_SOLVE_HPP
#define POLYAUT_LINEAR_SOLVE_HPP

#include <polyaut/errors.hpp>
#include <polyaut/polynomial.hpp>

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace polyaut {

using RationalMatrix = std::vector<std::vector<Rational>>;

/*
 * Fraction-free (Bareiss) row echelon form of an integer matrix.
 *
 * Each rational row is first scaled by the lcm of its denominators, so all
 * elimination happens in Z with exact divisions by the previous pivot. Pivots
 * are chosen as the first nonzero entry of the current column, scanning rows
 * top to bottom; the first `pivot_limit` columns are eligible for pivoting
 * (the remaining ones, e.g. a right-hand side, are carried along).
 */
class BareissEchelon {
public:
    BareissEchelon(const RationalMatrix& rows, std::size_t pivot_limit) {
        cols_ = rows.empty() ? 0 : rows.front().size();
        if (pivot_limit > cols_) {
            throw DimensionError("pivot limit exceeds column count");
        }
        m_.reserve(rows.size());
        for (const auto& row : rows) {
            if (row.size() != cols_) {
                throw DimensionError("ragged matrix");
            }
            mpz_class scale = 1;
            for (const auto& v : row) {
                mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
            }
            std::vector<mpz_class> ints(cols_);
            for (std::size_t j = 0; j < cols_; ++j) {
                ints[j] = row[j].get_num() * (scale / row[j].get_den());
            }
            m_.push_back(std::move(ints));
        }
        eliminate(pivot_limit);
    }

    const std::vector<std::vector<mpz_class>>& rows() const noexcept { return m_; }
    const std::vector<std::size_t>& pivot_columns() const noexcept { return pivots_; }
    std::size_t rank() const noexcept { return pivots_.size(); }

private:
    void eliminate(std::size_t pivot_limit) {
        mpz_class previous = 1;
        std::size_t r = 0;
        for (std::size_t col = 0; col < pivot_limit && r < m_.size(); ++col) {
            std::size_t p = r;
            while (p < m_.size() && m_[p][col] == 0) {
                ++p;
            }
            if (p == m_.size()) {
                continue;
            }
            std::swap(m_[r], m_[p]);
            const mpz_class& pivot = m_[r][col];
            for (std::size_t i = r + 1; i < m_.size(); ++i) {
                const mpz_class factor = m_[i][col];
                for (std::size_t j = col + 1; j < cols_; ++j) {
                    mpz_class v = pivot * m_[i][j] - factor * m_[r][j];
                    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                    m_[i][j] = std::move(v);
                }
                m_[i][col] = 0;
            }
            previous = pivot;
            pivots_.push_back(col);
            ++r;
        }
    }

    std::size_t cols_ = 0;
    std::vector<std::vector<mpz_class>> m_;
    std::vector<std::size_t> pivots_;
};

/// Rank over Q.
inline std::size_t rank(const RationalMatrix& a) {
    if (a.empty()) {
        return 0;
    }
    return BareissEchelon(a, a.front().size()).rank();
}

/*
 * Solves a x = b exactly. Returns nothing when the system is inconsistent;
 * otherwise the solution with every free variable set to zero.
 */
inline std::optional<std::vector<Rational>> solve_exact(const RationalMatrix& a,
                                                        const std::vector<Rational>& b) {
    if (a.size() != b.size()) {
        throw DimensionError("right-hand side length differs from row count");
    }
    const std::size_t n = a.empty() ? 0 : a.front().size();
    RationalMatrix augmented;
    augmented.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != n) {
            throw DimensionError("ragged matrix");
        }
        auto row = a[i];
        row.push_back(b[i]);
        augmented.push_back(std::move(row));
    }
    if (augmented.empty()) {
        return std::vector<Rational>(n, Rational(0));
    }

    const BareissEchelon echelon(augmented, n);
    const auto& m = echelon.rows();
    for (std::size_t i = echelon.rank(); i < m.size(); ++i) {
        if (m[i][n] != 0) {
            return std::nullopt;
        }
    }

    std::vector<Rational> x(n, Rational(0));
    const auto& pivots = echelon.pivot_columns();
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t pc = pivots[k];
        Rational acc(m[k][n]);
        for (std::size_t j = pc + 1; j < n; ++j) {
            if (m[k][j] != 0 && x[j] != 0) {
                acc -= Rational(m[k][j]) * x[j];
            }
        }
        x[pc] = acc / Rational(m[k][pc]);
    }
    return x;
}

} // namespace polyaut

#endif // POLYAUT_LINEAR_SOLVE_HPP
