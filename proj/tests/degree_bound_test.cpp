#include <polyaut/degree_bound.hpp>
#include <polyaut/poly_text.hpp>

#include "support/generators.hpp"

#include <gtest/gtest.h>

namespace polyaut {
namespace {

const Polynomial x = Polynomial::variable(3, 0);
const Polynomial y = Polynomial::variable(3, 1);
const Polynomial z = Polynomial::variable(3, 2);
const Polynomial q = y * y + z * x;

TEST(LowerBound, Examples) {
    EXPECT_EQ(composite_degree_lower_bound({2, 3, ExtendedDegree(4), 1, 0}), 5);
    EXPECT_EQ(composite_degree_lower_bound({5, 7, ExtendedDegree(2), 0, 3}), 21);
    for (std::int64_t d1 = 3; d1 <= 15; d1 += 2) {
        for (std::int64_t d2 = d1 + 2; d2 <= 21; d2 += 2) {
            if (std::gcd(d1, d2) != 1) {
                continue;
            }
            const std::int64_t b = composite_degree_lower_bound({d1, d2, ExtendedDegree(2), 1, 0});
            EXPECT_EQ(b, d1 * d2 - d1 - d2 + 2);
            EXPECT_GT(b, (d1 - 1) * (d2 - 1));
        }
    }
}

TEST(LowerBound, InvalidInputs) {
    EXPECT_THROW(composite_degree_lower_bound({3, 3, ExtendedDegree(2), 1, 0}), std::invalid_argument);
    EXPECT_THROW(composite_degree_lower_bound({4, 6, ExtendedDegree(2), 1, 2}), std::invalid_argument);
    EXPECT_THROW(composite_degree_lower_bound({2, 3, ExtendedDegree(2), -1, 0}), std::invalid_argument);
    EXPECT_THROW(composite_degree_lower_bound({2, 3, ExtendedDegree::neg_infinity(), 1, 0}),
                 std::invalid_argument);
    EXPECT_EQ(composite_degree_lower_bound({2, 3, ExtendedDegree::neg_infinity(), 0, 1}), 3);
}

TEST(BoundInputs, SplitsYDegree) {
    // deg f = 4, deg g = 6: p = 2, deg_y = 5 = 2*2 + 1.
    const BoundInputs b = bound_inputs(x.pow(4) + y, z.pow(6) + x, 5);
    EXPECT_EQ(b.deg_f, 4);
    EXPECT_EQ(b.deg_g, 6);
    EXPECT_EQ(b.q, 2);
    EXPECT_EQ(b.r, 1);
    EXPECT_EQ(b.deg_bracket, poisson_degree(x.pow(4) + y, z.pow(6) + x));
    EXPECT_THROW(bound_inputs(z.pow(6), x, 1), std::invalid_argument);
}

TEST(Hypotheses, Examples) {
    EXPECT_TRUE(lower_bound_hypotheses_hold(x, y * y));
    EXPECT_FALSE(lower_bound_hypotheses_hold(q, q * q + x));
    EXPECT_TRUE(lower_bound_hypotheses_hold(x + y * y, z.pow(3) + x));
    EXPECT_FALSE(lower_bound_hypotheses_hold(x, x * x + y)); // leading form x^2 lies in C[x]
    EXPECT_THROW(lower_bound_hypotheses_hold(Polynomial(3), x), std::invalid_argument);
    EXPECT_THROW(lower_bound_hypotheses_hold(y * y, x), std::invalid_argument);
    EXPECT_THROW(lower_bound_hypotheses_hold(x, y), std::invalid_argument);
}

Polynomial evaluate_pair(const Polynomial& big_g, const Polynomial& f, const Polynomial& g) {
    return substitute(big_g, {f, g});
}

TEST(LowerBoundProperty, HoldsOnSampledInstances) {
    testing::PolyGen gen(4242);
    int checked = 0;
    for (int attempt = 0; attempt < 4000 && checked < 120; ++attempt) {
        const unsigned deg_g = static_cast<unsigned>(gen.integer(2, 6));
        const unsigned deg_f = static_cast<unsigned>(gen.integer(1, static_cast<int>(deg_g) - 1));
        const Polynomial f = gen.poly_of_degree(3, deg_f, 2);
        const Polynomial g = gen.poly_of_degree(3, deg_g, 2);
        if (!lower_bound_hypotheses_hold(f, g)) {
            continue;
        }
        Polynomial big_g = gen.poly(2, 4, 4);
        const unsigned deg_y = static_cast<unsigned>(gen.integer(0, 4));
        big_g += Polynomial::monomial({static_cast<unsigned>(gen.integer(0, 2)), deg_y},
                                      gen.coefficient());
        if (big_g.is_zero() || big_g.degree_in(1) > 4) {
            continue;
        }
        const BoundInputs b = bound_inputs(f, g, big_g.degree_in(1));
        const ExtendedDegree actual = evaluate_pair(big_g, f, g).degree();
        ASSERT_TRUE(actual.is_finite());
        EXPECT_GE(actual.value(), composite_degree_lower_bound(b))
            << "f = " << render(f) << ", g = " << render(g)
            << ", G = " << render(big_g, {"u", "v"});
        ++checked;
    }
    EXPECT_GE(checked, 100);
}

} // namespace
} // namespace polyaut
