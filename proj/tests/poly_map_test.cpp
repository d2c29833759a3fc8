#include <polyaut/poly_map.hpp>
#include <polyaut/poly_text.hpp>

#include "support/generators.hpp"

#include <gtest/gtest.h>

namespace polyaut {
namespace {

const Polynomial x = Polynomial::variable(3, 0);
const Polynomial y = Polynomial::variable(3, 1);
const Polynomial z = Polynomial::variable(3, 2);
const Polynomial q = y * y + z * x;

Multidegree md(std::int64_t a, std::int64_t b, std::int64_t c) { return Multidegree{{a, b, c}}; }

TEST(Compose, Examples) {
    const PolyMap f({x + y * y, y - z, z});
    EXPECT_EQ(compose(PolyMap::identity(3), f), f);
    EXPECT_EQ(compose(f, PolyMap::identity(3)), f);
    EXPECT_EQ(compose(swap_outer(), nagata()),
              PolyMap({z, y - z * q, x + Rational(2) * y * q - z * q * q}));
    EXPECT_EQ(compose(swap_outer(), swap_outer()), PolyMap::identity(3));
    EXPECT_THROW(compose(f, PolyMap::identity(2)), DimensionError);
}

TEST(PolyMapType, Invariants) {
    EXPECT_THROW(PolyMap({x, y}), DimensionError);
    EXPECT_THROW(PolyMap(std::vector<Polynomial>{}), DimensionError);
}

TEST(Multidegree, Examples) {
    EXPECT_EQ(multidegree(nagata()), md(5, 3, 1));
    EXPECT_EQ(multidegree(PolyMap::identity(3)), md(1, 1, 1));
    EXPECT_EQ(multidegree(compose(swap_outer(), nagata())), md(1, 3, 5));
    EXPECT_EQ(md(1, 3, 5).to_string(), "1 3 5");
}

TEST(Multidegree, StrictOrder) {
    EXPECT_TRUE(strictly_below(md(1, 3, 5), md(1, 3, 6)));
    EXPECT_FALSE(strictly_below(md(1, 3, 5), md(1, 3, 5)));
    EXPECT_FALSE(strictly_below(md(1, 4, 5), md(2, 3, 5)));
    EXPECT_TRUE(strictly_below(Multidegree{{ExtendedDegree::neg_infinity(), 1, 1}}, md(1, 1, 1)));
}

TEST(Elementary, Examples) {
    EXPECT_EQ(elementary(2, x.pow(5)), PolyMap({x, y, z + x.pow(5)}));
    EXPECT_EQ(elementary(1, x.pow(3)), PolyMap({x, y + x.pow(3), z}));
    EXPECT_EQ(multidegree(elementary(0, y * y + z)), md(2, 1, 1));
    EXPECT_THROW(elementary(0, x * y), std::invalid_argument);
    EXPECT_THROW(elementary(3, y), DimensionError);
}

TEST(Triangular, Examples) {
    EXPECT_EQ(triangular(x.pow(3), x.pow(5)), PolyMap({x, y + x.pow(3), z + x.pow(5)}));
    EXPECT_EQ(triangular(x.pow(3), x.pow(5)),
              compose(elementary(2, x.pow(5)), elementary(1, x.pow(3))));
    EXPECT_THROW(triangular(y, x), std::invalid_argument);
    EXPECT_THROW(triangular(x, z), std::invalid_argument);
}

TEST(Linear, Examples) {
    const Rational o(1), n(0);
    EXPECT_EQ(linear({{o, n, n}, {n, o, n}, {n, n, o}}), PolyMap::identity(3));
    EXPECT_EQ(linear({{n, n, o}, {n, o, n}, {o, n, n}}), swap_outer());
    EXPECT_THROW(linear({{o, o, n}, {o, o, n}, {n, n, o}}), std::invalid_argument);
    EXPECT_THROW(linear({{o, n}, {n, o, n}}), DimensionError);
}

TEST(Linear, InverseComposesToIdentity) {
    const RationalMatrix m{{2, 1, 0}, {1, 1, 0}, {0, 3, 1}};
    const RationalMatrix inv{{1, -1, 0}, {-1, 2, 0}, {3, -6, 1}};
    EXPECT_EQ(compose(linear(m), linear(inv)), PolyMap::identity(3));
    EXPECT_EQ(compose(linear(inv), linear(m)), PolyMap::identity(3));
}

TEST(Nagata, Components) {
    const PolyMap n = nagata();
    EXPECT_EQ(n[2], z);
    EXPECT_EQ(substitute(q, n.components()), q);
    EXPECT_EQ(n[0], parse("x + 2*y*(y^2+z*x) - z*(y^2+z*x)^2"));
}

TEST(TwistedIterate, SmallPowers) {
    EXPECT_EQ(twisted_iterate(0), PolyMap::identity(3));
    EXPECT_EQ(multidegree(twisted_iterate(1)), md(1, 3, 5));
    EXPECT_EQ(multidegree(twisted_iterate(2)), md(5, 7, 9));
    EXPECT_EQ(multidegree(twisted_iterate(3)), md(9, 11, 13));
}

TEST(TwistedIterate, FamilyUpToTen) {
    for (unsigned n = 1; n <= 10; ++n) {
        const PolyMap f = twisted_iterate(n);
        const std::int64_t k = n;
        EXPECT_EQ(multidegree(f), md(4 * k - 3, 4 * k - 1, 4 * k + 1)) << n;
        EXPECT_TRUE(keystone_invariant_holds(f)) << n;
    }
}

TEST(TwistedIterate, RecurrenceUsesMiddleComponent) {
    // (f, g, h) -> (h, g - h q, f + 2 g q - h q^2) with q = y^2 + zx.
    for (unsigned n = 1; n <= 4; ++n) {
        const PolyMap cur = twisted_iterate(n);
        const Polynomial& f = cur[0];
        const Polynomial& g = cur[1];
        const Polynomial& h = cur[2];
        const PolyMap next({h, g - h * q, f + Rational(2) * g * q - h * q * q});
        EXPECT_EQ(twisted_iterate(n + 1), next) << n;
    }
}

TEST(TwistedIterate, QuadricEvaluationMatchesCompose) {
    for (unsigned n = 0; n <= 2; ++n) {
        const PolyMap inner = twisted_iterate(n);
        EXPECT_EQ(twisted_nagata_after(inner), compose(twisted_nagata(), inner)) << n;
    }
    testing::PolyGen gen(77);
    for (int t = 0; t < 10; ++t) {
        const PolyMap inner({gen.poly(3, 3, 3), gen.poly(3, 3, 3), gen.poly(3, 3, 3)});
        EXPECT_EQ(twisted_nagata_after(inner), compose(twisted_nagata(), inner));
    }
    EXPECT_THROW(twisted_nagata_after(PolyMap::identity(2)), DimensionError);
}

TEST(TwistedIterate, PowersCompose) {
    for (unsigned m = 1; m <= 2; ++m) {
        for (unsigned k = 1; k <= 2; ++k) {
            EXPECT_EQ(twisted_iterate(m + k), compose(twisted_iterate(m), twisted_iterate(k)));
        }
    }
}

TEST(Keystone, Examples) {
    EXPECT_TRUE(keystone_invariant_holds(twisted_iterate(1)));
    EXPECT_TRUE(keystone_invariant_holds(twisted_iterate(4)));
    EXPECT_TRUE(keystone_invariant_holds(PolyMap::identity(3)));
    EXPECT_TRUE(keystone_invariant_holds(swap_outer()));
    EXPECT_TRUE(keystone_invariant_holds(nagata()));
    EXPECT_FALSE(keystone_invariant_holds(elementary(1, x)));
    EXPECT_FALSE(keystone_invariant_holds(PolyMap::identity(2)));
}

TEST(ComposeProperties, Associativity) {
    testing::PolyGen gen(31);
    const auto random_elementary = [&gen]() {
        const auto i = static_cast<std::size_t>(gen.integer(0, 2));
        Polynomial shift = gen.poly(3, 2, 3);
        // drop terms involving coordinate i
        Polynomial clean(3);
        for (const auto& [e, c] : shift.terms()) {
            if (e[i] == 0) {
                clean += Polynomial::monomial(e, c);
            }
        }
        return elementary(i, clean);
    };
    for (int t = 0; t < 15; ++t) {
        const PolyMap a = random_elementary();
        const PolyMap b = compose(random_elementary(), random_elementary());
        const PolyMap c = random_elementary();
        EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    }
}

TEST(ComposeProperties, ElementaryStepLowersMultidegree) {
    // F = (x, y + x^3, z + x^5); subtracting x^3 from the second coordinate.
    const PolyMap f({x, y + x.pow(3), z + x.pow(5)});
    const PolyMap reduced = compose(elementary(1, -x.pow(3)), f);
    EXPECT_EQ(reduced, PolyMap({x, y, z + x.pow(5)}));
    EXPECT_TRUE(strictly_below(multidegree(reduced), multidegree(f)));
}

TEST(ComposeSteps, ApplicationOrder) {
    const std::vector<ElementaryStep> steps{{0, z.pow(2)}, {2, x}};
    // x += z^2 first, then z += x.
    EXPECT_EQ(compose_steps(3, steps), PolyMap({x + z * z, y, z + x + z * z}));
}

} // namespace
} // namespace polyaut
