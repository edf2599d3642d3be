#include <gtest/gtest.h>

#include "lowmach/grid.hpp"
#include "test_support.hpp"

using namespace lowmach;
using lowmach::test::kPi;

TEST(Grid, SpacingFromLengths) {
    const Grid g = make_grid(8, 8, 2 * kPi, 2 * kPi);
    EXPECT_DOUBLE_EQ(g.dx, kPi / 4);
    EXPECT_DOUBLE_EQ(g.dy, kPi / 4);
    EXPECT_NEAR(g.dx, 0.7853982, 1e-7);

    const Grid h = make_grid(32, 64, 2 * kPi, 4 * kPi);
    EXPECT_DOUBLE_EQ(h.dx, kPi / 16);
    EXPECT_DOUBLE_EQ(h.dy, kPi / 16);
}

TEST(Grid, RejectsBadArguments) {
    EXPECT_THROW(make_grid(3, 8, 1, 1), std::invalid_argument);
    EXPECT_THROW(make_grid(8, 3, 1, 1), std::invalid_argument);
    EXPECT_THROW(make_grid(8, 8, 0, 1), std::invalid_argument);
    EXPECT_THROW(make_grid(8, 8, 1, -2), std::invalid_argument);
}

TEST(Grid, PeriodicIndexWrap) {
    const Grid g = make_grid(6, 5, 1, 1);
    for (int s = -3; s <= 3; ++s)
        for (int i = 0; i < g.nx; ++i)
            for (int j = 0; j < g.ny; ++j) {
                EXPECT_EQ(g.index(i + s * g.nx, j), g.index(i, j));
                EXPECT_EQ(g.index(i, j + s * g.ny), g.index(i, j));
            }
    EXPECT_EQ(g.index(1, 2), 1u + 6u * 2u);
}

TEST(Fields, ArithmeticAndReductions) {
    const Grid g = make_grid(4, 4, 1, 1);
    ScalarField a(g, 2.0), b(g, 3.0);
    EXPECT_DOUBLE_EQ((a + b).mean(), 5.0);
    EXPECT_DOUBLE_EQ((a - b).max_abs(), 1.0);
    EXPECT_DOUBLE_EQ((2.0 * b).sum(), 96.0);
    a.axpy(-1.0, b);
    EXPECT_DOUBLE_EQ(a.mean(), -1.0);
    a[3] = std::nan("");
    EXPECT_FALSE(a.all_finite());
}

TEST(Fields, MismatchedGridsRejected) {
    ScalarField a(make_grid(4, 4, 1, 1)), b(make_grid(8, 4, 1, 1));
    EXPECT_THROW(a += b, std::invalid_argument);
    EXPECT_THROW(VectorField(a, b), std::invalid_argument);
}
