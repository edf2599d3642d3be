#include <gtest/gtest.h>

#include "lowmach/imex.hpp"

using namespace lowmach;

TEST(BuiltinTableau, SecondOrderCoefficients) {
    const IMEXTableau t = builtin_tableau("second_order_gsa");
    ASSERT_EQ(t.s, 3);
    EXPECT_NEAR(t.a[2][2], 1.4, 1e-15);
    EXPECT_NEAR(t.a[2][1], -0.4, 1e-15);
    EXPECT_NEAR(t.a[1][1], 2.25, 1e-15);
    EXPECT_NEAR(t.atil[1][0], 2.25, 1e-15);
    EXPECT_NEAR(t.atil[2][0], 0.7777778, 1e-7);
    EXPECT_NEAR(t.atil[2][1], 0.2222222, 1e-7);
    EXPECT_EQ(t.wtil, t.atil[2]);
    EXPECT_EQ(t.w, t.a[2]);
}

TEST(BuiltinTableau, Euler) {
    const IMEXTableau t = builtin_tableau("euler_gsa");
    ASSERT_EQ(t.s, 2);
    EXPECT_EQ(t.w, (std::vector<double>{0, 1}));
    EXPECT_EQ(t.wtil, (std::vector<double>{1, 0}));
    EXPECT_EQ(t.a[1][1], 1.0);
    EXPECT_EQ(t.atil[1][0], 1.0);
}

TEST(BuiltinTableau, RowSumsAndNames) {
    for (const std::string& name : builtin_tableau_names()) {
        const IMEXTableau t = builtin_tableau(name);
        for (int i = 0; i < t.s; ++i) {
            double c = 0, ct = 0;
            for (int j = 0; j < t.s; ++j) {
                c += t.a[i][j];
                ct += t.atil[i][j];
            }
            EXPECT_NEAR(t.c[i], c, 1e-15);
            EXPECT_NEAR(t.ctil[i], ct, 1e-15);
        }
    }
    EXPECT_THROW(builtin_tableau("rk4"), std::invalid_argument);
}

TEST(Classify, Euler) {
    const TableauReport r = classify(builtin_tableau("euler_gsa"));
    EXPECT_EQ(r.scheme_type, SchemeType::ARS);
    EXPECT_TRUE(r.isa);
    EXPECT_TRUE(r.gsa);
    EXPECT_EQ(r.classical_order, 1);
}

TEST(Classify, SecondOrder) {
    const TableauReport r = classify(builtin_tableau("second_order_gsa"));
    EXPECT_EQ(r.scheme_type, SchemeType::ARS);
    EXPECT_TRUE(r.gsa);
    EXPECT_EQ(r.classical_order, 2);
    EXPECT_TRUE(r.problems.empty());
}

TEST(Classify, NonzeroFirstDiagonalIsTypeA) {
    IMEXTableau t = builtin_tableau("euler_gsa");
    t = make_tableau("a_type", {{0.5, 0}, {0, 1}}, t.atil, {0, 1}, t.wtil);
    EXPECT_EQ(classify(t).scheme_type, SchemeType::A);
}

TEST(Classify, CkButNotArs) {
    // First row zero, invertible lower block, nonzero first column.
    const IMEXTableau t = make_tableau("ck", {{0, 0}, {0.5, 0.5}}, {{0, 0}, {1, 0}}, {0.5, 0.5}, {1, 0});
    const TableauReport r = classify(t);
    EXPECT_EQ(r.scheme_type, SchemeType::CK);
    EXPECT_TRUE(r.gsa);
}

TEST(Classify, IsaWithoutGsa) {
    const IMEXTableau t = make_tableau("isa", {{0, 0}, {0, 1}}, {{0, 0}, {0.5, 0}}, {0, 1}, {1, 0});
    const TableauReport r = classify(t);
    EXPECT_TRUE(r.isa);
    EXPECT_FALSE(r.gsa);
}

TEST(Classify, StructuralProblemsAreInvalid) {
    // Explicit part not strictly lower triangular.
    EXPECT_EQ(classify(make_tableau("bad", {{0, 0}, {0, 1}}, {{0.1, 0}, {1, 0}}, {0, 1}, {1, 0})).scheme_type,
              SchemeType::invalid);
    // Implicit part with an entry above the diagonal.
    EXPECT_EQ(classify(make_tableau("bad", {{0, 0.2}, {0, 1}}, {{0, 0}, {1, 0}}, {0, 1}, {1, 0})).scheme_type,
              SchemeType::invalid);
    // Abscissae inconsistent with the row sums.
    const TableauReport r =
        classify(make_tableau("bad", {{0, 0}, {0, 1}}, {{0, 0}, {1, 0}}, {0, 1}, {1, 0}, std::vector<double>{0, 0.5}));
    EXPECT_EQ(r.scheme_type, SchemeType::invalid);
    EXPECT_FALSE(r.problems.empty());
}

TEST(Classify, WeightsNotSummingToOneHaveNoOrder) {
    const TableauReport r = classify(make_tableau("w", {{0, 0}, {0, 0.9}}, {{0, 0}, {0.9, 0}}, {0, 0.9}, {0.9, 0}));
    EXPECT_EQ(r.classical_order, 0);
}

TEST(Describe, MentionsTypeAndOrder) {
    const IMEXTableau t = builtin_tableau("second_order_gsa");
    const std::string text = describe(t, classify(t));
    EXPECT_NE(text.find("ARS"), std::string::npos);
    EXPECT_NE(text.find("2"), std::string::npos);
    EXPECT_EQ(to_string(SchemeType::CK), "CK");
}
