#include <gtest/gtest.h>

#include <unordered_set>

#include "linrel/exactcore.hpp"

using linrel::Rat;

TEST(Rat, ParsesIntegersAndFractions) {
    EXPECT_EQ(Rat::parse("3"), Rat(3));
    EXPECT_EQ(Rat::parse("-3/6"), Rat(-1, 2));
    EXPECT_EQ(Rat::parse("4/2"), Rat(2));
    EXPECT_EQ(Rat::parse("4/2").str(), "2");
    EXPECT_EQ(Rat(2, -4).str(), "-1/2");
}

TEST(Rat, RejectsMalformedText) {
    EXPECT_THROW(Rat::parse(""), linrel::ParseError);
    EXPECT_THROW(Rat::parse("1/"), linrel::ParseError);
    EXPECT_THROW(Rat::parse("a/2"), linrel::ParseError);
    EXPECT_THROW(Rat::parse("0.5"), linrel::ParseError);
    EXPECT_THROW(Rat::parse("1/0"), linrel::Error);
}

TEST(Rat, ArithmeticIsExact) {
    const Rat a(1, 3), b(1, 6);
    EXPECT_EQ(a + b, Rat(1, 2));
    EXPECT_EQ(a - b, Rat(1, 6));
    EXPECT_EQ(a * b, Rat(1, 18));
    EXPECT_EQ(a / b, Rat(2));
    EXPECT_EQ(-a, Rat(-1, 3));
    EXPECT_LT(b, a);
    EXPECT_THROW(a / Rat(0), linrel::FormulaPole);
    EXPECT_EQ(pow(Rat(-2, 3), 3), Rat(-8, 27));
    EXPECT_EQ(pow(Rat(2), -2), Rat(1, 4));
    EXPECT_EQ(abs(Rat(-5, 7)), Rat(5, 7));
}

TEST(Rat, Predicates) {
    EXPECT_TRUE(Rat(0).is_nonpositive_integer());
    EXPECT_TRUE(Rat(-4).is_nonpositive_integer());
    EXPECT_FALSE(Rat(-1, 2).is_nonpositive_integer());
    EXPECT_FALSE(Rat(1).is_nonpositive_integer());
    EXPECT_TRUE(Rat(6, 3).is_integer());
    EXPECT_EQ(Rat(-7).to_long(), -7);
    EXPECT_DOUBLE_EQ(Rat(1, 4).to_double(), 0.25);
}

TEST(Rat, HashesCanonicalForms) {
    std::unordered_set<Rat> set{Rat(1, 2), Rat(2, 4), Rat(3)};
    EXPECT_EQ(set.size(), 2u);
}

TEST(Pochhammer, Examples) {
    using linrel::pochhammer;
    EXPECT_EQ(pochhammer(Rat(1, 2), 3), Rat(15, 8));
    EXPECT_EQ(pochhammer(Rat(-3), 4), Rat(0));
    EXPECT_EQ(pochhammer(Rat(-3), 3), Rat(-6));
    EXPECT_EQ(pochhammer(Rat(7, 5), 0), Rat(1));
    EXPECT_EQ(pochhammer(Rat(1), 5), Rat(120));
    EXPECT_THROW(pochhammer(Rat(1), -1), std::invalid_argument);
}

TEST(Pochhammer, ProductAndRatio) {
    using namespace linrel;
    EXPECT_EQ(pochhammer_list({Rat(1), Rat(2)}, 2), Rat(2) * Rat(6));
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            EXPECT_EQ(pochhammer_ratio(Rat(3, 7), a, b), pochhammer(Rat(3, 7), a) / pochhammer(Rat(3, 7), b));
    // (c)_m/(c)_s stays finite at c = -1 when the vanishing factor cancels
    EXPECT_EQ(pochhammer_ratio(Rat(-1), 3, 2), Rat(1));
    EXPECT_EQ(reciprocal_pochhammer(Rat(3), -2), Rat(2));  // 1/(3)_{-2} = (1)_2
    EXPECT_THROW(reciprocal_pochhammer(Rat(-1), 2), FormulaPole);
}

TEST(Pochhammer, RecurrenceProperty) {
    using linrel::pochhammer;
    for (const Rat& z : {Rat(1, 3), Rat(-5, 2), Rat(4)})
        for (int n = 0; n < 8; ++n) EXPECT_EQ(pochhammer(z, n + 1), pochhammer(z, n) * (z + Rat(n)));
}

TEST(Factorial, ValuesAndReciprocal) {
    using namespace linrel;
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(10), 3628800);
    EXPECT_EQ(factorial(25).get_str(), "15511210043330985984000000");
    EXPECT_EQ(reciprocal_factorial(3), Rat(1, 6));
    EXPECT_EQ(reciprocal_factorial(-1), Rat(0));
    EXPECT_THROW(factorial(-1), std::invalid_argument);
}

TEST(Floor, HalfRoundsDown) {
    using linrel::floor_half;
    EXPECT_EQ(floor_half(5), 2);
    EXPECT_EQ(floor_half(4), 2);
    EXPECT_EQ(floor_half(-1), -1);
    EXPECT_EQ(floor_half(-3), -2);
    EXPECT_EQ(floor_half(-4), -2);
    EXPECT_TRUE(linrel::is_even(-4));
    EXPECT_FALSE(linrel::is_even(-3));
}
