#include <gtest/gtest.h>

#include <array>

#include "qaseries/errors.hpp"
#include "qaseries/expr.hpp"
#include "qaseries/series.hpp"

using namespace qaseries;

namespace {

Series S(const char* text, std::size_t nvars = 2, unsigned trunc = 8) {
  return parse_series(text, nvars, trunc);
}

std::string str(const Series& s) { return to_string(s); }

}  // namespace

TEST(Coeff, LowestTermsAndZero) {
  EXPECT_EQ(to_string(make_coeff(6, -4)), "-3/2");
  EXPECT_EQ(to_string(make_coeff(0, 7)), "0");
  EXPECT_EQ(make_coeff(0, 7).get_den(), 1);
  EXPECT_THROW(make_coeff(1, 0), PreconditionError);
  EXPECT_EQ(parse_coeff("-10/4"), Coeff(-5, 2));
  EXPECT_THROW(parse_coeff("1/0"), Error);
}

TEST(Expo, GradedLexOrder) {
  GradedLexLess less;
  EXPECT_TRUE(less(Expo{1, 0}, Expo{0, 2}));
  EXPECT_TRUE(less(Expo{2, 0}, Expo{1, 1}));
  EXPECT_TRUE(less(Expo{1, 1}, Expo{0, 2}));
  EXPECT_FALSE(less(Expo{0, 2}, Expo{0, 2}));
  EXPECT_EQ((Expo{1, 2}).degree(), 3u);
  EXPECT_TRUE((Expo{1, 0}).divides(Expo{1, 3}));
  EXPECT_FALSE((Expo{0, 4}).divides(Expo{1, 3}));
}

TEST(Series, DropsZerosAndTermsAboveTrunc) {
  Series::TermMap t;
  t[Expo{0, 0}] = 0;
  t[Expo{1, 0}] = 2;
  t[Expo{3, 0}] = 1;
  Series s(2, 2, t, 2);
  EXPECT_EQ(s.terms().size(), 1u);
  EXPECT_EQ(s.coeff(Expo{1, 0}), 2);
  EXPECT_THROW(Series(2, 2, {{Expo{1}, Coeff(1)}}, 2), PreconditionError);
}

TEST(Series, StoresCoefficientsInLowestTerms) {
  Series::TermMap t;
  t[Expo{1, 0}] = Coeff(6, -4);
  t[Expo{0, 1}] = Coeff(0, 3);
  const Series s(2, 2, t, 2);
  ASSERT_EQ(s.terms().size(), 1u);
  EXPECT_EQ(s.coeff(Expo{1, 0}).get_num(), -3);
  EXPECT_EQ(s.coeff(Expo{1, 0}).get_den(), 2);
}

TEST(Series, CanonicalText) {
  EXPECT_EQ(str(S("x1^2 + -3/2*x1*x2")), "x1^2 + -3/2*x1*x2");
  EXPECT_EQ(str(S("x2^2 + x1 + 1")), "1 + x1 + x2^2");
  EXPECT_EQ(str(S("0")), "0");
  EXPECT_EQ(str(S("x1*x2 + x2^2 + x1^2")), "x1^2 + x1*x2 + x2^2");
}

TEST(Add, Examples) {
  EXPECT_EQ(str(S("x1") + S("-x1")), "0");
  EXPECT_EQ(str(S("1 + x1") + S("x2")), "1 + x1 + x2");
  EXPECT_EQ(str(S("x1^2 + 1/2*x2") + S("1/2*x2")), "x2 + x1^2");
}

TEST(Add, TakesMinimumTruncAndGuarantee) {
  Series a = S("x1", 2, 5).with_guaranteed_degree(3);
  Series b = S("x2", 2, 7);
  Series c = a + b;
  EXPECT_EQ(c.trunc(), 5u);
  EXPECT_EQ(c.guaranteed_degree(), 3);
  EXPECT_THROW(S("x1", 2) + S("x1", 1), PreconditionError);
}

TEST(Mul, Examples) {
  EXPECT_EQ(str(S("1 + x1") * S("1 - x1")), "1 + -1*x1^2");
  EXPECT_EQ(str(S("x1 + x2", 2, 1) * S("x1 + x2", 2, 1)), "0");
  EXPECT_EQ(S("x2^2 + x1", 2, 3) * S("1 + x1", 2, 3),
            S("x2^2 + x1 + x1*x2^2 + x1^2", 2, 3));
}

TEST(InvertUnit, Examples) {
  EXPECT_EQ(str(invert_unit(S("1 - x1", 2, 3))), "1 + x1 + x1^2 + x1^3");
  EXPECT_EQ(str(invert_unit(S("2"))), "1/2");
  const Series u = S("1 + x1 + x2", 2, 2);
  const Series inv = invert_unit(u);
  EXPECT_EQ(inv, S("1 - x1 - x2 + x1^2 + 2*x1*x2 + x2^2", 2, 2));
  EXPECT_EQ(str(u * inv), "1");
}

TEST(InvertUnit, RejectsNonUnit) {
  EXPECT_THROW(invert_unit(S("x1")), PreconditionError);
  EXPECT_THROW(invert_unit(S("0")), PreconditionError);
}

TEST(Compose, Examples) {
  const std::array<Series, 1> sum{S("x1 + x2")};
  EXPECT_EQ(compose(S("x1^2", 1), sum), S("x1^2 + 2*x1*x2 + x2^2"));
  EXPECT_EQ(compose(S("x1", 1), sum), sum[0]);
  const std::array<Series, 1> sum2{S("x1 + x2", 2, 2)};
  EXPECT_EQ(compose(S("1 + x1 + x1^2", 1, 2), sum2),
            S("1 + x1 + x2 + x1^2 + 2*x1*x2 + x2^2", 2, 2));
}

TEST(Compose, Preconditions) {
  const std::array<Series, 1> with_constant{S("1 + x1")};
  EXPECT_THROW(compose(S("x1", 1), with_constant), PreconditionError);
  const std::array<Series, 2> too_many{S("x1"), S("x2")};
  EXPECT_THROW(compose(S("x1", 1), too_many), PreconditionError);
}

TEST(PartialDerivative, Examples) {
  EXPECT_EQ(str(partial_derivative(S("x1*x2^2"), 2)), "2*x1*x2");
  EXPECT_EQ(str(partial_derivative(S("7"), 1)), "0");
  EXPECT_EQ(str(partial_derivative(S("x1^3 - 3*x1*x2^2"), 1)),
            "3*x1^2 + -3*x2^2");
  EXPECT_THROW(partial_derivative(S("x1"), 3), PreconditionError);
}

TEST(PartialDerivative, LowersTruncAndGuarantee) {
  const Series d = partial_derivative(S("x1^8", 2, 8), 1);
  EXPECT_EQ(d.trunc(), 7u);
  EXPECT_EQ(d.guaranteed_degree(), 7);
  EXPECT_EQ(str(d), "8*x1^7");
}

TEST(OrderInVariable, Examples) {
  EXPECT_EQ(to_string(order_in_variable(S("x2^2 + x2^3 + x1"), 2)), "2");
  EXPECT_TRUE(order_in_variable(S("x1"), 2).is_flat());
  EXPECT_EQ(to_string(order_in_variable(S("x1"), 2)), "FLAT");
  EXPECT_EQ(order_in_variable(S("x3^5", 3), 3), Order::finite(5));
  EXPECT_EQ(order_in_variable(S("3 + x1"), 2), Order::finite(0));
  EXPECT_THROW(order_in_variable(S("x1"), 0), PreconditionError);
}

TEST(SubstituteSquare, Examples) {
  EXPECT_EQ(str(substitute_square(S("x1^2 + x2"), 2)), "x1^2 + x2^2");
  EXPECT_EQ(str(substitute_square(S("1"), 2)), "1");
  EXPECT_EQ(str(substitute_square(S("x1 + 3*x2^2", 2, 4), 2)), "x1 + 3*x2^4");
}

TEST(SubstituteSquare, DropsTermsAboveTrunc) {
  EXPECT_EQ(str(substitute_square(S("x2^3", 2, 4), 2)), "0");
}

TEST(Equality, ComparesToMinimumGuarantee) {
  const Series a = S("x1 + x1^5").with_guaranteed_degree(4);
  const Series b = S("x1 + x2^6");
  EXPECT_EQ(a, b);
  EXPECT_FALSE(identical(a, b));
  EXPECT_NE(S("x1"), S("x2"));
  EXPECT_NE(S("x1", 2), S("x1", 3));
}

TEST(Helpers, VariableInsertionAndRemoval) {
  const Series f = S("x1 + x2^2");
  EXPECT_EQ(str(insert_variable(f, 2)), "x1 + x3^2");
  EXPECT_EQ(insert_variable(f, 2).nvars(), 3u);
  EXPECT_EQ(str(remove_variable(S("x1 + x3", 3), 2)), "x1 + x2");
  EXPECT_THROW(remove_variable(f, 2), PreconditionError);
  EXPECT_EQ(str(coefficient_of_power(S("x1*x2 + x1^2*x2 + x2^2", 2), 2, 1)),
            "x1 + x1^2");
}

TEST(Helpers, PowAndShift) {
  EXPECT_EQ(pow(S("x1 + x2"), 2), S("x1^2 + 2*x1*x2 + x2^2"));
  EXPECT_EQ(str(pow(S("x1"), 0)), "1");
  const Series s = shift(S("1 + x1", 2, 3), Expo{0, 2});
  EXPECT_EQ(str(s), "x2^2 + x1*x2^2");
}
