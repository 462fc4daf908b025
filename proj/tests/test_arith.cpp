#include <gtest/gtest.h>

#include "agering/cyclotomic.hpp"
#include "agering/expr.hpp"
#include "agering/matrix.hpp"
#include "oracles.hpp"

using namespace agering;

TEST(Rational, ArithmeticAndNormalization) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ((Rational(3, 4) * Rational(2)).to_string(), "3/2");
  EXPECT_TRUE(Rational(6, 3).is_integer());
  EXPECT_EQ(Rational(-7, 7).to_int64(), -1);
  EXPECT_THROW(Rational(1, 2).to_int64(), Error);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
}

TEST(Cyclotomic, CubeRootRelation) {
  const Cyclotomic z = Cyclotomic::root_of_unity(3);
  EXPECT_EQ(z * z, Cyclotomic(-1) - z);
  EXPECT_EQ(z * z * z, Cyclotomic(1));
  EXPECT_EQ(Cyclotomic(1) + z + z * z, Cyclotomic(0));
}

TEST(Cyclotomic, ConductorAlignment) {
  EXPECT_EQ(Cyclotomic::root_of_unity(8, 2), Cyclotomic::root_of_unity(4, 1));
  EXPECT_EQ(Cyclotomic::root_of_unity(6, 3), Cyclotomic(-1));
  const Cyclotomic i = Cyclotomic::root_of_unity(4);
  const Cyclotomic w = Cyclotomic::root_of_unity(3);
  EXPECT_TRUE(oracle::close(oracle::eval(i + w), oracle::eval(i) + oracle::eval(w)));
  EXPECT_TRUE(oracle::close(oracle::eval(i * w), oracle::eval(i) * oracle::eval(w)));
}

TEST(Cyclotomic, RationalDetection) {
  const Cyclotomic z = Cyclotomic::root_of_unity(5);
  Cyclotomic sum(0);
  for (int k = 0; k < 5; ++k) sum = sum + Cyclotomic::root_of_unity(5, k);
  EXPECT_TRUE(sum.is_zero());
  EXPECT_EQ((z + z.conjugate() - z - z.conjugate()).as_rational(), Rational(0));
  try {
    (void)Cyclotomic::root_of_unity(4).as_rational();
    FAIL() << "expected NotRational";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotRational);
  }
  EXPECT_THROW(Cyclotomic::root_of_unity(0), Error);
}

TEST(Cyclotomic, ConjugateIsComplexConjugate) {
  for (unsigned n : {3u, 4u, 5u, 8u, 12u, 15u}) {
    for (long k = 0; k < static_cast<long>(n); ++k) {
      const Cyclotomic a = Cyclotomic::root_of_unity(n, k).scaled(Rational(2, 3)) + Cyclotomic(1);
      EXPECT_TRUE(oracle::close(oracle::eval(a.conjugate()), std::conj(oracle::eval(a))));
    }
  }
}

TEST(Cyclotomic, NumericAgreementOfProducts) {
  const Cyclotomic a = Cyclotomic::root_of_unity(12, 5) + Cyclotomic(Rational(1, 2));
  const Cyclotomic b = Cyclotomic::root_of_unity(9, 4).scaled(Rational(-3)) + Cyclotomic::root_of_unity(4);
  EXPECT_TRUE(oracle::close(oracle::eval(a * b), oracle::eval(a) * oracle::eval(b)));
  EXPECT_TRUE(oracle::close(oracle::eval(a - b), oracle::eval(a) - oracle::eval(b)));
}

TEST(Cyclotomic, DftMultiplicities) {
  // diag(i, i, -1): traces of powers 0..3
  const Cyclotomic i = Cyclotomic::root_of_unity(4);
  std::vector<Cyclotomic> tr;
  for (long j = 0; j < 4; ++j) {
    tr.push_back(Cyclotomic::root_of_unity(4, j) + Cyclotomic::root_of_unity(4, j) +
                 Cyclotomic::root_of_unity(4, 2 * j));
  }
  const auto m = dft_multiplicities(tr);
  ASSERT_EQ(m.size(), 4u);
  EXPECT_EQ(m[0], Rational(0));
  EXPECT_EQ(m[1], Rational(2));
  EXPECT_EQ(m[2], Rational(1));
  EXPECT_EQ(m[3], Rational(0));
  (void)i;
}

TEST(Cyclotomic, ToStringReparses) {
  const std::vector<Cyclotomic> values = {
      Cyclotomic(0), Cyclotomic(Rational(-5, 3)), Cyclotomic::root_of_unity(4, 3),
      Cyclotomic(Rational(1, 2)) + Cyclotomic::root_of_unity(3).scaled(Rational(1, 2)),
      Cyclotomic::root_of_unity(15, 7).scaled(Rational(-2, 7)) + Cyclotomic(3)};
  for (const auto& v : values) EXPECT_EQ(parse_cyclotomic_expr(v.to_string()), v) << v.to_string();
}

TEST(Expr, Literals) {
  EXPECT_EQ(parse_cyclotomic_expr("E(4)"), Cyclotomic::root_of_unity(4));
  EXPECT_EQ(parse_cyclotomic_expr("1/2 + 1/2*E(3)"),
            Cyclotomic(Rational(1, 2)) + Cyclotomic::root_of_unity(3).scaled(Rational(1, 2)));
  EXPECT_EQ(parse_cyclotomic_expr("E(8)^2"), parse_cyclotomic_expr("E(4)"));
  EXPECT_EQ(parse_cyclotomic_expr(" - E(4) ^ -1 "), Cyclotomic::root_of_unity(4));
  EXPECT_EQ(parse_cyclotomic_expr("-3"), Cyclotomic(-3));
  EXPECT_EQ(parse_cyclotomic_expr("2*E(5)^5 - 2"), Cyclotomic(0));
}

TEST(Expr, Errors) {
  const auto position = [](const std::string& text) -> long {
    try {
      parse_cyclotomic_expr(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  EXPECT_EQ(position(""), 0);
  EXPECT_EQ(position("1 +"), 3);
  EXPECT_EQ(position("E(4"), 3);
  EXPECT_EQ(position("1/0"), 2);
  EXPECT_EQ(position("2 x"), 2);
  EXPECT_EQ(position("E(3)^"), 5);
  try {
    parse_cyclotomic_expr("E(0)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroConductor);
  }
}

TEST(Matrix, DeterminantMatchesLeibniz) {
  const Cyclotomic z = Cyclotomic::root_of_unity(5);
  const Cyclotomic i = Cyclotomic::root_of_unity(4);
  const CycMatrix m = CycMatrix::from_rows({{z, Cyclotomic(1), Cyclotomic(0), i},
                                            {Cyclotomic(2), z * z, i, Cyclotomic(Rational(1, 3))},
                                            {Cyclotomic(0), Cyclotomic(-1), z + i, Cyclotomic(1)},
                                            {i, Cyclotomic(0), Cyclotomic(1), z.conjugate()}});
  EXPECT_TRUE(oracle::close(oracle::eval(m.determinant()), oracle::leibniz_det(m)));
  EXPECT_EQ(CycMatrix::identity(3).determinant(), Cyclotomic(1));
}

TEST(Matrix, ProductAndTrace) {
  const Cyclotomic i = Cyclotomic::root_of_unity(4);
  const CycMatrix g = CycMatrix::from_rows({{i, Cyclotomic(0)}, {Cyclotomic(0), -i}});
  const CycMatrix h = CycMatrix::from_rows({{Cyclotomic(0), Cyclotomic(1)}, {Cyclotomic(-1), Cyclotomic(0)}});
  EXPECT_TRUE((g * g * g * g).is_identity());
  EXPECT_EQ((g * g).trace(), Cyclotomic(-2));
  EXPECT_EQ((g * h).trace(), Cyclotomic(0));
  EXPECT_EQ(g * h * g * h, g * g);  // (gh)^2 = g^2 = -1
}
