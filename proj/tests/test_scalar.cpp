#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "invtqft/error.hpp"
#include "invtqft/scalar.hpp"
#include "support.hpp"

using namespace invtqft;
using invtqft::tqft::Scalar;
using invtqft::tqft::parse_scalar;

namespace {

using Complex = std::complex<long double>;

Complex numeric(const Scalar& s) {
  const long double turns = s.phase().get_d();
  return std::polar(s.magnitude_value(), 2 * 3.14159265358979323846L * turns);
}

bool close(const Complex& a, const Complex& b) {
  return std::abs(a - b) <= 1e-9L * std::max<long double>(1, std::abs(b));
}

}  // namespace

TEST(Scalar, ParseForms) {
  EXPECT_EQ(parse_scalar("2*e(1/8)").phase(), mpq_class(1, 8));
  EXPECT_EQ(*parse_scalar("2*e(1/8)").rational_magnitude(), 2);
  EXPECT_EQ(parse_scalar("-3").phase(), mpq_class(1, 2));
  EXPECT_EQ(*parse_scalar("-3").rational_magnitude(), 3);
  EXPECT_EQ(*parse_scalar("1.5").rational_magnitude(), mpq_class(3, 2));
  EXPECT_EQ(*parse_scalar("2.5e-1").rational_magnitude(), mpq_class(1, 4));
  EXPECT_EQ(parse_scalar("2^(3/2)*e(1/8)"), parse_scalar("2^(1/2)*2*e(9/8)"));
  EXPECT_EQ(parse_scalar("3/4"), Scalar::rational(mpq_class(3, 4)));
  EXPECT_EQ(parse_scalar("e(1/2)"), parse_scalar("-1"));
  EXPECT_EQ(parse_scalar("4^(1/2)"), parse_scalar("2"));
}

TEST(Scalar, ParseErrors) {
  for (const char* bad : {"", "0", "e(", "2*", "abc", "2^", "e(1/0)", "2^(1/0)", "*2", "0.0"}) {
    try {
      parse_scalar(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_TRUE(e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::InvalidArgument) << bad;
    }
  }
}

TEST(Scalar, ExactArithmetic) {
  const auto r2 = Scalar::rational(2).pow(mpq_class(1, 2));
  EXPECT_EQ(r2 * r2, Scalar::rational(2));
  EXPECT_EQ(r2.pow(3L), parse_scalar("2^(3/2)"));
  EXPECT_EQ((Scalar::rational(6) / Scalar::rational(4)), Scalar::rational(mpq_class(3, 2)));
  EXPECT_TRUE((r2 / r2).is_one());
  EXPECT_EQ(Scalar::root_of_unity(mpq_class(3, 4)).pow(4L), Scalar());
  EXPECT_EQ(Scalar::root_of_unity(mpq_class(-1, 4)).phase(), mpq_class(3, 4));
  EXPECT_EQ(-Scalar::rational(1), Scalar::root_of_unity(mpq_class(1, 2)));
  EXPECT_EQ(Scalar::rational(12).prime_exponents().at(2), 2);
  EXPECT_EQ(Scalar::rational(12).prime_exponents().at(3), 1);
}

TEST(Scalar, Display) {
  EXPECT_EQ(parse_scalar("2^(3/2)*e(1/8)").to_string(), "2^(3/2)*e(1/8)");
  EXPECT_EQ(Scalar().to_string(), "1");
  EXPECT_EQ(parse_scalar("-3").to_string(), "-3");
  EXPECT_EQ(parse_scalar("9/4").to_string(), "9/4");
}

TEST(Scalar, PropertyAgreesWithComplexArithmetic) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> num(1, 30), den(1, 8), ph(0, 23), ex(-3, 3);
  for (int i = 0; i < 500; ++i) {
    const Scalar a = Scalar::polar(Scalar::rational(mpq_class(num(rng), den(rng))), mpq_class(ph(rng), 24));
    const Scalar b = Scalar::polar(Scalar::rational(mpq_class(num(rng), den(rng))), mpq_class(ph(rng), 24));
    ASSERT_TRUE(close(numeric(a * b), numeric(a) * numeric(b)));
    ASSERT_TRUE(close(numeric(a / b), numeric(a) / numeric(b)));
    const long e = ex(rng);
    ASSERT_TRUE(close(numeric(a.pow(e)), std::pow(numeric(a), static_cast<long double>(e))));
    // principal square root
    const Scalar s = a.pow(mpq_class(1, 2));
    ASSERT_EQ(s * s, a);
    ASSERT_TRUE(s.phase() < mpq_class(1, 2));
    ASSERT_GE(s.phase(), 0);
  }
}

TEST(Scalar, InexactFallback) {
  const Scalar pi = Scalar::real(3.14159265358979323846L);
  EXPECT_FALSE(pi.is_exact());
  EXPECT_EQ(pi * pi / pi, pi);
  EXPECT_NEAR(static_cast<double>(pi.pow(2L).magnitude_value()), 9.8696044010893586, 1e-9);
  EXPECT_FALSE(pi.rational_magnitude().has_value());
}

TEST(Scalar, FactorRational) {
  const auto f = tqft::factor_rational(mpq_class(360, 7));
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->at(2), 3);
  EXPECT_EQ(f->at(3), 2);
  EXPECT_EQ(f->at(5), 1);
  EXPECT_EQ(f->at(7), -1);
  EXPECT_TRUE(tqft::factor_rational(1)->empty());
}
