#include <gtest/gtest.h>

#include <random>

#include "invtqft/error.hpp"
#include "invtqft/manifolds.hpp"
#include "support.hpp"

using namespace invtqft;
using namespace invtqft::manifolds;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

ChiSigma cs(std::string_view text) { return chi_sigma(parse_manifold4(text)); }

}  // namespace

TEST(Manifolds, GeneratorTable) {
  EXPECT_EQ(cs("S4"), (ChiSigma{2, 0}));
  EXPECT_EQ(cs("CP2"), (ChiSigma{3, 1}));
  EXPECT_EQ(cs("CP2bar"), (ChiSigma{3, -1}));
  EXPECT_EQ(cs("S2xS2"), (ChiSigma{4, 0}));
  EXPECT_EQ(cs("K3"), (ChiSigma{24, -16}));
  EXPECT_EQ(cs("K3bar"), (ChiSigma{24, 16}));
  EXPECT_EQ(cs("T4"), (ChiSigma{0, 0}));
}

TEST(Manifolds, K3FromIntersectionForm) {
  // 2 E8(-1) + 3 H: b2 = 16 + 6, b2+ = 3, b2- = 16 + 3; b1 = b3 = 0
  const long b2 = 2 * 8 + 3 * 2, b2_plus = 3, b2_minus = 2 * 8 + 3;
  EXPECT_EQ(b2_plus + b2_minus, b2);
  EXPECT_EQ(cs("K3"), (ChiSigma{2 + b2, b2_plus - b2_minus}));
}

TEST(Manifolds, Examples) {
  EXPECT_EQ(cs("CP2 # CP2bar"), (ChiSigma{4, 0}));
  EXPECT_EQ(cs("CP2 # 3*K3"), (ChiSigma{69, -47}));
  EXPECT_EQ(parse_manifold4("-CP2"), Manifold4(Generator::CP2bar));
  const auto u = parse_manifold4("S4 + S4");
  EXPECT_EQ(u.kind(), Manifold4::Kind::DisjointUnion);
  EXPECT_FALSE(u.connected());
  EXPECT_EQ(chi_sigma(u), (ChiSigma{4, 0}));
  EXPECT_EQ(cs("-(K3 + CP2)"), (ChiSigma{27, 15}));
  EXPECT_EQ(cs("2*(CP2 # S2xS2)"), (ChiSigma{8, 2}));
}

TEST(Manifolds, NormalizationIsCommutative) {
  EXPECT_EQ(parse_manifold4("CP2 # K3"), parse_manifold4("K3 # CP2"));
  EXPECT_EQ(parse_manifold4("(CP2 # K3) # S4"), parse_manifold4("CP2 # (K3 # S4)"));
  EXPECT_EQ(parse_manifold4("S4 + T4"), parse_manifold4("T4 + S4"));
  EXPECT_EQ(parse_manifold4("3*CP2"), parse_manifold4("CP2 # CP2 # CP2"));
  EXPECT_EQ(parse_manifold4("-(CP2 # K3)"), parse_manifold4("CP2bar # K3bar"));
  EXPECT_EQ(parse_manifold4(parse_manifold4("K3 # 2*CP2 + -T4").to_string()),
            parse_manifold4("K3 # 2*CP2 + -T4"));
}

TEST(Manifolds, SkkClass) {
  const auto s4 = skk_class(Manifold4(Generator::S4));
  EXPECT_EQ(s4.second_factor, -1);
  const auto k3 = skk_class(Manifold4(Generator::K3));
  EXPECT_EQ(k3.chi, 24);
  EXPECT_EQ(k3.sigma, -16);
  EXPECT_EQ(k3.second_factor, -20);
  EXPECT_EQ(skk_class(Manifold4(Generator::T4)).second_factor, 0);
}

TEST(Manifolds, ParseErrors) {
  for (const char* bad : {"", "CP2 #", "K4", "(CP2", "CP2)", "0*CP2", "CP2 CP2", "S4 ++ S4", "3*", "-",
                          "CP2barx", "Sigma(1)", "99999999999999999999*S4"}) {
    const auto k = kind_of([&] { parse_manifold4(bad); });
    EXPECT_TRUE(k == ErrorKind::ParseError || k == ErrorKind::MalformedExpression) << bad;
  }
  try {
    parse_manifold4("CP2 # K4");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
}

TEST(Manifolds, ConnectedSumNeedsConnectedOperands) {
  EXPECT_EQ(kind_of([] { parse_manifold4("CP2 # (S4 + S4)"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_manifold4("2*(S4 + S4)"); }), ErrorKind::ParseError);
  const auto u = Manifold4::disjoint_union({Generator::S4, Generator::S4});
  EXPECT_EQ(kind_of([&] { Manifold4::connected_sum({u, Generator::CP2}); }), ErrorKind::MalformedExpression);
  EXPECT_EQ(kind_of([&] { Manifold4::connected_power(u, 2); }), ErrorKind::MalformedExpression);
  EXPECT_EQ(kind_of([] { Manifold4::connected_power(Manifold4(Generator::K3), 0); }),
            ErrorKind::MalformedExpression);
}

TEST(Manifolds, PropertyRandomExpressions) {
  std::mt19937 rng(31);
  for (int i = 0; i < 1000; ++i) {
    const auto r = testsupport::random_manifold(rng, 4);
    const auto m = parse_manifold4(r.text);
    ASSERT_EQ(m.chi(), r.chi) << r.text;
    ASSERT_EQ(m.sigma(), r.sigma) << r.text;
    ASSERT_EQ(m.connected(), r.connected) << r.text;
    ASSERT_EQ(((m.chi() - m.sigma()) % 2 + 2) % 2, 0) << r.text;
    const auto rev = skk_class(m.reversed());
    ASSERT_EQ(rev.chi, m.chi());
    ASSERT_EQ(rev.sigma, -m.sigma());
    ASSERT_EQ(skk_class(m).second_factor * 2, m.sigma() - m.chi());
    ASSERT_EQ(parse_manifold4(m.to_string()), m);
  }
}

TEST(Manifolds, PropertyHomomorphisms) {
  std::mt19937 rng(37);
  for (int i = 0; i < 500; ++i) {
    const auto a = parse_manifold4(testsupport::random_manifold(rng, 3, false).text);
    const auto b = parse_manifold4(testsupport::random_manifold(rng, 3, false).text);
    const auto sum = Manifold4::connected_sum({a, b});
    ASSERT_EQ(sum.chi() - 2, (a.chi() - 2) + (b.chi() - 2));
    ASSERT_EQ(sum.sigma(), a.sigma() + b.sigma());
    const auto u = Manifold4::disjoint_union({a, b});
    ASSERT_EQ(u.chi(), a.chi() + b.chi());
    ASSERT_EQ(u.sigma(), a.sigma() + b.sigma());
  }
}

TEST(Manifolds, CP2AndS4GenerateAdmissiblePairs) {
  // every (chi, sigma) with chi = sigma mod 2 and chi >= 2 + |sigma| is
  // p CP2 # q CP2bar # r S2xS2 with a possible extra S4
  for (long chi = 2; chi <= 12; ++chi)
    for (long sigma = -(chi - 2); sigma <= chi - 2; ++sigma) {
      if ((chi - sigma) % 2 != 0) continue;
      const long pos = (chi - 2 + sigma) / 2, neg = (chi - 2 - sigma) / 2;
      std::vector<Manifold4> parts{Manifold4(Generator::S4)};
      for (long i = 0; i < pos; ++i) parts.emplace_back(Generator::CP2);
      for (long i = 0; i < neg; ++i) parts.emplace_back(Generator::CP2bar);
      const auto m = Manifold4::connected_sum(parts);
      ASSERT_EQ(chi_sigma(m), (ChiSigma{chi, sigma}));
    }
}

TEST(Surfaces, Basics) {
  EXPECT_EQ(Surface::of_genus(0).chi(), 2);
  EXPECT_EQ(Surface::of_genus(3).chi(), -4);
  const auto s = parse_surface("Sigma(2) + Sigma(0)");
  EXPECT_EQ(s.chi(), 0);
  EXPECT_EQ(s, parse_surface("Sigma(0)+Sigma(2)"));
  EXPECT_EQ((Surface::of_genus(1) + Surface::of_genus(4)).chi(), -6);
  for (long g = 0; g <= 50; ++g) ASSERT_EQ(Surface::of_genus(g).chi() % 2, 0);
  EXPECT_EQ(kind_of([] { Surface::of_genus(-1); }), ErrorKind::MalformedExpression);
  for (const char* bad : {"", "Sigma", "Sigma()", "Sigma(-1)", "Sigma(1) +", "Sigma(1) # Sigma(2)", "S4"})
    EXPECT_NE(kind_of([&] { parse_surface(bad); }), ErrorKind::InvalidArgument) << bad;
}

TEST(Surfaces, Dispatch) {
  EXPECT_TRUE(std::holds_alternative<Surface>(parse_manifold("Sigma(1)")));
  EXPECT_TRUE(std::holds_alternative<Manifold4>(parse_manifold("K3 # S4")));
  EXPECT_TRUE(std::holds_alternative<Manifold4>(parse_manifold("  S2xS2")));
}
