#include <gtest/gtest.h>

#include "invtqft/error.hpp"
#include "invtqft/spectra.hpp"
#include "support.hpp"

using namespace invtqft;
using namespace invtqft::spectra;
using abelian::FgAbGroup;
using abelian::Integer;
using testsupport::zn;

namespace {

Element el(std::vector<Integer> c) { return Element{std::move(c), 0}; }

TwoTermSpectrum brfus_shape() {
  return make_two_term("brfus", GroupDesc::witt(), 4, GroupDesc::circle(), KInvariant::unknown());
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

// Every k-invariant pi0 -> pi1 that factors through pi0 / 2, for n = 1.
std::vector<HomImages> all_k(const FgAbGroup& pi0, const FgAbGroup& pi1) {
  std::vector<HomImages> out;
  for (const auto& f : enumerate_homs(pi0, ElementGroup(pi1))) {
    bool even = true;
    for (const auto& x : f) even &= ElementGroup(pi1).is_zero(ElementGroup(pi1).scale(2, x));
    if (even) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST(MappingGroup, BordismIntoBraidedFusion) {
  const auto e = two_term_truncation(truncated_mt_spectrum(4), 4);
  EXPECT_EQ(e.k.kind, KInvariant::Kind::Unknown);
  const auto r = mapping_group(e, brfus_shape());
  EXPECT_EQ(r.kernel.group(), GroupDesc(zn(6)));
  EXPECT_TRUE(r.obstruction.is_zero());
  EXPECT_EQ(r.quotient, direct_sum(GroupDesc::witt(), GroupDesc::circle(2)));
  EXPECT_EQ(r.hom0, GroupDesc::witt());
  EXPECT_EQ(r.homn, GroupDesc::circle(2));
  EXPECT_EQ(r.split, SplitKnown::Unknown);
  EXPECT_FALSE(r.order().has_value());
}

TEST(MappingGroup, OnlyKernelSurvives) {
  const auto e = make_two_term("e", zn(2), 2, FgAbGroup(), KInvariant::zero());
  const auto f = make_two_term("f", FgAbGroup(), 2, zn(2), KInvariant::zero());
  const auto r = mapping_group(e, f);
  EXPECT_TRUE(r.quotient.is_trivial());
  EXPECT_EQ(r.kernel.group(), stable::stable_cohomology(zn(2), zn(2), 2).group());
  EXPECT_EQ(r.kernel.group(), GroupDesc(zn(2)));
  EXPECT_EQ(r.kernel.degree, 2);
}

TEST(MappingGroup, SingleGroup) {
  const auto e = parse_spectrum("(Z; 4; 0; k=zero)");
  const auto r = mapping_group(e, e);
  EXPECT_TRUE(r.kernel.group().is_trivial());
  EXPECT_EQ(r.quotient, GroupDesc(FgAbGroup::free(1)));
}

TEST(MappingGroup, ZeroKInvariantsGiveAllPairs) {
  for (const auto& a : {zn(2), zn(4), FgAbGroup::free(1)})
    for (const auto& b : {zn(2), zn(3)}) {
      const auto e = make_two_term("e", a, 2, b, KInvariant::zero());
      const auto f = make_two_term("f", b, 2, a, KInvariant::zero());
      const auto r = mapping_group(e, f);
      ASSERT_EQ(r.quotient, direct_sum(GroupDesc(abelian::hom_group(a, b)), GroupDesc(abelian::hom_group(b, a))));
      ASSERT_EQ(r.split, SplitKnown::Yes);
    }
}

TEST(MappingGroup, UnknownKWithNonzeroObstruction) {
  const auto e = make_two_term("e", zn(2), 1, zn(2), KInvariant::unknown());
  const auto f = make_two_term("f", zn(2), 1, zn(2), KInvariant::zero());
  EXPECT_EQ(e.k.kind, KInvariant::Kind::Unknown);
  EXPECT_EQ(kind_of([&] { mapping_group(e, f); }), ErrorKind::ObstructionUndetermined);
  EXPECT_EQ(kind_of([&] { mapping_group(f, e); }), ErrorKind::ObstructionUndetermined);
}

TEST(MappingGroup, UndeterminedCohomology) {
  const auto e = make_two_term("e", GroupDesc::witt(), 2, GroupDesc::circle(), KInvariant::unknown());
  EXPECT_EQ(kind_of([&] { mapping_group(e, e); }), ErrorKind::UndeterminedCohomology);
}

TEST(MappingGroup, MismatchedDegrees) {
  const auto e = parse_spectrum("(Z; 4; 0)");
  const auto f = parse_spectrum("(Z; 2; 0)");
  EXPECT_EQ(kind_of([&] { mapping_group(e, f); }), ErrorKind::InvalidArgument);
}

TEST(MappingGroup, KnownKInvariantPairsAgainstBruteForce) {
  // n = 1: fn o k_E = k_F o f0 on generators, checked by enumerating all
  // pairs of homomorphisms through the Cayley tables.
  const std::vector<FgAbGroup> groups = {zn(2), zn(4), FgAbGroup(0, {2, 2})};
  int checked = 0;
  for (const auto& e0 : groups)
    for (const auto& e1 : groups)
      for (const auto& f0 : {zn(2), zn(4)})
        for (const auto& f1 : {zn(2), zn(4)}) {
          const auto ke_all = all_k(e0, e1);
          const auto kf_all = all_k(f0, f1);
          const auto& ke = ke_all.back();
          const auto& kf = kf_all.back();
          const auto e = make_two_term("e", e0, 1, e1, KInvariant::known(ke));
          const auto f = make_two_term("f", f0, 1, f1, KInvariant::known(kf));
          const auto pairs = admissible_pairs(e, f);

          const auto h0 = testsupport::brute_hom(e0, f0);
          const auto h1 = testsupport::brute_hom(e1, f1);
          // brute force: homs as generator images, compare on generators of e0
          const auto homs0 = enumerate_homs(e0, ElementGroup(f0));
          const auto homs1 = enumerate_homs(e1, ElementGroup(f1));
          ASSERT_EQ(static_cast<long>(homs0.size()), h0.size);
          ASSERT_EQ(static_cast<long>(homs1.size()), h1.size);
          long count = 0;
          for (const auto& a : homs0)
            for (const auto& b : homs1) {
              bool ok = true;
              for (std::size_t i = 0; i < e0.generator_count(); ++i) {
                const auto lhs = apply_hom(e1, ElementGroup(f1), b, ke[i].coords);
                const auto rhs = apply_hom(f0, ElementGroup(f1), kf, a[i].coords);
                ok &= ElementGroup(f1).normalize(lhs) == ElementGroup(f1).normalize(rhs);
              }
              count += ok;
            }
          ASSERT_EQ(static_cast<long>(pairs.size()), count);
          const auto r = mapping_group(e, f);
          if (!r.obstruction.is_zero()) ASSERT_EQ(*r.quotient.finite_order(), Integer(count));
          ASSERT_EQ(*r.kernel.group().finite_order(), Integer(testsupport::ext_count(e0, f1)));
          ++checked;
        }
  EXPECT_GE(checked, 20);
}

TEST(MappingGroup, PropertyCompositionOfAdmissiblePairs) {
  // (c, d) o (a, b) is admissible E -> G whenever both factors are.
  const auto e = make_two_term("e", zn(4), 1, zn(2), KInvariant::known({el({1})}));
  const auto f = make_two_term("f", zn(2), 1, zn(4), KInvariant::known({el({2})}));
  const auto g = make_two_term("g", zn(4), 1, zn(4), KInvariant::known({el({2})}));
  const auto ef = admissible_pairs(e, f);
  const auto fg = admissible_pairs(f, g);
  const auto eg = admissible_pairs(e, g);
  ASSERT_FALSE(ef.empty());
  ASSERT_FALSE(fg.empty());
  auto compose = [](const FgAbGroup& mid, const ElementGroup& tgt, const HomImages& outer,
                    const HomImages& inner) {
    HomImages out;
    for (const auto& x : inner) out.push_back(apply_hom(mid, tgt, outer, x.coords));
    return out;
  };
  for (const auto& p : ef)
    for (const auto& q : fg) {
      const HomPair c{compose(zn(2), ElementGroup(zn(4)), q.f0, p.f0),
                      compose(zn(4), ElementGroup(zn(4)), q.fn, p.fn)};
      bool found = false;
      for (const auto& r : eg) found |= r.f0 == c.f0 && r.fn == c.fn;
      ASSERT_TRUE(found);
    }
}

TEST(TwoTerm, KInvariantNormalizesToZero) {
  const auto s = make_two_term("s", zn(3), 1, zn(2), KInvariant::unknown());
  EXPECT_EQ(s.k.kind, KInvariant::Kind::Zero);
  const auto t = make_two_term("t", zn(2), 1, zn(2), KInvariant::known({el({0})}));
  EXPECT_EQ(t.k.kind, KInvariant::Kind::Zero);
  const auto u = make_two_term("u", zn(2), 1, zn(2), KInvariant::known({el({1})}));
  EXPECT_EQ(u.k.kind, KInvariant::Kind::Known);
}

TEST(TwoTerm, RejectsBadKnownImages) {
  EXPECT_THROW(make_two_term("x", zn(2), 1, zn(4), KInvariant::known({el({1})})), Error);
  EXPECT_THROW(make_two_term("x", zn(2), 1, zn(4), KInvariant::known({})), Error);
  EXPECT_THROW(make_two_term("x", zn(2), 0, zn(4), KInvariant::zero()), Error);
}

TEST(TwoTerm, Parse) {
  const auto s = parse_spectrum("(Z; 4; Z^2; k=unknown)");
  EXPECT_EQ(s.pi0, GroupDesc(FgAbGroup::free(1)));
  EXPECT_EQ(s.n, 4);
  EXPECT_EQ(s.pin, GroupDesc(FgAbGroup::free(2)));
  EXPECT_EQ(s.k.kind, KInvariant::Kind::Unknown);
  EXPECT_EQ(parse_spectrum("(W;4;Cx)").pin, GroupDesc::circle());
  for (const char* bad : {"", "Z; 4; 0", "(Z; 0; 0)", "(Z; x; 0)", "(Z; 4)", "(Z; 4; Q)", "(Z; 4; 0; k=maybe)"})
    EXPECT_EQ(kind_of([&] { parse_spectrum(bad); }), ErrorKind::ParseError) << bad;
}

// ---------------------------------------------------------------- bordism catalog

TEST(Bordism, TableOne) {
  const std::vector<std::vector<FgAbGroup>> rows = {
      {FgAbGroup::free(1), zn(2), zn(2), zn(24), FgAbGroup()},
      {FgAbGroup::free(1), FgAbGroup(), FgAbGroup::free(1), FgAbGroup(), FgAbGroup::free(1)},
      {FgAbGroup::free(1), FgAbGroup(), FgAbGroup(), FgAbGroup(), FgAbGroup::free(1)},
      {FgAbGroup::free(1), FgAbGroup(), FgAbGroup(), FgAbGroup(), FgAbGroup::free(2)},
  };
  for (int k = 1; k <= 4; ++k) {
    const auto t = truncated_mt_spectrum(k);
    for (int i = 0; i <= 4; ++i) ASSERT_EQ(t.homotopy.at(i), GroupDesc(rows[k - 1][i])) << k << " " << i;
    EXPECT_FALSE(t.citation.empty());
  }
}

TEST(Bordism, UnorientedTwoDimensional) {
  const auto t = truncated_mt_spectrum(2, Structure::O);
  EXPECT_EQ(t.homotopy.at(0), GroupDesc(zn(2)));
  EXPECT_EQ(t.k_invariant, KInvariant::Kind::Zero);
  EXPECT_EQ(two_term_truncation(t, 2).k.kind, KInvariant::Kind::Zero);
  EXPECT_EQ(kind_of([] { truncated_mt_spectrum(3, Structure::O); }), ErrorKind::NotInCatalog);
  EXPECT_EQ(kind_of([] { truncated_mt_spectrum(5); }), ErrorKind::NotInCatalog);
}

TEST(Bordism, TruncationNeedsVanishingMiddle) {
  EXPECT_EQ(kind_of([] { two_term_truncation(truncated_mt_spectrum(1), 3); }), ErrorKind::HypothesisViolated);
  EXPECT_EQ(two_term_truncation(truncated_mt_spectrum(3), 4).pin, GroupDesc(FgAbGroup::free(1)));
}

TEST(Skk, Examples) {
  EXPECT_EQ(skk_group(4).group, GroupDesc(FgAbGroup::free(2)));
  EXPECT_EQ(skk_group(4).second_factor, "(sigma - chi)/2");
  EXPECT_EQ(skk_group(1).group, GroupDesc(zn(2)));
  EXPECT_EQ(skk_group(2).group, GroupDesc(FgAbGroup::free(1)));
  EXPECT_TRUE(skk_group(3).group.is_trivial());
  EXPECT_EQ(skk_group(2, Structure::O).group, GroupDesc(FgAbGroup::free(1)));
  const auto c = skk2_orientation_comparison();
  EXPECT_EQ(c.apply({1}), std::vector<Integer>{2});
  EXPECT_EQ(kind_of([] { skk_group(5); }), ErrorKind::NotInCatalog);
  EXPECT_EQ(kind_of([] { skk_group(4, Structure::O); }), ErrorKind::NotInCatalog);
}

TEST(Skk, CaseListAgainstBordism) {
  for (int d = 1; d <= 4; ++d) {
    const GroupDesc omega = bordism_group(d);
    GroupDesc expected = omega;
    if (d % 2 == 0) expected = direct_sum(omega, GroupDesc(FgAbGroup::free(1)));
    if (d % 4 == 1) expected = direct_sum(omega, GroupDesc(zn(2)));
    ASSERT_EQ(skk_group(d).group, expected);
  }
}

TEST(Skk, FourDimensionalCoordinates) {
  for (long chi = -20; chi <= 20; ++chi)
    for (long sigma = -20; sigma <= 20; ++sigma) {
      if ((chi - sigma) % 2 != 0) {
        ASSERT_EQ(kind_of([&] { skk4_coordinates(chi, sigma); }), ErrorKind::ParityViolation);
        continue;
      }
      const auto c = skk4_coordinates(chi, sigma);
      ASSERT_EQ(c[1], (sigma - chi) / 2);
      const auto back = skk4_chi_sigma(c);
      ASSERT_EQ(back.first, chi);
      ASSERT_EQ(back.second, sigma);
    }
  // second factor is onto Z: (chi, sigma) = (-2m, 0) has projection m
  for (long m = -5; m <= 5; ++m) ASSERT_EQ(skk4_coordinates(-2 * m, 0)[1], m);
  // homomorphism: coordinates add
  const auto a = skk4_coordinates(24, -16), b = skk4_coordinates(3, 1);
  const auto s = skk4_coordinates(27, -15);
  EXPECT_EQ(Integer(a[0] + b[0]), s[0]);
  EXPECT_EQ(Integer(a[1] + b[1]), s[1]);
}

TEST(Genauer, Inclusion) {
  const auto g = genauer_inclusion();
  EXPECT_EQ(skk4_chi_sigma(g.apply({1})), (std::pair<Integer, Integer>(0, 2)));
  EXPECT_EQ(skk4_chi_sigma(g.apply({0})), (std::pair<Integer, Integer>(0, 0)));
  EXPECT_EQ(skk4_chi_sigma(g.apply({-3})), (std::pair<Integer, Integer>(0, -6)));
  EXPECT_EQ(g.image_cokernel(), FgAbGroup::free(1));
}

TEST(Nonextended, BordismSpectra) {
  const auto four = nonextended_bordism_spectrum(4);
  EXPECT_TRUE(four.pi0.is_trivial());
  EXPECT_EQ(four.pin, GroupDesc(FgAbGroup::free(2)));
  EXPECT_EQ(four.k.kind, KInvariant::Kind::Zero);
  const auto one = nonextended_bordism_spectrum(1);
  EXPECT_EQ(one.pi0, GroupDesc(FgAbGroup::free(1)));
  EXPECT_EQ(one.pin, GroupDesc(zn(2)));
  EXPECT_EQ(one.k.kind, KInvariant::Kind::Known);
  EXPECT_EQ(one.k.tag, "Y -> Y x S^1");
}

TEST(Elements, CircleArithmetic) {
  const ElementGroup cx(GroupDesc::circle());
  Element a = cx.zero();
  a.phase = mpq_class(3, 4);
  EXPECT_EQ(cx.order(a), 4);
  EXPECT_TRUE(cx.is_zero(cx.scale(4, a)));
  EXPECT_EQ(cx.killed_by(6, 100).size(), 6u);
  EXPECT_EQ(kind_of([&] { cx.killed_by(0, 100); }), ErrorKind::EnumerationLimit);
  EXPECT_EQ(enumerate_homs(zn(6), cx).size(), 6u);
  EXPECT_EQ(kind_of([&] { enumerate_homs(FgAbGroup::free(1), cx); }), ErrorKind::EnumerationLimit);
}

TEST(Elements, HomInto) {
  EXPECT_EQ(hom_into(FgAbGroup::free(2), GroupDesc::circle()), GroupDesc::circle(2));
  EXPECT_EQ(hom_into(FgAbGroup::free(1), GroupDesc::witt()), GroupDesc::witt());
  EXPECT_EQ(hom_into(zn(6), GroupDesc::circle()), GroupDesc(zn(6)));
  EXPECT_EQ(hom_into(zn(4), GroupDesc(zn(6))), GroupDesc(zn(2)));
}
