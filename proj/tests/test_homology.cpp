#include <gtest/gtest.h>

#include <random>

#include "invtqft/error.hpp"
#include "invtqft/homology/bar_complex.hpp"
#include "invtqft/homology/sparse.hpp"
#include "support.hpp"

using namespace invtqft::homology;
using invtqft::abelian::FgAbGroup;
using invtqft::abelian::Integer;
using invtqft::abelian::IntMatrix;
using testsupport::zn;

namespace {

SparseMatrix random_sparse(std::mt19937& rng, std::size_t rows, std::size_t cols, double density) {
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<Coefficient> c(-3, 3);
  SparseMatrix m;
  m.rows = rows;
  m.columns.resize(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<std::pair<std::uint32_t, Coefficient>> terms;
    for (std::size_t i = 0; i < rows; ++i)
      if (u(rng) < density) terms.emplace_back(static_cast<std::uint32_t>(i), c(rng));
    m.columns[j] = collapse_terms(terms);
  }
  return m;
}

IntMatrix dense(const SparseMatrix& m) {
  IntMatrix d(m.rows, m.columns.size());
  for (std::size_t j = 0; j < m.columns.size(); ++j)
    for (const auto& [i, v] : m.columns[j]) d(i, j) = static_cast<long>(v);
  return d;
}

BarOptions serial_options() {
  BarOptions o;
  o.parallel = false;
  return o;
}

}  // namespace

TEST(Sparse, CollapseTermsCanonical) {
  const auto v = collapse_terms({{3, 2}, {1, 5}, {3, -2}, {1, 1}, {0, 0}});
  EXPECT_EQ(v, (SparseVector{{1, 6}}));
}

TEST(Sparse, EliminationAgreesWithDenseSmithForm) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_sparse(rng, 1 + trial % 7, 1 + (trial * 5) % 8, 0.4);
    const auto r = eliminate_serial(m);
    std::size_t rank = 0;
    std::vector<Integer> torsion;
    for (const auto& d : invtqft::abelian::smith_diagonal(dense(m)))
      if (d != 0) {
        ++rank;
        if (d > 1) torsion.push_back(d);
      }
    ASSERT_EQ(r.rank, rank);
    ASSERT_EQ(r.torsion, torsion);
  }
}

TEST(Sparse, ParallelMatchesSerial) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = random_sparse(rng, 40 + trial, 50, 0.08);
    ASSERT_EQ(eliminate_parallel(m), eliminate_serial(m));
  }
}

TEST(BarOracle, RPInfinity) {
  const auto r = bar_oracle(zn(2), 1, 4);
  // cellular chains of RP^inf: Z in every degree, d_n = 0 (n odd), 2 (n even, n >= 2)
  auto boundary = [](int n) -> long { return n >= 1 && n % 2 == 0 ? 2 : 0; };
  for (int n = 0; n <= 4; ++n) {
    const long out = boundary(n), in = boundary(n + 1);
    FgAbGroup expected = out != 0 ? FgAbGroup() : (in != 0 ? zn(in) : FgAbGroup::free(1));
    ASSERT_EQ(r.homology.at(n), expected) << "degree " << n;
  }
  EXPECT_EQ(r.homology.at(1), zn(2));
  EXPECT_EQ(r.homology.at(3), zn(2));
  EXPECT_TRUE(r.homology.at(4).is_trivial());
}

TEST(BarOracle, Hurewicz) {
  EXPECT_EQ(bar_oracle(zn(2), 2, 2).homology.at(2), zn(2));
  EXPECT_EQ(bar_oracle(zn(3), 2, 2).homology.at(2), zn(3));
  for (long n : {2, 3, 4, 5})
    for (int k = 1; k <= 4; ++k) {
      const auto r = bar_oracle(zn(n), k, k);
      ASSERT_EQ(r.homology.at(0), FgAbGroup::free(1));
      for (int j = 1; j < k; ++j) ASSERT_TRUE(r.homology.at(j).is_trivial());
      ASSERT_EQ(r.homology.at(k), zn(n)) << n << " " << k;
    }
}

TEST(BarOracle, StableValuesAgreeAcrossLevels) {
  for (long n : {2, 3, 4}) {
    for (int k = 1; k <= 4; ++k) {
      const auto a = bar_oracle(zn(n), k, 2 * k);
      const auto b = bar_oracle(zn(n), k + 1, 2 * k + 2);
      for (int i = 0; i < k; ++i) {
        const auto sa = a.stable_homology(i);
        ASSERT_TRUE(sa.has_value());
        ASSERT_EQ(*sa, *b.stable_homology(i)) << n << " k=" << k << " i=" << i;
      }
    }
  }
}

TEST(BarOracle, StableHomologyOfZ2) {
  // H_i(HZ/2) = Z/2, 0, Z/2, Z/2 in degrees 0..3
  const auto r = bar_oracle(zn(2), 4, 8);
  EXPECT_EQ(*r.stable_homology(0), zn(2));
  EXPECT_TRUE(r.stable_homology(1)->is_trivial());
  EXPECT_EQ(*r.stable_homology(2), zn(2));
  EXPECT_EQ(*r.stable_homology(3), zn(2));
  EXPECT_FALSE(r.stable_homology(4).has_value());
}

TEST(BarOracle, BoundarySquaresToZero) {
  const BarTower t(3, 3, 7, 5'000'000, false);
  for (int level = 0; level <= t.levels(); ++level)
    for (int d = 2; d <= t.max_degree(level); ++d) {
      const auto outer = t.boundary_matrix(level, d - 1);
      for (std::uint32_t i = 0; i < t.rank(level, d); ++i) {
        std::vector<std::pair<std::uint32_t, Coefficient>> terms;
        for (const auto& [j, c] : t.boundary(level, d, i))
          for (const auto& [l, e] : outer.columns[j]) terms.emplace_back(l, c * e);
        ASSERT_TRUE(collapse_terms(terms).empty()) << level << " " << d << " " << i;
      }
    }
}

TEST(BarOracle, LeibnizRule) {
  const BarTower t(2, 2, 6, 5'000'000, false);
  const int level = 2;
  for (int da = 1; da <= 3; ++da)
    for (int db = 1; da + db <= t.max_degree(level); ++db)
      for (std::uint32_t a = 0; a < t.rank(level, da); ++a)
        for (std::uint32_t b = 0; b < t.rank(level, db); ++b) {
          const auto prod = t.product(level, da, a, db, b);
          std::vector<std::pair<std::uint32_t, Coefficient>> lhs;
          for (const auto& [w, c] : prod)
            for (const auto& [v, e] : t.boundary(level, da + db, w)) lhs.emplace_back(v, c * e);
          std::vector<std::pair<std::uint32_t, Coefficient>> rhs;
          const Coefficient sign = da % 2 == 0 ? 1 : -1;
          if (da > 1)
            for (const auto& [v, c] : t.boundary(level, da, a))
              for (const auto& term : t.product(level, da - 1, v, db, b)) rhs.emplace_back(term.first, c * term.second);
          if (db > 1)
            for (const auto& [v, c] : t.boundary(level, db, b))
              for (const auto& term : t.product(level, da, a, db - 1, v))
                rhs.emplace_back(term.first, sign * c * term.second);
          ASSERT_EQ(collapse_terms(lhs), collapse_terms(rhs));
        }
}

TEST(BarOracle, SerialAndParallelAgree) {
  for (long n : {2, 3, 4}) {
    const auto p = bar_oracle(zn(n), 3, 6);
    const auto s = bar_oracle(zn(n), 3, 6, serial_options());
    ASSERT_EQ(p.homology, s.homology);
    ASSERT_EQ(p.chain_ranks, s.chain_ranks);
  }
}

TEST(BarOracle, Errors) {
  BarOptions tiny;
  tiny.budget = 10;
  try {
    bar_oracle(zn(2), 4, 8, tiny);
    FAIL();
  } catch (const invtqft::Error& e) {
    EXPECT_EQ(e.kind(), invtqft::ErrorKind::BudgetExceeded);
  }
  EXPECT_THROW(bar_oracle(FgAbGroup::free(1), 1, 2), invtqft::Error);
  EXPECT_THROW(bar_oracle(FgAbGroup(0, {2, 2}), 1, 2), invtqft::Error);
  EXPECT_THROW(bar_oracle(zn(9), 1, 2), invtqft::Error);
}
