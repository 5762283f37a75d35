#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>
#include <numeric>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "invtqft/abelian.hpp"
#include "invtqft/homology/bar_complex.hpp"
#include "invtqft/scalar.hpp"

namespace invtqft::abelian {
inline void PrintTo(const FgAbGroup& g, std::ostream* os) { *os << g.to_string(); }
}  // namespace invtqft::abelian

namespace invtqft::tqft {
inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s.to_string() << " [" << s.approx_string() << "]"; }
}  // namespace invtqft::tqft

namespace testsupport {

using invtqft::abelian::FgAbGroup;
using invtqft::abelian::Integer;

// A finite abelian group given by brute force: elements 0..size-1, 0 the identity.
struct CayleyGroup {
  long size = 1;
  std::function<long(long, long)> add;

  long multiple(long m, long x) const {
    long r = 0;
    for (long i = 0; i < m; ++i) r = add(r, x);
    return r;
  }
  long order(long x) const {
    long o = 1;
    for (long y = x; y != 0; y = add(y, x)) ++o;
    return o;
  }
  long exponent() const {
    long e = 1;
    for (long x = 0; x < size; ++x) e = std::lcm(e, order(x));
    return e;
  }
  long killed_by(long m) const {
    long c = 0;
    for (long x = 0; x < size; ++x)
      if (multiple(m, x) == 0) ++c;
    return c;
  }
};

// Product of cyclic groups Z/o_1 x ... encoded in mixed radix.
inline CayleyGroup product_of_cyclic(std::vector<long> orders) {
  CayleyGroup g;
  g.size = 1;
  for (long o : orders) g.size *= o;
  g.add = [orders](long a, long b) {
    long r = 0, place = 1;
    for (long o : orders) {
      r += ((a % o + b % o) % o) * place;
      a /= o;
      b /= o;
      place *= o;
    }
    return r;
  };
  return g;
}

// |{x : m x = 0}| for every m dividing the exponent: determines a finite group.
inline std::map<long, long> kill_signature(const CayleyGroup& g) {
  std::map<long, long> s;
  const long e = g.exponent();
  for (long m = 1; m <= e; ++m)
    if (e % m == 0) s[m] = g.killed_by(m);
  return s;
}

inline std::map<long, long> kill_signature(const FgAbGroup& a) {
  std::map<long, long> s;
  long e = 1;
  for (const auto& d : a.invariant_factors()) e = std::lcm(e, d.get_si());
  for (long m = 1; m <= e; ++m) {
    if (e % m != 0) continue;
    long c = 1;
    for (const auto& d : a.invariant_factors()) c *= std::gcd(m, d.get_si());
    s[m] = c;
  }
  return s;
}

inline std::vector<long> cyclic_orders(const FgAbGroup& a) {
  if (!a.is_finite()) throw std::invalid_argument("finite groups only");
  std::vector<long> o;
  for (const auto& d : a.invariant_factors()) o.push_back(d.get_si());
  return o;
}

// Hom(A, B) for finite A, B: tuples of generator images y_i with d_i y_i = 0,
// added coordinatewise.
inline CayleyGroup brute_hom(const FgAbGroup& a, const FgAbGroup& b) {
  const CayleyGroup tb = product_of_cyclic(cyclic_orders(b));
  std::vector<std::vector<long>> elems{{}};
  for (const auto& d : a.invariant_factors()) {
    std::vector<std::vector<long>> next;
    for (const auto& e : elems)
      for (long y = 0; y < tb.size; ++y)
        if (tb.multiple(d.get_si(), y) == 0) {
          auto f = e;
          f.push_back(y);
          next.push_back(f);
        }
    elems = next;
  }
  std::map<std::vector<long>, long> index;
  for (long i = 0; i < static_cast<long>(elems.size()); ++i) index[elems[i]] = i;
  CayleyGroup g;
  g.size = static_cast<long>(elems.size());
  g.add = [elems, index, tb](long x, long y) {
    std::vector<long> s(elems[x].size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = tb.add(elems[x][i], elems[y][i]);
    return index.at(s);
  };
  return g;
}

// |Ext(A, B)| for finite A, B as |Z^2_sym| / |B^2|: normalized symmetric
// 2-cocycles A x A -> B modulo coboundaries, by exhaustive search.
// Returns -1 when the search space exceeds `limit`.
inline long cocycle_ext_count(const FgAbGroup& a, const FgAbGroup& b, long limit = 2'000'000) {
  const CayleyGroup ga = product_of_cyclic(cyclic_orders(a));
  const CayleyGroup gb = product_of_cyclic(cyclic_orders(b));
  std::vector<std::pair<long, long>> slots;  // unordered pairs of nonzero elements
  for (long x = 1; x < ga.size; ++x)
    for (long y = x; y < ga.size; ++y) slots.emplace_back(x, y);
  double space = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) space *= static_cast<double>(gb.size);
  if (space > static_cast<double>(limit)) return -1;
  std::vector<long> f(slots.size(), 0);
  std::vector<long> slot_of(ga.size * ga.size, -1);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    slot_of[slots[i].first * ga.size + slots[i].second] = static_cast<long>(i);
    slot_of[slots[i].second * ga.size + slots[i].first] = static_cast<long>(i);
  }
  auto value = [&](long x, long y) { return x == 0 || y == 0 ? 0L : f[slot_of[x * ga.size + y]]; };
  auto neg = [&](long v) {
    for (long w = 0; w < gb.size; ++w)
      if (gb.add(v, w) == 0) return w;
    return 0L;
  };
  long cocycles = 0;
  for (;;) {
    bool ok = true;
    for (long x = 1; ok && x < ga.size; ++x)
      for (long y = 1; ok && y < ga.size; ++y)
        for (long z = 1; ok && z < ga.size; ++z) {
          // f(y,z) - f(x+y,z) + f(x,y+z) - f(x,y) = 0
          const long lhs = gb.add(value(y, z), value(x, ga.add(y, z)));
          const long rhs = gb.add(value(ga.add(x, y), z), value(x, y));
          ok = gb.add(lhs, neg(rhs)) == 0;
        }
    if (ok) ++cocycles;
    std::size_t i = 0;
    while (i < f.size() && ++f[i] == gb.size) f[i++] = 0;
    if (i == f.size()) break;
  }
  // |B^2| = |normalized cochains A -> B| / |Hom(A, B)|
  long cochains = 1;
  for (long x = 1; x < ga.size; ++x) cochains *= gb.size;
  return cocycles / (cochains / brute_hom(a, b).size);
}

// |Ext(A, B)| for finite A, B: product over cyclic factors Z/m of |B / mB|.
inline long quotient_ext_count(const FgAbGroup& a, const FgAbGroup& b) {
  const CayleyGroup gb = product_of_cyclic(cyclic_orders(b));
  long count = 1;
  for (const auto& d : a.invariant_factors()) {
    std::vector<bool> hit(gb.size, false);
    long image = 0;
    for (long y = 0; y < gb.size; ++y) {
      const long v = gb.multiple(d.get_si(), y);
      if (!hit[v]) {
        hit[v] = true;
        ++image;
      }
    }
    count *= gb.size / image;
  }
  return count;
}

inline long ext_count(const FgAbGroup& a, const FgAbGroup& b) {
  const long c = cocycle_ext_count(a, b);
  return c >= 0 ? c : quotient_ext_count(a, b);
}

// |H^n_st(A; B)| for finite cyclic A and finite B, from the bar oracle's
// stable homology and brute-force Hom/Ext counts.
inline long oracle_stable_cohomology_order(const FgAbGroup& a, const FgAbGroup& b, int n) {
  const int k = n + 1;
  const auto r = invtqft::homology::bar_oracle(a, k, k + n);
  const FgAbGroup hn = *r.stable_homology(n);
  const long hom = brute_hom(hn, b).size;
  if (n == 0) return hom;
  return hom * ext_count(*r.stable_homology(n - 1), b);
}

// Random manifold expression with (chi, sigma) tracked alongside from the
// generator table and the connected-sum rule, independently of the parser.
struct RandomManifold {
  std::string text;
  long chi = 0;
  long sigma = 0;
  bool connected = true;
};

inline RandomManifold random_manifold(std::mt19937& rng, int depth, bool allow_union = true) {
  static const std::vector<std::tuple<const char*, long, long>> table = {
      {"S4", 2, 0},  {"CP2", 3, 1},   {"CP2bar", 3, -1}, {"S2xS2", 4, 0},
      {"K3", 24, -16}, {"K3bar", 24, 16}, {"T4", 0, 0}};
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : allow_union ? 4 : 3);
  switch (pick(rng)) {
    case 0: {
      const auto& [name, chi, sigma] = table[std::uniform_int_distribution<std::size_t>(0, table.size() - 1)(rng)];
      return {name, chi, sigma, true};
    }
    case 1: {
      const auto a = random_manifold(rng, depth - 1, false);
      const auto b = random_manifold(rng, depth - 1, false);
      return {"(" + a.text + " # " + b.text + ")", a.chi + b.chi - 2, a.sigma + b.sigma, true};
    }
    case 2: {
      const auto a = random_manifold(rng, depth - 1, allow_union);
      return {"-(" + a.text + ")", a.chi, -a.sigma, a.connected};
    }
    case 3: {
      const long n = std::uniform_int_distribution<long>(1, 4)(rng);
      const auto a = random_manifold(rng, depth - 1, false);
      return {std::to_string(n) + "*(" + a.text + ")", n * a.chi - 2 * (n - 1), n * a.sigma, true};
    }
    default: {
      const auto a = random_manifold(rng, depth - 1, true);
      const auto b = random_manifold(rng, depth - 1, true);
      return {"(" + a.text + " + " + b.text + ")", a.chi + b.chi, a.sigma + b.sigma, false};
    }
  }
}

inline FgAbGroup zn(long n) { return FgAbGroup::cyclic(n); }

}  // namespace testsupport
