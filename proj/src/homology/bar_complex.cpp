#include "invtqft/homology/bar_complex.hpp"

#include <algorithm>

#include "invtqft/error.hpp"

namespace invtqft::homology {

using abelian::FgAbGroup;
using abelian::Integer;

namespace {

Coefficient sign_of(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace

BarTower::BarTower(unsigned long cyclic_order, int levels, int top_degree, std::size_t budget,
                   bool parallel)
    : order_(cyclic_order), budget_(budget), parallel_(parallel) {
  if (cyclic_order < 1) throw Error(ErrorKind::InvalidArgument, "cyclic order must be positive");
  if (levels < 0 || top_degree < levels)
    throw Error(ErrorKind::InvalidArgument, "bar tower needs top_degree >= levels >= 0");

  // Level 0: x_i = g^i - 1, all in degree 0, no differential.
  Level base;
  base.basis.resize(1);
  base.index.resize(1);
  base.boundary.resize(1);
  base.offset = {0};
  for (std::uint32_t i = 1; i < cyclic_order; ++i) {
    base.index[0].emplace(Word{i}, static_cast<std::uint32_t>(base.basis[0].size()));
    base.basis[0].push_back(Word{i});
    base.boundary[0].emplace_back();
    base.degree_of.push_back(0);
    base.local_of.push_back(i - 1);
  }
  levels_.push_back(std::move(base));
  for (int level = 1; level <= levels; ++level) build_level(level, top_degree - (levels - level));
}

int BarTower::max_degree(int level) const {
  return static_cast<int>(levels_.at(level).basis.size()) - 1;
}

std::size_t BarTower::rank(int level, int degree) const {
  const Level& l = levels_.at(level);
  if (degree < 0 || degree >= static_cast<int>(l.basis.size())) return 0;
  return l.basis[degree].size();
}

const SparseVector& BarTower::boundary(int level, int degree, std::uint32_t index) const {
  return levels_.at(level).boundary.at(degree).at(index);
}

const BarTower::Word& BarTower::word(int level, int degree, std::uint32_t index) const {
  return levels_.at(level).basis.at(degree).at(index);
}

int BarTower::letter_degree(int level, std::uint32_t letter) const {
  return levels_[level].degree_of[letter];
}

std::uint32_t BarTower::lookup(int level, int degree, const Word& w) const {
  const auto& map = levels_[level].index.at(degree);
  auto it = map.find(w);
  if (it == map.end()) throw Error(ErrorKind::InvalidArgument, "word outside the bar basis");
  return it->second;
}

SparseVector BarTower::product(int level, int deg_a, std::uint32_t a, int deg_b,
                               std::uint32_t b) const {
  if (level == 0) {
    // (g^i - 1)(g^j - 1) = (g^{i+j} - 1) - (g^i - 1) - (g^j - 1)
    const unsigned long i = a + 1, j = b + 1;
    std::vector<std::pair<std::uint32_t, Coefficient>> terms{{a, -1}, {b, -1}};
    const unsigned long sum = (i + j) % order_;
    if (sum != 0) terms.emplace_back(static_cast<std::uint32_t>(sum - 1), 1);
    return collapse_terms(std::move(terms));
  }
  return shuffle(level, word(level, deg_a, a), word(level, deg_b, b));
}

SparseVector BarTower::shuffle(int level, const Word& u, const Word& v) const {
  // Suspended letter degrees drive the Koszul signs.
  std::vector<int> su(u.size()), sv(v.size());
  int degree = 0;
  for (std::size_t i = 0; i < u.size(); ++i) degree += su[i] = letter_degree(level - 1, u[i]) + 1;
  for (std::size_t j = 0; j < v.size(); ++j) degree += sv[j] = letter_degree(level - 1, v[j]) + 1;
  std::vector<int> u_suffix(u.size() + 1, 0);
  for (std::size_t i = u.size(); i-- > 0;) u_suffix[i] = u_suffix[i + 1] + su[i];

  std::vector<std::pair<std::uint32_t, Coefficient>> terms;
  Word current;
  current.reserve(u.size() + v.size());
  auto recurse = [&](auto&& self, std::size_t i, std::size_t j, long exponent) -> void {
    if (i == u.size() && j == v.size()) {
      terms.emplace_back(lookup(level, degree, current), sign_of(exponent));
      return;
    }
    if (i < u.size()) {
      current.push_back(u[i]);
      self(self, i + 1, j, exponent);
      current.pop_back();
    }
    if (j < v.size()) {
      current.push_back(v[j]);
      self(self, i, j + 1, exponent + static_cast<long>(sv[j]) * u_suffix[i]);
      current.pop_back();
    }
  };
  recurse(recurse, 0, 0, 0);
  return collapse_terms(std::move(terms));
}

SparseVector BarTower::compute_boundary(int level, const Word& w) const {
  const Level& lower = levels_[level - 1];
  int degree = 0;
  std::vector<int> s(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) degree += s[i] = letter_degree(level - 1, w[i]) + 1;

  std::vector<std::pair<std::uint32_t, Coefficient>> terms;
  Word scratch;
  long prefix = 0;  // sum of suspended degrees before position i
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int e = s[i] - 1;
    // Internal part: -(-1)^{prefix} [.. | d a_i | ..]
    if (e > 0) {
      const Coefficient sign = -sign_of(prefix);
      for (const auto& [local, c] : lower.boundary[e][lower.local_of[w[i]]]) {
        if (level - 1 >= 1 && e - 1 == 0) continue;  // lands on the unit, outside the ideal
        scratch = w;
        scratch[i] = lower.offset[e - 1] + local;
        terms.emplace_back(lookup(level, degree - 1, scratch), sign * c);
      }
    }
    prefix += s[i];
    // External part: (-1)^{prefix} [.. | a_i a_{i+1} | ..]
    if (i + 1 < w.size()) {
      const int e2 = s[i + 1] - 1;
      const Coefficient sign = sign_of(prefix);
      const SparseVector prod =
          product(level - 1, e, lower.local_of[w[i]], e2, lower.local_of[w[i + 1]]);
      for (const auto& [local, c] : prod) {
        scratch.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        scratch.push_back(lower.offset[e + e2] + local);
        scratch.insert(scratch.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
        terms.emplace_back(lookup(level, degree - 1, scratch), sign * c);
      }
    }
  }
  return collapse_terms(std::move(terms));
}

void BarTower::build_level(int level, int top) {
  const Level& lower = levels_[level - 1];
  // Letters: the augmentation ideal of the level below (degree 0 at level 0,
  // positive degrees otherwise), by global id.
  std::vector<std::uint32_t> letters;
  for (std::uint32_t g = 0; g < lower.degree_of.size(); ++g)
    if (level == 1 || lower.degree_of[g] >= 1) letters.push_back(g);

  Level l;
  l.basis.resize(top + 1);
  l.index.resize(top + 1);
  l.boundary.resize(top + 1);
  l.basis[0].push_back(Word{});
  for (int d = 1; d <= top; ++d) {
    for (std::uint32_t a : letters) {
      const int s = lower.degree_of[a] + 1;
      if (s > d) continue;
      for (const Word& tail : l.basis[d - s]) {
        Word w;
        w.reserve(tail.size() + 1);
        w.push_back(a);
        w.insert(w.end(), tail.begin(), tail.end());
        l.basis[d].push_back(std::move(w));
      }
    }
  }
  std::uint32_t next = 0;
  for (int d = 0; d <= top; ++d) {
    l.offset.push_back(next);
    l.index[d].reserve(l.basis[d].size());
    for (std::uint32_t i = 0; i < l.basis[d].size(); ++i) {
      l.index[d].emplace(l.basis[d][i], i);
      l.degree_of.push_back(d);
      l.local_of.push_back(i);
    }
    next += static_cast<std::uint32_t>(l.basis[d].size());
  }
  levels_.push_back(std::move(l));

  Level& built = levels_.back();
  for (int d = 0; d <= top; ++d) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(built.basis[d].size());
    built.boundary[d].resize(n);
    if (d == 0) continue;
    if (parallel_) {
      // Boundaries only read lower levels and this level's index, so each
      // basis element is independent.
      bool overflow = false;
#pragma omp parallel for schedule(dynamic, 64)
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
          built.boundary[d][i] = compute_boundary(level, built.basis[d][i]);
        } catch (const Error&) {
#pragma omp atomic write
          overflow = true;
        }
      }
      if (overflow) throw Error(ErrorKind::BudgetExceeded, "chain coefficient overflow");
    } else {
      for (std::ptrdiff_t i = 0; i < n; ++i)
        built.boundary[d][i] = compute_boundary(level, built.basis[d][i]);
    }
    for (const auto& v : built.boundary[d]) nonzeros_ += v.size();
    if (nonzeros_ > budget_)
      throw Error(ErrorKind::BudgetExceeded,
                  "bar construction exceeded the budget of " + std::to_string(budget_) +
                      " boundary entries at level " + std::to_string(level) + ", degree " +
                      std::to_string(d));
  }
}

SparseMatrix BarTower::boundary_matrix(int level, int degree) const {
  SparseMatrix m;
  m.rows = rank(level, degree - 1);
  const Level& l = levels_.at(level);
  if (degree >= 1 && degree < static_cast<int>(l.boundary.size())) m.columns = l.boundary[degree];
  else m.columns.resize(rank(level, degree));
  return m;
}

double estimate_bar_cost(unsigned long cyclic_order, int levels, int top_degree) {
  // ranks[d] of the current level; level 0 has n-1 elements in degree 0.
  std::vector<double> lower(1, static_cast<double>(cyclic_order > 0 ? cyclic_order - 1 : 0));
  double cost = 0;
  for (int level = 1; level <= levels; ++level) {
    const int top = top_degree - (levels - level);
    std::vector<double> ranks(top + 1, 0.0);
    ranks[0] = 1;
    for (int d = 1; d <= top; ++d)
      for (int e = (level == 1 ? 0 : 1); e < static_cast<int>(lower.size()) && e + 1 <= d; ++e)
        ranks[d] += lower[e] * ranks[d - e - 1];
    for (int d = 1; d <= top; ++d) cost += ranks[d] * (d + 1);
    lower = std::move(ranks);
  }
  return cost;
}

FgAbGroup homology_from_boundaries(std::size_t chain_rank, const EliminationResult& outgoing,
                                   const EliminationResult& incoming) {
  const std::size_t free_rank = chain_rank - outgoing.rank - incoming.rank;
  return FgAbGroup::from_cyclic_orders(free_rank, incoming.torsion);
}

std::optional<FgAbGroup> BarComplexResult::stable_homology(int i) const {
  const int degree = delooping_level + i;
  if (i < 0 || !is_stable(degree)) return std::nullopt;
  auto it = homology.find(degree);
  if (it == homology.end()) return std::nullopt;
  return it->second;
}

BarComplexResult bar_oracle(const FgAbGroup& group, int k, int max_degree,
                            const BarOptions& options) {
  if (!group.is_finite() || !group.is_cyclic())
    throw Error(ErrorKind::InvalidArgument, "bar oracle needs a finite cyclic group, got " +
                                                group.to_string());
  const Integer order = *group.order();
  if (order > options.max_group_order)
    throw Error(ErrorKind::BudgetExceeded, "group order " + order.get_str() +
                                               " exceeds the oracle bound " +
                                               std::to_string(options.max_group_order));
  if (k < 1 || max_degree < 0)
    throw Error(ErrorKind::InvalidArgument, "bar oracle needs k >= 1 and max_degree >= 0");

  const unsigned long n = order.get_ui();
  const int top = std::max(max_degree + 1, k);
  const double estimate = estimate_bar_cost(n, k, top);
  if (estimate > static_cast<double>(options.budget))
    throw Error(ErrorKind::BudgetExceeded,
                "estimated " + std::to_string(static_cast<long long>(estimate)) +
                    " boundary entries for K(" + group.to_string() + ", " + std::to_string(k) +
                    ") through degree " + std::to_string(max_degree) + ", budget " +
                    std::to_string(options.budget));

  const BarTower tower(n, k, top, options.budget, options.parallel);
  BarComplexResult result;
  result.group = group;
  result.delooping_level = k;
  result.max_degree = max_degree;

  std::vector<EliminationResult> boundary(top + 2);
  for (int d = 1; d <= top; ++d) {
    const SparseMatrix m = tower.boundary_matrix(k, d);
    boundary[d] = options.parallel ? eliminate_parallel(m) : eliminate_serial(m);
  }
  for (int d = 0; d <= max_degree; ++d) {
    result.chain_ranks.push_back(tower.rank(k, d));
    result.homology[d] = homology_from_boundaries(tower.rank(k, d), boundary[d], boundary[d + 1]);
  }
  return result;
}

}  // namespace invtqft::homology
