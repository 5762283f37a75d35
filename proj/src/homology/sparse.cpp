#include "invtqft/homology/sparse.hpp"

#include <algorithm>
#include <numeric>

#include "invtqft/error.hpp"

namespace invtqft::homology {

using abelian::Integer;

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

SparseVector collapse_terms(std::vector<std::pair<std::uint32_t, Coefficient>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  out.reserve(terms.size());
  for (const auto& [idx, c] : terms) {
    if (!out.empty() && out.back().first == idx) {
      if (__builtin_add_overflow(out.back().second, c, &out.back().second))
        throw Error(ErrorKind::BudgetExceeded, "chain coefficient overflow");
    } else {
      out.emplace_back(idx, c);
    }
  }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

namespace {

using Entry = std::pair<std::uint32_t, Integer>;
using Row = std::vector<Entry>;

bool is_unit(const Integer& x) { return x == 1 || x == -1; }

// target -= factor * pivot, both sorted by column.
void subtract_multiple(Row& target, const Row& pivot, const Integer& factor) {
  Row out;
  out.reserve(target.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
      out.push_back(std::move(target[i++]));
    } else if (i == target.size() || pivot[j].first < target[i].first) {
      out.emplace_back(pivot[j].first, -factor * pivot[j].second);
      ++j;
    } else {
      Integer v = target[i].second - factor * pivot[j].second;
      if (v != 0) out.emplace_back(target[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  target = std::move(out);
}

const Integer* find_entry(const Row& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const Entry& e, std::uint32_t c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

template <bool Parallel>
class Eliminator {
 public:
  explicit Eliminator(const SparseMatrix& m) : cols_(m.rows), occupancy_(m.rows) {
    // Work on the transpose: each matrix column becomes a row.
    rows_.reserve(m.columns.size());
    for (const auto& column : m.columns) {
      Row r;
      r.reserve(column.size());
      for (const auto& [idx, c] : column) r.emplace_back(idx, Integer(static_cast<long>(c)));
      rows_.push_back(std::move(r));
    }
    active_.assign(rows_.size(), 1);
    for (std::uint32_t r = 0; r < rows_.size(); ++r)
      for (const auto& e : rows_[r]) occupancy_[e.first].push_back(r);
  }

  EliminationResult run() {
    EliminationResult result;
    bool progress = true;
    while (progress) {
      progress = false;
      std::vector<std::uint32_t> order;
      for (std::uint32_t r = 0; r < rows_.size(); ++r)
        if (active_[r] && !rows_[r].empty()) order.push_back(r);
      std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return rows_[a].size() < rows_[b].size();
      });
      for (std::uint32_t r : order) {
        if (!active_[r] || rows_[r].empty()) continue;
        if (pivot_on(r)) {
          ++result.unit_pivots;
          progress = true;
        }
      }
    }
    result.rank = result.unit_pivots;
    residual(result);
    return result;
  }

 private:
  bool pivot_on(std::uint32_t r) {
    const Row& row = rows_[r];
    std::uint32_t col = 0;
    std::size_t best = SIZE_MAX;
    for (const auto& [c, v] : row) {
      if (!is_unit(v)) continue;
      if (occupancy_[c].size() < best) {
        best = occupancy_[c].size();
        col = c;
      }
    }
    if (best == SIZE_MAX) return false;

    auto& occ = occupancy_[col];
    std::sort(occ.begin(), occ.end());
    occ.erase(std::unique(occ.begin(), occ.end()), occ.end());
    std::vector<std::uint32_t> targets;
    for (std::uint32_t t : occ)
      if (t != r && active_[t] && find_entry(rows_[t], col) != nullptr) targets.push_back(t);

    const Row& pivot = rows_[r];
    const Integer unit = *find_entry(pivot, col);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(targets.size());
    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
      for (std::ptrdiff_t i = 0; i < n; ++i) eliminate_from(targets[i], pivot, col, unit);
    } else {
      for (std::ptrdiff_t i = 0; i < n; ++i) eliminate_from(targets[i], pivot, col, unit);
    }
    for (std::uint32_t t : targets)
      for (const auto& e : pivot) {
        if (e.first == col) continue;
        auto& list = occupancy_[e.first];
        list.push_back(t);
        if (list.size() > 256 && list.size() > 4 * compacted_size(e.first)) compact(e.first);
      }
    active_[r] = 0;
    occ.clear();
    occ.shrink_to_fit();
    return true;
  }

  void eliminate_from(std::uint32_t t, const Row& pivot, std::uint32_t col, const Integer& unit) {
    // unit is +-1, so its inverse is itself.
    const Integer factor = *find_entry(rows_[t], col) * unit;
    subtract_multiple(rows_[t], pivot, factor);
  }

  std::size_t compacted_size(std::uint32_t c) {
    if (compacted_.size() <= c) compacted_.resize(cols_, 0);
    return compacted_[c];
  }

  void compact(std::uint32_t c) {
    auto& list = occupancy_[c];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    std::erase_if(list, [&](std::uint32_t t) { return !active_[t]; });
    compacted_[c] = list.size();
  }

  void residual(EliminationResult& result) {
    std::vector<std::uint32_t> rows;
    std::vector<std::uint32_t> col_map(cols_, UINT32_MAX);
    std::uint32_t ncols = 0;
    for (std::uint32_t r = 0; r < rows_.size(); ++r) {
      if (!active_[r] || rows_[r].empty()) continue;
      rows.push_back(r);
      for (const auto& e : rows_[r])
        if (col_map[e.first] == UINT32_MAX) col_map[e.first] = ncols++;
    }
    result.residual_rows = rows.size();
    result.residual_cols = ncols;
    if (rows.empty()) return;
    if (static_cast<double>(rows.size()) * ncols > 4.0e7)
      throw Error(ErrorKind::BudgetExceeded,
                  "dense residual " + std::to_string(rows.size()) + "x" + std::to_string(ncols) +
                      " is too large");
    abelian::IntMatrix dense(rows.size(), ncols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& e : rows_[rows[i]]) dense(i, col_map[e.first]) = e.second;
    for (const Integer& d : abelian::smith_diagonal(std::move(dense))) {
      if (d == 0) continue;
      ++result.rank;
      if (d != 1) result.torsion.push_back(d);
    }
  }

  std::size_t cols_;
  std::vector<Row> rows_;
  std::vector<char> active_;
  std::vector<std::vector<std::uint32_t>> occupancy_;
  std::vector<std::size_t> compacted_;
};

}  // namespace

EliminationResult eliminate_serial(const SparseMatrix& m) { return Eliminator<false>(m).run(); }

EliminationResult eliminate_parallel(const SparseMatrix& m) { return Eliminator<true>(m).run(); }

}  // namespace invtqft::homology
