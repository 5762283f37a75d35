#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <unordered_map>
#include <optional>
#include <vector>

#include "invtqft/abelian.hpp"
#include "invtqft/homology/sparse.hpp"

namespace invtqft::homology {

/// Chain-level model of the iterated classifying spaces B^k(Z/n).
///
/// Level 0 is the augmentation ideal of the group ring Z[Z/n], spanned by
/// x_i = g^i - 1 (i = 1..n-1) in degree 0. Level L >= 1 is the reduced
/// normalized bar construction on level L-1: words [a_1|...|a_m] of letters
/// from the augmentation ideal of level L-1, in degree sum(|a_i| + 1), with
/// the shuffle product. Because each level is a commutative DGA, level L
/// computes H_*(K(Z/n, L); Z).
class BarTower {
 public:
  using Word = std::vector<std::uint32_t>;  // global letter ids of the level below

  // Builds levels 0..levels with level L truncated at degree top_degree - (levels - L).
  // Throws BudgetExceeded when the stored boundary entries exceed `budget`.
  BarTower(unsigned long cyclic_order, int levels, int top_degree, std::size_t budget,
           bool parallel);

  int levels() const noexcept { return static_cast<int>(levels_.size()) - 1; }
  int max_degree(int level) const;
  std::size_t rank(int level, int degree) const;
  std::size_t stored_nonzeros() const noexcept { return nonzeros_; }

  // Boundary of basis element `index` of (level, degree), in the degree-1 basis.
  const SparseVector& boundary(int level, int degree, std::uint32_t index) const;
  // Product of two basis elements; result lies in degree deg_a + deg_b.
  SparseVector product(int level, int deg_a, std::uint32_t a, int deg_b, std::uint32_t b) const;
  SparseMatrix boundary_matrix(int level, int degree) const;

  const Word& word(int level, int degree, std::uint32_t index) const;

 private:
  struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
      return std::hash<std::string_view>{}(std::string_view(
          reinterpret_cast<const char*>(w.data()), w.size() * sizeof(std::uint32_t)));
    }
  };

  struct Level {
    std::vector<std::vector<Word>> basis;  // by degree
    std::vector<std::unordered_map<Word, std::uint32_t, WordHash>> index;
    std::vector<std::vector<SparseVector>> boundary;
    std::vector<std::uint32_t> offset;  // global id of the first element of each degree
    std::vector<int> degree_of;         // global id -> degree
    std::vector<std::uint32_t> local_of;
  };

  void build_level(int level, int top);
  SparseVector compute_boundary(int level, const Word& w) const;
  SparseVector shuffle(int level, const Word& u, const Word& v) const;
  int letter_degree(int level, std::uint32_t letter) const;
  std::uint32_t lookup(int level, int degree, const Word& w) const;

  unsigned long order_;
  std::size_t budget_;
  bool parallel_;
  std::size_t nonzeros_ = 0;
  std::vector<Level> levels_;
};

/// Upper-bound style estimate of the boundary entries the tower needs, computed
/// from the chain ranks without building anything.
double estimate_bar_cost(unsigned long cyclic_order, int levels, int top_degree);

struct BarOptions {
  std::size_t budget = 5'000'000;
  unsigned long max_group_order = 8;
  bool parallel = true;
};

struct BarComplexResult {
  abelian::FgAbGroup group;
  int delooping_level = 1;
  int max_degree = 0;
  std::map<int, abelian::FgAbGroup> homology;  // degree -> H_degree(K(group, k))
  std::vector<std::size_t> chain_ranks;

  // Degrees k + i with i < k lie in the stable range.
  int stable_range_limit() const noexcept { return delooping_level; }
  bool is_stable(int degree) const noexcept {
    return degree >= delooping_level && degree - delooping_level < delooping_level;
  }
  // Stable homology H_i^st = H_{k+i}(K(group, k)) when computed and stable.
  std::optional<abelian::FgAbGroup> stable_homology(int i) const;
};

/// Integral homology of K(group, k) through max_degree by Smith reduction of the
/// boundary matrices of the iterated bar construction. The group must be finite
/// cyclic of order at most options.max_group_order.
BarComplexResult bar_oracle(const abelian::FgAbGroup& group, int k, int max_degree,
                            const BarOptions& options = {});

/// Homology of a chain complex from its boundary matrices.
abelian::FgAbGroup homology_from_boundaries(std::size_t chain_rank,
                                            const EliminationResult& outgoing,
                                            const EliminationResult& incoming);

}  // namespace invtqft::homology
