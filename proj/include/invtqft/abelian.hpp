#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace invtqft::abelian {

using Integer = mpz_class;

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<Integer>& entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  // Bounds-checked access; out of range throws Error(InvalidArgument).
  Integer& at(std::size_t r, std::size_t c);
  const Integer& at(std::size_t r, std::size_t c) const;

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_diagonal() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix left;      // U, unimodular
  IntMatrix diagonal;  // S = U * m * V
  IntMatrix right;     // V, unimodular
};

// Pivot rule: smallest nonzero absolute value, ties broken by lowest (row, col).
// The diagonal is nonnegative and each entry divides the next.
SmithForm smith_normal_form(const IntMatrix& m);

// Diagonal of the Smith form only (length min(rows, cols)); skips the
// transform bookkeeping.
std::vector<Integer> smith_diagonal(IntMatrix m);

/// Finitely generated abelian group Z^r + Z/d1 + ... + Z/dk with d1 | d2 | ...
/// and every di >= 2. Canonical generators are the free ones first, then the
/// torsion ones in invariant-factor order.
class FgAbGroup {
 public:
  FgAbGroup() = default;
  // Validates normal form; throws InvalidArgument otherwise.
  FgAbGroup(std::size_t free_rank, std::vector<Integer> invariant_factors);

  static FgAbGroup trivial() { return {}; }
  static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank, {}); }
  // cyclic(0) is Z, cyclic(1) is trivial.
  static FgAbGroup cyclic(const Integer& order);
  // Normalizes an arbitrary sum of cyclic groups; 0 stands for Z.
  static FgAbGroup from_cyclic_orders(std::size_t free_rank,
                                      const std::vector<Integer>& orders);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }

  std::size_t generator_count() const noexcept { return free_rank_ + factors_.size(); }
  // 0 for a free generator.
  Integer generator_order(std::size_t i) const;

  bool is_trivial() const noexcept { return free_rank_ == 0 && factors_.empty(); }
  bool is_finite() const noexcept { return free_rank_ == 0; }
  bool is_cyclic() const noexcept { return generator_count() <= 1; }
  // Cardinality; nullopt when infinite.
  std::optional<Integer> order() const;
  // Largest element order of the torsion subgroup (1 when torsion-free).
  Integer torsion_exponent() const;

  // Reduces coordinates modulo the torsion orders.
  std::vector<Integer> normalize(std::vector<Integer> element) const;
  // Order of an element; 0 means infinite.
  Integer element_order(const std::vector<Integer>& element) const;

  std::string to_string() const;

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;
  friend std::strong_ordering operator<=>(const FgAbGroup& a, const FgAbGroup& b);

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> factors_;
};

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup power(const FgAbGroup& a, std::size_t n);

/// Group presented by row-many generators and one relation per column.
FgAbGroup cokernel(const IntMatrix& m);

bool is_isomorphic(const FgAbGroup& a, const FgAbGroup& b);

/// Homomorphism described by images of the canonical generators of `source`:
/// column j of `matrix` holds the coordinates of the image of generator j.
class GroupHom {
 public:
  // Throws InvalidArgument when a relation of the source is not respected.
  GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

  const FgAbGroup& source() const noexcept { return source_; }
  const FgAbGroup& target() const noexcept { return target_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  std::vector<Integer> apply(const std::vector<Integer>& element) const;
  FgAbGroup image_cokernel() const;

 private:
  FgAbGroup source_;
  FgAbGroup target_;
  IntMatrix matrix_;
};

/// The circle group C^x, modelled only through its Hom/Ext behaviour:
/// divisible (hence injective) with torsion subgroup Q/Z.
struct CircleDual {
  friend bool operator==(const CircleDual&, const CircleDual&) = default;
};

using CoefficientGroup = std::variant<FgAbGroup, CircleDual>;

/// Hom(A, C^x) = (torsion characters, isomorphic to tors A) x (C^x)^rank A.
struct CharacterDescription {
  FgAbGroup finite_part;
  std::size_t circle_factors = 0;

  std::string to_string() const;
  friend bool operator==(const CharacterDescription&, const CharacterDescription&) = default;
};

using HomValue = std::variant<FgAbGroup, CharacterDescription>;

FgAbGroup hom_group(const FgAbGroup& a, const FgAbGroup& b);
CharacterDescription hom_to_circle(const FgAbGroup& a);
HomValue hom_group(const FgAbGroup& a, const CoefficientGroup& b);

FgAbGroup ext_group(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup ext_group(const FgAbGroup& a, const CoefficientGroup& b);

FgAbGroup tensor(const FgAbGroup& a, const FgAbGroup& b);

/// A/2A.
FgAbGroup mod_two(const FgAbGroup& a);

/// Full torsion subgroup (no prime), or the p-primary torsion subgroup.
FgAbGroup torsion_part(const FgAbGroup& a, std::optional<unsigned long> prime = std::nullopt);

/// A[m] = {x : m x = 0}, isomorphic to Tor(A, Z/m).
FgAbGroup killed_by(const FgAbGroup& a, const Integer& m);

bool is_prime(unsigned long n);

/// Middle group of the extension 0 -> kernel -> E -> quotient -> 0 whose class
/// sends the i-th torsion generator of `quotient` (of order q_i) to
/// `cocycle[i]` in kernel / q_i kernel.
FgAbGroup extension_middle_group(const FgAbGroup& kernel, const FgAbGroup& quotient,
                                 const std::vector<std::vector<Integer>>& cocycle);

// Upper bound on |Ext^1(quotient, kernel)| that classify_extensions will walk.
inline constexpr unsigned long kExtensionEnumerationLimit = 1UL << 20;

/// Isomorphism classes of middle groups E, sorted, one per distinct normal form.
std::vector<FgAbGroup> classify_extensions(const FgAbGroup& kernel, const FgAbGroup& quotient);

/// Recovers a finite abelian group from the counts |{x : m x = 0}|, supplied
/// as a callback over divisors m of the exponent.
FgAbGroup finite_group_from_kill_counts(
    const Integer& exponent, const std::function<Integer(const Integer&)>& count_killed_by);

}  // namespace invtqft::abelian
