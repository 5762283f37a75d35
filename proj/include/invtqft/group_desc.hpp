#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invtqft/abelian.hpp"

namespace invtqft {

/// A direct sum of a finitely generated group with copies of C^x, copies of
/// the Witt group W, and countable sums of finitely generated groups. This is
/// the currency for every group the library reports.
class GroupDesc {
 public:
  GroupDesc() = default;
  GroupDesc(abelian::FgAbGroup fg) : fg_(std::move(fg)) {}  // NOLINT(implicit)

  static GroupDesc circle(std::size_t copies = 1);
  static GroupDesc witt(std::size_t copies = 1);
  static GroupDesc countable_sum(abelian::FgAbGroup summand);
  static GroupDesc from(const abelian::CharacterDescription& chars);
  static GroupDesc from(const abelian::CoefficientGroup& coeff);
  static GroupDesc from(const abelian::HomValue& value);

  const abelian::FgAbGroup& fg_part() const noexcept { return fg_; }
  std::size_t circle_count() const noexcept { return circles_; }
  std::size_t witt_count() const noexcept { return witts_; }
  const std::vector<abelian::FgAbGroup>& countable_sums() const noexcept { return countable_; }

  bool is_trivial() const noexcept;
  bool is_finitely_generated() const noexcept;  // no C^x, W or countable sums
  bool is_circle() const noexcept;              // exactly C^x
  bool is_witt() const noexcept;                // exactly W
  std::optional<abelian::FgAbGroup> as_fg() const;
  std::optional<abelian::CoefficientGroup> as_coefficients() const;
  // Cardinality when finite.
  std::optional<abelian::Integer> finite_order() const;

  // Factor names in canonical order: the f.g. part, then Cx, then W, then sums.
  std::vector<std::string> factors() const;
  std::string to_string() const;

  friend GroupDesc direct_sum(const GroupDesc& a, const GroupDesc& b);
  friend bool operator==(const GroupDesc&, const GroupDesc&) = default;

 private:
  abelian::FgAbGroup fg_;
  std::size_t circles_ = 0;
  std::size_t witts_ = 0;
  std::vector<abelian::FgAbGroup> countable_;  // sorted
};

GroupDesc direct_sum(const GroupDesc& a, const GroupDesc& b);

/// Grammar: `0`, `Z`, `Z/n`, `Cx`, `W`, `sum_N(expr)`, parentheses, sums with
/// `+`, powers with `^` (e.g. `Z^2+Z/4+Z/6`, `Cx^2+W`). Throws ParseError.
GroupDesc parse_group(std::string_view text);

/// parse_group restricted to finitely generated results.
abelian::FgAbGroup parse_fg_group(std::string_view text);

}  // namespace invtqft
