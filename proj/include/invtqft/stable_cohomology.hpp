#pragma once

#include <string>
#include <variant>
#include <vector>

#include "invtqft/abelian.hpp"
#include "invtqft/group_desc.hpp"
#include "invtqft/homology/bar_complex.hpp"

namespace invtqft::stable {

inline constexpr int kMaxDegree = 5;

struct Undetermined {
  std::string reason;
  friend bool operator==(const Undetermined&, const Undetermined&) = default;
};

/// H^degree_st(source; coefficients) as far as the fact table resolves it.
struct StableCohomologyGroup {
  int degree = 0;
  GroupDesc source;
  abelian::CoefficientGroup coefficients;
  std::variant<GroupDesc, Undetermined> value;
  std::string fact;      // id of the fact-table entry used, empty when undetermined
  std::string citation;

  bool is_determined() const noexcept { return std::holds_alternative<GroupDesc>(value); }
  // Throws Error(UndeterminedCohomology) carrying the reason.
  const GroupDesc& group() const;
  bool is_zero() const { return is_determined() && group().is_trivial(); }
  // The group, or "undetermined: <reason>".
  std::string to_string() const;
};

struct FactEntry {
  std::string id;
  std::string scope;
  std::string citation;
};

/// The closed list of facts stable_cohomology may use. Anything they do not
/// cover comes back Undetermined.
const std::vector<FactEntry>& fact_table();

/// Integral homology of the Eilenberg-MacLane spectrum HZ in degrees 0..5.
const std::vector<abelian::FgAbGroup>& integral_homology_of_hz();

/// H_n(HA; Z) for f.g. A and 0 <= n <= 5, from HA = HZ smash the Moore
/// spectrum of A: H_n(HZ) (x) A + Tor(H_{n-1}(HZ), A).
abelian::FgAbGroup stable_homology(const abelian::FgAbGroup& a, int degree);

/// Universal coefficients: Hom(h_n, B) + Ext(h_{n-1}, B).
GroupDesc universal_coefficients(const abelian::FgAbGroup& h_n, const abelian::FgAbGroup& h_n_minus_1,
                                 const abelian::CoefficientGroup& coefficients);

/// Throws UnsupportedDegree for degrees outside 0..5.
StableCohomologyGroup stable_cohomology(const GroupDesc& source,
                                        const abelian::CoefficientGroup& coefficients, int degree);

enum class CrossCheckStatus { Match, Mismatch, TableUndetermined };

std::string_view to_string(CrossCheckStatus status);

struct CrossCheckReport {
  abelian::FgAbGroup group;
  abelian::CoefficientGroup coefficients;
  int degree = 0;
  int delooping_level = 0;
  CrossCheckStatus status = CrossCheckStatus::TableUndetermined;
  StableCohomologyGroup table;
  GroupDesc oracle;

  std::string to_string() const;
};

/// H^degree_st of a finite cyclic group from the bar oracle's stable homology.
GroupDesc oracle_stable_cohomology(const homology::BarComplexResult& oracle,
                                   const abelian::CoefficientGroup& coefficients, int degree);

/// Runs the bar oracle at delooping level degree + 1 and compares with the table.
CrossCheckReport cross_check(const abelian::FgAbGroup& group,
                             const abelian::CoefficientGroup& coefficients, int degree,
                             const homology::BarOptions& options = {});

}  // namespace invtqft::stable
