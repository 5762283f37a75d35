#include "invtqft/stable_cohomology.hpp"

#include "invtqft/error.hpp"

namespace invtqft::stable {

using abelian::CircleDual;
using abelian::CoefficientGroup;
using abelian::FgAbGroup;

namespace {

const char* const kHom = "hom";
const char* const kExt = "ext";
const char* const kUct = "uct-hz";
const char* const kDegreeFiveCircle = "degree5-circle";

const FactEntry& entry(const std::string& id) {
  for (const auto& e : fact_table())
    if (e.id == id) return e;
  throw Error(ErrorKind::InvalidArgument, "no fact entry " + id);
}

StableCohomologyGroup resolved(const GroupDesc& source, const CoefficientGroup& coeff, int degree,
                               const std::string& fact, GroupDesc value) {
  const FactEntry& e = entry(fact);
  return {degree, source, coeff, std::move(value), e.id, e.citation};
}

StableCohomologyGroup unresolved(const GroupDesc& source, const CoefficientGroup& coeff,
                                 int degree, std::string reason) {
  return {degree, source, coeff, Undetermined{std::move(reason)}, {}, {}};
}

std::string coeff_name(const CoefficientGroup& coeff) {
  if (const auto* g = std::get_if<FgAbGroup>(&coeff)) return g->to_string();
  return "Cx";
}

}  // namespace

const std::vector<FactEntry>& fact_table() {
  static const std::vector<FactEntry> table = {
      {kHom, "degree 0, f.g. source, f.g. or Cx coefficients",
       "H^0_st(A;B) = [HA, HB] = Hom(A, B)"},
      {kExt, "degree 1, f.g. source, f.g. or Cx coefficients",
       "H^1_st(A;B) = Ext(A, B); Cx is injective so Ext(A, Cx) = 0"},
      {kUct, "degrees 2..5, f.g. source, f.g. or Cx coefficients",
       "Eilenberg-MacLane: H_*(HZ;Z) = Z, 0, Z/2, 0, Z/6, 0 in degrees 0..5 (Cartan); "
       "HA = HZ smash Moore(A) and universal coefficients"},
      {kDegreeFiveCircle, "degree 5, Cx coefficients, f.g. source or the Witt group",
       "Eilenberg-Steenrod: H^5_st(A;Cx) = Hom(A[2] + A[3], Cx); for W the dual of "
       "Z/2 + sum_N(Z/2 + Z/2) is written sum_N(Z/2)"},
  };
  return table;
}

const std::vector<FgAbGroup>& integral_homology_of_hz() {
  static const std::vector<FgAbGroup> h = {
      FgAbGroup::free(1), FgAbGroup::trivial(), FgAbGroup::cyclic(2),
      FgAbGroup::trivial(), FgAbGroup::cyclic(6), FgAbGroup::trivial(),
  };
  return h;
}

FgAbGroup stable_homology(const FgAbGroup& a, int degree) {
  if (degree < 0 || degree > kMaxDegree)
    throw Error(ErrorKind::UnsupportedDegree,
                "stable homology is tabulated for degrees 0.." + std::to_string(kMaxDegree));
  const auto& hz = integral_homology_of_hz();
  FgAbGroup h = tensor(hz[degree], a);
  if (degree > 0) {
    // Tor(H, A) for finite cyclic H = Z/m is A[m]; H_0(HZ) = Z has no Tor.
    const FgAbGroup& below = hz[degree - 1];
    for (const auto& m : below.invariant_factors()) h = direct_sum(h, abelian::killed_by(a, m));
  }
  return h;
}

GroupDesc universal_coefficients(const FgAbGroup& h_n, const FgAbGroup& h_n_minus_1,
                                 const CoefficientGroup& coefficients) {
  return direct_sum(GroupDesc::from(abelian::hom_group(h_n, coefficients)),
                    GroupDesc(abelian::ext_group(h_n_minus_1, coefficients)));
}

const GroupDesc& StableCohomologyGroup::group() const {
  if (const auto* u = std::get_if<Undetermined>(&value))
    throw Error(ErrorKind::UndeterminedCohomology,
                "H^" + std::to_string(degree) + "_st(" + source.to_string() + "; " +
                    coeff_name(coefficients) + ") is undetermined: " + u->reason);
  return std::get<GroupDesc>(value);
}

std::string StableCohomologyGroup::to_string() const {
  if (const auto* u = std::get_if<Undetermined>(&value)) return "undetermined: " + u->reason;
  return std::get<GroupDesc>(value).to_string();
}

StableCohomologyGroup stable_cohomology(const GroupDesc& source, const CoefficientGroup& coeff,
                                        int degree) {
  if (degree < 0 || degree > kMaxDegree)
    throw Error(ErrorKind::UnsupportedDegree,
                "stable cohomology is only tabulated for degrees 0.." +
                    std::to_string(kMaxDegree) + ", got " + std::to_string(degree));
  const bool circle = std::holds_alternative<CircleDual>(coeff);

  if (const auto a = source.as_fg()) {
    if (degree == 0) return resolved(source, coeff, degree, kHom, GroupDesc::from(hom_group(*a, coeff)));
    if (degree == 1) return resolved(source, coeff, degree, kExt, GroupDesc(ext_group(*a, coeff)));
    if (degree == 5 && circle) {
      const FgAbGroup six = direct_sum(abelian::killed_by(*a, 2), abelian::killed_by(*a, 3));
      return resolved(source, coeff, degree, kDegreeFiveCircle,
                      GroupDesc::from(abelian::hom_to_circle(six)));
    }
    return resolved(source, coeff, degree, kUct,
                    universal_coefficients(stable_homology(*a, degree),
                                           stable_homology(*a, degree - 1), coeff));
  }

  if (source.is_witt()) {
    if (degree == 5 && circle)
      return resolved(source, coeff, degree, kDegreeFiveCircle,
                      GroupDesc::countable_sum(FgAbGroup::cyclic(2)));
    return unresolved(source, coeff, degree,
                      "the Witt group source is only tabulated in degree 5 with Cx coefficients");
  }
  return unresolved(source, coeff, degree,
                    "no tabulated fact covers the source " + source.to_string());
}

// ---------------------------------------------------------------- oracle

std::string_view to_string(CrossCheckStatus status) {
  switch (status) {
    case CrossCheckStatus::Match: return "match";
    case CrossCheckStatus::Mismatch: return "mismatch";
    case CrossCheckStatus::TableUndetermined: return "table-undetermined";
  }
  return "?";
}

std::string CrossCheckReport::to_string() const {
  return "H^" + std::to_string(degree) + "_st(" + group.to_string() + "; " +
         coeff_name(coefficients) + "): table " + table.to_string() + ", oracle " +
         oracle.to_string() + " (k=" + std::to_string(delooping_level) + ") -> " +
         std::string(stable::to_string(status));
}

GroupDesc oracle_stable_cohomology(const homology::BarComplexResult& oracle,
                                   const CoefficientGroup& coefficients, int degree) {
  const auto h_n = oracle.stable_homology(degree);
  const auto h_below = degree == 0 ? std::optional<FgAbGroup>(FgAbGroup::trivial())
                                   : oracle.stable_homology(degree - 1);
  if (!h_n || !h_below)
    throw Error(ErrorKind::InvalidArgument,
                "degree " + std::to_string(degree) + " is outside the oracle's stable range");
  return universal_coefficients(*h_n, *h_below, coefficients);
}

CrossCheckReport cross_check(const FgAbGroup& group, const CoefficientGroup& coefficients,
                             int degree, const homology::BarOptions& options) {
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "degree must be nonnegative");
  const int k = degree + 1;
  const auto oracle = homology::bar_oracle(group, k, k + degree, options);
  CrossCheckReport report{group, coefficients, degree, k, CrossCheckStatus::TableUndetermined,
                          {}, oracle_stable_cohomology(oracle, coefficients, degree)};
  if (degree > kMaxDegree) {
    report.table = {degree, GroupDesc(group), coefficients,
                    Undetermined{"degree above the tabulated range"}, {}, {}};
    return report;
  }
  report.table = stable_cohomology(GroupDesc(group), coefficients, degree);
  if (report.table.is_determined())
    report.status = report.table.group() == report.oracle ? CrossCheckStatus::Match
                                                          : CrossCheckStatus::Mismatch;
  return report;
}

}  // namespace invtqft::stable
