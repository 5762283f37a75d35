#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "invtqft/abelian.hpp"
#include "invtqft/group_desc.hpp"
#include "invtqft/spectra.hpp"

namespace invtqft::targets {

// ---------------------------------------------------------------- Picard catalog

struct PicardSpectrum {
  std::string name;
  int dimension = 0;                  // categorical dimension; homotopy lives in 0..dimension
  std::vector<GroupDesc> homotopy;    // index = degree
  bool top_complex = false;           // pi_dimension = C^x
  spectra::KInvariant k;              // for two-term shapes
  bool brown_comenetz = false;        // Pic = pi_{>=0} Sigma^d IC^x
  std::string citation;

  const GroupDesc& pi(int degree) const;
  // Nonzero homotopy only in degree 0 and one degree n >= 1.
  bool is_two_term() const;
  spectra::TwoTermSpectrum two_term() const;  // throws HypothesisViolated
};

/// Stable stems pi_0..pi_4 of the sphere spectrum: Z, Z/2, Z/2, Z/24, 0.
const std::vector<abelian::FgAbGroup>& sphere_stems();

/// Catalog names: vect, svect, alg, salg, fus, brfus, vect4, and u<d> for the
/// universal target in dimension d = 1..4. Throws NotInCatalog.
PicardSpectrum picard(std::string_view name);
std::vector<std::string> catalog_names();

/// The hypotheses of the four-dimensional classification: dimension 4, top
/// complex, pi_1 = pi_2 = pi_3 = 0.
struct HypothesisCheck {
  bool four_dimensional = false;
  bool top_complex = false;
  std::vector<int> nonzero_middle;  // degrees among 1..3 with pi != 0

  bool holds() const { return four_dimensional && top_complex && nonzero_middle.empty(); }
  std::string reason() const;
};

HypothesisCheck check_hypotheses(const PicardSpectrum& t);

// ---------------------------------------------------------------- Witt groups

/// (free, t2 mod 2, t4 mod 4): one Z + Z/2 + Z/4 summand.
struct WittTriple {
  abelian::Integer free = 0;
  int t2 = 0;
  int t4 = 0;

  bool is_zero() const { return free == 0 && t2 == 0 && t4 == 0; }
  friend bool operator==(const WittTriple&, const WittTriple&) = default;
};

/// Element of sW = sum_N(Z + Z/2 + Z/4).
class SWittElement {
 public:
  SWittElement() = default;
  explicit SWittElement(std::map<std::size_t, WittTriple> summands);

  const std::map<std::size_t, WittTriple>& summands() const noexcept { return summands_; }
  bool is_zero() const noexcept { return summands_.empty(); }
  // nullopt when infinite.
  std::optional<abelian::Integer> order() const;

  friend SWittElement operator+(const SWittElement& a, const SWittElement& b);
  friend SWittElement operator-(const SWittElement& a);
  friend bool operator==(const SWittElement&, const SWittElement&) = default;

 private:
  std::map<std::size_t, WittTriple> summands_;  // zero triples are never stored
};

/// Element of W = Z/32 + sum_N(Z + Z/2 + Z/4).
class WittElement {
 public:
  WittElement() = default;
  WittElement(int c32, std::map<std::size_t, WittTriple> summands);

  int c32() const noexcept { return c32_; }
  const SWittElement& summand_part() const noexcept { return rest_; }
  const std::map<std::size_t, WittTriple>& summands() const noexcept { return rest_.summands(); }
  bool is_zero() const noexcept { return c32_ == 0 && rest_.is_zero(); }
  std::optional<abelian::Integer> order() const;

  friend WittElement operator+(const WittElement& a, const WittElement& b);
  friend WittElement operator-(const WittElement& a);
  friend bool operator==(const WittElement&, const WittElement&) = default;

 private:
  int c32_ = 0;
  SWittElement rest_;
};

nlohmann::ordered_json to_json(const WittElement& w);
nlohmann::ordered_json to_json(const SWittElement& w);
/// Accepts {"c32": n, "summands": {"idx": [free, t2, t4], ...}}. Throws ParseError.
WittElement witt_from_json(const nlohmann::json& j);
WittElement parse_witt(std::string_view text);

/// phi: W -> sW with kernel 2 Z/32 = Z/16. The Z/2 = Z/32 / Z/16 lands in the
/// t2 slot of summand 0 and the t2 slot of W-summand i moves to sW-summand
/// i + 1; free and Z/4 parts stay in place. This is a bijection on the
/// countable parts, so phi is onto.
SWittElement witt_to_switt(const WittElement& w);

/// A preimage under witt_to_switt with c32 in {0, 1}.
WittElement switt_preimage(const SWittElement& s);

struct WittExtensionReport {
  abelian::FgAbGroup kernel;
  abelian::FgAbGroup quotient;
  std::vector<abelian::FgAbGroup> candidates;  // all middle groups
  std::vector<abelian::FgAbGroup> filtered;    // an element of order 32, none of order 64
  // Filtered groups with summands of exponent <= 4 discarded; a countable
  // sum of Z/2 + Z/4 absorbs those, so agreement here pins the type.
  std::vector<abelian::FgAbGroup> absorbed;
  bool unique_up_to_absorption() const { return absorbed.size() == 1; }
};

/// Extensions 0 -> kernel -> E -> quotient -> 0 filtered by the element-order
/// constraints known for W.
WittExtensionReport witt_extension_candidates(const abelian::FgAbGroup& kernel,
                                              const abelian::FgAbGroup& quotient);

/// Truncation with m countable summands: kernel Z/16, quotient
/// Z/2 + (Z + Z/2 + Z/4)^m (W / ker phi); the truncated normal form
/// Z/32 + (Z + Z/2 + Z/4)^m must be among the filtered candidates and all
/// filtered candidates must agree with it up to absorption.
struct WittStructureCheck {
  std::size_t truncation = 0;
  WittExtensionReport report;
  abelian::FgAbGroup expected;
  bool expected_found = false;
  bool passes() const {
    return expected_found && report.unique_up_to_absorption() &&
           report.absorbed.front() == absorbed_type(expected);
  }
  static abelian::FgAbGroup absorbed_type(const abelian::FgAbGroup& g);
};

WittStructureCheck witt_structure_check(std::size_t truncation);

/// Truncated normal form Z/32 + (Z + Z/2 + Z/4)^m.
abelian::FgAbGroup truncated_witt_group(std::size_t m);

}  // namespace invtqft::targets
