#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invtqft/abelian.hpp"
#include "invtqft/group_desc.hpp"
#include "invtqft/stable_cohomology.hpp"

namespace invtqft::spectra {

/// Element of a finitely generated group (coordinates on canonical
/// generators) or of C^x (a phase in Q/Z, as a fraction of a turn).
struct Element {
  std::vector<abelian::Integer> coords;
  mpq_class phase = 0;

  friend bool operator==(const Element&, const Element&) = default;
};

/// Arithmetic in a group that is finitely generated or exactly C^x.
class ElementGroup {
 public:
  explicit ElementGroup(const GroupDesc& g);  // throws InvalidArgument otherwise

  bool is_circle() const noexcept { return circle_; }
  const abelian::FgAbGroup& fg() const noexcept { return fg_; }

  Element zero() const;
  Element add(const Element& a, const Element& b) const;
  Element scale(const abelian::Integer& m, const Element& a) const;
  Element normalize(Element a) const;
  bool is_zero(const Element& a) const;
  // 0 means infinite.
  abelian::Integer order(const Element& a) const;
  // All x with m x = 0. m = 0 asks for the whole group. Throws
  // EnumerationLimit when the set is infinite or larger than `limit`.
  std::vector<Element> killed_by(const abelian::Integer& m, std::size_t limit) const;
  std::string format(const Element& a) const;

 private:
  bool circle_ = false;
  abelian::FgAbGroup fg_;
};

/// Homomorphism from a f.g. group, by the images of its canonical generators.
using HomImages = std::vector<Element>;

/// All homomorphisms source -> target; throws EnumerationLimit when infinite
/// or too many.
std::vector<HomImages> enumerate_homs(const abelian::FgAbGroup& source, const ElementGroup& target,
                                      std::size_t limit = 1u << 16);

/// Image of an element of `source` under a homomorphism given by generator images.
Element apply_hom(const abelian::FgAbGroup& source, const ElementGroup& target,
                  const HomImages& f, const std::vector<abelian::Integer>& x);

/// Hom(A, T) for f.g. A and T built from f.g. groups, C^x, W and countable sums.
GroupDesc hom_into(const abelian::FgAbGroup& source, const GroupDesc& target);

struct KInvariant {
  enum class Kind { Zero, Unknown, Known };
  Kind kind = Kind::Zero;
  // Known, n = 1 only: images of the canonical generators of pi0 in pi1,
  // i.e. a homomorphism pi0/2 -> pi1 = H^2_st(pi0; pi1).
  HomImages images;
  std::string tag;

  static KInvariant zero() { return {}; }
  static KInvariant unknown(std::string tag = {}) { return {Kind::Unknown, {}, std::move(tag)}; }
  static KInvariant known(HomImages images, std::string tag = {}) {
    return {Kind::Known, std::move(images), std::move(tag)};
  }
};

std::string_view to_string(KInvariant::Kind kind);

/// Spectrum with homotopy only in degrees 0 and n.
struct TwoTermSpectrum {
  std::string name;
  GroupDesc pi0;
  int n = 1;
  GroupDesc pin;
  KInvariant k;
};

/// Validates the data and normalizes k to Zero when H^{n+1}_st(pi0; pin)
/// vanishes (or when Known images are all zero).
TwoTermSpectrum make_two_term(std::string name, GroupDesc pi0, int n, GroupDesc pin,
                              KInvariant k);

enum class SplitKnown { Yes, No, Unknown };
std::string_view to_string(SplitKnown s);

/// 0 -> kernel -> pi_0 [E, F] -> quotient -> 0.
struct MappingGroupResult {
  int n = 0;
  stable::StableCohomologyGroup kernel;       // H^n_st(pi0 E; pin F)
  stable::StableCohomologyGroup obstruction;  // H^{n+1}_st(pi0 E; pin F)
  GroupDesc hom0;                             // Hom(pi0 E, pi0 F)
  GroupDesc homn;                             // Hom(pin E, pin F)
  GroupDesc quotient;                         // admissible pairs (f0, fn)
  bool constrained = false;                   // quotient is a proper subgroup
  SplitKnown split = SplitKnown::Unknown;
  std::vector<std::string> notes;

  // |kernel| * |quotient| when both are finite.
  std::optional<abelian::Integer> order() const;
};

/// Pairs (f0, fn) with fn o k_E = k_F o f0, when all Hom groups involved are
/// finite. Requires enumerable Known/Zero k-invariants (n = 1 for Known).
struct HomPair {
  HomImages f0;
  HomImages fn;
};
std::vector<HomPair> admissible_pairs(const TwoTermSpectrum& e, const TwoTermSpectrum& f,
                                      std::size_t limit = 1u << 16);

/// Throws ObstructionUndetermined when the obstruction group is nonzero and a
/// relevant k-invariant is Unknown, UndeterminedCohomology when a needed
/// stable cohomology group is outside the fact table.
MappingGroupResult mapping_group(const TwoTermSpectrum& e, const TwoTermSpectrum& f);

// ---------------------------------------------------------------- bordism

enum class Structure { SO, O };
std::string_view to_string(Structure s);

/// Oriented bordism Omega_d for d = 0..4, unoriented for d = 0..2.
GroupDesc bordism_group(int d, Structure s = Structure::SO);

struct TruncatedBordismSpectrum {
  int k = 0;  // tangential dimension
  Structure structure = Structure::SO;
  std::map<int, GroupDesc> homotopy;  // degree -> pi_degree
  KInvariant::Kind k_invariant = KInvariant::Kind::Unknown;
  std::string k_invariant_note;
  std::string citation;
};

/// Table of pi_i(Sigma^k MTSO(k)) for k = 1..4, i = 0..4, and the 2d unoriented
/// truncation. Throws NotInCatalog.
TruncatedBordismSpectrum truncated_mt_spectrum(int k, Structure s = Structure::SO);

/// The two-term spectrum pi_0 + pi_top of a catalog entry whose intermediate
/// groups vanish; throws HypothesisViolated otherwise.
TwoTermSpectrum two_term_truncation(const TruncatedBordismSpectrum& t, int top);

struct SkkGroup {
  int d = 0;
  Structure structure = Structure::SO;
  GroupDesc group;
  std::string presentation;
  std::string second_factor;  // formula tag, d = 0 mod 4
};

SkkGroup skk_group(int d, Structure s = Structure::SO);

/// SKK_2 = Z -> SKK_2^O = Z, multiplication by two.
abelian::GroupHom skk2_orientation_comparison();

/// SKK_4 coordinates are (sigma, (sigma - chi)/2) in Z^2; these convert from
/// and to (chi, sigma). Throws ParityViolation when chi and sigma differ mod 2.
std::vector<abelian::Integer> skk4_coordinates(long chi, long sigma);
std::pair<abelian::Integer, abelian::Integer> skk4_chi_sigma(const std::vector<abelian::Integer>& c);

/// pi_4(Sigma^3 MTSO(3)) = Z -> SKK_4 = Z^2: the kernel of the Euler
/// characteristic, generator -> (chi, sigma) = (0, 2), in skk4 coordinates.
abelian::GroupHom genauer_inclusion();

/// Connected cover of pi_{<=d} Sigma^d MTSO(d) shifted to degrees 0 and 1:
/// pi0 = Omega_{d-1}, pi1 = SKK_d, k-invariant Y -> Y x S^1.
TwoTermSpectrum nonextended_bordism_spectrum(int d);

/// Parses `(pi0; n; pin; k=zero|unknown)`. Throws ParseError.
TwoTermSpectrum parse_spectrum(std::string_view text);

}  // namespace invtqft::spectra
