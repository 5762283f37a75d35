#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invtqft/group_desc.hpp"
#include "invtqft/manifolds.hpp"
#include "invtqft/scalar.hpp"
#include "invtqft/spectra.hpp"
#include "invtqft/targets.hpp"

namespace invtqft::tqft {

// ---------------------------------------------------------------- classification

struct ClassificationResult {
  std::string target;
  GroupDesc kernel;
  GroupDesc quotient;
  std::vector<std::string> quotient_factors;  // C^x factors first, then pi_0(Pic)
  spectra::SplitKnown split = spectra::SplitKnown::Unknown;
  std::optional<spectra::MappingGroupResult> mapping;  // when computed by mapping_group
  bool brown_comenetz = false;  // one class per partition function
  std::optional<GroupDesc> upward_fiber;
  std::vector<std::string> notes;
};

/// Homomorphisms SKK_d -> C^x killing every Y x S^1 class, for a target whose
/// Picard spectrum is pi_0 plus C^x one degree up (vect, svect/u1).
/// Throws NotInCatalog.
ClassificationResult classify_nonextended(const targets::PicardSpectrum& target, int d);

/// Fully extended oriented 4d theories: mapping_group(pi_{<=4} Sigma^4 MTSO(4), Pic T).
/// Universal targets go through the Brown-Comenetz property. Throws
/// HypothesisViolated, ObstructionUndetermined.
ClassificationResult classify_extended(const targets::PicardSpectrum& target);

struct NonextendedClass4d {
  Scalar lambda1;
  Scalar lambda2;
  friend bool operator==(const NonextendedClass4d&, const NonextendedClass4d&) = default;
};

/// lambda1^sigma lambda2^((chi - sigma)/2).
Scalar eval_nonextended(const NonextendedClass4d& cls, const manifolds::Manifold4& m);
Scalar eval_nonextended_at(const NonextendedClass4d& cls, long chi, long sigma);

struct ExtendedClass4d {
  Scalar lambda1;
  Scalar lambda2;
  std::optional<targets::WittElement> picard_class;  // nullopt: pi_0(Pic T) = 0
  int z6 = 0;  // torsor coordinate, no preferred zero

  NonextendedClass4d forget() const { return {lambda1, lambda2}; }
  friend bool operator==(const ExtendedClass4d&, const ExtendedClass4d&) = default;
};

/// All fully extended classes over (lambda1, lambda2, picard_class): one per
/// element of the classification kernel, so 6 in general and 1 for U_4.
std::vector<ExtendedClass4d> enumerate_point_extensions(
    const targets::PicardSpectrum& target, const std::optional<targets::WittElement>& picard_class,
    const Scalar& lambda1, const Scalar& lambda2);

// ---------------------------------------------------------------- Crane-Yetter

struct ModularData {
  Scalar global_dim;       // positive real >= 1
  mpq_class central_charge;  // mod 8
};

/// Throws InvalidModularData when dim < 1 or dim is not a positive real.
ModularData make_modular_data(const Scalar& global_dim, const mpq_class& central_charge);

/// lambda2 = dim, lambda1 = sqrt(dim) e(c/8) with the positive square root.
NonextendedClass4d crane_yetter_class(const ModularData& md);
/// dim^(chi/2) e(c sigma / 8), straight from the formula.
Scalar eval_crane_yetter(const ModularData& md, const manifolds::Manifold4& m);

/// Z(S^4) positive and X -> Z(X) Z(S^4)^(-chi/2) unitary: |lambda1|^2 = |lambda2|
/// and lambda2 has phase 0.
bool is_reflection_positive(const NonextendedClass4d& cls);

// ---------------------------------------------------------------- 2d

enum class Target2d { Alg, SAlg };
std::string_view to_string(Target2d t);
Target2d parse_target_2d(std::string_view s);  // alg | salg, throws NotInCatalog

struct Frobenius2dClass {
  Scalar lambda;              // trace of 1 in the Frobenius algebra C
  std::optional<int> sign;    // stellar structure (+1/-1) for unoriented theories
  bool super = false;
};

/// Equality of classes: (C, lambda) ~ (C, -lambda) in sAlg, and in the
/// unoriented super case (lambda, s) ~ (-lambda, -s).
bool equivalent(const Frobenius2dClass& a, const Frobenius2dClass& b);

/// lambda^chi(S).
Scalar eval_2d(const Frobenius2dClass& cls, const manifolds::Surface& s);

struct Classification2d {
  Target2d target = Target2d::Alg;
  spectra::Structure structure = spectra::Structure::SO;
  ClassificationResult result;
  std::optional<bool> nonsplit;  // decided for (Alg, SO)
  std::string class_model;
  std::vector<std::string> notes;
};

Classification2d classify_2d(Target2d target, spectra::Structure structure);

/// 0 -> Z/2 -> C^x -> C^x -> 0 by squaring has no homomorphic section; the
/// witness is -1, whose square roots +-i both square to -1 rather than to the
/// image of 1. Returns true when no section exists.
bool squaring_sequence_nonsplit();

struct PullbackCheck {
  long samples = 0;           // |mu_N x {+-}|
  bool commutes = false;
  bool bijective = false;     // onto {(a, b) : a^2 = b^2}
  long kernel_left = 0;       // |ker (lambda, s) -> lambda|
  long kernel_right = 0;      // |ker squaring|
  bool holds() const { return commutes && bijective && kernel_left == 2 && kernel_right == 2; }
};

/// The square (lambda, s) -> lambda, (lambda, s) -> lambda s, squaring on both
/// oriented sides, restricted to N-th roots of unity (N even).
PullbackCheck pullback_check(long n);

struct CollapseCheck {
  long classes_before = 0;
  long classes_after = 0;
  bool free_action = false;  // no fixed points
};

/// Orbits of (lambda, s) ~ (-lambda, -s) on mu_N x {+-} (N even).
CollapseCheck super_unoriented_collapse(long n);

// ---------------------------------------------------------------- partial structure

/// k = 1: pi_0(Pic T); k = 3: Z/6-extension of pi_0(Pic T) x C^x with the
/// upward fiber to SO(4). Throws UnsupportedK for k = 2.
ClassificationResult classify_so_k(const targets::PicardSpectrum& target, int k);

/// Value of an oriented class on the generator of pi_4 Sigma^3 MTSO(3),
/// computed through its image in SKK_4.
Scalar restrict_to_so3(const NonextendedClass4d& cls);

struct PartialExtensionAmbiguity {
  GroupDesc pi0_pic;
  GroupDesc z6;
  bool restrictions_isomorphic = false;  // truncations pi_{[k,4]} agree for k = 1..4
  bool unique_extension = false;
  std::vector<std::string> notes;
};

PartialExtensionAmbiguity partial_extension_ambiguity(const targets::PicardSpectrum& target);

}  // namespace invtqft::tqft
