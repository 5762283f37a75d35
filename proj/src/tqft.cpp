#include "invtqft/tqft.hpp"

#include <set>

#include "invtqft/error.hpp"

namespace invtqft::tqft {

using abelian::FgAbGroup;
using abelian::Integer;
using spectra::SplitKnown;
using spectra::Structure;

namespace {

void append_factors(std::vector<std::string>& out, const GroupDesc& g) {
  for (auto& f : g.factors())
    if (f != "0") out.push_back(std::move(f));
}

ClassificationResult from_mapping(std::string target, spectra::MappingGroupResult r) {
  ClassificationResult c;
  c.target = std::move(target);
  c.kernel = r.kernel.group();
  c.quotient = r.quotient;
  // C^x factors (top degree) first, then pi_0
  if (r.constrained) {
    append_factors(c.quotient_factors, r.quotient);
  } else {
    append_factors(c.quotient_factors, r.homn);
    append_factors(c.quotient_factors, r.hom0);
  }
  c.split = r.split;
  c.notes = r.notes;
  c.mapping = std::move(r);
  return c;
}

ClassificationResult brown_comenetz(std::string target, const GroupDesc& top_homotopy, int degree) {
  ClassificationResult c;
  c.target = std::move(target);
  const auto fg = top_homotopy.as_fg();
  if (!fg) throw Error(ErrorKind::InvalidArgument, "top homotopy must be finitely generated");
  c.quotient = spectra::hom_into(*fg, GroupDesc::circle());
  append_factors(c.quotient_factors, c.quotient);
  c.split = SplitKnown::Yes;
  c.brown_comenetz = true;
  c.notes.push_back("universal target: pi_0 [X, Sigma^" + std::to_string(degree) +
                    " IC^x] = Hom(pi_" + std::to_string(degree) +
                    " X, C^x), exactly one class per partition function");
  return c;
}

void require_hypotheses(const targets::PicardSpectrum& target) {
  const auto h = targets::check_hypotheses(target);
  if (!h.holds())
    throw Error(ErrorKind::HypothesisViolated, "target " + target.name + ": " + h.reason());
}

bool universal_4d(const targets::PicardSpectrum& t) { return t.brown_comenetz && t.dimension == 4; }

}  // namespace

// ---------------------------------------------------------------- classification

ClassificationResult classify_nonextended(const targets::PicardSpectrum& target, int d) {
  spectra::TwoTermSpectrum f;
  try {
    f = target.two_term();
  } catch (const Error&) {
    throw Error(ErrorKind::NotInCatalog,
                "nonextended classification needs a target with pi_1 = C^x, got " + target.name);
  }
  if (f.n != 1 || !f.pin.is_circle())
    throw Error(ErrorKind::NotInCatalog,
                "nonextended classification needs a target with pi_1 = C^x, got " + target.name);
  const auto e = spectra::nonextended_bordism_spectrum(d);
  auto c = from_mapping(target.name, spectra::mapping_group(e, f));
  c.notes.push_back("homomorphisms SKK_" + std::to_string(d) +
                    " -> C^x compatible with Y -> Y x S^1");
  return c;
}

ClassificationResult classify_extended(const targets::PicardSpectrum& target) {
  const auto mt = spectra::truncated_mt_spectrum(4);
  if (universal_4d(target)) return brown_comenetz(target.name, mt.homotopy.at(4), 4);
  require_hypotheses(target);
  const auto e = spectra::two_term_truncation(mt, 4);
  return from_mapping(target.name, spectra::mapping_group(e, target.two_term()));
}

Scalar eval_nonextended_at(const NonextendedClass4d& cls, long chi, long sigma) {
  if ((chi - sigma) % 2 != 0)
    throw Error(ErrorKind::ParityViolation, "chi and sigma differ mod 2");
  return cls.lambda1.pow(sigma) * cls.lambda2.pow((chi - sigma) / 2);
}

Scalar eval_nonextended(const NonextendedClass4d& cls, const manifolds::Manifold4& m) {
  return eval_nonextended_at(cls, m.chi(), m.sigma());
}

std::vector<ExtendedClass4d> enumerate_point_extensions(
    const targets::PicardSpectrum& target, const std::optional<targets::WittElement>& picard_class,
    const Scalar& lambda1, const Scalar& lambda2) {
  const auto c = classify_extended(target);
  const auto order = c.kernel.finite_order();
  if (!order || *order > 64)
    throw Error(ErrorKind::EnumerationLimit, "classification kernel is not small and finite");
  std::optional<targets::WittElement> cls = picard_class;
  const GroupDesc& pi0 = target.pi(0);
  if (pi0.is_witt()) {
    if (!cls) cls = targets::WittElement();
  } else if (pi0.is_trivial()) {
    if (cls && !cls->is_zero())
      throw Error(ErrorKind::InvalidArgument, "pi_0(Pic " + target.name + ") is trivial");
    cls.reset();
  } else {
    throw Error(ErrorKind::InvalidArgument,
                "picard classes are modelled for W and trivial pi_0 only");
  }
  std::vector<ExtendedClass4d> out;
  for (long z = 0; z < order->get_si(); ++z) out.push_back({lambda1, lambda2, cls, static_cast<int>(z)});
  return out;
}

// ---------------------------------------------------------------- Crane-Yetter

ModularData make_modular_data(const Scalar& global_dim, const mpq_class& central_charge) {
  if (global_dim.phase() != 0)
    throw Error(ErrorKind::InvalidModularData, "global dimension must be a positive real");
  bool at_least_one;
  if (auto r = global_dim.rational_magnitude()) at_least_one = *r >= 1;
  else at_least_one = global_dim.log_magnitude() >= -1e-12L;
  if (!at_least_one)
    throw Error(ErrorKind::InvalidModularData,
                "global dimension " + global_dim.to_string() + " is below 1");
  mpq_class c = central_charge / 8;
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
  c = central_charge - mpq_class(fl) * 8;
  c.canonicalize();
  return {global_dim, c};
}

NonextendedClass4d crane_yetter_class(const ModularData& md) {
  const Scalar root = md.global_dim.magnitude().pow(mpq_class(1, 2));
  return {root * Scalar::root_of_unity(md.central_charge / 8), md.global_dim};
}

Scalar eval_crane_yetter(const ModularData& md, const manifolds::Manifold4& m) {
  mpq_class half_chi(m.chi(), 2);
  half_chi.canonicalize();
  mpq_class turns = md.central_charge * m.sigma() / 8;
  return md.global_dim.pow(half_chi) * Scalar::root_of_unity(turns);
}

bool is_reflection_positive(const NonextendedClass4d& cls) {
  if (cls.lambda2.phase() != 0) return false;
  return (cls.lambda1.magnitude().pow(2L) / cls.lambda2).magnitude_is_one();
}

// ---------------------------------------------------------------- 2d

std::string_view to_string(Target2d t) { return t == Target2d::Alg ? "alg" : "salg"; }

Target2d parse_target_2d(std::string_view s) {
  if (s == "alg") return Target2d::Alg;
  if (s == "salg") return Target2d::SAlg;
  throw Error(ErrorKind::NotInCatalog, "2d targets are alg and salg, got '" + std::string(s) + "'");
}

bool equivalent(const Frobenius2dClass& a, const Frobenius2dClass& b) {
  if (a.super != b.super || a.sign.has_value() != b.sign.has_value()) return false;
  const bool same = a.lambda == b.lambda && a.sign == b.sign;
  if (same || !a.super) return same;
  std::optional<int> flipped;
  if (a.sign) flipped = -*a.sign;
  return -a.lambda == b.lambda && flipped == b.sign;
}

Scalar eval_2d(const Frobenius2dClass& cls, const manifolds::Surface& s) {
  return cls.lambda.pow(s.chi());
}

bool squaring_sequence_nonsplit() {
  // A section s of squaring has s(1) = 1 and s(-1)^2 = -1, but also
  // s(-1)^2 = s((-1)^2) = s(1) = 1.
  const Scalar one;
  const Scalar minus_one = Scalar::rational(-1);
  const Scalar root = minus_one.pow(mpq_class(1, 2));
  for (const Scalar& c : {root, -root}) {
    if (!(c * c == minus_one)) continue;  // not a preimage
    if (c * c == one) return false;       // consistent section value
  }
  return true;
}

PullbackCheck pullback_check(long n) {
  if (n < 2 || n % 2 != 0) throw Error(ErrorKind::InvalidArgument, "pullback check needs even N");
  PullbackCheck r;
  std::vector<Scalar> mu;
  for (long j = 0; j < n; ++j) mu.push_back(Scalar::root_of_unity(mpq_class(j, n)));
  const Scalar one;
  r.commutes = true;
  std::set<std::pair<std::string, std::string>> image;
  for (const auto& lambda : mu) {
    for (int s : {1, -1}) {
      const Scalar sign = s == 1 ? one : Scalar::rational(-1);
      const Scalar a = lambda;         // to pi_0 ITQFT(Alg)
      const Scalar b = lambda * sign;  // to pi_0 ITQFT_{1,2}^O(Alg)
      if (!(a.pow(2L) == b.pow(2L))) r.commutes = false;
      image.emplace(a.to_string(), b.to_string());
      if (a == one) ++r.kernel_left;
      ++r.samples;
    }
  }
  std::set<std::pair<std::string, std::string>> fibre;
  for (const auto& u : mu)
    for (const auto& v : mu)
      if (u.pow(2L) == v.pow(2L)) fibre.emplace(u.to_string(), v.to_string());
  r.bijective = static_cast<long>(image.size()) == r.samples && image == fibre;
  for (const auto& u : mu)
    if (u.pow(2L) == one) ++r.kernel_right;
  return r;
}

CollapseCheck super_unoriented_collapse(long n) {
  if (n < 2 || n % 2 != 0) throw Error(ErrorKind::InvalidArgument, "collapse check needs even N");
  CollapseCheck r;
  r.free_action = true;
  std::set<std::string> orbits;
  for (long j = 0; j < n; ++j) {
    for (int s : {1, -1}) {
      Frobenius2dClass x{Scalar::root_of_unity(mpq_class(j, n)), s, true};
      Frobenius2dClass y{-x.lambda, -s, true};
      if (!equivalent(x, y)) throw Error(ErrorKind::InvalidArgument, "identification failed");
      if (x.lambda == y.lambda && x.sign == y.sign) r.free_action = false;
      auto key = [](const Frobenius2dClass& c) { return c.lambda.to_string() + "|" + std::to_string(*c.sign); };
      orbits.insert(std::min(key(x), key(y)));
      ++r.classes_before;
    }
  }
  r.classes_after = static_cast<long>(orbits.size());
  return r;
}

Classification2d classify_2d(Target2d target, Structure structure) {
  Classification2d c;
  c.target = target;
  c.structure = structure;
  const auto mt = spectra::truncated_mt_spectrum(2, structure);
  const std::string name = std::string(to_string(target)) + "/" + std::string(spectra::to_string(structure));
  if (target == Target2d::Alg) {
    const auto e = spectra::two_term_truncation(mt, 2);
    c.result = from_mapping(name, spectra::mapping_group(e, targets::picard("alg").two_term()));
    if (structure == Structure::SO) {
      c.nonsplit = squaring_sequence_nonsplit();
      if (*c.nonsplit) c.result.split = SplitKnown::No;
      c.class_model = "lambda in C^x (trace of 1); lambda and -lambda share a partition function";
      c.notes.push_back("quotient map lambda -> lambda^2, kernel {+-1}");
    } else {
      c.nonsplit = false;
      c.class_model = "(lambda, s) in C^x x {+-}; maps (lambda, s) -> lambda and (lambda, s) -> lambda s";
      c.notes.push_back(mt.k_invariant_note);
    }
  } else {
    c.result = brown_comenetz(name, mt.homotopy.at(2), 2);
    if (structure == Structure::SO) {
      c.class_model = "lambda ~ -lambda via the odd line";
    } else {
      c.class_model = "(lambda, s) ~ (-lambda, -s) via the odd line";
    }
  }
  return c;
}

// ---------------------------------------------------------------- partial structure

Scalar restrict_to_so3(const NonextendedClass4d& cls) {
  const auto g = spectra::genauer_inclusion();
  const auto coords = g.apply({Integer(1)});
  const auto [chi, sigma] = spectra::skk4_chi_sigma(coords);
  return eval_nonextended_at(cls, chi.get_si(), sigma.get_si());
}

ClassificationResult classify_so_k(const targets::PicardSpectrum& target, int k) {
  if (k == 2) {
    const auto mt = spectra::truncated_mt_spectrum(2);
    throw Error(ErrorKind::UnsupportedK,
                "the classification does not apply to k = 2 because pi_2(Sigma^2 MTSO(2)) = " +
                    mt.homotopy.at(2).to_string() + " is nonzero");
  }
  if (k != 1 && k != 3) throw Error(ErrorKind::InvalidArgument, "k must be 1 or 3");
  const bool universal = universal_4d(target);
  if (!universal) require_hypotheses(target);
  const auto mt = spectra::truncated_mt_spectrum(k);
  const std::string name = target.name + "/SO(" + std::to_string(k) + ")";
  if (k == 1) {
    // Sigma MTSO(1) is the sphere spectrum, so maps out of it are pi_0.
    const auto& stems = targets::sphere_stems();
    for (int i = 0; i <= 4; ++i)
      if (!(mt.homotopy.at(i) == GroupDesc(stems.at(i))))
        throw Error(ErrorKind::InvalidArgument, "Sigma MTSO(1) table disagrees with the stems");
    ClassificationResult c;
    c.target = name;
    c.quotient = target.pi(0);
    append_factors(c.quotient_factors, c.quotient);
    c.split = SplitKnown::Yes;
    c.notes.push_back("Sigma MTSO(1) = S, so pi_0 [S, Pic T] = pi_0(Pic T)");
    return c;
  }
  ClassificationResult c =
      universal ? brown_comenetz(name, mt.homotopy.at(4), 4)
                : from_mapping(name, spectra::mapping_group(spectra::two_term_truncation(mt, 4),
                                                           target.two_term()));
  // Upward extensions: Hom(coker(pi_4 Sigma^3 MTSO(3) -> SKK_4), C^x).
  const auto coker = spectra::genauer_inclusion().image_cokernel();
  c.upward_fiber = spectra::hom_into(coker, GroupDesc::circle());
  c.notes.push_back("upward extensions to SO(4) are the fibre of restriction along "
                    "pi_4 Sigma^3 MTSO(3) -> SKK_4, generator -> (chi, sigma) = (0, 2)");
  return c;
}

PartialExtensionAmbiguity partial_extension_ambiguity(const targets::PicardSpectrum& target) {
  PartialExtensionAmbiguity r;
  const auto c = classify_extended(target);
  r.pi0_pic = target.pi(0);
  r.z6 = c.kernel;
  const auto mt = spectra::truncated_mt_spectrum(4);
  r.restrictions_isomorphic = true;
  for (int j = 1; j < 4; ++j)
    if (!mt.homotopy.at(j).is_trivial()) r.restrictions_isomorphic = false;
  r.unique_extension = c.brown_comenetz || (r.pi0_pic.is_trivial() && r.z6.is_trivial());
  if (r.restrictions_isomorphic)
    r.notes.push_back("pi_1 = pi_2 = pi_3 = 0 for Sigma^4 MTSO(4): restriction to k-extended "
                      "theories, k = 1..4, is an isomorphism on the nonextended part");
  if (c.brown_comenetz) r.notes.push_back("universal target: the extension is unique");
  else r.notes.push_back("full extension ambiguity is pi_0(Pic T) x kernel");
  return r;
}

}  // namespace invtqft::tqft
