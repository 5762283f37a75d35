#include "invtqft/spectra.hpp"

#include <cctype>
#include <numeric>

#include "invtqft/error.hpp"

namespace invtqft::spectra {

using abelian::CoefficientGroup;
using abelian::FgAbGroup;
using abelian::Integer;

namespace {

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm_of(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

mpq_class mod_one(mpq_class q) {
  q.canonicalize();
  mpz_class floor_q;
  mpz_fdiv_q(floor_q.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  q -= floor_q;
  q.canonicalize();
  return q;
}

}  // namespace

// ---------------------------------------------------------------- elements

ElementGroup::ElementGroup(const GroupDesc& g) {
  if (g.is_circle()) {
    circle_ = true;
    return;
  }
  const auto fg = g.as_fg();
  if (!fg)
    throw Error(ErrorKind::InvalidArgument,
                "element arithmetic needs a f.g. group or Cx, got " + g.to_string());
  fg_ = *fg;
}

Element ElementGroup::zero() const {
  Element e;
  if (!circle_) e.coords.assign(fg_.generator_count(), 0);
  return e;
}

Element ElementGroup::normalize(Element a) const {
  if (circle_) {
    a.phase = mod_one(a.phase);
    a.coords.clear();
  } else {
    if (a.coords.size() != fg_.generator_count())
      throw Error(ErrorKind::InvalidArgument, "element has the wrong number of coordinates");
    a.coords = fg_.normalize(std::move(a.coords));
    a.phase = 0;
  }
  return a;
}

Element ElementGroup::add(const Element& a, const Element& b) const {
  Element out = a;
  if (circle_) {
    out.phase = a.phase + b.phase;
  } else {
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords.at(i);
  }
  return normalize(std::move(out));
}

Element ElementGroup::scale(const Integer& m, const Element& a) const {
  Element out = a;
  if (circle_) {
    out.phase = a.phase * mpq_class(m);
  } else {
    for (auto& c : out.coords) c *= m;
  }
  return normalize(std::move(out));
}

bool ElementGroup::is_zero(const Element& a) const { return normalize(a) == zero(); }

Integer ElementGroup::order(const Element& a) const {
  if (circle_) return mod_one(a.phase).get_den();
  return fg_.element_order(a.coords);
}

std::vector<Element> ElementGroup::killed_by(const Integer& m, std::size_t limit) const {
  if (circle_) {
    if (m == 0) throw Error(ErrorKind::EnumerationLimit, "Cx has infinitely many elements");
    if (m > limit) throw Error(ErrorKind::EnumerationLimit, "too many elements killed by " + m.get_str());
    std::vector<Element> out;
    for (unsigned long j = 0; j < m.get_ui(); ++j) {
      Element e;
      e.phase = mpq_class(j, m.get_ui());
      out.push_back(normalize(std::move(e)));
    }
    return out;
  }
  // Per generator: the admissible coordinates are multiples of a step.
  std::vector<std::pair<Integer, Integer>> ranges;  // (step, count)
  Integer total = 1;
  for (std::size_t i = 0; i < fg_.generator_count(); ++i) {
    const Integer d = fg_.generator_order(i);
    if (d == 0) {
      if (m == 0) throw Error(ErrorKind::EnumerationLimit, fg_.to_string() + " is infinite");
      ranges.emplace_back(0, 1);
      continue;
    }
    const Integer count = m == 0 ? d : gcd_of(d, m);
    ranges.emplace_back(d / count, count);
    total *= count;
  }
  if (total > limit)
    throw Error(ErrorKind::EnumerationLimit,
                "enumeration of " + total.get_str() + " elements exceeds the limit");
  std::vector<Element> out;
  std::vector<Integer> digit(ranges.size(), 0);
  while (true) {
    Element e;
    for (std::size_t i = 0; i < ranges.size(); ++i) e.coords.push_back(digit[i] * ranges[i].first);
    out.push_back(std::move(e));
    std::size_t i = 0;
    for (; i < ranges.size(); ++i) {
      if (++digit[i] < ranges[i].second) break;
      digit[i] = 0;
    }
    if (i == ranges.size()) break;
  }
  return out;
}

std::string ElementGroup::format(const Element& a) const {
  if (circle_) return "e(" + mod_one(a.phase).get_str() + ")";
  std::string s = "(";
  for (std::size_t i = 0; i < a.coords.size(); ++i) s += (i ? "," : "") + a.coords[i].get_str();
  return s + ")";
}

std::vector<HomImages> enumerate_homs(const FgAbGroup& source, const ElementGroup& target,
                                      std::size_t limit) {
  std::vector<std::vector<Element>> choices;
  Integer total = 1;
  for (std::size_t i = 0; i < source.generator_count(); ++i) {
    choices.push_back(target.killed_by(source.generator_order(i), limit));
    total *= choices.back().size();
    if (total > limit)
      throw Error(ErrorKind::EnumerationLimit, "too many homomorphisms to enumerate");
  }
  std::vector<HomImages> out;
  std::vector<std::size_t> digit(choices.size(), 0);
  while (true) {
    HomImages f;
    for (std::size_t i = 0; i < choices.size(); ++i) f.push_back(choices[i][digit[i]]);
    out.push_back(std::move(f));
    std::size_t i = 0;
    for (; i < choices.size(); ++i) {
      if (++digit[i] < choices[i].size()) break;
      digit[i] = 0;
    }
    if (i == choices.size()) break;
  }
  return out;
}

Element apply_hom(const FgAbGroup& source, const ElementGroup& target, const HomImages& f,
                  const std::vector<Integer>& x) {
  if (f.size() != source.generator_count() || x.size() != source.generator_count())
    throw Error(ErrorKind::InvalidArgument, "homomorphism and element sizes disagree");
  Element out = target.zero();
  for (std::size_t i = 0; i < x.size(); ++i) out = target.add(out, target.scale(x[i], f[i]));
  return out;
}

GroupDesc hom_into(const FgAbGroup& a, const GroupDesc& t) {
  GroupDesc out(abelian::hom_group(a, t.fg_part()));
  for (std::size_t i = 0; i < t.circle_count(); ++i)
    out = direct_sum(out, GroupDesc::from(abelian::hom_to_circle(a)));
  for (std::size_t i = 0; i < t.witt_count(); ++i) {
    // W = Z/32 + sum_N(Z + Z/2 + Z/4)
    out = direct_sum(out, GroupDesc::witt(a.free_rank()));
    for (const Integer& d : a.invariant_factors()) {
      out = direct_sum(out, GroupDesc(FgAbGroup::cyclic(gcd_of(d, 32))));
      out = direct_sum(out, GroupDesc::countable_sum(FgAbGroup::from_cyclic_orders(
                                0, {gcd_of(d, 2), gcd_of(d, 4)})));
    }
  }
  for (const FgAbGroup& s : t.countable_sums())
    out = direct_sum(out, GroupDesc::countable_sum(abelian::hom_group(a, s)));
  return out;
}

// ---------------------------------------------------------------- two-term spectra

std::string_view to_string(KInvariant::Kind kind) {
  switch (kind) {
    case KInvariant::Kind::Zero: return "zero";
    case KInvariant::Kind::Unknown: return "unknown";
    case KInvariant::Kind::Known: return "known";
  }
  return "?";
}

std::string_view to_string(SplitKnown s) {
  switch (s) {
    case SplitKnown::Yes: return "yes";
    case SplitKnown::No: return "no";
    case SplitKnown::Unknown: return "unknown";
  }
  return "?";
}

TwoTermSpectrum make_two_term(std::string name, GroupDesc pi0, int n, GroupDesc pin,
                              KInvariant k) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "a two-term spectrum needs n >= 1");
  if (k.kind == KInvariant::Kind::Known) {
    const auto a = pi0.as_fg();
    if (n != 1 || !a)
      throw Error(ErrorKind::InvalidArgument,
                  "explicit k-invariants are supported for n = 1 with f.g. pi0 only");
    const ElementGroup target(pin);
    if (k.images.size() != a->generator_count())
      throw Error(ErrorKind::InvalidArgument, "k-invariant needs one image per generator of pi0");
    bool all_zero = true;
    for (std::size_t i = 0; i < k.images.size(); ++i) {
      k.images[i] = target.normalize(k.images[i]);
      const Integer d = a->generator_order(i);
      // H^2_st(A; B) = Hom(A/2A, B): images are killed by 2 and by the generator order.
      if (!target.is_zero(target.scale(2, k.images[i])) ||
          (d != 0 && !target.is_zero(target.scale(d, k.images[i]))))
        throw Error(ErrorKind::InvalidArgument,
                    "k-invariant image " + target.format(k.images[i]) +
                        " does not define a map " + a->to_string() + "/2 -> " + pin.to_string());
      all_zero = all_zero && target.is_zero(k.images[i]);
    }
    if (all_zero) k = KInvariant{KInvariant::Kind::Zero, {}, k.tag};
  } else if (k.kind == KInvariant::Kind::Unknown && n + 1 <= stable::kMaxDegree) {
    if (const auto coeff = pin.as_coefficients()) {
      const auto ambient = stable::stable_cohomology(pi0, *coeff, n + 1);
      if (ambient.is_zero()) k = KInvariant{KInvariant::Kind::Zero, {}, k.tag};
    }
  }
  return {std::move(name), std::move(pi0), n, std::move(pin), std::move(k)};
}

std::optional<Integer> MappingGroupResult::order() const {
  if (!kernel.is_determined()) return std::nullopt;
  const auto a = kernel.group().finite_order();
  const auto b = quotient.finite_order();
  if (!a || !b) return std::nullopt;
  return *a * *b;
}

namespace {

FgAbGroup require_fg(const GroupDesc& g, const std::string& what) {
  const auto fg = g.as_fg();
  if (!fg)
    throw Error(ErrorKind::UndeterminedCohomology,
                what + " = " + g.to_string() + " is not finitely generated");
  return *fg;
}

// Whether fn o k_E and k_F o f0 vanish identically.
struct ConditionShape {
  bool e_side_vanishes;
  bool f_side_vanishes;
};

ConditionShape condition_shape(const TwoTermSpectrum& e, const TwoTermSpectrum& f,
                               bool hom0_trivial, bool homn_trivial) {
  return {e.k.kind == KInvariant::Kind::Zero || homn_trivial,
          f.k.kind == KInvariant::Kind::Zero || hom0_trivial};
}

HomImages images_of(const KInvariant& k, std::size_t generators, const ElementGroup& target) {
  if (k.kind == KInvariant::Kind::Known) return k.images;
  return HomImages(generators, target.zero());
}

}  // namespace

std::vector<HomPair> admissible_pairs(const TwoTermSpectrum& e, const TwoTermSpectrum& f,
                                      std::size_t limit) {
  if (e.n != f.n) throw Error(ErrorKind::InvalidArgument, "spectra have different top degrees");
  const FgAbGroup e0 = require_fg(e.pi0, "pi0 E");
  const FgAbGroup en = require_fg(e.pin, "pin E");
  const ElementGroup f0_group(f.pi0), fn_group(f.pin), en_group(e.pin);
  const auto homs0 = enumerate_homs(e0, f0_group, limit);
  const auto homsn = enumerate_homs(en, fn_group, limit);
  const ConditionShape shape = condition_shape(e, f, homs0.size() == 1, homsn.size() == 1);
  const bool vacuous = shape.e_side_vanishes && shape.f_side_vanishes;
  if (!vacuous && ((e.k.kind == KInvariant::Kind::Unknown && !shape.e_side_vanishes) ||
                   (f.k.kind == KInvariant::Kind::Unknown && !shape.f_side_vanishes)))
    throw Error(ErrorKind::ObstructionUndetermined,
                "the compatibility condition involves an unknown k-invariant");

  std::vector<HomPair> out;
  if (vacuous) {
    for (const auto& a : homs0)
      for (const auto& b : homsn) out.push_back({a, b});
    return out;
  }
  const FgAbGroup f0 = f0_group.fg();
  const HomImages ke = images_of(e.k, e0.generator_count(), en_group);
  const HomImages kf = images_of(f.k, f0.generator_count(), fn_group);
  for (const auto& a : homs0) {
    for (const auto& b : homsn) {
      bool ok = true;
      for (std::size_t i = 0; ok && i < e0.generator_count(); ++i) {
        const Element lhs = apply_hom(en, fn_group, b, ke[i].coords);
        const Element rhs = apply_hom(f0, fn_group, kf, a[i].coords);
        ok = lhs == rhs;
      }
      if (ok) out.push_back({a, b});
    }
  }
  return out;
}

MappingGroupResult mapping_group(const TwoTermSpectrum& e, const TwoTermSpectrum& f) {
  if (e.n != f.n)
    throw Error(ErrorKind::InvalidArgument, "mapping_group needs equal top degrees, got " +
                                                std::to_string(e.n) + " and " + std::to_string(f.n));
  const int n = e.n;
  const auto coeff = f.pin.as_coefficients();
  if (!coeff)
    throw Error(ErrorKind::UndeterminedCohomology,
                "pin F = " + f.pin.to_string() + " is not a supported coefficient group");

  MappingGroupResult r;
  r.n = n;
  r.kernel = stable::stable_cohomology(e.pi0, *coeff, n);
  r.kernel.group();  // throws when undetermined
  if (n + 1 <= stable::kMaxDegree) {
    r.obstruction = stable::stable_cohomology(e.pi0, *coeff, n + 1);
  } else {
    r.obstruction = {n + 1, e.pi0, *coeff,
                     stable::Undetermined{"degree above the tabulated range"}, {}, {}};
  }
  const FgAbGroup e0 = require_fg(e.pi0, "pi0 E");
  const FgAbGroup en = require_fg(e.pin, "pin E");
  r.hom0 = hom_into(e0, f.pi0);
  r.homn = hom_into(en, f.pin);

  const ConditionShape shape = condition_shape(e, f, r.hom0.is_trivial(), r.homn.is_trivial());
  const bool obstruction_zero = r.obstruction.is_zero();
  if (obstruction_zero) {
    r.notes.push_back("obstruction group H^" + std::to_string(n + 1) + "_st(" +
                      e.pi0.to_string() + "; " + f.pin.to_string() + ") = 0");
  }
  if (obstruction_zero || (shape.e_side_vanishes && shape.f_side_vanishes)) {
    r.quotient = direct_sum(r.hom0, r.homn);
    if (!obstruction_zero) r.notes.push_back("compatibility condition holds for every pair");
  } else {
    if (!r.obstruction.is_determined())
      throw Error(ErrorKind::UndeterminedCohomology,
                  "obstruction group is undetermined: " + r.obstruction.to_string());
    const bool e_unknown = e.k.kind == KInvariant::Kind::Unknown && !shape.e_side_vanishes;
    const bool f_unknown = f.k.kind == KInvariant::Kind::Unknown && !shape.f_side_vanishes;
    if (e_unknown || f_unknown)
      throw Error(ErrorKind::ObstructionUndetermined,
                  "obstruction group " + r.obstruction.to_string() + " is nonzero and the " +
                      (e_unknown ? "source" : "target") + " k-invariant is unknown");
    const auto pairs = admissible_pairs(e, f);
    const ElementGroup f0_group(f.pi0), fn_group(f.pin);
    auto killed = [&](const HomPair& p, const Integer& m) {
      for (const auto& x : p.f0)
        if (!f0_group.is_zero(f0_group.scale(m, x))) return false;
      for (const auto& x : p.fn)
        if (!fn_group.is_zero(fn_group.scale(m, x))) return false;
      return true;
    };
    Integer exponent = 1;
    for (const auto& p : pairs) {
      for (const auto& x : p.f0) exponent = lcm_of(exponent, f0_group.order(x));
      for (const auto& x : p.fn) exponent = lcm_of(exponent, fn_group.order(x));
    }
    r.quotient = GroupDesc(abelian::finite_group_from_kill_counts(exponent, [&](const Integer& m) {
      Integer count = 0;
      for (const auto& p : pairs)
        if (killed(p, m)) ++count;
      return count;
    }));
    const auto full = direct_sum(r.hom0, r.homn).finite_order();
    r.constrained = !full || Integer(pairs.size()) != *full;
    r.notes.push_back("quotient cut out by fn o k_E = k_F o f0 in " + r.obstruction.to_string());
  }

  if (r.kernel.group().is_trivial() || r.quotient.is_trivial()) {
    r.split = SplitKnown::Yes;
  } else if (e.k.kind == KInvariant::Kind::Zero && f.k.kind == KInvariant::Kind::Zero) {
    r.split = SplitKnown::Yes;
    r.notes.push_back("both spectra split, so the sequence splits");
  } else {
    r.split = SplitKnown::Unknown;
  }
  return r;
}

// ---------------------------------------------------------------- bordism catalog

std::string_view to_string(Structure s) { return s == Structure::SO ? "so" : "o"; }

GroupDesc bordism_group(int d, Structure s) {
  if (s == Structure::SO) {
    switch (d) {
      case 0: return FgAbGroup::free(1);
      case 1: case 2: case 3: return FgAbGroup();
      case 4: return FgAbGroup::free(1);  // signature
      default: break;
    }
  } else {
    switch (d) {
      case 0: return FgAbGroup::cyclic(2);
      case 1: return FgAbGroup();
      case 2: return FgAbGroup::cyclic(2);  // RP^2
      default: break;
    }
  }
  throw Error(ErrorKind::NotInCatalog, "bordism group Omega_" + std::to_string(d) + "^" +
                                           std::string(to_string(s)) + " is not in the catalog");
}

TruncatedBordismSpectrum truncated_mt_spectrum(int k, Structure s) {
  auto row = [](std::initializer_list<FgAbGroup> groups) {
    std::map<int, GroupDesc> m;
    int i = 0;
    for (const auto& g : groups) m[i++] = GroupDesc(g);
    return m;
  };
  const FgAbGroup z = FgAbGroup::free(1), zero;
  TruncatedBordismSpectrum t;
  t.k = k;
  t.structure = s;
  t.citation = "homotopy groups of Sigma^k MTSO(k): bordism below degree k, SKK in degree k, "
               "higher groups by spectral sequence";
  if (s == Structure::SO) {
    switch (k) {
      case 1:
        t.homotopy = row({z, FgAbGroup::cyclic(2), FgAbGroup::cyclic(2), FgAbGroup::cyclic(24), zero});
        t.k_invariant_note = "sphere spectrum: stable stems, not a two-term spectrum";
        return t;
      case 2:
        t.homotopy = row({z, zero, z, zero, z});
        t.k_invariant_note = "pi_{<=2}: k-invariant in H^3_st(Z; Z) = Z/2, not computed";
        return t;
      case 3:
        t.homotopy = row({z, zero, zero, zero, z});
        t.k_invariant_note = "k-invariant in H^5_st(Z; Z) = Z/6, not computed";
        return t;
      case 4:
        t.homotopy = row({z, zero, zero, zero, FgAbGroup::free(2)});
        t.k_invariant_note = "k-invariant in H^5_st(Z; Z+Z) = Z/6+Z/6, not computed";
        return t;
      default: break;
    }
  } else if (k == 2) {
    t.homotopy = row({FgAbGroup::cyclic(2), zero, z});
    t.k_invariant = KInvariant::Kind::Zero;
    t.k_invariant_note =
        "k-invariant in H^3_st(Z/2; Z) = Z/2 is trivial: pulled back along the surjection "
        "Omega_0^SO -> Omega_0^O it must match the image of the oriented one under "
        "multiplication by two, which is zero";
    t.citation = "unoriented 2d truncation: Omega_0^O = Z/2, Omega_1^O = 0, SKK_2^O = Z";
    return t;
  }
  throw Error(ErrorKind::NotInCatalog, "Sigma^" + std::to_string(k) + " MT" +
                                           (s == Structure::SO ? "SO" : "O") + "(" +
                                           std::to_string(k) + ") is not in the catalog");
}

TwoTermSpectrum two_term_truncation(const TruncatedBordismSpectrum& t, int top) {
  const auto it = t.homotopy.find(top);
  if (top < 1 || it == t.homotopy.end())
    throw Error(ErrorKind::NotInCatalog, "degree " + std::to_string(top) + " is not tabulated");
  for (int i = 1; i < top; ++i)
    if (!t.homotopy.at(i).is_trivial())
      throw Error(ErrorKind::HypothesisViolated,
                  "pi_" + std::to_string(i) + " = " + t.homotopy.at(i).to_string() +
                      " is nonzero, so the truncation is not a two-term spectrum");
  const std::string name = "pi_{<=" + std::to_string(top) + "} Sigma^" + std::to_string(t.k) +
                           " MT" + (t.structure == Structure::SO ? "SO" : "O") + "(" +
                           std::to_string(t.k) + ")";
  KInvariant k = t.k_invariant == KInvariant::Kind::Zero ? KInvariant::zero()
                                                          : KInvariant::unknown(t.k_invariant_note);
  return make_two_term(name, t.homotopy.at(0), top, it->second, std::move(k));
}

SkkGroup skk_group(int d, Structure s) {
  SkkGroup g;
  g.d = d;
  g.structure = s;
  if (s == Structure::O) {
    if (d != 2)
      throw Error(ErrorKind::NotInCatalog, "unoriented SKK is only catalogued in dimension 2");
    g.group = FgAbGroup::free(1);
    g.presentation = "Z via the Euler characteristic; the oriented comparison is 2*";
    return g;
  }
  if (d < 1 || d > 4)
    throw Error(ErrorKind::NotInCatalog, "SKK_" + std::to_string(d) + " is not in the catalog");
  const GroupDesc omega = bordism_group(d, s);
  if (d % 2 == 0) {
    g.group = direct_sum(omega, GroupDesc(FgAbGroup::free(1)));
  } else if (d % 4 == 1) {
    g.group = direct_sum(omega, GroupDesc(FgAbGroup::cyclic(2)));
  } else {
    g.group = omega;
  }
  switch (d) {
    case 1: g.presentation = "Z/2 generated by S^1"; break;
    case 2: g.presentation = "Z; maps to SKK_2^O = Z by multiplication by two"; break;
    case 3: g.presentation = "0"; break;
    case 4:
      g.presentation = "Z x Z by (chi, sigma) with chi = sigma mod 2";
      g.second_factor = "(sigma - chi)/2";
      break;
  }
  return g;
}

abelian::GroupHom skk2_orientation_comparison() {
  return abelian::GroupHom(FgAbGroup::free(1), FgAbGroup::free(1), abelian::IntMatrix{{2}});
}

std::vector<Integer> skk4_coordinates(long chi, long sigma) {
  if ((chi - sigma) % 2 != 0)
    throw Error(ErrorKind::ParityViolation, "chi = " + std::to_string(chi) + " and sigma = " +
                                                std::to_string(sigma) + " differ mod 2");
  return {Integer(sigma), Integer((sigma - chi) / 2)};
}

std::pair<Integer, Integer> skk4_chi_sigma(const std::vector<Integer>& c) {
  if (c.size() != 2) throw Error(ErrorKind::InvalidArgument, "SKK_4 has two coordinates");
  return {c[0] - 2 * c[1], c[0]};
}

abelian::GroupHom genauer_inclusion() {
  const auto image = skk4_coordinates(0, 2);
  abelian::IntMatrix m(2, 1);
  m(0, 0) = image[0];
  m(1, 0) = image[1];
  return abelian::GroupHom(FgAbGroup::free(1), FgAbGroup::free(2), std::move(m));
}

TwoTermSpectrum nonextended_bordism_spectrum(int d) {
  if (d < 1 || d > 4)
    throw Error(ErrorKind::NotInCatalog, "nonextended bordism data is catalogued for d = 1..4");
  const GroupDesc pi0 = bordism_group(d - 1);
  const GroupDesc pi1 = skk_group(d).group;
  const std::string name = "pi_{[" + std::to_string(d - 1) + "," + std::to_string(d) + "]} Sigma^" +
                           std::to_string(d) + " MTSO(" + std::to_string(d) + ")";
  const std::string tag = "Y -> Y x S^1";
  if (d == 1) {
    // Omega_0 = Z is generated by the point, and pt x S^1 = S^1 generates SKK_1.
    Element circle;
    circle.coords = {1};
    return make_two_term(name, pi0, 1, pi1, KInvariant::known({circle}, tag));
  }
  // Omega_{d-1} = 0 for d = 2, 3, 4: the k-invariant has nowhere to live.
  return make_two_term(name, pi0, 1, pi1, KInvariant::zero());
}

// ---------------------------------------------------------------- parser

TwoTermSpectrum parse_spectrum(std::string_view text) {
  std::size_t start = 0, end = text.size();
  while (start < end && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
  while (end > start && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (start == end || text[start] != '(') throw ParseError("expected '('", start);
  if (text[end - 1] != ')') throw ParseError("expected ')'", end);
  std::vector<std::pair<std::size_t, std::string_view>> fields;
  std::size_t field_start = start + 1;
  int depth = 0;
  for (std::size_t i = start + 1; i < end - 1; ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ';' && depth == 0) {
      fields.emplace_back(field_start, text.substr(field_start, i - field_start));
      field_start = i + 1;
    }
  }
  fields.emplace_back(field_start, text.substr(field_start, end - 1 - field_start));
  if (fields.size() != 3 && fields.size() != 4)
    throw ParseError("expected (pi0; n; pin; k=zero|unknown)", start);

  auto group = [&](std::size_t idx) {
    try {
      return parse_group(fields[idx].second);
    } catch (const ParseError& e) {
      throw ParseError("bad group in spectrum", fields[idx].first + e.position());
    }
  };
  auto trimmed = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  const GroupDesc pi0 = group(0);
  const std::string_view n_text = trimmed(fields[1].second);
  int n = 0;
  for (char c : n_text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || n > 1000)
      throw ParseError("expected a positive degree", fields[1].first);
    n = n * 10 + (c - '0');
  }
  if (n < 1) throw ParseError("expected a positive degree", fields[1].first);
  const GroupDesc pin = group(2);
  KInvariant k = KInvariant::zero();
  if (fields.size() == 4) {
    std::string_view kt = trimmed(fields[3].second);
    if (kt.substr(0, 2) == "k=") kt = trimmed(kt.substr(2));
    if (kt == "unknown") {
      k = KInvariant::unknown();
    } else if (kt != "zero") {
      throw ParseError("expected k=zero or k=unknown", fields[3].first);
    }
  }
  return make_two_term(std::string(text.substr(start, end - start)), pi0, n, pin, std::move(k));
}

}  // namespace invtqft::spectra
