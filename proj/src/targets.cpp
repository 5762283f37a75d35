#include "invtqft/targets.hpp"

#include <algorithm>
#include <numeric>

#include "invtqft/error.hpp"

namespace invtqft::targets {

using abelian::FgAbGroup;
using abelian::Integer;
using spectra::KInvariant;

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

Integer lcm_of(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

std::vector<GroupDesc> concentrated(int dimension, std::map<int, GroupDesc> groups) {
  std::vector<GroupDesc> h(dimension + 1);
  for (auto& [d, g] : groups) h.at(d) = std::move(g);
  return h;
}

}  // namespace

// ---------------------------------------------------------------- Picard catalog

const GroupDesc& PicardSpectrum::pi(int degree) const {
  static const GroupDesc zero;
  if (degree < 0 || degree >= static_cast<int>(homotopy.size())) return zero;
  return homotopy[degree];
}

bool PicardSpectrum::is_two_term() const {
  int nonzero_positive = 0;
  for (int d = 1; d <= dimension; ++d)
    if (!pi(d).is_trivial()) ++nonzero_positive;
  return nonzero_positive == 1;
}

spectra::TwoTermSpectrum PicardSpectrum::two_term() const {
  if (!is_two_term())
    throw Error(ErrorKind::HypothesisViolated,
                "Pic " + name + " has more than two nonzero homotopy groups");
  int n = 1;
  for (int d = 1; d <= dimension; ++d)
    if (!pi(d).is_trivial()) n = d;
  return spectra::make_two_term("Pic " + name, pi(0), n, pi(n), k);
}

const std::vector<FgAbGroup>& sphere_stems() {
  static const std::vector<FgAbGroup> stems = {FgAbGroup::free(1), FgAbGroup::cyclic(2),
                                               FgAbGroup::cyclic(2), FgAbGroup::cyclic(24),
                                               FgAbGroup::trivial()};
  return stems;
}

std::vector<std::string> catalog_names() {
  return {"vect", "svect", "alg", "salg", "fus", "brfus", "vect4", "u1", "u2", "u3", "u4"};
}

namespace {

PicardSpectrum universal(int d) {
  // pi_j Pic U_d = pi_j Sigma^d IC^x = Hom(pi_{d-j} S, C^x).
  PicardSpectrum p;
  p.name = "u" + std::to_string(d);
  p.dimension = d;
  for (int j = 0; j <= d; ++j)
    p.homotopy.push_back(GroupDesc::from(abelian::hom_to_circle(sphere_stems().at(d - j))));
  p.top_complex = true;
  p.brown_comenetz = true;
  p.k = KInvariant::unknown("Postnikov invariants of the Brown-Comenetz dual");
  p.citation = "Pic U_d = pi_{>=0} Sigma^d IC^x; pi_0 [E, IC^x] = Hom(pi_0 E, C^x)";
  return p;
}

}  // namespace

PicardSpectrum picard(std::string_view name) {
  const GroupDesc cx = GroupDesc::circle();
  PicardSpectrum p;
  p.name = std::string(name);
  if (name == "vect") {
    p.dimension = 1;
    p.homotopy = concentrated(1, {{1, cx}});
    p.citation = "Pic Vect = Sigma HC^x";
  } else if (name == "alg") {
    p.dimension = 2;
    p.homotopy = concentrated(2, {{2, cx}});
    p.citation = "Pic Alg = Sigma^2 HC^x";
  } else if (name == "fus") {
    p.dimension = 3;
    p.homotopy = concentrated(3, {{3, cx}});
    p.citation = "Pic Fus = Sigma^3 HC^x";
  } else if (name == "vect4") {
    p.dimension = 4;
    p.homotopy = concentrated(4, {{4, cx}});
    p.citation = "Pic Vect_4 = Sigma^4 HC^x";
  } else if (name == "brfus") {
    p.dimension = 4;
    p.homotopy = concentrated(4, {{0, GroupDesc::witt()}, {4, cx}});
    p.k = KInvariant::unknown("k-invariant in H^5_st(W; C^x) = sum_N(Z/2), not computed");
    p.citation = "pi_0 = W, pi_1 = pi_2 = pi_3 = 0 (invertible braided fusion categories), "
                 "pi_4 = C^x";
  } else if (name == "svect" || name == "u1") {
    p = universal(1);
    p.name = std::string(name);
    // The odd line squares to the sign -1 through the symmetry.
    spectra::Element sign;
    sign.phase = mpq_class(1, 2);
    p.k = KInvariant::known({sign}, "odd line -> -1");
  } else if (name == "salg" || name == "u2") {
    p = universal(2);
    p.name = std::string(name);
  } else if (name == "u3" || name == "u4") {
    p = universal(name == "u3" ? 3 : 4);
  } else {
    throw Error(ErrorKind::NotInCatalog, "no Picard spectrum named '" + std::string(name) + "'");
  }
  if (!p.brown_comenetz) p.top_complex = p.pi(p.dimension).is_circle();
  return p;
}

std::string HypothesisCheck::reason() const {
  if (holds()) return "hypotheses hold";
  std::string s;
  auto add = [&](const std::string& part) { s += (s.empty() ? "" : "; ") + part; };
  if (!four_dimensional) add("target is not a 4-category");
  if (!top_complex) add("target is not top-complex (pi_4 != C^x)");
  for (int d : nonzero_middle) add("pi_" + std::to_string(d) + " != 0");
  return s;
}

HypothesisCheck check_hypotheses(const PicardSpectrum& t) {
  HypothesisCheck c;
  c.four_dimensional = t.dimension == 4;
  c.top_complex = t.dimension == 4 && t.pi(4).is_circle();
  for (int d = 1; d <= 3; ++d)
    if (!t.pi(d).is_trivial()) c.nonzero_middle.push_back(d);
  return c;
}

// ---------------------------------------------------------------- Witt groups

namespace {

WittTriple normalized(WittTriple t) {
  t.t2 = mod(t.t2, 2);
  t.t4 = mod(t.t4, 4);
  return t;
}

std::map<std::size_t, WittTriple> compacted(std::map<std::size_t, WittTriple> s) {
  for (auto it = s.begin(); it != s.end();) {
    it->second = normalized(it->second);
    it = it->second.is_zero() ? s.erase(it) : std::next(it);
  }
  return s;
}

}  // namespace

SWittElement::SWittElement(std::map<std::size_t, WittTriple> summands)
    : summands_(compacted(std::move(summands))) {}

std::optional<Integer> SWittElement::order() const {
  Integer o = 1;
  for (const auto& [i, t] : summands_) {
    if (t.free != 0) return std::nullopt;
    if (t.t2 != 0) o = lcm_of(o, 2);
    if (t.t4 != 0) o = lcm_of(o, 4 / std::gcd(t.t4, 4));
  }
  return o;
}

SWittElement operator+(const SWittElement& a, const SWittElement& b) {
  auto s = a.summands_;
  for (const auto& [i, t] : b.summands_) {
    auto& u = s[i];
    u.free += t.free;
    u.t2 += t.t2;
    u.t4 += t.t4;
  }
  return SWittElement(std::move(s));
}

SWittElement operator-(const SWittElement& a) {
  auto s = a.summands_;
  for (auto& [i, t] : s) t = {-t.free, -t.t2, -t.t4};
  return SWittElement(std::move(s));
}

WittElement::WittElement(int c32, std::map<std::size_t, WittTriple> summands)
    : c32_(mod(c32, 32)), rest_(std::move(summands)) {}

std::optional<Integer> WittElement::order() const {
  const auto rest = rest_.order();
  if (!rest) return std::nullopt;
  return lcm_of(*rest, Integer(32 / std::gcd(c32_, 32)));
}

WittElement operator+(const WittElement& a, const WittElement& b) {
  WittElement w;
  w.c32_ = mod(a.c32_ + b.c32_, 32);
  w.rest_ = a.rest_ + b.rest_;
  return w;
}

WittElement operator-(const WittElement& a) {
  WittElement w;
  w.c32_ = mod(-a.c32_, 32);
  w.rest_ = -a.rest_;
  return w;
}

nlohmann::ordered_json to_json(const SWittElement& w) {
  nlohmann::ordered_json summands = nlohmann::ordered_json::object();
  for (const auto& [i, t] : w.summands()) {
    // Free parts beyond 64 bits are written as strings.
    nlohmann::ordered_json free = t.free.fits_slong_p() ? nlohmann::ordered_json(t.free.get_si())
                                                        : nlohmann::ordered_json(t.free.get_str());
    summands[std::to_string(i)] = {free, t.t2, t.t4};
  }
  nlohmann::ordered_json j;
  j["summands"] = summands;
  return j;
}

nlohmann::ordered_json to_json(const WittElement& w) {
  nlohmann::ordered_json j;
  j["c32"] = w.c32();
  j["summands"] = to_json(w.summand_part())["summands"];
  return j;
}

WittElement witt_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("Witt element must be a JSON object", 0);
  int c32 = 0;
  if (j.contains("c32")) {
    if (!j["c32"].is_number_integer()) throw ParseError("c32 must be an integer", 0);
    c32 = static_cast<int>(j["c32"].get<long long>() % 32);
  }
  std::map<std::size_t, WittTriple> summands;
  if (j.contains("summands")) {
    const auto& s = j["summands"];
    if (!s.is_object()) throw ParseError("summands must be an object", 0);
    for (const auto& [key, value] : s.items()) {
      std::size_t idx = 0;
      try {
        std::size_t used = 0;
        idx = std::stoull(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ParseError("summand index '" + key + "' is not a nonnegative integer", 0);
      }
      if (!value.is_array() || value.size() != 3)
        throw ParseError("summand " + key + " must be [free, t2, t4]", 0);
      WittTriple t;
      if (value[0].is_string()) t.free = Integer(value[0].get<std::string>());
      else if (value[0].is_number_integer()) t.free = Integer(std::to_string(value[0].get<long long>()));
      else throw ParseError("free part of summand " + key + " must be an integer", 0);
      if (!value[1].is_number_integer() || !value[2].is_number_integer())
        throw ParseError("torsion parts of summand " + key + " must be integers", 0);
      t.t2 = static_cast<int>(value[1].get<long long>() % 2);
      t.t4 = static_cast<int>(value[2].get<long long>() % 4);
      summands[idx] = t;
    }
  }
  return WittElement(c32, std::move(summands));
}

WittElement parse_witt(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid Witt JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  return witt_from_json(j);
}

SWittElement witt_to_switt(const WittElement& w) {
  std::map<std::size_t, WittTriple> out;
  out[0].t2 = w.c32() % 2;
  for (const auto& [i, t] : w.summands()) {
    out[i].free += t.free;
    out[i].t4 += t.t4;
    out[i + 1].t2 += t.t2;
  }
  return SWittElement(std::move(out));
}

WittElement switt_preimage(const SWittElement& s) {
  std::map<std::size_t, WittTriple> out;
  int c32 = 0;
  for (const auto& [i, t] : s.summands()) {
    out[i].free += t.free;
    out[i].t4 += t.t4;
    if (i == 0) c32 = t.t2;
    else out[i - 1].t2 += t.t2;
  }
  return WittElement(c32, std::move(out));
}

// ---------------------------------------------------------------- extension check

FgAbGroup WittStructureCheck::absorbed_type(const FgAbGroup& g) {
  std::vector<Integer> kept;
  for (const Integer& d : g.invariant_factors())
    if (4 % d != 0) kept.push_back(d);
  return FgAbGroup::from_cyclic_orders(g.free_rank(), kept);
}

WittExtensionReport witt_extension_candidates(const FgAbGroup& kernel, const FgAbGroup& quotient) {
  WittExtensionReport r{kernel, quotient, abelian::classify_extensions(kernel, quotient), {}, {}};
  for (const FgAbGroup& e : r.candidates) {
    // The largest invariant factor is the exponent of the torsion subgroup.
    const Integer exponent = e.torsion_exponent();
    const bool has_32 = exponent % 32 == 0;
    const bool has_64 = exponent % 64 == 0;
    if (has_32 && !has_64) r.filtered.push_back(e);
  }
  for (const FgAbGroup& e : r.filtered) {
    const FgAbGroup a = WittStructureCheck::absorbed_type(e);
    if (std::find(r.absorbed.begin(), r.absorbed.end(), a) == r.absorbed.end())
      r.absorbed.push_back(a);
  }
  std::sort(r.absorbed.begin(), r.absorbed.end());
  return r;
}

FgAbGroup truncated_witt_group(std::size_t m) {
  std::vector<Integer> orders{32};
  for (std::size_t i = 0; i < m; ++i) {
    orders.push_back(2);
    orders.push_back(4);
  }
  return FgAbGroup::from_cyclic_orders(m, orders);
}

WittStructureCheck witt_structure_check(std::size_t m) {
  if (m > 5)
    throw Error(ErrorKind::EnumerationLimit, "Witt truncations are checked for m <= 5");
  std::vector<Integer> orders{2};
  for (std::size_t i = 0; i < m; ++i) {
    orders.push_back(2);
    orders.push_back(4);
  }
  const FgAbGroup quotient = FgAbGroup::from_cyclic_orders(m, orders);
  WittStructureCheck c;
  c.truncation = m;
  c.report = witt_extension_candidates(FgAbGroup::cyclic(16), quotient);
  c.expected = truncated_witt_group(m);
  c.expected_found = std::find(c.report.filtered.begin(), c.report.filtered.end(), c.expected) !=
                     c.report.filtered.end();
  return c;
}

}  // namespace invtqft::targets
