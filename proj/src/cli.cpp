#include "invtqft/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "invtqft/error.hpp"
#include "invtqft/manifolds.hpp"
#include "invtqft/stable_cohomology.hpp"
#include "invtqft/tqft.hpp"

namespace invtqft::cli {

namespace {

using json = nlohmann::ordered_json;
using abelian::FgAbGroup;
using abelian::Integer;

struct Settings {
  bool json = false;
  std::size_t budget = homology::BarOptions{}.budget;
  int precision = 12;
};

struct Outcome {
  json body;
  int code = kExitOk;
};

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json fg_json(const FgAbGroup& g) {
  json j;
  j["free_rank"] = g.free_rank();
  j["invariant_factors"] = json::array();
  for (const auto& d : g.invariant_factors()) j["invariant_factors"].push_back(integer_json(d));
  return j;
}

json factors_json(const std::vector<std::string>& fs) {
  json a = json::array();
  for (const auto& f : fs) a.push_back(f);
  return a;
}

json scalar_json(const tqft::Scalar& s, const Settings& st) {
  json j;
  j["value"] = s.to_string(st.precision);
  j["approx"] = s.approx_string(st.precision);
  j["phase"] = s.phase().get_str();
  j["exact"] = s.is_exact();
  return j;
}

json error_json(const std::string& kind, const std::string& reason) {
  json j;
  j["error"] = kind;
  j["reason"] = reason;
  return j;
}

int exit_code(const Error& e) { return e.is_undetermined() ? kExitUndetermined : kExitUsage; }

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), ::isspace), t.end());
  if (t.empty() || q.set_str(t, 10) != 0) throw ParseError("expected a rational number", 0);
  q.canonicalize();
  return q;
}

abelian::CoefficientGroup parse_coefficients(const std::string& text) {
  const auto c = parse_group(text).as_coefficients();
  if (!c) throw Error(ErrorKind::InvalidArgument, "coefficients must be finitely generated or Cx");
  return *c;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == ';') continue;
    lines.push_back(line.substr(b));
  }
  return lines;
}

/// Evaluates `fn` on every manifold expression; parallel over the batch with
/// results kept in input order. A single expression yields an object.
Outcome batch(const std::vector<std::string>& exprs,
              const std::function<json(const manifolds::Manifold4&)>& fn) {
  if (exprs.empty()) throw Error(ErrorKind::InvalidArgument, "no manifold given");
  std::vector<json> results(exprs.size());
  std::vector<int> codes(exprs.size(), kExitOk);
  const long n = static_cast<long>(exprs.size());
#pragma omp parallel for schedule(dynamic) if (n > 8)
  for (long i = 0; i < n; ++i) {
    json j;
    j["manifold"] = exprs[i];
    try {
      const auto m = manifolds::parse_manifold4(exprs[i]);
      j["normalized"] = m.to_string();
      const json part = fn(m);
      for (const auto& [k, v] : part.items()) j[k] = v;
    } catch (const Error& e) {
      j["error"] = std::string(to_string(e.kind()));
      j["reason"] = e.what();
      codes[i] = exit_code(e);
    } catch (const std::exception& e) {
      j["error"] = "InvalidArgument";
      j["reason"] = e.what();
      codes[i] = kExitUsage;
    }
    results[i] = std::move(j);
  }
  Outcome o;
  o.code = *std::max_element(codes.begin(), codes.end());
  if (results.size() == 1) {
    o.body = std::move(results.front());
  } else {
    o.body = json::array();
    for (auto& r : results) o.body.push_back(std::move(r));
  }
  return o;
}

json classification_json(const tqft::ClassificationResult& c) {
  json j;
  j["kernel"] = c.kernel.to_string();
  j["quotient"] = factors_json(c.quotient_factors);
  j["split_known"] = std::string(spectra::to_string(c.split));
  if (c.mapping) {
    j["obstruction"] = c.mapping->obstruction.to_string();
    j["obstruction_degree"] = c.mapping->n + 1;
  }
  if (c.upward_fiber) j["upward_fiber"] = c.upward_fiber->to_string();
  j["brown_comenetz"] = c.brown_comenetz;
  j["notes"] = factors_json(c.notes);
  return j;
}

// ---------------------------------------------------------------- rendering

void render_text(const json& j, std::ostream& out, int indent);

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_text(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !v.empty() && v.front().is_structured())) {
        out << pad << k << ":\n";
        render_text(v, out, indent + 2);
      } else if (v.is_array()) {
        out << pad << k << ": ";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
        out << "\n";
      } else {
        out << pad << k << ": " << scalar_text(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << pad << "[" << i << "]\n";
      render_text(j[i], out, indent + 2);
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

void emit(const Outcome& o, const Settings& st, std::ostream& out) {
  if (st.json) out << o.body.dump() << "\n";
  else render_text(o.body, out, 0);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings st;
  CLI::App app{"Invertible TQFT classification and partition functions", "invtqft"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", st.json, "machine-readable output");
  app.add_option("--budget", st.budget, "bar oracle budget (stored boundary entries)")
      ->check(CLI::PositiveNumber);
  app.add_option("--precision", st.precision, "significant digits for approximate values")
      ->check(CLI::Range(1, 18));

  std::function<Outcome()> action;

  // stablecoh
  std::string sc_source, sc_coeff;
  int sc_degree = 0;
  bool sc_oracle = false;
  auto* sc = app.add_subcommand("stablecoh", "stable cohomology H^n_st(A; B)");
  sc->add_option("--source", sc_source, "group expression or W")->required();
  sc->add_option("--coeff", sc_coeff, "group expression or Cx")->required();
  sc->add_option("--degree", sc_degree, "degree 0..5")->required();
  sc->add_flag("--oracle", sc_oracle, "compute with the bar-complex oracle");
  sc->callback([&] {
    action = [&]() -> Outcome {
      const GroupDesc source = parse_group(sc_source);
      const auto coeff = parse_coefficients(sc_coeff);
      Outcome o;
      o.body["source"] = source.to_string();
      o.body["coeff"] = GroupDesc::from(coeff).to_string();
      o.body["degree"] = sc_degree;
      if (sc_oracle) {
        const auto fg = source.as_fg();
        if (!fg) throw Error(ErrorKind::InvalidArgument, "the oracle needs a finite cyclic source");
        homology::BarOptions opts;
        opts.budget = st.budget;
        const auto rep = stable::cross_check(*fg, coeff, sc_degree, opts);
        o.body["group"] = rep.oracle.to_string();
        if (auto g = rep.oracle.as_fg()) o.body["serialized"] = fg_json(*g);
        o.body["method"] = "bar-oracle";
        o.body["delooping_level"] = rep.delooping_level;
        o.body["table"] = rep.table.to_string();
        o.body["cross_check"] = std::string(stable::to_string(rep.status));
        return o;
      }
      const auto r = stable::stable_cohomology(source, coeff, sc_degree);
      if (!r.is_determined()) {
        o.body["group"] = r.to_string();
        o.body["undetermined"] = true;
        o.body["reason"] = std::get<stable::Undetermined>(r.value).reason;
        o.code = kExitUndetermined;
        return o;
      }
      o.body["group"] = r.group().to_string();
      if (auto g = r.group().as_fg()) o.body["serialized"] = fg_json(*g);
      o.body["method"] = "table";
      o.body["fact"] = r.fact;
      o.body["citation"] = r.citation;
      return o;
    };
  });

  // spectrum
  int sp_mt = 4;
  std::string sp_structure = "so";
  auto* sp = app.add_subcommand("spectrum", "truncated Madsen-Tillmann spectrum");
  sp->add_option("--mt", sp_mt, "tangential dimension k")->required();
  sp->add_option("--structure", sp_structure, "so or o")->check(CLI::IsMember({"so", "o"}));
  sp->callback([&] {
    action = [&]() -> Outcome {
      const auto s = sp_structure == "so" ? spectra::Structure::SO : spectra::Structure::O;
      const auto t = spectra::truncated_mt_spectrum(sp_mt, s);
      Outcome o;
      o.body["k"] = t.k;
      o.body["structure"] = sp_structure;
      json h;
      for (const auto& [d, g] : t.homotopy) h[std::to_string(d)] = g.to_string();
      o.body["homotopy"] = h;
      o.body["k_invariant"] = std::string(spectra::to_string(t.k_invariant));
      o.body["k_invariant_note"] = t.k_invariant_note;
      o.body["citation"] = t.citation;
      return o;
    };
  });

  // skk
  int skk_dim = 0;
  std::string skk_structure = "so";
  std::vector<std::string> skk_manifolds;
  std::string skk_file;
  auto* skk = app.add_subcommand("skk", "SKK groups and SKK classes of 4-manifolds");
  auto* skk_dim_opt = skk->add_option("--dim", skk_dim, "dimension d");
  skk->add_option("--structure", skk_structure, "so or o")->check(CLI::IsMember({"so", "o"}));
  auto* skk_m = skk->add_option("--manifold", skk_manifolds, "manifold expression (repeatable)");
  auto* skk_f = skk->add_option("--manifold-file", skk_file, "one expression per line");
  skk_dim_opt->excludes(skk_m)->excludes(skk_f);
  skk->callback([&] {
    action = [&]() -> Outcome {
      if (skk_dim_opt->count() > 0) {
        const auto s = skk_structure == "so" ? spectra::Structure::SO : spectra::Structure::O;
        const auto g = spectra::skk_group(skk_dim, s);
        Outcome o;
        o.body["d"] = g.d;
        o.body["structure"] = skk_structure;
        o.body["group"] = g.group.to_string();
        o.body["presentation"] = g.presentation;
        if (!g.second_factor.empty()) o.body["second_factor"] = g.second_factor;
        return o;
      }
      auto exprs = skk_manifolds;
      if (!skk_file.empty())
        for (auto& l : read_lines(skk_file)) exprs.push_back(std::move(l));
      if (exprs.size() == 1) {
        // compact form: exactly the SKK class
        const auto c = manifolds::skk_class(manifolds::parse_manifold4(exprs.front()));
        Outcome o;
        o.body["chi"] = c.chi;
        o.body["sigma"] = c.sigma;
        o.body["second_factor"] = c.second_factor;
        return o;
      }
      return batch(exprs, [](const manifolds::Manifold4& m) {
        const auto c = manifolds::skk_class(m);
        json j;
        j["chi"] = c.chi;
        j["sigma"] = c.sigma;
        j["second_factor"] = c.second_factor;
        return j;
      });
    };
  });

  // mapgroup
  std::string mg_source, mg_target;
  auto* mg = app.add_subcommand("mapgroup", "pi_0 of maps between two-term spectra");
  mg->add_option("--source", mg_source, "(pi0; n; pin; k=zero|unknown)")->required();
  mg->add_option("--target", mg_target, "(pi0; n; pin; k=zero|unknown)")->required();
  mg->callback([&] {
    action = [&]() -> Outcome {
      const auto r = spectra::mapping_group(spectra::parse_spectrum(mg_source),
                                            spectra::parse_spectrum(mg_target));
      Outcome o;
      o.body["n"] = r.n;
      o.body["kernel"] = r.kernel.group().to_string();
      o.body["obstruction"] = r.obstruction.to_string();
      o.body["hom0"] = r.hom0.to_string();
      o.body["homn"] = r.homn.to_string();
      o.body["quotient"] = r.quotient.to_string();
      o.body["constrained"] = r.constrained;
      o.body["split_known"] = std::string(spectra::to_string(r.split));
      if (auto ord = r.order()) o.body["order"] = integer_json(*ord);
      o.body["notes"] = factors_json(r.notes);
      return o;
    };
  });

  // target
  std::string tg_name;
  auto* tg = app.add_subcommand("target", "Picard spectrum of a target category");
  tg->add_option("--name", tg_name, "catalog name")->required();
  tg->callback([&] {
    action = [&]() -> Outcome {
      const auto p = targets::picard(tg_name);
      const auto h = targets::check_hypotheses(p);
      Outcome o;
      o.body["name"] = p.name;
      o.body["dimension"] = p.dimension;
      json hom;
      for (int d = 0; d <= p.dimension; ++d) hom[std::to_string(d)] = p.pi(d).to_string();
      o.body["homotopy"] = hom;
      o.body["top_complex"] = p.top_complex;
      o.body["brown_comenetz"] = p.brown_comenetz;
      o.body["k_invariant"] = std::string(spectra::to_string(p.k.kind));
      if (!p.k.tag.empty()) o.body["k_invariant_note"] = p.k.tag;
      o.body["hypotheses_hold"] = h.holds();
      o.body["hypotheses"] = h.reason();
      o.body["citation"] = p.citation;
      return o;
    };
  });

  // classify
  std::string cl_target;
  int cl_so_k = 0, cl_nonextended = 0;
  bool cl_partial = false;
  auto* cl = app.add_subcommand("classify", "classify invertible TQFTs with values in a target");
  cl->add_option("--target", cl_target, "catalog name")->required();
  auto* so_k = cl->add_option("--so-k", cl_so_k, "partial SO(k) structure, k = 1 or 3");
  auto* part = cl->add_flag("--partial", cl_partial, "ambiguity of extending a nonextended theory");
  auto* nonext = cl->add_option("--nonextended", cl_nonextended, "nonextended theories in dimension d");
  so_k->excludes(part)->excludes(nonext);
  part->excludes(nonext);
  cl->callback([&] {
    action = [&]() -> Outcome {
      const auto p = targets::picard(cl_target);
      Outcome o;
      if (cl_partial) {
        const auto a = tqft::partial_extension_ambiguity(p);
        o.body["pi0_pic"] = a.pi0_pic.to_string();
        o.body["z6"] = a.z6.to_string();
        o.body["restrictions_isomorphic"] = a.restrictions_isomorphic;
        o.body["unique_extension"] = a.unique_extension;
        o.body["notes"] = factors_json(a.notes);
        return o;
      }
      if (so_k->count() > 0) o.body = classification_json(tqft::classify_so_k(p, cl_so_k));
      else if (nonext->count() > 0) o.body = classification_json(tqft::classify_nonextended(p, cl_nonextended));
      else o.body = classification_json(tqft::classify_extended(p));
      return o;
    };
  });

  // partition
  std::string pt_l1, pt_l2, pt_file;
  std::vector<std::string> pt_manifolds;
  auto* pt = app.add_subcommand("partition", "Z(X) = lambda1^sigma lambda2^((chi - sigma)/2)");
  pt->add_option("--lambda1", pt_l1, "scalar r*e(p/q)")->required();
  pt->add_option("--lambda2", pt_l2, "scalar r*e(p/q)")->required();
  pt->add_option("--manifold", pt_manifolds, "manifold expression (repeatable)");
  pt->add_option("--manifold-file", pt_file, "one expression per line");
  pt->callback([&] {
    action = [&]() -> Outcome {
      const tqft::NonextendedClass4d cls{tqft::parse_scalar(pt_l1), tqft::parse_scalar(pt_l2)};
      auto exprs = pt_manifolds;
      if (!pt_file.empty())
        for (auto& l : read_lines(pt_file)) exprs.push_back(std::move(l));
      return batch(exprs, [&](const manifolds::Manifold4& m) {
        json j;
        j["chi"] = m.chi();
        j["sigma"] = m.sigma();
        const json value = scalar_json(tqft::eval_nonextended(cls, m), st);
        for (const auto& [k, v] : value.items()) j[k] = v;
        return j;
      });
    };
  });

  // crane-yetter
  std::string cy_dim, cy_c, cy_file;
  std::vector<std::string> cy_manifolds;
  bool cy_as_class = false;
  auto* cy = app.add_subcommand("crane-yetter", "Crane-Yetter partition function");
  cy->add_option("--global-dim", cy_dim, "global dimension >= 1")->required();
  cy->add_option("--central-charge", cy_c, "central charge, rational mod 8")->required();
  cy->add_option("--manifold", cy_manifolds, "manifold expression (repeatable)");
  cy->add_option("--manifold-file", cy_file, "one expression per line");
  cy->add_flag("--as-class", cy_as_class, "print (lambda1, lambda2) instead");
  cy->callback([&] {
    action = [&]() -> Outcome {
      const auto md = tqft::make_modular_data(tqft::parse_scalar(cy_dim), parse_rational(cy_c));
      const auto cls = tqft::crane_yetter_class(md);
      if (cy_as_class) {
        Outcome o;
        o.body["lambda1"] = scalar_json(cls.lambda1, st);
        o.body["lambda2"] = scalar_json(cls.lambda2, st);
        o.body["reflection_positive"] = tqft::is_reflection_positive(cls);
        return o;
      }
      auto exprs = cy_manifolds;
      if (!cy_file.empty())
        for (auto& l : read_lines(cy_file)) exprs.push_back(std::move(l));
      return batch(exprs, [&](const manifolds::Manifold4& m) {
        const auto z = tqft::eval_crane_yetter(md, m);
        json j;
        j["chi"] = m.chi();
        j["sigma"] = m.sigma();
        const json value = scalar_json(z, st);
        for (const auto& [k, v] : value.items()) j[k] = v;
        j["matches_class_formula"] = z == tqft::eval_nonextended(cls, m);
        return j;
      });
    };
  });

  // extend-point
  std::string ep_target, ep_witt, ep_l1, ep_l2;
  auto* ep = app.add_subcommand("extend-point", "fully extended theories over (lambda1, lambda2, class)");
  ep->add_option("--target", ep_target, "catalog name")->required();
  ep->add_option("--witt", ep_witt, "Witt class as JSON {c32, summands}");
  ep->add_option("--lambda1", ep_l1, "scalar")->required();
  ep->add_option("--lambda2", ep_l2, "scalar")->required();
  ep->callback([&] {
    action = [&]() -> Outcome {
      const auto p = targets::picard(ep_target);
      std::optional<targets::WittElement> w;
      if (!ep_witt.empty()) w = targets::parse_witt(ep_witt);
      const auto classes = tqft::enumerate_point_extensions(p, w, tqft::parse_scalar(ep_l1),
                                                            tqft::parse_scalar(ep_l2));
      Outcome o;
      o.body["target"] = p.name;
      o.body["count"] = classes.size();
      o.body["classes"] = json::array();
      for (const auto& c : classes) {
        json j;
        j["lambda1"] = c.lambda1.to_string(st.precision);
        j["lambda2"] = c.lambda2.to_string(st.precision);
        if (c.picard_class) j["picard_class"] = targets::to_json(*c.picard_class);
        else j["picard_class"] = "0";
        j["z6"] = c.z6;
        o.body["classes"].push_back(std::move(j));
      }
      return o;
    };
  });

  // classify2d
  std::string c2_target, c2_structure = "so", c2_lambda, c2_surface;
  int c2_sign = 1;
  auto* c2 = app.add_subcommand("classify2d", "two-dimensional invertible theories");
  c2->add_option("--target", c2_target, "alg or salg")->required();
  c2->add_option("--structure", c2_structure, "so or o")->check(CLI::IsMember({"so", "o"}));
  c2->add_option("--lambda", c2_lambda, "evaluate the class lambda on --surface");
  c2->add_option("--sign", c2_sign, "stellar sign for unoriented classes")->check(CLI::IsMember({-1, 1}));
  c2->add_option("--surface", c2_surface, "surface expression, e.g. Sigma(2)+Sigma(0)");
  c2->callback([&] {
    action = [&]() -> Outcome {
      const auto target = tqft::parse_target_2d(c2_target);
      const auto s = c2_structure == "so" ? spectra::Structure::SO : spectra::Structure::O;
      const auto c = tqft::classify_2d(target, s);
      Outcome o;
      o.body = classification_json(c.result);
      if (c.nonsplit) o.body["nonsplit"] = *c.nonsplit;
      o.body["class_model"] = c.class_model;
      for (const auto& n : c.notes) o.body["notes"].push_back(n);
      if (!c2_lambda.empty() || !c2_surface.empty()) {
        if (c2_lambda.empty() || c2_surface.empty())
          throw Error(ErrorKind::InvalidArgument, "--lambda and --surface go together");
        tqft::Frobenius2dClass cls{tqft::parse_scalar(c2_lambda), std::nullopt,
                                   target == tqft::Target2d::SAlg};
        if (s == spectra::Structure::O) cls.sign = c2_sign;
        const auto surface = manifolds::parse_surface(c2_surface);
        o.body["surface"] = surface.to_string();
        o.body["chi"] = surface.chi();
        o.body["value"] = scalar_json(tqft::eval_2d(cls, surface), st);
      }
      return o;
    };
  });

  // reflection-positive
  std::string rp_l1, rp_l2;
  auto* rp = app.add_subcommand("reflection-positive", "reflection positivity of (lambda1, lambda2)");
  rp->add_option("--lambda1", rp_l1, "scalar")->required();
  rp->add_option("--lambda2", rp_l2, "scalar")->required();
  rp->callback([&] {
    action = [&]() -> Outcome {
      const tqft::NonextendedClass4d cls{tqft::parse_scalar(rp_l1), tqft::parse_scalar(rp_l2)};
      Outcome o;
      o.body["reflection_positive"] = tqft::is_reflection_positive(cls);
      o.body["z_s4"] = scalar_json(cls.lambda2, st);
      return o;
    };
  });

  // witt-check
  std::size_t wc_m = 1;
  std::string wc_element;
  auto* wc = app.add_subcommand("witt-check", "Witt group structure at a finite truncation");
  wc->add_option("--truncation", wc_m, "number of countable summands kept (0..5)");
  wc->add_option("--element", wc_element, "Witt class as JSON; prints its image in sW");
  wc->callback([&] {
    action = [&]() -> Outcome {
      Outcome o;
      if (!wc_element.empty()) {
        const auto w = targets::parse_witt(wc_element);
        o.body["element"] = targets::to_json(w);
        if (auto ord = w.order()) o.body["order"] = integer_json(*ord);
        else o.body["order"] = "infinite";
        o.body["image"] = targets::to_json(targets::witt_to_switt(w));
        return o;
      }
      const auto c = targets::witt_structure_check(wc_m);
      o.body["truncation"] = c.truncation;
      o.body["kernel"] = c.report.kernel.to_string();
      o.body["quotient"] = c.report.quotient.to_string();
      o.body["candidates"] = c.report.candidates.size();
      json f = json::array();
      for (const auto& g : c.report.filtered) f.push_back(g.to_string());
      o.body["filtered"] = f;
      o.body["expected"] = c.expected.to_string();
      o.body["expected_found"] = c.expected_found;
      o.body["passes"] = c.passes();
      return o;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (st.json) out << error_json("ParseError", e.what()).dump() << "\n";
    else err << "error: " << e.what() << "\nreason: ParseError\n";
    return kExitUsage;
  }

  Outcome o;
  try {
    o = action();
  } catch (const Error& e) {
    o.body = error_json(std::string(to_string(e.kind())), e.what());
    o.code = exit_code(e);
  } catch (const std::exception& e) {
    o.body = error_json("InvalidArgument", e.what());
    o.code = kExitUsage;
  }
  if (!st.json && o.body.contains("error")) {
    err << "error: " << o.body["error"].get<std::string>() << "\nreason: "
        << o.body["reason"].get<std::string>() << "\n";
  } else {
    emit(o, st, out);
  }
  return o.code;
}

}  // namespace invtqft::cli
