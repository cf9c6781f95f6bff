#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

#include "cli.hpp"
#include "witt/errors.hpp"
#include "witt/pairings.hpp"

namespace witt::cli {

namespace {

struct Outcome {
  std::string digest;
  Json result = Json::object();
  std::vector<Check> checks;
};

struct Loaded {
  SpaceFile file;
  std::string digest;
  StratifiedSpace space;
  std::string stratification;  // "declared" or "candidate"
  bool heuristic = false;
};

Loaded load(const std::string& path) {
  Loaded l;
  l.file = read_space_file(path);
  l.digest = sha256_hex(serialize_space(l.file));
  if (l.file.has_filtration()) {
    l.space = l.file.declared_space();
    l.stratification = "declared";
  } else {
    auto c = candidate_stratification(l.file.complex);
    l.space = c.space;
    l.heuristic = c.heuristic;
    l.stratification = "candidate";
  }
  return l;
}

Json simplices_json(const SimplicialComplex& x) {
  Json a = Json::array();
  for (const auto& f : x.facets()) a.push_back(f.vertices());
  return a;
}

std::string witness_text(const std::vector<Simplex>& origins) {
  std::string s;
  for (const auto& o : origins) s += (s.empty() ? "" : " < ") + o.to_string();
  return s;
}

Json stratum_json(const StratumReport& s) {
  Json witness = Json::array();
  for (const auto& o : s.witness) witness.push_back(o.vertices());
  return {{"stratum_dimension", s.stratum_dimension}, {"simplices", s.simplices},   {"witness", witness},
          {"has_condition", s.has_condition},         {"k", s.k},                    {"link_ih", s.link_ih},
          {"in_boundary", s.in_boundary},             {"pass", s.pass},              {"detail", s.detail}};
}

void guard(std::size_t estimate, const std::string& what) {
  const auto ceiling = simplex_ceiling();
  if (estimate > ceiling)
    throw OutOfReachError(what + " needs about " + std::to_string(estimate) + " simplices, above the ceiling of " +
                          std::to_string(ceiling) + " (WITT_SIMPLEX_CEILING)");
}

Json form_json(const MiddleFormReport& m) {
  return {{"degree", m.degree},
          {"dimension", m.form.dim()},
          {"rank", form_rank(m.form)},
          {"gram", form_rows(m.form)},
          {"witt_class", m.witt.bit},
          {"method", m.method},
          {"track", m.track}};
}

Outcome cmd_check(const std::string& path) {
  Outcome o;
  auto file = read_space_file(path);
  o.digest = sha256_hex(serialize_space(file));
  const auto& x = file.complex;
  const auto pm_closed = is_pseudomanifold(x, true);
  const auto pm = pm_closed.ok ? pm_closed : is_pseudomanifold(x, false);
  o.result["dimension"] = x.dimension();
  o.result["f_vector"] = x.f_vector();
  long chi = 0;
  for (std::size_t d = 0; d < x.f_vector().size(); ++d) chi += (d % 2 ? -1L : 1L) * static_cast<long>(x.f_vector()[d]);
  o.result["euler_characteristic"] = chi;
  o.result["pure"] = x.is_pure();
  o.result["closed_pseudomanifold"] = pm_closed.ok;
  o.result["boundary_facets"] = pm.ok && !pm_closed.ok ? boundary_subcomplex(x).facets().size() : 0;
  o.checks.push_back({"pseudomanifold", pm.ok, pm.ok ? "" : pm.reason});
  if (!pm.ok) {
    o.result["orientable"] = nullptr;
    return o;
  }
  o.result["orientable"] = orient(x).orientable();
  try {
    if (file.has_filtration()) {
      auto s = file.declared_space();
      o.result["stratification"] = {{"source", "declared"}, {"singular_set", simplices_json(s.singular_set())}};
    } else {
      auto c = candidate_stratification(x);
      o.result["stratification"] = {{"source", "candidate"},
                                    {"singular_set", simplices_json(c.space.singular_set())},
                                    {"heuristic", c.heuristic}};
    }
    o.checks.push_back({"stratification", true, ""});
  } catch (const ValidationError& e) {
    o.checks.push_back({"stratification", false, e.what()});
  }
  if (file.orientation) o.checks.push_back({"declared orientation", true, "consistent"});
  return o;
}

Outcome cmd_homology(const std::string& path, const std::string& coeff, bool rel) {
  Outcome o;
  auto file = read_space_file(path);
  o.digest = sha256_hex(serialize_space(file));
  const auto c = CoefficientSpec::parse(coeff);
  const auto& x = file.complex;
  const auto h = rel ? relative_homology(x, boundary_subcomplex(x), c) : homology(x, c);
  o.result["coefficients"] = c.name();
  o.result["relative"] = rel;
  o.result["betti"] = h.betti;
  if (c.kind() == CoefficientSpec::Kind::Integers) o.result["torsion"] = h.torsion;
  o.result["euler_characteristic"] = h.euler_characteristic();
  return o;
}

Outcome cmd_ih(const std::string& path, const std::string& coeff, const std::string& perversity) {
  Outcome o;
  auto l = load(path);
  o.digest = l.digest;
  const auto c = CoefficientSpec::parse(coeff);
  if (!c.is_field()) throw ValidationError("intersection homology needs field coefficients");
  const int n = l.space.dimension();
  const Perversity p = perversity == "middle" ? middle_perversity(n)
                       : perversity == "zero" ? zero_perversity(n)
                       : perversity == "top"  ? top_perversity(n)
                                              : throw ParseError("unknown perversity '" + perversity + "'");
  if (!l.space.is_trivial()) guard(subdivision_estimate(l.space.complex()), "subdivision");
  auto ih = intersection_homology(l.space, p, c);
  o.result["coefficients"] = c.name();
  o.result["perversity"] = perversity;
  o.result["perversity_values"] = p.values();
  o.result["stratification"] = l.stratification;
  o.result["dims"] = ih.dims;
  return o;
}

Outcome cmd_witt(const std::string& path, const std::string& coeff, const std::string& mode) {
  Outcome o;
  auto l = load(path);
  o.digest = l.digest;
  const auto c = CoefficientSpec::parse(coeff);
  if (!c.is_field()) throw ValidationError("the Witt condition needs field coefficients");
  if (mode != "z" && mode != "z2") throw ParseError("mode must be z or z2");
  const auto m = mode == "z" ? OrientationMode::Z : OrientationMode::Z2;
  guard(subdivision_estimate(l.space.complex()), "subdivision");
  auto v = is_witt_space(l.space, c, m);
  o.result["coefficients"] = c.name();
  o.result["mode"] = mode;
  o.result["stratification"] = l.stratification;
  o.result["heuristic_stratification"] = l.heuristic;
  o.result["witt"] = v.witt;
  o.result["strata"] = Json::array();
  for (const auto& s : v.report.strata) o.result["strata"].push_back(stratum_json(s));
  o.checks.push_back({"pseudomanifold", v.pseudomanifold, v.pseudomanifold_detail});
  if (!v.pseudomanifold) return o;
  if (m == OrientationMode::Z) o.checks.push_back({"orientation", v.oriented, v.oriented ? "" : "not Z-orientable"});
  for (const auto& s : v.report.strata) {
    if (!s.has_condition || s.in_boundary) continue;
    o.checks.push_back({"stratum " + std::to_string(s.stratum_dimension) + " at " + witness_text(s.witness), s.pass,
                        "dim I^mH_" + std::to_string(s.k) + "(link; " + c.name() + ") = " + std::to_string(s.link_ih)});
  }
  for (const auto& e : v.report.errors) o.checks.push_back({"link consistency", false, e});
  return o;
}

Outcome cmd_form(const std::string& path, std::uint64_t seed) {
  Outcome o;
  auto l = load(path);
  o.digest = l.digest;
  const int n = l.space.dimension();
  if (n % 2 != 0) throw ValidationError("middle forms need even dimension, got " + std::to_string(n));
  if (l.space.is_trivial()) {
    auto m = intersection_form_manifold(l.space.complex());
    o.result = form_json(m);
    o.checks.push_back({"nondegenerate", form_rank(m.form) == m.form.dim(),
                        "rank " + std::to_string(form_rank(m.form)) + " of " + std::to_string(m.form.dim())});
    return o;
  }
  guard(subdivision_estimate(barycentric_subdivision(l.space.complex()).complex), "second subdivision");
  auto r = intersection_form_isolated(l.space, {.alternate_seeds = 2, .seed = seed});
  o.result = form_json(r.middle);
  o.result["image_dimension"] = r.image.image_dim;
  o.result["direct_ih_dimension"] = r.image.direct_ih_dim;
  o.checks.push_back({"image matches direct IH", r.image.image_dim == r.image.direct_ih_dim,
                      std::to_string(r.image.image_dim) + " vs " + std::to_string(r.image.direct_ih_dim)});
  o.checks.push_back({"independent of lifts", r.lift_independent, ""});
  o.checks.push_back({"cup squares vanish", r.cup_squares_vanish, std::to_string(r.cup_squares_checked) + " classes"});
  o.checks.push_back({"Bockstein H1(M) -> H0(M) is zero", r.bockstein_zero, ""});
  return o;
}

Outcome cmd_w(const std::string& path) {
  Outcome o;
  auto l = load(path);
  o.digest = l.digest;
  if (!l.space.is_trivial()) guard(subdivision_estimate(barycentric_subdivision(l.space.complex()).complex), "second subdivision");
  auto w = w_invariant(l.space);
  o.result["witt_class"] = w.w.bit;
  o.result["route"] = w.route;
  o.result["form"] = form_json(w.middle);
  return o;
}

Outcome cmd_lemma(const std::string& path) {
  Outcome o;
  auto file = read_space_file(path);
  o.digest = sha256_hex(serialize_space(file));
  auto r = lemma_check(file.complex);
  o.result = {{"orientable", r.orientable}, {"k", r.k},           {"B", r.betti},
              {"t2_odd", r.t2_odd},         {"t2_even", r.t2_even}, {"mod2_dimension", r.mod2_dim},
              {"uct_dimension", r.uct_dim}, {"reason", r.reason}};
  o.checks.push_back({"orientable manifold of dimension 4k+2", r.accepted, r.reason});
  if (!r.accepted) return o;
  o.checks.push_back({"UCT decomposition", r.uct_dim == r.mod2_dim,
                      std::to_string(r.mod2_dim) + " = " + std::to_string(r.betti) + " + " + std::to_string(r.t2_odd) +
                          " + " + std::to_string(r.t2_even)});
  o.checks.push_back({"torsion duality", r.torsion_match, ""});
  o.checks.push_back({"B even", r.betti_even, ""});
  o.checks.push_back({"middle mod-2 dimension even", r.parity_even, ""});
  return o;
}

Outcome cmd_make(const std::string& expr, const std::string& out_path) {
  Outcome o;
  auto x = evaluate_expression(expr, simplex_ceiling());
  const auto text = serialize_space(space_file_of(x));
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw ValidationError("cannot write " + out_path);
  f << text;
  o.digest = sha256_hex(text);
  o.result = {{"expression", expr}, {"dimension", x.dimension()}, {"f_vector", x.f_vector()}};
  return o;
}

Outcome verify_outcome(const BordismCertificate& cert, const CoefficientSpec& c, OrientationMode m) {
  Outcome o;
  o.digest = sha256_hex(serialize_space(space_file_of(cert.w)));
  auto r = verify_bordism(cert, c, m);
  o.result["pass"] = r.pass;
  o.result["w_f_vector"] = cert.w.complex().f_vector();
  o.result["pieces"] = Json::array();
  for (const auto& p : cert.pieces) o.result["pieces"].push_back(p.name);
  o.result["pinch_links"] = Json::array();
  for (const auto& pl : r.pinch_links)
    o.result["pinch_links"].push_back(
        {{"vertex", pl.vertex}, {"link_f2", pl.link_f2}, {"ih1_f2", pl.ih1_f2}, {"ih1_q", pl.ih1_q}, {"pass", pl.pass}});
  for (const auto& ch : r.checks) o.checks.push_back({ch.name, ch.pass, ch.detail});
  return o;
}

std::vector<SurfacePoint> parse_class(const std::string& text) {
  std::vector<SurfacePoint> pts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const auto item = text.substr(pos, comma - pos);
    const auto colon = item.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument("");
      pts.emplace_back(std::stoul(item.substr(0, colon)), static_cast<Vertex>(std::stol(item.substr(colon + 1))));
    } catch (const std::logic_error&) {
      throw ParseError("gluing class entries are <surface>:<vertex>, found '" + item + "'", 1, static_cast<int>(pos) + 1);
    }
    pos = comma + 1;
  }
  return pts;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Witt spaces: homology, intersection homology, Witt conditions and middle forms"};
  app.require_subcommand(1);
  std::string file, coeff = "f2", mode = "z", perversity = "middle", expr, output, manifest;
  bool rel = false, force = false, timing = false;
  std::uint64_t seed = 1;
  std::vector<std::string> surfaces, classes;
  std::string mutate;
  std::function<Outcome()> action;
  std::string command;

  auto* check = app.add_subcommand("check", "validate a space file");
  check->add_option("FILE", file)->required();
  check->callback([&] { action = [&] { return cmd_check(file); }; });

  auto* hom = app.add_subcommand("homology", "simplicial homology");
  hom->add_option("FILE", file)->required();
  hom->add_option("--coeff", coeff, "z, q, f2 or f<p>");
  hom->add_flag("--rel", rel, "relative to the boundary");
  hom->callback([&] { action = [&] { return cmd_homology(file, coeff, rel); }; });

  auto* ih = app.add_subcommand("ih", "intersection homology");
  ih->add_option("FILE", file)->required();
  ih->add_option("--coeff", coeff, "q, f2 or f<p>");
  ih->add_option("--perversity", perversity, "middle, zero or top");
  ih->callback([&] { action = [&] { return cmd_ih(file, coeff, perversity); }; });

  auto* witt = app.add_subcommand("witt", "Witt condition on every stratum");
  witt->add_option("FILE", file)->required();
  witt->add_option("--coeff", coeff);
  witt->add_option("--mode", mode, "z or z2");
  witt->callback([&] { action = [&] { return cmd_witt(file, coeff, mode); }; });

  auto* form = app.add_subcommand("form", "middle-dimensional intersection form over F2");
  form->add_option("FILE", file)->required();
  form->add_option("--seed", seed, "seed for alternative lifts");
  form->callback([&] { action = [&] { return cmd_form(file, seed); }; });

  auto* w = app.add_subcommand("w", "Witt class of the middle form");
  w->add_option("FILE", file)->required();
  w->callback([&] { action = [&] { return cmd_w(file); }; });

  auto* lemma = app.add_subcommand("lemma", "mod-2 middle Betti parity of a closed oriented manifold");
  lemma->add_option("FILE", file)->required();
  lemma->callback([&] { action = [&] { return cmd_lemma(file); }; });

  auto* make = app.add_subcommand("make", "build a space from an expression");
  make->add_option("EXPR", expr)->required();
  make->add_option("-o,--output", output)->required();
  make->callback([&] { action = [&] { return cmd_make(expr, output); }; });

  auto* bordism = app.add_subcommand("bordism", "bordism certificates");
  bordism->require_subcommand(1);
  auto* verify = bordism->add_subcommand("verify", "verify a certificate");
  verify->add_option("WFILE", file)->required();
  verify->add_option("--manifest", manifest)->required();
  verify->add_option("--coeff", coeff);
  verify->add_option("--mode", mode, "z or z2");
  verify->callback([&] {
    action = [&] {
      auto c = CoefficientSpec::parse(coeff);
      if (mode != "z" && mode != "z2") throw ParseError("mode must be z or z2");
      return verify_outcome(read_certificate(file, manifest), c, mode == "z" ? OrientationMode::Z : OrientationMode::Z2);
    };
  });
  auto emit = [&](BordismCertificate cert) {
    write_certificate(cert, output);
    auto o = verify_outcome(cert, CoefficientSpec::f2(), OrientationMode::Z2);
    o.result["directory"] = output;
    return o;
  };
  auto* bcone = bordism->add_subcommand("cone", "closed cone null-bordism");
  bcone->add_option("FILE", file)->required();
  bcone->add_option("-o,--output", output)->required();
  bcone->add_flag("--force", force, "allow even-dimensional X");
  bcone->callback([&] { action = [&] { return emit(closed_cone_nullbordism(read_space_file(file).complex, force)); }; });
  auto* bcyl = bordism->add_subcommand("cylinder", "X x [0,1]");
  bcyl->add_option("FILE", file)->required();
  bcyl->add_option("-o,--output", output)->required();
  bcyl->callback([&] { action = [&] { return emit(cylinder_bordism(read_space_file(file).complex)); }; });
  auto* bpinch = bordism->add_subcommand("pinch", "pinch bordism of closed surfaces");
  bpinch->add_option("--surface", surfaces, "surface file (repeatable)")->required();
  bpinch->add_option("--class", classes, "gluing class <surface>:<vertex>,... (repeatable)")->required();
  bpinch->add_option("-o,--output", output)->required();
  bpinch->callback([&] {
    action = [&] {
      std::vector<SimplicialComplex> ss;
      for (const auto& s : surfaces) ss.push_back(read_space_file(s).complex);
      std::vector<std::vector<SurfacePoint>> cls;
      for (const auto& c : classes) cls.push_back(parse_class(c));
      return emit(pinch_bordism_2d(ss, cls));
    };
  });

  auto* ref = app.add_subcommand("referee", "replay the acceptance suite");
  ref->add_option("--mutate", mutate, "bockstein: negate the Bockstein check");
  ref->add_option("--coeff", coeff, "field for the field-independence subchecks");
  ref->add_option("--seed", seed);
  ref->add_flag("--timing", timing, "include wall-clock times in the report");
  ref->callback([&] {
    action = [&] {
      if (!mutate.empty() && mutate != "bockstein") throw ParseError("unknown mutation '" + mutate + "'");
      RefereeOptions opt;
      opt.mutate_bockstein = mutate == "bockstein";
      opt.coeff = CoefficientSpec::parse(coeff);
      if (!opt.coeff.is_field()) throw ValidationError("referee coefficients must be a field");
      opt.seed = seed;
      opt.timing = timing;
      const auto start = std::chrono::steady_clock::now();
      auto items = referee(opt, &err);
      const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      err << "total " << total << " s\n";
      Outcome o;
      o.digest = sha256_hex("");
      o.result["mutation"] = mutate.empty() ? "none" : mutate;
      o.result["coefficients"] = opt.coeff.name();
      o.result["seed"] = seed;
      if (timing) o.result["total_seconds"] = total;
      for (const auto& it : items) {
        Check c = it.check;
        c.name = std::to_string(it.criterion) + ". " + c.name;
        if (timing) c.detail += (c.detail.empty() ? "" : "; ") + std::to_string(it.seconds) + " s";
        o.checks.push_back(std::move(c));
      }
      return o;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kParse;
  }
  for (const auto* sub : app.get_subcommands()) {
    command = sub->get_name();
    for (const auto* inner : sub->get_subcommands()) command += " " + inner->get_name();
  }

  auto fail = [&](const char* kind, const std::exception& e, int code, int line = 0, int column = 0) {
    Json error = {{"kind", kind}, {"message", e.what()}};
    if (line > 0) error["line"] = line, error["column"] = column;
    out << report_json(command, "", {{"error", error}}, {{kind, false, e.what()}}).dump(2) << "\n";
    err << e.what() << "\n";
    return code;
  };
  try {
    auto o = action();
    out << report_json(command, o.digest, std::move(o.result), o.checks).dump(2) << "\n";
    const bool pass = std::all_of(o.checks.begin(), o.checks.end(), [](const Check& c) { return c.pass; });
    return pass ? kPass : kCheckFailed;
  } catch (const ParseError& e) {
    return fail("parse error", e, kParse, e.line(), e.column());
  } catch (const ValidationError& e) {
    return fail("validation error", e, kValidation);
  } catch (const OutOfReachError& e) {
    return fail("out of reach", e, kOutOfReach);
  }
}

}  // namespace witt::cli
