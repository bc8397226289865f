// Batch front end: builds fans, runs the feasibility sieves, validates
// morphism data, produces the theta certificate and the lattice analysis.
// Standard output carries exactly one JSON report; progress chatter goes
// to standard error under LOG_LEVEL=info|debug (default info, LOG_LEVEL=quiet
// silences it). Exit codes: 0 success / valid / empty-as-expected,
// 1 violations or instability found, 2 malformed input.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "toric4/abelian_lattice.hpp"
#include "toric4/chow_ring.hpp"
#include "toric4/lattice_fan.hpp"
#include "toric4/numeric.hpp"
#include "toric4/surface_classify.hpp"
#include "toric4/theta_engine.hpp"
#include "toric4/toric_morphism.hpp"

using namespace toric4;

namespace {

int log_level() {
  const char* env = std::getenv("LOG_LEVEL");
  if (!env) return 1;
  std::string s(env);
  if (s == "quiet") return 0;
  if (s == "debug") return 2;
  return 1;
}

void info(const std::string& msg) {
  if (log_level() >= 1) std::cerr << msg << "\n";
}

Json report_head(const std::string& command) {
  Json j;
  j["command"] = command;
  j["tool_version"] = kToolVersion;
  return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<Int> to_ints(const std::vector<std::string>& raw) {
  std::vector<Int> out;
  for (const auto& s : raw) out.emplace_back(s);
  return out;
}

BundleSpace space_from(const std::vector<int>& family, const std::vector<std::string>& twists) {
  if (family.size() != 2 || family[0] + family[1] != 4)
    throw std::invalid_argument("--family needs base and fiber dimension summing to 4");
  return BundleSpace(family[0], to_ints(twists));
}

DegreeMode mode_from(const std::string& s) {
  if (s == "paper") return DegreeMode::paper;
  if (s == "fan") return DegreeMode::fan;
  throw std::invalid_argument("--mode must be paper or fan");
}

Fan load_fan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open fan file " + path);
  Json doc = Json::parse(in, nullptr, true, true);
  if (doc.contains("results") && doc["results"].contains("fan"))
    return fan_from_json(doc["results"]["fan"]);  // accept a previous report
  return fan_from_json(doc);
}

void maybe_table_banner(const BundleSpace& sp) {
  if (sp.base_dim != 2) return;
  auto tp = degree_table(sp, DegreeMode::paper);
  auto tf = degree_table(sp, DegreeMode::fan);
  if (tp != tf)
    info("note: printed and fan degree tables differ at b^4 (" + tp[4].str() + " vs " +
         tf[4].str() + "); rerun with --mode fan for the reduction table");
}

int cmd_fan(const std::vector<int>& family, const std::vector<std::string>& twists,
            const std::string& fan_file) {
  Json rep = report_head("fan");
  Fan fan = fan_file.empty()
                ? space_from(family, twists).fan()
                : load_fan(fan_file);
  Json inputs;
  if (!fan_file.empty()) inputs["fan_file"] = fan_file;
  else {
    inputs["family"] = family;
    inputs["twists"] = twists;
  }
  rep["inputs"] = inputs;
  Json res;
  res["fan"] = fan_to_json(fan);
  res["smooth"] = is_smooth(fan);
  res["complete"] = is_complete(fan);
  res["primitive_collections"] = primitive_collections(fan);
  rep["results"] = res;
  emit(rep);
  return 0;
}

int cmd_chow(const std::vector<int>& family, const std::vector<std::string>& twists) {
  BundleSpace sp = space_from(family, twists);
  maybe_table_banner(sp);
  Json rep = report_head("chow");
  rep["inputs"] = Json{{"family", family}, {"twists", twists}};
  Json res;
  res["kappa"] = int_json(sp.kappa());
  static const char* names[5] = {"a^4", "a^3 b", "a^2 b^2", "a b^3", "b^4"};
  Json tables;
  for (auto mode : {DegreeMode::paper, DegreeMode::fan}) {
    auto t = degree_table(sp, mode);
    Json tj;
    for (int i = 0; i < 5; ++i) tj[names[i]] = int_json(t[i]);
    tables[mode == DegreeMode::paper ? "paper" : "fan"] = tj;
  }
  tables["differ"] =
      degree_table(sp, DegreeMode::paper) != degree_table(sp, DegreeMode::fan);
  res["degree_tables"] = tables;
  res["c2"] = ring_element_json(chern_c2(sp));
  rep["results"] = res;
  emit(rep);
  return 0;
}

int cmd_classify(const std::vector<int>& family, const std::vector<std::string>& twists,
                 const std::string& nu_s, const std::string& mu_max_s, const std::string& mode_s) {
  BundleSpace sp = space_from(family, twists);
  maybe_table_banner(sp);
  DegreeMode mode = mode_from(mode_s);
  Json rep = report_head("classify");
  rep["mode"] = mode_s;
  Json inputs{{"family", family}, {"twists", twists}};
  Json res;
  if (sp.base_dim == 1) {
    auto cands = sieve_p3_bundle(sp.twists);
    Json arr = Json::array();
    int surviving = 0;
    for (const auto& c : cands) {
      if (c.verdict != Verdict::rejected) ++surviving;
      arr.push_back(candidate_json(c));
    }
    res["candidates"] = arr;
    res["surviving"] = surviving;
  } else if (sp.base_dim == 3) {
    auto r = check_p1_bundle(sp.kappa());
    Json rj;
    rj["applicable"] = r.applicable;
    if (r.applicable) {
      rj["lambda"] = int_json(r.lambda);
      rj["mu"] = int_json(r.mu);
      rj["empty"] = r.empty;
    }
    res["forced_class"] = rj;
  } else {
    if (nu_s.empty()) throw std::invalid_argument("the P^2-bundle scan needs --nu");
    Int nu(nu_s);
    Int mu_max = mu_max_s.empty() ? Int(10) * sp.kappa() * nu : Int(mu_max_s);
    inputs["nu"] = int_json(nu);
    inputs["mu_max"] = int_json(mu_max);
    auto cands = enumerate_p2_bundle(sp.twists[0], sp.twists[1], nu, mu_max, mode);
    Json arr = Json::array();
    int surviving = 0;
    for (const auto& c : cands) {
      if (c.verdict != Verdict::rejected) ++surviving;
      arr.push_back(candidate_json(c));
    }
    res["candidates"] = arr;
    res["surviving"] = surviving;
    auto reg = region_test(sp.twists[0], sp.twists[1], nu);
    Json rt;
    rt["x_star"] = rat_json(reg.x_star);
    rt["f_at_x_star"] = rat_json(reg.f_at_x_star);
    rt["fprime_at_x_star"] = rat_json(reg.fprime_at_x_star);
    rt["threshold"] = rat_json(reg.threshold);
    rt["corner_gap"] = rat_json(reg.corner_gap);
    rt["slope_gap"] = rat_json(reg.slope_gap);
    rt["exact_value"] = int_json(reg.exact_value);
    rt["coarse_value"] = int_json(reg.coarse_value);
    rt["verdict"] = reg.verdict;
    res["region_test"] = rt;
  }
  rep["inputs"] = inputs;
  rep["results"] = res;
  emit(rep);
  return 0;
}

int cmd_curve(const std::string& fan_file, const std::vector<std::string>& polys,
              const std::string& enumerate_s, const std::string& eval_at) {
  Fan fan = load_fan(fan_file);
  Json rep = report_head("curve");
  Json inputs{{"fan_file", fan_file}};
  Json res;
  int rc = 0;
  if (!enumerate_s.empty()) {
    Int bound(enumerate_s);
    inputs["enumerate_degrees"] = int_json(bound);
    Json arr = Json::array();
    for (const auto& dv : admissible_degrees(fan, bound)) {
      Json row = Json::array();
      for (const Int& d : dv) row.push_back(int_json(d));
      arr.push_back(row);
    }
    res["degree_vectors"] = arr;
  } else {
    if (polys.size() != fan.rays().size())
      throw std::invalid_argument("need exactly one polynomial per ray");
    CurveData data;
    Json parsed = Json::array();
    for (const auto& s : polys) {
      RatPoly p = parse_poly(s);
      if (!p.is_monic()) throw std::invalid_argument("polynomial not monic: " + s);
      Json pj;
      pj["input"] = s;
      pj["degree"] = p.deg();
      Json coeffs = Json::array();
      for (const Rat& c : p.coeffs()) coeffs.push_back(rat_json(c));
      pj["coefficients"] = coeffs;
      parsed.push_back(pj);
      data.polys.push_back(std::move(p));
    }
    inputs["polys"] = polys;
    res["parsed"] = parsed;
    auto v = validate_curve(fan, data);
    res["valid"] = v.valid;
    Json viols = Json::array();
    for (const auto& viol : v.violations) {
      Json vj;
      vj["kind"] = viol.kind;
      vj["where"] = viol.where;
      vj["detail"] = viol.detail;
      viols.push_back(vj);
    }
    res["violations"] = viols;
    if (!v.valid) rc = 1;
    if (v.valid && !eval_at.empty()) {
      std::optional<Rat> z0;
      if (eval_at != "inf" && eval_at != "oo") z0 = parse_rational(eval_at);
      auto pt = evaluate_curve(fan, data, z0);
      Json ej;
      ej["at"] = eval_at;
      ej["cone"] = pt.cone.rays;
      ej["chart_rays"] = pt.chart_rays;
      Json coords = Json::array();
      for (const Rat& c : pt.coords) coords.push_back(rat_json(c));
      ej["coords"] = coords;
      res["evaluation"] = ej;
    }
  }
  rep["inputs"] = inputs;
  rep["results"] = res;
  emit(rep);
  return rc;
}

int cmd_theta(int s_cut, long long t_window, bool all_brackets) {
  Json rep = report_head("theta");
  rep["inputs"] = Json{{"s_cut", s_cut}, {"t_window", t_window}};
  info("expanding the 4x3 matrix of restricted series");
  ThetaMatrix m = build_theta_matrix(s_cut, t_window);
  std::array<SSeries, 4> minors;
  for (int k = 0; k < 4; ++k) minors[k] = matrix_minor(m, k);
  Json res;
  Json gs;
  for (int k = 0; k < 4; ++k) {
    gs["g" + std::to_string(k) + "2"] = tlaurent_json(g_coefficient(minors[k], 2));
    gs["g" + std::to_string(k) + "5"] = tlaurent_json(g_coefficient(minors[k], 5));
  }
  res["g_coefficients"] = gs;
  auto cert = certified_obstruction(s_cut, t_window);
  Json oj;
  oj["bracket"] = "g02*g15 - g12*g05";
  oj["constant_term"] = Json{{"re", int_json(cert.value.x)}, {"w", int_json(cert.value.y)}};
  oj["stable"] = cert.stable;
  oj["window"] = cert.window;
  oj["recheck_window"] = cert.recheck_window;
  res["obstruction"] = oj;
  if (all_brackets) {
    Json br = Json::array();
    for (int k = 0; k < 4; ++k)
      for (int l = k + 1; l < 4; ++l) {
        TLaurent gk2 = g_coefficient(minors[k], 2), gk5 = g_coefficient(minors[k], 5);
        TLaurent gl2 = g_coefficient(minors[l], 2), gl5 = g_coefficient(minors[l], 5);
        TLaurent bracket = tl_mul(gk2, gl5);
        for (const auto& [e, c] : tl_mul(gl2, gk5)) {
          auto& slot = bracket[e];
          slot = slot - c;
        }
        EisensteinInt c0 = tl_coeff(bracket, 0);
        Json bj;
        bj["bracket"] = "g" + std::to_string(k) + "2*g" + std::to_string(l) + "5 - g" +
                        std::to_string(l) + "2*g" + std::to_string(k) + "5";
        bj["constant_term"] = Json{{"re", int_json(c0.x)}, {"w", int_json(c0.y)}};
        br.push_back(bj);
      }
    res["all_brackets"] = br;
  }
  rep["results"] = res;
  emit(rep);
  return cert.stable ? 0 : 1;
}

int cmd_lattice() {
  Json rep = report_head("lattice");
  rep["inputs"] = Json::object();
  PolarizedLattice pl{1, 3};
  Wedge2 e1 = polarization_class(pl);
  Wedge2 c = curve_class({1, 0, 0, 0}, {0, 0, 4, 1});
  Wedge2 a;
  for (int i = 0; i < 6; ++i) a[i] = e1[i] + 2 * c[i];

  Json res;
  Json emb;
  auto g1 = lattice_coordinates({PeriodScalar{4, 0, 0}, PeriodScalar{3, 0, 0}});
  auto gt = lattice_coordinates({PeriodScalar{0, 4, 0}, PeriodScalar{0, 3, 0}});
  Json g1j = Json::array(), gtj = Json::array();
  for (int i = 0; i < 4; ++i) {
    g1j.push_back(int_json((*g1)[i]));
    gtj.push_back(int_json((*gt)[i]));
  }
  emb["gamma(1)"] = g1j;
  emb["gamma(tau1)"] = gtj;
  res["curve_embedding"] = emb;

  Json nums;
  nums["E1.E1"] = int_json(pairing(e1, e1));
  nums["E1.C"] = int_json(pairing(e1, c));
  nums["C.C"] = int_json(pairing(c, c));
  nums["C_primitive"] = is_primitive(c);
  nums["(E1+D1).(E1+D1)"] = int_json(pairing(a, a));
  nums["h0(E1+D1)"] = int_json(h0_even_positive(pairing(a, a)));
  res["intersections"] = nums;

  GramNS gm = gram(e1, a);
  res["gram"] = Json::array({Json::array({int_json(gm.m[0][0]), int_json(gm.m[0][1])}),
                             Json::array({int_json(gm.m[1][0]), int_json(gm.m[1][1])})});

  GramNS gab;  // ordering (a, b) = (E1 + D1, E1)
  gab.m = {{{gm.m[1][1], gm.m[0][1]}, {gm.m[0][1], gm.m[0][0]}}};
  res["isotropic"] = isotropic_json(isotropic_directions(gab));
  auto branches = reider_case_analysis(gab);
  res["reider_branches"] = reider_json(branches);
  bool all_contradictory = true;
  for (const auto& b : branches) all_contradictory &= !b.consistent;
  res["very_ample"] = all_contradictory;
  rep["results"] = res;
  emit(rep);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toric 4-fold calculator: fans, intersection rings, abelian-surface sieves"};
  app.require_subcommand(1);

  std::vector<int> family;
  std::vector<std::string> twists, polys;
  std::string fan_file, nu_s, mu_max_s, mode_s = "paper", enum_s, eval_at;
  int s_cut = 8;
  long long t_window = 60;
  bool all_brackets = false;

  auto* fan_cmd = app.add_subcommand("fan", "build or inspect a fan");
  fan_cmd->add_option("--family", family, "base and fiber dimension (d s)")->expected(2);
  fan_cmd->add_option("--twists", twists, "bundle twists, nonincreasing");
  fan_cmd->add_option("--fan", fan_file, "fan JSON file to inspect");

  auto* chow_cmd = app.add_subcommand("chow", "intersection tables and c2");
  chow_cmd->add_option("--family", family, "base and fiber dimension (d s)")->expected(2);
  chow_cmd->add_option("--twists", twists, "bundle twists, nonincreasing");

  auto* cls_cmd = app.add_subcommand("classify", "run the numerical feasibility sieves");
  cls_cmd->add_option("--family", family, "base and fiber dimension (d s)")->expected(2);
  cls_cmd->add_option("--twists", twists, "bundle twists, nonincreasing");
  cls_cmd->add_option("--nu", nu_s, "even nu >= 6 (P^2-bundle scan)");
  cls_cmd->add_option("--mu-max", mu_max_s, "scan bound, default 10*kappa*nu");
  cls_cmd->add_option("--mode", mode_s, "degree table: paper | fan")->capture_default_str();

  auto* curve_cmd = app.add_subcommand("curve", "validate morphism data for maps from P^1");
  curve_cmd->add_option("--fan", fan_file, "fan JSON file")->required();
  curve_cmd->add_option("--polys", polys, "one monic polynomial per ray, e.g. \"z^2-3/2*z+1\"");
  curve_cmd->add_option("--enumerate-degrees", enum_s, "list balanced degree vectors up to a total");
  curve_cmd->add_option("--eval-at", eval_at, "evaluate at a rational point or inf");

  auto* theta_cmd = app.add_subcommand("theta", "theta minors and the obstruction constant");
  theta_cmd->add_option("--s-cut", s_cut, "series truncation order")->capture_default_str();
  theta_cmd->add_option("--t-window", t_window, "Laurent window")->capture_default_str();
  theta_cmd->add_flag("--all-brackets", all_brackets, "emit all six 2x2 brackets");

  auto* lattice_cmd = app.add_subcommand("lattice", "period lattice and very-ampleness analysis");

  try {
    app.parse(argc, argv);
    if (fan_cmd->parsed()) return cmd_fan(family, twists, fan_file);
    if (chow_cmd->parsed()) return cmd_chow(family, twists);
    if (cls_cmd->parsed()) return cmd_classify(family, twists, nu_s, mu_max_s, mode_s);
    if (curve_cmd->parsed()) return cmd_curve(fan_file, polys, enum_s, eval_at);
    if (theta_cmd->parsed()) return cmd_theta(s_cut, t_window, all_brackets);
    if (lattice_cmd->parsed()) return cmd_lattice();
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
