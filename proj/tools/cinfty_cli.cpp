// cinfty: command-line front end. Reports go to stdout as JSON (--json) and
// to stderr as a table (unless --quiet).
//
// Exit codes: 0 every verdict passes, 1 some verdict fails, 2 parse or I/O
// error, 3 degree/dimension mismatch.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cinfty/acceptance.hpp"
#include "cinfty/derham.hpp"
#include "cinfty/geometry.hpp"
#include "cinfty/integrate.hpp"
#include "cinfty/io.hpp"
#include "cinfty/kaehler.hpp"
#include "cinfty/parse.hpp"

using namespace cinfty;

namespace {

struct Globals {
  std::uint64_t seed = kAcceptanceSeed;
  double tol = 1e-6;
  int degree_bound = 4;
  bool json = false;
  bool quiet = false;
};

// One row of the stderr table.
struct Row {
  std::string key;
  std::string value;
};

struct Report {
  json body;
  std::vector<Row> rows;
  bool pass = true;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> out(1);
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.emplace_back();
      continue;
    }
    out.back() += ch;
  }
  return out;
}

Report cmd_ring(const std::string& path) {
  Ring r = load_ring(path);
  KaehlerPresentation k = kaehler_presentation(r);
  json gens = json::array();
  for (const SmoothExpr& g : r->generators()) gens.push_back(to_string(g));
  json relations = json::array();
  for (const auto& row : k.module.relations) {
    json rel = json::array();
    for (const RingElement& e : row) rel.push_back(to_string(e.rep()));
    relations.push_back(rel);
  }
  Report out;
  out.body = {{"n", r->n()},
              {"generators", gens},
              {"polynomial", r->is_polynomial()},
              {"groebner_size", r->is_polynomial() ? json(r->groebner().size()) : json(nullptr)},
              {"kaehler", {{"rank", k.module.rank}, {"relations", relations}}}};
  out.rows = {{"n", std::to_string(r->n())},
              {"generators", std::to_string(gens.size())},
              {"groebner basis", r->is_polynomial() ? std::to_string(r->groebner().size()) : "-"},
              {"kaehler rank", std::to_string(k.module.rank)},
              {"kaehler relations", std::to_string(relations.size())}};
  return out;
}

Report cmd_identities(const std::string& path, int trials, const Globals& g) {
  if (trials < 0) throw PreconditionError("--trials must be nonnegative");
  Ring r = load_ring(path);
  Report out;
  json suites = json::array();
  for (const SuiteResult& s : identity_suites(r, g.seed, trials)) {
    suites.push_back({{"name", s.name},
                      {"checks", s.checks},
                      {"failures", s.failures},
                      {"verdicts", s.verdicts},
                      {"first_failure", s.first_failure}});
    out.rows.push_back({s.name, std::to_string(s.checks - s.failures) + "/" + std::to_string(s.checks) + " proved"});
    if (s.failures) out.pass = false;
  }
  out.body = {{"trials", trials}, {"suites", suites}};
  return out;
}

Report cmd_psi(const std::string& path, const std::string& form, const Globals& g) {
  Ring r = load_ring(path);
  Form alpha = parse_form(form, r);
  if (alpha.degree() != 1) throw DimensionError("psi needs a 1-form, got degree " + std::to_string(alpha.degree()));
  PsiReport p = psi_noninjectivity_report(to_one_form(alpha), g.degree_bound);
  Report out;
  out.body = to_json(p);
  // Conclusive when membership in J was decided and some derivation was probed.
  out.pass = p.in_J.kind != Verdict::Kind::Unknown && p.derivations_checked > 0;
  out.rows = {{"omega", to_string(to_one_form(alpha))},
              {"in J", to_string(p.in_J.kind)},
              {"derivations", std::to_string(p.derivations_checked)},
              {"contractions in I", p.all_contractions_in_I ? "yes" : "no"},
              {"witness", p.witness() ? "yes" : "no"}};
  return out;
}

Report cmd_stokes(const std::string& ring_path, const std::string& sigma_text, const std::string& gamma_text,
                  int dim, const Globals& g) {
  std::vector<SmoothExpr> comps;
  int k = 0;
  for (const std::string& c : split_top_level(sigma_text)) {
    comps.push_back(parse(c, 64, 't'));
    k = std::max(k, max_variable(comps.back()));
  }
  if (dim >= 0) {
    if (k > dim) throw DimensionError("sigma uses t" + std::to_string(k) + " but --dim is " + std::to_string(dim));
    k = dim;
  }
  Ring r = ring_path.empty() ? free_ring(static_cast<int>(comps.size())) : load_ring(ring_path);
  Form gamma = parse_form(gamma_text, r);
  if (gamma.degree() != k - 1) {
    throw DimensionError("a " + std::to_string(k) + "-simplex needs a " + std::to_string(k - 1) + "-form, got degree " +
                         std::to_string(gamma.degree()));
  }
  SimplexMap sigma = simplex_map(k, r, comps);
  StokesReport s = stokes_check(sigma, gamma, g.tol);
  Report out;
  out.body = to_json(s);
  out.body["sigma"] = to_string(sigma);
  out.body["gamma"] = to_string(gamma);
  out.body["dimension"] = k;
  out.pass = s.pass;
  out.rows = {{"sigma", to_string(sigma)},
              {"gamma", to_string(gamma)},
              {"integral of d gamma", fmt(s.lhs)},
              {"integral over boundary", fmt(s.rhs)},
              {"residual", fmt(s.residual)},
              {"tolerance", fmt(s.tolerance)}};
  return out;
}

Report cmd_sheaf(const std::string& path, const std::string& function, const Globals& g) {
  SpaceDescription d = load_space(path);
  const Space& space = d.space;
  if (d.opens.empty()) throw PreconditionError("the space description lists no opens");
  SmoothExpr f = parse(function, space->n());
  Section top = section(space, whole_space(), f);
  std::vector<Section> family;
  OpenSet cover;
  for (const BasicOpen& b : d.opens) {
    family.push_back(presheaf_restrict(top, open_set(b)));
    cover = unite(cover, open_set(b));
  }
  GlueResult glued = glue(family, g.tol);
  double glue_error = 0.0;
  int covered = 0;
  for (const Point& p : points_in(*space, cover)) {
    glue_error = std::max(glue_error, std::abs(glued.section(p) - top(p)) / (1 + std::abs(top(p))));
    ++covered;
  }
  const bool glue_ok = glue_error <= g.tol;

  // Germ inversion at the sample where |f| is largest.
  const auto& samples = space->samples();
  Point base = *std::max_element(samples.begin(), samples.end(),
                                 [&](const Point& a, const Point& b) { return std::abs(top(a)) < std::abs(top(b)); });
  json germ_report = {{"point", base}, {"value", top(base)}};
  bool germ_ok = false;
  double germ_error = 0.0;
  int germ_points = 0;
  if (top(base) != 0.0) {
    GermRep gr = germ(top, base);
    GermRep inv = germ_invert(gr);
    for (const Point& p : neighborhood_points(*space, base, 0.25, inv.section.open)) {
      germ_error = std::max(germ_error, std::abs(inv.section(p) * gr.section(p) - 1.0));
      ++germ_points;
    }
    germ_ok = germ_points > 0 && germ_error <= g.tol;
    germ_report["inverse"] = to_string(inv.section.rep);
  }
  germ_report["points_checked"] = germ_points;
  germ_report["max_error"] = germ_error;
  germ_report["pass"] = germ_ok;

  Report out;
  out.body = {{"function", to_string(f)},
              {"opens", d.opens.size()},
              {"space_seed", space->seed()},
              {"glue",
               {{"samples_covered", covered},
                {"max_overlap_disagreement", glued.max_overlap_disagreement},
                {"max_blend_error", glued.max_blend_error},
                {"max_error", glue_error},
                {"pass", glue_ok}}},
              {"germ", germ_report}};
  out.pass = glue_ok && germ_ok;
  out.rows = {{"function", to_string(f)},
              {"opens", std::to_string(d.opens.size())},
              {"glue max error", fmt(glue_error) + (glue_ok ? " ok" : " FAIL")},
              {"germ inverse max error", fmt(germ_error) + (germ_ok ? " ok" : " FAIL")}};
  return out;
}

Report cmd_selfcheck(const Globals& g) {
  Report out;
  json criteria = json::array();
  for (const CriterionResult& r : run_acceptance(g.seed)) {
    criteria.push_back({{"id", r.id},
                        {"name", r.name},
                        {"pass", r.pass},
                        {"checks", r.checks},
                        {"failures", r.failures},
                        {"detail", r.detail}});
    out.rows.push_back({std::to_string(r.id) + " " + r.name, (r.pass ? "PASS " : "FAIL ") + fmt(r.seconds) + " s"});
    if (!r.pass) out.pass = false;
  }
  out.body = {{"criteria", criteria}};
  return out;
}

void print_table(const std::string& command, const Report& r) {
  std::size_t width = 0;
  for (const Row& row : r.rows) width = std::max(width, row.key.size());
  std::cerr << command << ": " << (r.pass ? "PASS" : "FAIL") << '\n';
  for (const Row& row : r.rows) {
    std::cerr << "  " << row.key << std::string(width - row.key.size() + 2, ' ') << row.value << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"C-infinity rings, Kaehler differentials, de Rham forms and Stokes checks"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--tol", g.tol, "numerical tolerance")->capture_default_str();
  app.add_option("--degree-bound", g.degree_bound, "cofactor degree bound for membership solves")
      ->capture_default_str();
  app.add_flag("--json", g.json, "print the JSON report on stdout");
  app.add_flag("--quiet", g.quiet, "no table on stderr");

  std::string ring_path, form, sigma, space_path, function = "x1";
  int trials = 50, dim = -1;

  CLI::App* ring = app.add_subcommand("ring", "ring presentation and Kaehler module");
  ring->add_option("--ring", ring_path, "ring JSON file")->required();
  CLI::App* ident = app.add_subcommand("identities", "randomized CDGA identity suites");
  ident->add_option("--ring", ring_path, "ring JSON file")->required();
  ident->add_option("--trials", trials, "trials per suite")->capture_default_str();
  CLI::App* psi = app.add_subcommand("psi", "probe psi on a 1-form");
  psi->add_option("--ring", ring_path, "ring JSON file")->required();
  psi->add_option("--form", form, "1-form literal, e.g. \"x1 * dx2\"")->required();
  CLI::App* stokes = app.add_subcommand("stokes", "compare the integral of d gamma with the boundary integral");
  stokes->add_option("--ring", ring_path, "ring JSON file (default: free ring on the sigma components)");
  stokes->add_option("--sigma", sigma, "comma separated components in t1..tk")->required();
  stokes->add_option("--gamma", form, "form literal of degree k-1")->required();
  stokes->add_option("--dim", dim, "simplex dimension k (default: highest t index in sigma)");
  CLI::App* sheaf = app.add_subcommand("sheaf", "gluing and germ inversion on a space");
  sheaf->add_option("--space", space_path, "space JSON file")->required();
  sheaf->add_option("--function", function, "global function to restrict and glue")->capture_default_str();
  CLI::App* selfcheck = app.add_subcommand("selfcheck", "run the acceptance suite");
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  Report report;
  int code = 0;
  try {
    if (sub == ring) report = cmd_ring(ring_path);
    if (sub == ident) report = cmd_identities(ring_path, trials, g);
    if (sub == psi) report = cmd_psi(ring_path, form, g);
    if (sub == stokes) report = cmd_stokes(ring_path, sigma, form, dim, g);
    if (sub == sheaf) report = cmd_sheaf(space_path, function, g);
    if (sub == selfcheck) report = cmd_selfcheck(g);
    code = report.pass ? 0 : 1;
  } catch (const ParseError& e) {
    report.body = {{"error", e.what()}};
    code = 2;
  } catch (const IoError& e) {
    report.body = {{"error", e.what()}};
    code = 2;
  } catch (const DimensionError& e) {
    report.body = {{"error", e.what()}};
    code = 3;
  } catch (const Error& e) {
    report.body = {{"error", e.what()}};
    code = 1;
  }
  report.pass = code == 0;
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  json inputs = {{"seed", g.seed}, {"tol", g.tol}, {"degree_bound", g.degree_bound}};
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->count() > 0 && opt->get_name() != "--help") inputs[opt->get_name().substr(2)] = opt->results().front();
  }
  json out = {{"command", command},
              {"inputs", inputs},
              {"pass", report.pass},
              {"exit_code", code},
              {"result", report.body},
              {"wall_time", seconds}};
  if (g.json) std::cout << out.dump(2) << '\n';
  if (!g.quiet) {
    if (report.body.contains("error")) std::cerr << command << ": error: " << report.body["error"].get<std::string>() << '\n';
    else print_table(command, report);
  }
  return code;
}
