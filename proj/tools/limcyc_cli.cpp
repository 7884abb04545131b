#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "limcyc/report.hpp"

using namespace limcyc;

namespace {

struct Family {
  double gl = NAN, gr = NAN, al = NAN, ar = NAN;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--gl", gl, "left node ratio gamma_L")->required();
    cmd->add_option("--gr", gr, "right node ratio gamma_R")->required();
    cmd->add_option("--al", al, "left offset alpha_L")->required();
    cmd->add_option("--ar", ar, "right offset alpha_R")->required();
  }
  SystemParams params(double b) const { return {gl, gr, al, ar, b}; }
};

// Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
int fail_usage(const std::string& msg) {
  std::cerr << "error: " << msg << '\n';
  return 2;
}

bool write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) return false;
  f << text;
  return static_cast<bool>(f);
}

int run_analyze(const Family& fam, double b, bool csv, bool timings) {
  SystemParams p = fam.params(b);
  require_node(p);
  auto v = validate_for_cycles(p);
  if (!v.ok) return fail_usage(v.reason);
  AnalysisReport r = analyze(p);
  if (csv) {
    std::cout << "y0,multiplicity,stability,iterate_verdict,d_prime\n";
    for (const auto& a : r.roots)
      std::cout << format_double(a.root.y0_star) << ',' << a.root.multiplicity << ',' << to_string(a.root.stability) << ','
                << to_string(a.probe.verdict) << ',' << format_double(a.root.dprime) << '\n';
  } else {
    std::cout << dump(to_json(r, timings));
  }
  return 0;
}

int run_scan(const Family& fam, double from, double to, int steps, const std::string& out, bool csv) {
  if (steps <= 0) return fail_usage("--steps must be positive");
  if (!std::isfinite(from) || !std::isfinite(to) || !(from < to)) return fail_usage("b range must be finite with b-from < b-to");
  SystemParams fp = fam.params(0);
  require_node(fp);
  auto v = validate_for_cycles(fp);
  if (!v.ok) return fail_usage(v.reason);
  BifurcationReport r = scan_b(fp, linspace_grid(from, to, steps));
  if (!out.empty() && !write_text(out, scan_csv(r))) return fail_usage("cannot write " + out);
  if (csv && out.empty())
    std::cout << scan_csv(r);
  else
    std::cout << dump(to_json(r, out.empty()));
  return 0;
}

int run_verify(const std::string& what, const VerifyOptions& opt, bool timings) {
  std::vector<VerifyReport> reports;
  auto want = [&](const char* n) { return what == "all" || what == n; };
  if (want("r1")) reports.push_back(verify_lemma("R1", opt));
  if (want("r2")) reports.push_back(verify_lemma("R2", opt));
  if (want("h3")) reports.push_back(verify_lemma("H3", opt));
  if (want("signs")) reports.push_back(verify_section42_signs(opt));
  if (want("resultants")) reports.push_back(verify_resultant_identities(opt));
  if (want("appendix")) reports.push_back(verify_appendix());
  bool pass = true;
  Json arr = Json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass;
    arr.push_back(to_json(r, timings));
  }
  Json j{{"target", what}, {"pass", pass}, {"box_max", opt.box_max.get_d()}, {"seed", opt.seed}, {"reports", arr}};
  std::cout << dump(j);
  return pass ? 0 : 1;
}

int run_orbit(const Family& fam, double b, double y0, int turns, int samples, const std::string& out) {
  if (turns <= 0) return fail_usage("--turns must be positive");
  if (samples < 2) return fail_usage("--samples must be at least 2");
  SystemParams p = fam.params(b);
  require_node(p);
  auto v = validate_for_cycles(p);
  if (!v.ok) return fail_usage(v.reason);
  OrbitTrace o = trace_orbit(p, y0, turns, samples);
  if (!write_text(out, orbit_csv(o))) return fail_usage("cannot write " + out);
  if (!out.empty() && out != "-") {
    Json sec = Json::array();
    for (double s : o.section) sec.push_back(s);
    std::cout << dump(Json{{"rows", o.samples.size()}, {"section", sec}});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Limit cycles of planar piecewise linear node-node systems"};
  app.require_subcommand(1);
  app.fallthrough();
  bool timings = false;
  app.add_flag("--timings", timings, "include wall-clock timings in JSON output");

  Family fam;
  double b = 0;

  auto* an = app.add_subcommand("analyze", "count and classify crossing limit cycles of one system");
  fam.add_to(an);
  an->add_option("--b", b, "offset of the right subsystem")->required();
  bool an_json = false, an_csv = false;
  auto* jflag = an->add_flag("--json", an_json, "JSON report (default)");
  an->add_flag("--csv", an_csv, "one CSV row per cycle")->excludes(jflag);

  auto* sc = app.add_subcommand("scan", "sweep b over a uniform grid");
  Family sfam;
  sfam.add_to(sc);
  double b_from = NAN, b_to = NAN;
  int steps = 0;
  std::string sc_out;
  bool sc_csv = false;
  sc->add_option("--b-from", b_from)->required();
  sc->add_option("--b-to", b_to)->required();
  sc->add_option("--steps", steps, "number of intervals; steps+1 grid points")->required();
  sc->add_option("--out", sc_out, "write per-point CSV rows here");
  sc->add_flag("--csv", sc_csv, "print CSV rows instead of JSON");

  auto* ve = app.add_subcommand("verify", "certify the polynomial lemmas and sign claims");
  std::string target;
  VerifyOptions vopt;
  ve->add_option("target", target)->required()->check(CLI::IsMember({"r1", "r2", "h3", "signs", "resultants", "appendix", "all"}));
  long box_max = 200;
  ve->add_option("--box-max", box_max, "upper end of the certified u range")->check(CLI::Range(2L, 1000000L));
  ve->add_option("--seed", vopt.seed, "seed for random identity points");
  ve->add_option("--grid", vopt.grid, "points per axis for sign grids")->check(CLI::Range(2, 5000));

  auto* ob = app.add_subcommand("orbit", "sample a trajectory over several return-map turns");
  Family ofam;
  ofam.add_to(ob);
  double ob_b = 0, y0 = NAN;
  int turns = 1, samples = 64;
  std::string ob_out;
  ob->add_option("--b", ob_b)->required();
  ob->add_option("--y0", y0, "starting point (0, y0) on the switching line")->required();
  ob->add_option("--turns", turns)->required();
  ob->add_option("--samples", samples, "samples per half-plane transit");
  ob->add_option("--out", ob_out, "CSV destination, stdout when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (an->parsed()) return run_analyze(fam, b, an_csv, timings);
    if (sc->parsed()) return run_scan(sfam, b_from, b_to, steps, sc_out, sc_csv);
    if (ve->parsed()) {
      vopt.box_max = BigRational(box_max);
      return run_verify(target, vopt, timings);
    }
    if (ob->parsed()) return run_orbit(ofam, ob_b, y0, turns, samples, ob_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::VerificationFailure || e.kind() == ErrorKind::SignViolation ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
