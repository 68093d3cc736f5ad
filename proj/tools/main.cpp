#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "spinspec/io.hpp"
#include "spinspec/liealg.hpp"
#include "spinspec/matterscan.hpp"
#include "spinspec/repcat.hpp"
#include "spinspec/rwegen.hpp"
#include "spinspec/special.hpp"
#include "spinspec/spectral.hpp"
#include "spinspec/verify.hpp"

namespace {

using namespace spinspec;

struct CliState {
  Config cfg;
  std::optional<std::string> config_path;
  std::optional<std::string> out_dir;
  std::optional<std::string> format;
  std::optional<std::string> coefficient;
  std::optional<double> snap_tol;
  std::optional<double> hsf_tol;

  void finalize() {
    cfg = load_config(config_path ? std::optional<std::filesystem::path>(*config_path)
                                  : std::nullopt);
    if (out_dir) cfg.output_dir = *out_dir;
    if (format) cfg.format = parse_format(*format);
    if (coefficient) cfg.default_coefficient = parse_coefficient(*coefficient);
    if (snap_tol) cfg.snap_tol = *snap_tol;
    if (hsf_tol) cfg.hsf_tol = *hsf_tol;
    std::filesystem::create_directories(cfg.output_dir);
  }

  CoefficientSet coeffs() const { return CoefficientSet::uniform(cfg.default_coefficient); }

  std::filesystem::path out(const std::string& name) const { return cfg.output_dir / name; }
};

std::string lambda_stem(const RepLabel& rep, int j, bool dual) {
  return "lambda_" + std::to_string(rep.l.twice) + "_" + std::to_string(rep.ldot.twice) + "_j" +
         std::to_string(j) + (dual ? "_dual" : "");
}

int cmd_rep(CliState& st, std::int64_t two_l, std::int64_t two_ldot) {
  RepLabel rep = RepLabel::from_twice(two_l, two_ldot);
  json j = rep_info_json(rep, Rational(1));
  write_text(st.out("rep_" + std::to_string(two_l) + "_" + std::to_string(two_ldot) + ".json"),
             dump(j));
  std::cout << "tau_" << rep.to_string() << ": degree " << rep.degree() << ", spin "
            << rep.spin().to_string() << ", mass " << mass(rep, Rational(1)).to_string()
            << " mu0, cell " << cell_index(rep).cell << "\n";
  return 0;
}

int cmd_chain(CliState& st, std::int64_t two_l, std::int64_t two_ldot, bool emit_system) {
  RepLabel rep = RepLabel::from_twice(two_l, two_ldot);
  json j = chain_json(rep);
  std::string stem = "chain_" + std::to_string(two_l) + "_" + std::to_string(two_ldot);
  write_text(st.out(stem + ".json"), dump(j));
  std::cout << "chain of " << rep.to_string() << ":";
  for (const auto& link : chain(rep).links) std::cout << " " << link.to_string();
  std::cout << "\n";
  if (emit_system) {
    RweSystem sys = assemble_system(chain(rep), Rational(1), st.coeffs());
    write_text(st.out(stem + "_system.json"), dump(system_manifest(sys, stem)));
    for (std::size_t k = 0; k < sys.links.size(); ++k) {
      const RweLink& link = sys.links[k];
      const auto& triple = link.dual_role ? link.dual : link.forward;
      for (int jj = 1; jj <= 3; ++jj)
        write_matrix_market(triple[static_cast<std::size_t>(jj - 1)].entries,
                            st.out(stem + "_link" + std::to_string(k) + "_j" +
                                   std::to_string(jj) + (link.dual_role ? "_dual" : "") + ".mtx"));
    }
    std::cout << "wrote system manifest and " << 3 * sys.links.size() << " matrices\n";
  }
  return 0;
}

int cmd_lambda(CliState& st, std::int64_t two_l, std::int64_t two_ldot, int j, bool dual) {
  RepLabel rep = RepLabel::from_twice(two_l, two_ldot);
  LambdaMatrix lam = build_lambda(rep, j, st.coeffs(), dual);
  std::string stem = lambda_stem(rep, j, dual);
  if (st.cfg.format == OutputFormat::matrixmarket || st.cfg.format == OutputFormat::csv) {
    write_matrix_market(lam.entries, st.out(stem + ".mtx"));
    std::cout << "wrote " << st.out(stem + ".mtx").string() << " (+ exact sidecar)\n";
  } else {
    json entries = json::array();
    for (int r = 0; r < lam.entries.dim(); ++r)
      for (int c = 0; c < lam.entries.dim(); ++c)
        if (!lam.entries.at(r, c).is_zero()) {
          json e = to_json(lam.entries.at(r, c));
          e["row"] = r;
          e["col"] = c;
          entries.push_back(e);
        }
    json out{{"rep", to_json(rep)}, {"j", j}, {"dual", dual}, {"dim", lam.entries.dim()},
             {"entries", entries}};
    write_text(st.out(stem + ".json"), dump(out));
    std::cout << "wrote " << st.out(stem + ".json").string() << "\n";
  }
  return 0;
}

int cmd_charpoly(CliState& st, std::int64_t two_l, std::int64_t two_ldot, int j, bool dual) {
  RepLabel rep = RepLabel::from_twice(two_l, two_ldot);
  LambdaMatrix lam = build_lambda(rep, j, st.coeffs(), dual);
  RationalPolynomial p = charpoly_exact(lam);
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.to_string());
  json out{{"rep", to_json(rep)}, {"j", j}, {"dual", dual}, {"coeffs_ascending", coeffs}};
  write_text(st.out("charpoly_" + lambda_stem(rep, j, dual) + ".json"), dump(out));
  std::cout << p.to_string("x") << "\n";
  return 0;
}

int cmd_spectrum(CliState& st, std::int64_t two_l, std::int64_t two_ldot, int j, bool dual) {
  RepLabel rep = RepLabel::from_twice(two_l, two_ldot);
  LambdaMatrix lam = build_lambda(rep, j, st.coeffs(), dual);
  SpectrumReport report = classify(lam);
  write_text(st.out("spectrum_" + lambda_stem(rep, j, dual) + ".json"), dump(to_json(report)));
  std::cout << "spectrum of Lambda^" << rep.to_string() << "_" << j << ": "
            << to_string(report.classification) << ", " << report.distinct_count
            << " distinct eigenvalue(s)\n";
  if (report.profile.size() <= 40) std::cout << divisor_string(report) << "\n";
  return 0;
}

int cmd_census(CliState& st) {
  CensusReport c = proton_census();
  if (st.cfg.format == OutputFormat::csv)
    write_text(st.out("census.csv"), census_csv(c));
  else
    write_text(st.out("census.json"), dump(to_json(c)));
  std::cout << "tau_(15,29/2) census: distinct=" << c.distinct_count
            << " sum=" << c.consistency_sum;
  for (const auto& [mult, count] : c.multiplicity_histogram)
    std::cout << " mult" << mult << "x" << count;
  std::cout << "\n";
  return 0;
}

int cmd_search(CliState& st, double ratio) {
  StabilityResult r = stability_search(ratio);
  write_text(st.out("search.json"), dump(to_json(r)));
  std::cout << "ratio " << ratio << " -> tau_" << r.rep.to_string() << ", degree " << r.degree
            << ", cell " << r.cell << ", boundary distance "
            << r.boundary_distance.to_string() << "\n";
  return 0;
}

int cmd_hsf(CliState& st, double rho, std::int64_t two_l0, std::int64_t two_m, std::int64_t two_n,
            double theta, double tau, double phi, double psi, double eps_m, double eps_n) {
  HsfParams p;
  p.rho = rho;
  p.l0 = HalfInt::from_twice(two_l0);
  p.m = HalfInt::from_twice(two_m);
  p.n = HalfInt::from_twice(two_n);
  p.theta = theta;
  p.tau = tau;
  p.phi = phi;
  p.psi = psi;
  p.eps_m = eps_m;
  p.eps_n = eps_n;
  std::complex<double> v = hyperspherical_m(p, st.cfg.hsf_tol);
  char row[256];
  std::snprintf(row, sizeof row, "%.17g,%lld,%lld,%lld,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                rho, static_cast<long long>(two_l0), static_cast<long long>(two_m),
                static_cast<long long>(two_n), theta, tau, phi, psi, eps_m, eps_n, v.real(),
                v.imag());
  std::string csv = "rho,two_l0,two_m,two_n,theta,tau,phi,psi,eps_m,eps_n,re,im\n" + std::string(row);
  write_text(st.out("hsf.csv"), csv);
  std::cout << csv;
  return 0;
}

int cmd_table(CliState& st, std::int64_t two_max_weight) {
  auto rows = matter_table(HalfInt::from_twice(two_max_weight), Rational(1));
  if (st.cfg.format == OutputFormat::csv)
    write_text(st.out("table.csv"), matter_table_csv(rows));
  else
    write_text(st.out("table.json"), dump(to_json(rows)));
  std::cout << rows.size() << " node(s) up to weight " << HalfInt::from_twice(two_max_weight).to_string()
            << "\n";
  return 0;
}

int cmd_verify(CliState& st) {
  auto results = run_all_checks();
  json jr = json::array();
  bool all_ok = true;
  for (const auto& r : results) {
    std::cout << (r.ok ? "[ ok ] " : "[FAIL] ") << r.name;
    if (!r.ok) std::cout << ": " << r.detail;
    std::cout << "\n";
    jr.push_back(json{{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    all_ok = all_ok && r.ok;
  }
  write_text(st.out("verify.json"), dump(json{{"checks", jr}, {"ok", all_ok}}));
  std::cout << (all_ok ? "all checks passed" : "verification FAILED") << "\n";
  return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "spinspec: exact interlocking-representation catalog and wave-equation operator spectra.\n"
      "All spin arguments are doubled integers: `rep 30 29` is tau_(15,29/2)."};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  CliState st;
  app.add_option("--config", st.config_path, "JSON config file (SPINSPEC_CONFIG overrides)");
  app.add_option("--out-dir", st.out_dir, "directory for machine-readable outputs");
  app.add_option("--format", st.format, "json, csv or matrixmarket");
  app.add_option("--c", st.coefficient, "diagonal coefficient, e.g. 2, 1/3 or sqrt(2)");
  app.add_option("--snap-tol", st.snap_tol, "half-integer snap tolerance for numeric spectra");
  app.add_option("--hsf-tol", st.hsf_tol, "series tolerance for the hyperspherical function");

  std::int64_t two_l = 0, two_ldot = 0, two_max_weight = 0;
  int j = 3;
  bool dual = false;
  double ratio = 1836.57;
  double rho = 0.0, theta = 0.0, tau = 0.0, phi = 0.0, psi = 0.0, eps_m = 0.0, eps_n = 0.0;
  std::int64_t two_l0 = 0, two_m = 0, two_n = 0;

  auto add_rep_args = [&](CLI::App* sub) {
    sub->add_option("two_l", two_l, "2l (doubled)")->required();
    sub->add_option("two_ldot", two_ldot, "2*ldot (doubled)")->required();
  };
  auto add_axis_args = [&](CLI::App* sub) {
    sub->add_option("--j", j, "axis 1..3")->check(CLI::Range(1, 3));
    sub->add_flag("--dual", dual, "starred variant");
  };

  CLI::App* rep_cmd = app.add_subcommand("rep", "catalog entry for one node");
  add_rep_args(rep_cmd);
  CLI::App* chain_cmd = app.add_subcommand("chain", "spin chain through a node");
  add_rep_args(chain_cmd);
  bool emit_system = false;
  chain_cmd->add_flag("--emit-system", emit_system,
                      "also write the assembled system manifest and matrices");
  CLI::App* lambda_cmd = app.add_subcommand("lambda", "export a wave-equation matrix");
  add_rep_args(lambda_cmd);
  add_axis_args(lambda_cmd);
  CLI::App* charpoly_cmd = app.add_subcommand("charpoly", "exact characteristic polynomial");
  add_rep_args(charpoly_cmd);
  add_axis_args(charpoly_cmd);
  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalue/degeneracy report");
  add_rep_args(spectrum_cmd);
  add_axis_args(spectrum_cmd);
  app.add_subcommand("census", "spectral census of the tau_(15,29/2) level");
  CLI::App* search_cmd = app.add_subcommand("search", "stability-level search on the spin-1/2 line");
  search_cmd->add_option("--ratio", ratio, "mass ratio")->required();
  CLI::App* hsf_cmd = app.add_subcommand("hsf", "principal-series hyperspherical function");
  hsf_cmd->add_option("--rho", rho)->required();
  hsf_cmd->add_option("--l0", two_l0, "2*l0 (doubled)")->required();
  hsf_cmd->add_option("--m", two_m, "2m (doubled)")->required();
  hsf_cmd->add_option("--n", two_n, "2n (doubled)")->required();
  hsf_cmd->add_option("--theta", theta);
  hsf_cmd->add_option("--tau", tau);
  hsf_cmd->add_option("--phi", phi);
  hsf_cmd->add_option("--psi", psi);
  hsf_cmd->add_option("--eps-m", eps_m, "rapidity-like parameter paired with phi");
  hsf_cmd->add_option("--eps-n", eps_n, "rapidity-like parameter paired with psi");
  app.add_subcommand("verify", "run every invariant suite");
  CLI::App* table_cmd = app.add_subcommand("table", "catalog table up to a weight");
  table_cmd->add_option("--max-weight", two_max_weight, "2*(l+ldot) cap (doubled)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 64;
  }

  try {
    st.finalize();
    if (rep_cmd->parsed()) return cmd_rep(st, two_l, two_ldot);
    if (chain_cmd->parsed()) return cmd_chain(st, two_l, two_ldot, emit_system);
    if (lambda_cmd->parsed()) return cmd_lambda(st, two_l, two_ldot, j, dual);
    if (charpoly_cmd->parsed()) return cmd_charpoly(st, two_l, two_ldot, j, dual);
    if (spectrum_cmd->parsed()) return cmd_spectrum(st, two_l, two_ldot, j, dual);
    if (app.get_subcommand("census")->parsed()) return cmd_census(st);
    if (search_cmd->parsed()) return cmd_search(st, ratio);
    if (hsf_cmd->parsed())
      return cmd_hsf(st, rho, two_l0, two_m, two_n, theta, tau, phi, psi, eps_m, eps_n);
    if (app.get_subcommand("verify")->parsed()) return cmd_verify(st);
    if (table_cmd->parsed()) return cmd_table(st, two_max_weight);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 64;
}
