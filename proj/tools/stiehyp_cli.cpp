// stiehyp command-line front end.
//
//   stiehyp eval    --sigma 1 --a 1 --b 2 --z 1
//   stiehyp density --sigma 0.5 --a 1,3 --b 2,2 --grid 0.01:0.99:99 --format csv
//   stiehyp moments --sigma 1 --a 1 --b 2 --m 10
//   stiehyp pade    --sigma 1 --a 1 --b 2 --m 5 --j 0 [--z 1 --format csv]
//   stiehyp verify  --suite all --seed 42
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or evaluation error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stiehyp/hypeval.hpp"
#include "stiehyp/pade.hpp"
#include "stiehyp/stieltjes.hpp"
#include "stiehyp/verify.hpp"

namespace {

using stiehyp::cdouble;
using ordered_json = nlohmann::ordered_json;

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw CLI::ValidationError("empty entry in list");
    out.push_back(std::stod(item));
  }
  if (out.empty()) throw CLI::ValidationError("empty parameter list");
  return out;
}

// Complex literal "re", "re+imi" or "re-imi", e.g. "0.5-0.25i".
cdouble parse_complex(const std::string& text) {
  std::string t = text;
  if (!t.empty() && t.back() == 'i') {
    t.pop_back();
    // split at the last +/- that is not part of an exponent or leading sign
    std::size_t split = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;) {
      if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    if (split == std::string::npos)
      return cdouble(0.0, std::stod(t.empty() ? "1" : t));
    const double re = std::stod(t.substr(0, split));
    std::string im = t.substr(split);
    if (im == "+") im = "1";
    if (im == "-") im = "-1";
    return cdouble(re, std::stod(im));
  }
  return cdouble(std::stod(t), 0.0);
}

struct GridSpec {
  double lo = 0.0, hi = 1.0;
  int n = 0;
  double at(int i) const {
    return n == 1 ? lo : lo + (hi - lo) * double(i) / double(n - 1);
  }
};

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d", &g.lo, &g.hi, &g.n) != 3 ||
      g.n < 1)
    throw CLI::ValidationError("--grid expects lo:hi:n with n >= 1");
  return g;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

ordered_json complex_json(cdouble z) {
  return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

struct CommonOpts {
  double sigma = 1.0;
  std::string a_text, b_text;
  std::string out_path;
  std::string format = "json";
  stiehyp::QuadratureConfig cfg;

  stiehyp::ParameterSet params() const {
    const std::vector<double> av = parse_list(a_text);
    const std::vector<double> bv = parse_list(b_text);
    if (av.size() != bv.size())
      throw CLI::ValidationError("--a and --b must have equal length");
    stiehyp::CVec a(Eigen::Index(av.size())), b(Eigen::Index(bv.size()));
    for (std::size_t i = 0; i < av.size(); ++i) {
      a[Eigen::Index(i)] = cdouble(av[i], 0.0);
      b[Eigen::Index(i)] = cdouble(bv[i], 0.0);
    }
    return stiehyp::ParameterSet(cdouble(sigma, 0.0), a, b);
  }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool need_params) {
  cmd->add_option("--sigma", o.sigma, "outer exponent sigma");
  auto* a = cmd->add_option("--a", o.a_text, "upper parameters, comma separated");
  auto* b = cmd->add_option("--b", o.b_text, "lower parameters, comma separated");
  if (need_params) {
    a->required();
    b->required();
  }
  cmd->add_option("--out", o.out_path, "write output to this file");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--tol-abs", o.cfg.abs_tol, "absolute contour tolerance");
  cmd->add_option("--tol-rel", o.cfg.rel_tol, "relative contour tolerance");
  cmd->add_option("--contour-c", o.cfg.contour_offset,
                  "contour abscissa (<= 0: automatic)");
  cmd->add_option("--contour-T", o.cfg.truncation_height,
                  "fixed contour truncation height (0: adaptive)");
}

int run_eval(const CommonOpts& o, const std::string& z_text) {
  const stiehyp::ParameterSet p = o.params();
  const cdouble z = parse_complex(z_text);
  const cdouble v = stiehyp::eval_stieltjes(p, z, o.cfg);
  if (o.format == "csv") {
    std::ostringstream s;
    s << "re,im\n" << std::setprecision(15) << v.real() << ',' << v.imag()
      << '\n';
    emit(s.str(), o.out_path);
  } else {
    ordered_json j;
    j["z"] = complex_json(z);
    j["value"] = complex_json(v);
    emit(j.dump(2), o.out_path);
  }
  return 0;
}

int run_density(const CommonOpts& o, const std::string& grid_text) {
  const stiehyp::ParameterSet p = o.params();
  const GridSpec g = parse_grid(grid_text);
  // Order-1 density rho_1 of the S_1 form: defined whenever
  // 1 - sigma + psi > 0, which covers psi = 0 families as well.
  std::vector<double> s(std::size_t(g.n)), rho(std::size_t(g.n));
  for (int i = 0; i < g.n; ++i) {
    s[std::size_t(i)] = g.at(i);
    rho[std::size_t(i)] = stiehyp::density_rho1(s[std::size_t(i)], p, o.cfg);
  }
  if (o.format == "csv") {
    std::ostringstream out;
    out << "s,rho\n" << std::setprecision(15);
    for (int i = 0; i < g.n; ++i)
      out << s[std::size_t(i)] << ',' << rho[std::size_t(i)] << '\n';
    emit(out.str(), o.out_path);
  } else {
    ordered_json j;
    j["s"] = s;
    j["rho"] = rho;
    emit(j.dump(2), o.out_path);
  }
  return 0;
}

int run_moments(const CommonOpts& o, int count) {
  const stiehyp::MomentSequence ms = stiehyp::moments(o.params(), count);
  if (o.format == "csv") {
    std::ostringstream out;
    out << "k,moment\n" << std::setprecision(15);
    for (std::size_t k = 0; k < ms.values.size(); ++k)
      out << k << ',' << ms.values[k] << '\n';
    emit(out.str(), o.out_path);
  } else {
    ordered_json j;
    j["moments"] = ms.values;
    emit(j.dump(2), o.out_path);
  }
  return 0;
}

int run_pade(const CommonOpts& o, int m, int j_off, const std::string& z_text) {
  const stiehyp::ParameterSet p = o.params();
  if (o.format == "csv") {
    // convergence curve |[m'+j/m'](z) - F(z)| for m' = 1..m
    const cdouble z = z_text.empty() ? cdouble(1.0, 0.0) : parse_complex(z_text);
    const std::vector<double> errs =
        stiehyp::convergence_check(p, z, m, j_off, o.cfg);
    std::ostringstream out;
    out << "m,abs_error\n" << std::setprecision(15);
    for (std::size_t k = 0; k < errs.size(); ++k)
      out << (k + 1) << ',' << errs[k] << '\n';
    emit(out.str(), o.out_path);
    return 0;
  }
  const stiehyp::PadeApproximant pa = stiehyp::pade(p, m, j_off);
  ordered_json j;
  j["m"] = pa.m;
  j["j"] = pa.j;
  j["numerator"] = std::vector<double>(
      pa.numerator.data(), pa.numerator.data() + pa.numerator.size());
  j["denominator"] = std::vector<double>(
      pa.denominator.data(), pa.denominator.data() + pa.denominator.size());
  j["hankel_det"] = pa.hankel_det;
  if (!z_text.empty()) {
    const cdouble z = parse_complex(z_text);
    j["value"] = complex_json(pa.eval(z));
    j["reference"] = complex_json(stiehyp::eval_stieltjes(p, z, o.cfg));
  }
  emit(j.dump(2), o.out_path);
  return 0;
}

int run_verify(const CommonOpts& o, std::vector<std::string> suites,
               std::uint64_t seed) {
  if (suites.size() == 1 && suites[0] == "all") suites = stiehyp::all_suites();
  const stiehyp::VerificationReport rep =
      stiehyp::verify_suite(suites, seed, o.cfg);
  emit(o.format == "csv" ? rep.to_csv() : rep.to_json(), o.out_path);
  return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized-Stieltjes evaluation of {q+1}F{q}(sigma, A; B; -z) "
               "with Meijer G-function densities"};
  app.require_subcommand(1);

  CommonOpts eval_o, dens_o, mom_o, pade_o, ver_o;
  std::string z_text, grid_text, pade_z;
  int mom_count = 10, pade_m = 4, pade_j = 0;
  std::vector<std::string> suites{"all"};
  std::uint64_t seed = 42;

  CLI::App* c_eval = app.add_subcommand("eval", "evaluate F at one point");
  add_common(c_eval, eval_o, true);
  c_eval->add_option("--z", z_text, "argument, e.g. 1 or 0.5-0.25i")->required();

  CLI::App* c_dens =
      app.add_subcommand("density", "representing density rho on (0,1)");
  add_common(c_dens, dens_o, true);
  c_dens->add_option("--grid", grid_text, "evaluation grid lo:hi:n")->required();

  CLI::App* c_mom = app.add_subcommand("moments", "Taylor moment sequence");
  add_common(c_mom, mom_o, true);
  c_mom->add_option("--m", mom_count, "highest moment index");

  CLI::App* c_pade =
      app.add_subcommand("pade", "Pade approximant [m+j/m] of F(-z)");
  add_common(c_pade, pade_o, true);
  c_pade->add_option("--m", pade_m, "denominator degree");
  c_pade->add_option("--j", pade_j, "table offset (>= -1)");
  c_pade->add_option("--z", pade_z,
                     "evaluation point (csv: convergence curve target)");

  CLI::App* c_ver = app.add_subcommand("verify", "run verification suites");
  add_common(c_ver, ver_o, false);
  c_ver->add_option("--suite", suites, "suite keys or 'all'");
  c_ver->add_option("--seed", seed, "master seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_eval->parsed()) return run_eval(eval_o, z_text);
    if (c_dens->parsed()) return run_density(dens_o, grid_text);
    if (c_mom->parsed()) return run_moments(mom_o, mom_count);
    if (c_pade->parsed()) return run_pade(pade_o, pade_m, pade_j, pade_z);
    if (c_ver->parsed()) return run_verify(ver_o, suites, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
