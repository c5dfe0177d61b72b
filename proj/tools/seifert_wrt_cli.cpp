// SPDX-License-Identifier: Apache-2.0
// Deterministic command-line reports for Seifert loop invariants: exact
// root-of-unity sums, colored q-series, radial limits, difference-equation
// structure, perturbative data, and Borel resummation identities.

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "seifertwrt/exact_sums.hpp"
#include "seifertwrt/qdifference.hpp"
#include "seifertwrt/report.hpp"
#include "seifertwrt/resurgence.hpp"
#include "seifertwrt/seifert.hpp"
#include "seifertwrt/wrt_qseries.hpp"

#ifndef SEIFERT_WRT_VERSION
#define SEIFERT_WRT_VERSION "0.1.0"
#endif

namespace {

using namespace swrt;

struct Config {
  std::string loop;
  long N = 1;
  long K = 0;
  std::string kappa;
  long precision_bits = kDefaultPrecision;
  long long cutoff = 4000;
  std::string t0 = "1/1024";
  int levels = 8;
  int degree = 6;
  double delta = 0.2;
  long m_max = 8;
  double tol = 1e-6;
  std::string format = "json";
  std::string out;
};

// Complex literal "a", "bi", "a+bi", "a-bi" with decimal parts.
HPComplex parse_complex_literal(const std::string& text, mpfr_prec_t prec) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  const bool imag = s.back() == 'i' || s.back() == 'I';
  if (imag) s.pop_back();
  size_t split = std::string::npos;
  for (size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  try {
    if (!imag) return HPComplex(HPReal::parse(s, prec), HPReal(0, prec));
    if (split == std::string::npos) {
      std::string b = s;
      if (b.empty() || b == "+" || b == "-") b += "1";
      return HPComplex(HPReal(0, prec), HPReal::parse(b, prec));
    }
    std::string b = s.substr(split);
    if (b == "+" || b == "-") b += "1";
    return HPComplex(HPReal::parse(s.substr(0, split), prec),
                     HPReal::parse(b, prec));
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse complex literal '" + text + "'");
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Row kinds: command,<name> | input,<key>,<value> | claim,<name>,<pass>,
// <detail> | value,<claim>,<key>,<value>.
std::string report_to_csv(const VerificationReport& rep) {
  std::ostringstream os;
  os << "record,a,b,c\n";
  os << "command," << csv_escape(rep.command) << ",,\n";
  for (const auto& [k, v] : rep.inputs) {
    os << "input," << csv_escape(k) << ',' << csv_escape(v) << ",\n";
  }
  for (const auto& c : rep.claims) {
    os << "claim," << csv_escape(c.name) << ',' << (c.pass ? "pass" : "fail")
       << ',' << csv_escape(c.detail) << '\n';
    for (const auto& [k, v] : c.values) {
      os << "value," << csv_escape(c.name) << ',' << csv_escape(k) << ','
         << csv_escape(v) << '\n';
    }
  }
  return os.str();
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return 2;
  }
  f << text;
  return 0;
}

int emit_report(VerificationReport rep, const Config& cfg) {
  rep.inputs["version"] = SEIFERT_WRT_VERSION;
  std::string text;
  if (cfg.format == "csv") {
    text = report_to_csv(rep);
  } else if (cfg.format == "text") {
    text = rep.to_text();
  } else {
    text = rep.to_json();
  }
  const int w = write_output(text, cfg.out);
  if (w != 0) return w;
  return rep.all_pass() ? 0 : 1;
}

// Meridian m, longitude l; descending longitude degree, then meridian.
std::string lp2_str(const LaurentPoly2& p) {
  std::vector<std::pair<std::pair<long, long>, Rational>> terms(p.coeff.begin(),
                                                                p.coeff.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.second != b.first.second) return a.first.second > b.first.second;
    return a.first.first > b.first.first;
  });
  std::string s;
  for (const auto& [key, c] : terms) {
    if (c.is_zero()) continue;
    const bool neg = c < Rational(0);
    const Rational mag = neg ? -c : c;
    std::string mono;
    if (key.first != 0) mono = "m^" + std::to_string(key.first);
    if (key.second != 0) {
      if (!mono.empty()) mono += "*";
      mono += key.second == 1 ? "l" : "l^" + std::to_string(key.second);
    }
    const std::string coeff = mag.str();
    const std::string term =
        mono.empty() ? coeff : (coeff == "1" ? mono : coeff + "*" + mono);
    if (s.empty()) {
      s = neg ? "-" + term : term;
    } else {
      s += (neg ? " - " : " + ") + term;
    }
  }
  return s.empty() ? "0" : s;
}

int require_k(const Config& cfg) {
  if (cfg.K < 2) {
    std::cerr << "K must be >= 2\n";
    return 2;
  }
  return 0;
}

int cmd_constants(const Config& cfg) {
  const SeifertLoop loop = SeifertLoop::parse(cfg.loop);
  const mpfr_prec_t prec = cfg.precision_bits;
  const LoopConstants lc = loop_constants(loop, prec);

  VerificationReport rep;
  rep.command = "constants";
  rep.inputs = {{"loop", loop.str()},
                {"N", std::to_string(cfg.N)},
                {"precision_bits", std::to_string(prec)}};
  ClaimRow row;
  row.name = "closed-forms";
  row.pass = true;
  row.detail = "exact geometric constants of the loop";
  row.values["n"] = std::to_string(loop.n());
  row.values["P"] = std::to_string(lc.P);
  row.values["theta0"] = lc.theta0.str();
  row.values["c_N"] = lc.c(cfg.N).str();
  row.values["B"] = fmt(loop_B(loop, prec));
  for (int j = 0; j < loop.n(); ++j) {
    char key[32];
    std::snprintf(key, sizeof(key), "dedekind_%d", j + 1);
    row.values[key] = lc.dedekind[j].str();
  }
  rep.claims.push_back(std::move(row));
  return emit_report(std::move(rep), cfg);
}

int cmd_tau(const Config& cfg) {
  if (const int rc = require_k(cfg)) return rc;
  const SeifertLoop loop = SeifertLoop::parse(cfg.loop);
  const mpfr_prec_t prec = cfg.precision_bits;

  VerificationReport rep;
  rep.command = "tau";
  rep.inputs = {{"loop", loop.str()},
                {"K", std::to_string(cfg.K)},
                {"N", std::to_string(cfg.N)},
                {"precision_bits", std::to_string(prec)}};
  ClaimRow row;
  row.name = "root-of-unity-sum";
  row.pass = true;
  row.detail = "exact exponent sum at q = e^(2 pi i/K)";
  row.values["tau"] = fmt(tau(loop, cfg.K, cfg.N, prec));
  row.values["z_norm"] = fmt(z_norm(loop, cfg.K, cfg.N, prec));
  row.values["g0"] =
      fmt(g0_factor(HPComplex(HPReal(cfg.K, prec), HPReal(0, prec))));
  rep.claims.push_back(std::move(row));
  return emit_report(std::move(rep), cfg);
}

int cmd_phi(const Config& cfg) {
  const SeifertLoop loop = SeifertLoop::parse(cfg.loop);
  const PhiSeries ps = phi_series(loop, cfg.N, cfg.cutoff);
  if (cfg.format == "csv") return write_output(qs_to_csv(ps.series), cfg.out);

  VerificationReport rep;
  rep.command = "phi";
  rep.inputs = {{"loop", loop.str()},
                {"N", std::to_string(cfg.N)},
                {"cutoff", std::to_string(cfg.cutoff)}};
  ClaimRow row;
  row.name = "series-computed";
  row.pass = true;
  row.detail = "colored series coefficients up to the lattice cutoff";
  row.values["lattice_den"] = std::to_string(ps.series.lattice_den);
  row.values["terms"] = std::to_string(ps.series.terms.size());
  int shown = 0;
  for (const auto& [e, c] : ps.series.terms) {
    if (shown == 8) break;
    char key[32];
    std::snprintf(key, sizeof(key), "lead_%d", shown++);
    row.values[key] = c.str() + " * q^(" + ps.series.exponent(e).str() + ")";
  }
  rep.claims.push_back(std::move(row));
  return emit_report(std::move(rep), cfg);
}

int cmd_radial(const Config& cfg) {
  if (const int rc = require_k(cfg)) return rc;
  const SeifertLoop loop = SeifertLoop::parse(cfg.loop);
  return emit_report(radial_limit(loop, cfg.N, cfg.K, Rational::parse(cfg.t0),
                                  cfg.levels, cfg.degree, cfg.tol,
                                  cfg.precision_bits),
                     cfg);
}

int cmd_qdiff(const Config& cfg) {
  const SeifertLoop loop = SeifertLoop::parse(cfg.loop);
  VerificationReport rep;
  rep.command = "qdiff";
  rep.inputs = {{"loop", loop.str()},
                {"N", std::to_string(cfg.N)},
                {"cutoff", std::to_string(cfg.cutoff)},
                {"precision_bits", std::to_string(cfg.precision_bits)}};
  for (VerificationReport sub :
       {verify_inhomogeneous(loop, cfg.N, cfg.cutoff),
        verify_third_order(loop, cfg.N, cfg.cutoff, cfg.precision_bits)}) {
    for (ClaimRow& row : sub.claims) rep.claims.push_back(std::move(row));
  }
  return emit_report(std::move(rep), cfg);
}

int cmd_apoly(const Config& cfg) {
  const SeifertLoop loop = SeifertLoop::parse(cfg.loop);
  ClassicalLimit cl = classical_limit(loop);
  VerificationReport rep = std::move(cl.report);
  rep.command = "apoly";
  ClaimRow row;
  row.name = "factored-form";
  row.pass = true;
  row.detail = "classical-limit polynomial and its factorization";
  row.values["expanded"] = lp2_str(cl.expanded);
  std::string prod;
  for (const LaurentPoly2& f : cl.factors) prod += "(" + lp2_str(f) + ")";
  row.values["factored"] = prod;
  rep.claims.push_back(std::move(row));
  return emit_report(std::move(rep), cfg);
}

int cmd_pert(const Config& cfg) {
  const SeifertLoop loop = SeifertLoop::parse(cfg.loop);
  const mpfr_prec_t prec = cfg.precision_bits;
  const int M = static_cast<int>(cfg.m_max);
  const PerturbativeSeries ps = z_pert(loop, cfg.N, M, prec);

  VerificationReport rep;
  rep.command = "pert";
  rep.inputs = {{"loop", loop.str()},
                {"N", std::to_string(cfg.N)},
                {"m_max", std::to_string(M)},
                {"precision_bits", std::to_string(prec)}};
  ClaimRow row;
  row.name = "coefficients";
  row.pass = true;
  row.detail = "trivial-connection expansion and its Borel transform";
  for (int m = 0; m <= M; ++m) {
    char key[32];
    std::snprintf(key, sizeof(key), "a_%02d", m);
    row.values[key] = fmt(ps.a[m]);
    std::snprintf(key, sizeof(key), "borel_%02d", m);
    row.values[key] = fmt(ps.borel[m]);
  }
  rep.claims.push_back(std::move(row));
  return emit_report(std::move(rep), cfg);
}

int cmd_borel(const Config& cfg) {
  const SeifertLoop loop = SeifertLoop::parse(cfg.loop);
  const mpfr_prec_t prec = cfg.precision_bits;
  if (cfg.kappa.empty()) {
    std::cerr << "--kappa (the Borel variable xi) is required\n";
    return 2;
  }
  const HPComplex xi = parse_complex_literal(cfg.kappa, prec);
  const HPComplex value = borel_I_closed(loop, cfg.N, xi);

  VerificationReport rep;
  rep.command = "borel";
  rep.inputs = {{"loop", loop.str()},
                {"N", std::to_string(cfg.N)},
                {"xi", fmt(xi)},
                {"precision_bits", std::to_string(prec)}};
  ClaimRow row;
  row.name = "closed-form";
  row.pass = true;
  row.detail = "Borel transform evaluated off the singular ray";
  row.values["I_B"] = fmt(value);
  rep.claims.push_back(std::move(row));
  return emit_report(std::move(rep), cfg);
}

int cmd_median(const Config& cfg) {
  const SeifertLoop loop = SeifertLoop::parse(cfg.loop);
  if (cfg.kappa.empty()) {
    std::cerr << "--kappa is required\n";
    return 2;
  }
  const HPComplex kappa = parse_complex_literal(cfg.kappa, cfg.precision_bits);
  ResummationOptions opts;
  opts.delta = cfg.delta;
  return emit_report(
      median_report(loop, cfg.N, kappa, cfg.precision_bits, opts), cfg);
}

int cmd_stokes(const Config& cfg) {
  const SeifertLoop loop = SeifertLoop::parse(cfg.loop);
  if (cfg.kappa.empty()) {
    std::cerr << "--kappa is required\n";
    return 2;
  }
  const HPComplex kappa = parse_complex_literal(cfg.kappa, cfg.precision_bits);
  ResummationOptions opts;
  opts.delta = cfg.delta;
  return emit_report(stokes_report(loop, cfg.N, kappa, cfg.m_max,
                                   cfg.precision_bits, opts),
                     cfg);
}

int cmd_blr(const Config& cfg) {
  if (const int rc = require_k(cfg)) return rc;
  const SeifertLoop loop = SeifertLoop::parse(cfg.loop);
  return emit_report(blr_report(loop, cfg.N, cfg.K, cfg.precision_bits), cfg);
}

int cmd_appendix(const Config& cfg) {
  if (const int rc = require_k(cfg)) return rc;
  const SeifertLoop loop = SeifertLoop::parse(cfg.loop);
  VerificationReport rep;
  rep.command = "appendix";
  rep.inputs = {{"loop", loop.str()},
                {"K", std::to_string(cfg.K)},
                {"precision_bits", std::to_string(cfg.precision_bits)}};
  for (const Rational& ell : {Rational(0), Rational(1, 2)}) {
    for (int s = 0; s < loop.n(); ++s) {
      VerificationReport sub =
          vanishing_check(loop, cfg.K, ell, s, cfg.precision_bits);
      for (ClaimRow& row : sub.claims) {
        row.name = "ell=" + ell.str() + ";s=" + std::to_string(s) + ";" + row.name;
        rep.claims.push_back(std::move(row));
      }
    }
  }
  return emit_report(std::move(rep), cfg);
}

void add_common(CLI::App* sub, Config& cfg, bool needs_loop = true) {
  auto* loop = sub->add_option("--loop", cfg.loop,
                               "Exceptional fibers p1/q1,p2/q2,... (pairwise "
                               "coprime p_j >= 2, homology-normalized q_j)");
  if (needs_loop) loop->required();
  sub->add_option("--precision-bits", cfg.precision_bits,
                  "Working precision in bits")->capture_default_str();
  sub->add_option("--format", cfg.format, "Output format: json|csv|text")->capture_default_str()
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", cfg.out, "Write the report to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{
      "Seifert loop invariants: exact root-of-unity sums, colored q-series,\n"
      "difference-equation structure, and Borel resummation identities.\n"
      "JSON is the canonical report format.  CSV rows are\n"
      "  command,<name> | input,<key>,<value> | claim,<name>,<pass>,<detail>\n"
      "  | value,<claim>,<key>,<value>\n"
      "except `phi --format csv`, which emits the series itself as\n"
      "  exp_num,exp_den,coeff_num,coeff_den."};
  app.require_subcommand(1);

  auto* constants = app.add_subcommand("constants", "Exact loop constants");
  add_common(constants, cfg);
  constants->add_option("--N", cfg.N, "Color")->capture_default_str();

  auto* tau_cmd = app.add_subcommand("tau", "Exact invariant at a root of unity");
  add_common(tau_cmd, cfg);
  tau_cmd->add_option("--K", cfg.K, "Level (integer >= 2)")->required();
  tau_cmd->add_option("--N", cfg.N, "Color")->capture_default_str();

  auto* phi = app.add_subcommand("phi", "Colored q-series coefficients");
  add_common(phi, cfg);
  phi->add_option("--N", cfg.N, "Color")->capture_default_str();
  phi->add_option("--cutoff", cfg.cutoff, "Lattice-exponent cutoff (units of 1/4P)")->capture_default_str();

  auto* radial = app.add_subcommand(
      "radial", "Radial limit of the q-series against the exact invariant");
  add_common(radial, cfg);
  radial->add_option("--K", cfg.K, "Level (integer >= 2)")->required();
  radial->add_option("--N", cfg.N, "Color")->capture_default_str();
  radial->add_option("--t0", cfg.t0, "Largest radial offset (rational p/q)")->capture_default_str();
  radial->add_option("--levels", cfg.levels, "Number of halved offsets")->capture_default_str();
  radial->add_option("--degree", cfg.degree, "Extrapolation polynomial degree")->capture_default_str();
  radial->add_option("--tol", cfg.tol, "Acceptance tolerance for the limit")->capture_default_str();

  auto* qdiff = app.add_subcommand(
      "qdiff", "Inhomogeneous and homogeneous color recursions, exactly");
  add_common(qdiff, cfg);
  qdiff->add_option("--N", cfg.N, "Base color of the checked window")->capture_default_str();
  qdiff->add_option("--cutoff", cfg.cutoff, "Lattice-exponent cutoff (units of 1/4P)")->capture_default_str();

  auto* apoly = app.add_subcommand(
      "apoly", "Classical limit of the difference operator, factored");
  add_common(apoly, cfg);

  auto* pert = app.add_subcommand(
      "pert", "Perturbative expansion around the trivial connection");
  add_common(pert, cfg);
  pert->add_option("--N", cfg.N, "Color")->capture_default_str();
  pert->add_option("--m-max", cfg.m_max, "Highest coefficient order")->capture_default_str();

  auto* borel = app.add_subcommand("borel", "Closed-form Borel transform value");
  add_common(borel, cfg);
  borel->add_option("--N", cfg.N, "Color")->capture_default_str();
  borel->add_option("--kappa", cfg.kappa, "Borel variable xi as a+bi")->required();

  auto* median = app.add_subcommand(
      "median", "Median Borel sum against the analytically continued invariant");
  add_common(median, cfg);
  median->add_option("--N", cfg.N, "Color")->capture_default_str();
  median->add_option("--kappa", cfg.kappa, "Complex level a+bi, Im < 0")->required();
  median->add_option("--delta", cfg.delta, "Lateral tilt of the Borel rays")->capture_default_str();

  auto* stokes = app.add_subcommand(
      "stokes", "Lateral-sum jump against the singularity residues");
  add_common(stokes, cfg);
  stokes->add_option("--N", cfg.N, "Color")->capture_default_str();
  stokes->add_option("--kappa", cfg.kappa, "Complex level a+bi, Im < 0")->required();
  stokes->add_option("--delta", cfg.delta, "Lateral tilt of the Borel rays")->capture_default_str();
  stokes->add_option("--m-max", cfg.m_max, "Include singularities up to this index")->capture_default_str();

  auto* blr = app.add_subcommand(
      "blr", "Exact invariant as trivial-connection integral plus residues");
  add_common(blr, cfg);
  blr->add_option("--K", cfg.K, "Level (integer >= 2)")->required();
  blr->add_option("--N", cfg.N, "Color")->capture_default_str();

  auto* appendix = app.add_subcommand(
      "appendix", "Epsilon-weighted Gauss sum vanishing identities");
  add_common(appendix, cfg);
  appendix->add_option("--K", cfg.K, "Level (integer >= 2)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (constants->parsed()) return cmd_constants(cfg);
    if (tau_cmd->parsed()) return cmd_tau(cfg);
    if (phi->parsed()) return cmd_phi(cfg);
    if (radial->parsed()) return cmd_radial(cfg);
    if (qdiff->parsed()) return cmd_qdiff(cfg);
    if (apoly->parsed()) return cmd_apoly(cfg);
    if (pert->parsed()) return cmd_pert(cfg);
    if (borel->parsed()) return cmd_borel(cfg);
    if (median->parsed()) return cmd_median(cfg);
    if (stokes->parsed()) return cmd_stokes(cfg);
    if (blr->parsed()) return cmd_blr(cfg);
    if (appendix->parsed()) return cmd_appendix(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  std::cerr << "error: no command\n";
  return 2;
}
