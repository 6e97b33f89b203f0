#include "zmeasure/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "zmeasure/errors.hpp"
#include "zmeasure/json_io.hpp"
#include "zmeasure/kernel.hpp"
#include "zmeasure/measure.hpp"
#include "zmeasure/meixner.hpp"
#include "zmeasure/sample.hpp"
#include "zmeasure/verify.hpp"

namespace zmeasure::cli {

namespace {

double parse_real(std::string_view s, const std::string& whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || s.empty()) {
    throw DomainError("cannot parse number '" + whole + "'");
  }
  return v;
}

struct Common {
  std::string z = "0.5";
  std::string zp;
  double xi = 0.2;
  std::string out;

  ZParams zparams() const {
    const Complex zv = parse_complex(z);
    Complex zpv;
    if (!zp.empty()) {
      zpv = parse_complex(zp);
    } else if (zv.imag() != 0.0) {
      zpv = std::conj(zv);
    } else if (z == "0.5") {
      zpv = 1.0 / 3.0;
    } else {
      throw DomainError("--zp is required for real --z");
    }
    return ZParams(zv, zpv);
  }
  GrandParams grand() const { return GrandParams(zparams(), xi); }
};

void add_common(CLI::App* app, Common& c, bool with_xi) {
  app->add_option("--z", c.z, "parameter z, real or complex as a+bi")->capture_default_str();
  app->add_option("--zp", c.zp, "parameter z' (defaults to conj(z) for complex z, 1/3 for the default z)");
  if (with_xi) app->add_option("--xi", c.xi, "mixing parameter, 0 < xi < 1")->capture_default_str();
  app->add_option("--out", c.out, "write the result to this file (relative paths use $ZMEASURE_OUT_DIR)");
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  const auto path = resolve_output_path(c.out);
  std::ofstream f(path);
  if (!f) throw ResourceError("cannot open output file " + path);
  f << text;
  out << "wrote " << path << "\n";
}

int report_status(const VerificationReport& rep, const Common& c, std::ostream& out) {
  emit(c, io::to_json(rep).dump(2) + "\n", out);
  if (!c.out.empty()) {
    out << rep.suite << ": " << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.cases.size() << " cases, "
        << rep.checks.size() << " checks)\n";
  }
  return rep.pass() ? kExitOk : kExitFailure;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s += ch;
  }
  if (s.empty()) throw DomainError("empty number");
  if (s.back() != 'i') return parse_real(s, text);
  s.pop_back();
  // Split at the last sign that is not an exponent sign or the leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re, text), parse_real(im, text)};
}

std::string resolve_output_path(const std::string& path) {
  const std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  const char* dir = std::getenv("ZMEASURE_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return path;
  return (std::filesystem::path(dir) / p).string();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"z-measures on partitions, their determinantal point process and its correlation kernels"};
  app.require_subcommand(1);

  // measure
  Common measure_c;
  int measure_n = 2;
  auto* measure = app.add_subcommand(
      "measure",
      "z-measure on partitions of n:\n"
      "  M(lambda) = n!/(t)_n t^d prod_i (z+1)_p (z'+1)_p (1-z)_q (1-z')_q / (p!^2 q!^2) det^2[1/(p_i+q_j+1)]\n"
      "With --xi, also the mixed measure M(lambda) (1-xi)^t (t)_n/n! xi^n.");
  add_common(measure, measure_c, false);
  std::optional<double> measure_xi;
  measure->add_option("--n", measure_n, "number of boxes")->capture_default_str();
  measure->add_option("--xi", measure_xi, "also report the mixed measure at this xi");

  // kernel
  Common kernel_c;
  std::string block_name = "++";
  int trunc = 10;
  std::string format = "csv";
  auto* kernel = app.add_subcommand(
      "kernel",
      "Hypergeometric kernel block on Z'_+ x Z'_+:\n"
      "  K++(k,l) = (P+(k)Q+(l) - Q+(k)P+(l))/(k-l),  K+-(k,l) = (P+(k)P-(l) + Q+(k)Q-(l))/(k+l+1),\n"
      "  K-+(k,l) = -(P-(k)P+(l) + Q-(k)Q+(l))/(k+l+1), K-- like K++ with P-, Q-;\n"
      "  P = psi^{1/2} F(-+z,-+z';k+1;xi/(xi-1)), Q = (t xi)^{1/2}/(1-xi) psi^{1/2} F(1-+z,1-+z';k+2;xi/(xi-1))/(k+1).\n"
      "  Diagonal entries of ++ and -- come from K++ = C D, K-- = D C.");
  add_common(kernel, kernel_c, true);
  kernel->add_option("--block", block_name, "one of ++, +-, -+, --")->capture_default_str();
  kernel->add_option("--trunc", trunc, "number of lattice indices")->capture_default_str()->check(CLI::PositiveNumber);
  kernel->add_option("--format", format, "csv or json")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));

  // verify
  Common verify_c;
  std::string suite = "all";
  SuiteConfig scfg;
  auto* verify = app.add_subcommand(
      "verify",
      "Verification suites: normalization (sum of M over Y_n = 1, Plancherel limit), oracle (rho(X) = det K_X\n"
      "against brute force), fredholm (det(1+L) = (1-xi)^{-t}), operator (K = L(1+L)^{-1} and the C, D\n"
      "block relations), identities (Stieltjes-series and product identities of the Gauss function),\n"
      "meixner (K++ at z = N+alpha, z' = N is the Meixner kernel), scaling (xi -> 1 limit is the\n"
      "Whittaker kernel), montecarlo (sampled correlations), or all.");
  add_common(verify, verify_c, true);
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("--suite", suite, "suite name")->capture_default_str()->check(CLI::IsMember(choices));
  verify->add_option("--trunc", scfg.trunc, "truncation for fredholm/operator")->capture_default_str();
  verify->add_option("--n-max", scfg.n_max, "oracle enumeration depth")->capture_default_str();
  verify->add_option("--seed", scfg.seed, "Monte Carlo seed")->capture_default_str();
  verify->add_option("--draws", scfg.draws, "Monte Carlo sample count")->capture_default_str();

  // sample
  Common sample_c;
  std::uint64_t seed = 42;
  std::size_t count = 10;
  auto* sample = app.add_subcommand(
      "sample",
      "Exact draws from the mixed measure: n ~ (1-xi)^t (t)_n/n! xi^n, then lambda ~ M^(n).\n"
      "Writes a header line and one JSON line per draw.");
  add_common(sample, sample_c, true);
  sample->add_option("--seed", seed, "seed")->capture_default_str();
  sample->add_option("--count", count, "number of draws")->capture_default_str();

  // meixner
  Common meixner_c;
  int meixner_n = 3;
  double alpha = 0.5;
  int size = 100;
  meixner_c.xi = 0.4;
  auto* meixner = app.add_subcommand(
      "meixner",
      "Meixner degeneration: with z = N + alpha, z' = N the ++ block equals M_N(k+N, l+N), where\n"
      "  M_N(k,l) = sqrt(f(k)f(l)) sum_{n<N} M_n(k) M_n(l)/h_n, f(k) = (alpha+1)_k xi^k/k!.\n"
      "Also checks trace M_N = N and M_N^2 = M_N on a truncation.");
  meixner->add_option("--N", meixner_n, "number of particles")->capture_default_str();
  meixner->add_option("--alpha", alpha, "alpha > -1")->capture_default_str();
  meixner->add_option("--xi", meixner_c.xi, "0 < xi < 1")->capture_default_str();
  meixner->add_option("--size", size, "truncation for the projection checks")->capture_default_str();
  meixner->add_option("--out", meixner_c.out, "write the report to this file");

  // scaling
  Common scaling_c;
  double su = 1.0;
  double sv = 2.0;
  std::vector<double> xis = {0.9, 0.99, 0.999};
  auto* scaling = app.add_subcommand(
      "scaling",
      "Scaling limit: (1-xi)^{-1} K(floor(u/(1-xi)), floor(v/(1-xi))) -> Whittaker kernel as xi -> 1,\n"
      "  K++(x,y) = (P+(x)Q+(y) - Q+(x)P+(y))/(x-y), P+-(x) = t^{1/4} W_{(+-(z+z')+1)/2,(z-z')/2}(x)\n"
      "  / (Gamma(1+-z)Gamma(1+-z') x)^{1/2}, Q with t^{3/4} and kappa shifted by -1.");
  add_common(scaling, scaling_c, false);
  scaling->add_option("--u", su, "first point, > 0")->capture_default_str();
  scaling->add_option("--v", sv, "second point, > 0")->capture_default_str();
  scaling->add_option("--xi-list", xis, "increasing xi values")->delimiter(',')->capture_default_str();

  std::vector<std::string> storage{"zmeasure"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (measure->parsed()) {
      const auto zp = measure_c.zparams();
      std::optional<GrandParams> gp;
      if (measure_xi) gp.emplace(zp, *measure_xi);
      const auto diagrams = enumerate_partitions(measure_n);
      const auto values = z_measures(diagrams, zp);
      io::Json rows = io::Json::array();
      double total = 0.0;
      for (std::size_t i = 0; i < diagrams.size(); ++i) {
        io::Json row{{"parts", io::to_json(diagrams[i])},
                     {"frobenius", io::frobenius_json(diagrams[i])},
                     {"value", values[i]}};
        if (gp) row["mixed"] = mixed_measure(diagrams[i], *gp);
        rows.push_back(row);
        total += values[i];
      }
      io::Json doc{{"schema", io::kMeasureSchema},
                   {"n", measure_n},
                   {"params", gp ? io::to_json(*gp) : io::to_json(zp)},
                   {"rows", rows},
                   {"total", total}};
      emit(measure_c, doc.dump(2) + "\n", out);
      return kExitOk;
    }
    if (kernel->parsed()) {
      const auto gp = kernel_c.grand();
      const Block b = parse_block(block_name);
      const HypergeometricKernel k(gp, trunc);
      const auto blk = k.block(b, trunc);
      emit(kernel_c, format == "csv" ? io::kernel_block_csv(blk) : io::kernel_block_json(blk, gp).dump(2) + "\n",
           out);
      return kExitOk;
    }
    if (verify->parsed()) {
      scfg.zp = verify_c.zparams();
      scfg.xi = verify_c.xi;
      GrandParams(scfg.zp, scfg.xi);  // validates xi
      return report_status(run_suite(suite, scfg), verify_c, out);
    }
    if (sample->parsed()) {
      const auto batch = draw_batch(sample_c.grand(), count, seed);
      std::string text = io::sample_header_json(batch).dump() + "\n";
      for (std::size_t i = 0; i < batch.draws.size(); ++i) text += io::sample_line_json(i, batch.draws[i]).dump() + "\n";
      emit(sample_c, text, out);
      return kExitOk;
    }
    if (meixner->parsed()) {
      return report_status(meixner_suite(meixner_n, alpha, meixner_c.xi, size), meixner_c, out);
    }
    if (scaling->parsed()) {
      return report_status(scaling_limit_check(scaling_c.zparams(), su, sv, xis), scaling_c, out);
    }
  } catch (const AdmissibilityError& e) {
    err << "error: " << e.what() << "\n\n" << admissibility_rules();
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace zmeasure::cli
