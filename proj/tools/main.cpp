// hankel: command-line front end for moments, Carleson classification, operator
// application, norms, boundedness probes and the randomized identity suite.

#include <charconv>
#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "hankel/corpus.hpp"
#include "hankel/errors.hpp"
#include "hankel/hankel_operator.hpp"
#include "hankel/literals.hpp"
#include "hankel/spaces.hpp"
#include "hankel/suite.hpp"
#include "hankel/version.hpp"
#include "probe_config.hpp"
#include "report.hpp"

using namespace hankel;
using namespace hankel::cli;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string out;
  std::string format = "csv";
  bool timing = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out, "Output file (default stdout)");
  sub->add_option("--format", c.format, "csv or json")->capture_default_str();
  sub->add_flag("--timing", c.timing, "Record wall-clock runtime in the report");
}

Measure measure_arg(const std::string& text) {
  if (const auto named = find_named_measure(text)) return *named;
  return parse_measure(text);
}

std::vector<double> parse_coeffs(const std::string& text) {
  std::vector<double> a;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::size_t b = pos, e = end;
    while (b < e && text[b] == ' ') ++b;
    while (e > b && text[e - 1] == ' ') --e;
    double v = 0;
    const auto r = std::from_chars(text.data() + b, text.data() + e, v);
    if (b == e || r.ec != std::errc() || r.ptr != text.data() + e) throw ParseError("coeffs: expected a number", b);
    a.push_back(v);
    pos = end + 1;
  }
  return a;
}

ordered_json header(const char* experiment) {
  return {{"library_version", std::string(version_string)}, {"experiment", experiment}};
}

using Clock = std::chrono::steady_clock;

void finish(Report& r, const Common& c, Clock::time_point t0) {
  if (c.timing) r.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  emit(r, parse_format(c.format), c.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hankel operators induced by measures: numerical probes and checks", "hankel"};
  app.set_version_flag("--version", std::string(version_string));
  app.require_subcommand(1);

  Common common;
  std::string measure_text, space_text;

  std::size_t n_moments = 10;
  auto* moments = app.add_subcommand("moments", "Moments mu_0..mu_N of a measure");
  moments->add_option("--measure", measure_text, "Measure literal or corpus name")->required();
  moments->add_option("-n,--n", n_moments, "Largest moment index")->capture_default_str();
  add_common(moments, common);

  double s = 1.0, alpha = 0.0;
  int J = 20;
  auto* classify = app.add_subcommand("classify", "Dyadic Carleson and log-Carleson traces");
  classify->add_option("--measure", measure_text, "Measure literal or corpus name")->required();
  classify->add_option("--s", s, "Carleson exponent")->capture_default_str();
  classify->add_option("--alpha", alpha, "Logarithmic exponent")->capture_default_str();
  classify->add_option("--levels", J, "Dyadic grid t_j = 1 - 2^-j, j = 0..levels")->capture_default_str();
  add_common(classify, common);

  std::string coeffs_text;
  std::size_t n_out = 10;
  auto* apply = app.add_subcommand("apply", "Apply H_mu to a real coefficient vector");
  apply->add_option("--measure", measure_text, "Measure literal or corpus name")->required();
  apply->add_option("--coeffs", coeffs_text, "Comma-separated coefficients a_0,a_1,...")->required();
  apply->add_option("--nout", n_out, "Output degree")->capture_default_str();
  add_common(apply, common);

  auto* normc = app.add_subcommand("norm", "Quadrature norm and coefficient functional of a polynomial");
  normc->add_option("--space", space_text, "Space literal, e.g. bergman:p=4,alpha=1")->required();
  normc->add_option("--coeffs", coeffs_text, "Comma-separated coefficients a_0,a_1,...")->required();
  add_common(normc, common);

  ProbeConfig flags;
  std::string config_path;
  auto* probe = app.add_subcommand("probe", "Boundedness probe over the f_b family");
  probe->add_option("--experiment", flags.experiment, "Named experiment (see --list)");
  probe->add_option("--measure", flags.measure, "Measure literal or corpus name");
  probe->add_option("--space", flags.domain, "Domain space literal");
  probe->add_option("--codomain", flags.codomain, "Codomain space literal (default: domain)");
  probe->add_option("--family", flags.family, "h1, bergman:p=..,alpha=.. or dirichlet:p=..,alpha=..");
  probe->add_option("--bmin-exp", flags.bmin_exp, "Smallest j in b_j = 1 - 2^-j");
  probe->add_option("--bmax-exp", flags.bmax_exp, "Largest j in b_j = 1 - 2^-j");
  probe->add_option("--output-route", flags.output_route, "series or quadrature");
  probe->add_option("--threads", flags.threads, "Worker threads (results do not depend on this)");
  probe->add_option("--config", config_path, "JSON config file");
  bool list = false;
  probe->add_flag("--list", list, "List named experiments and exit");
  probe->add_option("--out", flags.out, "Output file (default stdout)");
  probe->add_option("--format", flags.format, "csv or json");
  probe->add_flag("--timing", common.timing, "Record wall-clock runtime in the report");

  std::uint64_t seed = 42;
  std::size_t count = 100;
  auto* identities = app.add_subcommand("identities", "Randomized identity and inequality suite");
  identities->add_option("--seed", seed, "Random seed")->capture_default_str();
  identities->add_option("--count", count, "Instances per check")->capture_default_str();
  add_common(identities, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto t0 = Clock::now();
  try {
    Report r;
    if (*moments) {
      const Measure m = measure_arg(measure_text);
      const MomentTable t = moments_upto(m, n_moments);
      r.experiment = "moments";
      r.config = header("moments");
      r.config["measure"] = to_literal(m);
      r.config["n"] = n_moments;
      r.columns = {"n", "mu", "exact"};
      for (std::size_t n = 0; n <= n_moments; ++n) r.add_row({{"n", n}, {"mu", t[n]}, {"exact", t.exact}});
      finish(r, common, t0);
      return 0;
    }
    if (*classify) {
      const Measure m = measure_arg(measure_text);
      const auto grid = dyadic_grid(J);
      const TraceThresholds th;
      const auto plain = carleson_constant(m, s, grid);
      const auto logc = log_carleson_constant(m, alpha, s, grid);
      const auto vp = classify_trace(plain.values, th), vl = classify_trace(logc.values, th);
      r.experiment = "classify";
      r.config = header("classify");
      r.config["measure"] = to_literal(m);
      r.config["s"] = s;
      r.config["alpha"] = alpha;
      r.config["levels"] = J;
      r.thresholds = {{"window", th.window}, {"max_spread", th.max_spread}, {"max_log_slope", th.max_log_slope}};
      // Atomic measures add atom positions to the plain trace, so the two traces are
      // reported on their own grids.
      r.columns = {"trace", "t", "quotient"};
      for (std::size_t i = 0; i < plain.grid.size(); ++i)
        r.add_row({{"trace", "carleson"}, {"t", plain.grid[i]}, {"quotient", plain.values[i]}});
      for (std::size_t i = 0; i < logc.grid.size(); ++i)
        r.add_row({{"trace", "log_carleson"}, {"t", logc.grid[i]}, {"quotient", logc.values[i]}});
      r.verdict = {{"carleson", vp.bounded ? "bounded" : "unbounded"},
                   {"carleson_constant", plain.constant},
                   {"carleson_spread", vp.growth_spread},
                   {"log_carleson", vl.bounded ? "bounded" : "unbounded"},
                   {"log_carleson_constant", logc.constant},
                   {"log_carleson_spread", vl.growth_spread}};
      finish(r, common, t0);
      return 0;
    }
    if (*apply) {
      const Measure m = measure_arg(measure_text);
      const auto a = parse_coeffs(coeffs_text);
      const auto f = TaylorPolynomial::from_real(a);
      const auto mt = moments_upto(m, n_out + f.degree() + 1);
      const auto h = hankel_apply(mt, f, n_out);
      r.experiment = "apply";
      r.config = header("apply");
      r.config["measure"] = to_literal(m);
      r.config["coeffs"] = a;
      r.config["nout"] = n_out;
      r.columns = {"n", "b"};
      for (std::size_t n = 0; n <= n_out; ++n) r.add_row({{"n", n}, {"b", h.output[n].real()}});
      r.verdict = {{"residual_bound", h.residual_bound}, {"moments_used", h.moments_used},
                   {"method", h.method == HankelMethod::Fft ? "fft" : "direct"}};
      finish(r, common, t0);
      return 0;
    }
    if (*normc) {
      const SpaceSpec sp = parse_space(space_text);
      const auto a = parse_coeffs(coeffs_text);
      const auto f = TaylorPolynomial::from_real(a);
      r.experiment = "norm";
      r.config = header("norm");
      r.config["space"] = to_literal(sp);
      r.config["coeffs"] = a;
      r.columns = {"space", "quadrature_norm", "coefficient_norm"};
      ordered_json row{{"space", to_literal(sp)}, {"quadrature_norm", norm(f, sp)}, {"coefficient_norm", nullptr}};
      if (has_coefficient_norm(sp)) {
        try {
          row["coefficient_norm"] = coefficient_norm(a, sp);
        } catch (const PreconditionError&) {
          // Coefficients not non-negative and non-increasing: the functional does not apply.
        }
      }
      r.add_row(row);
      finish(r, common, t0);
      return 0;
    }
    if (*probe) {
      if (list) {
        for (const auto& e : experiments()) std::cout << e.name << "  " << e.description << '\n';
        return 0;
      }
      ProbeConfig cfg;
      if (!config_path.empty()) cfg = ProbeConfig::load(config_path);
      cfg.merge(flags);
      const ResolvedProbe rp = resolve(cfg);
      const ProbeReport rep = run_probe(rp.spec);
      r.experiment = rp.experiment;
      r.config = rp.config;
      r.thresholds = rp.thresholds;
      r.columns = {"b", "K", "n_out", "input_norm", "output_norm", "ratio", "tail_fraction", "tail_decay",
                   "tail_divergent"};
      for (const auto& row : rep.rows)
        r.add_row({{"b", row.b},
                   {"K", row.K},
                   {"n_out", row.n_out},
                   {"input_norm", row.input_norm},
                   {"output_norm", row.output_norm},
                   {"ratio", row.ratio},
                   {"tail_fraction", row.tail_fraction},
                   {"tail_decay", row.tail_decay},
                   {"tail_divergent", row.tail_divergent}});
      r.verdict = {{"verdict", to_string(rep.verdict)},
                   {"e_pow", rep.e_pow},
                   {"e_log", rep.e_log},
                   {"slope_x", rep.slope_x},
                   {"slope_logx", rep.slope_logx},
                   {"growth_spread", rep.growth_spread},
                   {"increasing", rep.increasing},
                   {"log_band", rep.log_band}};
      common.out = cfg.out.value_or("");
      common.format = cfg.format.value_or("csv");
      finish(r, common, t0);
      return 0;
    }
    if (*identities) {
      const SuiteReport rep = run_identity_suite(seed, count);
      const SuiteOptions opt;
      r.experiment = "identities";
      r.config = header("identities");
      r.config["seed"] = seed;
      r.config["count"] = count;
      r.thresholds = {{"identity_tolerance", opt.identity_tolerance}, {"slack_floor", opt.slack_floor}};
      r.columns = {"check", "kind", "instances", "failures", "worst", "threshold"};
      for (const auto& c : rep.checks) {
        r.add_row({{"check", c.name},
                   {"kind", c.is_inequality ? "slack" : "deviation"},
                   {"instances", c.instances},
                   {"failures", c.failures},
                   {"worst", c.worst},
                   {"threshold", c.threshold}});
        for (const auto& d : c.diagnostics) std::cerr << c.name << ": " << d << '\n';
      }
      r.verdict = rep.passed() ? "pass" : "fail";
      finish(r, common, t0);
      return rep.passed() ? 0 : kExitCheckFailed;
    }
  } catch (const ParseError& e) {
    std::cerr << "hankel: parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "hankel: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TruncationError& e) {
    std::cerr << "hankel: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hankel: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "hankel: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "hankel: error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
