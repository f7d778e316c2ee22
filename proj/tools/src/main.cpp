#include "placirc/bigint.hpp"
#include "placirc/circulant.hpp"
#include "placirc/closed_form.hpp"
#include "placirc/errors.hpp"
#include "placirc/recurrence.hpp"
#include "placirc/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include "bench.hpp"
#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace {

using nlohmann::json;
using namespace placirc;

double rel_err_of(double abs_err, double expected_mag) {
  return abs_err / (1.0 + expected_mag);
}

Preset parse_preset(const std::string& name) {
  if (name == "cordonnier") return Preset::Cordonnier;
  if (name == "perrin") return Preset::Perrin;
  if (name == "vanderlaan") return Preset::VanDerLaan;
  throw std::invalid_argument("unknown preset: " + name);
}

std::string iso8601_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Shared --preset/--init/--coeffs handling for seq/eig/norm/det.
struct FamilyFlags {
  std::string preset;
  std::vector<std::int64_t> init;
  std::vector<std::int64_t> coeffs;

  void attach(CLI::App* cmd) {
    auto* preset_opt =
        cmd->add_option("--preset", preset,
                        "Built-in family: cordonnier, perrin, or vanderlaan")
            ->check(CLI::IsMember({"cordonnier", "perrin", "vanderlaan"}));
    auto* init_opt =
        cmd->add_option("--init", init, "Initial terms a,b,c")->delimiter(',');
    auto* coeffs_opt =
        cmd->add_option("--coeffs", coeffs,
                        "Recurrence coefficients p,q,r (default 0,1,1)")
            ->delimiter(',');
    preset_opt->excludes(init_opt);
    init_opt->excludes(preset_opt);
    coeffs_opt->needs(init_opt);
  }

  RecurrenceSpec resolve() const {
    if (!preset.empty())
      return RecurrenceSpec::from_preset(parse_preset(preset));
    if (init.empty())
      throw std::invalid_argument("one of --preset or --init is required");
    if (init.size() != 3)
      throw std::invalid_argument(
          "--init requires exactly three integers: a,b,c");
    if (!coeffs.empty()) {
      if (coeffs.size() != 3)
        throw std::invalid_argument(
            "--coeffs requires exactly three integers: p,q,r");
      return RecurrenceSpec::general(coeffs[0], coeffs[1], coeffs[2], init[0],
                                     init[1], init[2]);
    }
    return RecurrenceSpec::plastic(init[0], init[1], init[2]);
  }
};

int cmd_seq(const FamilyFlags& fam, std::int64_t from, std::int64_t to,
            bool sums, bool squares, cli::Format format) {
  const RecurrenceSpec spec = fam.resolve();
  if (from > to) throw std::invalid_argument("--from must be <= --to");
  const bool identities = sums || squares;
  if (identities && from < 0)
    throw std::invalid_argument(
        "--sums/--squares identity columns are defined for n >= 0");
  if (identities && !spec.is_plastic())
    throw UnsupportedFamilyError(
        "--sums/--squares identities hold only for the plastic family "
        "(p,q,r)=(0,1,1)");

  const std::vector<BigInt> terms = terms_range(spec, from, to);
  std::vector<BigInt> ext;
  if (identities) ext = terms_range(spec, -3, to + 5);
  const auto T = [&ext](std::int64_t i) -> const BigInt& {
    return ext[static_cast<std::size_t>(i + 3)];
  };

  json rows = json::array();
  BigInt acc = 0, acc2 = 0, anchor = 0;
  if (squares) anchor = square_sum_constant(spec).anchor;
  for (std::int64_t k = identities ? 0 : from; k <= to; ++k) {
    if (identities) {
      acc += T(k);
      acc2 += T(k) * T(k);
    }
    if (k < from) continue;
    json row = json::object(
        {{"n", k}, {"value", terms[static_cast<std::size_t>(k - from)].str()}});
    if (sums) {
      row["sum"] = acc.str();
      row["sum_identity"] = BigInt(T(k + 5) - T(4)).str();
    }
    if (squares) {
      row["sum_squares"] = acc2.str();
      row["sum_squares_identity"] =
          BigInt(T(k + 2) * T(k + 2) - T(k - 1) * T(k - 1) -
                 T(k - 3) * T(k - 3) + anchor)
              .str();
    }
    rows.push_back(std::move(row));
  }

  json params = json::object({{"family", spec.label()},
                              {"from", from},
                              {"to", to},
                              {"sums", sums},
                              {"squares", squares}});
  cli::emit(
      cli::make_document("seq", std::move(params), "terms", std::move(rows)),
      format);
  return 0;
}

int cmd_eig(const FamilyFlags& fam, std::size_t n, const std::string& method,
            cli::Format format) {
  const RecurrenceSpec spec = fam.resolve();
  json rows = json::array();
  if (method == "closed") {
    const std::vector<std::complex<double>> s = eig_closed_spectrum(spec, n);
    for (std::size_t j = 0; j < n; ++j)
      rows.push_back(
          json::object({{"j", j}, {"re", s[j].real()}, {"im", s[j].imag()}}));
  } else if (method == "oracle") {
    const Spectrum s = eig_oracle(build_from_sequence(spec, n));
    for (std::size_t j = 0; j < n; ++j)
      rows.push_back(json::object(
          {{"j", j}, {"re", s.values[j].real()}, {"im", s.values[j].imag()}}));
  } else {
    const std::vector<std::complex<double>> closed = eig_closed_spectrum(spec, n);
    const Spectrum oracle = eig_oracle(build_from_sequence(spec, n));
    for (std::size_t j = 0; j < n; ++j) {
      const double ab = std::abs(closed[j] - oracle.values[j]);
      rows.push_back(
          json::object({{"j", j},
                        {"re", closed[j].real()},
                        {"im", closed[j].imag()},
                        {"oracle_re", oracle.values[j].real()},
                        {"oracle_im", oracle.values[j].imag()},
                        {"rel_err", rel_err_of(ab, std::abs(oracle.values[j]))}}));
    }
  }
  json params =
      json::object({{"family", spec.label()}, {"n", n}, {"method", method}});
  cli::emit(cli::make_document("eig", std::move(params), "spectrum",
                               std::move(rows)),
            format);
  return 0;
}

int cmd_norm(const FamilyFlags& fam, std::size_t n, const std::string& method,
             cli::Format format) {
  const RecurrenceSpec spec = fam.resolve();
  json scalar = json::object({{"method", method}});
  if (method == "closed") {
    scalar["value"] = norm_closed(spec, n).str();
  } else if (method == "oracle") {
    scalar["value"] = norm_oracle(build_from_sequence(spec, n));
  } else {
    const BigInt closed = norm_closed(spec, n);
    const double oracle = norm_oracle(build_from_sequence(spec, n));
    const double ab = std::abs(to_double(closed) - oracle);
    scalar["value"] = closed.str();
    scalar["oracle"] = oracle;
    scalar["rel_err"] = rel_err_of(ab, std::abs(oracle));
  }
  json params =
      json::object({{"family", spec.label()}, {"n", n}, {"method", method}});
  cli::emit(cli::make_document("norm", std::move(params), "scalar",
                               std::move(scalar)),
            format);
  return 0;
}

int cmd_det(const FamilyFlags& fam, std::size_t n, const std::string& method,
            cli::Format format) {
  const RecurrenceSpec spec = fam.resolve();
  json scalar = json::object({{"method", method}});
  if (method == "exact") {
    scalar["value"] = det_exact(build_from_sequence(spec, n)).str();
  } else if (method == "closed") {
    const DetValue dv = det_closed(spec, n);
    scalar["re"] = dv.value.real();
    scalar["im"] = dv.value.imag();
    scalar["fallback"] = dv.used_fallback;
  } else if (method == "eigprod") {
    const std::complex<double> v = det_eigprod(build_from_sequence(spec, n));
    scalar["re"] = v.real();
    scalar["im"] = v.imag();
  } else {  // all
    const CirculantInt m = build_from_sequence(spec, n);
    const BigInt exact = det_exact(m);
    const double exactd = to_double(exact);
    const DetValue dv = det_closed(spec, n);
    const Spectrum s = eig_oracle(m);
    std::complex<double> pv(1.0, 0.0);
    double prod_scale = 1.0;
    for (const std::complex<double>& lambda : s.values) {
      pv *= lambda;
      prod_scale *= std::max(1.0, std::abs(lambda));
    }
    // Divide by the magnitude of the intermediates, not just |exact|: the
    // float error tracks the former and a small determinant the latter.
    const double closed_err =
        std::abs(dv.value - std::complex<double>(exactd, 0.0)) /
        (1.0 + std::max(std::abs(exactd), dv.scale));
    const double prod_err =
        std::abs(pv - std::complex<double>(exactd, 0.0)) /
        (1.0 + std::max(std::abs(exactd), prod_scale));
    scalar["exact"] = exact.str();
    scalar["closed"] = json::object({{"re", dv.value.real()},
                                     {"im", dv.value.imag()},
                                     {"fallback", dv.used_fallback}});
    scalar["eigprod"] = json::object({{"re", pv.real()}, {"im", pv.imag()}});
    scalar["max_rel_err"] = std::max(closed_err, prod_err);
  }
  json params =
      json::object({{"family", spec.label()}, {"n", n}, {"method", method}});
  cli::emit(cli::make_document("det", std::move(params), "scalar",
                               std::move(scalar)),
            format);
  return 0;
}

int cmd_verify(std::size_t n_max, int trials, std::uint64_t seed,
               double tol_eig, double tol_det, const std::string& out_path,
               bool stamp, cli::Format format) {
  verify::Config cfg;
  cfg.n_max = n_max;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.tol.eig = tol_eig;
  cfg.tol.det = tol_det;
  if (stamp) cfg.timestamp = iso8601_utc_now();
  const verify::Report report = verify::run_suite(cfg);

  json params = json::object({{"n_max", n_max},
                              {"trials", trials},
                              {"seed", seed},
                              {"tol_eig", tol_eig},
                              {"tol_det", tol_det}});
  if (!out_path.empty()) params["out"] = out_path;
  const json doc =
      cli::make_document("verify", std::move(params), "report",
                         json::parse(verify::to_json(report, 2)));

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open --out path: " + out_path);
    out << doc.dump(2) << '\n';
    if (!out)
      throw std::invalid_argument("failed writing --out path: " + out_path);
    const verify::Summary s = report.summary();
    std::cout << "checks: " << report.checks.size() << "  pass: " << s.pass
              << "  fail: " << s.fail
              << "  erratum-expected-fail: " << s.erratum_expected_fail
              << "  fallback-pass: " << s.fallback_pass << '\n'
              << "report written to " << out_path << '\n';
  } else {
    cli::emit(doc, format);
  }
  return report.has_hard_failure() ? 1 : 0;
}

int cmd_bench(const std::string& preset, const std::vector<std::size_t>& n_list,
              int repeat, std::vector<std::string> methods, cli::Format format) {
  const RecurrenceSpec spec = RecurrenceSpec::from_preset(parse_preset(preset));
  if (methods.empty())
    for (const std::string_view m : cli::kBenchMethods) methods.emplace_back(m);
  json rows = cli::run_bench(spec, n_list, repeat, methods);
  json params = json::object({{"preset", spec.label()},
                              {"n_list", n_list},
                              {"repeat", repeat},
                              {"methods", methods}});
  cli::emit(cli::make_document("bench", std::move(params), "bench",
                               std::move(rows)),
            format);
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{
      "Plastic-family recurrences, circulant spectra, closed forms, and "
      "verification"};
  app.require_subcommand(1);

  int rc = 0;
  std::string format_name = "json";
  const auto add_format = [&format_name](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format: json or table")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
  };
  const auto fmt = [&format_name] { return cli::parse_format(format_name); };

  auto* seq =
      app.add_subcommand("seq", "Emit sequence terms over an index range");
  FamilyFlags seq_fam;
  seq_fam.attach(seq);
  std::int64_t seq_from = 0, seq_to = 0;
  seq->add_option("--from", seq_from, "First index, inclusive (may be negative)")
      ->required();
  seq->add_option("--to", seq_to, "Last index, inclusive")->required();
  bool seq_sums = false, seq_squares = false;
  seq->add_flag("--sums", seq_sums,
                "Add running sums and the telescoped-identity column");
  seq->add_flag("--squares", seq_squares,
                "Add running square sums and the anchored-identity column");
  add_format(seq);
  seq->callback([&] {
    rc = cmd_seq(seq_fam, seq_from, seq_to, seq_sums, seq_squares, fmt());
  });

  auto* eig = app.add_subcommand(
      "eig", "Spectrum of the order-n circulant built from the sequence");
  FamilyFlags eig_fam;
  eig_fam.attach(eig);
  std::size_t eig_n = 1;
  eig->add_option("--n", eig_n, "Matrix order")
      ->required()
      ->check(CLI::PositiveNumber);
  std::string eig_method = "both";
  eig->add_option("--method", eig_method, "closed, oracle, or both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}))
      ->capture_default_str();
  add_format(eig);
  eig->callback([&] { rc = cmd_eig(eig_fam, eig_n, eig_method, fmt()); });

  auto* norm = app.add_subcommand(
      "norm", "Spectral norm of the order-n circulant built from the sequence");
  FamilyFlags norm_fam;
  norm_fam.attach(norm);
  std::size_t norm_n = 1;
  norm->add_option("--n", norm_n, "Matrix order")
      ->required()
      ->check(CLI::PositiveNumber);
  std::string norm_method = "both";
  norm->add_option("--method", norm_method, "closed, oracle, or both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}))
      ->capture_default_str();
  add_format(norm);
  norm->callback([&] { rc = cmd_norm(norm_fam, norm_n, norm_method, fmt()); });

  auto* det = app.add_subcommand(
      "det", "Determinant of the order-n circulant built from the sequence");
  FamilyFlags det_fam;
  det_fam.attach(det);
  std::size_t det_n = 1;
  det->add_option("--n", det_n, "Matrix order")
      ->required()
      ->check(CLI::PositiveNumber);
  std::string det_method = "all";
  det->add_option("--method", det_method, "closed, eigprod, exact, or all")
      ->check(CLI::IsMember({"closed", "eigprod", "exact", "all"}))
      ->capture_default_str();
  add_format(det);
  det->callback([&] { rc = cmd_det(det_fam, det_n, det_method, fmt()); });

  auto* ver = app.add_subcommand(
      "verify", "Run the verification suite and emit its report");
  std::size_t v_nmax = 16;
  int v_trials = 10;
  std::uint64_t v_seed = 42;
  double v_tol_eig = 1e-9, v_tol_det = 1e-6;
  std::string v_out;
  bool v_stamp = false;
  ver->add_option("--n-max", v_nmax, "Largest matrix order swept")
      ->capture_default_str();
  ver->add_option("--trials", v_trials, "Random seed triples per sweep")
      ->capture_default_str();
  ver->add_option("--seed", v_seed, "RNG seed for the random triples")
      ->capture_default_str();
  ver->add_option("--tol-eig", v_tol_eig,
                  "Relative tolerance for eigenvalue checks")
      ->capture_default_str();
  ver->add_option("--tol-det", v_tol_det,
                  "Relative tolerance for determinant checks")
      ->capture_default_str();
  ver->add_option("--out", v_out,
                  "Write the report document to this path instead of stdout");
  ver->add_flag("--timestamp", v_stamp,
                "Stamp the report with the current UTC time (off by default "
                "so output is byte-reproducible)");
  add_format(ver);
  ver->callback([&] {
    rc = cmd_verify(v_nmax, v_trials, v_seed, v_tol_eig, v_tol_det, v_out,
                    v_stamp, fmt());
  });

  auto* ben = app.add_subcommand(
      "bench", "Median wall-clock timing of closed forms vs oracles");
  std::vector<std::size_t> b_nlist;
  ben->add_option("--n-list", b_nlist, "Comma-separated matrix orders")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  std::string b_preset = "perrin";
  ben->add_option("--preset", b_preset, "Built-in family to time")
      ->check(CLI::IsMember({"cordonnier", "perrin", "vanderlaan"}))
      ->capture_default_str();
  int b_repeat = 5;
  ben->add_option("--repeat", b_repeat,
                  "Samples per (n, method); the median is reported")
      ->capture_default_str();
  std::vector<std::string> b_methods;
  ben->add_option("--methods", b_methods,
                  "Comma-separated subset of: eig-closed,eig-oracle,det-exact,"
                  "norm-closed (default: all)")
      ->delimiter(',');
  add_format(ben);
  ben->callback(
      [&] { rc = cmd_bench(b_preset, b_nlist, b_repeat, b_methods, fmt()); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}

int fail_with(int code, const std::exception& e) {
  std::cerr << "error: " << e.what() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UnsupportedFamilyError& e) {
    return fail_with(3, e);
  } catch (const NonnegativityError& e) {
    return fail_with(3, e);
  } catch (const ZeroDenominatorError& e) {
    return fail_with(3, e);
  } catch (const NonReversibleError& e) {
    return fail_with(2, e);
  } catch (const InexactBackstepError& e) {
    return fail_with(2, e);
  } catch (const ConfigError& e) {
    return fail_with(2, e);
  } catch (const std::invalid_argument& e) {
    return fail_with(2, e);
  } catch (const std::exception& e) {
    return fail_with(70, e);
  }
}
