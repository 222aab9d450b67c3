// Command-line front end: deterministic CSV/JSON artifacts for the
// interferometer library. Exit codes: 0 success, 2 usage or validation,
// 3 resource limits, 1 internal invariant violation.

#include <CLI11.hpp>

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "quonhom/ensembles.hpp"
#include "quonhom/errors.hpp"
#include "quonhom/interferometer.hpp"
#include "quonhom/scenarios.hpp"
#include "quonhom/validation.hpp"

namespace {

// 17 significant digits: doubles round-trip exactly through the text form
std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_array(const std::vector<double>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ", ";
    out += fmt(xs[i]);
  }
  out += "]";
  return out;
}

// stdout when no path is given; otherwise write-then-rename so readers never
// observe a partial file
void write_text(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw quonhom::resource_error("cannot open " + tmp + " for writing");
    }
    out << content;
    out.flush();
    if (!out) {
      throw quonhom::resource_error("short write to " + tmp);
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw quonhom::resource_error("cannot rename " + tmp + " to " + path);
  }
}

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t value,
                           const char* command) {
  if (opt->count() > 0) {
    return value;
  }
  if (const char* env = std::getenv("QUONHOM_SEED")) {
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || end == env || *end != '\0') {
      throw quonhom::validation_error(
          "QUONHOM_SEED must be an unsigned integer, got \"" +
          std::string(env) + "\"");
    }
    return v;
  }
  throw quonhom::validation_error(std::string(command) +
                                  " needs --seed or the QUONHOM_SEED variable");
}

struct DipArgs {
  double q = 0.0;
  int mode_count = 16;
  int pump_index = -1;   // default M - 1
  double sigma = 0.0;    // default M / 8
  double omega0 = 0.0;
  double delta_omega = 1.0;
  std::vector<double> taus;
  double tau_min = 0.0;
  double tau_max = 0.0;
  int tau_count = 0;
  std::vector<double> windows;
  std::string output;
};

void run_dip(const DipArgs& a, bool range_given) {
  if (!a.taus.empty() && range_given) {
    throw quonhom::validation_error(
        "give either --tau values or a --tau-min/--tau-max/--tau-count range");
  }
  std::vector<double> taus = a.taus;
  if (taus.empty() && range_given) {
    if (a.tau_count < 1) {
      throw quonhom::validation_error("--tau-count must be at least 1");
    }
    if (!(a.tau_max >= a.tau_min)) {
      throw quonhom::validation_error("--tau-max must not be below --tau-min");
    }
    if (a.tau_count == 1) {
      taus.push_back(a.tau_min);
    } else {
      const double step = (a.tau_max - a.tau_min) / (a.tau_count - 1);
      for (int i = 0; i < a.tau_count; ++i) {
        taus.push_back(a.tau_min + i * step);
      }
    }
  }
  if (taus.empty()) {
    throw quonhom::validation_error("no delay grid: pass --tau or a tau range");
  }
  if (!a.windows.empty() && a.q != 1.0) {
    throw quonhom::validation_error(
        "finite detection windows (--T) require --q 1");
  }

  const int pump = a.pump_index >= 0 ? a.pump_index : a.mode_count - 1;
  const double sigma = a.sigma > 0.0 ? a.sigma : a.mode_count / 8.0;
  const quonhom::TwinBeamSpec spec = quonhom::TwinBeamSpec::gaussian(
      a.mode_count, pump, sigma, a.omega0, a.delta_omega, taus);
  const auto curve = quonhom::dip_curve(spec, quonhom::QuonParameter(a.q));

  std::string csv = "tau,w,c12";
  for (double t : a.windows) {
    csv += ",c12_T" + fmt(t);
  }
  csv += "\n";
  const quonhom::SpectralAmplitude amp = quonhom::twin_beam_amplitude(spec);
  for (const auto& pt : curve) {
    csv += fmt(pt.tau) + "," + fmt(pt.w) + "," + fmt(pt.c12);
    for (double t : a.windows) {
      const auto phases =
          quonhom::PhaseProfile::from_delay(spec.omega.omega, pt.tau);
      csv += "," + fmt(quonhom::finite_time_coincidence(amp, phases,
                                                        spec.omega, t));
    }
    csv += "\n";
  }
  write_text(a.output, csv);
}

struct EnvelopeArgs {
  std::vector<double> q_grid;
  int mode_count = 4;
  std::string output;
};

void run_envelope(const EnvelopeArgs& a) {
  std::vector<double> grid = a.q_grid;
  if (grid.empty()) {
    for (int i = 0; i <= 40; ++i) {
      grid.push_back(i / 20.0 - 1.0);
    }
  }
  const auto rows = quonhom::envelope_diagram(grid, a.mode_count);
  std::string csv = "q,all_lo,all_hi,sep_lo,sep_hi,mean_c12\n";
  for (const auto& row : rows) {
    csv += fmt(row.q) + "," + fmt(row.all_lo) + "," + fmt(row.all_hi) + "," +
           fmt(row.sep_lo) + "," + fmt(row.sep_hi) + "," + fmt(row.mean_c12) +
           "\n";
  }
  write_text(a.output, csv);
}

struct AverageArgs {
  int mode_count = 4;
  double q = 0.0;
  long long samples = 100000;
  std::uint64_t seed = 0;
  std::string output;
};

void run_average(const AverageArgs& a) {
  const quonhom::EnsembleSpec spec{a.mode_count, a.samples, a.seed};
  const auto report = quonhom::average_w_mc(
      spec, quonhom::PhaseProfile::zero(a.mode_count),
      quonhom::QuonParameter(a.q));
  std::string json = "{\n";
  json += "  \"command\": \"average\",\n";
  json += "  \"M\": " + std::to_string(a.mode_count) + ",\n";
  json += "  \"q\": " + fmt(a.q) + ",\n";
  json += "  \"samples\": " + std::to_string(a.samples) + ",\n";
  json += "  \"seed\": " + std::to_string(a.seed) + ",\n";
  json += "  \"meanW\": " + fmt(report.mean_w) + ",\n";
  json += "  \"stderrW\": " + fmt(report.stderr_w) + ",\n";
  json += "  \"meanC12\": " + fmt(report.mean_c12) + ",\n";
  json += "  \"exactW\": " + fmt(report.exact_w) + ",\n";
  json += "  \"exactC12\": " + fmt(report.exact_c12) + "\n";
  json += "}\n";
  write_text(a.output, json);
}

struct WitnessArgs {
  double c12 = 0.0;
  double q = 0.0;
  std::string output;
};

void run_witness(const WitnessArgs& a) {
  const quonhom::QuonParameter qp(a.q);
  const auto verdict = quonhom::witness(a.c12, qp);
  std::string text = std::string("verdict: ") + quonhom::to_string(verdict) + "\n";
  if (verdict != quonhom::WitnessVerdict::Degenerate) {
    text += "reconstructedW: " + fmt((1.0 - 2.0 * a.c12) / a.q) + "\n";
  }
  write_text(a.output, text);
}

struct VerifyArgs {
  int instances = 200;
  std::vector<int> mode_counts;
  std::vector<double> q_values;
  std::uint64_t seed = 0;
  std::string output;
};

int run_verify(const VerifyArgs& a) {
  quonhom::OracleGridConfig config;
  config.instances = a.instances;
  config.seed = a.seed;
  if (!a.mode_counts.empty()) config.mode_counts = a.mode_counts;
  if (!a.q_values.empty()) config.q_values = a.q_values;

  const auto grid = quonhom::run_oracle_grid(config);
  const auto gram = quonhom::run_gram_checks();
  const bool passed = grid.passed && gram.passed;

  std::string json = "{\n";
  json += "  \"instances\": " + std::to_string(grid.instances) + ",\n";
  json += "  \"maxAbsError\": " + fmt(grid.max_abs_error) + ",\n";
  json += "  \"maxNormError\": " + fmt(grid.max_norm_error) + ",\n";
  json += "  \"maxCountError\": " + fmt(grid.max_count_error) + ",\n";
  json += "  \"gramMinEigenvalue\": " + fmt(gram.min_eigenvalue) + ",\n";
  json += "  \"gramMaxNullNorm\": " + fmt(gram.max_null_norm) + ",\n";
  json += "  \"gramMaxIdentityError\": " + fmt(gram.max_identity_error) + ",\n";
  json += std::string("  \"passed\": ") + (passed ? "true" : "false") + "\n";
  json += "}\n";
  write_text(a.output, json);
  return passed ? 0 : 1;
}

struct VisibilityArgs {
  std::string state = "twin";
  double q = 1.0;
  int mode_count = 16;
  int budget = 200;
  int starts = 8;
  std::uint64_t seed = 0;
  std::string output;
};

void run_visibility(const VisibilityArgs& a) {
  const quonhom::QuonParameter qp(a.q);
  const quonhom::SpectralAmplitude amp = [&] {
    if (a.state == "twin") {
      const auto spec = quonhom::TwinBeamSpec::gaussian(
          a.mode_count, a.mode_count - 1, a.mode_count / 8.0, 0.0, 1.0, {});
      return quonhom::twin_beam_amplitude(spec);
    }
    quonhom::RngStream rng(a.seed);
    return quonhom::sample_random_amplitude(a.mode_count, rng);
  }();
  const auto res = quonhom::visibility(amp, qp, a.budget, a.starts, a.seed);
  std::string json = "{\n";
  json += "  \"command\": \"visibility\",\n";
  json += "  \"state\": \"" + a.state + "\",\n";
  json += "  \"M\": " + std::to_string(a.mode_count) + ",\n";
  json += "  \"q\": " + fmt(a.q) + ",\n";
  json += "  \"budget\": " + std::to_string(a.budget) + ",\n";
  json += "  \"starts\": " + std::to_string(a.starts) + ",\n";
  json += "  \"seed\": " + std::to_string(a.seed) + ",\n";
  json += "  \"vmax\": " + fmt(res.vmax) + ",\n";
  json += "  \"wMax\": " + fmt(res.w_max) + ",\n";
  json += "  \"wMin\": " + fmt(res.w_min) + ",\n";
  json += "  \"phasesAtMax\": " + json_array(res.phases_at_max.phases) + ",\n";
  json += "  \"phasesAtMin\": " + json_array(res.phases_at_min.phases) + "\n";
  json += "}\n";
  write_text(a.output, json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hong-Ou-Mandel coincidence statistics under quon exchange"};
  app.require_subcommand(1);

  DipArgs dip;
  auto* dip_cmd = app.add_subcommand(
      "dip", "coincidence versus interferometric delay for a twin beam (CSV)");
  dip_cmd->add_option("--q", dip.q, "exchange parameter in [-1, 1]")->required();
  dip_cmd->add_option("--M", dip.mode_count, "frequency modes")
      ->capture_default_str();
  dip_cmd->add_option("--K", dip.pump_index, "pump comb index (default M - 1)");
  dip_cmd->add_option("--sigma", dip.sigma, "envelope width (default M / 8)");
  dip_cmd->add_option("--omega0", dip.omega0, "comb offset")
      ->capture_default_str();
  dip_cmd->add_option("--domega", dip.delta_omega, "comb spacing")
      ->capture_default_str();
  dip_cmd->add_option("--tau", dip.taus, "delay values (repeatable)");
  auto* tau_min_opt = dip_cmd->add_option("--tau-min", dip.tau_min, "range start");
  dip_cmd->add_option("--tau-max", dip.tau_max, "range end");
  dip_cmd->add_option("--tau-count", dip.tau_count, "range point count");
  dip_cmd->add_option("--T", dip.windows,
                      "finite detection windows, boson only (repeatable)");
  dip_cmd->add_option("-o,--output", dip.output, "output path (default stdout)");

  EnvelopeArgs envelope;
  auto* env_cmd = app.add_subcommand(
      "envelope", "coincidence bounds and ensemble mean over a q grid (CSV)");
  env_cmd->add_option("--q", envelope.q_grid,
                      "q values (default 41-point grid over [-1, 1])");
  env_cmd->add_option("--M", envelope.mode_count, "frequency modes")
      ->capture_default_str();
  env_cmd->add_option("-o,--output", envelope.output,
                      "output path (default stdout)");

  AverageArgs average;
  auto* avg_cmd = app.add_subcommand(
      "average", "Monte Carlo ensemble average of the overlap (JSON)");
  avg_cmd->add_option("--M", average.mode_count, "frequency modes")
      ->capture_default_str();
  avg_cmd->add_option("--q", average.q, "exchange parameter")->required();
  avg_cmd->add_option("--samples", average.samples, "sample count")
      ->capture_default_str();
  auto* avg_seed = avg_cmd->add_option("--seed", average.seed, "RNG seed");
  avg_cmd->add_option("-o,--output", average.output,
                      "output path (default stdout)");

  WitnessArgs witness_args;
  auto* wit_cmd = app.add_subcommand(
      "witness", "entanglement verdict from a measured coincidence rate");
  wit_cmd->add_option("--c12", witness_args.c12, "measured coincidence rate")
      ->required();
  wit_cmd->add_option("--q", witness_args.q, "exchange parameter")->required();
  wit_cmd->add_option("-o,--output", witness_args.output,
                      "output path (default stdout)");

  VerifyArgs verify;
  auto* ver_cmd = app.add_subcommand(
      "verify", "closed forms against the word-algebra engine (JSON report)");
  ver_cmd->add_option("--instances", verify.instances, "random instances")
      ->capture_default_str();
  ver_cmd->add_option("--M", verify.mode_counts,
                      "mode counts to cycle through (default 2 3 4, max 4)");
  ver_cmd->add_option("--q", verify.q_values, "q values (default 7-point grid)");
  ver_cmd->add_option("--seed", verify.seed, "RNG seed")->capture_default_str();
  ver_cmd->add_option("-o,--output", verify.output,
                      "output path (default stdout)");

  VisibilityArgs vis;
  auto* vis_cmd = app.add_subcommand(
      "visibility", "interference visibility via phase optimization (JSON)");
  vis_cmd->add_option("--state", vis.state, "input state")
      ->check(CLI::IsMember({"twin", "random"}))
      ->capture_default_str();
  vis_cmd->add_option("--q", vis.q, "exchange parameter")->required();
  vis_cmd->add_option("--M", vis.mode_count, "frequency modes")
      ->capture_default_str();
  vis_cmd->add_option("--budget", vis.budget, "sweeps per start")
      ->capture_default_str();
  vis_cmd->add_option("--starts", vis.starts, "restart count")
      ->capture_default_str();
  auto* vis_seed = vis_cmd->add_option("--seed", vis.seed, "RNG seed");
  vis_cmd->add_option("-o,--output", vis.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);

    if (dip_cmd->parsed()) {
      run_dip(dip, tau_min_opt->count() > 0 || dip.tau_count > 0);
    } else if (env_cmd->parsed()) {
      run_envelope(envelope);
    } else if (avg_cmd->parsed()) {
      average.seed = resolve_seed(avg_seed, average.seed, "average");
      run_average(average);
    } else if (wit_cmd->parsed()) {
      run_witness(witness_args);
    } else if (ver_cmd->parsed()) {
      return run_verify(verify);
    } else if (vis_cmd->parsed()) {
      vis.seed = resolve_seed(vis_seed, vis.seed, "visibility");
      run_visibility(vis);
    }
    return 0;
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const quonhom::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const quonhom::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
