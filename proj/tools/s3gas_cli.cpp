// s3gas — photon gas on R x S^3: spectrum tables, thermodynamic reports,
// spectral-density curves, adiabatic trajectories, method comparisons and
// equation-of-state sweeps, as CSV or JSON.
//
// Exit codes: 0 success, 1 runtime/numerical failure, 2 usage error.

#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "s3gas/asymptotics.hpp"
#include "s3gas/continuum.hpp"
#include "s3gas/modesum.hpp"
#include "s3gas/processes.hpp"
#include "s3gas/report_io.hpp"
#include "s3gas/spectrum.hpp"

namespace {

using nlohmann::ordered_json;
using namespace s3gas;

struct CommonOptions {
  std::string format = "csv";
  std::string output;
  int precision = 12;
  double quad_tol = 1e-10;

  [[nodiscard]] io::OutputSpec output_spec() const {
    io::OutputSpec spec;
    spec.format = io::format_from_string(format);
    spec.path = output;
    spec.precision = precision;
    spec.validate();
    return spec;
  }
  [[nodiscard]] numerics::QuadratureSettings quadrature() const {
    numerics::QuadratureSettings settings;
    settings.relative_tolerance = quad_tol;
    return settings;
  }
};

void add_common_options(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", opts.output,
                  "Output path (default: standard output)");
  cmd->add_option("--precision", opts.precision,
                  "CSV significant digits, 6..17")
      ->check(CLI::Range(6, 17));
  cmd->add_option("--quad-tol", opts.quad_tol,
                  "Quadrature relative tolerance")
      ->check(CLI::Range(1e-14, 1e-4));
}

double relative_deviation(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return 0.0;
  return std::abs(a - b) / scale;
}

ThermoReport report_for(const ThermoState& state, Method method,
                        const numerics::QuadratureSettings& settings) {
  switch (method) {
    case Method::exact_sum:
      return modesum::exact_report(state, settings.relative_tolerance);
    case Method::quadrature:
      return continuum::thermo_report(state, settings);
    case Method::asymptotic:
      return asymptotics::thermo_report(state);
  }
  throw std::logic_error("report_for: unreachable");
}

// ---- spectrum ------------------------------------------------------------

int run_spectrum(double radius, double cutoff, const CommonOptions& opts) {
  const io::OutputSpec spec = opts.output_spec();
  const Geometry geom{radius};
  const auto levels = spectrum::enumerate_levels(geom, cutoff);

  std::string out;
  if (spec.format == io::OutputSpec::Format::csv) {
    out += io::csv_row({"n", "j", "energy", "degeneracy"});
    for (const auto& level : levels) {
      out += io::csv_row({std::to_string(level.n),
                          io::format_double(level.j, spec.precision),
                          io::format_double(level.energy, spec.precision),
                          std::to_string(level.degeneracy)});
    }
  } else {
    ordered_json doc;
    doc["command"] = "spectrum";
    doc["R"] = radius;
    doc["cutoff"] = cutoff;
    doc["levels"] = ordered_json::array();
    for (const auto& level : levels) {
      ordered_json row;
      row["n"] = level.n;
      row["j"] = level.j;
      row["energy"] = level.energy;
      row["degeneracy"] = level.degeneracy;
      doc["levels"].push_back(row);
    }
    out = doc.dump(2) + "\n";
  }
  io::write_output(spec, out);
  return 0;
}

// ---- thermo ---------------------------------------------------------------

std::vector<std::string> deviation_cells(const ThermoReport& a,
                                         const ThermoReport& b,
                                         int precision) {
  const std::string tag = "dev(" + to_string(a.method) + "," +
                          to_string(b.method) + ")";
  auto dev = [&](double x, double y) {
    return io::format_double(relative_deviation(x, y), precision);
  };
  return {tag,
          dev(a.R, b.R),
          dev(a.T, b.T),
          dev(a.rt(), b.rt()),
          dev(a.V, b.V),
          dev(a.N, b.N),
          dev(a.U, b.U),
          dev(a.F, b.F),
          dev(a.Omega, b.Omega),
          dev(a.P, b.P),
          dev(a.S, b.S),
          dev(a.rho_E, b.rho_E),
          ""};
}

ordered_json deviation_json(const ThermoReport& a, const ThermoReport& b) {
  ordered_json j;
  j["pair"] = {to_string(a.method), to_string(b.method)};
  auto put = [&](const char* key, double x, double y) {
    const double d = relative_deviation(x, y);
    if (std::isnan(d)) {
      j[key] = nullptr;
    } else {
      j[key] = d;
    }
  };
  put("N", a.N, b.N);
  put("U", a.U, b.U);
  put("F", a.F, b.F);
  put("Omega", a.Omega, b.Omega);
  put("P", a.P, b.P);
  put("S", a.S, b.S);
  put("rho_E", a.rho_E, b.rho_E);
  return j;
}

int run_thermo(double radius, double temp, const std::string& method_name,
               const CommonOptions& opts) {
  const io::OutputSpec spec = opts.output_spec();
  const ThermoState state{Geometry{radius}, temp};
  const auto settings = opts.quadrature();

  std::vector<ThermoReport> reports;
  if (method_name == "all") {
    reports.push_back(report_for(state, Method::exact_sum, settings));
    reports.push_back(report_for(state, Method::quadrature, settings));
    reports.push_back(report_for(state, Method::asymptotic, settings));
  } else {
    reports.push_back(
        report_for(state, method_from_string(method_name), settings));
  }

  std::string out;
  if (spec.format == io::OutputSpec::Format::csv) {
    out += io::csv_row(io::kReportHeader);
    for (const auto& rep : reports) {
      out += io::csv_row(io::report_to_cells(rep, spec.precision));
    }
    if (reports.size() > 1) {
      for (std::size_t i = 0; i < reports.size(); ++i) {
        for (std::size_t k = i + 1; k < reports.size(); ++k) {
          out += io::csv_row(
              deviation_cells(reports[i], reports[k], spec.precision));
        }
      }
    }
  } else {
    ordered_json doc;
    doc["command"] = "thermo";
    doc["reports"] = ordered_json::array();
    for (const auto& rep : reports) {
      doc["reports"].push_back(io::report_to_json(rep));
    }
    if (reports.size() > 1) {
      doc["deviations"] = ordered_json::array();
      for (std::size_t i = 0; i < reports.size(); ++i) {
        for (std::size_t k = i + 1; k < reports.size(); ++k) {
          doc["deviations"].push_back(deviation_json(reports[i], reports[k]));
        }
      }
    }
    out = doc.dump(2) + "\n";
  }
  io::write_output(spec, out);
  return 0;
}

// ---- planck ----------------------------------------------------------------

int run_planck(double rt, double x_max, int points, const CommonOptions& opts) {
  const io::OutputSpec spec = opts.output_spec();
  const double a = 1.0 / rt;

  std::string out;
  if (spec.format == io::OutputSpec::Format::csv) {
    out += io::csv_row({"x", "u_modified", "u_freespace"});
  }
  ordered_json doc;
  if (spec.format == io::OutputSpec::Format::json) {
    doc["command"] = "planck";
    doc["rt"] = rt;
    doc["x_max"] = x_max;
    doc["points"] = points;
    doc["samples"] = ordered_json::array();
  }
  for (int i = 1; i <= points; ++i) {
    const double x = x_max * static_cast<double>(i) / points;
    const double u_mod = continuum::spectral_density(x, a);
    const double u_free = continuum::spectral_density(x, 0.0);
    if (spec.format == io::OutputSpec::Format::csv) {
      out += io::csv_row({io::format_double(x, spec.precision),
                          io::format_double(u_mod, spec.precision),
                          io::format_double(u_free, spec.precision)});
    } else {
      ordered_json row;
      row["x"] = x;
      row["u_modified"] = u_mod;
      row["u_freespace"] = u_free;
      doc["samples"].push_back(row);
    }
  }
  if (spec.format == io::OutputSpec::Format::json) {
    out = doc.dump(2) + "\n";
  }
  io::write_output(spec, out);
  return 0;
}

// ---- adiabat ----------------------------------------------------------------

int run_adiabat(double S0, double r_min, double r_max, int steps,
                const std::string& method_name, const CommonOptions& opts) {
  const io::OutputSpec spec = opts.output_spec();
  const Method method = method_from_string(method_name);
  const auto points = processes::adiabat_trajectory(S0, r_min, r_max, steps,
                                                    method, opts.quadrature());

  std::string out;
  if (spec.format == io::OutputSpec::Format::csv) {
    out += io::csv_row({"R", "T", "RT", "N", "U", "F", "P", "S"});
    for (const auto& pt : points) {
      out += io::csv_row({io::format_double(pt.R, spec.precision),
                          io::format_double(pt.T, spec.precision),
                          io::format_double(pt.rt, spec.precision),
                          io::format_double(pt.report.N, spec.precision),
                          io::format_double(pt.report.U, spec.precision),
                          io::format_double(pt.report.F, spec.precision),
                          io::format_double(pt.report.P, spec.precision),
                          io::format_double(pt.report.S, spec.precision)});
    }
  } else {
    ordered_json doc;
    doc["command"] = "adiabat";
    doc["S0"] = S0;
    doc["method"] = to_string(method);
    doc["points"] = ordered_json::array();
    for (const auto& pt : points) {
      ordered_json row;
      row["R"] = pt.R;
      row["T"] = pt.T;
      row["RT"] = pt.rt;
      if (std::isnan(pt.report.N)) {
        row["N"] = nullptr;
      } else {
        row["N"] = pt.report.N;
      }
      row["U"] = pt.report.U;
      row["F"] = pt.report.F;
      row["P"] = pt.report.P;
      row["S"] = pt.report.S;
      doc["points"].push_back(row);
    }
    out = doc.dump(2) + "\n";
  }
  io::write_output(spec, out);
  return 0;
}

// ---- compare -----------------------------------------------------------------

int run_compare(double radius, const std::vector<double>& temps,
                const CommonOptions& opts) {
  const io::OutputSpec spec = opts.output_spec();
  const auto settings = opts.quadrature();

  std::string out;
  if (spec.format == io::OutputSpec::Format::csv) {
    out += io::csv_row({"T", "quantity", "exact", "quadrature", "asymptotic",
                        "dev_exact_quad", "dev_quad_asym"});
  }
  ordered_json doc;
  if (spec.format == io::OutputSpec::Format::json) {
    doc["command"] = "compare";
    doc["R"] = radius;
    doc["rows"] = ordered_json::array();
  }

  for (double temp : temps) {
    const ThermoState state{Geometry{radius}, temp};
    const ThermoReport exact = report_for(state, Method::exact_sum, settings);
    const ThermoReport quad = report_for(state, Method::quadrature, settings);
    const ThermoReport asym = report_for(state, Method::asymptotic, settings);

    const struct {
      const char* name;
      double e, q, a;
    } rows[] = {
        {"N", exact.N, quad.N, asym.N},
        {"U", exact.U, quad.U, asym.U},
        {"S", exact.S, quad.S, asym.S},
        {"P", exact.P, quad.P, asym.P},
    };
    for (const auto& row : rows) {
      const double dev_eq = relative_deviation(row.e, row.q);
      const double dev_qa = relative_deviation(row.q, row.a);
      if (spec.format == io::OutputSpec::Format::csv) {
        out += io::csv_row({io::format_double(temp, spec.precision), row.name,
                            io::format_double(row.e, spec.precision),
                            io::format_double(row.q, spec.precision),
                            io::format_double(row.a, spec.precision),
                            io::format_double(dev_eq, spec.precision),
                            io::format_double(dev_qa, spec.precision)});
      } else {
        ordered_json j;
        j["T"] = temp;
        j["quantity"] = row.name;
        j["exact"] = row.e;
        j["quadrature"] = row.q;
        j["asymptotic"] = std::isnan(row.a) ? ordered_json(nullptr)
                                            : ordered_json(row.a);
        j["dev_exact_quad"] = dev_eq;
        j["dev_quad_asym"] = std::isnan(dev_qa) ? ordered_json(nullptr)
                                                : ordered_json(dev_qa);
        doc["rows"].push_back(j);
      }
    }
  }
  if (spec.format == io::OutputSpec::Format::json) {
    out = doc.dump(2) + "\n";
  }
  io::write_output(spec, out);
  return 0;
}

// ---- eos ------------------------------------------------------------------

int run_eos(const std::vector<double>& rts, const std::string& method_name,
            const CommonOptions& opts) {
  const io::OutputSpec spec = opts.output_spec();
  const Method method = method_from_string(method_name);
  const auto settings = opts.quadrature();

  std::string out;
  if (spec.format == io::OutputSpec::Format::csv) {
    out += io::csv_row({"RT", "rho_E", "P", "rho_eos", "residual"});
  }
  ordered_json doc;
  if (spec.format == io::OutputSpec::Format::json) {
    doc["command"] = "eos";
    doc["method"] = to_string(method);
    doc["rows"] = ordered_json::array();
  }

  // residual / rho_E depends on RT alone (every term scales as R^-4 at
  // fixed RT), so points are evaluated at R = 1, T = RT.
  for (double rt : rts) {
    const ThermoState state{Geometry{1.0}, rt};
    const ThermoReport rep = report_for(state, method, settings);
    const double rho_eos =
        asymptotics::eos_density_from_pressure(rep.P, state.geometry);
    const double residual = rep.rho_E - rho_eos;
    if (spec.format == io::OutputSpec::Format::csv) {
      out += io::csv_row({io::format_double(rt, spec.precision),
                          io::format_double(rep.rho_E, spec.precision),
                          io::format_double(rep.P, spec.precision),
                          io::format_double(rho_eos, spec.precision),
                          io::format_double(residual, spec.precision)});
    } else {
      ordered_json j;
      j["RT"] = rt;
      j["rho_E"] = rep.rho_E;
      j["P"] = rep.P;
      j["rho_eos"] = rho_eos;
      j["residual"] = residual;
      doc["rows"].push_back(j);
    }
  }
  if (spec.format == io::OutputSpec::Format::json) {
    out = doc.dump(2) + "\n";
  }
  io::write_output(spec, out);
  return 0;
}

bool parse_state_pair(const std::string& text, double& r, double& t) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return false;
  try {
    std::size_t used = 0;
    r = std::stod(text.substr(0, comma), &used);
    if (used != comma) return false;
    const std::string rest = text.substr(comma + 1);
    t = std::stod(rest, &used);
    if (used != rest.size()) return false;
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mode spectrum and equilibrium statistical mechanics of the "
               "photon gas on R x S^3"};
  app.require_subcommand(1);

  // spectrum
  double sp_radius = 1.0;
  double sp_cutoff = 10.0;
  CommonOptions sp_opts;
  auto* sp = app.add_subcommand("spectrum", "Table of discrete levels");
  sp->add_option("--radius,-R", sp_radius, "Radius of S^3")
      ->required()
      ->check(CLI::PositiveNumber);
  sp->add_option("--cutoff,-c", sp_cutoff, "Energy cutoff")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common_options(sp, sp_opts);

  // thermo
  double th_radius = 1.0;
  double th_temp = 1.0;
  std::string th_method = "quadrature";
  CommonOptions th_opts;
  auto* th = app.add_subcommand("thermo", "Thermodynamic report at (R, T)");
  th->add_option("--radius,-R", th_radius, "Radius of S^3")
      ->required()
      ->check(CLI::PositiveNumber);
  th->add_option("--temp,-T", th_temp, "Temperature")
      ->required()
      ->check(CLI::PositiveNumber);
  th->add_option("--method,-m", th_method, "exact|quadrature|asymptotic|all")
      ->check(CLI::IsMember({"exact", "quadrature", "asymptotic", "all"}));
  add_common_options(th, th_opts);

  // planck
  double pl_rt = 1.0;
  double pl_xmax = 12.0;
  int pl_points = 200;
  CommonOptions pl_opts;
  auto* pl = app.add_subcommand(
      "planck", "Spectral density curves (modified and free-space)");
  pl->add_option("--rt", pl_rt, "Dimensionless product RT")
      ->required()
      ->check(CLI::PositiveNumber);
  pl->add_option("--x-max", pl_xmax, "Upper end of the x = eps/T grid")
      ->check(CLI::PositiveNumber);
  pl->add_option("--points", pl_points, "Grid size")->check(CLI::Range(2, 1000000));
  add_common_options(pl, pl_opts);

  // adiabat
  double ad_entropy = 0.0;
  std::string ad_from_state;
  double ad_rmin = 1.0;
  double ad_rmax = 8.0;
  int ad_steps = 4;
  std::string ad_method = "quadrature";
  CommonOptions ad_opts;
  auto* ad = app.add_subcommand("adiabat",
                                "Constant-entropy trajectory over R");
  auto* ad_s0 = ad->add_option("--entropy", ad_entropy, "Target entropy S0")
                    ->check(CLI::PositiveNumber);
  auto* ad_fs = ad->add_option(
      "--from-state", ad_from_state,
      "R,T pair whose entropy (by --method) becomes the target");
  ad_s0->excludes(ad_fs);
  ad_fs->excludes(ad_s0);
  ad->add_option("--r-min", ad_rmin, "Smallest radius")
      ->required()
      ->check(CLI::PositiveNumber);
  ad->add_option("--r-max", ad_rmax, "Largest radius")
      ->required()
      ->check(CLI::PositiveNumber);
  ad->add_option("--steps", ad_steps, "Number of radii")->check(CLI::Range(2, 100000));
  ad->add_option("--method,-m", ad_method, "exact|quadrature|asymptotic")
      ->check(CLI::IsMember({"exact", "quadrature", "asymptotic"}));
  add_common_options(ad, ad_opts);

  // compare
  double cp_radius = 1.0;
  std::vector<double> cp_temps;
  CommonOptions cp_opts;
  auto* cp = app.add_subcommand(
      "compare", "Cross-method table over a list of temperatures");
  cp->add_option("--radius,-R", cp_radius, "Radius of S^3")
      ->required()
      ->check(CLI::PositiveNumber);
  cp->add_option("--temps", cp_temps, "Comma-separated temperatures")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  add_common_options(cp, cp_opts);

  // eos
  std::vector<double> eo_rts;
  std::string eo_method = "asymptotic";
  CommonOptions eo_opts;
  auto* eo = app.add_subcommand(
      "eos", "Equation-of-state residual over a list of RT values");
  eo->add_option("--rt", eo_rts, "Comma-separated RT values")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  eo->add_option("--method,-m", eo_method, "exact|quadrature|asymptotic")
      ->check(CLI::IsMember({"exact", "quadrature", "asymptotic"}));
  add_common_options(eo, eo_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sp->parsed()) {
      return run_spectrum(sp_radius, sp_cutoff, sp_opts);
    }
    if (th->parsed()) {
      return run_thermo(th_radius, th_temp, th_method, th_opts);
    }
    if (pl->parsed()) {
      return run_planck(pl_rt, pl_xmax, pl_points, pl_opts);
    }
    if (ad->parsed()) {
      double S0 = ad_entropy;
      if (!ad_from_state.empty()) {
        double r = 0.0;
        double t = 0.0;
        if (!parse_state_pair(ad_from_state, r, t) || r <= 0.0 || t <= 0.0) {
          std::cerr << "error: --from-state expects a positive pair R,T\n";
          return 2;
        }
        const ThermoState state{Geometry{r}, t};
        S0 = report_for(state, method_from_string(ad_method),
                        ad_opts.quadrature())
                 .S;
      } else if (ad_s0->count() == 0) {
        std::cerr << "error: adiabat needs --entropy or --from-state\n";
        return 2;
      }
      return run_adiabat(S0, ad_rmin, ad_rmax, ad_steps, ad_method, ad_opts);
    }
    if (cp->parsed()) {
      return run_compare(cp_radius, cp_temps, cp_opts);
    }
    if (eo->parsed()) {
      return run_eos(eo_rts, eo_method, eo_opts);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
