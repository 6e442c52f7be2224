#include "casimir/runconfig.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "casimir/oracle.hpp"

namespace casimir {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const char* where,
                         std::initializer_list<const char*> allowed) {
  std::string unknown;
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed)
      if (key == a) known = true;
    if (!known) unknown += (unknown.empty() ? "" : ", ") + key;
  }
  if (!unknown.empty())
    throw ConfigError(std::string("unknown keys in ") + where + ": " +
                      unknown);
}

double require_positive(const json& obj, const char* key, double fallback) {
  const double v = obj.value(key, fallback);
  if (!(v > 0.0))
    throw ConfigError(std::string("'") + key + "' must be positive");
  return v;
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string suffix_path(const std::string& base, const std::string& tag) {
  const auto dot = base.rfind('.');
  if (dot == std::string::npos) return base + "_" + tag;
  return base.substr(0, dot) + "_" + tag + base.substr(dot);
}

SweepKind parse_kind(const std::string& s) {
  if (s == "thickness") return SweepKind::Thickness;
  if (s == "position") return SweepKind::Position;
  if (s == "contrast") return SweepKind::Contrast;
  throw ConfigError("sweep kind must be thickness, position or contrast");
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  reject_unknown_keys(doc, "document",
                      {"schema", "scenario", "slab", "mirrors", "geometry",
                       "sweep", "quadrature", "output", "threads", "verify"});
  if (doc.value("schema", 0) != 1)
    throw ConfigError("missing or unsupported 'schema' (expected 1)");

  RunConfig cfg;
  cfg.scenario = doc.value("scenario", "");
  if (cfg.scenario != "stress" && cfg.scenario != "force" &&
      cfg.scenario != "sweep" && cfg.scenario != "asymptote" &&
      cfg.scenario != "verify")
    throw ConfigError(
        "scenario must be one of stress, force, sweep, asymptote, verify");

  if (doc.contains("slab")) {
    const json& slab = doc["slab"];
    reject_unknown_keys(slab, "slab", {"model", "omega_p_eV"});
    const std::string model = slab.value("model", "plasma");
    if (model != "plasma")
      throw ConfigError("slab model must be 'plasma' (vacuum, constant, "
                        "drude, plasma_shifted and perfect_mirror are mirror "
                        "or internal variants)");
    cfg.slab_plasma_eV = require_positive(slab, "omega_p_eV", 9.0);
  }
  cfg.sweep.slab_plasma_eV = cfg.slab_plasma_eV;

  if (doc.contains("mirrors")) {
    const json& m = doc["mirrors"];
    reject_unknown_keys(m, "mirrors",
                        {"model", "contrast", "gamma_over_Omega_p"});
    const std::string model = m.value("model", "drude");
    if (model == "perfect_mirror") {
      cfg.sweep.perfect_mirrors = true;
    } else if (model == "vacuum") {
      cfg.sweep.perfect_mirrors = false;
      cfg.sweep.mirror_contrast = 0.0;
    } else if (model == "drude" || model == "plasma") {
      cfg.sweep.perfect_mirrors = false;
      cfg.sweep.mirror_contrast = require_positive(m, "contrast", 1e3);
      cfg.sweep.gamma_over_OmegaP =
          model == "plasma" ? 0.0 : m.value("gamma_over_Omega_p", 1e-3);
      if (cfg.sweep.gamma_over_OmegaP < 0.0)
        throw ConfigError("'gamma_over_Omega_p' must be >= 0");
    } else {
      throw ConfigError("mirrors model must be perfect_mirror, vacuum, "
                        "drude or plasma");
    }
  }

  if (doc.contains("geometry")) {
    const json& g = doc["geometry"];
    reject_unknown_keys(
        g, "geometry",
        {"kP_ds", "contact", "z", "L_over_ds", "d1_over_ds", "d2_over_ds"});
    cfg.sweep.kP_ds = require_positive(g, "kP_ds", 0.1);
    cfg.contact = g.value("contact", false);
    const bool has_z = g.contains("z");
    const bool has_gaps = g.contains("d1_over_ds") || g.contains("d2_over_ds");
    if (cfg.contact && (has_z || has_gaps))
      throw ConfigError("contact configurations take neither z nor gaps");
    if (has_z && has_gaps)
      throw ConfigError("give exactly one of z or (d1_over_ds, d2_over_ds)");
    if (has_z) {
      cfg.z = g["z"].get<double>();
      if (!(cfg.z > -1.0 && cfg.z < 1.0))
        throw ConfigError("z must lie in (-1, 1)");
      cfg.sweep.L_over_ds = require_positive(g, "L_over_ds", 3.0);
      if (cfg.sweep.L_over_ds <= 1.0)
        throw ConfigError("cavity width violates L > d_s");
      cfg.contact = false;
    } else if (has_gaps) {
      if (!(g.contains("d1_over_ds") && g.contains("d2_over_ds")))
        throw ConfigError("both d1_over_ds and d2_over_ds are required");
      cfg.explicit_gaps = true;
      cfg.d1_over_ds = g["d1_over_ds"].get<double>();
      cfg.d2_over_ds = g["d2_over_ds"].get<double>();
      if (cfg.d1_over_ds < 0.0 || cfg.d2_over_ds < 0.0)
        throw ConfigError("gap widths must be >= 0");
      cfg.contact = cfg.d1_over_ds == 0.0 && cfg.d2_over_ds == 0.0;
      if (g.contains("L_over_ds")) {
        const double L = g["L_over_ds"].get<double>();
        if (std::abs(L - (1.0 + cfg.d1_over_ds + cfg.d2_over_ds)) > 1e-9)
          throw ConfigError(
              "geometry violates L = d1 + d_s + d2 consistency");
        cfg.sweep.L_over_ds = L;
      }
    } else if (g.contains("L_over_ds")) {
      cfg.sweep.L_over_ds = require_positive(g, "L_over_ds", 3.0);
      if (cfg.sweep.L_over_ds <= 1.0)
        throw ConfigError("cavity width violates L > d_s");
    } else if (!cfg.contact && cfg.scenario != "sweep" &&
               cfg.scenario != "asymptote" && cfg.scenario != "verify") {
      throw ConfigError("geometry needs contact:true, z, or explicit gaps");
    }
  } else {
    cfg.contact = cfg.scenario != "force";
  }

  if (doc.contains("sweep")) {
    const json& s = doc["sweep"];
    reject_unknown_keys(s, "sweep",
                        {"kind", "grid", "contrasts", "L_over_ds_values"});
    cfg.sweep.kind = parse_kind(s.value("kind", "thickness"));
    if (s.contains("grid")) {
      cfg.sweep.grid = s["grid"].get<std::vector<double>>();
    } else {
      switch (cfg.sweep.kind) {
        case SweepKind::Thickness: cfg.sweep.grid = default_thickness_grid(); break;
        case SweepKind::Position: cfg.sweep.grid = default_position_grid(); break;
        case SweepKind::Contrast: cfg.sweep.grid = default_contrast_grid(); break;
      }
    }
    if (s.contains("contrasts")) {
      if (cfg.sweep.kind != SweepKind::Thickness)
        throw ConfigError("'contrasts' applies only to thickness sweeps");
      cfg.secondary = s["contrasts"].get<std::vector<double>>();
    }
    if (s.contains("L_over_ds_values")) {
      if (cfg.sweep.kind != SweepKind::Position)
        throw ConfigError("'L_over_ds_values' applies only to position sweeps");
      cfg.secondary = s["L_over_ds_values"].get<std::vector<double>>();
    }
    cfg.sweep.validate();
  } else if (cfg.scenario == "sweep") {
    cfg.sweep.kind = SweepKind::Thickness;
    cfg.sweep.grid = default_thickness_grid();
  }

  if (doc.contains("quadrature")) {
    const json& q = doc["quadrature"];
    reject_unknown_keys(q, "quadrature",
                        {"rel_tol", "abs_tol", "max_evals"});
    cfg.sweep.quad.rel_tol = q.value("rel_tol", cfg.sweep.quad.rel_tol);
    cfg.sweep.quad.abs_tol = q.value("abs_tol", cfg.sweep.quad.abs_tol);
    cfg.sweep.quad.max_evals = q.value("max_evals", cfg.sweep.quad.max_evals);
    if (!(cfg.sweep.quad.rel_tol > 0.0 && cfg.sweep.quad.rel_tol <= 1e-2))
      throw ConfigError("rel_tol must be in (0, 1e-2]");
    if (cfg.sweep.quad.max_evals < 1000)
      throw ConfigError("max_evals must be >= 1000");
  }

  if (doc.contains("output")) cfg.output_path = doc["output"].get<std::string>();
  if (doc.contains("threads")) {
    cfg.sweep.threads = doc["threads"].get<int>();
    if (cfg.sweep.threads < 1) throw ConfigError("threads must be >= 1");
  }
  if (doc.contains("verify")) {
    const json& v = doc["verify"];
    reject_unknown_keys(v, "verify", {"seed", "cases", "points", "nodes"});
    cfg.verify_seed = v.value("seed", cfg.verify_seed);
    cfg.verify_cases = v.value("cases", cfg.verify_cases);
    cfg.verify_points = v.value("points", cfg.verify_points);
    cfg.verify_nodes = v.value("nodes", cfg.verify_nodes);
  }
  return cfg;
}

CavityConfig single_point_config(const RunConfig& config) {
  SweepSpec spec = config.sweep;
  if (config.contact) {
    spec.kind = SweepKind::Contrast;  // contact template at fixed thickness
    return sweep_point_config(
        spec, spec.perfect_mirrors ? 1.0 : spec.mirror_contrast);
  }
  if (config.explicit_gaps) {
    const double k_P = ev_to_kP(config.slab_plasma_eV);
    spec.kind = SweepKind::Contrast;
    CavityConfig cav = sweep_point_config(
        spec, spec.perfect_mirrors ? 1.0 : spec.mirror_contrast);
    cav.d1 = config.d1_over_ds * cav.d_s;
    cav.d2 = config.d2_over_ds * cav.d_s;
    (void)k_P;
    return cav;
  }
  spec.kind = SweepKind::Position;
  return sweep_point_config(spec, config.z);
}

void write_csv(const std::string& path, const std::string& abscissa_name,
               const std::vector<SweepRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << abscissa_name
      << ",F_s_dimensionless,F_s_over_FC,F_dimensionless,F_s_SI,F_SI,"
         "err_Fs,err_F,evals,converged\n";
  for (const SweepRow& row : rows) {
    out << format_value(row.abscissa) << ','
        << format_value(row.Fs_dimensionless) << ','
        << format_value(row.Fs_over_FC) << ',';
    if (row.has_force) out << format_value(row.F_dimensionless);
    out << ',' << format_value(row.Fs_SI) << ',';
    if (row.has_force) out << format_value(row.F_SI);
    out << ',' << format_value(row.err_Fs) << ',';
    if (row.has_force) out << format_value(row.err_F);
    out << ',' << row.evals << ',' << (row.converged ? 1 : 0) << '\n';
  }
}

namespace {

SweepRow evaluate_single_point(const RunConfig& config, bool want_force) {
  const CavityConfig cav = single_point_config(config);
  const double k_P = ev_to_kP(config.slab_plasma_eV);
  const ScaledUnits scale{k_P};

  SweepRow row;
  row.abscissa = config.sweep.kP_ds;
  const PressureResult fs = stress_in_slab(cav, config.sweep.quad);
  row.Fs_SI = fs.value;
  row.err_Fs = fs.error_estimate;
  row.Fs_dimensionless = fs.value / scale.pressure_scale();
  row.Fs_over_FC = fs.value / casimir_ideal(cav.d_s);
  row.evals = fs.evals;
  row.converged = fs.converged;
  if (want_force) {
    if (!(cav.d1 > 0.0 && cav.d2 > 0.0))
      throw ConfigError("force scenario requires both gaps open");
    const PressureResult f = net_force_on_slab(cav, config.sweep.quad);
    row.has_force = true;
    row.F_SI = f.value;
    row.F_dimensionless = f.value / scale.pressure_scale();
    row.err_F = f.error_estimate;
    row.evals += f.evals;
    row.converged = row.converged && f.converged;
  }
  return row;
}

}  // namespace

RunOutcome run(const RunConfig& config) {
  RunOutcome outcome;
  std::ostringstream report;

  if (config.scenario == "stress" || config.scenario == "force") {
    SweepRow row = evaluate_single_point(
        config, config.scenario == "force" ||
                    (!config.contact && !config.explicit_gaps) ||
                    (config.explicit_gaps && config.d1_over_ds > 0.0 &&
                     config.d2_over_ds > 0.0));
    write_csv(config.output_path, "kP_ds", {row});
    outcome.files_written.push_back(config.output_path);
    if (!row.converged) outcome.exit_status = 3;
  } else if (config.scenario == "sweep") {
    std::vector<double> secondary = config.secondary;
    const char* tag_prefix = "";
    std::string abscissa_name;
    switch (config.sweep.kind) {
      case SweepKind::Thickness:
        abscissa_name = "kP_ds";
        tag_prefix = "contrast";
        if (secondary.empty())
          secondary = {config.sweep.perfect_mirrors
                           ? 0.0
                           : config.sweep.mirror_contrast};
        break;
      case SweepKind::Position:
        abscissa_name = "z";
        tag_prefix = "L";
        if (secondary.empty()) secondary = {config.sweep.L_over_ds};
        break;
      case SweepKind::Contrast:
        abscissa_name = "OmegaP_over_omegaP";
        secondary = {0.0};
        break;
    }
    const bool tagged = secondary.size() > 1;
    for (double sv : secondary) {
      SweepSpec spec = config.sweep;
      if (config.sweep.kind == SweepKind::Thickness && !config.secondary.empty())
        spec.mirror_contrast = sv;
      if (config.sweep.kind == SweepKind::Position && !config.secondary.empty())
        spec.L_over_ds = sv;
      const std::vector<SweepRow> rows = run_sweep(spec);
      std::string path = config.output_path;
      if (tagged) {
        char tag[48];
        std::snprintf(tag, sizeof tag, "%s%g", tag_prefix, sv);
        path = suffix_path(path, tag);
      }
      write_csv(path, abscissa_name, rows);
      outcome.files_written.push_back(path);
      for (const SweepRow& row : rows)
        if (!row.converged || !row.error.empty()) outcome.exit_status = 3;
    }
  } else if (config.scenario == "asymptote") {
    const double k_P = ev_to_kP(config.slab_plasma_eV);
    const double d_s = config.sweep.kP_ds / k_P;
    const AsymptoteValue nr = freestanding_nonretarded(d_s, k_P);
    const AsymptoteValue thick = thick_slab_asymptote(d_s, k_P);
    report << "kP_ds = " << format_value(config.sweep.kP_ds) << "\n"
           << "F_C = " << format_value(casimir_ideal(d_s)) << " N/m^2\n"
           << "freestanding_nonretarded = " << format_value(nr.value)
           << " N/m^2" << (nr.in_regime ? "" : "  (outside kP_ds <= 0.2)")
           << "\n"
           << "thick_slab_asymptote = " << format_value(thick.value)
           << " N/m^2" << (thick.in_regime ? "" : "  (outside kP_ds >= 5)")
           << "\n";
  } else if (config.scenario == "verify") {
    const oracle::VerifyReport rep = oracle::run_verification(
        config.verify_seed, config.verify_cases, config.verify_points,
        config.verify_nodes);
    report << "quadrature cross-check: max relative deviation = "
           << format_value(rep.max_quadrature_rel_dev) << " over "
           << rep.quadrature_cases << " configurations (limit 1e-3)\n"
           << "coefficient cross-check: max absolute deviation = "
           << format_value(rep.max_coefficient_abs_dev) << " over "
           << rep.coefficient_points << " spectral points (limit 1e-10)\n"
           << (rep.pass ? "PASS" : "FAIL") << "\n";
    if (!rep.pass) outcome.exit_status = 3;
  }

  outcome.report = report.str();
  return outcome;
}

}  // namespace casimir
