#include "widths/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "widths/json_io.hpp"
#include "widths/svg.hpp"

namespace widths {

namespace {

Domain parse_domain(const std::vector<std::string>& args, std::size_t* used) {
  if (args.empty()) throw CLI::ValidationError("domain", "missing domain");
  if (args[0] == "disk") {
    *used = 1;
    return Domain::disk(1.0);
  }
  if (args[0] == "ellipse") {
    if (args.size() < 3) {
      throw CLI::ValidationError("domain", "ellipse needs two semi-axes");
    }
    *used = 3;
    try {
      return Domain::ellipse(std::stod(args[1]), std::stod(args[2]));
    } catch (const std::exception&) {
      throw CLI::ValidationError("domain", "bad ellipse parameters");
    }
  }
  throw CLI::ValidationError("domain", "expected 'disk' or 'ellipse a b'");
}

void apply_config_file(const std::string& path, RunConfig* cfg) {
  const json j = json::parse(read_text_file(path), nullptr, true, true);
  if (j.contains("seed")) cfg->seed = j["seed"].get<std::uint64_t>();
  if (j.contains("tolerances") && j["tolerances"].contains("quadrature")) {
    cfg->quad_tol = j["tolerances"]["quadrature"].get<double>();
  }
  if (j.contains("grid")) {
    cfg->grid_n_theta = j["grid"].value("n_theta", cfg->grid_n_theta);
    cfg->grid_n_rho = j["grid"].value("n_rho", cfg->grid_n_rho);
  }
  if (j.contains("budgets")) {
    cfg->sweepout_budget =
        j["budgets"].value("sweepout_samples", cfg->sweepout_budget);
    cfg->scan_classes = j["budgets"].value("scan_classes", cfg->scan_classes);
    cfg->k_max = j["budgets"].value("k_max", cfg->k_max);
  }
}

void parse_grid_flag(const std::string& text, RunConfig* cfg) {
  const auto x = text.find('x');
  if (x == std::string::npos) {
    throw CLI::ValidationError("--grid", "expected NTHETAxNRHO, e.g. 256x512");
  }
  try {
    cfg->grid_n_theta = std::stoi(text.substr(0, x));
    cfg->grid_n_rho = std::stoi(text.substr(x + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--grid", "bad grid sizes");
  }
}

void emit(const RunConfig& cfg, const std::string& default_name,
          const std::string& content) {
  const std::string path = cfg.out.empty() ? default_name : cfg.out;
  atomic_write_text(path, content);
}

SamplingConfig sampling_from(const RunConfig& cfg) {
  SamplingConfig s;
  s.budget = cfg.sweepout_budget;
  s.seed = cfg.seed;
  s.quad.abs_tol = cfg.quad_tol;
  return s;
}

std::vector<double> parse_radii(const std::string& text) {
  std::vector<double> radii;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) radii.push_back(std::stod(item));
  return radii;
}

int cmd_certify(const std::vector<std::string>& args, const RunConfig& cfg,
                std::ostream& out) {
  if (args.empty()) throw CLI::ValidationError("certify", "missing p");
  int p = 0;
  try {
    p = std::stoi(args[0]);
  } catch (const std::exception&) {
    throw CLI::ValidationError("certify", "p must be an integer");
  }
  if (p < 1 || p > 4) throw CLI::ValidationError("certify", "p must be in 1..4");
  std::size_t used = 0;
  const Domain dom =
      parse_domain(std::vector<std::string>(args.begin() + 1, args.end()),
                   &used);

  CertifyConfig ccfg;
  ccfg.sweepout = sampling_from(cfg);
  ccfg.k_max = cfg.k_max;
  const WidthCertificate cert = certify(p, dom, ccfg);

  std::ostringstream name;
  name << "certificate_p" << p << (dom.is_disk() ? "_disk" : "_ellipse")
       << ".json";
  emit(cfg, name.str(), certificate_to_json(cert).dump(2) + "\n");

  out << "omega_" << p << " certificate for "
      << (dom.is_disk() ? "disk" : "ellipse") << "\n";
  out << "  lower bound " << cert.lower.value
      << (cert.lower.strict ? " (strict)" : "") << " via " << cert.lower.method
      << "\n";
  out << "  upper bound " << cert.upper.value << "\n";
  out << "  conclusion:";
  for (const auto& e : cert.conclusion) {
    out << " " << e.mass << " (" << to_string(e.symbol) << ")";
  }
  out << "\n";
  return kExitOk;
}

int cmd_maxlen(const RunConfig& cfg, std::ostream& out) {
  const ParabolaMax result = maximize_parabola();
  out << std::setprecision(10);
  out << "a0 = " << result.a0 << "\n";
  out << "L0 = " << result.L0 << "\n";
  const std::string svg_path = cfg.svg.empty() ? "parabola_max.svg" : cfg.svg;
  atomic_write_text(svg_path, parabola_svg(result.a0));
  if (!cfg.out.empty()) {
    json j;
    j["a0"] = result.a0;
    j["L0"] = result.L0;
    atomic_write_text(cfg.out, j.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_billiard(const std::vector<std::string>& args, const RunConfig& cfg,
                 std::ostream& out) {
  std::size_t used = 0;
  const Domain dom = parse_domain(args, &used);
  if (args.size() < used + 2) {
    throw CLI::ValidationError("billiard", "need k and start_t");
  }
  int k = 0;
  double start_t = 0.0;
  try {
    k = std::stoi(args[used]);
    start_t = std::stod(args[used + 1]);
  } catch (const std::exception&) {
    throw CLI::ValidationError("billiard", "bad k or start_t");
  }
  if (k < 2) throw CLI::ValidationError("billiard", "k must be >= 2");

  const BilliardOrbit orb = find_closed_orbit(dom, k, start_t);
  emit(cfg, "orbit.json", orbit_to_json(orb, dom).dump(2) + "\n");
  if (!cfg.svg.empty()) atomic_write_text(cfg.svg, orbit_svg(orb, dom));
  out << std::setprecision(12) << "closed " << k << "-orbit, perimeter "
      << orb.perimeter() << "\n";
  return kExitOk;
}

ConicCoeffs parse_conic(const std::string& text) {
  std::stringstream ss(text);
  std::vector<double> c;
  double v;
  while (ss >> v) c.push_back(v);
  if (c.size() != 5) {
    throw CLI::ValidationError("conic", "expected 5 coefficients");
  }
  return ConicCoeffs(c[0], c[1], c[2], c[3], c[4]);
}

int cmd_crofton(const std::vector<std::string>& args, const RunConfig& cfg,
                std::ostream& out) {
  if (args.empty()) {
    throw CLI::ValidationError("crofton", "expected 'conic <coeffs>' or 'scan <p>'");
  }
  if (args[0] == "conic") {
    if (args.size() < 2) {
      throw CLI::ValidationError("crofton", "missing coefficient string");
    }
    const ConicCoeffs q = parse_conic(args[1]);
    QuadratureGrid grid;
    grid.n_theta = cfg.grid_n_theta;
    grid.n_rho = cfg.grid_n_rho;
    const CroftonResult est = crofton_length(
        conic_oracle(q), CroftonRegion::domain(Domain::disk(1.0)), grid);
    QuadratureConfig quad;
    quad.abs_tol = cfg.quad_tol;
    const double exact = disk_length(q, Domain::disk(1.0), quad);
    json j;
    j["estimate"] = est.length;
    j["error_estimate"] = est.error_estimate;
    j["arc_length"] = exact;
    if (!cfg.out.empty()) atomic_write_text(cfg.out, j.dump(2) + "\n");
    out << std::setprecision(10) << "crofton " << est.length << "  arc-length "
        << exact << "\n";
    return kExitOk;
  }
  if (args[0] == "scan") {
    if (args.size() < 2) throw CLI::ValidationError("crofton", "scan needs p");
    const int p = std::stoi(args[1]);
    std::vector<double> radii = {0.2, 0.1, 0.05};
    if (args.size() >= 3) radii = parse_radii(args[2]);
    ScanConfig scfg;
    scfg.n_classes = cfg.scan_classes;
    scfg.seed = cfg.seed;
    const ScanResult res = no_concentration_scan(p, radii, scfg);
    emit(cfg, "scan.csv", scan_to_csv(res));
    out << "scan rows: " << res.rows.size()
        << (res.all_within_bound ? ", all within bound" : ", VIOLATIONS")
        << "\n";
    return kExitOk;
  }
  throw CLI::ValidationError("crofton", "unknown subcommand '" + args[0] + "'");
}

int cmd_network(const std::vector<std::string>& args, const RunConfig& cfg,
                std::ostream& out) {
  if (args.size() < 2 || args[0] != "check") {
    throw CLI::ValidationError("network", "expected 'check <file>'");
  }
  const json j = [&] {
    try {
      return json::parse(read_text_file(args[1]));
    } catch (const json::exception& e) {
      throw FileFormatError(std::string("network file: ") + e.what());
    }
  }();
  const GeodesicNetwork net = network_from_json(j);
  std::size_t used = 0;
  const Domain dom =
      args.size() > 2
          ? parse_domain(std::vector<std::string>(args.begin() + 2, args.end()),
                         &used)
          : Domain::disk(1.0);
  const NetworkReport report = analyze_network(net, dom);
  if (!cfg.out.empty()) {
    atomic_write_text(cfg.out, network_report_to_json(report).dump(2) + "\n");
  }
  if (!cfg.svg.empty()) atomic_write_text(cfg.svg, network_svg(net, dom));
  out << std::setprecision(12) << "mass " << report.mass
      << "  interior residual " << report.interior_residual
      << "  boundary residual " << report.free_boundary_residual << "\n";
  return kExitOk;
}

int cmd_sweepout(const std::vector<std::string>& args, const RunConfig& cfg,
                 std::ostream& out) {
  if (args.empty()) throw CLI::ValidationError("sweepout", "missing p");
  const int p = std::stoi(args[0]);
  if (p < 1 || p > 4) {
    throw CLI::ValidationError("sweepout", "p must be in 1..4");
  }
  const SupResult result = sup_length(p, sampling_from(cfg));
  emit(cfg, "sweepout.json", sup_result_to_json(p, result).dump(2) + "\n");
  out << std::setprecision(10) << "sup_" << p << " = " << result.sup << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"certified first min-max widths of the unit disk and "
               "near-circular ellipses"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path, grid_text;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--seed", cfg.seed, "seed for stochastic commands");
  app.add_option("--tol", cfg.quad_tol, "quadrature tolerance");
  app.add_option("--grid", grid_text, "crofton grid, NTHETAxNRHO");
  app.add_option("--budget", cfg.sweepout_budget, "sweepout sampling budget");
  app.add_option("--kmax", cfg.k_max, "largest billiard polygon");
  app.add_option("--out", cfg.out, "output file path");
  app.add_option("--svg", cfg.svg, "SVG output path");

  std::vector<std::string> rest;
  CLI::App* sub_certify = app.add_subcommand("certify", "width certificate");
  CLI::App* sub_maxlen = app.add_subcommand("maxlen", "maximal parabola");
  CLI::App* sub_billiard = app.add_subcommand("billiard", "closed k-orbit");
  CLI::App* sub_crofton = app.add_subcommand("crofton", "length estimation");
  CLI::App* sub_network = app.add_subcommand("network", "network reports");
  CLI::App* sub_sweepout = app.add_subcommand("sweepout", "family supremum");
  for (CLI::App* sub :
       {sub_certify, sub_billiard, sub_crofton, sub_network, sub_sweepout}) {
    sub->add_option("args", rest, "positional arguments");
  }
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough(true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!config_path.empty()) {
      // flags win over the config file: re-apply any flag the user passed
      const RunConfig flag_values = cfg;
      apply_config_file(config_path, &cfg);
      if (app.count("--seed")) cfg.seed = flag_values.seed;
      if (app.count("--tol")) cfg.quad_tol = flag_values.quad_tol;
      if (app.count("--budget")) cfg.sweepout_budget = flag_values.sweepout_budget;
      if (app.count("--kmax")) cfg.k_max = flag_values.k_max;
    }
    if (!grid_text.empty()) parse_grid_flag(grid_text, &cfg);

    if (sub_certify->parsed()) return cmd_certify(rest, cfg, out);
    if (sub_maxlen->parsed()) return cmd_maxlen(cfg, out);
    if (sub_billiard->parsed()) return cmd_billiard(rest, cfg, out);
    if (sub_crofton->parsed()) return cmd_crofton(rest, cfg, out);
    if (sub_network->parsed()) return cmd_network(rest, cfg, out);
    if (sub_sweepout->parsed()) return cmd_sweepout(rest, cfg, out);
    err << "no command\n";
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const InconclusiveCertificate& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const FileFormatError& e) {
    err << "file format: " << e.what() << "\n";
    return kExitFileFormat;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}

}  // namespace widths
