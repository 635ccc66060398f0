#include "widths/json_io.hpp"

#include <filesystem>
#include <fstream>

namespace widths {

json network_to_json(const GeodesicNetwork& net) {
  json j;
  j["junctions"] = json::array();
  for (const auto& junction : net.junctions) {
    json e;
    e["x"] = junction.position.x();
    e["y"] = junction.position.y();
    e["location"] =
        junction.location == JunctionLocation::Boundary ? "boundary"
                                                        : "interior";
    if (junction.location == JunctionLocation::Boundary) {
      e["t"] = junction.boundary_t;
    }
    j["junctions"].push_back(e);
  }
  j["segments"] = json::array();
  for (const auto& s : net.segments) {
    j["segments"].push_back({{"i", s.i}, {"j", s.j}, {"theta", s.theta}});
  }
  return j;
}

GeodesicNetwork network_from_json(const json& j) {
  GeodesicNetwork net;
  try {
    for (const auto& e : j.at("junctions")) {
      Junction junction;
      junction.position = Vec2(e.at("x").get<double>(), e.at("y").get<double>());
      const std::string loc = e.at("location").get<std::string>();
      if (loc == "boundary") {
        junction.location = JunctionLocation::Boundary;
        junction.boundary_t = e.value("t", 0.0);
      } else if (loc == "interior") {
        junction.location = JunctionLocation::Interior;
      } else {
        throw FileFormatError("network: unknown junction location '" + loc +
                              "'");
      }
      net.junctions.push_back(junction);
    }
    for (const auto& e : j.at("segments")) {
      net.segments.push_back({e.at("i").get<int>(), e.at("j").get<int>(),
                              e.at("theta").get<double>()});
    }
  } catch (const json::exception& err) {
    throw FileFormatError(std::string("network: malformed JSON: ") +
                          err.what());
  }
  try {
    net.validate();
  } catch (const InvalidParameter& err) {
    throw FileFormatError(std::string("network: invalid: ") + err.what());
  }
  return net;
}

json orbit_to_json(const BilliardOrbit& orbit, const Domain& dom) {
  json j;
  j["domain"] = {{"a", dom.a()}, {"b", dom.b()}};
  j["closed"] = orbit.closed;
  j["period"] = orbit.period;
  j["perimeter"] = orbit.perimeter();
  j["points"] = json::array();
  for (const auto& c : orbit.chords) {
    j["points"].push_back({{"t", c.from.t}, {"x", c.from.p.x()},
                           {"y", c.from.p.y()}});
  }
  if (!orbit.chords.empty()) {
    const auto& last = orbit.chords.back().to;
    j["points"].push_back({{"t", last.t}, {"x", last.p.x()}, {"y", last.p.y()}});
  }
  if (!orbit.chords.empty()) {
    j["caustic_lambda"] = caustic_of(dom, orbit.chords.front()).lambda;
  }
  return j;
}

json certificate_to_json(const WidthCertificate& cert) {
  json j;
  j["p"] = cert.p;
  j["domain"] = {{"a", cert.domain_a}, {"b", cert.domain_b}};
  j["lower"] = {{"value", cert.lower.value},
                {"strict", cert.lower.strict},
                {"evidence", cert.lower.method},
                {"components", cert.lower.components}};
  j["upper"] = {{"value", cert.upper.value},
                {"family_bound", cert.upper.family_bound},
                {"stretch", cert.upper.stretch},
                {"witness", std::vector<double>(
                                cert.upper.witness.coeffs.data(),
                                cert.upper.witness.coeffs.data() + 5)}};
  j["spectrum"] = json::array();
  for (const auto& e : cert.spectrum) {
    j["spectrum"].push_back({{"mass", e.mass},
                             {"symbol", to_string(e.symbol)},
                             {"description", e.description}});
  }
  j["conclusion"] = json::array();
  for (const auto& e : cert.conclusion) {
    j["conclusion"].push_back({{"mass", e.mass},
                               {"symbol", to_string(e.symbol)},
                               {"description", e.description}});
  }
  j["rejected"] = json::array();
  for (const auto& r : cert.rejected) {
    j["rejected"].push_back({{"description", r.description},
                             {"mass", r.mass},
                             {"reason", r.reason}});
  }
  return j;
}

json sup_result_to_json(int p, const SupResult& result) {
  json j;
  j["p"] = p;
  j["sup"] = result.sup;
  j["witness"] = std::vector<double>(result.witness.coeffs.data(),
                                     result.witness.coeffs.data() + 5);
  j["evaluations"] = result.evaluations;
  return j;
}

NetworkReport analyze_network(const GeodesicNetwork& net, const Domain& dom) {
  NetworkReport report;
  report.mass = mass(net);
  report.interior_residual = interior_residual(net);
  report.free_boundary_residual = free_boundary_residual(net, dom);
  report.integral = net.is_integral();
  try {
    report.mass_via_forces = mass_via_forces(net, Vec2::Zero());
  } catch (const RadialConditionViolated&) {
    report.mass_via_forces = std::numeric_limits<double>::quiet_NaN();
  }
  return report;
}

json network_report_to_json(const NetworkReport& report) {
  json j;
  j["mass"] = report.mass;
  if (std::isfinite(report.mass_via_forces)) {
    j["mass_via_forces"] = report.mass_via_forces;
  } else {
    j["mass_via_forces"] = nullptr;
  }
  j["interior_residual"] = report.interior_residual;
  j["free_boundary_residual"] = report.free_boundary_residual;
  j["integral"] = report.integral;
  return j;
}

void atomic_write_text(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) {
    fs::create_directories(target.parent_path());
  }
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("atomic_write_text: cannot open " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error("atomic_write_text: write failed for " + path);
  }
  fs::rename(tmp, target);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileFormatError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace widths
