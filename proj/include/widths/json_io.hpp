#ifndef WIDTHS_JSON_IO_HPP
#define WIDTHS_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "widths/billiards.hpp"
#include "widths/certify.hpp"
#include "widths/crofton.hpp"
#include "widths/network.hpp"
#include "widths/sweepouts.hpp"

namespace widths {

using json = nlohmann::json;

json network_to_json(const GeodesicNetwork& net);
GeodesicNetwork network_from_json(const json& j);  // throws FileFormatError

json orbit_to_json(const BilliardOrbit& orbit, const Domain& dom);
json certificate_to_json(const WidthCertificate& cert);
json sup_result_to_json(int p, const struct SupResult& result);

struct NetworkReport {
  double mass = 0.0;
  double mass_via_forces = 0.0;
  double interior_residual = 0.0;
  double free_boundary_residual = 0.0;
  bool integral = true;
};

NetworkReport analyze_network(const GeodesicNetwork& net, const Domain& dom);
json network_report_to_json(const NetworkReport& report);

/// Writes content to path atomically (temp file + rename).
void atomic_write_text(const std::string& path, const std::string& content);

std::string read_text_file(const std::string& path);  // throws FileFormatError

}  // namespace widths

#endif
