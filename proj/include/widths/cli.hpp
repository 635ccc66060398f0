#ifndef WIDTHS_CLI_HPP
#define WIDTHS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace widths {

/// Shared run configuration; flag values override --config file values,
/// which override these defaults. The seed is always defined so that every
/// stochastic command is reproducible and outputs are byte-identical for
/// identical (command, config, seed).
struct RunConfig {
  std::uint64_t seed = 1;
  double quad_tol = 1e-9;
  int grid_n_theta = 256;
  int grid_n_rho = 512;
  int sweepout_budget = 10000;
  int scan_classes = 6;
  int k_max = 8;
  std::string out;
  std::string svg;
};

// exit codes (sysexits-style where applicable)
inline constexpr int kExitOk = 0;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitFileFormat = 65;
inline constexpr int kExitNumeric = 70;

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace widths

#endif
