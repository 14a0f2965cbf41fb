#pragma once

#include "ucent/graph.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace ucent::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kDisconnected = 3,
  kUsage = 4,
};

/// Tolerances for the `oracle` subcommand.
inline constexpr double kDeviationTol = 1e-6;  // times c, Euclidean
inline constexpr double kGramianTol = 1e-7;    // relative Frobenius
inline constexpr double kEnergyTol = 1e-9;     // relative

/// Closed form against brute force for one controlled node.
struct OracleReport {
  std::string node;
  double horizon = 0.0;
  double threshold = 0.0;
  double closed_form_norm = 0.0;
  double simulated_norm = 0.0;
  double deviation_error = 0.0;  // ||closed - simulated|| / c
  double gramian_error = 0.0;    // ||W_spec - W_quad||_F / ||W_spec||_F
  double energy = 0.0;           // from the quadrature Gramian
  double energy_expected = 0.0;  // c^2 / tf
  double energy_error = 0.0;     // relative

  bool deviation_ok() const { return deviation_error <= kDeviationTol; }
  bool gramian_ok() const { return gramian_error <= kGramianTol; }
  bool energy_ok() const { return energy_error <= kEnergyTol; }
  bool ok() const { return deviation_ok() && gramian_ok() && energy_ok(); }
};

OracleReport oracle_check(const Graph& g, Index node, double horizon, double threshold, int steps, int panels);
void print(std::ostream& os, const OracleReport& r);

/// Runs the command line `args` (without the program name). Returns the
/// process exit code; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ucent::cli
