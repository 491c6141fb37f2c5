#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "sqent/sweep.hpp"

namespace sqent {

/// Settings read from a plain-text config file:
///
///   [atom_pair]
///   r12_over_lambda = 0.05
///   mu_hat_dot_r_hat = 0
///   delta_over_gamma = 0
///   gamma12 = 1            # optional override of the geometric value
///   omega12 = 0            # optional override
///
///   [bath]
///   n_mean = 0.1
///   m_abs = max            # or a number
///   phi_s = 0
///   carrier_detuning_over_gamma = 0
///
///   [sweep]
///   variant = identical
///   engine = analytic
///   axis = n_mean:0.01:0.5:50
///   axis2 = r12_over_lambda:0.01:1.2:60
///   columns = n_mean,concurrence
///   jobs = 4
///
/// Keys absent from the file leave the corresponding defaults untouched.
struct RunConfig {
  PointSpec point;
  std::vector<Axis> axes;
  std::vector<std::string> columns;
  std::optional<int> jobs;
};

/// Throws UsageError on unknown sections or keys and on malformed values.
RunConfig parse_config(std::istream& in, RunConfig defaults = {});
/// Throws std::ios_base::failure if the file cannot be opened.
RunConfig load_config(const std::string& path, RunConfig defaults = {});

/// "a,b,c" -> {"a", "b", "c"}, whitespace trimmed, empty items dropped.
std::vector<std::string> split_list(const std::string& text);

}  // namespace sqent
