#include "sqent/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <boost/algorithm/string/trim.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "sqent/error.hpp"

namespace sqent {

namespace {

namespace pt = boost::property_tree;

std::string strip_comment(const std::string& value) {
  std::string out = value.substr(0, value.find('#'));
  boost::algorithm::trim(out);
  return out;
}

double to_double(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("config: bad number for '" + key + "': '" + text + "'");
  return value;
}

using Setter = std::function<void(RunConfig&, const std::string&)>;

const std::map<std::string, std::map<std::string, Setter>>& schema() {
  static const std::map<std::string, std::map<std::string, Setter>> table = {
      {"atom_pair",
       {
           {"gamma", [](RunConfig& c, const std::string& v) { c.point.cfg.gamma = to_double("gamma", v); }},
           {"r12_over_lambda",
            [](RunConfig& c, const std::string& v) { c.point.cfg.r12_over_lambda = to_double("r12_over_lambda", v); }},
           {"mu_hat_dot_r_hat",
            [](RunConfig& c, const std::string& v) {
              c.point.cfg.mu_hat_dot_r_hat = to_double("mu_hat_dot_r_hat", v);
            }},
           {"delta_over_gamma",
            [](RunConfig& c, const std::string& v) {
              c.point.cfg.delta_over_gamma = to_double("delta_over_gamma", v);
            }},
           {"gamma12", [](RunConfig& c, const std::string& v) { c.point.gamma12_override = to_double("gamma12", v); }},
           {"omega12", [](RunConfig& c, const std::string& v) { c.point.omega12_override = to_double("omega12", v); }},
       }},
      {"bath",
       {
           {"n_mean", [](RunConfig& c, const std::string& v) { c.point.bath.n_mean = to_double("n_mean", v); }},
           {"m_abs",
            [](RunConfig& c, const std::string& v) {
              if (v == "max") {
                c.point.m_is_max = true;
              } else {
                c.point.m_is_max = false;
                c.point.bath.m_abs = to_double("m_abs", v);
              }
            }},
           {"phi_s", [](RunConfig& c, const std::string& v) { c.point.bath.phi_s = to_double("phi_s", v); }},
           {"carrier_detuning_over_gamma",
            [](RunConfig& c, const std::string& v) {
              c.point.bath.carrier_detuning_over_gamma = to_double("carrier_detuning_over_gamma", v);
            }},
       }},
      {"sweep",
       {
           {"variant", [](RunConfig& c, const std::string& v) { c.point.variant = parse_variant(v); }},
           {"engine", [](RunConfig& c, const std::string& v) { c.point.engine = parse_engine(v); }},
           // axis and axis2 are collected by parse_config so their order is fixed.
           {"axis", [](RunConfig&, const std::string&) {}},
           {"axis2", [](RunConfig&, const std::string&) {}},
           {"columns", [](RunConfig& c, const std::string& v) { c.columns = split_list(v); }},
           {"jobs",
            [](RunConfig& c, const std::string& v) {
              const double jobs = to_double("jobs", v);
              if (jobs < 1 || jobs != static_cast<int>(jobs)) throw UsageError("config: jobs must be a positive integer");
              c.jobs = static_cast<int>(jobs);
            }},
       }},
  };
  return table;
}

}  // namespace

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string item = text.substr(start, comma - start);
    boost::algorithm::trim(item);
    if (!item.empty()) out.push_back(item);
    start = comma + 1;
  }
  return out;
}

RunConfig parse_config(std::istream& in, RunConfig defaults) {
  // '#' starts a comment anywhere on a line; the INI reader only knows ';'.
  std::stringstream cleaned;
  for (std::string line; std::getline(in, line);) cleaned << strip_comment(line) << '\n';
  pt::ptree tree;
  try {
    pt::read_ini(cleaned, tree);
  } catch (const pt::ini_parser_error& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  RunConfig config = std::move(defaults);
  std::optional<std::string> axis;
  std::optional<std::string> axis2;
  for (const auto& [section, keys] : tree) {
    const auto found = schema().find(section);
    if (found == schema().end() || keys.data() != "") {
      throw UsageError("config: unknown section '" + section + "'");
    }
    for (const auto& [key, node] : keys) {
      const auto setter = found->second.find(key);
      if (setter == found->second.end()) throw UsageError("config: unknown key '" + section + "." + key + "'");
      const std::string value = node.data();
      if (section == "sweep" && key == "axis") axis = value;
      else if (section == "sweep" && key == "axis2") axis2 = value;
      else setter->second(config, value);
    }
  }
  if (axis || axis2) config.axes.clear();
  if (axis) config.axes.push_back(Axis::parse(*axis));
  if (axis2) config.axes.push_back(Axis::parse(*axis2));
  return config;
}

RunConfig load_config(const std::string& path, RunConfig defaults) {
  std::ifstream file(path);
  if (!file) throw std::ios_base::failure("cannot open config file '" + path + "'");
  return parse_config(file, std::move(defaults));
}

}  // namespace sqent
