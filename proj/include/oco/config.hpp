#ifndef OCO_CONFIG_HPP
#define OCO_CONFIG_HPP

#include <string>

#include "oco/environment.hpp"

namespace oco {

// Plain key = value experiment description; round-trips losslessly.
struct ExperimentConfig {
    std::string algorithm = "ogd";  // ogd | ader | aod | aoa
    std::string eta = "auto";       // ogd step size: "auto" or a number
    EnvironmentSpec env;
    std::string comparators = "minimizers";  // minimizers | piecewise
    std::string trace_path = "trace.csv";
    std::string report_path = "report.csv";
};

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);
std::string serialize_config(const ExperimentConfig& config);

}  // namespace oco

#endif
