#include "oco/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oco {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string full(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string val = trim(stripped.substr(eq + 1));
        if (key == "algorithm") cfg.algorithm = val;
        else if (key == "eta") cfg.eta = val;
        else if (key == "environment") cfg.env.id = val;
        else if (key == "horizon") cfg.env.horizon = std::stoi(val);
        else if (key == "dimension") cfg.env.dimension = std::stoi(val);
        else if (key == "segments") cfg.env.segments = std::stoi(val);
        else if (key == "seed") cfg.env.seed = std::stoull(val);
        else if (key == "comparators") cfg.comparators = val;
        else if (key == "trace") cfg.trace_path = val;
        else if (key == "report") cfg.report_path = val;
        else if (key == "thetas") {
            cfg.env.thetas.clear();
            std::istringstream vs(val);
            std::string item;
            while (std::getline(vs, item, ',')) cfg.env.thetas.push_back(std::stod(trim(item)));
        } else {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (cfg.algorithm != "ogd" && cfg.algorithm != "ader" && cfg.algorithm != "aod" &&
        cfg.algorithm != "aoa")
        throw std::invalid_argument("config: unknown algorithm '" + cfg.algorithm + "'");
    if (cfg.comparators != "minimizers" && cfg.comparators != "piecewise")
        throw std::invalid_argument("config: unknown comparator policy '" + cfg.comparators + "'");
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const ExperimentConfig& cfg) {
    std::ostringstream out;
    out << "algorithm = " << cfg.algorithm << "\n";
    out << "eta = " << cfg.eta << "\n";
    out << "environment = " << cfg.env.id << "\n";
    out << "horizon = " << cfg.env.horizon << "\n";
    out << "dimension = " << cfg.env.dimension << "\n";
    out << "segments = " << cfg.env.segments << "\n";
    if (!cfg.env.thetas.empty()) {
        out << "thetas = ";
        for (std::size_t i = 0; i < cfg.env.thetas.size(); ++i) {
            if (i) out << ",";
            out << full(cfg.env.thetas[i]);
        }
        out << "\n";
    }
    out << "seed = " << cfg.env.seed << "\n";
    out << "comparators = " << cfg.comparators << "\n";
    out << "trace = " << cfg.trace_path << "\n";
    out << "report = " << cfg.report_path << "\n";
    return out.str();
}

}  // namespace oco
