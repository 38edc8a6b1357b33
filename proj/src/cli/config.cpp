#include "config.hpp"

#include <fstream>
#include <stdexcept>

namespace torusquake::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

int parse_orient(const std::string& text) {
    if (text == "+" || text == "+1" || text == "1") return 1;
    if (text == "-" || text == "-1") return -1;
    throw std::invalid_argument("orientation must be + or -");
}

void apply_config_file(Settings& s, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot read config file " + path);
    }
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key=value");
        }
        const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key == "samples") s.samples = std::stoi(value);
        else if (key == "range_min") s.range_min = std::stod(value);
        else if (key == "range_max") s.range_max = std::stod(value);
        else if (key == "param") s.param = value;
        else if (key == "orient") s.orient = parse_orient(value);
        else if (key == "tol_level") s.tol_level = std::stod(value);
        else if (key == "s_max") s.s_max = std::stod(value);
        else if (key == "steps") s.steps = std::stoi(value);
        else throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": unknown key " + key);
    }
}

}  // namespace torusquake::cli
