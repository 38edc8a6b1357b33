#pragma once

#include <optional>
#include <string>

namespace torusquake::cli {

/// Defaults shared by the commands; a key=value file can override them, flags override both.
struct Settings {
    int samples = 400;
    double range_min = -2;
    double range_max = 2;
    std::string param = "r";
    std::optional<int> orient;
    double tol_level = 1e-7;
    double s_max = 60;
    int steps = 4;
};

void apply_config_file(Settings& s, const std::string& path);
int parse_orient(const std::string& text);

}  // namespace torusquake::cli
