#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace torusquake::cli {

/// 17 significant digits, enough for doubles to round-trip.
std::string format_double(double v);
std::string join_values(const std::vector<double>& values);

class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header,
              const std::vector<std::string>& comments = {});
    void row(const std::vector<double>& values);

private:
    std::ofstream out_;
    std::size_t width_;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::size_t column(const std::string& name) const;
};

/// Reads a file written by CsvWriter; lines starting with '#' are skipped.
CsvTable read_csv(const std::string& path);

}  // namespace torusquake::cli
