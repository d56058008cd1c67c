#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace deadcore {

// Output directory could not be created or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    [[nodiscard]] std::string to_csv() const;
};

struct Report {
    std::string verb;
    nlohmann::json results = nlohmann::json::object();
    std::map<std::string, Table> tables;     // written as <name>.csv
    std::map<std::string, std::string> raw;  // pre-rendered CSV files, written as <name>.csv
    std::vector<std::string> summary;
    std::vector<std::string> warnings;

    [[nodiscard]] nlohmann::json to_json() const;
};

// %.12g text of a double; "null" for non-finite values.
std::string format_number(double x);

// Deterministic pretty-printer: sorted keys, two-space indent, 12 significant digits.
std::string dump_json(const nlohmann::json& j);

// Writes report.json, every table, and summary.txt into dir.
void emit_report(const Report& report, const std::filesystem::path& dir);

}  // namespace deadcore
