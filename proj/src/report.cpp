#include "deadcore/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace deadcore {

std::string format_number(double x) {
    if (!std::isfinite(x)) return "null";
    if (x == 0.0) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string Table::to_csv() const {
    std::string out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) out += ',';
        out += columns[c];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_number(row[c]);
        }
        out += '\n';
    }
    return out;
}

namespace {

void dump(const nlohmann::json& j, int depth, std::string& out) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close(static_cast<std::size_t>(2 * depth), ' ');
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) { out += "{}"; return; }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad + nlohmann::json(it.key()).dump() + ": ";
                dump(it.value(), depth + 1, out);
            }
            out += "\n" + close + "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) { out += "[]"; return; }
            out += "[\n";
            for (std::size_t k = 0; k < j.size(); ++k) {
                if (k) out += ",\n";
                out += pad;
                dump(j[k], depth + 1, out);
            }
            out += "\n" + close + "]";
            return;
        }
        case nlohmann::json::value_t::number_float:
            out += format_number(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write " + path.string());
    f << text;
    if (!f.flush()) throw IoError("cannot write " + path.string());
}

}  // namespace

std::string dump_json(const nlohmann::json& j) {
    std::string out;
    dump(j, 0, out);
    out += '\n';
    return out;
}

nlohmann::json Report::to_json() const {
    nlohmann::json names = nlohmann::json::array();
    for (const auto& [name, table] : tables) names.push_back(name + ".csv");
    for (const auto& [name, text] : raw) names.push_back(name + ".csv");
    return nlohmann::json{{"verb", verb},
                          {"results", results},
                          {"tables", names},
                          {"warnings", warnings}};
}

void emit_report(const Report& report, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw IoError("cannot create output directory " + dir.string());
    }
    write_file(dir / "report.json", dump_json(report.to_json()));
    for (const auto& [name, table] : report.tables) write_file(dir / (name + ".csv"), table.to_csv());
    for (const auto& [name, text] : report.raw) write_file(dir / (name + ".csv"), text);
    std::string summary;
    for (const auto& line : report.summary) summary += line + '\n';
    for (const auto& w : report.warnings) summary += "warning: " + w + '\n';
    write_file(dir / "summary.txt", summary);
}

}  // namespace deadcore
