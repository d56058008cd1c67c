#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace deadcore::cli {

enum ExitCode : int {
    kOk = 0,
    kRuntimeError = 1,
    kInadmissible = 2,
    kBadConfig = 64,
    kCannotWrite = 73,
};

struct Command {
    std::string verb;
    std::string spec_path;
    std::string output_dir;
    std::vector<std::string> overrides;  // key=value
};

// Parses the file at spec_path and applies the overrides; throws std::runtime_error on failure.
nlohmann::json load_config(const Command& cmd);

int run(const Command& cmd, std::ostream& out, std::ostream& err);

// argv front end; help and usage errors are handled here.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace deadcore::cli
