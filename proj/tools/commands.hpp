#pragma once
// Subcommands of the prefasp tool. Each command builds a result document; rendering to text
// or JSON happens in output.cpp.

#include <prefasp/preferences.hpp>

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace prefasp::cli {

using Document = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kInputError = 1, kLimitError = 2, kDisagreement = 3 };

struct RunConfig {
    std::string command;
    std::string input = "-"; ///< path, directory (validate only) or "-" for stdin
    std::string semantics;
    std::string format = "text";
    std::size_t limit_rules = kDefaultPvdLimit;
    double      timeout     = 0; ///< seconds, 0 = none
    bool        explain     = false;
    bool        raw         = false;
    bool        drop_redundant = false;
    std::optional<std::size_t> random;
    std::uint64_t              seed = 1;
    std::vector<std::string>   assets; ///< NAME=PATH overrides
};

struct Outcome {
    Document doc;
    int      exit_code = kOk;
};

/// Runs one command. Library exceptions propagate to the caller.
[[nodiscard]] Outcome run(const RunConfig& cfg);

/// Runs, renders and maps exceptions to exit codes. Diagnostics go to `err`.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace prefasp::cli
