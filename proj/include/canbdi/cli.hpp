#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace canbdi {

enum ExitCode : int { kExitOk = 0, kExitUser = 1, kExitIo = 2, kExitBudget = 3, kExitFaithfulness = 4 };

struct RunManifest {
    std::string input;                       // agent file (or golden trace)
    std::string command;                     // parse | build | check | faithfulness | golden | catalog
    std::map<std::string, std::string> flags; // mode, properties, depth, drop_rule, count, ...
    std::map<std::string, std::string> outputs; // dot, dtmc
    std::uint64_t seed = 0;
    std::size_t budget = 0;
    int jobs = 1;

    std::string json() const;
    static RunManifest from_json(const std::string& text);
};

// Executes one manifest. JSON goes to out, human-readable tables to err.
int run_manifest(const RunManifest& m, std::ostream& out, std::ostream& err);

// Parses command-line arguments into a manifest and runs it.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace canbdi
