#ifndef SYMREES_JOBFILE_HPP
#define SYMREES_JOBFILE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symrees/ideal.hpp"

#include "json.hpp"

namespace symrees {

enum class OutputFormat { text, json };

struct ResourceCaps {
    int gb_degree_cap = 60;
    int local_n_cap = 128;
    double time_budget_sec = 0; // 0: unlimited
};

/// A parsed batch job: one ring header, named ideals, and exactly one command.
struct JobSpec {
    RingPtr ring; // absent for family / verify-paper jobs
    std::vector<std::pair<std::string, Ideal>> ideals;
    std::string command;
    std::vector<std::string> args;              // positional arguments
    std::map<std::string, std::string> flags;   // --name [value]
    OutputFormat format = OutputFormat::text;
    uint64_t seed = 0;
    ResourceCaps caps;

    const Ideal& named_ideal(const std::string& name) const;
    bool flag(const std::string& name) const { return flags.count(name) != 0; }
    std::string flag_value(const std::string& name, const std::string& fallback = "") const;
};

/// Parses the line-oriented jobfile grammar (`;`-terminated statements).
/// Diagnostics carry line/column.
JobSpec parse_jobfile(const std::string& text);

struct RunResult {
    int exit_code = 0; // 0 ok, 1 error, 2 false/unequal verdict, 3 resource cap
    std::string text;
    nlohmann::ordered_json json;
};

/// Executes a job; never throws (errors are folded into the result).
RunResult run_job(JobSpec job);

/// Commands that need no ring header can also come straight from argv; this
/// assembles the equivalent JobSpec.
JobSpec job_from_cli(const std::string& command, const std::vector<std::string>& args,
                     const std::map<std::string, std::string>& flags);

} // namespace symrees

#endif
