#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "symrees/errors.hpp"
#include "symrees/jobfile.hpp"

namespace {

const char* kUsage =
    "usage:\n"
    "  symrees run <jobfile> [flags]     run a batch jobfile\n"
    "  symrees <command> [args] [flags]  run a ring-free command directly\n"
    "\n"
    "commands (jobfile): gb hilbert length local-length dim sympow member\n"
    "                    radmember intersect saturate spread reduction criterion\n"
    "commands (direct):  family verify-paper\n"
    "\n"
    "flags: --format text|json  --seed N  --gb-degree-cap N  --local-N-cap N\n"
    "       --time-budget-sec S  --skip-slow  (see README for the full list)\n";

bool is_boolean_cli_flag(const std::string& name) {
    return name == "skip-slow" || name == "vs-ordinary" || name == "cross-check" ||
           name == "expensive-checks";
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> raw(argv + 1, argv + argc);
    if (raw.empty() || raw[0] == "--help" || raw[0] == "-h") {
        std::cout << kUsage;
        return raw.empty() ? 1 : 0;
    }

    std::string command = raw[0];
    std::vector<std::string> args;
    std::map<std::string, std::string> flags;
    for (size_t i = 1; i < raw.size(); ++i) {
        if (raw[i].rfind("--", 0) == 0) {
            std::string name = raw[i].substr(2);
            std::string value;
            auto eq = name.find('=');
            if (eq != std::string::npos) {
                value = name.substr(eq + 1);
                name = name.substr(0, eq);
            } else if (!is_boolean_cli_flag(name) && i + 1 < raw.size() &&
                       raw[i + 1].rfind("--", 0) != 0) {
                value = raw[++i];
            }
            flags[name] = value;
        } else {
            args.push_back(raw[i]);
        }
    }

    try {
        symrees::JobSpec job;
        if (command == "run") {
            if (args.empty()) {
                std::cerr << "run needs a jobfile path\n" << kUsage;
                return 1;
            }
            std::string text;
            if (args[0] == "-") {
                std::ostringstream ss;
                ss << std::cin.rdbuf();
                text = ss.str();
            } else {
                std::ifstream in(args[0]);
                if (!in) {
                    std::cerr << "cannot open jobfile: " << args[0] << "\n";
                    return 1;
                }
                std::ostringstream ss;
                ss << in.rdbuf();
                text = ss.str();
            }
            job = symrees::parse_jobfile(text);
            for (const auto& [k, v] : flags) job.flags[k] = v; // CLI overrides
            if (flags.count("seed")) job.seed = std::stoull(flags.at("seed"));
            if (flags.count("format"))
                job.format = flags.at("format") == "json" ? symrees::OutputFormat::json
                                                          : symrees::OutputFormat::text;
            if (flags.count("gb-degree-cap"))
                job.caps.gb_degree_cap = std::stoi(flags.at("gb-degree-cap"));
            if (flags.count("local-N-cap"))
                job.caps.local_n_cap = std::stoi(flags.at("local-N-cap"));
            if (flags.count("time-budget-sec"))
                job.caps.time_budget_sec = std::stod(flags.at("time-budget-sec"));
        } else {
            job = symrees::job_from_cli(command, args, flags);
        }
        symrees::RunResult res = symrees::run_job(std::move(job));
        std::cout << res.text;
        return res.exit_code;
    } catch (const symrees::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
