#pragma once

#include <string>
#include <vector>

#include "visclimit/config.hpp"

namespace visclimit::cli {

// Exit codes: 0 success, 2 configuration / wave-class error, 3 runtime
// abort.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitAbort = 3;

int cmd_riemann(const RunSpec& spec, const std::string& out_dir);
int cmd_profile(const RunSpec& spec, const std::string& out_dir);
int cmd_solve(const RunSpec& spec, const std::string& out_dir);
int cmd_limit(const RunSpec& spec, const std::string& out_dir);

// Full command-line front end (subcommand dispatch + error mapping).
int run(const std::vector<std::string>& args);
int run(int argc, char** argv);

}  // namespace visclimit::cli
