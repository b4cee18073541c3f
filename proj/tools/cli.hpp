#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kforest::cli {

// Exit codes shared by every subcommand.
//  0  success / valid / property holds
//  1  invalid / property fails / counterexample found
//  2  usage or input error
//  3  solver budget exhausted
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kExhausted = 3;

// Runs one invocation. stdin_text backs any "-" input; output and
// diagnostics go to out and err.
int run(const std::vector<std::string>& args, const std::string& stdin_text,
        std::ostream& out, std::ostream& err);

}  // namespace kforest::cli
