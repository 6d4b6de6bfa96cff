#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hurwitz::cli {

enum ExitCode { kAffirmative = 0, kNegative = 1, kUsageError = 2, kInternalError = 3 };

struct CommandResult {
    int exit_code = kAffirmative;
    nlohmann::json payload;
    std::string human_text;
};

struct CheckOptions {
    std::string poly;
    bool quasi = false;
    bool descending = false;
    double eps = 1e-9;
};

struct HadamardOptions {
    std::string first;
    std::string second;
    bool quasi = false;
    bool descending = false;
};

struct IdealizerOptions {
    std::string poly;
    std::string family = "Y";
    std::optional<int> n;
    bool descending = false;
};

struct VerifyOptions {
    std::string suite;
    long samples = 1000;
    std::uint64_t seed = 1;
};

struct SearchOptions {
    std::string degrees;  // "6" or "3..5"
    long samples = 1000;
    std::uint64_t seed = 1;
    std::string out;      // findings JSON-lines; manifest goes to <out>.manifest.json
};

CommandResult cmd_check(const CheckOptions& o);
CommandResult cmd_hadamard(const HadamardOptions& o);
CommandResult cmd_idealizer(const IdealizerOptions& o);
CommandResult cmd_verify(const VerifyOptions& o);
CommandResult cmd_search(const SearchOptions& o);
CommandResult cmd_examples();

/// HURWITZ_SEED when set and parseable, else `fallback`.
std::uint64_t default_seed(std::uint64_t fallback = 1);

}  // namespace hurwitz::cli
