#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace pleth::cli {

enum ExitCode { kPass = 0, kFail = 1, kBadInput = 2 };

struct RunConfig {
    std::string command;
    std::string suite;
    std::string input;  // series file, "-" for stdin
    std::string output;  // empty for stdout
    std::optional<int> n;
    int n_max = 4;
    std::optional<int> order;
    std::optional<int> vars;
    uint64_t seed = 1;
    std::optional<int> count;
    std::optional<int> points;
    int dims = 2;
    std::string format = "json";
    int workers = 1;
    bool counts = false;
    bool orbits = false;
    bool gauge = true;
};

int cmd_exp(const RunConfig& cfg, std::ostream& out);
int cmd_log(const RunConfig& cfg, std::ostream& out);
int cmd_trees(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);

// Thrown for parameters outside the documented bounds.
struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pleth::cli
