#pragma once

#include <iosfwd>
#include <vector>

#include "nlcl/problem.hpp"

namespace nlcl {

/**
 * Parsed key = value run configuration. Unknown keys are errors; all keys
 * have defaults except `initial` and `t_end` (and `delta` for nonlocal
 * schemes), which `validate` insists on.
 */
struct Config {
    Problem problem;
    int n = 64;
    std::vector<double> snapshot_times;
    std::string output_prefix = "out";
    std::vector<int> n_list;     // convergence sweep resolutions
    int n_ref = 1024;            // reference resolution for convergence runs
    bool reference_local = false; // reference uses the local scheme instead of self
    std::string initial_selector;

    void validate() const; // throws ConfigError on semantic problems
};

/** Parse config text. Lines are `key = value`; `#` starts a comment. */
Config parse_config(const std::string& text);

/** Convenience: read and parse a config file. */
Config load_config(const std::string& path);

} // namespace nlcl
