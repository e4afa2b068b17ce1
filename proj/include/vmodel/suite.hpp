#pragma once

#include "vmodel/checks.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vmodel {

enum class Scale { smoke, desk };

// "smoke" or "desk"; anything else is nullopt.
std::optional<Scale> parse_scale(const std::string& name);
std::string to_string(Scale scale);

struct RunReport {
    std::string command;
    std::uint64_t seed = 0;
    Scale scale = Scale::smoke;
    checks::Config config;
    std::vector<checks::CheckResult> checks; // sorted by name

    std::size_t failures() const;
    bool passed() const { return failures() == 0; }

    // Both renderings are byte-deterministic: no timings, no addresses.
    std::string text() const;
    std::string json() const;
};

// Seed handed to one check: the run seed xor the FNV-1a hash of its name.
std::uint64_t check_seed(std::uint64_t seed, const std::string& name);

// Runs the whole battery. `only`, when nonempty, restricts the run to checks
// whose name starts with one of the given prefixes.
RunReport run_suite(Scale scale, std::uint64_t seed, const checks::Config& config, std::string command = {},
                    const std::vector<std::string>& only = {});

} // namespace vmodel
