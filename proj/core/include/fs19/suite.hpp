#pragma once
// Check-suite orchestration: loads the data files (field certificates,
// root-discriminant table, group-law catalog), executes the selected
// checks, and assembles a deterministic VerificationReport. Individual
// check failures become report entries; only missing or unparseable data
// files abort with an error naming the file.

#include <string>

#include "fs19/check.hpp"

namespace fs19 {

inline constexpr const char* kToolVersion = "0.1.0";

struct SuiteOptions {
    std::string data_dir = "data";
    long hopf_n_max = 8;    // group-law families are checked for n = 1..hopf_n_max
    int search_radius = 12;  // principality search box radius
};

// Valid selectors; the empty selector is a valid no-op run.
bool is_known_selector(const std::string& selector);

// selector in {all, bounds, cft, hopf, curve, groups, ext} or "" (empty run).
// Throws std::invalid_argument on unknown selectors and std::runtime_error
// (message contains the path) on missing/corrupt data files.
VerificationReport run_suite(const std::string& selector, const SuiteOptions& opt = {});

}  // namespace fs19
