#pragma once
// Check results and deterministic report rendering (JSON and text).
// Reports carry no timestamps and render rationals exactly, so identical
// inputs produce byte-identical output.

#include <string>
#include <vector>

namespace fs19 {

enum class Provenance { Paper, Trivial, Derived, Assumed };
enum class CheckStatus { Pass, Fail, Inconclusive, Assumed };

std::string to_string(Provenance p);
std::string to_string(CheckStatus s);

struct CheckResult {
    std::string id;           // dotted, e.g. "cft.l4.residue_group"
    std::string description;  // one line, human-readable
    std::string computed;     // exact rendering of the recomputed value
    std::string expected;     // exact rendering of the frozen expectation
    Provenance provenance = Provenance::Derived;
    std::string citation;     // named argument step the expectation comes from
    CheckStatus status = CheckStatus::Fail;
};

struct VerificationReport {
    std::string tool_version;
    std::string selector;
    std::vector<std::pair<std::string, std::string>> data_digests;  // path, sha256
    std::vector<CheckResult> checks;  // sorted by id before rendering

    size_t count(CheckStatus s) const;
    // 0 = all pass (assumed counts as pass); 1 = any fail; 2 = no fail but
    // some inconclusive.
    int exit_code() const;
};

std::string render_json(const VerificationReport& r);
std::string render_text(const VerificationReport& r);

}  // namespace fs19
