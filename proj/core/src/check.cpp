#include "fs19/check.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace fs19 {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Paper: return "paper";
        case Provenance::Trivial: return "trivial";
        case Provenance::Derived: return "derived";
        case Provenance::Assumed: return "assumed";
    }
    return "?";
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Inconclusive: return "inconclusive";
        case CheckStatus::Assumed: return "assumed";
    }
    return "?";
}

size_t VerificationReport::count(CheckStatus s) const {
    size_t n = 0;
    for (const auto& c : checks)
        if (c.status == s) ++n;
    return n;
}

int VerificationReport::exit_code() const {
    if (count(CheckStatus::Fail) > 0) return 1;
    if (count(CheckStatus::Inconclusive) > 0) return 2;
    return 0;
}

namespace {

std::vector<CheckResult> sorted_checks(const VerificationReport& r) {
    std::vector<CheckResult> cs = r.checks;
    std::stable_sort(cs.begin(), cs.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    return cs;
}

}  // namespace

std::string render_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["tool_version"] = r.tool_version;
    j["selector"] = r.selector;
    nlohmann::ordered_json digests = nlohmann::ordered_json::object();
    for (const auto& [path, hash] : r.data_digests) digests[path] = hash;
    j["data_digests"] = digests;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : sorted_checks(r)) {
        nlohmann::ordered_json cj;
        cj["id"] = c.id;
        cj["description"] = c.description;
        cj["computed"] = c.computed;
        cj["expected"] = c.expected;
        cj["provenance"] = to_string(c.provenance);
        cj["citation"] = c.citation;
        cj["status"] = to_string(c.status);
        checks.push_back(std::move(cj));
    }
    j["checks"] = checks;
    nlohmann::ordered_json summary;
    summary["pass"] = r.count(CheckStatus::Pass);
    summary["fail"] = r.count(CheckStatus::Fail);
    summary["inconclusive"] = r.count(CheckStatus::Inconclusive);
    summary["assumed"] = r.count(CheckStatus::Assumed);
    summary["exit_code"] = r.exit_code();
    j["summary"] = summary;
    return j.dump(2) + "\n";
}

std::string render_text(const VerificationReport& r) {
    std::ostringstream out;
    out << "verification report (selector: " << r.selector << ", tool "
        << r.tool_version << ")\n";
    if (!r.data_digests.empty()) {
        out << "data files:\n";
        for (const auto& [path, hash] : r.data_digests)
            out << "  " << hash.substr(0, 16) << "  " << path << "\n";
    }
    std::string section;
    for (const auto& c : sorted_checks(r)) {
        std::string sec = c.id.substr(0, c.id.find('.'));
        if (sec != section) {
            section = sec;
            out << "[" << section << "]\n";
        }
        std::string tag;
        switch (c.status) {
            case CheckStatus::Pass: tag = "PASS"; break;
            case CheckStatus::Fail: tag = "FAIL"; break;
            case CheckStatus::Inconclusive: tag = "INCONCLUSIVE"; break;
            case CheckStatus::Assumed: tag = "ASSUMED"; break;
        }
        out << "  " << tag << "  " << c.id << "  " << c.description << "\n";
        if (c.status == CheckStatus::Assumed) {
            out << "        assumed input: " << c.expected << " (" << c.citation << ")\n";
        } else {
            out << "        computed: " << c.computed << "  expected: " << c.expected
                << "  [" << to_string(c.provenance) << "; " << c.citation << "]\n";
        }
    }
    out << "summary: " << r.count(CheckStatus::Pass) << " pass, "
        << r.count(CheckStatus::Fail) << " fail, " << r.count(CheckStatus::Inconclusive)
        << " inconclusive, " << r.count(CheckStatus::Assumed) << " assumed\n";
    return out.str();
}

}  // namespace fs19
