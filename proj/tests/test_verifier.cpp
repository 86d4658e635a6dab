// Report assembly and rendering (JSON schema, text format, exit codes),
// suite orchestration (selectors, lazy data loading, missing/corrupt data),
// and the installed CLI driven as a subprocess.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sys/wait.h>
#include <unistd.h>

#include "field_fixtures.hpp"
#include "fs19/check.hpp"
#include "fs19/sha256.hpp"
#include "fs19/suite.hpp"

using namespace fs19;
using fs19::testing::data_path;
using fs19::testing::slurp_file;
using nlohmann::json;
namespace fsys = std::filesystem;

namespace {

SuiteOptions opts() {
    SuiteOptions o;
    o.data_dir = FS19_DATA_DIR;
    return o;
}

const CheckResult* find_check(const VerificationReport& r, const std::string& id) {
    for (const auto& c : r.checks)
        if (c.id == id) return &c;
    return nullptr;
}

// Runs the CLI binary, returns its exit status; stdout+stderr go to `capture`
// when given.
int run_cli(const std::string& args, std::string* capture = nullptr) {
    std::string cmd = std::string(FS19_CLI_PATH) + " " + args;
    fsys::path tmp = fsys::temp_directory_path() / "fs19_cli_capture.txt";
    cmd += " >" + tmp.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    if (capture) *capture = slurp_file(tmp.string());
    fsys::remove(tmp);
    REQUIRE(WIFEXITED(rc));
    return WEXITSTATUS(rc);
}

// A scratch data directory seeded with the shipped field certificates.
struct TempDataDir {
    fsys::path root;
    TempDataDir() {
        root = fsys::temp_directory_path() /
               ("fs19_data_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
        fsys::create_directories(root / "fields");
        for (const char* f : {"rationals.json", "gaussian.json", "quadratic_m19.json",
                              "quartic_cm.json", "sextic_splitting.json"})
            fsys::copy_file(data_path(std::string("fields/") + f), root / "fields" / f);
    }
    ~TempDataDir() { fsys::remove_all(root); }
    static int& counter() {
        static int n = 0;
        return n;
    }
};

}  // namespace

TEST_CASE("enum renderings") {
    CHECK(to_string(Provenance::Paper) == "paper");
    CHECK(to_string(Provenance::Trivial) == "trivial");
    CHECK(to_string(Provenance::Derived) == "derived");
    CHECK(to_string(Provenance::Assumed) == "assumed");
    CHECK(to_string(CheckStatus::Pass) == "pass");
    CHECK(to_string(CheckStatus::Fail) == "fail");
    CHECK(to_string(CheckStatus::Inconclusive) == "inconclusive");
    CHECK(to_string(CheckStatus::Assumed) == "assumed");
}

TEST_CASE("exit codes from the status counts") {
    VerificationReport r;
    r.checks.push_back({"a", "", "1", "1", Provenance::Derived, "", CheckStatus::Pass});
    CHECK(r.exit_code() == 0);
    r.checks.push_back({"b", "", "?", "1", Provenance::Derived, "", CheckStatus::Inconclusive});
    CHECK(r.exit_code() == 2);
    r.checks.push_back({"c", "", "2", "1", Provenance::Derived, "", CheckStatus::Fail});
    CHECK(r.exit_code() == 1);
    CHECK(r.count(CheckStatus::Pass) == 1);
    CHECK(r.count(CheckStatus::Fail) == 1);
    CHECK(r.count(CheckStatus::Inconclusive) == 1);
}

TEST_CASE("JSON rendering: schema, ordering, round trip") {
    VerificationReport r;
    r.tool_version = kToolVersion;
    r.selector = "demo";
    r.data_digests.emplace_back("fields/x.json", sha256_hex("x"));
    r.checks.push_back({"z.second", "later id", "2", "2", Provenance::Paper, "step A",
                        CheckStatus::Pass});
    r.checks.push_back({"a.first", "earlier id", "(not computed)", "accepted as imported theory",
                        Provenance::Assumed, "step B", CheckStatus::Assumed});

    std::string doc = render_json(r);
    CHECK(doc.back() == '\n');
    json j = json::parse(doc);

    std::set<std::string> top;
    for (auto it = j.begin(); it != j.end(); ++it) top.insert(it.key());
    CHECK(top == std::set<std::string>{"tool_version", "selector", "data_digests", "checks",
                                       "summary"});
    CHECK(j["tool_version"] == kToolVersion);
    CHECK(j["selector"] == "demo");
    CHECK(j["data_digests"]["fields/x.json"] == sha256_hex("x"));

    // Checks render sorted by id regardless of insertion order.
    REQUIRE(j["checks"].size() == 2);
    CHECK(j["checks"][0]["id"] == "a.first");
    CHECK(j["checks"][1]["id"] == "z.second");
    std::set<std::string> ck;
    for (auto it = j["checks"][0].begin(); it != j["checks"][0].end(); ++it) ck.insert(it.key());
    CHECK(ck == std::set<std::string>{"id", "description", "computed", "expected", "provenance",
                                      "citation", "status"});
    CHECK(j["checks"][0]["provenance"] == "assumed");
    CHECK(j["checks"][0]["status"] == "assumed");

    CHECK(j["summary"]["pass"] == 1);
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["summary"]["inconclusive"] == 0);
    CHECK(j["summary"]["assumed"] == 1);
    CHECK(j["summary"]["exit_code"] == 0);

    // Parsing and re-dumping with the same writer settings is byte-stable.
    CHECK(nlohmann::ordered_json::parse(doc).dump(2) + "\n" == doc);
}

TEST_CASE("text rendering") {
    VerificationReport r;
    r.tool_version = kToolVersion;
    r.selector = "demo";
    r.data_digests.emplace_back("fields/x.json", sha256_hex("x"));
    r.checks.push_back({"demo.value", "a demo check", "2", "2", Provenance::Paper, "step A",
                        CheckStatus::Pass});
    r.checks.push_back({"demo.assumed", "an imported statement", "(not computed)",
                        "accepted as imported theory", Provenance::Assumed, "step B",
                        CheckStatus::Assumed});

    std::string doc = render_text(r);
    CHECK(doc.find("verification report (selector: demo, tool " + std::string(kToolVersion) +
                   ")") != std::string::npos);
    CHECK(doc.find("data files:") != std::string::npos);
    CHECK(doc.find(sha256_hex("x").substr(0, 16)) != std::string::npos);
    CHECK(doc.find("[demo]") != std::string::npos);
    CHECK(doc.find("PASS") != std::string::npos);
    CHECK(doc.find("ASSUMED") != std::string::npos);
    CHECK(doc.find("computed: 2") != std::string::npos);
    CHECK(doc.find("assumed input:") != std::string::npos);
    CHECK(doc.find("summary: 1 pass, 0 fail, 0 inconclusive, 1 assumed") != std::string::npos);
}

TEST_CASE("selector validation and the empty run") {
    CHECK(is_known_selector("all"));
    CHECK(is_known_selector("bounds"));
    CHECK(is_known_selector("cft"));
    CHECK(is_known_selector("hopf"));
    CHECK(is_known_selector("curve"));
    CHECK(is_known_selector("groups"));
    CHECK(is_known_selector("ext"));
    CHECK(is_known_selector(""));
    CHECK(!is_known_selector("bogus"));

    CHECK_THROWS_AS(run_suite("bogus", opts()), std::invalid_argument);

    VerificationReport r = run_suite("", opts());
    CHECK(r.selector == "");
    CHECK(r.checks.empty());
    CHECK(r.data_digests.empty());
    CHECK(r.exit_code() == 0);
}

TEST_CASE("selectors that need no data files never touch the data directory") {
    SuiteOptions o;
    o.data_dir = "/nonexistent/fs19";  // groups and ext run entirely in memory
    for (const char* sel : {"groups", "ext"}) {
        CAPTURE(sel);
        VerificationReport r = run_suite(sel, o);
        CHECK(!r.checks.empty());
        CHECK(r.count(CheckStatus::Fail) == 0);
    }
}

TEST_CASE("missing and corrupt data files abort with the path in the message") {
    TempDataDir tmp;
    SuiteOptions o;
    o.data_dir = tmp.root.string();

    fsys::remove(tmp.root / "fields" / "sextic_splitting.json");
    try {
        run_suite("cft", o);
        FAIL("expected a missing-data error");
    } catch (const std::runtime_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("missing data file") != std::string::npos);
        CHECK(msg.find("sextic_splitting.json") != std::string::npos);
    }

    std::ofstream(tmp.root / "fields" / "sextic_splitting.json") << "{ not json";
    try {
        run_suite("cft", o);
        FAIL("expected a corrupt-data error");
    } catch (const std::runtime_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("corrupt data file") != std::string::npos);
        CHECK(msg.find("sextic_splitting.json") != std::string::npos);
    }
}

TEST_CASE("a corrupted unit certificate fails the cft certificate check by name") {
    TempDataDir tmp;
    fsys::path quartic = tmp.root / "fields" / "quartic_cm.json";
    json j = json::parse(slurp_file(quartic.string()));
    j["units"][0] = json::array({"2", "0", "0", "0"});
    std::ofstream(quartic) << j.dump(2) << "\n";

    SuiteOptions o;
    o.data_dir = tmp.root.string();
    VerificationReport r = run_suite("cft", o);

    const CheckResult* cert = find_check(r, "cft.quartic.certificate");
    REQUIRE(cert != nullptr);
    CHECK(cert->status == CheckStatus::Fail);
    CHECK(cert->computed.find("units") != std::string::npos);
    CHECK(r.exit_code() == 1);
}

TEST_CASE("a tight search radius reports inconclusive, not failure") {
    SuiteOptions o = opts();
    o.search_radius = 1;
    VerificationReport r = run_suite("cft", o);
    CHECK(r.exit_code() == 2);
    CHECK(r.count(CheckStatus::Fail) == 0);
    CHECK(r.count(CheckStatus::Inconclusive) == 4);
    const CheckResult* h1 = find_check(r, "cft.quartic.class_number_one");
    REQUIRE(h1 != nullptr);
    CHECK(h1->status == CheckStatus::Inconclusive);
    const CheckResult* ray = find_check(r, "cft.quartic.ray_class_mod2");
    REQUIRE(ray != nullptr);
    CHECK(ray->status == CheckStatus::Inconclusive);
}

TEST_CASE("the hopf n-range option threads through to the checks") {
    SuiteOptions o = opts();
    o.hopf_n_max = 2;
    VerificationReport r = run_suite("hopf", o);
    const CheckResult* c = find_check(r, "hopf.z2xmu2chi.counit");
    REQUIRE(c != nullptr);
    CHECK(c->computed == "true (n=1..2)");
    CHECK(c->status == CheckStatus::Pass);
}

TEST_CASE("the full run: digests, counts, determinism, honest assumptions") {
    VerificationReport r = run_suite("all", opts());
    CHECK(r.checks.size() == 105);
    CHECK(r.count(CheckStatus::Pass) == 101);
    CHECK(r.count(CheckStatus::Fail) == 0);
    CHECK(r.count(CheckStatus::Inconclusive) == 0);
    CHECK(r.count(CheckStatus::Assumed) == 4);
    CHECK(r.exit_code() == 0);

    // Digests name every data file read, with its actual SHA-256.
    REQUIRE(r.data_digests.size() == 7);
    for (const auto& [path, digest] : r.data_digests)
        CHECK(digest == sha256_file_hex(data_path(path)));

    // Checks arrive sorted by id.
    for (size_t i = 1; i < r.checks.size(); ++i) CHECK(r.checks[i - 1].id < r.checks[i].id);

    std::set<std::string> assumed;
    for (const auto& c : r.checks)
        if (c.status == CheckStatus::Assumed) {
            assumed.insert(c.id);
            CHECK(c.computed == "(not computed)");
            CHECK(c.provenance == Provenance::Assumed);
        }
    CHECK(assumed == std::set<std::string>{"curve.biconnected", "curve.prolongation_unique",
                                           "ext.mayer_vietoris", "groups.faltings"});

    // Byte-identical rendering across runs.
    VerificationReport r2 = run_suite("all", opts());
    CHECK(render_json(r) == render_json(r2));
    CHECK(render_text(r) == render_text(r2));

    // The ray-class identification is spelled out in the text rendering.
    CHECK(render_text(r).find("Cl₂ ≅ C₃") != std::string::npos);
}

TEST_CASE("CLI: exit codes and report plumbing") {
    std::string data = std::string("--data ") + FS19_DATA_DIR;

    CHECK(run_cli("verify bounds " + data) == 0);
    CHECK(run_cli("verify groups " + data) == 0);

    std::string out;
    CHECK(run_cli("verify bogus " + data, &out) == 64);
    CHECK(out.find("unknown selector") != std::string::npos);
    CHECK(run_cli("", &out) == 64);
    CHECK(run_cli("verify", &out) == 64);
    CHECK(run_cli("--help", &out) == 0);

    CHECK(run_cli("verify cft --data /nonexistent/fs19", &out) == 3);
    CHECK(out.find("startup error") != std::string::npos);
    CHECK(out.find("missing data file") != std::string::npos);

    CHECK(run_cli("verify cft --search-radius 1 " + data) == 2);

    // --out writes the same JSON the library renders.
    fsys::path rep = fsys::temp_directory_path() / "fs19_cli_report.json";
    CHECK(run_cli("verify cft --report json " + data + " --out " + rep.string()) == 0);
    json j = json::parse(slurp_file(rep.string()));
    CHECK(j["selector"] == "cft");
    CHECK(j["summary"]["fail"] == 0);
    fsys::remove(rep);

    // Text is the default format.
    CHECK(run_cli("verify bounds " + data, &out) == 0);
    CHECK(out.rfind("verification report", 0) == 0);
}
