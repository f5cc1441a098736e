// acatlab: analog-category bounds for finite groups, plus the verification suites.
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "acatlab/bounds.hpp"
#include "acatlab/equivariant.hpp"
#include "acatlab/error.hpp"
#include "acatlab/group.hpp"
#include "acatlab/verify.hpp"

using namespace acatlab;

namespace {

enum Exit { Ok = 0, VerifyFailed = 1, InputError = 2, CapError = 3 };

struct Options {
    std::string format = "text";
    bool certify = false;
    unsigned parallel = 1;
    unsigned long long seed = Caps{}.seed;
    bool unsafe_caps = false;
    std::string spec;
    std::size_t max_order = 0;
    std::string suite;
};

Caps make_caps(const Options& o) {
    Caps caps;
    if (o.unsafe_caps) {
        caps.order = 4096;
        caps.faces = 50'000'000;
        caps.homology_faces = 5'000'000;
        caps.oracle_order = 64;
    }
    caps.seed = o.seed;
    if (const char* env = std::getenv("ACATLAB_CAPS")) caps = parse_caps(env, caps);
    return caps;
}

FiniteGroup read_group(const std::string& arg, const Caps& caps) {
    std::string text = arg;
    if (!text.empty() && text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in) fail(ErrorKind::Input, "cannot read " + text.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return group_from_spec(text, caps);
    // bare catalog name, e.g. C45 or S4
    auto last = text.find_last_not_of(" \t\r\n");
    return catalog(first == std::string::npos ? "" : text.substr(first, last - first + 1), caps);
}

int cmd_analyze(const Options& o) {
    const auto caps = make_caps(o);
    auto g = std::make_shared<const FiniteGroup>(read_group(o.spec, caps));
    if (g->order() > caps.order) fail(ErrorKind::CapExceeded, "group order above the order cap");
    auto report = analyze(*g);
    if (o.certify) {
        report.certify_requested = true;
        try {
            auto cert = certified_upper_bound(g, caps);
            report.certificate_n = cert.n;
            report.certificate_note = cert.note;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Hypothesis) throw;
            report.certificate_note = e.what();
        }
    }
    if (o.format == "json")
        std::cout << to_json(report).dump(2) << "\n";
    else if (o.format == "tsv")
        std::cout << tsv_header() << "\n" << to_tsv_row(report) << "\n";
    else
        std::cout << to_text(report);
    return Ok;
}

int cmd_survey(const Options& o) {
    const auto caps = make_caps(o);
    if (o.max_order > caps.order) fail(ErrorKind::CapExceeded, "--max-order above the order cap");
    const auto names = catalog_names(o.max_order);
    if (o.format == "json") {
        auto rows = nlohmann::json::array();
        for (const auto& n : names) rows.push_back(to_json(analyze(catalog(n, caps))));
        std::cout << nlohmann::json{{"schema", 1}, {"groups", rows}}.dump(2) << "\n";
        return Ok;
    }
    std::cout << tsv_header() << "\n";
    for (const auto& n : names) std::cout << to_tsv_row(analyze(catalog(n, caps))) << "\n";
    return Ok;
}

int cmd_verify(const Options& o) {
    static const std::vector<std::string> known{"fixed-points", "connectivity", "lattice", "bounds",
                                                "homology",     "construction", "all"};
    if (std::find(known.begin(), known.end(), o.suite) == known.end())
        fail(ErrorKind::Input, "unknown suite '" + o.suite + "'");
    VerifyOptions vo;
    vo.caps = make_caps(o);
    vo.workers = o.parallel;
    auto want = [&](const char* s) { return o.suite == s || o.suite == "all"; };
    std::vector<SuiteResult> results;
    if (want("fixed-points")) results.push_back(verify_fixed_points(24, vo));
    if (want("connectivity")) results.push_back(verify_connectivity(12, vo));
    if (want("lattice")) results.push_back(verify_lattice(24, vo));
    if (want("bounds")) results.push_back(verify_bounds(60, vo));
    if (want("homology")) results.push_back(verify_homology(1000, 8, vo));
    if (want("construction")) results.push_back(verify_construction(construction_corpus(), vo));

    bool ok = true;
    for (const auto& r : results) ok = ok && r.ok();
    if (o.format == "json") {
        auto suites = nlohmann::json::array();
        for (const auto& r : results) suites.push_back(r.to_json());
        std::cout << nlohmann::json{{"schema", 1}, {"passed", ok}, {"suites", suites}}.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << r.name << ": " << (r.ok() ? "pass" : "FAIL") << " (" << r.cases << " cases, " << r.skipped
                      << " skipped over caps)\n";
            for (const auto& f : r.failures) std::cout << "  " << f.dump() << "\n";
        }
    }
    return ok ? Ok : VerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounds on the analog category of finite groups"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "text | json | tsv")->check(CLI::IsMember({"text", "json", "tsv"}));
    app.add_flag("--certify", o.certify, "build X(G) and report the certified upper bound");
    app.add_option("--parallel", o.parallel, "worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--seed", o.seed, "seed for sampled checks");
    app.add_flag("--unsafe-caps", o.unsafe_caps, "raise the enumeration caps");

    auto* analyze_cmd = app.add_subcommand("analyze", "bounds report for one group");
    analyze_cmd->add_option("spec", o.spec, "group-spec JSON, @file, or catalog name")->required();
    auto* survey_cmd = app.add_subcommand("survey", "TSV table over the catalog");
    survey_cmd->add_option("--max-order", o.max_order, "largest order")->required();
    auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
    verify_cmd->add_option("suite", o.suite, "fixed-points | construction | lattice | all")->required();

    // options given after the subcommand land on the app too
    for (auto* sub : {analyze_cmd, survey_cmd, verify_cmd}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return InputError;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(o);
        if (*survey_cmd) return cmd_survey(o);
        return cmd_verify(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::CapExceeded: return CapError;
            case ErrorKind::Input:
            case ErrorKind::Hypothesis: return InputError;
            case ErrorKind::Invariant: return VerifyFailed;
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: bad group spec: " << e.what() << "\n";
        return InputError;
    }
    return InputError;
}
