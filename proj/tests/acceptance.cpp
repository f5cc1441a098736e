// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "acatlab/bounds.hpp"
#include "acatlab/equivariant.hpp"
#include "acatlab/error.hpp"
#include "acatlab/verify.hpp"

using namespace acatlab;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string suite_detail(const SuiteResult& r) {
    std::ostringstream os;
    os << r.cases << " cases, " << r.skipped << " over caps";
    if (!r.failures.empty()) os << ", first failure " << r.failures.front().dump();
    return os.str();
}

Outcome from_suite(const SuiteResult& r) { return {r.ok(), suite_detail(r)}; }

bool run(int id, const std::string& what, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit_s > 0 && secs > limit_s) {
        o.pass = false;
        o.detail += "; over the time limit";
    }
    char t[32];
    std::snprintf(t, sizeof t, "%.1fs", secs);
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << what << "  [" << o.detail
              << ", " << t << "]" << std::endl;
    return o.pass;
}

}  // namespace

int main() {
    VerifyOptions opt;
    bool all = true;

    all &= run(1, "fixed-point formula, |G| <= 24", 300, [&] { return from_suite(verify_fixed_points(24, opt)); });
    all &= run(2, "connectivity of fixed subcomplexes, |G| <= 12", 300,
               [&] { return from_suite(verify_connectivity(12, opt)); });

    all &= run(3, "1- and 2-special groups are sharp", 0, [&] {
        std::size_t n = 0;
        for (const auto& name : catalog_names(60)) {
            auto r = analyze(catalog(name));
            if (!r.a_special || *r.a_special > 2) continue;
            ++n;
            if (r.exact != static_cast<long long>(r.order) - 1) return Outcome{false, name + " not exact"};
        }
        for (auto [name, want] : {std::pair{"C8", 7}, {"S3", 5}, {"D5", 9}, {"C6", 5}})
            if (analyze(catalog(name)).exact != want) return Outcome{false, std::string(name) + " exact value"};
        return Outcome{true, std::to_string(n) + " groups"};
    });

    all &= run(4, "upper <= 3q-1 < |G|-1 away from {1,2,3}-special; C45 upper 26", 0, [&] {
        std::size_t n = 0;
        for (const auto& name : catalog_names(60)) {
            auto r = analyze(catalog(name));
            if (r.a_special && *r.a_special <= 3) continue;
            ++n;
            const auto q3 = 3 * static_cast<long long>(r.q) - 1;
            if (!(r.upper <= q3 && q3 < static_cast<long long>(r.order) - 1)) return Outcome{false, name};
        }
        const auto c45 = analyze(catalog("C45"));
        if (c45.upper != 26 || c45.sharpness != Sharpness::NotSharp) return Outcome{false, "C45"};
        return Outcome{true, std::to_string(n) + " groups, C45 upper 26"};
    });

    all &= run(5, "bracket and proof inequality, non-prime-power |G| <= 60", 0, [&] {
        std::size_t n = 0;
        for (const auto& name : catalog_names(60)) {
            auto g = catalog(name);
            if (is_prime_power(g.order())) continue;
            ++n;
            if (!range_consistency(g) || !proof_inequality_check(g)) return Outcome{false, name};
        }
        return Outcome{true, std::to_string(n) + " groups"};
    });

    all &= run(6, "depth lemma, containment, uniqueness, |G| <= 24", 0,
               [&] { return from_suite(verify_lattice(24, opt)); });

    // criteria 7 and 8 share one construction per group
    std::vector<std::pair<std::string, XResult>> built;
    all &= run(7, "X_p(G) property (3), X(G) acyclic and Smith acyclic", 600, [&] {
        auto r = verify_construction(construction_corpus(), opt);
        for (const auto& name : construction_corpus())
            built.emplace_back(name, build_X(std::make_shared<const FiniteGroup>(catalog(name))));
        return from_suite(r);
    });

    all &= run(8, "certificate exists, <= 3q-1 and >= lower bound", 0, [&] {
        std::ostringstream os;
        bool ok = !built.empty();
        for (const auto& [name, x] : built) {
            auto cert = certified_upper_bound(x);
            const auto& g = x.complex.group();
            const auto q = static_cast<long long>(largest_prime_power(g.order()).first);
            if (!cert.n) {
                ok = false;
                os << name << ": none (" << cert.note << "); ";
            } else {
                ok = ok && *cert.n <= 3 * q - 1 && *cert.n >= lower_bound(g);
                os << name << ": " << *cert.n << "; ";
            }
        }
        auto d = os.str();
        if (d.size() >= 2) d.resize(d.size() - 2);
        return Outcome{ok, d};
    });

    all &= run(9, "SNF certificates on 1000 random matrices, skeleton Betti numbers m <= 8", 0,
               [&] { return from_suite(verify_homology(1000, 8, opt)); });

    return all ? 0 : 1;
}
