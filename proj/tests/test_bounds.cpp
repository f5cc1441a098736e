#include "doctest.h"

#include "acatlab/bounds.hpp"
#include "acatlab/error.hpp"
#include "oracles.hpp"

using namespace acatlab;

TEST_SUITE("bounds") {
    TEST_CASE("lower bound") {
        CHECK(lower_bound(catalog("C6")) == 5);
        CHECK(lower_bound(catalog("S3")) == 5);
        CHECK(lower_bound(catalog("C30")) == 9);
    }

    TEST_CASE("upper bound") {
        CHECK(upper_bound(catalog("C45")) == 26);
        CHECK(upper_bound(catalog("S3")) == 5);
        CHECK(upper_bound(catalog("C30")) == 14);
        CHECK(upper_bound(catalog("C8")) == 7);
    }

    TEST_CASE("special and sharp") {
        CHECK(a_special(catalog("C9")) == 1u);
        CHECK(a_special(catalog("Q8")) == 1u);
        CHECK(a_special(catalog("S3")) == 2u);
        CHECK_FALSE(a_special(catalog("C30")).has_value());
        CHECK(sharpness(catalog("C8")) == Sharpness::Sharp);
        CHECK(sharpness(catalog("C12")) == Sharpness::Unknown);
        CHECK(sharpness(catalog("C30")) == Sharpness::NotSharp);
        auto r = analyze(catalog("C8"));
        CHECK(r.exact == 7);
        for (const char* name : {"C8", "S3", "D5", "C6"}) {
            auto g = catalog(name);
            CHECK(analyze(g).exact == static_cast<long long>(g.order()) - 1);
        }
    }

    TEST_CASE("bracket and proof inequality") {
        CHECK(range_consistency(catalog("C30")));
        CHECK(range_consistency(catalog("S3")));
        CHECK(proof_inequality_check(catalog("C30")));
        CHECK(proof_inequality_check(catalog("A4")));
        try {
            range_consistency(catalog("C4"));
            FAIL("accepted a p-group");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::Hypothesis);
        }
    }

    TEST_CASE("lower bound against every p-subgroup") {
        // max over nontrivial p-subgroups Q of 2|Q|-1, or |Q|-1 when Q is self-normalizing
        for (const auto& name : catalog_names(12)) {
            auto g = catalog(name);
            long long best = 0;
            for (const auto& q : oracle::subgroups_by_subsets(g)) {
                if (q.size() == 1 || !is_prime_power(q.size())) continue;
                const auto n = static_cast<long long>(q.size());
                best = std::max(best, oracle::normalizer(g, q) == q ? n - 1 : 2 * n - 1);
            }
            CHECK_MESSAGE(lower_bound(g) == best, name);
        }
    }

    TEST_CASE("upper bound from the largest prime power") {
        for (const auto& name : catalog_names(60)) {
            auto g = catalog(name);
            const auto n = static_cast<long long>(g.order());
            long long q = 1;
            for (long long d = 2; d <= n; ++d)
                if (n % d == 0 && is_prime_power(static_cast<std::uint64_t>(d))) q = std::max(q, d);
            const long long expect = q == n ? n - 1 : std::min(3 * q - 1, n - 1);
            CHECK_MESSAGE(upper_bound(g) == expect, name);
            CHECK(lower_bound(g) <= upper_bound(g));
        }
    }

    TEST_CASE("report formats") {
        auto r = analyze(catalog("S3"));
        auto j = to_json(r);
        CHECK(j["schema"] == 1);
        CHECK(j["lower"] == 5);
        CHECK(j["upper"] == 5);
        CHECK(j["exact"] == 5);
        CHECK(j["a_special"] == 2);
        CHECK(j["sharpness"] == "Sharp");
        CHECK(tsv_header() == "group\torder\tq\ta_special\tlower\tupper\tsharpness\td_p");
        CHECK(to_tsv_row(analyze(catalog("C30"))) == "C30\t30\t5\t-\t9\t14\tNotSharp\t2:1,3:1,5:1");
        CHECK(to_text(r).find("Sharp") != std::string::npos);
    }
}
