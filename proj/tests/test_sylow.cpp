#include "doctest.h"

#include <algorithm>

#include "acatlab/error.hpp"
#include "acatlab/sylow.hpp"
#include "oracles.hpp"

using namespace acatlab;

TEST_SUITE("sylow") {
    TEST_CASE("Sylow subgroups") {
        auto s3 = catalog("S3");
        auto p3 = sylow_subgroup(s3, 3);
        CHECK(p3 == s3.closure({oracle::by_label(s3, "(1 2 3)")}));
        CHECK(sylow_subgroup(s3, 5).is_trivial());
        auto a4 = catalog("A4");
        auto v4 = sylow_subgroup(a4, 2);
        CHECK(v4.size() == 4);
        for (auto x : v4.elements()) CHECK(a4.element_order(x) <= 2);

        CHECK(all_sylow_subgroups(s3, 2).size() == 3);
        CHECK(all_sylow_subgroups(s3, 3).size() == 1);
        CHECK(all_sylow_subgroups(a4, 3).size() == 4);
    }

    TEST_CASE("Sylow counts against subgroups of maximal p-power order") {
        for (const auto& name : catalog_names(12)) {
            auto g = catalog(name);
            auto subs = oracle::subgroups_by_subsets(g);
            for (auto p : prime_factors(g.order())) {
                const auto ps = prime_part(g.order(), p).first;
                std::vector<oracle::Set> expected;
                for (const auto& h : subs)
                    if (h.size() == ps) expected.push_back(h);
                std::vector<oracle::Set> got;
                for (const auto& s : all_sylow_subgroups(g, p)) got.push_back(s.elements());
                std::sort(got.begin(), got.end());
                CHECK_MESSAGE(got == expected, name, " p=", p);
            }
        }
    }

    TEST_CASE("lattice examples") {
        auto s3 = catalog("S3");
        auto l = p_intersections(s3, 2);
        CHECK(l.nodes.size() == 4);
        auto depths = l.depth;
        std::sort(depths.begin(), depths.end());
        CHECK(depths == std::vector<unsigned>{1, 1, 1, 2});
        CHECK(l.d_p == 2);
        CHECK(l.num_sylows == 3);

        auto c12 = p_intersections(catalog("C12"), 2);
        REQUIRE(c12.nodes.size() == 1);
        CHECK(c12.nodes[0].size() == 4);
        CHECK(c12.d_p == 1);

        auto none = p_intersections(s3, 5);
        CHECK(none.nodes.empty());
        CHECK(none.d_p == 0);
    }

    TEST_CASE("depth queries") {
        auto s3 = catalog("S3");
        auto l2 = p_intersections(s3, 2);
        auto t = s3.closure({oracle::by_label(s3, "(1 2)")});
        CHECK(depth_of_p_subgroup(l2, t) == 1);
        CHECK(l2.depth[*l2.find(s3.trivial_subgroup())] == 2);
        CHECK(unique_containing_intersection(l2, t, 1) == t);

        auto a4 = catalog("A4");
        auto l3 = p_intersections(a4, 3);
        auto c3 = a4.closure({oracle::by_label(a4, "(1 2 3)")});
        CHECK(depth_of_p_subgroup(l3, c3) == 1);
        CHECK(unique_containing_intersection(l3, c3, 1) == c3);
        for (const auto& s : all_sylow_subgroups(a4, 2)) {
            auto l = p_intersections(a4, 2);
            CHECK(unique_containing_intersection(l, s, 1) == s);
        }
    }

    TEST_CASE("nodes and depths against a chain search") {
        for (const auto& name : catalog_names(24)) {
            auto g = catalog(name);
            for (auto p : prime_factors(g.order())) {
                auto lat = p_intersections(g, p);
                std::vector<oracle::Set> sylows;
                for (const auto& s : all_sylow_subgroups(g, p)) sylows.push_back(s.elements());
                auto expected = oracle::p_intersection_depths(sylows);
                REQUIRE(lat.nodes.size() == expected.size());
                unsigned dmax = 0;
                for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
                    auto it = expected.find(lat.nodes[i].elements());
                    REQUIRE(it != expected.end());
                    CHECK_MESSAGE(lat.depth[i] == it->second, name, " p=", p);
                    dmax = std::max(dmax, it->second);
                }
                CHECK(lat.d_p == dmax);
                // the trivial node can sit one below the exponent
                CHECK(lat.d_p <= lat.exponent + 1);
            }
        }
    }

    TEST_CASE("p-subgroups") {
        for (const auto& name : catalog_names(12)) {
            auto g = catalog(name);
            auto subs = oracle::subgroups_by_subsets(g);
            for (auto p : prime_factors(g.order())) {
                std::set<oracle::Set> expected;
                for (const auto& h : subs)
                    if (oracle::is_power_of(h.size(), p)) expected.insert(h);
                std::set<oracle::Set> got;
                for (const auto& h : all_p_subgroups(g, p)) got.insert(h.elements());
                CHECK_MESSAGE(got == expected, name, " p=", p);
                auto reps = conjugacy_representatives(g, all_p_subgroups(g, p));
                for (std::size_t i = 0; i < reps.size(); ++i)
                    for (std::size_t j = i + 1; j < reps.size(); ++j)
                        for (Elem x = 0; x < g.order(); ++x) CHECK(g.conjugate(reps[i], x) != reps[j]);
            }
        }
    }
}
