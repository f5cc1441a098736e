#include "doctest.h"

#include "acatlab/error.hpp"
#include "acatlab/simplex.hpp"
#include "oracles.hpp"

using namespace acatlab;

namespace {

// H-invariant subsets of G of size 1..n+1, by scanning all subsets
std::set<oracle::Set> invariant_subsets(const FiniteGroup& g, const SubgroupSet& h, int n) {
    std::set<oracle::Set> out;
    const auto hel = h.elements();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.order()); ++mask) {
        if (__builtin_popcountll(mask) > n + 1) continue;
        bool inv = true;
        for (Elem x = 0; x < g.order() && inv; ++x)
            if (mask >> x & 1)
                for (auto k : hel) inv = inv && (mask >> g.mul(x, k) & 1);
        if (!inv) continue;
        oracle::Set s;
        for (Elem x = 0; x < g.order(); ++x)
            if (mask >> x & 1) s.push_back(x);
        out.insert(s);
    }
    return out;
}

}  // namespace

TEST_SUITE("simplex") {
    TEST_CASE("skeletons") {
        auto k4 = skeleton(4, 1);
        CHECK(k4.count(0) == 4);
        CHECK(k4.count(1) == 6);
        for (std::size_t m = 1; m <= 6; ++m) {
            auto full = skeleton(m, static_cast<int>(m) - 1);
            CHECK(full.face_count() == (std::size_t{1} << m) - 1);
            CHECK(full.is_full_simplex());
        }
        auto pts = skeleton(2, 0);
        CHECK(pts.face_count() == 2);
        CHECK(pts.dim() == 0);
        CHECK(faces_up_to(10, 3) == 10 + 45 + 120);
        Caps tight;
        tight.faces = 100;
        CHECK_THROWS_AS(skeleton(20, 3, tight), Error);
    }

    TEST_CASE("fixed subcomplexes in C4") {
        auto g = catalog("C4");
        auto h = g.closure({2});
        auto f3 = fixed_subcomplex(g, h, 3);
        CHECK(f3.supports == std::vector<Face>{{0, 2}, {1, 3}, {0, 1, 2, 3}});
        CHECK(f3.nerve.is_full_simplex());
        CHECK(f3.nerve.vertex_count() == 2);
        CHECK(fixed_subcomplex(g, h, 0).supports.empty());
        CHECK(fixed_subcomplex(g, h, 0).nerve.empty());
    }

    TEST_CASE("trivial subgroup gives the skeleton") {
        auto g = catalog("S3");
        for (int n = 0; n < 6; ++n) CHECK(fixed_subcomplex(g, g.trivial_subgroup(), n).nerve == skeleton(6, n));
    }

    TEST_CASE("fixed supports against a subset scan") {
        for (const auto& name : catalog_names(8)) {
            auto g = catalog(name);
            for (const auto& h : all_subgroups(g))
                for (int n = 0; n < static_cast<int>(g.order()); ++n) {
                    auto got = fixed_subcomplex(g, h, n).supports;
                    CHECK(std::set<oracle::Set>(got.begin(), got.end()) == invariant_subsets(g, h, n));
                }
        }
    }

    TEST_CASE("fixed point formula") {
        auto c4 = catalog("C4");
        auto iso = verify_fixed_point_formula(c4, c4.closure({2}), 3);
        CHECK(iso.verified);
        CHECK(iso.target_dim == 1);

        auto s3 = catalog("S3");
        auto r = s3.closure({oracle::by_label(s3, "(1 2 3)")});
        auto iso2 = verify_fixed_point_formula(s3, r, 2);
        CHECK(iso2.verified);
        CHECK(iso2.target_dim == 0);
        CHECK(iso2.faces == 2);
        CHECK(iso2.equivariance_checks > 0);

        // n + 1 < |H|: both sides empty
        auto iso3 = verify_fixed_point_formula(s3, r, 1);
        CHECK(iso3.verified);
        CHECK(iso3.faces == 0);
    }

    TEST_CASE("connectivity") {
        CHECK(connectivity(skeleton(4, 1)).value == 0);
        CHECK(connectivity(skeleton(4, 1)).kind == Connectivity::Kind::Finite);
        CHECK(connectivity(skeleton(2, 0)).value == -1);
        CHECK(connectivity(SkeletalComplex(3)).value == -2);
        CHECK(connectivity(skeleton(3, 2)).kind == Connectivity::Kind::FullSimplex);
        // a cone is acyclic without being a full simplex
        auto cone = SkeletalComplex::from_facets(3, {{0, 1}, {0, 2}});
        CHECK(connectivity(cone).kind == Connectivity::Kind::Acyclic);
        // skeleta of simplices: (n-1)-connected
        for (std::size_t m = 3; m <= 7; ++m)
            for (int n = 0; n + 1 < static_cast<int>(m); ++n) CHECK(connectivity(skeleton(m, n)).value == n - 1);
    }
}
