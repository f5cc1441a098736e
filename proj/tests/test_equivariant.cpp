#include "doctest.h"

#include "acatlab/bounds.hpp"
#include "acatlab/equivariant.hpp"
#include "acatlab/error.hpp"
#include "acatlab/sylow.hpp"
#include "oracles.hpp"

using namespace acatlab;

namespace {

std::shared_ptr<const FiniteGroup> grp(const std::string& name) {
    return std::make_shared<const FiniteGroup>(catalog(name));
}

std::size_t reduced_rank(const ChainComplex& cc, int k) { return homology(cc).at(k)->rank; }

// Subdivided edge with C2 swapping the ends: two free vertices, a fixed
// barycenter and a free edge orbit joining them.
GCWComplex subdivided_edge(std::shared_ptr<const FiniteGroup> c2) {
    GCWComplex x(c2);
    x.add_cell(0, c2->trivial_subgroup(), {}, "end");
    x.add_cell(0, c2->whole(), {}, "middle");
    x.add_cell(1, c2->trivial_subgroup(), {{0, 1, 1}, {0, 0, -1}}, "half");
    return x;
}

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Invariant;
}

}  // namespace

TEST_SUITE("equivariant") {
    TEST_CASE("expansion") {
        auto c2 = grp("C2");
        GCWComplex one(c2);
        one.add_cell(0, c2->trivial_subgroup(), {}, "v");
        auto cc = expand(one);
        CHECK(cc.dim(0) == 2);
        CHECK(expand(GCWComplex(c2)).euler_characteristic() == 0);

        auto circle = cayley_one_complex(c2);
        auto ce = expand(circle, true);
        CHECK(ce.dim(0) == 2);
        CHECK(ce.dim(1) == 2);
        CHECK(reduced_rank(ce, 1) == 1);
        CHECK(reduced_rank(ce, 0) == 0);
    }

    TEST_CASE("Cayley complexes") {
        auto e = cayley_one_complex(grp("C1"));
        CHECK(expand(e).dim(0) == 1);
        CHECK(expand(e).dim(1) == 0);
        auto c3 = expand(cayley_one_complex(grp("C3")), true);
        CHECK(c3.dim(0) == 3);
        CHECK(c3.dim(1) == 6);
        CHECK(reduced_rank(c3, 0) == 0);
        // connected graph with V = |K| and E = |K|(|K|-1): b1 = E - V + 1
        for (const auto& name : catalog_names(8)) {
            auto k = grp(name);
            auto cc = expand(cayley_one_complex(k), true);
            const auto n = k->order();
            CHECK(reduced_rank(cc, 0) == 0);
            CHECK(reduced_rank(cc, 1) == n * (n - 1) - n + 1);
        }
    }

    TEST_CASE("induction and inflation") {
        auto c6 = grp("C6");
        auto c2 = grp("C2");
        GCWComplex one(c2);
        one.add_cell(0, c2->trivial_subgroup(), {}, "v");
        auto up = induce(c6, one, {0, 3});
        CHECK(up.orbit_count() == 1);
        CHECK(up.point_count(0) == 6);
        CHECK_THROWS_AS(induce(c6, one, {0, 1}), Error);  // not a homomorphism

        auto s3 = grp("S3");
        auto same = induce(s3, cayley_one_complex(s3), [&] {
            std::vector<Elem> id(6);
            for (Elem i = 0; i < 6; ++i) id[i] = i;
            return id;
        }());
        CHECK(expand(same).dim(1) == expand(cayley_one_complex(s3)).dim(1));

        // S3 -> S3/<(123)> = C2, pulled back: isotropy P, fixed set of P is the C2 circle
        auto p = sylow_subgroup(*s3, 3);
        auto q = quotient_group(*s3, p);
        auto qg = std::make_shared<const FiniteGroup>(q.group);
        auto inflated = inflate(cayley_one_complex(qg), s3, q.projection);
        for (int k = 0; k <= 1; ++k)
            for (const auto& c : inflated.cells(k)) CHECK(c.isotropy == p);
        auto fixed = fixed_chain_complex(inflated, p);
        CHECK(fixed.dim(0) == 2);
        CHECK(fixed.dim(1) == 2);
        auto t = s3->closure({oracle::by_label(*s3, "(1 2)")});
        CHECK(fixed_chain_complex(inflated, t).dim(0) == 0);
    }

    TEST_CASE("fixed chain complexes") {
        auto s3 = grp("S3");
        auto x = cayley_one_complex(s3);
        auto a = expand(x), b = fixed_chain_complex(x, s3->trivial_subgroup());
        CHECK(a.dim(0) == b.dim(0));
        CHECK(a.dim(1) == b.dim(1));
        for (const auto& h : all_subgroups(*s3))
            if (!h.is_trivial()) CHECK(fixed_chain_complex(x, h).dim(0) == 0);
    }

    TEST_CASE("cell checks") {
        auto c2 = grp("C2");
        GCWComplex x(c2);
        x.add_cell(0, c2->trivial_subgroup(), {}, "v");
        CHECK(kind_of([&] { x.add_cell(1, c2->trivial_subgroup(), {{1, 0, 1}}, "bad"); }) == ErrorKind::Invariant);
        CHECK(kind_of([&] { x.add_cell(1, c2->whole(), {{1, 0, 1}, {0, 0, -1}}, "bad"); }) == ErrorKind::Invariant);
        x.add_cell(1, c2->trivial_subgroup(), {{1, 0, 1}, {0, 0, -1}}, "e");
        // the edge orbit is a circle; 1 + s is its cycle, 1 alone is not
        CHECK(kind_of([&] { x.add_cell(2, c2->trivial_subgroup(), {{0, 0, 1}}, "bad"); }) == ErrorKind::Invariant);
        x.add_cell(2, c2->trivial_subgroup(), {{0, 0, 1}, {1, 0, 1}}, "disc");
        CHECK(x.dim() == 2);
    }

    TEST_CASE("killing homology") {
        auto c2 = grp("C2");
        auto disc = cayley_one_complex(c2);
        disc.add_cell(2, c2->trivial_subgroup(), {{0, 0, 1}, {1, 0, 1}}, "disc");
        // the free disc orbit closes the circle into a 2-sphere; a free 3-cell orbit
        // kills H2 but leaves two balls meeting in S2, so H3 appears. Free C2 complexes
        // have even chi and can never be acyclic.
        CHECK(reduced_rank(expand(disc, true), 2) == 1);
        auto filled = attach_cells_to_kill(disc, 0, 3);
        CHECK(filled.attached == 1);
        CHECK_FALSE(filled.success);
        CHECK(filled.euler_obstructed);
        CHECK(reduced_rank(expand(filled.complex, true), 2) == 0);

        // over F3 the circle's H1 dies, but free cells cannot reach chi = 1 (odd vs even)
        auto f3 = attach_cells_to_kill(cayley_one_complex(c2), 3, 2);
        auto h = homology(expand(f3.complex, true).with_coefficients(3));
        CHECK(h.at(1)->rank == 0);
        CHECK(f3.attached >= 1);
        CHECK(f3.euler_obstructed);
        CHECK(f3.residual_degrees == std::vector<int>{2});

        // two free vertex orbits: four points, so two free edge orbits are needed
        GCWComplex pts(c2);
        pts.add_cell(0, c2->trivial_subgroup(), {}, "a");
        pts.add_cell(0, c2->trivial_subgroup(), {}, "b");
        auto joined = attach_cells_to_kill(pts, 0, 1);
        CHECK(reduced_rank(expand(joined.complex, true), 0) == 0);
        CHECK(joined.attached == 2);
    }

    TEST_CASE("Smith acyclicity") {
        auto c2 = grp("C2");
        auto edge = subdivided_edge(c2);
        CHECK(is_acyclic(expand(edge, true)));
        auto ok = smith_acyclicity_check(edge);
        CHECK(ok.ok);
        CHECK(ok.checked == 1);

        GCWComplex free(c2);
        free.add_cell(0, c2->trivial_subgroup(), {}, "v");
        auto bad = smith_acyclicity_check(free);
        CHECK_FALSE(bad.ok);
        REQUIRE(bad.witnesses.size() == 1);
        CHECK(bad.witnesses[0].p == 2);
        CHECK(bad.witnesses[0].degrees == std::vector<int>{-1});
    }

    TEST_CASE("one-prime construction") {
        auto s3 = grp("S3");
        auto x3 = build_X_p_report(s3, 3, {});
        CHECK(x3.d_p == 1);
        const auto p = sylow_subgroup(*s3, 3);
        for (int k = 0; k <= 1; ++k)
            for (const auto& c : x3.complex.cells(k))
                if (c.provenance.find("stage 0") != std::string::npos || c.provenance == "base") CHECK(c.isotropy == p);
        // X^P is a finite free N(P)/P = C2 complex, so chi(X^P) is even and cannot be 1
        REQUIRE(x3.stages.size() == 1);
        CHECK(x3.stages[0].weyl_order == 2);
        CHECK(x3.stages[0].euler_obstructed);
        CHECK_FALSE(x3.property3);
        CHECK_FALSE(is_p_acyclic(fixed_chain_complex(x3.complex, p, true), 3));
        CHECK(kind_of([&] { build_X_p(s3, 3); }) == ErrorKind::Invariant);

        auto x2 = build_X_p_report(s3, 2, {});
        CHECK(x2.d_p == 2);
        for (const auto& s : all_sylow_subgroups(*s3, 2))
            CHECK(is_p_acyclic(fixed_chain_complex(x2.complex, s, true), 2));
        for (int k = 0; k <= x2.complex.dim(); ++k)
            for (const auto& c : x2.complex.cells(k))
                if (c.provenance.find("stage 2") != std::string::npos) {
                    CHECK(c.isotropy.is_trivial());
                    CHECK(k <= 3);
                }

        auto c6 = grp("C6");
        for (std::uint64_t q : {2, 3}) CHECK(build_X_p_report(c6, q, {}).d_p == 1);
        CHECK(kind_of([] { build_X(grp("C4")); }) == ErrorKind::Hypothesis);
    }

    TEST_CASE("designer complex and certificate") {
        for (const char* name : {"S3", "C6"}) {
            auto g = grp(name);
            auto x = build_X(g);
            CHECK(x.cross_prime_free);
            CHECK(x.dim_cap == [&] {
                unsigned d = 0;
                for (auto p : prime_factors(g->order())) d = std::max(d, p_intersections(*g, p).d_p);
                return static_cast<int>(d) + 3;
            }());
            // every cell is small enough for the certificate formula
            auto cert = certified_upper_bound(x);
            CHECK(cert.n.has_value() == (x.acyclic && x.smith_after.ok));
            if (cert.n) {
                CHECK(*cert.n <= 8);
                CHECK(*cert.n >= lower_bound(*g));
            } else {
                CHECK_FALSE(cert.note.empty());
            }
        }
    }
}
