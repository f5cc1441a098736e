#include "doctest.h"

#include <random>
#include <sstream>

#include "acatlab/error.hpp"
#include "acatlab/homology.hpp"
#include "acatlab/simplex.hpp"
#include "oracles.hpp"

using namespace acatlab;

namespace {

// minimal 6-vertex triangulation of the real projective plane
SkeletalComplex rp2() {
    return SkeletalComplex::from_facets(6, {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                            {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
}

SkeletalComplex hollow_triangle() { return skeleton(3, 1); }

std::vector<std::vector<long long>> dense(const SparseMatrix& m) {
    std::vector<std::vector<long long>> d(m.rows, std::vector<long long>(m.cols, 0));
    for (std::size_t c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.columns[c]) d[r][c] = v;
    return d;
}

std::vector<long long> to_ll(const std::vector<BigInt>& v) {
    std::vector<long long> out;
    for (const auto& x : v) out.push_back(x.get_si());
    return out;
}

}  // namespace

TEST_SUITE("homology") {
    TEST_CASE("reduced chains of two points") {
        auto cc = simplicial_chain_complex(skeleton(2, 0), 0, true);
        auto d0 = dense(cc.boundary(0));
        CHECK(d0 == std::vector<std::vector<long long>>{{1, 1}});
        CHECK(homology(cc).at(0)->rank == 1);
        CHECK_FALSE(is_p_acyclic(simplicial_chain_complex(skeleton(2, 0), 2, true), 2));
    }

    TEST_CASE("circle and skeleta") {
        auto h = homology(simplicial_chain_complex(hollow_triangle(), 0, true));
        CHECK(h.at(1)->rank == 1);
        CHECK(h.at(1)->torsion.empty());
        CHECK(h.at(0)->vanishes());
        auto s = homology(simplicial_chain_complex(skeleton(5, 2), 0, true));
        CHECK(s.at(2)->rank == 4);
        for (std::size_t m = 2; m <= 7; ++m)
            for (std::size_t k = 0; k + 1 < m; ++k) {
                auto hk = homology(simplicial_chain_complex(skeleton(m, static_cast<int>(k)), 0, true));
                for (const auto& d : hk.degrees)
                    CHECK(d.rank == (d.degree == static_cast<int>(k) ? oracle::binomial(m - 1, k + 1) : 0));
            }
    }

    TEST_CASE("projective plane") {
        auto cx = rp2();
        // each edge in exactly two triangles: a closed pseudomanifold
        for (std::size_t e = 0; e < cx.count(1); ++e) {
            auto f = cx.face(1, e);
            int cofaces = 0;
            for (std::size_t t = 0; t < cx.count(2); ++t) {
                auto tri = cx.face(2, t);
                cofaces += std::includes(tri.begin(), tri.end(), f.begin(), f.end());
            }
            CHECK(cofaces == 2);
        }
        auto z = homology(simplicial_chain_complex(cx, 0, true));
        CHECK(z.at(1)->rank == 0);
        CHECK(to_ll(z.at(1)->torsion) == std::vector<long long>{2});
        CHECK(z.at(2)->vanishes());
        auto f2 = homology(simplicial_chain_complex(cx, 2, true));
        CHECK(f2.at(1)->rank == 1);
        CHECK(f2.at(2)->rank == 1);
        CHECK(is_p_acyclic(simplicial_chain_complex(cx, 0, true), 3));
        CHECK_FALSE(is_p_acyclic(simplicial_chain_complex(cx, 0, true), 2));
        CHECK(is_p_acyclic(simplicial_chain_complex(skeleton(3, 2), 0, true), 5));
        CHECK(is_acyclic(simplicial_chain_complex(skeleton(3, 2), 0, true)));
    }

    TEST_CASE("mod p dimensions against Gaussian elimination and Euler characteristic") {
        for (std::uint64_t p : {2, 3, 5}) {
            auto cc = simplicial_chain_complex(rp2(), p, true);
            long long alt = 0;
            auto h = homology(cc);
            for (int k = cc.min_degree(); k <= cc.max_degree(); ++k) {
                const auto rk = oracle::rank_mod_p(dense(cc.boundary(k)), static_cast<long long>(p));
                const auto rk1 = oracle::rank_mod_p(dense(cc.boundary(k + 1)), static_cast<long long>(p));
                CHECK(h.at(k)->rank == cc.dim(k) - rk - rk1);
                CHECK(rank(cc.boundary(k), p) == rk);
                alt += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(h.at(k)->rank);
            }
            CHECK(alt == cc.euler_characteristic());
        }
    }

    TEST_CASE("Smith normal form examples") {
        auto id = smith_normal_form(IntMatrix::identity(2));
        CHECK(to_ll(id.invariant_factors) == std::vector<long long>{1, 1});
        auto d = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}}));
        CHECK(to_ll(d.invariant_factors) == std::vector<long long>{1, 6});
        CHECK(d.u * IntMatrix::from_rows({{2, 0}, {0, 3}}) * d.v == d.d);
        CHECK(smith_normal_form(IntMatrix(3, 2)).invariant_factors.empty());
    }

    TEST_CASE("Smith normal form against determinantal divisors") {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> dim(1, 4), val(-6, 6);
        for (int t = 0; t < 300; ++t) {
            const auto r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
            std::vector<std::vector<long long>> a(r, std::vector<long long>(c));
            for (auto& row : a)
                for (auto& x : row) x = val(rng);
            auto m = IntMatrix::from_rows(a);
            auto snf = smith_normal_form(m);
            CHECK(to_ll(snf.invariant_factors) == oracle::invariant_factors(a));
            CHECK(snf.u * m * snf.v == snf.d);
            CHECK(snf.u * snf.u_inv == IntMatrix::identity(r));
            CHECK(snf.v_inv * snf.v == IntMatrix::identity(c));
            SparseMatrix s(r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) s.push(i, j, a[i][j]);
            s.canonicalize();
            CHECK(to_ll(invariant_factors(s)) == oracle::invariant_factors(a));
        }
    }

    TEST_CASE("large entries promote to bignums") {
        const long long big = 3'000'000'000LL;
        auto m = IntMatrix::from_rows({{big, big + 1, 7}, {big - 1, big, 5}, {2 * big, 3, big}});
        auto snf = smith_normal_form(m);
        CHECK(snf.u * m * snf.v == snf.d);
        CHECK(snf.invariant_factors.size() == 3);
    }

    TEST_CASE("kernel basis and F_p spans") {
        auto cc = simplicial_chain_complex(skeleton(5, 2), 0, true);
        auto d2 = cc.boundary(2);
        auto ker = kernel_basis(d2);
        CHECK(ker.size() == d2.cols - rank(d2, 0));
        for (const auto& v : ker) {
            std::vector<BigInt> img(d2.rows, 0);
            for (std::size_t c = 0; c < d2.cols; ++c)
                for (const auto& [r, x] : d2.columns[c]) img[r] += BigInt(static_cast<long>(x)) * v[c];
            for (const auto& y : img) CHECK(sgn(y) == 0);
        }
        FpSpan span(3, 3);
        CHECK(span.add({1, 2, 0}));
        CHECK(span.add({0, 1, 1}));
        CHECK_FALSE(span.add({2, 1, 0}));  // = 2 * (1,2,0) mod 3
        CHECK(span.contains({1, 0, 1}));   // (1,2,0) + (0,1,1) mod 3
        CHECK(span.rank() == 2);
    }

    TEST_CASE("chain complexes reject bad input") {
        SparseMatrix d1(1, 1), d2(1, 1);
        d1.push(0, 0, 1);
        d2.push(0, 0, 1);
        d1.canonicalize();
        d2.canonicalize();
        CHECK_THROWS_AS(ChainComplex(0, {1, 1, 1}, {SparseMatrix(0, 1), d1, d2}), Error);
        CHECK_THROWS_AS(ChainComplex(0, {2}, {SparseMatrix(0, 1)}), Error);
    }

    TEST_CASE("triplet round trip") {
        auto m = simplicial_chain_complex(rp2(), 0, false).boundary(2);
        std::stringstream ss;
        write_triplets(ss, m);
        auto back = read_triplets(ss);
        CHECK(back.columns == m.columns);
        std::stringstream bad("2 2 1\n5 0 1\n");
        CHECK_THROWS_AS(read_triplets(bad), Error);
    }
}
