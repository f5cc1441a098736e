#include "acatlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "acatlab/bounds.hpp"
#include "acatlab/equivariant.hpp"
#include "acatlab/error.hpp"
#include "acatlab/homology.hpp"
#include "acatlab/simplex.hpp"
#include "acatlab/sylow.hpp"

namespace acatlab {

nlohmann::json SuiteResult::to_json() const {
    return {{"suite", name},   {"passed", ok()},   {"cases", cases},
            {"skipped", skipped}, {"failures", failures}, {"details", details}};
}

namespace {

// Runs task(i) for i < n on up to `workers` threads; each task owns its slot.
template <class Task>
void run_parallel(std::size_t n, unsigned workers, Task task) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) task(i);
        });
    for (auto& t : pool) t.join();
}

struct Partial {
    std::size_t cases = 0, skipped = 0;
    std::vector<nlohmann::json> failures;
};

SuiteResult merge(std::string name, std::vector<Partial>& parts, std::size_t max_failures) {
    SuiteResult r;
    r.name = std::move(name);
    std::size_t total_failures = 0;
    for (auto& p : parts) {
        r.cases += p.cases;
        r.skipped += p.skipped;
        total_failures += p.failures.size();
        for (auto& f : p.failures)
            if (r.failures.size() < max_failures) r.failures.push_back(std::move(f));
    }
    // keep the suite red even when counterexamples were truncated
    if (total_failures > r.failures.size()) r.details["failures_total"] = total_failures;
    return r;
}

std::vector<std::string> corpus(std::size_t max_order) { return catalog_names(max_order); }

}  // namespace

SuiteResult verify_fixed_points(std::size_t max_order, const VerifyOptions& opt) {
    const auto names = corpus(max_order);
    std::vector<Partial> parts(names.size());
    run_parallel(names.size(), opt.workers, [&](std::size_t i) {
        auto& part = parts[i];
        auto g = catalog(names[i], opt.caps);
        for (const auto& h : all_subgroups(g, opt.caps)) {
            for (int n = 0; n < static_cast<int>(g.order()); ++n) {
                try {
                    auto iso = verify_fixed_point_formula(g, h, n, opt.caps);
                    ++part.cases;
                    if (!iso.verified)
                        part.failures.push_back({{"group", names[i]},
                                                 {"subgroup", h.elements()},
                                                 {"n", n},
                                                 {"reason", iso.failure},
                                                 {"face", iso.counterexample}});
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::CapExceeded) throw;
                    ++part.skipped;
                }
            }
        }
    });
    auto r = merge("fixed-points", parts, opt.max_failures);
    r.details["groups"] = names.size();
    return r;
}

SuiteResult verify_connectivity(std::size_t max_order, const VerifyOptions& opt) {
    const auto names = corpus(max_order);
    std::vector<Partial> parts(names.size());
    run_parallel(names.size(), opt.workers, [&](std::size_t i) {
        auto& part = parts[i];
        auto g = catalog(names[i], opt.caps);
        for (const auto& h : all_subgroups(g, opt.caps)) {
            const auto index = g.order() / h.size();
            for (int n = 0; n < static_cast<int>(g.order()); ++n) {
                const auto m = (static_cast<std::size_t>(n) + 1) / h.size();
                Connectivity expected;
                if (m == index) {
                    expected.kind = Connectivity::Kind::FullSimplex;
                    expected.value = static_cast<int>(index) - 1;
                } else {
                    expected.value = static_cast<int>(m) - 2;
                }
                try {
                    auto got = connectivity(fixed_subcomplex(g, h, n, opt.caps).nerve, opt.caps);
                    ++part.cases;
                    if (!(got == expected))
                        part.failures.push_back({{"group", names[i]},
                                                 {"subgroup", h.elements()},
                                                 {"n", n},
                                                 {"expected", expected.str()},
                                                 {"got", got.str()}});
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::CapExceeded) throw;
                    ++part.skipped;
                }
            }
        }
    });
    return merge("connectivity", parts, opt.max_failures);
}

SuiteResult verify_lattice(std::size_t max_order, const VerifyOptions& opt) {
    const auto names = corpus(max_order);
    std::vector<Partial> parts(names.size());
    run_parallel(names.size(), opt.workers, [&](std::size_t i) {
        auto& part = parts[i];
        auto g = catalog(names[i], opt.caps);
        const auto subgroups = all_subgroups(g, opt.caps);
        for (auto p : prime_factors(g.order())) {
            auto bad = [&](const std::string& what, nlohmann::json extra = nlohmann::json::object()) {
                extra["group"] = names[i];
                extra["p"] = p;
                extra["reason"] = what;
                part.failures.push_back(std::move(extra));
            };
            try {
                auto lat = p_intersections(g, p);
                const auto sylows = all_sylow_subgroups(g, p);
                ++part.cases;
                if (lat.num_sylows % p != 1 % p || g.order() % lat.num_sylows != 0) bad("Sylow count");
                if (lat.d_p > lat.num_sylows || lat.d_p > lat.exponent + 1) bad("d_p out of range");
                for (const auto& s : sylows) {
                    auto at = lat.find(s);
                    if (!at || lat.depth[*at] != 1) bad("Sylow subgroup without depth 1");
                }
                for (std::size_t a = 0; a < lat.nodes.size(); ++a)
                    for (std::size_t b = 0; b < lat.nodes.size(); ++b)
                        if (!lat.find(g.intersect(lat.nodes[a], lat.nodes[b]))) bad("node set not closed");
                for (auto [lo, hi] : lat.edges) {
                    if (lat.nodes[hi].size() < p * lat.nodes[lo].size()) bad("covering edge drops order by less than p");
                    if (lat.depth[lo] <= lat.depth[hi]) bad("depth does not grow along inclusion");
                }
                for (std::size_t a = 0; a < lat.nodes.size(); ++a) {
                    std::uint64_t cap = lat.sylow_order;
                    for (unsigned d = 1; d < lat.depth[a]; ++d) cap /= p;
                    if (lat.depth[a] - 1 <= lat.exponent && lat.nodes[a].size() > cap)
                        bad("node larger than p^(s-d)", {{"node", lat.nodes[a].elements()}});
                }
                // exhaustive p-subgroups from the oracle
                for (const auto& k : subgroups) {
                    if (k.is_trivial() || !is_p_group_order(k.size(), p)) continue;
                    ++part.cases;
                    const auto dk = depth_of_p_subgroup(lat, k);
                    if (auto at = lat.find(k); at && lat.depth[*at] != dk) bad("node depth differs", {{"k", k.elements()}});
                    for (std::size_t a = 0; a < lat.nodes.size(); ++a) {
                        const auto& h = lat.nodes[a];
                        if (!h.subgroup_of(k)) continue;
                        const bool equal = h == k;
                        if (dk > lat.depth[a] || (dk == lat.depth[a]) != equal)
                            bad("depth lemma", {{"h", h.elements()}, {"k", k.elements()}});
                    }
                    try {
                        const auto& u = unique_containing_intersection(lat, k, dk);
                        if (!k.subgroup_of(u)) bad("containing intersection misses k", {{"k", k.elements()}});
                    } catch (const Error& e) {
                        if (e.kind() != ErrorKind::Invariant) throw;
                        bad(e.what(), {{"k", k.elements()}});
                    }
                }
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::CapExceeded) {
                    ++part.skipped;
                    continue;
                }
                bad(e.what());
            }
        }
    });
    return merge("lattice", parts, opt.max_failures);
}

SuiteResult verify_bounds(std::size_t max_order, const VerifyOptions& opt) {
    const auto names = corpus(max_order);
    std::vector<Partial> parts(names.size());
    std::vector<nlohmann::json> rows(names.size());
    run_parallel(names.size(), opt.workers, [&](std::size_t i) {
        auto& part = parts[i];
        auto bad = [&](const std::string& what) { part.failures.push_back({{"group", names[i]}, {"reason", what}}); };
        try {
            auto g = catalog(names[i], opt.caps);
            auto r = analyze(g);
            ++part.cases;
            rows[i] = {{"group", names[i]}, {"sharpness", to_string(r.sharpness)}, {"upper", r.upper}};
            const auto n1 = static_cast<long long>(g.order()) - 1;
            const auto q3 = 3 * static_cast<long long>(r.q) - 1;
            if (r.lower > r.upper) bad("lower above upper");
            if (r.a_special && (*r.a_special == 1 || *r.a_special == 2)) {
                if (!r.exact || *r.exact != n1) bad("1-/2-special group without exact |G|-1");
            } else if (!(r.a_special && *r.a_special == 3)) {
                if (!(r.upper <= q3 && q3 < n1)) bad("non-sharp group without upper <= 3q-1 < |G|-1");
            }
            if (is_prime_power(g.order())) {
                if (r.lower != n1 || r.upper != n1) bad("p-group not exact");
            } else {
                if (!r.range_consistent || !*r.range_consistent) bad("range consistency");
                if (!r.proof_inequality || !*r.proof_inequality) bad("proof inequality");
                bool abelian = true;
                for (Elem a = 0; a < g.order() && abelian; ++a)
                    for (Elem b = 0; b < g.order() && abelian; ++b) abelian = g.mul(a, b) == g.mul(b, a);
                if (abelian)
                    for (const auto& d : r.per_prime)
                        if (d.self_normalizing) bad("abelian group with a self-normalizing Sylow");
            }
            if (g.order() <= opt.caps.oracle_order) {
                // lower bound against every p-subgroup, not just Sylows and their maximal subgroups
                long long best = 0;
                for (const auto& k : all_subgroups(g, opt.caps)) {
                    if (k.is_trivial() || !is_prime_power(k.size())) continue;
                    const auto ks = static_cast<long long>(k.size());
                    best = std::max(best, g.normalizer(k) == k ? ks - 1 : 2 * ks - 1);
                }
                if (best != r.lower) bad("lower bound differs from the all-p-subgroup scan");
            }
        } catch (const Error& e) {
            bad(e.what());
        }
    });
    auto r = merge("bounds", parts, opt.max_failures);
    for (const auto& row : rows)
        if (!row.is_null() && row["group"] == "C45") r.details["C45_upper"] = row["upper"];
    return r;
}

SuiteResult verify_homology(std::size_t random_matrices, std::size_t max_vertices, const VerifyOptions& opt) {
    std::vector<Partial> parts(1);
    auto& part = parts[0];
    std::mt19937_64 rng(opt.caps.seed);
    auto uniform = [&](long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng); };
    std::size_t promoted = 0;
    for (std::size_t t = 0; t < random_matrices; ++t) {
        const auto rows = static_cast<std::size_t>(uniform(1, 40)), cols = static_cast<std::size_t>(uniform(1, 40));
        IntMatrix a(rows, cols);
        SparseMatrix s(rows, cols);
        const int shape = static_cast<int>(t % 3);
        if (shape == 0) {  // dense
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) a(i, j) = static_cast<long>(uniform(-1000, 1000));
        } else {  // low rank or sparse, to get nontrivial invariant factors
            const auto inner = static_cast<std::size_t>(uniform(1, 8));
            std::vector<long long> b(rows * inner), c(inner * cols);
            for (auto& x : b) x = shape == 1 ? uniform(-3, 3) : (uniform(0, 3) == 0 ? uniform(-4, 4) : 0);
            for (auto& x : c) x = uniform(-3, 3);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) {
                    long long v = 0;
                    for (std::size_t k = 0; k < inner; ++k) v += b[i * inner + k] * c[k * cols + j];
                    a(i, j) = static_cast<long>(std::clamp(v, -1000LL, 1000LL));
                }
        }
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (sgn(a(i, j)) != 0) s.push(i, j, a(i, j).get_si());
        s.canonicalize();
        ++part.cases;
        try {
            auto snf = smith_normal_form(a);  // certificates are checked inside
            promoted += snf.promoted;
            if (snf.invariant_factors != invariant_factors(s))
                part.failures.push_back({{"matrix", t}, {"reason", "sparse and dense invariant factors differ"}});
        } catch (const Error& e) {
            part.failures.push_back({{"matrix", t}, {"reason", e.what()}});
        }
    }
    // skeleton Betti numbers: the k-skeleton of the (m-1)-simplex
    for (std::size_t m = 1; m <= max_vertices; ++m)
        for (std::size_t k = 0; k + 1 < m; ++k) {
            ++part.cases;
            auto h = homology(simplicial_chain_complex(skeleton(m, static_cast<int>(k), opt.caps), 0, true, opt.caps));
            std::uint64_t expect = 1;  // C(m-1, k+1)
            for (std::size_t i = 0; i < k + 1; ++i) expect = expect * (m - 1 - i) / (i + 1);
            for (const auto& d : h.degrees) {
                const bool top = d.degree == static_cast<int>(k);
                if (!d.torsion.empty() || d.rank != (top ? expect : 0))
                    part.failures.push_back(
                        {{"m", m}, {"k", k}, {"degree", d.degree}, {"rank", d.rank}, {"expected", top ? expect : 0}});
            }
        }
    auto r = merge("homology", parts, opt.max_failures);
    r.details["promoted_to_bignum"] = promoted;
    return r;
}

std::vector<std::string> construction_corpus() { return {"S3", "C6", "D5", "A4", "D6", "C30"}; }

SuiteResult verify_construction(const std::vector<std::string>& groups, const VerifyOptions& opt) {
    std::vector<Partial> parts(groups.size());
    std::vector<nlohmann::json> info(groups.size());
    run_parallel(groups.size(), opt.workers, [&](std::size_t i) {
        auto& part = parts[i];
        auto bad = [&](nlohmann::json f) {
            f["group"] = groups[i];
            part.failures.push_back(std::move(f));
        };
        try {
            auto g = std::make_shared<const FiniteGroup>(catalog(groups[i], opt.caps));
            auto x = build_X(g, opt.caps);
            auto& row = info[i];
            row["group"] = groups[i];
            for (const auto& c : x.components) {
                ++part.cases;
                const auto p = c.failures.empty() ? 0 : c.failures.front().p;
                nlohmann::json stages = nlohmann::json::array();
                for (const auto& s : c.stages)
                    stages.push_back({{"stage", s.stage},
                                      {"isotropy_order", s.isotropy.size()},
                                      {"weyl_order", s.weyl_order},
                                      {"euler", s.euler_before},
                                      {"euler_obstructed", s.euler_obstructed},
                                      {"attached", s.attached},
                                      {"residual_degrees", s.residual_degrees}});
                row["components"].push_back({{"d_p", c.d_p}, {"property3", c.property3}, {"stages", stages}});
                for (const auto& f : c.failures)
                    bad({{"check", "property (3)"}, {"p", f.p}, {"subgroup", f.subgroup}, {"degrees", f.degrees}});
                (void)p;
            }
            part.cases += 3;
            if (!x.cross_prime_free) bad({{"check", "cross-prime freeness"}});
            if (!x.acyclic)
                bad({{"check", "integral acyclicity"},
                     {"dim_cap", x.dim_cap},
                     {"residual_degrees", x.integral.residual_degrees},
                     {"euler", x.integral.euler_before},
                     {"euler_obstructed", x.integral.euler_obstructed}});
            if (!x.smith_after.ok) {
                nlohmann::json w = nlohmann::json::array();
                for (const auto& s : x.smith_after.witnesses)
                    w.push_back({{"p", s.p}, {"subgroup", s.subgroup}, {"degrees", s.degrees}});
                bad({{"check", "Smith acyclicity"}, {"witnesses", w}});
            }
            auto cert = certified_upper_bound(x);
            const auto q = largest_prime_power(g->order()).first;
            const auto lower = lower_bound(*g);
            row["certificate"] = cert.n ? nlohmann::json(*cert.n) : nlohmann::json(nullptr);
            row["acyclic"] = x.acyclic;
            row["smith"] = x.smith_after.ok;
            ++part.cases;
            if (!cert.n)
                bad({{"check", "certificate"}, {"reason", cert.note}});
            else if (*cert.n > static_cast<long long>(3 * q - 1) || *cert.n < lower)
                bad({{"check", "certificate"}, {"n", *cert.n}, {"lower", lower}, {"3q-1", 3 * q - 1}});
        } catch (const Error& e) {
            bad({{"check", "exception"}, {"reason", e.what()}});
        }
    });
    auto r = merge("construction", parts, opt.max_failures);
    r.details["groups"] = info;
    return r;
}

}  // namespace acatlab
