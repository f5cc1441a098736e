#include "acatlab/equivariant.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "acatlab/error.hpp"
#include "acatlab/sylow.hpp"

namespace acatlab {

// ------------------------------------------------------------------ complex

const std::vector<OrbitCell>& GCWComplex::cells(int k) const {
    static const std::vector<OrbitCell> none;
    if (k < 0 || k > dim()) return none;
    return cells_[static_cast<std::size_t>(k)];
}

std::size_t GCWComplex::orbit_count() const {
    std::size_t n = 0;
    for (const auto& layer : cells_) n += layer.size();
    return n;
}

std::size_t GCWComplex::point_count(int k) const {
    std::size_t n = 0;
    for (const auto& c : cells(k)) n += group_->order() / c.isotropy.size();
    return n;
}

namespace {

// g^-1 K g <= L, i.e. K fixes the coset gL
bool fixes_coset(const FiniteGroup& g, const std::vector<Elem>& k, Elem x, const SubgroupSet& l) {
    const Elem xi = g.inv(x);
    for (auto h : k)
        if (!l.contains(g.mul(g.mul(xi, h), x))) return false;
    return true;
}

std::string cell_name(int k, std::size_t i, const OrbitCell& c) {
    return "cell " + std::to_string(c.id) + " (degree " + std::to_string(k) + ", index " + std::to_string(i) + ")";
}

}  // namespace

std::size_t GCWComplex::add_cell(int k, SubgroupSet isotropy, std::vector<CellTerm> boundary, std::string provenance) {
    if (!group_) fail(ErrorKind::Invariant, "complex has no group");
    const auto& g = *group_;
    if (k < 0 || k > dim() + 1) fail(ErrorKind::Invariant, "cells must be added in consecutive degrees");
    if (isotropy.members().universe() != g.order()) fail(ErrorKind::Invariant, "isotropy belongs to another group");
    if (k == 0 && !boundary.empty()) fail(ErrorKind::Invariant, "a 0-cell has no boundary");
    if (static_cast<std::size_t>(k) == cells_.size()) cells_.emplace_back();

    OrbitCell cell;
    cell.id = next_id_;
    cell.isotropy = std::move(isotropy);
    cell.provenance = std::move(provenance);
    const auto iso = cell.isotropy.elements();
    long long augmented = 0;
    for (const auto& t : boundary) {
        if (t.coeff == 0) continue;
        if (t.g >= g.order() || t.cell >= cells(k - 1).size())
            fail(ErrorKind::Invariant, "boundary term out of range in new degree-" + std::to_string(k) + " cell");
        if (!fixes_coset(g, iso, t.g, cells(k - 1)[t.cell].isotropy))
            fail(ErrorKind::Invariant, "boundary of new degree-" + std::to_string(k) +
                                           " cell leaves the fixed set of its isotropy");
        augmented += t.coeff;
        cell.boundary.push_back(t);
    }
    if (k == 1 && augmented != 0) fail(ErrorKind::Invariant, "boundary of a 1-cell must have augmentation 0");
    if (k >= 2) {
        // boundary of boundary, at point level
        std::map<std::pair<std::uint32_t, std::uint32_t>, long long> acc;
        std::map<std::uint32_t, CosetSpace> spaces;
        for (const auto& t : cell.boundary)
            for (const auto& u : cells(k - 1)[t.cell].boundary) {
                auto it = spaces.find(u.cell);
                if (it == spaces.end())
                    it = spaces.emplace(u.cell, CosetSpace(g, cells(k - 2)[u.cell].isotropy)).first;
                auto c = static_cast<std::uint32_t>(it->second.index_of(g.mul(t.g, u.g)));
                acc[{u.cell, c}] += t.coeff * u.coeff;
            }
        for (const auto& [key, v] : acc)
            if (v != 0)
                fail(ErrorKind::Invariant, "boundary of boundary is nonzero for new " +
                                               cell_name(k, cells_[static_cast<std::size_t>(k)].size(), cell));
    }
    ++next_id_;
    cells_[static_cast<std::size_t>(k)].push_back(std::move(cell));
    return cells_[static_cast<std::size_t>(k)].size() - 1;
}

// ------------------------------------------------------------ chain levels

namespace {

struct Layout {
    std::vector<std::vector<CosetSpace>> cosets;                     // [k][cell]
    std::vector<std::vector<std::vector<std::int64_t>>> index;       // [k][cell][coset] -> basis or -1
    std::vector<std::vector<std::pair<std::uint32_t, Elem>>> basis;  // [k] -> (cell, coset rep)
};

Layout layout(const GCWComplex& x, const SubgroupSet* h, const Caps& caps) {
    const auto& g = x.group();
    Layout l;
    const auto hel = h ? h->elements() : std::vector<Elem>{};
    std::size_t total = 0;
    for (int k = 0; k <= x.dim(); ++k) {
        auto& cs = l.cosets.emplace_back();
        auto& idx = l.index.emplace_back();
        auto& basis = l.basis.emplace_back();
        for (std::size_t i = 0; i < x.cells(k).size(); ++i) {
            const auto& cell = x.cells(k)[i];
            cs.emplace_back(g, cell.isotropy);
            const auto& space = cs.back();
            auto& map = idx.emplace_back(space.size(), -1);
            for (std::size_t c = 0; c < space.size(); ++c) {
                if (h && !fixes_coset(g, hel, space.rep(c), cell.isotropy)) continue;
                map[c] = static_cast<std::int64_t>(basis.size());
                basis.emplace_back(static_cast<std::uint32_t>(i), space.rep(c));
            }
        }
        total += basis.size();
        if (total > caps.homology_faces)
            fail(ErrorKind::CapExceeded, "equivariant complex has more than " + std::to_string(caps.homology_faces) +
                                             " point cells");
    }
    return l;
}

ChainComplex chains(const GCWComplex& x, const Layout& l, bool reduced) {
    const auto& g = x.group();
    std::vector<std::size_t> dims;
    std::vector<SparseMatrix> bds;
    if (reduced) {
        dims.push_back(1);
        bds.emplace_back(0, 1);
    }
    for (int k = 0; k <= x.dim(); ++k) {
        const auto& basis = l.basis[static_cast<std::size_t>(k)];
        const std::size_t below = k == 0 ? (reduced ? 1 : 0) : l.basis[static_cast<std::size_t>(k - 1)].size();
        SparseMatrix d(below, basis.size());
        for (std::size_t col = 0; col < basis.size(); ++col) {
            if (k == 0) {
                if (reduced) d.push(0, col, 1);
                continue;
            }
            const auto [cell, rep] = basis[col];
            for (const auto& t : x.cells(k)[cell].boundary) {
                const auto& space = l.cosets[static_cast<std::size_t>(k - 1)][t.cell];
                auto row = l.index[static_cast<std::size_t>(k - 1)][t.cell][space.index_of(g.mul(rep, t.g))];
                if (row < 0)
                    fail(ErrorKind::Invariant, "boundary of " + cell_name(k, cell, x.cells(k)[cell]) +
                                                   " does not restrict to the fixed set");
                d.push(static_cast<std::size_t>(row), col, t.coeff);
            }
        }
        d.canonicalize();
        dims.push_back(basis.size());
        bds.push_back(std::move(d));
    }
    return ChainComplex(reduced ? -1 : 0, std::move(dims), std::move(bds), 0, reduced);
}

}  // namespace

ChainComplex expand(const GCWComplex& x, bool reduced, const Caps& caps) {
    return chains(x, layout(x, nullptr, caps), reduced);
}

ChainComplex fixed_chain_complex(const GCWComplex& x, const SubgroupSet& h, bool reduced, const Caps& caps) {
    return chains(x, layout(x, &h, caps), reduced);
}

// ------------------------------------------------------------- builders

GCWComplex cayley_one_complex(std::shared_ptr<const FiniteGroup> k) {
    GCWComplex x(k);
    const auto free = k->trivial_subgroup();
    x.add_cell(0, free, {}, "base");
    for (Elem s = 1; s < k->order(); ++s) x.add_cell(1, free, {{s, 0, 1}, {0, 0, -1}}, "base");
    return x;
}

GCWComplex inflate(const GCWComplex& x, std::shared_ptr<const FiniteGroup> big, const std::vector<Elem>& projection) {
    const auto& q = x.group();
    if (projection.size() != big->order()) fail(ErrorKind::Input, "projection has the wrong length");
    std::vector<Elem> lift(q.order(), static_cast<Elem>(big->order()));
    for (Elem n = 0; n < big->order(); ++n) {
        if (projection[n] >= q.order()) fail(ErrorKind::Input, "projection leaves the quotient");
        if (lift[projection[n]] == big->order()) lift[projection[n]] = n;
    }
    for (auto l : lift)
        if (l == big->order()) fail(ErrorKind::Input, "projection is not surjective");
    GCWComplex out(big);
    for (int k = 0; k <= x.dim(); ++k)
        for (const auto& c : x.cells(k)) {
            std::vector<Elem> pre;
            for (Elem n = 0; n < big->order(); ++n)
                if (c.isotropy.contains(projection[n])) pre.push_back(n);
            auto terms = c.boundary;
            for (auto& t : terms) t.g = lift[t.g];
            out.add_cell(k, big->closure(pre), std::move(terms), c.provenance);
        }
    return out;
}

GCWComplex induce(std::shared_ptr<const FiniteGroup> g, const GCWComplex& x, const std::vector<Elem>& embedding) {
    const auto& h = x.group();
    if (embedding.size() != h.order()) fail(ErrorKind::Input, "embedding has the wrong length");
    std::set<Elem> image(embedding.begin(), embedding.end());
    if (image.size() != h.order() || *image.rbegin() >= g->order())
        fail(ErrorKind::Input, "embedding is not injective into the group");
    for (Elem a = 0; a < h.order(); ++a)
        for (Elem b = 0; b < h.order(); ++b)
            if (g->mul(embedding[a], embedding[b]) != embedding[h.mul(a, b)])
                fail(ErrorKind::Input, "embedding is not a homomorphism, so its image is not a subgroup");
    GCWComplex out(g);
    for (int k = 0; k <= x.dim(); ++k)
        for (const auto& c : x.cells(k)) {
            std::vector<Elem> iso;
            for (auto e : c.isotropy.elements()) iso.push_back(embedding[e]);
            auto terms = c.boundary;
            for (auto& t : terms) t.g = embedding[t.g];
            out.add_cell(k, g->closure(iso), std::move(terms), c.provenance);
        }
    return out;
}

GCWComplex disjoint_union(const std::vector<GCWComplex>& parts) {
    if (parts.empty()) fail(ErrorKind::Input, "empty union");
    GCWComplex out(parts.front().group_ptr());
    int top = -1;
    for (const auto& p : parts) {
        if (p.group_ptr()->order() != out.group().order()) fail(ErrorKind::Input, "union over different groups");
        top = std::max(top, p.dim());
    }
    std::vector<std::vector<std::uint32_t>> offset(parts.size(), std::vector<std::uint32_t>(top + 2, 0));
    for (int k = 0; k <= top; ++k) {
        std::uint32_t base = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            offset[i][static_cast<std::size_t>(k)] = base;
            base += static_cast<std::uint32_t>(parts[i].cells(k).size());
        }
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (const auto& c : parts[i].cells(k)) {
                auto terms = c.boundary;
                if (k > 0)
                    for (auto& t : terms) t.cell += offset[i][static_cast<std::size_t>(k - 1)];
                out.add_cell(k, c.isotropy, std::move(terms), c.provenance);
            }
    }
    return out;
}

// ---------------------------------------------------------- killing homology

namespace {

bool relevant(const BigInt& order, Coefficients p) {
    if (p == 0 || sgn(order) == 0) return true;
    return mpz_divisible_ui_p(order.get_mpz_t(), p) != 0;
}

std::vector<int> nonvanishing(const ChainComplex& cc) {
    std::vector<int> out;
    for (const auto& d : homology(cc).degrees)
        if (!d.vanishes()) out.push_back(d.degree);
    return out;
}

}  // namespace

KillResult attach_cells_to_kill(const GCWComplex& x, Coefficients coefficients, int target_dim_cap,
                                const std::optional<SubgroupSet>& isotropy, const Caps& caps,
                                const std::string& provenance) {
    const auto& g = x.group();
    const SubgroupSet h = isotropy.value_or(g.trivial_subgroup());
    KillResult res;
    res.complex = x;
    res.weyl_order = g.normalizer(h).size() / h.size();
    res.euler_before = fixed_chain_complex(x, h, false, caps).euler_characteristic();
    const auto w = static_cast<long long>(res.weyl_order);
    res.euler_obstructed = ((res.euler_before - 1) % w + w) % w != 0;

    const std::size_t budget = 4096;
    const auto normalizer = g.normalizer(h).elements();
    // over Z, ranks are read mod a large prime once that agrees with the exact rank
    const std::uint64_t big_prime = 2147483647;
    for (int k = -1; k < target_dim_cap; ++k) {
        for (;;) {
            auto l = layout(res.complex, &h, caps);
            auto cc = chains(res.complex, l, true);
            if (homology_in_degree(cc.with_coefficients(coefficients), k).vanishes()) break;
            const auto out = cc.boundary(k), in = cc.boundary(k + 1);
            FpSpan span(coefficients ? coefficients : big_prime, cc.dim(k));
            for (std::size_t c = 0; c < in.cols; ++c) span.add_column(in, c);
            auto translate = [&](const std::vector<BigInt>& z, Elem n) {
                if (k < 0) return z;
                std::vector<BigInt> out(z.size(), BigInt(0));
                const auto& basis = l.basis[static_cast<std::size_t>(k)];
                for (std::size_t j = 0; j < z.size(); ++j) {
                    if (sgn(z[j]) == 0) continue;
                    const auto [cell, rep] = basis[j];
                    const auto& space = l.cosets[static_cast<std::size_t>(k)][cell];
                    auto to = l.index[static_cast<std::size_t>(k)][cell][space.index_of(g.mul(n, rep))];
                    out[static_cast<std::size_t>(to)] = z[j];
                }
                return out;
            };
            std::vector<std::vector<BigInt>> chosen;
            if (coefficients != 0 || span.rank() == rank(in, 0)) {
                for (auto& z : kernel_basis(out)) {
                    if (span.contains(z)) continue;
                    // the new orbit cell bounds every N(H)-translate of z
                    for (auto n : normalizer) span.add(translate(z, n));
                    chosen.push_back(std::move(z));
                }
            }
            if (chosen.empty()) {
                // integral torsion only: take an SNF generator
                auto gens = homology_generators(cc, k);
                for (std::size_t i = 0; i < gens.cycles.size(); ++i)
                    if (relevant(gens.orders[i], coefficients)) {
                        chosen.push_back(gens.cycles[i]);
                        break;
                    }
            }
            if (chosen.empty()) break;
            for (const auto& z : chosen) {
                std::vector<CellTerm> terms;
                if (k >= 0) {
                    const auto& basis = l.basis[static_cast<std::size_t>(k)];
                    for (std::size_t j = 0; j < z.size(); ++j) {
                        if (sgn(z[j]) == 0) continue;
                        if (!z[j].fits_slong_p()) fail(ErrorKind::CapExceeded, "cycle coefficient exceeds 64 bits");
                        terms.push_back({basis[j].second, basis[j].first, z[j].get_si()});
                    }
                }
                res.complex.add_cell(k + 1, h, std::move(terms), provenance);
                if (++res.attached > budget)
                    fail(ErrorKind::CapExceeded, "homology killing attached more than " + std::to_string(budget) +
                                                     " cells");
            }
        }
    }
    auto cc = fixed_chain_complex(res.complex, h, true, caps).with_coefficients(coefficients);
    res.residual_degrees = nonvanishing(cc);
    res.success = res.residual_degrees.empty();
    return res;
}

// ----------------------------------------------------------- Smith checks

namespace {

std::vector<Elem> sorted_elements(const SubgroupSet& s) { return s.elements(); }

std::string describe(const FiniteGroup& g, const std::vector<Elem>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + g.label(s[i]);
    return out + "}";
}

std::vector<SubgroupSet> nontrivial_p_reps(const FiniteGroup& g, std::uint64_t p, const Caps& caps) {
    std::vector<SubgroupSet> out;
    for (auto& s : conjugacy_representatives(g, all_p_subgroups(g, p, caps)))
        if (!s.is_trivial()) out.push_back(std::move(s));
    return out;
}

}  // namespace

SmithCheck smith_acyclicity_check(const GCWComplex& x, const Caps& caps) {
    SmithCheck res;
    const auto& g = x.group();
    for (auto p : prime_factors(g.order()))
        for (const auto& k : nontrivial_p_reps(g, p, caps)) {
            ++res.checked;
            auto cc = fixed_chain_complex(x, k, true, caps).with_coefficients(p);
            auto bad = nonvanishing(cc);
            if (bad.empty()) continue;
            res.ok = false;
            res.witnesses.push_back({p, sorted_elements(k), bad});
        }
    return res;
}

// ------------------------------------------------------ designer complexes

namespace {

void require_mixed_order(const FiniteGroup& g) {
    if (g.order() <= 1 || is_prime_power(g.order()))
        fail(ErrorKind::Hypothesis, "theorem hypothesis not met: group of prime power order");
}

}  // namespace

XpResult build_X_p_report(std::shared_ptr<const FiniteGroup> gp, std::uint64_t p, const Caps& caps) {
    const auto& g = *gp;
    require_mixed_order(g);
    if (!is_prime(p) || g.order() % p != 0)
        fail(ErrorKind::Input, std::to_string(p) + " is not a prime divisor of |G|");
    auto lattice = p_intersections(g, p);
    XpResult res;
    res.d_p = lattice.d_p;

    // stage 0: G x_N(P) (Cayley complex of N(P)/P, inflated to N(P))
    auto sylow = sylow_subgroup(g, p);
    auto local = subgroup_as_group(g, g.normalizer(sylow));
    auto n = std::make_shared<const FiniteGroup>(local.group);
    std::vector<Elem> in_n;
    for (Elem e = 0; e < n->order(); ++e)
        if (sylow.contains(local.embedding[e])) in_n.push_back(e);
    auto quotient = quotient_group(*n, n->closure(in_n));
    auto w = std::make_shared<const FiniteGroup>(quotient.group);
    auto x = induce(gp, inflate(cayley_one_complex(w), n, quotient.projection), local.embedding);

    for (unsigned stage = 1; stage <= lattice.d_p; ++stage) {
        std::vector<SubgroupSet> level;
        for (std::size_t i = 0; i < lattice.nodes.size(); ++i)
            if (lattice.depth[i] == stage) level.push_back(lattice.nodes[i]);
        for (const auto& h : conjugacy_representatives(g, level)) {
            auto kill = attach_cells_to_kill(x, p, static_cast<int>(stage) + 1, h, caps,
                                             "stage " + std::to_string(stage));
            x = std::move(kill.complex);
            StageReport sr;
            sr.stage = stage;
            sr.isotropy = h.elements();
            sr.attached = kill.attached;
            sr.residual_degrees = kill.residual_degrees;
            sr.euler_obstructed = kill.euler_obstructed;
            sr.euler_before = kill.euler_before;
            sr.weyl_order = kill.weyl_order;
            res.stages.push_back(std::move(sr));
        }
    }
    res.complex = std::move(x);
    for (const auto& k : nontrivial_p_reps(g, p, caps)) {
        auto cc = fixed_chain_complex(res.complex, k, true, caps).with_coefficients(p);
        auto bad = nonvanishing(cc);
        if (!bad.empty()) res.failures.push_back({p, k.elements(), bad});
    }
    res.property3 = res.failures.empty();
    return res;
}

GCWComplex build_X_p(std::shared_ptr<const FiniteGroup> g, std::uint64_t p, const Caps& caps) {
    auto r = build_X_p_report(g, p, caps);
    if (!r.property3) {
        const auto& f = r.failures.front();
        std::string degs;
        for (auto d : f.degrees) degs += (degs.empty() ? "" : ",") + std::to_string(d);
        fail(ErrorKind::Invariant, "fixed set of " + describe(*g, f.subgroup) + " is not " + std::to_string(p) +
                                       "-acyclic (reduced homology in degrees " + degs + ")");
    }
    return std::move(r.complex);
}

XResult build_X(std::shared_ptr<const FiniteGroup> gp, const Caps& caps) {
    const auto& g = *gp;
    require_mixed_order(g);
    XResult res;
    const auto primes = prime_factors(g.order());
    std::vector<GCWComplex> parts;
    unsigned top = 0;
    for (auto p : primes) {
        res.components.push_back(build_X_p_report(gp, p, caps));
        parts.push_back(res.components.back().complex);
        top = std::max(top, res.components.back().d_p);
    }
    // a p-subgroup fixes nothing in the q-component
    res.cross_prime_free = true;
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = 0; j < primes.size(); ++j) {
            if (i == j) continue;
            for (const auto& k : nontrivial_p_reps(g, primes[i], caps)) {
                auto cc = fixed_chain_complex(parts[j], k, false, caps);
                for (int d = cc.min_degree(); d <= cc.max_degree(); ++d)
                    if (cc.dim(d) != 0) res.cross_prime_free = false;
            }
        }
    auto un = disjoint_union(parts);
    res.smith_before = smith_acyclicity_check(un, caps);
    res.dim_cap = static_cast<int>(top) + caps.extra_dims;
    res.integral = attach_cells_to_kill(un, 0, res.dim_cap, std::nullopt, caps, "free");
    res.complex = res.integral.complex;
    res.smith_after = smith_acyclicity_check(res.complex, caps);
    res.acyclic = res.integral.success && is_acyclic(expand(res.complex, true, caps));
    return res;
}

Certificate certified_upper_bound(const XResult& x) {
    Certificate cert;
    if (!x.acyclic) {
        cert.note = "X(G) is not acyclic within the dimension cap";
        return cert;
    }
    if (!x.smith_after.ok) {
        cert.note = "X(G) is not Smith acyclic";
        return cert;
    }
    const auto& g = x.complex.group();
    long long n = 0;
    for (int k = 0; k <= x.complex.dim(); ++k)
        for (const auto& c : x.complex.cells(k))
            n = std::max(n, static_cast<long long>(c.isotropy.size()) * (k + 1) - 1);
    // the full simplex is contractible, so nothing beyond it is needed
    n = std::min(n, static_cast<long long>(g.order()) - 1);
    long long q = 1;
    for (auto p : prime_factors(g.order())) q = std::max<long long>(q, static_cast<long long>(prime_part(g.order(), p).first));
    if (n > 3 * q - 1)
        fail(ErrorKind::Invariant, "certificate " + std::to_string(n) + " exceeds 3q-1 = " + std::to_string(3 * q - 1));
    cert.n = n;
    return cert;
}

Certificate certified_upper_bound(std::shared_ptr<const FiniteGroup> g, const Caps& caps) {
    if (is_prime_power(g->order())) fail(ErrorKind::Hypothesis, "certificate needs a group that is not a p-group");
    return certified_upper_bound(build_X(std::move(g), caps));
}

nlohmann::json to_json(const GCWComplex& x) {
    nlohmann::json j;
    j["group"] = x.group().name();
    j["order"] = x.group().order();
    auto& cells = j["cells"] = nlohmann::json::array();
    for (int k = 0; k <= x.dim(); ++k) {
        auto layer = nlohmann::json::array();
        for (const auto& c : x.cells(k)) {
            auto bd = nlohmann::json::array();
            for (const auto& t : c.boundary) bd.push_back({t.g, x.cells(k - 1)[t.cell].id, t.coeff});
            layer.push_back({{"id", c.id}, {"isotropy", c.isotropy.elements()}, {"provenance", c.provenance}, {"boundary", bd}});
        }
        cells.push_back(std::move(layer));
    }
    return j;
}

}  // namespace acatlab
