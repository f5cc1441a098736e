#include "acatlab/sylow.hpp"

#include <algorithm>
#include <set>

#include "acatlab/error.hpp"

namespace acatlab {

bool is_p_group_order(std::size_t order, std::uint64_t p) {
    while (order % p == 0) order /= p;
    return order == 1;
}

namespace {

void require_prime(std::uint64_t p) {
    if (!is_prime(p)) fail(ErrorKind::Input, std::to_string(p) + " is not prime");
}

// Smallest m >= 1 with y^m in h.
std::size_t order_modulo(const FiniteGroup& g, const SubgroupSet& h, Elem y) {
    std::size_t m = 1;
    for (Elem x = y; !h.contains(x); x = g.mul(x, y)) ++m;
    return m;
}

}  // namespace

SubgroupSet sylow_subgroup(const FiniteGroup& g, std::uint64_t p) {
    require_prime(p);
    const auto [target, s] = prime_part(g.order(), p);
    SubgroupSet current = g.trivial_subgroup();
    while (current.size() < target) {
        // A p-element of N(P) outside P extends P; Sylow theory guarantees one
        // exists while P is not yet Sylow.
        auto n = g.normalizer(current);
        bool grown = false;
        for (auto y : n.elements()) {
            if (current.contains(y)) continue;
            if (!is_p_group_order(order_modulo(g, current, y), p)) continue;
            auto gens = g.generators_of(current);
            gens.push_back(y);
            current = g.closure(gens);
            grown = true;
            break;
        }
        if (!grown) fail(ErrorKind::Invariant, "normalizer climbing stalled below the Sylow order");
    }
    return current;
}

std::vector<SubgroupSet> all_sylow_subgroups(const FiniteGroup& g, std::uint64_t p) {
    auto p0 = sylow_subgroup(g, p);
    std::set<SubgroupSet> found;
    for (Elem x = 0; x < g.order(); ++x) found.insert(g.conjugate(p0, x));
    std::vector<SubgroupSet> out(found.begin(), found.end());
    if (out.size() % p != 1 % p || g.order() % out.size() != 0)
        fail(ErrorKind::Invariant, "Sylow count " + std::to_string(out.size()) + " violates Sylow's theorems");
    return out;
}

std::optional<std::size_t> PIntersectionLattice::find(const SubgroupSet& h) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == h) return i;
    return std::nullopt;
}

PIntersectionLattice p_intersections(const FiniteGroup& g, std::uint64_t p) {
    require_prime(p);
    PIntersectionLattice lat;
    lat.prime = p;
    std::tie(lat.sylow_order, lat.exponent) = prime_part(g.order(), p);
    if (lat.exponent == 0) return lat;

    auto sylows = all_sylow_subgroups(g, p);
    lat.num_sylows = sylows.size();
    std::set<SubgroupSet> closed(sylows.begin(), sylows.end());
    std::vector<SubgroupSet> frontier(sylows.begin(), sylows.end());
    while (!frontier.empty()) {
        std::vector<SubgroupSet> next;
        std::vector<SubgroupSet> snapshot(closed.begin(), closed.end());
        for (const auto& a : frontier)
            for (const auto& b : snapshot) {
                auto c = g.intersect(a, b);
                if (closed.insert(c).second) next.push_back(c);
            }
        frontier = std::move(next);
    }
    lat.nodes.assign(closed.begin(), closed.end());
    std::stable_sort(lat.nodes.begin(), lat.nodes.end(),
                     [](const SubgroupSet& a, const SubgroupSet& b) { return a.size() > b.size(); });

    const std::size_t n = lat.nodes.size();
    auto proper = [&](std::size_t i, std::size_t j) {  // nodes[i] < nodes[j]
        return lat.nodes[i].size() < lat.nodes[j].size() && lat.nodes[i].subgroup_of(lat.nodes[j]);
    };
    // Longest chain up to a Sylow; larger nodes come first, so their depth is final.
    lat.depth.assign(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (proper(i, j)) lat.depth[i] = std::max(lat.depth[i], lat.depth[j] + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!proper(i, j)) continue;
            bool covering = true;
            for (std::size_t k = 0; k < n && covering; ++k) covering = !(proper(i, k) && proper(k, j));
            if (covering) lat.edges.emplace_back(i, j);
        }
    lat.d_p = *std::max_element(lat.depth.begin(), lat.depth.end());
    return lat;
}

unsigned depth_of_p_subgroup(const PIntersectionLattice& lattice, const SubgroupSet& k) {
    if (k.is_trivial() || !is_p_group_order(k.size(), lattice.prime))
        fail(ErrorKind::Input, "depth is defined for nontrivial " + std::to_string(lattice.prime) + "-subgroups");
    unsigned best = 0;
    for (std::size_t i = 0; i < lattice.nodes.size(); ++i)
        if (k.subgroup_of(lattice.nodes[i])) best = std::max(best, lattice.depth[i]);
    if (best == 0) fail(ErrorKind::Input, "subgroup lies in no Sylow subgroup of this lattice");
    return best;
}

const SubgroupSet& unique_containing_intersection(const PIntersectionLattice& lattice, const SubgroupSet& k,
                                                  unsigned d) {
    const SubgroupSet* found = nullptr;
    std::size_t count = 0;
    for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
        if (lattice.depth[i] == d && k.subgroup_of(lattice.nodes[i])) {
            found = &lattice.nodes[i];
            ++count;
        }
    }
    if (count != 1)
        fail(ErrorKind::Invariant, std::to_string(count) + " p-intersections of depth " + std::to_string(d) +
                                       " contain the subgroup (expected exactly one)");
    return *found;
}

std::vector<SubgroupSet> all_p_subgroups(const FiniteGroup& g, std::uint64_t p, const Caps& caps) {
    auto sylow = sylow_subgroup(g, p);
    auto local = subgroup_as_group(g, sylow);
    Caps c = caps;
    c.oracle_order = std::max<std::size_t>(c.oracle_order, 64);
    auto subs = all_subgroups(local.group, c);
    std::set<SubgroupSet> found;
    for (const auto& s : subs) {
        std::vector<Elem> gens;
        for (auto x : s.elements()) gens.push_back(local.embedding[x]);
        auto h = g.closure(gens);
        for (Elem x = 0; x < g.order(); ++x) found.insert(g.conjugate(h, x));
    }
    std::vector<SubgroupSet> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

std::vector<SubgroupSet> conjugacy_representatives(const FiniteGroup& g, const std::vector<SubgroupSet>& subgroups) {
    std::set<SubgroupSet> seen;
    std::vector<SubgroupSet> reps;
    for (const auto& h : subgroups) {
        if (seen.count(h)) continue;
        std::set<SubgroupSet> cls;
        for (Elem x = 0; x < g.order(); ++x) cls.insert(g.conjugate(h, x));
        reps.push_back(*cls.begin());
        seen.insert(cls.begin(), cls.end());
    }
    return reps;
}

}  // namespace acatlab
