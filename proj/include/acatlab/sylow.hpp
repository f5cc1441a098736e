#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "acatlab/group.hpp"

namespace acatlab {

/// The p-intersections of G (intersections of Sylow p-subgroups) with their
/// inclusion order and Sylow depth. Nodes are sorted by decreasing size, then
/// by membership; `edges` holds covering pairs (smaller, larger) as node indices.
struct PIntersectionLattice {
    std::uint64_t prime = 0;
    std::uint64_t sylow_order = 1;  // p^s
    unsigned exponent = 0;          // s
    std::size_t num_sylows = 0;
    std::vector<SubgroupSet> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<unsigned> depth;
    unsigned d_p = 0;

    /// Index of a node equal to h, if any.
    std::optional<std::size_t> find(const SubgroupSet& h) const;
};

/// A Sylow p-subgroup by normalizer climbing; trivial when p does not divide |G|.
SubgroupSet sylow_subgroup(const FiniteGroup& g, std::uint64_t p);

/// The conjugacy class of sylow_subgroup(g, p), sorted.
std::vector<SubgroupSet> all_sylow_subgroups(const FiniteGroup& g, std::uint64_t p);

PIntersectionLattice p_intersections(const FiniteGroup& g, std::uint64_t p);

/// Maximal depth of a p-intersection containing the nontrivial p-subgroup k.
unsigned depth_of_p_subgroup(const PIntersectionLattice& lattice, const SubgroupSet& k);

/// The unique p-intersection of depth d containing k. Zero or several
/// candidates mean the uniqueness theorem failed, reported as ErrorKind::Invariant.
const SubgroupSet& unique_containing_intersection(const PIntersectionLattice& lattice, const SubgroupSet& k,
                                                  unsigned d);

bool is_p_group_order(std::size_t order, std::uint64_t p);

/// All p-subgroups of G (trivial included), via the subgroups of one Sylow
/// and conjugation. Works beyond the oracle cap as long as |P| is small.
std::vector<SubgroupSet> all_p_subgroups(const FiniteGroup& g, std::uint64_t p, const Caps& caps = {});

/// One representative (the least) per G-conjugacy class, in input order.
std::vector<SubgroupSet> conjugacy_representatives(const FiniteGroup& g, const std::vector<SubgroupSet>& subgroups);

}  // namespace acatlab
