#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acatlab/caps.hpp"
#include "acatlab/complex.hpp"
#include "acatlab/group.hpp"

namespace acatlab {

/// Number of subsets of an m-set of size 1..k, saturating at UINT64_MAX.
std::uint64_t faces_up_to(std::size_t m, std::size_t k);

/// All nonempty subsets of {0..m-1} with at most n+1 elements.
SkeletalComplex skeleton(std::size_t m, int n, const Caps& caps = {});

/// The H-fixed part of the n-skeleton on G. H acts by right translation, so a
/// fixed point has a support that is a union of cosets gH. `supports` lists
/// those unions (by size, then lexicographically); `nerve` is the same face
/// poset read as sets of cosets, vertex i being coset i of CosetSpace(G, H).
struct FixedSubcomplex {
    std::vector<Face> supports;
    SkeletalComplex nerve;
};

FixedSubcomplex fixed_subcomplex(const FiniteGroup& g, const SubgroupSet& h, int n, const Caps& caps = {});

/// Comparison of the fixed subcomplex with the lower skeleton on G/H.
struct FixedPointIso {
    int target_dim = -1;          // floor((n+1)/|H|) - 1
    std::size_t faces = 0;
    std::size_t equivariance_checks = 0;
    bool verified = false;
    std::string failure;          // empty when verified
    Face counterexample;          // offending support, if any
};

FixedPointIso verify_fixed_point_formula(const FiniteGroup& g, const SubgroupSet& h, int n, const Caps& caps = {});

/// Homological connectivity: the largest c with reduced integral homology
/// zero in every degree <= c. Empty is -2, nonempty disconnected -1.
struct Connectivity {
    enum class Kind { Finite, FullSimplex, Acyclic };
    Kind kind = Kind::Finite;
    int value = -2;  // meaningful for Finite; for Acyclic the complex dimension
    std::string str() const;
    friend bool operator==(const Connectivity&, const Connectivity&) = default;
};

Connectivity connectivity(const SkeletalComplex& complex, const Caps& caps = {});

}  // namespace acatlab
