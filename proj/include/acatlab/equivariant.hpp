#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "acatlab/caps.hpp"
#include "acatlab/group.hpp"
#include "acatlab/homology.hpp"

namespace acatlab {

/// coeff * g.e where e is cell `cell` one dimension down.
struct CellTerm {
    Elem g = 0;
    std::uint32_t cell = 0;
    long long coeff = 0;
};

struct OrbitCell {
    std::uint32_t id = 0;
    SubgroupSet isotropy;
    std::string provenance;
    std::vector<CellTerm> boundary;  // boundary of the representative e
};

/// Chain-level G-CW complex: per dimension a list of orbit cells G/K x D^k.
/// The boundary of the representative must lie in the K-fixed part of the
/// lower skeleton (each term g.e_c has K <= g K_c g^-1), which makes the
/// equivariant extension well defined and lets fixed sets restrict.
class GCWComplex {
public:
    GCWComplex() = default;
    explicit GCWComplex(std::shared_ptr<const FiniteGroup> g) : group_(std::move(g)) {}

    const FiniteGroup& group() const { return *group_; }
    const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
    int dim() const { return static_cast<int>(cells_.size()) - 1; }
    const std::vector<OrbitCell>& cells(int k) const;
    std::size_t orbit_count() const;
    /// Sum over cells of [G:K] in degree k.
    std::size_t point_count(int k) const;

    /// Appends an orbit cell in degree k and checks cellularity and boundary
    /// of boundary on the spot. Returns its index within degree k.
    std::size_t add_cell(int k, SubgroupSet isotropy, std::vector<CellTerm> boundary, std::string provenance);

private:
    std::shared_ptr<const FiniteGroup> group_;
    std::vector<std::vector<OrbitCell>> cells_;
    std::uint32_t next_id_ = 0;
};

/// Point-level chain complex of the underlying space (basis: cosets G/K per cell).
ChainComplex expand(const GCWComplex& x, bool reduced = false, const Caps& caps = {});

/// Cellular chains of the fixed subcomplex X^H: cells gK with g^-1 H g <= K.
ChainComplex fixed_chain_complex(const GCWComplex& x, const SubgroupSet& h, bool reduced = false,
                                 const Caps& caps = {});

/// Connected free 1-dimensional complex: one vertex orbit and an edge orbit
/// s.v - v for every s != e.
GCWComplex cayley_one_complex(std::shared_ptr<const FiniteGroup> k);

/// Pull back along a surjection big -> quotient (projection[g] is the image of g).
GCWComplex inflate(const GCWComplex& x, std::shared_ptr<const FiniteGroup> big, const std::vector<Elem>& projection);

/// G x_H X for X over a group embedded in G by `embedding`.
GCWComplex induce(std::shared_ptr<const FiniteGroup> g, const GCWComplex& x, const std::vector<Elem>& embedding);

/// Cells of several complexes over the same group side by side.
GCWComplex disjoint_union(const std::vector<GCWComplex>& parts);

struct KillResult {
    GCWComplex complex;
    bool success = false;                // reduced homology of X^H vanishes up to the cap
    std::vector<int> residual_degrees;   // degrees still carrying homology
    std::size_t attached = 0;            // orbit cells added
    long long euler_before = 0;          // unreduced chi(X^H) before attaching
    std::size_t weyl_order = 1;          // |N(H)/H|
    bool euler_obstructed = false;       // chi(X^H) != 1 mod |N(H)/H|: no finite free fix exists
};

/// Greedy homology killing on X^H. Degree by degree from -1 up, cycle
/// representatives of integral homology generators (over F_p the free and
/// p-primary ones) become boundaries of new orbit cells with isotropy H.
/// Attached cells have dimension <= target_dim_cap; what is left is reported.
KillResult attach_cells_to_kill(const GCWComplex& x, Coefficients coefficients, int target_dim_cap,
                                const std::optional<SubgroupSet>& isotropy = std::nullopt, const Caps& caps = {},
                                const std::string& provenance = "attached");

struct SmithWitness {
    std::uint64_t p = 0;
    std::vector<Elem> subgroup;
    std::vector<int> degrees;  // degrees with nonzero mod-p reduced homology of the fixed set
};

struct SmithCheck {
    bool ok = true;
    std::size_t checked = 0;
    std::vector<SmithWitness> witnesses;
};

/// Fixed sets of nontrivial p-subgroups (one per conjugacy class) are p-acyclic, for every p | |G|.
SmithCheck smith_acyclicity_check(const GCWComplex& x, const Caps& caps = {});

struct StageReport {
    unsigned stage = 0;                  // attaching toward X_p(G)_stage
    std::vector<Elem> isotropy;          // representative p-intersection
    std::size_t attached = 0;
    std::vector<int> residual_degrees;
    bool euler_obstructed = false;
    long long euler_before = 0;
    std::size_t weyl_order = 1;
};

struct XpResult {
    GCWComplex complex;
    unsigned d_p = 0;
    std::vector<StageReport> stages;
    bool property3 = false;              // X^P p-acyclic for all nontrivial p-subgroups
    std::vector<SmithWitness> failures;
};

/// Runs the staged construction and reports; never throws on property failure.
XpResult build_X_p_report(std::shared_ptr<const FiniteGroup> g, std::uint64_t p, const Caps& caps = {});
/// Same, but a property failure is an ErrorKind::Invariant error naming the subgroup.
GCWComplex build_X_p(std::shared_ptr<const FiniteGroup> g, std::uint64_t p, const Caps& caps = {});

struct XResult {
    GCWComplex complex;
    std::vector<XpResult> components;
    bool cross_prime_free = false;
    SmithCheck smith_before;             // on the union of the X_p(G)
    SmithCheck smith_after;              // after the free cells
    KillResult integral;                 // free-cell killing on the union
    int dim_cap = 0;
    bool acyclic = false;
};

XResult build_X(std::shared_ptr<const FiniteGroup> g, const Caps& caps = {});

struct Certificate {
    std::optional<long long> n;
    std::string note;
};

/// Least n with |K|(k+1) <= n+1 for every k-cell with isotropy K of X(G);
/// absent unless X(G) came out acyclic and Smith acyclic.
Certificate certified_upper_bound(const XResult& x);
Certificate certified_upper_bound(std::shared_ptr<const FiniteGroup> g, const Caps& caps = {});

nlohmann::json to_json(const GCWComplex& x);

}  // namespace acatlab
