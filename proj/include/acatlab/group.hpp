#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "acatlab/caps.hpp"

namespace acatlab {

using Elem = std::uint32_t;

/// Dense membership set over the elements 0..order-1 of a fixed group.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe);

    std::size_t universe() const { return universe_; }
    bool contains(Elem g) const { return (words_[g >> 6] >> (g & 63)) & 1u; }
    void insert(Elem g) { words_[g >> 6] |= std::uint64_t{1} << (g & 63); }
    void erase(Elem g) { words_[g >> 6] &= ~(std::uint64_t{1} << (g & 63)); }
    std::size_t count() const;
    std::vector<Elem> elements() const;

    bool subset_of(const ElementSet& other) const;
    ElementSet operator&(const ElementSet& other) const;
    ElementSet operator|(const ElementSet& other) const;

    friend bool operator==(const ElementSet&, const ElementSet&) = default;
    friend auto operator<=>(const ElementSet& a, const ElementSet& b) { return a.words_ <=> b.words_; }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// A subgroup of some FiniteGroup, stored as its membership set. Only the
/// group operations below construct these, so closure holds by construction.
class SubgroupSet {
public:
    SubgroupSet() = default;

    const ElementSet& members() const { return members_; }
    bool contains(Elem g) const { return members_.contains(g); }
    std::size_t size() const { return size_; }
    std::vector<Elem> elements() const { return members_.elements(); }
    bool is_trivial() const { return size_ == 1; }
    bool subgroup_of(const SubgroupSet& other) const { return members_.subset_of(other.members_); }

    friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) { return a.members_ == b.members_; }
    friend auto operator<=>(const SubgroupSet& a, const SubgroupSet& b) { return a.members_ <=> b.members_; }

private:
    friend class FiniteGroup;
    explicit SubgroupSet(ElementSet members);

    ElementSet members_;
    std::size_t size_ = 0;
};

/// A permutation in one-line notation on 0..degree-1.
using Permutation = std::vector<std::uint32_t>;

class FiniteGroup {
public:
    /// Group generated by permutations of a common ground set, elements
    /// sorted lexicographically (identity first), labelled in cycle notation.
    static FiniteGroup from_permutations(const std::vector<Permutation>& generators, const Caps& caps = {});

    /// Validated group from a Cayley table. The identity is moved to index 0.
    static FiniteGroup from_cayley_table(const std::vector<std::vector<std::uint32_t>>& table,
                                         const Caps& caps = {});

    std::size_t order() const { return order_; }
    Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
    Elem inv(Elem a) const { return inv_[a]; }
    Elem conj(Elem g, Elem h) const { return mul(mul(g, h), inv(g)); }  // g h g^-1
    const std::string& label(Elem g) const { return labels_[g]; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    std::size_t element_order(Elem g) const;

    SubgroupSet trivial_subgroup() const;
    SubgroupSet whole() const;
    SubgroupSet closure(std::span<const Elem> seed) const;
    SubgroupSet closure(std::initializer_list<Elem> seed) const;
    SubgroupSet intersect(const SubgroupSet& a, const SubgroupSet& b) const;
    SubgroupSet join(const SubgroupSet& a, const SubgroupSet& b) const;
    SubgroupSet conjugate(const SubgroupSet& h, Elem g) const;  // g H g^-1
    SubgroupSet normalizer(const SubgroupSet& h) const;
    bool is_normal(const SubgroupSet& h) const;

    /// Minimal generating set by greedy closure (deterministic).
    std::vector<Elem> generators_of(const SubgroupSet& h) const;

private:
    FiniteGroup() = default;
    void finish_labels();

    std::size_t order_ = 0;
    std::vector<Elem> mul_;
    std::vector<Elem> inv_;
    std::vector<std::string> labels_;
    std::string name_;

    friend FiniteGroup make_group(std::size_t, std::vector<Elem>, std::vector<std::string>, std::string);
};

/// Assemble a group from an already-trusted table with identity at 0
/// (used by the catalog and the quotient construction; still validated).
FiniteGroup make_group(std::size_t order, std::vector<Elem> table, std::vector<std::string> labels,
                       std::string name);

/// Validate the group axioms on a flat table with identity at index 0.
void check_group_axioms(std::size_t order, std::span<const Elem> table, const Caps& caps = {});

struct Quotient {
    FiniteGroup group;
    std::vector<Elem> projection;  // element of G -> coset index in the quotient
};

/// G/N; throws ErrorKind::Input naming a conjugator if N is not normal.
Quotient quotient_group(const FiniteGroup& g, const SubgroupSet& n);

/// A subgroup as a group in its own right, with the embedding into G.
struct Embedded {
    FiniteGroup group;
    std::vector<Elem> embedding;  // element of the subgroup -> element of G
};
Embedded subgroup_as_group(const FiniteGroup& g, const SubgroupSet& h);

/// Left coset space G/K with coset representatives (the least element of each coset).
class CosetSpace {
public:
    CosetSpace(const FiniteGroup& g, const SubgroupSet& k);
    std::size_t size() const { return reps_.size(); }
    Elem rep(std::size_t i) const { return reps_[i]; }
    std::size_t index_of(Elem g) const { return index_[g]; }

private:
    std::vector<Elem> reps_;
    std::vector<std::uint32_t> index_;
};

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t n);  // order 2n
FiniteGroup symmetric_group(std::size_t n, const Caps& caps = {});
FiniteGroup alternating_group(std::size_t n, const Caps& caps = {});
FiniteGroup quaternion_group();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Named groups: C<n>, D<n>, S<n>, A<n>, Q8 and products joined by 'x'.
FiniteGroup catalog(const std::string& name, const Caps& caps = {});

/// Deterministic list of catalog names with 2 <= order <= max_order.
std::vector<std::string> catalog_names(std::size_t max_order);

/// Group-spec JSON (catalog | cyclic | permutation | cayley).
FiniteGroup group_from_spec(const std::string& json_text, const Caps& caps = {});

/// Every subgroup of G (closure of cyclic subgroups under joins), sorted.
/// Throws ErrorKind::CapExceeded above caps.oracle_order unless force is set.
std::vector<SubgroupSet> all_subgroups(const FiniteGroup& g, const Caps& caps = {}, bool force = false);

std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_prime(std::uint64_t n);
/// (p^s, s) with p^s the largest power of p dividing n.
std::pair<std::uint64_t, unsigned> prime_part(std::uint64_t n, std::uint64_t p);
bool is_prime_power(std::uint64_t n);

}  // namespace acatlab
