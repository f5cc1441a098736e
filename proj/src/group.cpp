#include "acatlab/group.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "acatlab/error.hpp"

namespace acatlab {

// ---------------------------------------------------------------- ElementSet

ElementSet::ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

std::size_t ElementSet::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::vector<Elem> ElementSet::elements() const {
    std::vector<Elem> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto bits = words_[w];
        while (bits) {
            auto b = static_cast<unsigned>(std::countr_zero(bits));
            out.push_back(static_cast<Elem>(w * 64 + b));
            bits &= bits - 1;
        }
    }
    return out;
}

bool ElementSet::subset_of(const ElementSet& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & ~other.words_[w]) return false;
    return true;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
    ElementSet r = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= other.words_[w];
    return r;
}

ElementSet ElementSet::operator|(const ElementSet& other) const {
    ElementSet r = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] |= other.words_[w];
    return r;
}

SubgroupSet::SubgroupSet(ElementSet members) : members_(std::move(members)), size_(members_.count()) {
    if (size_ == 0 || !members_.contains(0) || members_.universe() % size_ != 0)
        fail(ErrorKind::Invariant, "subgroup of size " + std::to_string(size_) + " violates Lagrange in order " +
                                       std::to_string(members_.universe()));
}

// ------------------------------------------------------------ number theory

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::pair<std::uint64_t, unsigned> prime_part(std::uint64_t n, std::uint64_t p) {
    std::uint64_t part = 1;
    unsigned s = 0;
    while (n % p == 0) {
        n /= p;
        part *= p;
        ++s;
    }
    return {part, s};
}

bool is_prime_power(std::uint64_t n) { return n > 1 && prime_factors(n).size() == 1; }

// ------------------------------------------------------------- validation

namespace {

std::string triple(Elem a, Elem b, Elem c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

// Checks identity `e`, inverses and associativity. Element names in messages
// are the indices of the table as given.
void check_axioms_with_identity(std::size_t n, std::span<const Elem> t, Elem e, const Caps& caps) {
    auto m = [&](Elem a, Elem b) { return t[static_cast<std::size_t>(a) * n + b]; };
    for (Elem g = 0; g < n; ++g) {
        if (m(e, g) != g || m(g, e) != g)
            fail(ErrorKind::Input, "element " + std::to_string(e) + " is not a two-sided identity");
    }
    for (Elem g = 0; g < n; ++g) {
        bool found = false;
        for (Elem h = 0; h < n && !found; ++h) found = m(g, h) == e && m(h, g) == e;
        if (!found) fail(ErrorKind::Input, "no inverse for element " + std::to_string(g));
    }
    auto check = [&](Elem a, Elem b, Elem c) {
        if (m(m(a, b), c) != m(a, m(b, c))) fail(ErrorKind::Input, "not associative at " + triple(a, b, c));
    };
    if (n <= caps.assoc_full) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c) check(a, b, c);
    } else {
        std::mt19937_64 rng(caps.seed);
        std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
        for (std::size_t i = 0; i < caps.assoc_samples; ++i) check(pick(rng), pick(rng), pick(rng));
    }
}

std::string cycle_notation(const Permutation& p) {
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == i) continue;
        out += "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out += " ";
            out += std::to_string(j + 1);
            first = false;
            j = p[j];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

}  // namespace

void check_group_axioms(std::size_t order, std::span<const Elem> table, const Caps& caps) {
    if (table.size() != order * order) fail(ErrorKind::Input, "table is not square");
    for (auto x : table)
        if (x >= order) fail(ErrorKind::Input, "table entry " + std::to_string(x) + " out of range");
    check_axioms_with_identity(order, table, 0, caps);
}

FiniteGroup make_group(std::size_t order, std::vector<Elem> table, std::vector<std::string> labels,
                       std::string name) {
    check_group_axioms(order, table);
    FiniteGroup g;
    g.order_ = order;
    g.mul_ = std::move(table);
    g.inv_.assign(order, 0);
    for (Elem a = 0; a < order; ++a)
        for (Elem b = 0; b < order; ++b)
            if (g.mul(a, b) == 0) {
                g.inv_[a] = b;
                break;
            }
    g.labels_ = std::move(labels);
    g.name_ = std::move(name);
    g.finish_labels();
    return g;
}

void FiniteGroup::finish_labels() {
    if (labels_.size() != order_) {
        labels_.resize(order_);
        for (std::size_t i = 0; i < order_; ++i) labels_[i] = i == 0 ? "e" : std::to_string(i);
    }
}

// ----------------------------------------------------------- constructors

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& generators, const Caps& caps) {
    std::size_t degree = generators.empty() ? 0 : generators.front().size();
    for (const auto& p : generators) {
        if (p.size() != degree) fail(ErrorKind::Input, "generators act on different ground sets");
        std::vector<bool> hit(degree, false);
        for (auto x : p) {
            if (x >= degree || hit[x]) fail(ErrorKind::Input, "malformed permutation: image " + std::to_string(x + 1) +
                                                          " repeated or outside 1.." + std::to_string(degree));
            hit[x] = true;
        }
    }
    Permutation id(degree);
    std::iota(id.begin(), id.end(), 0u);
    auto compose = [degree](const Permutation& a, const Permutation& b) {  // a after b
        Permutation r(degree);
        for (std::size_t i = 0; i < degree; ++i) r[i] = a[b[i]];
        return r;
    };

    std::set<Permutation> seen{id};
    std::vector<Permutation> queue{id};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& s : generators) {
            auto next = compose(queue[head], s);
            if (seen.insert(next).second) {
                if (seen.size() > caps.order)
                    fail(ErrorKind::CapExceeded, "order cap exceeded (" + std::to_string(caps.order) + ")");
                queue.push_back(std::move(next));
            }
        }
    }
    std::vector<Permutation> elems(seen.begin(), seen.end());  // lexicographic, identity first
    std::map<Permutation, Elem> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<Elem>(i));

    const std::size_t n = elems.size();
    std::vector<Elem> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elems[a], elems[b]));
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& p : elems) labels.push_back(cycle_notation(p));
    return make_group(n, std::move(table), std::move(labels), "");
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<std::uint32_t>>& table,
                                           const Caps& caps) {
    const std::size_t n = table.size();
    if (n == 0) fail(ErrorKind::Input, "empty Cayley table");
    if (n > caps.order) fail(ErrorKind::CapExceeded, "order cap exceeded (" + std::to_string(caps.order) + ")");
    std::vector<Elem> flat;
    flat.reserve(n * n);
    for (const auto& row : table) {
        if (row.size() != n) fail(ErrorKind::Input, "Cayley table is not square");
        for (auto x : row) {
            if (x >= n) fail(ErrorKind::Input, "table entry " + std::to_string(x) + " out of range");
            flat.push_back(x);
        }
    }
    std::optional<Elem> identity;
    for (Elem e = 0; e < n && !identity; ++e) {
        bool ok = true;
        for (Elem g = 0; g < n && ok; ++g) ok = flat[e * n + g] == g && flat[g * n + e] == g;
        if (ok) identity = e;
    }
    if (!identity) fail(ErrorKind::Input, "no identity element");
    check_axioms_with_identity(n, flat, *identity, caps);

    // swap indices 0 and identity
    auto relabel = [e = *identity](Elem x) -> Elem { return x == e ? 0 : (x == 0 ? e : x); };
    std::vector<Elem> moved(n * n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) moved[relabel(a) * n + relabel(b)] = relabel(flat[a * n + b]);
    std::vector<std::string> labels(n);
    for (Elem a = 0; a < n; ++a) labels[relabel(a)] = std::to_string(a);
    return make_group(n, std::move(moved), std::move(labels), "");
}

// ------------------------------------------------------------- subgroups

std::size_t FiniteGroup::element_order(Elem g) const {
    std::size_t k = 1;
    for (Elem x = g; x != 0; x = mul(x, g)) ++k;
    return k;
}

SubgroupSet FiniteGroup::trivial_subgroup() const {
    ElementSet s(order_);
    s.insert(0);
    return SubgroupSet(std::move(s));
}

SubgroupSet FiniteGroup::whole() const {
    ElementSet s(order_);
    for (Elem g = 0; g < order_; ++g) s.insert(g);
    return SubgroupSet(std::move(s));
}

SubgroupSet FiniteGroup::closure(std::span<const Elem> seed) const {
    ElementSet s(order_);
    s.insert(0);
    std::vector<Elem> gens;
    for (auto g : seed)
        if (g != 0) gens.push_back(g);
    std::vector<Elem> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (auto g : gens) {
            Elem x = mul(queue[head], g);
            if (!s.contains(x)) {
                s.insert(x);
                queue.push_back(x);
            }
        }
    }
    return SubgroupSet(std::move(s));
}

SubgroupSet FiniteGroup::closure(std::initializer_list<Elem> seed) const {
    return closure(std::span<const Elem>(seed.begin(), seed.size()));
}

SubgroupSet FiniteGroup::intersect(const SubgroupSet& a, const SubgroupSet& b) const {
    return SubgroupSet(a.members() & b.members());
}

SubgroupSet FiniteGroup::join(const SubgroupSet& a, const SubgroupSet& b) const {
    auto gens = generators_of(a);
    auto more = generators_of(b);
    gens.insert(gens.end(), more.begin(), more.end());
    return closure(gens);
}

SubgroupSet FiniteGroup::conjugate(const SubgroupSet& h, Elem g) const {
    ElementSet s(order_);
    for (auto x : h.elements()) s.insert(conj(g, x));
    return SubgroupSet(std::move(s));
}

std::vector<Elem> FiniteGroup::generators_of(const SubgroupSet& h) const {
    std::vector<Elem> gens;
    SubgroupSet current = trivial_subgroup();
    for (auto x : h.elements()) {
        if (current.contains(x)) continue;
        gens.push_back(x);
        current = closure(gens);
        if (current.size() == h.size()) break;
    }
    return gens;
}

SubgroupSet FiniteGroup::normalizer(const SubgroupSet& h) const {
    auto gens = generators_of(h);
    ElementSet s(order_);
    for (Elem g = 0; g < order_; ++g) {
        bool ok = true;
        for (auto x : gens) {
            if (!h.contains(conj(g, x))) {
                ok = false;
                break;
            }
        }
        if (ok) s.insert(g);
    }
    return SubgroupSet(std::move(s));
}

bool FiniteGroup::is_normal(const SubgroupSet& h) const { return normalizer(h).size() == order_; }

CosetSpace::CosetSpace(const FiniteGroup& g, const SubgroupSet& k) : index_(g.order(), UINT32_MAX) {
    auto members = k.elements();
    for (Elem x = 0; x < g.order(); ++x) {
        if (index_[x] != UINT32_MAX) continue;
        auto idx = static_cast<std::uint32_t>(reps_.size());
        reps_.push_back(x);
        for (auto y : members) index_[g.mul(x, y)] = idx;
    }
}

Quotient quotient_group(const FiniteGroup& g, const SubgroupSet& n) {
    auto gens = g.generators_of(n);
    for (Elem x = 0; x < g.order(); ++x)
        for (auto y : gens)
            if (!n.contains(g.conj(x, y)))
                fail(ErrorKind::Input, "subgroup is not normal: conjugating by " + g.label(x) + " moves " + g.label(y));
    CosetSpace cosets(g, n);
    const std::size_t m = cosets.size();
    std::vector<Elem> table(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            table[a * m + b] = static_cast<Elem>(cosets.index_of(g.mul(cosets.rep(a), cosets.rep(b))));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < m; ++a) labels.push_back(a == 0 ? "e" : g.label(cosets.rep(a)) + "N");
    Quotient q{make_group(m, std::move(table), std::move(labels), g.name().empty() ? "" : g.name() + "/N"), {}};
    q.projection.resize(g.order());
    for (Elem x = 0; x < g.order(); ++x) q.projection[x] = static_cast<Elem>(cosets.index_of(x));
    return q;
}

Embedded subgroup_as_group(const FiniteGroup& g, const SubgroupSet& h) {
    auto elems = h.elements();
    std::vector<Elem> local(g.order(), UINT32_MAX);
    for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<Elem>(i);
    const std::size_t m = elems.size();
    std::vector<Elem> table(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) table[a * m + b] = local[g.mul(elems[a], elems[b])];
    std::vector<std::string> labels;
    for (auto x : elems) labels.push_back(g.label(x));
    return {make_group(m, std::move(table), std::move(labels), ""), elems};
}

std::vector<SubgroupSet> all_subgroups(const FiniteGroup& g, const Caps& caps, bool force) {
    if (!force && g.order() > caps.oracle_order)
        fail(ErrorKind::CapExceeded, "subgroup enumeration oracle is limited to order " +
                                         std::to_string(caps.oracle_order));
    std::set<SubgroupSet> found;
    std::vector<SubgroupSet> list;
    for (Elem x = 0; x < g.order(); ++x) {
        auto c = g.closure({x});
        if (found.insert(c).second) list.push_back(c);
    }
    // joins of pairs until nothing new appears
    for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (list[j].subgroup_of(list[i]) || list[i].subgroup_of(list[j])) continue;
            auto c = g.join(list[i], list[j]);
            if (found.insert(c).second) list.push_back(c);
        }
    }
    std::vector<SubgroupSet> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

// --------------------------------------------------------------- catalog

FiniteGroup cyclic_group(std::size_t n) {
    std::vector<Elem> t(n * n);
    std::vector<std::string> labels(n);
    for (std::size_t a = 0; a < n; ++a) {
        labels[a] = a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a));
        for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>((a + b) % n);
    }
    return make_group(n, std::move(t), std::move(labels), "C" + std::to_string(n));
}

FiniteGroup dihedral_group(std::size_t n) {
    // r^i s^j at index i + n j; s r s = r^-1
    const std::size_t m = 2 * n;
    std::vector<Elem> t(m * m);
    std::vector<std::string> labels(m);
    for (std::size_t x = 0; x < m; ++x) {
        std::size_t a = x % n, b = x / n;
        std::string r = a == 0 ? "" : (a == 1 ? "r" : "r^" + std::to_string(a));
        labels[x] = x == 0 ? "e" : r + (b ? "s" : "");
        for (std::size_t y = 0; y < m; ++y) {
            std::size_t c = y % n, d = y / n;
            std::size_t i = b ? (a + n - c) % n : (a + c) % n;
            t[x * m + y] = static_cast<Elem>(i + n * ((b + d) % 2));
        }
    }
    return make_group(m, std::move(t), std::move(labels), "D" + std::to_string(n));
}

FiniteGroup symmetric_group(std::size_t n, const Caps& caps) {
    std::vector<Permutation> gens;
    if (n >= 2) {
        Permutation swap(n), cycle(n);
        std::iota(swap.begin(), swap.end(), 0u);
        std::swap(swap[0], swap[1]);
        for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
        gens = {swap, cycle};
    }
    auto g = FiniteGroup::from_permutations(gens, caps);
    g.set_name("S" + std::to_string(n));
    return g;
}

FiniteGroup alternating_group(std::size_t n, const Caps& caps) {
    std::vector<Permutation> gens;
    for (std::size_t i = 2; i < n; ++i) {
        Permutation p(n);
        std::iota(p.begin(), p.end(), 0u);
        p[0] = 1;
        p[1] = static_cast<std::uint32_t>(i);
        p[i] = 0;
        gens.push_back(p);
    }
    auto g = FiniteGroup::from_permutations(gens, caps);
    g.set_name("A" + std::to_string(n));
    return g;
}

FiniteGroup quaternion_group() {
    // index 2u + sign, units u = 1, i, j, k
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<Elem> t(64);
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int u = x / 2, v = y / 2;
            int s = (x % 2) ^ (y % 2) ^ sign[u][v];
            t[x * 8 + y] = static_cast<Elem>(2 * unit[u][v] + s);
        }
    return make_group(8, std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, "Q8");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::size_t na = a.order(), nb = b.order(), n = na * nb;
    std::vector<Elem> t(n * n);
    std::vector<std::string> labels(n);
    for (std::size_t x = 0; x < n; ++x) {
        labels[x] = x == 0 ? "e" : "(" + a.label(static_cast<Elem>(x / nb)) + "," + b.label(static_cast<Elem>(x % nb)) + ")";
        for (std::size_t y = 0; y < n; ++y)
            t[x * n + y] = static_cast<Elem>(a.mul(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb)) * nb +
                                             b.mul(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb)));
    }
    return make_group(n, std::move(t), std::move(labels), a.name() + "x" + b.name());
}

namespace {

FiniteGroup catalog_factor(const std::string& tok, const Caps& caps) {
    if (tok.size() < 2 || !std::isalpha(static_cast<unsigned char>(tok[0])))
        fail(ErrorKind::Input, "unknown group name '" + tok + "'");
    char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    std::size_t n = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) fail(ErrorKind::Input, "unknown group name '" + tok + "'");
        n = n * 10 + static_cast<std::size_t>(tok[i] - '0');
        if (n > 1'000'000) fail(ErrorKind::CapExceeded, "order cap exceeded (" + std::to_string(caps.order) + ")");
    }
    auto check = [&](std::size_t order) {
        if (order > caps.order) fail(ErrorKind::CapExceeded, "order cap exceeded (" + std::to_string(caps.order) + ")");
    };
    switch (kind) {
        case 'C':
            if (n < 1) break;
            check(n);
            return cyclic_group(n);
        case 'D':
            if (n < 1) break;
            check(2 * n);
            return dihedral_group(n);
        case 'S': {
            if (n < 1) break;
            std::size_t f = 1;
            for (std::size_t i = 2; i <= n && f <= caps.order; ++i) f *= i;
            check(f);
            return symmetric_group(n, caps);
        }
        case 'A': {
            if (n < 1) break;
            std::size_t f = 1;
            for (std::size_t i = 3; i <= n && f <= caps.order; ++i) f *= i;
            check(f);
            return alternating_group(n, caps);
        }
        case 'Q':
            if (n == 8) return quaternion_group();
            break;
        default:
            break;
    }
    fail(ErrorKind::Input, "unknown group name '" + tok + "'");
}

}  // namespace

FiniteGroup catalog(const std::string& name, const Caps& caps) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : name) {
        if (c == 'x' || c == 'X' || c == '*') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    parts.push_back(cur);
    std::size_t total = 1;
    std::vector<FiniteGroup> factors;
    for (const auto& p : parts) {
        factors.push_back(catalog_factor(p, caps));
        total *= factors.back().order();
        if (total > caps.order) fail(ErrorKind::CapExceeded, "order cap exceeded (" + std::to_string(caps.order) + ")");
    }
    FiniteGroup g = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, factors[i]);
    std::string canonical;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) canonical += "x";
        canonical += static_cast<char>(std::toupper(static_cast<unsigned char>(parts[i][0])));
        canonical += parts[i].substr(1);
    }
    g.set_name(canonical);
    return g;
}

std::vector<std::string> catalog_names(std::size_t max_order) {
    struct Entry {
        std::size_t order;
        std::string name;
    };
    std::vector<Entry> all;
    for (std::size_t n = 2; n <= max_order; ++n) all.push_back({n, "C" + std::to_string(n)});
    all.push_back({6, "S3"});
    for (std::size_t n = 4; 2 * n <= max_order; ++n) all.push_back({2 * n, "D" + std::to_string(n)});
    const std::vector<Entry> sporadic = {
        {8, "Q8"},         {12, "A4"},         {24, "S4"},          {60, "A5"},       {120, "S5"},
        {4, "C2xC2"},      {8, "C2xC4"},       {8, "C2xC2xC2"},     {9, "C3xC3"},     {12, "C2xC6"},
        {16, "C4xC4"},     {16, "C2xC8"},      {16, "C2xC2xC4"},    {16, "C2xQ8"},    {16, "C2xD4"},
        {18, "C3xC6"},     {18, "C3xS3"},      {20, "C2xC10"},      {24, "C2xA4"},    {24, "C3xQ8"},
        {24, "C3xD4"},     {24, "C2xC2xS3"},   {27, "C3xC9"},       {36, "S3xS3"},    {36, "C3xA4"},
        {36, "C6xC6"},     {40, "C2xD10"},     {48, "C2xS4"},       {60, "C5xA4"},    {60, "C3xD10"},
    };
    for (const auto& e : sporadic) all.push_back(e);
    std::stable_sort(all.begin(), all.end(), [](const Entry& a, const Entry& b) { return a.order < b.order; });
    std::vector<std::string> out;
    for (const auto& e : all)
        if (e.order <= max_order) out.push_back(e.name);
    return out;
}

FiniteGroup group_from_spec(const std::string& json_text, const Caps& caps) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Input, std::string("group spec is not valid JSON: ") + e.what());
    }
    try {
        const auto type = j.at("type").get<std::string>();
        if (type == "catalog") return catalog(j.at("name").get<std::string>(), caps);
        if (type == "cyclic") {
            auto n = j.at("n").get<long long>();
            if (n < 1) fail(ErrorKind::Input, "cyclic group needs n >= 1");
            if (static_cast<std::size_t>(n) > caps.order)
                fail(ErrorKind::CapExceeded, "order cap exceeded (" + std::to_string(caps.order) + ")");
            return cyclic_group(static_cast<std::size_t>(n));
        }
        if (type == "permutation") {
            std::vector<Permutation> gens;
            for (const auto& row : j.at("generators")) {
                Permutation p;
                for (const auto& v : row) {
                    auto x = v.get<long long>();
                    if (x < 1) fail(ErrorKind::Input, "permutation images are 1-based");
                    p.push_back(static_cast<std::uint32_t>(x - 1));
                }
                gens.push_back(std::move(p));
            }
            return FiniteGroup::from_permutations(gens, caps);
        }
        if (type == "cayley") {
            auto table = j.at("table").get<std::vector<std::vector<long long>>>();
            std::vector<std::vector<std::uint32_t>> t;
            for (const auto& row : table) {
                std::vector<std::uint32_t> r;
                for (auto v : row) {
                    if (v < 0) fail(ErrorKind::Input, "negative table entry");
                    r.push_back(static_cast<std::uint32_t>(v));
                }
                t.push_back(std::move(r));
            }
            return FiniteGroup::from_cayley_table(t, caps);
        }
        fail(ErrorKind::Input, "unknown group spec type '" + type + "'");
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Input, std::string("malformed group spec: ") + e.what());
    }
}

}  // namespace acatlab
