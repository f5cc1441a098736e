#pragma once
// Brute-force references shared by the unit tests. Deliberately naive: subsets,
// permutations and minors, nothing borrowed from the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "acatlab/group.hpp"

namespace oracle {

using acatlab::Elem;
using acatlab::FiniteGroup;
using Set = std::vector<Elem>;  // sorted

inline Elem by_label(const FiniteGroup& g, const std::string& label) {
    for (Elem x = 0; x < g.order(); ++x)
        if (g.label(x) == label) return x;
    throw std::runtime_error("no element " + label);
}

inline Set sorted(Set s) {
    std::sort(s.begin(), s.end());
    return s;
}

// Order of the group generated by permutations (0-based images), BFS on words.
inline std::size_t permutation_closure_order(const std::vector<std::vector<int>>& gens) {
    std::set<std::vector<int>> seen;
    std::vector<int> id(gens.front().size());
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> todo{id};
    seen.insert(id);
    while (!todo.empty()) {
        auto p = todo.back();
        todo.pop_back();
        for (const auto& s : gens) {
            std::vector<int> q(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) q[i] = s[p[i]];
            if (seen.insert(q).second) todo.push_back(q);
        }
    }
    return seen.size();
}

// Every subgroup by scanning all subsets containing the identity (|G| <= 14 or so).
inline std::set<Set> subgroups_by_subsets(const FiniteGroup& g) {
    std::set<Set> out;
    const std::size_t n = g.order();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
        if (n % static_cast<std::size_t>(__builtin_popcountll(mask)) != 0) continue;
        bool closed = true;
        for (Elem a = 0; a < n && closed; ++a)
            if (mask >> a & 1)
                for (Elem b = 0; b < n && closed; ++b)
                    if (mask >> b & 1) closed = mask >> g.mul(a, b) & 1;
        if (!closed) continue;
        Set s;
        for (Elem a = 0; a < n; ++a)
            if (mask >> a & 1) s.push_back(a);
        out.insert(s);
    }
    return out;
}

inline Set normalizer(const FiniteGroup& g, const Set& h) {
    Set out;
    for (Elem x = 0; x < g.order(); ++x) {
        Set c;
        for (auto y : h) c.push_back(g.mul(g.mul(x, y), g.inv(x)));
        if (sorted(c) == h) out.push_back(x);
    }
    return out;
}

inline bool is_power_of(std::size_t n, std::uint64_t p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

inline Set intersect(const Set& a, const Set& b) {
    Set out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// p-intersections and their depth: depth(P) = 1 for Sylows, and an intersection
// I = J ∩ P with J a node strictly above I has depth >= depth(J) + 1.
inline std::map<Set, unsigned> p_intersection_depths(const std::vector<Set>& sylows) {
    std::set<Set> nodes(sylows.begin(), sylows.end());
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<Set> cur(nodes.begin(), nodes.end());
        for (const auto& a : cur)
            for (const auto& b : cur) grew |= nodes.insert(intersect(a, b)).second;
    }
    std::vector<Set> order(nodes.begin(), nodes.end());
    std::sort(order.begin(), order.end(), [](const Set& a, const Set& b) { return a.size() > b.size(); });
    std::map<Set, unsigned> depth;
    for (const auto& s : sylows) depth[s] = 1;
    for (const auto& j : order) {
        if (!depth.count(j)) continue;
        for (const auto& p : sylows) {
            auto i = intersect(j, p);
            if (i.size() < j.size()) depth[i] = std::max(depth[i], depth[j] + 1);
        }
    }
    return depth;
}

// Determinant by permutation expansion (tiny matrices only).
inline long long det(const std::vector<std::vector<long long>>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    long long total = 0;
    do {
        long long term = 1;
        int inv = 0;
        for (std::size_t i = 0; i < n; ++i) {
            term *= m[i][p[i]];
            for (std::size_t j = i + 1; j < n; ++j) inv += p[i] > p[j];
        }
        total += inv % 2 ? -term : term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}, D_k the gcd of k x k minors.
inline std::vector<long long> invariant_factors(const std::vector<std::vector<long long>>& a) {
    const std::size_t r = a.size(), c = a.empty() ? 0 : a[0].size();
    std::vector<long long> out;
    long long prev = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
        long long g = 0;
        std::vector<bool> rs(r, false), cs(c, false);
        std::fill(rs.end() - static_cast<std::ptrdiff_t>(k), rs.end(), true);
        do {
            std::fill(cs.begin(), cs.end(), false);
            std::fill(cs.end() - static_cast<std::ptrdiff_t>(k), cs.end(), true);
            do {
                std::vector<std::vector<long long>> m;
                for (std::size_t i = 0; i < r; ++i) {
                    if (!rs[i]) continue;
                    m.emplace_back();
                    for (std::size_t j = 0; j < c; ++j)
                        if (cs[j]) m.back().push_back(a[i][j]);
                }
                g = std::gcd(g, det(m));
            } while (std::next_permutation(cs.begin(), cs.end()));
        } while (std::next_permutation(rs.begin(), rs.end()));
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

// Rank over F_p of a dense matrix by plain Gaussian elimination.
inline std::size_t rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
    std::size_t rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (auto& row : m)
        for (auto& x : row) x = ((x % p) + p) % p;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        long long inv = 1;
        for (long long e = p - 2, b = m[rank][c]; e > 0; e >>= 1, b = b * b % p)
            if (e & 1) inv = inv * b % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            const long long f = m[i][c] * inv % p;
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace oracle
