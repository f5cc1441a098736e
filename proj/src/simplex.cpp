#include "acatlab/simplex.hpp"

#include <algorithm>
#include <climits>

#include "acatlab/error.hpp"
#include "acatlab/homology.hpp"

namespace acatlab {

std::uint64_t faces_up_to(std::size_t m, std::size_t k) {
    k = std::min(k, m);
    std::uint64_t total = 0, c = 1;  // c = C(m, i)
    for (std::size_t i = 1; i <= k; ++i) {
        // C(m,i) = C(m,i-1) * (m-i+1) / i, done in 128 bits
        unsigned __int128 next = static_cast<unsigned __int128>(c) * (m - i + 1) / i;
        if (next > UINT64_MAX) return UINT64_MAX;
        c = static_cast<std::uint64_t>(next);
        if (total > UINT64_MAX - c) return UINT64_MAX;
        total += c;
    }
    return total;
}

SkeletalComplex skeleton(std::size_t m, int n, const Caps& caps) {
    if (m == 0) fail(ErrorKind::Input, "skeleton needs at least one vertex");
    if (n < 0) return SkeletalComplex(m);
    const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(n) + 1, m);
    if (faces_up_to(m, top) > caps.faces)
        fail(ErrorKind::CapExceeded, "face count cap exceeded (" + std::to_string(caps.faces) + ")");
    std::vector<std::vector<Vertex>> layers(top);
    for (std::size_t size = 1; size <= top; ++size) {
        std::vector<Vertex> comb(size);
        for (std::size_t i = 0; i < size; ++i) comb[i] = static_cast<Vertex>(i);
        for (;;) {
            layers[size - 1].insert(layers[size - 1].end(), comb.begin(), comb.end());
            std::size_t i = size;
            while (i > 0 && comb[i - 1] == m - size + i - 1) --i;
            if (i == 0) break;
            ++comb[i - 1];
            for (std::size_t j = i; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return SkeletalComplex::from_layers(m, std::move(layers));
}

namespace {

// union of the right-translation orbits gH, found directly from the table
std::vector<Elem> right_orbit(const FiniteGroup& g, Elem x, const std::vector<Elem>& h) {
    std::vector<Elem> out;
    for (auto k : h) out.push_back(g.mul(x, k));
    std::sort(out.begin(), out.end());
    return out;
}

Face forward(const CosetSpace& cosets, const Face& support) {
    Face out;
    for (auto x : support) out.push_back(static_cast<Vertex>(cosets.index_of(x)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}


}  // namespace

FixedSubcomplex fixed_subcomplex(const FiniteGroup& g, const SubgroupSet& h, int n, const Caps& caps) {
    const auto hs = h.size();
    const std::size_t blocks = n < 0 ? 0 : (static_cast<std::size_t>(n) + 1) / hs;
    const std::size_t orbits = g.order() / hs;
    if (faces_up_to(orbits, blocks) > caps.faces)
        fail(ErrorKind::CapExceeded, "face count cap exceeded (" + std::to_string(caps.faces) + ")");
    const auto hel = h.elements();

    FixedSubcomplex out;
    // depth-first over orbits, each added in increasing order of its least element
    std::vector<std::vector<Elem>> orbit_list;
    {
        ElementSet seen(g.order());
        for (Elem x = 0; x < g.order(); ++x) {
            if (seen.contains(x)) continue;
            auto o = right_orbit(g, x, hel);
            for (auto y : o) seen.insert(y);
            orbit_list.push_back(std::move(o));
        }
    }
    std::vector<std::vector<Face>> by_size(blocks + 1);
    std::vector<std::size_t> chosen;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!chosen.empty()) {
            Face s;
            for (auto i : chosen) s.insert(s.end(), orbit_list[i].begin(), orbit_list[i].end());
            std::sort(s.begin(), s.end());
            by_size[chosen.size()].push_back(std::move(s));
        }
        if (chosen.size() == blocks) return;
        for (std::size_t i = start; i < orbit_list.size(); ++i) {
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    for (auto& layer : by_size) {
        std::sort(layer.begin(), layer.end());
        for (auto& f : layer) out.supports.push_back(std::move(f));
    }

    CosetSpace cosets(g, h);
    // the index sets of chosen orbits are already a downward closed family
    std::vector<std::vector<Vertex>> layers(blocks);
    for (const auto& s : out.supports) {
        auto t = forward(cosets, s);
        layers[t.size() - 1].insert(layers[t.size() - 1].end(), t.begin(), t.end());
    }
    for (std::size_t k = 0; k < blocks; ++k) {
        const std::size_t w = k + 1;
        std::vector<std::size_t> order(layers[k].size() / w);
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        auto row = [&](std::size_t i) { return layers[k].begin() + static_cast<std::ptrdiff_t>(i * w); };
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return std::lexicographical_compare(row(x), row(x) + static_cast<std::ptrdiff_t>(w), row(y),
                                                row(y) + static_cast<std::ptrdiff_t>(w));
        });
        std::vector<Vertex> sorted;
        sorted.reserve(layers[k].size());
        for (auto i : order) sorted.insert(sorted.end(), row(i), row(i) + static_cast<std::ptrdiff_t>(w));
        layers[k] = std::move(sorted);
    }
    while (!layers.empty() && layers.back().empty()) layers.pop_back();
    out.nerve = SkeletalComplex::from_layers(cosets.size(), std::move(layers));
    return out;
}

FixedPointIso verify_fixed_point_formula(const FiniteGroup& g, const SubgroupSet& h, int n, const Caps& caps) {
    FixedPointIso iso;
    const auto hs = h.size();
    iso.target_dim = static_cast<int>((static_cast<std::size_t>(std::max(n, -1) + 1)) / hs) - 1;
    auto fixed = fixed_subcomplex(g, h, n, caps);
    CosetSpace cosets(g, h);
    const auto hel = h.elements();
    const auto target = iso.target_dim < 0 ? SkeletalComplex(cosets.size())
                                           : skeleton(cosets.size(), iso.target_dim, caps);
    iso.faces = fixed.supports.size();

    auto reject = [&](const std::string& why, const Face& f) {
        iso.verified = false;
        iso.failure = why;
        iso.counterexample = f;
        return iso;
    };

    std::vector<Face> orbit(cosets.size());  // gH as a sorted element list
    for (std::size_t c = 0; c < cosets.size(); ++c) orbit[c] = right_orbit(g, cosets.rep(c), hel);
    Face buf, img;
    auto fwd = [&](const Face& s, Face& out) {
        out.clear();
        for (auto x : s) out.push_back(static_cast<Vertex>(cosets.index_of(x)));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    };
    auto bwd = [&](const Face& t, Face& out) {
        out.clear();
        for (auto c : t) out.insert(out.end(), orbit[c].begin(), orbit[c].end());
        std::sort(out.begin(), out.end());
    };

    // supports come sorted by size, then lexicographically
    auto by_size = [](const Face& x, const Face& y) { return x.size() != y.size() ? x.size() < y.size() : x < y; };
    if (!std::is_sorted(fixed.supports.begin(), fixed.supports.end(), by_size))
        return reject("fixed supports are not in canonical order", {});
    auto is_source = [&](const Face& f) {
        return std::binary_search(fixed.supports.begin(), fixed.supports.end(), f, by_size);
    };

    for (const auto& s : fixed.supports) {
        if (s.size() > static_cast<std::size_t>(n + 1)) return reject("support larger than n+1", s);
        for (auto k : hel) {
            buf.clear();
            for (auto x : s) buf.push_back(g.mul(x, k));
            std::sort(buf.begin(), buf.end());
            if (buf != s) return reject("support is not H-invariant", s);
        }
        fwd(s, img);
        if (!target.contains(img)) return reject("image is not a face of the quotient skeleton", s);
        // a left inverse makes forward injective
        bwd(img, buf);
        if (buf != s) return reject("backward(forward(S)) differs from S", s);
    }
    // injective into a set of the same size, hence onto
    if (target.face_count() != fixed.supports.size())
        return reject("quotient skeleton and fixed faces differ in size", {});
    // backward(t) is the disjoint union of the orbits of its cosets, so dropping
    // a vertex of t drops exactly that orbit: inclusions are preserved
    for (int k = 1; k <= target.dim(); ++k)
        for (std::size_t i = 0; i < target.count(k); ++i) {
            auto f = target.face(k, i);
            Face t(f.begin(), f.end());
            bwd(t, buf);
            if (buf.size() != t.size() * hs || std::adjacent_find(buf.begin(), buf.end()) != buf.end())
                return reject("backward map does not preserve inclusion", buf);
        }
    // N(H) acts on fixed points by x.t = t(- x), i.e. S -> S x^-1 and gH -> g x^-1 H.
    // Both sides are actions, so equivariance for generators gives it for all of N(H).
    Face expect, moved_img;
    for (auto x : g.generators_of(g.normalizer(h))) {
        const Elem xi = g.inv(x);
        std::vector<Vertex> act(cosets.size());
        for (std::size_t c = 0; c < cosets.size(); ++c)
            act[c] = static_cast<Vertex>(cosets.index_of(g.mul(cosets.rep(c), xi)));
        for (const auto& s : fixed.supports) {
            buf.clear();
            for (auto y : s) buf.push_back(g.mul(y, xi));
            std::sort(buf.begin(), buf.end());
            if (!is_source(buf)) return reject("N(H) does not preserve the fixed faces", s);
            fwd(s, img);
            expect.clear();
            for (auto c : img) expect.push_back(act[c]);
            std::sort(expect.begin(), expect.end());
            fwd(buf, moved_img);
            if (moved_img != expect) return reject("forward map is not N(H)/H-equivariant", s);
            ++iso.equivariance_checks;
        }
    }
    iso.verified = true;
    return iso;
}

std::string Connectivity::str() const {
    switch (kind) {
        case Kind::FullSimplex: return "contractible-by-fullness";
        case Kind::Acyclic: return "acyclic";
        case Kind::Finite: break;
    }
    return std::to_string(value);
}

Connectivity connectivity(const SkeletalComplex& complex, const Caps& caps) {
    Connectivity c;
    if (complex.empty()) return c;
    if (complex.is_full_simplex()) {
        c.kind = Connectivity::Kind::FullSimplex;
        c.value = complex.dim();
        return c;
    }
    auto cc = simplicial_chain_complex(complex, 0, true, caps);
    for (int k = -1; k <= complex.dim(); ++k) {
        if (!homology_in_degree(cc, k).vanishes()) {
            c.value = k - 1;
            return c;
        }
    }
    c.kind = Connectivity::Kind::Acyclic;
    c.value = complex.dim();
    return c;
}

}  // namespace acatlab
