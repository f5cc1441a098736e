#include "acatlab/complex.hpp"

#include <algorithm>
#include <set>

#include "acatlab/error.hpp"

namespace acatlab {

std::size_t SkeletalComplex::count(int k) const {
    if (k < 0 || k > dim()) return 0;
    return layers_[static_cast<std::size_t>(k)].size() / static_cast<std::size_t>(k + 1);
}

std::size_t SkeletalComplex::face_count() const {
    std::size_t n = 0;
    for (int k = 0; k <= dim(); ++k) n += count(k);
    return n;
}

std::span<const Vertex> SkeletalComplex::face(int k, std::size_t i) const {
    const auto width = static_cast<std::size_t>(k + 1);
    return std::span<const Vertex>(layers_[static_cast<std::size_t>(k)]).subspan(i * width, width);
}

std::optional<std::size_t> SkeletalComplex::index_of(std::span<const Vertex> f) const {
    const int k = static_cast<int>(f.size()) - 1;
    if (k < 0 || k > dim()) return std::nullopt;
    std::size_t lo = 0, hi = count(k);
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        auto row = face(k, mid);
        if (std::lexicographical_compare(row.begin(), row.end(), f.begin(), f.end())) lo = mid + 1;
        else hi = mid;
    }
    if (lo < count(k)) {
        auto row = face(k, lo);
        if (std::equal(row.begin(), row.end(), f.begin(), f.end())) return lo;
    }
    return std::nullopt;
}

std::vector<Face> SkeletalComplex::faces() const {
    std::vector<Face> out;
    for (int k = 0; k <= dim(); ++k)
        for (std::size_t i = 0; i < count(k); ++i) {
            auto f = face(k, i);
            out.emplace_back(f.begin(), f.end());
        }
    return out;
}

bool SkeletalComplex::is_full_simplex() const {
    return vertex_count_ > 0 && dim() == static_cast<int>(vertex_count_) - 1 && count(dim()) == 1;
}

SkeletalComplex SkeletalComplex::from_layers(std::size_t vertex_count, std::vector<std::vector<Vertex>> layers) {
    while (!layers.empty() && layers.back().empty()) layers.pop_back();
    SkeletalComplex c(vertex_count);
    c.layers_ = std::move(layers);
    return c;
}

namespace {

std::vector<std::vector<Vertex>> layers_from_set(const std::set<Face>& faces) {
    std::vector<std::vector<Vertex>> layers;
    for (const auto& f : faces)
        if (layers.size() < f.size()) layers.resize(f.size());
    std::vector<std::vector<Face>> by_dim(layers.size());
    for (const auto& f : faces) by_dim[f.size() - 1].push_back(f);
    for (std::size_t k = 0; k < by_dim.size(); ++k) {
        std::sort(by_dim[k].begin(), by_dim[k].end());
        for (const auto& f : by_dim[k]) layers[k].insert(layers[k].end(), f.begin(), f.end());
    }
    return layers;
}

Face normalized(Face f, std::size_t vertex_count) {
    std::sort(f.begin(), f.end());
    if (f.empty() || std::adjacent_find(f.begin(), f.end()) != f.end() || f.back() >= vertex_count)
        fail(ErrorKind::Input, "face must be a nonempty set of distinct vertices below " + std::to_string(vertex_count));
    return f;
}

}  // namespace

SkeletalComplex SkeletalComplex::from_facets(std::size_t vertex_count, const std::vector<Face>& facets,
                                             const Caps& caps) {
    std::set<Face> all;
    for (const auto& raw : facets) {
        auto f = normalized(raw, vertex_count);
        if (f.size() > 40) fail(ErrorKind::CapExceeded, "facet too large to close downward");
        const std::uint64_t subsets = (std::uint64_t{1} << f.size()) - 1;
        for (std::uint64_t mask = 1; mask <= subsets; ++mask) {
            Face s;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (mask >> i & 1) s.push_back(f[i]);
            all.insert(std::move(s));
            if (all.size() > caps.faces)
                fail(ErrorKind::CapExceeded, "face count cap exceeded (" + std::to_string(caps.faces) + ")");
        }
    }
    return from_layers(vertex_count, layers_from_set(all));
}

SkeletalComplex SkeletalComplex::from_faces(std::size_t vertex_count, const std::vector<Face>& faces) {
    std::set<Face> all;
    for (const auto& raw : faces) all.insert(normalized(raw, vertex_count));
    for (const auto& f : all) {
        if (f.size() < 2) continue;
        for (std::size_t i = 0; i < f.size(); ++i) {
            Face sub = f;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
            if (!all.count(sub)) fail(ErrorKind::Input, "face list is not closed downward");
        }
    }
    return from_layers(vertex_count, layers_from_set(all));
}

}  // namespace acatlab
