#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "acatlab/caps.hpp"

namespace acatlab {

using Vertex = std::uint32_t;
using Face = std::vector<Vertex>;

/// Abstract simplicial complex on vertices 0..vertex_count-1. Faces of each
/// dimension are kept as one flat, lexicographically sorted array of rows.
class SkeletalComplex {
public:
    explicit SkeletalComplex(std::size_t vertex_count = 0) : vertex_count_(vertex_count) {}

    /// Downward closure of the given faces.
    static SkeletalComplex from_facets(std::size_t vertex_count, const std::vector<Face>& facets,
                                       const Caps& caps = {});
    /// Faces must already be closed downward; throws ErrorKind::Input otherwise.
    static SkeletalComplex from_faces(std::size_t vertex_count, const std::vector<Face>& faces);
    /// Takes sorted flat layers directly; layers[k] holds rows of k+1 vertices.
    static SkeletalComplex from_layers(std::size_t vertex_count, std::vector<std::vector<Vertex>> layers);

    std::size_t vertex_count() const { return vertex_count_; }
    int dim() const { return static_cast<int>(layers_.size()) - 1; }
    bool empty() const { return layers_.empty(); }
    std::size_t count(int k) const;
    std::size_t face_count() const;
    std::span<const Vertex> face(int k, std::size_t i) const;
    std::optional<std::size_t> index_of(std::span<const Vertex> face) const;
    bool contains(std::span<const Vertex> face) const { return index_of(face).has_value(); }

    /// Every face, by dimension then lexicographically.
    std::vector<Face> faces() const;

    /// True when every subset of the vertex set is a face.
    bool is_full_simplex() const;

    friend bool operator==(const SkeletalComplex&, const SkeletalComplex&) = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<std::vector<Vertex>> layers_;
};

}  // namespace acatlab
