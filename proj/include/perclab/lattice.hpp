#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace perclab {

// Rank of a lattice point of B(n) = [-n, n]^d, lexicographic with the first
// coordinate most significant.
using VertexId = std::uint64_t;
// Rank of a nearest-neighbour edge inside B(n) in the canonical order:
// vertices ascending, then axis index ascending; an edge belongs to its
// lexicographically smaller endpoint.
using EdgeId = std::uint64_t;

struct LatticeSpec {
    int d = 2;
    int n = 1;
    double p = 0.5;
    std::uint64_t seed = 0;

    // Throws std::invalid_argument for d < 2, n < 1 or p outside [0, 1].
    void validate() const;

    friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

// Vertex and edge indexing over B(n).
class LatticeGeometry {
public:
    explicit LatticeGeometry(const LatticeSpec& spec);

    const LatticeSpec& spec() const noexcept { return spec_; }
    int d() const noexcept { return spec_.d; }
    int n() const noexcept { return spec_.n; }
    int side() const noexcept { return 2 * spec_.n + 1; }
    std::uint64_t vertex_count() const noexcept { return nv_; }
    std::uint64_t edge_count() const noexcept { return ne_; }

    VertexId rank(std::span<const int> coords) const;
    void coords_into(VertexId v, std::span<int> out) const;
    std::vector<int> coords(VertexId v) const;

    int coord(VertexId v, int axis) const;
    bool has_forward_edge(VertexId v, int axis) const { return coord(v, axis) < spec_.n; }
    // Edge from v to v + e_axis; v must have that edge.
    EdgeId edge_id(VertexId v, int axis) const;
    // Smaller endpoint and axis of an edge.
    std::pair<VertexId, int> edge_base(EdgeId e) const;
    std::pair<VertexId, VertexId> edge_endpoints(EdgeId e) const;

    struct Incidence {
        VertexId nbr;
        EdgeId edge;
    };
    // All incident edges of v inside B(n), deterministic order (-e_d..-e_1, +e_1..+e_d
    // grouped per axis: for each axis, backward then forward).
    void incident(VertexId v, std::vector<Incidence>& out) const;

    std::uint64_t stride(int axis) const { return strides_[static_cast<std::size_t>(axis)]; }

private:
    LatticeSpec spec_;
    std::uint64_t nv_ = 0;
    std::uint64_t ne_ = 0;
    std::vector<std::uint64_t> strides_;
    std::vector<std::uint64_t> edge_offset_;  // per-vertex prefix sums of forward-edge counts
};

}  // namespace perclab
