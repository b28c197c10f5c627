#include "perclab/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace perclab {

void LatticeSpec::validate() const {
    if (d < 2) throw std::invalid_argument("LatticeSpec: dimension must be >= 2, got " + std::to_string(d));
    if (n < 1) throw std::invalid_argument("LatticeSpec: box radius must be >= 1, got " + std::to_string(n));
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("LatticeSpec: p must lie in [0, 1]");
}

LatticeGeometry::LatticeGeometry(const LatticeSpec& spec) : spec_(spec) {
    spec_.validate();
    const auto s = static_cast<std::uint64_t>(side());
    strides_.assign(static_cast<std::size_t>(spec_.d), 1);
    nv_ = 1;
    for (int k = spec_.d - 1; k >= 0; --k) {
        strides_[static_cast<std::size_t>(k)] = nv_;
        nv_ *= s;
    }
    edge_offset_.assign(nv_ + 1, 0);
    std::vector<int> c(static_cast<std::size_t>(spec_.d), -spec_.n);
    for (VertexId v = 0; v < nv_; ++v) {
        std::uint64_t fwd = 0;
        for (int k = 0; k < spec_.d; ++k)
            if (c[static_cast<std::size_t>(k)] < spec_.n) ++fwd;
        edge_offset_[v + 1] = edge_offset_[v] + fwd;
        // advance odometer (last axis fastest)
        for (int k = spec_.d - 1; k >= 0; --k) {
            auto& ck = c[static_cast<std::size_t>(k)];
            if (++ck <= spec_.n) break;
            ck = -spec_.n;
        }
    }
    ne_ = edge_offset_[nv_];
}

VertexId LatticeGeometry::rank(std::span<const int> coords) const {
    if (coords.size() != static_cast<std::size_t>(spec_.d))
        throw std::invalid_argument("LatticeGeometry::rank: coordinate count mismatch");
    VertexId r = 0;
    for (int k = 0; k < spec_.d; ++k) {
        const int ck = coords[static_cast<std::size_t>(k)];
        if (ck < -spec_.n || ck > spec_.n)
            throw std::invalid_argument("LatticeGeometry::rank: coordinate outside B(n)");
        r += static_cast<std::uint64_t>(ck + spec_.n) * strides_[static_cast<std::size_t>(k)];
    }
    return r;
}

void LatticeGeometry::coords_into(VertexId v, std::span<int> out) const {
    for (int k = 0; k < spec_.d; ++k) {
        const std::uint64_t q = v / strides_[static_cast<std::size_t>(k)];
        out[static_cast<std::size_t>(k)] = static_cast<int>(q % static_cast<std::uint64_t>(side())) - spec_.n;
    }
}

std::vector<int> LatticeGeometry::coords(VertexId v) const {
    std::vector<int> c(static_cast<std::size_t>(spec_.d));
    coords_into(v, c);
    return c;
}

int LatticeGeometry::coord(VertexId v, int axis) const {
    const std::uint64_t q = v / strides_[static_cast<std::size_t>(axis)];
    return static_cast<int>(q % static_cast<std::uint64_t>(side())) - spec_.n;
}

EdgeId LatticeGeometry::edge_id(VertexId v, int axis) const {
    std::uint64_t slot = 0;
    for (int k = 0; k < axis; ++k)
        if (coord(v, k) < spec_.n) ++slot;
    return edge_offset_[v] + slot;
}

std::pair<VertexId, int> LatticeGeometry::edge_base(EdgeId e) const {
    const auto it = std::upper_bound(edge_offset_.begin(), edge_offset_.end(), e);
    const auto v = static_cast<VertexId>(std::distance(edge_offset_.begin(), it)) - 1;
    auto slot = e - edge_offset_[v];
    for (int k = 0; k < spec_.d; ++k) {
        if (coord(v, k) < spec_.n) {
            if (slot == 0) return {v, k};
            --slot;
        }
    }
    throw std::logic_error("LatticeGeometry::edge_base: corrupt edge id");
}

std::pair<VertexId, VertexId> LatticeGeometry::edge_endpoints(EdgeId e) const {
    const auto [v, axis] = edge_base(e);
    return {v, v + strides_[static_cast<std::size_t>(axis)]};
}

void LatticeGeometry::incident(VertexId v, std::vector<Incidence>& out) const {
    out.clear();
    for (int k = 0; k < spec_.d; ++k) {
        const int ck = coord(v, k);
        const auto st = strides_[static_cast<std::size_t>(k)];
        if (ck > -spec_.n) out.push_back({v - st, edge_id(v - st, k)});
        if (ck < spec_.n) out.push_back({v + st, edge_id(v, k)});
    }
}

}  // namespace perclab
