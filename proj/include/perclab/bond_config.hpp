#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "perclab/exec.hpp"
#include "perclab/lattice.hpp"

namespace perclab {

// Open/closed state of every canonical edge of B(n).
struct BondConfiguration {
    LatticeSpec spec;
    std::vector<std::uint64_t> bits;  // bit e = edge e open, LSB-first within each word

    bool open(EdgeId e) const { return (bits[e >> 6] >> (e & 63)) & 1ULL; }
    void set_open(EdgeId e, bool v) {
        const std::uint64_t m = 1ULL << (e & 63);
        if (v)
            bits[e >> 6] |= m;
        else
            bits[e >> 6] &= ~m;
    }
    std::uint64_t open_count() const;

    static BondConfiguration all_closed(const LatticeSpec& spec);
};

// Each edge open independently with probability spec.p, keyed by (seed, edge
// index); identical spec gives an identical bitset regardless of exec mode.
BondConfiguration sample_configuration(const LatticeSpec& spec, Exec exec = default_exec());

namespace kernels {
// Reference and OpenMP implementations of the per-edge Bernoulli fill.
void sample_bits_serial(const LatticeSpec& spec, std::uint64_t edge_count,
                        std::vector<std::uint64_t>& bits);
void sample_bits_parallel(const LatticeSpec& spec, std::uint64_t edge_count,
                          std::vector<std::uint64_t>& bits);
}  // namespace kernels

// PERC1 container: magic "PERC1", d (u32), n (u32), p (f64), seed (u64), then
// the bitset in canonical edge order, little-endian, padded to a byte.
void write_perc1(const BondConfiguration& config, const std::string& path);
BondConfiguration read_perc1(const std::string& path);

}  // namespace perclab
