#include "perclab/bond_config.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "perclab/rng.hpp"

namespace perclab {

std::uint64_t BondConfiguration::open_count() const {
    std::uint64_t c = 0;
    for (const auto w : bits) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
}

BondConfiguration BondConfiguration::all_closed(const LatticeSpec& spec) {
    LatticeGeometry geom(spec);
    BondConfiguration out;
    out.spec = spec;
    out.bits.assign((geom.edge_count() + 63) / 64, 0);
    return out;
}

namespace kernels {

namespace {
inline std::uint64_t sample_word(std::uint64_t key, double p, std::uint64_t word_index,
                                 std::uint64_t edge_count) {
    std::uint64_t w = 0;
    const std::uint64_t base = word_index * 64;
    const std::uint64_t stop = std::min<std::uint64_t>(64, edge_count - base);
    for (std::uint64_t b = 0; b < stop; ++b)
        if (unit_at(key, base + b) < p) w |= (1ULL << b);
    return w;
}
}  // namespace

void sample_bits_serial(const LatticeSpec& spec, std::uint64_t edge_count,
                        std::vector<std::uint64_t>& bits) {
    const std::uint64_t key = stream_key(spec.seed, RngStream::Edges);
    const std::uint64_t words = (edge_count + 63) / 64;
    bits.assign(words, 0);
    for (std::uint64_t w = 0; w < words; ++w) bits[w] = sample_word(key, spec.p, w, edge_count);
}

void sample_bits_parallel(const LatticeSpec& spec, std::uint64_t edge_count,
                          std::vector<std::uint64_t>& bits) {
    const std::uint64_t key = stream_key(spec.seed, RngStream::Edges);
    const auto words = static_cast<std::int64_t>((edge_count + 63) / 64);
    bits.assign(static_cast<std::size_t>(words), 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t w = 0; w < words; ++w)
        bits[static_cast<std::size_t>(w)] =
            sample_word(key, spec.p, static_cast<std::uint64_t>(w), edge_count);
}

}  // namespace kernels

BondConfiguration sample_configuration(const LatticeSpec& spec, Exec exec) {
    spec.validate();
    LatticeGeometry geom(spec);
    BondConfiguration out;
    out.spec = spec;
    if (exec == Exec::Parallel)
        kernels::sample_bits_parallel(spec, geom.edge_count(), out.bits);
    else
        kernels::sample_bits_serial(spec, geom.edge_count(), out.bits);
    return out;
}

namespace {

constexpr char kMagic[5] = {'P', 'E', 'R', 'C', '1'};

template <typename T>
void put_le(std::string& buf, T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i)
        buf.push_back(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xff));
}

template <typename T>
T get_le(const unsigned char* p) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return static_cast<T>(v);
}

}  // namespace

void write_perc1(const BondConfiguration& config, const std::string& path) {
    LatticeGeometry geom(config.spec);
    const std::uint64_t ne = geom.edge_count();

    std::string buf;
    buf.append(kMagic, sizeof(kMagic));
    put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(config.spec.d));
    put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(config.spec.n));
    std::uint64_t pbits;
    static_assert(sizeof(double) == 8);
    std::memcpy(&pbits, &config.spec.p, 8);
    put_le<std::uint64_t>(buf, pbits);
    put_le<std::uint64_t>(buf, config.spec.seed);
    const std::uint64_t nbytes = (ne + 7) / 8;
    for (std::uint64_t i = 0; i < nbytes; ++i) {
        const std::uint64_t word = config.bits[i / 8];
        buf.push_back(static_cast<char>((word >> (8 * (i % 8))) & 0xff));
    }

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("write_perc1: cannot open " + path);
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw std::runtime_error("write_perc1: short write to " + path);
}

BondConfiguration read_perc1(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_perc1: cannot open " + path);
    std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto* p = reinterpret_cast<const unsigned char*>(buf.data());
    if (buf.size() < 5 + 4 + 4 + 8 + 8 || std::memcmp(p, kMagic, 5) != 0)
        throw std::runtime_error("read_perc1: not a PERC1 file: " + path);
    LatticeSpec spec;
    spec.d = static_cast<int>(get_le<std::uint32_t>(p + 5));
    spec.n = static_cast<int>(get_le<std::uint32_t>(p + 9));
    const std::uint64_t pbits = get_le<std::uint64_t>(p + 13);
    std::memcpy(&spec.p, &pbits, 8);
    spec.seed = get_le<std::uint64_t>(p + 21);
    spec.validate();

    LatticeGeometry geom(spec);
    const std::uint64_t ne = geom.edge_count();
    const std::uint64_t nbytes = (ne + 7) / 8;
    if (buf.size() != 29 + nbytes)
        throw std::runtime_error("read_perc1: truncated or oversized bitset in " + path);

    BondConfiguration config = BondConfiguration::all_closed(spec);
    for (std::uint64_t i = 0; i < nbytes; ++i)
        config.bits[i / 8] |= static_cast<std::uint64_t>(p[29 + i]) << (8 * (i % 8));
    // clear padding bits past the edge count
    if (ne % 64 != 0) config.bits.back() &= (~0ULL >> (64 - (ne % 64)));
    return config;
}

}  // namespace perclab
