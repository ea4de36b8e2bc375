#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dendrowave/cluster.hpp"
#include "dendrowave/wavelet.hpp"

namespace dendrowave {

/// The object encodings whose uniform-model information content is compared:
/// a presence vector over m terms, the positional boolean expansion, a rank
/// sequence over an R-rank alphabet, reals discretized into P intervals, and
/// membership of a hierarchically structured population of n objects.
struct EncodingDescriptor {
    enum class Kind {
        bag_of_words,       // m bits
        boolean_positional, // L*m bits
        rank_sequence,      // L*log2(R) bits
        discretized_real,   // P*m bits
        hierarchical,       // log2(n) bits
    };

    Kind kind = Kind::bag_of_words;
    std::uint64_t m = 1;
    std::uint64_t L = 1;
    std::uint64_t R = 1;
    std::uint64_t P = 1;
    std::uint64_t n = 1;
    /// bits per rank symbol; defaults to log2(R) when <= 0
    double rank_symbol_bits = 0.0;

    static EncodingDescriptor bag_of_words(std::uint64_t m);
    static EncodingDescriptor boolean_positional(std::uint64_t L, std::uint64_t m);
    static EncodingDescriptor rank_sequence(std::uint64_t L, std::uint64_t R,
                                            double symbol_bits = 0.0);
    static EncodingDescriptor discretized_real(std::uint64_t P, std::uint64_t m);
    static EncodingDescriptor hierarchical(std::uint64_t n);
};

double shannon_bits(const EncodingDescriptor& e);

/// Transition count needed to generate the leaf from the root smooth:
/// its chain length, bounded by n-1.
std::size_t generation_cost(const Dendrogram& dend, std::size_t leaf);

/// rho = 1 - 6*sum((r_j - r'_j)^2) / (n^3 - n); both arguments must be
/// permutations of 1..n (ties are not supported).
double spearman_rho(const std::vector<std::size_t>& r1, const std::vector<std::size_t>& r2);

/// W = 12*S / (k^2 (n^3 - n)) with S the squared deviation of rank sums
/// about their mean, for k permutations of 1..n.
double kendall_w(const std::vector<std::vector<std::size_t>>& rankings);

struct DetailEnergy {
    std::size_t node_rank = 0;
    double energy = 0.0; // sum over attributes of the squared detail
};

struct DetailEnergyProfile {
    std::vector<DetailEnergy> per_node; // rank order
    double total = 0.0;
};

/// Squared-detail energy per internal node for a transform of integer rank
/// data under a lifting scheme; each node's energy is that pair's
/// sum-of-squared rank differences.
DetailEnergyProfile detail_energy_profile(const DendroWavelet& wav);

} // namespace dendrowave
