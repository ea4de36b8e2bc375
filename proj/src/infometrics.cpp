#include "dendrowave/infometrics.hpp"

#include <algorithm>
#include <cmath>

namespace dendrowave {

namespace {

void require_at_least_one(std::uint64_t v, const char* name) {
    if (v < 1) fail(errc::invalid_argument, std::string(name) + " must be at least 1");
}

void require_permutation(const std::vector<std::size_t>& r) {
    const std::size_t n = r.size();
    std::vector<bool> seen(n, false);
    for (std::size_t v : r) {
        if (v < 1 || v > n || seen[v - 1])
            fail(errc::not_a_permutation, "ranking is not a permutation of 1..n");
        seen[v - 1] = true;
    }
}

} // namespace

EncodingDescriptor EncodingDescriptor::bag_of_words(std::uint64_t m) {
    require_at_least_one(m, "m");
    EncodingDescriptor e;
    e.kind = Kind::bag_of_words;
    e.m = m;
    return e;
}

EncodingDescriptor EncodingDescriptor::boolean_positional(std::uint64_t L, std::uint64_t m) {
    require_at_least_one(L, "L");
    require_at_least_one(m, "m");
    EncodingDescriptor e;
    e.kind = Kind::boolean_positional;
    e.L = L;
    e.m = m;
    return e;
}

EncodingDescriptor EncodingDescriptor::rank_sequence(std::uint64_t L, std::uint64_t R,
                                                     double symbol_bits) {
    require_at_least_one(L, "L");
    require_at_least_one(R, "R");
    EncodingDescriptor e;
    e.kind = Kind::rank_sequence;
    e.L = L;
    e.R = R;
    e.rank_symbol_bits = symbol_bits;
    return e;
}

EncodingDescriptor EncodingDescriptor::discretized_real(std::uint64_t P, std::uint64_t m) {
    require_at_least_one(P, "P");
    require_at_least_one(m, "m");
    EncodingDescriptor e;
    e.kind = Kind::discretized_real;
    e.P = P;
    e.m = m;
    return e;
}

EncodingDescriptor EncodingDescriptor::hierarchical(std::uint64_t n) {
    require_at_least_one(n, "n");
    EncodingDescriptor e;
    e.kind = Kind::hierarchical;
    e.n = n;
    return e;
}

double shannon_bits(const EncodingDescriptor& e) {
    switch (e.kind) {
    case EncodingDescriptor::Kind::bag_of_words:
        return static_cast<double>(e.m);
    case EncodingDescriptor::Kind::boolean_positional:
        return static_cast<double>(e.L) * static_cast<double>(e.m);
    case EncodingDescriptor::Kind::rank_sequence: {
        const double c = e.rank_symbol_bits > 0.0 ? e.rank_symbol_bits
                                                  : std::log2(static_cast<double>(e.R));
        return static_cast<double>(e.L) * c;
    }
    case EncodingDescriptor::Kind::discretized_real:
        return static_cast<double>(e.P) * static_cast<double>(e.m);
    case EncodingDescriptor::Kind::hierarchical:
        return std::log2(static_cast<double>(e.n));
    }
    fail(errc::invalid_argument, "unknown encoding kind");
}

std::size_t generation_cost(const Dendrogram& dend, std::size_t leaf) {
    return dend.leaf_depth(leaf);
}

double spearman_rho(const std::vector<std::size_t>& r1, const std::vector<std::size_t>& r2) {
    if (r1.size() != r2.size())
        fail(errc::length_mismatch, "rankings have different lengths");
    const std::size_t n = r1.size();
    if (n < 2) fail(errc::invalid_argument, "rankings need at least 2 items");
    require_permutation(r1);
    require_permutation(r2);

    double sum_sq = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double d = static_cast<double>(r1[j]) - static_cast<double>(r2[j]);
        sum_sq += d * d;
    }
    const double nn = static_cast<double>(n);
    return 1.0 - 6.0 * sum_sq / (nn * nn * nn - nn);
}

double kendall_w(const std::vector<std::vector<std::size_t>>& rankings) {
    if (rankings.size() < 2)
        fail(errc::invalid_argument, "concordance needs at least 2 rankings");
    const std::size_t n = rankings.front().size();
    if (n < 2) fail(errc::invalid_argument, "rankings need at least 2 items");
    for (const auto& r : rankings) {
        if (r.size() != n) fail(errc::length_mismatch, "rankings have different lengths");
        require_permutation(r);
    }

    const double k = static_cast<double>(rankings.size());
    std::vector<double> sums(n, 0.0);
    for (const auto& r : rankings)
        for (std::size_t j = 0; j < n; ++j) sums[j] += static_cast<double>(r[j]);
    const double mean = k * (static_cast<double>(n) + 1.0) / 2.0;
    double S = 0.0;
    for (double s : sums) S += (s - mean) * (s - mean);
    const double nn = static_cast<double>(n);
    return 12.0 * S / (k * k * (nn * nn * nn - nn));
}

DetailEnergyProfile detail_energy_profile(const DendroWavelet& wav) {
    if (wav.scheme() == HaarScheme::basic)
        fail(errc::non_rank_input, "energy profile requires a lifting scheme over rank data");
    if (!wav.integral_input())
        fail(errc::non_rank_input, "energy profile requires integer rank input");

    DetailEnergyProfile out;
    for (std::size_t q = 1; q <= wav.dendrogram().root_rank(); ++q) {
        double e = 0.0;
        for (double d : wav.detail(q)) e += d * d;
        out.per_node.push_back({q, e});
        out.total += e;
    }
    return out;
}

} // namespace dendrowave
