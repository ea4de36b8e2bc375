#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dendrowave/cluster.hpp"
#include "dendrowave/core.hpp"

namespace dendrowave {

/// Pairwise smooth/detail rules for two child vectors a (left), b (right).
///
///   basic:     s = (a+b)/2   d = (a-b)/2   left = s + d,     right = s - d
///   lifting1:  s = (a+b)/2   d = a-b       left = s + d/2,   right = s - d/2
///   lifting2:  s = a+b       d = a-b       left = (s+d)/2,   right = (s-d)/2
///
/// The stored detail is oriented so the left child carries the positive sign.
/// lifting2 keeps every stored value an integer when the input is integral.
enum class HaarScheme { basic, lifting1, lifting2 };

const char* scheme_name(HaarScheme scheme) noexcept;
HaarScheme scheme_from_name(const std::string& name);

/// Result of the hierarchical Haar transform: the root smooth plus one detail
/// vector per internal node. Intermediate node smooths are kept as a cache
/// for chain queries; the transform proper stores (n-1)*m + m = n*m values.
class DendroWavelet {
public:
    DendroWavelet(HaarScheme scheme, Dendrogram dendrogram,
                  std::vector<double> smooth,
                  std::vector<std::vector<double>> details,
                  std::vector<std::vector<double>> node_smooths,
                  std::vector<std::string> row_labels,
                  std::vector<std::string> col_labels,
                  bool integral_input);

    HaarScheme scheme() const noexcept { return scheme_; }
    const Dendrogram& dendrogram() const noexcept { return dendrogram_; }
    std::size_t n_leaves() const noexcept { return dendrogram_.n_leaves(); }
    std::size_t dim() const noexcept { return smooth_.size(); }

    const std::vector<double>& smooth() const noexcept { return smooth_; }
    const std::vector<double>& detail(std::size_t rank) const {
        return details_.at(rank - 1);
    }
    const std::vector<std::vector<double>>& details() const noexcept { return details_; }
    const std::vector<double>& node_smooth(std::size_t rank) const {
        return node_smooths_.at(rank - 1);
    }

    const std::vector<std::string>& row_labels() const noexcept { return row_labels_; }
    const std::vector<std::string>& col_labels() const noexcept { return col_labels_; }
    bool integral_input() const noexcept { return integral_input_; }

private:
    HaarScheme scheme_;
    Dendrogram dendrogram_;
    std::vector<double> smooth_;                     // root smooth, m values
    std::vector<std::vector<double>> details_;       // rank-1 -> m values
    std::vector<std::vector<double>> node_smooths_;  // cache, rank-1 -> m values
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
    bool integral_input_;
};

/// Bottom-up transform of the matrix rows over the dendrogram.
DendroWavelet forward(const Dendrogram& dend, const DataMatrix& mat, HaarScheme scheme);

/// Top-down reconstruction; inverse(forward(...)) returns the input rows.
DataMatrix inverse(const DendroWavelet& wav);

struct ChainStep {
    std::size_t node_rank = 0;
    int sign = +1; // +1 when the path continues into the left child
};

/// Root-to-leaf path with the detail signs needed for reconstruction.
struct ApproximationChain {
    std::size_t leaf = 0;
    HaarScheme scheme = HaarScheme::basic;
    std::vector<ChainStep> steps; // root first
};

ApproximationChain chain(const DendroWavelet& wav, std::size_t leaf);

/// Reconstruction truncated after `depth` chain steps. Equals the smooth of
/// the ancestor at that depth; depth == chain length yields the leaf vector.
std::vector<double> partial_reconstruct(const DendroWavelet& wav, std::size_t leaf,
                                        std::size_t depth);

struct ChainStats {
    std::map<std::size_t, std::size_t> histogram; // length -> leaf count
    double mean = 0.0;
    double median = 0.0;
    std::size_t min = 0;
    std::size_t max = 0;
};

/// One root-to-leaf edge count per leaf.
ChainStats chain_stats(const Dendrogram& dend);

} // namespace dendrowave
