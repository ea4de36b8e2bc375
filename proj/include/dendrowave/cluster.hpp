#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "dendrowave/core.hpp"

namespace dendrowave {

/// Reference to a dendrogram node: a leaf (0-based index) or an internal
/// node identified by its merge rank (1..n-1).
struct NodeRef {
    bool leaf = true;
    std::size_t index = 0; // leaf index if leaf, merge rank otherwise

    static NodeRef make_leaf(std::size_t i) { return {true, i}; }
    static NodeRef internal(std::size_t rank) { return {false, rank}; }

    bool operator==(const NodeRef&) const = default;

    /// "L<i+1>" for leaves, "q<rank>" for internal nodes.
    std::string label() const {
        return leaf ? "L" + std::to_string(index + 1) : "q" + std::to_string(index);
    }
    static NodeRef parse(const std::string& text);
};

struct Merge {
    NodeRef left;
    NodeRef right;
    double height = 0.0;
    std::vector<std::size_t> members; // sorted leaf indices of the merged cluster
};

/// Binary, rooted, ranked dendrogram over n leaves. Merge rank q (1-based)
/// indexes `merges()[q-1]`; heights are non-decreasing with rank.
class Dendrogram {
public:
    Dendrogram(std::size_t n_leaves, std::vector<Merge> merges);

    std::size_t n_leaves() const noexcept { return n_leaves_; }
    const std::vector<Merge>& merges() const noexcept { return merges_; }
    const Merge& merge(std::size_t rank) const { return merges_.at(rank - 1); }
    std::size_t root_rank() const noexcept { return merges_.size(); }

    /// Rank of the internal node whose merge created `node`'s parent edge,
    /// or 0 for the root.
    std::size_t parent_rank(const NodeRef& node) const;

    /// Number of edges from the root down to the leaf.
    std::size_t leaf_depth(std::size_t leaf) const;

    /// Root-to-leaf internal node ranks, root first.
    std::vector<std::size_t> path_to_leaf(std::size_t leaf) const;

    /// Leaves in left-to-right display order.
    const std::vector<std::size_t>& leaf_order() const noexcept { return leaf_order_; }

    /// Copy with the children of node `rank` exchanged.
    Dendrogram with_swapped_children(std::size_t rank) const;

private:
    void validate() const;
    void index_tree();

    std::size_t n_leaves_;
    std::vector<Merge> merges_;
    std::vector<std::size_t> leaf_parent_;     // leaf index -> parent rank
    std::vector<std::size_t> internal_parent_; // rank-1 -> parent rank (0 for root)
    std::vector<std::size_t> leaf_order_;
};

/// Symmetric non-negative matrix with zero diagonal.
class UltrametricMatrix {
public:
    UltrametricMatrix(std::size_t n, std::vector<double> values);

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
    const std::vector<double>& values() const noexcept { return values_; }

private:
    std::size_t n_;
    std::vector<double> values_;
};

/// Ward minimum-variance agglomeration via the Lance-Williams recurrence.
/// Heights are the raw variance increase m_a*m_b/(m_a+m_b)*||c_a - c_b||^2.
/// Ties are broken by lowest smallest member index, then the other cluster's
/// smallest index; the child holding the lowest leaf index becomes the left
/// child.
Dendrogram ward_cluster(const DataMatrix& mat, const WeightVector& weights);
Dendrogram ward_cluster(const DataMatrix& mat); // unit weights

enum class CopheneticMode { height, rank };

/// d(i,j) = height (or rank) of the lowest node containing both leaves.
UltrametricMatrix cophenetic(const Dendrogram& dend,
                             CopheneticMode mode = CopheneticMode::height);

struct UltrametricCheck {
    bool ok = true;
    std::array<std::size_t, 3> witness{0, 0, 0}; // i, j, k with d(i,j) > max(d(i,k), d(j,k)) + tol
};

UltrametricCheck is_ultrametric(const UltrametricMatrix& d, double tol);

} // namespace dendrowave
