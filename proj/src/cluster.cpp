#include "dendrowave/cluster.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace dendrowave {

NodeRef NodeRef::parse(const std::string& text) {
    if (text.size() < 2 || (text[0] != 'L' && text[0] != 'q'))
        fail(errc::invalid_argument, "bad node reference: \"" + text + "\"");
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
        fail(errc::invalid_argument, "bad node reference: \"" + text + "\"");
    return text[0] == 'L' ? NodeRef::make_leaf(value - 1) : NodeRef::internal(value);
}

Dendrogram::Dendrogram(std::size_t n_leaves, std::vector<Merge> merges)
    : n_leaves_(n_leaves), merges_(std::move(merges)) {
    validate();
    index_tree();
}

void Dendrogram::validate() const {
    if (n_leaves_ < 2) fail(errc::too_few_rows, "dendrogram needs at least 2 leaves");
    if (merges_.size() != n_leaves_ - 1)
        fail(errc::shape_mismatch, "dendrogram must have exactly n-1 merges");

    std::vector<bool> leaf_used(n_leaves_, false);
    std::vector<bool> internal_used(merges_.size(), false);
    double prev_height = -std::numeric_limits<double>::infinity();
    for (std::size_t q = 1; q <= merges_.size(); ++q) {
        const Merge& m = merges_[q - 1];
        if (!(m.height >= 0.0))
            fail(errc::invalid_argument, "merge heights must be non-negative");
        if (m.height < prev_height)
            fail(errc::invalid_argument, "merge heights must be non-decreasing with rank");
        prev_height = m.height;

        std::vector<std::size_t> expect;
        for (const NodeRef* child : {&m.left, &m.right}) {
            if (child->leaf) {
                if (child->index >= n_leaves_ || leaf_used[child->index])
                    fail(errc::invalid_argument, "leaf used twice or out of range");
                leaf_used[child->index] = true;
                expect.push_back(child->index);
            } else {
                if (child->index >= q || child->index == 0 || internal_used[child->index - 1])
                    fail(errc::invalid_argument, "internal child rank invalid or reused");
                internal_used[child->index - 1] = true;
                const auto& sub = merges_[child->index - 1].members;
                expect.insert(expect.end(), sub.begin(), sub.end());
            }
        }
        std::sort(expect.begin(), expect.end());
        if (expect != m.members)
            fail(errc::invalid_argument,
                 "merge " + std::to_string(q) + " member set does not match its children");
    }
    if (merges_.back().members.size() != n_leaves_)
        fail(errc::invalid_argument, "root must contain every leaf");
}

void Dendrogram::index_tree() {
    leaf_parent_.assign(n_leaves_, 0);
    internal_parent_.assign(merges_.size(), 0);
    for (std::size_t q = 1; q <= merges_.size(); ++q) {
        for (const NodeRef* child : {&merges_[q - 1].left, &merges_[q - 1].right}) {
            if (child->leaf)
                leaf_parent_[child->index] = q;
            else
                internal_parent_[child->index - 1] = q;
        }
    }
    leaf_order_.clear();
    leaf_order_.reserve(n_leaves_);
    // iterative depth-first walk, left child first
    std::vector<NodeRef> stack{NodeRef::internal(root_rank())};
    while (!stack.empty()) {
        NodeRef node = stack.back();
        stack.pop_back();
        if (node.leaf) {
            leaf_order_.push_back(node.index);
        } else {
            stack.push_back(merges_[node.index - 1].right);
            stack.push_back(merges_[node.index - 1].left);
        }
    }
}

std::size_t Dendrogram::parent_rank(const NodeRef& node) const {
    if (node.leaf) {
        if (node.index >= n_leaves_) fail(errc::leaf_not_found, "leaf index out of range");
        return leaf_parent_[node.index];
    }
    if (node.index == 0 || node.index > merges_.size())
        fail(errc::invalid_argument, "internal rank out of range");
    return internal_parent_[node.index - 1];
}

std::vector<std::size_t> Dendrogram::path_to_leaf(std::size_t leaf) const {
    if (leaf >= n_leaves_) fail(errc::leaf_not_found, "leaf index out of range");
    std::vector<std::size_t> path;
    for (std::size_t q = leaf_parent_[leaf]; q != 0; q = internal_parent_[q - 1])
        path.push_back(q);
    std::reverse(path.begin(), path.end());
    return path;
}

std::size_t Dendrogram::leaf_depth(std::size_t leaf) const {
    return path_to_leaf(leaf).size();
}

Dendrogram Dendrogram::with_swapped_children(std::size_t rank) const {
    if (rank == 0 || rank > merges_.size())
        fail(errc::invalid_argument, "internal rank out of range");
    std::vector<Merge> merges = merges_;
    std::swap(merges[rank - 1].left, merges[rank - 1].right);
    return Dendrogram(n_leaves_, std::move(merges));
}

UltrametricMatrix::UltrametricMatrix(std::size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
    if (values_.size() != n_ * n_)
        fail(errc::shape_mismatch, "distance matrix must be n*n");
    for (std::size_t i = 0; i < n_; ++i) {
        if (values_[i * n_ + i] != 0.0)
            fail(errc::invalid_argument, "distance matrix diagonal must be zero");
        for (std::size_t j = 0; j < i; ++j) {
            const double dij = values_[i * n_ + j];
            if (!(dij >= 0.0) || dij != values_[j * n_ + i])
                fail(errc::invalid_argument, "distance matrix must be symmetric non-negative");
        }
    }
}

namespace {

struct Cluster {
    double mass = 0.0;
    std::vector<double> centroid;
    std::vector<std::size_t> members; // sorted
    NodeRef ref;
};

double ward_cost(const Cluster& a, const Cluster& b) {
    const double mm = a.mass + b.mass;
    if (mm <= 0.0) return 0.0;
    double d2 = 0.0;
    for (std::size_t j = 0; j < a.centroid.size(); ++j) {
        const double d = a.centroid[j] - b.centroid[j];
        d2 += d * d;
    }
    return a.mass * b.mass / mm * d2;
}

} // namespace

Dendrogram ward_cluster(const DataMatrix& mat, const WeightVector& weights) {
    const std::size_t n = mat.rows();
    if (n < 2) fail(errc::too_few_rows, "clustering needs at least 2 rows");
    if (weights.size() != n)
        fail(errc::shape_mismatch, "weight count does not match row count");

    std::vector<Cluster> pool(n);
    pool.reserve(2 * n - 1);
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < n; ++i) {
        auto row = mat.row(i);
        pool[i] = {weights[i], {row.begin(), row.end()}, {i}, NodeRef::make_leaf(i)};
        active.push_back(i);
    }

    // pairwise Ward costs, kept under the Lance-Williams recurrence
    const std::size_t slots = 2 * n - 1;
    std::vector<double> cost(slots * slots, 0.0);
    auto cost_at = [&](std::size_t a, std::size_t b) -> double& {
        return a < b ? cost[a * slots + b] : cost[b * slots + a];
    };
    for (std::size_t ai = 0; ai < active.size(); ++ai)
        for (std::size_t bi = ai + 1; bi < active.size(); ++bi)
            cost_at(active[ai], active[bi]) = ward_cost(pool[active[ai]], pool[active[bi]]);

    std::vector<Merge> merges;
    merges.reserve(n - 1);
    while (active.size() > 1) {
        // full scan; ties resolved by (lowest min member, then partner's min member)
        std::size_t best_a = 0, best_b = 0;
        double best_cost = std::numeric_limits<double>::infinity();
        std::size_t best_lo = 0, best_hi = 0;
        bool first = true;
        for (std::size_t ai = 0; ai < active.size(); ++ai) {
            for (std::size_t bi = ai + 1; bi < active.size(); ++bi) {
                const std::size_t a = active[ai], b = active[bi];
                const double c = cost_at(a, b);
                const std::size_t la = pool[a].members.front();
                const std::size_t lb = pool[b].members.front();
                const std::size_t lo = std::min(la, lb), hi = std::max(la, lb);
                if (first || c < best_cost ||
                    (c == best_cost && (lo < best_lo || (lo == best_lo && hi < best_hi)))) {
                    first = false;
                    best_cost = c;
                    best_lo = lo;
                    best_hi = hi;
                    best_a = a;
                    best_b = b;
                }
            }
        }

        Cluster& ca = pool[best_a];
        Cluster& cb = pool[best_b];
        Cluster merged;
        merged.mass = ca.mass + cb.mass;
        merged.centroid.resize(mat.cols());
        for (std::size_t j = 0; j < mat.cols(); ++j)
            merged.centroid[j] = merged.mass > 0.0
                                     ? (ca.mass * ca.centroid[j] + cb.mass * cb.centroid[j]) / merged.mass
                                     : 0.5 * (ca.centroid[j] + cb.centroid[j]);
        merged.members.resize(ca.members.size() + cb.members.size());
        std::merge(ca.members.begin(), ca.members.end(), cb.members.begin(), cb.members.end(),
                   merged.members.begin());
        merged.ref = NodeRef::internal(merges.size() + 1);

        const bool a_is_left = ca.members.front() < cb.members.front();
        merges.push_back({a_is_left ? ca.ref : cb.ref,
                          a_is_left ? cb.ref : ca.ref,
                          best_cost, merged.members});

        const std::size_t slot = pool.size();
        // Lance-Williams update for Ward
        for (std::size_t c : active) {
            if (c == best_a || c == best_b) continue;
            const double mc = pool[c].mass;
            const double total = merged.mass + mc;
            double updated;
            if (total > 0.0) {
                updated = ((ca.mass + mc) * cost_at(best_a, c) +
                           (cb.mass + mc) * cost_at(best_b, c) - mc * best_cost) /
                          total;
            } else {
                updated = 0.0;
            }
            cost_at(slot, c) = updated;
        }
        pool.push_back(std::move(merged));
        std::erase(active, best_a);
        std::erase(active, best_b);
        active.push_back(slot);
    }
    return Dendrogram(n, std::move(merges));
}

Dendrogram ward_cluster(const DataMatrix& mat) {
    return ward_cluster(mat, WeightVector::constant(mat.rows()));
}

UltrametricMatrix cophenetic(const Dendrogram& dend, CopheneticMode mode) {
    const std::size_t n = dend.n_leaves();
    std::vector<double> d(n * n, 0.0);
    // lowest common node: fill pairs the first time they share a cluster
    for (std::size_t q = 1; q <= dend.root_rank(); ++q) {
        const Merge& m = dend.merge(q);
        const double value = mode == CopheneticMode::height ? m.height
                                                            : static_cast<double>(q);
        auto collect = [&](const NodeRef& node) -> std::vector<std::size_t> {
            if (node.leaf) return {node.index};
            return dend.merge(node.index).members;
        };
        for (std::size_t i : collect(m.left))
            for (std::size_t j : collect(m.right)) {
                d[i * n + j] = value;
                d[j * n + i] = value;
            }
    }
    return UltrametricMatrix(n, std::move(d));
}

UltrametricCheck is_ultrametric(const UltrametricMatrix& d, double tol) {
    const std::size_t n = d.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (d(i, j) > std::max(d(i, k), d(j, k)) + tol)
                    return {false, {i, j, k}};
            }
    return {};
}

} // namespace dendrowave
