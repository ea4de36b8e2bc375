#include "dendrowave/wavelet.hpp"

#include <algorithm>
#include <cmath>

namespace dendrowave {

const char* scheme_name(HaarScheme scheme) noexcept {
    switch (scheme) {
    case HaarScheme::basic:    return "basic";
    case HaarScheme::lifting1: return "lifting1";
    case HaarScheme::lifting2: return "lifting2";
    }
    return "?";
}

HaarScheme scheme_from_name(const std::string& name) {
    if (name == "basic") return HaarScheme::basic;
    if (name == "lifting1") return HaarScheme::lifting1;
    if (name == "lifting2") return HaarScheme::lifting2;
    fail(errc::invalid_argument, "unknown scheme: \"" + name + "\"");
}

DendroWavelet::DendroWavelet(HaarScheme scheme, Dendrogram dendrogram,
                             std::vector<double> smooth,
                             std::vector<std::vector<double>> details,
                             std::vector<std::vector<double>> node_smooths,
                             std::vector<std::string> row_labels,
                             std::vector<std::string> col_labels,
                             bool integral_input)
    : scheme_(scheme), dendrogram_(std::move(dendrogram)), smooth_(std::move(smooth)),
      details_(std::move(details)), node_smooths_(std::move(node_smooths)),
      row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)),
      integral_input_(integral_input) {
    const std::size_t internal = dendrogram_.root_rank();
    if (details_.size() != internal || node_smooths_.size() != internal)
        fail(errc::shape_mismatch, "transform must hold one detail per internal node");
    for (const auto& d : details_)
        if (d.size() != smooth_.size())
            fail(errc::shape_mismatch, "detail dimension mismatch");
}

DendroWavelet forward(const Dendrogram& dend, const DataMatrix& mat, HaarScheme scheme) {
    const std::size_t n = dend.n_leaves();
    const std::size_t m = mat.cols();
    if (mat.rows() != n)
        fail(errc::shape_mismatch, "dendrogram leaves do not match matrix rows");

    std::vector<std::vector<double>> node_smooths(n - 1);
    std::vector<std::vector<double>> details(n - 1);

    auto value_of = [&](const NodeRef& node) -> std::vector<double> {
        if (node.leaf) {
            auto row = mat.row(node.index);
            return {row.begin(), row.end()};
        }
        return node_smooths[node.index - 1];
    };

    for (std::size_t q = 1; q <= n - 1; ++q) {
        const Merge& mg = dend.merge(q);
        const std::vector<double> a = value_of(mg.left);
        const std::vector<double> b = value_of(mg.right);
        std::vector<double> s(m), d(m);
        for (std::size_t j = 0; j < m; ++j) {
            switch (scheme) {
            case HaarScheme::basic:
                s[j] = 0.5 * (a[j] + b[j]);
                d[j] = 0.5 * (a[j] - b[j]);
                break;
            case HaarScheme::lifting1:
                s[j] = 0.5 * (a[j] + b[j]);
                d[j] = a[j] - b[j];
                break;
            case HaarScheme::lifting2:
                s[j] = a[j] + b[j];
                d[j] = a[j] - b[j];
                break;
            }
        }
        node_smooths[q - 1] = std::move(s);
        details[q - 1] = std::move(d);
    }

    std::vector<double> smooth = node_smooths[n - 2];
    return DendroWavelet(scheme, dend, std::move(smooth), std::move(details),
                         std::move(node_smooths), mat.row_labels(), mat.col_labels(),
                         mat.is_integral());
}

namespace {

void reconstruct_children(HaarScheme scheme, const std::vector<double>& s,
                          const std::vector<double>& d,
                          std::vector<double>& left, std::vector<double>& right) {
    const std::size_t m = s.size();
    left.resize(m);
    right.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        switch (scheme) {
        case HaarScheme::basic:
            left[j] = s[j] + d[j];
            right[j] = s[j] - d[j];
            break;
        case HaarScheme::lifting1:
            left[j] = s[j] + 0.5 * d[j];
            right[j] = s[j] - 0.5 * d[j];
            break;
        case HaarScheme::lifting2:
            left[j] = 0.5 * (s[j] + d[j]);
            right[j] = 0.5 * (s[j] - d[j]);
            break;
        }
    }
}

} // namespace

DataMatrix inverse(const DendroWavelet& wav) {
    const Dendrogram& dend = wav.dendrogram();
    const std::size_t n = dend.n_leaves();
    const std::size_t m = wav.dim();

    std::vector<std::vector<double>> node_value(n - 1);
    node_value[dend.root_rank() - 1] = wav.smooth();
    std::vector<double> out(n * m);

    for (std::size_t q = dend.root_rank(); q >= 1; --q) {
        const Merge& mg = dend.merge(q);
        std::vector<double> left, right;
        reconstruct_children(wav.scheme(), node_value[q - 1], wav.detail(q), left, right);
        auto deposit = [&](const NodeRef& node, std::vector<double>& value) {
            if (node.leaf)
                std::copy(value.begin(), value.end(), out.begin() + node.index * m);
            else
                node_value[node.index - 1] = std::move(value);
        };
        deposit(mg.left, left);
        deposit(mg.right, right);
    }
    return DataMatrix(n, m, std::move(out), wav.row_labels(), wav.col_labels());
}

ApproximationChain chain(const DendroWavelet& wav, std::size_t leaf) {
    const Dendrogram& dend = wav.dendrogram();
    if (leaf >= dend.n_leaves()) fail(errc::leaf_not_found, "leaf index out of range");

    ApproximationChain out;
    out.leaf = leaf;
    out.scheme = wav.scheme();
    const auto path = dend.path_to_leaf(leaf); // root first
    for (std::size_t i = 0; i < path.size(); ++i) {
        const Merge& mg = dend.merge(path[i]);
        const NodeRef next = i + 1 < path.size() ? NodeRef::internal(path[i + 1])
                                                 : NodeRef::make_leaf(leaf);
        out.steps.push_back({path[i], mg.left == next ? +1 : -1});
    }
    return out;
}

std::vector<double> partial_reconstruct(const DendroWavelet& wav, std::size_t leaf,
                                        std::size_t depth) {
    const ApproximationChain ch = chain(wav, leaf);
    if (depth > ch.steps.size())
        fail(errc::depth_out_of_range,
             "depth " + std::to_string(depth) + " exceeds chain length " +
                 std::to_string(ch.steps.size()));

    std::vector<double> v = wav.smooth();
    for (std::size_t i = 0; i < depth; ++i) {
        const auto& d = wav.detail(ch.steps[i].node_rank);
        const double sign = ch.steps[i].sign;
        for (std::size_t j = 0; j < v.size(); ++j) {
            switch (wav.scheme()) {
            case HaarScheme::basic:
                v[j] += sign * d[j];
                break;
            case HaarScheme::lifting1:
                v[j] += 0.5 * sign * d[j];
                break;
            case HaarScheme::lifting2:
                v[j] = 0.5 * (v[j] + sign * d[j]);
                break;
            }
        }
    }
    return v;
}

ChainStats chain_stats(const Dendrogram& dend) {
    ChainStats stats;
    std::vector<std::size_t> lengths;
    lengths.reserve(dend.n_leaves());
    for (std::size_t i = 0; i < dend.n_leaves(); ++i)
        lengths.push_back(dend.leaf_depth(i));
    std::sort(lengths.begin(), lengths.end());

    stats.min = lengths.front();
    stats.max = lengths.back();
    double sum = 0.0;
    for (std::size_t len : lengths) {
        ++stats.histogram[len];
        sum += static_cast<double>(len);
    }
    stats.mean = sum / static_cast<double>(lengths.size());
    const std::size_t n = lengths.size();
    stats.median = n % 2 == 1 ? static_cast<double>(lengths[n / 2])
                              : 0.5 * (static_cast<double>(lengths[n / 2 - 1]) +
                                       static_cast<double>(lengths[n / 2]));
    return stats;
}

} // namespace dendrowave
