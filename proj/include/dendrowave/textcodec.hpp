#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dendrowave/cluster.hpp"
#include "dendrowave/wavelet.hpp"

namespace dendrowave {

struct TokenizerOptions {
    bool apostrophe_joins = false; // treat ' as part of a token
    bool digits_join = false;      // treat 0-9 as token characters
};

/// Lowercase tokens; punctuation, whitespace (and by default apostrophes and
/// digits) separate. No stemming.
std::vector<std::string> tokenize(std::string_view text, const TokenizerOptions& opts = {});

/// Bijection between terms and 1-based ranks: 1 = most frequent, ties broken
/// lexicographically.
class RankTable {
public:
    /// Build from corpus-global frequencies.
    static RankTable from_corpus(const std::vector<std::vector<std::string>>& docs);

    /// Build from terms already in rank order (frequencies optional; when
    /// given they must be non-increasing).
    static RankTable from_ranked_terms(std::vector<std::string> terms,
                                       std::vector<std::uint64_t> frequencies = {});

    std::size_t size() const noexcept { return terms_.size(); }
    std::size_t rank(const std::string& term) const; // throws unknown_term
    bool contains(const std::string& term) const noexcept;
    const std::string& term(std::size_t rank) const; // 1-based
    std::uint64_t frequency(std::size_t rank) const;
    const std::vector<std::string>& terms() const noexcept { return terms_; }

    /// term<TAB>rank<TAB>frequency lines, rank order.
    std::string to_tsv() const;
    static RankTable from_tsv(std::string_view text);

private:
    RankTable() = default;
    std::vector<std::string> terms_;        // index = rank-1
    std::vector<std::uint64_t> frequencies_;
    std::vector<std::pair<std::string, std::size_t>> index_; // sorted term -> rank
    void build_index();
};

RankTable rank_terms(const std::vector<std::vector<std::string>>& docs);

/// Replace each token by its rank, order preserved.
std::vector<std::size_t> encode_ranks(const std::vector<std::string>& tokens,
                                      const RankTable& rt);
std::vector<std::string> decode_ranks(const std::vector<std::size_t>& seq,
                                      const RankTable& rt);

/// Stretch `seq` to exactly L values by repeating terms in place; the first
/// (L mod len) terms receive the extra repetition, which trims the excess
/// from the final term's run. Collapsing runs recovers the original sequence
/// whenever it had no adjacent duplicates.
std::vector<std::size_t> normalize_length(const std::vector<std::size_t>& seq, std::size_t L);

/// Collapse consecutive duplicates (decoder for normalize_length).
std::vector<std::size_t> collapse_runs(const std::vector<std::size_t>& seq);

/// Bits of the boolean positional encoding: one m-length indicator per
/// position, L positions.
std::uint64_t boolean_encoding_size(std::uint64_t L, std::uint64_t m);

/// r = k*m + remainder with minimal k >= 0 and remainder in 1..m, so ranks
/// beyond the table wrap onto multiples of the top rank.
struct RankDecomposition {
    std::size_t rank = 0;
    std::size_t multiplier = 0;
    std::size_t remainder = 0;
    std::string word;
    int sign = +1;
};

RankDecomposition rank_decompose(std::size_t r, const RankTable& rt);

/// One chain step of a rank word equation: the signed detail at a node,
/// decomposed into words.
struct WordEquationStep {
    std::size_t node_rank = 0;
    int sign = +1;
    long long detail = 0; // |stored detail| at this node
    RankDecomposition decomposition;
};

/// Exact integer reconstruction of a leaf's rank from the root smooth and
/// the signed details along its chain, with the per-level halving of the
/// lifting2 scheme. Every intermediate value stays an even integer before
/// each division.
struct WordEquation {
    std::size_t leaf = 0;
    std::string leaf_label;
    std::string top_term; // term at the table's top rank m, used for multiples
    long long root_smooth = 0;
    RankDecomposition root_decomposition;
    std::vector<WordEquationStep> steps; // root-level step first
    long long value = 0;                 // the leaf's rank

    /// e.g. "((((282 + 252)/2 + 227)/2 + 15)/2 - 29)/2 = 51"
    std::string numeric_expression() const;
    /// same expression with each rank spelled as k*top_term + word
    std::string word_expression() const;
    std::set<std::string> terms_used() const;
};

WordEquation word_equation(const DendroWavelet& wav, std::size_t leaf, const RankTable& rt);

/// Every leaf written as the difference of its parent's member set and its
/// sibling's, e.g. "q7 - q6" for a leaf whose sibling is internal node q6.
struct NodeSetLabel {
    std::size_t leaf = 0;
    std::string leaf_label;
    std::size_t parent_rank = 0;
    std::string sibling_ref;
    std::string expression;
};

std::vector<NodeSetLabel> node_set_labels(const Dendrogram& dend,
                                          const std::vector<std::string>& leaf_labels = {});

} // namespace dendrowave
