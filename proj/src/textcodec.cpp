#include "dendrowave/textcodec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

namespace dendrowave {

std::vector<std::string> tokenize(std::string_view text, const TokenizerOptions& opts) {
    std::vector<std::string> tokens;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            tokens.push_back(cur);
            cur.clear();
        }
    };
    for (unsigned char c : text) {
        const bool letter = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
        const bool keep = letter || (opts.digits_join && c >= '0' && c <= '9') ||
                          (opts.apostrophe_joins && c == '\'');
        if (keep)
            cur += static_cast<char>(std::tolower(c));
        else
            flush();
    }
    flush();
    return tokens;
}

void RankTable::build_index() {
    index_.clear();
    index_.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) index_.emplace_back(terms_[i], i + 1);
    std::sort(index_.begin(), index_.end());
    for (std::size_t i = 1; i < index_.size(); ++i)
        if (index_[i].first == index_[i - 1].first)
            fail(errc::duplicate_label, "duplicate term: \"" + index_[i].first + "\"");
}

RankTable RankTable::from_corpus(const std::vector<std::vector<std::string>>& docs) {
    std::map<std::string, std::uint64_t> counts;
    for (const auto& doc : docs)
        for (const auto& token : doc) ++counts[token];
    if (counts.empty()) fail(errc::empty_corpus, "corpus has no tokens");

    std::vector<std::pair<std::string, std::uint64_t>> items(counts.begin(), counts.end());
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second; // frequency desc
        return a.first < b.first;                             // then lexicographic
    });

    RankTable rt;
    for (auto& [term, freq] : items) {
        rt.terms_.push_back(std::move(term));
        rt.frequencies_.push_back(freq);
    }
    rt.build_index();
    return rt;
}

RankTable RankTable::from_ranked_terms(std::vector<std::string> terms,
                                       std::vector<std::uint64_t> frequencies) {
    if (terms.empty()) fail(errc::empty_corpus, "term list is empty");
    if (frequencies.empty()) {
        // synthesize strictly decreasing frequencies consistent with the order
        frequencies.resize(terms.size());
        for (std::size_t i = 0; i < terms.size(); ++i)
            frequencies[i] = terms.size() - i;
    }
    if (frequencies.size() != terms.size())
        fail(errc::length_mismatch, "frequency count does not match term count");
    for (std::size_t i = 1; i < frequencies.size(); ++i)
        if (frequencies[i] > frequencies[i - 1])
            fail(errc::invalid_argument, "frequencies must be non-increasing in rank order");
    RankTable rt;
    rt.terms_ = std::move(terms);
    rt.frequencies_ = std::move(frequencies);
    rt.build_index();
    return rt;
}

std::size_t RankTable::rank(const std::string& term) const {
    auto it = std::lower_bound(index_.begin(), index_.end(), term,
                               [](const auto& p, const std::string& t) { return p.first < t; });
    if (it == index_.end() || it->first != term)
        fail(errc::unknown_term, "unknown term: \"" + term + "\"");
    return it->second;
}

bool RankTable::contains(const std::string& term) const noexcept {
    auto it = std::lower_bound(index_.begin(), index_.end(), term,
                               [](const auto& p, const std::string& t) { return p.first < t; });
    return it != index_.end() && it->first == term;
}

const std::string& RankTable::term(std::size_t rank) const {
    if (rank == 0 || rank > terms_.size())
        fail(errc::invalid_argument, "rank out of range: " + std::to_string(rank));
    return terms_[rank - 1];
}

std::uint64_t RankTable::frequency(std::size_t rank) const {
    if (rank == 0 || rank > terms_.size())
        fail(errc::invalid_argument, "rank out of range: " + std::to_string(rank));
    return frequencies_[rank - 1];
}

std::string RankTable::to_tsv() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        out << terms_[i] << '\t' << (i + 1) << '\t' << frequencies_[i] << '\n';
    return out.str();
}

RankTable RankTable::from_tsv(std::string_view text) {
    std::vector<std::string> terms;
    std::vector<std::uint64_t> freqs;
    std::size_t pos = 0;
    std::size_t lineno = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++lineno;
        if (line.empty()) continue;
        const std::size_t t1 = line.find('\t');
        const std::size_t t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
        if (t1 == std::string_view::npos || t2 == std::string_view::npos)
            fail(errc::io_error, "rank table line " + std::to_string(lineno) +
                                     " is not term<TAB>rank<TAB>frequency");
        terms.emplace_back(line.substr(0, t1));
        std::size_t rank = 0;
        std::uint64_t freq = 0;
        auto rank_sv = line.substr(t1 + 1, t2 - t1 - 1);
        auto freq_sv = line.substr(t2 + 1);
        auto r1 = std::from_chars(rank_sv.data(), rank_sv.data() + rank_sv.size(), rank);
        auto r2 = std::from_chars(freq_sv.data(), freq_sv.data() + freq_sv.size(), freq);
        if (r1.ec != std::errc{} || r2.ec != std::errc{} || rank != terms.size())
            fail(errc::io_error, "rank table line " + std::to_string(lineno) +
                                     " has a bad rank or frequency");
        freqs.push_back(freq);
    }
    return from_ranked_terms(std::move(terms), std::move(freqs));
}

RankTable rank_terms(const std::vector<std::vector<std::string>>& docs) {
    if (docs.empty()) fail(errc::empty_corpus, "corpus has no documents");
    return RankTable::from_corpus(docs);
}

std::vector<std::size_t> encode_ranks(const std::vector<std::string>& tokens,
                                      const RankTable& rt) {
    std::vector<std::size_t> out;
    out.reserve(tokens.size());
    for (const auto& token : tokens) out.push_back(rt.rank(token));
    return out;
}

std::vector<std::string> decode_ranks(const std::vector<std::size_t>& seq,
                                      const RankTable& rt) {
    std::vector<std::string> out;
    out.reserve(seq.size());
    for (std::size_t r : seq) out.push_back(rt.term(r));
    return out;
}

std::vector<std::size_t> normalize_length(const std::vector<std::size_t>& seq, std::size_t L) {
    if (seq.empty()) fail(errc::invalid_argument, "sequence must not be empty");
    if (seq.size() > L)
        fail(errc::too_long, "sequence length " + std::to_string(seq.size()) +
                                 " exceeds target " + std::to_string(L));
    const std::size_t base = L / seq.size();
    const std::size_t extra = L % seq.size(); // first `extra` terms get one more copy
    std::vector<std::size_t> out;
    out.reserve(L);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const std::size_t reps = base + (i < extra ? 1 : 0);
        out.insert(out.end(), reps, seq[i]);
    }
    return out;
}

std::vector<std::size_t> collapse_runs(const std::vector<std::size_t>& seq) {
    std::vector<std::size_t> out;
    for (std::size_t v : seq)
        if (out.empty() || out.back() != v) out.push_back(v);
    return out;
}

std::uint64_t boolean_encoding_size(std::uint64_t L, std::uint64_t m) {
    if (L < 1 || m < 1) fail(errc::invalid_argument, "L and m must be at least 1");
    return L * m;
}

RankDecomposition rank_decompose(std::size_t r, const RankTable& rt) {
    if (r < 1) fail(errc::invalid_argument, "rank must be at least 1");
    const std::size_t m = rt.size();
    RankDecomposition out;
    out.rank = r;
    out.multiplier = (r - 1) / m;
    out.remainder = (r - 1) % m + 1;
    out.word = rt.term(out.remainder);
    return out;
}

namespace {

long long to_integer(double v, const char* what) {
    if (v != std::floor(v) || std::abs(v) > 9.0e15)
        fail(errc::non_integer_transform,
             std::string(what) + " is not an exact integer");
    return static_cast<long long>(v);
}

std::string render_decomposition(const RankDecomposition& d, const std::string& top_term) {
    if (d.rank == 0) return "0"; // zero detail: no word
    std::string out;
    if (d.multiplier > 0)
        out += std::to_string(d.multiplier) + "*\"" + top_term + "\" + ";
    out += '"' + d.word + '"';
    return out;
}

} // namespace

std::string WordEquation::numeric_expression() const {
    std::string expr = std::to_string(root_smooth);
    for (const auto& step : steps) {
        expr = "(" + expr + (step.sign > 0 ? " + " : " - ") + std::to_string(step.detail) +
               ")/2";
    }
    return expr + " = " + std::to_string(value);
}

std::string WordEquation::word_expression() const {
    std::string expr = render_decomposition(root_decomposition, top_term);
    for (const auto& step : steps) {
        expr = "(" + expr + (step.sign > 0 ? " + " : " - ") +
               render_decomposition(step.decomposition, top_term) + ")/2";
    }
    return "\"" + leaf_label + "\" = " + expr;
}

std::set<std::string> WordEquation::terms_used() const {
    std::set<std::string> out;
    if (root_decomposition.rank != 0) out.insert(root_decomposition.word);
    for (const auto& step : steps)
        if (step.decomposition.rank != 0) out.insert(step.decomposition.word);
    return out;
}

WordEquation word_equation(const DendroWavelet& wav, std::size_t leaf, const RankTable& rt) {
    if (wav.scheme() != HaarScheme::lifting2)
        fail(errc::non_integer_transform, "word equations require the lifting2 scheme");
    if (wav.dim() != 1)
        fail(errc::non_integer_transform, "word equations require single-column rank data");
    if (!wav.integral_input())
        fail(errc::non_integer_transform, "word equations require integer rank input");

    const ApproximationChain ch = chain(wav, leaf);
    WordEquation eq;
    eq.leaf = leaf;
    eq.leaf_label = wav.row_labels().at(leaf);
    eq.top_term = rt.term(rt.size());
    if (wav.smooth()[0] < 1.0)
        fail(errc::non_rank_input, "root smooth must be a positive rank sum");
    eq.root_smooth = to_integer(wav.smooth()[0], "root smooth");
    eq.root_decomposition = rank_decompose(static_cast<std::size_t>(eq.root_smooth), rt);

    long long v = eq.root_smooth;
    for (const ChainStep& step : ch.steps) {
        const long long d = to_integer(wav.detail(step.node_rank)[0], "detail");
        const long long magnitude = d < 0 ? -d : d;
        // the stored detail is left-positive; fold its sign into the step sign
        const int sign = d < 0 ? -step.sign : step.sign;
        WordEquationStep out_step;
        out_step.node_rank = step.node_rank;
        out_step.sign = sign;
        out_step.detail = magnitude;
        if (magnitude > 0) {
            out_step.decomposition = rank_decompose(static_cast<std::size_t>(magnitude), rt);
            out_step.decomposition.sign = sign;
        }
        eq.steps.push_back(out_step);

        const long long acc = v + sign * magnitude;
        if (acc % 2 != 0)
            fail(errc::non_integer_transform,
                 "chain value is odd before halving; transform is inconsistent");
        v = acc / 2;
    }
    eq.value = v;
    return eq;
}

std::vector<NodeSetLabel> node_set_labels(const Dendrogram& dend,
                                          const std::vector<std::string>& leaf_labels) {
    auto label_of = [&](std::size_t leaf) {
        return leaf < leaf_labels.size() ? leaf_labels[leaf] : "L" + std::to_string(leaf + 1);
    };
    std::vector<NodeSetLabel> out;
    out.reserve(dend.n_leaves());
    for (std::size_t leaf = 0; leaf < dend.n_leaves(); ++leaf) {
        const std::size_t parent = dend.parent_rank(NodeRef::make_leaf(leaf));
        const Merge& mg = dend.merge(parent);
        const NodeRef sibling = mg.left == NodeRef::make_leaf(leaf) ? mg.right : mg.left;
        NodeSetLabel item;
        item.leaf = leaf;
        item.leaf_label = label_of(leaf);
        item.parent_rank = parent;
        item.sibling_ref = sibling.label();
        item.expression = "q" + std::to_string(parent) + " - " +
                          (sibling.leaf ? "{" + sibling.label() + "}" : sibling.label());
        out.push_back(std::move(item));
    }
    return out;
}

} // namespace dendrowave
