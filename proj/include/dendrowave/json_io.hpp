#pragma once

#include <string>

#include "dendrowave/cluster.hpp"
#include "dendrowave/corranal.hpp"
#include "dendrowave/infometrics.hpp"
#include "dendrowave/textcodec.hpp"
#include "dendrowave/wavelet.hpp"

namespace dendrowave {

/// Serialized forms are deterministic: fixed key order, locale-independent
/// shortest-round-trip numbers. Identical inputs produce identical bytes.

std::string dendrogram_to_json(const Dendrogram& dend);
Dendrogram dendrogram_from_json(const std::string& text);

std::string transform_to_json(const DendroWavelet& wav);
/// Rebuilds the transform against its dendrogram (node smooths are a cache
/// and are restored by reconstruction).
DendroWavelet transform_from_json(const std::string& text, const Dendrogram& dend);

std::string chains_to_json(const DendroWavelet& wav);
std::string chain_stats_to_json(const ChainStats& stats);
std::string embedding_to_json(const FactorEmbedding& emb);
std::string embedding_to_csv(const FactorEmbedding& emb, int precision = 0);
std::string word_equations_to_json(const std::vector<WordEquation>& eqs);
std::string info_report_to_json(const EncodingDescriptor& e, double bits);
std::string matrix_to_json(const DataMatrix& mat);

} // namespace dendrowave
