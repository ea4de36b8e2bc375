#pragma once

#include <string>
#include <vector>

#include "dendrowave/cluster.hpp"
#include "dendrowave/faces.hpp"

namespace dendrowave {

std::string xml_escape(const std::string& text);

/// Parametric face glyph; every geometric parameter is an affine function of
/// its attribute. The remap, when applied, is noted in the <title>.
std::string render_face_svg(const FaceVector& face, const std::string& title,
                            const FaceRemap& remap = {});

/// Rectangular dendrogram: leaves in display order, bracket heights to scale,
/// internal nodes labeled q1..q(n-1).
std::string render_dendrogram_svg(const Dendrogram& dend,
                                  const std::vector<std::string>& leaf_labels = {});

} // namespace dendrowave
