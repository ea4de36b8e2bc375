#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "dendrowave/core.hpp"

namespace dendrowave {

/// 15 glyph attributes in [0,1]:
/// 1 face area, 2 face shape, 3 nose length, 4 mouth location, 5 smile curve,
/// 6 mouth width, 7-11 eye location/separation/angle/shape/width,
/// 12 pupil location, 13-15 eyebrow location/angle/width.
inline constexpr std::size_t kFaceAttributes = 15;
using FaceVector = std::array<double, kFaceAttributes>;

/// n x 15 matrix of i.i.d. uniforms from a seeded mt19937_64 (top-53-bit
/// mantissa mapping, identical on every platform).
DataMatrix generate_faces(std::size_t n, std::uint64_t seed);

/// Affine remap applied before rendering vectors that leave [0,1]
/// (detail faces can be negative); recorded in the SVG title.
struct FaceRemap {
    bool applied = false;
    double lo = 0.0;
    double hi = 1.0;
};

/// Remap arbitrary values onto [0,1]; identity when already inside.
std::pair<FaceVector, FaceRemap> face_from_values(std::span<const double> values);

FaceVector face_from_row(const DataMatrix& mat, std::size_t row);

} // namespace dendrowave
