#include "dendrowave/faces.hpp"

#include <algorithm>
#include <random>

namespace dendrowave {

DataMatrix generate_faces(std::size_t n, std::uint64_t seed) {
    if (n < 2) fail(errc::too_few_rows, "need at least 2 faces to cluster");
    std::mt19937_64 rng(seed);
    std::vector<double> values;
    values.reserve(n * kFaceAttributes);
    for (std::size_t i = 0; i < n * kFaceAttributes; ++i) {
        // top 53 bits -> [0,1); avoids distribution implementation differences
        values.push_back(static_cast<double>(rng() >> 11) * 0x1.0p-53);
    }
    std::vector<std::string> cols = {"area",    "shape",    "nose",     "mouth_y",
                                     "smile",   "mouth_w",  "eye_y",    "eye_sep",
                                     "eye_ang", "eye_shape", "eye_w",   "pupil",
                                     "brow_y",  "brow_ang", "brow_w"};
    return DataMatrix(n, kFaceAttributes, std::move(values), {}, std::move(cols));
}

std::pair<FaceVector, FaceRemap> face_from_values(std::span<const double> values) {
    if (values.size() != kFaceAttributes)
        fail(errc::shape_mismatch, "face vectors have exactly 15 attributes");
    FaceVector face{};
    FaceRemap remap;
    double lo = values[0], hi = values[0];
    for (double v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (lo < 0.0 || hi > 1.0) {
        remap.applied = true;
        remap.lo = lo;
        remap.hi = hi;
        const double range = hi - lo;
        for (std::size_t i = 0; i < kFaceAttributes; ++i)
            face[i] = range > 0.0 ? (values[i] - lo) / range : 0.5;
    } else {
        std::copy(values.begin(), values.end(), face.begin());
    }
    return {face, remap};
}

FaceVector face_from_row(const DataMatrix& mat, std::size_t row) {
    if (mat.cols() != kFaceAttributes)
        fail(errc::shape_mismatch, "face matrices have exactly 15 columns");
    if (row >= mat.rows()) fail(errc::leaf_not_found, "row index out of range");
    FaceVector face{};
    auto r = mat.row(row);
    for (std::size_t i = 0; i < kFaceAttributes; ++i) {
        if (r[i] < 0.0 || r[i] > 1.0)
            fail(errc::invalid_argument, "face attributes must lie in [0,1]");
        face[i] = r[i];
    }
    return face;
}

} // namespace dendrowave
