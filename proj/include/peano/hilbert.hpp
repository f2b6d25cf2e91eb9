#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

// Hilbert curve index for grid cells (Skilling's transpose algorithm).
// Used as the traversal priority when ordering chain walks, so that the
// emitted curves keep nearby parameters nearby in space.

namespace peano {

inline uint64_t hilbert_index(std::span<const int32_t> coords, int level, int dim) {
    if (level == 0) return 0;
    if (dim == 1) return uint64_t(uint32_t(coords[0]));
    if (level * dim > 62) throw std::invalid_argument("hilbert_index: too many bits");

    std::vector<uint32_t> X(coords.begin(), coords.end());
    const uint32_t M = uint32_t(1) << (level - 1);

    // inverse undo
    for (uint32_t Q = M; Q > 1; Q >>= 1) {
        uint32_t P = Q - 1;
        for (int i = 0; i < dim; ++i) {
            if (X[i] & Q) {
                X[0] ^= P;
            } else {
                uint32_t t = (X[0] ^ X[i]) & P;
                X[0] ^= t;
                X[i] ^= t;
            }
        }
    }
    // Gray encode
    for (int i = 1; i < dim; ++i) X[i] ^= X[i - 1];
    uint32_t t = 0;
    for (uint32_t Q = M; Q > 1; Q >>= 1)
        if (X[dim - 1] & Q) t ^= Q - 1;
    for (int i = 0; i < dim; ++i) X[i] ^= t;

    // interleave transpose bits, most significant first
    uint64_t out = 0;
    for (int b = level - 1; b >= 0; --b)
        for (int i = 0; i < dim; ++i) out = (out << 1) | ((X[i] >> b) & 1u);
    return out;
}

}  // namespace peano
