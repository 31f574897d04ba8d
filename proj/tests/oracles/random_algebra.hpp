#pragma once

// Seeded random 2-generated matrix algebras, drawn from random conjugates of
// block-triangular patterns so that the dimension stays small.

#include <cstdint>
#include <vector>

#include "charcat/core/report.hpp"
#include "charcat/ff/algebra.hpp"

namespace oracle {

inline charcat::ff::MatrixAlgebra random_algebra(std::uint64_t p, std::size_t n, charcat::Sampler& rng,
                                                 std::size_t max_dim = 6) {
    using charcat::ff::Mat;
    // support masks, row-major, 1 = free entry
    static const std::vector<std::vector<int>> masks2 = {
        {1, 1, 1, 1}, {1, 1, 0, 1}, {0, 1, 0, 0}, {1, 0, 0, 1}, {1, 1, 0, 0}};
    static const std::vector<std::vector<int>> masks3 = {
        {1, 1, 1, 0, 1, 1, 0, 0, 1}, {0, 1, 1, 0, 0, 1, 0, 0, 0}, {1, 1, 1, 0, 1, 0, 0, 0, 1},
        {1, 0, 0, 0, 1, 1, 0, 0, 1}, {1, 0, 0, 0, 1, 1, 0, 1, 1}, {0, 0, 1, 0, 0, 1, 0, 0, 0},
        {1, 0, 0, 0, 0, 0, 0, 0, 1}, {0, 1, 0, 0, 0, 0, 0, 0, 0}};
    const auto& masks = n == 2 ? masks2 : masks3;
    for (;;) {
        const auto& mask = masks[rng.below(masks.size())];
        Mat conj(p, n, n);
        do {
            for (std::size_t i = 0; i < n * n; ++i) conj(i / n, i % n) = rng.below(p);
        } while (!conj.invertible());
        const Mat inv = *conj.inverse();
        std::vector<Mat> gens;
        for (int g = 0; g < 2; ++g) {
            Mat m(p, n, n);
            for (std::size_t i = 0; i < n * n; ++i)
                if (mask[i] != 0) m(i / n, i % n) = rng.below(p);
            gens.push_back(conj * m * inv);
        }
        const bool unit = rng.below(2) == 1;
        auto a = charcat::ff::algebra_closure(p, n, gens, unit);
        if (a.dim() <= max_dim) return a;
    }
}

} // namespace oracle
