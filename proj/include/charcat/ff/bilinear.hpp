#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "charcat/ff/matrix.hpp"

namespace charcat::ff {

/// b : F_p^v_dim x F_p^v_dim -> F_p^w_dim, with coordinate k given by u^T grams[k] v.
struct BilinearMap {
    std::uint64_t p = 2;
    std::size_t v_dim = 0;
    std::size_t w_dim = 0;
    std::vector<Mat> grams;

    BilinearMap() = default;
    BilinearMap(std::uint64_t p, std::size_t v_dim, std::size_t w_dim, std::vector<Mat> grams);

    static BilinearMap zero(std::uint64_t p, std::size_t v_dim, std::size_t w_dim);

    Vec eval(std::span<const Residue> u, std::span<const Residue> v) const;
    /// Every Gram matrix is skew with zero diagonal.
    bool is_alternating() const;
    /// Direct sum b (+) c on V_b (+) V_c -> W_b (+) W_c.
    BilinearMap direct_sum(const BilinearMap& c) const;

    bool operator==(const BilinearMap& o) const = default;
};

/// Left radical {v : b(v, u) = 0 for all u}.
Subspace bimap_radical(const BilinearMap& b);

/// Checks b2(alpha u, alpha v) = beta b1(u, v) on basis pairs.
bool is_bimap_morphism(const BilinearMap& b1, const BilinearMap& b2, const Mat& alpha, const Mat& beta);

} // namespace charcat::ff
