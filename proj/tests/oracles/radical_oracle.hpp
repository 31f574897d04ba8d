#pragma once

// Brute-force Jacobson radical: the span of every element whose principal two-sided
// ideal is nilpotent. Enumerates projective points of the algebra, so dim <= 6.

#include <cstdint>
#include <vector>

#include "charcat/ff/algebra.hpp"
#include "charcat/ff/matrix.hpp"

namespace oracle {

using charcat::ff::Mat;
using charcat::ff::Subspace;
using charcat::ff::Vec;

inline Subspace span_of(std::uint64_t p, std::size_t n, const std::vector<Mat>& ms) {
    std::vector<Vec> rows;
    for (const auto& m : ms) rows.push_back(m.flatten());
    return Subspace::span(p, n * n, rows);
}

inline bool ideal_is_nilpotent(const std::vector<Mat>& ideal, std::uint64_t p, std::size_t n) {
    std::vector<Mat> power = ideal;
    for (std::size_t k = 0; k <= n; ++k) {
        const Subspace s = span_of(p, n, power);
        if (s.is_zero()) return true;
        std::vector<Mat> next;
        for (const auto& b : s.basis())
            for (const auto& y : ideal) next.push_back(Mat::unflatten(p, n, n, b) * y);
        power = next;
    }
    return span_of(p, n, power).is_zero();
}

inline Subspace brute_force_radical(const charcat::ff::MatrixAlgebra& a) {
    const std::uint64_t p = a.p;
    const std::size_t n = a.deg, d = a.dim();
    std::vector<Mat> gens;
    std::vector<Mat> plus = a.basis;
    plus.push_back(Mat::identity(p, n));
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= p;
    for (std::uint64_t code = 1; code < total; ++code) {
        // projective representative: leading (lowest-index) nonzero coefficient is 1
        std::vector<std::uint64_t> c(d);
        std::uint64_t x = code;
        for (std::size_t i = 0; i < d; ++i) {
            c[i] = x % p;
            x /= p;
        }
        std::size_t lead = 0;
        while (c[lead] == 0) ++lead;
        if (c[lead] != 1) continue;
        Mat m(p, n, n);
        for (std::size_t i = 0; i < d; ++i)
            if (c[i] != 0) m = m + a.basis[i].scaled(c[i]);
        if (!m.pow(n).is_zero()) continue;
        std::vector<Mat> ideal;
        for (const auto& l : plus)
            for (const auto& r : plus) ideal.push_back(l * m * r);
        const Subspace s = span_of(p, n, ideal);
        std::vector<Mat> basis;
        for (const auto& b : s.basis()) basis.push_back(Mat::unflatten(p, n, n, b));
        if (ideal_is_nilpotent(basis, p, n)) gens.push_back(m);
    }
    return span_of(p, n, gens);
}

} // namespace oracle
