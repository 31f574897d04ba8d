#include "charcat/ff/bilinear.hpp"

#include "charcat/core/errors.hpp"

namespace charcat::ff {

BilinearMap::BilinearMap(std::uint64_t p_, std::size_t v, std::size_t w, std::vector<Mat> g)
    : p(p_), v_dim(v), w_dim(w), grams(std::move(g)) {
    require_prime_modulus(p);
    if (grams.size() != w_dim) throw InvalidInput("one Gram matrix is required per output coordinate");
    for (const auto& m : grams)
        if (m.modulus() != p || m.rows() != v_dim || m.cols() != v_dim)
            throw InvalidInput("Gram matrix shape or modulus mismatch");
}

BilinearMap BilinearMap::zero(std::uint64_t p, std::size_t v_dim, std::size_t w_dim) {
    return BilinearMap(p, v_dim, w_dim, std::vector<Mat>(w_dim, Mat(p, v_dim, v_dim)));
}

Vec BilinearMap::eval(std::span<const Residue> u, std::span<const Residue> v) const {
    if (u.size() != v_dim || v.size() != v_dim) throw InvalidInput("argument length mismatch");
    Vec out(w_dim, 0);
    for (std::size_t k = 0; k < w_dim; ++k) {
        const Vec gv = grams[k] * v;
        Residue acc = 0;
        for (std::size_t i = 0; i < v_dim; ++i) acc = add_mod(acc, mul_mod(u[i] % p, gv[i], p), p);
        out[k] = acc;
    }
    return out;
}

bool BilinearMap::is_alternating() const {
    for (const auto& g : grams)
        for (std::size_t i = 0; i < v_dim; ++i) {
            if (g(i, i) != 0) return false;
            for (std::size_t j = i + 1; j < v_dim; ++j)
                if (add_mod(g(i, j), g(j, i), p) != 0) return false;
        }
    return true;
}

BilinearMap BilinearMap::direct_sum(const BilinearMap& c) const {
    if (c.p != p) throw InvalidInput("modulus mismatch");
    const std::size_t n = v_dim + c.v_dim;
    std::vector<Mat> g;
    for (const auto& m : grams) {
        Mat big(p, n, n);
        for (std::size_t i = 0; i < v_dim; ++i)
            for (std::size_t j = 0; j < v_dim; ++j) big(i, j) = m(i, j);
        g.push_back(std::move(big));
    }
    for (const auto& m : c.grams) {
        Mat big(p, n, n);
        for (std::size_t i = 0; i < c.v_dim; ++i)
            for (std::size_t j = 0; j < c.v_dim; ++j) big(v_dim + i, v_dim + j) = m(i, j);
        g.push_back(std::move(big));
    }
    return BilinearMap(p, n, w_dim + c.w_dim, std::move(g));
}

Subspace bimap_radical(const BilinearMap& b) {
    // v is in the left radical iff G_k^T v = 0 for every k.
    Mat stacked(b.p, b.v_dim * b.w_dim, b.v_dim);
    for (std::size_t k = 0; k < b.w_dim; ++k)
        for (std::size_t i = 0; i < b.v_dim; ++i)
            for (std::size_t j = 0; j < b.v_dim; ++j) stacked(k * b.v_dim + i, j) = b.grams[k](j, i);
    return stacked.kernel();
}

bool is_bimap_morphism(const BilinearMap& b1, const BilinearMap& b2, const Mat& alpha, const Mat& beta) {
    if (alpha.rows() != b2.v_dim || alpha.cols() != b1.v_dim) return false;
    if (beta.rows() != b2.w_dim || beta.cols() != b1.w_dim) return false;
    for (std::size_t i = 0; i < b1.v_dim; ++i)
        for (std::size_t j = 0; j < b1.v_dim; ++j) {
            Vec ei(b1.v_dim, 0), ej(b1.v_dim, 0);
            ei[i] = 1;
            ej[j] = 1;
            if (b2.eval(alpha * ei, alpha * ej) != beta * b1.eval(ei, ej)) return false;
        }
    return true;
}

} // namespace charcat::ff
