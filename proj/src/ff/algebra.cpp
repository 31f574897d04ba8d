#include "charcat/ff/algebra.hpp"

#include "charcat/core/errors.hpp"

namespace charcat::ff {

Subspace MatrixAlgebra::as_subspace() const {
    std::vector<Vec> rows;
    for (const auto& b : basis) rows.push_back(b.flatten());
    return Subspace::span(p, deg * deg, rows);
}

bool MatrixAlgebra::contains(const Mat& m) const { return as_subspace().contains(m.flatten()); }

std::vector<Mat> subspace_matrices(const Subspace& s, std::size_t deg) {
    std::vector<Mat> out;
    for (const auto& v : s.basis()) out.push_back(Mat::unflatten(s.modulus(), deg, deg, v));
    return out;
}

MatrixAlgebra algebra_closure(std::uint64_t p, std::size_t deg, const std::vector<Mat>& gens, bool with_unit) {
    require_prime_modulus(p);
    for (const auto& g : gens)
        if (g.modulus() != p || g.rows() != deg || g.cols() != deg)
            throw InvalidInput("generators must be square of the given degree and modulus");
    EchelonBuilder eb(p, deg * deg);
    std::vector<Mat> elems;
    auto add = [&](const Mat& m) {
        if (eb.insert(m.flatten())) elems.push_back(m);
    };
    if (with_unit) add(Mat::identity(p, deg));
    for (const auto& g : gens) add(g);
    // elems[0, done) have had all products among themselves added.
    std::size_t done = 0;
    while (done < elems.size()) {
        const std::size_t end = elems.size();
        for (std::size_t i = 0; i < end; ++i)
            for (std::size_t j = (i < done ? done : 0); j < end; ++j) {
                add(elems[i] * elems[j]);
                add(elems[j] * elems[i]);
            }
        done = end;
    }
    MatrixAlgebra a;
    a.p = p;
    a.deg = deg;
    a.basis = subspace_matrices(eb.subspace(), deg);
    a.has_unit = eb.contains(Mat::identity(p, deg).flatten());
    return a;
}

bool is_product_closed(const MatrixAlgebra& a) {
    const Subspace s = a.as_subspace();
    for (const auto& x : a.basis)
        for (const auto& y : a.basis)
            if (!s.contains((x * y).flatten())) return false;
    return true;
}

Subspace jacobson_radical(const MatrixAlgebra& a) {
    if (a.p <= a.deg)
        throw Unsupported("radical requires characteristic larger than the matrix degree");
    const std::size_t n2 = a.deg * a.deg;
    if (a.basis.empty()) return Subspace(a.p, n2);
    std::vector<Mat> plus = a.basis;
    const Mat id = Mat::identity(a.p, a.deg);
    if (!a.contains(id)) plus.push_back(id);
    // Coefficients c with Tr((sum c_i A_i) B_j) = 0 for every B_j in A + F I.
    Mat system(a.p, plus.size(), a.basis.size());
    for (std::size_t j = 0; j < plus.size(); ++j)
        for (std::size_t i = 0; i < a.basis.size(); ++i) system(j, i) = (a.basis[i] * plus[j]).trace();
    std::vector<Vec> vecs;
    const Subspace coeffs = system.kernel();
    for (const auto& c : coeffs.basis()) {
        Mat m(a.p, a.deg, a.deg);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) m = m + a.basis[i].scaled(c[i]);
        vecs.push_back(m.flatten());
    }
    return Subspace::span(a.p, n2, vecs);
}

} // namespace charcat::ff
